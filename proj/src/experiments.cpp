#include "sqt/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <exception>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sqt/error.hpp"
#include "sqt/h2_engine.hpp"
#include "sqt/invariants.hpp"
#include "sqt/orbit_graph.hpp"
#include "sqt/prym_engine.hpp"

namespace sqt {

using Json = nlohmann::ordered_json;

const char* to_string(Stratum s) {
    switch (s) {
        case Stratum::h2: return "h2";
        case Stratum::prym4: return "prym4";
        case Stratum::prym6: return "prym6";
    }
    return "?";
}

Stratum parse_stratum(std::string_view s) {
    if (s == "h2") return Stratum::h2;
    if (s == "prym4") return Stratum::prym4;
    if (s == "prym6") return Stratum::prym6;
    fail(Errc::invalid_argument, "unknown stratum: " + std::string(s) + " (h2, prym4, prym6)");
}

// ---- config ----

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

unsigned long long parse_count(const std::string& key, const std::string& v) {
    try {
        size_t used = 0;
        const auto x = std::stoull(v, &used);
        if (used == v.size() && v.find('-') == std::string::npos) return x;
    } catch (const std::exception&) {
    }
    fail(Errc::parse, "config " + key + ": expected a non-negative integer, got '" + v + "'");
}

}  // namespace

void set_config_value(ExperimentConfig& c, const std::string& key, const std::string& v) {
    if (key == "max_vertices") {
        c.max_vertices = parse_count(key, v);
    } else if (key == "all_sources_threshold") {
        c.all_sources_threshold = parse_count(key, v);
    } else if (key == "oracle_threshold") {
        c.oracle_threshold = parse_count(key, v);
    } else if (key == "threads") {
        c.threads = static_cast<unsigned>(parse_count(key, v));
    } else if (key == "timing") {
        if (v != "0" && v != "1") fail(Errc::parse, "config timing: expected 0 or 1");
        c.timing = v == "1";
    } else if (key == "c_max") {
        try {
            size_t used = 0;
            c.c_max = std::stod(v, &used);
            if (used != v.size() || !(c.c_max > 0)) throw std::invalid_argument(v);
        } catch (const std::exception&) {
            fail(Errc::parse, "config c_max: expected a positive number, got '" + v + "'");
        }
    } else {
        fail(Errc::parse, "unknown config key: " + key);
    }
}

namespace {

const char* const kConfigKeys[] = {"max_vertices", "all_sources_threshold", "oracle_threshold",
                                   "c_max",        "threads",               "timing"};

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig c;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(Errc::parse, "config line " + std::to_string(lineno) + ": expected key=value");
        set_config_value(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    if (path.empty()) return apply_env({});
    std::ifstream f(path);
    if (!f) fail(Errc::invalid_argument, "cannot read config " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return apply_env(parse_config(ss.str()));
}

ExperimentConfig apply_env(ExperimentConfig c) {
    for (const char* key : kConfigKeys) {
        std::string name = "SQT_";
        for (const char* p = key; *p; ++p) name += static_cast<char>(std::toupper(static_cast<unsigned char>(*p)));
        if (const char* v = std::getenv(name.c_str())) set_config_value(c, key, trim(v));
    }
    return c;
}

// ---- orbits ----

std::vector<OrbitSeed> orbit_seeds(Stratum s, int n) {
    std::vector<OrbitSeed> out;
    if (n < 1) fail(Errc::invalid_argument, "n must be positive");
    if (s == Stratum::h2) {
        if (n < 3) return out;
        std::vector<Origami> cands{h2_one_cylinder(1, 1, n - 2)};
        if (n % 2 && n >= 5) cands.push_back(h2_one_cylinder(1, 2, n - 3));
        for (const auto& o : cands) out.push_back({to_string(classify_h2_orbit(o)), o});
    } else {
        const int locus = s == Stratum::prym4 ? 4 : 6;
        for (const auto& o : prym_orbit_seeds(locus, n)) {
            const long long D = locus == 4 ? origami_to_prototype4(o).D() : origami_to_prototype6(o).D();
            out.push_back({"D=" + std::to_string(D), o});
        }
    }
    std::sort(out.begin(), out.end(), [](const OrbitSeed& a, const OrbitSeed& b) { return a.label < b.label; });
    return out;
}

namespace {

std::string hlk_or_empty(const Origami& o) {
    try {
        return hlk_invariant(o).str();
    } catch (const Error&) {
        return "";
    }
}

size_t simple_edges(const std::vector<std::vector<int>>& adj) {
    size_t deg = 0;
    for (const auto& a : adj) deg += a.size();
    return deg / 2;
}

}  // namespace

OrbitSummary cmd_orbit(const Origami& seed, const ExperimentConfig& cfg) {
    const auto g = build_orbit(seed, {cfg.max_vertices});
    OrbitSummary s;
    s.n = seed.n();
    s.stratum = stratum(seed);
    s.hlk = hlk_or_empty(seed);
    s.vertices = g.size();
    s.edges = simple_edges(g.adjacency());
    s.diameter = diameter(g, {cfg.all_sources_threshold, cfg.threads});
    return s;
}

std::string to_json(const OrbitSummary& s) {
    Json j;
    j["n"] = s.n;
    j["stratum"] = s.stratum;
    j["hlk"] = s.hlk;
    j["vertices"] = s.vertices;
    j["edges"] = s.edges;
    j["diameter"] = s.diameter;
    return j.dump(1) + "\n";
}

// ---- sweeps ----

std::vector<SweepRecord> run_sweep(Stratum s, int n_min, int n_max, const ExperimentConfig& cfg, int n_step) {
    if (n_min < 1 || n_max < n_min || n_step < 1) fail(Errc::invalid_argument, "invalid n range");
    std::vector<int> ns;
    for (int n = n_min; n <= n_max; n += n_step) ns.push_back(n);

    std::vector<std::vector<SweepRecord>> per_n(ns.size());
    std::vector<std::exception_ptr> errors(ns.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next++) < ns.size();) {
            try {
                for (const auto& seed : orbit_seeds(s, ns[i])) {
                    const auto t0 = std::chrono::steady_clock::now();
                    const auto g = build_orbit(seed.seed, {cfg.max_vertices});
                    const auto adj = g.adjacency();
                    SweepRecord r;
                    r.n = ns[i];
                    r.stratum = s;
                    r.orbit = seed.label;
                    r.hlk = hlk_or_empty(seed.seed);
                    r.vertices = g.size();
                    r.edges = simple_edges(adj);
                    r.diameter = diameter_ifub(adj);
                    if (g.size() <= cfg.oracle_threshold) {
                        if (diameter_all_sources(adj, 1) != r.diameter)
                            fail(Errc::precondition, "diameter oracle mismatch at n=" + std::to_string(r.n) + " " + r.orbit);
                        r.oracle_checked = true;
                    }
                    r.bound = diameter_bound(r.vertices);
                    r.ratio = r.bound > 0 ? r.diameter / r.bound : 0;
                    if (cfg.timing)
                        r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                    per_n[i].push_back(std::move(r));
                }
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<size_t>(workers, ns.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::vector<SweepRecord> out;
    for (size_t i = 0; i < ns.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        for (auto& r : per_n[i]) out.push_back(std::move(r));
    }
    return out;
}

namespace {

std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRecord>& rs) {
    std::string out = "n,stratum,orbit,label_hlk,vertices,edges,diameter,bound,ratio,ms\n";
    for (const auto& r : rs) {
        out += std::to_string(r.n) + "," + to_string(r.stratum) + "," + r.orbit + ",\"" + r.hlk + "\"," +
               std::to_string(r.vertices) + "," + std::to_string(r.edges) + "," + std::to_string(r.diameter) + "," +
               fixed(r.bound, 6) + "," + fixed(r.ratio, 6) + "," + fixed(r.ms, 3) + "\n";
    }
    return out;
}

std::string sweep_json(const std::vector<SweepRecord>& rs) {
    Json arr = Json::array();
    for (const auto& r : rs) {
        Json j;
        j["n"] = r.n;
        j["stratum"] = to_string(r.stratum);
        j["orbit"] = r.orbit;
        j["label_hlk"] = r.hlk;
        j["vertices"] = r.vertices;
        j["edges"] = r.edges;
        j["diameter"] = r.diameter;
        j["bound"] = std::stod(fixed(r.bound, 6));
        j["ratio"] = std::stod(fixed(r.ratio, 6));
        j["ms"] = std::stod(fixed(r.ms, 3));
        j["oracle_checked"] = r.oracle_checked;
        arr.push_back(j);
    }
    return arr.dump(1) + "\n";
}

ExponentFit fit_exponent(const std::vector<SweepRecord>& rs) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rs)
        if (r.vertices > 1 && r.diameter > 0) pts.emplace_back(std::log(double(r.vertices)), std::log(double(r.diameter)));
    if (pts.size() < 3) fail(Errc::invalid_argument, "fit needs at least 3 records with |V| > 1 and diameter > 0");
    double mx = 0, my = 0;
    for (auto [x, y] : pts) mx += x, my += y;
    mx /= pts.size(), my /= pts.size();
    double sxx = 0, sxy = 0;
    for (auto [x, y] : pts) sxx += (x - mx) * (x - mx), sxy += (x - mx) * (y - my);
    if (sxx < 1e-12) fail(Errc::invalid_argument, "fit is degenerate: all records have the same |V|");
    ExponentFit f;
    f.alpha = sxy / sxx;
    const double b = my - f.alpha * mx;
    f.C = std::exp(b);
    double ss = 0;
    for (auto [x, y] : pts) ss += (y - f.alpha * x - b) * (y - f.alpha * x - b);
    f.residual = std::sqrt(ss / pts.size());
    return f;
}

std::string sweep_svg(const std::vector<SweepRecord>& rs, const ExponentFit& fit) {
    const double W = 640, H = 480, L = 70, R = 20, T = 30, B = 60;
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& r : rs) {
        if (r.vertices < 2 || r.diameter < 1) continue;
        const double x = std::log10(double(r.vertices)), y = std::log10(double(r.diameter));
        x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
    if (x0 > x1) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    x0 = std::floor(x0), x1 = std::max(std::ceil(x1), x0 + 1);
    y0 = std::floor(y0), y1 = std::max(std::ceil(y1), y0 + 1);
    auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<g stroke=\"#ccc\">\n";
    for (double x = x0; x <= x1 + 1e-9; ++x)
        s << "<line x1=\"" << fixed(px(x), 1) << "\" y1=\"" << T << "\" x2=\"" << fixed(px(x), 1) << "\" y2=\"" << H - B << "\"/>\n";
    for (double y = y0; y <= y1 + 1e-9; ++y)
        s << "<line x1=\"" << L << "\" y1=\"" << fixed(py(y), 1) << "\" x2=\"" << W - R << "\" y2=\"" << fixed(py(y), 1) << "\"/>\n";
    s << "</g>\n";
    for (double x = x0; x <= x1 + 1e-9; ++x)
        s << "<text x=\"" << fixed(px(x), 1) << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\">1e" << int(x) << "</text>\n";
    for (double y = y0; y <= y1 + 1e-9; ++y)
        s << "<text x=\"" << L - 8 << "\" y=\"" << fixed(py(y) + 4, 1) << "\" text-anchor=\"end\">1e" << int(y) << "</text>\n";
    s << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">|V|</text>\n";
    s << "<text x=\"18\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << (T + H - B) / 2
      << ")\">diameter</text>\n";

    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c"};
    for (const auto& r : rs) {
        if (r.vertices < 2 || r.diameter < 1) continue;
        s << "<circle cx=\"" << fixed(px(std::log10(double(r.vertices))), 1) << "\" cy=\""
          << fixed(py(std::log10(double(r.diameter))), 1) << "\" r=\"3\" fill=\"" << colors[int(r.stratum)] << "\"/>\n";
    }
    // fitted line d = C |V|^alpha, in log10 coordinates
    const double c10 = std::log10(fit.C);
    s << "<line x1=\"" << fixed(px(x0), 1) << "\" y1=\"" << fixed(py(c10 + fit.alpha * x0), 1) << "\" x2=\"" << fixed(px(x1), 1)
      << "\" y2=\"" << fixed(py(c10 + fit.alpha * x1), 1) << "\" stroke=\"black\" stroke-dasharray=\"6 3\"/>\n";
    s << "<text x=\"" << L + 10 << "\" y=\"" << T + 14 << "\">fit: d = " << fixed(fit.C, 3) << " |V|^" << fixed(fit.alpha, 3)
      << "  (rms " << fixed(fit.residual, 3) << ")</text>\n";
    s << "</svg>\n";
    return s.str();
}

// ---- traces ----

namespace {

bool looks_like_origami(std::string_view s) {
    const auto t = trim(s);
    return t.rfind("((", 0) == 0 || t.find(';') != std::string::npos;
}

long parse_q(std::string_view text) {
    const auto t = trim(text);
    if (t == "inf" || t == "infinity" || t == "oo") return kQInf;
    try {
        size_t used = 0;
        const long q = std::stol(t, &used);
        if (used == t.size() && q >= 1) return q;
    } catch (const std::exception&) {
    }
    fail(Errc::parse, "bad q: '" + t + "' (positive integer or inf)");
}

int ceil_log2(long long x) {
    int k = 0;
    while ((1LL << k) < x) ++k;
    return k;
}

long long isqrt_exact(long long D) {
    if (D < 0) return -1;
    long long r = static_cast<long long>(std::llround(std::sqrt(double(D))));
    while (r * r > D) --r;
    while ((r + 1) * (r + 1) <= D) ++r;
    return r * r == D ? r : -1;
}

struct H2Engine {
    using P = H2Prototype;
    static P parse(std::string_view s) { return P::parse(s); }
    static bool valid(const P& p) { return is_valid(p); }
    static std::vector<long> qs(const P& p) { return admissible_q(p); }
    static P move(const P& p, long q) { return butterfly(p, q); }
    static std::vector<P> chain(const P& p) { return reduce_to_reduced(p).chain; }
    static bool terminal(const P& p) { return p.reduced(); }
    static long long c0(const P& p) { return p.c; }
    static std::vector<P> all(long long D) { return enumerate_prototypes(D); }
    static P from(const Origami& o) { return origami_to_prototype(o); }
    static Origami to(const P& p, long long n) { return prototype_to_origami(p, n); }
    static Realized realize(const Origami& o, long q) { return realize_butterfly_word(o, q); }
};

struct Prym4Engine {
    using P = Prym4Prototype;
    static P parse(std::string_view s) { return P::parse(s); }
    static bool valid(const P& p) { return is_valid(p); }
    static std::vector<long> qs(const P& p) { return admissible_q(p); }
    static P move(const P& p, long q) { return butterfly4(p, q); }
    static std::vector<P> chain(const P& p) { return reduce4(p).chain; }
    static bool terminal(const P& p) { return p.reduced(); }
    static long long c0(const P& p) { return p.h; }
    static std::vector<P> all(long long D) { return enumerate_q4(D); }
    static P from(const Origami& o) { return origami_to_prototype4(o); }
    static Origami to(const P& p, long long n) { return prototype4_to_origami(p, n); }
    static Realized realize(const Origami& o, long q) { return realize_butterfly4(o, q); }
};

struct Prym6Engine {
    using P = Prym6Prototype;
    static P parse(std::string_view s) { return P::parse(s); }
    static bool valid(const P& p) { return is_valid(p); }
    static std::vector<long> qs(const P& p) { return admissible_q(p); }
    static P move(const P& p, long q) { return butterfly6(p, q); }
    static std::vector<P> chain(const P& p) { return reduce6(p).chain; }
    static bool terminal(const P& p) { return p.reduced() || (p.D() % 8 == 1 && p.almost_reduced()); }
    static long long c0(const P& p) { return p.h; }
    static std::vector<P> all(long long D) { return enumerate_p6a(D); }
    static P from(const Origami& o) { return origami_to_prototype6(o); }
    static Origami to(const P& p, long long n) { return prototype6_to_origami(p, n); }
    static Realized realize(const Origami& o, long q) { return realize_butterfly6(o, q); }
};

template <class E>
struct Input {
    typename E::P proto;
    std::optional<Origami> origami;
};

template <class E>
Input<E> read_input(std::string_view text) {
    if (looks_like_origami(text)) {
        Origami o = Origami::parse(trim(text));
        return {E::from(o), o};
    }
    auto p = E::parse(trim(text));
    if (!E::valid(p)) fail(Errc::invalid_argument, "not a prototype: " + p.str());
    return {p, std::nullopt};
}

Json word_json(const Sl2Word& w) { return {{"word", w.str()}, {"length", w.length()}}; }

template <class E>
std::string reduce_trace(std::string_view text) {
    const auto in = read_input<E>(text);
    const auto chain = E::chain(in.proto);
    Json j;
    j["input"] = in.proto.str();
    j["D"] = in.proto.D();
    j["steps"] = chain.size() - 1;
    j["bound"] = 3 * (ceil_log2(E::c0(in.proto)) + 1) + 1;
    Json moves = Json::array();
    std::optional<Origami> o = in.origami;
    size_t total = 0;
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        Json m = {{"from", chain[i].str()}, {"q", "1"}, {"to", chain[i + 1].str()}};
        if (o) {
            const auto r = E::realize(*o, 1);
            m.update(word_json(r.word));
            total += r.word.length();
            o = r.origami;
        }
        moves.push_back(m);
    }
    j["moves"] = moves;
    j["result"] = chain.back().str();
    if (o) {
        j["origami"] = o->str();
        j["total_word_length"] = total;
    }
    return j.dump(1) + "\n";
}

template <class E>
std::string butterfly_trace(std::string_view text, std::string_view qtext) {
    const auto in = read_input<E>(text);
    const long q = parse_q(qtext);
    const auto qs = E::qs(in.proto);
    Json adm = Json::array();
    for (long x : qs) adm.push_back(q_str(x));
    if (std::find(qs.begin(), qs.end(), q) == qs.end())
        fail(Errc::invalid_argument, "q=" + q_str(q) + " is not admissible for " + in.proto.str() + " (admissible: " + adm.dump() + ")");
    Json j;
    j["input"] = in.proto.str();
    j["D"] = in.proto.D();
    j["admissible_q"] = adm;
    j["q"] = q_str(q);
    j["image"] = E::move(in.proto, q).str();
    if (in.origami) {
        const auto r = E::realize(*in.origami, q);
        j.update(word_json(r.word));
        j["origami"] = r.origami.str();
    }
    return j.dump(1) + "\n";
}

// One step of a prototype path; reverse steps walk a butterfly arrow backwards.
template <class P>
struct Step {
    P from, to;
    long q;
    bool reverse;
};

template <class E>
std::vector<std::vector<std::pair<int, std::pair<long, bool>>>> prototype_graph(const std::vector<typename E::P>& nodes,
                                                                                 const std::map<typename E::P, int>& idx,
                                                                                 bool reduced_only) {
    std::vector<std::vector<std::pair<int, std::pair<long, bool>>>> adj(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (reduced_only && !E::terminal(nodes[i])) continue;
        for (long q : E::qs(nodes[i])) {
            const auto it = idx.find(E::move(nodes[i], q));
            if (it == idx.end()) continue;
            if (reduced_only && !E::terminal(it->first)) continue;
            adj[i].push_back({it->second, {q, false}});
            adj[it->second].push_back({int(i), {q, true}});
        }
    }
    return adj;
}

template <class E>
std::optional<std::vector<Step<typename E::P>>> bfs_path(const std::vector<typename E::P>& nodes,
                                                         const std::map<typename E::P, int>& idx, int a, int b,
                                                         bool reduced_only) {
    const auto adj = prototype_graph<E>(nodes, idx, reduced_only);
    std::vector<int> prev(nodes.size(), -2);
    std::vector<std::pair<long, bool>> how(nodes.size());
    std::deque<int> queue{a};
    prev[a] = -1;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        if (x == b) break;
        for (auto [y, m] : adj[x])
            if (prev[y] == -2) {
                prev[y] = x;
                how[y] = m;
                queue.push_back(y);
            }
    }
    if (prev[b] == -2) return std::nullopt;
    std::vector<Step<typename E::P>> steps;
    for (int y = b; prev[y] >= 0; y = prev[y]) steps.push_back({nodes[prev[y]], nodes[y], how[y].first, how[y].second});
    std::reverse(steps.begin(), steps.end());
    return steps;
}

template <class E>
std::vector<std::vector<int>> undirected_components(const std::vector<typename E::P>& nodes,
                                                    const std::map<typename E::P, int>& idx) {
    const auto adj = prototype_graph<E>(nodes, idx, false);
    std::vector<int> comp(nodes.size(), -1);
    std::vector<std::vector<int>> out;
    for (size_t s = 0; s < nodes.size(); ++s) {
        if (comp[s] >= 0) continue;
        out.emplace_back();
        std::deque<int> q{int(s)};
        comp[s] = int(out.size()) - 1;
        while (!q.empty()) {
            const int x = q.front();
            q.pop_front();
            out.back().push_back(x);
            for (auto [y, m] : adj[x])
                if (comp[y] < 0) comp[y] = comp[s], q.push_back(y);
        }
    }
    return out;
}

template <class E>
std::string path_trace(std::string_view start_text, std::string_view target_text, long long n) {
    using P = typename E::P;
    const auto s = read_input<E>(start_text);
    const auto t = read_input<E>(target_text);
    const long long D = s.proto.D();
    if (t.proto.D() != D)
        fail(Errc::invalid_argument, "start and target have different discriminants (" + std::to_string(D) + ", " +
                                         std::to_string(t.proto.D()) + ")");
    const auto sc = E::chain(s.proto), tc = E::chain(t.proto);

    const auto nodes = E::all(D);
    std::map<P, int> idx;
    for (size_t i = 0; i < nodes.size(); ++i) idx[nodes[i]] = int(i);
    for (const P* p : {&s.proto, &t.proto})
        if (!idx.count(*p)) fail(Errc::invalid_argument, p->str() + " is outside the butterfly graph of D=" + std::to_string(D));
    const int a = idx.at(sc.back()), b = idx.at(tc.back());

    std::string route = "reduced";
    auto middle = bfs_path<E>(nodes, idx, a, b, true);
    if (!middle) {
        route = "bridge";
        middle = bfs_path<E>(nodes, idx, a, b, false);
    }
    if (!middle) {
        const auto comps = undirected_components<E>(nodes, idx);
        auto which = [&](int v) {
            for (size_t c = 0; c < comps.size(); ++c)
                if (std::count(comps[c].begin(), comps[c].end(), v)) return c;
            return comps.size();
        };
        std::ostringstream msg;
        msg << "component mismatch: D=" << D << " has " << comps.size() << " components; " << s.proto.str() << " lies in component "
            << which(idx.at(s.proto)) << " (size " << comps[which(idx.at(s.proto))].size() << "), " << t.proto.str()
            << " in component " << which(idx.at(t.proto)) << " (size " << comps[which(idx.at(t.proto))].size() << ")";
        fail(Errc::not_found, msg.str());
    }

    std::vector<Step<P>> steps;
    for (size_t i = 0; i + 1 < sc.size(); ++i) steps.push_back({sc[i], sc[i + 1], 1, false});
    for (const auto& st : *middle) steps.push_back(st);
    for (size_t i = tc.size() - 1; i > 0; --i) steps.push_back({tc[i], tc[i - 1], 1, true});

    // realize on origamis when the discriminant is n^2 or n^2/4
    std::optional<Origami> start_o = s.origami;
    if (!start_o) {
        std::vector<long long> ns;
        if (n > 0) {
            ns.push_back(n);
        } else if (const long long r = isqrt_exact(D); r > 0) {
            ns = {r, 2 * r};
        }
        for (long long m : ns) {
            try {
                start_o = E::to(s.proto, m);
                break;
            } catch (const Error&) {
            }
        }
    }

    Json j;
    j["start"] = s.proto.str();
    j["target"] = t.proto.str();
    j["D"] = D;
    j["route"] = route;
    Json js = Json::array();
    Sl2Word total;
    std::optional<Origami> cur = start_o;
    std::string note;
    for (const auto& st : steps) {
        Json m = {{"from", st.from.str()}, {"to", st.to.str()}, {"q", q_str(st.q)}, {"reverse", st.reverse}};
        if (cur && note.empty()) {
            try {
                if (!st.reverse) {
                    const auto r = E::realize(*cur, st.q);
                    m.update(word_json(r.word));
                    total.append(r.word);
                    cur = r.origami;
                } else {
                    // realize the arrow to -> from on a surface of `to`, then undo it from the cusp of cur
                    const Origami ob = E::to(st.to, cur->n());
                    const auto r = E::realize(ob, st.q);
                    const long width = cusp_width(r.origami);
                    long k = -1;
                    Origami x = *cur;
                    for (long i = 0; i < width && k < 0; ++i, x = act_T(x))
                        if (same_surface(x, r.origami)) k = i;
                    if (k < 0) fail(Errc::not_found, "reverse step leaves the cusp of " + st.from.str());
                    Sl2Word w;
                    w.push_power(Gen::T, k);
                    w.append(r.word.inverse());
                    m.update(word_json(w));
                    total.append(w);
                    cur = ob;
                }
            } catch (const Error& e) {
                note = std::string("realization stopped: ") + e.what();
            }
        }
        js.push_back(m);
    }
    j["steps"] = js;
    j["moves"] = steps.size();
    if (start_o) {
        j["n"] = start_o->n();
        j["origami_start"] = start_o->str();
        if (note.empty()) {
            const Origami end = apply_word(*start_o, total);
            if (!same_surface(end, *cur) || E::from(end) != t.proto)
                fail(Errc::precondition, "composed word does not replay to the target");
            j["origami_end"] = cur->str();
            j["total_word_length"] = total.length();
            j["word"] = total.str();
        } else {
            j["note"] = note;
        }
    }
    return j.dump(1) + "\n";
}

template <class F>
decltype(auto) dispatch(Stratum s, F f) {
    switch (s) {
        case Stratum::h2: return f(H2Engine{});
        case Stratum::prym4: return f(Prym4Engine{});
        case Stratum::prym6: return f(Prym6Engine{});
    }
    fail(Errc::invalid_argument, "unknown stratum");
}

}  // namespace

std::string cmd_reduce(Stratum s, std::string_view input) {
    return dispatch(s, [&](auto e) { return reduce_trace<decltype(e)>(input); });
}

std::string cmd_butterfly(Stratum s, std::string_view input, std::string_view q) {
    return dispatch(s, [&](auto e) { return butterfly_trace<decltype(e)>(input, q); });
}

std::string cmd_path(Stratum s, std::string_view start, std::string_view target, long long n) {
    return dispatch(s, [&](auto e) { return path_trace<decltype(e)>(start, target, n); });
}

std::string cmd_census(Stratum s, int n) {
    Json j;
    j["stratum"] = to_string(s);
    j["n"] = n;
    if (s == Stratum::h2) {
        j["surfaces"] = n >= 3 ? enumerate_h2_census(n).size() : 0;
        j["cusps"] = n >= 3 ? h2_census_cusp_representatives(n).size() : 0;
    } else {
        j["type_a_surfaces"] = prym_type_a_census(s == Stratum::prym4 ? 4 : 6, n).size();
    }
    Json orbits = Json::array();
    for (const auto& seed : orbit_seeds(s, n)) {
        const auto g = build_orbit(seed.seed);
        orbits.push_back({{"label", seed.label}, {"hlk", hlk_or_empty(seed.seed)}, {"vertices", g.size()}, {"seed", seed.seed.str()}});
    }
    j["orbits"] = orbits;
    return j.dump(1) + "\n";
}

}  // namespace sqt
