#include "sqt/orbit_graph.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace sqt {

int OrbitGraph::find(const Origami& o) const {
    auto it = index.find(canonical_key(o));
    return it == index.end() ? -1 : it->second;
}

std::vector<std::vector<int>> OrbitGraph::adjacency() const {
    std::vector<std::vector<int>> adj(size());
    for (size_t v = 0; v < size(); ++v)
        for (int w : step[v])
            if (w != static_cast<int>(v)) {
                adj[v].push_back(w);
                adj[w].push_back(static_cast<int>(v));
            }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return adj;
}

OrbitGraph build_orbit(const Origami& seed, const BuildOptions& opt) {
    OrbitGraph g;
    g.seed = seed;
    auto insert = [&](const Origami& o) {
        CanonKey k = canonical_key(o);
        auto [it, fresh] = g.index.emplace(std::move(k), static_cast<int>(g.vertices.size()));
        if (fresh) {
            if (g.vertices.size() >= opt.max_vertices)
                fail(Errc::resource, "orbit exceeds " + std::to_string(opt.max_vertices) + " vertices");
            g.vertices.push_back(canonical_form(o));
            g.step.push_back({-1, -1});
        }
        return it->second;
    };
    insert(seed);
    // T and S have finite order on a finite orbit, so forward closure suffices
    for (size_t k = 0; k < g.vertices.size(); ++k) {
        Origami x = g.vertices[k];
        int t = insert(act_T(x));
        int s = insert(act_S(x));
        g.step[k] = {t, s};
    }
    return g;
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> d(adj.size(), -1);
    std::vector<int> q{src};
    d[src] = 0;
    for (size_t i = 0; i < q.size(); ++i)
        for (int y : adj[q[i]])
            if (d[y] < 0) {
                d[y] = d[q[i]] + 1;
                q.push_back(y);
            }
    return d;
}

namespace {

int eccentricity(const std::vector<std::vector<int>>& adj, int src, std::vector<int>& dist, std::vector<int>& q) {
    std::fill(dist.begin(), dist.end(), -1);
    q.clear();
    q.push_back(src);
    dist[src] = 0;
    for (size_t i = 0; i < q.size(); ++i)
        for (int y : adj[q[i]])
            if (dist[y] < 0) {
                dist[y] = dist[q[i]] + 1;
                q.push_back(y);
            }
    if (q.size() != adj.size()) fail(Errc::precondition, "graph is not connected");
    return dist[q.back()];
}

}  // namespace

int diameter_all_sources(const std::vector<std::vector<int>>& adj, unsigned threads) {
    if (adj.empty()) fail(Errc::invalid_argument, "empty graph");
    const int n = static_cast<int>(adj.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
    std::atomic<int> next{0}, best{0};
    std::atomic<bool> disconnected{false};
    auto work = [&] {
        std::vector<int> dist(n), q;
        q.reserve(n);
        int local = 0;
        for (int s = next++; s < n; s = next++) {
            try {
                local = std::max(local, eccentricity(adj, s, dist, q));
            } catch (const Error&) {
                disconnected = true;
                return;
            }
        }
        int cur = best.load();
        while (local > cur && !best.compare_exchange_weak(cur, local)) {
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (disconnected) fail(Errc::precondition, "graph is not connected");
    return best;
}

int diameter_ifub(const std::vector<std::vector<int>>& adj) {
    if (adj.empty()) fail(Errc::invalid_argument, "empty graph");
    const int n = static_cast<int>(adj.size());
    std::vector<int> dist(n), q;
    // 4-sweep for a central start vertex
    int best_deg = 0;
    for (int v = 1; v < n; ++v)
        if (adj[v].size() > adj[best_deg].size()) best_deg = v;
    int lb = eccentricity(adj, best_deg, dist, q);
    int a1 = q.back();
    lb = std::max(lb, eccentricity(adj, a1, dist, q));
    int b1 = q.back();
    int e = dist[b1];
    int mid = b1;
    for (int k = 0; k < e / 2; ++k)
        for (int y : adj[mid])
            if (dist[y] == dist[mid] - 1) {
                mid = y;
                break;
            }
    lb = std::max(lb, eccentricity(adj, mid, dist, q));
    int a2 = q.back();
    lb = std::max(lb, eccentricity(adj, a2, dist, q));
    int b2 = q.back();
    e = dist[b2];
    int u = b2;
    for (int k = 0; k < e / 2; ++k)
        for (int y : adj[u])
            if (dist[y] == dist[u] - 1) {
                u = y;
                break;
            }
    int ecc_u = eccentricity(adj, u, dist, q);
    lb = std::max(lb, ecc_u);
    std::vector<std::vector<int>> fringe(ecc_u + 1);
    for (int v = 0; v < n; ++v) fringe[dist[v]].push_back(v);
    std::vector<int> d2(n), q2;
    int i = ecc_u;
    int ub = 2 * ecc_u;
    while (ub > lb && i > 0) {
        int bi = 0;
        for (int v : fringe[i]) bi = std::max(bi, eccentricity(adj, v, d2, q2));
        lb = std::max(lb, bi);
        if (lb > 2 * (i - 1)) return lb;
        ub = 2 * (i - 1);
        --i;
    }
    return lb;
}

int diameter(const OrbitGraph& g, const DiameterOptions& opt) {
    if (g.size() == 0) fail(Errc::invalid_argument, "empty graph");
    auto adj = g.adjacency();
    if (g.size() <= opt.all_sources_threshold) return diameter_all_sources(adj, opt.threads);
    return diameter_ifub(adj);
}

int distance(const OrbitGraph& g, int a, int b) {
    const int n = static_cast<int>(g.size());
    if (a < 0 || b < 0 || a >= n || b >= n) fail(Errc::invalid_argument, "vertex id out of range");
    return bfs_distances(g.adjacency(), a)[b];
}

namespace {

// surfaces built directly from the cylinder parameterizations, all twists
std::vector<Origami> h2_parameterized(int n, bool normalized_twists) {
    std::vector<Origami> out;
    auto keep = [&](const Origami& o) {
        if (is_primitive(o.h(), o.v()) && stratum(o) == std::vector<int>{2}) out.push_back(o);
    };
    for (int a = 1; a <= n - 2; ++a)
        for (int b = 1; a + b <= n - 1; ++b) keep(h2_one_cylinder(a, b, n - a - b));
    for (int w1 = 1; w1 < n; ++w1)
        for (int h1 = 1; w1 * h1 < n; ++h1)
            for (int w2 = w1 + 1; w2 <= n - w1 * h1; ++w2) {
                int rest = n - w1 * h1;
                if (rest % w2) continue;
                int h2 = rest / w2;
                if (std::gcd(h1, h2) != 1) continue;
                int r1 = normalized_twists ? std::gcd(w1, h1) : w1;
                int r2 = normalized_twists ? std::gcd(w2, h2) : w2;
                for (int t1 = 0; t1 < r1; ++t1)
                    for (int t2 = 0; t2 < r2; ++t2) keep(h2_two_cylinder({w1, h1, t1, w2, h2, t2}));
            }
    return out;
}

}  // namespace

std::vector<Origami> enumerate_h2_census(int n) {
    if (n < 3) fail(Errc::invalid_argument, "census needs n >= 3");
    std::set<CanonKey> seen;
    for (const Origami& o : h2_parameterized(n, false)) {
        Origami x = o;
        while (seen.insert(canonical_key(x)).second) x = act_T(x);
    }
    std::vector<Origami> out;
    for (const auto& k : seen) {
        std::vector<int> hh(k.begin(), k.begin() + n), vv(k.begin() + n, k.end());
        out.emplace_back(Perm::from_images(std::move(hh)), Perm::from_images(std::move(vv)));
    }
    return out;
}

std::vector<Origami> h2_census_cusp_representatives(int n) {
    if (n < 3) fail(Errc::invalid_argument, "census needs n >= 3");
    std::set<CanonKey> cusps;
    std::vector<Origami> out;
    for (const Origami& o : h2_parameterized(n, false)) {
        Origami r = cusp_representative(o).origami;
        if (cusps.insert(canonical_key(r)).second) out.push_back(r);
    }
    return out;
}

ExportFormat parse_export_format(std::string_view s) {
    if (s == "dot") return ExportFormat::dot;
    if (s == "json") return ExportFormat::json;
    if (s == "edge-csv" || s == "csv") return ExportFormat::edge_csv;
    fail(Errc::invalid_argument, "unknown export format: " + std::string(s));
}

namespace {

nlohmann::ordered_json record(const Origami& o) {
    return {{"n", o.n()}, {"h", o.h().str()}, {"v", o.v().str()}};
}

Origami from_record(const nlohmann::json& r) {
    int n = r.at("n").get<int>();
    return Origami(Perm::parse(r.at("h").get<std::string>(), n), Perm::parse(r.at("v").get<std::string>(), n));
}

}  // namespace

std::string export_graph(const OrbitGraph& g, ExportFormat f, const std::string& hlk) {
    std::ostringstream out;
    switch (f) {
        case ExportFormat::dot:
            out << "digraph orbit {\n";
            for (size_t v = 0; v < g.size(); ++v)
                out << "  " << v << " [label=\"" << g.vertices[v].compact() << "\"];\n";
            for (size_t v = 0; v < g.size(); ++v) {
                out << "  " << v << " -> " << g.step[v][0] << " [label=\"T\"];\n";
                out << "  " << v << " -> " << g.step[v][1] << " [label=\"S\"];\n";
            }
            out << "}\n";
            break;
        case ExportFormat::edge_csv:
            out << "src,dst,label\n";
            for (size_t v = 0; v < g.size(); ++v) {
                out << v << "," << g.step[v][0] << ",T\n";
                out << v << "," << g.step[v][1] << ",S\n";
            }
            break;
        case ExportFormat::json: {
            nlohmann::ordered_json j;
            const Origami& any = g.size() ? g.vertices[0] : g.seed;
            j["n"] = any.n();
            j["stratum"] = stratum(any);
            j["vertices"] = nlohmann::ordered_json::array();
            for (const auto& o : g.vertices) j["vertices"].push_back(record(o));
            j["edges"] = nlohmann::ordered_json::array();
            for (size_t v = 0; v < g.size(); ++v) {
                j["edges"].push_back({v, g.step[v][0], "T"});
                j["edges"].push_back({v, g.step[v][1], "S"});
            }
            j["meta"] = {{"seed", record(g.seed)}, {"hlk", hlk}};
            out << j.dump(1) << "\n";
            break;
        }
    }
    return out.str();
}

OrbitGraph import_graph_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail(Errc::parse, std::string("bad graph json: ") + e.what());
    }
    OrbitGraph g;
    try {
        g.seed = from_record(j.at("meta").at("seed"));
        for (const auto& r : j.at("vertices")) {
            Origami o = from_record(r);
            g.index.emplace(canonical_key(o), static_cast<int>(g.vertices.size()));
            g.vertices.push_back(o);
            g.step.push_back({-1, -1});
        }
        for (const auto& e : j.at("edges")) {
            int s = e.at(0).get<int>(), d = e.at(1).get<int>();
            std::string lab = e.at(2).get<std::string>();
            if (s < 0 || d < 0 || s >= static_cast<int>(g.size()) || d >= static_cast<int>(g.size()))
                fail(Errc::parse, "edge endpoint out of range");
            g.step.at(s)[lab == "T" ? 0 : 1] = d;
        }
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::parse, std::string("bad graph json: ") + e.what());
    }
    return g;
}

}  // namespace sqt
