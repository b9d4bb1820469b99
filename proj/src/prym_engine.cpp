#include "sqt/prym_engine.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "sqt/error.hpp"
#include "sqt/invariants.hpp"
#include "sqt/orbit_graph.hpp"

namespace sqt {

namespace {

long long isqrt_floor(long long D) {
    if (D <= 0) return 0;
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(D)));
    while (r * r > D) --r;
    while ((r + 1) * (r + 1) <= D) ++r;
    return r;
}

std::optional<long long> exact_sqrt(long long D) {
    long long r = isqrt_floor(D);
    if (r * r != D) return std::nullopt;
    return r;
}

long long gcd4(long long a, long long b, long long c, long long d) {
    return std::gcd(std::gcd(a, b), std::gcd(c, d));
}

int mod_int(int a, int m) { return ((a % m) + m) % m; }

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

// "(w,h,t,e)" or "(w,h,t,e,+)"; a trailing sign is returned through eps
std::vector<long long> parse_tuple(std::string_view text, size_t want, int* eps) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') fail(Errc::parse, "expected a parenthesized tuple: " + std::string(text));
    s = s.substr(1, s.size() - 2);
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    if (eps) {
        if (parts.size() != want + 1 || (parts.back() != "+" && parts.back() != "-"))
            fail(Errc::parse, "expected " + std::to_string(want) + " integers and a sign: " + std::string(text));
        *eps = parts.back() == "+" ? +1 : -1;
        parts.pop_back();
    }
    if (parts.size() != want) fail(Errc::parse, "expected " + std::to_string(want) + " integers: " + std::string(text));
    std::vector<long long> out;
    for (const auto& p : parts) {
        size_t pos = 0;
        long long x = 0;
        try {
            x = std::stoll(p, &pos);
        } catch (const std::exception&) {
            fail(Errc::parse, "bad integer '" + p + "'");
        }
        if (pos != p.size()) fail(Errc::parse, "bad integer '" + p + "'");
        out.push_back(x);
    }
    return out;
}

std::string tuple_str(std::initializer_list<long long> xs) {
    std::string s = "(";
    bool first = true;
    for (long long x : xs) {
        if (!first) s += ',';
        s += std::to_string(x);
        first = false;
    }
    return s;
}

}  // namespace

// ---- shapes ----

const char* to_string(PrymShape s) {
    switch (s) {
        case PrymShape::APlus: return "A+";
        case PrymShape::AMinus: return "A-";
        case PrymShape::B4: return "B";
        case PrymShape::A6: return "A";
        case PrymShape::B6: return "B";
    }
    return "?";
}

bool shape_widths_ok(const PrymShapeParams& p) {
    if (p.w1 <= 0 || p.h1 <= 0 || p.w2 <= 0 || p.h2 <= 0) return false;
    switch (p.shape) {
        case PrymShape::APlus: return p.w1 < p.w2;
        case PrymShape::AMinus:
        case PrymShape::A6: return p.w2 > 2 * p.w1;
        case PrymShape::B4:
        case PrymShape::B6: return p.w1 < p.w2 && p.w2 < 2 * p.w1;
    }
    return false;
}

Origami prym_shape_origami(const PrymShapeParams& p) {
    if (!shape_widths_ok(p)) fail(Errc::invalid_argument, std::string("cylinder widths do not fit shape ") + to_string(p.shape));
    const int w1 = p.w1, h1 = p.h1, w2 = p.w2, h2 = p.h2;
    const int t1 = mod_int(p.t1, w1), t2 = mod_int(p.t2, w2);
    switch (p.shape) {
        case PrymShape::APlus:
            // bottom of the pair, fixed cylinder, top of the pair
            return from_cylinders({{w2, h2, {{t2, w1, 1, 0}, {t2 + w1, w2 - w1, 0, w1}}},
                                   {w1, h1, {{t1, w1, 2, w2 - w1}}},
                                   {w2, h2, {{t2, w2 - w1, 2, 0}, {t2 + w2 - w1, w1, 0, 0}}}});
        case PrymShape::AMinus:
            return from_cylinders({{w1, h1, {{t1, w1, 1, w1}}},
                                   {w2, h2, {{t2, w1, 2, 0}, {t2 + w1, w1, 0, 0}, {t2 + 2 * w1, w2 - 2 * w1, 1, 2 * w1}}},
                                   {w1, h1, {{t1, w1, 1, 0}}}});
        case PrymShape::B4:
            return from_cylinders({{w1, h1, {{t1, w1, 1, w2 - w1}}},
                                   {w2, h2, {{t2, w1, 2, 0}, {t2 + w1, w2 - w1, 0, 2 * w1 - w2}}},
                                   {w1, h1, {{t1, w2 - w1, 1, 0}, {t1 + w2 - w1, 2 * w1 - w2, 0, 0}}}});
        case PrymShape::A6:
            return from_cylinders(
                {{w2, h2, {{t2, w1, 1, 0}, {t2 + w1, w1, 3, 0}, {t2 + 2 * w1, w2 - 2 * w1, 0, 2 * w1}}},
                 {w1, h1, {{t1, w1, 2, w2 - 2 * w1}}},
                 {w2, h2, {{t2, w2 - 2 * w1, 2, 0}, {t2 + w2 - 2 * w1, 2 * w1, 0, 0}}},
                 {w1, h1, {{t1, w1, 2, w2 - w1}}}});
        case PrymShape::B6: {
            const int l = 2 * w1 - w2, m = w2 - w1;
            return from_cylinders({{w2, h2, {{t2, w1, 1, 0}, {t2 + w1, m, 3, 0}}},
                                   {w1, h1, {{t1, l, 0, 0}, {t1 + l, m, 2, 0}}},
                                   {w2, h2, {{t2, 2 * m, 0, l}, {t2 + 2 * m, l, 3, m}}},
                                   {w1, h1, {{t1, w1, 2, m}}}});
        }
    }
    fail(Errc::invalid_argument, "unknown shape");
}

int prym_locus(const Origami& o) {
    const auto st = stratum(o);
    if (st != std::vector<int>{4} && st != std::vector<int>{6}) return 0;
    auto inv = find_involution(o);
    if (!inv) return 0;
    const int fp = fixed_points(o, inv->u).total();
    if (st[0] == 4 && fp == 4) return 4;
    if (st[0] == 6 && fp == 2) return 6;
    return 0;
}

namespace {

struct RoleGuess {
    PrymShape shape;
    int w1, h1, w2, h2;
    std::vector<int> t1s, t2s;  // twist candidates, most likely first
};

std::vector<int> twist_order(const std::vector<int>& likely, int width) {
    std::vector<int> out;
    std::vector<char> used(width, 0);
    for (int t : likely) {
        t = mod_int(t, width);
        if (!used[t]) {
            used[t] = 1;
            out.push_back(t);
        }
    }
    for (int t = 0; t < width; ++t)
        if (!used[t]) out.push_back(t);
    return out;
}

std::optional<RoleGuess> guess_roles(const Origami& o) {
    const auto st = stratum(o);
    const auto cd = horizontal_cylinders(o);
    std::map<std::pair<int, int>, std::vector<int>> by_dims;
    for (size_t i = 0; i < cd.size(); ++i) {
        const auto& c = cd.cylinders[i];
        by_dims[{c.width, c.height}].push_back(c.twist);
    }
    if (st == std::vector<int>{4} && cd.size() == 3 && by_dims.size() == 2) {
        auto it = by_dims.begin();
        auto pair = it->second.size() == 2 ? it : std::next(it);
        auto single = pair == it ? std::next(it) : it;
        if (pair->second.size() != 2) return std::nullopt;
        const int wp = pair->first.first, hp = pair->first.second;
        const int wm = single->first.first, hm = single->first.second;
        if (wm < wp)
            return RoleGuess{PrymShape::APlus, wm, hm, wp, hp, twist_order(single->second, wm), twist_order(pair->second, wp)};
        const PrymShape s = wm > 2 * wp ? PrymShape::AMinus : PrymShape::B4;
        return RoleGuess{s, wp, hp, wm, hm, twist_order(pair->second, wp), twist_order(single->second, wm)};
    }
    if (st == std::vector<int>{6} && cd.size() == 4 && by_dims.size() == 2) {
        auto a = by_dims.begin(), b = std::next(a);
        if (a->second.size() != 2 || b->second.size() != 2) return std::nullopt;
        if (a->first.first > b->first.first) std::swap(a, b);
        const int w1 = a->first.first, h1 = a->first.second, w2 = b->first.first, h2 = b->first.second;
        const PrymShape s = w2 > 2 * w1 ? PrymShape::A6 : PrymShape::B6;
        return RoleGuess{s, w1, h1, w2, h2, twist_order(a->second, w1), twist_order(b->second, w2)};
    }
    return std::nullopt;
}

std::vector<PrymShapeParams> match_params(const Origami& o, bool all) {
    std::vector<PrymShapeParams> out;
    auto g = guess_roles(o);
    if (!g) return out;
    PrymShapeParams p{g->shape, g->w1, g->h1, 0, g->w2, g->h2, 0};
    if (!shape_widths_ok(p)) return out;
    const CanonKey key = canonical_key(o);
    for (int t1 : g->t1s) {
        for (int t2 : g->t2s) {
            p.t1 = t1;
            p.t2 = t2;
            if (canonical_key(prym_shape_origami(p)) == key) {
                out.push_back(p);
                if (!all) return out;
            }
        }
    }
    return out;
}

}  // namespace

std::optional<PrymShapeParams> prym_shape_params(const Origami& o) {
    auto m = match_params(o, false);
    if (m.empty()) return std::nullopt;
    return m.front();
}

std::vector<PrymShapeParams> all_prym_shape_params(const Origami& o) { return match_params(o, true); }

CuspRep prym_cusp_representative(const Origami& o) {
    const long w = cusp_width(o);
    Origami m = o;
    for (long k = 0; k < w; ++k, m = act_T(m))
        for (const auto& p : all_prym_shape_params(m))
            if (p.t1 < std::gcd(p.w1, p.h1) && p.t2 < std::gcd(p.w2, p.h2)) return {m, k};
    return cusp_representative(o);
}

// ---- prototypes ----

std::string Prym4Prototype::str() const { return tuple_str({w, h, t, e}) + (eps > 0 ? ",+)" : ",-)"); }

Prym4Prototype Prym4Prototype::parse(std::string_view text) {
    int eps = 0;
    auto v = parse_tuple(text, 4, &eps);
    return {v[0], v[1], v[2], v[3], eps};
}

Prym6Kind Prym6Prototype::kind() const {
    return (w - e > 0 && D() < (w - e) * (w - e)) ? Prym6Kind::A : Prym6Kind::B;
}

std::string Prym6Prototype::str() const { return tuple_str({w, h, t, e}) + ")"; }

Prym6Prototype Prym6Prototype::parse(std::string_view text) {
    auto v = parse_tuple(text, 4, nullptr);
    return {v[0], v[1], v[2], v[3]};
}

bool is_valid(const Prym4Prototype& p) {
    if (p.w <= 0 || p.h <= 0 || p.e + 2 * p.h >= p.w) return false;
    if (p.t < 0 || p.t >= std::gcd(p.w, p.h)) return false;
    if (p.eps != 1 && p.eps != -1) return false;
    return gcd4(p.w, p.h, p.t, p.e) == 1;
}

bool is_valid(const Prym6Prototype& p) {
    if (p.w <= 0 || p.h <= 0 || p.t < 0 || p.t >= std::gcd(p.w, p.h)) return false;
    if (gcd4(p.w, p.h, p.t, p.e) != 1) return false;
    const long long D = p.D();
    // lambda < w and lambda != w/2
    if (2 * p.w - p.e <= 0 || D >= (2 * p.w - p.e) * (2 * p.w - p.e)) return false;
    return !(p.w - p.e > 0 && D == (p.w - p.e) * (p.w - p.e));
}

void check_discriminant4(long long D) {
    const long long r = ((D % 8) + 8) % 8;
    if (D < 17 || (r != 0 && r != 1 && r != 4))
        fail(Errc::invalid_argument, "discriminant must be >= 17 and 0, 1 or 4 mod 8: " + std::to_string(D));
}

void check_discriminant6(long long D) {
    const long long r = ((D % 4) + 4) % 4;
    if (D < 5 || (r != 0 && r != 1)) fail(Errc::invalid_argument, "discriminant must be >= 5 and 0 or 1 mod 4: " + std::to_string(D));
}

std::vector<Prym4Prototype> enumerate_q4(long long D) {
    check_discriminant4(D);
    std::vector<Prym4Prototype> out;
    const long long r = isqrt_floor(D);
    for (long long e = -r; e <= r; ++e) {
        const long long rem = D - e * e;
        if (rem <= 0 || rem % 8) continue;
        const long long wh = rem / 8;
        for (long long h = 1; h <= wh; ++h) {
            if (wh % h) continue;
            const long long w = wh / h;
            if (e + 2 * h >= w) continue;
            for (long long t = 0; t < std::gcd(w, h); ++t) {
                if (gcd4(w, h, t, e) != 1) continue;
                out.push_back({w, h, t, e, +1});
                out.push_back({w, h, t, e, -1});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> reduced_s4(long long D) {
    check_discriminant4(D);
    std::vector<long long> out;
    const long long r = isqrt_floor(D);
    for (long long e = -r; e <= r; ++e)
        if (e * e < D && (D - e * e) % 8 == 0 && (e + 4) * (e + 4) < D) out.push_back(e);
    return out;
}

namespace {

template <class P>
std::vector<long> admissible_impl(const P& p) {
    std::vector<long> out;
    const long long D = p.D();
    for (long q = 1;; ++q) {
        const long long x = p.e + 4 * q * p.h;
        if (x * x < D)
            out.push_back(q);
        else if (x > 0)
            break;
    }
    out.push_back(kQInf);
    return out;
}

template <class P>
bool admissible_one(const P& p, long q) {
    if (q == kQInf) return true;
    if (q < 0) return false;
    const long long x = p.e + 4 * q * p.h;
    return x * x < p.D();
}

struct ButterflyCore {
    long long w, h, t, e;
};

// mult = 8 in H(4) and 4 in H(6); the key minors differ only in the upper-right entry
ButterflyCore butterfly_core(long long w, long long h, long long t, long long e, long long D, long q, long long mult,
                             bool h6) {
    long long e2, h2, n00, n01, n10, n11;
    if (q == kQInf) {
        e2 = -e - 4 * h;
        h2 = std::gcd(h, t);
        n00 = 0;
        n01 = h6 ? w - 2 * e - 4 * h : -e + w - 2 * h;
        n10 = -h;
        n11 = t;
    } else {
        e2 = -e - 4 * q * h;
        h2 = std::gcd(q * h, w + q * t);
        n00 = h;
        n01 = h6 ? -t - 2 * e - 4 * q * h : -e - t - 2 * q * h;
        n10 = -q * h;
        n11 = w + q * t;
    }
    const long long rem = D - e2 * e2;
    if (h2 <= 0 || rem <= 0 || rem % (mult * h2)) fail(Errc::precondition, "butterfly leaves the prototype set");
    const long long w2 = rem / (mult * h2);
    const ReducedBasis rb = reduce_basis(n00, n01, n10, n11);
    if (rb.g != h2 || std::llabs(rb.second_x) != w2) fail(Errc::precondition, "key minor does not reduce to the new prototype");
    return {w2, h2, mod_floor(rb.first_x, std::gcd(w2, h2)), e2};
}

}  // namespace

std::vector<long> admissible_q(const Prym4Prototype& p) { return admissible_impl(p); }
bool is_admissible(const Prym4Prototype& p, long q) { return admissible_one(p, q); }

Prym4Prototype butterfly4(const Prym4Prototype& p, long q) {
    if (!is_valid(p)) fail(Errc::invalid_argument, "not a prototype: " + p.str());
    if (!is_admissible(p, q)) fail(Errc::precondition, "q=" + q_str(q) + " not admissible for " + p.str());
    auto c = butterfly_core(p.w, p.h, p.t, p.e, p.D(), q, 8, false);
    Prym4Prototype r{c.w, c.h, c.t, c.e, -p.eps};
    if (!is_valid(r)) fail(Errc::precondition, "butterfly image is invalid: " + r.str());
    return r;
}

std::vector<Prym6Prototype> enumerate_p6(long long D) {
    check_discriminant6(D);
    std::vector<Prym6Prototype> out;
    const long long r = isqrt_floor(D);
    for (long long e = -r; e <= r; ++e) {
        const long long rem = D - e * e;
        if (rem <= 0 || rem % 4) continue;
        const long long wh = rem / 4;
        for (long long h = 1; h <= wh; ++h) {
            if (wh % h) continue;
            const long long w = wh / h;
            for (long long t = 0; t < std::gcd(w, h); ++t) {
                Prym6Prototype p{w, h, t, e};
                if (is_valid(p)) out.push_back(p);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Prym6Prototype> enumerate_p6a(long long D) {
    auto all = enumerate_p6(D);
    std::vector<Prym6Prototype> out;
    for (const auto& p : all)
        if (p.kind() == Prym6Kind::A) out.push_back(p);
    return out;
}

std::vector<long long> reduced_s6(long long D, int which) {
    check_discriminant6(D);
    if (which != 1 && which != 2) fail(Errc::invalid_argument, "reduced set index must be 1 or 2");
    const long long mod = which == 1 ? 4 : 16, shift = which == 1 ? 4 : 8;
    std::vector<long long> out;
    const long long r = isqrt_floor(D);
    for (long long e = -r; e <= r; ++e)
        if (e * e < D && (D - e * e) % mod == 0 && (e + shift) * (e + shift) < D) out.push_back(e);
    return out;
}

std::vector<long> admissible_q(const Prym6Prototype& p) { return admissible_impl(p); }
bool is_admissible(const Prym6Prototype& p, long q) { return admissible_one(p, q); }

Prym6Prototype butterfly6(const Prym6Prototype& p, long q) {
    if (!is_valid(p)) fail(Errc::invalid_argument, "not a prototype: " + p.str());
    if (p.kind() != Prym6Kind::A) fail(Errc::precondition, "butterfly moves need a type A prototype: " + p.str());
    if (!is_admissible(p, q)) fail(Errc::precondition, "q=" + q_str(q) + " not admissible for " + p.str());
    auto c = butterfly_core(p.w, p.h, p.t, p.e, p.D(), q, 4, true);
    Prym6Prototype r{c.w, c.h, c.t, c.e};
    if (!is_valid(r)) fail(Errc::precondition, "butterfly image is invalid: " + r.str());
    return r;
}

Reduce4Trace reduce4(const Prym4Prototype& p) {
    if (!is_valid(p)) fail(Errc::invalid_argument, "not a prototype: " + p.str());
    Reduce4Trace tr{p, 0, {p}};
    while (!tr.result.reduced()) {
        tr.result = butterfly4(tr.result, 1);
        tr.chain.push_back(tr.result);
        if (++tr.steps > 256) fail(Errc::resource, "B1 iteration did not terminate from " + p.str());
    }
    return tr;
}

Reduce6Trace reduce6(const Prym6Prototype& p) {
    if (!is_valid(p)) fail(Errc::invalid_argument, "not a prototype: " + p.str());
    const bool odd = p.D() % 8 == 1;
    Reduce6Trace tr{p, 0, {p}};
    while (!tr.result.reduced() && !(odd && tr.result.almost_reduced())) {
        tr.result = butterfly6(tr.result, 1);
        tr.chain.push_back(tr.result);
        if (++tr.steps > 256) fail(Errc::resource, "B1 iteration did not terminate from " + p.str());
    }
    return tr;
}

// ---- paths ----

namespace {

template <class P, class F>
std::string replay_impl(const PrymPath<P>& path, F move) {
    if (path.nodes.size() != path.moves.size() + 1) return "path needs one more node than moves";
    for (size_t i = 0; i < path.nodes.size(); ++i)
        if (!is_valid(path.nodes[i])) return "node " + path.nodes[i].str() + " is not a prototype";
    for (size_t i = 0; i < path.moves.size(); ++i) {
        const auto& a = path.nodes[i];
        if (!is_admissible(a, path.moves[i])) return "q=" + q_str(path.moves[i]) + " not admissible at " + a.str();
        P got;
        try {
            got = move(a, path.moves[i]);
        } catch (const Error& err) {
            return std::string("B_") + q_str(path.moves[i]) + a.str() + " failed: " + err.what();
        }
        if (!(got == path.nodes[i + 1]))
            return std::string("B_") + q_str(path.moves[i]) + a.str() + " = " + got.str() + ", expected " + path.nodes[i + 1].str();
    }
    return "";
}

Path4 path4(std::string label, std::vector<std::array<long long, 4>> nodes, std::vector<long> moves) {
    Path4 p{std::move(label), {}, std::move(moves)};
    int eps = +1;
    for (const auto& n : nodes) {
        p.nodes.push_back({n[0], n[1], n[2], n[3], eps});
        eps = -eps;
    }
    return p;
}

Path6 path6(std::string label, std::vector<std::array<long long, 4>> nodes, std::vector<long> moves) {
    Path6 p{std::move(label), {}, std::move(moves)};
    for (const auto& n : nodes) p.nodes.push_back({n[0], n[1], n[2], n[3]});
    return p;
}

}  // namespace

std::string replay_error(const Path4& p) { return replay_impl(p, butterfly4); }
std::string replay_error(const Path6& p) { return replay_impl(p, butterfly6); }

std::optional<Path4> bridge_path4(long long D) {
    if (D % 16 != 4) return std::nullopt;
    const long long k16 = (D - 4) / 16;
    // smallest k of each family whose nodes are prototypes: 3, 5, 4
    if (k16 % 2 == 1) {
        const long long k = k16;
        if (k < 3) return std::nullopt;
        return path4("D=4+16k, k odd", {{2 * k - 4, 1, 0, -6}, {k, 2, 0, -2}, {k - 2, 2, 0, -6}, {2 * k, 1, 0, -2}},
                     {2, kQInf, 1});
    }
    const long long k = (D - 4) / 32;
    if (k % 2 == 1 ? k < 5 : k < 4) return std::nullopt;
    if (k % 2 == 1)
        return path4("D=4+32k, k odd", {{4 * k, 1, 0, 2}, {2 * k - 6, 2, 1, -10}, {2 * k - 2, 2, 1, -6}, {4 * k, 1, 0, -2}},
                     {2, 2, 1});
    return path4("D=4+32k, k even",
                 {{4 * k - 4, 1, 0, -6}, {k - 3, 4, 0, -10}, {k - 1, 4, 0, -6}, {4 * k - 12, 1, 0, -10}}, {4, kQInf, 1});
}

std::optional<Path4> eps_loop4(long long D) {
    if (D % 16 == 8) {
        const long long k = (D - 8) / 16;
        return path4("D=8+16k", {{2 * k - 1, 1, 0, -4}, {2 * k - 1, 1, 0, -4}}, {2});
    }
    if (D % 32 == 0) {
        const long long k = D / 32;
        return path4("D=32k", {{4 * k - 2, 1, 0, -4}, {2 * k - 1, 2, 0, -4}, {2 * k - 1, 2, 0, -4}, {4 * k - 2, 1, 0, -4}},
                     {2, kQInf, 1});
    }
    if (D % 32 == 16) {
        const long long k = (D - 16) / 32;
        if (k < 2) return std::nullopt;
        return path4("D=16+32k", {{4 * k - 6, 1, 0, -8}, {2 * k + 1, 2, 0, 0}, {2 * k - 3, 2, 0, -8}, {4 * k - 6, 1, 0, -8}},
                     {2, kQInf, 2});
    }
    if (D % 8 == 4) {
        const long long w = (D - 4) / 8;
        return path4("D=4 mod 8", {{w, 1, 0, -2}, {w, 1, 0, -2}}, {1});
    }
    return std::nullopt;
}

std::vector<Path6> bridge_paths6(long long D) {
    std::vector<Path6> out;
    if (D % 16 == 12 && D >= 12 + 16 * 2) {
        const long long k = (D - 12) / 16;
        out.push_back(path6("D=12+16k", {{4 * k + 2, 1, 0, -2}, {2 * k - 3, 2, 0, -6}, {2 * k + 1, 2, 0, -2}, {4 * k - 6, 1, 0, -6}},
                            {2, kQInf, 1}));
    }
    if (D % 32 == 4 && D >= 4 + 32 * 4) {
        const long long k = (D - 4) / 32;
        out.push_back(path6("D=4+32k", {{8 * k, 1, 0, 2}, {4 * k - 12, 2, 1, -10}, {4 * k - 4, 2, 1, -6}, {8 * k, 1, 0, -2}},
                            {2, 2, 1}));
    }
    if (D % 32 == 20 && D >= 20 + 32 * 3) {
        const long long k = (D - 20) / 32;
        out.push_back(path6("D=20+32k",
                            {{8 * k + 4, 1, 0, 2}, {4 * k - 10, 2, 1, -10}, {2 * k - 1, 4, 0, -6}, {8 * k - 20, 1, 0, -10}},
                            {2, 2, 1}));
    }
    if (D % 16 == 1 && D >= 1 + 16 * 3) {
        const long long k = (D - 1) / 16;
        out.push_back(path6("D=1+16k", {{4 * k - 6, 1, 0, -5}, {2 * k - 1, 2, 0, -3}, {2 * k - 3, 2, 0, -5}, {4 * k - 2, 1, 0, -3}},
                            {2, kQInf, 1}));
    }
    if (D % 16 == 9 && D >= 9 + 16 * 3) {
        const long long k = (D - 9) / 16;
        out.push_back(path6("D=9+16k", {{4 * k - 10, 1, 0, -7}, {2 * k + 1, 2, 0, -1}, {2 * k - 5, 2, 0, -7}, {4 * k + 2, 1, 0, -1}},
                            {2, kQInf, 1}));
    }
    return out;
}

// ---- components ----

namespace {

template <class P, class Make, class Move, class Keep>
std::vector<std::vector<long long>> reduced_components(const std::vector<long long>& es, Make make, Move move, Keep keep) {
    std::map<long long, int> idx;
    for (size_t i = 0; i < es.size(); ++i) idx[es[i]] = static_cast<int>(i);
    Dsu d(es.size());
    for (size_t i = 0; i < es.size(); ++i) {
        const P p = make(es[i]);
        if (!is_valid(p)) continue;
        for (long q : admissible_q(p)) {
            P r;
            try {
                r = move(p, q);
            } catch (const Error&) {
                continue;
            }
            if (!keep(r)) continue;
            auto it = idx.find(r.e);
            if (it != idx.end()) d.join(static_cast<int>(i), it->second);
        }
    }
    std::map<int, std::vector<long long>> groups;
    for (size_t i = 0; i < es.size(); ++i) groups[d.find(static_cast<int>(i))].push_back(es[i]);
    std::vector<std::vector<long long>> out;
    for (auto& [_, g] : groups) out.push_back(std::move(g));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

int expected_s4_component_count(long long D) { return D % 16 == 4 ? 2 : 1; }

S4Components s4_components(long long D) {
    const auto es = reduced_s4(D);
    S4Components out;
    out.s.D = D;
    out.s.expected = expected_s4_component_count(D);
    out.s.exceptional = D <= kPrymSmallD;
    out.s.components = reduced_components<Prym4Prototype>(
        es, [D](long long e) { return Prym4Prototype{(D - e * e) / 8, 1, 0, e, +1}; }, butterfly4,
        [](const Prym4Prototype& r) { return r.reduced(); });
    if (auto b = bridge_path4(D); b && replay_error(*b).empty()) out.bridge = b;
    if (auto l = eps_loop4(D); l && replay_error(*l).empty()) out.eps_loop = l;
    return out;
}

int q4_component_count(long long D) {
    const auto all = enumerate_q4(D);
    std::map<Prym4Prototype, int> idx;
    for (size_t i = 0; i < all.size(); ++i) idx[all[i]] = static_cast<int>(i);
    Dsu d(all.size());
    for (size_t i = 0; i < all.size(); ++i)
        for (long q : admissible_q(all[i])) d.join(static_cast<int>(i), idx.at(butterfly4(all[i], q)));
    std::set<int> roots;
    for (size_t i = 0; i < all.size(); ++i) roots.insert(d.find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
}

int expected_s6_component_count(long long D, int which) {
    if (which == 2) return D % 8 == 1 ? 1 : 0;
    switch (D % 8) {
        case 4: return 3;
        case 1:
        case 0: return 2;
        default: return 1;
    }
}

S6Components s6_components(long long D) {
    S6Components out;
    out.s1.D = out.s2.D = D;
    out.s1.exceptional = out.s2.exceptional = D <= kPrymSmallD;
    out.s1.expected = expected_s6_component_count(D, 1);
    out.s2.expected = expected_s6_component_count(D, 2);
    out.s1.components = reduced_components<Prym6Prototype>(
        reduced_s6(D, 1), [D](long long e) { return Prym6Prototype{(D - e * e) / 4, 1, 0, e}; }, butterfly6,
        [](const Prym6Prototype& r) { return r.reduced(); });
    if (D % 8 == 1)
        out.s2.components = reduced_components<Prym6Prototype>(
            reduced_s6(D, 2), [D](long long e) { return Prym6Prototype{(D - e * e) / 8, 2, 0, e}; }, butterfly6,
            [](const Prym6Prototype& r) { return r.almost_reduced(); });
    for (auto& p : bridge_paths6(D))
        if (replay_error(p).empty()) out.bridges.push_back(std::move(p));
    return out;
}

std::vector<std::vector<Prym6Prototype>> p6a_components(long long D) {
    const auto all = enumerate_p6a(D);
    std::map<Prym6Prototype, int> idx;
    for (size_t i = 0; i < all.size(); ++i) idx[all[i]] = static_cast<int>(i);
    Dsu d(all.size());
    for (size_t i = 0; i < all.size(); ++i)
        for (long q : admissible_q(all[i])) {
            auto it = idx.find(butterfly6(all[i], q));
            if (it == idx.end()) fail(Errc::precondition, "butterfly left the type A prototypes at " + all[i].str());
            d.join(static_cast<int>(i), it->second);
        }
    std::map<int, std::vector<Prym6Prototype>> groups;
    for (size_t i = 0; i < all.size(); ++i) groups[d.find(static_cast<int>(i))].push_back(all[i]);
    std::vector<std::vector<Prym6Prototype>> out;
    for (auto& [_, g] : groups) out.push_back(std::move(g));
    std::sort(out.begin(), out.end());
    return out;
}

int expected_p6a_component_count(long long D) { return D % 8 == 5 ? 1 : 2; }

// ---- origami bridges ----

namespace {

struct Raw {
    long long W, H, T, E;
};

Raw raw_of(const PrymShapeParams& p) {
    const long long w1 = p.w1, h1 = p.h1, t1 = p.t1, w2 = p.w2, h2 = p.h2, t2 = p.t2;
    long long E = 0;
    switch (p.shape) {
        case PrymShape::APlus: E = w1 * h1 - 2 * w2 * h2; break;
        case PrymShape::AMinus: E = 2 * w1 * h1 - w2 * h2; break;
        case PrymShape::A6: E = w1 * h1 - w2 * h2; break;
        default: fail(Errc::precondition, "prototype bridges need a type A shape");
    }
    return {h1 * w2, w1 * h2, h1 * t2 - h2 * t1, E};
}

// (w, h, t, e) and the common divisor g removed from the raw parameters
std::pair<std::array<long long, 4>, long long> divide_out(const Raw& r) {
    const long long G = std::gcd(r.W, r.H);
    const long long t = mod_floor(r.T, G);
    const long long g = gcd4(r.W, r.H, r.E, t);
    return {{r.W / g, r.H / g, t / g, r.E / g}, g};
}

PrymShapeParams require_type_a(const Origami& o, int locus) {
    if (prym_locus(o) != locus) fail(Errc::precondition, "origami is not in the Prym locus of H(" + std::to_string(locus) + ")");
    auto p = prym_shape_params(o);
    const bool ok = p && (locus == 4 ? (p->shape == PrymShape::APlus || p->shape == PrymShape::AMinus) : p->shape == PrymShape::A6);
    if (!ok) fail(Errc::precondition, "origami is not a type A cylinder shape");
    return *p;
}

// Shape parameters with area n realizing a type A prototype; the raw tuple is g times (w,h,t,e).
template <class Check>
std::optional<Origami> realize_shape(PrymShape shape, long long w, long long h, long long t, long long e, long long g,
                                     long long area, long long m1, long long m2, Check check) {
    // m1 * a1 - m2 * a2 = e g and m1 * a1 + m2 * a2 = area, with a_i = w_i h_i
    if ((area + e * g) % (2 * m1) || (area - e * g) % (2 * m2)) return std::nullopt;
    const long long a1 = (area + e * g) / (2 * m1), a2 = (area - e * g) / (2 * m2);
    if (a1 <= 0 || a2 <= 0) return std::nullopt;
    const long long WG = w * g, HG = h * g, G = std::gcd(WG, HG);
    for (int pass = 0; pass < 2; ++pass) {
        for (long long w1 = 1; w1 <= a1; ++w1) {
            if (a1 % w1 || HG % w1) continue;
            const long long h1 = a1 / w1, h2 = HG / w1;
            if (WG % h1) continue;
            const long long w2 = WG / h1;
            if (w2 * h2 != a2) continue;
            PrymShapeParams sp{shape, int(w1), int(h1), 0, int(w2), int(h2), 0};
            if (!shape_widths_ok(sp)) continue;
            const long long t1max = pass == 0 ? std::gcd(w1, h1) : w1;
            const long long t2max = pass == 0 ? std::gcd(w2, h2) : w2;
            for (long long t1 = 0; t1 < t1max; ++t1) {
                for (long long t2 = 0; t2 < t2max; ++t2) {
                    if (mod_floor(h1 * t2 - h2 * t1 - t * g, G) != 0) continue;
                    sp.t1 = int(t1);
                    sp.t2 = int(t2);
                    Origami o = prym_shape_origami(sp);
                    if (!is_primitive(o.h(), o.v())) continue;
                    if (check(o)) return o;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Prym4Prototype origami_to_prototype4(const Origami& o) {
    const PrymShapeParams sp = require_type_a(o, 4);
    auto [v, g] = divide_out(raw_of(sp));
    Prym4Prototype p{v[0], v[1], v[2], v[3], sp.shape == PrymShape::APlus ? +1 : -1};
    const long long n = o.n();
    if (!is_valid(p) || p.D() * g * g != n * n) fail(Errc::precondition, "extracted tuple is not a prototype: " + p.str());
    return p;
}

Prym6Prototype origami_to_prototype6(const Origami& o) {
    const PrymShapeParams sp = require_type_a(o, 6);
    auto [v, g] = divide_out(raw_of(sp));
    Prym6Prototype p{v[0], v[1], v[2], v[3]};
    const long long n = o.n();
    if (!is_valid(p) || p.kind() != Prym6Kind::A || 4 * p.D() * g * g != n * n)
        fail(Errc::precondition, "extracted tuple is not a type A prototype: " + p.str());
    return p;
}

Origami prototype4_to_origami(const Prym4Prototype& p, long long n) {
    if (!is_valid(p)) fail(Errc::invalid_argument, "not a prototype: " + p.str());
    auto s = exact_sqrt(p.D());
    if (n <= 0 || !s || n % *s) fail(Errc::invalid_argument, "n^2 is not a square multiple of D for " + p.str());
    const long long g = n / *s;
    const bool plus = p.eps > 0;
    auto o = realize_shape(plus ? PrymShape::APlus : PrymShape::AMinus, p.w, p.h, p.t, p.e, g, n, plus ? 1 : 2, plus ? 2 : 1,
                           [&](const Origami& x) { return prym_locus(x) == 4 && origami_to_prototype4(x) == p; });
    if (!o) fail(Errc::not_found, "no origami realizes " + p.str() + " at n=" + std::to_string(n));
    return *o;
}

Origami prototype6_to_origami(const Prym6Prototype& p, long long n) {
    if (!is_valid(p) || p.kind() != Prym6Kind::A) fail(Errc::invalid_argument, "not a type A prototype: " + p.str());
    auto s = exact_sqrt(p.D());
    if (n <= 0 || n % 2 || !s || (n / 2) % *s) fail(Errc::invalid_argument, "n^2/4 is not a square multiple of D for " + p.str());
    const long long g = (n / 2) / *s;
    auto o = realize_shape(PrymShape::A6, p.w, p.h, p.t, p.e, g, n / 2, 1, 1,
                           [&](const Origami& x) { return prym_locus(x) == 6 && origami_to_prototype6(x) == p; });
    if (!o) fail(Errc::not_found, "no origami realizes " + p.str() + " at n=" + std::to_string(n));
    return *o;
}

// ---- butterfly moves on origamis ----

namespace {

long shortest_power(long k, long width) {
    k %= width;
    if (k < 0) k += width;
    return k > width / 2 ? k - width : k;
}

// Cusp members in the order they are tried as the base of a butterfly direction:
// the unique twist-normalized member, members whose twist lift matches t modulo w1 h2, then the rest.
template <class Extract, class Target>
Realized realize_impl(const Origami& o, long q, int locus, Extract extract, const Target& target, long long t_scaled) {
    const PrymShapeParams sp = require_type_a(o, locus);
    const long w = cusp_width(o);
    struct Cand {
        int rank;
        long k;
    };
    std::vector<Cand> cands;
    std::vector<long> normalized;
    for (long k = 0; k < w; ++k) {
        const long long t1 = mod_floor(sp.t1 + k * (long long)sp.h1, sp.w1);
        const long long t2 = mod_floor(sp.t2 + k * (long long)sp.h2, sp.w2);
        if (t1 < std::gcd(sp.w1, sp.h1) && t2 < std::gcd(sp.w2, sp.h2)) normalized.push_back(k);
    }
    for (long k = 0; k < w; ++k) {
        const long long t1 = mod_floor(sp.t1 + k * (long long)sp.h1, sp.w1);
        const long long t2 = mod_floor(sp.t2 + k * (long long)sp.h2, sp.w2);
        const long long lift = (long long)sp.h1 * t2 - (long long)sp.h2 * t1;
        int rank = 2;
        if (normalized.size() == 1 && normalized[0] == k)
            rank = 0;
        else if (mod_floor(lift - t_scaled, (long long)sp.w1 * sp.h2) == 0)
            rank = 1;
        cands.push_back({rank, shortest_power(k, w)});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        if (std::abs(a.k) != std::abs(b.k)) return std::abs(a.k) < std::abs(b.k);
        return a.k > b.k;
    });
    for (const auto& c : cands) {
        const Origami base = act_T_pow(o, c.k);
        const long long t2 = mod_floor(sp.t2 + c.k * (long long)sp.h2, sp.w2);
        const long dp = q == kQInf ? long(t2) : long(sp.w2 + q * t2);
        const long dr = q == kQInf ? sp.h2 : q * sp.h2;
        auto hz = make_direction_horizontal(base, dp, dr);
        bool ok = false;
        try {
            ok = extract(hz.origami) == target;
        } catch (const Error&) {
        }
        if (!ok) continue;
        Sl2Word word;
        word.push_power(Gen::T, c.k);
        word.append(hz.word);
        return {word, hz.origami};
    }
    fail(Errc::not_found, "no cusp member of " + o.str() + " realizes B_" + q_str(q));
}

}  // namespace

Realized realize_butterfly4(const Origami& o, long q) {
    const Prym4Prototype p = origami_to_prototype4(o);
    const Prym4Prototype target = butterfly4(p, q);
    const long long g = std::llround(std::sqrt(double(o.n()) * o.n() / double(p.D())));
    return realize_impl(o, q, 4, origami_to_prototype4, target, p.t * g);
}

Realized realize_butterfly6(const Origami& o, long q) {
    const Prym6Prototype p = origami_to_prototype6(o);
    const Prym6Prototype target = butterfly6(p, q);
    const long long g = std::llround(std::sqrt(double(o.n()) * o.n() / (4.0 * double(p.D()))));
    return realize_impl(o, q, 6, origami_to_prototype6, target, p.t * g);
}

// ---- type B to type A ----

namespace {

template <class Dirs>
Direction first_type_a_direction(const Origami& o, PrymShape from, int locus, Dirs dirs) {
    if (prym_locus(o) != locus) fail(Errc::precondition, "origami is not in the Prym locus of H(" + std::to_string(locus) + ")");
    auto params = all_prym_shape_params(o);
    if (params.empty() || params.front().shape != from) fail(Errc::precondition, "origami is not a type B cylinder shape");
    // the listed directions are read off o itself first; other cusp members T^k(o) are a fallback,
    // with a direction (p, r) on T^k(o) pulled back to (p - k r, r) on o
    const long w = cusp_width(o);
    std::vector<long> ks{0};
    for (long k = 1; 2 * k <= w; ++k) {
        ks.push_back(k);
        if (2 * k != w) ks.push_back(-k);
    }
    for (long k : ks) {
        const Origami m = act_T_pow(o, k);
        for (const auto& sp : k == 0 ? params : all_prym_shape_params(m)) {
            if (sp.shape != from) continue;
            for (const Direction& d : dirs(sp)) {
                auto hz = make_direction_horizontal(m, d.p, d.r);
                auto got = prym_shape_params(hz.origami);
                if (!got) continue;
                const bool a = locus == 4 ? (got->shape == PrymShape::APlus || got->shape == PrymShape::AMinus) : got->shape == PrymShape::A6;
                if (a) return {d.p - k * d.r, d.r};
            }
        }
    }
    fail(Errc::not_found, "no listed direction gives a type A decomposition of " + o.str());
}

}  // namespace

Direction typeB4_to_typeA_direction(const Origami& o) {
    return first_type_a_direction(o, PrymShape::B4, 4, [](const PrymShapeParams& s) {
        std::vector<Direction> d{{s.t1 + s.t2 - s.w2, s.h1 + s.h2}, {2 * s.t1 + s.t2, 2 * s.h1 + s.h2}, {s.w1 + s.t1 + s.t2, s.h1 + s.h2}};
        for (int y = 1; y < s.w1; ++y) d.push_back({2 * s.t1 + s.t2 + y - s.w1 - s.w2, 2 * s.h1 + s.h2});
        return d;
    });
}

Direction typeB6_to_typeA_direction(const Origami& o) {
    return first_type_a_direction(o, PrymShape::B6, 6, [](const PrymShapeParams& s) {
        return std::vector<Direction>{{s.t1 + s.t2, s.h1 + s.h2}, {s.t1 + s.t2 - s.w1, s.h1 + s.h2}, {s.t1 + s.t2 - s.w2, s.h1 + s.h2}};
    });
}

// ---- crossing components in H(6) ----

std::optional<Direction> cross_component_direction6(const PrymShapeParams& sp, const Prym6Prototype& p, long j) {
    auto s = exact_sqrt(p.D());
    if (!s || (p.e + *s) % 2) return std::nullopt;
    const long long lam = (p.e + *s) / 2;
    if (lam <= 0) return std::nullopt;
    if (sp.w1 == 1 && sp.h1 == lam && sp.h2 == 2 && (long long)sp.w2 * lam == p.w)
        return Direction{sp.w2 + sp.h1 / 2, 2 * j + 2 + sp.h1};
    if (sp.w1 == 2 && 2LL * sp.h1 == lam && sp.h2 == 1 && (long long)sp.w2 * lam == 2 * p.w)
        return Direction{sp.w2 + 2 * sp.h1, j + 1 + sp.h1};
    return std::nullopt;
}

namespace {

bool in_first_component6(const Prym6Prototype& p) { return reduce6(p).result.reduced(); }

}  // namespace

CrossComponent6 cross_component6(long long D) {
    check_discriminant6(D);
    if (D % 8 != 1) fail(Errc::invalid_argument, "crossing components needs D = 1 mod 8");
    auto s = exact_sqrt(D);
    if (!s) fail(Errc::invalid_argument, "D must be a square");
    const long long n = 2 * *s;
    for (long long e : reduced_s6(D, 2)) {
        const Prym6Prototype p{(D - e * e) / 8, 2, 0, e};
        if (!is_valid(p) || p.kind() != Prym6Kind::A) continue;
        Origami o;
        try {
            o = prototype6_to_origami(p, n);
        } catch (const Error&) {
            continue;
        }
        const PrymShapeParams sp = *prym_shape_params(o);
        for (long j = 0; j < sp.w2; ++j) {
            auto d = cross_component_direction6(sp, p, j);
            if (!d) break;
            auto hz = make_direction_horizontal(o, d->p, d->r);
            auto got = prym_shape_params(hz.origami);
            if (!got || got->shape != PrymShape::A6) continue;
            const Prym6Prototype img = origami_to_prototype6(hz.origami);
            if (!in_first_component6(img)) continue;
            return {p, o, *d, j, hz.word, hz.origami, img};
        }
    }
    fail(Errc::not_found, "no almost-reduced prototype of D=" + std::to_string(D) + " has a crossing direction");
}

Origami labc_origami(int la, int lb, int lc) {
    if (la <= 0 || lb <= 0 || lc <= 0) fail(Errc::invalid_argument, "side lengths must be positive");
    const int W = la + 2 * lb + 2 * lc;
    // upper cylinder: A | B | C | B' | C' on top, lower cylinder: C | B | C' | B' | A' on the bottom
    return from_cylinders({{W, 1, {{0, la, 0, 0}, {la, lb, 1, lc}, {la + lb, lc, 1, 0}, {la + lb + lc, lb, 1, lb + 2 * lc}, {la + 2 * lb + lc, lc, 1, lb + lc}}},
                           {W, 1, {{0, W - la, 0, la}, {W - la, la, 1, W - la}}}});
}

LabcBridge labc_bridge6(int n) {
    if (n < 10 || n % 2) fail(Errc::invalid_argument, "lABC origamis need even n >= 10");
    const long long D = (long long)n * n / 4;
    std::map<Prym6Prototype, int> comp;
    const auto comps = p6a_components(D);
    for (size_t i = 0; i < comps.size(); ++i)
        for (const auto& p : comps[i]) comp[p] = static_cast<int>(i);
    const int half = n / 2;
    for (int lc = 1; 2 * lc < half; ++lc) {
        for (int lb = 1; 2 * lb + 2 * lc < half; ++lb) {
            const int la = half - 2 * lb - 2 * lc;
            Origami o = labc_origami(la, lb, lc);
            if (prym_locus(o) != 6 || !is_primitive(o.h(), o.v())) continue;
            auto c = make_direction_horizontal(o, la + 2 * lb + lc, 3);
            auto cp = make_direction_horizontal(o, -lc, 2);
            Prym6Prototype pc, pcp;
            try {
                pc = origami_to_prototype6(c.origami);
                pcp = origami_to_prototype6(cp.origami);
            } catch (const Error&) {
                continue;
            }
            auto a = comp.find(pc), b = comp.find(pcp);
            if (a == comp.end() || b == comp.end() || a->second == b->second) continue;
            return {la, lb, lc, o, c.word, cp.word, c.origami, cp.origami, pc, pcp};
        }
    }
    fail(Errc::not_found, "no lABC origami with n=" + std::to_string(n) + " bridges the two components");
}

// ---- census ----

std::vector<Origami> prym_type_a_census(int locus, int n) {
    if (locus != 4 && locus != 6) fail(Errc::invalid_argument, "locus must be 4 or 6");
    if (n < 1) fail(Errc::invalid_argument, "n must be positive");
    struct Family {
        PrymShape shape;
        int m1, m2;
    };
    std::vector<Family> fams = locus == 4 ? std::vector<Family>{{PrymShape::APlus, 1, 2}, {PrymShape::AMinus, 2, 1}}
                                          : std::vector<Family>{{PrymShape::A6, 2, 2}};
    std::set<CanonKey> seen;
    std::vector<Origami> out;
    for (const auto& f : fams) {
        for (int a1 = 1; f.m1 * a1 < n; ++a1) {
            if ((n - f.m1 * a1) % f.m2) continue;
            const int a2 = (n - f.m1 * a1) / f.m2;
            for (int w1 = 1; w1 <= a1; ++w1) {
                if (a1 % w1) continue;
                for (int w2 = 1; w2 <= a2; ++w2) {
                    if (a2 % w2) continue;
                    PrymShapeParams sp{f.shape, w1, a1 / w1, 0, w2, a2 / w2, 0};
                    if (!shape_widths_ok(sp)) continue;
                    for (sp.t1 = 0; sp.t1 < w1; ++sp.t1) {
                        for (sp.t2 = 0; sp.t2 < w2; ++sp.t2) {
                            Origami o = prym_shape_origami(sp);
                            if (!is_primitive(o.h(), o.v()) || prym_locus(o) != locus) continue;
                            Origami c = canonical_form(o);
                            if (seen.insert(canonical_key(c)).second) out.push_back(c);
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Origami> prym_orbit_seeds(int locus, int n) {
    std::vector<Origami> seeds;
    std::vector<OrbitGraph> orbits;
    for (const auto& o : prym_type_a_census(locus, n)) {
        bool known = false;
        for (const auto& g : orbits)
            if (g.find(o) >= 0) {
                known = true;
                break;
            }
        if (known) continue;
        orbits.push_back(build_orbit(o));
        seeds.push_back(o);
    }
    return seeds;
}

}  // namespace sqt
