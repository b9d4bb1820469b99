#include "sqt/h2_engine.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "sqt/error.hpp"
#include "sqt/invariants.hpp"

namespace sqt {

namespace {

long long isqrt_floor(long long D) {
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(D)));
    while (r * r > D) --r;
    while ((r + 1) * (r + 1) <= D) ++r;
    return r;
}

std::vector<long long> parse_ints(std::string_view text, size_t want, const char* what) {
    std::vector<long long> out;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' ||
                                   text[i] == '(' || text[i] == ')'))
            ++i;
    };
    skip();
    while (i < text.size()) {
        bool neg = false;
        if (text[i] == '-' || text[i] == '+') {
            neg = text[i] == '-';
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail(Errc::parse, std::string("bad ") + what + ": " + std::string(text));
        long long x = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            x = x * 10 + (text[i] - '0');
            if (x > (1LL << 40)) fail(Errc::parse, "integer too large");
            ++i;
        }
        out.push_back(neg ? -x : x);
        skip();
    }
    if (out.size() != want) fail(Errc::parse, std::string("expected ") + std::to_string(want) + " integers in " + what);
    return out;
}

long shortest_power(long k, long width) {
    k %= width;
    if (k < 0) k += width;
    return k > width / 2 ? k - width : k;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::string q_str(long q) { return q == kQInf ? "inf" : std::to_string(q); }

long long mod_floor(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

std::string H2Prototype::str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(e) + ")";
}

H2Prototype H2Prototype::parse(std::string_view text) {
    auto v = parse_ints(text, 4, "prototype");
    return {v[0], v[1], v[2], v[3]};
}

bool is_valid(const H2Prototype& p) {
    if (p.b <= 0 || p.c <= 0) return false;
    if (p.a < 0 || p.a >= std::gcd(p.b, p.c)) return false;
    if (p.c + p.e >= p.b) return false;
    return std::gcd(std::gcd(p.a, p.b), std::gcd(p.c, p.e)) == 1;
}

void check_discriminant(long long D) {
    if (D < 5 || (D % 4 != 0 && D % 4 != 1)) fail(Errc::invalid_argument, "invalid discriminant " + std::to_string(D));
}

std::vector<H2Prototype> enumerate_prototypes(long long D) {
    check_discriminant(D);
    std::vector<H2Prototype> out;
    const long long r = isqrt_floor(D);
    for (long long e = -r; e <= r; ++e) {
        if (e * e >= D || (D - e * e) % 4 != 0) continue;
        const long long bc = (D - e * e) / 4;
        for (long long c = 1; c <= bc; ++c) {
            if (bc % c) continue;
            const long long b = bc / c;
            if (c + e >= b) continue;
            const long long g = std::gcd(b, c);
            for (long long a = 0; a < g; ++a) {
                H2Prototype p{a, b, c, e};
                if (is_valid(p)) out.push_back(p);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> reduced_set(long long D) {
    check_discriminant(D);
    std::vector<long long> out;
    const long long r = isqrt_floor(D);
    for (long long e = -r - 2; e <= r; ++e)
        if (mod_floor(e - D, 2) == 0 && e * e < D && (e + 2) * (e + 2) < D) out.push_back(e);
    return out;
}

bool is_admissible(const H2Prototype& p, long q) {
    if (q == kQInf) return true;
    if (q < 1) return false;
    const long long x = p.e + 2 * q * p.c;
    return x * x < p.D();
}

std::vector<long> admissible_q(const H2Prototype& p) {
    std::vector<long> out;
    for (long q = 1; is_admissible(p, q); ++q) out.push_back(q);
    out.push_back(kQInf);
    return out;
}

ReducedBasis reduce_basis(long long n00, long long n01, long long n10, long long n11) {
    long long ux = n00, uy = n10, wx = n01, wy = n11;
    while (wy != 0) {
        const long long k = uy / wy;
        ux -= k * wx;
        uy -= k * wy;
        std::swap(ux, wx);
        std::swap(uy, wy);
    }
    if (uy < 0) {
        ux = -ux;
        uy = -uy;
    }
    return {ux, wx, uy};
}

H2Prototype butterfly(const H2Prototype& p, long q) {
    if (!is_valid(p)) fail(Errc::invalid_argument, "not a prototype: " + p.str());
    if (!is_admissible(p, q)) fail(Errc::precondition, "q=" + q_str(q) + " not admissible for " + p.str());
    const long long D = p.D();
    long long e2, c2;
    ReducedBasis rb;
    if (q == kQInf) {
        e2 = -p.e - 2 * p.c;
        c2 = std::gcd(p.a, p.c);
        rb = reduce_basis(0, p.b - p.e - p.c, -p.c, p.a);
    } else {
        const long long qq = q;
        e2 = -p.e - 2 * qq * p.c;
        c2 = std::gcd(qq * p.c, p.b + qq * p.a);
        rb = reduce_basis(p.c, -p.a - p.e - qq * p.c, -qq * p.c, p.b + qq * p.a);
    }
    if ((D - e2 * e2) % (4 * c2) != 0) fail(Errc::precondition, "non-integral b' for " + p.str());
    const long long b2 = (D - e2 * e2) / (4 * c2);
    if (rb.g != c2 || std::llabs(rb.second_x) != b2)
        fail(Errc::precondition, "basis reduction mismatch for " + p.str() + " q=" + q_str(q));
    H2Prototype out{mod_floor(rb.first_x, std::gcd(b2, c2)), b2, c2, e2};
    if (!is_valid(out)) fail(Errc::precondition, "butterfly produced invalid prototype " + out.str());
    return out;
}

ReduceTrace reduce_to_reduced(const H2Prototype& p) {
    if (!is_valid(p)) fail(Errc::invalid_argument, "not a prototype: " + p.str());
    ReduceTrace t{p, 0, {p}};
    while (!t.result.reduced()) {
        t.result = butterfly(t.result, 1);
        t.chain.push_back(t.result);
        if (++t.steps > 4096) fail(Errc::resource, "B1 iteration did not terminate from " + p.str());
    }
    return t;
}

int expected_spin_component_count(long long D) { return D % 8 == 1 ? 2 : 1; }

SpinComponents spin_components(long long D) {
    const auto es = reduced_set(D);
    std::map<long long, size_t> idx;
    for (size_t i = 0; i < es.size(); ++i) idx[es[i]] = i;
    std::vector<size_t> parent(es.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (long long e : es) {
        H2Prototype p{0, (D - e * e) / 4, 1, e};
        for (long q : admissible_q(p)) {
            H2Prototype r = butterfly(p, q);
            if (!r.reduced()) continue;
            size_t x = find(idx.at(e)), y = find(idx.at(r.e));
            if (x != y) parent[std::max(x, y)] = std::min(x, y);
        }
    }
    std::map<size_t, std::vector<long long>> groups;
    for (size_t i = 0; i < es.size(); ++i) groups[find(i)].push_back(es[i]);
    SpinComponents sc;
    sc.D = D;
    for (auto& [root, g] : groups) sc.components.push_back(std::move(g));
    static const std::set<long long> exceptional{9, 49, 73, 121, 169};
    sc.exceptional = exceptional.count(D) > 0;
    return sc;
}

H2Prototype origami_to_prototype(const Origami& o) {
    if (stratum(o) != std::vector<int>{2}) fail(Errc::precondition, "origami is not in H(2)");
    auto tp = two_cylinder_params(o);
    if (!tp) fail(Errc::precondition, "origami is not two-cylinder");
    const long long w1 = tp->w1, h1 = tp->h1, t1 = tp->t1, w2 = tp->w2, h2 = tp->h2, t2 = tp->t2;
    const long long b = h1 * w2, c = w1 * h2, e = w1 * h1 - w2 * h2;
    const long long g = std::gcd(b, c);
    H2Prototype p{mod_floor(h1 * t2 - h2 * t1, g), b, c, e};
    const long long n = o.n();
    if (p.D() != n * n || !is_valid(p)) fail(Errc::precondition, "extracted tuple is not a prototype (non-primitive?)");
    return p;
}

Origami prototype_to_origami(const H2Prototype& p, long long n) {
    if (!is_valid(p)) fail(Errc::invalid_argument, "not a prototype: " + p.str());
    if (n <= 0 || p.D() != n * n) fail(Errc::invalid_argument, "D != n^2 for " + p.str());
    if ((p.e + n) % 2 != 0) fail(Errc::not_found, "lambda not integral");
    const long long lam = (p.e + n) / 2;
    const long long g = std::gcd(p.b, p.c);
    for (int pass = 0; pass < 2; ++pass) {
        for (long long w1 = 1; w1 <= lam; ++w1) {
            if (lam % w1 || p.c % w1) continue;
            const long long h1 = lam / w1;
            if (p.b % h1) continue;
            const long long w2 = p.b / h1, h2 = p.c / w1;
            if (w1 >= w2) continue;
            const long long t1max = pass == 0 ? std::gcd(w1, h1) : w1;
            const long long t2max = pass == 0 ? std::gcd(w2, h2) : w2;
            for (long long t1 = 0; t1 < t1max; ++t1) {
                for (long long t2 = 0; t2 < t2max; ++t2) {
                    if (mod_floor(h1 * t2 - h2 * t1 - p.a, g) != 0) continue;
                    Origami o = h2_two_cylinder({int(w1), int(h1), int(t1), int(w2), int(h2), int(t2)});
                    if (stratum(o) != std::vector<int>{2} || !is_primitive(o.h(), o.v())) continue;
                    if (origami_to_prototype(o) == p) return o;
                }
            }
        }
    }
    fail(Errc::not_found, "no origami realizes " + p.str() + " at n=" + std::to_string(n));
}

namespace {

bool twist_lift_aligned(const TwoCylinderParams& tp, long long a) {
    const long long lift = (long long)tp.h1 * tp.t2 - (long long)tp.h2 * tp.t1;
    return mod_floor(lift - a, (long long)tp.w1 * tp.h2) == 0;
}

// Cusp member used as the base of butterfly directions: the unique
// twist-normalized member, or else the nearest member whose twist lift
// reproduces a modulo c.
std::pair<Origami, long> butterfly_base(const Origami& o, long long a) {
    const long w = cusp_width(o);
    std::vector<Origami> orbit;
    std::vector<long> normalized;
    Origami x = o;
    for (long k = 0; k < w; ++k) {
        orbit.push_back(x);
        if (twists_normalized(horizontal_cylinders(x))) normalized.push_back(k);
        x = act_T(x);
    }
    if (normalized.size() == 1) return {orbit[normalized[0]], shortest_power(normalized[0], w)};
    long best = 0;
    bool found = false;
    for (long k = 0; k < w; ++k) {
        auto tp = two_cylinder_params(orbit[k]);
        if (!tp || !twist_lift_aligned(*tp, a)) continue;
        long s = shortest_power(k, w);
        if (!found || std::abs(s) < std::abs(best) || (std::abs(s) == std::abs(best) && s > best)) best = s;
        found = true;
    }
    if (!found) fail(Errc::not_found, "no cusp member aligns the twist lift of " + o.str());
    return {orbit[mod_floor(best, w)], best};
}

}  // namespace

Realized realize_butterfly_word(const Origami& o, long q) {
    const H2Prototype p = origami_to_prototype(o);
    if (!is_admissible(p, q)) fail(Errc::precondition, "q=" + q_str(q) + " not admissible for " + p.str());
    auto [base, k] = butterfly_base(o, p.a);
    Sl2Word w;
    w.push_power(Gen::T, k);
    auto tp = *two_cylinder_params(base);
    long dp, dr;
    if (q == kQInf) {
        dp = tp.t2;
        dr = tp.h2;
    } else {
        dp = tp.w2 + q * tp.t2;
        dr = q * tp.h2;
    }
    auto hz = make_direction_horizontal(base, dp, dr);
    w.append(hz.word);
    return {w, hz.origami};
}

const char* to_string(HlCase c) {
    switch (c) {
        case HlCase::I: return "I";
        case HlCase::II: return "II";
        case HlCase::III: return "III";
        case HlCase::IV: return "IV";
    }
    return "?";
}

HlCase hl_case(const Origami& o) {
    auto tp = two_cylinder_params(o);
    if (!tp) fail(Errc::precondition, "hl_case needs a two-cylinder surface");
    if (!twists_normalized(horizontal_cylinders(o))) fail(Errc::precondition, "hl_case needs a cusp representative");
    if (tp->t1 != 0) return tp->t2 != 0 ? HlCase::I : HlCase::III;
    return tp->t2 != 0 ? HlCase::II : HlCase::IV;
}

namespace {

void require_hl_input(const Origami& o) {
    if (!is_prime(o.n())) fail(Errc::precondition, "HL reduction requires prime n");
    if (stratum(o) != std::vector<int>{2}) fail(Errc::precondition, "HL reduction requires H(2)");
}

// T-normalize x, appending the power to the trace.
void to_cusp_rep(HlTrace& t) {
    auto cr = cusp_representative(t.origami);
    long k = shortest_power(cr.k, cusp_width(t.origami));
    t.word.push_power(Gen::T, k);
    t.origami = cr.origami;
}

}  // namespace

HlTrace hl_reduce_to_one_cylinder(const Origami& o) {
    require_hl_input(o);
    HlTrace t{Sl2Word(), o, {}};
    for (int iter = 0; horizontal_cylinders(t.origami).size() != 1; ++iter) {
        if (iter > 4 * o.n() + 8) fail(Errc::resource, "HL reduction did not terminate");
        to_cusp_rep(t);
        const HlCase c = hl_case(t.origami);
        t.steps.emplace_back(to_string(c));
        if (c == HlCase::IV) {
            auto tp = *two_cylinder_params(t.origami);
            auto hz = make_direction_horizontal(t.origami, tp.w1, tp.h2);
            t.word.append(hz.word);
            t.origami = hz.origami;
            if (horizontal_cylinders(t.origami).size() != 1)
                fail(Errc::precondition, "case IV direction is not one-cylinder");
        } else {
            t.word.append(Sl2Word::rotation());
            t.origami = apply_word(t.origami, Sl2Word::rotation());
        }
    }
    return t;
}

OneCylinderParams hl_one_cylinder_target(const Origami& o) {
    const int n = o.n();
    if (n < 5) fail(Errc::precondition, "one-cylinder targets need n >= 5");
    if (hlk_invariant(o) == hlk_invariant(h2_one_cylinder(1, 1, n - 2))) return {1, 1, n - 2};
    return {1, 2, n - 3};
}

namespace {

bool same_params(const OneCylinderParams& x, const OneCylinderParams& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
}

int min_length(const OneCylinderParams& p) { return std::min({p.a, p.b, p.c}); }

std::optional<OneCylinderParams> one_cyl(const Origami& o) {
    if (horizontal_cylinders(o).size() != 1) return std::nullopt;
    return one_cylinder_params(o);
}

struct Step {
    Sl2Word word;
    Origami origami;
};

// Members T^k(x) of the cusp, k signed and shortest, ordered by |k|.
std::vector<Step> cusp_members(const Origami& x) {
    const long w = cusp_width(x);
    std::vector<Step> out;
    Origami y = x;
    std::vector<Origami> orbit;
    for (long k = 0; k < w; ++k) {
        orbit.push_back(y);
        y = act_T(y);
    }
    std::vector<long> ks;
    for (long k = 0; k < w; ++k) ks.push_back(shortest_power(k, w));
    std::sort(ks.begin(), ks.end(), [](long p, long q) { return std::abs(p) != std::abs(q) ? std::abs(p) < std::abs(q) : p > q; });
    for (long k : ks) {
        Sl2Word s;
        s.push_power(Gen::T, k);
        out.push_back({s, orbit[mod_floor(k, w)]});
    }
    return out;
}

Step then(const Step& s, const Sl2Word& w) {
    Step r{s.word, apply_word(s.origami, w)};
    r.word.append(w);
    return r;
}

Step then_direction(const Step& s, long p, long r) { return then(s, direction_word(p, r)); }

void commit(HlTrace& t, const Step& s, const char* label) {
    t.word.append(s.word);
    t.origami = s.origami;
    t.steps.emplace_back(label);
}

// (a,b,c) -> strictly smaller minimal length, via R and a (1+t, d) direction.
std::optional<Step> shrink_step(const Origami& x) {
    const int n = x.n();
    const int cur = min_length(*one_cylinder_params(x));
    for (const Step& m : cusp_members(x)) {
        auto p = *one_cylinder_params(m.origami);
        std::set<int> ds{std::gcd(p.a, p.b), std::gcd(p.b, p.c), std::gcd(p.a, p.c)};
        Step rx = then(m, Sl2Word::rotation());
        for (int d : ds) {
            for (int t = 0; t < n; ++t) {
                const int delta = std::gcd(1 + t, d);
                Step z = then_direction(rx, (1 + t) / delta, d / delta);
                auto q = one_cyl(z.origami);
                if (q && min_length(*q) < cur) return z;
            }
        }
    }
    return std::nullopt;
}

// One-cylinder (1,b,c), b and c odd, to (1,1,n-2).
std::optional<Step> odd_leg(const Origami& x) {
    const int n = x.n();
    const auto p = *one_cylinder_params(x);
    const OneCylinderParams target{1, 1, n - 2};
    Sl2Word rt2 = Sl2Word::parse("T^2");
    rt2.append(Sl2Word::rotation());
    for (const Step& m : cusp_members(x)) {
        Step y = then(m, Sl2Word({Gen::S}));
        if (horizontal_cylinders(y.origami).size() != 2) continue;
        Step w = then(y, rt2);
        auto cd = horizontal_cylinders(w.origami);
        if (cd.size() != 2 || cd.cylinders[0].height != 1 || cd.cylinders[1].height != 1) continue;
        auto cr = cusp_representative(w.origami);
        Step z{w.word, cr.origami};
        z.word.push_power(Gen::T, shortest_power(cr.k, cusp_width(w.origami)));
        for (int len : {p.b, p.c}) {
            Step e = then_direction(z, (n - len) / 2, 1);
            auto q = one_cyl(e.origami);
            if (q && same_params(*q, target)) return e;
        }
    }
    return std::nullopt;
}

// One-cylinder (1,2b',2c'), b' != c', to (1,2,n-3).
std::optional<Step> even_leg_unequal(const Origami& x) {
    const int n = x.n();
    const auto p = *one_cylinder_params(x);
    const int bs = std::min(p.b, p.c) / 2, cs = std::max(p.b, p.c) / 2;
    const OneCylinderParams target{1, 2, n - 3};
    for (const Step& m : cusp_members(x)) {
        Step y = then_direction(m, cs - bs, 1);
        auto tp = two_cylinder_params(y.origami);
        if (!tp || tp->w1 != 2 || tp->h2 != 1) continue;
        const int ell = tp->w2 - 2;
        const int d = std::gcd(ell, bs);
        for (const Step& ym : cusp_members(y.origami)) {
            Step ys{y.word, ym.origami};
            ys.word.append(ym.word);
            Step u = then_direction(ys, ell / d, bs / d);
            auto q = one_cyl(u.origami);
            if (!q) continue;
            for (const Step& um : cusp_members(u.origami)) {
                Step us{u.word, um.origami};
                us.word.append(um.word);
                Step f = then_direction(us, d, 1);
                auto r = one_cyl(f.origami);
                if (r && same_params(*r, target)) return f;
            }
        }
    }
    return std::nullopt;
}

// One-cylinder (1,b,b), b even, to (1,2,n-3).
std::optional<Step> even_leg_equal(const Origami& x) {
    const int n = x.n();
    const auto p = *one_cylinder_params(x);
    const int bs = p.b / 2;
    const OneCylinderParams target{1, 2, n - 3};
    for (const Step& m : cusp_members(x)) {
        Step y = then_direction(m, bs, 1);
        auto q = one_cyl(y.origami);
        if (!q || min_length(*q) != 2) continue;
        for (const Step& ym : cusp_members(y.origami)) {
            Step ys{y.word, ym.origami};
            ys.word.append(ym.word);
            Step w = then_direction(ys, 2, 1);
            auto tp = two_cylinder_params(w.origami);
            if (!tp) continue;
            auto cr = cusp_representative(w.origami);
            Step z{w.word, cr.origami};
            z.word.push_power(Gen::T, shortest_power(cr.k, cusp_width(w.origami)));
            Step f = then_direction(z, 1, 1);
            auto r = one_cyl(f.origami);
            if (r && same_params(*r, target)) return f;
        }
    }
    return std::nullopt;
}

}  // namespace

HlTrace hl_connect_one_cylinder(const Origami& o) {
    require_hl_input(o);
    auto p0 = one_cyl(o);
    if (!p0) fail(Errc::precondition, "hl_connect_one_cylinder needs a one-cylinder surface");
    const OneCylinderParams target = hl_one_cylinder_target(o);
    HlTrace t{Sl2Word(), o, {}};
    auto done = [&] { return same_params(*one_cylinder_params(t.origami), target); };
    if (done()) return t;
    while (min_length(*one_cylinder_params(t.origami)) != 1) {
        auto s = shrink_step(t.origami);
        if (!s) fail(Errc::not_found, "no (1+t,d) direction shrinks " + t.origami.str());
        commit(t, *s, "shrink");
    }
    if (done()) return t;
    auto p = *one_cylinder_params(t.origami);
    std::optional<Step> leg;
    const char* label;
    if (p.b % 2 == 1) {
        leg = odd_leg(t.origami);
        label = "odd";
    } else if (p.b != p.c) {
        leg = even_leg_unequal(t.origami);
        label = "even";
    } else {
        leg = even_leg_equal(t.origami);
        label = "even-equal";
    }
    if (!leg) fail(Errc::not_found, std::string(label) + " leg failed from " + t.origami.str());
    commit(t, *leg, label);
    return t;
}

}  // namespace sqt
