#include "sqt/invariants.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

namespace sqt {

std::string HlkInvariant::str() const {
    return "(" + std::to_string(l0) + ",[" + std::to_string(rest[0]) + "," + std::to_string(rest[1]) + "," +
           std::to_string(rest[2]) + "])";
}

HlkInvariant HlkInvariant::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    HlkInvariant k;
    char tail = 0;
    if (std::sscanf(s.c_str(), "(%d,[%d,%d,%d]%c", &k.l0, &k.rest[0], &k.rest[1], &k.rest[2], &tail) != 5 ||
        tail != ')' || s.back() != ')')
        fail(Errc::parse, "bad HLK invariant: " + std::string(text));
    std::sort(k.rest.rbegin(), k.rest.rend());
    return k;
}

namespace {

// Propagate u from u(0) = j; empty result when inconsistent.
std::optional<Perm> propagate(const Origami& o, int j) {
    const int n = o.n();
    const Perm& h = o.h();
    const Perm& v = o.v();
    const Perm hi = inverse(h), vi = inverse(v);
    std::vector<int> u(n, -1), stack{0};
    u[0] = j;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        const std::pair<int, int> moves[4] = {{h(x), hi(u[x])}, {hi(x), h(u[x])}, {v(x), vi(u[x])}, {vi(x), v(u[x])}};
        for (auto [y, uy] : moves) {
            if (u[y] < 0) {
                u[y] = uy;
                stack.push_back(y);
            } else if (u[y] != uy) {
                return std::nullopt;
            }
        }
    }
    std::vector<char> seen(n, 0);
    for (int x : u) {
        if (x < 0 || seen[x]) return std::nullopt;
        seen[x] = 1;
    }
    for (int x = 0; x < n; ++x)
        if (u[u[x]] != x) return std::nullopt;
    return Perm::from_images(std::move(u));
}

}  // namespace

FixedPoints fixed_points(const Origami& o, const Perm& u) {
    const int n = o.n();
    const Perm& h = o.h();
    const Perm& v = o.v();
    FixedPoints f;
    for (int i = 0; i < n; ++i) {
        if (u(i) == i) ++f.centers;
        if (v(u(i)) == i) ++f.horizontal_edges;
        if (h(u(i)) == i) ++f.vertical_edges;
    }
    // vertices: classes of lower-left corners; the lower-left corner of i goes to the
    // upper-right corner of u(i), which is the lower-left corner of v(h(u(i)))
    Perm c = commutator(h, v);
    std::vector<int> cls(n, -1);
    auto cyc = cycles(c);
    for (size_t k = 0; k < cyc.size(); ++k)
        for (int x : cyc[k]) cls[x] = static_cast<int>(k);
    for (size_t k = 0; k < cyc.size(); ++k) {
        int x = cyc[k][0];
        if (cls[v(h(u(x)))] != static_cast<int>(k)) continue;
        if (cyc[k].size() == 1) ++f.regular_vertices;
        else ++f.singular_vertices;
    }
    return f;
}

std::optional<InvolutionWitness> find_involution(const Origami& o) {
    std::optional<InvolutionWitness> best;
    int best_fixed = -1, count = 0;
    for (int j = 0; j < o.n(); ++j) {
        auto u = propagate(o, j);
        if (!u) continue;
        ++count;
        int f = fixed_points(o, *u).total();
        if (f > best_fixed) {
            best_fixed = f;
            best = InvolutionWitness{*u, 0};
        }
    }
    if (best) best->candidates = count;
    return best;
}

namespace {

Perm require_involution(const Origami& o) {
    auto w = find_involution(o);
    if (!w) fail(Errc::precondition, "origami has no involution taking omega to -omega");
    return w->u;
}

}  // namespace

HlkInvariant hlk_invariant(const Origami& o) {
    FixedPoints f = fixed_points(o, require_involution(o));
    HlkInvariant k;
    k.l0 = f.regular_vertices;
    k.rest = {f.centers, f.horizontal_edges, f.vertical_edges};
    std::sort(k.rest.rbegin(), k.rest.rend());
    return k;
}

int prym_fixed_point_count(const Origami& o) { return fixed_points(o, require_involution(o)).total(); }

const char* to_string(H2Orbit k) {
    switch (k) {
        case H2Orbit::A: return "A";
        case H2Orbit::B: return "B";
        case H2Orbit::Even: return "Even";
        case H2Orbit::N3: return "N3";
    }
    return "?";
}

H2Orbit classify_h2_orbit(const Origami& o) {
    if (stratum(o) != std::vector<int>{2}) fail(Errc::precondition, "classify_h2_orbit expects H(2)");
    HlkInvariant k = hlk_invariant(o);
    if (k == HlkInvariant{0, {3, 1, 1}}) return o.n() == 3 ? H2Orbit::N3 : H2Orbit::A;
    if (k == HlkInvariant{2, {1, 1, 1}}) return H2Orbit::B;
    if (k == HlkInvariant{1, {2, 2, 0}}) return H2Orbit::Even;
    fail(Errc::precondition, "HLK invariant " + k.str() + " is not in the H(2) table");
}

OrbitSizes expected_orbit_sizes(int n) {
    if (n < 5 || n % 2 == 0) fail(Errc::invalid_argument, "orbit size formulas need odd n >= 5");
    // n^2 prod_{p | n} (1 - p^-2), computed as prod p^(2(k-1)) (p^2 - 1)
    long long j2 = 1;
    int m = n;
    for (int p = 2; p * p <= m || m > 1; ++p) {
        if (p * p > m) p = m;
        if (m % p) continue;
        int k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        long long t = static_cast<long long>(p) * p - 1;
        for (int i = 1; i < k; ++i) t *= static_cast<long long>(p) * p;
        j2 *= t;
    }
    long long a = 3LL * (n - 1) * j2, b = 3LL * (n - 3) * j2;
    if (a % 16 || b % 16) fail(Errc::precondition, "orbit size formula is not integral");
    return {a / 16, b / 16};
}

}  // namespace sqt
