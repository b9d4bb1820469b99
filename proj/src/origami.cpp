#include "sqt/origami.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace sqt {

Origami::Origami(Perm h, Perm v) : h_(std::move(h)), v_(std::move(v)) {
    if (h_.degree() != v_.degree()) fail(Errc::invalid_argument, "origami permutations have different degrees");
    if (h_.degree() == 0) fail(Errc::invalid_argument, "origami needs at least one square");
    if (!is_transitive(h_, v_)) fail(Errc::invalid_argument, "origami permutations are not transitive");
}

namespace {

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t = trim(item);
        if (t.empty()) fail(Errc::parse, "empty entry in image list");
        size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(t, &used);
        } catch (const std::exception&) {
            fail(Errc::parse, "bad integer in image list: " + t);
        }
        if (used != t.size()) fail(Errc::parse, "bad integer in image list: " + t);
        out.push_back(x);
    }
    return out;
}

}  // namespace

Origami Origami::parse(std::string_view text) {
    std::string s = trim(text);
    if (s.empty()) fail(Errc::parse, "empty origami literal");
    try {
        if (s.find(';') != std::string::npos && s.find('(') == std::string::npos) {
            std::stringstream ss(s);
            std::string ns, hs, vs, extra;
            if (!std::getline(ss, ns, ';') || !std::getline(ss, hs, ';') || !std::getline(ss, vs, ';'))
                fail(Errc::parse, "compact origami needs n;h;v");
            if (std::getline(ss, extra) && !trim(extra).empty()) fail(Errc::parse, "trailing data in origami");
            int n = std::stoi(trim(ns));
            auto hi = parse_int_list(hs), vi = parse_int_list(vs);
            if (static_cast<int>(hi.size()) != n || static_cast<int>(vi.size()) != n)
                fail(Errc::parse, "compact origami image lists must have n entries");
            return Origami(Perm::from_images1(hi), Perm::from_images1(vi));
        }
        std::string hs, vs;
        if (size_t semi = s.find(';'); semi != std::string::npos) {
            hs = trim(s.substr(0, semi));
            vs = trim(s.substr(semi + 1));
        } else {
            // ((cycles),(cycles)): split at the depth-1 comma
            if (s.front() != '(' || s.back() != ')') fail(Errc::parse, "origami literal must be a pair");
            std::string inner = s.substr(1, s.size() - 2);
            int depth = 0;
            size_t split = std::string::npos;
            for (size_t i = 0; i < inner.size(); ++i) {
                if (inner[i] == '(') ++depth;
                else if (inner[i] == ')') --depth;
                else if (inner[i] == ',' && depth == 0) {
                    split = i;
                    break;
                }
            }
            if (split == std::string::npos) fail(Errc::parse, "origami literal must contain two permutations");
            hs = trim(inner.substr(0, split));
            vs = trim(inner.substr(split + 1));
        }
        Perm hp = Perm::parse(hs), vp = Perm::parse(vs);
        int n = std::max({hp.degree(), vp.degree(), 1});
        return Origami(Perm::parse(hs, n), Perm::parse(vs, n));
    } catch (const Error& e) {
        if (e.code() == Errc::invalid_argument) fail(Errc::parse, e.what());
        throw;
    } catch (const std::exception& e) {
        fail(Errc::parse, std::string("bad origami literal: ") + e.what());
    }
}

std::string Origami::str() const { return "(" + h_.str() + "," + v_.str() + ")"; }

std::string Origami::compact() const {
    std::string out = std::to_string(n()) + ";";
    for (int i = 0; i < n(); ++i) out += (i ? "," : "") + std::to_string(h_(i) + 1);
    out += ";";
    for (int i = 0; i < n(); ++i) out += (i ? "," : "") + std::to_string(v_(i) + 1);
    return out;
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

Mat2 gen_matrix(Gen g) {
    switch (g) {
        case Gen::T: return {1, 1, 0, 1};
        case Gen::Ti: return {1, -1, 0, 1};
        case Gen::S: return {1, 0, 1, 1};
        case Gen::Si: return {1, 0, -1, 1};
    }
    return {1, 0, 0, 1};
}

namespace {

Gen gen_inverse(Gen g) {
    switch (g) {
        case Gen::T: return Gen::Ti;
        case Gen::Ti: return Gen::T;
        case Gen::S: return Gen::Si;
        case Gen::Si: return Gen::S;
    }
    return g;
}

}  // namespace

Sl2Word Sl2Word::rotation() { return Sl2Word({Gen::S, Gen::Ti, Gen::S}); }

Sl2Word Sl2Word::parse(std::string_view text) {
    Sl2Word w;
    std::stringstream ss{std::string(text)};
    std::string tok;
    while (ss >> tok) {
        if (tok == "R") {
            w.append(rotation());
            continue;
        }
        if (tok[0] != 'T' && tok[0] != 'S') fail(Errc::parse, "word tokens are T or S powers: " + tok);
        Gen base = tok[0] == 'T' ? Gen::T : Gen::S;
        long k = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^' || tok.size() < 3) fail(Errc::parse, "bad word token: " + tok);
            size_t used = 0;
            try {
                k = std::stol(tok.substr(2), &used);
            } catch (const std::exception&) {
                fail(Errc::parse, "bad exponent in word token: " + tok);
            }
            if (used != tok.size() - 2) fail(Errc::parse, "bad exponent in word token: " + tok);
        }
        w.push_power(base, k);
    }
    return w;
}

Mat2 Sl2Word::matrix() const {
    Mat2 m{1, 0, 0, 1};
    for (Gen g : tokens_) m = mat_mul(gen_matrix(g), m);
    return m;
}

Sl2Word Sl2Word::inverse() const {
    std::vector<Gen> r;
    for (auto it = tokens_.rbegin(); it != tokens_.rend(); ++it) r.push_back(gen_inverse(*it));
    return Sl2Word(std::move(r));
}

void Sl2Word::push_power(Gen positive, long k) {
    Gen g = positive;
    if (k < 0) {
        g = gen_inverse(positive);
        k = -k;
    }
    for (long i = 0; i < k; ++i) tokens_.push_back(g);
}

void Sl2Word::append(const Sl2Word& w) { tokens_.insert(tokens_.end(), w.tokens_.begin(), w.tokens_.end()); }

std::string Sl2Word::str() const {
    std::string out;
    size_t i = 0;
    while (i < tokens_.size()) {
        char base = (tokens_[i] == Gen::T || tokens_[i] == Gen::Ti) ? 'T' : 'S';
        long k = 0;
        while (i < tokens_.size()) {
            Gen g = tokens_[i];
            char b = (g == Gen::T || g == Gen::Ti) ? 'T' : 'S';
            if (b != base) break;
            long s = (g == Gen::T || g == Gen::S) ? 1 : -1;
            if (k != 0 && (k > 0) != (s > 0)) break;
            k += s;
            ++i;
        }
        if (!out.empty()) out += ' ';
        out += base;
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

Origami act_T(const Origami& o) { return Origami(o.h(), compose(o.v(), inverse(o.h()))); }
Origami act_T_inv(const Origami& o) { return Origami(o.h(), compose(o.v(), o.h())); }
Origami act_S(const Origami& o) { return Origami(compose(o.h(), inverse(o.v())), o.v()); }
Origami act_S_inv(const Origami& o) { return Origami(compose(o.h(), o.v()), o.v()); }

Origami act(const Origami& o, Gen g) {
    switch (g) {
        case Gen::T: return act_T(o);
        case Gen::Ti: return act_T_inv(o);
        case Gen::S: return act_S(o);
        case Gen::Si: return act_S_inv(o);
    }
    return o;
}

Origami act_T_pow(const Origami& o, long k) {
    return Origami(o.h(), compose(o.v(), power(o.h(), -k)));
}

Origami apply_word(const Origami& o, const Sl2Word& w) {
    Origami x = o;
    for (Gen g : w.tokens()) x = act(x, g);
    return x;
}

Origami relabel(const Origami& o, const Perm& sigma) {
    return Origami(relabel(o.h(), sigma), relabel(o.v(), sigma));
}

size_t CanonKeyHash::operator()(const CanonKey& k) const noexcept {
    size_t x = 1469598103934665603ull;
    for (auto c : k) {
        x ^= c;
        x *= 1099511628211ull;
    }
    return x;
}

namespace {

// Relabel by first visit from `start` exploring h, h^-1, v, v^-1; returns the
// (h-images, v-images) sequence, or stops early once it exceeds `best`.
bool relabeled_key(const std::vector<int>& h, const std::vector<int>& hi, const std::vector<int>& v,
                   const std::vector<int>& vi, int start, std::vector<int>& lab, std::vector<int>& order,
                   CanonKey& out) {
    const int n = static_cast<int>(h.size());
    std::fill(lab.begin(), lab.end(), -1);
    order.clear();
    lab[start] = 0;
    order.push_back(start);
    for (size_t k = 0; k < order.size(); ++k) {
        int x = order[k];
        for (int y : {h[x], hi[x], v[x], vi[x]}) {
            if (lab[y] < 0) {
                lab[y] = static_cast<int>(order.size());
                order.push_back(y);
            }
        }
    }
    if (static_cast<int>(order.size()) != n) return false;
    out.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        out[i] = static_cast<std::uint16_t>(lab[h[order[i]]]);
        out[n + i] = static_cast<std::uint16_t>(lab[v[order[i]]]);
    }
    return true;
}

}  // namespace

CanonKey canonical_key(const Origami& o) {
    const int n = o.n();
    if (n > 65535) fail(Errc::resource, "origami too large for canonical key");
    const auto& h = o.h().images();
    const auto& v = o.v().images();
    std::vector<int> hi(n), vi(n);
    for (int i = 0; i < n; ++i) {
        hi[h[i]] = i;
        vi[v[i]] = i;
    }
    std::vector<int> lab(n), order;
    order.reserve(n);
    CanonKey best, cur;
    for (int s = 0; s < n; ++s) {
        if (!relabeled_key(h, hi, v, vi, s, lab, order, cur)) continue;
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

Origami canonical_form(const Origami& o) {
    CanonKey k = canonical_key(o);
    const int n = o.n();
    std::vector<int> hh(k.begin(), k.begin() + n), vv(k.begin() + n, k.end());
    return Origami(Perm::from_images(std::move(hh)), Perm::from_images(std::move(vv)));
}

bool same_surface(const Origami& a, const Origami& b) {
    return a.n() == b.n() && canonical_key(a) == canonical_key(b);
}

std::vector<int> stratum(const Origami& o) {
    std::vector<int> z;
    for (int len : cycle_type(commutator(o.h(), o.v())))
        if (len >= 2) z.push_back(len - 1);
    return z;
}

int genus(const Origami& o) {
    int total = 0;
    for (int k : stratum(o)) total += k;
    return total / 2 + 1;
}

CylinderDecomposition horizontal_cylinders(const Origami& o) {
    const int n = o.n();
    const Perm& h = o.h();
    const Perm& v = o.v();
    const Perm vi = inverse(v);
    const Perm hi = inverse(h);

    std::vector<int> row_id(n, -1);
    std::vector<std::vector<int>> rows;
    for (const auto& c : cycles(h)) {
        for (int x : c) row_id[x] = static_cast<int>(rows.size());
        rows.push_back(c);
    }
    const int R = static_cast<int>(rows.size());
    // straight[r]: the top of row r is glued to a single row without a corner
    std::vector<char> straight(R, 1);
    for (int r = 0; r < R; ++r)
        for (int x : rows[r])
            if (v(h(x)) != h(v(x))) {
                straight[r] = 0;
                break;
            }
    std::vector<char> has_below_straight(R, 0);
    for (int r = 0; r < R; ++r)
        if (straight[r]) has_below_straight[row_id[v(rows[r][0])]] = 1;

    CylinderDecomposition cd;
    cd.cyl_of.assign(n, -1);
    cd.row_of.assign(n, -1);
    cd.col_of.assign(n, -1);

    std::vector<char> used(R, 0);
    std::vector<int> bottom_rows;
    for (int r = 0; r < R; ++r)
        if (!has_below_straight[r]) bottom_rows.push_back(r);
    if (bottom_rows.empty()) bottom_rows.push_back(row_id[0]);  // unbranched cover of the torus

    // first pass: rows of each cylinder, with a provisional bottom start
    struct Raw {
        std::vector<int> row_list;
    };
    std::vector<Raw> raw;
    for (int r0 : bottom_rows) {
        Raw c;
        int r = r0;
        while (true) {
            c.row_list.push_back(r);
            used[r] = 1;
            if (!straight[r]) break;
            int next = row_id[v(rows[r][0])];
            if (next == r0) break;
            r = next;
        }
        raw.push_back(std::move(c));
    }
    for (size_t ci = 0; ci < raw.size(); ++ci)
        for (int r : raw[ci].row_list)
            for (int x : rows[r]) cd.cyl_of[x] = static_cast<int>(ci);

    const int C = static_cast<int>(raw.size());
    cd.cylinders.resize(C);
    // breaks on the bottom of a row: below(x) and below(h^-1 x) not adjacent
    auto bottom_break = [&](int x) { return h(vi(hi(x))) != vi(x); };
    auto top_break = [&](int x) { return h(v(hi(x))) != v(x); };

    for (int ci = 0; ci < C; ++ci) {
        Cylinder& cy = cd.cylinders[ci];
        const auto& rl = raw[ci].row_list;
        const int w = static_cast<int>(rows[rl[0]].size());
        const int hgt = static_cast<int>(rl.size());
        cy.width = w;
        cy.height = hgt;
        // bottom square candidates; choose the reference start
        std::vector<int> bottom_row = rows[rl[0]];
        int top_row_id = rl.back();
        std::vector<int> bbreaks, tbreaks;
        for (int x : bottom_row)
            if (bottom_break(x)) bbreaks.push_back(x);
        for (int x : rows[top_row_id])
            if (top_break(x)) tbreaks.push_back(x);
        int ref = -1;
        // self-glued interval: longest, then smallest starting label
        {
            int best_len = -1;
            for (int s : bbreaks) {
                if (cd.cyl_of[vi(s)] != ci) continue;
                int len = 1;
                for (int x = h(s); x != s && !bottom_break(x); x = h(x)) ++len;
                if (len > best_len || (len == best_len && s < ref)) {
                    best_len = len;
                    ref = s;
                }
            }
        }
        if (ref < 0) {
            if (bbreaks.empty()) ref = *std::min_element(bottom_row.begin(), bottom_row.end());
            else ref = *std::min_element(bbreaks.begin(), bbreaks.end());
        }
        cy.bottom.clear();
        for (int k = 0, x = ref; k < w; ++k, x = h(x)) cy.bottom.push_back(x);
        cy.rows.assign(hgt, std::vector<int>(w));
        for (int j = 0; j < w; ++j) {
            int x = cy.bottom[j];
            for (int k = 0; k < hgt; ++k) {
                cy.rows[k][j] = x;
                cd.row_of[x] = k;
                cd.col_of[x] = j;
                x = v(x);
            }
        }
    }

    for (int ci = 0; ci < C; ++ci) {
        Cylinder& cy = cd.cylinders[ci];
        const int w = cy.width;
        const auto& toprow = cy.rows.back();
        // top intervals
        cy.top.clear();
        int start = -1;
        for (int j = 0; j < w; ++j)
            if (top_break(toprow[j])) {
                start = j;
                break;
            }
        if (start < 0) {
            int above = v(toprow[0]);
            cy.top.push_back({0, w, cd.cyl_of[above], cd.col_of[above]});
        } else {
            int j = start;
            do {
                int len = 1;
                while (!top_break(toprow[(j + len) % w])) ++len;
                int above = v(toprow[j]);
                cy.top.push_back({j, len, cd.cyl_of[above], cd.col_of[above]});
                j = (j + len) % w;
            } while (j != start);
        }
        cy.bottom_iv.clear();
        const auto& botrow = cy.rows.front();
        start = -1;
        for (int j = 0; j < w; ++j)
            if (bottom_break(botrow[j])) {
                start = j;
                break;
            }
        if (start < 0) {
            int below = vi(botrow[0]);
            cy.bottom_iv.push_back({0, w, cd.cyl_of[below], cd.col_of[below]});
        } else {
            int j = start;
            do {
                int len = 1;
                while (!bottom_break(botrow[(j + len) % w])) ++len;
                int below = vi(botrow[j]);
                cy.bottom_iv.push_back({j, len, cd.cyl_of[below], cd.col_of[below]});
                j = (j + len) % w;
            } while (j != start);
        }
        // top reference: partner of the bottom reference interval when self-glued,
        // a lone top corner, else the nearest top corner to the right
        int below0 = vi(botrow[0]);
        int tref;
        if (cd.cyl_of[below0] == ci && cd.row_of[below0] == cy.height - 1) {
            tref = cd.col_of[below0];
        } else {
            std::vector<int> tcols;
            for (const auto& iv : cy.top) tcols.push_back(iv.col);
            if (cy.top.size() == 1 && start < 0) tcols = {cd.col_of[below0]};
            tref = w;
            for (int c : tcols) tref = std::min(tref, ((c % w) + w) % w);
            if (tref == w) tref = 0;
        }
        cy.top_ref = tref;
        cy.twist = tref;
    }
    return cd;
}

Origami from_cylinders(const std::vector<CylinderSpec>& cyls) {
    std::vector<int> base;
    int n = 0;
    for (const auto& c : cyls) {
        if (c.width <= 0 || c.height <= 0) fail(Errc::invalid_argument, "cylinder dimensions must be positive");
        base.push_back(n);
        n += c.width * c.height;
    }
    if (n == 0) fail(Errc::invalid_argument, "no cylinders");
    std::vector<int> h(n, -1), v(n, -1);
    for (size_t ci = 0; ci < cyls.size(); ++ci) {
        const auto& c = cyls[ci];
        for (int r = 0; r < c.height; ++r)
            for (int j = 0; j < c.width; ++j) {
                int x = base[ci] + r * c.width + j;
                h[x] = base[ci] + r * c.width + (j + 1) % c.width;
                if (r + 1 < c.height) v[x] = x + c.width;
            }
        int covered = 0;
        for (const auto& iv : c.top) {
            if (iv.partner < 0 || iv.partner >= static_cast<int>(cyls.size()))
                fail(Errc::invalid_argument, "interval partner out of range");
            const auto& p = cyls[iv.partner];
            for (int k = 0; k < iv.len; ++k) {
                int j = ((iv.col + k) % c.width + c.width) % c.width;
                int pj = ((iv.partner_col + k) % p.width + p.width) % p.width;
                int x = base[ci] + (c.height - 1) * c.width + j;
                if (v[x] >= 0) fail(Errc::invalid_argument, "overlapping top intervals");
                v[x] = base[iv.partner] + pj;
            }
            covered += iv.len;
        }
        if (covered != c.width) fail(Errc::invalid_argument, "top intervals must cover the cylinder");
    }
    return Origami(Perm::from_images(std::move(h)), Perm::from_images(std::move(v)));
}

Origami h2_one_cylinder(int a, int b, int c) {
    if (a <= 0 || b <= 0 || c <= 0) fail(Errc::invalid_argument, "one-cylinder lengths must be positive");
    const int n = a + b + c;
    // bottom a|b|c, top a|c|b
    return from_cylinders({{n, 1, {{0, a, 0, 0}, {a, c, 0, a + b}, {a + c, b, 0, a}}}});
}

std::optional<OneCylinderParams> one_cylinder_params(const Origami& o) {
    auto z = stratum(o);
    if (z != std::vector<int>{2}) fail(Errc::precondition, "one_cylinder_params expects an H(2) origami");
    auto cd = horizontal_cylinders(o);
    if (cd.size() != 1) return std::nullopt;
    const auto& cy = cd.cylinders[0];
    if (cy.bottom_iv.size() != 3) return std::nullopt;
    std::array<int, 3> l{cy.bottom_iv[0].len, cy.bottom_iv[1].len, cy.bottom_iv[2].len};
    std::array<int, 3> best = l;
    for (int r = 1; r < 3; ++r) {
        std::array<int, 3> t{l[r], l[(r + 1) % 3], l[(r + 2) % 3]};
        best = std::min(best, t);
    }
    return OneCylinderParams{best[0], best[1], best[2]};
}

Origami h2_two_cylinder(const TwoCylinderParams& p) {
    if (p.w1 <= 0 || p.h1 <= 0 || p.w2 <= 0 || p.h2 <= 0 || p.w1 >= p.w2)
        fail(Errc::invalid_argument, "two-cylinder parameters need 0 < w1 < w2 and positive heights");
    // cylinder 0 narrow, cylinder 1 wide
    return from_cylinders({{p.w1, p.h1, {{p.t1, p.w1, 1, 0}}},
                           {p.w2, p.h2, {{p.t2, p.w1, 0, 0}, {p.t2 + p.w1, p.w2 - p.w1, 1, p.w1}}}});
}

std::optional<TwoCylinderParams> two_cylinder_params(const Origami& o) {
    auto cd = horizontal_cylinders(o);
    if (cd.size() != 2) return std::nullopt;
    const auto* a = &cd.cylinders[0];
    const auto* b = &cd.cylinders[1];
    if (a->width == b->width) return std::nullopt;
    if (a->width > b->width) std::swap(a, b);
    if (a->top.size() != 1 || a->bottom_iv.size() != 1) return std::nullopt;
    return TwoCylinderParams{a->width, a->height, a->twist, b->width, b->height, b->twist};
}

bool twists_normalized(const CylinderDecomposition& cd) {
    for (const auto& c : cd.cylinders)
        if (c.twist >= std::gcd(c.width, c.height)) return false;
    return true;
}

long cusp_width(const Origami& o) {
    const CanonKey k0 = canonical_key(o);
    Origami x = act_T(o);
    long i = 1;
    while (canonical_key(x) != k0) {
        x = act_T(x);
        ++i;
    }
    return i;
}

CuspRep cusp_representative(const Origami& o) {
    const long w = cusp_width(o);
    std::vector<long> hits;
    Origami x = o;
    std::vector<Origami> orbit;
    for (long k = 0; k < w; ++k) {
        auto cd = horizontal_cylinders(x);
        if (twists_normalized(cd)) hits.push_back(k);
        orbit.push_back(x);
        x = act_T(x);
    }
    if (hits.size() == 1) return {orbit[hits[0]], hits[0]};
    long best = 0;
    CanonKey bk = canonical_key(orbit[0]);
    for (long k = 1; k < w; ++k) {
        CanonKey ck = canonical_key(orbit[k]);
        if (ck < bk) {
            bk = ck;
            best = k;
        }
    }
    return {orbit[best], best};
}

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

Sl2Word direction_word(long p, long r) {
    if (p == 0 && r == 0) fail(Errc::invalid_argument, "zero direction");
    Sl2Word w;
    if (p < 0) {
        p = -p;
        r = -r;
    }
    if (p == 0) {
        // vertical: one T step tilts it
        w.push(Gen::T);
        p = r;
        if (p < 0) {
            p = -p;
            r = -r;
        }
    }
    while (r != 0) {
        if (r > 0) {
            // T^-k with k chosen so that 0 < p - k r <= r
            long k = ceil_div(p, r) - 1;
            w.push_power(Gen::T, -k);
            p -= k * r;
        }
        // S^-m with 0 <= r - m p < p
        long m = floor_div(r, p);
        w.push_power(Gen::S, -m);
        r -= m * p;
    }
    return w;
}

Horizontalized make_direction_horizontal(const Origami& o, long p, long r) {
    if (r < 0 || (r == 0 && p == 0)) fail(Errc::invalid_argument, "direction needs r >= 0");
    Sl2Word w = direction_word(p, r);
    Origami x = apply_word(o, w);
    auto cr = cusp_representative(x);
    long cw = cusp_width(x);
    long k = cr.k;
    if (k > cw / 2) k -= cw;
    w.push_power(Gen::T, k);
    return {cr.origami, w};
}

}  // namespace sqt
