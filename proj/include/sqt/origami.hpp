#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqt/perm.hpp"

namespace sqt {

// h(i): square to the right of i, v(i): square above i.
class Origami {
public:
    Origami() = default;
    Origami(Perm h, Perm v);
    static Origami torus() { return Origami(Perm(1), Perm(1)); }
    // "((1,2)(3,4),(1,3))", "n;h-images;v-images" or "(1,2)(3,4) ; (1,3)"
    static Origami parse(std::string_view text);

    int n() const { return h_.degree(); }
    const Perm& h() const { return h_; }
    const Perm& v() const { return v_; }

    std::string str() const;      // "((1,2),(1,3))"
    std::string compact() const;  // "n;h-images;v-images"

    bool operator==(const Origami&) const = default;
    auto operator<=>(const Origami&) const = default;

private:
    Perm h_, v_;
};

enum class Gen : std::uint8_t { T, Ti, S, Si };

using Mat2 = std::array<long long, 4>;  // row-major {a, b, c, d}

Mat2 mat_mul(const Mat2& x, const Mat2& y);
Mat2 gen_matrix(Gen g);

// Tokens are applied left to right; matrix() = M_last * ... * M_first.
class Sl2Word {
public:
    Sl2Word() = default;
    explicit Sl2Word(std::vector<Gen> tokens) : tokens_(std::move(tokens)) {}
    static Sl2Word parse(std::string_view text);
    static Sl2Word rotation();  // R = S T^-1 S

    const std::vector<Gen>& tokens() const { return tokens_; }
    size_t length() const { return tokens_.size(); }
    bool empty() const { return tokens_.empty(); }
    Mat2 matrix() const;
    Sl2Word inverse() const;

    void push(Gen g) { tokens_.push_back(g); }
    void push_power(Gen positive, long k);  // positive is T or S
    void append(const Sl2Word& w);

    std::string str() const;  // "T^-2 S^-1", application order

    bool operator==(const Sl2Word&) const = default;

private:
    std::vector<Gen> tokens_;
};

Origami act(const Origami& o, Gen g);
Origami act_T(const Origami& o);
Origami act_T_inv(const Origami& o);
Origami act_S(const Origami& o);
Origami act_S_inv(const Origami& o);
Origami act_T_pow(const Origami& o, long k);
Origami apply_word(const Origami& o, const Sl2Word& w);
Origami relabel(const Origami& o, const Perm& sigma);

using CanonKey = std::vector<std::uint16_t>;
struct CanonKeyHash {
    size_t operator()(const CanonKey& k) const noexcept;
};

Origami canonical_form(const Origami& o);
CanonKey canonical_key(const Origami& o);
bool same_surface(const Origami& a, const Origami& b);

// zero orders, descending; empty for the torus
std::vector<int> stratum(const Origami& o);
int genus(const Origami& o);

// Boundary piece of a cylinder: columns [col, col+len) of this side are glued to
// columns [partner_col, partner_col+len) of the opposite side of cylinder `partner`.
struct Interval {
    int col;
    int len;
    int partner;
    int partner_col;
};

struct Cylinder {
    int width = 0;
    int height = 0;
    int twist = 0;
    // bottom row squares, column order starting at the bottom reference column
    std::vector<int> bottom;
    // rows[k][j]: square in row k, column j (row 0 is bottom)
    std::vector<std::vector<int>> rows;
    std::vector<Interval> top;     // in top-row columns, glued to bottoms
    std::vector<Interval> bottom_iv;  // in bottom-row columns, glued to tops
    int top_ref = 0;               // column of the top reference singular point
};

struct CylinderDecomposition {
    std::vector<Cylinder> cylinders;
    // cylinder index and (row, column) of every square
    std::vector<int> cyl_of;
    std::vector<int> row_of;
    std::vector<int> col_of;
    size_t size() const { return cylinders.size(); }
};

CylinderDecomposition horizontal_cylinders(const Origami& o);

// Build an origami from horizontal cylinder data; bottoms are implied by tops.
struct CylinderSpec {
    int width;
    int height;
    std::vector<Interval> top;
};
Origami from_cylinders(const std::vector<CylinderSpec>& cyls);

struct OneCylinderParams {
    int a, b, c;
};
Origami h2_one_cylinder(int a, int b, int c);
std::optional<OneCylinderParams> one_cylinder_params(const Origami& o);

struct TwoCylinderParams {
    int w1, h1, t1;  // the narrow cylinder
    int w2, h2, t2;  // the wide cylinder
};
Origami h2_two_cylinder(const TwoCylinderParams& p);
std::optional<TwoCylinderParams> two_cylinder_params(const Origami& o);

struct CuspRep {
    Origami origami;
    long k;  // origami = T^k(input)
};
CuspRep cusp_representative(const Origami& o);
bool twists_normalized(const CylinderDecomposition& cd);
long cusp_width(const Origami& o);

struct Horizontalized {
    Origami origami;
    Sl2Word word;
};
// (p, r) is a primitive or non-primitive direction vector
Sl2Word direction_word(long p, long r);
Horizontalized make_direction_horizontal(const Origami& o, long p, long r);

}  // namespace sqt
