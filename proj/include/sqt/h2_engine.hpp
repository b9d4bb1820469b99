#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqt/origami.hpp"

namespace sqt {

// q = 0 encodes q = infinity throughout the butterfly APIs.
constexpr long kQInf = 0;
std::string q_str(long q);

struct H2Prototype {
    long long a = 0, b = 0, c = 0, e = 0;

    long long D() const { return e * e + 4 * b * c; }
    bool reduced() const { return a == 0 && c == 1; }
    std::string str() const;  // "(a,b,c,e)"
    static H2Prototype parse(std::string_view text);
    bool operator==(const H2Prototype&) const = default;
    auto operator<=>(const H2Prototype&) const = default;
};

bool is_valid(const H2Prototype& p);
void check_discriminant(long long D);  // D >= 5, D = 0,1 mod 4

std::vector<H2Prototype> enumerate_prototypes(long long D);
std::vector<long long> reduced_set(long long D);
std::vector<long> admissible_q(const H2Prototype& p);  // ascending finite values, then kQInf
bool is_admissible(const H2Prototype& p, long q);

// Column-reduce N = [[n00, n01], [n10, n11]] to [[x*, +-y], [g, 0]] with g > 0.
struct ReducedBasis {
    long long first_x;   // x*
    long long second_x;  // +-y
    long long g;
};
ReducedBasis reduce_basis(long long n00, long long n01, long long n10, long long n11);
long long mod_floor(long long a, long long m);

H2Prototype butterfly(const H2Prototype& p, long q);

struct ReduceTrace {
    H2Prototype result;
    int steps = 0;
    std::vector<H2Prototype> chain;  // starts at the input
};
ReduceTrace reduce_to_reduced(const H2Prototype& p);

struct SpinComponents {
    long long D = 0;
    std::vector<std::vector<long long>> components;  // sorted e-values
    bool exceptional = false;
};
SpinComponents spin_components(long long D);
int expected_spin_component_count(long long D);

H2Prototype origami_to_prototype(const Origami& o);
Origami prototype_to_origami(const H2Prototype& p, long long n);

struct Realized {
    Sl2Word word;
    Origami origami;
};
Realized realize_butterfly_word(const Origami& o, long q);

// two-cylinder to one-cylinder reduction and one-cylinder connection (prime n)
enum class HlCase { I, II, III, IV };
const char* to_string(HlCase c);
HlCase hl_case(const Origami& o);

struct HlTrace {
    Sl2Word word;
    Origami origami;
    std::vector<std::string> steps;  // case labels / procedure names in order
};
HlTrace hl_reduce_to_one_cylinder(const Origami& o);
HlTrace hl_connect_one_cylinder(const Origami& o);
// (1,1,n-2) or (1,2,n-3), whichever shares the orbit of o
OneCylinderParams hl_one_cylinder_target(const Origami& o);

}  // namespace sqt
