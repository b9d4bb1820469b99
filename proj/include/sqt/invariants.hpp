#pragma once

#include <array>
#include <optional>
#include <string>

#include "sqt/origami.hpp"

namespace sqt {

struct HlkInvariant {
    int l0 = 0;
    std::array<int, 3> rest{};  // sorted descending

    bool operator==(const HlkInvariant&) const = default;
    auto operator<=>(const HlkInvariant&) const = default;
    std::string str() const;  // "(l0,[a,b,c])"
    static HlkInvariant parse(std::string_view text);
};

// Fixed points of the rotation by pi, grouped by the 2-torsion point below them.
struct FixedPoints {
    int centers = 0;             // over (1/2,1/2)
    int horizontal_edges = 0;    // midpoints of horizontal edges, over (1/2,0)
    int vertical_edges = 0;      // midpoints of vertical edges, over (0,1/2)
    int regular_vertices = 0;    // over 0
    int singular_vertices = 0;   // fixed cone points
    int total() const {
        return centers + horizontal_edges + vertical_edges + regular_vertices + singular_vertices;
    }
};

// u maps square i to square u(i) turned by pi: u h = h^-1 u and u v = v^-1 u.
struct InvolutionWitness {
    Perm u;
    int candidates = 0;  // number of consistent involutions found
};

std::optional<InvolutionWitness> find_involution(const Origami& o);
FixedPoints fixed_points(const Origami& o, const Perm& u);

HlkInvariant hlk_invariant(const Origami& o);
int prym_fixed_point_count(const Origami& o);

enum class H2Orbit { A, B, Even, N3 };
const char* to_string(H2Orbit k);
H2Orbit classify_h2_orbit(const Origami& o);

struct OrbitSizes {
    long long a, b;
};
OrbitSizes expected_orbit_sizes(int n);

}  // namespace sqt
