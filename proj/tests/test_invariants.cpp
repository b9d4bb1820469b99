#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sqt/invariants.hpp"
#include "sqt/orbit_graph.hpp"

using namespace sqt;

namespace {

const Origami kA5 = h2_two_cylinder({1, 1, 0, 4, 1, 0});
const Origami kB5 = h2_two_cylinder({1, 2, 0, 3, 1, 0});
const Origami kQ169 = Origami::parse("((1,2,3,4,5,6)(8,9,10,11,12,13),(6,8,7))");
const Origami kP49 = Origami::parse("((2,3,4,5,6,7)(8,9,10,11,12,13),(1,12,2)(3,14,13))");

// all u in S_n with u h = h^-1 u, u v = v^-1 u and u^2 = 1
int brute_involutions(const Origami& o) {
    const int n = o.n();
    std::vector<int> u(n);
    std::iota(u.begin(), u.end(), 0);
    int count = 0;
    do {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = u[o.h()(x)] == inverse(o.h())(u[x]) && u[o.v()(x)] == inverse(o.v())(u[x]) && u[u[x]] == x;
        count += ok;
    } while (std::next_permutation(u.begin(), u.end()));
    return count;
}

}  // namespace

TEST(Invariants, HlkGolden) {
    EXPECT_EQ(hlk_invariant(kA5), (HlkInvariant{0, {3, 1, 1}}));
    EXPECT_EQ(hlk_invariant(kB5), (HlkInvariant{2, {1, 1, 1}}));
    EXPECT_EQ(hlk_invariant(h2_two_cylinder({1, 1, 0, 3, 1, 0})), (HlkInvariant{1, {2, 2, 0}}));
    EXPECT_EQ(hlk_invariant(h2_one_cylinder(1, 1, 1)), (HlkInvariant{0, {3, 1, 1}}));
    EXPECT_EQ(HlkInvariant::parse("(0, [1,3,1])").str(), "(0,[3,1,1])");
    EXPECT_THROW(HlkInvariant::parse("(0,[1,1])"), Error);
}

TEST(Invariants, Classify) {
    EXPECT_EQ(classify_h2_orbit(kA5), H2Orbit::A);
    EXPECT_EQ(classify_h2_orbit(kB5), H2Orbit::B);
    EXPECT_EQ(classify_h2_orbit(h2_two_cylinder({1, 1, 0, 3, 1, 0})), H2Orbit::Even);
    EXPECT_EQ(classify_h2_orbit(h2_one_cylinder(1, 1, 1)), H2Orbit::N3);
    EXPECT_THROW(classify_h2_orbit(kQ169), Error);
}

TEST(Invariants, Involution) {
    auto t = find_involution(Origami::torus());
    ASSERT_TRUE(t);
    EXPECT_TRUE(t->u.is_identity());
    EXPECT_TRUE(find_involution(kA5));
    EXPECT_EQ(prym_fixed_point_count(kQ169), 4);
    EXPECT_EQ(prym_fixed_point_count(kP49), 2);
    EXPECT_EQ(hlk_invariant(kQ169), (HlkInvariant{0, {1, 1, 1}}));
    EXPECT_EQ(hlk_invariant(kP49), (HlkInvariant{1, {0, 0, 0}}));
}

TEST(InvariantsProperty, InvolutionSearchMatchesBruteForce) {
    std::mt19937 rng(1);
    int without = 0, h4 = 0;
    for (int k = 0; k < 400; ++k) {
        int n = 5 + k % 3;
        std::vector<int> a(n), b(n);
        std::iota(a.begin(), a.end(), 0);
        std::iota(b.begin(), b.end(), 0);
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        Perm h = Perm::from_images(a), v = Perm::from_images(b);
        if (!is_transitive(h, v)) continue;
        Origami o(h, v);
        auto w = find_involution(o);
        int brute = brute_involutions(o);
        ASSERT_EQ(w ? w->candidates : 0, brute) << o.str();
        if (stratum(o) == std::vector<int>{4}) {
            ++h4;
            without += !w;
        }
    }
    EXPECT_GT(without, 0);  // generic H(4) surfaces carry no such involution
    EXPECT_GT(h4, without);
}

TEST(InvariantsProperty, H2FixedPointsAndHlkConstancy) {
    for (int n = 3; n <= 10; ++n) {
        auto census = enumerate_h2_census(n);
        for (const auto& o : census) {
            ASSERT_EQ(prym_fixed_point_count(o), 6) << o.str();
            HlkInvariant k = hlk_invariant(o);
            ASSERT_EQ(k.l0 + k.rest[0] + k.rest[1] + k.rest[2] + 1, 6);
            H2Orbit c = classify_h2_orbit(o);
            ASSERT_EQ(classify_h2_orbit(act_T(o)), c);
            ASSERT_EQ(classify_h2_orbit(act_S(o)), c);
        }
    }
}

TEST(Invariants, OrbitSizeFormula) {
    EXPECT_EQ(expected_orbit_sizes(5).a, 18);
    EXPECT_EQ(expected_orbit_sizes(5).b, 9);
    EXPECT_EQ(expected_orbit_sizes(7).a, 54);
    EXPECT_EQ(expected_orbit_sizes(7).b, 36);
    EXPECT_EQ(expected_orbit_sizes(9).a, 108);
    EXPECT_EQ(expected_orbit_sizes(9).b, 81);
    EXPECT_THROW(expected_orbit_sizes(6), Error);
    EXPECT_THROW(expected_orbit_sizes(3), Error);
}

TEST(InvariantsProperty, OrbitSizeFormulaMatchesBfs) {
    for (int n : {5, 7, 9, 11}) {
        auto e = expected_orbit_sizes(n);
        EXPECT_EQ(static_cast<long long>(build_orbit(h2_two_cylinder({1, 1, 0, n - 1, 1, 0})).size()), e.a) << n;
        EXPECT_EQ(static_cast<long long>(build_orbit(h2_two_cylinder({1, 2, 0, n - 2, 1, 0})).size()), e.b) << n;
    }
}
