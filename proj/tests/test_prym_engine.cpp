#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "sqt/error.hpp"
#include "sqt/h2_engine.hpp"
#include "sqt/invariants.hpp"
#include "sqt/orbit_graph.hpp"
#include "sqt/prym_engine.hpp"

using namespace sqt;

namespace {

const char* kQ169 = "((1,2,3,4,5,6)(8,9,10,11,12,13),(6,8,7))";
const char* kQ169Image = "((1,2,3,4,5)(6,7)(8,9)(10,11)(12,13),(1,6,8,2,7,9)(3,13,11,4,12,10))";
const char* kP49 = "((2,3,4,5,6,7)(8,9,10,11,12,13),(1,12,2)(3,14,13))";
const char* kP49Image = "((1,2)(3,4,5,6,7)(8,9,10,11,12)(13,14),(1,9,3)(2,10,4)(5,13,11)(6,14,12))";

int ceil_log2(long long x) {
    int k = 0;
    while ((1LL << k) < x) ++k;
    return k;
}

// Butterfly image recomputed from the key minor by a lattice search:
// every vector of the lattice with y = h' has x = t' mod gcd(w', h').
struct Image {
    long long w, h, t, e;
};

Image brute_butterfly(long long w, long long h, long long t, long long e, long long D, long q, long long mult, bool h6) {
    long long ux, uy, vx, vy, e2, h2;
    if (q == kQInf) {
        e2 = -e - 4 * h;
        h2 = std::gcd(h, t);
        ux = 0, uy = -h;
        vx = h6 ? w - 2 * e - 4 * h : w - e - 2 * h, vy = t;
    } else {
        e2 = -e - 4 * q * h;
        h2 = std::gcd(q * h, w + q * t);
        ux = h, uy = -q * h;
        vx = h6 ? -t - 2 * e - 4 * q * h : -e - t - 2 * q * h, vy = w + q * t;
    }
    const long long w2 = (D - e2 * e2) / (mult * h2);
    for (long long i = -400; i <= 400; ++i)
        for (long long j = -400; j <= 400; ++j)
            if (i * uy + j * vy == h2) return {w2, h2, mod_floor(i * ux + j * vx, std::gcd(w2, h2)), e2};
    return {w2, h2, -1, e2};
}

bool type_a(const Origami& o, int locus) {
    auto p = prym_shape_params(o);
    if (!p) return false;
    return locus == 4 ? p->shape == PrymShape::APlus || p->shape == PrymShape::AMinus : p->shape == PrymShape::A6;
}

bool type_b(const Origami& o, int locus) {
    auto p = prym_shape_params(o);
    return p && p->shape == (locus == 4 ? PrymShape::B4 : PrymShape::B6);
}

std::vector<OrbitGraph> prym_orbits(int locus, int n) {
    std::vector<OrbitGraph> out;
    for (const auto& s : prym_orbit_seeds(locus, n)) out.push_back(build_orbit(s));
    return out;
}

template <class P>
int component_of(const std::vector<std::vector<P>>& comps, const P& p) {
    for (size_t i = 0; i < comps.size(); ++i)
        if (std::binary_search(comps[i].begin(), comps[i].end(), p)) return static_cast<int>(i);
    return -1;
}

int component_of_e(const std::vector<std::vector<long long>>& comps, long long e) {
    for (size_t i = 0; i < comps.size(); ++i)
        if (std::count(comps[i].begin(), comps[i].end(), e)) return static_cast<int>(i);
    return -1;
}

long long mod8(long long e) { return mod_floor(e, 8); }

}  // namespace

// ---- shapes ----

TEST(PrymShapes, GoldenSurfacesMatchBuilders) {
    EXPECT_TRUE(same_surface(Origami::parse(kQ169), prym_shape_origami({PrymShape::APlus, 1, 1, 0, 6, 1, 0})));
    EXPECT_TRUE(same_surface(Origami::parse(kQ169Image), prym_shape_origami({PrymShape::AMinus, 2, 2, 1, 5, 1, 0})));
    EXPECT_TRUE(same_surface(Origami::parse(kP49), prym_shape_origami({PrymShape::A6, 1, 1, 0, 6, 1, 0})));
    EXPECT_TRUE(same_surface(Origami::parse(kP49Image), prym_shape_origami({PrymShape::A6, 2, 1, 0, 5, 1, 0})));
}

TEST(PrymShapes, LocusAndAreaOfEveryShape) {
    std::mt19937 rng(7);
    std::map<PrymShape, int> hits;
    for (int it = 0; it < 3000; ++it) {
        const auto shape = static_cast<PrymShape>(rng() % 5);
        PrymShapeParams p{shape, int(1 + rng() % 5), int(1 + rng() % 3), 0, int(1 + rng() % 9), int(1 + rng() % 3), 0};
        if (!shape_widths_ok(p)) continue;
        p.t1 = int(rng() % p.w1);
        p.t2 = int(rng() % p.w2);
        const Origami o = prym_shape_origami(p);
        const bool h4 = shape == PrymShape::APlus || shape == PrymShape::AMinus || shape == PrymShape::B4;
        const int a1 = p.w1 * p.h1, a2 = p.w2 * p.h2;
        int area = 0;
        switch (shape) {
            case PrymShape::APlus: area = a1 + 2 * a2; break;
            case PrymShape::AMinus:
            case PrymShape::B4: area = 2 * a1 + a2; break;
            default: area = 2 * a1 + 2 * a2;
        }
        ASSERT_EQ(o.n(), area);
        ASSERT_EQ(horizontal_cylinders(o).size(), h4 ? 3u : 4u);
        if (!is_primitive(o.h(), o.v())) continue;
        ASSERT_EQ(prym_locus(o), h4 ? 4 : 6) << o.str();
        auto back = prym_shape_params(o);
        ASSERT_TRUE(back) << o.str();
        ASSERT_EQ(back->shape, shape);
        ASSERT_TRUE(same_surface(prym_shape_origami(*back), o));
        auto all = all_prym_shape_params(o);
        ASSERT_TRUE(std::count(all.begin(), all.end(), p)) << o.str();
        ++hits[shape];
    }
    EXPECT_EQ(hits.size(), 5u);
}

TEST(PrymShapes, WidthConditions) {
    EXPECT_TRUE(shape_widths_ok({PrymShape::APlus, 1, 1, 0, 2, 1, 0}));
    EXPECT_FALSE(shape_widths_ok({PrymShape::APlus, 2, 1, 0, 2, 1, 0}));
    EXPECT_FALSE(shape_widths_ok({PrymShape::AMinus, 2, 1, 0, 4, 1, 0}));
    EXPECT_TRUE(shape_widths_ok({PrymShape::B4, 2, 1, 0, 3, 1, 0}));
    EXPECT_FALSE(shape_widths_ok({PrymShape::B6, 2, 1, 0, 4, 1, 0}));
    EXPECT_EQ(prym_locus(h2_one_cylinder(1, 1, 3)), 0);
}

// ---- prototypes and butterflies ----

TEST(PrymPrototype, ParseAndFormat) {
    auto p = Prym4Prototype::parse("(10,2,1,3,-)");
    EXPECT_EQ(p, (Prym4Prototype{10, 2, 1, 3, -1}));
    EXPECT_EQ(p.str(), "(10,2,1,3,-)");
    EXPECT_EQ(p.D(), 169);
    EXPECT_EQ(Prym4Prototype::parse("(6,1,0,-11,+)").eps, +1);
    auto q = Prym6Prototype::parse("(5,2,0,-3)");
    EXPECT_EQ(q.str(), "(5,2,0,-3)");
    EXPECT_EQ(q.D(), 49);
    EXPECT_EQ(q.kind(), Prym6Kind::A);
    EXPECT_THROW(Prym4Prototype::parse("(1,2,3)"), Error);
    EXPECT_THROW(Prym6Prototype::parse("(1,2,3,4,+)"), Error);
    EXPECT_THROW(check_discriminant4(21), Error);
    EXPECT_THROW(check_discriminant6(7), Error);
}

TEST(Butterfly4, GoldenQ169) {
    const auto p = Prym4Prototype::parse("(6,1,0,-11,+)");
    const auto qs = admissible_q(p);
    EXPECT_TRUE(std::count(qs.begin(), qs.end(), 2));
    EXPECT_EQ(qs.back(), kQInf);
    EXPECT_EQ(butterfly4(p, 2), Prym4Prototype::parse("(10,2,1,3,-)"));
    EXPECT_THROW(butterfly4(p, 100), Error);
}

TEST(Butterfly6, GoldenP49) {
    EXPECT_EQ(butterfly6(Prym6Prototype::parse("(6,1,0,-5)"), 2), Prym6Prototype::parse("(5,2,0,-3)"));
    const auto b = enumerate_p6(49);
    auto it = std::find_if(b.begin(), b.end(), [](const Prym6Prototype& p) { return p.kind() == Prym6Kind::B; });
    if (it != b.end()) {
        EXPECT_THROW(butterfly6(*it, kQInf), Error);
    }
}

TEST(Butterfly4, SelfLoopAndB1Formula) {
    for (long long k = 1; k <= 40; ++k) {
        const long long D = 8 + 16 * k;
        for (int eps : {+1, -1}) {
            const Prym4Prototype p{2 * k - 1, 1, 0, -4, eps};
            if (!is_valid(p)) continue;
            EXPECT_EQ(butterfly4(p, 2), (Prym4Prototype{2 * k - 1, 1, 0, -4, -eps})) << D;
        }
    }
    for (long long n = 9; n <= 21; n += 2)
        for (const auto& p : enumerate_q4(n * n)) {
            if (p.t != 0 || p.w % p.h) continue;
            EXPECT_EQ(butterfly4(p, 1), (Prym4Prototype{p.w - p.e - 2 * p.h, p.h, 0, -p.e - 4 * p.h, -p.eps})) << p.str();
        }
}

TEST(Butterfly4, ImagesMatchLatticeOracle) {
    for (long long D : {81LL, 121LL, 144LL, 169LL, 196LL, 225LL, 256LL}) {
        for (const auto& p : enumerate_q4(D)) {
            const auto qs = admissible_q(p);
            ASSERT_TRUE(std::count(qs.begin(), qs.end(), 1));
            for (long q : qs) {
                const auto r = butterfly4(p, q);
                ASSERT_TRUE(is_valid(r)) << p.str();
                ASSERT_EQ(r.D(), D);
                ASSERT_EQ(r.eps, -p.eps);
                ASSERT_EQ(r.e, -p.e - 4 * (q == kQInf ? 1 : q) * p.h);
                const auto b = brute_butterfly(p.w, p.h, p.t, p.e, D, q, 8, false);
                ASSERT_EQ((Prym4Prototype{b.w, b.h, b.t, b.e, -p.eps}), r) << p.str() << " q=" << q_str(q);
            }
        }
    }
}

TEST(Butterfly6, ImagesMatchLatticeOracle) {
    for (long long n = 8; n <= 24; n += 2) {
        const long long D = n * n / 4;
        const auto all = enumerate_p6a(D);
        const std::set<Prym6Prototype> set(all.begin(), all.end());
        for (const auto& p : all) {
            for (long q : admissible_q(p)) {
                const auto r = butterfly6(p, q);
                ASSERT_TRUE(set.count(r)) << p.str() << " -> " << r.str();
                ASSERT_EQ(r.e, -p.e - 4 * (q == kQInf ? 1 : q) * p.h);
                const auto b = brute_butterfly(p.w, p.h, p.t, p.e, D, q, 4, true);
                ASSERT_EQ((Prym6Prototype{b.w, b.h, b.t, b.e}), r) << p.str() << " q=" << q_str(q);
            }
        }
    }
}

TEST(Butterfly4, EnumerationMatchesDefinition) {
    for (long long D : {17LL, 33LL, 48LL, 64LL, 121LL}) {
        std::set<Prym4Prototype> brute;
        for (long long w = 1; w <= D; ++w)
            for (long long h = 1; 8 * w * h <= D; ++h)
                for (long long e = -D; e <= D; ++e) {
                    if (e * e + 8 * w * h != D || e + 2 * h >= w) continue;
                    for (long long t = 0; t < std::gcd(w, h); ++t)
                        if (std::gcd(std::gcd(w, h), std::gcd(t, e)) == 1)
                            for (int eps : {+1, -1}) brute.insert({w, h, t, e, eps});
                }
        const auto got = enumerate_q4(D);
        EXPECT_EQ(std::set<Prym4Prototype>(got.begin(), got.end()), brute) << D;
    }
}

TEST(Butterfly6, EnumerationMatchesDefinition) {
    for (long long D : {17LL, 49LL, 64LL, 81LL}) {
        std::set<Prym6Prototype> a, b;
        for (long long w = 1; w <= D; ++w)
            for (long long h = 1; 4 * w * h <= D; ++h)
                for (long long e = -D; e <= D; ++e) {
                    if (e * e + 4 * w * h != D) continue;
                    // with lambda = (e + sqrt D)/2: lambda < x/2 iff D < (x - e)^2 and x > e
                    auto below = [&](long long x) { return x - e > 0 && D < (x - e) * (x - e); };
                    if (!below(2 * w) || (w - e > 0 && D == (w - e) * (w - e))) continue;
                    const bool kind_a = below(w);
                    for (long long t = 0; t < std::gcd(w, h); ++t) {
                        if (std::gcd(std::gcd(w, h), std::gcd(t, e)) != 1) continue;
                        (kind_a ? a : b).insert({w, h, t, e});
                    }
                }
        const auto all = enumerate_p6(D);
        std::set<Prym6Prototype> ga, gb;
        for (const auto& p : all) (p.kind() == Prym6Kind::A ? ga : gb).insert(p);
        EXPECT_EQ(ga, a) << D;
        EXPECT_EQ(gb, b) << D;
    }
}

// ---- reduction ----

TEST(Reduce4, StepBoundAndMonotoneHeights) {
    for (long long n : {9, 11, 13, 15, 21, 31, 51}) {
        for (const auto& p : enumerate_q4(n * n)) {
            const auto tr = reduce4(p);
            ASSERT_TRUE(tr.result.reduced()) << p.str();
            ASSERT_LE(tr.steps, 3 * (ceil_log2(p.h) + 1)) << p.str();
            ASSERT_EQ(tr.chain.size(), size_t(tr.steps) + 1);
            for (size_t i = 0; i + 1 < tr.chain.size(); ++i) {
                ASSERT_EQ(butterfly4(tr.chain[i], 1), tr.chain[i + 1]);
                ASSERT_LE(tr.chain[i + 1].h, tr.chain[i].h);
                if (i + 3 < tr.chain.size()) {
                    ASSERT_LE(2 * tr.chain[i + 3].h, tr.chain[i].h) << p.str();
                }
            }
        }
    }
    EXPECT_EQ(reduce4(Prym4Prototype::parse("(6,1,0,-11,+)")).steps, 0);
    EXPECT_LE(reduce4(Prym4Prototype::parse("(10,2,1,3,-)")).steps, 3);
}

TEST(Reduce6, StepBoundAndEndpoints) {
    for (long long n = 8; n <= 102; n += 2) {
        const long long D = n * n / 4;
        for (const auto& p : enumerate_p6a(D)) {
            const auto tr = reduce6(p);
            const auto& r = tr.result;
            ASSERT_TRUE(r.reduced() || (D % 8 == 1 && r.almost_reduced())) << p.str();
            ASSERT_LE(tr.steps, 3 * (ceil_log2(p.h) + 1) + 1) << p.str();
            for (size_t i = 0; i + 1 < tr.chain.size(); ++i) {
                ASSERT_EQ(butterfly6(tr.chain[i], 1), tr.chain[i + 1]);
                ASSERT_LE(tr.chain[i + 1].h, tr.chain[i].h);
            }
            const long long g = std::gcd(2 * r.e, r.h);
            ASSERT_TRUE(g == 1 || g == 2);
        }
    }
}

// ---- paths and components ----

TEST(PrymPaths, EveryHardCodedPathReplays) {
    int h4 = 0, h6 = 0;
    for (long long D = 17; D <= 2500; ++D) {
        if (D % 8 == 0 || D % 8 == 1 || D % 8 == 4) {
            for (auto p : {bridge_path4(D), eps_loop4(D)}) {
                if (!p) continue;
                ASSERT_EQ(replay_error(*p), "") << D << " " << p->label;
                ++h4;
            }
        }
        for (const auto& p : bridge_paths6(D)) {
            ASSERT_EQ(replay_error(p), "") << D << " " << p.label;
            ++h6;
        }
    }
    EXPECT_GT(h4, 200);
    EXPECT_GT(h6, 200);
}

TEST(PrymPaths, NodesAtSmallK) {
    auto ps = bridge_paths6(49);
    ASSERT_EQ(ps.size(), 1u);
    const std::vector<Prym6Prototype> want{{6, 1, 0, -5}, {5, 2, 0, -3}, {3, 2, 0, -5}, {10, 1, 0, -3}};
    EXPECT_EQ(ps[0].nodes, want);
    EXPECT_EQ(ps[0].moves, (std::vector<long>{2, kQInf, 1}));

    auto b = bridge_path4(4 + 16 * 5);
    ASSERT_TRUE(b);
    EXPECT_EQ(b->nodes.front(), (Prym4Prototype{6, 1, 0, -6, +1}));
    EXPECT_EQ(b->nodes.back().e, -2);

    auto loop = eps_loop4(32 * 3);
    ASSERT_TRUE(loop);
    EXPECT_EQ(loop->nodes.front().eps, -loop->nodes.back().eps);
    EXPECT_EQ(loop->nodes.front().w, loop->nodes.back().w);
    EXPECT_EQ(loop->moves.size() % 2, 1u);

    // D = 12 + 16k: B_inf of the second node has e = -2
    auto p12 = bridge_paths6(12 + 16 * 4);
    ASSERT_EQ(p12.size(), 1u);
    EXPECT_EQ(p12[0].nodes[2], (Prym6Prototype{9, 2, 0, -2}));
}

TEST(S4Components, CountsForLargeD) {
    for (long long D = kPrymSmallD + 1; D <= 2500; ++D) {
        if (D % 8 != 0 && D % 8 != 1 && D % 8 != 4) continue;
        const auto s = s4_components(D);
        ASSERT_FALSE(s.s.exceptional);
        ASSERT_EQ(int(s.s.components.size()), expected_s4_component_count(D)) << D;
        if (D % 16 == 4) {
            for (const auto& c : s.s.components) {
                std::set<long long> cls;
                for (long long e : c) cls.insert(mod8(e));
                ASSERT_EQ(cls.size(), 1u) << D;
            }
            ASSERT_TRUE(s.bridge) << D;
            const auto& nodes = s.bridge->nodes;
            ASSERT_NE(component_of_e(s.s.components, nodes.front().e), component_of_e(s.s.components, nodes.back().e)) << D;
        }
        if (D % 8 == 0) {
            ASSERT_TRUE(s.eps_loop) << D;
        }
    }
    EXPECT_TRUE(s4_components(148).s.exceptional);
}

TEST(S4Components, PrototypeGraph) {
    for (long long D = 17; D <= 600; ++D) {
        if (D % 8 != 0 && D % 8 != 1 && D % 8 != 4) continue;
        const int c = q4_component_count(D);
        if (D % 8 == 1) {
            if (D > 100) EXPECT_EQ(c, 2) << D;
        } else if (D > 16 && D != 48 && D != 68 && D != 100) {
            EXPECT_EQ(c, 1) << D;
        } else if (D == 48 || D == 68 || D == 100) {
            EXPECT_GT(c, 1) << D;
        }
    }
}

TEST(S6Components, CountsAndClassesForLargeD) {
    for (long long D = kPrymSmallD + 1; D <= 2500; ++D) {
        if (D % 4 != 0 && D % 4 != 1) continue;
        const auto s = s6_components(D);
        ASSERT_EQ(int(s.s1.components.size()), expected_s6_component_count(D, 1)) << D;
        ASSERT_EQ(int(s.s2.components.size()), expected_s6_component_count(D, 2)) << D;
        const std::set<long long> c04{0, 4}, c2{2}, c6{6}, c26{2, 6}, c13{1, 3}, c57{5, 7};
        for (const auto& c : s.s1.components) {
            std::set<long long> cls;
            for (long long e : c) cls.insert(mod8(e));
            switch (D % 8) {
                case 4:
                    ASSERT_TRUE(cls == c04 || cls == c2 || cls == c6) << D;
                    break;
                case 0:
                    ASSERT_TRUE(cls == c04 || cls == c26) << D;
                    break;
                case 1:
                    ASSERT_TRUE(cls == c13 || cls == c57) << D;
                    break;
            }
        }
        if (D % 8 == 4 || D % 8 == 1) {
            ASSERT_FALSE(s.bridges.empty()) << D;
        }
        for (const auto& b : s.bridges) {
            ASSERT_NE(component_of_e(s.s1.components, b.nodes.front().e), component_of_e(s.s1.components, b.nodes.back().e))
                << D << " " << b.label;
        }
    }
}

TEST(S6Components, ReducedSetsAreReducedPrototypes) {
    for (long long D = 17; D <= 400; ++D) {
        if (D % 4 != 0 && D % 4 != 1) continue;
        std::set<long long> s1, s2;
        for (const auto& p : enumerate_p6(D)) {
            if (p.reduced() && (p.e + 4) * (p.e + 4) < D) s1.insert(p.e);
            if (p.almost_reduced() && (p.e + 8) * (p.e + 8) < D && D % 8 == 1) s2.insert(p.e);
        }
        const auto r1 = reduced_s6(D, 1), r2 = reduced_s6(D, 2);
        EXPECT_EQ(std::set<long long>(r1.begin(), r1.end()), s1) << D;
        if (D % 8 == 1) EXPECT_EQ(std::set<long long>(r2.begin(), r2.end()), s2) << D;
    }
}

TEST(P6AComponents, CountsAndInvariants) {
    for (long long D = 101; D <= 1200; ++D) {
        if (D % 4 != 0 && D % 4 != 1) continue;
        const auto comps = p6a_components(D);
        if (D > 313) {
            ASSERT_EQ(int(comps.size()), expected_p6a_component_count(D)) << D;
        }
        if (D % 8 == 0 || D % 8 == 4) {
            for (const auto& c : comps) {
                std::set<long long> cls;
                for (const auto& p : c) cls.insert(mod_floor(p.e, 4));
                ASSERT_EQ(cls.size(), 1u) << D;
            }
        }
        if (D % 8 == 1 && D > 313) {
            const auto s2 = reduced_s6(D, 2);
            for (const auto& c : comps) {
                bool has_reduced = false, has_almost = false;
                for (const auto& p : c) {
                    has_reduced |= p.reduced();
                    has_almost |= p.almost_reduced() && std::count(s2.begin(), s2.end(), p.e);
                }
                ASSERT_NE(has_reduced, has_almost) << D;
            }
        }
    }
}

// ---- origami bridges ----

TEST(PrymBridge, GoldenExtraction) {
    EXPECT_EQ(origami_to_prototype4(Origami::parse(kQ169)), Prym4Prototype::parse("(6,1,0,-11,+)"));
    EXPECT_EQ(origami_to_prototype4(Origami::parse(kQ169Image)), Prym4Prototype::parse("(10,2,1,3,-)"));
    EXPECT_EQ(origami_to_prototype6(Origami::parse(kP49)), Prym6Prototype::parse("(6,1,0,-5)"));
    EXPECT_EQ(origami_to_prototype6(Origami::parse(kP49Image)), Prym6Prototype::parse("(5,2,0,-3)"));
    EXPECT_THROW(origami_to_prototype4(Origami::parse(kP49)), Error);
    EXPECT_THROW(origami_to_prototype6(h2_one_cylinder(1, 2, 4)), Error);
}

TEST(PrymBridge, RoundTripOnReducedPrototypes) {
    // each reduced prototype of D = 121 is realized with 11 or with 22 squares
    for (long long e : reduced_s4(121)) {
        for (int eps : {+1, -1}) {
            const Prym4Prototype p{(121 - e * e) / 8, 1, 0, e, eps};
            if (!is_valid(p)) continue;
            int realized = 0;
            for (long long n : {11LL, 22LL}) {
                Origami o;
                try {
                    o = prototype4_to_origami(p, n);
                } catch (const Error& err) {
                    EXPECT_EQ(err.code(), Errc::not_found);
                    continue;
                }
                ++realized;
                EXPECT_EQ(o.n(), n);
                EXPECT_EQ(prym_locus(o), 4);
                EXPECT_EQ(origami_to_prototype4(o), p) << n;
            }
            EXPECT_GE(realized, 1) << p.str();
        }
    }
    EXPECT_EQ(prototype4_to_origami({15, 1, 0, -1, +1}, 11).n(), 11);
    EXPECT_THROW(prototype4_to_origami({15, 1, 0, -1, -1}, 11), Error);
    EXPECT_EQ(prototype4_to_origami({15, 1, 0, -1, -1}, 22).n(), 22);
    EXPECT_EQ(prototype4_to_origami({21, 1, 0, -1, -1}, 13).n(), 13);
    EXPECT_EQ(prototype4_to_origami({21, 1, 0, -1, +1}, 26).n(), 26);
    for (long long n = 8; n <= 24; n += 2)
        for (const auto& p : enumerate_p6a(n * n / 4)) {
            const Origami o = prototype6_to_origami(p, n);
            EXPECT_EQ(origami_to_prototype6(o), p) << n;
        }
    EXPECT_THROW(prototype4_to_origami(Prym4Prototype::parse("(6,1,0,-11,+)"), 12), Error);
}

TEST(PrymBridge, EveryTypeAVertexExtractsToItsDiscriminant) {
    for (int n = 7; n <= 16; ++n)
        for (const auto& g : prym_orbits(4, n)) {
            std::set<long long> Ds;
            for (const auto& v : g.vertices)
                if (type_a(v, 4)) {
                    const auto p = origami_to_prototype4(v);
                    Ds.insert(p.D());
                    const auto sp = *prym_shape_params(v);
                    EXPECT_EQ(p.eps, sp.shape == PrymShape::APlus ? +1 : -1);
                }
            ASSERT_EQ(Ds.size(), 1u) << n;
            const long long D = *Ds.begin();
            EXPECT_TRUE(D == n * n || 4 * D == n * n) << n;
        }
    for (int n = 8; n <= 16; n += 2)
        for (const auto& g : prym_orbits(6, n))
            for (const auto& v : g.vertices)
                if (type_a(v, 6)) {
                    EXPECT_EQ(4 * origami_to_prototype6(v).D(), n * n);
                }
}

// Butterfly moves done on origamis agree with the prototype calculus.
TEST(PrymBridge, RealizationCommutes) {
    const auto q169 = realize_butterfly4(Origami::parse(kQ169), 2);
    EXPECT_TRUE(same_surface(q169.origami, Origami::parse(kQ169Image)));
    EXPECT_TRUE(same_surface(apply_word(Origami::parse(kQ169), q169.word), q169.origami));
    const auto p49 = realize_butterfly6(Origami::parse(kP49), 2);
    EXPECT_TRUE(same_surface(p49.origami, Origami::parse(kP49Image)));

    for (int locus : {4, 6}) {
        for (int n = locus == 4 ? 7 : 8; n <= 14; n += locus == 4 ? 1 : 2) {
            int moves = 0;
            for (const auto& g : prym_orbits(locus, n))
                for (const auto& v : g.vertices) {
                    if (!type_a(v, locus)) continue;
                    if (locus == 4) {
                        const auto p = origami_to_prototype4(v);
                        for (long q : admissible_q(p)) {
                            const auto r = realize_butterfly4(v, q);
                            ASSERT_TRUE(same_surface(apply_word(v, r.word), r.origami));
                            ASSERT_EQ(origami_to_prototype4(r.origami), butterfly4(p, q)) << v.str() << " q=" << q_str(q);
                            ++moves;
                        }
                    } else {
                        const auto p = origami_to_prototype6(v);
                        for (long q : admissible_q(p)) {
                            const auto r = realize_butterfly6(v, q);
                            ASSERT_TRUE(same_surface(apply_word(v, r.word), r.origami));
                            ASSERT_EQ(origami_to_prototype6(r.origami), butterfly6(p, q)) << v.str() << " q=" << q_str(q);
                            ++moves;
                        }
                    }
                }
            EXPECT_GT(moves, 0) << n;
        }
    }
}

// ---- type B to type A ----

TEST(TypeB, H4ListedDirectionsOnCuspRepresentatives) {
    EXPECT_THROW(typeB4_to_typeA_direction(Origami::parse(kQ169)), Error);
    int seen = 0;
    for (int n : {7, 10, 11, 12, 16}) {
        for (const auto& g : prym_orbits(4, n))
            for (const auto& v : g.vertices) {
                if (!type_b(v, 4)) continue;
                const Origami cr = prym_cusp_representative(v).origami;
                const Direction d = typeB4_to_typeA_direction(cr);
                ASSERT_TRUE(type_a(make_direction_horizontal(cr, d.p, d.r).origami, 4)) << cr.str();
                const auto sp = *prym_shape_params(cr);
                ASSERT_TRUE(d.r == sp.h1 + sp.h2 || d.r == 2 * sp.h1 + sp.h2);
                bool listed = false;
                for (const auto& s : all_prym_shape_params(cr)) {
                    std::vector<Direction> ds{{s.t1 + s.t2 - s.w2, s.h1 + s.h2}, {2 * s.t1 + s.t2, 2 * s.h1 + s.h2}, {s.w1 + s.t1 + s.t2, s.h1 + s.h2}};
                    for (int y = 1; y < s.w1; ++y) ds.push_back({2 * s.t1 + s.t2 + y - s.w1 - s.w2, 2 * s.h1 + s.h2});
                    for (const auto& x : ds) listed |= x.p == d.p && x.r == d.r;
                }
                ASSERT_TRUE(listed) << cr.str();
                ++seen;
            }
    }
    EXPECT_GT(seen, 50);
}

TEST(TypeB, H6ListedDirectionsOnCuspRepresentatives) {
    EXPECT_THROW(typeB6_to_typeA_direction(Origami::parse(kP49)), Error);
    int seen = 0;
    for (int n = 8; n <= 22; n += 2) {
        for (const auto& g : prym_orbits(6, n))
            for (const auto& v : g.vertices) {
                if (!type_b(v, 6)) continue;
                const Origami cr = prym_cusp_representative(v).origami;
                const Direction d = typeB6_to_typeA_direction(cr);
                ASSERT_TRUE(type_a(make_direction_horizontal(cr, d.p, d.r).origami, 6)) << cr.str();
                const auto sp = *prym_shape_params(cr);
                ASSERT_EQ(d.r, sp.h1 + sp.h2);
                if (n <= 10) {
                    const long s = sp.t1 + sp.t2;
                    ASSERT_TRUE(d.p == s || d.p == s - sp.w1 || d.p == s - sp.w2) << cr.str();
                }
                ++seen;
            }
    }
    EXPECT_GT(seen, 50);
}

// ---- crossing components ----

TEST(CrossComponent6, D81) {
    const auto c = cross_component6(81);
    EXPECT_EQ(c.start, (Prym6Prototype{4, 2, 0, -7}));
    EXPECT_EQ(c.j, 2);
    EXPECT_EQ(c.direction.p, 4);
    EXPECT_EQ(c.direction.r, 7);
    EXPECT_EQ(c.image_prototype, (Prym6Prototype{14, 1, 0, -5}));
    EXPECT_TRUE(same_surface(apply_word(c.origami, c.word), c.image));
    EXPECT_LT(c.j, prym_shape_params(c.origami)->w2);
    const auto comps = p6a_components(81);
    EXPECT_NE(component_of(comps, c.start), component_of(comps, c.image_prototype));

    const Prym6Prototype p{7, 2, 0, -5};
    const Origami o = prototype6_to_origami(p, 18);
    const auto sp = *prym_shape_params(o);
    EXPECT_EQ((std::array<int, 4>{sp.w1, sp.h1, sp.w2, sp.h2}), (std::array<int, 4>{2, 1, 7, 1}));
    const auto d = cross_component_direction6(sp, p, 2);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->p, 9);
    EXPECT_EQ(d->r, 4);
    const auto img = origami_to_prototype6(make_direction_horizontal(o, d->p, d->r).origami);
    EXPECT_EQ(img, (Prym6Prototype{18, 1, 0, 3}));
}

TEST(CrossComponent6, EverySquareD) {
    for (long long s = 9; s <= 31; s += 2) {
        const long long D = s * s;
        if (D % 8 != 1) continue;
        const auto c = cross_component6(D);
        EXPECT_TRUE(c.start.almost_reduced());
        const auto sp = *prym_shape_params(c.origami);
        EXPECT_LT(c.j, sp.w2);
        EXPECT_EQ(c.direction.r, sp.w1 == 1 ? 2 * c.j + 2 + sp.h1 : c.j + 1 + sp.h1);
        EXPECT_TRUE(reduce6(c.image_prototype).result.reduced());
    }
    EXPECT_THROW(cross_component6(64), Error);
}

TEST(Labc, N32) {
    const auto b = labc_bridge6(32);
    EXPECT_EQ(b.lc, 2);
    EXPECT_EQ(b.la + 2 * b.lb, 12);
    EXPECT_EQ(b.proto_c, (Prym6Prototype{63, 1, 0, 2}));
    EXPECT_EQ(b.proto_c_prime, (Prym6Prototype{30, 2, 1, -4}));
    EXPECT_EQ(b.origami.n(), 32);
    EXPECT_EQ(prym_locus(b.origami), 6);
    EXPECT_TRUE(same_surface(b.image_c, make_direction_horizontal(b.origami, b.la + 2 * b.lb + b.lc, 3).origami));
    EXPECT_TRUE(same_surface(b.image_c_prime, make_direction_horizontal(b.origami, -b.lc, 2).origami));
    EXPECT_TRUE(same_surface(apply_word(b.origami, b.word_c), b.image_c));
    const auto comps = p6a_components(256);
    EXPECT_NE(component_of(comps, b.proto_c), component_of(comps, b.proto_c_prime));

    const Origami o = Origami::parse(
        "((1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16)(17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32),"
        "(7,19,9,21,11,18,8,20,10,17)(12,24,14,26,16,23,13,25,15,22))");
    const Origami c = Origami::parse(
        "((10,11,12,13,14,15,16)(17,18,19,20,21,22,23),(1,22,10,9,8,7,6,5,4,3,2)(11,32,31,30,29,28,27,26,25,24,23))");
    const Origami cp = Origami::parse(
        "((1,2)(3,4)(5,6)(7,8,9,10,11,12,13,14,15,16)(17,18,19,20,21,22,23,24,25,26)(27,28)(29,30)(31,32),"
        "(1,24,8,6,4,2,23,7,5,3)(9,32,30,28,26,10,31,29,27,25))");
    EXPECT_TRUE(same_surface(o, b.origami));
    EXPECT_EQ(b.word_c.str(), "T^-4 S^-1 T^-1 S^-1 T^2");
    EXPECT_TRUE(same_surface(b.image_c, c));
    EXPECT_TRUE(same_surface(apply_word(o, Sl2Word::parse("S")), cp));
    EXPECT_EQ(origami_to_prototype6(c), b.proto_c);
    EXPECT_EQ(origami_to_prototype6(cp), b.proto_c_prime);
}

TEST(Labc, OtherSizes) {
    for (int n = 12; n <= 40; n += 4) {
        const auto b = labc_bridge6(n);
        EXPECT_EQ(2 * (b.la + 2 * b.lb + 2 * b.lc), n);
        EXPECT_NE(mod_floor(b.proto_c.e, 4), mod_floor(b.proto_c_prime.e, 4)) << n;
    }
    EXPECT_THROW(labc_bridge6(15), Error);
}

// ---- orbits ----

TEST(PrymOrbits, CountsAndHlk) {
    for (int n = 6; n <= 16; ++n) {
        const auto orbits = prym_orbits(4, n);
        const int want = n % 4 == 2 && n >= 10 ? 2 : 1;
        ASSERT_EQ(int(orbits.size()), want) << n;
        for (const auto& g : orbits) {
            long long D = 0;
            for (const auto& v : g.vertices)
                if (type_a(v, 4)) {
                    D = origami_to_prototype4(v).D();
                    break;
                }
            std::set<HlkInvariant> hs;
            for (const auto& v : g.vertices) hs.insert(hlk_invariant(v));
            ASSERT_EQ(hs.size(), 1u) << n;
            std::string want_hlk = n % 2 ? "(0,[1,1,1])" : (D == n * n ? "(1,[2,0,0])" : "(3,[0,0,0])");
            EXPECT_EQ(hs.begin()->str(), want_hlk) << n;
            if (want == 2) EXPECT_TRUE(D == n * n || 4 * D == n * n);
            if (want == 1) EXPECT_EQ(D, n * n);
        }
    }
    for (int n = 8; n <= 16; n += 2) {
        const auto orbits = prym_orbits(6, n);
        ASSERT_EQ(orbits.size(), 1u) << n;
        for (const auto& v : orbits[0].vertices) EXPECT_EQ(hlk_invariant(v).str(), "(1,[0,0,0])");
    }
}

// The census lists exactly the type A vertices of the orbits it seeds.
TEST(PrymOrbits, CensusMatchesOrbitVertices) {
    for (int locus : {4, 6})
        for (int n = locus == 4 ? 6 : 8; n <= 14; n += locus == 4 ? 1 : 2) {
            std::set<CanonKey> from_orbits, census;
            for (const auto& g : prym_orbits(locus, n))
                for (const auto& v : g.vertices)
                    if (type_a(v, locus)) from_orbits.insert(canonical_key(v));
            for (const auto& o : prym_type_a_census(locus, n)) census.insert(canonical_key(o));
            EXPECT_EQ(from_orbits, census) << locus << " " << n;
        }
}

TEST(PrymOrbits, CuspRepresentativeIsInCusp) {
    for (const auto& g : prym_orbits(6, 16))
        for (const auto& v : g.vertices) {
            const auto c = prym_cusp_representative(v);
            EXPECT_TRUE(same_surface(act_T_pow(v, c.k), c.origami));
        }
}
