#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sqt/error.hpp"
#include "sqt/experiments.hpp"
#include "sqt/h2_engine.hpp"
#include "sqt/invariants.hpp"
#include "sqt/orbit_graph.hpp"
#include "sqt/prym_engine.hpp"

namespace sqt {

namespace {

// golden surfaces and their butterfly images
const char* kH2Start = "((1,2)(3,4)(5,6)(7,8)(9,10,11,12,13,14),(1,3,5,7,9)(2,4,6,8,14,13,12,11,10))";
const char* kH2Image = "((1,2)(3,4,5,6,7,8,9,10,11,12,13,14),(1,3,10,5,12,7,14,9,2,4,11,6,13,8))";
const char* kQ169 = "((1,2,3,4,5,6)(8,9,10,11,12,13),(6,8,7))";
const char* kQ169Image = "((1,2,3,4,5)(6,7)(8,9)(10,11)(12,13),(1,6,8,2,7,9)(3,13,11,4,12,10))";
const char* kP49 = "((2,3,4,5,6,7)(8,9,10,11,12,13),(1,12,2)(3,14,13))";
const char* kP49Image = "((1,2)(3,4,5,6,7)(8,9,10,11,12)(13,14),(1,9,3)(2,10,4)(5,13,11)(6,14,12))";

// Collects failures; a check passes when nothing was recorded.
struct Probe {
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    void expect(bool ok, const std::string& what) {
        if (!ok && failures.size() < 20) failures.push_back(what);
        if (!ok && failures.size() == 20) failures.push_back("...");
    }
    void note(const std::string& s) { notes.push_back(s); }
};

bool in_cusp(const Origami& o, const Origami& target) {
    Origami x = o;
    const long w = cusp_width(o);
    for (long i = 0; i < w; ++i, x = act_T(x))
        if (same_surface(x, target)) return true;
    return false;
}

int ceil_log2(long long x) {
    int k = 0;
    while ((1LL << k) < x) ++k;
    return k;
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

void golden_h2(Probe& pr) {
    const H2Prototype p{1, 24, 2, 2}, want{1, 12, 2, -10};
    pr.expect(butterfly(p, 2) == want, "B_2(1,24,2,2) = " + butterfly(p, 2).str());
    pr.expect(admissible_q(p) == std::vector<long>{1, 2, kQInf}, "admissible q of (1,24,2,2)");
    const Origami o = Origami::parse(kH2Start);
    pr.expect(origami_to_prototype(o) == p, "14-square origami extracts to (1,24,2,2)");
    const auto r = realize_butterfly_word(o, 2);
    pr.expect(same_surface(apply_word(o, r.word), r.origami), "realized word replays");
    pr.expect(origami_to_prototype(r.origami) == want, "realized image extracts to (1,12,2,-10)");
    pr.expect(in_cusp(r.origami, Origami::parse(kH2Image)), "realized image lies in the cusp of the expected image");
    pr.expect(in_cusp(apply_word(o, Sl2Word::parse("T^-1 T^-2 S^-1")), Origami::parse(kH2Image)),
              "T^-1 then S^-1 T^-2 reaches the expected image cusp");
    pr.note("B_2 word " + r.word.str());
}

void golden_h4(Probe& pr) {
    const auto p = Prym4Prototype::parse("(6,1,0,-11,+)"), want = Prym4Prototype::parse("(10,2,1,3,-)");
    pr.expect(p.D() == 169, "D = 169");
    pr.expect(butterfly4(p, 2) == want, "B_2(6,1,0,-11,+) = " + butterfly4(p, 2).str());
    const Origami o = Origami::parse(kQ169), img = Origami::parse(kQ169Image);
    pr.expect(origami_to_prototype4(o) == p, "origami extracts to (6,1,0,-11,+)");
    pr.expect(origami_to_prototype4(img) == want, "expected image extracts to (10,2,1,3,-)");
    const auto r = realize_butterfly4(o, 2);
    pr.expect(same_surface(r.origami, img), "realization equals the expected image");
    pr.expect(same_surface(apply_word(o, r.word), r.origami), "realized word replays");
    pr.expect(same_surface(apply_word(o, Sl2Word::parse("T^-2 S^-1 T")), img), "S^-1 T^-2 then T gives the expected image");
    pr.note("B_2 word " + r.word.str());
}

void golden_h6(Probe& pr) {
    const auto p = Prym6Prototype::parse("(6,1,0,-5)"), want = Prym6Prototype::parse("(5,2,0,-3)");
    pr.expect(p.D() == 49, "D = 49");
    pr.expect(butterfly6(p, 2) == want, "B_2(6,1,0,-5) = " + butterfly6(p, 2).str());
    const Origami o = Origami::parse(kP49), img = Origami::parse(kP49Image);
    pr.expect(origami_to_prototype6(o) == p, "origami extracts to (6,1,0,-5)");
    pr.expect(origami_to_prototype6(img) == want, "expected image extracts to (5,2,0,-3)");
    const auto r = realize_butterfly6(o, 2);
    pr.expect(same_surface(r.origami, img), "realization equals the expected image");
    pr.expect(same_surface(apply_word(o, r.word), r.origami), "realized word replays");
    pr.expect(same_surface(apply_word(o, Sl2Word::parse("T^-2 S^-1 T^-4")), img), "S^-1 T^-2 then T^-4 gives the expected image");
    pr.note("B_2 word " + r.word.str());
}

void orbit_sizes(Probe& pr) {
    std::ostringstream msg;
    for (int n : {5, 7, 9, 11}) {
        const auto want = expected_orbit_sizes(n);
        long long a = -1, b = -1;
        for (const auto& s : orbit_seeds(Stratum::h2, n)) {
            const long long size = build_orbit(s.seed).size();
            (s.label == "A" ? a : b) = size;
        }
        pr.expect(a == want.a && b == want.b, "n=" + std::to_string(n) + ": BFS " + std::to_string(a) + "/" +
                                                  std::to_string(b) + ", formula " + std::to_string(want.a) + "/" +
                                                  std::to_string(want.b));
        msg << "n=" << n << " " << a << "/" << b << " ";
    }
    pr.expect(expected_orbit_sizes(5).a == 18 && expected_orbit_sizes(5).b == 9, "n=5 formula gives 18/9");
    pr.expect(expected_orbit_sizes(7).a == 54 && expected_orbit_sizes(7).b == 36, "n=7 formula gives 54/36");
    pr.note(msg.str());
}

void hlk_tables(Probe& pr) {
    int orbits = 0;
    for (Stratum s : {Stratum::h2, Stratum::prym4, Stratum::prym6}) {
        for (int n = 3; n <= 12; ++n) {
            const auto seeds = orbit_seeds(s, n);
            if (s == Stratum::prym6 && n % 2 == 0 && n >= 8) pr.expect(!seeds.empty(), "no H(6) Prym orbit at n=" + std::to_string(n));
            for (const auto& seed : seeds) {
                const auto g = build_orbit(seed.seed);
                std::set<std::string> seen;
                for (const auto& v : g.vertices) seen.insert(hlk_invariant(v).str());
                const std::string tag = std::string(to_string(s)) + " n=" + std::to_string(n) + " " + seed.label;
                pr.expect(seen.size() == 1, tag + ": HLK not constant");
                std::string want;
                if (s == Stratum::h2) {
                    want = n % 2 == 0 ? "(1,[2,2,0])" : seed.label == "B" ? "(2,[1,1,1])" : "(0,[3,1,1])";
                } else if (s == Stratum::prym4) {
                    const bool square = seed.label == "D=" + std::to_string(n * n);
                    want = n % 2 ? "(0,[1,1,1])" : square ? "(1,[2,0,0])" : "(3,[0,0,0])";
                } else {
                    want = "(1,[0,0,0])";
                }
                pr.expect(*seen.begin() == want, tag + ": HLK " + *seen.begin() + ", table " + want);
                ++orbits;
            }
        }
    }
    pr.note(std::to_string(orbits) + " orbits");
}

void components(Probe& pr) {
    std::vector<long long> flagged;
    for (long long n = 5; n <= 51; ++n) {
        const auto sc = spin_components(n * n);
        if (sc.exceptional) {
            flagged.push_back(n * n);
            continue;
        }
        const int want = (n * n) % 8 == 1 ? 2 : 1;
        pr.expect(int(sc.components.size()) == want, "spin components at D=" + std::to_string(n * n));
    }
    pr.expect(flagged == std::vector<long long>{49, 121, 169}, "exceptional squares should be 49, 121, 169");

    int large = 0, small = 0, small_off = 0, paths = 0;
    auto count = [&](const ComponentReport& r) {
        const bool ok = int(r.components.size()) == r.expected;
        if (r.D > kPrymSmallD) {
            ++large;
            pr.expect(ok, "D=" + std::to_string(r.D) + ": " + std::to_string(r.components.size()) + " components, expected " +
                              std::to_string(r.expected));
        } else {
            ++small;
            small_off += !ok;
        }
    };
    for (long long D = 101; D <= 2500; ++D) {
        const long long r8 = D % 8;
        if (r8 == 0 || r8 == 1 || r8 == 4) {
            count(s4_components(D).s);
            if (D % 16 == 4) {
                const auto b = bridge_path4(D);
                if (b) ++paths, pr.expect(replay_error(*b).empty(), "bridge path at D=" + std::to_string(D) + ": " + replay_error(*b));
            }
            if (r8 == 0 || r8 == 4) {
                const auto l = eps_loop4(D);
                if (l) ++paths, pr.expect(replay_error(*l).empty(), "eps loop at D=" + std::to_string(D) + ": " + replay_error(*l));
            }
        }
        if (D % 4 == 0 || D % 4 == 1) {
            const auto s6 = s6_components(D);
            count(s6.s1);
            if (D % 8 == 1) count(s6.s2);
            for (const auto& p : bridge_paths6(D))
                ++paths, pr.expect(replay_error(p).empty(), "H(6) path " + p.label + " at D=" + std::to_string(D) + ": " + replay_error(p));
        }
    }
    pr.note("H(2) flagged 49,121,169; Prym counts asserted on " + std::to_string(large) + " sets with D > " +
            std::to_string(kPrymSmallD) + ", " + std::to_string(small_off) + " of " + std::to_string(small) +
            " sets in 100 < D <= " + std::to_string(kPrymSmallD) + " deviate; " + std::to_string(paths) + " paths replay");
}

void reduction(Probe& pr) {
    long long checked = 0;
    for (long long n = 3; n <= 51; ++n) {
        const long long D = n * n;
        for (const auto& p : enumerate_prototypes(D)) {
            const auto t = reduce_to_reduced(p);
            pr.expect(t.result.reduced() && t.steps <= 3 * (ceil_log2(p.c) + 1) + 1, "H(2) " + p.str());
            ++checked;
        }
        if (D >= 17 && (D % 8 == 0 || D % 8 == 1 || D % 8 == 4))
            for (const auto& p : enumerate_q4(D)) {
                const auto t = reduce4(p);
                pr.expect(t.result.reduced() && t.steps <= 3 * (ceil_log2(p.h) + 1) + 1, "H(4) " + p.str());
                ++checked;
            }
        if (D >= 5)
            for (const auto& p : enumerate_p6a(D)) {
                const auto t = reduce6(p);
                const auto& r = t.result;
                pr.expect((r.reduced() || (D % 8 == 1 && r.almost_reduced())) && t.steps <= 3 * (ceil_log2(p.h) + 1) + 1,
                          "H(6) " + p.str());
                ++checked;
            }
    }
    pr.note(std::to_string(checked) + " prototypes");
}

void commutation(Probe& pr) {
    long long moves = 0;
    for (int n = 5; n <= 15; n += 2)
        for (const auto& seed : orbit_seeds(Stratum::h2, n)) {
            const auto g = build_orbit(seed.seed);
            for (const auto& o : g.vertices) {
                if (horizontal_cylinders(o).size() != 2) continue;
                const auto p = origami_to_prototype(o);
                for (long q : admissible_q(p)) {
                    const auto r = realize_butterfly_word(o, q);
                    pr.expect(origami_to_prototype(r.origami) == butterfly(p, q), o.str() + " q=" + q_str(q));
                    pr.expect(same_surface(apply_word(o, r.word), r.origami), "replay " + o.str() + " q=" + q_str(q));
                    ++moves;
                }
            }
        }
    pr.note(std::to_string(moves) + " realized moves");
}

void hl(Probe& pr) {
    size_t two = 0, one = 0, longest2 = 0, longest1 = 0;
    for (int n : {5, 7, 11, 13}) {
        const double bound2 = 5 * std::pow(n, 2.5), bound1 = 5.0 * n * n;
        for (const auto& o : enumerate_h2_census(n)) {
            const size_t cyl = horizontal_cylinders(o).size();
            if (cyl == 2) {
                const auto t = hl_reduce_to_one_cylinder(o);
                pr.expect(horizontal_cylinders(t.origami).size() == 1, "not one-cylinder from " + o.str());
                pr.expect(same_surface(apply_word(o, t.word), t.origami), "replay from " + o.str());
                pr.expect(t.word.length() <= bound2, "word too long from " + o.str());
                longest2 = std::max(longest2, t.word.length());
                ++two;
            } else if (cyl == 1) {
                const auto t = hl_connect_one_cylinder(o);
                const auto got = one_cylinder_params(t.origami);
                const int b = hlk_invariant(o) == hlk_invariant(h2_one_cylinder(1, 1, n - 2)) ? 1 : 2;
                pr.expect(got && got->a == 1 && got->b == b && got->c == n - 1 - b, "wrong target from " + o.str());
                pr.expect(same_surface(apply_word(o, t.word), t.origami), "replay from " + o.str());
                pr.expect(t.word.length() <= bound1, "word too long from " + o.str());
                longest1 = std::max(longest1, t.word.length());
                ++one;
            }
        }
    }
    pr.note(std::to_string(two) + " two-cylinder (longest " + std::to_string(longest2) + "), " + std::to_string(one) +
            " one-cylinder (longest " + std::to_string(longest1) + ")");
}

void bounds(Probe& pr, const ExperimentConfig& cfg) {
    auto rs = run_sweep(Stratum::h2, 5, 25, cfg);
    for (Stratum s : {Stratum::prym4, Stratum::prym6})
        for (auto& r : run_sweep(s, 8, 20, cfg, 2)) rs.push_back(std::move(r));
    double C = 0;
    int oracle = 0, small = 0;
    std::map<std::pair<int, int>, int> per_n;
    for (const auto& r : rs) {
        C = std::max(C, r.ratio);
        ++per_n[{int(r.stratum), r.n}];
        if (r.vertices <= 5000) {
            ++small;
            oracle += r.oracle_checked;
        }
        pr.expect(r.diameter <= int(r.vertices) - 1 && r.ratio > 0, "record invariants at n=" + std::to_string(r.n));
    }
    for (int n = 5; n <= 25; ++n)
        pr.expect(per_n[{int(Stratum::h2), n}] == (n % 2 ? 2 : 1), "H(2) orbit count at n=" + std::to_string(n));
    for (int n = 8; n <= 20; n += 2) {
        pr.expect(per_n[{int(Stratum::prym4), n}] == (n % 4 == 2 ? 2 : 1), "H(4) orbit count at n=" + std::to_string(n));
        pr.expect(per_n[{int(Stratum::prym6), n}] == 1, "H(6) orbit count at n=" + std::to_string(n));
    }
    pr.expect(oracle == small, "all-pairs oracle on every orbit with |V| <= 5000");
    const double c_max = std::min(cfg.c_max, 10.0);
    pr.expect(C <= c_max, "global C " + fmt("%.4f", C) + " exceeds " + fmt("%.2f", c_max));
    const auto fit = fit_exponent(rs);
    pr.expect(fit.alpha <= 1, "fitted exponent above 1");
    pr.note(std::to_string(rs.size()) + " orbits, C = " + fmt("%.4f", C) + ", alpha = " + fmt("%.3f", fit.alpha) +
            ", oracle on " + std::to_string(oracle));
}

void cross_component(Probe& pr) {
    const auto c = cross_component6(81);
    pr.expect(c.start == Prym6Prototype{4, 2, 0, -7} && c.j == 2, "start (4,2,0,-7), j=2");
    pr.expect(c.direction.p == 4 && c.direction.r == 7, "direction (4,7)");
    pr.expect(c.image_prototype == Prym6Prototype{14, 1, 0, -5}, "image " + c.image_prototype.str());
    pr.expect(same_surface(apply_word(c.origami, c.word), c.image), "word replays");
    const auto comps = p6a_components(81);
    auto comp = [&](const std::vector<std::vector<Prym6Prototype>>& cs, const Prym6Prototype& p) {
        for (size_t i = 0; i < cs.size(); ++i)
            if (std::binary_search(cs[i].begin(), cs[i].end(), p)) return int(i);
        return -1;
    };
    pr.expect(comp(comps, c.start) != comp(comps, c.image_prototype), "D=81 crossing changes component");

    const Prym6Prototype p2{7, 2, 0, -5};
    const Origami o2 = prototype6_to_origami(p2, 18);
    const auto sp = prym_shape_params(o2);
    pr.expect(sp.has_value(), "second example has shape parameters");
    if (sp) {
        const auto d = cross_component_direction6(*sp, p2, 2);
        pr.expect(d && d->p == 9 && d->r == 4, "second example direction (9,4)");
        if (d) {
            const auto h = make_direction_horizontal(o2, d->p, d->r);
            pr.expect(origami_to_prototype6(h.origami) == Prym6Prototype{18, 1, 0, 3}, "second example image (18,1,0,3)");
        }
    }

    const auto b = labc_bridge6(32);
    pr.expect(b.proto_c == Prym6Prototype{63, 1, 0, 2}, "C extracts to " + b.proto_c.str());
    pr.expect(b.proto_c_prime == Prym6Prototype{30, 2, 1, -4}, "C' extracts to " + b.proto_c_prime.str());
    pr.expect(same_surface(apply_word(b.origami, b.word_c), b.image_c), "C word replays");
    pr.expect(same_surface(apply_word(b.origami, b.word_c_prime), b.image_c_prime), "C' word replays");
    const auto comps256 = p6a_components(256);
    pr.expect(comp(comps256, b.proto_c) != comp(comps256, b.proto_c_prime), "lABC prototypes in different components");
    pr.note("n=32: lA=" + std::to_string(b.la) + " lB=" + std::to_string(b.lb) + " lC=" + std::to_string(b.lc));
}

struct CheckDef {
    int id;
    const char* name;
};

const CheckDef kChecks[] = {
    {1, "golden butterfly H(2)"},       {2, "golden butterfly H(4)"},   {3, "golden butterfly H(6)"},
    {4, "orbit cardinalities"},         {5, "HLK constancy and tables"}, {6, "component structure"},
    {7, "reduction complexity"},        {8, "commutation soundness"},   {9, "HL algorithm"},
    {10, "diameter bound"},             {11, "cross-component H(6)"},
};

}  // namespace

CheckResult run_check(int id, const ExperimentConfig& cfg) {
    if (id < 1 || id > 11) fail(Errc::invalid_argument, "unknown check " + std::to_string(id));
    CheckResult r;
    r.id = id;
    r.name = kChecks[id - 1].name;
    Probe pr;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        switch (id) {
            case 1: golden_h2(pr); break;
            case 2: golden_h4(pr); break;
            case 3: golden_h6(pr); break;
            case 4: orbit_sizes(pr); break;
            case 5: hlk_tables(pr); break;
            case 6: components(pr); break;
            case 7: reduction(pr); break;
            case 8: commutation(pr); break;
            case 9: hl(pr); break;
            case 10: bounds(pr, cfg); break;
            case 11: cross_component(pr); break;
        }
    } catch (const Error& e) {
        pr.failures.push_back(std::string("error: ") + e.what());
    }
    r.ms = cfg.timing ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() : 0;
    r.pass = pr.failures.empty();
    std::string detail;
    for (const auto& s : r.pass ? pr.notes : pr.failures) detail += (detail.empty() ? "" : "; ") + s;
    r.detail = detail;
    return r;
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> s{"golden", "formulas", "butterflies", "hl", "components", "bounds", "all"};
    return s;
}

std::vector<int> suite_checks(const std::string& suite) {
    if (suite == "golden") return {1, 2, 3, 11};
    if (suite == "formulas") return {4, 5};
    if (suite == "butterflies") return {7, 8};
    if (suite == "hl") return {9};
    if (suite == "components") return {6};
    if (suite == "bounds") return {10};
    if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    fail(Errc::invalid_argument, "unknown suite: " + suite + " (golden, formulas, butterflies, hl, components, bounds, all)");
}

std::vector<CheckResult> cmd_verify(const std::string& suite, const ExperimentConfig& cfg) {
    std::vector<CheckResult> out;
    for (int id : suite_checks(suite)) out.push_back(run_check(id, cfg));
    return out;
}

std::string to_json(const std::vector<CheckResult>& rs) {
    nlohmann::ordered_json j;
    bool all = true;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) {
        all = all && r.pass;
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"ms", std::round(r.ms)}});
    }
    j["pass"] = all;
    j["checks"] = arr;
    return j.dump(1) + "\n";
}

}  // namespace sqt
