// Command-line front end; talks to the library only through sqt.h.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "sqt.h"

namespace {

struct CliError {
    sqt_status status;
    std::string message;
};

void check(sqt_status s) {
    if (s != SQT_OK) throw CliError{s, sqt_last_error()};
}

struct Owned {
    char* p = nullptr;
    ~Owned() { sqt_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

int exit_code(sqt_status s) {
    switch (s) {
        case SQT_OK: return 0;
        case SQT_ERR_PARSE: return 4;
        case SQT_ERR_RESOURCE: return 3;
        default: return 1;
    }
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw CliError{SQT_ERR_INVALID, "cannot write " + out};
    f << text;
}

using Config = std::unique_ptr<sqt_config, decltype(&sqt_config_free)>;
using OrigamiPtr = std::unique_ptr<sqt_origami, decltype(&sqt_origami_free)>;
using Orbit = std::unique_ptr<sqt_orbit, decltype(&sqt_orbit_free)>;
using Sweep = std::unique_ptr<sqt_sweep, decltype(&sqt_sweep_free)>;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbit graphs, butterfly moves and diameter sweeps for square-tiled surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path, stratum = "h2", format, out, seed, suite = "all", q = "1";
    std::string input, target;
    int n = 0, n_min = 0, n_max = 0, step = 1;
    long long max_vertices = 0;
    app.add_option("--config", config_path, "key=value config file (SQT_* environment variables override)");
    app.add_option("--max-vertices", max_vertices, "orbit size cap");

    const auto strata = CLI::IsMember({"h2", "prym4", "prym6"});
    auto* orbit = app.add_subcommand("orbit", "summary of the SL(2,Z)-orbit of a seed");
    orbit->add_option("--seed", seed, "origami literal")->required();
    orbit->add_option("--format", format, "also export the graph: json, dot or csv")->check(CLI::IsMember({"json", "dot", "csv"}));
    orbit->add_option("--out", out, "export file (with --format)");

    auto* sweep = app.add_subcommand("sweep", "diameters of every orbit for a range of n");
    sweep->add_option("--stratum", stratum)->check(strata);
    sweep->add_option("--n-min", n_min)->required();
    sweep->add_option("--n-max", n_max)->required();
    sweep->add_option("--step", step, "n increment");
    sweep->add_option("--format", format, "csv (default), json or svg")->check(CLI::IsMember({"csv", "json", "svg"}));
    sweep->add_option("--out", out);

    auto* verify = app.add_subcommand("verify", "run an acceptance suite");
    verify->add_option("suite", suite, "golden, formulas, butterflies, hl, components, bounds or all");
    verify->add_option("--out", out);

    auto* reduce = app.add_subcommand("reduce", "iterate B_1 down to a reduced prototype");
    reduce->add_option("--stratum", stratum)->check(strata);
    reduce->add_option("input", input, "prototype or origami literal")->required();

    auto* butterfly = app.add_subcommand("butterfly", "apply one butterfly move");
    butterfly->add_option("--stratum", stratum)->check(strata);
    butterfly->add_option("input", input, "prototype or origami literal")->required();
    butterfly->add_option("--q", q, "positive integer or inf");

    auto* path = app.add_subcommand("path", "butterfly path between two prototypes, realized by an SL(2,Z) word");
    path->add_option("--stratum", stratum)->check(strata);
    path->add_option("start", input)->required();
    path->add_option("target", target)->required();
    path->add_option("--n", n, "number of squares for the realization");

    auto* exp = app.add_subcommand("export", "write the orbit graph of a seed");
    exp->add_option("--seed", seed)->required();
    exp->add_option("--format", format, "json, dot or csv")->check(CLI::IsMember({"json", "dot", "csv"}));
    exp->add_option("--out", out);

    auto* census = app.add_subcommand("census", "surfaces and orbits with n squares");
    census->add_option("--stratum", stratum)->check(strata);
    census->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    try {
        sqt_config* raw = nullptr;
        check(sqt_config_load(config_path.empty() ? nullptr : config_path.c_str(), &raw));
        Config cfg(raw, sqt_config_free);
        if (max_vertices > 0) check(sqt_config_set(cfg.get(), "max_vertices", std::to_string(max_vertices).c_str()));

        auto parse_seed = [&] {
            sqt_origami* o = nullptr;
            check(sqt_origami_parse(seed.c_str(), &o));
            return OrigamiPtr(o, sqt_origami_free);
        };
        auto export_to = [&](const OrigamiPtr& o, const std::string& fmt) {
            sqt_orbit* g = nullptr;
            check(sqt_orbit_build(o.get(), cfg.get(), &g));
            Orbit og(g, sqt_orbit_free);
            Owned text;
            check(sqt_orbit_export(og.get(), fmt == "csv" ? "edge_csv" : fmt.c_str(), &text.p));
            emit(text.str(), out);
        };

        if (*orbit) {
            auto o = parse_seed();
            Owned s;
            check(sqt_orbit_summary_json(o.get(), cfg.get(), &s.p));
            std::cout << s.str();
            if (!format.empty()) {
                if (out.empty()) throw CliError{SQT_ERR_INVALID, "--format needs --out for orbit"};
                export_to(o, format);
            }
        } else if (*exp) {
            export_to(parse_seed(), format.empty() ? "json" : format);
        } else if (*sweep) {
            sqt_sweep* raw_s = nullptr;
            check(sqt_sweep_run(stratum.c_str(), n_min, n_max, step, cfg.get(), &raw_s));
            Sweep sw(raw_s, sqt_sweep_free);
            Owned text;
            if (format == "json") {
                check(sqt_sweep_json(sw.get(), &text.p));
            } else if (format == "svg") {
                check(sqt_sweep_svg(sw.get(), &text.p));
            } else {
                check(sqt_sweep_csv(sw.get(), &text.p));
            }
            emit(text.str(), out);
            double alpha = 0, C = 0, res = 0, ratio = 0;
            check(sqt_sweep_max_ratio(sw.get(), &ratio));
            if (sqt_sweep_fit(sw.get(), &alpha, &C, &res) == SQT_OK)
                std::fprintf(stderr, "records=%zu max_ratio=%.6f alpha=%.6f C=%.6f residual=%.6f\n", sqt_sweep_records(sw.get()),
                             ratio, alpha, C, res);
            else
                std::fprintf(stderr, "records=%zu max_ratio=%.6f (no fit: %s)\n", sqt_sweep_records(sw.get()), ratio,
                             sqt_last_error());
        } else if (*verify) {
            Owned text;
            int passed = 0;
            check(sqt_verify(suite.c_str(), cfg.get(), &text.p, &passed));
            emit(text.str(), out);
            return passed ? 0 : 2;
        } else if (*reduce) {
            Owned text;
            check(sqt_reduce(stratum.c_str(), input.c_str(), &text.p));
            std::cout << text.str();
        } else if (*butterfly) {
            Owned text;
            check(sqt_butterfly(stratum.c_str(), input.c_str(), q.c_str(), &text.p));
            std::cout << text.str();
        } else if (*path) {
            Owned text;
            check(sqt_path(stratum.c_str(), input.c_str(), target.c_str(), n, &text.p));
            std::cout << text.str();
        } else if (*census) {
            Owned text;
            check(sqt_census(stratum.c_str(), n, &text.p));
            std::cout << text.str();
        }
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return exit_code(e.status);
    }
    return 0;
}
