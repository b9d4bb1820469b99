#include "sqt.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sqt/error.hpp"
#include "sqt/experiments.hpp"
#include "sqt/invariants.hpp"
#include "sqt/orbit_graph.hpp"

struct sqt_config {
    sqt::ExperimentConfig c;
};
struct sqt_origami {
    sqt::Origami o;
};
struct sqt_orbit {
    sqt::OrbitGraph g;
    std::string hlk;
};
struct sqt_sweep {
    std::vector<sqt::SweepRecord> rs;
};

namespace {

thread_local std::string last_error;

template <class F>
sqt_status guard(F f) {
    try {
        f();
        last_error.clear();
        return SQT_OK;
    } catch (const sqt::Error& e) {
        last_error = e.what();
        switch (e.code()) {
            case sqt::Errc::invalid_argument: return SQT_ERR_INVALID;
            case sqt::Errc::parse: return SQT_ERR_PARSE;
            case sqt::Errc::precondition: return SQT_ERR_PRECONDITION;
            case sqt::Errc::resource: return SQT_ERR_RESOURCE;
            case sqt::Errc::not_found: return SQT_ERR_NOT_FOUND;
        }
        return SQT_ERR_INTERNAL;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return SQT_ERR_RESOURCE;
    } catch (const std::exception& e) {
        last_error = e.what();
        return SQT_ERR_INTERNAL;
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

std::string trim_copy(const char* v) {
    std::string s = v;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    return s;
}

void need(const void* p, const char* what) {
    if (!p) sqt::fail(sqt::Errc::invalid_argument, std::string(what) + " is NULL");
}

const sqt::ExperimentConfig& cfg(const sqt_config* c) {
    static const sqt::ExperimentConfig defaults;
    return c ? c->c : defaults;
}

}  // namespace

extern "C" {

const char* sqt_last_error(void) { return last_error.c_str(); }
void sqt_string_free(char* s) { std::free(s); }

sqt_status sqt_config_load(const char* path, sqt_config** out) {
    return guard([&] {
        need(out, "out");
        *out = new sqt_config{sqt::load_config(path ? path : "")};
    });
}

sqt_status sqt_config_set(sqt_config* c, const char* key, const char* value) {
    return guard([&] {
        need(c, "config");
        need(key, "key");
        need(value, "value");
        sqt::set_config_value(c->c, key, trim_copy(value));
    });
}

void sqt_config_free(sqt_config* c) { delete c; }

sqt_status sqt_origami_parse(const char* text, sqt_origami** out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        *out = new sqt_origami{sqt::Origami::parse(text)};
    });
}

void sqt_origami_free(sqt_origami* o) { delete o; }
int sqt_origami_squares(const sqt_origami* o) { return o ? o->o.n() : 0; }

sqt_status sqt_origami_str(const sqt_origami* o, char** out) {
    return guard([&] {
        need(o, "origami");
        need(out, "out");
        *out = dup(o->o.str());
    });
}

sqt_status sqt_orbit_build(const sqt_origami* seed, const sqt_config* c, sqt_orbit** out) {
    return guard([&] {
        need(seed, "seed");
        need(out, "out");
        auto* g = new sqt_orbit{sqt::build_orbit(seed->o, {cfg(c).max_vertices}), ""};
        try {
            g->hlk = sqt::hlk_invariant(seed->o).str();
        } catch (const sqt::Error&) {
        }
        *out = g;
    });
}

void sqt_orbit_free(sqt_orbit* g) { delete g; }
size_t sqt_orbit_size(const sqt_orbit* g) { return g ? g->g.size() : 0; }

sqt_status sqt_orbit_diameter(const sqt_orbit* g, const sqt_config* c, int* out) {
    return guard([&] {
        need(g, "orbit");
        need(out, "out");
        *out = sqt::diameter(g->g, {cfg(c).all_sources_threshold, cfg(c).threads});
    });
}

sqt_status sqt_orbit_export(const sqt_orbit* g, const char* format, char** out) {
    return guard([&] {
        need(g, "orbit");
        need(format, "format");
        need(out, "out");
        *out = dup(sqt::export_graph(g->g, sqt::parse_export_format(format), g->hlk));
    });
}

sqt_status sqt_orbit_summary_json(const sqt_origami* seed, const sqt_config* c, char** out) {
    return guard([&] {
        need(seed, "seed");
        need(out, "out");
        *out = dup(sqt::to_json(sqt::cmd_orbit(seed->o, cfg(c))));
    });
}

sqt_status sqt_sweep_run(const char* stratum, int n_min, int n_max, int n_step, const sqt_config* c, sqt_sweep** out) {
    return guard([&] {
        need(stratum, "stratum");
        need(out, "out");
        *out = new sqt_sweep{sqt::run_sweep(sqt::parse_stratum(stratum), n_min, n_max, cfg(c), n_step)};
    });
}

sqt_status sqt_sweep_append(sqt_sweep* into, const sqt_sweep* from) {
    return guard([&] {
        need(into, "into");
        need(from, "from");
        into->rs.insert(into->rs.end(), from->rs.begin(), from->rs.end());
    });
}

void sqt_sweep_free(sqt_sweep* s) { delete s; }
size_t sqt_sweep_records(const sqt_sweep* s) { return s ? s->rs.size() : 0; }

sqt_status sqt_sweep_csv(const sqt_sweep* s, char** out) {
    return guard([&] {
        need(s, "sweep");
        need(out, "out");
        *out = dup(sqt::sweep_csv(s->rs));
    });
}

sqt_status sqt_sweep_json(const sqt_sweep* s, char** out) {
    return guard([&] {
        need(s, "sweep");
        need(out, "out");
        *out = dup(sqt::sweep_json(s->rs));
    });
}

sqt_status sqt_sweep_fit(const sqt_sweep* s, double* alpha, double* C, double* residual) {
    return guard([&] {
        need(s, "sweep");
        const auto f = sqt::fit_exponent(s->rs);
        if (alpha) *alpha = f.alpha;
        if (C) *C = f.C;
        if (residual) *residual = f.residual;
    });
}

sqt_status sqt_sweep_max_ratio(const sqt_sweep* s, double* out) {
    return guard([&] {
        need(s, "sweep");
        need(out, "out");
        double m = 0;
        for (const auto& r : s->rs) m = std::max(m, r.ratio);
        *out = m;
    });
}

sqt_status sqt_sweep_svg(const sqt_sweep* s, char** out) {
    return guard([&] {
        need(s, "sweep");
        need(out, "out");
        *out = dup(sqt::sweep_svg(s->rs, sqt::fit_exponent(s->rs)));
    });
}

sqt_status sqt_verify(const char* suite, const sqt_config* c, char** json, int* passed) {
    return guard([&] {
        need(suite, "suite");
        need(json, "json");
        const auto rs = sqt::cmd_verify(suite, cfg(c));
        bool all = true;
        for (const auto& r : rs) all = all && r.pass;
        if (passed) *passed = all;
        *json = dup(sqt::to_json(rs));
    });
}

sqt_status sqt_reduce(const char* stratum, const char* input, char** out) {
    return guard([&] {
        need(stratum, "stratum");
        need(input, "input");
        need(out, "out");
        *out = dup(sqt::cmd_reduce(sqt::parse_stratum(stratum), input));
    });
}

sqt_status sqt_butterfly(const char* stratum, const char* input, const char* q, char** out) {
    return guard([&] {
        need(stratum, "stratum");
        need(input, "input");
        need(q, "q");
        need(out, "out");
        *out = dup(sqt::cmd_butterfly(sqt::parse_stratum(stratum), input, q));
    });
}

sqt_status sqt_path(const char* stratum, const char* start, const char* target, long long n, char** out) {
    return guard([&] {
        need(stratum, "stratum");
        need(start, "start");
        need(target, "target");
        need(out, "out");
        *out = dup(sqt::cmd_path(sqt::parse_stratum(stratum), start, target, n));
    });
}

sqt_status sqt_census(const char* stratum, int n, char** out) {
    return guard([&] {
        need(stratum, "stratum");
        need(out, "out");
        *out = dup(sqt::cmd_census(sqt::parse_stratum(stratum), n));
    });
}

}  // extern "C"
