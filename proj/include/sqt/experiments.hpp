#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "sqt/origami.hpp"

namespace sqt {

enum class Stratum { h2, prym4, prym6 };
const char* to_string(Stratum s);
Stratum parse_stratum(std::string_view s);

struct ExperimentConfig {
    size_t max_vertices = 5'000'000;
    size_t all_sources_threshold = 200'000;  // exact all-sources BFS below, iFUB above
    size_t oracle_threshold = 5000;          // all-pairs cross-check below
    double c_max = 10.0;
    unsigned threads = 0;
    bool timing = true;  // false writes ms = 0 so that sweep output is byte-deterministic
};

// key=value lines, '#' comments; SQT_<KEY> environment variables override the file.
ExperimentConfig parse_config(std::string_view text);
void set_config_value(ExperimentConfig& c, const std::string& key, const std::string& value);
ExperimentConfig load_config(const std::string& path);  // "" for defaults
ExperimentConfig apply_env(ExperimentConfig c);

struct OrbitSeed {
    std::string label;
    Origami seed;
};
// One seed per orbit, ordered by label. H(2): A, B, even, n3; Prym: D=<disc>.
std::vector<OrbitSeed> orbit_seeds(Stratum s, int n);

struct OrbitSummary {
    int n = 0;
    std::vector<int> stratum;
    std::string hlk;
    size_t vertices = 0;
    size_t edges = 0;  // undirected simple edges
    int diameter = 0;
};
OrbitSummary cmd_orbit(const Origami& seed, const ExperimentConfig& cfg);
std::string to_json(const OrbitSummary& s);

struct SweepRecord {
    int n = 0;
    Stratum stratum = Stratum::h2;
    std::string orbit;
    std::string hlk;
    size_t vertices = 0;
    size_t edges = 0;
    int diameter = 0;
    double bound = 0;  // |V|^(2/3) ln|V|
    double ratio = 0;
    double ms = 0;
    bool oracle_checked = false;  // diameter confirmed by all-pairs BFS
};
inline double diameter_bound(size_t v) { return std::pow(double(v), 2.0 / 3.0) * std::log(double(v)); }

std::vector<SweepRecord> run_sweep(Stratum s, int n_min, int n_max, const ExperimentConfig& cfg, int n_step = 1);
std::string sweep_csv(const std::vector<SweepRecord>& rs);
std::string sweep_json(const std::vector<SweepRecord>& rs);

struct ExponentFit {
    double alpha = 0, C = 0, residual = 0;  // residual: RMS in log space
};
// log d = alpha log|V| + log C; records with d = 0 or |V| = 1 are skipped
ExponentFit fit_exponent(const std::vector<SweepRecord>& rs);
std::string sweep_svg(const std::vector<SweepRecord>& rs, const ExponentFit& fit);

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0;
};
// the numbered acceptance checks, 1..11
CheckResult run_check(int id, const ExperimentConfig& cfg);
const std::vector<std::string>& verify_suites();
std::vector<int> suite_checks(const std::string& suite);
std::vector<CheckResult> cmd_verify(const std::string& suite, const ExperimentConfig& cfg);
std::string to_json(const std::vector<CheckResult>& rs);

// JSON traces. Inputs are prototype literals for the stratum, or origami literals.
std::string cmd_reduce(Stratum s, std::string_view input);
std::string cmd_butterfly(Stratum s, std::string_view input, std::string_view q);
// n = 0 picks the smallest realizing n for square discriminants
std::string cmd_path(Stratum s, std::string_view start, std::string_view target, long long n = 0);

std::string cmd_census(Stratum s, int n);

}  // namespace sqt
