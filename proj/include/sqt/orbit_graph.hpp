#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "sqt/origami.hpp"

namespace sqt {

// Schreier graph of an SL(2,Z)-orbit on canonical forms.
struct OrbitGraph {
    std::vector<Origami> vertices;
    std::unordered_map<CanonKey, int, CanonKeyHash> index;
    // step[v] = {T(v), S(v)}; the labeled edges are (v, step[v][0], T) and (v, step[v][1], S)
    std::vector<std::array<int, 2>> step;
    Origami seed;

    size_t size() const { return vertices.size(); }
    size_t labeled_edges() const { return 2 * step.size(); }
    int find(const Origami& o) const;  // -1 when o is not in the orbit
    // undirected simple adjacency: loops and parallel edges removed
    std::vector<std::vector<int>> adjacency() const;
};

struct BuildOptions {
    size_t max_vertices = 5'000'000;
};

OrbitGraph build_orbit(const Origami& seed, const BuildOptions& opt = {});

struct DiameterOptions {
    size_t all_sources_threshold = 200'000;
    unsigned threads = 0;  // 0: hardware concurrency
};

int diameter(const OrbitGraph& g, const DiameterOptions& opt = {});
// exact diameters of an undirected simple graph
int diameter_all_sources(const std::vector<std::vector<int>>& adj, unsigned threads = 0);
int diameter_ifub(const std::vector<std::vector<int>>& adj);
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src);
int distance(const OrbitGraph& g, int a, int b);

// Every primitive H(2) origami with n squares, as canonical forms.
std::vector<Origami> enumerate_h2_census(int n);
// One normalized member per cusp of the census.
std::vector<Origami> h2_census_cusp_representatives(int n);

enum class ExportFormat { dot, json, edge_csv };
ExportFormat parse_export_format(std::string_view s);
std::string export_graph(const OrbitGraph& g, ExportFormat f, const std::string& hlk = "");
// inverse of the json export
OrbitGraph import_graph_json(std::string_view text);

}  // namespace sqt
