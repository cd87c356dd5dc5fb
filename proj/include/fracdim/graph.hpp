/*
Copyright 2026 The fracdim Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fracdim/vertex_set.hpp"

namespace fracdim {

/// Unordered vertex pair, normalised so that u < v.
struct Edge {
    int u = 0;
    int v = 0;
    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph with string-labelled vertices.
///
/// Vertices are the indices 0..n-1. Adjacency is held both as sorted lists and
/// as bitsets, since the solvers need cheap membership and intersection tests.
class Graph {
public:
    Graph() = default;

    /// Graph on `n` vertices labelled "0".."n-1".
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(std::vector<std::string> labels, std::span<const Edge> edges);

    int n() const noexcept { return static_cast<int>(labels_.size()); }
    std::size_t m() const noexcept { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    std::span<const int> adjacency_list(int v) const { return lists_[v]; }
    int degree(int v) const { return static_cast<int>(lists_[v].size()); }
    int max_degree() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    std::optional<int> index_of(std::string_view label) const;

    /// All edges, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Empty set over this graph's vertex universe.
    VertexSet empty_set() const { return VertexSet(n()); }
    /// True iff `s` induces a complete subgraph.
    bool is_clique(const VertexSet& s) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.adj_ == b.adj_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> adj_;
    std::vector<std::vector<int>> lists_;
    std::size_t m_ = 0;
};

/// Incremental construction of a Graph from labelled vertices.
class GraphBuilder {
public:
    /// Returns the index of `label`, creating the vertex on first sight.
    int add_vertex(std::string_view label);
    /// Adds an edge between two labelled vertices. Duplicates collapse.
    void add_edge(std::string_view a, std::string_view b);
    void add_edge(int u, int v);
    Graph build() const;
    int size() const { return static_cast<int>(labels_.size()); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
};

// --- Edge-list text format -------------------------------------------------

/// Parses the edge-list format: one edge per line, '#' starts a comment line,
/// a single-token line declares an isolated vertex. Self-loops are rejected.
Graph parse_edge_list(std::string_view text);
Graph parse_edge_list(std::istream& in);
/// Serialises `g` so that parse_edge_list(to_edge_list(g)) == g.
std::string to_edge_list(const Graph& g);

// --- Structural operations --------------------------------------------------

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);
std::vector<std::vector<int>> co_connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Partition of V by closed neighbourhood, ordered by smallest member.
std::vector<std::vector<int>> true_twin_classes(const Graph& g);
/// Only the classes of size >= 2.
std::vector<std::vector<int>> true_twins(const Graph& g);

std::vector<Edge> bridges(const Graph& g);
bool is_biconnected(const Graph& g);

/// Number of triangles through each vertex.
std::vector<int> triangle_counts(const Graph& g);

/// G with every edge that lies on a triangle removed (same vertex set).
Graph remove_triangle_edges(const Graph& g);
/// Induced subgraph on a largest connected component (ties: smallest min index).
Graph largest_component(const Graph& g);

struct StructureOptions {
    bool detect_odd_holes = false;
    int odd_hole_vertex_limit = 64;
};

struct StructureProfile {
    int max_degree = 0;
    bool triangle_free = true;
    bool contains_claw = false;
    bool contains_diamond = false;
    bool contains_butterfly = false;
    bool contains_k4 = false;
    std::optional<bool> has_odd_hole;
    std::vector<Edge> bridges;
    bool biconnected = true;
    std::vector<int> tr;
};

/// Induced-subgraph detectors. Throws SizeLimitError if odd-hole detection is
/// requested on a graph with more vertices than the configured limit.
StructureProfile structure_profile(const Graph& g, const StructureOptions& opts = {});

bool has_induced_claw(const Graph& g);
bool has_induced_diamond(const Graph& g);
bool has_induced_butterfly(const Graph& g);
bool has_k4(const Graph& g);
/// Induced cycle of odd length >= 5.
bool has_odd_hole(const Graph& g);

}  // namespace fracdim
