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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracdim/deadline.hpp"
#include "fracdim/graph.hpp"

namespace fracdim {

enum class FractalMethod { general_solver, triangle_free, subcubic_theorem, cubic_reduction };

const char* to_string(FractalMethod m);

struct FractalityReport {
    int dim_l = 0;
    int dim_h = 0;
    /// False when the solvers timed out and the bounds do not decide fractality.
    bool determined = true;
    bool is_fractal = false;
    std::optional<int> fractal_order;
    FractalMethod method = FractalMethod::general_solver;
    std::vector<std::string> certificates;
    /// Bounds of the underlying solves; equal to the values when determined.
    int dim_l_lower = 0, dim_l_upper = 0, dim_h_lower = 0, dim_h_upper = 0;
};

nlohmann::json to_json(const FractalityReport& r);

/// Decides fractality of a connected graph with the cheapest exact method that
/// applies: triangle-free shortcut, subcubic theorem, then the general solvers.
FractalityReport classify(const Graph& g, Seconds time_limit = kDefaultTimeLimit);

/// The general solvers only, no shortcuts.
FractalityReport classify_general(const Graph& g, Seconds time_limit = kDefaultTimeLimit);

/// Connected, max degree <= 3, n >= 5. Uses only structure detectors, G_-3
/// and its edge chromatic number.
FractalityReport subcubic_fractal_test(const Graph& g);

/// Replaces the degree-1 vertices u, v, w by one vertex adjacent to their
/// neighbours. Parallel edges collapse.
Graph pendant_triple_contraction(const Graph& g, int u, int v, int w);

/// For e1 = u1v1 and e2 = u2v2 with deg(v1) = deg(v2) = 1 and u1 != u2:
/// removes v1, v2 and adds u1u2. Rejects the operation when u1u2 is an edge.
Graph pendant_edge_identification(const Graph& g, Edge e1, Edge e2);

/// Loop-free multigraph used by the reduction search, where identifications
/// and contractions may create parallel edges.
struct Multigraph {
    std::vector<std::string> labels;
    std::vector<Edge> edges;

    int n() const { return static_cast<int>(labels.size()); }
    std::vector<int> degrees() const;
    static Multigraph from_graph(const Graph& g);
    /// Simple graph obtained by subdividing every edge; isomorphic multigraphs
    /// with no degree-2 vertices give isomorphic subdivisions.
    Graph subdivision() const;
    friend bool operator==(const Multigraph&, const Multigraph&) = default;
};

/// A proper 3-edge-coloring (colors 0..2, indexed like mg.edges) if one exists.
std::optional<std::vector<int>> three_edge_coloring(const Multigraph& mg);

struct ReductionStep {
    enum class Kind { remove_isolated, pendant_triple_contraction, pendant_edge_identification };
    Kind kind = Kind::remove_isolated;
    /// remove_isolated: the removed vertices; triple contraction: u, v, w;
    /// identification: v1, v2 (their neighbours are implied).
    std::vector<std::string> vertices;
};

enum class TerminalVerdict { class1, snark, has_bridge };

const char* to_string(TerminalVerdict v);

struct CubicReductionTrace {
    std::vector<ReductionStep> steps;
    Multigraph terminal_graph;
    TerminalVerdict terminal_verdict = TerminalVerdict::class1;
};

nlohmann::json to_json(const CubicReductionTrace& t);
CubicReductionTrace trace_from_json(const nlohmann::json& j);

/// Applies the steps to G_-3 of g. The first step is normally the removal of
/// its isolated vertices and edges.
Multigraph replay(const Graph& g, const std::vector<ReductionStep>& steps);

/// G_-3 with isolated vertices and isolated edges removed.
Graph reduced_minus_three(const Graph& g);

struct CubicSearchOptions {
    std::uint64_t node_budget = 200000;
    /// Skip subtrees whose graph admits no 3-edge-coloring: every cubic graph
    /// reachable from them is class 2. Off means a plain exhaustive search.
    bool prune_uncolorable = true;
};

struct CubicFractalResult {
    FractalityReport report;
    /// Present when a class 1 terminal was found (not 2-fractal), or, in an
    /// exhaustive search, the first class 2 terminal reached.
    std::optional<CubicReductionTrace> trace;
    std::uint64_t nodes = 0;
    /// Meaningful only when report.determined.
    bool two_fractal = false;
};

/// Decides whether a connected cubic graph is 2-fractal by searching the
/// pendant reductions of G_-3'. Claw-free inputs are never 2-fractal; their
/// report carries the exact dimensions from classify().
CubicFractalResult cubic_fractal_test(const Graph& g, const CubicSearchOptions& opts = {});

/// Parities of the numbers of pendant edges of colors 1, 2, 3 in a 3-edge-coloring
/// (colors 1..3, indexed like g.edges()).
std::array<int, 3> pendant_color_parity(const Graph& g, const std::vector<int>& coloring);

/// Biconnected, cubic, triangle-free and class 2.
bool is_nontrivial_snark(const Graph& g);

}  // namespace fracdim
