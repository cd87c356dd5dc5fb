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

#include <vector>

#include "fracdim/deadline.hpp"
#include "fracdim/graph.hpp"

namespace fracdim {

/// Result of an exact coloring search. Colors are 0-based.
struct ColoringResult {
    int value = 0;
    std::vector<int> colors;
    bool optimal = false;
    int lower_bound = 0;
    int upper_bound = 0;
};

/// Chromatic number by DSATUR-ordered branch and bound with a clique bound.
/// On timeout `optimal` is false and `colors` holds the best coloring found.
ColoringResult vertex_chromatic_number(const Graph& g, Deadline& deadline);

/// Greedy DSATUR coloring; returns per-vertex colors.
std::vector<int> dsatur_coloring(const Graph& g);

/// True iff `colors` is a proper coloring of g.
bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

/// Line graph: vertex i is the i-th edge of g.edges().
Graph line_graph(const Graph& g);

/// Proper edge coloring with at most max_degree + 1 colors (Misra-Gries).
/// Colors are indexed like g.edges().
std::vector<int> misra_gries_edge_coloring(const Graph& g);

/// Edge chromatic number: Delta when a Delta-edge-coloring is found, otherwise
/// Delta + 1. Colors are indexed like g.edges().
ColoringResult edge_chromatic_number(const Graph& g, Deadline& deadline);

/// True iff `colors` (indexed like g.edges()) gives adjacent edges distinct colors.
bool is_proper_edge_coloring(const Graph& g, const std::vector<int>& colors);

}  // namespace fracdim
