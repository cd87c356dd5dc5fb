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

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fracdim/deadline.hpp"
#include "fracdim/graph.hpp"

namespace fracdim {

struct CliqueCover {
    std::vector<VertexSet> clusters;
    std::vector<int> multiplicity;
    int max_multiplicity = 0;

    /// Builds the cover and fills in the multiplicities.
    static CliqueCover from_clusters(int n, std::vector<VertexSet> clusters);
};

/// Clusters with colors 1..h; clusters of one color are pairwise disjoint.
struct ColoredCover {
    std::vector<VertexSet> clusters;
    std::vector<int> colors;
    int h = 0;
};

enum class SolveStatus { optimal, timeout };

const char* to_string(SolveStatus s);

struct DimensionReport {
    int value = 0;
    std::variant<std::monostate, CliqueCover, ColoredCover> witness;
    SolveStatus status = SolveStatus::optimal;
    int lower_bound = 0;
    int upper_bound = 0;
    std::int64_t runtime_ms = 0;
    std::string method;

    bool optimal() const { return status == SolveStatus::optimal; }
};

struct SolveOptions {
    Seconds time_limit = kDefaultTimeLimit;
    /// Use the triangle-free shortcut when it applies.
    bool fast_paths = true;
};

/// dim_L(g) = (minimum max multiplicity of a clique cover) - 1, clamped at 0.
/// Disconnected inputs get the maximum over components.
DimensionReport lebesgue_dimension(const Graph& g, const SolveOptions& opts = {});

/// dim_H(g) = h - 1 for the minimum color count h of a separating equivalent
/// cover whose clusters are cliques (singletons allowed). Defined for every
/// graph; only connected graphs are in the scope of the fractality theory.
DimensionReport hausdorff_dimension(const Graph& g, const SolveOptions& opts = {});

/// Same, with a known Lebesgue value used as the starting lower bound.
DimensionReport hausdorff_dimension(const Graph& g, int dim_l, const SolveOptions& opts);

/// Same, also seeding the upper bound with the Lebesgue witness clusters.
DimensionReport hausdorff_dimension(const Graph& g, const DimensionReport& lebesgue, const SolveOptions& opts);

struct Verification {
    bool ok = true;
    std::vector<std::string> violations;
};

Verification verify_clique_cover(const Graph& g, const CliqueCover& c);
Verification verify_colored_cover(const Graph& g, const ColoredCover& c);

/// Exact (dim_L, dim_H) for a connected triangle-free graph with n >= 3:
/// (Delta - 1, chi' - 1). Throws PreconditionError otherwise.
std::pair<DimensionReport, DimensionReport> triangle_free_fast_path(const Graph& g,
                                                                    const SolveOptions& opts = {});

/// LP-format text of the clique-cover model (minimise the largest vertex
/// multiplicity z). Constraint names: cover_edge_<e>, mult_<v>.
std::string lebesgue_lp(const Graph& g);

/// LP-format text of the separating equivalent cover model with `colors`
/// available colors. Constraint names: cover_edge_<e>, one_color_<c>,
/// color_disjoint_<k>_<v>, separate_<u>_<v>.
std::string hausdorff_lp(const Graph& g, int colors, int dim_l);

}  // namespace fracdim
