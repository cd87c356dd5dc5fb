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

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fracdim/deadline.hpp"
#include "fracdim/dimensions.hpp"
#include "fracdim/graph.hpp"

namespace fracdim {

struct CommunitySet {
    std::vector<VertexSet> communities;
    int universe = 0;
    /// Distinct communities dropped by the top-K limit.
    std::size_t dropped = 0;
    bool truncated() const { return dropped > 0; }
};

/// One community per line, whitespace-separated vertex labels of g. Blank
/// lines and lines starting with '#' are skipped. Repeated communities keep
/// their first position; file order is the quality rank used by `top_k`.
CommunitySet parse_communities(std::string_view text, const Graph& g, std::optional<std::size_t> top_k = {});

struct RestrictedDimensions {
    /// value = max membership count; witness is the communities as a CliqueCover
    /// (clusters need not be cliques of g).
    DimensionReport lebesgue;
    /// value = chromatic number of the community intersection graph; witness is
    /// the communities colored 1..value.
    DimensionReport hausdorff;
    /// Vertices of g merged away as hypergraph twins (same memberships).
    int twins_removed = 0;
    /// Edges of g with no community containing both ends.
    std::size_t uncovered_edges = 0;
};

RestrictedDimensions restricted_dimensions(const Graph& g, const CommunitySet& omega,
                                           Seconds time_limit = kDefaultTimeLimit);

/// Intersection graph of the communities: i ~ j iff they share a vertex.
Graph intersection_graph(const CommunitySet& omega);

}  // namespace fracdim
