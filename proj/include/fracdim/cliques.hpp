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
#include <string>
#include <vector>

#include "fracdim/graph.hpp"

namespace fracdim {

enum class CliqueKind { maximal_only, all };

/// A family of cliques, ordered lexicographically by sorted vertex indices.
struct CliqueSet {
    std::vector<VertexSet> cliques;
    CliqueKind kind = CliqueKind::maximal_only;

    std::size_t size() const { return cliques.size(); }
};

inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;

/// Inclusion-maximal cliques by pivoting Bron-Kerbosch over a degeneracy order.
/// Throws ResourceError when more than `cap` cliques exist.
CliqueSet maximal_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap);

/// Every complete vertex subset of size >= 1 (or >= 2 without singletons).
CliqueSet all_cliques(const Graph& g, bool include_singletons, std::size_t cap = kDefaultCliqueCap);

struct PruneResult {
    CliqueSet retained;
    /// Cliques dropped by the rule and put back to keep an edge covered or a
    /// vertex pair separated.
    std::size_t reinserted = 0;
    std::vector<std::string> warnings;
};

/// Drops every clique that intersects at most `dim_l` other cliques of `cs`.
///
/// With `safety_override` the dropped cliques needed for edge coverage or for
/// separating a pair that `cs` separated are re-inserted; without it the
/// literal rule is applied and each lost obligation yields a warning.
PruneResult prune_for_hausdorff(const Graph& g, const CliqueSet& cs, int dim_l,
                                bool safety_override = true);

/// Maximum size of a clique in `g`.
int clique_number(const Graph& g);

}  // namespace fracdim
