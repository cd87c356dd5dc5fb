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

#include "fracdim/enumerate.hpp"

#include "fracdim/error.hpp"
#include "fracdim/isomorphism.hpp"

namespace fracdim {

namespace {

bool admissible(const Graph& g, unsigned mask, GraphClass cls) {
    const int n = g.n();
    switch (cls) {
        case GraphClass::all:
            return true;
        case GraphClass::triangle_free:
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if ((mask >> a & 1U) && (mask >> b & 1U) && g.adjacent(a, b)) return false;
            return true;
        case GraphClass::subcubic:
            if (__builtin_popcount(mask) > 3) return false;
            for (int a = 0; a < n; ++a)
                if ((mask >> a & 1U) && g.degree(a) >= 3) return false;
            return true;
    }
    return true;
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(int n, GraphClass cls, bool connected_only) {
    if (n < 0) throw InvalidArgument("vertex count must be non-negative");
    if (n > 12) throw SizeLimitError("exhaustive enumeration is limited to 12 vertices");
    if (n == 0) return {Graph::from_edges(0, {})};
    // Every connected graph has a vertex whose removal keeps it connected,
    // so extending connected graphs by a non-isolated vertex reaches them all.
    std::vector<Graph> level{Graph::from_edges(1, {})};
    for (int k = 1; k < n; ++k) {
        IsomorphismSet seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            auto base = g.edges();
            for (unsigned mask = connected_only ? 1U : 0U; mask < (1U << k); ++mask) {
                if (!admissible(g, mask, cls)) continue;
                auto edges = base;
                for (int a = 0; a < k; ++a)
                    if (mask >> a & 1U) edges.emplace_back(a, k);
                Graph h = Graph::from_edges(k + 1, edges);
                if (seen.insert(h)) next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace fracdim
