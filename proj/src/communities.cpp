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


#include "fracdim/communities.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fracdim/coloring.hpp"
#include "fracdim/error.hpp"

namespace fracdim {

CommunitySet parse_communities(std::string_view text, const Graph& g, std::optional<std::size_t> top_k) {
    CommunitySet out;
    out.universe = g.n();
    std::set<std::vector<int>> seen;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tokens(line);
        std::string tok;
        std::vector<int> members;
        while (tokens >> tok) {
            if (members.empty() && tok.front() == '#') break;
            auto v = g.index_of(tok);
            if (!v) throw ParseError("unknown vertex '" + tok + "'", lineno);
            members.push_back(*v);
        }
        if (members.empty()) continue;
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (!seen.insert(members).second) continue;
        if (top_k && out.communities.size() >= *top_k) {
            ++out.dropped;
            continue;
        }
        VertexSet s(g.n());
        for (int v : members) s.insert(v);
        out.communities.push_back(std::move(s));
    }
    return out;
}

Graph intersection_graph(const CommunitySet& omega) {
    const int k = static_cast<int>(omega.communities.size());
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (omega.communities[i].intersects(omega.communities[j])) edges.emplace_back(i, j);
    return Graph::from_edges(k, edges);
}

RestrictedDimensions restricted_dimensions(const Graph& g, const CommunitySet& omega, Seconds time_limit) {
    Stopwatch clock;
    Deadline deadline(time_limit);
    for (const auto& c : omega.communities)
        if (c.empty() || c.universe() != g.n()) throw InvalidArgument("community outside the vertex set");

    RestrictedDimensions out;
    // Hypergraph twins share every membership; keep one per class.
    std::map<std::vector<int>, int> classes;
    std::vector<int> membership(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> key;
        for (std::size_t i = 0; i < omega.communities.size(); ++i)
            if (omega.communities[i].contains(v)) key.push_back(static_cast<int>(i));
        membership[v] = static_cast<int>(key.size());
        ++classes[key];
    }
    out.twins_removed = g.n() - static_cast<int>(classes.size());

    for (const Edge& e : g.edges()) {
        bool covered = std::any_of(omega.communities.begin(), omega.communities.end(),
                                   [&](const VertexSet& c) { return c.contains(e.u) && c.contains(e.v); });
        if (!covered) ++out.uncovered_edges;
    }

    const int delta = g.n() ? *std::max_element(membership.begin(), membership.end()) : 0;
    auto& l = out.lebesgue;
    l.value = l.lower_bound = l.upper_bound = delta;
    l.method = "restricted-membership";
    l.witness = CliqueCover::from_clusters(g.n(), omega.communities);

    auto& h = out.hausdorff;
    h.method = "restricted-intersection-coloring";
    Graph line = intersection_graph(omega);
    ColoringResult col = vertex_chromatic_number(line, deadline);
    h.value = col.value;
    h.upper_bound = col.upper_bound;
    // Communities through one vertex pairwise intersect.
    h.lower_bound = std::max(col.lower_bound, delta);
    h.status = col.optimal || h.lower_bound == h.upper_bound ? SolveStatus::optimal : SolveStatus::timeout;
    ColoredCover cover;
    cover.clusters = omega.communities;
    for (int c : col.colors) cover.colors.push_back(c + 1);
    cover.h = col.value;
    h.witness = std::move(cover);
    l.runtime_ms = h.runtime_ms = clock.elapsed_ms();
    return out;
}

}  // namespace fracdim
