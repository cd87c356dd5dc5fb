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

#include "fracdim/cliques.hpp"

#include <algorithm>

#include "fracdim/error.hpp"

namespace fracdim {

namespace {

std::vector<int> degeneracy_order(const Graph& g) {
    const int n = g.n();
    std::vector<int> deg(n);
    int maxd = 0;
    for (int v = 0; v < n; ++v) maxd = std::max(maxd, deg[v] = g.degree(v));
    std::vector<std::vector<int>> buckets(maxd + 1);
    for (int v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
    std::vector<bool> done(n, false);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int d = 0;
        while (true) {
            // Lazy deletion: skip stale bucket entries.
            while (!buckets[d].empty() && (done[buckets[d].back()] || deg[buckets[d].back()] != d))
                buckets[d].pop_back();
            if (!buckets[d].empty()) break;
            ++d;
        }
        int v = buckets[d].back();
        buckets[d].pop_back();
        done[v] = true;
        order.push_back(v);
        for (int w : g.adjacency_list(v))
            if (!done[w]) buckets[--deg[w]].push_back(w);
    }
    return order;
}

void sort_lex(std::vector<VertexSet>& sets) {
    std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
    keyed.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) keyed.emplace_back(sets[i].members(), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<VertexSet> out;
    out.reserve(sets.size());
    for (auto& [key, i] : keyed) out.push_back(std::move(sets[i]));
    sets = std::move(out);
}

struct BronKerbosch {
    const Graph& g;
    std::size_t cap;
    std::vector<VertexSet> found;

    void run(VertexSet& r, VertexSet p, VertexSet x) {
        if (p.empty()) {
            if (x.empty()) {
                if (found.size() >= cap)
                    throw ResourceError("maximal clique count exceeds cap of " + std::to_string(cap));
                found.push_back(r);
            }
            return;
        }
        VertexSet px = p | x;
        int pivot = -1;
        int best = -1;
        for (int u = px.first(); u >= 0; u = px.next(u)) {
            int c = (p & g.neighbors(u)).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        VertexSet candidates = p;
        candidates.subtract(g.neighbors(pivot));
        for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
            r.insert(v);
            run(r, p & g.neighbors(v), x & g.neighbors(v));
            r.erase(v);
            p.erase(v);
            x.insert(v);
        }
    }
};

}  // namespace

CliqueSet maximal_cliques(const Graph& g, std::size_t cap) {
    BronKerbosch bk{g, cap, {}};
    auto order = degeneracy_order(g);
    std::vector<int> rank(g.n());
    for (int i = 0; i < g.n(); ++i) rank[order[i]] = i;
    for (int v : order) {
        VertexSet p(g.n()), x(g.n()), r(g.n());
        for (int w : g.adjacency_list(v)) (rank[w] > rank[v] ? p : x).insert(w);
        r.insert(v);
        bk.run(r, p, x);
    }
    sort_lex(bk.found);
    return {std::move(bk.found), CliqueKind::maximal_only};
}

namespace {

void extend_all(const Graph& g, VertexSet& current, const VertexSet& candidates, int min_size,
                std::size_t cap, std::vector<VertexSet>& out) {
    for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
        current.insert(v);
        if (current.count() >= min_size) {
            if (out.size() >= cap)
                throw ResourceError("clique count exceeds cap of " + std::to_string(cap));
            out.push_back(current);
        }
        VertexSet next = candidates & g.neighbors(v);
        // Only larger indices, so each clique is generated once in lexicographic order.
        for (int w = next.first(); w >= 0 && w <= v; w = next.next(w)) next.erase(w);
        extend_all(g, current, next, min_size, cap, out);
        current.erase(v);
    }
}

}  // namespace

CliqueSet all_cliques(const Graph& g, bool include_singletons, std::size_t cap) {
    std::vector<VertexSet> out;
    VertexSet current(g.n());
    VertexSet all(g.n());
    for (int v = 0; v < g.n(); ++v) all.insert(v);
    extend_all(g, current, all, include_singletons ? 1 : 2, cap, out);
    return {std::move(out), CliqueKind::all};
}

PruneResult prune_for_hausdorff(const Graph& g, const CliqueSet& cs, int dim_l, bool safety_override) {
    const std::size_t q = cs.size();
    std::vector<bool> keep(q, true);
    for (std::size_t i = 0; i < q; ++i) {
        int meets = 0;
        for (std::size_t j = 0; j < q && meets <= dim_l; ++j)
            if (i != j && cs.cliques[i].intersects(cs.cliques[j])) ++meets;
        if (meets <= dim_l) keep[i] = false;
    }

    PruneResult res;
    auto separates = [](const VertexSet& c, int u, int v) { return c.contains(u) != c.contains(v); };
    auto covered_by = [&](auto&& pred) {
        for (std::size_t i = 0; i < q; ++i)
            if (keep[i] && pred(cs.cliques[i])) return true;
        return false;
    };
    auto restore = [&](auto&& pred) {
        for (std::size_t i = 0; i < q; ++i)
            if (!keep[i] && pred(cs.cliques[i])) {
                keep[i] = true;
                ++res.reinserted;
                return true;
            }
        return false;
    };

    std::size_t lost_edges = 0;
    for (const Edge& e : g.edges()) {
        auto has_edge = [&](const VertexSet& c) { return c.contains(e.u) && c.contains(e.v); };
        if (covered_by(has_edge)) continue;
        if (!safety_override || !restore(has_edge)) ++lost_edges;
    }
    std::size_t lost_pairs = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            auto sep = [&](const VertexSet& c) { return separates(c, u, v); };
            bool was = std::any_of(cs.cliques.begin(), cs.cliques.end(), sep);
            if (!was || covered_by(sep)) continue;
            if (!safety_override || !restore(sep)) ++lost_pairs;
        }

    for (std::size_t i = 0; i < q; ++i)
        if (keep[i]) res.retained.cliques.push_back(cs.cliques[i]);
    res.retained.kind = cs.kind;
    if (res.retained.cliques.empty() && q > 0) res.warnings.push_back("every clique was pruned");
    if (lost_edges)
        res.warnings.push_back(std::to_string(lost_edges) + " edge(s) no longer covered by a retained clique");
    if (lost_pairs)
        res.warnings.push_back(std::to_string(lost_pairs) + " vertex pair(s) no longer separated");
    return res;
}

int clique_number(const Graph& g) {
    if (g.n() == 0) return 0;
    int best = 1;
    for (const auto& c : maximal_cliques(g).cliques) best = std::max(best, c.count());
    return best;
}

}  // namespace fracdim
