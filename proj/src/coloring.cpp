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

#include "fracdim/coloring.hpp"

#include <algorithm>

namespace fracdim {

namespace {

std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> best;
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> clique{s};
        VertexSet cand = g.neighbors(s);
        while (!cand.empty()) {
            int pick = -1;
            int pick_deg = -1;
            for (int v = cand.first(); v >= 0; v = cand.next(v)) {
                int d = (cand & g.neighbors(v)).count();
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
            clique.push_back(pick);
            cand &= g.neighbors(pick);
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    return best;
}

class ColorSearch {
public:
    ColorSearch(const Graph& g, Deadline& dl, std::vector<int> incumbent, int lb)
        : g_(g), dl_(dl), n_(g.n()), lb_(lb) {
        best_colors_ = std::move(incumbent);
        best_ = 0;
        for (int c : best_colors_) best_ = std::max(best_, c + 1);
        color_.assign(n_, -1);
        sat_.assign(n_, 0);
        counts_.assign(static_cast<std::size_t>(n_) * std::max(best_, 1), 0);
    }

    void run(const std::vector<int>& clique) {
        if (best_ <= lb_) return;
        for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], static_cast<int>(i));
        search(static_cast<int>(clique.size()), static_cast<int>(clique.size()));
    }

    int best() const { return best_; }
    const std::vector<int>& best_colors() const { return best_colors_; }

private:
    int& count(int v, int c) { return counts_[static_cast<std::size_t>(v) * stride() + c]; }
    std::size_t stride() const { return counts_.size() / std::max(n_, 1); }

    void assign(int v, int c) {
        color_[v] = c;
        for (int w : g_.adjacency_list(v))
            if (count(w, c)++ == 0) ++sat_[w];
    }
    void unassign(int v, int c) {
        color_[v] = -1;
        for (int w : g_.adjacency_list(v))
            if (--count(w, c) == 0) --sat_[w];
    }

    int select() const {
        int pick = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[v] >= 0) continue;
            if (pick < 0 || sat_[v] > sat_[pick] || (sat_[v] == sat_[pick] && g_.degree(v) > g_.degree(pick)))
                pick = v;
        }
        return pick;
    }

    void search(int colored, int used) {
        dl_.tick();
        if (used >= best_ || best_ <= lb_) return;
        if (colored == n_) {
            best_ = used;
            best_colors_ = color_;
            return;
        }
        int v = select();
        for (int c = 0; c < used && used < best_; ++c) {
            if (count(v, c) != 0) continue;
            assign(v, c);
            search(colored + 1, used);
            unassign(v, c);
        }
        if (used + 1 < best_) {
            assign(v, used);
            search(colored + 1, used + 1);
            unassign(v, used);
        }
    }

    const Graph& g_;
    Deadline& dl_;
    int n_;
    int lb_;
    int best_ = 0;
    std::vector<int> best_colors_;
    std::vector<int> color_;
    std::vector<int> sat_;
    std::vector<int> counts_;
};

ColoringResult exact_coloring(const Graph& g, Deadline& dl, std::vector<int> incumbent,
                              const std::vector<int>& clique) {
    ColoringResult res;
    int lb = static_cast<int>(clique.size());
    ColorSearch search(g, dl, std::move(incumbent), lb);
    bool finished = true;
    try {
        search.run(clique);
    } catch (const SearchTimeout&) {
        finished = false;
    }
    res.value = search.best();
    res.colors = search.best_colors();
    res.upper_bound = res.value;
    res.optimal = finished || res.value <= lb;
    res.lower_bound = res.optimal ? res.value : lb;
    return res;
}

}  // namespace

std::vector<int> dsatur_coloring(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(n, -1);
    std::vector<VertexSet> seen(n, VertexSet(n + 1));
    std::vector<int> sat(n, 0);
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (color[u] >= 0) continue;
            if (v < 0 || sat[u] > sat[v] || (sat[u] == sat[v] && g.degree(u) > g.degree(v))) v = u;
        }
        int c = 0;
        while (seen[v].contains(c)) ++c;
        color[v] = c;
        for (int w : g.adjacency_list(v))
            if (!seen[w].contains(c)) {
                seen[w].insert(c);
                ++sat[w];
            }
    }
    return color;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.n()) return false;
    for (const Edge& e : g.edges())
        if (colors[e.u] == colors[e.v] || colors[e.u] < 0) return false;
    return std::all_of(colors.begin(), colors.end(), [](int c) { return c >= 0; });
}

ColoringResult vertex_chromatic_number(const Graph& g, Deadline& deadline) {
    if (g.n() == 0) return {0, {}, true, 0, 0};
    return exact_coloring(g, deadline, dsatur_coloring(g), greedy_clique(g));
}

Graph line_graph(const Graph& g) {
    auto edges = g.edges();
    std::vector<std::vector<int>> incident(g.n());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].u].push_back(static_cast<int>(i));
        incident[edges[i].v].push_back(static_cast<int>(i));
    }
    std::vector<Edge> ledges;
    for (const auto& inc : incident)
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b) ledges.emplace_back(inc[a], inc[b]);
    return Graph::from_edges(static_cast<int>(edges.size()), ledges);
}

std::vector<int> misra_gries_edge_coloring(const Graph& g) {
    const int n = g.n();
    const int k = g.max_degree() + 1;
    // at[v][c] = neighbour joined to v by the edge of color c, or -1.
    std::vector<std::vector<int>> at(n, std::vector<int>(k, -1));
    auto color_of = [&](int u, int w) {
        for (int c = 0; c < k; ++c)
            if (at[u][c] == w) return c;
        return -1;
    };
    auto set_color = [&](int u, int w, int c) {
        at[u][c] = w;
        at[w][c] = u;
    };
    auto clear_color = [&](int u, int w, int c) {
        at[u][c] = -1;
        at[w][c] = -1;
    };
    auto free_on = [&](int v) {
        for (int c = 0; c < k; ++c)
            if (at[v][c] < 0) return c;
        return -1;
    };

    std::vector<bool> in_fan(n, false);
    for (const Edge& e : g.edges()) {
        const int u = e.u;
        std::vector<int> fan{e.v};
        in_fan[e.v] = true;
        while (true) {
            int last = fan.back();
            bool grown = false;
            for (int c = 0; c < k && !grown; ++c) {
                int w = at[u][c];
                if (w >= 0 && !in_fan[w] && at[last][c] < 0) {
                    fan.push_back(w);
                    in_fan[w] = true;
                    grown = true;
                }
            }
            if (!grown) break;
        }
        for (int w : fan) in_fan[w] = false;

        const int c = free_on(u);
        const int d = free_on(fan.back());
        // Swap c and d along the alternating path leaving u on its d-edge.
        if (c != d) {
            struct Step {
                int x, y, col;
            };
            std::vector<Step> path;
            int x = u;
            int cur = d;
            while (at[x][cur] >= 0) {
                int y = at[x][cur];
                path.push_back({x, y, cur});
                x = y;
                cur = cur == d ? c : d;
            }
            for (const auto& s : path) clear_color(s.x, s.y, s.col);
            for (const auto& s : path) set_color(s.x, s.y, s.col == d ? c : d);
        }

        std::size_t stop = 0;
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0) {
                int ci = color_of(u, fan[i]);
                if (ci < 0 || at[fan[i - 1]][ci] >= 0) break;
            }
            if (at[fan[i]][d] < 0) {
                stop = i;
                break;
            }
        }
        std::vector<int> shifted(stop);
        for (std::size_t i = 0; i < stop; ++i) {
            shifted[i] = color_of(u, fan[i + 1]);
            clear_color(u, fan[i + 1], shifted[i]);
        }
        for (std::size_t i = 0; i < stop; ++i) set_color(u, fan[i], shifted[i]);
        set_color(u, fan[stop], d);
    }

    auto edges = g.edges();
    std::vector<int> colors(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) colors[i] = color_of(edges[i].u, edges[i].v);
    return colors;
}

bool is_proper_edge_coloring(const Graph& g, const std::vector<int>& colors) {
    auto edges = g.edges();
    if (colors.size() != edges.size()) return false;
    std::vector<std::vector<int>> seen(g.n());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (colors[i] < 0) return false;
        for (int v : {edges[i].u, edges[i].v}) {
            if (std::find(seen[v].begin(), seen[v].end(), colors[i]) != seen[v].end()) return false;
            seen[v].push_back(colors[i]);
        }
    }
    return true;
}

ColoringResult edge_chromatic_number(const Graph& g, Deadline& deadline) {
    if (g.m() == 0) return {0, {}, true, 0, 0};
    Graph lg = line_graph(g);
    auto mg = misra_gries_edge_coloring(g);
    // The edges at a maximum-degree vertex form a clique of the line graph.
    int hub = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > g.degree(hub)) hub = v;
    auto edges = g.edges();
    std::vector<int> clique;
    for (int w : g.adjacency_list(hub))
        clique.push_back(static_cast<int>(std::lower_bound(edges.begin(), edges.end(), Edge(hub, w)) - edges.begin()));
    auto other = greedy_clique(lg);
    if (other.size() > clique.size()) clique = std::move(other);
    return exact_coloring(lg, deadline, std::move(mg), clique);
}

}  // namespace fracdim
