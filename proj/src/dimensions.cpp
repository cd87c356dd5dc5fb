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

#include "fracdim/dimensions.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "fracdim/cliques.hpp"
#include "fracdim/coloring.hpp"
#include "fracdim/error.hpp"

namespace fracdim {

CliqueCover CliqueCover::from_clusters(int n, std::vector<VertexSet> clusters) {
    CliqueCover c;
    c.clusters = std::move(clusters);
    c.multiplicity.assign(n, 0);
    for (const auto& s : c.clusters)
        for (int v = s.first(); v >= 0; v = s.next(v)) ++c.multiplicity[v];
    for (int m : c.multiplicity) c.max_multiplicity = std::max(c.max_multiplicity, m);
    return c;
}

const char* to_string(SolveStatus s) { return s == SolveStatus::optimal ? "optimal" : "timeout"; }

namespace {

std::string set_text(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        if (out.size() > 1) out += ",";
        out += g.label(v);
    }
    return out + "}";
}

/// Edge ids aligned with the adjacency lists, for O(log deg) lookup.
class EdgeIndex {
public:
    explicit EdgeIndex(const Graph& g) : g_(g), edges_(g.edges()), ids_(g.n()) {
        for (int v = 0; v < g.n(); ++v) ids_[v].resize(g.degree(v));
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            ids_[e.u][slot(e.u, e.v)] = static_cast<int>(i);
            ids_[e.v][slot(e.v, e.u)] = static_cast<int>(i);
        }
    }
    int id(int u, int v) const { return ids_[u][slot(u, v)]; }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    std::size_t slot(int u, int v) const {
        auto adj = g_.adjacency_list(u);
        return static_cast<std::size_t>(std::lower_bound(adj.begin(), adj.end(), v) - adj.begin());
    }

    const Graph& g_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> ids_;
};

// ---------------------------------------------------------------------------
// Lebesgue: minimum k such that a clique cover with multiplicity <= k exists.
// Clusters are sub-cliques of maximal cliques, at most one per maximal clique.

struct RankOutcome {
    int lower = 0;
    int upper = 0;
    bool optimal = false;
    std::vector<VertexSet> clusters;
};

class RankSearch {
public:
    RankSearch(const Graph& g, const std::vector<VertexSet>& maximal, Deadline& dl)
        : g_(g), index_(g), maximal_(maximal), dl_(dl) {
        const auto& edges = index_.edges();
        owners_.resize(edges.size());
        for (std::size_t j = 0; j < maximal_.size(); ++j) {
            auto mem = maximal_[j].members();
            for (std::size_t a = 0; a < mem.size(); ++a)
                for (std::size_t b = a + 1; b < mem.size(); ++b)
                    owners_[index_.id(mem[a], mem[b])].push_back(static_cast<int>(j));
        }
    }

    /// Searches for a cover with multiplicity <= k.
    bool decide(int k, std::vector<VertexSet>& out) {
        k_ = k;
        x_.assign(maximal_.size(), g_.empty_set());
        mult_.assign(g_.n(), 0);
        covered_.assign(index_.edges().size(), 0);
        if (!search()) return false;
        out.clear();
        for (const auto& s : x_)
            if (!s.empty()) out.push_back(s);
        return true;
    }

private:
    bool usable(int j, int u, int v) const {
        return (x_[j].contains(u) || mult_[u] < k_) && (x_[j].contains(v) || mult_[v] < k_);
    }

    void add(int j, int v) {
        for (int w = x_[j].first(); w >= 0; w = x_[j].next(w)) ++covered_[index_.id(v, w)];
        x_[j].insert(v);
        ++mult_[v];
    }
    void remove(int j, int v) {
        --mult_[v];
        x_[j].erase(v);
        for (int w = x_[j].first(); w >= 0; w = x_[j].next(w)) --covered_[index_.id(v, w)];
    }

    bool search() {
        dl_.tick();
        const auto& edges = index_.edges();
        int pick = -1;
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (covered_[e]) continue;
            std::size_t options = 0;
            for (int j : owners_[e])
                if (usable(j, edges[e].u, edges[e].v)) ++options;
            if (options == 0) return false;
            if (options < fewest) {
                fewest = options;
                pick = static_cast<int>(e);
                if (options == 1) break;
            }
        }
        if (pick < 0) return true;
        const int u = edges[pick].u;
        const int v = edges[pick].v;
        // Try clusters that are already open before starting new ones.
        std::vector<int> order;
        for (int j : owners_[pick])
            if (usable(j, u, v)) order.push_back(j);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return x_[a].contains(u) + x_[a].contains(v) > x_[b].contains(u) + x_[b].contains(v);
        });
        for (int j : order) {
            bool add_u = !x_[j].contains(u);
            bool add_v = !x_[j].contains(v);
            if (add_u) add(j, u);
            if (add_v) add(j, v);
            if (search()) return true;
            if (add_v) remove(j, v);
            if (add_u) remove(j, u);
        }
        return false;
    }

    const Graph& g_;
    EdgeIndex index_;
    const std::vector<VertexSet>& maximal_;
    Deadline& dl_;
    std::vector<std::vector<int>> owners_;
    int k_ = 0;
    std::vector<VertexSet> x_;
    std::vector<int> mult_;
    std::vector<int> covered_;
};

int multiplicity_of(int n, const std::vector<VertexSet>& clusters) {
    return CliqueCover::from_clusters(n, clusters).max_multiplicity;
}

/// Maximal cliques with redundant ones dropped greedily.
std::vector<VertexSet> greedy_rank_cover(const Graph& g, const std::vector<VertexSet>& maximal) {
    EdgeIndex index(g);
    std::vector<int> cover_count(index.edges().size(), 0);
    auto for_pairs = [&](const VertexSet& s, auto&& fn) {
        auto mem = s.members();
        for (std::size_t a = 0; a < mem.size(); ++a)
            for (std::size_t b = a + 1; b < mem.size(); ++b) fn(index.id(mem[a], mem[b]));
    };
    for (const auto& c : maximal) for_pairs(c, [&](int e) { ++cover_count[e]; });
    // Drop the largest-multiplicity-contributing cliques first: those through busy vertices.
    std::vector<int> load(g.n(), 0);
    for (const auto& c : maximal)
        for (int v = c.first(); v >= 0; v = c.next(v)) ++load[v];
    std::vector<std::size_t> order(maximal.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto weight = [&](std::size_t i) {
        int w = 0;
        for (int v = maximal[i].first(); v >= 0; v = maximal[i].next(v)) w = std::max(w, load[v]);
        return w;
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight(a) > weight(b); });
    std::vector<bool> keep(maximal.size(), true);
    for (std::size_t i : order) {
        bool redundant = true;
        for_pairs(maximal[i], [&](int e) {
            if (cover_count[e] < 2) redundant = false;
        });
        if (!redundant) continue;
        keep[i] = false;
        for_pairs(maximal[i], [&](int e) { --cover_count[e]; });
    }
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < maximal.size(); ++i)
        if (keep[i]) out.push_back(maximal[i]);
    return out;
}

/// Lower bound on the multiplicity at v: clique cover number of G[N(v)].
int neighbourhood_bound(const Graph& g, int v, Deadline& dl) {
    auto nb = g.neighbors(v).members();
    if (nb.empty()) return 0;
    Graph co = complement(induced_subgraph(g, nb));
    auto res = vertex_chromatic_number(co, dl);
    return res.lower_bound;
}

/// Rank of a connected graph with at least one edge.
RankOutcome solve_rank(const Graph& g, Deadline& dl) {
    RankOutcome out;
    auto maximal = maximal_cliques(g).cliques;
    out.clusters = greedy_rank_cover(g, maximal);
    out.upper = multiplicity_of(g.n(), out.clusters);
    out.lower = 1;
    try {
        for (int v = 0; v < g.n(); ++v) out.lower = std::max(out.lower, neighbourhood_bound(g, v, dl));
        RankSearch search(g, maximal, dl);
        std::vector<VertexSet> found;
        while (out.lower < out.upper) {
            if (search.decide(out.lower, found)) {
                out.clusters = found;
                out.upper = multiplicity_of(g.n(), found);
                break;
            }
            ++out.lower;
        }
        out.lower = out.upper;
        out.optimal = true;
    } catch (const SearchTimeout&) {
        out.optimal = false;
    }
    return out;
}

bool triangle_free(const Graph& g) {
    auto tr = triangle_counts(g);
    return std::all_of(tr.begin(), tr.end(), [](int t) { return t == 0; });
}

std::vector<VertexSet> lift(const std::vector<VertexSet>& local, const std::vector<int>& to_global, int n) {
    std::vector<VertexSet> out;
    for (const auto& s : local) {
        VertexSet t(n);
        for (int v = s.first(); v >= 0; v = s.next(v)) t.insert(to_global[v]);
        out.push_back(std::move(t));
    }
    return out;
}

DimensionReport lebesgue_impl(const Graph& g, const SolveOptions& opts, Deadline& dl) {
    Stopwatch sw;
    DimensionReport rep;
    const int n = g.n();
    std::vector<VertexSet> clusters;
    int lower = n > 0 ? 1 : 0;
    int upper = lower;
    bool optimal = true;
    bool all_triangle_free = true;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) {
            VertexSet s(n);
            s.insert(comp[0]);
            clusters.push_back(std::move(s));
            continue;
        }
        Graph h = induced_subgraph(g, comp);
        RankOutcome r;
        if (opts.fast_paths && triangle_free(h)) {
            for (const Edge& e : h.edges()) {
                VertexSet s(h.n());
                s.insert(e.u);
                s.insert(e.v);
                r.clusters.push_back(std::move(s));
            }
            r.lower = r.upper = h.max_degree();
            r.optimal = true;
        } else {
            all_triangle_free = false;
            r = solve_rank(h, dl);
        }
        auto lifted = lift(r.clusters, comp, n);
        clusters.insert(clusters.end(), lifted.begin(), lifted.end());
        lower = std::max(lower, r.lower);
        upper = std::max(upper, r.upper);
        optimal = optimal && r.optimal;
    }
    rep.method = opts.fast_paths && all_triangle_free ? "triangle-free" : "branch-and-bound";
    rep.witness = CliqueCover::from_clusters(n, std::move(clusters));
    rep.status = optimal ? SolveStatus::optimal : SolveStatus::timeout;
    if (optimal) lower = upper;
    rep.lower_bound = std::max(0, lower - 1);
    rep.upper_bound = std::max(0, upper - 1);
    rep.value = rep.upper_bound;
    rep.runtime_ms = sw.elapsed_ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Hausdorff: minimum number of colors h of a separating equivalent cover.
// Vertices outside every cluster of a color implicitly carry a singleton of
// that color, so separation only fails for an edge whose ends share a
// cluster in all h colors.

class SeparatingSearch {
public:
    SeparatingSearch(const Graph& g, Deadline& dl) : g_(g), index_(g), dl_(dl) {}

    bool decide(int h, std::vector<std::vector<VertexSet>>& out) {
        h_ = h;
        used_ = 0;
        member_.assign(h, std::vector<int>(g_.n(), -1));
        clusters_.assign(h, {});
        together_.assign(index_.edges().size(), 0);
        if (!search()) return false;
        out.assign(h, {});
        for (int c = 0; c < h; ++c)
            for (const auto& s : clusters_[c])
                if (!s.empty()) out[c].push_back(s);
        return true;
    }

private:
    enum class Kind { open, extend, merge };
    struct Move {
        int color;
        Kind kind;
        int a, b;  // cluster ids (extend: a grows by vertex b; merge: b joins a)
    };

    bool pairs_ok(const VertexSet& s, int v) const {
        for (int w = s.first(); w >= 0; w = s.next(w))
            if (!g_.adjacent(v, w) || together_[index_.id(v, w)] + 1 >= h_) return false;
        return true;
    }
    bool pairs_ok(const VertexSet& a, const VertexSet& b) const {
        for (int v = b.first(); v >= 0; v = b.next(v))
            if (!pairs_ok(a, v)) return false;
        return true;
    }

    void collect(int e, std::vector<Move>& moves) const {
        const Edge& edge = index_.edges()[e];
        const int u = edge.u;
        const int v = edge.v;
        if (together_[e] + 1 >= h_) return;
        for (int c = 0; c < used_; ++c) {
            int a = member_[c][u];
            int b = member_[c][v];
            if (a < 0 && b < 0) {
                moves.push_back({c, Kind::open, u, v});
            } else if (a >= 0 && b < 0) {
                if (pairs_ok(clusters_[c][a], v)) moves.push_back({c, Kind::extend, a, v});
            } else if (a < 0 && b >= 0) {
                if (pairs_ok(clusters_[c][b], u)) moves.push_back({c, Kind::extend, b, u});
            } else if (a != b) {
                if (pairs_ok(clusters_[c][a], clusters_[c][b])) moves.push_back({c, Kind::merge, a, b});
            }
        }
        // Empty colors are interchangeable: only the first one is tried.
        if (used_ < h_) moves.push_back({used_, Kind::open, u, v});
    }

    void bump(int v, const VertexSet& s, int delta) {
        for (int w = s.first(); w >= 0; w = s.next(w)) together_[index_.id(v, w)] += delta;
    }

    void apply(const Move& m) {
        auto& cl = clusters_[m.color];
        auto& mem = member_[m.color];
        switch (m.kind) {
            case Kind::open: {
                VertexSet s = g_.empty_set();
                s.insert(m.a);
                s.insert(m.b);
                mem[m.a] = mem[m.b] = static_cast<int>(cl.size());
                cl.push_back(std::move(s));
                ++together_[index_.id(m.a, m.b)];
                if (m.color == used_) ++used_;
                break;
            }
            case Kind::extend:
                bump(m.b, cl[m.a], +1);
                cl[m.a].insert(m.b);
                mem[m.b] = m.a;
                break;
            case Kind::merge:
                for (int v = cl[m.b].first(); v >= 0; v = cl[m.b].next(v)) {
                    bump(v, cl[m.a], +1);
                    mem[v] = m.a;
                }
                cl[m.a] |= cl[m.b];
                saved_.push_back(std::move(cl[m.b]));
                cl[m.b] = g_.empty_set();
                break;
        }
    }

    void undo(const Move& m) {
        auto& cl = clusters_[m.color];
        auto& mem = member_[m.color];
        switch (m.kind) {
            case Kind::open:
                --together_[index_.id(m.a, m.b)];
                mem[m.a] = mem[m.b] = -1;
                cl.pop_back();
                if (cl.empty()) --used_;
                break;
            case Kind::extend:
                cl[m.a].erase(m.b);
                mem[m.b] = -1;
                bump(m.b, cl[m.a], -1);
                break;
            case Kind::merge:
                cl[m.b] = std::move(saved_.back());
                saved_.pop_back();
                cl[m.a].subtract(cl[m.b]);
                for (int v = cl[m.b].first(); v >= 0; v = cl[m.b].next(v)) {
                    mem[v] = m.b;
                    bump(v, cl[m.a], -1);
                }
                break;
        }
    }

    bool search() {
        dl_.tick();
        const std::size_t m = index_.edges().size();
        int pick = -1;
        std::vector<Move> best;
        std::vector<Move> moves;
        for (std::size_t e = 0; e < m; ++e) {
            if (together_[e]) continue;
            moves.clear();
            collect(static_cast<int>(e), moves);
            if (moves.empty()) return false;
            if (pick < 0 || moves.size() < best.size()) {
                pick = static_cast<int>(e);
                best = moves;
                if (best.size() == 1) break;
            }
        }
        if (pick < 0) return true;
        // Grow existing clusters before opening new ones.
        std::stable_sort(best.begin(), best.end(), [](const Move& x, const Move& y) {
            return (x.kind != Kind::open) > (y.kind != Kind::open);
        });
        for (const Move& mv : best) {
            apply(mv);
            if (search()) return true;
            undo(mv);
        }
        return false;
    }

    const Graph& g_;
    EdgeIndex index_;
    Deadline& dl_;
    int h_ = 0;
    int used_ = 0;
    std::vector<std::vector<int>> member_;
    std::vector<std::vector<VertexSet>> clusters_;
    std::vector<int> together_;
    std::vector<VertexSet> saved_;
};

/// Per-vertex signature over cluster indices: u, v are separated iff they differ.
std::vector<std::vector<int>> signatures(int n, const std::vector<VertexSet>& clusters) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t i = 0; i < clusters.size(); ++i)
        for (int v = clusters[i].first(); v >= 0; v = clusters[i].next(v)) sig[v].push_back(static_cast<int>(i));
    return sig;
}

/// Completes per-color clusters into a separating cover, adding singletons
/// only for pairs the clusters leave unseparated. Returns false when some pair
/// has no color in which both ends are uncovered.
bool complete_cover(const Graph& g, std::vector<std::vector<VertexSet>> by_color, ColoredCover& out) {
    const int n = g.n();
    const int h = static_cast<int>(by_color.size());
    std::vector<std::vector<int>> colour_member(h, std::vector<int>(n, -1));
    for (int c = 0; c < h; ++c)
        for (std::size_t i = 0; i < by_color[c].size(); ++i)
            for (int v = by_color[c][i].first(); v >= 0; v = by_color[c][i].next(v))
                colour_member[c][v] = static_cast<int>(i);
    auto flat = [&] {
        std::vector<VertexSet> all;
        for (const auto& cs : by_color) all.insert(all.end(), cs.begin(), cs.end());
        return all;
    };
    auto sig = signatures(n, flat());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (sig[u] != sig[v]) continue;
            int colour = -1;
            for (int c = 0; c < h && colour < 0; ++c)
                if (colour_member[c][u] < 0 && colour_member[c][v] < 0) colour = c;
            if (colour < 0) return false;
            VertexSet s(n);
            s.insert(u);
            colour_member[colour][u] = static_cast<int>(by_color[colour].size());
            by_color[colour].push_back(std::move(s));
            sig = signatures(n, flat());
        }
    out = ColoredCover{};
    for (int c = 0; c < h; ++c)
        for (auto& s : by_color[c]) {
            out.clusters.push_back(std::move(s));
            out.colors.push_back(c + 1);
        }
    for (int c : out.colors) out.h = std::max(out.h, c);
    if (n == 1 && out.clusters.empty()) {
        VertexSet s(1);
        s.insert(0);
        out.clusters.push_back(std::move(s));
        out.colors.push_back(1);
        out.h = 1;
    }
    return true;
}

/// Equivalent cover from a proper coloring of given clusters' intersection
/// graph, plus one color of singletons if separation needs it.
ColoredCover cover_from_clusters(const Graph& g, const std::vector<VertexSet>& clusters) {
    std::vector<Edge> conflicts;
    for (std::size_t i = 0; i < clusters.size(); ++i)
        for (std::size_t j = i + 1; j < clusters.size(); ++j)
            if (clusters[i].intersects(clusters[j])) conflicts.emplace_back(static_cast<int>(i), static_cast<int>(j));
    Graph ig = Graph::from_edges(static_cast<int>(clusters.size()), conflicts);
    auto col = dsatur_coloring(ig);
    int k = 0;
    for (int c : col) k = std::max(k, c + 1);
    std::vector<std::vector<VertexSet>> by_color(k);
    for (std::size_t i = 0; i < clusters.size(); ++i) by_color[col[i]].push_back(clusters[i]);
    ColoredCover out;
    if (complete_cover(g, by_color, out)) return out;
    by_color.emplace_back();
    complete_cover(g, by_color, out);
    return out;
}

std::vector<VertexSet> edge_clusters(const Graph& g) {
    std::vector<VertexSet> out;
    for (const Edge& e : g.edges()) {
        VertexSet s(g.n());
        s.insert(e.u);
        s.insert(e.v);
        out.push_back(std::move(s));
    }
    return out;
}

ColoredCover cover_from_edge_coloring(const Graph& g, const std::vector<int>& colors) {
    auto edges = edge_clusters(g);
    int k = 0;
    for (int c : colors) k = std::max(k, c + 1);
    std::vector<std::vector<VertexSet>> by_color(k);
    for (std::size_t i = 0; i < edges.size(); ++i) by_color[colors[i]].push_back(edges[i]);
    ColoredCover out;
    if (complete_cover(g, by_color, out)) return out;
    by_color.emplace_back();
    complete_cover(g, by_color, out);
    return out;
}

DimensionReport hausdorff_impl(const Graph& g, int lower_from_l, const std::vector<VertexSet>& lebesgue_clusters,
                               const SolveOptions& opts, Deadline& dl) {
    Stopwatch sw;
    DimensionReport rep;
    const int n = g.n();
    if (n == 0) {
        rep.method = "trivial";
        rep.witness = ColoredCover{};
        return rep;
    }
    if (opts.fast_paths && n >= 3 && is_connected(g) && triangle_free(g)) {
        auto r = edge_chromatic_number(g, dl);
        rep.method = "triangle-free";
        rep.witness = cover_from_edge_coloring(g, r.colors);
        rep.status = r.optimal ? SolveStatus::optimal : SolveStatus::timeout;
        rep.lower_bound = r.lower_bound - 1;
        rep.upper_bound = r.upper_bound - 1;
        rep.value = rep.upper_bound;
        rep.runtime_ms = sw.elapsed_ms();
        return rep;
    }

    rep.method = "branch-and-bound";
    ColoredCover best = cover_from_edge_coloring(g, misra_gries_edge_coloring(g));
    if (!lebesgue_clusters.empty()) {
        ColoredCover alt = cover_from_clusters(g, lebesgue_clusters);
        if (alt.h < best.h) best = std::move(alt);
    }
    int lower = std::max({lower_from_l, g.m() > 0 ? 2 : 1, 1});
    int upper = best.h;
    bool optimal = false;
    try {
        SeparatingSearch search(g, dl);
        std::vector<std::vector<VertexSet>> found;
        while (lower < upper) {
            if (search.decide(lower, found)) {
                ColoredCover c;
                if (complete_cover(g, found, c) && c.h <= lower) {
                    best = std::move(c);
                    upper = best.h;
                    break;
                }
                throw Error("separating search returned an incomplete cover");
            }
            ++lower;
        }
        lower = upper;
        optimal = true;
    } catch (const SearchTimeout&) {
    }
    rep.witness = best;
    rep.status = optimal ? SolveStatus::optimal : SolveStatus::timeout;
    rep.lower_bound = std::max(0, lower - 1);
    rep.upper_bound = std::max(0, upper - 1);
    rep.value = rep.upper_bound;
    rep.runtime_ms = sw.elapsed_ms();
    return rep;
}

}  // namespace

DimensionReport lebesgue_dimension(const Graph& g, const SolveOptions& opts) {
    Deadline dl(opts.time_limit);
    return lebesgue_impl(g, opts, dl);
}

DimensionReport hausdorff_dimension(const Graph& g, const SolveOptions& opts) {
    Deadline dl(opts.time_limit);
    Stopwatch sw;
    auto lr = lebesgue_impl(g, opts, dl);
    const auto& lc = std::get<CliqueCover>(lr.witness).clusters;
    auto rep = hausdorff_impl(g, lr.lower_bound + 1, lc, opts, dl);
    rep.runtime_ms = sw.elapsed_ms();
    return rep;
}

DimensionReport hausdorff_dimension(const Graph& g, int dim_l, const SolveOptions& opts) {
    Deadline dl(opts.time_limit);
    return hausdorff_impl(g, dim_l + 1, {}, opts, dl);
}

DimensionReport hausdorff_dimension(const Graph& g, const DimensionReport& lebesgue, const SolveOptions& opts) {
    Deadline dl(opts.time_limit);
    const auto* cover = std::get_if<CliqueCover>(&lebesgue.witness);
    return hausdorff_impl(g, lebesgue.lower_bound + 1, cover ? cover->clusters : std::vector<VertexSet>{}, opts, dl);
}

Verification verify_clique_cover(const Graph& g, const CliqueCover& c) {
    Verification v;
    for (const auto& s : c.clusters) {
        if (s.universe() != g.n()) {
            v.violations.push_back("cluster over a different vertex universe");
            continue;
        }
        if (s.empty()) v.violations.push_back("empty cluster");
        if (!g.is_clique(s)) v.violations.push_back("cluster " + set_text(g, s) + " is not a clique");
    }
    if (!v.violations.empty()) {
        v.ok = false;
        return v;
    }
    for (const Edge& e : g.edges()) {
        bool covered = std::any_of(c.clusters.begin(), c.clusters.end(),
                                   [&](const VertexSet& s) { return s.contains(e.u) && s.contains(e.v); });
        if (!covered) v.violations.push_back("edge " + g.label(e.u) + "-" + g.label(e.v) + " is not covered");
    }
    auto expect = CliqueCover::from_clusters(g.n(), c.clusters);
    if (!c.multiplicity.empty() && c.multiplicity != expect.multiplicity)
        v.violations.push_back("multiplicity does not match the clusters");
    if (c.max_multiplicity != expect.max_multiplicity) v.violations.push_back("max_multiplicity is inconsistent");
    v.ok = v.violations.empty();
    return v;
}

Verification verify_colored_cover(const Graph& g, const ColoredCover& c) {
    Verification v;
    if (c.colors.size() != c.clusters.size()) {
        v.ok = false;
        v.violations.push_back("colors and clusters differ in length");
        return v;
    }
    for (std::size_t i = 0; i < c.clusters.size(); ++i) {
        const auto& s = c.clusters[i];
        if (s.universe() != g.n()) {
            v.violations.push_back("cluster over a different vertex universe");
            continue;
        }
        if (s.empty()) v.violations.push_back("empty cluster");
        if (!g.is_clique(s)) v.violations.push_back("cluster " + set_text(g, s) + " is not a clique");
        if (c.colors[i] < 1 || c.colors[i] > c.h)
            v.violations.push_back("cluster " + set_text(g, s) + " has color outside 1.." + std::to_string(c.h));
    }
    if (!v.violations.empty()) {
        v.ok = false;
        return v;
    }
    for (std::size_t i = 0; i < c.clusters.size(); ++i)
        for (std::size_t j = i + 1; j < c.clusters.size(); ++j)
            if (c.colors[i] == c.colors[j] && c.clusters[i].intersects(c.clusters[j]))
                v.violations.push_back("clusters " + set_text(g, c.clusters[i]) + " and " + set_text(g, c.clusters[j]) +
                                       " share color " + std::to_string(c.colors[i]) + " and intersect");
    for (const Edge& e : g.edges()) {
        bool covered = std::any_of(c.clusters.begin(), c.clusters.end(),
                                   [&](const VertexSet& s) { return s.contains(e.u) && s.contains(e.v); });
        if (!covered) v.violations.push_back("edge " + g.label(e.u) + "-" + g.label(e.v) + " is not covered");
    }
    auto sig = signatures(g.n(), c.clusters);
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            if (sig[a] == sig[b])
                v.violations.push_back("vertices " + g.label(a) + " and " + g.label(b) + " are not separated");
    v.ok = v.violations.empty();
    return v;
}

std::pair<DimensionReport, DimensionReport> triangle_free_fast_path(const Graph& g, const SolveOptions& opts) {
    if (g.n() < 3) throw PreconditionError("triangle-free fast path needs n >= 3; use the general solver");
    if (!is_connected(g)) throw PreconditionError("triangle-free fast path needs a connected graph");
    if (!triangle_free(g)) throw PreconditionError("graph has a triangle; use the general solver");
    SolveOptions o = opts;
    o.fast_paths = true;
    Deadline dl(opts.time_limit);
    auto l = lebesgue_impl(g, o, dl);
    auto h = hausdorff_impl(g, l.value + 1, {}, o, dl);
    return {std::move(l), std::move(h)};
}

std::string lebesgue_lp(const Graph& g) {
    auto maximal = maximal_cliques(g).cliques;
    auto edges = g.edges();
    std::ostringstream os;
    os << "\\ clique cover: minimise the largest vertex multiplicity z\nMinimize\n obj: z\nSubject To\n";
    for (int v = 0; v < g.n(); ++v) {
        os << " mult_" << v << ":";
        for (std::size_t j = 0; j < maximal.size(); ++j)
            if (maximal[j].contains(v)) os << " + x_" << v << "_" << j;
        os << " - z <= 0\n";
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        os << " cover_edge_" << e << ":";
        for (std::size_t j = 0; j < maximal.size(); ++j)
            if (maximal[j].contains(edges[e].u) && maximal[j].contains(edges[e].v)) os << " + y_" << e << "_" << j;
        os << " >= 1\n";
    }
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t j = 0; j < maximal.size(); ++j) {
            const int u = edges[e].u;
            const int v = edges[e].v;
            if (!maximal[j].contains(u) || !maximal[j].contains(v)) continue;
            os << " link_u_" << e << "_" << j << ": y_" << e << "_" << j << " - x_" << u << "_" << j << " <= 0\n";
            os << " link_v_" << e << "_" << j << ": y_" << e << "_" << j << " - x_" << v << "_" << j << " <= 0\n";
            os << " link_uv_" << e << "_" << j << ": y_" << e << "_" << j << " - x_" << u << "_" << j << " - x_" << v
               << "_" << j << " >= -1\n";
        }
    os << "Bounds\n 1 <= z <= " << std::max(1, g.max_degree()) << "\nGeneral\n z\nBinary\n";
    for (int v = 0; v < g.n(); ++v)
        for (std::size_t j = 0; j < maximal.size(); ++j)
            if (maximal[j].contains(v)) os << " x_" << v << "_" << j << "\n";
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t j = 0; j < maximal.size(); ++j)
            if (maximal[j].contains(edges[e].u) && maximal[j].contains(edges[e].v)) os << " y_" << e << "_" << j << "\n";
    os << "End\n";
    return os.str();
}

std::string hausdorff_lp(const Graph& g, int colors, int dim_l) {
    if (colors < 1) throw InvalidArgument("need at least one color");
    auto pruned = prune_for_hausdorff(g, all_cliques(g, true), dim_l, true);
    const auto& cl = pruned.retained.cliques;
    const std::size_t q = cl.size();
    auto edges = g.edges();
    std::ostringstream os;
    os << "\\ separating equivalent cover: minimise the number of colors\n";
    for (const auto& w : pruned.warnings) os << "\\ prune: " << w << "\n";
    os << "Minimize\n obj:";
    for (int k = 0; k < colors; ++k) os << " + y_" << k;
    os << "\nSubject To\n";
    auto sum_x = [&](auto&& pred) {
        for (std::size_t i = 0; i < q; ++i)
            if (pred(cl[i]))
                for (int k = 0; k < colors; ++k) os << " + x_" << i << "_" << k;
    };
    for (int k = 0; k < colors; ++k) {
        os << " use_color_" << k << ":";
        for (std::size_t i = 0; i < q; ++i) os << " + x_" << i << "_" << k;
        os << " - " << q << " y_" << k << " <= 0\n";
    }
    for (std::size_t i = 0; i < q; ++i) {
        os << " one_color_" << i << ":";
        for (int k = 0; k < colors; ++k) os << " + x_" << i << "_" << k;
        os << " <= 1\n";
    }
    for (int k = 0; k < colors; ++k)
        for (int v = 0; v < g.n(); ++v) {
            os << " color_disjoint_" << k << "_" << v << ":";
            for (std::size_t i = 0; i < q; ++i)
                if (cl[i].contains(v)) os << " + x_" << i << "_" << k;
            os << " <= 1\n";
        }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        os << " cover_edge_" << e << ":";
        sum_x([&](const VertexSet& s) { return s.contains(edges[e].u) && s.contains(edges[e].v); });
        os << " >= 1\n";
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            os << " separate_" << u << "_" << v << ":";
            sum_x([&](const VertexSet& s) { return s.contains(u) != s.contains(v); });
            os << " >= 1\n";
        }
    os << "Binary\n";
    for (std::size_t i = 0; i < q; ++i)
        for (int k = 0; k < colors; ++k) os << " x_" << i << "_" << k << "\n";
    for (int k = 0; k < colors; ++k) os << " y_" << k << "\n";
    os << "End\n";
    return os.str();
}

}  // namespace fracdim
