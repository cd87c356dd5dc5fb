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

#include "fracdim/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <sstream>

#include "fracdim/error.hpp"

namespace fracdim {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return from_edges(std::move(labels), edges);
}

Graph Graph::from_edges(std::vector<std::string> labels, std::span<const Edge> edges) {
    Graph g;
    const int n = static_cast<int>(labels.size());
    g.labels_ = std::move(labels);
    g.adj_.assign(n, VertexSet(n));
    g.lists_.assign(n, {});
    for (const Edge& e : edges) {
        if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n) throw InvalidArgument("edge endpoint out of range");
        if (g.adj_[e.u].contains(e.v)) continue;
        g.adj_[e.u].insert(e.v);
        g.adj_[e.v].insert(e.u);
        ++g.m_;
    }
    for (int v = 0; v < n; ++v) g.lists_[v] = g.adj_[v].members();
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& l : lists_) d = std::max(d, static_cast<int>(l.size()));
    return d;
}

std::optional<int> Graph::index_of(std::string_view label) const {
    for (int i = 0; i < n(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : lists_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_clique(const VertexSet& s) const {
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        VertexSet rest = s;
        rest.erase(v);
        if (!rest.subset_of(adj_[v])) return false;
    }
    return true;
}

int GraphBuilder::add_vertex(std::string_view label) {
    auto it = index_.find(std::string(label));
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(labels_.size());
    labels_.emplace_back(label);
    index_.emplace(std::string(label), id);
    return id;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b) {
    const int u = add_vertex(a);
    add_edge(u, add_vertex(b));
}

void GraphBuilder::add_edge(int u, int v) {
    if (u == v) throw InvalidArgument("self-loop at vertex " + labels_.at(u));
    edges_.emplace_back(u, v);
}

Graph GraphBuilder::build() const { return Graph::from_edges(labels_, edges_); }

Graph parse_edge_list(std::string_view text) {
    GraphBuilder b;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() == 1) {
            b.add_vertex(tokens[0]);
        } else if (tokens.size() == 2) {
            if (tokens[0] == tokens[1])
                throw ParseError("self-loop on vertex '" + std::string(tokens[0]) + "'", line_no);
            b.add_edge(tokens[0], tokens[1]);
        } else {
            throw ParseError("expected one or two tokens, found " + std::to_string(tokens.size()),
                             line_no);
        }
        if (end == text.size()) break;
    }
    return b.build();
}

Graph parse_edge_list(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str());
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    // Vertex declarations first keep the index order stable through a round trip.
    for (int v = 0; v < g.n(); ++v) {
        out += g.label(v);
        out += '\n';
    }
    for (const Edge& e : g.edges()) {
        out += g.label(e.u);
        out += ' ';
        out += g.label(e.v);
        out += '\n';
    }
    return out;
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(g.labels(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> pos(g.n(), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        pos[vertices[i]] = static_cast<int>(i);
        labels.push_back(g.label(vertices[i]));
    }
    std::vector<Edge> edges;
    for (int u : vertices)
        for (int v : g.adjacency_list(u))
            if (pos[v] >= 0 && u < v) edges.emplace_back(pos[u], pos[v]);
    return Graph::from_edges(std::move(labels), edges);
}

namespace {

template <typename NeighbourFn>
std::vector<std::vector<int>> components_by(int n, NeighbourFn&& neighbours) {
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            neighbours(members[i], [&](int w) {
                if (comp[w] < 0) {
                    comp[w] = static_cast<int>(out.size());
                    members.push_back(w);
                }
            });
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> connected_components(const Graph& g) {
    return components_by(g.n(), [&](int v, auto&& visit) {
        for (int w : g.adjacency_list(v)) visit(w);
    });
}

std::vector<std::vector<int>> co_connected_components(const Graph& g) {
    return components_by(g.n(), [&](int v, auto&& visit) {
        for (int w = 0; w < g.n(); ++w)
            if (w != v && !g.adjacent(v, w)) visit(w);
    });
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<std::vector<int>> true_twin_classes(const Graph& g) {
    std::map<VertexSet, std::vector<int>> by_closed;
    for (int v = 0; v < g.n(); ++v) {
        VertexSet closed = g.neighbors(v);
        closed.insert(v);
        by_closed[closed].push_back(v);
    }
    std::vector<std::vector<int>> out;
    for (auto& [key, cls] : by_closed) out.push_back(std::move(cls));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> true_twins(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (auto& cls : true_twin_classes(g))
        if (cls.size() >= 2) out.push_back(std::move(cls));
    return out;
}

namespace {

struct LowLink {
    std::vector<Edge> bridges;
    bool has_cut_vertex = false;
};

// Iterative Tarjan lowlink over every component.
LowLink lowlink(const Graph& g) {
    const int n = g.n();
    LowLink out;
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::size_t> it(n, 0);
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        int root_children = 0;
        std::vector<int> stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            int v = stack.back();
            auto nbrs = g.adjacency_list(v);
            if (it[v] < nbrs.size()) {
                int w = nbrs[it[v]++];
                if (disc[w] < 0) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    if (v == root) ++root_children;
                    stack.push_back(w);
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[v];
                if (p >= 0) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) out.bridges.emplace_back(p, v);
                    if (p != root && low[v] >= disc[p]) out.has_cut_vertex = true;
                }
            }
        }
        if (root_children > 1) out.has_cut_vertex = true;
    }
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

}  // namespace

std::vector<Edge> bridges(const Graph& g) { return lowlink(g).bridges; }

bool is_biconnected(const Graph& g) {
    if (!is_connected(g)) return false;
    LowLink ll = lowlink(g);
    return ll.bridges.empty() && !ll.has_cut_vertex;
}

std::vector<int> triangle_counts(const Graph& g) {
    std::vector<int> tr(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        int c = 0;
        for (int a : g.adjacency_list(v))
            c += (g.neighbors(a) & g.neighbors(v)).count();
        tr[v] = c / 2;
    }
    return tr;
}

Graph remove_triangle_edges(const Graph& g) {
    std::vector<Edge> keep;
    for (const Edge& e : g.edges())
        if (!g.neighbors(e.u).intersects(g.neighbors(e.v))) keep.push_back(e);
    return Graph::from_edges(g.labels(), keep);
}

Graph largest_component(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.empty()) return g;
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() > comps[best].size()) best = i;
    if (comps[best].size() == static_cast<std::size_t>(g.n())) return g;
    return induced_subgraph(g, comps[best]);
}

bool has_induced_claw(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        auto nb = g.adjacency_list(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return true;
            }
    }
    return false;
}

bool has_induced_diamond(const Graph& g) {
    for (const Edge& e : g.edges()) {
        VertexSet common = g.neighbors(e.u) & g.neighbors(e.v);
        for (int a = common.first(); a >= 0; a = common.next(a)) {
            VertexSet rest = common;
            rest.subtract(g.neighbors(a));
            rest.erase(a);
            if (!rest.empty()) return true;
        }
    }
    return false;
}

bool has_induced_butterfly(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        std::vector<Edge> inner;
        auto nb = g.adjacency_list(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (g.adjacent(nb[i], nb[j])) inner.emplace_back(nb[i], nb[j]);
        for (std::size_t i = 0; i < inner.size(); ++i)
            for (std::size_t j = i + 1; j < inner.size(); ++j) {
                const Edge& a = inner[i];
                const Edge& b = inner[j];
                if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
                if (g.adjacent(a.u, b.u) || g.adjacent(a.u, b.v) || g.adjacent(a.v, b.u) ||
                    g.adjacent(a.v, b.v))
                    continue;
                return true;
            }
    }
    return false;
}

bool has_k4(const Graph& g) {
    for (const Edge& e : g.edges()) {
        VertexSet common = g.neighbors(e.u) & g.neighbors(e.v);
        for (int a = common.first(); a >= 0; a = common.next(a))
            if (common.intersects(g.neighbors(a))) return true;
    }
    return false;
}

namespace {

// Extends the induced path `path` (path[0] is the smallest vertex of any cycle
// found from it). Returns true once an odd induced cycle of length >= 5 closes.
bool extend_hole(const Graph& g, std::vector<int>& path, VertexSet& blocked) {
    const int start = path.front();
    const int last = path.back();
    for (int w : g.adjacency_list(last)) {
        if (w <= start || blocked.contains(w)) continue;
        // w may touch only `last` and possibly `start` among path vertices.
        bool chord = false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (g.adjacent(w, path[i])) {
                chord = true;
                break;
            }
        if (chord) continue;
        if (g.adjacent(w, start)) {
            if (path.size() < 2) continue;
            std::size_t len = path.size() + 1;
            if (len >= 5 && len % 2 == 1) return true;
            continue;
        }
        path.push_back(w);
        blocked.insert(w);
        if (extend_hole(g, path, blocked)) return true;
        blocked.erase(w);
        path.pop_back();
    }
    return false;
}

}  // namespace

bool has_odd_hole(const Graph& g) {
    for (int s = 0; s < g.n(); ++s) {
        auto nb = g.adjacency_list(s);
        for (int a : nb) {
            if (a <= s) continue;
            std::vector<int> path{s, a};
            VertexSet blocked(g.n());
            blocked.insert(s);
            blocked.insert(a);
            if (extend_hole(g, path, blocked)) return true;
        }
    }
    return false;
}

StructureProfile structure_profile(const Graph& g, const StructureOptions& opts) {
    StructureProfile p;
    p.max_degree = g.max_degree();
    p.tr = triangle_counts(g);
    p.triangle_free = std::all_of(p.tr.begin(), p.tr.end(), [](int t) { return t == 0; });
    p.contains_claw = has_induced_claw(g);
    if (!p.triangle_free) {
        p.contains_diamond = has_induced_diamond(g);
        p.contains_butterfly = has_induced_butterfly(g);
        p.contains_k4 = has_k4(g);
    }
    if (opts.detect_odd_holes) {
        if (g.n() > opts.odd_hole_vertex_limit)
            throw SizeLimitError("odd-hole detection limited to " +
                                 std::to_string(opts.odd_hole_vertex_limit) + " vertices, graph has " +
                                 std::to_string(g.n()));
        p.has_odd_hole = has_odd_hole(g);
    }
    LowLink ll = lowlink(g);
    p.bridges = std::move(ll.bridges);
    p.biconnected = is_connected(g) && p.bridges.empty() && !ll.has_cut_vertex;
    return p;
}

}  // namespace fracdim
