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

#include "fracdim/fractality.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "fracdim/coloring.hpp"
#include "fracdim/dimensions.hpp"
#include "fracdim/error.hpp"
#include "fracdim/isomorphism.hpp"

namespace fracdim {

const char* to_string(FractalMethod m) {
    switch (m) {
        case FractalMethod::general_solver: return "general-solver";
        case FractalMethod::triangle_free: return "triangle-free";
        case FractalMethod::subcubic_theorem: return "subcubic-theorem";
        case FractalMethod::cubic_reduction: return "cubic-reduction";
    }
    return "?";
}

const char* to_string(TerminalVerdict v) {
    switch (v) {
        case TerminalVerdict::class1: return "class1";
        case TerminalVerdict::snark: return "snark";
        case TerminalVerdict::has_bridge: return "has_bridge";
    }
    return "?";
}

nlohmann::json to_json(const FractalityReport& r) {
    nlohmann::json j;
    j["dim_l"] = r.dim_l;
    j["dim_h"] = r.dim_h;
    j["is_fractal"] = r.determined ? nlohmann::json(r.is_fractal) : nlohmann::json(nullptr);
    j["fractal_order"] = r.fractal_order ? nlohmann::json(*r.fractal_order) : nlohmann::json(nullptr);
    j["method"] = to_string(r.method);
    j["certificates"] = r.certificates;
    j["bounds"] = {{"dim_l", {r.dim_l_lower, r.dim_l_upper}}, {"dim_h", {r.dim_h_lower, r.dim_h_upper}}};
    return j;
}

namespace {

void require_connected(const Graph& g) {
    if (g.n() == 0 || !is_connected(g)) throw PreconditionError("graph must be connected and non-empty");
}

void settle(FractalityReport& r) {
    r.dim_l_lower = r.dim_l_upper = r.dim_l;
    r.dim_h_lower = r.dim_h_upper = r.dim_h;
    r.determined = true;
    r.is_fractal = r.dim_l < r.dim_h;
    if (r.is_fractal) r.fractal_order = r.dim_l;
}

}  // namespace

FractalityReport classify_general(const Graph& g, Seconds time_limit) {
    require_connected(g);
    Stopwatch clock;
    SolveOptions opts;
    opts.fast_paths = false;
    opts.time_limit = time_limit;
    DimensionReport l = lebesgue_dimension(g, opts);
    opts.time_limit = Seconds(std::max(0.0, time_limit.count() - static_cast<double>(clock.elapsed_ms()) / 1000.0));
    DimensionReport h = hausdorff_dimension(g, l, opts);

    FractalityReport r;
    r.method = FractalMethod::general_solver;
    r.dim_l = l.value;
    r.dim_h = h.value;
    r.dim_l_lower = l.lower_bound;
    r.dim_l_upper = l.upper_bound;
    r.dim_h_lower = h.lower_bound;
    r.dim_h_upper = h.upper_bound;
    if (l.upper_bound < h.lower_bound) {
        r.is_fractal = true;
    } else if (h.upper_bound <= l.lower_bound) {
        r.is_fractal = false;
    } else {
        r.determined = false;
    }
    // The order is dim_l itself, so it is only known once dim_l is.
    if (r.determined && r.is_fractal && l.optimal()) r.fractal_order = l.value;
    if (!l.optimal()) r.certificates.push_back("lebesgue search timed out");
    if (!h.optimal()) r.certificates.push_back("hausdorff search timed out");
    return r;
}

FractalityReport subcubic_fractal_test(const Graph& g) {
    require_connected(g);
    if (g.max_degree() > 3) throw PreconditionError("subcubic test needs max degree <= 3");
    if (g.n() < 5) throw PreconditionError("subcubic test needs n >= 5; use the general solvers");

    FractalityReport r;
    r.method = FractalMethod::subcubic_theorem;
    if (!has_induced_claw(g)) {
        r.dim_l = 1;
        r.certificates.push_back("claw-free");
        bool diamond = has_induced_diamond(g);
        bool hole = !diamond && has_odd_hole(g);
        if (diamond) r.certificates.push_back("contains diamond");
        if (hole) r.certificates.push_back("contains odd hole");
        if (!diamond && !hole) r.certificates.push_back("no diamond, no odd hole");
        r.dim_h = diamond || hole ? 2 : 1;
    } else {
        r.dim_l = 2;
        r.certificates.push_back("contains claw");
        Deadline unlimited;
        Graph g3 = remove_triangle_edges(g);
        auto chi = edge_chromatic_number(g3, unlimited);
        bool class2 = chi.value > g3.max_degree();
        r.certificates.push_back(class2 ? "G_-3 class 2" : "G_-3 class 1");
        r.dim_h = class2 ? 3 : 2;
    }
    settle(r);
    return r;
}

FractalityReport classify(const Graph& g, Seconds time_limit) {
    require_connected(g);
    if (g.n() >= 3 && structure_profile(g).triangle_free) {
        SolveOptions opts;
        opts.time_limit = time_limit;
        auto [l, h] = triangle_free_fast_path(g, opts);
        FractalityReport r;
        r.method = FractalMethod::triangle_free;
        r.dim_l = l.value;
        r.dim_h = h.value;
        r.certificates.push_back("triangle-free");
        r.certificates.push_back(h.value > l.value + 1 ? "class 2" : "class 1");
        if (!h.optimal()) {
            r.dim_l_lower = r.dim_l_upper = r.dim_l;
            r.dim_h_lower = h.lower_bound;
            r.dim_h_upper = h.upper_bound;
            r.determined = h.lower_bound > r.dim_l;
            r.is_fractal = r.determined;
            if (r.is_fractal) r.fractal_order = r.dim_l;
            r.certificates.push_back("edge coloring search timed out");
            return r;
        }
        settle(r);
        return r;
    }
    if (g.n() >= 5 && g.max_degree() <= 3) return subcubic_fractal_test(g);
    return classify_general(g, time_limit);
}

// --- Pendant operations on simple graphs ------------------------------------

Graph pendant_triple_contraction(const Graph& g, int u, int v, int w) {
    for (int x : {u, v, w}) {
        if (x < 0 || x >= g.n()) throw InvalidArgument("vertex index out of range");
        if (g.degree(x) != 1)
            throw PreconditionError("vertex " + g.label(x) + " has degree " + std::to_string(g.degree(x)) +
                                    ", expected 1");
    }
    if (u == v || v == w || u == w) throw PreconditionError("pendant vertices must be distinct");

    std::vector<int> keep;
    std::vector<int> pos(g.n(), -1);
    std::vector<std::string> labels;
    for (int x = 0; x < g.n(); ++x)
        if (x != u && x != v && x != w) {
            pos[x] = static_cast<int>(keep.size());
            keep.push_back(x);
            labels.push_back(g.label(x));
        }
    const int x = static_cast<int>(keep.size());
    labels.push_back(g.label(u) + "+" + g.label(v) + "+" + g.label(w));
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (pos[e.u] >= 0 && pos[e.v] >= 0) edges.emplace_back(pos[e.u], pos[e.v]);
    for (int p : {u, v, w}) {
        int nb = g.adjacency_list(p)[0];
        // A pendant neighbour of another pendant would make a loop.
        if (pos[nb] < 0) throw PreconditionError("pendant vertices " + g.label(p) + " and " + g.label(nb) +
                                                 " are adjacent");
        edges.emplace_back(pos[nb], x);
    }
    return Graph::from_edges(std::move(labels), edges);
}

Graph pendant_edge_identification(const Graph& g, Edge e1, Edge e2) {
    auto split = [&](Edge e) {
        if (e.u < 0 || e.v >= g.n() || !g.adjacent(e.u, e.v))
            throw PreconditionError("not an edge of the graph");
        bool pu = g.degree(e.u) == 1, pv = g.degree(e.v) == 1;
        if (pu && pv) throw PreconditionError("edge " + g.label(e.u) + "-" + g.label(e.v) + " is an isolated edge");
        if (!pu && !pv)
            throw PreconditionError("edge " + g.label(e.u) + "-" + g.label(e.v) + " has no degree-1 end");
        return pv ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
    };
    auto [u1, v1] = split(e1);
    auto [u2, v2] = split(e2);
    if (u1 == u2) throw PreconditionError("both pendant edges hang from " + g.label(u1));
    if (g.adjacent(u1, u2))
        throw PreconditionError("identification would create a parallel edge " + g.label(u1) + "-" + g.label(u2));

    std::vector<int> keep;
    for (int x = 0; x < g.n(); ++x)
        if (x != v1 && x != v2) keep.push_back(x);
    std::vector<int> pos(g.n(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
    std::vector<std::string> labels;
    for (int x : keep) labels.push_back(g.label(x));
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (pos[e.u] >= 0 && pos[e.v] >= 0) edges.emplace_back(pos[e.u], pos[e.v]);
    edges.emplace_back(pos[u1], pos[u2]);
    return Graph::from_edges(std::move(labels), edges);
}

// --- Multigraphs ---------------------------------------------------------------

std::vector<int> Multigraph::degrees() const {
    std::vector<int> d(n(), 0);
    for (const Edge& e : edges) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

Multigraph Multigraph::from_graph(const Graph& g) { return {g.labels(), g.edges()}; }

Graph Multigraph::subdivision() const {
    std::vector<Edge> out;
    const int n0 = n();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int s = n0 + static_cast<int>(i);
        out.emplace_back(edges[i].u, s);
        out.emplace_back(edges[i].v, s);
    }
    return Graph::from_edges(n0 + static_cast<int>(edges.size()), out);
}

std::optional<std::vector<int>> three_edge_coloring(const Multigraph& mg) {
    const int m = static_cast<int>(mg.edges.size());
    std::vector<unsigned> used(mg.n(), 0);
    std::vector<int> color(m, -1);
    for (int d : mg.degrees())
        if (d > 3) return std::nullopt;

    std::function<bool(int)> go = [&](int left) -> bool {
        if (left == 0) return true;
        int best = -1;
        unsigned best_free = 0;
        int best_count = 4;
        for (int i = 0; i < m; ++i) {
            if (color[i] >= 0) continue;
            unsigned free = ~(used[mg.edges[i].u] | used[mg.edges[i].v]) & 7U;
            int c = std::popcount(free);
            if (c < best_count) {
                best = i;
                best_free = free;
                best_count = c;
                if (c <= 1) break;
            }
        }
        if (best_count == 0) return false;
        const Edge& e = mg.edges[best];
        for (int c = 0; c < 3; ++c) {
            if (!(best_free >> c & 1U)) continue;
            color[best] = c;
            used[e.u] |= 1U << c;
            used[e.v] |= 1U << c;
            if (go(left - 1)) return true;
            used[e.u] &= ~(1U << c);
            used[e.v] &= ~(1U << c);
            color[best] = -1;
        }
        return false;
    };
    if (!go(m)) return std::nullopt;
    return color;
}

namespace {

const char* kind_name(ReductionStep::Kind k) {
    switch (k) {
        case ReductionStep::Kind::remove_isolated: return "remove-isolated";
        case ReductionStep::Kind::pendant_triple_contraction: return "pendant-triple-contraction";
        case ReductionStep::Kind::pendant_edge_identification: return "pendant-edge-identification";
    }
    return "?";
}

ReductionStep::Kind kind_from(const std::string& s) {
    if (s == "remove-isolated") return ReductionStep::Kind::remove_isolated;
    if (s == "pendant-triple-contraction") return ReductionStep::Kind::pendant_triple_contraction;
    if (s == "pendant-edge-identification") return ReductionStep::Kind::pendant_edge_identification;
    throw InvalidArgument("unknown reduction step '" + s + "'");
}

TerminalVerdict verdict_from(const std::string& s) {
    if (s == "class1") return TerminalVerdict::class1;
    if (s == "snark") return TerminalVerdict::snark;
    if (s == "has_bridge") return TerminalVerdict::has_bridge;
    throw InvalidArgument("unknown terminal verdict '" + s + "'");
}

int find_label(const Multigraph& mg, const std::string& label) {
    for (int i = 0; i < mg.n(); ++i)
        if (mg.labels[i] == label) return i;
    throw PreconditionError("no vertex labelled '" + label + "'");
}

int pendant_neighbor(const Multigraph& mg, int v) {
    for (const Edge& e : mg.edges) {
        if (e.u == v) return e.v;
        if (e.v == v) return e.u;
    }
    return -1;
}

// Drops the vertices in `gone`; pos maps old indices to new ones or -1.
Multigraph without(const Multigraph& mg, const std::vector<int>& gone, std::vector<int>& pos) {
    pos.assign(mg.n(), -1);
    Multigraph out;
    for (int v = 0; v < mg.n(); ++v)
        if (std::find(gone.begin(), gone.end(), v) == gone.end()) {
            pos[v] = out.n();
            out.labels.push_back(mg.labels[v]);
        }
    for (const Edge& e : mg.edges)
        if (pos[e.u] >= 0 && pos[e.v] >= 0) out.edges.emplace_back(pos[e.u], pos[e.v]);
    return out;
}

Multigraph contract_triple(const Multigraph& mg, int u, int v, int w) {
    int nu = pendant_neighbor(mg, u), nv = pendant_neighbor(mg, v), nw = pendant_neighbor(mg, w);
    std::vector<int> pos;
    Multigraph out = without(mg, {u, v, w}, pos);
    if (pos[nu] < 0 || pos[nv] < 0 || pos[nw] < 0) throw PreconditionError("pendant vertices are adjacent");
    int x = out.n();
    out.labels.push_back(mg.labels[u] + "+" + mg.labels[v] + "+" + mg.labels[w]);
    for (int nb : {nu, nv, nw}) out.edges.emplace_back(pos[nb], x);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

Multigraph identify(const Multigraph& mg, int v1, int v2) {
    int u1 = pendant_neighbor(mg, v1), u2 = pendant_neighbor(mg, v2);
    if (u1 == u2) throw PreconditionError("both pendant edges hang from " + mg.labels[u1]);
    std::vector<int> pos;
    Multigraph out = without(mg, {v1, v2}, pos);
    out.edges.emplace_back(pos[u1], pos[u2]);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

bool connected_without(const Multigraph& mg, std::size_t skip, int from, int to) {
    std::vector<std::vector<int>> adj(mg.n());
    for (std::size_t i = 0; i < mg.edges.size(); ++i) {
        if (i == skip) continue;
        adj[mg.edges[i].u].push_back(mg.edges[i].v);
        adj[mg.edges[i].v].push_back(mg.edges[i].u);
    }
    std::vector<char> seen(mg.n(), 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == to) return true;
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    return false;
}

bool has_bridge(const Multigraph& mg) {
    for (std::size_t i = 0; i < mg.edges.size(); ++i)
        if (!connected_without(mg, i, mg.edges[i].u, mg.edges[i].v)) return true;
    return false;
}

TerminalVerdict judge(const Multigraph& mg) {
    if (three_edge_coloring(mg)) return TerminalVerdict::class1;
    return has_bridge(mg) ? TerminalVerdict::has_bridge : TerminalVerdict::snark;
}

}  // namespace

nlohmann::json to_json(const CubicReductionTrace& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.steps) steps.push_back({{"kind", kind_name(s.kind)}, {"vertices", s.vertices}});
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : t.terminal_graph.edges)
        edges.push_back({t.terminal_graph.labels[e.u], t.terminal_graph.labels[e.v]});
    return {{"steps", steps},
            {"terminal_graph", {{"vertices", t.terminal_graph.labels}, {"edges", edges}}},
            {"terminal_verdict", to_string(t.terminal_verdict)}};
}

CubicReductionTrace trace_from_json(const nlohmann::json& j) {
    try {
        CubicReductionTrace t;
        for (const auto& s : j.at("steps"))
            t.steps.push_back({kind_from(s.at("kind").get<std::string>()), s.at("vertices").get<std::vector<std::string>>()});
        const auto& tg = j.at("terminal_graph");
        t.terminal_graph.labels = tg.at("vertices").get<std::vector<std::string>>();
        for (const auto& e : tg.at("edges")) {
            int a = find_label(t.terminal_graph, e.at(0).get<std::string>());
            int b = find_label(t.terminal_graph, e.at(1).get<std::string>());
            t.terminal_graph.edges.emplace_back(a, b);
        }
        t.terminal_verdict = verdict_from(j.at("terminal_verdict").get<std::string>());
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed reduction trace: ") + e.what());
    }
}

Graph reduced_minus_three(const Graph& g) {
    Graph g3 = remove_triangle_edges(g);
    std::vector<int> keep;
    for (int v = 0; v < g3.n(); ++v) {
        if (g3.degree(v) == 0) continue;
        if (g3.degree(v) == 1 && g3.degree(g3.adjacency_list(v)[0]) == 1) continue;
        keep.push_back(v);
    }
    return induced_subgraph(g3, keep);
}

Multigraph replay(const Graph& g, const std::vector<ReductionStep>& steps) {
    Multigraph mg = Multigraph::from_graph(remove_triangle_edges(g));
    for (const auto& s : steps) {
        std::vector<int> idx;
        for (const auto& l : s.vertices) idx.push_back(find_label(mg, l));
        std::vector<int> deg = mg.degrees();
        switch (s.kind) {
            case ReductionStep::Kind::remove_isolated: {
                std::vector<int> pos;
                for (int v : idx) {
                    bool isolated_edge = deg[v] == 1 && deg[pendant_neighbor(mg, v)] == 1;
                    if (deg[v] != 0 && !isolated_edge)
                        throw PreconditionError("vertex " + mg.labels[v] + " is not isolated");
                }
                mg = without(mg, idx, pos);
                break;
            }
            case ReductionStep::Kind::pendant_triple_contraction:
                if (idx.size() != 3) throw PreconditionError("triple contraction needs 3 vertices");
                for (int v : idx)
                    if (deg[v] != 1) throw PreconditionError("vertex " + mg.labels[v] + " is not pendant");
                mg = contract_triple(mg, idx[0], idx[1], idx[2]);
                break;
            case ReductionStep::Kind::pendant_edge_identification:
                if (idx.size() != 2) throw PreconditionError("identification needs 2 vertices");
                for (int v : idx)
                    if (deg[v] != 1) throw PreconditionError("vertex " + mg.labels[v] + " is not pendant");
                mg = identify(mg, idx[0], idx[1]);
                break;
        }
    }
    return mg;
}

namespace {

class ReductionSearch {
public:
    explicit ReductionSearch(const CubicSearchOptions& opts) : opts_(opts) {}

    // True when a class 1 terminal was reached.
    bool run(const Multigraph& mg) {
        if (truncated_) return false;
        if (++nodes_ > opts_.node_budget) {
            truncated_ = true;
            return false;
        }
        if (!seen_.insert(mg.subdivision())) return false;

        std::vector<int> deg = mg.degrees();
        std::vector<int> pend;
        for (int v = 0; v < mg.n(); ++v)
            if (deg[v] == 1) pend.push_back(v);
        if (pend.empty()) {
            TerminalVerdict v = judge(mg);
            if (v == TerminalVerdict::class1 || !first_terminal_) first_terminal_ = CubicReductionTrace{path_, mg, v};
            return v == TerminalVerdict::class1;
        }

        std::optional<std::vector<int>> col;
        if (opts_.prune_uncolorable) {
            col = three_edge_coloring(mg);
            if (!col) return false;
        }
        auto color_of = [&](int v) {
            for (std::size_t i = 0; i < mg.edges.size(); ++i)
                if (mg.edges[i].u == v || mg.edges[i].v == v) return (*col)[i];
            return -1;
        };

        // Identifications of equally colored pendant edges come first: they
        // keep the coloring valid.
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i < pend.size(); ++i)
            for (std::size_t j = i + 1; j < pend.size(); ++j)
                if (pendant_neighbor(mg, pend[i]) != pendant_neighbor(mg, pend[j])) pairs.emplace_back(pend[i], pend[j]);
        if (col)
            std::stable_partition(pairs.begin(), pairs.end(),
                                  [&](auto p) { return color_of(p.first) == color_of(p.second); });
        for (auto [a, b] : pairs) {
            path_.push_back({ReductionStep::Kind::pendant_edge_identification, {mg.labels[a], mg.labels[b]}});
            if (run(identify(mg, a, b))) return true;
            path_.pop_back();
            if (truncated_) return false;
        }
        for (std::size_t i = 0; i < pend.size(); ++i)
            for (std::size_t j = i + 1; j < pend.size(); ++j)
                for (std::size_t k = j + 1; k < pend.size(); ++k) {
                    int a = pend[i], b = pend[j], c = pend[k];
                    path_.push_back({ReductionStep::Kind::pendant_triple_contraction,
                                     {mg.labels[a], mg.labels[b], mg.labels[c]}});
                    if (run(contract_triple(mg, a, b, c))) return true;
                    path_.pop_back();
                    if (truncated_) return false;
                }
        return false;
    }

    std::vector<ReductionStep> path_;
    std::optional<CubicReductionTrace> first_terminal_;
    std::uint64_t nodes_ = 0;
    bool truncated_ = false;

private:
    CubicSearchOptions opts_;
    IsomorphismSet seen_;
};

}  // namespace

CubicFractalResult cubic_fractal_test(const Graph& g, const CubicSearchOptions& opts) {
    require_connected(g);
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 3) throw PreconditionError("graph is not cubic");
    const bool claw = has_induced_claw(g);

    Graph g3 = remove_triangle_edges(g);
    ReductionStep strip{ReductionStep::Kind::remove_isolated, {}};
    for (int v = 0; v < g3.n(); ++v)
        if (g3.degree(v) == 0 || (g3.degree(v) == 1 && g3.degree(g3.adjacency_list(v)[0]) == 1))
            strip.vertices.push_back(g3.label(v));
    Graph start = reduced_minus_three(g);

    ReductionSearch search(opts);
    if (!strip.vertices.empty()) search.path_.push_back(strip);
    bool found = search.run(Multigraph::from_graph(start));

    CubicFractalResult out;
    out.nodes = search.nodes_;
    FractalityReport& r = out.report;
    if (!claw) {
        // Every vertex lies on a triangle, so G_-3' is empty and the empty
        // cubic graph is reached at once.
        r = classify(g);
        r.certificates.push_back("claw-free: not 2-fractal");
        out.two_fractal = false;
        out.trace = search.first_terminal_;
        return out;
    }
    r.method = FractalMethod::cubic_reduction;
    r.dim_l = 2;
    r.certificates.push_back("contains claw");
    if (found) {
        r.dim_h = 2;
        r.certificates.push_back("class 1 cubic graph reached");
        settle(r);
        out.trace = search.first_terminal_;
    } else if (search.truncated_) {
        r.dim_h = 2;
        r.dim_l_lower = r.dim_l_upper = 2;
        r.dim_h_lower = 2;
        r.dim_h_upper = 3;
        r.determined = false;
        r.certificates.push_back("node budget exhausted");
    } else {
        r.dim_h = 3;
        r.certificates.push_back(opts.prune_uncolorable ? "every branch lacks a 3-edge-coloring"
                                                        : "every reachable cubic graph is class 2");
        settle(r);
        out.two_fractal = true;
        out.trace = search.first_terminal_;
    }
    return out;
}

std::array<int, 3> pendant_color_parity(const Graph& g, const std::vector<int>& coloring) {
    if (g.n() < 3) throw PreconditionError("pendant color parity needs n >= 3");
    if (g.max_degree() > 3) throw PreconditionError("pendant color parity needs max degree <= 3");
    auto edges = g.edges();
    if (coloring.size() != edges.size()) throw InvalidArgument("coloring size does not match edge count");
    for (int c : coloring)
        if (c < 1 || c > 3) throw InvalidArgument("colors must be 1, 2 or 3");
    if (!is_proper_edge_coloring(g, coloring)) throw InvalidArgument("coloring is not proper");
    std::array<int, 3> p{0, 0, 0};
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (g.degree(edges[i].u) == 1 || g.degree(edges[i].v) == 1) ++p[coloring[i] - 1];
    for (int& x : p) x %= 2;
    return p;
}

bool is_nontrivial_snark(const Graph& g) {
    if (g.n() == 0) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 3) return false;
    if (!is_biconnected(g) || !structure_profile(g).triangle_free) return false;
    Deadline unlimited;
    return edge_chromatic_number(g, unlimited).value == 4;
}

}  // namespace fracdim
