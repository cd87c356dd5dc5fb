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

#include "fracdim/selfsim.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "fracdim/error.hpp"

namespace fracdim {

using boost::multiprecision::cpp_int;

namespace {

std::string join_violations(const Verification& v) {
    std::string out;
    for (std::size_t i = 0; i < v.violations.size() && i < 5; ++i) {
        if (i) out += "; ";
        out += v.violations[i];
    }
    if (v.violations.size() > 5) out += "; ...";
    return out;
}

void require_valid(const Graph& g, const ColoredCover& cover) {
    auto v = verify_colored_cover(g, cover);
    if (!v.ok) throw PreconditionError("invalid cover: " + join_violations(v));
}

// fiber[c][v]: index of v's fiber under color c + 1, fibers numbered by
// smallest member.
std::vector<std::vector<int>> fibers(const Graph& g, const ColoredCover& cover) {
    const int n = g.n();
    std::vector<std::vector<int>> cluster_of(cover.h, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < cover.clusters.size(); ++i)
        for (int v : cover.clusters[i].members()) cluster_of[cover.colors[i] - 1][v] = static_cast<int>(i);
    std::vector<std::vector<int>> out(cover.h, std::vector<int>(n, -1));
    for (int c = 0; c < cover.h; ++c) {
        int next = 0;
        for (int v = 0; v < n; ++v) {
            if (out[c][v] >= 0) continue;
            int cl = cluster_of[c][v];
            if (cl < 0) {
                out[c][v] = next++;
                continue;
            }
            for (int u : cover.clusters[cl].members()) out[c][u] = next;
            ++next;
        }
    }
    return out;
}

}  // namespace

ContractingFamily contracting_family(const Graph& g, const ColoredCover& cover) {
    require_valid(g, cover);
    ContractingFamily fam;
    fam.mappings = fibers(g, cover);
    for (const auto& f : fam.mappings) {
        const int size = g.n() ? *std::max_element(f.begin(), f.end()) + 1 : 0;
        std::vector<std::string> labels(size);
        for (int v = 0; v < g.n(); ++v) labels[f[v]] += (labels[f[v]].empty() ? "" : "+") + g.label(v);
        std::vector<Edge> quotient;
        std::vector<Edge> kept;
        for (const Edge& e : g.edges()) {
            if (f[e.u] == f[e.v]) continue;
            quotient.emplace_back(f[e.u], f[e.v]);
            kept.push_back(e);
        }
        fam.contraction_graphs.push_back(Graph::from_edges(std::move(labels), quotient));
        fam.contracted_subgraphs.push_back(std::move(kept));
    }
    return fam;
}

Verification verify_contracting_family(const Graph& g, const ContractingFamily& fam) {
    Verification out;
    auto fail = [&](std::string msg) {
        out.ok = false;
        out.violations.push_back(std::move(msg));
    };
    const auto edges = g.edges();
    const std::size_t k = fam.mappings.size();
    if (fam.contraction_graphs.size() != k || fam.contracted_subgraphs.size() != k) {
        fail("family has mismatched component counts");
        return out;
    }
    std::vector<char> contracted(edges.size(), 0), kept(edges.size(), 0);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& f = fam.mappings[i];
        const Graph& h = fam.contraction_graphs[i];
        const std::string tag = "map " + std::to_string(i + 1) + ": ";
        if (static_cast<int>(f.size()) != g.n()) {
            fail(tag + "wrong domain size");
            continue;
        }
        bool range_ok = std::all_of(f.begin(), f.end(), [&](int x) { return x >= 0 && x < h.n(); });
        if (!range_ok) {
            fail(tag + "image outside the contraction graph");
            continue;
        }
        std::vector<VertexSet> fiber(h.n(), VertexSet(g.n()));
        for (int v = 0; v < g.n(); ++v) fiber[f[v]].insert(v);
        for (int x = 0; x < h.n(); ++x)
            if (!g.is_clique(fiber[x])) fail(tag + "fiber of " + h.label(x) + " is not a clique");
        std::vector<Edge> expect;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            int a = f[edges[e].u], b = f[edges[e].v];
            if (a == b) {
                contracted[e] = 1;
                continue;
            }
            kept[e] = 1;
            expect.push_back(edges[e]);
            if (!h.adjacent(a, b))
                fail(tag + "edge " + g.label(edges[e].u) + "-" + g.label(edges[e].v) + " is not preserved");
        }
        for (const Edge& xy : h.edges()) {
            bool lifted = fiber[xy.u].count() > 0 && std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
                return (f[e.u] == xy.u && f[e.v] == xy.v) || (f[e.u] == xy.v && f[e.v] == xy.u);
            });
            if (!lifted) fail(tag + "edge " + h.label(xy.u) + "-" + h.label(xy.v) + " has no edge above it");
        }
        auto listed = fam.contracted_subgraphs[i];
        std::sort(listed.begin(), listed.end());
        if (listed != expect) fail(tag + "contracted subgraph does not match the map");
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::string name = g.label(edges[e].u) + "-" + g.label(edges[e].v);
        if (!contracted[e]) fail("edge " + name + " is contracted by no map");
        if (!kept[e]) fail("edge " + name + " is missing from every contracted subgraph");
    }
    return out;
}

ColoredCover cover_from_family(const Graph& g, const ContractingFamily& fam) {
    ColoredCover c;
    c.h = static_cast<int>(fam.mappings.size());
    for (std::size_t i = 0; i < fam.mappings.size(); ++i) {
        const int size = fam.contraction_graphs[i].n();
        std::vector<VertexSet> fib(size, VertexSet(g.n()));
        for (int v = 0; v < g.n(); ++v) fib[fam.mappings[i][v]].insert(v);
        for (auto& s : fib) {
            if (s.empty()) continue;
            c.clusters.push_back(std::move(s));
            c.colors.push_back(static_cast<int>(i) + 1);
        }
    }
    return c;
}

boost::rational<std::int64_t> normalized_hausdorff(const Graph& g, const DimensionReport& report) {
    if (!report.optimal()) throw PreconditionError("normalized dimension needs an optimal report");
    if (g.n() == 0) throw PreconditionError("normalized dimension of the empty graph");
    return {report.value, g.n()};
}

// --- Vector representations ---------------------------------------------------

VectorRepresentation vector_representation(const Graph& g, const ColoredCover& cover) {
    require_valid(g, cover);
    const int n = g.n();
    VectorRepresentation rep;
    rep.phi.assign(n, std::vector<int>(cover.h, 0));
    rep.alphabet_sizes.assign(cover.h, 0);
    for (int c = 0; c < cover.h; ++c) {
        int next = 1;
        for (std::size_t i = 0; i < cover.clusters.size(); ++i) {
            if (cover.colors[i] != c + 1) continue;
            for (int v : cover.clusters[i].members()) rep.phi[v][c] = next;
            ++next;
        }
        for (int v = 0; v < n; ++v)
            if (rep.phi[v][c] == 0) rep.phi[v][c] = next++;
        rep.alphabet_sizes[c] = next - 1;
    }
    return rep;
}

Verification verify_vector_representation(const Graph& g, const VectorRepresentation& rep) {
    Verification out;
    auto fail = [&](std::string msg) {
        out.ok = false;
        out.violations.push_back(std::move(msg));
    };
    if (rep.n() != g.n()) {
        fail("representation has " + std::to_string(rep.n()) + " vectors for " + std::to_string(g.n()) + " vertices");
        return out;
    }
    for (int v = 0; v < rep.n(); ++v) {
        if (static_cast<int>(rep.phi[v].size()) != rep.k()) {
            fail("vector of " + g.label(v) + " has the wrong length");
            return out;
        }
        for (int j = 0; j < rep.k(); ++j)
            if (rep.phi[v][j] < 1 || rep.phi[v][j] > rep.alphabet_sizes[j])
                fail("coordinate " + std::to_string(j + 1) + " of " + g.label(v) + " is out of range");
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (rep.phi[u] == rep.phi[v]) fail("vertices " + g.label(u) + " and " + g.label(v) + " share a vector");
            bool shared = false;
            for (int j = 0; j < rep.k() && !shared; ++j) shared = rep.phi[u][j] == rep.phi[v][j];
            if (shared != g.adjacent(u, v))
                fail("pair " + g.label(u) + "," + g.label(v) + (shared ? " shares a coordinate but is not an edge"
                                                                       : " is an edge without a shared coordinate"));
        }
    return out;
}

Graph graph_from_representation(const VectorRepresentation& rep) {
    std::vector<Edge> edges;
    for (int u = 0; u < rep.n(); ++u)
        for (int v = u + 1; v < rep.n(); ++v)
            for (int j = 0; j < rep.k(); ++j)
                if (rep.phi[u][j] == rep.phi[v][j]) {
                    edges.emplace_back(u, v);
                    break;
                }
    return Graph::from_edges(rep.n(), edges);
}

std::string to_text(const VectorRepresentation& rep) {
    std::ostringstream out;
    out << rep.n() << ' ' << rep.k();
    for (int p : rep.alphabet_sizes) out << ' ' << p;
    out << '\n';
    for (const auto& row : rep.phi) {
        for (int j = 0; j < rep.k(); ++j) out << (j ? " " : "") << row[j];
        out << '\n';
    }
    return out.str();
}

VectorRepresentation representation_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    int n = -1, k = -1;
    if (!(in >> n >> k) || n < 0 || k < 0) throw ParseError("expected header 'n k p_1 .. p_k'", 1);
    VectorRepresentation rep;
    rep.alphabet_sizes.resize(k);
    for (int& p : rep.alphabet_sizes)
        if (!(in >> p) || p < 1) throw ParseError("bad alphabet size", 1);
    rep.phi.assign(n, std::vector<int>(k));
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j)
            if (!(in >> rep.phi[v][j])) throw ParseError("missing coordinate", static_cast<std::size_t>(v) + 2);
    std::string rest;
    if (in >> rest) throw ParseError("trailing data after " + std::to_string(n) + " vectors", 0);
    return rep;
}

// --- Encoding ------------------------------------------------------------------------

namespace {

cpp_int power(cpp_int base, unsigned e) {
    cpp_int r = 1;
    while (e) {
        if (e & 1U) r *= base;
        base *= base;
        e >>= 1U;
    }
    return r;
}

cpp_int product(const std::vector<int>& p) {
    cpp_int q = 1;
    for (int x : p) q *= x;
    return q;
}

struct Header {
    cpp_int weight;  // n * prod p^(n+1)
    int n = 0;
    std::vector<int> p;  // nondecreasing

    cpp_int tables() const { return power(product(p), static_cast<unsigned>(n)); }
    bool operator<(const Header& o) const { return std::tie(weight, n, p) < std::tie(o.weight, o.n, o.p); }
    bool operator==(const Header& o) const { return n == o.n && p == o.p; }
};

cpp_int weight_of(int n, const std::vector<int>& p) {
    return cpp_int(n) * power(product(p), static_cast<unsigned>(n + 1));
}

// Every header with weight <= wmax: injective tables need prod p >= n, and
// coordinates never need more than n values.
std::vector<Header> headers_up_to(int k, const cpp_int& wmax, std::size_t cap) {
    std::vector<Header> out;
    for (int n = 1;; ++n) {
        // The lightest header for n has prod p = n.
        if (power(cpp_int(n), static_cast<unsigned>(n + 2)) > wmax) break;
        std::vector<int> p(k);
        std::function<void(int, int, cpp_int)> rec = [&](int j, int lo, cpp_int q) {
            if (j == k) {
                if (q < n) return;
                cpp_int w = cpp_int(n) * power(q, static_cast<unsigned>(n + 1));
                if (w > wmax) return;
                if (out.size() >= cap) throw ResourceError("encoding needs more than " + std::to_string(cap) + " headers");
                out.push_back({std::move(w), n, p});
                return;
            }
            for (int x = lo; x <= n; ++x) {
                cpp_int q2 = q * power(cpp_int(x), static_cast<unsigned>(k - j));
                if (cpp_int(n) * power(q2, static_cast<unsigned>(n + 1)) > wmax) break;
                p[j] = x;
                rec(j + 1, x, q * x);
            }
        };
        rec(0, 1, cpp_int(1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string shortlex(const cpp_int& value) {
    cpp_int x = value + 1;
    const unsigned len = static_cast<unsigned>(boost::multiprecision::msb(x));
    std::string bits(len, '0');
    for (unsigned i = 0; i < len; ++i)
        if (boost::multiprecision::bit_test(x, i)) bits[len - 1 - i] = '1';
    return bits;
}

cpp_int from_shortlex(const std::string& bits) {
    cpp_int x = 1;
    for (char c : bits) {
        if (c != '0' && c != '1') throw InvalidArgument("code word must consist of 0 and 1");
        x = x * 2 + (c - '0');
    }
    return x - 1;
}

// floor(64 * log2 x) for x >= 1.
Dyadic dyadic_log2(const cpp_int& x) {
    return {static_cast<std::int64_t>(boost::multiprecision::msb(power(x, 64)))};
}

struct Sorted {
    std::vector<int> p;
    std::vector<std::vector<int>> phi;
};

Sorted sort_coordinates(const VectorRepresentation& rep) {
    std::vector<int> order(rep.k());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return rep.alphabet_sizes[a] < rep.alphabet_sizes[b]; });
    Sorted s;
    for (int j : order) s.p.push_back(rep.alphabet_sizes[j]);
    for (const auto& row : rep.phi) {
        std::vector<int> r;
        for (int j : order) r.push_back(row[j]);
        s.phi.push_back(std::move(r));
    }
    return s;
}

cpp_int table_index(const Sorted& s) {
    cpp_int t = 0;
    for (const auto& row : s.phi)
        for (std::size_t j = 0; j < row.size(); ++j) t = t * s.p[j] + (row[j] - 1);
    return t;
}

Graph table_graph(cpp_int t, int n, const std::vector<int>& p) {
    VectorRepresentation rep;
    rep.alphabet_sizes = p;
    rep.phi.assign(n, std::vector<int>(p.size()));
    for (int v = n - 1; v >= 0; --v)
        for (int j = static_cast<int>(p.size()) - 1; j >= 0; --j) {
            rep.phi[v][j] = static_cast<int>(t % p[j]) + 1;
            t /= p[j];
        }
    if (t != 0) throw InvalidArgument("code word does not describe a table");
    return graph_from_representation(rep);
}

}  // namespace

EncodingBounds encoding_bound(const VectorRepresentation& rep, std::size_t header_cap) {
    if (rep.n() == 0) throw PreconditionError("cannot encode the empty graph");
    for (int p : rep.alphabet_sizes)
        if (p < 1 || p > rep.n())
            throw PreconditionError("alphabet sizes must lie in 1..n");
    Sorted s = sort_coordinates(rep);
    const int n = rep.n();
    const cpp_int w = weight_of(n, s.p);
    const cpp_int tables = power(product(s.p), static_cast<unsigned>(n));
    const cpp_int t = table_index(s);

    cpp_int offset = 0;
    Header self{w, n, s.p};
    for (const auto& h : headers_up_to(rep.k(), w, header_cap)) {
        if (h == self) break;
        offset += h.tables();
    }

    EncodingBounds out;
    out.unconditional = dyadic_log2(w);
    out.conditional = dyadic_log2(tables);
    out.bits = shortlex(offset + t);
    out.conditional_bits = shortlex(t);
    out.within_unconditional = power(cpp_int(2), static_cast<unsigned>(out.bits.size())) <= w;
    out.within_conditional = power(cpp_int(2), static_cast<unsigned>(out.conditional_bits.size())) <= tables;
    return out;
}

Graph decode_graph(const std::string& bits, int k, std::size_t header_cap) {
    if (k < 0) throw InvalidArgument("negative coordinate count");
    const cpp_int code = from_shortlex(bits);
    cpp_int wcap = power(cpp_int(2), static_cast<unsigned>(bits.size()));
    while (true) {
        auto hs = headers_up_to(k, wcap, header_cap);
        cpp_int total = 0;
        for (const auto& h : hs) total += h.tables();
        if (total > code) {
            cpp_int offset = 0;
            for (const auto& h : hs) {
                cpp_int size = h.tables();
                if (code < offset + size) return table_graph(code - offset, h.n, h.p);
                offset += size;
            }
        }
        wcap *= 4;
    }
}

Graph decode_graph_conditional(const std::string& bits, int n, const std::vector<int>& sorted_sizes) {
    return table_graph(from_shortlex(bits), n, sorted_sizes);
}

// --- Measures ----------------------------------------------------------------------

const char* to_string(MeasureStatus s) {
    switch (s) {
        case MeasureStatus::finite: return "finite";
        case MeasureStatus::infinite: return "infinite";
        case MeasureStatus::no_embedding_within_budget: return "no_embedding_within_budget";
    }
    return "?";
}

namespace {

// Backtracking search for an induced embedding of h into K_{p_1} x ... x K_{p_d}.
class Embedder {
public:
    Embedder(const Graph& h, std::vector<int> p) : h_(h), p_(std::move(p)), d_(static_cast<int>(p_.size())) {
        order_.resize(h.n());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
        vec_.assign(h.n(), std::vector<int>(d_, -1));
        max_used_.assign(d_, -1);
    }

    std::optional<std::vector<std::vector<int>>> run() {
        if (place(0)) return vec_;
        return std::nullopt;
    }

private:
    bool place(int i) {
        if (i == h_.n()) return true;
        return coordinate(i, order_[i], 0);
    }

    bool coordinate(int i, int v, int j) {
        if (j == d_) {
            for (int a = 0; a < i; ++a) {
                int u = order_[a];
                if (h_.adjacent(u, v)) continue;
                bool shared = false;
                for (int c = 0; c < d_ && !shared; ++c) shared = vec_[u][c] == vec_[v][c];
                // Non-adjacent pairs need a shared coordinate, which also rules
                // out equal vectors except for identical ones.
                if (!shared || vec_[u] == vec_[v]) return false;
            }
            return place(i + 1);
        }
        const int limit = std::min(p_[j], max_used_[j] + 2);
        for (int x = 0; x < limit; ++x) {
            bool ok = true;
            for (int a = 0; a < i && ok; ++a) {
                int u = order_[a];
                if (h_.adjacent(u, v) && vec_[u][j] == x) ok = false;
            }
            if (!ok) continue;
            vec_[v][j] = x;
            int saved = max_used_[j];
            max_used_[j] = std::max(saved, x);
            if (coordinate(i, v, j + 1)) return true;
            max_used_[j] = saved;
        }
        vec_[v][j] = -1;
        return false;
    }

    const Graph& h_;
    std::vector<int> p_;
    int d_;
    std::vector<int> order_;
    std::vector<std::vector<int>> vec_;
    std::vector<int> max_used_;
};

// Nondecreasing vectors in [1, cap]^d with product >= m, by (product, lex).
std::vector<std::vector<int>> size_vectors(int d, int cap, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(d);
    std::function<void(int, int, long long)> rec = [&](int j, int lo, long long q) {
        if (j == d) {
            if (q >= m) out.push_back(p);
            return;
        }
        for (int x = lo; x <= cap; ++x) {
            p[j] = x;
            rec(j + 1, x, q * x);
        }
    };
    rec(0, 1, 1);
    auto prod = [](const std::vector<int>& v) {
        long long q = 1;
        for (int x : v) q *= x;
        return q;
    };
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return std::pair(prod(a), a) < std::pair(prod(b), b);
    });
    return out;
}

}  // namespace

MeasureResult d_volume(const Graph& g, int d, const MeasureOptions& opts) {
    if (d < 1) throw InvalidArgument("d must be at least 1");
    if (g.n() > opts.max_vertices)
        throw SizeLimitError("d-volume is limited to " + std::to_string(opts.max_vertices) + " vertices, graph has " +
                             std::to_string(g.n()));
    MeasureResult r;
    r.d = d;
    std::vector<std::vector<int>> embedding(g.n(), std::vector<int>(d, 0));
    std::vector<std::vector<std::pair<int, int>>> cocover;
    std::vector<int> offset(d, 0);
    bool budget_failure = false;

    for (const auto& comp : co_connected_components(g)) {
        const int m = static_cast<int>(comp.size());
        Graph h = induced_subgraph(g, comp);
        const int cap = opts.size_budget > 0 ? std::min(opts.size_budget, m) : m;
        const bool complete = opts.size_budget <= 0 || opts.size_budget >= m;

        std::optional<std::vector<std::vector<int>>> found;
        std::vector<int> best;
        if (m == 1) {
            best.assign(d, 1);
            found = std::vector<std::vector<int>>{std::vector<int>(d, 0)};
        } else if (Embedder(h, std::vector<int>(d, cap)).run()) {
            for (const auto& p : size_vectors(d, cap, m)) {
                found = Embedder(h, p).run();
                if (found) {
                    best = p;
                    break;
                }
            }
        }
        if (!found) {
            bool infinite = complete;
            if (!infinite && opts.use_dimension_certificate) {
                // h embeds into d complete graphs iff dim_H(complement) + 1 <= d.
                auto rep = hausdorff_dimension(complement(h));
                infinite = rep.optimal() && rep.value + 1 > d;
            }
            if (infinite) {
                r.status = MeasureStatus::infinite;
                r.volume = 0;
                r.witness_embedding.reset();
                r.witness_cocover.reset();
                return r;
            }
            budget_failure = true;
            continue;
        }
        long long vol = 1;
        for (int x : best) vol *= x;
        r.volume += vol;
        if (!complete && vol > cap) r.budget_binds = true;
        std::vector<std::pair<int, int>> rect;
        for (int j = 0; j < d; ++j) {
            rect.emplace_back(offset[j], offset[j] + best[j]);
            for (int i = 0; i < m; ++i) embedding[comp[i]][j] = offset[j] + (*found)[i][j];
            offset[j] += best[j];
        }
        cocover.push_back(std::move(rect));
    }
    if (budget_failure) {
        r.status = MeasureStatus::no_embedding_within_budget;
        r.volume = 0;
        r.budget_binds = true;
        return r;
    }
    r.status = MeasureStatus::finite;
    r.witness_embedding = std::move(embedding);
    r.witness_cocover = std::move(cocover);
    return r;
}

MeasureResult d_measure(const Graph& g, int d, const MeasureOptions& opts) {
    return d_volume(complement(g), d, opts);
}

}  // namespace fracdim
