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

#include <doctest.h>

#include <cmath>
#include <random>

#include "fracdim/dimensions.hpp"
#include "fracdim/enumerate.hpp"
#include "fracdim/error.hpp"
#include "fracdim/generators.hpp"
#include "fracdim/isomorphism.hpp"
#include "fracdim/selfsim.hpp"
#include "oracles.hpp"

using namespace fracdim;

namespace {

ColoredCover optimal_cover(const Graph& g) { return std::get<ColoredCover>(hausdorff_dimension(g).witness); }

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (const Edge& x : b.edges()) e.emplace_back(x.u + a.n(), x.v + a.n());
    return Graph::from_edges(a.n() + b.n(), e);
}

// Minimum total volume over embeddings into K_q^d and partitions of the
// embedded vertices into groups whose bounding boxes are disjoint and
// contain every non-adjacent pair inside one group.
long long brute_volume(const Graph& g, int d) {
    oracle::Small s(g);
    const int n = g.n(), q = n;
    long long best = -1;
    std::vector<int> x(n * d, 0);
    auto coord = [&](int v, int j) { return x[v * d + j]; };
    auto embedded = [&] {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int same = 0;
                for (int j = 0; j < d; ++j) same += coord(u, j) == coord(v, j);
                if (same == d) return false;
                if ((same > 0) == s.edge(u, v)) return false;
            }
        return true;
    };
    std::vector<int> group(n, 0);
    auto partitions = [&](auto&& self, int v, int used) -> void {
        if (v == n) {
            std::vector<std::vector<unsigned>> proj(used, std::vector<unsigned>(d, 0));
            for (int u = 0; u < n; ++u)
                for (int j = 0; j < d; ++j) proj[group[u]][j] |= 1U << coord(u, j);
            for (int u = 0; u < n; ++u)
                for (int w = u + 1; w < n; ++w)
                    if (!s.edge(u, w) && group[u] != group[w]) return;
            for (int a = 0; a < used; ++a)
                for (int b = a + 1; b < used; ++b) {
                    bool apart = false;
                    for (int j = 0; j < d; ++j) apart |= (proj[a][j] & proj[b][j]) == 0;
                    if (!apart) return;
                }
            long long total = 0;
            for (int a = 0; a < used; ++a) {
                long long vol = 1;
                for (int j = 0; j < d; ++j) vol *= std::popcount(proj[a][j]);
                total += vol;
            }
            if (best < 0 || total < best) best = total;
            return;
        }
        for (int c = 0; c <= used; ++c) {
            group[v] = c;
            self(self, v + 1, std::max(used, c + 1));
        }
    };
    while (true) {
        if (embedded()) partitions(partitions, 0, 0);
        int i = 0;
        while (i < n * d && ++x[i] == q) x[i++] = 0;
        if (i == n * d) break;
    }
    return best;
}

}  // namespace

TEST_CASE("d-volume examples") {
    auto p4 = d_volume(named_graph("P_4"), 2);
    CHECK(p4.status == MeasureStatus::finite);
    CHECK(p4.volume == 6);
    REQUIRE(p4.witness_embedding);
    REQUIRE(p4.witness_cocover);
    CHECK(p4.witness_cocover->size() == 1);
    for (int d = 1; d <= 4; ++d) {
        auto k1 = d_volume(named_graph("K_1"), d);
        CHECK(k1.status == MeasureStatus::finite);
        CHECK(k1.volume == 1);
    }
    // Edgeless graphs are co-connected and need a second coordinate to be injective.
    CHECK(d_volume(complement(named_graph("K_4")), 1).status == MeasureStatus::infinite);
    CHECK(d_volume(complement(named_graph("K_4")), 2).volume == 4);
    // K_n has n singleton co-components.
    CHECK(d_volume(named_graph("K_4"), 3).volume == 4);
    CHECK(d_volume(named_graph("C_5"), 1).status == MeasureStatus::infinite);
    // P_4 is self-complementary.
    CHECK(isomorphic(complement(named_graph("P_4")), named_graph("P_4")));
    CHECK(d_measure(named_graph("P_4"), 2).volume == 6);
    CHECK(d_measure(disjoint_union(named_graph("P_4"), named_graph("P_4")), 2).volume == 12);
    CHECK_THROWS_AS(d_volume(named_graph("P_4"), 0), InvalidArgument);
    CHECK_THROWS_AS(d_volume(named_graph("P_11"), 2), SizeLimitError);
}

TEST_CASE("d-volume witnesses are embeddings with a co-cover of the reported volume") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : nonisomorphic_graphs(n, GraphClass::all, false))
            for (int d = 1; d <= 3; ++d) {
                auto r = d_volume(g, d);
                if (r.status != MeasureStatus::finite) continue;
                const auto& x = *r.witness_embedding;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v) {
                        int same = 0;
                        for (int j = 0; j < d; ++j) same += x[u][j] == x[v][j];
                        CHECK(same < d);
                        CHECK((same > 0) == !g.adjacent(u, v));
                    }
                long long total = 0;
                for (const auto& rect : *r.witness_cocover) {
                    long long vol = 1;
                    for (auto [a, b] : rect) vol *= b - a;
                    total += vol;
                }
                CHECK(total == r.volume);
                for (int v = 0; v < n; ++v) {
                    int inside = 0;
                    for (const auto& rect : *r.witness_cocover) {
                        bool in = true;
                        for (int j = 0; j < d; ++j) in &= rect[j].first <= x[v][j] && x[v][j] < rect[j].second;
                        inside += in;
                    }
                    CHECK(inside == 1);
                }
            }
}

TEST_CASE("d-volume matches brute force on tiny graphs") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : nonisomorphic_graphs(n, GraphClass::all, false))
            for (int d = 1; d <= 2; ++d) {
                auto r = d_volume(g, d);
                long long b = brute_volume(g, d);
                if (b < 0) {
                    CHECK(r.status == MeasureStatus::infinite);
                } else {
                    CHECK(r.status == MeasureStatus::finite);
                    CHECK(r.volume == b);
                }
            }
}

TEST_CASE("d-measure is additive on disjoint unions") {
    std::mt19937_64 rng(20260401);
    std::vector<std::vector<Graph>> pool(6);
    for (int m = 1; m <= 5; ++m) pool[m] = nonisomorphic_graphs(m, GraphClass::all, true);
    auto pick = [&] {
        int m = std::uniform_int_distribution<int>(1, 5)(rng);
        return pool[m][std::uniform_int_distribution<std::size_t>(0, pool[m].size() - 1)(rng)];
    };
    for (int trial = 0; trial < 50; ++trial) {
        Graph a = pick(), b = pick();
        const int d = 2 + trial % 2;
        auto ra = d_measure(a, d), rb = d_measure(b, d), ru = d_measure(disjoint_union(a, b), d);
        REQUIRE(ra.status != MeasureStatus::no_embedding_within_budget);
        REQUIRE(rb.status != MeasureStatus::no_embedding_within_budget);
        const bool finite = ra.status == MeasureStatus::finite && rb.status == MeasureStatus::finite;
        CHECK((ru.status == MeasureStatus::finite) == finite);
        if (finite) CHECK(ru.volume == ra.volume + rb.volume);
    }
}

TEST_CASE("first finite d-measure sits one above the Hausdorff dimension") {
    MeasureOptions search_only;
    search_only.use_dimension_certificate = false;
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : nonisomorphic_graphs(n, GraphClass::all, false)) {
            const int h = oracle::hausdorff(g);
            int d = 1;
            while (d_measure(g, d, search_only).status != MeasureStatus::finite) ++d;
            CHECK(d - 1 == h);
        }
}

TEST_CASE("budgeted search reports its limits") {
    const Graph p4 = named_graph("P_4");
    MeasureOptions opts;
    opts.size_budget = 1;
    // dim_P(P_4) = 2, so alphabet 1 fails for d = 2 without proving anything.
    CHECK(d_volume(p4, 2, opts).status == MeasureStatus::no_embedding_within_budget);
    CHECK(d_volume(p4, 1, opts).status == MeasureStatus::infinite);
    opts.use_dimension_certificate = false;
    CHECK(d_volume(p4, 1, opts).status == MeasureStatus::no_embedding_within_budget);
    opts.size_budget = 3;
    auto capped = d_volume(p4, 2, opts);
    CHECK(capped.status == MeasureStatus::finite);
    CHECK(capped.volume == 6);
    CHECK(capped.budget_binds);
    auto full = d_volume(p4, 2);
    CHECK(full.volume == 6);
    CHECK_FALSE(full.budget_binds);
}

TEST_CASE("contracting families from optimal covers") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : nonisomorphic_graphs(n, GraphClass::all, true)) {
            auto cover = optimal_cover(g);
            auto fam = contracting_family(g, cover);
            CHECK(static_cast<int>(fam.mappings.size()) == cover.h);
            auto v = verify_contracting_family(g, fam);
            CHECK_MESSAGE(v.ok, (v.violations.empty() ? "" : v.violations.front()));
            auto back = cover_from_family(g, fam);
            CHECK(verify_colored_cover(g, back).ok);
            CHECK(back.h == cover.h);
            CHECK(verify_contracting_family(g, contracting_family(g, back)).ok);
        }
}

TEST_CASE("contracting family of an edge") {
    Graph k2 = named_graph("K_2");
    ColoredCover c;
    c.h = 2;
    VertexSet uv(2), u(2), v(2);
    uv.insert(0);
    uv.insert(1);
    u.insert(0);
    v.insert(1);
    c.clusters = {uv, u, v};
    c.colors = {1, 2, 2};
    auto fam = contracting_family(k2, c);
    CHECK(fam.mappings[0] == std::vector<int>{0, 0});
    CHECK(fam.mappings[1] == std::vector<int>{0, 1});
    CHECK(fam.contracted_subgraphs[0].empty());
    CHECK(fam.contracted_subgraphs[1] == std::vector<Edge>{Edge(0, 1)});
    CHECK(verify_contracting_family(k2, fam).ok);
    auto rep = vector_representation(k2, c);
    CHECK(rep.phi == std::vector<std::vector<int>>{{1, 1}, {1, 2}});
    CHECK(encoding_bound(rep).conditional.numerator == 2 * 64);
}

TEST_CASE("family verifier rejects broken maps") {
    Graph p3 = named_graph("P_3");
    ColoredCover c;
    c.h = 2;
    VertexSet a(3), b(3);
    a.insert(0);
    a.insert(1);
    b.insert(1);
    b.insert(2);
    c.clusters = {a, b};
    c.colors = {1, 2};
    auto fam = contracting_family(p3, c);
    CHECK(verify_contracting_family(p3, fam).ok);
    auto broken = fam;
    broken.mappings[0] = {0, 0, 0};  // fiber {0,1,2} is not a clique
    CHECK_FALSE(verify_contracting_family(p3, broken).ok);
    auto single = fam;
    single.mappings.pop_back();
    single.contraction_graphs.pop_back();
    single.contracted_subgraphs.pop_back();
    CHECK_FALSE(verify_contracting_family(p3, single).ok);

    ColoredCover bad = c;
    bad.colors = {1, 1};  // overlapping clusters of one color
    CHECK_THROWS_AS(contracting_family(p3, bad), PreconditionError);
}

TEST_CASE("normalized Hausdorff dimension") {
    auto norm = [](const char* name) {
        Graph g = named_graph(name);
        return normalized_hausdorff(g, hausdorff_dimension(g));
    };
    CHECK(norm("K_5") == boost::rational<std::int64_t>(1, 5));
    CHECK(norm("C_5") == boost::rational<std::int64_t>(2, 5));
    CHECK(norm("K_1_3") == boost::rational<std::int64_t>(2, 4));
    Graph s3 = sierpinski(3).graph;
    CHECK(s3.n() == 15);
    CHECK(normalized_hausdorff(s3, hausdorff_dimension(s3)) == boost::rational<std::int64_t>(2, 15));
    CHECK(norm("petersen") == boost::rational<std::int64_t>(3, 10));
}

TEST_CASE("vector representations") {
    Graph k2 = named_graph("K_2");
    VectorRepresentation r{{{1, 1}, {1, 2}}, {1, 2}};
    CHECK(verify_vector_representation(k2, r).ok);
    CHECK(graph_from_representation(r).edges() == k2.edges());
    VectorRepresentation clash{{{1}, {1}}, {1}};
    CHECK_FALSE(verify_vector_representation(k2, clash).ok);
    VectorRepresentation apart{{{1}, {2}}, {2}};
    CHECK_FALSE(verify_vector_representation(k2, apart).ok);

    for (int n = 1; n <= 6; ++n)
        for (const auto& g : nonisomorphic_graphs(n, GraphClass::all, false)) {
            auto cover = optimal_cover(g);
            auto rep = vector_representation(g, cover);
            CHECK(rep.k() == cover.h);
            CHECK(verify_vector_representation(g, rep).ok);
            for (int p : rep.alphabet_sizes) CHECK(p <= n);
            CHECK(representation_from_text(to_text(rep)) == rep);
        }
    CHECK_THROWS_AS(representation_from_text("2 1 2\n1\n"), ParseError);
}

TEST_CASE("encoding bounds") {
    // n = 1, one coordinate of size 1: weight 1, so both bounds are 0.
    VectorRepresentation one{{{1}}, {1}};
    auto b1 = encoding_bound(one);
    CHECK(b1.unconditional.numerator == 0);
    CHECK(b1.conditional.numerator == 0);
    CHECK(b1.bits.empty());

    VectorRepresentation k2{{{1, 1}, {1, 2}}, {1, 2}};
    auto b2 = encoding_bound(k2);
    // 3 log2 2 + log2 2 = 4; conditional 2 log2 2 = 2.
    CHECK(b2.unconditional.numerator == 4 * 64);
    CHECK(b2.conditional.numerator == 2 * 64);
    CHECK(b2.within_unconditional);
    CHECK(b2.within_conditional);

    // Dyadic values against floating point away from rounding edges.
    VectorRepresentation c5 = vector_representation(named_graph("C_5"), optimal_cover(named_graph("C_5")));
    auto b5 = encoding_bound(c5);
    double ps = 0;
    for (int p : c5.alphabet_sizes) ps += std::log2(p);
    CHECK(std::abs(b5.unconditional.to_double() - (6 * ps + std::log2(5))) < 1.0 / 64 + 1e-9);
    CHECK(std::abs(b5.conditional.to_double() - 5 * ps) < 1.0 / 64 + 1e-9);
}

TEST_CASE("codes stay within the bounds and decode to the graph") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : nonisomorphic_graphs(n, GraphClass::all, false)) {
            auto rep = vector_representation(g, optimal_cover(g));
            auto b = encoding_bound(rep);
            CHECK(b.within_unconditional);
            CHECK(b.within_conditional);
            CHECK(static_cast<std::int64_t>(b.bits.size()) * 64 <= b.unconditional.numerator + 63);
            Graph back = decode_graph(b.bits, rep.k());
            CHECK(back.edges() == g.edges());
            auto sorted = rep.alphabet_sizes;
            std::sort(sorted.begin(), sorted.end());
            CHECK(decode_graph_conditional(b.conditional_bits, n, sorted).n() == n);
            CHECK(isomorphic(decode_graph_conditional(b.conditional_bits, n, sorted), g));
        }
    CHECK_THROWS_AS(decode_graph("01x", 1), InvalidArgument);
}

TEST_CASE("random representations encode within the bound") {
    std::mt19937_64 rng(7);
    int checked = 0;
    while (checked < 300) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const int k = std::uniform_int_distribution<int>(1, 5)(rng);
        VectorRepresentation rep;
        rep.phi.assign(n, std::vector<int>(k));
        for (auto& row : rep.phi)
            for (int& x : row) x = std::uniform_int_distribution<int>(1, n)(rng);
        rep.alphabet_sizes.assign(k, 1);
        for (const auto& row : rep.phi)
            for (int j = 0; j < k; ++j) rep.alphabet_sizes[j] = std::max(rep.alphabet_sizes[j], row[j]);
        Graph g = graph_from_representation(rep);
        if (!verify_vector_representation(g, rep).ok) continue;
        auto b = encoding_bound(rep);
        CHECK(b.within_unconditional);
        CHECK(b.within_conditional);
        CHECK(decode_graph(b.bits, k).edges() == g.edges());
        ++checked;
    }
}
