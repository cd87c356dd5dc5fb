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

#include <sstream>

#include "fracdim/enumerate.hpp"
#include "fracdim/error.hpp"
#include "fracdim/generators.hpp"
#include "fracdim/graph.hpp"
#include "oracles.hpp"

using namespace fracdim;

namespace {

Graph labelled(const char* text) { return parse_edge_list(std::string_view(text)); }

std::vector<Graph> sample_graphs() {
    std::vector<Graph> out;
    for (int n = 1; n <= 6; ++n)
        for (auto& g : nonisomorphic_graphs(n, GraphClass::all, false)) out.push_back(std::move(g));
    for (std::uint64_t s = 0; s < 60; ++s) out.push_back(erdos_renyi(7 + static_cast<int>(s % 4), 0.2 + 0.01 * (s % 40), s));
    return out;
}

}  // namespace

TEST_CASE("edge list parsing") {
    Graph p3 = labelled("0 1\n1 2");
    CHECK(p3.n() == 3);
    CHECK(p3.m() == 2);

    Graph k2 = labelled("a b\nb a");
    CHECK(k2.m() == 1);
    CHECK(k2.labels() == std::vector<std::string>{"a", "b"});

    try {
        labelled("x x");
        FAIL("self-loop accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
    }

    Graph empty = labelled("");
    CHECK(empty.n() == 0);

    Graph with_isolated = labelled("# comment\na b\nc\n");
    CHECK(with_isolated.n() == 3);
    CHECK(with_isolated.degree(2) == 0);

    CHECK_THROWS_AS(labelled("a b c"), ParseError);
}

TEST_CASE("edge list round trip") {
    for (const auto& g : sample_graphs()) CHECK(parse_edge_list(to_edge_list(g)) == g);
    Graph odd = labelled("z y\nq\nz w");
    CHECK(parse_edge_list(to_edge_list(odd)) == odd);
}

TEST_CASE("complement") {
    Graph k4 = named_graph("K_4");
    Graph c = complement(k4);
    CHECK(c.n() == 4);
    CHECK(c.m() == 0);

    Graph p4 = labelled("a b\nb c\nc d");
    Graph cp = complement(p4);
    auto idx = [&](const char* l) { return *cp.index_of(l); };
    CHECK(cp.m() == 3);
    CHECK(cp.adjacent(idx("a"), idx("c")));
    CHECK(cp.adjacent(idx("a"), idx("d")));
    CHECK(cp.adjacent(idx("b"), idx("d")));
    // c-a-d-b is a path
    CHECK(cp.degree(idx("c")) == 1);
    CHECK(cp.degree(idx("b")) == 1);

    for (const auto& g : sample_graphs()) {
        CHECK(complement(complement(g)) == g);
        CHECK(complement(g).n() == g.n());
    }
}

TEST_CASE("co-connected components") {
    CHECK(co_connected_components(named_graph("K_4")).size() == 4);
    CHECK(co_connected_components(Graph::from_edges(5, {})).size() == 1);
    Graph k23 = labelled("a x\na y\na z\nb x\nb y\nb z");
    auto parts = co_connected_components(k23);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].size() == 2);
    CHECK(parts[1].size() == 3);
    for (const auto& g : sample_graphs()) CHECK(co_connected_components(g) == connected_components(complement(g)));
}

TEST_CASE("true twins") {
    auto k3 = true_twins(named_graph("K_3"));
    REQUIRE(k3.size() == 1);
    CHECK(k3[0].size() == 3);
    CHECK(true_twins(named_graph("P_4")).empty());
    CHECK(true_twin_classes(named_graph("P_4")).size() == 4);
    auto d = true_twins(named_graph("diamond"));
    REQUIRE(d.size() == 1);
    CHECK(d[0] == std::vector<int>{1, 2});

    for (const auto& g : sample_graphs()) {
        auto classes = true_twin_classes(g);
        std::vector<int> seen(g.n(), 0);
        for (const auto& cls : classes)
            for (int v : cls) {
                ++seen[v];
                auto nv = g.neighbors(v);
                nv.insert(v);
                auto nw = g.neighbors(cls[0]);
                nw.insert(cls[0]);
                CHECK(nv == nw);
            }
        for (int s : seen) CHECK(s == 1);
    }
}

TEST_CASE("bridges split components") {
    for (const auto& g : sample_graphs()) {
        const std::size_t before = connected_components(g).size();
        for (const Edge& b : bridges(g)) {
            std::vector<Edge> rest;
            for (const Edge& e : g.edges())
                if (!(e == b)) rest.push_back(e);
            CHECK(connected_components(Graph::from_edges(g.n(), rest)).size() == before + 1);
        }
    }
    CHECK(bridges(named_graph("P_4")).size() == 3);
    CHECK(bridges(named_graph("C_5")).empty());
    CHECK(is_biconnected(named_graph("petersen")));
    CHECK_FALSE(is_biconnected(named_graph("butterfly")));
}

TEST_CASE("structure profile examples") {
    StructureOptions holes{true, 64};
    auto pet = structure_profile(named_graph("petersen"), holes);
    CHECK(pet.triangle_free);
    REQUIRE(pet.has_odd_hole.has_value());
    CHECK(*pet.has_odd_hole);
    CHECK(pet.biconnected);
    CHECK(pet.max_degree == 3);

    auto bf = structure_profile(named_graph("butterfly"));
    CHECK(bf.contains_butterfly);
    CHECK_FALSE(bf.contains_diamond);
    CHECK_FALSE(bf.has_odd_hole.has_value());

    auto k4 = structure_profile(named_graph("K_4"));
    CHECK(k4.contains_k4);
    CHECK_FALSE(k4.contains_diamond);
    CHECK(k4.tr == std::vector<int>{3, 3, 3, 3});

    CHECK_THROWS_AS(structure_profile(Graph::from_edges(65, {}), holes), SizeLimitError);
    CHECK_FALSE(has_odd_hole(named_graph("C_6")));
    CHECK(has_odd_hole(named_graph("C_7")));
}

TEST_CASE("structure detectors agree with subset enumeration") {
    for (const auto& g : sample_graphs()) {
        auto p = structure_profile(g, {true, 64});
        CHECK(p.contains_claw == oracle::claw(g));
        CHECK(p.contains_diamond == oracle::diamond(g));
        CHECK(p.contains_butterfly == oracle::butterfly(g));
        CHECK(p.contains_k4 == oracle::k4(g));
        CHECK(*p.has_odd_hole == oracle::odd_hole(g));
        if (p.triangle_free) {
            CHECK_FALSE(p.contains_diamond);
            CHECK_FALSE(p.contains_butterfly);
            CHECK_FALSE(p.contains_k4);
            for (int t : p.tr) CHECK(t == 0);
        }
        for (int t : p.tr) CHECK(t >= 0);
    }
}

TEST_CASE("triangle edge removal") {
    CHECK(remove_triangle_edges(named_graph("K_3")).m() == 0);
    CHECK(remove_triangle_edges(named_graph("butterfly")).m() == 0);
    CHECK(remove_triangle_edges(named_graph("butterfly")).n() == 5);
    Graph c6 = named_graph("C_6");
    CHECK(remove_triangle_edges(c6) == c6);
}

TEST_CASE("largest component") {
    Graph g = labelled("a b\nb c\nc a\nx y");
    Graph big = largest_component(g);
    CHECK(big.n() == 3);
    CHECK(big.m() == 3);
    Graph c5 = named_graph("C_5");
    CHECK(largest_component(c5) == c5);
    Graph tie = labelled("p q\nr s");
    Graph first = largest_component(tie);
    CHECK(first.labels() == std::vector<std::string>{"p", "q"});
}
