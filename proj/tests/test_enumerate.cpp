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

#include <algorithm>
#include <numeric>

#include "fracdim/enumerate.hpp"
#include "fracdim/generators.hpp"
#include "fracdim/isomorphism.hpp"

using namespace fracdim;

// Reference counts (OEIS A000088, A001349, A006785, A024607, A002851-style
// connected subcubic counts).
TEST_CASE("graph counts") {
    const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
    const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(nonisomorphic_graphs(n, GraphClass::all, false).size() == all[n - 1]);
        CHECK(nonisomorphic_graphs(n, GraphClass::all, true).size() == connected[n - 1]);
    }
}

TEST_CASE("triangle-free counts") {
    const std::vector<std::size_t> all{1, 2, 3, 7, 14, 38, 107, 410};
    const std::vector<std::size_t> connected{1, 1, 1, 3, 6, 19, 59, 267};
    for (int n = 1; n <= 8; ++n) {
        CHECK(nonisomorphic_graphs(n, GraphClass::triangle_free, false).size() == all[n - 1]);
        CHECK(nonisomorphic_graphs(n, GraphClass::triangle_free, true).size() == connected[n - 1]);
    }
}

TEST_CASE("connected subcubic counts") {
    const std::vector<std::size_t> connected{1, 1, 2, 6, 10, 29, 64, 194, 531, 1733};
    for (int n = 1; n <= 9; ++n)
        CHECK(nonisomorphic_graphs(n, GraphClass::subcubic, true).size() == connected[n - 1]);
}

TEST_CASE("isomorphism of relabelled graphs") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        Graph g = erdos_renyi(9, 0.4, s);
        std::vector<int> perm(9);
        std::iota(perm.begin(), perm.end(), 0);
        Stream rng(s, 7);
        for (int i = 8; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
        std::vector<Edge> e;
        for (const Edge& x : g.edges()) e.emplace_back(perm[x.u], perm[x.v]);
        Graph h = Graph::from_edges(9, e);
        auto f = find_isomorphism(g, h);
        REQUIRE(f.has_value());
        for (int u = 0; u < 9; ++u)
            for (int v = 0; v < 9; ++v) CHECK(g.adjacent(u, v) == h.adjacent((*f)[u], (*f)[v]));
        CHECK(invariant_hash(g) == invariant_hash(h));
    }
    CHECK_FALSE(isomorphic(named_graph("C_6"), sierpinski(2).graph));
    // Same degree sequence, different graphs.
    std::vector<Edge> two_triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    CHECK_FALSE(isomorphic(named_graph("C_6"), Graph::from_edges(6, two_triangles)));
}
