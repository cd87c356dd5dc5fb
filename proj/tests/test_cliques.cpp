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

#include "fracdim/cliques.hpp"
#include "fracdim/enumerate.hpp"
#include "fracdim/error.hpp"
#include "fracdim/generators.hpp"

using namespace fracdim;

namespace {

std::vector<std::vector<int>> as_lists(const CliqueSet& cs) {
    std::vector<std::vector<int>> out;
    for (const auto& c : cs.cliques) out.push_back(c.members());
    return out;
}

VertexSet set_of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.insert(v);
    return s;
}

}  // namespace

TEST_CASE("maximal cliques of small graphs") {
    using L = std::vector<std::vector<int>>;
    CHECK(as_lists(maximal_cliques(named_graph("P_4"))) == L{{0, 1}, {1, 2}, {2, 3}});
    CHECK(as_lists(maximal_cliques(named_graph("K_4"))) == L{{0, 1, 2, 3}});
    // diamond: non-edge 0-3
    CHECK(as_lists(maximal_cliques(named_graph("diamond"))) == L{{0, 1, 2}, {1, 2, 3}});
    CHECK(as_lists(maximal_cliques(Graph::from_edges(2, {}))) == L{{0}, {1}});
    CHECK_THROWS_AS(maximal_cliques(named_graph("petersen"), 3), ResourceError);
}

TEST_CASE("all cliques counts") {
    CHECK(all_cliques(named_graph("K_3"), true).size() == 7);
    CHECK(all_cliques(named_graph("P_3"), false).size() == 2);
    CHECK(all_cliques(named_graph("diamond"), true).size() == 11);
}

TEST_CASE("maximal cliques are the maximal members of all cliques") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : nonisomorphic_graphs(n, GraphClass::all, false)) {
            auto all = all_cliques(g, true);
            CHECK(all.size() == all_cliques(g, false).size() + static_cast<std::size_t>(g.n()));
            std::vector<VertexSet> expect;
            for (const auto& c : all.cliques) {
                bool maximal = std::none_of(all.cliques.begin(), all.cliques.end(),
                                            [&](const VertexSet& d) { return !(d == c) && c.subset_of(d); });
                if (maximal) expect.push_back(c);
            }
            auto got = maximal_cliques(g).cliques;
            auto key = [](const VertexSet& s) { return s.members(); };
            std::sort(expect.begin(), expect.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
            CHECK(got == expect);
            for (const auto& c : all.cliques) CHECK(g.is_clique(c));
        }
}

TEST_CASE("pruning rule with and without the safety override") {
    Graph p4 = named_graph("P_4");
    CliqueSet edges = all_cliques(p4, false);
    auto literal = prune_for_hausdorff(p4, edges, 1, false);
    // ab and cd meet one other clique each and go; bc meets two and stays.
    CHECK(literal.retained.size() == 1);
    CHECK_FALSE(literal.warnings.empty());

    auto safe = prune_for_hausdorff(p4, edges, 1, true);
    CHECK(safe.reinserted == 2);
    CHECK(safe.retained.size() == 3);

    CliqueSet one{{set_of(2, {0, 1})}, CliqueKind::all};
    auto lone = prune_for_hausdorff(Graph::from_edges(2, std::vector<Edge>{{0, 1}}), one, 0, false);
    CHECK(lone.retained.size() == 0);
    CHECK_FALSE(lone.warnings.empty());

    auto k3 = all_cliques(named_graph("K_3"), false);
    auto gone = prune_for_hausdorff(named_graph("K_3"), k3, 6, false);
    CHECK(gone.retained.size() == 0);
    CHECK_FALSE(gone.warnings.empty());
}

TEST_CASE("safety override keeps coverage and separation") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : nonisomorphic_graphs(n, GraphClass::all, true)) {
            auto all = all_cliques(g, true);
            for (int dim_l = 0; dim_l <= 4; ++dim_l) {
                auto r = prune_for_hausdorff(g, all, dim_l, true);
                for (const Edge& e : g.edges())
                    CHECK(std::any_of(r.retained.cliques.begin(), r.retained.cliques.end(),
                                      [&](const VertexSet& c) { return c.contains(e.u) && c.contains(e.v); }));
                for (int u = 0; u < g.n(); ++u)
                    for (int v = u + 1; v < g.n(); ++v)
                        CHECK(std::any_of(r.retained.cliques.begin(), r.retained.cliques.end(),
                                          [&](const VertexSet& c) { return c.contains(u) != c.contains(v); }));
            }
        }
}

TEST_CASE("clique number") {
    CHECK(clique_number(named_graph("petersen")) == 2);
    CHECK(clique_number(named_graph("K_5")) == 5);
    CHECK(clique_number(Graph::from_edges(3, {})) == 1);
    CHECK(clique_number(Graph()) == 0);
}
