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

#include "fracdim/error.hpp"
#include "fracdim/fracdim.h"
#include "fracdim/generators.hpp"
#include "fracdim/report.hpp"

using namespace fracdim;
using nlohmann::json;

namespace {

ExperimentConfig small_config() {
    return ExperimentConfig::from_json(json::parse(R"({
        "models": [{"name": "ER", "family": "erdos_renyi",
                    "params": {"density_from": {"family": "preferential_attachment", "m0": 3, "m": 2}}}],
        "n_values": [20, 30, 40], "replicates": 10, "time_limit_s": 60, "seed": 5})"));
}

}  // namespace

TEST_CASE("dimension analysis examples") {
    AnalyzeOptions o;
    auto pet = analyze_dimensions(named_graph("petersen"), o).primary;
    CHECK(pet["dim_L"] == 2);
    CHECK(pet["dim_H"] == 3);
    CHECK(pet["fractal"] == true);
    CHECK(pet["order"] == 2);
    auto k5 = analyze_dimensions(named_graph("K_5"), o).primary;
    CHECK(k5["dim_L"] == 0);
    CHECK(k5["dim_H"] == 1);
    CHECK(k5["fractal"] == true);
    CHECK(k5["order"] == 0);
    auto tree = analyze_dimensions(preferential_attachment(30, 1, 1, 3), o).primary;
    CHECK(tree["fractal"] == false);
    CHECK_FALSE(pet.contains("runtime_ms"));

    Graph two = parse_edge_list(std::string_view("a b\nb c\nc a\nx y\n"));
    auto largest = analyze_dimensions(two, o).primary;
    CHECK(largest["graph"]["vertices"] == 3);
    o.whole_graph = true;
    CHECK_THROWS_AS(analyze_dimensions(two, o), PreconditionError);
}

TEST_CASE("witness output lists labels") {
    AnalyzeOptions o;
    o.witness = true;
    auto j = analyze_dimensions(named_graph("C_5"), o).primary;
    CHECK(j["hausdorff"]["witness"]["colors"] == 3);
    CHECK(j["lebesgue"]["witness"]["clusters"].size() == 5);
}

TEST_CASE("fits") {
    auto f = fit_line({1, 2, 3, 4}, {3, 5, 7, 9});
    CHECK(f.slope == doctest::Approx(2));
    CHECK(f.intercept == doctest::Approx(1));
    CHECK(f.r2 == doctest::Approx(1));
    auto g = fit_line({1, 2, 3}, {1, 3, 2});
    CHECK(g.r2 == doctest::Approx(0.25));
    CHECK(fit_line({1}, {1}).r2 == 0);
}

TEST_CASE("experiment shape, CSV round trip and determinism") {
    auto cfg = small_config();
    auto rows = run_experiment(cfg);
    REQUIRE(rows.size() == 30);
    for (const auto& r : rows) {
        CHECK_FALSE(r.status.empty());
        if (r.status == "optimal") CHECK(*r.dim_l <= *r.dim_h);
    }
    auto back = rows_from_csv(rows_to_csv(rows));
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto expect = rows[i];
        expect.runtime_ms = 0;
        CHECK(back[i] == expect);
        CHECK(row_from_json(row_to_json(rows[i])) == expect);
    }
    auto again = run_experiment(cfg);
    CHECK(rows_to_csv(again) == rows_to_csv(rows));
    CHECK(experiment_summary(cfg, again).dump() == experiment_summary(cfg, rows).dump());

    auto summary = experiment_summary(cfg, rows);
    CHECK(summary["schema_version"] == kSchemaVersion);
    for (const auto& e : summary["summary"][0]["by_n"]) {
        double f = e["fractal_frequency"].get<double>();
        CHECK(f >= 0);
        CHECK(f <= 1);
    }
    CHECK(summary["summary"][0].contains("fit_sqrt_n"));
    CHECK(summary["summary"][0].contains("fit_log_n"));
}

TEST_CASE("failing rows do not stop the sweep") {
    auto cfg = ExperimentConfig::from_json(json::parse(R"({
        "models": [{"name": "bad", "family": "no_such_family"}, {"name": "WS", "family": "watts_strogatz",
                    "params": {"k": 4, "beta": 0.2}}],
        "n_values": [12], "replicates": 2, "seed": 1})"));
    auto rows = run_experiment(cfg);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].status == "error");
    CHECK_FALSE(rows[0].error.empty());
    CHECK(rows[2].status == "optimal");
    CHECK(rows_from_csv(rows_to_csv(rows)).size() == 4);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(ExperimentConfig::from_json(json::parse(R"({"models": [], "n_values": [10]})")), InvalidArgument);
    CHECK_THROWS_AS(ExperimentConfig::from_json(json::parse(
                        R"({"models": [{"family": "erdos_renyi"}], "n_values": [1]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(ExperimentConfig::from_json(json::parse(
                        R"({"models": [{"family": "erdos_renyi"}], "n_values": [10], "replicates": 0})")),
                    InvalidArgument);
    CHECK_THROWS_AS(ExperimentConfig::from_json(json::parse(R"({"n_values": [10]})")), InvalidArgument);
}

TEST_CASE("replicate seeds are distinct and stable") {
    CHECK(replicate_seed(1, 0, 20, 0) == replicate_seed(1, 0, 20, 0));
    CHECK(replicate_seed(1, 0, 20, 0) != replicate_seed(1, 0, 20, 1));
    CHECK(replicate_seed(1, 0, 20, 0) != replicate_seed(1, 1, 20, 0));
    CHECK(replicate_seed(1, 0, 20, 0) != replicate_seed(2, 0, 20, 0));
}

TEST_CASE("C interface") {
    fd_graph* g = nullptr;
    const char text[] = "a b\nb c\nc a\nc d\n";
    REQUIRE(fd_graph_parse(text, sizeof text - 1, &g) == FD_OK);
    CHECK(fd_graph_vertices(g) == 4);
    CHECK(fd_graph_edges(g) == 4);

    fd_analyze_options o;
    fd_analyze_options_init(&o);
    fd_report* r = nullptr;
    REQUIRE(fd_dims(g, &o, &r) == FD_OK);
    auto j = json::parse(fd_report_json(r));
    CHECK(j["dim_L"] == 1);
    CHECK(fd_report_unresolved(r) == 0);
    CHECK(json::parse(fd_report_meta(r)).contains("runtime_ms"));
    fd_report_free(r);

    REQUIRE(fd_volume(g, 2, 0, 0, 1, &r) == FD_OK);
    CHECK(json::parse(fd_report_json(r))["status"] == "finite");
    fd_report_free(r);

    CHECK(fd_reduce_cubic(g, 1000, 1, &r) == FD_ERR_PRECONDITION);
    CHECK(std::string(fd_last_error()).size() > 0);
    CHECK(fd_communities(g, "a z\n", 4, -1, 10, &r) == FD_ERR_PARSE);
    CHECK(fd_volume(g, 0, 0, 0, 0, &r) == FD_ERR_INVALID_ARGUMENT);

    char* edges = nullptr;
    REQUIRE(fd_graph_to_text(g, &edges) == FD_OK);
    fd_graph* h = nullptr;
    REQUIRE(fd_graph_parse(edges, std::string(edges).size(), &h) == FD_OK);
    CHECK(fd_graph_edges(h) == 4);
    fd_string_free(edges);
    fd_graph_free(h);
    fd_graph_free(g);

    CHECK(fd_graph_parse("a a\n", 4, &g) == FD_ERR_PARSE);
    CHECK(fd_graph_read_file("/nonexistent/graph.txt", &g) == FD_ERR_IO);
    CHECK(fd_graph_generate("{\"family\": \"petersen\"}", &g) == FD_ERR_INVALID_ARGUMENT);
    CHECK(fd_graph_generate("not json", &g) == FD_ERR_PARSE);
    CHECK(fd_dims(nullptr, &o, &r) == FD_ERR_INVALID_ARGUMENT);
    REQUIRE(fd_graph_generate(R"({"family": "sierpinski", "params": {"level": 3}})", &g) == FD_OK);
    CHECK(fd_graph_vertices(g) == 15);
    fd_graph_free(g);
}
