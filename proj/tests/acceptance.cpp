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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fracdim/coloring.hpp"
#include "fracdim/deadline.hpp"
#include "fracdim/dimensions.hpp"
#include "fracdim/enumerate.hpp"
#include "fracdim/fractality.hpp"
#include "fracdim/generators.hpp"
#include "fracdim/graph.hpp"
#include "fracdim/isomorphism.hpp"
#include "fracdim/report.hpp"
#include "fracdim/selfsim.hpp"
#include "oracles.hpp"

using namespace fracdim;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Witness {
    Graph g;
    ColoredCover cover;
};

// Optimal Hausdorff witnesses from criteria 1 and 2, reused by 6 and 7.
std::vector<Witness> witnesses;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void keep_witness(const Graph& g, const DimensionReport& h) {
    if (h.optimal())
        if (auto* c = std::get_if<ColoredCover>(&h.witness)) witnesses.push_back({g, *c});
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.push_back({u + a.n(), v + a.n()});
    return Graph::from_edges(a.n() + b.n(), edges);
}

Outcome fixtures() {
    struct Fixture {
        std::string name;
        Graph g;
        int l, h;
        bool fractal;
    };
    std::vector<Fixture> fx;
    for (int n = 2; n <= 6; ++n) fx.push_back({"K_" + std::to_string(n), named_graph("K_" + std::to_string(n)), 0, 1, true});
    fx.push_back({"P_4", named_graph("P_4"), 1, 1, false});
    fx.push_back({"C_5", named_graph("C_5"), 1, 2, true});
    fx.push_back({"C_6", named_graph("C_6"), 1, 1, false});
    fx.push_back({"K_1_3", named_graph("K_1_3"), 2, 2, false});
    fx.push_back({"diamond", named_graph("diamond"), 1, 2, true});
    fx.push_back({"petersen", named_graph("petersen"), 2, 3, true});
    fx.push_back({"S_2", sierpinski(2).graph, 1, 2, true});
    fx.push_back({"S_3", sierpinski(3).graph, 1, 2, true});

    Outcome o;
    double slowest = 0;
    for (const auto& f : fx) {
        auto t0 = std::chrono::steady_clock::now();
        auto l = lebesgue_dimension(f.g);
        auto h = hausdorff_dimension(f.g, l, {});
        auto c = classify(f.g);
        double s = seconds_since(t0);
        slowest = std::max(slowest, s);
        keep_witness(f.g, h);
        bool ok = l.optimal() && h.optimal() && l.value == f.l && h.value == f.h && c.determined &&
                  c.dim_l == f.l && c.dim_h == f.h && c.is_fractal == f.fractal &&
                  c.fractal_order == (f.fractal ? std::optional<int>(f.l) : std::nullopt) && s < 10;
        if (f.g.n() <= 8) ok = ok && oracle::lebesgue(f.g) == f.l && oracle::hausdorff(f.g) == f.h;
        if (!ok) {
            o.pass = false;
            o.detail += " " + f.name + "=(" + std::to_string(l.value) + "," + std::to_string(h.value) + ")";
        }
    }
    std::ostringstream d;
    d << fx.size() << " fixtures, slowest " << slowest << " s" << o.detail;
    o.detail = d.str();
    return o;
}

Outcome oracle_equivalence() {
    auto t0 = std::chrono::steady_clock::now();
    int graphs = 0, mismatches = 0;
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : nonisomorphic_graphs(n, GraphClass::all, true)) {
            ++graphs;
            auto l = lebesgue_dimension(g);
            auto h = hausdorff_dimension(g, l, {});
            keep_witness(g, h);
            if (!l.optimal() || !h.optimal() || l.value != oracle::lebesgue(g) || h.value != oracle::hausdorff(g))
                ++mismatches;
        }
    double s = seconds_since(t0);
    std::ostringstream d;
    d << graphs << " connected graphs, " << mismatches << " mismatches, " << s << " s";
    return {mismatches == 0 && s <= 1800, d.str()};
}

Outcome triangle_free() {
    int graphs = 0;
    std::vector<std::string> mismatches;
    for (int n = 1; n <= 9; ++n)
        for (const auto& g : nonisomorphic_graphs(n, GraphClass::triangle_free, true)) {
            ++graphs;
            bool class2 = oracle::edge_chromatic(g) == g.max_degree() + 1;
            auto r = classify(g);
            if (!r.determined || r.is_fractal != class2)
                mismatches.push_back("n=" + std::to_string(n) + ",m=" + std::to_string(g.m()) +
                                     (r.is_fractal ? " fractal" : " non-fractal") + (class2 ? " class 2" : " class 1"));
        }
    std::string d = std::to_string(graphs) + " triangle-free graphs, " + std::to_string(mismatches.size()) + " mismatches";
    for (const auto& m : mismatches) d += "; " + m;
    return {mismatches.empty(), d};
}

Outcome subcubic() {
    int graphs = 0, mismatches = 0;
    for (int n = 5; n <= 10; ++n)
        for (const auto& g : nonisomorphic_graphs(n, GraphClass::subcubic, true)) {
            ++graphs;
            auto t = subcubic_fractal_test(g);
            auto s = classify_general(g);
            if (!s.determined || t.is_fractal != s.is_fractal || t.fractal_order != s.fractal_order) ++mismatches;
        }
    return {mismatches == 0,
            std::to_string(graphs) + " subcubic graphs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome measure() {
    Outcome o;
    auto p4 = d_volume(named_graph("P_4"), 2);
    if (p4.status != MeasureStatus::finite || p4.volume != 6) {
        o.pass = false;
        o.detail += " vol2(P_4)!=6";
    }

    std::mt19937_64 rng(20261016);
    std::vector<std::vector<Graph>> pool(6);
    for (int m = 1; m <= 5; ++m) pool[m] = nonisomorphic_graphs(m, GraphClass::all, true);
    auto pick = [&] {
        int m = std::uniform_int_distribution<int>(1, 5)(rng);
        return pool[m][std::uniform_int_distribution<std::size_t>(0, pool[m].size() - 1)(rng)];
    };
    int finite = 0, additive_fail = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Graph a = pick(), b = pick();
        const int d = 2 + trial % 2;
        auto ra = d_measure(a, d), rb = d_measure(b, d), ru = d_measure(disjoint_union(a, b), d);
        bool both = ra.status == MeasureStatus::finite && rb.status == MeasureStatus::finite;
        bool ok = ra.status != MeasureStatus::no_embedding_within_budget &&
                  rb.status != MeasureStatus::no_embedding_within_budget &&
                  (ru.status == MeasureStatus::finite) == both && (!both || ru.volume == ra.volume + rb.volume);
        finite += both;
        additive_fail += !ok;
    }
    if (additive_fail) o.pass = false;

    MeasureOptions search_only;
    search_only.use_dimension_certificate = false;
    int graphs = 0, threshold_fail = 0;
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : nonisomorphic_graphs(n, GraphClass::all, false)) {
            ++graphs;
            int d = 1;
            while (d <= n + 1 && d_measure(g, d, search_only).status != MeasureStatus::finite) ++d;
            if (d - 1 != hausdorff_dimension(g).value) ++threshold_fail;
        }
    if (threshold_fail) o.pass = false;
    std::ostringstream d;
    d << "vol2(P_4)=" << p4.volume << ", additivity " << 50 - additive_fail << "/50 (" << finite
      << " finite), threshold " << graphs - threshold_fail << "/" << graphs << o.detail;
    o.detail = d.str();
    return o;
}

Outcome self_similarity() {
    int failures = 0;
    for (const auto& w : witnesses) {
        auto fam = contracting_family(w.g, w.cover);
        auto back = cover_from_family(w.g, fam);
        if (!verify_contracting_family(w.g, fam).ok || back.h != w.cover.h || !verify_colored_cover(w.g, back).ok)
            ++failures;
    }
    return {failures == 0 && !witnesses.empty(),
            std::to_string(witnesses.size()) + " witnesses, " + std::to_string(failures) + " failures"};
}

Outcome encoding() {
    int failures = 0;
    for (const auto& w : witnesses) {
        auto rep = vector_representation(w.g, w.cover);
        auto b = encoding_bound(rep);
        if (!verify_vector_representation(w.g, rep).ok || !b.within_unconditional ||
            decode_graph(b.bits, rep.k()).edges() != w.g.edges())
            ++failures;
    }
    return {failures == 0 && !witnesses.empty(),
            std::to_string(witnesses.size()) + " representations, " + std::to_string(failures) + " failures"};
}

Outcome trends(const fs::path& config) {
    auto t0 = std::chrono::steady_clock::now();
    std::ifstream in(config);
    auto cfg = ExperimentConfig::from_json(nlohmann::json::parse(in));
    auto rows = run_experiment(cfg);
    auto summary = experiment_summary(cfg, rows);
    double s = seconds_since(t0);

    Outcome o;
    std::map<std::string, std::vector<double>> means;
    std::map<std::string, double> worst_freq;
    int errors = 0, timeouts = 0;
    for (const auto& m : summary["summary"]) {
        const std::string name = m["model"];
        for (const auto& e : m["by_n"]) {
            errors += e["errors"].get<int>();
            timeouts += e["timeouts"].get<int>();
            means[name].push_back(e["mean_dim_h"].is_null() ? -1 : e["mean_dim_h"].get<double>());
            if (e["fractal_frequency"].is_null()) {
                o.pass = false;
                continue;
            }
            worst_freq[name] = std::max(worst_freq[name], e["fractal_frequency"].get<double>());
        }
    }
    std::ostringstream d;
    for (const std::string name : {"ER", "PA", "WS"}) {
        const auto& v = means[name];
        if (v.size() != cfg.n_values.size()) o.pass = false;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (!(v[i] > v[i - 1])) o.pass = false;
        d << name << " dim_H";
        for (double x : v) d << ' ' << x;
        d << " freq<=" << worst_freq[name] << "; ";
    }
    if (!(means["PA"].back() > means["ER"].back())) o.pass = false;
    if (worst_freq["ER"] > 0.05 || worst_freq["PA"] > 0.05) o.pass = false;
    if (errors || rows.size() != cfg.models.size() * cfg.n_values.size() * cfg.replicates || s > 7200)
        o.pass = false;
    d << rows.size() << " rows, " << errors << " errors, " << timeouts << " timeouts, " << s << " s";
    o.detail = d.str();
    return o;
}

Outcome cubic_reduction() {
    Outcome o;
    auto pet = cubic_fractal_test(named_graph("petersen"));
    bool pet_ok = pet.report.determined && pet.two_fractal && pet.report.fractal_order == 2 && pet.trace &&
                  pet.trace->steps.empty();
    Graph prism = parse_edge_list(std::string_view("a b\nb c\nc a\nd e\ne f\nf d\na d\nb e\nc f\n"));
    int class1_ok = 0;
    for (const Graph& g : {named_graph("K_4"), prism}) {
        auto r = cubic_fractal_test(g);
        if (!r.report.determined || r.two_fractal || !r.trace) continue;
        auto round = trace_from_json(to_json(*r.trace));
        if (r.trace->terminal_verdict == TerminalVerdict::class1 && replay(g, r.trace->steps) == r.trace->terminal_graph &&
            replay(g, round.steps) == r.trace->terminal_graph)
            ++class1_ok;
    }
    o.pass = pet_ok && class1_ok == 2;
    o.detail = std::string("petersen ") + (pet_ok ? "2-fractal" : "wrong") + ", class 1 replays " +
               std::to_string(class1_ok) + "/2";
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism(const std::string& cli, const fs::path& dir) {
    fs::create_directories(dir);
    auto q = [](const fs::path& p) { return "'" + p.string() + "'"; };
    {
        std::ofstream(dir / "comm.txt") << "0 1 2\n3 4\n5 6 7 8\n";
        std::ofstream(dir / "exp.json")
            << R"({"models": [{"name": "ER", "family": "erdos_renyi", "params": {"density_from": )"
            << R"({"family": "preferential_attachment", "m0": 3, "m": 2}}}, )"
            << R"({"name": "WS", "family": "watts_strogatz", "params": {"k": 4, "beta": 0.1}}], )"
            << R"("n_values": [15, 20], "replicates": 3, "seed": 11})";
    }
    const std::vector<std::pair<std::string, std::string>> gens = {
        {"pet", "named --name petersen"},
        {"er", "erdos_renyi --n 25 --p 0.2 --seed 3"},
        {"ws", "watts_strogatz --n 25 --k 4 --beta 0.2 --seed 3"},
        {"pa", "preferential_attachment --n 25 --m0 3 --m 2 --seed 3"},
        {"cl", "chung_lu_scale_free --n 25 --alpha 2 --b 1 --seed 3"},
        {"s3", "sierpinski --level 3"}};
    struct Command {
        std::string args;
        std::vector<fs::path> files;
    };
    std::vector<Command> commands;
    auto g = [&](const std::string& n) { return dir / (n + ".txt"); };
    for (const auto& [name, args] : gens) commands.push_back({"generate " + args + " -o " + q(g(name)), {g(name)}});
    for (const char* n : {"pet", "er", "ws", "pa", "cl", "s3"}) {
        commands.push_back({"dims --witness " + q(g(n)), {}});
        commands.push_back({"fractal " + q(g(n)), {}});
    }
    commands.push_back({"volume --d 3 --witness " + q(g("pet")), {}});
    commands.push_back({"volume --d 2 --measure --witness " + q(g("pet")), {}});
    commands.push_back({"communities " + q(g("pet")) + " " + q(dir / "comm.txt"), {}});
    commands.push_back({"reduce-cubic " + q(g("pet")), {}});
    commands.push_back({"experiment " + q(dir / "exp.json") + " --csv " + q(dir / "exp.csv") + " --json " +
                            q(dir / "exp_summary.json"),
                        {dir / "exp.csv", dir / "exp_summary.json"}});

    int differing = 0, failed = 0;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        std::string outputs[2];
        for (int run = 0; run < 2; ++run) {
            fs::path out = dir / ("stdout" + std::to_string(i));
            int rc = std::system((q(cli) + " " + commands[i].args + " > " + q(out) + " 2>/dev/null").c_str());
            if (rc != 0) ++failed;
            outputs[run] = slurp(out);
            for (const auto& f : commands[i].files) outputs[run] += slurp(f);
        }
        if (outputs[0].empty() || outputs[0] != outputs[1]) ++differing;
    }
    return {differing == 0 && failed == 0, std::to_string(commands.size()) + " commands run twice, " +
                                                std::to_string(differing) + " differ, " + std::to_string(failed) +
                                                " nonzero exits"};
}

}  // namespace

int main(int argc, char** argv) {
    const fs::path source = argc > 1 ? fs::path(argv[1]) : fs::path(FRACDIM_SOURCE_DIR);
    const std::string cli = argc > 2 ? argv[2] : FRACDIM_CLI_PATH;
    const fs::path scratch = fs::temp_directory_path() / ("fracdim_acceptance_" + std::to_string(::getpid()));

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"fixture exactness", fixtures},
        {"oracle equivalence", oracle_equivalence},
        {"triangle-free dichotomy", triangle_free},
        {"subcubic theorem agreement", subcubic},
        {"measure", measure},
        {"self-similarity round trip", self_similarity},
        {"encoding bound", encoding},
        {"experiment trends", [&] { return trends(source / "configs" / "trends.json"); }},
        {"cubic reduction", cubic_reduction},
        {"determinism", [&] { return determinism(cli, scratch); }}};

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    std::error_code ec;
    fs::remove_all(scratch, ec);
    return failures == 0 ? 0 : 1;
}
