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


#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracdim/fracdim.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnresolved = 3;

struct GraphDeleter {
    void operator()(fd_graph* g) const { fd_graph_free(g); }
};
struct ReportDeleter {
    void operator()(fd_report* r) const { fd_report_free(r); }
};
using GraphPtr = std::unique_ptr<fd_graph, GraphDeleter>;
using ReportPtr = std::unique_ptr<fd_report, ReportDeleter>;

struct Failure {
    int code;
};

int exit_code(fd_status s) {
    switch (s) {
        case FD_OK: return kExitOk;
        case FD_ERR_RESOURCE: return kExitUnresolved;
        case FD_ERR_INTERNAL: return kExitInternal;
        default: return kExitInput;
    }
}

void check(fd_status s) {
    if (s == FD_OK) return;
    std::cerr << "fracdim: " << fd_status_name(s) << ": " << fd_last_error() << "\n";
    throw Failure{exit_code(s)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "fracdim: cannot open " << path << "\n";
        throw Failure{kExitInput};
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        std::cerr << "fracdim: cannot write " << path << "\n";
        throw Failure{kExitInput};
    }
}

GraphPtr load_graph(const std::string& path) {
    fd_graph* g = nullptr;
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        std::string text = s.str();
        check(fd_graph_parse(text.data(), text.size(), &g));
    } else {
        check(fd_graph_read_file(path.c_str(), &g));
    }
    return GraphPtr(g);
}

double default_time_limit() {
    if (const char* env = std::getenv("FRACDIM_TIME_LIMIT_S")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0) return v;
        std::cerr << "fracdim: ignoring invalid FRACDIM_TIME_LIMIT_S='" << env << "'\n";
    }
    return 600.0;
}

struct Output {
    std::string path;
    std::string meta_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("-o,--output", path, "Write the report here instead of stdout");
        cmd->add_option("--meta", meta_path, "Write runtime metadata (JSON) to this file");
    }

    int emit(const ReportPtr& r) const {
        if (path.empty())
            std::cout << fd_report_json(r.get());
        else
            write_file(path, fd_report_json(r.get()));
        if (!meta_path.empty()) write_file(meta_path, fd_report_meta(r.get()));
        return fd_report_unresolved(r.get()) ? kExitUnresolved : kExitOk;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lebesgue and Hausdorff dimensions of graphs", "fracdim"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fd_version()));

    double time_limit = default_time_limit();
    std::optional<std::uint64_t> seed;
    auto add_time_limit = [&](CLI::App* cmd) {
        cmd->add_option("--time-limit-s", time_limit, "Wall-clock limit per solve (env FRACDIM_TIME_LIMIT_S)")
            ->check(CLI::PositiveNumber);
    };
    auto add_seed = [&](CLI::App* cmd) { cmd->add_option("--seed", seed, "Random seed"); };

    // dims / fractal
    std::string graph_path;
    bool whole_graph = false, no_fast_paths = false, witness = false;
    Output out;
    auto analysis = [&](const char* name, const char* help) {
        CLI::App* cmd = app.add_subcommand(name, help);
        cmd->add_option("graph", graph_path, "Edge-list file, '-' for stdin")->required();
        add_time_limit(cmd);
        add_seed(cmd);
        cmd->add_flag("--whole-graph", whole_graph, "Analyse the whole graph, not its largest component");
        cmd->add_flag("--no-fast-paths", no_fast_paths, "Use the general solvers only");
        cmd->add_flag("--witness", witness, "Include witness covers");
        out.attach(cmd);
        return cmd;
    };
    CLI::App* dims = analysis("dims", "Lebesgue and Hausdorff dimensions and fractality");
    CLI::App* fractal = analysis("fractal", "Fractality by the cheapest exact method");

    // volume
    int d = 2, budget = 0;
    bool measure = false;
    CLI::App* volume = app.add_subcommand("volume", "d-volume (or d-measure) of a small graph");
    volume->add_option("graph", graph_path, "Edge-list file, '-' for stdin")->required();
    volume->add_option("--d", d, "Number of complete-graph factors")->check(CLI::PositiveNumber);
    volume->add_option("--budget", budget, "Alphabet cap per coordinate, 0 for a complete search")
        ->check(CLI::NonNegativeNumber);
    volume->add_flag("--measure", measure, "Report the d-measure (volume of the complement)");
    volume->add_flag("--witness", witness, "Include the embedding and co-cover");
    out.attach(volume);

    // generate
    std::string family, spec_text;
    std::map<std::string, std::string> params;
    CLI::App* gen = app.add_subcommand("generate", "Write a generated graph as an edge list");
    gen->add_option("family", family,
                    "named, sierpinski, erdos_renyi, watts_strogatz, preferential_attachment, chung_lu_scale_free");
    gen->add_option("--spec", spec_text, "Full generator spec as JSON");
    for (const char* key : {"n", "p", "k", "beta", "m0", "m", "alpha", "b", "level", "name"})
        gen->add_option_function<std::string>(std::string("--") + key,
                                              [&params, key](const std::string& v) { params[key] = v; });
    add_seed(gen);
    std::string gen_path;
    gen->add_option("-o,--output", gen_path, "Write the edge list here instead of stdout");

    // experiment
    std::string config_path, csv_path, json_path, meta_path;
    CLI::App* exp = app.add_subcommand("experiment", "Run a generator sweep and summarise it");
    exp->add_option("config", config_path, "Experiment config (JSON)")->required();
    exp->add_option("--csv", csv_path, "Row table path (overrides the config)");
    exp->add_option("--json", json_path, "Summary path (overrides the config)");
    exp->add_option("--meta", meta_path, "Runtime metadata path");
    add_seed(exp);
    add_time_limit(exp);

    // communities
    std::string communities_path;
    long top_k = -1;
    CLI::App* comm = app.add_subcommand("communities", "Restricted dimensions for given communities");
    comm->add_option("graph", graph_path, "Edge-list file")->required();
    comm->add_option("communities", communities_path, "One community per line")->required();
    comm->add_option("--top-k", top_k, "Keep only the first K distinct communities")->check(CLI::NonNegativeNumber);
    add_time_limit(comm);
    out.attach(comm);

    // reduce-cubic
    std::uint64_t node_budget = 200000;
    bool no_prune = false;
    CLI::App* cubic = app.add_subcommand("reduce-cubic", "Pendant reductions of a connected cubic graph");
    cubic->add_option("graph", graph_path, "Edge-list file, '-' for stdin")->required();
    cubic->add_option("--node-budget", node_budget, "Search nodes before giving up");
    cubic->add_flag("--no-prune", no_prune, "Search without skipping uncolorable states");
    out.attach(cubic);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (dims->parsed() || fractal->parsed()) {
            GraphPtr g = load_graph(graph_path);
            fd_analyze_options o;
            fd_analyze_options_init(&o);
            o.time_limit_s = time_limit;
            o.whole_graph = whole_graph;
            o.fast_paths = !no_fast_paths;
            o.witness = witness;
            fd_report* r = nullptr;
            check(dims->parsed() ? fd_dims(g.get(), &o, &r) : fd_fractal(g.get(), &o, &r));
            return out.emit(ReportPtr(r));
        }
        if (volume->parsed()) {
            GraphPtr g = load_graph(graph_path);
            fd_report* r = nullptr;
            check(fd_volume(g.get(), d, budget, measure, witness, &r));
            return out.emit(ReportPtr(r));
        }
        if (gen->parsed()) {
            nlohmann::json spec;
            if (!spec_text.empty()) {
                spec = nlohmann::json::parse(spec_text, nullptr, false);
                if (spec.is_discarded()) {
                    std::cerr << "fracdim: --spec is not valid JSON\n";
                    return kExitInput;
                }
            } else {
                if (family.empty()) {
                    std::cerr << "fracdim: generate needs a family or --spec\n";
                    return kExitInput;
                }
                spec = {{"family", family}, {"params", nlohmann::json::object()}, {"seed", 0}};
                for (const auto& [key, value] : params) {
                    auto v = nlohmann::json::parse(value, nullptr, false);
                    spec["params"][key] = v.is_discarded() || v.is_object() || v.is_array() ? nlohmann::json(value) : v;
                }
            }
            if (seed) spec["seed"] = *seed;
            fd_graph* raw = nullptr;
            check(fd_graph_generate(spec.dump().c_str(), &raw));
            GraphPtr g(raw);
            char* text = nullptr;
            check(fd_graph_to_text(g.get(), &text));
            std::string edges(text);
            fd_string_free(text);
            if (gen_path.empty())
                std::cout << edges;
            else
                write_file(gen_path, edges);
            return kExitOk;
        }
        if (exp->parsed()) {
            auto cfg = nlohmann::json::parse(read_file(config_path), nullptr, false);
            if (cfg.is_discarded() || !cfg.is_object()) {
                std::cerr << "fracdim: " << config_path << " is not a JSON object\n";
                return kExitInput;
            }
            if (seed) cfg["seed"] = *seed;
            if (exp->count("--time-limit-s")) cfg["time_limit_s"] = time_limit;
            if (csv_path.empty()) csv_path = cfg.value("csv", std::string());
            if (json_path.empty()) json_path = cfg.value("json", std::string());
            fd_report* raw = nullptr;
            check(fd_experiment(cfg.dump().c_str(), &raw));
            ReportPtr r(raw);
            if (!csv_path.empty()) write_file(csv_path, fd_report_csv(r.get()));
            if (json_path.empty())
                std::cout << fd_report_json(r.get());
            else
                write_file(json_path, fd_report_json(r.get()));
            if (!meta_path.empty()) write_file(meta_path, fd_report_meta(r.get()));
            return fd_report_unresolved(r.get()) ? kExitUnresolved : kExitOk;
        }
        if (comm->parsed()) {
            GraphPtr g = load_graph(graph_path);
            std::string text = read_file(communities_path);
            fd_report* r = nullptr;
            check(fd_communities(g.get(), text.data(), text.size(), top_k, time_limit, &r));
            return out.emit(ReportPtr(r));
        }
        if (cubic->parsed()) {
            GraphPtr g = load_graph(graph_path);
            fd_report* r = nullptr;
            check(fd_reduce_cubic(g.get(), node_budget, !no_prune, &r));
            return out.emit(ReportPtr(r));
        }
    } catch (const Failure& f) {
        return f.code;
    }
    return kExitInternal;
}
