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


#include "fracdim/fracdim.h"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fracdim/communities.hpp"
#include "fracdim/error.hpp"
#include "fracdim/fractality.hpp"
#include "fracdim/generators.hpp"
#include "fracdim/graph.hpp"
#include "fracdim/report.hpp"
#include "fracdim/selfsim.hpp"

struct fd_graph {
    fracdim::Graph g;
};

struct fd_report {
    std::string json;
    std::string meta = "{}";
    std::string csv;
    bool unresolved = false;
};

namespace {

using nlohmann::json;
using namespace fracdim;

thread_local std::string last_error;

fd_status fail(fd_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

template <typename F>
fd_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return FD_OK;
    } catch (const ParseError& e) {
        return fail(FD_ERR_PARSE, e.what());
    } catch (const PreconditionError& e) {
        return fail(FD_ERR_PRECONDITION, e.what());
    } catch (const SizeLimitError& e) {
        return fail(FD_ERR_SIZE_LIMIT, e.what());
    } catch (const ResourceError& e) {
        return fail(FD_ERR_RESOURCE, e.what());
    } catch (const InvalidArgument& e) {
        return fail(FD_ERR_INVALID_ARGUMENT, e.what());
    } catch (const json::exception& e) {
        return fail(FD_ERR_PARSE, std::string("JSON: ") + e.what());
    } catch (const std::bad_alloc&) {
        return fail(FD_ERR_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return fail(FD_ERR_INTERNAL, e.what());
    }
}

fd_status null_arg(const char* name) { return fail(FD_ERR_INVALID_ARGUMENT, std::string(name) + " is null"); }

fd_report* make_report(const json& primary, const json& meta = json::object(), bool unresolved = false) {
    auto* r = new fd_report;
    r->json = primary.dump(2) + "\n";
    r->meta = meta.dump(2) + "\n";
    r->unresolved = unresolved;
    return r;
}

AnalyzeOptions to_options(const fd_analyze_options* o) {
    AnalyzeOptions a;
    if (!o) return a;
    a.time_limit = Seconds(o->time_limit_s);
    a.whole_graph = o->whole_graph != 0;
    a.fast_paths = o->fast_paths != 0;
    a.witness = o->witness != 0;
    return a;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* fd_version(void) { return "0.1.0"; }

const char* fd_last_error(void) { return last_error.c_str(); }

const char* fd_status_name(fd_status s) {
    switch (s) {
        case FD_OK: return "ok";
        case FD_ERR_PARSE: return "parse error";
        case FD_ERR_PRECONDITION: return "precondition failed";
        case FD_ERR_SIZE_LIMIT: return "size limit exceeded";
        case FD_ERR_RESOURCE: return "resource limit exceeded";
        case FD_ERR_INVALID_ARGUMENT: return "invalid argument";
        case FD_ERR_IO: return "i/o error";
        case FD_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

fd_status fd_graph_parse(const char* text, size_t len, fd_graph** out) {
    if (!out) return null_arg("out");
    if (!text && len) return null_arg("text");
    return guarded([&] { *out = new fd_graph{parse_edge_list(std::string_view(text ? text : "", len))}; });
}

fd_status fd_graph_read_file(const char* path, fd_graph** out) {
    if (!path) return null_arg("path");
    if (!out) return null_arg("out");
    std::ifstream in(path);
    if (!in) return fail(FD_ERR_IO, std::string("cannot open ") + path);
    return guarded([&] { *out = new fd_graph{parse_edge_list(in)}; });
}

fd_status fd_graph_generate(const char* spec_json, fd_graph** out) {
    if (!spec_json) return null_arg("spec_json");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new fd_graph{generate(GeneratorSpec::from_json(json::parse(spec_json)))}; });
}

void fd_graph_free(fd_graph* g) { delete g; }

int fd_graph_vertices(const fd_graph* g) { return g ? g->g.n() : 0; }

size_t fd_graph_edges(const fd_graph* g) { return g ? g->g.m() : 0; }

fd_status fd_graph_to_text(const fd_graph* g, char** out) {
    if (!g) return null_arg("graph");
    if (!out) return null_arg("out");
    return guarded([&] { *out = dup_string(to_edge_list(g->g)); });
}

void fd_string_free(char* s) { std::free(s); }

const char* fd_report_json(const fd_report* r) { return r ? r->json.c_str() : ""; }
const char* fd_report_meta(const fd_report* r) { return r ? r->meta.c_str() : ""; }
const char* fd_report_csv(const fd_report* r) { return r ? r->csv.c_str() : ""; }
int fd_report_unresolved(const fd_report* r) { return r && r->unresolved ? 1 : 0; }
void fd_report_free(fd_report* r) { delete r; }

void fd_analyze_options_init(fd_analyze_options* o) {
    if (!o) return;
    o->time_limit_s = kDefaultTimeLimit.count();
    o->whole_graph = 0;
    o->fast_paths = 1;
    o->witness = 0;
}

fd_status fd_dims(const fd_graph* g, const fd_analyze_options* o, fd_report** out) {
    if (!g) return null_arg("graph");
    if (!out) return null_arg("out");
    return guarded([&] {
        Analysis a = analyze_dimensions(g->g, to_options(o));
        *out = make_report(a.primary, a.meta, a.unresolved);
    });
}

fd_status fd_fractal(const fd_graph* g, const fd_analyze_options* o, fd_report** out) {
    if (!g) return null_arg("graph");
    if (!out) return null_arg("out");
    return guarded([&] {
        Analysis a = analyze_fractality(g->g, to_options(o));
        *out = make_report(a.primary, a.meta, a.unresolved);
    });
}

fd_status fd_volume(const fd_graph* g, int d, int size_budget, int measure, int witness, fd_report** out) {
    if (!g) return null_arg("graph");
    if (!out) return null_arg("out");
    return guarded([&] {
        if (size_budget < 0) throw InvalidArgument("size budget must be non-negative");
        MeasureOptions opts;
        opts.size_budget = size_budget;
        Stopwatch sw;
        MeasureResult r = measure ? d_measure(g->g, d, opts) : d_volume(g->g, d, opts);
        json j{{"schema_version", kSchemaVersion},
               {"command", "volume"},
               {"quantity", measure ? "measure" : "volume"},
               {"d", r.d},
               {"status", to_string(r.status)},
               {"volume", r.status == MeasureStatus::finite ? json(r.volume) : json(nullptr)},
               {"size_budget", size_budget},
               {"budget_binds", r.budget_binds}};
        if (witness && r.witness_embedding) {
            // The embedded graph is g for a volume and its complement for a measure.
            json emb = json::object();
            for (int v = 0; v < g->g.n(); ++v) emb[g->g.label(v)] = (*r.witness_embedding)[v];
            j["witness_embedding"] = emb;
            j["witness_cocover"] = *r.witness_cocover;
        }
        *out = make_report(j, {{"runtime_ms", sw.elapsed_ms()}},
                           r.status == MeasureStatus::no_embedding_within_budget);
    });
}

fd_status fd_communities(const fd_graph* g, const char* text, size_t len, long top_k, double time_limit_s,
                         fd_report** out) {
    if (!g) return null_arg("graph");
    if (!out) return null_arg("out");
    if (!text && len) return null_arg("text");
    return guarded([&] {
        std::optional<std::size_t> k;
        if (top_k >= 0) k = static_cast<std::size_t>(top_k);
        CommunitySet omega = parse_communities(std::string_view(text ? text : "", len), g->g, k);
        RestrictedDimensions r = restricted_dimensions(g->g, omega, Seconds(time_limit_s));
        const bool decided = r.lebesgue.upper_bound < r.hausdorff.lower_bound ||
                             r.hausdorff.upper_bound <= r.lebesgue.lower_bound;
        json j{{"schema_version", kSchemaVersion},
               {"command", "communities"},
               {"communities", omega.communities.size()},
               {"dropped_by_top_k", omega.dropped},
               {"restricted_dim_L", r.lebesgue.value},
               {"restricted_dim_H", r.hausdorff.value},
               {"fractal", decided ? json(r.lebesgue.value < r.hausdorff.lower_bound) : json(nullptr)},
               {"twins_removed", r.twins_removed},
               {"uncovered_edges", r.uncovered_edges},
               {"lebesgue", to_json(r.lebesgue, g->g, false)},
               {"hausdorff", to_json(r.hausdorff, g->g, false)}};
        *out = make_report(j, {{"runtime_ms", r.hausdorff.runtime_ms}}, !r.hausdorff.optimal());
    });
}

fd_status fd_reduce_cubic(const fd_graph* g, uint64_t node_budget, int prune, fd_report** out) {
    if (!g) return null_arg("graph");
    if (!out) return null_arg("out");
    return guarded([&] {
        CubicSearchOptions opts;
        opts.node_budget = node_budget;
        opts.prune_uncolorable = prune != 0;
        Stopwatch sw;
        CubicFractalResult r = cubic_fractal_test(g->g, opts);
        json j{{"schema_version", kSchemaVersion},
               {"command", "reduce-cubic"},
               {"determined", r.report.determined},
               {"two_fractal", r.report.determined ? json(r.two_fractal) : json(nullptr)},
               {"report", to_json(r.report)},
               {"trace", r.trace ? to_json(*r.trace) : json(nullptr)}};
        if (r.trace) j["replay_matches"] = replay(g->g, r.trace->steps) == r.trace->terminal_graph;
        *out = make_report(j, {{"runtime_ms", sw.elapsed_ms()}, {"nodes", r.nodes}}, !r.report.determined);
    });
}

fd_status fd_experiment(const char* config_json, fd_report** out) {
    if (!config_json) return null_arg("config_json");
    if (!out) return null_arg("out");
    return guarded([&] {
        ExperimentConfig cfg = ExperimentConfig::from_json(json::parse(config_json));
        auto rows = run_experiment(cfg);
        bool unresolved = std::any_of(rows.begin(), rows.end(), [](const ExperimentRow& r) { return r.status != "optimal"; });
        fd_report* rep = make_report(experiment_summary(cfg, rows), experiment_meta(rows), unresolved);
        rep->csv = rows_to_csv(rows);
        *out = rep;
    });
}

}  // extern "C"
