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


#include "fracdim/report.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include <boost/rational.hpp>

#include "fracdim/error.hpp"
#include "fracdim/fractality.hpp"

namespace fracdim {

using nlohmann::json;

namespace {

json labels_of(const Graph& g, const VertexSet& s) {
    json out = json::array();
    for (int v : s.members()) out.push_back(g.label(v));
    return out;
}

json witness_json(const DimensionReport& r, const Graph& g) {
    if (const auto* c = std::get_if<CliqueCover>(&r.witness)) {
        json clusters = json::array();
        for (const auto& s : c->clusters) clusters.push_back(labels_of(g, s));
        return {{"clusters", clusters}, {"max_multiplicity", c->max_multiplicity}};
    }
    if (const auto* c = std::get_if<ColoredCover>(&r.witness)) {
        json clusters = json::array();
        for (std::size_t i = 0; i < c->clusters.size(); ++i)
            clusters.push_back({{"color", c->colors[i]}, {"members", labels_of(g, c->clusters[i])}});
        return {{"clusters", clusters}, {"colors", c->h}};
    }
    return nullptr;
}

Seconds remaining(Seconds limit, const Stopwatch& sw) {
    return Seconds(std::max(0.0, limit.count() - static_cast<double>(sw.elapsed_ms()) / 1000.0));
}

struct Prepared {
    Graph graph;
    json info;
};

Prepared prepare(const Graph& g, const AnalyzeOptions& opts) {
    if (g.n() == 0) throw PreconditionError("graph has no vertices");
    Prepared p{opts.whole_graph ? g : largest_component(g), {}};
    p.info = {{"input_vertices", g.n()},
              {"input_edges", g.m()},
              {"vertices", p.graph.n()},
              {"edges", p.graph.m()},
              {"component_policy", opts.whole_graph ? "whole" : "largest"}};
    return p;
}

json fraction(int num, int den) {
    boost::rational<std::int64_t> q(num, den);
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace

json to_json(const DimensionReport& r, const Graph& g, bool witness) {
    json j{{"value", r.value},
           {"status", to_string(r.status)},
           {"lower_bound", r.lower_bound},
           {"upper_bound", r.upper_bound},
           {"method", r.method}};
    if (witness) j["witness"] = witness_json(r, g);
    return j;
}

Analysis analyze_dimensions(const Graph& input, const AnalyzeOptions& opts) {
    Stopwatch sw;
    auto [g, info] = prepare(input, opts);
    if (!is_connected(g))
        throw PreconditionError("Hausdorff dimension is only defined here for connected graphs; drop --whole-graph");
    SolveOptions so;
    so.fast_paths = opts.fast_paths;
    so.time_limit = opts.time_limit;
    DimensionReport l = lebesgue_dimension(g, so);
    so.time_limit = remaining(opts.time_limit, sw);
    DimensionReport h = hausdorff_dimension(g, l, so);

    Analysis a;
    json fractal = nullptr, order = nullptr;
    if (l.upper_bound < h.lower_bound) {
        fractal = true;
        if (l.optimal()) order = l.value;
    } else if (h.upper_bound <= l.lower_bound) {
        fractal = false;
    }
    a.unresolved = fractal.is_null();
    a.primary = {{"schema_version", kSchemaVersion},
                 {"command", "dims"},
                 {"graph", info},
                 {"dim_L", l.value},
                 {"dim_H", h.value},
                 {"fractal", fractal},
                 {"order", order},
                 {"normalized_dim_H", h.optimal() ? fraction(h.value, g.n()) : json(nullptr)},
                 {"lebesgue", to_json(l, g, opts.witness)},
                 {"hausdorff", to_json(h, g, opts.witness)}};
    a.meta = {{"runtime_ms", {{"lebesgue", l.runtime_ms}, {"hausdorff", h.runtime_ms}, {"total", sw.elapsed_ms()}}},
              {"time_limit_s", opts.time_limit.count()}};
    return a;
}

Analysis analyze_fractality(const Graph& input, const AnalyzeOptions& opts) {
    Stopwatch sw;
    auto [g, info] = prepare(input, opts);
    FractalityReport r = opts.fast_paths ? classify(g, opts.time_limit) : classify_general(g, opts.time_limit);
    Analysis a;
    a.unresolved = !r.determined;
    a.primary = {{"schema_version", kSchemaVersion}, {"command", "fractal"}, {"graph", info}};
    a.primary.update(to_json(r));
    a.meta = {{"runtime_ms", {{"total", sw.elapsed_ms()}}}, {"time_limit_s", opts.time_limit.count()}};
    return a;
}

// --- Experiment harness ----------------------------------------------------------

ExperimentConfig ExperimentConfig::from_json(const json& j) {
    ExperimentConfig c;
    try {
        for (const auto& m : j.at("models")) {
            ModelTemplate t;
            t.family = m.at("family").get<std::string>();
            t.name = m.value("name", t.family);
            t.params = m.value("params", json::object());
            c.models.push_back(std::move(t));
        }
        c.n_values = j.at("n_values").get<std::vector<int>>();
        c.replicates = j.value("replicates", 1);
        c.time_limit_s = j.value("time_limit_s", 600.0);
        c.seed = j.value("seed", std::uint64_t{0});
        c.csv_path = j.value("csv", std::string());
        c.json_path = j.value("json", std::string());
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("experiment config: ") + e.what());
    }
    if (c.models.empty()) throw InvalidArgument("experiment config: no models");
    if (c.replicates < 1) throw InvalidArgument("experiment config: replicates must be at least 1");
    for (int n : c.n_values)
        if (n < 2) throw InvalidArgument("experiment config: n values must be at least 2");
    if (c.time_limit_s <= 0) throw InvalidArgument("experiment config: time_limit_s must be positive");
    return c;
}

json ExperimentConfig::to_json() const {
    json models = json::array();
    for (const auto& m : this->models) models.push_back({{"name", m.name}, {"family", m.family}, {"params", m.params}});
    return {{"models", models},     {"n_values", n_values}, {"replicates", replicates},
            {"time_limit_s", time_limit_s}, {"seed", seed}};
}

GeneratorSpec resolve_model(const ModelTemplate& m, int n, std::uint64_t seed) {
    GeneratorSpec s;
    s.family = m.family;
    s.seed = seed;
    s.params = m.params;
    s.params["n"] = n;
    if (s.params.contains("density_from")) {
        const json& ref = s.params.at("density_from");
        if (m.family != "erdos_renyi" || ref.value("family", "") != "preferential_attachment")
            throw InvalidArgument("density_from is supported for erdos_renyi matched to preferential_attachment");
        double edges = preferential_attachment_expected_edges(n, ref.at("m0").get<int>(), ref.at("m").get<int>());
        s.params["p"] = std::min(1.0, edges / (n * (n - 1) / 2.0));
        s.params.erase("density_from");
    }
    return s;
}

std::uint64_t replicate_seed(std::uint64_t master, std::size_t model_index, int n, int replicate) {
    return keyed_u64(master, model_index, (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint32_t>(replicate));
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
    std::vector<ExperimentRow> rows;
    for (std::size_t mi = 0; mi < cfg.models.size(); ++mi)
        for (int n : cfg.n_values)
            for (int rep = 0; rep < cfg.replicates; ++rep) {
                ExperimentRow row;
                row.model = cfg.models[mi].name;
                row.n = n;
                row.replicate = rep;
                row.seed = replicate_seed(cfg.seed, mi, n, rep);
                Stopwatch sw;
                try {
                    GeneratorSpec spec = resolve_model(cfg.models[mi], n, row.seed);
                    row.params = spec.params;
                    Graph g = largest_component(generate(spec));
                    row.vertices = g.n();
                    FractalityReport r = classify(g, Seconds(cfg.time_limit_s));
                    const bool exact = r.dim_l_lower == r.dim_l_upper && r.dim_h_lower == r.dim_h_upper;
                    row.status = exact ? "optimal" : "timeout";
                    row.dim_l = r.dim_l;
                    row.dim_h = r.dim_h;
                    row.normalized_dim_h = static_cast<double>(r.dim_h) / g.n();
                    if (r.determined) row.is_fractal = r.is_fractal;
                } catch (const std::exception& e) {
                    row.status = "error";
                    row.error = e.what();
                }
                row.runtime_ms = sw.elapsed_ms();
                rows.push_back(std::move(row));
            }
    return rows;
}

// --- Rows ----------------------------------------------------------------------------

namespace {

const std::vector<std::string> kColumns = {"model",    "n",     "params",           "replicate",  "seed",  "vertices",
                                           "dim_l",    "dim_h", "normalized_dim_h", "is_fractal", "status"};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
            any = true;
        } else if (c == '\n') {
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
            any = false;
        } else {
            field += c;
            any = true;
        }
    }
    if (quoted) throw ParseError("unterminated quoted CSV field", rows.size() + 1);
    if (any) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json row_to_json(const ExperimentRow& r) {
    auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
    json j{{"model", r.model},
           {"n", r.n},
           {"params", r.params},
           {"replicate", r.replicate},
           {"seed", r.seed},
           {"vertices", r.vertices},
           {"dim_l", opt(r.dim_l)},
           {"dim_h", opt(r.dim_h)},
           {"normalized_dim_h", opt(r.normalized_dim_h)},
           {"is_fractal", opt(r.is_fractal)},
           {"status", r.status}};
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

ExperimentRow row_from_json(const json& j) {
    ExperimentRow r;
    r.model = j.at("model").get<std::string>();
    r.n = j.at("n").get<int>();
    r.params = j.at("params");
    r.replicate = j.at("replicate").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.vertices = j.at("vertices").get<int>();
    if (!j.at("dim_l").is_null()) r.dim_l = j.at("dim_l").get<int>();
    if (!j.at("dim_h").is_null()) r.dim_h = j.at("dim_h").get<int>();
    if (!j.at("normalized_dim_h").is_null()) r.normalized_dim_h = j.at("normalized_dim_h").get<double>();
    if (!j.at("is_fractal").is_null()) r.is_fractal = j.at("is_fractal").get<bool>();
    r.status = j.at("status").get<std::string>();
    r.error = j.value("error", std::string());
    return r;
}

std::string rows_to_csv(const std::vector<ExperimentRow>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
    out << '\n';
    for (const auto& r : rows) {
        json j = row_to_json(r);
        for (std::size_t i = 0; i < kColumns.size(); ++i) {
            const json& v = j.at(kColumns[i]);
            std::string text = v.is_null() ? "" : v.is_string() ? v.get<std::string>() : v.dump();
            out << (i ? "," : "") << csv_field(text);
        }
        out << '\n';
    }
    return out.str();
}

std::vector<ExperimentRow> rows_from_csv(const std::string& text) {
    auto table = parse_csv(text);
    if (table.empty() || table.front() != kColumns) throw ParseError("unexpected CSV header", 1);
    std::vector<ExperimentRow> rows;
    for (std::size_t i = 1; i < table.size(); ++i) {
        const auto& f = table[i];
        if (f.size() != kColumns.size()) throw ParseError("wrong number of CSV fields", i + 1);
        json j;
        for (std::size_t c = 0; c < kColumns.size(); ++c) {
            const std::string& name = kColumns[c];
            if (name == "model" || name == "status") {
                j[name] = f[c];
            } else if (f[c].empty()) {
                j[name] = nullptr;
            } else {
                try {
                    j[name] = json::parse(f[c]);
                } catch (const json::exception&) {
                    throw ParseError("bad value in column " + name, i + 1);
                }
            }
        }
        rows.push_back(row_from_json(j));
    }
    return rows;
}

// --- Summary -----------------------------------------------------------------------

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    LinearFit f;
    const double k = static_cast<double>(x.size());
    if (x.size() < 2) return f;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= k;
    my /= k;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0) return f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double res = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double e = y[i] - (f.intercept + f.slope * x[i]);
        res += e * e;
    }
    f.r2 = syy == 0 ? (res == 0 ? 1.0 : 0.0) : 1.0 - res / syy;
    return f;
}

json experiment_summary(const ExperimentConfig& cfg, const std::vector<ExperimentRow>& rows) {
    json models = json::array();
    for (const auto& m : cfg.models) {
        json per_n = json::array();
        std::vector<double> sq, lg, means;
        for (int n : cfg.n_values) {
            int count = 0, solved = 0, decided = 0, fractal = 0, errors = 0;
            double sum_h = 0, sum_l = 0;
            for (const auto& r : rows) {
                if (r.model != m.name || r.n != n) continue;
                ++count;
                if (r.status == "error") ++errors;
                if (r.status == "optimal") {
                    ++solved;
                    sum_h += *r.dim_h;
                    sum_l += *r.dim_l;
                }
                if (r.is_fractal) {
                    ++decided;
                    fractal += *r.is_fractal;
                }
            }
            json entry{{"n", n},
                       {"rows", count},
                       {"solved", solved},
                       {"errors", errors},
                       {"timeouts", count - solved - errors},
                       {"mean_dim_l", solved ? json(sum_l / solved) : json(nullptr)},
                       {"mean_dim_h", solved ? json(sum_h / solved) : json(nullptr)},
                       {"fractal_frequency", decided ? json(static_cast<double>(fractal) / decided) : json(nullptr)}};
            per_n.push_back(entry);
            if (solved) {
                sq.push_back(std::sqrt(static_cast<double>(n)));
                lg.push_back(std::log(static_cast<double>(n)));
                means.push_back(sum_h / solved);
            }
        }
        auto fit_json = [](const LinearFit& f) { return json{{"slope", f.slope}, {"intercept", f.intercept}, {"r2", f.r2}}; };
        models.push_back({{"model", m.name},
                          {"family", m.family},
                          {"by_n", per_n},
                          {"fit_sqrt_n", fit_json(fit_line(sq, means))},
                          {"fit_log_n", fit_json(fit_line(lg, means))}});
    }
    json all_rows = json::array();
    for (const auto& r : rows) all_rows.push_back(row_to_json(r));
    return {{"schema_version", kSchemaVersion}, {"config", cfg.to_json()}, {"summary", models}, {"rows", all_rows}};
}

json experiment_meta(const std::vector<ExperimentRow>& rows) {
    json per_row = json::array();
    std::int64_t total = 0;
    for (const auto& r : rows) {
        per_row.push_back({{"model", r.model}, {"n", r.n}, {"replicate", r.replicate}, {"runtime_ms", r.runtime_ms}});
        total += r.runtime_ms;
    }
    return {{"runtime_ms_total", total}, {"rows", per_row}};
}

}  // namespace fracdim
