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


#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracdim/deadline.hpp"
#include "fracdim/dimensions.hpp"
#include "fracdim/generators.hpp"
#include "fracdim/graph.hpp"

namespace fracdim {

inline constexpr int kSchemaVersion = 1;

/// Report without runtime; witness clusters are lists of vertex labels.
nlohmann::json to_json(const DimensionReport& r, const Graph& g, bool witness);

struct AnalyzeOptions {
    Seconds time_limit = kDefaultTimeLimit;
    /// Analyse the whole input instead of its largest connected component.
    bool whole_graph = false;
    bool fast_paths = true;
    bool witness = false;
};

/// Primary output (deterministic) and metadata (runtimes) kept apart.
struct Analysis {
    nlohmann::json primary;
    nlohmann::json meta;
    /// True when the limits left the answer undecided.
    bool unresolved = false;
};

/// Both dimension solvers and the fractality verdict they imply.
Analysis analyze_dimensions(const Graph& g, const AnalyzeOptions& opts);
/// classify(), or the general solvers when fast paths are off.
Analysis analyze_fractality(const Graph& g, const AnalyzeOptions& opts);

// --- Experiment harness ----------------------------------------------------------

/// Generator template: `n` is filled in per row. For erdos_renyi the
/// parameter "density_from": {"family": "preferential_attachment", "m0", "m"}
/// sets p to match that model's expected edge count.
struct ModelTemplate {
    std::string name;
    std::string family;
    nlohmann::json params = nlohmann::json::object();
};

struct ExperimentConfig {
    std::vector<ModelTemplate> models;
    std::vector<int> n_values;
    int replicates = 1;
    double time_limit_s = 600;
    std::uint64_t seed = 0;
    std::string csv_path;
    std::string json_path;

    /// Throws InvalidArgument on a malformed config.
    static ExperimentConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct ExperimentRow {
    std::string model;
    int n = 0;
    nlohmann::json params;
    int replicate = 0;
    std::uint64_t seed = 0;
    /// Vertices of the analysed (largest) component.
    int vertices = 0;
    std::optional<int> dim_l, dim_h;
    std::optional<double> normalized_dim_h;
    std::optional<bool> is_fractal;
    /// optimal, timeout or error.
    std::string status;
    std::int64_t runtime_ms = 0;
    std::string error;

    friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

GeneratorSpec resolve_model(const ModelTemplate& m, int n, std::uint64_t seed);
std::uint64_t replicate_seed(std::uint64_t master, std::size_t model_index, int n, int replicate);

/// One row per (model, n, replicate), in that order. Failures become rows
/// with status "error".
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

/// Fixed column order, no runtime column.
std::string rows_to_csv(const std::vector<ExperimentRow>& rows);
std::vector<ExperimentRow> rows_from_csv(const std::string& text);
nlohmann::json row_to_json(const ExperimentRow& r);
ExperimentRow row_from_json(const nlohmann::json& j);

struct LinearFit {
    double slope = 0, intercept = 0, r2 = 0;
};
/// Least squares y = intercept + slope * x.
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Per model and n: mean dimensions, fractal frequency, counts; per model:
/// fits of mean dim_H against sqrt(n) and log(n).
nlohmann::json experiment_summary(const ExperimentConfig& cfg, const std::vector<ExperimentRow>& rows);
/// Runtimes and other run-dependent data.
nlohmann::json experiment_meta(const std::vector<ExperimentRow>& rows);

}  // namespace fracdim
