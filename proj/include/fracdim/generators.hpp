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
#include <string>
#include <string_view>

#include <json.hpp>

#include "fracdim/graph.hpp"

namespace fracdim {

/// Counter-based random numbers: splitmix64 over (seed, counter words).
/// Every draw is a pure function of its key, so pair decisions do not depend
/// on the order in which pairs are visited.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t keyed_u64(std::uint64_t seed, std::uint64_t a, std::uint64_t b);
/// Uniform in [0, 1) with 53 bits.
double keyed_unit(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

/// Sequential stream built on the keyed generator.
class Stream {
public:
    explicit Stream(std::uint64_t seed, std::uint64_t lane = 0) : seed_(seed), lane_(lane) {}
    std::uint64_t next() { return keyed_u64(seed_, lane_, counter_++); }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t seed_;
    std::uint64_t lane_;
    std::uint64_t counter_ = 0;
};

/// K_n, P_n, C_n, K_1_n, claw, diamond, butterfly, petersen, K4_minus_e.
Graph named_graph(std::string_view name);

struct SierpinskiGasket {
    Graph graph;
    /// Contact vertices (x_1, x'_2, x''_3) of the recursion.
    int x1 = 0, x2 = 1, x3 = 2;
};

inline constexpr int kSierpinskiLevelCap = 8;

/// S_1 = K_3; S_{l+1} glues three copies of S_l at their contact vertices.
SierpinskiGasket sierpinski(int level, int level_cap = kSierpinskiLevelCap);

Graph erdos_renyi(int n, double p, std::uint64_t seed);
Graph watts_strogatz(int n, int k, double beta, std::uint64_t seed);
Graph preferential_attachment(int n, int m0, int m, std::uint64_t seed);
Graph chung_lu_scale_free(int n, double alpha, double b, std::uint64_t seed);

/// Edge probability of vertices i, j (1-based) in chung_lu_scale_free.
double chung_lu_probability(int n, double alpha, double b, int i, int j);

/// Expected edge count of preferential_attachment(n, m0, m).
double preferential_attachment_expected_edges(int n, int m0, int m);

/// Family name plus parameters, serialised as {"family", "params", "seed"}.
struct GeneratorSpec {
    std::string family;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t seed = 0;

    static GeneratorSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

Graph generate(const GeneratorSpec& spec);

}  // namespace fracdim
