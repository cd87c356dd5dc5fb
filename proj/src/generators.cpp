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

#include "fracdim/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>

#include "fracdim/error.hpp"

namespace fracdim {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t keyed_u64(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

double keyed_unit(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return static_cast<double>(keyed_u64(seed, a, b) >> 11) * 0x1.0p-53;
}

std::uint64_t Stream::below(std::uint64_t bound) {
    // Reject the top sliver so every residue is equally likely.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    while (true) {
        std::uint64_t x = next();
        if (x < limit) return x % bound;
    }
}

namespace {

int parse_size(std::string_view text, std::string_view name) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
        throw InvalidArgument("bad size in graph name '" + std::string(name) + "'");
    return value;
}

Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph path(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw InvalidArgument("C_n needs n >= 3");
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, e);
}

Graph star(int leaves) {
    std::vector<Edge> e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, e);
}

void check_n(int n) {
    if (n < 1) throw InvalidArgument("n must be at least 1");
}

}  // namespace

Graph named_graph(std::string_view name) {
    if (name == "claw") return star(3);
    if (name == "diamond" || name == "K4_minus_e") {
        std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
        return Graph::from_edges(4, e);
    }
    if (name == "butterfly") {
        std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
        return Graph::from_edges(5, e);
    }
    if (name == "petersen") {
        std::vector<Edge> e;
        for (int i = 0; i < 5; ++i) {
            e.emplace_back(i, (i + 1) % 5);
            e.emplace_back(i, i + 5);
            e.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph::from_edges(10, e);
    }
    if (name.starts_with("K_1_")) return star(parse_size(name.substr(4), name));
    if (name.starts_with("K_")) return complete(parse_size(name.substr(2), name));
    if (name.starts_with("P_")) return path(parse_size(name.substr(2), name));
    if (name.starts_with("C_")) return cycle(parse_size(name.substr(2), name));
    throw InvalidArgument("unknown graph name '" + std::string(name) + "'");
}

SierpinskiGasket sierpinski(int level, int level_cap) {
    if (level < 1) throw InvalidArgument("Sierpinski level must be at least 1");
    if (level > level_cap)
        throw SizeLimitError("Sierpinski level " + std::to_string(level) + " exceeds cap " + std::to_string(level_cap));
    std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
    int n = 3;
    int x1 = 0, x2 = 1, x3 = 2;
    for (int l = 1; l < level; ++l) {
        // Copies at offsets 0, n, 2n; glue x2~x'1, x'3~x''2, x3~x''1.
        std::vector<int> parent(3 * n);
        std::iota(parent.begin(), parent.end(), 0);
        auto glue = [&](int a, int b) { parent[std::max(a, b)] = std::min(a, b); };
        glue(x2, n + x1);
        glue(n + x3, 2 * n + x2);
        glue(x3, 2 * n + x1);
        std::vector<int> index(3 * n, -1);
        int next = 0;
        for (int v = 0; v < 3 * n; ++v)
            if (parent[v] == v) index[v] = next++;
        auto at = [&](int v) { return index[parent[v]]; };
        std::vector<Edge> grown;
        for (int c = 0; c < 3; ++c)
            for (const Edge& e : edges) grown.emplace_back(at(c * n + e.u), at(c * n + e.v));
        int nx1 = at(x1), nx2 = at(n + x2), nx3 = at(2 * n + x3);
        edges = std::move(grown);
        n = next;
        x1 = nx1;
        x2 = nx2;
        x3 = nx3;
    }
    return {Graph::from_edges(n, edges), x1, x2, x3};
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    check_n(n);
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("erdos_renyi needs 0 <= p <= 1");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (keyed_unit(seed, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)) < p) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph watts_strogatz(int n, int k, double beta, std::uint64_t seed) {
    check_n(n);
    if (k < 0 || k % 2 != 0 || k >= n) throw InvalidArgument("watts_strogatz needs even k with 0 <= k < n");
    if (!(beta >= 0.0 && beta <= 1.0)) throw InvalidArgument("watts_strogatz needs 0 <= beta <= 1");
    std::vector<std::set<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int j = 1; j <= k / 2; ++j) {
            int v = (u + j) % n;
            adj[u].insert(v);
            adj[v].insert(u);
        }
    Stream rng(seed);
    for (int j = 1; j <= k / 2; ++j)
        for (int u = 0; u < n; ++u) {
            int v = (u + j) % n;
            if (rng.unit() >= beta) continue;
            if (static_cast<int>(adj[u].size()) >= n - 1) continue;
            int w;
            do {
                w = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            } while (w == u || adj[u].count(w));
            adj[u].erase(v);
            adj[v].erase(u);
            adj[u].insert(w);
            adj[w].insert(u);
        }
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph preferential_attachment(int n, int m0, int m, std::uint64_t seed) {
    if (m < 1 || m > m0 || m0 >= n) throw InvalidArgument("preferential_attachment needs 1 <= m <= m0 < n");
    std::vector<Edge> e;
    std::vector<int> urn;
    for (int u = 0; u < m0; ++u)
        for (int v = u + 1; v < m0; ++v) {
            e.emplace_back(u, v);
            urn.push_back(u);
            urn.push_back(v);
        }
    // A single seed vertex has no degree yet; let it be drawn anyway.
    if (urn.empty())
        for (int u = 0; u < m0; ++u) urn.push_back(u);
    Stream rng(seed);
    for (int t = m0; t < n; ++t) {
        std::vector<int> targets;
        while (static_cast<int>(targets.size()) < m) {
            int pick = urn[rng.below(urn.size())];
            if (std::find(targets.begin(), targets.end(), pick) == targets.end()) targets.push_back(pick);
        }
        std::sort(targets.begin(), targets.end());
        for (int v : targets) {
            e.emplace_back(v, t);
            urn.push_back(v);
            urn.push_back(t);
        }
    }
    return Graph::from_edges(n, e);
}

double preferential_attachment_expected_edges(int n, int m0, int m) {
    return m0 * (m0 - 1) / 2.0 + static_cast<double>(n - m0) * m;
}

double chung_lu_probability(int n, double alpha, double b, int i, int j) {
    const double wi = std::pow(static_cast<double>(n) / i, 1.0 / alpha);
    const double wj = std::pow(static_cast<double>(n) / j, 1.0 / alpha);
    return -std::expm1(-b * wi * wj / n);
}

Graph chung_lu_scale_free(int n, double alpha, double b, std::uint64_t seed) {
    check_n(n);
    if (!(alpha > 0.0) || !(b > 0.0)) throw InvalidArgument("chung_lu_scale_free needs alpha > 0 and b > 0");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (keyed_unit(seed, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)) <
                chung_lu_probability(n, alpha, b, u + 1, v + 1))
                e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

GeneratorSpec GeneratorSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        throw InvalidArgument("generator spec needs a string 'family'");
    GeneratorSpec s;
    s.family = j["family"].get<std::string>();
    if (j.contains("params")) {
        if (!j["params"].is_object()) throw InvalidArgument("generator 'params' must be an object");
        s.params = j["params"];
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer()) throw InvalidArgument("generator 'seed' must be an integer");
        s.seed = j["seed"].get<std::uint64_t>();
    }
    return s;
}

nlohmann::json GeneratorSpec::to_json() const {
    return nlohmann::json{{"family", family}, {"params", params}, {"seed", seed}};
}

namespace {

template <typename T>
T param(const GeneratorSpec& s, const char* key) {
    if (!s.params.contains(key)) throw InvalidArgument(s.family + " needs parameter '" + key + "'");
    try {
        return s.params.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InvalidArgument(s.family + " parameter '" + key + "' has the wrong type");
    }
}

template <typename T>
T param_or(const GeneratorSpec& s, const char* key, T fallback) {
    return s.params.contains(key) ? param<T>(s, key) : fallback;
}

}  // namespace

Graph generate(const GeneratorSpec& s) {
    if (s.family == "named") return named_graph(param<std::string>(s, "name"));
    if (s.family == "sierpinski") return sierpinski(param<int>(s, "level")).graph;
    if (s.family == "erdos_renyi") return erdos_renyi(param<int>(s, "n"), param<double>(s, "p"), s.seed);
    if (s.family == "watts_strogatz")
        return watts_strogatz(param<int>(s, "n"), param<int>(s, "k"), param<double>(s, "beta"), s.seed);
    if (s.family == "preferential_attachment")
        return preferential_attachment(param<int>(s, "n"), param<int>(s, "m0"), param<int>(s, "m"), s.seed);
    if (s.family == "chung_lu_scale_free")
        return chung_lu_scale_free(param<int>(s, "n"), param<double>(s, "alpha"), param_or<double>(s, "b", 1.0), s.seed);
    throw InvalidArgument("unknown generator family '" + s.family + "'");
}

}  // namespace fracdim
