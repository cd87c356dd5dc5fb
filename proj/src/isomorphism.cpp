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

#include "fracdim/isomorphism.hpp"

#include <algorithm>
#include <set>

namespace fracdim {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    return h ^ (h >> 29);
}

std::size_t distinct(const std::vector<std::uint64_t>& c) { return std::set<std::uint64_t>(c.begin(), c.end()).size(); }

}  // namespace

std::vector<std::uint64_t> refined_colors(const Graph& g) {
    const int n = g.n();
    std::vector<std::uint64_t> color(n);
    for (int v = 0; v < n; ++v) color[v] = mix(0x51ed27, static_cast<std::uint64_t>(g.degree(v)));
    std::size_t classes = distinct(color);
    std::vector<std::uint64_t> next(n);
    std::vector<std::uint64_t> around;
    for (int round = 0; round < n; ++round) {
        for (int v = 0; v < n; ++v) {
            around.clear();
            for (int w : g.adjacency_list(v)) around.push_back(color[w]);
            std::sort(around.begin(), around.end());
            std::uint64_t h = mix(0xc0105, color[v]);
            for (auto c : around) h = mix(h, c);
            next[v] = h;
        }
        color.swap(next);
        std::size_t now = distinct(color);
        if (now == classes) break;
        classes = now;
    }
    return color;
}

std::uint64_t invariant_hash(const Graph& g) {
    auto c = refined_colors(g);
    std::sort(c.begin(), c.end());
    std::uint64_t h = mix(static_cast<std::uint64_t>(g.n()), g.m());
    for (auto x : c) h = mix(h, x);
    return h;
}

namespace {

struct Matcher {
    const Graph& a;
    const Graph& b;
    const std::vector<std::uint64_t>& ca;
    const std::vector<std::uint64_t>& cb;
    std::vector<int> order;
    std::vector<int> map;
    std::vector<bool> used;

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const int v = order[depth];
        for (int w = 0; w < b.n(); ++w) {
            if (used[w] || cb[w] != ca[v] || b.degree(w) != a.degree(v)) continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                const int x = order[i];
                ok = a.adjacent(v, x) == b.adjacent(w, map[x]);
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (extend(depth + 1)) return true;
            used[w] = false;
        }
        map[v] = -1;
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;
    auto ca = refined_colors(a);
    auto cb = refined_colors(b);
    auto sa = ca;
    auto sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;

    const int n = a.n();
    std::vector<int> class_size(n);
    for (int v = 0; v < n; ++v) class_size[v] = static_cast<int>(std::count(ca.begin(), ca.end(), ca[v]));
    // Rare colors first, then stay close to already placed vertices.
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    std::vector<int> links(n, 0);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            if (pick < 0 || links[v] > links[pick] ||
                (links[v] == links[pick] && class_size[v] < class_size[pick]))
                pick = v;
        }
        placed[pick] = true;
        order.push_back(pick);
        for (int w : a.adjacency_list(pick)) ++links[w];
    }
    Matcher m{a, b, ca, cb, order, std::vector<int>(n, -1), std::vector<bool>(n, false)};
    if (!m.extend(0)) return std::nullopt;
    return m.map;
}

bool IsomorphismSet::insert(const Graph& g) {
    auto& bucket = buckets_[invariant_hash(g)];
    for (const auto& h : bucket)
        if (isomorphic(g, h)) return false;
    bucket.push_back(g);
    ++count_;
    return true;
}

bool IsomorphismSet::contains(const Graph& g) const {
    auto it = buckets_.find(invariant_hash(g));
    if (it == buckets_.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(), [&](const Graph& h) { return isomorphic(g, h); });
}

}  // namespace fracdim
