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
#include <unordered_map>
#include <vector>

#include "fracdim/graph.hpp"

namespace fracdim {

/// Stable vertex colors from iterated neighbourhood refinement. Equal graphs
/// up to isomorphism get equal color multisets.
std::vector<std::uint64_t> refined_colors(const Graph& g);

/// Isomorphism-invariant 64-bit fingerprint (labels ignored).
std::uint64_t invariant_hash(const Graph& g);

/// A map f with u~v in a iff f(u)~f(v) in b, if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

inline bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

/// Buckets graphs by fingerprint; insert() reports whether the graph was new.
class IsomorphismSet {
public:
    bool insert(const Graph& g);
    bool contains(const Graph& g) const;
    std::size_t size() const { return count_; }

private:
    std::unordered_map<std::uint64_t, std::vector<Graph>> buckets_;
    std::size_t count_ = 0;
};

}  // namespace fracdim
