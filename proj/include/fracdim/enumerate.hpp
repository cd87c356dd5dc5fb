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

#include <vector>

#include "fracdim/graph.hpp"

namespace fracdim {

/// Hereditary classes the enumerator can restrict to.
enum class GraphClass { all, triangle_free, subcubic };

/// One representative of every isomorphism class of graphs on exactly n
/// vertices in `cls`, built by single-vertex extension with isomorphism
/// rejection. Output order is deterministic.
std::vector<Graph> nonisomorphic_graphs(int n, GraphClass cls, bool connected_only);

}  // namespace fracdim
