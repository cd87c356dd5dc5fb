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

#include <boost/rational.hpp>

#include "fracdim/dimensions.hpp"
#include "fracdim/graph.hpp"

namespace fracdim {

// --- Contracting families -------------------------------------------------------

/// One map per color of a separating equivalent cover. mappings[i][v] is the
/// vertex of contraction_graphs[i] that v is sent to.
struct ContractingFamily {
    std::vector<std::vector<int>> mappings;
    std::vector<Graph> contraction_graphs;
    /// Edges uv of g with f_i(u) != f_i(v).
    std::vector<std::vector<Edge>> contracted_subgraphs;
};

/// Throws PreconditionError listing the violations when the cover is invalid.
ContractingFamily contracting_family(const Graph& g, const ColoredCover& cover);

/// Checks that every map is a similarity mapping (fibers are cliques, edges go
/// to edges or collapse, every edge of a contraction graph has an edge of g
/// above it), that every edge is contracted by some map and that the
/// subgraphs G^{f_i} together give E(g).
Verification verify_contracting_family(const Graph& g, const ContractingFamily& f);

/// The fibers of the maps as a colored cover; color i + 1 for map i.
ColoredCover cover_from_family(const Graph& g, const ContractingFamily& f);

/// dim_H / n. Throws PreconditionError for a non-optimal report or n = 0.
boost::rational<std::int64_t> normalized_hausdorff(const Graph& g, const DimensionReport& report);

// --- Vector representations ----------------------------------------------------

/// phi[v][j] in 1..alphabet_sizes[j]; u ~ v iff phi[u][j] == phi[v][j] for some j.
struct VectorRepresentation {
    std::vector<std::vector<int>> phi;
    std::vector<int> alphabet_sizes;

    int n() const { return static_cast<int>(phi.size()); }
    int k() const { return static_cast<int>(alphabet_sizes.size()); }
    friend bool operator==(const VectorRepresentation&, const VectorRepresentation&) = default;
};

/// Coordinate j is the index of v's color-(j+1) cluster, or a fresh value when
/// no such cluster contains v.
VectorRepresentation vector_representation(const Graph& g, const ColoredCover& cover);

/// Injectivity and the adjacency biconditional on every pair.
Verification verify_vector_representation(const Graph& g, const VectorRepresentation& rep);

/// Graph on 0..n-1 defined by a representation.
Graph graph_from_representation(const VectorRepresentation& rep);

/// Text form: "n k p_1 .. p_k" then n lines of k integers.
std::string to_text(const VectorRepresentation& rep);
VectorRepresentation representation_from_text(std::string_view text);

/// Fixed-point value with 6 fractional bits: value = numerator / 64.
struct Dyadic {
    std::int64_t numerator = 0;
    double to_double() const { return static_cast<double>(numerator) / 64.0; }
};

struct EncodingBounds {
    /// floor(64 * ((n+1) sum log2 p_j + log2 n)) / 64.
    Dyadic unconditional;
    /// floor(64 * n sum log2 p_j) / 64.
    Dyadic conditional;
    /// Self-contained code for a decoder that knows k only.
    std::string bits;
    /// Code for a decoder that also knows n and the sorted alphabet sizes.
    std::string conditional_bits;
    /// Exact integer comparisons of the code lengths with the real bounds.
    bool within_unconditional = false;
    bool within_conditional = false;
};

/// Encodes the graph of `rep` (coordinates reordered by alphabet size). The
/// code word is the shortlex string of the description's rank among all
/// descriptions ordered by n * prod p_j^(n+1). Throws ResourceError when the
/// rank needs more than `header_cap` headers.
EncodingBounds encoding_bound(const VectorRepresentation& rep, std::size_t header_cap = 2000000);

/// Inverse of EncodingBounds::bits for a k-coordinate code.
Graph decode_graph(const std::string& bits, int k, std::size_t header_cap = 2000000);
/// Inverse of EncodingBounds::conditional_bits.
Graph decode_graph_conditional(const std::string& bits, int n, const std::vector<int>& sorted_sizes);

// --- d-volume and d-measure ----------------------------------------------------------

enum class MeasureStatus { finite, infinite, no_embedding_within_budget };

const char* to_string(MeasureStatus s);

struct MeasureResult {
    int d = 0;
    MeasureStatus status = MeasureStatus::finite;
    std::int64_t volume = 0;
    /// Coordinates (0-based) of the embedded graph; different co-connected
    /// components use disjoint value ranges.
    std::optional<std::vector<std::vector<int>>> witness_embedding;
    /// One hyper-rectangle per co-connected component: per coordinate the
    /// half-open range [first, second).
    std::optional<std::vector<std::vector<std::pair<int, int>>>> witness_cocover;
    /// True when a per-coordinate alphabet cap below the component size was
    /// in force and the reported minimum exceeds it.
    bool budget_binds = false;
};

struct MeasureOptions {
    /// Largest alphabet per coordinate; 0 means the component size, which
    /// makes the search complete.
    int size_budget = 0;
    /// Vertex cap of the input graph.
    int max_vertices = 10;
    /// Use dim_P from the Hausdorff solver to certify infinity when the
    /// budgeted search fails.
    bool use_dimension_certificate = true;
};

MeasureResult d_volume(const Graph& g, int d, const MeasureOptions& opts = {});
/// d_volume of the complement.
MeasureResult d_measure(const Graph& g, int d, const MeasureOptions& opts = {});

}  // namespace fracdim
