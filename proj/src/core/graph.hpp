#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/ring.hpp"

namespace icg {

/// Largest graph build_cayley will materialize.
inline constexpr uint32_t kMaxGraphVertices = 8192;

/// Simple undirected graph with sorted adjacency lists plus a bitset per
/// vertex for O(1) membership. Immutable after construction.
class CayleyGraph {
 public:
  CayleyGraph() = default;
  CayleyGraph(uint32_t vertex_count,
              const std::vector<std::pair<uint32_t, uint32_t>>& edges,
              std::vector<std::string> labels = {});

  uint32_t vertex_count() const { return n_; }
  uint64_t edge_count() const { return edge_count_; }
  const std::vector<uint32_t>& neighbors(uint32_t v) const { return adj_[v]; }
  uint32_t degree(uint32_t v) const {
    return static_cast<uint32_t>(adj_[v].size());
  }
  bool adjacent(uint32_t u, uint32_t v) const {
    return (bits_[size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
  }
  const std::string& label(uint32_t v) const { return labels_[v]; }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<uint32_t, uint32_t>> edges() const;

 private:
  uint32_t n_ = 0;
  uint64_t edge_count_ = 0;
  size_t words_ = 0;
  std::vector<std::vector<uint32_t>> adj_;
  std::vector<uint64_t> bits_;
  std::vector<std::string> labels_;
};

/// The involutory Cayley graph: vertices are ring elements, x ~ y iff
/// (x - y)^2 = 1. Regular of degree |involutions(r)|.
CayleyGraph build_cayley(const FiniteRing& r);

/// Common degree if the graph is regular, nullopt otherwise.
std::optional<uint32_t> regular_degree(const CayleyGraph& g);

bool is_bipartite(const CayleyGraph& g);

/// Vertex partition into connected components; components ordered by their
/// smallest vertex, vertices ascending within each.
std::vector<std::vector<uint32_t>> connected_components(const CayleyGraph& g);

bool is_connected(const CayleyGraph& g);

/// Length of a shortest cycle; nullopt when the graph is acyclic.
std::optional<uint32_t> girth(const CayleyGraph& g);

/// Tensor (Kronecker) product: vertices V(a) x V(b) indexed va * |b| + vb,
/// conjunctive componentwise adjacency.
CayleyGraph tensor_product(const CayleyGraph& a, const CayleyGraph& b);

CayleyGraph cycle_graph(uint32_t n);           // n >= 3
CayleyGraph complete_bipartite(uint32_t m, uint32_t n);

/// Backtracking isomorphism test with degree/neighborhood-invariant pruning;
/// vertices are ordered by (degree, sorted neighbor-degree multiset) so runs
/// are deterministic. Unknown on budget exhaustion.
Tri graphs_isomorphic(const CayleyGraph& a, const CayleyGraph& b,
                      uint64_t budget = 50'000'000);

/// As graphs_isomorphic but returns the vertex bijection a -> b when found.
std::optional<std::vector<uint32_t>> find_graph_isomorphism(
    const CayleyGraph& a, const CayleyGraph& b, uint64_t budget,
    Tri* status = nullptr);

/// Multiset of component cycle lengths of a 2-regular graph, ascending.
/// Throws std::invalid_argument when the graph is not 2-regular.
std::vector<uint32_t> cycle_decomposition(const CayleyGraph& g);

/// DOT export; vertex labels become node names.
std::string to_dot(const CayleyGraph& g, const std::string& name);

}  // namespace icg
