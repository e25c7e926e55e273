#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace icg {

/// Per-vertex cyclic ordering of incident neighbors; a combinatorial
/// orientable embedding.
struct RotationSystem {
  std::vector<std::vector<uint32_t>> order;
};

struct KuratowskiWitness {
  enum class Kind { K5, K33 };
  Kind kind;
  std::vector<std::pair<uint32_t, uint32_t>> edges;  // the subdivision
  std::vector<uint32_t> branch_vertices;
};

struct PlanarityResult {
  bool planar = false;
  /// Rotation system every component of which traces to genus 0 (when planar).
  std::optional<RotationSystem> embedding;
  /// Forbidden K5 or K33 subdivision (when not planar).
  std::optional<KuratowskiWitness> witness;
};

/// Exact planarity test (face-addition / Demoucron style, run per block).
/// Disconnected graphs are tested componentwise.
PlanarityResult is_planar(const CayleyGraph& g);

/// Boolean-only variant, cheaper when no certificate is needed.
bool is_planar_bool(const CayleyGraph& g);

}  // namespace icg
