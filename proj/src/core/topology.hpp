#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "core/graph.hpp"
#include "core/planarity.hpp"

namespace icg {

struct FaceTrace {
  uint32_t face_count = 0;
  /// Each face as its cyclic list of directed edges.
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> faces;
};

/// Decomposes the 2E directed edges into orbits of the next-edge map
/// (entering v from u, leave along the successor of u in v's rotation).
/// Requires a connected graph and a valid rotation; throws otherwise.
FaceTrace trace_faces(const CayleyGraph& g, const RotationSystem& rot);

/// Genus of the embedding given by rot: (2 - V + E - F) / 2 per component,
/// summed. Also returns the total face count. Works on disconnected graphs.
std::pair<uint32_t, uint32_t> rotation_genus(const CayleyGraph& g,
                                             const RotationSystem& rot);

/// Standard Euler/girth bound: genus >= ceil((E(k-2) - k(V-2)) / 2k) with
/// k the girth; 0 when the bound is non-positive or the graph is acyclic.
/// Requires a connected graph with V >= 3.
uint32_t euler_genus_lower_bound(const CayleyGraph& g);

// ---------------------------------------------------------------- certificates

struct EmbeddingCertificate {
  RotationSystem rotation;
  uint32_t faces = 0;
  uint32_t genus = 0;
};

struct LowerBoundCertificate {
  enum class Reason { EulerGirth, ExhaustiveSearch };
  uint32_t bound = 0;
  Reason reason = Reason::EulerGirth;
};

struct BoundsCertificate {
  uint32_t low = 0;
  uint32_t high = 0;
};

struct ClassifiedCertificate {
  std::string clause;
};

using GenusCertificate =
    std::variant<EmbeddingCertificate, LowerBoundCertificate,
                 BoundsCertificate, ClassifiedCertificate>;

/// Exact orientable genus by branch and bound over rotation systems, with
/// planarity and the Euler bound as short-circuits. Disconnected graphs sum
/// the genera of their components. The search is deterministic: cyclic
/// orders are enumerated in canonical form and reflections are quotiented at
/// the pivot vertex. Returns an exact Embedding when the search completes,
/// otherwise Bounds (budget counts face-trace steps).
GenusCertificate min_genus(
    const CayleyGraph& g, uint64_t budget = 1'000'000'000,
    const std::optional<EmbeddingCertificate>& seed = std::nullopt);

/// ceil((m-2)(n-2)/4) for m, n >= 2.
uint32_t genus_complete_bipartite(uint32_t m, uint32_t n);

/// Genus of C_m tensor C_n for m, n >= 3: 2 when both are even (the graph is
/// then disconnected, two toroidal components), else 1.
uint32_t genus_cycle_tensor(uint32_t m, uint32_t n);

/// Genus-1 rotation system for the circulant graph of Z_{2^n} with
/// connection set {+-1, +-(2^(n-1)+1)} — the involutory Cayley graph of
/// Z_{2^n} — realizing the chain of rhombi i ~ i+1 ~ 2^(n-1)+i ~ 2^(n-1)+i+1
/// closed up by a handle. Requires n >= 3; traces to 2^n faces.
RotationSystem z2n_torus_rotation(uint32_t n);

/// Genus-1 rotation for C_m tensor C_n (vertices (i,j) indexed i*n+j) as the
/// diagonal grid on the torus: quadrilateral faces, m*n of them. Requires
/// m, n >= 3 and not both even.
RotationSystem cycle_tensor_torus_rotation(uint32_t m, uint32_t n);

/// Genus-1 rotation for K_{4,4} (parts 0..3 / 4..7) with 8 quadrilateral
/// faces.
RotationSystem k44_torus_rotation();

}  // namespace icg
