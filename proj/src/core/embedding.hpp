#pragma once

#include <optional>

#include <json.hpp>

#include "core/classifier.hpp"
#include "core/topology.hpp"

namespace icg {

/// Builds a genus-1 embedding certificate for the Cayley graph of a ring in
/// one of the toroidal families:
///   - Z_{2^n}, n >= 3: the rhombus-chain rotation;
///   - the two K_{4,4} rings: the K_{4,4} torus rotation transported along a
///     graph isomorphism;
///   - products of an odd cyclic with a ring whose graph is a single cycle
///     (odd cyclic, Z4, Z2[x]/(x^2), or odd cyclic x Z2): the diagonal grid.
/// Returns nullopt when the ring is not in a constructive family. The
/// certificate is validated by face tracing before being returned.
std::optional<EmbeddingCertificate> constructive_torus_embedding(
    const FiniteRing& r, const LocalDecomposition& d, const CayleyGraph& g);

/// Serializes an embedding certificate:
/// {vertices, rotation:[[neighbors in cyclic order],...],
///  faces:[[directed edges],...], genus}.
nlohmann::ordered_json embedding_to_json(const CayleyGraph& g,
                                         const EmbeddingCertificate& cert);

}  // namespace icg
