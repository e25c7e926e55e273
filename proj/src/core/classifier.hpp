#pragma once

#include <cstdint>
#include <string>

#include "core/graph.hpp"
#include "core/ring.hpp"

namespace icg {

/// Isomorphism classes of local rings relevant to the genus classification.
enum class LocalClassKind {
  OddCyclic,        // Z_{p^n}, p odd
  OddLocalOther,    // odd order, characteristic < order
  FieldChar2,       // GF(2^k)
  Z4,
  Z2X2,             // Z2[x]/(x^2)
  Z2X3,             // Z2[x]/(x^3)
  Z4A,              // Z4[x]/(2x,x^2-2)
  Z2XY,             // Z2[x,y]/(x^2,xy,y^2)
  Z4B,              // Z4[x]/(x^2,2x)
  Z2N,              // Z_{2^n}, n >= 3
  Char2LocalOther,  // any other local ring of even order
};

struct LocalClass {
  LocalClassKind kind;
  uint32_t p = 0;  // OddCyclic
  uint32_t n = 0;  // OddCyclic / Z2N exponent
  uint32_t q = 0;  // FieldChar2 order
};

/// Recognizes the class of a local ring from (order, characteristic,
/// involution count), confirmed against the catalog instance by
/// ring_isomorphic for the named order-8 quotients. Requires is_local.
LocalClass classify_local(const FiniteRing& r);

/// Connectivity of the Cayley graph predicted from the decomposition: at
/// most one factor of even order, that factor's own graph connected (decided
/// by traversal on the factor alone), and every odd factor cyclic.
bool predict_connected(const LocalDecomposition& d);

/// Ring-level planarity: every factor a field of characteristic 2 except at
/// most one, which must be an odd-characteristic local ring or one of Z4,
/// Z2[x]/(x^2), Z2[x]/(x^3), Z4[x]/(2x,x^2-2).
bool classify_planar(const LocalDecomposition& d);

enum class GenusClassKind { Planar, Toroidal, Higher };

struct GenusClass {
  GenusClassKind kind;
  std::string clause;  // the classification rule that fired
};

/// Ring-level genus class from the local factor multiset.
GenusClass classify_genus(const LocalDecomposition& d);

/// Graph-level genus class: Planar iff 1- or 2-regular, Toroidal iff
/// 4-regular and connected, Higher otherwise. Throws on irregular input.
GenusClass genus_class_from_graph(const CayleyGraph& g);

const char* to_string(GenusClassKind k);
std::string to_string(const LocalClass& c);

}  // namespace icg
