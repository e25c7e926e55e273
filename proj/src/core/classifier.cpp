#include "core/classifier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace icg {
namespace {

bool is_power_of(uint32_t value, uint32_t base, uint32_t* exponent) {
  uint32_t e = 0;
  uint64_t acc = 1;
  while (acc < value) {
    acc *= base;
    ++e;
  }
  if (acc != value) return false;
  *exponent = e;
  return true;
}

uint32_t smallest_prime_factor(uint32_t n) {
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

bool confirmed_isomorphic(const FiniteRing& r, AtomKind atom) {
  FiniteRing catalog = build_ring(RingSpec::named(atom));
  return ring_isomorphic(r, catalog) == Tri::True;
}

}  // namespace

LocalClass classify_local(const FiniteRing& r) {
  if (!is_local(r))
    throw std::invalid_argument("classify_local requires a local ring");
  const uint32_t order = r.order();
  const uint32_t chr = r.characteristic();
  const size_t inv = r.involutions().size();

  if (order % 2 == 1) {
    if (chr == order) {
      uint32_t p = smallest_prime_factor(order), n = 0;
      is_power_of(order, p, &n);
      return {LocalClassKind::OddCyclic, p, n, 0};
    }
    return {LocalClassKind::OddLocalOther};
  }

  if (chr == 2) {
    if (r.units().size() == order - 1)
      return {LocalClassKind::FieldChar2, 0, 0, order};
    if (order == 4) return {LocalClassKind::Z2X2};
    if (order == 8) {
      if (inv == 2 && confirmed_isomorphic(r, AtomKind::Z2X3))
        return {LocalClassKind::Z2X3};
      if (inv == 4 && confirmed_isomorphic(r, AtomKind::Z2XY))
        return {LocalClassKind::Z2XY};
    }
    return {LocalClassKind::Char2LocalOther};
  }
  if (chr == 4) {
    if (order == 4) return {LocalClassKind::Z4};
    if (order == 8) {
      if (inv == 2 && confirmed_isomorphic(r, AtomKind::Z4A))
        return {LocalClassKind::Z4A};
      if (inv == 4 && confirmed_isomorphic(r, AtomKind::Z4B))
        return {LocalClassKind::Z4B};
    }
    return {LocalClassKind::Char2LocalOther};
  }
  // characteristic 2^n, n >= 3
  if (chr == order) {
    uint32_t n = 0;
    is_power_of(order, 2, &n);
    return {LocalClassKind::Z2N, 2, n, 0};
  }
  return {LocalClassKind::Char2LocalOther};
}

bool predict_connected(const LocalDecomposition& d) {
  size_t even_count = 0;
  for (size_t i = 0; i < d.factors.size(); ++i) {
    const FiniteRing& f = d.factors[i];
    if (f.order() % 2 == 0) {
      ++even_count;
      if (even_count > 1) return false;
      if (!is_connected(build_cayley(f))) return false;
    } else {
      if (classify_local(f).kind != LocalClassKind::OddCyclic) return false;
    }
  }
  return true;
}

bool classify_planar(const LocalDecomposition& d) {
  size_t t_factors = 0;
  for (const FiniteRing& f : d.factors) {
    LocalClass c = classify_local(f);
    switch (c.kind) {
      case LocalClassKind::FieldChar2:
        break;  // any number allowed
      case LocalClassKind::OddCyclic:
      case LocalClassKind::OddLocalOther:
      case LocalClassKind::Z4:
      case LocalClassKind::Z2X2:
      case LocalClassKind::Z2X3:
      case LocalClassKind::Z4A:
        if (++t_factors > 1) return false;
        break;
      default:
        return false;
    }
  }
  return true;
}

GenusClass classify_genus(const LocalDecomposition& d) {
  if (classify_planar(d)) {
    return {GenusClassKind::Planar,
            "product of fields of characteristic 2 with at most one factor "
            "among {odd local, Z4, Z2[x]/(x^2), Z2[x]/(x^3), "
            "Z4[x]/(2x,x^2-2)}"};
  }

  std::vector<LocalClass> classes;
  classes.reserve(d.factors.size());
  for (const FiniteRing& f : d.factors) classes.push_back(classify_local(f));

  if (classes.size() == 1) {
    switch (classes[0].kind) {
      case LocalClassKind::Z2XY:
        return {GenusClassKind::Toroidal, "local: Z2[x,y]/(x^2,xy,y^2)"};
      case LocalClassKind::Z4B:
        return {GenusClassKind::Toroidal, "local: Z4[x]/(x^2,2x)"};
      case LocalClassKind::Z2N:
        return {GenusClassKind::Toroidal, "local: Z_{2^n}, n >= 3"};
      default:
        break;
    }
  } else {
    // p and q odd primes, not necessarily distinct
    size_t odd_cyclic = 0, z2 = 0, z4 = 0, z2x2 = 0, other = 0;
    for (const LocalClass& c : classes) {
      switch (c.kind) {
        case LocalClassKind::OddCyclic:
          ++odd_cyclic;
          break;
        case LocalClassKind::FieldChar2:
          if (c.q == 2)
            ++z2;
          else
            ++other;
          break;
        case LocalClassKind::Z4:
          ++z4;
          break;
        case LocalClassKind::Z2X2:
          ++z2x2;
          break;
        default:
          ++other;
          break;
      }
    }
    if (other == 0) {
      if (odd_cyclic == 2 && z2 == 0 && z4 == 0 && z2x2 == 0)
        return {GenusClassKind::Toroidal, "Z_{p^n} x Z_{q^m}"};
      if (odd_cyclic == 2 && z2 == 1 && z4 == 0 && z2x2 == 0)
        return {GenusClassKind::Toroidal, "Z_{p^n} x Z_{q^m} x Z_2"};
      if (odd_cyclic == 1 && z2 == 0 && z4 == 1 && z2x2 == 0)
        return {GenusClassKind::Toroidal, "Z_{p^n} x Z_4"};
      if (odd_cyclic == 1 && z2 == 0 && z4 == 0 && z2x2 == 1)
        return {GenusClassKind::Toroidal, "Z_{p^n} x Z2[x]/(x^2)"};
    }
  }

  // regularity/connectivity evidence for the Higher verdict
  uint64_t degree = 1;
  for (const FiniteRing& f : d.factors) degree *= f.involutions().size();
  std::ostringstream clause;
  if (degree > 4) {
    clause << degree << "-regular";
  } else {
    clause << degree << "-regular but disconnected";
  }
  return {GenusClassKind::Higher, clause.str()};
}

GenusClass genus_class_from_graph(const CayleyGraph& g) {
  auto degree = regular_degree(g);
  if (!degree)
    throw std::invalid_argument("genus_class_from_graph requires a regular graph");
  if (*degree <= 2) {
    std::ostringstream clause;
    clause << *degree << "-regular";
    return {GenusClassKind::Planar, clause.str()};
  }
  if (*degree == 4) {
    if (is_connected(g))
      return {GenusClassKind::Toroidal, "connected and 4-regular"};
    return {GenusClassKind::Higher, "4-regular but disconnected"};
  }
  std::ostringstream clause;
  clause << *degree << "-regular";
  return {GenusClassKind::Higher, clause.str()};
}

const char* to_string(GenusClassKind k) {
  switch (k) {
    case GenusClassKind::Planar:
      return "planar";
    case GenusClassKind::Toroidal:
      return "toroidal";
    default:
      return "higher";
  }
}

std::string to_string(const LocalClass& c) {
  std::ostringstream out;
  switch (c.kind) {
    case LocalClassKind::OddCyclic:
      out << "Z_" << c.p << "^" << c.n;
      break;
    case LocalClassKind::OddLocalOther:
      out << "odd local (non-cyclic)";
      break;
    case LocalClassKind::FieldChar2:
      out << "GF(" << c.q << ")";
      break;
    case LocalClassKind::Z4:
      out << "Z4";
      break;
    case LocalClassKind::Z2X2:
      out << "Z2[x]/(x^2)";
      break;
    case LocalClassKind::Z2X3:
      out << "Z2[x]/(x^3)";
      break;
    case LocalClassKind::Z4A:
      out << "Z4[x]/(2x,x^2-2)";
      break;
    case LocalClassKind::Z2XY:
      out << "Z2[x,y]/(x^2,xy,y^2)";
      break;
    case LocalClassKind::Z4B:
      out << "Z4[x]/(x^2,2x)";
      break;
    case LocalClassKind::Z2N:
      out << "Z_2^" << c.n;
      break;
    default:
      out << "even local (outside catalog)";
      break;
  }
  return out.str();
}

}  // namespace icg
