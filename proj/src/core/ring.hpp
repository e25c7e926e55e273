#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/ring_spec.hpp"

namespace icg {

namespace detail {
class RingImpl;
}

/// Three-valued result for budgeted searches: a budget exhaustion is
/// explicitly distinguished from a definite "no".
enum class Tri { False, True, Unknown };

/// A finite commutative ring with identity, elements indexed 0..order-1.
/// Index 0 is always the zero element. Immutable and cheap to copy.
class FiniteRing {
 public:
  uint32_t order() const;
  uint32_t characteristic() const;
  uint32_t zero() const { return 0; }
  uint32_t one() const;

  uint32_t add(uint32_t x, uint32_t y) const;
  uint32_t mul(uint32_t x, uint32_t y) const;
  uint32_t neg(uint32_t x) const;
  uint32_t sub(uint32_t x, uint32_t y) const;

  const std::string& label(uint32_t x) const;

  /// Elements u with u*u == 1, ascending. Contains one and -one.
  const std::vector<uint32_t>& involutions() const;
  /// Elements with a multiplicative inverse, ascending.
  const std::vector<uint32_t>& units() const;
  /// Elements e with e*e == e, ascending. Contains 0 and 1.
  const std::vector<uint32_t>& idempotents() const;

  /// Checks x is a valid element index, throws std::out_of_range otherwise.
  void check_element(uint32_t x) const;

  explicit FiniteRing(std::shared_ptr<const detail::RingImpl> impl);

 private:
  std::shared_ptr<const detail::RingImpl> impl_;
  struct Cached {
    std::vector<uint32_t> involutions, units, idempotents;
  };
  std::shared_ptr<const Cached> cached_;
};

/// Largest supported atom order; product rings may be larger (componentwise
/// arithmetic, no materialized tables) up to kMaxRingOrder.
inline constexpr uint32_t kMaxAtomOrder = 4096;
inline constexpr uint64_t kMaxRingOrder = 1u << 20;

/// Builds a ring from a spec. Product specs get componentwise arithmetic;
/// catalog atoms follow their defining presentations.
FiniteRing build_ring(const RingSpec& spec);

/// Direct product of already-built rings (componentwise arithmetic, mixed
/// radix element indexing with the leftmost factor slowest).
FiniteRing product_ring(std::vector<FiniteRing> factors);

/// Generic structure-constants constructor for rings outside the catalog.
/// Validates the ring axioms (exhaustively for order <= 64, on a random
/// sample of >= 10^4 triples above) and throws std::invalid_argument on any
/// violation.
FiniteRing ring_from_tables(uint32_t order,
                            const std::vector<std::vector<uint32_t>>& add,
                            const std::vector<std::vector<uint32_t>>& mul,
                            uint32_t one,
                            std::vector<std::string> labels = {});

/// Decomposition into local factors via primitive orthogonal idempotents.
/// Factors are ordered by (order, idempotent index) ascending.
struct LocalDecomposition {
  std::vector<uint32_t> idempotents;  // aligned with factors
  std::vector<FiniteRing> factors;
  /// projections[i][x] = index in factors[i] of e_i * x
  std::vector<std::vector<uint32_t>> projections;
};

LocalDecomposition local_decomposition(const FiniteRing& r);

/// True iff the non-units are closed under addition (they then form the
/// unique maximal ideal).
bool is_local(const FiniteRing& r);

/// The unique maximal ideal of a local ring, ascending element indices.
/// Throws std::invalid_argument when the ring is not local.
std::vector<uint32_t> maximal_ideal(const FiniteRing& r);

/// Decides whether two rings are isomorphic by invariant pruning followed by
/// backtracking over generator images. Intended for orders <= 16; Unknown is
/// returned on budget exhaustion.
Tri ring_isomorphic(const FiniteRing& a, const FiniteRing& b,
                    uint64_t budget = 50'000'000);

/// Additive order of an element.
uint32_t additive_order(const FiniteRing& r, uint32_t x);

}  // namespace icg
