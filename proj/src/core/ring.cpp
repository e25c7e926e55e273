#include "core/ring.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace icg {
namespace detail {

class RingImpl {
 public:
  virtual ~RingImpl() = default;
  virtual uint32_t order() const = 0;
  virtual uint32_t characteristic() const = 0;
  virtual uint32_t one() const = 0;
  virtual uint32_t add(uint32_t, uint32_t) const = 0;
  virtual uint32_t mul(uint32_t, uint32_t) const = 0;
  virtual uint32_t neg(uint32_t) const = 0;
  virtual const std::string& label(uint32_t) const = 0;
};

namespace {

// ---------------------------------------------------------------- Z_n

class ZnImpl final : public RingImpl {
 public:
  explicit ZnImpl(uint32_t n) : n_(n) {
    labels_.reserve(n);
    for (uint32_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  }
  uint32_t order() const override { return n_; }
  uint32_t characteristic() const override { return n_; }
  uint32_t one() const override { return 1; }
  uint32_t add(uint32_t x, uint32_t y) const override {
    uint32_t s = x + y;
    return s >= n_ ? s - n_ : s;
  }
  uint32_t mul(uint32_t x, uint32_t y) const override {
    return static_cast<uint32_t>((uint64_t(x) * y) % n_);
  }
  uint32_t neg(uint32_t x) const override { return x == 0 ? 0 : n_ - x; }
  const std::string& label(uint32_t x) const override { return labels_[x]; }

 private:
  uint32_t n_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------- GF(p^k)

// Coefficient vectors over Z_p, element index = sum c_i p^i.
class GfImpl final : public RingImpl {
 public:
  GfImpl(uint32_t p, uint32_t k) : p_(p), k_(k) {
    q_ = 1;
    for (uint32_t i = 0; i < k; ++i) q_ *= p;
    modulus_ = smallest_irreducible();
    labels_.reserve(q_);
    for (uint32_t e = 0; e < q_; ++e) labels_.push_back(make_label(e));
  }

  uint32_t order() const override { return q_; }
  uint32_t characteristic() const override { return p_; }
  uint32_t one() const override { return 1; }

  uint32_t add(uint32_t x, uint32_t y) const override {
    uint32_t out = 0, base = 1;
    for (uint32_t i = 0; i < k_; ++i) {
      uint32_t d = (x % p_ + y % p_) % p_;
      out += d * base;
      base *= p_;
      x /= p_;
      y /= p_;
    }
    return out;
  }

  uint32_t neg(uint32_t x) const override {
    uint32_t out = 0, base = 1;
    for (uint32_t i = 0; i < k_; ++i) {
      uint32_t d = (p_ - x % p_) % p_;
      out += d * base;
      base *= p_;
      x /= p_;
    }
    return out;
  }

  uint32_t mul(uint32_t x, uint32_t y) const override {
    // schoolbook product, then reduce by the modulus
    std::vector<uint32_t> prod(2 * k_ - 1, 0);
    std::vector<uint32_t> a = digits(x), b = digits(y);
    for (uint32_t i = 0; i < k_; ++i)
      for (uint32_t j = 0; j < k_; ++j)
        prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    for (int d = int(2 * k_ - 2); d >= int(k_); --d) {
      uint32_t c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      // x^d = x^(d-k) * (-modulus tail)
      for (uint32_t i = 0; i < k_; ++i)
        prod[d - k_ + i] =
            (prod[d - k_ + i] + c * (p_ - modulus_[i]) % p_) % p_;
    }
    uint32_t out = 0, base = 1;
    for (uint32_t i = 0; i < k_; ++i) {
      out += prod[i] * base;
      base *= p_;
    }
    return out;
  }

  const std::string& label(uint32_t x) const override { return labels_[x]; }

 private:
  uint32_t p_, k_, q_;
  std::vector<uint32_t> modulus_;  // monic: x^k + sum modulus_[i] x^i
  std::vector<std::string> labels_;

  std::vector<uint32_t> digits(uint32_t e) const {
    std::vector<uint32_t> d(k_);
    for (uint32_t i = 0; i < k_; ++i) {
      d[i] = e % p_;
      e /= p_;
    }
    return d;
  }

  // polynomial remainder of a (dense, any degree) by monic b over Z_p
  static std::vector<uint32_t> poly_mod(std::vector<uint32_t> a,
                                        const std::vector<uint32_t>& b,
                                        uint32_t p) {
    size_t db = b.size() - 1;
    while (a.size() > db) {
      uint32_t c = a.back();
      size_t shift = a.size() - 1 - db;
      if (c != 0)
        for (size_t i = 0; i < b.size(); ++i)
          a[shift + i] = (a[shift + i] + c * (p - b[i] % p)) % p;
      a.pop_back();
    }
    return a;
  }

  static bool is_zero(const std::vector<uint32_t>& a) {
    return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
  }

  // Lexicographically smallest monic irreducible of degree k over Z_p,
  // found by exhaustive trial division by all lower-degree monic polys.
  std::vector<uint32_t> smallest_irreducible() const {
    if (k_ == 1) return {0, 1};  // x (unused; arithmetic is plain mod p)
    std::vector<uint32_t> best;
    uint32_t count = q_;  // p^k tails
    for (uint32_t code = 0; code < count; ++code) {
      std::vector<uint32_t> cand(k_ + 1, 0);
      uint32_t c = code;
      for (uint32_t i = 0; i < k_; ++i) {
        cand[i] = c % p_;
        c /= p_;
      }
      cand[k_] = 1;
      bool irreducible = true;
      for (uint32_t deg = 1; irreducible && 2 * deg <= k_; ++deg) {
        uint32_t div_count = 1;
        for (uint32_t i = 0; i < deg; ++i) div_count *= p_;
        for (uint32_t dc = 0; dc < div_count; ++dc) {
          std::vector<uint32_t> div(deg + 1, 0);
          uint32_t t = dc;
          for (uint32_t i = 0; i < deg; ++i) {
            div[i] = t % p_;
            t /= p_;
          }
          div[deg] = 1;
          if (is_zero(poly_mod(cand, div, p_))) {
            irreducible = false;
            break;
          }
        }
      }
      if (irreducible) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  std::string make_label(uint32_t e) const {
    if (e == 0) return "0";
    std::vector<uint32_t> d = digits(e);
    std::ostringstream out;
    bool first = true;
    for (int i = int(k_) - 1; i >= 0; --i) {
      if (d[i] == 0) continue;
      if (!first) out << "+";
      first = false;
      if (i == 0) {
        out << d[i];
      } else {
        if (d[i] != 1) out << d[i];
        out << "a";
        if (i > 1) out << "^" << i;
      }
    }
    return out.str();
  }
};

// ------------------------------------------------- small table-backed rings

class TableImpl final : public RingImpl {
 public:
  TableImpl(uint32_t n, uint32_t one, std::vector<uint32_t> add,
            std::vector<uint32_t> mul, std::vector<std::string> labels)
      : n_(n),
        one_(one),
        add_(std::move(add)),
        mul_(std::move(mul)),
        labels_(std::move(labels)) {
    neg_.assign(n_, 0);
    for (uint32_t x = 0; x < n_; ++x)
      for (uint32_t y = 0; y < n_; ++y)
        if (add_[size_t(x) * n_ + y] == 0) neg_[x] = y;
    char_ = 1;
    uint32_t acc = one_;
    while (acc != 0) {
      acc = add_[size_t(acc) * n_ + one_];
      ++char_;
    }
    if (labels_.empty()) {
      labels_.reserve(n_);
      for (uint32_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    }
  }
  uint32_t order() const override { return n_; }
  uint32_t characteristic() const override { return char_; }
  uint32_t one() const override { return one_; }
  uint32_t add(uint32_t x, uint32_t y) const override {
    return add_[size_t(x) * n_ + y];
  }
  uint32_t mul(uint32_t x, uint32_t y) const override {
    return mul_[size_t(x) * n_ + y];
  }
  uint32_t neg(uint32_t x) const override { return neg_[x]; }
  const std::string& label(uint32_t x) const override { return labels_[x]; }

 private:
  uint32_t n_, one_, char_ = 0;
  std::vector<uint32_t> add_, mul_, neg_;
  std::vector<std::string> labels_;
};

// -------------------------------------------------------------- products

// Mixed-radix element indexing, leftmost factor slowest. Tables are never
// materialized for the product itself.
class ProductImpl final : public RingImpl {
 public:
  explicit ProductImpl(std::vector<FiniteRing> factors)
      : factors_(std::move(factors)) {
    uint64_t order = 1;
    for (const auto& f : factors_) order *= f.order();
    if (order > kMaxRingOrder)
      throw std::invalid_argument("product ring order exceeds limit");
    order_ = static_cast<uint32_t>(order);
    strides_.assign(factors_.size(), 1);
    for (size_t i = factors_.size(); i-- > 1;)
      strides_[i - 1] = strides_[i] * factors_[i].order();
    char_ = 1;
    for (const auto& f : factors_)
      char_ = std::lcm<uint64_t>(char_, f.characteristic());
    one_ = 0;
    for (size_t i = 0; i < factors_.size(); ++i)
      one_ += factors_[i].one() * strides_[i];
    labels_.reserve(order_);
    for (uint32_t e = 0; e < order_; ++e) {
      std::ostringstream out;
      out << "(";
      for (size_t i = 0; i < factors_.size(); ++i)
        out << (i ? "," : "") << factors_[i].label(component(e, i));
      out << ")";
      labels_.push_back(out.str());
    }
  }

  uint32_t component(uint32_t e, size_t i) const {
    return (e / strides_[i]) % factors_[i].order();
  }

  uint32_t order() const override { return order_; }
  uint32_t characteristic() const override {
    return static_cast<uint32_t>(char_);
  }
  uint32_t one() const override { return one_; }
  uint32_t add(uint32_t x, uint32_t y) const override {
    uint32_t out = 0;
    for (size_t i = 0; i < factors_.size(); ++i)
      out += factors_[i].add(component(x, i), component(y, i)) * strides_[i];
    return out;
  }
  uint32_t mul(uint32_t x, uint32_t y) const override {
    uint32_t out = 0;
    for (size_t i = 0; i < factors_.size(); ++i)
      out += factors_[i].mul(component(x, i), component(y, i)) * strides_[i];
    return out;
  }
  uint32_t neg(uint32_t x) const override {
    uint32_t out = 0;
    for (size_t i = 0; i < factors_.size(); ++i)
      out += factors_[i].neg(component(x, i)) * strides_[i];
    return out;
  }
  const std::string& label(uint32_t x) const override { return labels_[x]; }

  const std::vector<FiniteRing>& factors() const { return factors_; }

 private:
  std::vector<FiniteRing> factors_;
  std::vector<uint32_t> strides_;
  uint32_t order_ = 0, one_ = 0;
  uint64_t char_ = 1;
  std::vector<std::string> labels_;
};

// ------------------------------------------------ catalog quotient rings

std::string poly_label(std::initializer_list<std::pair<uint32_t, const char*>>
                           terms) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [coeff, sym] : terms) {
    if (coeff == 0) continue;
    if (!first) out << "+";
    first = false;
    if (sym[0] == '\0') {
      out << coeff;
    } else {
      if (coeff != 1) out << coeff;
      out << sym;
    }
  }
  if (first) return "0";
  return out.str();
}

std::shared_ptr<RingImpl> make_quotient(AtomKind kind) {
  // All five catalog quotients have order 4 or 8 and index elements by
  // coefficient tuples, constant coefficient fastest.
  auto build = [](uint32_t n, uint32_t one, auto add_fn, auto mul_fn,
                  auto label_fn) {
    std::vector<uint32_t> add(size_t(n) * n), mul(size_t(n) * n);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (uint32_t x = 0; x < n; ++x) {
      labels.push_back(label_fn(x));
      for (uint32_t y = 0; y < n; ++y) {
        add[size_t(x) * n + y] = add_fn(x, y);
        mul[size_t(x) * n + y] = mul_fn(x, y);
      }
    }
    return std::make_shared<TableImpl>(n, one, std::move(add), std::move(mul),
                                       std::move(labels));
  };

  switch (kind) {
    case AtomKind::Z2X2: {
      // a + b x, x^2 = 0, coefficients mod 2; index = a + 2b
      auto add = [](uint32_t u, uint32_t v) { return u ^ v; };
      auto mul = [](uint32_t u, uint32_t v) {
        uint32_t a = u & 1, b = u >> 1, c = v & 1, d = v >> 1;
        return (a & c) | (((a & d) ^ (b & c)) << 1);
      };
      auto lab = [](uint32_t u) {
        return poly_label({{u & 1, ""}, {u >> 1, "x"}});
      };
      return build(4, 1, add, mul, lab);
    }
    case AtomKind::Z2X3: {
      // a + b x + c x^2, x^3 = 0, mod 2; index = a + 2b + 4c
      auto add = [](uint32_t u, uint32_t v) { return u ^ v; };
      auto mul = [](uint32_t u, uint32_t v) {
        uint32_t a = u & 1, b = (u >> 1) & 1, c = u >> 2;
        uint32_t d = v & 1, e = (v >> 1) & 1, f = v >> 2;
        uint32_t r0 = a & d;
        uint32_t r1 = (a & e) ^ (b & d);
        uint32_t r2 = (a & f) ^ (b & e) ^ (c & d);
        return r0 | (r1 << 1) | (r2 << 2);
      };
      auto lab = [](uint32_t u) {
        return poly_label(
            {{u & 1, ""}, {(u >> 1) & 1, "x"}, {u >> 2, "x^2"}});
      };
      return build(8, 1, add, mul, lab);
    }
    case AtomKind::Z4A: {
      // a + b x with a mod 4, b mod 2; 2x = 0, x^2 = 2; index = a + 4b
      auto add = [](uint32_t u, uint32_t v) {
        uint32_t a = ((u & 3) + (v & 3)) & 3, b = ((u >> 2) + (v >> 2)) & 1;
        return a | (b << 2);
      };
      auto mul = [](uint32_t u, uint32_t v) {
        uint32_t a = u & 3, b = u >> 2, c = v & 3, d = v >> 2;
        uint32_t r0 = (a * c + 2 * b * d) & 3;
        uint32_t r1 = (a * d + b * c) & 1;
        return r0 | (r1 << 2);
      };
      auto lab = [](uint32_t u) {
        return poly_label({{u & 3, ""}, {u >> 2, "x"}});
      };
      return build(8, 1, add, mul, lab);
    }
    case AtomKind::Z4B: {
      // a + b x with a mod 4, b mod 2; 2x = 0, x^2 = 0; index = a + 4b
      auto add = [](uint32_t u, uint32_t v) {
        uint32_t a = ((u & 3) + (v & 3)) & 3, b = ((u >> 2) + (v >> 2)) & 1;
        return a | (b << 2);
      };
      auto mul = [](uint32_t u, uint32_t v) {
        uint32_t a = u & 3, b = u >> 2, c = v & 3, d = v >> 2;
        uint32_t r0 = (a * c) & 3;
        uint32_t r1 = (a * d + b * c) & 1;
        return r0 | (r1 << 2);
      };
      auto lab = [](uint32_t u) {
        return poly_label({{u & 3, ""}, {u >> 2, "x"}});
      };
      return build(8, 1, add, mul, lab);
    }
    case AtomKind::Z2XY: {
      // a + b x + c y, x^2 = xy = y^2 = 0, mod 2; index = a + 2b + 4c
      auto add = [](uint32_t u, uint32_t v) { return u ^ v; };
      auto mul = [](uint32_t u, uint32_t v) {
        uint32_t a = u & 1, b = (u >> 1) & 1, c = u >> 2;
        uint32_t d = v & 1, e = (v >> 1) & 1, f = v >> 2;
        uint32_t r0 = a & d;
        uint32_t r1 = (a & e) ^ (b & d);
        uint32_t r2 = (a & f) ^ (c & d);
        return r0 | (r1 << 1) | (r2 << 2);
      };
      auto lab = [](uint32_t u) {
        return poly_label({{u & 1, ""}, {(u >> 1) & 1, "x"}, {u >> 2, "y"}});
      };
      return build(8, 1, add, mul, lab);
    }
    default:
      throw std::invalid_argument("unknown catalog atom");
  }
}

std::shared_ptr<const RingImpl> build_impl(const RingSpec& spec) {
  if (spec.kind == RingSpec::Kind::Product) {
    if (spec.children.size() == 1) return build_impl(spec.children[0]);
    std::vector<FiniteRing> factors;
    factors.reserve(spec.children.size());
    for (const auto& c : spec.children) factors.push_back(build_ring(c));
    return std::make_shared<ProductImpl>(std::move(factors));
  }
  switch (spec.atom) {
    case AtomKind::Zn: {
      uint64_t n = spec.params[0];
      if (n < 2) throw std::invalid_argument("Zn requires n >= 2");
      if (n > kMaxAtomOrder)
        throw std::invalid_argument("atom order exceeds limit");
      return std::make_shared<ZnImpl>(static_cast<uint32_t>(n));
    }
    case AtomKind::Gf: {
      uint64_t p = spec.params[0], k = spec.params[1];
      bool prime = p >= 2;
      for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      if (!prime) throw std::invalid_argument("GF base must be prime");
      if (k < 1) throw std::invalid_argument("GF degree must be >= 1");
      uint64_t q = 1;
      for (uint64_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxAtomOrder)
          throw std::invalid_argument("atom order exceeds limit");
      }
      if (k == 1) return std::make_shared<ZnImpl>(static_cast<uint32_t>(p));
      return std::make_shared<GfImpl>(static_cast<uint32_t>(p),
                                      static_cast<uint32_t>(k));
    }
    default:
      return make_quotient(spec.atom);
  }
}

}  // namespace
}  // namespace detail

// ----------------------------------------------------------- FiniteRing

FiniteRing::FiniteRing(std::shared_ptr<const detail::RingImpl> impl)
    : impl_(std::move(impl)) {
  const uint32_t n = impl_->order();
  const uint32_t one = impl_->one();
  auto cached = std::make_shared<Cached>();
  for (uint32_t x = 0; x < n; ++x) {
    if (impl_->mul(x, x) == one) cached->involutions.push_back(x);
    if (impl_->mul(x, x) == x) cached->idempotents.push_back(x);
  }
  // x is a unit iff some y has x*y == 1; quadratic scan is fine at atom scale
  // and products recurse componentwise through their factors' caches.
  if (auto* prod = dynamic_cast<const detail::ProductImpl*>(impl_.get())) {
    for (uint32_t x = 0; x < n; ++x) {
      bool unit = true;
      for (size_t i = 0; unit && i < prod->factors().size(); ++i) {
        const auto& f = prod->factors()[i];
        const auto& fu = f.units();
        unit = std::binary_search(fu.begin(), fu.end(), prod->component(x, i));
      }
      if (unit) cached->units.push_back(x);
    }
  } else {
    for (uint32_t x = 0; x < n; ++x)
      for (uint32_t y = 0; y < n; ++y)
        if (impl_->mul(x, y) == one) {
          cached->units.push_back(x);
          break;
        }
  }
  cached_ = std::move(cached);
}

uint32_t FiniteRing::order() const { return impl_->order(); }
uint32_t FiniteRing::characteristic() const { return impl_->characteristic(); }
uint32_t FiniteRing::one() const { return impl_->one(); }
uint32_t FiniteRing::add(uint32_t x, uint32_t y) const {
  return impl_->add(x, y);
}
uint32_t FiniteRing::mul(uint32_t x, uint32_t y) const {
  return impl_->mul(x, y);
}
uint32_t FiniteRing::neg(uint32_t x) const { return impl_->neg(x); }
uint32_t FiniteRing::sub(uint32_t x, uint32_t y) const {
  return impl_->add(x, impl_->neg(y));
}
const std::string& FiniteRing::label(uint32_t x) const {
  return impl_->label(x);
}
const std::vector<uint32_t>& FiniteRing::involutions() const {
  return cached_->involutions;
}
const std::vector<uint32_t>& FiniteRing::units() const {
  return cached_->units;
}
const std::vector<uint32_t>& FiniteRing::idempotents() const {
  return cached_->idempotents;
}
void FiniteRing::check_element(uint32_t x) const {
  if (x >= impl_->order())
    throw std::out_of_range("ring element index out of range");
}

FiniteRing build_ring(const RingSpec& spec) {
  return FiniteRing(detail::build_impl(spec));
}

FiniteRing product_ring(std::vector<FiniteRing> factors) {
  if (factors.empty())
    throw std::invalid_argument("product_ring requires at least one factor");
  if (factors.size() == 1) return factors[0];
  return FiniteRing(
      std::make_shared<detail::ProductImpl>(std::move(factors)));
}

// ------------------------------------------- generic tables constructor

FiniteRing ring_from_tables(uint32_t order,
                            const std::vector<std::vector<uint32_t>>& add,
                            const std::vector<std::vector<uint32_t>>& mul,
                            uint32_t one,
                            std::vector<std::string> labels) {
  if (order < 2 || order > kMaxAtomOrder)
    throw std::invalid_argument("order out of supported range");
  if (add.size() != order || mul.size() != order)
    throw std::invalid_argument("table size mismatch");
  auto at = [&](const std::vector<std::vector<uint32_t>>& t, uint32_t x,
                uint32_t y) {
    if (t[x].size() != order) throw std::invalid_argument("ragged table");
    uint32_t v = t[x][y];
    if (v >= order) throw std::invalid_argument("table entry out of range");
    return v;
  };
  if (one == 0 || one >= order)
    throw std::invalid_argument("one must be a nonzero element index");

  auto check = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("ring axiom failed: ") +
                                         what);
  };
  // group/identity axioms, O(n^2)
  std::vector<bool> has_neg(order, false);
  for (uint32_t x = 0; x < order; ++x) {
    check(at(add, x, 0) == x, "additive identity");
    check(at(mul, x, one) == x, "multiplicative identity");
    for (uint32_t y = 0; y < order; ++y) {
      check(at(add, x, y) == at(add, y, x), "addition commutativity");
      check(at(mul, x, y) == at(mul, y, x), "multiplication commutativity");
      if (at(add, x, y) == 0) has_neg[x] = true;
    }
  }
  for (uint32_t x = 0; x < order; ++x)
    check(has_neg[x], "additive inverses");
  // associativity + distributivity: exhaustive to order 64, sampled above
  auto triple_ok = [&](uint32_t x, uint32_t y, uint32_t z) {
    if (at(add, at(add, x, y), z) != at(add, x, at(add, y, z))) return false;
    if (at(mul, at(mul, x, y), z) != at(mul, x, at(mul, y, z))) return false;
    if (at(mul, x, at(add, y, z)) !=
        at(add, at(mul, x, y), at(mul, x, z)))
      return false;
    return true;
  };
  if (order <= 64) {
    for (uint32_t x = 0; x < order; ++x)
      for (uint32_t y = 0; y < order; ++y)
        for (uint32_t z = 0; z < order; ++z)
          check(triple_ok(x, y, z), "associativity/distributivity");
  } else {
    std::mt19937 rng(0x1cebu);
    std::uniform_int_distribution<uint32_t> pick(0, order - 1);
    for (int i = 0; i < 10000; ++i)
      check(triple_ok(pick(rng), pick(rng), pick(rng)),
            "associativity/distributivity (sampled)");
  }

  std::vector<uint32_t> flat_add(size_t(order) * order),
      flat_mul(size_t(order) * order);
  for (uint32_t x = 0; x < order; ++x)
    for (uint32_t y = 0; y < order; ++y) {
      flat_add[size_t(x) * order + y] = add[x][y];
      flat_mul[size_t(x) * order + y] = mul[x][y];
    }
  return FiniteRing(std::make_shared<detail::TableImpl>(
      order, one, std::move(flat_add), std::move(flat_mul),
      std::move(labels)));
}

// -------------------------------------------------- local structure

uint32_t additive_order(const FiniteRing& r, uint32_t x) {
  uint32_t ord = 1, acc = x;
  while (acc != 0) {
    acc = r.add(acc, x);
    ++ord;
  }
  return ord;
}

bool is_local(const FiniteRing& r) {
  const auto& units = r.units();
  std::vector<bool> is_unit(r.order(), false);
  for (uint32_t u : units) is_unit[u] = true;
  std::vector<uint32_t> non_units;
  for (uint32_t x = 0; x < r.order(); ++x)
    if (!is_unit[x]) non_units.push_back(x);
  for (uint32_t x : non_units)
    for (uint32_t y : non_units)
      if (is_unit[r.add(x, y)]) return false;
  return true;
}

std::vector<uint32_t> maximal_ideal(const FiniteRing& r) {
  if (!is_local(r))
    throw std::invalid_argument("maximal_ideal requires a local ring");
  const auto& units = r.units();
  std::vector<bool> is_unit(r.order(), false);
  for (uint32_t u : units) is_unit[u] = true;
  std::vector<uint32_t> ideal;
  for (uint32_t x = 0; x < r.order(); ++x)
    if (!is_unit[x]) ideal.push_back(x);
  return ideal;
}

namespace {

// Factor ring e*R with identity e, as a table ring over the elements of e*R.
// Labels are inherited from the parent.
std::pair<FiniteRing, std::vector<uint32_t>> corner_ring(const FiniteRing& r,
                                                         uint32_t e) {
  std::vector<uint32_t> elems;
  std::vector<uint32_t> local_index(r.order(), UINT32_MAX);
  for (uint32_t x = 0; x < r.order(); ++x) {
    uint32_t ex = r.mul(e, x);
    if (local_index[ex] == UINT32_MAX) {
      local_index[ex] = 0;
      elems.push_back(ex);
    }
  }
  std::sort(elems.begin(), elems.end());
  for (uint32_t i = 0; i < elems.size(); ++i) local_index[elems[i]] = i;

  uint32_t n = static_cast<uint32_t>(elems.size());
  std::vector<uint32_t> add(size_t(n) * n), mul(size_t(n) * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (uint32_t i = 0; i < n; ++i) {
    labels.push_back(r.label(elems[i]));
    for (uint32_t j = 0; j < n; ++j) {
      add[size_t(i) * n + j] = local_index[r.add(elems[i], elems[j])];
      mul[size_t(i) * n + j] = local_index[r.mul(elems[i], elems[j])];
    }
  }
  FiniteRing factor(std::make_shared<detail::TableImpl>(
      n, local_index[e], std::move(add), std::move(mul), std::move(labels)));
  std::vector<uint32_t> projection(r.order());
  for (uint32_t x = 0; x < r.order(); ++x)
    projection[x] = local_index[r.mul(e, x)];
  return {std::move(factor), std::move(projection)};
}

}  // namespace

LocalDecomposition local_decomposition(const FiniteRing& r) {
  const auto& idem = r.idempotents();
  // primitive idempotents are the atoms of the Boolean algebra of
  // idempotents: e != 0 with no idempotent strictly below it
  std::vector<uint32_t> primitive;
  for (uint32_t e : idem) {
    if (e == 0) continue;
    bool is_atom = true;
    for (uint32_t f : idem) {
      if (f == 0 || f == e) continue;
      if (r.mul(e, f) == f) {  // f <= e
        is_atom = false;
        break;
      }
    }
    if (is_atom) primitive.push_back(e);
  }

  LocalDecomposition out;
  std::vector<std::pair<FiniteRing, std::vector<uint32_t>>> corners;
  corners.reserve(primitive.size());
  for (uint32_t e : primitive) corners.push_back(corner_ring(r, e));

  std::vector<size_t> perm(primitive.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    uint32_t oa = corners[a].first.order(), ob = corners[b].first.order();
    if (oa != ob) return oa < ob;
    return primitive[a] < primitive[b];
  });
  for (size_t i : perm) {
    out.idempotents.push_back(primitive[i]);
    out.factors.push_back(std::move(corners[i].first));
    out.projections.push_back(std::move(corners[i].second));
  }
  return out;
}

// -------------------------------------------------- ring isomorphism

namespace {

struct ElementProfile {
  uint32_t add_order;
  bool unit, idem, inv;
  bool operator==(const ElementProfile&) const = default;
  bool operator<(const ElementProfile& o) const {
    return std::tie(add_order, unit, idem, inv) <
           std::tie(o.add_order, o.unit, o.idem, o.inv);
  }
};

std::vector<ElementProfile> profiles(const FiniteRing& r) {
  std::vector<bool> is_unit(r.order()), is_idem(r.order()), is_inv(r.order());
  for (uint32_t u : r.units()) is_unit[u] = true;
  for (uint32_t e : r.idempotents()) is_idem[e] = true;
  for (uint32_t u : r.involutions()) is_inv[u] = true;
  std::vector<ElementProfile> out(r.order());
  for (uint32_t x = 0; x < r.order(); ++x)
    out[x] = {additive_order(r, x), is_unit[x], is_idem[x], is_inv[x]};
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteRing& a, const FiniteRing& b, uint64_t budget)
      : a_(a), b_(b), budget_(budget) {
    pa_ = profiles(a);
    pb_ = profiles(b);
    map_.assign(a.order(), UINT32_MAX);
    rmap_.assign(b.order(), UINT32_MAX);
  }

  Tri run() {
    if (!assign(a_.zero(), b_.zero()) || !assign(a_.one(), b_.one()))
      return Tri::False;
    if (!close()) return Tri::False;
    return extend();
  }

 private:
  const FiniteRing& a_;
  const FiniteRing& b_;
  uint64_t budget_;
  bool exhausted_ = false;
  std::vector<ElementProfile> pa_, pb_;
  std::vector<uint32_t> map_, rmap_;
  std::vector<std::pair<uint32_t, uint32_t>> trail_;  // for undo

  bool spend() {
    if (budget_ == 0) {
      exhausted_ = true;
      return false;
    }
    --budget_;
    return true;
  }

  bool assign(uint32_t x, uint32_t y) {
    if (map_[x] != UINT32_MAX) return map_[x] == y;
    if (rmap_[y] != UINT32_MAX) return false;
    if (!(pa_[x] == pb_[y])) return false;
    map_[x] = y;
    rmap_[y] = x;
    trail_.push_back({x, y});
    return true;
  }

  // Propagates closure under add/mul over all mapped pairs; returns false on
  // an inconsistency (or budget exhaustion, flagged separately).
  bool close() {
    size_t frontier = 0;
    while (frontier < trail_.size()) {
      uint32_t x = trail_[frontier].first;
      ++frontier;
      for (size_t i = 0; i < trail_.size(); ++i) {
        uint32_t u = trail_[i].first;
        if (!spend()) return false;
        uint32_t sx = a_.add(x, u), sy = b_.add(map_[x], map_[u]);
        if (!assign(sx, sy)) return false;
        uint32_t px = a_.mul(x, u), py = b_.mul(map_[x], map_[u]);
        if (!assign(px, py)) return false;
      }
    }
    return true;
  }

  Tri extend() {
    uint32_t x = UINT32_MAX;
    for (uint32_t i = 0; i < a_.order(); ++i)
      if (map_[i] == UINT32_MAX) {
        x = i;
        break;
      }
    if (x == UINT32_MAX) return Tri::True;  // total map, closure-consistent

    bool saw_unknown = false;
    for (uint32_t y = 0; y < b_.order(); ++y) {
      if (rmap_[y] != UINT32_MAX || !(pa_[x] == pb_[y])) continue;
      size_t mark = trail_.size();
      if (assign(x, y) && close()) {
        Tri sub = extend();
        if (sub == Tri::True) return Tri::True;
        if (sub == Tri::Unknown) saw_unknown = true;
      }
      if (exhausted_) return Tri::Unknown;
      while (trail_.size() > mark) {
        auto [u, v] = trail_.back();
        trail_.pop_back();
        map_[u] = UINT32_MAX;
        rmap_[v] = UINT32_MAX;
      }
    }
    return saw_unknown ? Tri::Unknown : Tri::False;
  }
};

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Tri ring_isomorphic(const FiniteRing& a, const FiniteRing& b,
                    uint64_t budget) {
  if (a.order() != b.order()) return Tri::False;
  if (a.characteristic() != b.characteristic()) return Tri::False;
  if (a.units().size() != b.units().size()) return Tri::False;
  if (a.involutions().size() != b.involutions().size()) return Tri::False;
  if (a.idempotents().size() != b.idempotents().size()) return Tri::False;
  if (sorted(profiles(a)) != sorted(profiles(b))) return Tri::False;
  return IsoSearch(a, b, budget).run();
}

}  // namespace icg
