#pragma once

// Arithmetic in GF(q), q = p^m <= 256.
//
// An element is stored as the integer sum c_i p^i of the coefficient vector of
// its residue polynomial modulo a fixed monic irreducible polynomial. So 0 and 1
// are the additive and multiplicative identities for every field, and the prime
// field GF(p) is simply {0, ..., p-1} with arithmetic mod p.
//
// Multiplication goes through exp/log tables built over a primitive element that
// is found by search when the field is constructed.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "posetcode/bits.hpp"

namespace posetcode {

struct Elem {
  std::uint8_t value = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(unsigned v) : value(static_cast<std::uint8_t>(v)) {}

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr Elem kZero{0};
inline constexpr Elem kOne{1};

namespace detail {

constexpr bool is_prime(unsigned v) {
  if (v < 2) return false;
  for (unsigned d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using Poly = std::vector<unsigned>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
inline Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Poly& f, unsigned p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Conway polynomials for every non-prime q <= 256.
inline const std::map<std::pair<unsigned, unsigned>, Poly>& modulus_table() {
  static const std::map<std::pair<unsigned, unsigned>, Poly> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

}  // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static FieldPtr make(unsigned p, unsigned m) {
    if (!detail::is_prime(p))
      throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw InputError("field extension degree must be at least 1");
    unsigned q = 1;
    for (unsigned i = 0; i < m; ++i) {
      q *= p;
      if (q > 256) throw InputError("field order exceeds 256");
    }
    return std::shared_ptr<const Field>(new Field(p, m, q));
  }

  // Field from its order; q must be a prime power in [2, 256].
  static FieldPtr of_order(unsigned q) {
    if (q < 2 || q > 256)
      throw InputError("field order " + std::to_string(q) + " out of range [2, 256]");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned m = 0;
    unsigned rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest != 1) throw InputError("field order " + std::to_string(q) + " is not a prime power");
    return make(p, m);
  }

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  unsigned order() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  Elem primitive() const { return Elem(exp_[1]); }

  bool contains(Elem a) const { return a.value < q_; }

  Elem elem(unsigned v) const {
    if (v >= q_)
      throw InputError("value " + std::to_string(v) + " is not an element of GF(" + std::to_string(q_) + ")");
    return Elem(v);
  }

  Elem add(Elem a, Elem b) const {
    check(a);
    check(b);
    return Elem(add_[a.value * q_ + b.value]);
  }

  Elem neg(Elem a) const {
    check(a);
    return Elem(neg_[a.value]);
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    check(a);
    check(b);
    if (a.is_zero() || b.is_zero()) return kZero;
    return Elem(exp_[log_[a.value] + log_[b.value]]);
  }

  Elem inv(Elem a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
    return Elem(exp_[(q_ - 1 - log_[a.value]) % (q_ - 1)]);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  // Discrete log base primitive(); a must be nonzero.
  unsigned log(Elem a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("log of zero");
    return log_[a.value];
  }

  Elem power_of_primitive(unsigned e) const { return Elem(exp_[e % (q_ - 1)]); }

  bool operator==(const Field& o) const { return q_ == o.q_; }

 private:
  Field(unsigned p, unsigned m, unsigned q) : p_(p), m_(m), q_(q) {
    if (m == 1) {
      modulus_ = {0, 1};
    } else {
      const auto& table = detail::modulus_table();
      auto it = table.find({p, m});
      if (it == table.end()) throw InputError("no modulus for GF(" + std::to_string(q) + ")");
      modulus_ = it->second;
      if (!detail::is_irreducible(modulus_, p))
        throw std::logic_error("built-in modulus for GF(" + std::to_string(q) + ") is reducible");
    }
    build_additive();
    build_multiplicative();
  }

  void check(Elem a) const {
    if (a.value >= q_)
      throw std::domain_error("element " + std::to_string(a.value) + " is not in GF(" + std::to_string(q_) + ")");
  }

  std::vector<unsigned> digits(unsigned v) const {
    std::vector<unsigned> d(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    return d;
  }

  unsigned encode(const std::vector<unsigned>& d) const {
    unsigned v = 0;
    for (unsigned i = m_; i-- > 0;) v = v * p_ + (i < d.size() ? d[i] : 0);
    return v;
  }

  void build_additive() {
    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
      const auto da = digits(a);
      std::vector<unsigned> dn(m_);
      for (unsigned i = 0; i < m_; ++i) dn[i] = (p_ - da[i]) % p_;
      neg_[a] = static_cast<std::uint8_t>(encode(dn));
      for (unsigned b = 0; b < q_; ++b) {
        const auto db = digits(b);
        std::vector<unsigned> ds(m_);
        for (unsigned i = 0; i < m_; ++i) ds[i] = (da[i] + db[i]) % p_;
        add_[a * q_ + b] = static_cast<std::uint8_t>(encode(ds));
      }
    }
  }

  // Schoolbook product reduced by the modulus; only used to build the tables.
  unsigned slow_mul(unsigned a, unsigned b) const {
    const auto da = digits(a);
    const auto db = digits(b);
    detail::Poly prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i)
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    return encode(detail::poly_mod(prod, modulus_, p_));
  }

  void build_multiplicative() {
    const unsigned order = q_ - 1;
    // exp_ is doubled so that log a + log b never needs reduction.
    exp_.assign(2 * static_cast<std::size_t>(order), 0);
    log_.assign(q_, 0);
    for (unsigned g = 1; g < q_; ++g) {
      unsigned x = 1;
      unsigned k = 0;
      do {
        exp_[k] = static_cast<std::uint8_t>(x);
        x = slow_mul(x, g);
        ++k;
      } while (x != 1 && k < order);
      if (k == order && x == 1) {
        for (unsigned i = 0; i < order; ++i) {
          exp_[order + i] = exp_[i];
          log_[exp_[i]] = static_cast<std::uint16_t>(i);
        }
        return;
      }
    }
    throw std::logic_error("no primitive element in GF(" + std::to_string(q_) + ")");
  }

  unsigned p_;
  unsigned m_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> exp_;
  std::vector<std::uint16_t> log_;
};

}  // namespace posetcode
