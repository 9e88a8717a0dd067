#pragma once

// Linear [n,k] codes over GF(q) viewed as poset-weighted spaces.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posetcode/bits.hpp"
#include "posetcode/field.hpp"
#include "posetcode/matrix.hpp"
#include "posetcode/poset.hpp"

namespace posetcode {

inline constexpr std::uint64_t kCodewordCap = std::uint64_t{1} << 20;

struct Codeword {
  std::vector<Elem> coords;

  std::size_t length() const { return coords.size(); }

  Mask support() const {
    Mask s = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!coords[i].is_zero()) s |= bit(i);
    return s;
  }

  bool operator==(const Codeword&) const = default;
  auto operator<=>(const Codeword&) const = default;
};

inline int hamming_weight(const Codeword& u) { return popcount(u.support()); }

// q^e, saturating at UINT64_MAX.
inline std::uint64_t saturating_power(std::uint64_t base, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

class LinearCode {
 public:
  // Dependent rows are dropped greedily (first maximal independent subset);
  // dropped_rows() reports how many.
  static LinearCode from_generator(const Matrix& rows) {
    if (rows.rows() == 0 || rows.cols() == 0) throw InputError("generator matrix is empty");
    if (rows.cols() > kMaxLength)
      throw InputError("code length " + std::to_string(rows.cols()) + " exceeds the cap of " +
                       std::to_string(kMaxLength));
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < rows.rows(); ++r) {
      keep.push_back(r);
      if (rank(rows.select_rows(keep)) < keep.size()) keep.pop_back();
    }
    if (keep.empty()) throw InputError("generator matrix has rank 0");
    LinearCode c(rows.select_rows(keep));
    c.dropped_ = rows.rows() - keep.size();
    return c;
  }

  const FieldPtr& field() const { return generator_.field(); }
  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  unsigned q() const { return field()->order(); }
  const Matrix& generator() const { return generator_; }
  const Matrix& parity() const { return parity_; }
  std::size_t dropped_rows() const { return dropped_; }

  // q^k, saturating.
  std::uint64_t size() const { return saturating_power(q(), dimension()); }

  Codeword encode(std::span<const Elem> message) const {
    if (message.size() != dimension()) throw std::invalid_argument("message length mismatch");
    const Field& f = *field();
    Codeword u{std::vector<Elem>(length(), kZero)};
    for (std::size_t i = 0; i < message.size(); ++i) {
      if (message[i].is_zero()) continue;
      for (std::size_t j = 0; j < length(); ++j)
        u.coords[j] = f.add(u.coords[j], f.mul(message[i], generator_(i, j)));
    }
    return u;
  }

  bool contains(const Codeword& u) const {
    if (u.length() != length()) return false;
    const Field& f = *field();
    for (std::size_t r = 0; r < parity_.rows(); ++r) {
      Elem acc = kZero;
      for (std::size_t j = 0; j < length(); ++j) acc = f.add(acc, f.mul(parity_(r, j), u.coords[j]));
      if (!acc.is_zero()) return false;
    }
    return true;
  }

  void require_enumerable() const {
    if (size() > kCodewordCap)
      throw InputError("codeword enumeration needs q^k <= 2^20, have q = " + std::to_string(q()) +
                       ", k = " + std::to_string(dimension()));
  }

  // Visits every codeword once. Message vectors run in ascending base-q order
  // with the first message symbol least significant; f receives (index, word).
  template <typename F>
  void for_each_codeword(F&& f) const {
    require_enumerable();
    const Field& fld = *field();
    const unsigned q = this->q();
    const std::size_t k = dimension();
    const std::size_t n = length();
    std::vector<unsigned> msg(k, 0);
    Codeword word{std::vector<Elem>(n, kZero)};
    const std::uint64_t total = size();
    for (std::uint64_t index = 0;; ++index) {
      f(index, static_cast<const Codeword&>(word));
      if (index + 1 == total) break;
      // Odometer step; each changed digit adds (new - old) * g_i.
      for (std::size_t i = 0; i < k; ++i) {
        const unsigned old = msg[i];
        const unsigned next = (old + 1) % q;
        msg[i] = next;
        const Elem delta = fld.sub(Elem(next), Elem(old));
        for (std::size_t j = 0; j < n; ++j)
          word.coords[j] = fld.add(word.coords[j], fld.mul(delta, generator_(i, j)));
        if (next != 0) break;
      }
    }
  }

  std::vector<Codeword> codewords() const {
    std::vector<Codeword> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each_codeword([&](std::uint64_t, const Codeword& u) { out.push_back(u); });
    return out;
  }

  // Support of every codeword, indexed like for_each_codeword.
  std::vector<Mask> codeword_supports() const {
    std::vector<Mask> out(static_cast<std::size_t>(size()));
    for_each_codeword([&](std::uint64_t i, const Codeword& u) { out[i] = u.support(); });
    return out;
  }

 private:
  explicit LinearCode(Matrix generator) : generator_(std::move(generator)), parity_(null_space_basis(generator_)) {}

  Matrix generator_;
  Matrix parity_;
  std::size_t dropped_ = 0;
};

inline int poset_weight(const Poset& p, const Codeword& u) {
  if (u.length() != p.size())
    throw std::invalid_argument("word length " + std::to_string(u.length()) + " does not match poset size " +
                                std::to_string(p.size()));
  return popcount(p.closure(u.support()));
}

inline int poset_weight_of_set(const Poset& p, std::span<const Codeword> words) {
  Mask s = 0;
  for (const auto& u : words) {
    if (u.length() != p.size()) throw std::invalid_argument("word length does not match poset size");
    s |= u.support();
  }
  return popcount(p.closure(s));
}

struct Shortening {
  std::size_t dimension;
  std::vector<Codeword> basis;
};

// C^J = {u in C : supp(u) subset of J}, inside the ambient space. Messages x
// with (xG)_j = 0 for every j outside J form the null space of (G restricted
// to the complement of J) transposed.
inline Shortening shorten(const LinearCode& c, Mask j) {
  c.generator().check_columns(j);
  const Mask outside = full_mask(c.length()) & ~j;
  const std::size_t k = c.dimension();
  Matrix constraints(c.field(), 0, k);
  if (outside != 0) constraints = c.generator().select_columns(outside).transpose();
  const Matrix messages = null_space_basis(constraints);
  Shortening s{messages.rows(), {}};
  for (std::size_t r = 0; r < messages.rows(); ++r) s.basis.push_back(c.encode(messages.row(r)));
  return s;
}

// Generator of C|J: columns J of G, row reduced to a basis.
inline Matrix puncture(const LinearCode& c, Mask j) {
  if (j == 0) throw std::invalid_argument("puncturing onto the empty set");
  const auto reduced = rref(c.generator().select_columns(j));
  std::vector<std::size_t> nonzero;
  for (std::size_t r = 0; r < reduced.pivots.size(); ++r) nonzero.push_back(r);
  return reduced.reduced.select_rows(nonzero);
}

inline LinearCode dualize(const LinearCode& c) {
  if (c.dimension() == c.length()) throw InputError("the dual of the full space is the zero code");
  return LinearCode::from_generator(c.parity());
}

}  // namespace posetcode
