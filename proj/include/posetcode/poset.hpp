#pragma once

// Partial orders on [n] stored as downset masks, with the ideal machinery the
// weight computations need: closure, enumeration, maximal elements and the
// interval of ideals between I \ M(I) and I.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posetcode/bits.hpp"

namespace posetcode {

// A cover relation (lower, upper) with 1-indexed elements, read "lower < upper".
using CoverPair = std::pair<std::size_t, std::size_t>;

class Poset {
 public:
  static Poset from_cover_relations(std::size_t n, std::span<const CoverPair> covers) {
    check_size(n);
    Poset p(n);
    for (auto [lo, hi] : covers) {
      if (lo < 1 || lo > n || hi < 1 || hi > n)
        throw InputError("cover relation " + std::to_string(lo) + " < " + std::to_string(hi) +
                         " out of range for n = " + std::to_string(n));
      if (lo == hi) throw InputError("cover relation " + std::to_string(lo) + " < " + std::to_string(lo) + " is a cycle");
      p.below_[hi - 1] |= bit(lo - 1);
    }
    // Transitive closure by propagation to a fixed point.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t j = 0; j < n; ++j) {
        Mask m = p.below_[j];
        for_each_bit(p.below_[j], [&](std::size_t i) { m |= p.below_[i]; });
        if (m != p.below_[j]) {
          p.below_[j] = m;
          changed = true;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if ((p.below_[j] & bit(i)) && (p.below_[i] & bit(j)))
          throw InputError("cover relations contain a cycle through " + std::to_string(i + 1) + " and " +
                           std::to_string(j + 1));
    p.finish();
    return p;
  }

  static Poset chain(std::size_t n) {
    std::vector<CoverPair> covers;
    for (std::size_t i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
    return from_cover_relations(n, covers);
  }

  static Poset antichain(std::size_t n) { return from_cover_relations(n, {}); }

  std::size_t size() const { return n_; }
  Mask ground() const { return full_mask(n_); }

  // Downset of element i (0-indexed), including i.
  Mask below(std::size_t i) const { return below_[i]; }
  Mask above(std::size_t i) const { return above_[i]; }

  bool leq(std::size_t i, std::size_t j) const { return (below_[j] & bit(i)) != 0; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

  Mask closure(Mask set) const {
    check_subset(set);
    Mask out = 0;
    for_each_bit(set, [&](std::size_t j) { out |= below_[j]; });
    return out;
  }

  bool is_ideal(Mask set) const { return is_subset(set, ground()) && closure(set) == set; }

  // All ideals (or those of one size) in ascending mask order. Elements are
  // decided along a linear extension, so every branch ends in a distinct ideal.
  std::vector<Mask> ideals(std::optional<std::size_t> size = std::nullopt) const {
    std::vector<Mask> out;
    const int target = size ? static_cast<int>(*size) : -1;
    if (target > static_cast<int>(n_)) return out;
    extend_ideals(0, 0, target, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t count_ideals() const { return ideals().size(); }

  // M(I): elements of I with nothing of I strictly above them.
  Mask maximal_elements(Mask ideal) const {
    require_ideal(ideal);
    Mask out = 0;
    for_each_bit(ideal, [&](std::size_t j) {
      if ((above_[j] & ideal & ~bit(j)) == 0) out |= bit(j);
    });
    return out;
  }

  // I_M = I \ M(I).
  Mask non_maximal_part(Mask ideal) const { return ideal & ~maximal_elements(ideal); }

  // Lambda(I) = {I_M | T : T subset of M(I)}, ordered by size then mask.
  std::vector<Mask> lambda_interval(Mask ideal) const {
    const Mask top = maximal_elements(ideal);
    const Mask base = ideal & ~top;
    std::vector<Mask> out;
    out.reserve(std::size_t{1} << popcount(top));
    // Enumerate submasks of top.
    Mask t = top;
    while (true) {
      const Mask j = base | t;
      if (!is_ideal(j)) throw TheoremViolation("interval member " + mask_to_string(j) + " is not an ideal");
      out.push_back(j);
      if (t == 0) break;
      t = (t - 1) & top;
    }
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
      return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    return out;
  }

  Poset dual() const {
    Poset d(n_);
    d.below_ = above_;
    d.finish();
    return d;
  }

  // Hasse diagram as 1-indexed pairs, sorted.
  std::vector<CoverPair> covers() const {
    std::vector<CoverPair> out;
    for (std::size_t j = 0; j < n_; ++j) {
      const Mask strict = below_[j] & ~bit(j);
      for_each_bit(strict, [&](std::size_t i) {
        // i is covered by j when nothing sits strictly between them.
        if ((above_[i] & strict & ~bit(i)) == 0) out.emplace_back(i + 1, j + 1);
      });
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Short stable identifier: FNV-1a over n and the downset masks.
  std::string digest() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) {
      for (int b = 0; b < 8; ++b) {
        h ^= (v >> (8 * b)) & 0xff;
        h *= 1099511628211ULL;
      }
    };
    mix(n_);
    for (Mask m : below_) mix(m);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  bool operator==(const Poset& o) const { return n_ == o.n_ && below_ == o.below_; }

  void require_ideal(Mask set) const {
    if (!is_ideal(set)) throw std::invalid_argument(mask_to_string(set) + " is not an ideal");
  }

 private:
  explicit Poset(std::size_t n) : n_(n), below_(n), above_(n) {
    for (std::size_t i = 0; i < n; ++i) below_[i] = bit(i);
  }

  static void check_size(std::size_t n) {
    if (n == 0) throw InputError("poset must have at least one element");
    if (n > kMaxLength)
      throw InputError("poset size " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxLength));
  }

  void check_subset(Mask set) const {
    if (!is_subset(set, ground()))
      throw std::out_of_range("set " + mask_to_string(set) + " exceeds ground set of size " + std::to_string(n_));
  }

  void finish() {
    above_.assign(n_, 0);
    for (std::size_t j = 0; j < n_; ++j)
      for_each_bit(below_[j], [&](std::size_t i) { above_[i] |= bit(j); });
    order_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) order_[i] = i;
    // Strictly smaller downsets come first, which is a linear extension.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return popcount(below_[a]) < popcount(below_[b]); });
  }

  void extend_ideals(std::size_t pos, Mask current, int target, std::vector<Mask>& out) const {
    const int have = popcount(current);
    if (target >= 0 && (have > target || have + static_cast<int>(n_ - pos) < target)) return;
    if (pos == n_) {
      out.push_back(current);
      return;
    }
    const std::size_t e = order_[pos];
    extend_ideals(pos + 1, current, target, out);
    if (is_subset(below_[e] & ~bit(e), current)) extend_ideals(pos + 1, current | bit(e), target, out);
  }

  std::size_t n_;
  std::vector<Mask> below_;
  std::vector<Mask> above_;
  std::vector<std::size_t> order_;
};

}  // namespace posetcode
