#pragma once

// The matroid of a linear code. rho(A) is the rank of the generator columns in
// A and rho_perp(A) the rank of the parity-check columns in A. Both come from
// actual eliminations; the corank identity linking them is checked, not assumed.

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "posetcode/bits.hpp"
#include "posetcode/code.hpp"
#include "posetcode/matrix.hpp"

namespace posetcode {

class RankProfile {
 public:
  explicit RankProfile(LinearCode code) : code_(std::move(code)) {}

  RankProfile(const RankProfile& o) : code_(o.code_) {
    std::shared_lock lock(o.mutex_);
    rho_memo_ = o.rho_memo_;
    perp_memo_ = o.perp_memo_;
  }

  const LinearCode& code() const { return code_; }
  std::size_t length() const { return code_.length(); }
  std::size_t dimension() const { return code_.dimension(); }

  int rho(Mask a) const { return lookup(rho_memo_, code_.generator(), a); }
  int rho_perp(Mask a) const { return lookup(perp_memo_, code_.parity(), a); }

  // Overwrites memo entries; lets tests feed the checkers a broken profile.
  void inject_for_testing(Mask a, std::optional<int> rho, std::optional<int> rho_perp) {
    std::unique_lock lock(mutex_);
    if (rho) rho_memo_[a] = *rho;
    if (rho_perp) perp_memo_[a] = *rho_perp;
  }

  std::size_t memo_size() const {
    std::shared_lock lock(mutex_);
    return rho_memo_.size() + perp_memo_.size();
  }

 private:
  int lookup(std::unordered_map<Mask, int>& memo, const Matrix& m, Mask a) const {
    {
      std::shared_lock lock(mutex_);
      auto it = memo.find(a);
      if (it != memo.end()) return it->second;
    }
    // Computed outside the lock; concurrent duplicates produce the same value.
    const int value = static_cast<int>(column_submatrix_rank(m, a));
    std::unique_lock lock(mutex_);
    return memo.try_emplace(a, value).first->second;
  }

  LinearCode code_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Mask, int> rho_memo_;
  mutable std::unordered_map<Mask, int> perp_memo_;
};

enum class CheckMode { exhaustive, sampled };

struct CheckReport {
  bool ok = true;
  std::string failure;  // which property failed, with the witness sets
  Mask witness_a = 0;
  Mask witness_b = 0;
  std::uint64_t checked = 0;
};

namespace detail {

inline std::vector<int> rank_table(std::size_t n, const auto& rank_fn) {
  std::vector<int> table(std::size_t{1} << n);
  for (Mask a = 0; a < table.size(); ++a) table[a] = rank_fn(a);
  return table;
}

inline CheckReport fail(std::string what, Mask a, Mask b = 0) {
  CheckReport r;
  r.ok = false;
  r.failure = std::move(what);
  r.witness_a = a;
  r.witness_b = b;
  return r;
}

}  // namespace detail

// Rank axioms for an arbitrary set function on [n]:
//   R1  0 <= r(A) <= |A|
//   R2  A subset of B implies r(A) <= r(B)   (checked on all covering pairs A, A+e)
//   R3  r(A|B) + r(A&B) <= r(A) + r(B)
// Exhaustive mode tabulates all 2^n values and tests every pair; sampled mode
// draws random sets and pairs.
inline CheckReport check_rank_function(std::size_t n, const auto& rank_fn, const std::string& name,
                                       CheckMode mode = CheckMode::exhaustive, std::uint64_t samples = 20000,
                                       std::uint64_t seed = 1) {
  CheckReport report;
  const Mask ground = full_mask(n);
  if (mode == CheckMode::exhaustive) {
    if (n > 12) throw std::invalid_argument("exhaustive rank-axiom check needs n <= 12");
    const auto r = detail::rank_table(n, rank_fn);
    for (Mask a = 0; a <= ground; ++a) {
      if (r[a] < 0 || r[a] > popcount(a)) return detail::fail("R1 violated by " + name + " at " + mask_to_string(a), a);
      for (std::size_t e = 0; e < n; ++e)
        if (!(a & bit(e)) && r[a] > r[a | bit(e)])
          return detail::fail("R2 violated by " + name, a, a | bit(e));
      ++report.checked;
    }
    for (Mask a = 0; a <= ground; ++a)
      for (Mask b = a; b <= ground; ++b) {
        if (r[a | b] + r[a & b] > r[a] + r[b])
          return detail::fail("R3 violated by " + name + " at " + mask_to_string(a) + ", " + mask_to_string(b), a, b);
        ++report.checked;
      }
    return report;
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Mask a = static_cast<Mask>(rng()) & ground;
    const Mask b = static_cast<Mask>(rng()) & ground;
    const int ra = rank_fn(a), rb = rank_fn(b);
    if (ra < 0 || ra > popcount(a)) return detail::fail("R1 violated by " + name, a);
    if (rank_fn(a & b) > ra || ra > rank_fn(a | b)) return detail::fail("R2 violated by " + name, a & b, a | b);
    if (rank_fn(a | b) + rank_fn(a & b) > ra + rb) return detail::fail("R3 violated by " + name, a, b);
    ++report.checked;
  }
  return report;
}

// R1-R3 for both rho and rho_perp.
inline CheckReport check_rank_axioms(const RankProfile& profile, CheckMode mode = CheckMode::exhaustive,
                                     std::uint64_t seed = 1) {
  const std::size_t n = profile.length();
  auto report = check_rank_function(n, [&](Mask a) { return profile.rho(a); }, "rho", mode, 20000, seed);
  if (!report.ok) return report;
  auto dual = check_rank_function(n, [&](Mask a) { return profile.rho_perp(a); }, "rho_perp", mode, 20000, seed);
  dual.checked += report.checked;
  return dual;
}

// rho_perp(A) = |A| - k + rho([n] \ A): rho_perp is the corank of the code matroid.
inline CheckReport check_corank_identity(const RankProfile& profile, CheckMode mode = CheckMode::exhaustive,
                                         std::uint64_t samples = 20000, std::uint64_t seed = 1) {
  const std::size_t n = profile.length();
  const int k = static_cast<int>(profile.dimension());
  const Mask ground = full_mask(n);
  CheckReport report;
  auto test = [&](Mask a) {
    const int lhs = profile.rho_perp(a);
    const int rhs = popcount(a) - k + profile.rho(ground & ~a);
    ++report.checked;
    return lhs == rhs;
  };
  if (mode == CheckMode::exhaustive) {
    if (n > 12) throw std::invalid_argument("exhaustive corank check needs n <= 12");
    for (Mask a = 0; a <= ground; ++a)
      if (!test(a)) return detail::fail("corank identity fails at " + mask_to_string(a), a);
    return report;
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Mask a = static_cast<Mask>(rng()) & ground;
    if (!test(a)) return detail::fail("corank identity fails at " + mask_to_string(a), a);
  }
  return report;
}

// The three quantities |J| - rho_perp(J), k - rho([n] \ J) and dim C^J, which
// must coincide. The last one is computed by solving for the shortened code.
struct ShorteningTriple {
  int nullity;
  int corank_form;
  int shortened_dimension;

  bool consistent() const { return nullity == corank_form && corank_form == shortened_dimension; }
  bool operator==(const ShorteningTriple&) const = default;
};

inline ShorteningTriple shortening_triple(const RankProfile& profile, Mask j) {
  const Mask ground = full_mask(profile.length());
  return {popcount(j) - profile.rho_perp(j), static_cast<int>(profile.dimension()) - profile.rho(ground & ~j),
          static_cast<int>(shorten(profile.code(), j).dimension)};
}

}  // namespace posetcode
