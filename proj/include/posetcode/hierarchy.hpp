#pragma once

// Generalized minimum poset weights d_r(C) for r = 1..k.
//
// Two independent routes:
//  - the subspace oracle enumerates every r-dimensional subcode D once (via
//    reduced echelon coefficient matrices) and minimizes |<supp(D)>|;
//  - the ideal route scans ideals J and minimizes |J| subject to
//    |J| - rho_perp(J) >= r, i.e. dim C^J >= r.
// The ideal route is the default; the oracle is for verification.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "posetcode/bits.hpp"
#include "posetcode/code.hpp"
#include "posetcode/matroid.hpp"
#include "posetcode/poset.hpp"

namespace posetcode {

enum class HierarchyMethod { theorem2, bruteforce };

inline std::string to_string(HierarchyMethod m) { return m == HierarchyMethod::theorem2 ? "theorem2" : "bruteforce"; }

inline constexpr std::uint64_t kOracleCodeCap = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kOracleSubspaceCap = std::uint64_t{1} << 20;

// Number of r-dimensional subspaces of GF(q)^k, saturating at UINT64_MAX.
inline std::uint64_t gaussian_binomial(std::size_t k, std::size_t r, unsigned q) {
  if (r > k) return 0;
  // [k r]_q = prod_{i<r} (q^{k-i} - 1) / (q^{i+1} - 1), exact at every step.
  unsigned __int128 value = 1;
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint64_t num = saturating_power(q, k - i);
    const std::uint64_t den = saturating_power(q, i + 1);
    if (num == UINT64_MAX || den == UINT64_MAX) return UINT64_MAX;
    value = value * (num - 1);
    if (value > std::numeric_limits<std::uint64_t>::max()) return UINT64_MAX;
    value /= (den - 1);
  }
  return static_cast<std::uint64_t>(value);
}

struct OracleResult {
  int weight;
  std::vector<Codeword> basis;  // a minimizing subcode
};

// min over D in Phi_r(C) of weight(supp(D)). supp(D) is the union of the
// supports of any basis of D, so each subspace costs r table lookups.
template <typename WeightOfSupport>
OracleResult subspace_minimum(const LinearCode& c, std::size_t r, WeightOfSupport&& weight) {
  const std::size_t k = c.dimension();
  const unsigned q = c.q();
  if (r < 1 || r > k) throw std::invalid_argument("subcode dimension " + std::to_string(r) + " outside 1..k");
  if (c.size() > kOracleCodeCap) throw InputError("subspace oracle needs q^k <= 2^16");
  if (gaussian_binomial(k, r, q) > kOracleSubspaceCap)
    throw InputError("subspace oracle needs at most 2^20 subspaces of dimension " + std::to_string(r));

  const auto supports = c.codeword_supports();
  std::vector<std::uint64_t> place(k);
  for (std::size_t i = 0; i < k; ++i) place[i] = saturating_power(q, i);

  int best = std::numeric_limits<int>::max();
  std::vector<std::uint64_t> best_rows;

  // Pivot columns as an increasing r-combination of 0..k-1.
  std::vector<std::size_t> pivots(r);
  for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
  while (true) {
    // Free slots: row i may be nonzero at non-pivot columns right of pivots[i].
    std::vector<std::pair<std::size_t, std::size_t>> slots;  // (row, column)
    std::vector<bool> is_pivot(k, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t col = pivots[i] + 1; col < k; ++col)
        if (!is_pivot[col]) slots.emplace_back(i, col);

    std::vector<unsigned> digit(slots.size(), 0);
    std::vector<std::uint64_t> rows(r);
    while (true) {
      for (std::size_t i = 0; i < r; ++i) rows[i] = place[pivots[i]];
      for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first] += digit[s] * place[slots[s].second];
      Mask support = 0;
      for (auto idx : rows) support |= supports[idx];
      const int w = weight(support);
      if (w < best) {
        best = w;
        best_rows = rows;
      }
      std::size_t s = 0;
      while (s < slots.size() && ++digit[s] == q) digit[s++] = 0;
      if (s == slots.size()) break;
    }

    // Next combination.
    std::size_t i = r;
    while (i > 0 && pivots[i - 1] == k - r + (i - 1)) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
  }

  OracleResult out{best, {}};
  for (auto idx : best_rows) {
    std::vector<Elem> msg(k);
    for (std::size_t i = 0; i < k; ++i) {
      msg[i] = Elem(static_cast<unsigned>(idx % q));
      idx /= q;
    }
    out.basis.push_back(c.encode(msg));
  }
  return out;
}

inline OracleResult d_r_oracle(const LinearCode& c, const Poset& p, std::size_t r) {
  if (p.size() != c.length()) throw InputError("poset size does not match code length");
  return subspace_minimum(c, r, [&](Mask s) { return popcount(p.closure(s)); });
}

// Generalized Hamming weight: the oracle with |supp(D)| as the weight.
inline OracleResult d_r_hamming_oracle(const LinearCode& c, std::size_t r) {
  return subspace_minimum(c, r, [](Mask s) { return popcount(s); });
}

// Ideals paired with their nullity |J| - rho_perp(J) = dim C^J.
struct IdealScan {
  std::vector<Mask> ideals;
  std::vector<int> nullity;

  IdealScan(const RankProfile& profile, const Poset& p) : ideals(p.ideals()) {
    nullity.reserve(ideals.size());
    for (Mask j : ideals) nullity.push_back(popcount(j) - profile.rho_perp(j));
  }
};

struct Theorem2Result {
  int weight;            // min |J| over ideals with nullity >= r
  Mask witness;          // smallest mask attaining it
  int weight_equality;   // the same minimum restricted to nullity == r
  Mask witness_equality;
  bool witness_attains_equality;  // nullity(witness) == r
};

inline Theorem2Result d_r_from_scan(const IdealScan& scan, std::size_t r) {
  const int target = static_cast<int>(r);
  int best = std::numeric_limits<int>::max(), best_eq = std::numeric_limits<int>::max();
  Mask w = 0, w_eq = 0;
  int w_nullity = 0;
  // Ascending masks, strict improvement: ties go to the smallest mask.
  for (std::size_t i = 0; i < scan.ideals.size(); ++i) {
    const Mask j = scan.ideals[i];
    const int size = popcount(j);
    if (scan.nullity[i] >= target && size < best) {
      best = size;
      w = j;
      w_nullity = scan.nullity[i];
    }
    if (scan.nullity[i] == target && size < best_eq) {
      best_eq = size;
      w_eq = j;
    }
  }
  if (best == std::numeric_limits<int>::max())
    throw TheoremViolation("no ideal J has |J| - rho_perp(J) >= " + std::to_string(r));
  return {best, w, best_eq, w_eq, w_nullity == target};
}

inline Theorem2Result d_r_theorem2(const RankProfile& profile, const Poset& p, std::size_t r) {
  if (p.size() != profile.length()) throw InputError("poset size does not match code length");
  if (r < 1 || r > profile.dimension()) throw std::invalid_argument("r outside 1..k");
  return d_r_from_scan(IdealScan(profile, p), r);
}

struct WeightHierarchy {
  std::size_t n = 0;
  std::size_t k = 0;
  unsigned q = 0;
  std::string poset_id;
  HierarchyMethod method = HierarchyMethod::theorem2;
  std::vector<int> weights;                      // d_1..d_k
  std::vector<Mask> ideal_witnesses;             // theorem2
  std::vector<std::vector<Codeword>> subcodes;   // bruteforce
  bool equality_form_agrees = true;              // min over nullity >= r equals min over == r, every r
};

// Strictly increasing and r <= d_r <= n - k + r.
inline std::optional<std::string> hierarchy_violation(const std::vector<int>& d, std::size_t n) {
  const int k = static_cast<int>(d.size());
  for (int r = 1; r <= k; ++r) {
    const int v = d[r - 1];
    if (v < r || v > static_cast<int>(n) - k + r)
      return "d_" + std::to_string(r) + " = " + std::to_string(v) + " outside [" + std::to_string(r) + ", " +
             std::to_string(static_cast<int>(n) - k + r) + "]";
    if (r > 1 && d[r - 2] >= v) return "hierarchy not strictly increasing at r = " + std::to_string(r);
  }
  return std::nullopt;
}

inline WeightHierarchy full_hierarchy(const RankProfile& profile, const Poset& p,
                                      HierarchyMethod method = HierarchyMethod::theorem2) {
  const LinearCode& c = profile.code();
  if (p.size() != c.length())
    throw InputError("poset size " + std::to_string(p.size()) + " does not match code length " +
                     std::to_string(c.length()));
  WeightHierarchy h;
  h.n = c.length();
  h.k = c.dimension();
  h.q = c.q();
  h.poset_id = p.digest();
  h.method = method;
  if (method == HierarchyMethod::theorem2) {
    const IdealScan scan(profile, p);
    for (std::size_t r = 1; r <= h.k; ++r) {
      const auto t = d_r_from_scan(scan, r);
      h.weights.push_back(t.weight);
      h.ideal_witnesses.push_back(t.witness);
      if (t.weight != t.weight_equality || !t.witness_attains_equality) h.equality_form_agrees = false;
    }
    if (!h.equality_form_agrees) throw TheoremViolation("minimum over nullity >= r differs from nullity == r");
  } else {
    for (std::size_t r = 1; r <= h.k; ++r) {
      auto o = d_r_oracle(c, p, r);
      h.weights.push_back(o.weight);
      h.subcodes.push_back(std::move(o.basis));
    }
  }
  if (auto bad = hierarchy_violation(h.weights, h.n)) throw TheoremViolation(*bad);
  return h;
}

inline WeightHierarchy full_hierarchy(const LinearCode& c, const Poset& p,
                                      HierarchyMethod method = HierarchyMethod::theorem2) {
  return full_hierarchy(RankProfile(c), p, method);
}

struct DualityPartition {
  std::vector<int> a;  // {d_r(C) under P}
  std::vector<int> b;  // {n + 1 - d_s(C^perp) under the dual poset}
  bool ok = false;
  std::string failure;
};

// A and B must be disjoint with union [n], |A| = k and |B| = n - k.
inline DualityPartition partition_from(const WeightHierarchy& primal, const WeightHierarchy& dual) {
  DualityPartition out;
  out.a = primal.weights;
  const int n = static_cast<int>(primal.n);
  for (int d : dual.weights) out.b.push_back(n + 1 - d);
  std::sort(out.b.begin(), out.b.end());
  std::vector<int> seen(n + 2, 0);
  for (int v : out.a)
    if (v >= 1 && v <= n) ++seen[v];
  for (int v : out.b)
    if (v >= 1 && v <= n) ++seen[v];
  out.ok = out.a.size() == primal.k && out.b.size() == primal.n - primal.k;
  for (int v = 1; v <= n && out.ok; ++v)
    if (seen[v] != 1) {
      out.ok = false;
      out.failure = std::to_string(v) + (seen[v] == 0 ? " is in neither A nor B" : " is in both A and B");
    }
  if (!out.ok && out.failure.empty()) out.failure = "partition sizes wrong";
  return out;
}

inline DualityPartition duality_partition(const LinearCode& c, const Poset& p,
                                          HierarchyMethod method = HierarchyMethod::theorem2) {
  if (c.dimension() == c.length()) throw InputError("duality needs k < n");
  const auto primal = full_hierarchy(c, p, method);
  const auto dual = full_hierarchy(dualize(c), p.dual(), method);
  return partition_from(primal, dual);
}

}  // namespace posetcode
