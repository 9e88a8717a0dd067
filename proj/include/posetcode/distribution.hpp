#pragma once

// Poset weight distributions A_r(C) = #{u in C : |<supp(u)>| = r}.
//
// Routes, all of which must agree:
//  - enumerate: weigh every codeword;
//  - moebius: per ideal I, count words with <supp(u)> = I by inclusion-exclusion
//    over Lambda(I), using |C^J| = q^(k - rho(complement of J)), then sum over
//    ideals of size r;
//  - closed forms for MDS codes (d = n - k + 1) and Near-MDS codes
//    (d_1 = n - k, d_2 = n - k + 2), plus the Hamming specialization of the
//    Near-MDS formula.

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "posetcode/bits.hpp"
#include "posetcode/code.hpp"
#include "posetcode/hierarchy.hpp"
#include "posetcode/matroid.hpp"
#include "posetcode/poset.hpp"

namespace posetcode {

using Count = std::int64_t;

enum class CountMethod { enumerate, moebius };
enum class DistributionMethod { enumerate, moebius, closed_form };
enum class CodeClass { mds, nmds, other };

inline std::string to_string(DistributionMethod m) {
  switch (m) {
    case DistributionMethod::enumerate: return "enumerate";
    case DistributionMethod::moebius: return "moebius";
    case DistributionMethod::closed_form: return "closed-form";
  }
  return "?";
}

inline std::string to_string(CodeClass c) {
  switch (c) {
    case CodeClass::mds: return "MDS";
    case CodeClass::nmds: return "NMDS";
    case CodeClass::other: return "other";
  }
  return "?";
}

// Pascal-triangle binomial; zero outside 0 <= s <= m.
inline Count binomial(int m, int s) {
  if (s < 0 || m < 0 || s > m) return 0;
  static std::vector<std::vector<Count>> rows{{1}};
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  while (static_cast<int>(rows.size()) <= m) {
    const auto& prev = rows.back();
    std::vector<Count> next(prev.size() + 1, 1);
    for (std::size_t i = 1; i < prev.size(); ++i) next[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(next));
  }
  return rows[m][s];
}

inline Count ipow(Count base, int e) {
  Count out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

namespace detail {

// Every value q^e with e <= k must fit a signed 64-bit count.
inline void require_countable(const LinearCode& c) {
  if (saturating_power(c.q(), c.dimension()) > (std::uint64_t{1} << 62))
    throw InputError("weight counts need q^k <= 2^62");
}

}  // namespace detail

// Sum over J in Lambda(I) of (-1)^(|I| - |J|). Zero whenever M(I) is nonempty.
inline Count lambda_sign_sum(const Poset& p, Mask ideal) {
  Count sum = 0;
  for (Mask j : p.lambda_interval(ideal)) sum += ((popcount(ideal) - popcount(j)) % 2 == 0) ? 1 : -1;
  return sum;
}

// |C intersect S_I|: codewords whose support has ideal closure exactly I.
inline Count count_exact_support(const RankProfile& profile, const Poset& p, Mask ideal, CountMethod method) {
  const LinearCode& c = profile.code();
  if (p.size() != c.length()) throw InputError("poset size does not match code length");
  p.require_ideal(ideal);
  if (method == CountMethod::enumerate) {
    Count n = 0;
    c.for_each_codeword([&](std::uint64_t, const Codeword& u) {
      if (p.closure(u.support()) == ideal) ++n;
    });
    return n;
  }
  detail::require_countable(c);
  const Mask ground = p.ground();
  const int k = static_cast<int>(c.dimension());
  const Count q = c.q();
  Count sum = 0;
  for (Mask j : p.lambda_interval(ideal)) {
    const Count term = ipow(q, k - profile.rho(ground & ~j));
    sum += ((popcount(ideal) - popcount(j)) % 2 == 0) ? term : -term;
  }
  return sum;
}

// |C intersect S_I| for every ideal, from one pass over the code.
inline std::unordered_map<Mask, Count> exact_support_histogram(const LinearCode& c, const Poset& p) {
  std::unordered_map<Mask, Count> out;
  c.for_each_codeword([&](std::uint64_t, const Codeword& u) { ++out[p.closure(u.support())]; });
  return out;
}

struct Classification {
  CodeClass kind = CodeClass::other;
  int d1 = 0;
  std::optional<int> d2;
  // The piecewise rank facts the closed forms rest on, checked on every ideal:
  // MDS: k - rho(~J) = max(0, |J| - d + 1); NMDS: rho_perp(J) = |J| below n - k,
  // n - k above it, and k - rho(~J) = 0 for |J| < d, |J| - d for |J| > d.
  // Only evaluated for MDS / NMDS inputs.
  std::optional<bool> rank_profile_holds;
  // Literal column conditions on H (every n-k-1 columns independent, some n-k
  // dependent, every n-k+1 of full rank). Reported, never asserted; only
  // computed for n <= 16.
  std::optional<bool> literal_column_conditions;
};

namespace detail {

inline bool columns_condition(const RankProfile& profile, std::size_t size, const auto& pred, bool want_all) {
  const std::size_t n = profile.length();
  if (size > n) return want_all;
  // Gosper's hack over all size-element subsets.
  if (size == 0) return pred(Mask{0});
  Mask s = full_mask(size);
  const Mask limit = bit(n);
  while (s < limit) {
    const bool v = pred(s);
    if (want_all && !v) return false;
    if (!want_all && v) return true;
    const Mask c = s & (~s + 1);
    const Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return want_all;
}

inline bool literal_nmds_columns(const RankProfile& profile) {
  const int n = static_cast<int>(profile.length());
  const int m = n - static_cast<int>(profile.dimension());
  const bool independent = m - 1 < 0 ||
                           columns_condition(profile, static_cast<std::size_t>(m - 1),
                                             [&](Mask s) { return profile.rho_perp(s) == popcount(s); }, true);
  const bool some_dependent = columns_condition(
      profile, static_cast<std::size_t>(m), [&](Mask s) { return profile.rho_perp(s) < popcount(s); }, false);
  const bool spanning = m + 1 > n || columns_condition(profile, static_cast<std::size_t>(m + 1),
                                                       [&](Mask s) { return profile.rho_perp(s) == m; }, true);
  return independent && some_dependent && spanning;
}

}  // namespace detail

inline Classification classify(const RankProfile& profile, const Poset& p) {
  const auto h = full_hierarchy(profile, p, HierarchyMethod::theorem2);
  const int n = static_cast<int>(h.n);
  const int k = static_cast<int>(h.k);
  Classification out;
  out.d1 = h.weights[0];
  if (k >= 2) out.d2 = h.weights[1];
  if (out.d1 == n - k + 1)
    out.kind = CodeClass::mds;
  else if (out.d1 == n - k && out.d2 && *out.d2 == n - k + 2)
    out.kind = CodeClass::nmds;

  const Mask ground = p.ground();
  if (out.kind == CodeClass::mds) {
    const int d = out.d1;
    bool holds = true;
    for (Mask j : p.ideals()) {
      const int size = popcount(j);
      const int expected = size <= d - 1 ? 0 : size - d + 1;
      if (k - profile.rho(ground & ~j) != expected) holds = false;
    }
    out.rank_profile_holds = holds;
  } else if (out.kind == CodeClass::nmds) {
    const int d = out.d1;
    bool holds = true;
    for (Mask j : p.ideals()) {
      const int size = popcount(j);
      const int perp = profile.rho_perp(j);
      const int shortened = k - profile.rho(ground & ~j);
      if (size < n - k && perp != size) holds = false;
      if (size > n - k && perp != n - k) holds = false;
      if (size <= d - 1 && shortened != 0) holds = false;
      if (size >= d + 1 && shortened != size - d) holds = false;
    }
    out.rank_profile_holds = holds;
  }
  if (n <= 16) out.literal_column_conditions = detail::literal_nmds_columns(profile);
  return out;
}

struct DistributionReport {
  std::vector<Count> counts;  // A_0 .. A_n
  DistributionMethod method = DistributionMethod::enumerate;
  std::optional<Classification> classification;
};

// Sum of counts is q^k, A_0 = 1, and nothing below d_1 (when known).
inline std::optional<std::string> distribution_violation(const DistributionReport& r, const LinearCode& c) {
  Count total = 0;
  for (Count v : r.counts) {
    if (v < 0) return "negative count";
    total += v;
  }
  if (static_cast<std::uint64_t>(total) != c.size()) return "counts sum to " + std::to_string(total) + ", not q^k";
  if (r.counts.empty() || r.counts[0] != 1) return "A_0 != 1";
  if (r.classification)
    for (int w = 1; w < r.classification->d1 && w < static_cast<int>(r.counts.size()); ++w)
      if (r.counts[w] != 0) return "nonzero count below d_1";
  return std::nullopt;
}

namespace detail {

inline DistributionReport empty_report(const LinearCode& c, DistributionMethod m) {
  DistributionReport r;
  r.counts.assign(c.length() + 1, 0);
  r.method = m;
  return r;
}

}  // namespace detail

// A_{r,P} = sum over ideals I with |I| = r of |C intersect S_I|.
inline DistributionReport distribution_moebius(const RankProfile& profile, const Poset& p) {
  const LinearCode& c = profile.code();
  auto r = detail::empty_report(c, DistributionMethod::moebius);
  for (Mask ideal : p.ideals())
    r.counts[popcount(ideal)] += count_exact_support(profile, p, ideal, CountMethod::moebius);
  return r;
}

inline DistributionReport distribution_enumerate(const LinearCode& c, const Poset& p) {
  if (p.size() != c.length()) throw InputError("poset size does not match code length");
  auto r = detail::empty_report(c, DistributionMethod::enumerate);
  c.for_each_codeword([&](std::uint64_t, const Codeword& u) { ++r.counts[poset_weight(p, u)]; });
  return r;
}

namespace detail {

inline Classification require_class(const RankProfile& profile, const Poset& p, CodeClass want) {
  if (p.size() != profile.length()) throw InputError("poset size does not match code length");
  auto cls = classify(profile, p);
  if (cls.kind != want) {
    std::string msg = "code is not " + to_string(want) + " under this poset (d1=" + std::to_string(cls.d1);
    if (cls.d2) msg += ", d2=" + std::to_string(*cls.d2);
    throw InputError(msg + ")");
  }
  return cls;
}

}  // namespace detail

// For d <= r <= n:
//   A_r = sum_{I in Lambda^r} sum_{s=0}^{r-d} (-1)^s C(|M(I)|, s) (q^(r-d+1-s) - 1).
inline DistributionReport mds_closed_form(const RankProfile& profile, const Poset& p) {
  const auto cls = detail::require_class(profile, p, CodeClass::mds);
  detail::require_countable(profile.code());
  const int n = static_cast<int>(p.size());
  const int d = cls.d1;
  const Count q = profile.code().q();
  auto rep = detail::empty_report(profile.code(), DistributionMethod::closed_form);
  rep.classification = cls;
  rep.counts[0] = 1;
  for (int r = d; r <= n; ++r) {
    Count total = 0;
    for (Mask ideal : p.ideals(static_cast<std::size_t>(r))) {
      const int top = popcount(p.maximal_elements(ideal));
      for (int s = 0; s <= r - d; ++s) {
        const Count term = binomial(top, s) * (ipow(q, r - d + 1 - s) - 1);
        total += s % 2 == 0 ? term : -term;
      }
    }
    rep.counts[r] = total;
  }
  return rep;
}

// For d <= r <= n:
//   A_r = sum_{I in Lambda^r} sum_{s=0}^{r-d-1} (-1)^s C(|M(I)|, s) (q^(r-d-s) - 1)
//       + (-1)^(r-d) sum_{I in Lambda^r} sum_{J in Lambda(I), |J| = d} A_J(C)
// with A_J(C) = |C intersect S_J|.
inline DistributionReport nmds_closed_form(const RankProfile& profile, const Poset& p,
                                           std::optional<CountMethod> term_method = std::nullopt) {
  const auto cls = detail::require_class(profile, p, CodeClass::nmds);
  detail::require_countable(profile.code());
  const int n = static_cast<int>(p.size());
  const int d = cls.d1;
  const Count q = profile.code().q();
  const CountMethod method =
      term_method.value_or(profile.code().size() <= (std::uint64_t{1} << 12) ? CountMethod::enumerate
                                                                              : CountMethod::moebius);
  std::unordered_map<Mask, Count> boundary;  // A_J for ideals |J| = d
  for (Mask j : p.ideals(static_cast<std::size_t>(d))) boundary[j] = count_exact_support(profile, p, j, method);

  auto rep = detail::empty_report(profile.code(), DistributionMethod::closed_form);
  rep.classification = cls;
  rep.counts[0] = 1;
  for (int r = d; r <= n; ++r) {
    Count first = 0, second = 0;
    for (Mask ideal : p.ideals(static_cast<std::size_t>(r))) {
      const int top = popcount(p.maximal_elements(ideal));
      for (int s = 0; s <= r - d - 1; ++s) {
        const Count term = binomial(top, s) * (ipow(q, r - d - s) - 1);
        first += s % 2 == 0 ? term : -term;
      }
      for (Mask j : p.lambda_interval(ideal))
        if (popcount(j) == d) second += boundary.at(j);
    }
    rep.counts[r] = first + ((r - d) % 2 == 0 ? second : -second);
  }
  return rep;
}

// Antichain case: A_r = C(n,r) sum_{s=0}^{r-d-1} (-1)^s C(r,s) (q^(r-d-s) - 1)
//                       + (-1)^(r-d) C(n-d, r-d) A_d.
inline DistributionReport hamming_nmds_closed_form(const RankProfile& profile) {
  const int n = static_cast<int>(profile.length());
  const Poset antichain = Poset::antichain(profile.length());
  const auto cls = detail::require_class(profile, antichain, CodeClass::nmds);
  detail::require_countable(profile.code());
  const int d = cls.d1;
  const Count q = profile.code().q();
  Count a_d = 0;
  for (Mask j : antichain.ideals(static_cast<std::size_t>(d)))
    a_d += count_exact_support(profile, antichain, j, CountMethod::moebius);

  auto rep = detail::empty_report(profile.code(), DistributionMethod::closed_form);
  rep.classification = cls;
  rep.counts[0] = 1;
  for (int r = d; r <= n; ++r) {
    Count first = 0;
    for (int s = 0; s <= r - d - 1; ++s) {
      const Count term = binomial(r, s) * (ipow(q, r - d - s) - 1);
      first += s % 2 == 0 ? term : -term;
    }
    const Count second = binomial(n - d, r - d) * a_d;
    rep.counts[r] = binomial(n, r) * first + ((r - d) % 2 == 0 ? second : -second);
  }
  return rep;
}

// The closed form matching the code's class; other codes are rejected.
inline DistributionReport distribution_closed_form(const RankProfile& profile, const Poset& p) {
  const auto cls = classify(profile, p);
  if (cls.kind == CodeClass::mds) return mds_closed_form(profile, p);
  if (cls.kind == CodeClass::nmds) return nmds_closed_form(profile, p);
  throw InputError("no closed form: code is neither MDS nor NMDS under this poset (d1=" + std::to_string(cls.d1) +
                   (cls.d2 ? ", d2=" + std::to_string(*cls.d2) : std::string()) + ")");
}

inline DistributionReport distribution(const RankProfile& profile, const Poset& p, DistributionMethod method) {
  if (p.size() != profile.length()) throw InputError("poset size does not match code length");
  DistributionReport rep;
  switch (method) {
    case DistributionMethod::enumerate: rep = distribution_enumerate(profile.code(), p); break;
    case DistributionMethod::moebius: rep = distribution_moebius(profile, p); break;
    case DistributionMethod::closed_form: rep = distribution_closed_form(profile, p); break;
  }
  if (!rep.classification) rep.classification = classify(profile, p);
  if (auto bad = distribution_violation(rep, profile.code())) throw TheoremViolation(*bad);
  return rep;
}

}  // namespace posetcode
