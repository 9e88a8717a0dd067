#pragma once

// Randomized cross-checks of every identity the library relies on. Each trial
// draws a code and a poset, runs all checks that apply, and records the
// instance text for any failure.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "posetcode/distribution.hpp"
#include "posetcode/hierarchy.hpp"
#include "posetcode/io.hpp"
#include "posetcode/matroid.hpp"
#include "posetcode/random.hpp"

namespace posetcode {

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  InstanceShape shape{};
  bool corrupt_rank = false;  // plant a wrong rank in the first trial's profile
};

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct SelftestReport {
  std::map<std::string, CheckTally> checks;
  std::size_t mds_instances = 0;
  std::size_t nmds_instances = 0;  // distinct (code, poset) pairs
  std::vector<std::string> reproducers;

  bool ok() const {
    for (const auto& [name, t] : checks)
      if (t.failed) return false;
    return true;
  }
};

// Check names, in report order.
inline const std::vector<std::string>& selftest_check_names() {
  static const std::vector<std::string> names = {
      "theorem2_vs_oracle", "hierarchy_bounds", "duality_partition", "rank_axioms",        "corank_identity",
      "shortening_triple",  "moebius_vs_enum",  "distribution_cross", "mds_closed_form",   "nmds_closed_form",
      "hamming_closed_form", "hamming_hierarchy"};
  return names;
}

inline SelftestReport run_selftest(const SelftestOptions& options) {
  if (options.trials < 1) throw InputError("selftest needs at least one trial");
  SelftestReport report;
  for (const auto& name : selftest_check_names()) report.checks[name];
  std::set<std::string> nmds_seen;
  Rng rng(options.seed);

  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const Instance inst = random_instance(rng, options.shape);
    const LinearCode& code = inst.code;
    const Poset& poset = inst.poset;
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    RankProfile profile(code);
    if (options.corrupt_rank && trial == 0) profile.inject_for_testing(full_mask(n), std::nullopt, int(n - k) + 1);

    std::vector<std::string> failures;
    auto run = [&](const std::string& name, const std::function<std::string()>& check) {
      std::string problem;
      try {
        problem = check();
      } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
      }
      auto& t = report.checks[name];
      if (problem.empty()) {
        ++t.passed;
      } else {
        ++t.failed;
        failures.push_back(name + ": " + problem);
      }
    };

    std::vector<int> primal;
    run("theorem2_vs_oracle", [&]() -> std::string {
      const auto ideal = full_hierarchy(profile, poset, HierarchyMethod::theorem2);
      primal = ideal.weights;
      for (std::size_t r = 1; r <= k; ++r) {
        const int oracle = d_r_oracle(code, poset, r).weight;
        if (oracle != ideal.weights[r - 1])
          return "d_" + std::to_string(r) + ": ideal route " + std::to_string(ideal.weights[r - 1]) + ", oracle " +
                 std::to_string(oracle);
      }
      return {};
    });

    run("hierarchy_bounds", [&]() -> std::string {
      if (auto bad = hierarchy_violation(primal, n)) return *bad;
      const auto dual = full_hierarchy(dualize(code), poset.dual());
      if (auto bad = hierarchy_violation(dual.weights, n)) return "dual: " + *bad;
      return {};
    });

    run("duality_partition", [&]() -> std::string {
      const auto part = partition_from(full_hierarchy(profile, poset), full_hierarchy(dualize(code), poset.dual()));
      return part.ok ? std::string() : part.failure;
    });

    run("rank_axioms", [&]() -> std::string {
      const auto r = check_rank_axioms(profile, n <= 12 ? CheckMode::exhaustive : CheckMode::sampled, options.seed);
      return r.ok ? std::string() : r.failure;
    });

    run("corank_identity", [&]() -> std::string {
      const auto r = check_corank_identity(profile, n <= 12 ? CheckMode::exhaustive : CheckMode::sampled);
      return r.ok ? std::string() : r.failure;
    });

    run("shortening_triple", [&]() -> std::string {
      for (Mask j = 0; j <= full_mask(n); ++j) {
        const auto t = shortening_triple(profile, j);
        if (!t.consistent())
          return "J = " + mask_to_string(j) + ": " + std::to_string(t.nullity) + ", " +
                 std::to_string(t.corank_form) + ", " + std::to_string(t.shortened_dimension);
      }
      return {};
    });

    run("moebius_vs_enum", [&]() -> std::string {
      const auto hist = exact_support_histogram(code, poset);
      for (Mask ideal : poset.ideals()) {
        const Count moebius = count_exact_support(profile, poset, ideal, CountMethod::moebius);
        const auto it = hist.find(ideal);
        const Count direct = it == hist.end() ? 0 : it->second;
        if (moebius != direct)
          return "I = " + mask_to_string(ideal) + ": moebius " + std::to_string(moebius) + ", enumerated " +
                 std::to_string(direct);
      }
      return {};
    });

    const auto enumerated = distribution_enumerate(code, poset);
    run("distribution_cross", [&]() -> std::string {
      const auto moebius = distribution_moebius(profile, poset);
      if (moebius.counts != enumerated.counts) return "moebius and enumeration disagree";
      if (auto bad = distribution_violation(enumerated, code)) return *bad;
      return {};
    });

    std::optional<Classification> cls;
    try {
      cls = classify(profile, poset);
    } catch (const std::exception&) {
    }
    if (cls && cls->kind == CodeClass::mds) {
      ++report.mds_instances;
      run("mds_closed_form", [&]() -> std::string {
        if (!cls->rank_profile_holds.value_or(false)) return "rank profile facts fail";
        return mds_closed_form(profile, poset).counts == enumerated.counts ? std::string() : "closed form differs";
      });
    }
    if (cls && cls->kind == CodeClass::nmds) {
      nmds_seen.insert(format_code(code) + format_poset(poset));
      run("nmds_closed_form", [&]() -> std::string {
        if (!cls->rank_profile_holds.value_or(false)) return "rank profile facts fail";
        if (nmds_closed_form(profile, poset, CountMethod::enumerate).counts != enumerated.counts)
          return "closed form (enumerated boundary terms) differs";
        if (nmds_closed_form(profile, poset, CountMethod::moebius).counts != enumerated.counts)
          return "closed form (moebius boundary terms) differs";
        return {};
      });
    }

    const Poset antichain = Poset::antichain(n);
    run("hamming_hierarchy", [&]() -> std::string {
      const auto h = full_hierarchy(profile, antichain);
      for (std::size_t r = 1; r <= k; ++r)
        if (d_r_hamming_oracle(code, r).weight != h.weights[r - 1])
          return "generalized Hamming weight d_" + std::to_string(r) + " differs";
      bool same = true;
      code.for_each_codeword([&](std::uint64_t, const Codeword& u) {
        if (poset_weight(antichain, u) != hamming_weight(u)) same = false;
      });
      return same ? std::string() : "antichain weight differs from Hamming weight";
    });
    try {
      if (classify(profile, antichain).kind == CodeClass::nmds) {
        run("hamming_closed_form", [&]() -> std::string {
          const auto direct = distribution_enumerate(code, antichain).counts;
          if (hamming_nmds_closed_form(profile).counts != direct) return "Hamming closed form differs";
          if (nmds_closed_form(profile, antichain).counts != direct) return "antichain closed form differs";
          return {};
        });
      }
    } catch (const std::exception&) {
    }

    if (!failures.empty()) {
      std::ostringstream rep;
      rep << "trial " << trial << " failed:\n";
      for (const auto& f : failures) rep << "  " << f << "\n";
      rep << "--- code ---\n" << format_code(code) << "--- poset ---\n" << format_poset(poset);
      report.reproducers.push_back(rep.str());
    }
  }
  report.nmds_instances = nmds_seen.size();
  return report;
}

}  // namespace posetcode
