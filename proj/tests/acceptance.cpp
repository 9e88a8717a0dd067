// Acceptance run: one line per criterion, exit status 1 if any fails.
//   acceptance [--seed S] [--instances N]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "posetcode/posetcode.hpp"

using namespace posetcode;

namespace {

struct Criterion {
  Criterion(int i, std::string t) : id(i), title(std::move(t)) {}

  int id;
  std::string title;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few only

  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failed;
    if (failures.size() < 5) failures.push_back(what);
  }
};

using Counts = std::vector<Count>;

LinearCode from(std::vector<std::vector<unsigned>> rows) {
  return LinearCode::from_generator(Matrix::from_rows(Field::of_order(2), rows));
}

std::string describe(std::size_t i, const Instance& inst) {
  return "instance " + std::to_string(i) + " (q=" + std::to_string(inst.code.q()) +
         " n=" + std::to_string(inst.code.length()) + " k=" + std::to_string(inst.code.dimension()) + ")";
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  std::size_t instances = 250;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string a = argv[i];
    if (a == "--seed") seed = std::strtoull(argv[i + 1], nullptr, 10);
    else if (a == "--instances") instances = std::strtoull(argv[i + 1], nullptr, 10);
  }

  std::vector<Criterion> cs = {
      {1, "ideal-based d_r equals subspace oracle"},
      {2, "hierarchies strictly increasing, r <= d_r <= n-k+r"},
      {3, "duality partition of [n]"},
      {4, "corank identity and shortening triple on all subsets"},
      {5, "inclusion-exclusion count equals enumeration per ideal"},
      {6, "distribution methods agree, sum q^k, A_0 = 1"},
      {7, "MDS closed form equals enumeration"},
      {8, "NMDS closed forms equal enumeration"},
      {9, "rank axioms for rho and rho_perp"},
      {10, "antichain hierarchy and weight are Hamming"},
  };
  auto& c1 = cs[0];
  auto& c2 = cs[1];
  auto& c3 = cs[2];
  auto& c4 = cs[3];
  auto& c5 = cs[4];
  auto& c6 = cs[5];
  auto& c7 = cs[6];
  auto& c8 = cs[7];
  auto& c9 = cs[8];
  auto& c10 = cs[9];

  const auto start = std::chrono::steady_clock::now();

  // Fixed fixtures.
  {
    const auto parity = from({{1, 1, 0}, {0, 1, 1}});
    const auto rep = from({{1, 1, 1}});
    const auto full = LinearCode::from_generator(Matrix::identity(Field::of_order(2), 2));
    struct Fixture {
      const LinearCode* code;
      Poset poset;
      Counts expected;
      std::string name;
    };
    const std::vector<Fixture> mds = {{&parity, Poset::antichain(3), {1, 0, 3, 0}, "[3,2] parity, antichain"},
                                      {&rep, Poset::chain(3), {1, 0, 0, 1}, "[3,1] repetition, chain"},
                                      {&full, Poset::chain(2), {1, 1, 2}, "GF(2)^2, chain"}};
    for (const auto& f : mds) {
      const RankProfile prof(*f.code);
      const bool is_mds = classify(prof, f.poset).kind == CodeClass::mds;
      c7.check(is_mds && mds_closed_form(prof, f.poset).counts == f.expected &&
                   distribution_enumerate(*f.code, f.poset).counts == f.expected,
               "fixture " + f.name);
    }
    const auto c42 = from({{1, 1, 0, 0}, {0, 0, 1, 1}});
    const RankProfile prof(c42);
    const auto anti = Poset::antichain(4);
    const Counts expected{1, 0, 2, 0, 1};
    Count a_d = 0;
    for (Mask j : anti.ideals(2)) a_d += count_exact_support(prof, anti, j, CountMethod::enumerate);
    c8.check(classify(prof, anti).kind == CodeClass::nmds && a_d == 2 &&
                 nmds_closed_form(prof, anti, CountMethod::enumerate).counts == expected &&
                 nmds_closed_form(prof, anti, CountMethod::moebius).counts == expected &&
                 hamming_nmds_closed_form(prof).counts == expected &&
                 distribution_enumerate(c42, anti).counts == expected,
             "fixture [4,2] <1100,0011>, antichain");
  }

  Rng rng(seed);
  std::set<std::string> nmds_seen;
  for (std::size_t i = 0; i < instances; ++i) {
    const Instance inst = random_instance(rng);
    const auto& code = inst.code;
    const auto& poset = inst.poset;
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const std::string tag = describe(i, inst);
    const RankProfile prof(code);

    // 1 and 2
    std::vector<int> weights;
    try {
      weights = full_hierarchy(prof, poset).weights;
    } catch (const TheoremViolation& e) {
      c2.check(false, tag + ": " + e.what());
    }
    if (weights.size() == k) {
      for (std::size_t r = 1; r <= k; ++r) {
        const int oracle = d_r_oracle(code, poset, r).weight;
        c1.check(oracle == weights[r - 1], tag + " r=" + std::to_string(r));
      }
      c2.check(!hierarchy_violation(weights, n), tag);
    }
    const auto dual = dualize(code);
    const auto dual_h = full_hierarchy(dual, poset.dual());
    c2.check(!hierarchy_violation(dual_h.weights, n), tag + " (dual)");

    // 3
    const auto part = partition_from(full_hierarchy(prof, poset), dual_h);
    c3.check(part.ok && part.a.size() == k && part.b.size() == n - k, tag + ": " + part.failure);

    // 4
    if (n <= 10) {
      c4.check(check_corank_identity(prof, CheckMode::exhaustive).ok, tag);
      bool all = true;
      for (Mask j = 0; j <= full_mask(n); ++j) all = all && shortening_triple(prof, j).consistent();
      c4.check(all, tag + " triple");
    }

    // 5
    const auto hist = exact_support_histogram(code, poset);
    if (code.size() <= 4096) {
      for (Mask ideal : poset.ideals()) {
        const auto it = hist.find(ideal);
        const Count direct = it == hist.end() ? 0 : it->second;
        c5.check(count_exact_support(prof, poset, ideal, CountMethod::moebius) == direct,
                 tag + " I=" + mask_to_string(ideal));
      }
    }

    // 6
    const auto enumerated = distribution_enumerate(code, poset);
    const auto moebius = distribution_moebius(prof, poset);
    Count total = 0;
    for (Count v : enumerated.counts) total += v;
    c6.check(enumerated.counts == moebius.counts && static_cast<std::uint64_t>(total) == code.size() &&
                 enumerated.counts[0] == 1,
             tag);

    // 7 and 8
    const auto cls = classify(prof, poset);
    if (cls.kind == CodeClass::mds)
      c7.check(mds_closed_form(prof, poset).counts == enumerated.counts, tag);
    if (cls.kind == CodeClass::nmds) {
      nmds_seen.insert(format_code(code) + format_poset(poset));
      c8.check(nmds_closed_form(prof, poset, CountMethod::enumerate).counts == enumerated.counts &&
                   nmds_closed_form(prof, poset, CountMethod::moebius).counts == enumerated.counts,
               tag);
    }
    const Poset anti = Poset::antichain(n);
    if (classify(prof, anti).kind == CodeClass::nmds)
      c8.check(hamming_nmds_closed_form(prof).counts == distribution_enumerate(code, anti).counts, tag + " Hamming");

    // 9
    if (n <= 10) {
      const auto r = check_rank_axioms(prof, CheckMode::exhaustive);
      c9.check(r.ok, tag + ": " + r.failure);
    }

    // 10
    const auto hamming = full_hierarchy(prof, anti).weights;
    for (std::size_t r = 1; r <= k; ++r)
      c10.check(d_r_hamming_oracle(code, r).weight == hamming[r - 1], tag + " r=" + std::to_string(r));
    bool same = true;
    code.for_each_codeword([&](std::uint64_t, const Codeword& u) { same = same && poset_weight(anti, u) == hamming_weight(u); });
    c10.check(same, tag + " weights");
  }

  // At least five distinct NMDS instances per selftest run.
  const auto st = run_selftest(SelftestOptions{seed, instances});
  c8.check(st.nmds_instances >= 5, "selftest found " + std::to_string(st.nmds_instances) + " NMDS instances");
  c8.check(nmds_seen.size() >= 5, "acceptance found " + std::to_string(nmds_seen.size()) + " NMDS instances");

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c1.check(seconds < 60.0, "runtime " + std::to_string(seconds) + " s");

  bool all = true;
  for (const auto& c : cs) {
    const bool ok = c.failed == 0 && c.checked > 0;
    all = all && ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title << " (" << c.checked
              << " checks, " << c.failed << " failed)\n";
    for (const auto& f : c.failures) std::cout << "       " << f << "\n";
  }
  std::cout << "seed " << seed << ", " << instances << " instances, " << nmds_seen.size()
            << " distinct NMDS, " << seconds << " s\n";
  return all ? 0 : 1;
}
