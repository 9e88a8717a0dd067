#pragma once

// posetcode command-line front end. Exit codes: 0 success, 1 invalid input,
// 2 a checked identity failed.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "posetcode/posetcode.hpp"

namespace posetcode::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitTheorem = 2;

struct RunConfig {
  std::string command;
  std::string code_path;
  std::string poset_spec;
  std::string method;
  std::string set;
  bool json = false;
  std::uint64_t seed = 1;
  long long trials = 50;
  bool corrupt_rank = false;
};

namespace detail {

inline json mask_json(Mask m) { return mask_elements(m); }

inline json codeword_json(const Codeword& u) {
  json a = json::array();
  for (Elem e : u.coords) a.push_back(unsigned(e.value));
  return a;
}

inline json optional_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

inline std::string classification_line(const Classification& c) {
  std::string s = to_string(c.kind) + " d1=" + std::to_string(c.d1);
  if (c.d2) s += " d2=" + std::to_string(*c.d2);
  return s;
}

struct Inputs {
  LinearCode code;
  Poset poset;
};

inline Inputs load_inputs(const RunConfig& cfg, std::ostream& err) {
  auto code = load_code(cfg.code_path);
  if (code.dropped_rows() > 0)
    err << "warning: " << cfg.code_path << ": generator rows are dependent; dropped " << code.dropped_rows()
        << ", using k = " << code.dimension() << "\n";
  auto poset = load_poset(cfg.poset_spec);
  if (poset.size() != code.length())
    throw InputError("poset size " + std::to_string(poset.size()) + " ≠ code length " +
                     std::to_string(code.length()));
  return {std::move(code), std::move(poset)};
}

inline int hierarchy(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto [code, poset] = load_inputs(cfg, err);
  const auto method = cfg.method == "bruteforce" ? HierarchyMethod::bruteforce : HierarchyMethod::theorem2;
  const auto h = full_hierarchy(RankProfile(code), poset, method);
  if (cfg.json) {
    json witnesses = json::array();
    for (std::size_t r = 0; r < h.weights.size(); ++r) {
      if (method == HierarchyMethod::theorem2) {
        witnesses.push_back(mask_json(h.ideal_witnesses[r]));
      } else {
        json basis = json::array();
        for (const auto& u : h.subcodes[r]) basis.push_back(codeword_json(u));
        witnesses.push_back(basis);
      }
    }
    out << json{{"n", h.n},        {"k", h.k},           {"q", h.q},
                {"poset", h.poset_id}, {"method", to_string(method)}, {"weights", h.weights},
                {"witnesses", witnesses}}
               .dump()
        << "\n";
    return kExitOk;
  }
  out << "code [" << h.n << "," << h.k << "] over GF(" << h.q << "), poset " << h.poset_id << ", method "
      << to_string(method) << "\n";
  for (std::size_t r = 0; r < h.weights.size(); ++r) {
    out << "d_" << r + 1 << " = " << h.weights[r];
    if (method == HierarchyMethod::theorem2) {
      out << "  ideal " << mask_to_string(h.ideal_witnesses[r]);
    } else {
      out << "  subcode";
      for (const auto& u : h.subcodes[r]) {
        out << " ";
        for (Elem e : u.coords) out << unsigned(e.value);
      }
    }
    out << "\n";
  }
  return kExitOk;
}

inline std::string set_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline int duality(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto [code, poset] = load_inputs(cfg, err);
  const auto method = cfg.method == "bruteforce" ? HierarchyMethod::bruteforce : HierarchyMethod::theorem2;
  const auto part = duality_partition(code, poset, method);
  if (cfg.json) {
    json j{{"A", part.a}, {"B", part.b}, {"pass", part.ok}};
    if (!part.ok) j["failure"] = part.failure;
    out << j.dump() << "\n";
  } else {
    out << "A = " << set_string(part.a) << "\n"
        << "B = " << set_string(part.b) << "\n"
        << (part.ok ? "PASS" : "FAIL: " + part.failure) << "\n";
  }
  return part.ok ? kExitOk : kExitTheorem;
}

inline int distribution(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto [code, poset] = load_inputs(cfg, err);
  DistributionMethod method = DistributionMethod::enumerate;
  if (cfg.method == "moebius") method = DistributionMethod::moebius;
  if (cfg.method == "closed-form") method = DistributionMethod::closed_form;
  const RankProfile profile(code);
  const auto rep = posetcode::distribution(profile, poset, method);
  const auto& cls = *rep.classification;
  if (cfg.json) {
    out << json{{"counts", rep.counts},
                {"method", to_string(rep.method)},
                {"classification", to_string(cls.kind)},
                {"d1", cls.d1},
                {"d2", optional_json(cls.d2)}}
               .dump()
        << "\n";
    return kExitOk;
  }
  out << "method " << to_string(rep.method) << ", " << classification_line(cls) << "\n";
  for (std::size_t r = 0; r < rep.counts.size(); ++r) out << "A_" << r << " = " << rep.counts[r] << "\n";
  return kExitOk;
}

inline int classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto [code, poset] = load_inputs(cfg, err);
  const auto cls = posetcode::classify(RankProfile(code), poset);
  if (cfg.json) {
    json j{{"classification", to_string(cls.kind)}, {"d1", cls.d1}, {"d2", optional_json(cls.d2)}};
    j["rank_profile_holds"] = cls.rank_profile_holds ? json(*cls.rank_profile_holds) : json(nullptr);
    j["literal_column_conditions"] =
        cls.literal_column_conditions ? json(*cls.literal_column_conditions) : json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << classification_line(cls) << "\n";
  }
  if (cls.rank_profile_holds && !*cls.rank_profile_holds) {
    err << "rank profile of a " << to_string(cls.kind) << " code does not have the required shape\n";
    return kExitTheorem;
  }
  return kExitOk;
}

inline int rank(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto code = load_code(cfg.code_path);
  if (code.dropped_rows() > 0) err << "warning: dependent generator rows dropped\n";
  const Mask set = parse_index_set(cfg.set, code.length());
  const RankProfile profile(code);
  const auto triple = shortening_triple(profile, set);
  out << json{{"set", mask_elements(set)},
              {"rho", profile.rho(set)},
              {"rho_perp", profile.rho_perp(set)},
              {"lemma1g", {triple.nullity, triple.corank_form, triple.shortened_dimension}}}
             .dump()
      << "\n";
  return triple.consistent() ? kExitOk : kExitTheorem;
}

inline int selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.trials < 1) throw InputError("--trials must be at least 1");
  SelftestOptions opts;
  opts.seed = cfg.seed;
  opts.trials = static_cast<std::size_t>(cfg.trials);
  opts.corrupt_rank = cfg.corrupt_rank;
  const auto rep = run_selftest(opts);
  if (cfg.json) {
    json checks = json::object();
    for (const auto& [name, t] : rep.checks) checks[name] = {{"passed", t.passed}, {"failed", t.failed}};
    out << json{{"seed", cfg.seed},
                {"trials", cfg.trials},
                {"checks", checks},
                {"mds_instances", rep.mds_instances},
                {"nmds_instances", rep.nmds_instances},
                {"reproducers", rep.reproducers},
                {"pass", rep.ok()}}
               .dump()
        << "\n";
  } else {
    out << "selftest seed=" << cfg.seed << " trials=" << cfg.trials << "\n";
    for (const auto& name : selftest_check_names()) {
      const auto& t = rep.checks.at(name);
      out << (t.failed ? "FAIL " : "ok   ") << name << ": " << t.passed << " passed, " << t.failed << " failed\n";
    }
    out << "MDS instances: " << rep.mds_instances << "\n"
        << "NMDS instances (distinct): " << rep.nmds_instances << "\n";
    for (const auto& r : rep.reproducers) err << r;
    out << (rep.ok() ? "PASS" : "FAIL") << "\n";
  }
  return rep.ok() ? kExitOk : kExitTheorem;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Generalized poset weights, duality and weight distributions of linear codes"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("--code", cfg.code_path, "code file")->required();
    sub->add_option("--poset", cfg.poset_spec, "poset file, chain:<n> or antichain:<n>")->required();
    sub->add_flag("--json", cfg.json, "emit one JSON object");
  };

  auto* hier = app.add_subcommand("hierarchy", "generalized minimum poset weights d_1..d_k");
  add_inputs(hier);
  hier->add_option("--method", cfg.method, "theorem2 or bruteforce")
      ->check(CLI::IsMember({"theorem2", "bruteforce"}))
      ->default_str("theorem2");

  auto* dual = app.add_subcommand("duality", "check that {d_r(C)} and {n+1-d_s(C^perp)} partition [n]");
  add_inputs(dual);
  dual->add_option("--method", cfg.method, "theorem2 or bruteforce")->check(CLI::IsMember({"theorem2", "bruteforce"}));

  auto* dist = app.add_subcommand("distribution", "poset weight distribution A_0..A_n");
  add_inputs(dist);
  dist->add_option("--method", cfg.method, "enumerate, moebius or closed-form")
      ->check(CLI::IsMember({"enumerate", "moebius", "closed-form"}));

  auto* cls = app.add_subcommand("classify", "MDS / NMDS / other");
  add_inputs(cls);

  auto* rk = app.add_subcommand("rank", "rho, rho_perp and the shortening triple of a column set");
  rk->add_option("--code", cfg.code_path, "code file")->required();
  rk->add_option("--set", cfg.set, "comma-separated 1-indexed columns")->required();

  auto* st = app.add_subcommand("selftest", "randomized cross-checks of every identity");
  st->add_option("--seed", cfg.seed, "random seed");
  st->add_option("--trials", cfg.trials, "number of random instances");
  st->add_flag("--corrupt-rank", cfg.corrupt_rank, "plant a wrong rank value (negative control)");
  st->add_flag("--json", cfg.json, "emit one JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (hier->parsed()) return detail::hierarchy(cfg, out, err);
    if (dual->parsed()) return detail::duality(cfg, out, err);
    if (dist->parsed()) return detail::distribution(cfg, out, err);
    if (cls->parsed()) return detail::classify(cfg, out, err);
    if (rk->parsed()) return detail::rank(cfg, out, err);
    if (st->parsed()) return detail::selftest(cfg, out, err);
  } catch (const TheoremViolation& e) {
    err << "theorem check failed: " << e.what() << "\n";
    return kExitTheorem;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace posetcode::cli
