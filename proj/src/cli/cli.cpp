#include "spancat/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <type_traits>

#include <CLI11.hpp>
#include <json.hpp>

#include "spancat/core/groupoid.hpp"
#include "spancat/fakepb/fakepb_checks.hpp"
#include "spancat/finab/finab_instance.hpp"
#include "spancat/pinj/partial_injection.hpp"
#include "spancat/relcalc/goursat_checks.hpp"
#include "spancat/relcalc/rel_checks.hpp"

namespace spancat::cli {
namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

/// Runs `fn` and prefixes any input error with the JSON path it concerns.
template <class F>
auto at_path(const std::string& where, F&& fn) {
  try {
    return fn();
  } catch (const PreconditionError& e) {
    throw ConfigError(where + ": " + e.what());
  } catch (const json::exception& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

std::size_t pick(const RunConfig& cfg, std::size_t fallback) { return cfg.samples.value_or(fallback); }

/// Bounds for exhaustive inputs and universal-property competitors.
struct Scale {
  bool exhaustive;
  std::size_t fake_bound, relation_bound, rrr_bound, competitors, jointly, local, key_bound;
};

template <class C>
Scale scale_for(const C& c) {
  if constexpr (std::is_same_v<C, finab::FinAb>) {
    return {false, 4, 4, 4, 4, 4, 4, std::size_t(std::min<std::int64_t>(c.max_order(), 4))};
  } else if constexpr (std::is_same_v<C, pinj::PartialInjections>) {
    const std::size_t n = c.max_size();
    return {true, std::min<std::size_t>(n, 3), std::min<std::size_t>(n, 2), std::min<std::size_t>(n, 3),
            std::min<std::size_t>(n, 3), std::min<std::size_t>(n, 3), std::min<std::size_t>(n, 3),
            std::min<std::size_t>(n, 2)};
  } else {
    return {true, 1, 1, 1, 1, 1, 1, 1};
  }
}

template <class C>
SuiteReport run_suite(const C& c, const std::string& name, const RunConfig& cfg) {
  Workbench<C> wb(c);
  const Scale sc = scale_for(c);
  const std::uint64_t seed = cfg.seed;
  if (name == "axioms") {
    AxiomOptions opt{{seed, pick(cfg, 500)}, 200, sc.jointly};
    return check_axioms(wb, opt);
  }
  if (name == "spans") return suite_spans(wb, SpanSuiteOptions{{seed, pick(cfg, 200)}, sc.local});
  if (name == "bipullback") return suite_bipullback(wb, BipullbackOptions{{seed, pick(cfg, 100)}, sc.competitors});
  if (name == "symmetry" || name == "stacking" || name == "v-conditions") {
    FakePullbackOptions opt;
    opt.scope = InputScope{{seed, pick(cfg, 200)}, sc.exhaustive, sc.fake_bound};
    opt.v_samples = pick(cfg, 100);
    opt.competitor_bound = sc.competitors;
    if (!sc.exhaustive) opt.mono_scope = InputScope{{seed, 0}, true, sc.fake_bound};
    if (name == "symmetry") return suite_symmetry(wb, opt);
    if (name == "stacking") return suite_stacking(wb, opt);
    return suite_v_conditions(wb, opt);
  }
  if (name == "associativity" || name == "rrr") {
    RelationOptions opt;
    opt.scope = InputScope{{seed, pick(cfg, name == "rrr" ? 200 : 500)}, sc.exhaustive,
                           name == "rrr" ? sc.rrr_bound : sc.relation_bound};
    opt.key_bound = sc.key_bound;
    if (name == "rrr") return suite_rrr(wb, opt);
    return suite_associativity(wb, opt);
  }
  if (name == "goursat") {
    if constexpr (std::is_same_v<C, finab::FinAb>) {
      return finab::suite_goursat(wb, CheckOptions{seed, pick(cfg, 200)});
    } else {
      throw ConfigError("suite goursat needs --instance finab");
    }
  }
  throw ConfigError("unknown suite '" + name + "'");
}

/// Calls `fn` with the instance named in the config.
template <class F>
int with_instance(const RunConfig& cfg, F&& fn) {
  if (cfg.instance == "finab") {
    if (cfg.max_order < 1) throw ConfigError("--max-order must be positive");
    return fn(finab::FinAb(cfg.max_order));
  }
  if (cfg.instance == "pinj") {
    if (cfg.max_size < 1) throw ConfigError("--max-size must be positive");
    return fn(pinj::PartialInjections(cfg.max_size));
  }
  const std::string prefix = "groupoid:";
  if (cfg.instance.rfind(prefix, 0) == 0) {
    const std::string path = cfg.instance.substr(prefix.size());
    const GroupTable table = at_path(path, [&] { return group_table_from_json(read_json_file(path)); });
    return fn(at_path(path, [&] { return groupoid_instance(table); }));
  }
  throw ConfigError("unknown instance '" + cfg.instance + "' (finab, pinj or groupoid:<file>)");
}

void check_instance_tag(const json& doc, const RunConfig& cfg, std::string_view kind) {
  if (!doc.contains("instance")) return;
  const std::string tag = doc.at("instance").is_string() ? doc.at("instance").get<std::string>() : "";
  if (tag != kind) throw ConfigError("input is tagged \"" + tag + "\" but --instance is " + cfg.instance);
}

class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void write(const std::string& text) {
    if (cfg_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.out);
    if (!f) throw ConfigError("cannot write " + cfg_.out);
    f << text;
  }

  void report(const SuiteReport& r) {
    if (cfg_.format == "dot") throw ConfigError("--format dot is only available for fake-pullback");
    write(cfg_.format == "text" ? r.to_text() : r.to_json().dump(2) + "\n");
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

int cmd_suite(const RunConfig& cfg, const std::string& name, std::ostream& out) {
  if (name != "axioms" && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw ConfigError("unknown suite '" + name + "'");
  return with_instance(cfg, [&](const auto& c) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport r = run_suite(c, name, cfg);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Emitter(cfg, out).report(r);
    return r.passed() ? 0 : 1;
  });
}

int cmd_fake_pullback(const RunConfig& cfg, const std::string& file, std::ostream& out) {
  const json doc = read_json_file(file);
  return with_instance(cfg, [&](const auto& c) {
    using C = std::decay_t<decltype(c)>;
    check_instance_tag(doc, cfg, C::kName);
    if (!doc.is_object() || !doc.contains("f") || !doc.contains("g"))
      throw ConfigError(file + ": cospan file must have \"f\" and \"g\"");
    const EMSpan<C> f = at_path(file + ": f", [&] { return span_from_json(c, doc.at("f")); });
    const EMSpan<C> g = at_path(file + ": g", [&] { return span_from_json(c, doc.at("g")); });
    if (f.tgt != g.tgt) throw ConfigError(file + ": f and g do not share a target");
    Workbench<C> wb(c);
    const auto fp = fake_pullback(c, f, g);
    const GridCertificate cert = certify_grid(wb.cache, fp.grid, wb.tests);
    Emitter em(cfg, out);
    if (cfg.format == "dot") {
      em.write(grid_to_dot(c, fp.grid, &cert));
    } else if (cfg.format == "text") {
      std::ostringstream s;
      s << "fake pullback over " << c.describe(f.tgt) << "\n"
        << "  Q = " << c.describe(fp.grid.q) << "\n"
        << "  left leg  Q <- X = " << c.describe(fp.grid.x) << " -> U = " << c.describe(fp.grid.u) << "\n"
        << "  right leg Q <- Y = " << c.describe(fp.grid.y) << " -> V = " << c.describe(fp.grid.v) << "\n"
        << "  certificate " << (cert.ok() ? "ok" : "FAILED") << " " << cert.to_json().dump() << "\n";
      em.write(s.str());
    } else {
      json j = fake_pullback_to_json(c, fp);
      j["instance"] = C::kName;
      j["certificate"] = cert.to_json();
      em.write(j.dump(2) + "\n");
    }
    return cert.ok() ? 0 : 1;
  });
}

int cmd_compose(const RunConfig& cfg, const std::string& file, std::ostream& out) {
  const json doc = read_json_file(file);
  return with_instance(cfg, [&](const auto& c) {
    using C = std::decay_t<decltype(c)>;
    check_instance_tag(doc, cfg, C::kName);
    if (!doc.is_object() || !doc.contains("relations") || !doc.at("relations").is_array() ||
        doc.at("relations").empty())
      throw ConfigError(file + ": expected a non-empty \"relations\" array");
    std::vector<Relation<C>> rs;
    for (std::size_t k = 0; k < doc.at("relations").size(); ++k)
      rs.push_back(at_path(file + ": relations[" + std::to_string(k) + "]",
                           [&] { return relation_from_json(c, doc.at("relations").at(k)); }));
    Relation<C> acc = rs.front();
    for (std::size_t k = 1; k < rs.size(); ++k) {
      if (rs[k].x != acc.z)
        throw ConfigError(file + ": relations[" + std::to_string(k) + "] does not start where the previous ends");
      acc = rel_compose(c, rs[k], acc);
    }
    if (cfg.format == "dot") throw ConfigError("--format dot is only available for fake-pullback");
    json j = {{"instance", C::kName}, {"composite", relation_to_json(c, acc)}};
    if constexpr (std::is_same_v<C, finab::FinAb>) j["subgroup"] = finab::subgroup_to_json(finab::goursat_to_subgroup(acc));
    if (cfg.format == "text") {
      std::ostringstream s;
      s << "composite " << c.describe(acc.x) << " -/-> " << c.describe(acc.z) << " through Y = " << c.describe(acc.y)
        << "\n";
      if (j.contains("subgroup")) s << "subgroup " << j["subgroup"].dump() << "\n";
      Emitter(cfg, out).write(s.str());
    } else {
      Emitter(cfg, out).write(j.dump(2) + "\n");
    }
    return 0;
  });
}

std::uint64_t env_seed() {
  const char* s = std::getenv("SPANCAT_SEED");
  if (!s || !*s) return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("SPANCAT_SEED is not an unsigned integer: ") + s);
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"associativity", "stacking",   "symmetry", "goursat", "rrr",
                                              "v-conditions",  "bipullback", "spans"};
  return names;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spans, fake pullbacks and relations over factorization systems", "spancat"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<std::uint64_t> seed;
  std::string suite_flag, file, suite_name;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--instance", cfg.instance, "finab, pinj or groupoid:<table.json>");
    sub->add_option("--max-order", cfg.max_order, "largest group order in the finab catalog");
    sub->add_option("--max-size", cfg.max_size, "largest set in the pinj catalog");
    sub->add_option("--samples", cfg.samples, "samples per sampled check");
    sub->add_option("--seed", seed, "random seed (falls back to SPANCAT_SEED, then 0)");
    sub->add_option("--out", cfg.out, "output file (default: standard output)");
    sub->add_option("--format", cfg.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
  };
  CLI::App* axioms = app.add_subcommand("check-axioms", "factorization-system axioms, pasting and joint monicity");
  common(axioms);
  CLI::App* fpb = app.add_subcommand("fake-pullback", "fake pullback of a cospan read from a JSON file");
  common(fpb);
  fpb->add_option("file", file, "cospan file {\"f\": span, \"g\": span}")->required();
  CLI::App* comp = app.add_subcommand("compose", "compose relations read from a JSON file");
  common(comp);
  comp->add_option("file", file, "{\"relations\": [r1, r2, ...]}, applied left to right")->required();
  CLI::App* suite = app.add_subcommand("suite", "run a named property suite");
  common(suite);
  suite->add_option("name", suite_name, "suite name");
  suite->add_option("--suite", suite_flag, "suite name");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    cfg.seed = seed ? *seed : env_seed();
    if (axioms->parsed()) return cmd_suite(cfg, "axioms", out);
    if (fpb->parsed()) return cmd_fake_pullback(cfg, file, out);
    if (comp->parsed()) return cmd_compose(cfg, file, out);
    const std::string name = suite_name.empty() ? suite_flag : suite_name;
    if (name.empty()) throw ConfigError("suite: give a suite name");
    if (!suite_name.empty() && !suite_flag.empty() && suite_name != suite_flag)
      throw ConfigError("suite: positional name and --suite disagree");
    return cmd_suite(cfg, name, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InstanceError& e) {
    err << "instance error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace spancat::cli
