// One PASS/FAIL line per acceptance criterion. Exit status is the number
// of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spancat/cli/cli.hpp"
#include "spancat/core/axioms.hpp"
#include "spancat/core/groupoid.hpp"
#include "spancat/fakepb/fakepb_checks.hpp"
#include "spancat/relcalc/goursat_checks.hpp"
#include "spancat/relcalc/oracles.hpp"
#include "spancat/span/span_checks.hpp"

using namespace spancat;
using finab::FinAb;
using pinj::PartialInjections;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;

  // Skipped or under-sampled reports do not count.
  void need(const CheckReport& r, std::size_t min_samples) {
    const bool good = !r.skipped && r.passed() && r.samples >= min_samples;
    ok = ok && good;
    std::ostringstream s;
    s << r.instance << "/" << r.check_name << " " << r.passes << "/" << r.samples;
    if (r.skipped) s << " skipped";
    if (r.samples < min_samples) s << " (< " << min_samples << ")";
    notes.push_back(s.str());
  }
  void need(bool cond, const std::string& what) {
    ok = ok && cond;
    notes.push_back(what + (cond ? "" : " FAILED"));
  }
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string secs(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

const CheckReport& find(const SuiteReport& s, const std::string& name) {
  for (const auto& c : s.checks)
    if (c.check_name == name) return c;
  throw std::runtime_error("no check named " + name + " in " + s.suite);
}

struct Instances {
  FinAb ab{8};
  FinAb ab4{4};
  PartialInjections pi{4};
  PartialInjections pi3{3};
  PartialInjections pi2{2};
  OneObjectGroupoid s3 = groupoid_instance(s3_group_table());
};

struct Axioms {
  SuiteReport ab, pi, s3;
  double t_ab = 0, t_pi = 0, t_s3 = 0;
};

template <class C>
SuiteReport timed_axioms(const C& c, std::size_t jointly, double& t) {
  Workbench<C> wb(c);
  Timer timer;
  SuiteReport r = check_axioms(wb, {{kSeed, 500}, 200, jointly});
  t = timer.seconds();
  return r;
}

Verdict criterion1(const Axioms& ax) {
  Verdict v;
  for (auto [rep, t] : {std::pair{&ax.ab, ax.t_ab}, {&ax.pi, ax.t_pi}, {&ax.s3, ax.t_s3}}) {
    for (const char* name : {"classes", "FS1", "FS2", "SFS1", "SFS2", "SFS3", "SFS4"}) v.need(find(*rep, name), 1);
    v.need(find(*rep, "SFS5"), 500);
    v.need(t < 60.0, rep->instance + " axioms in " + secs(t));
  }
  return v;
}

Verdict criterion2(const Axioms& ax) {
  Verdict v;
  for (const SuiteReport* rep : {&ax.ab, &ax.pi, &ax.s3}) {
    v.need(find(*rep, "pasting"), 200);
    v.need(find(*rep, "pasting-dual"), 200);
  }
  return v;
}

Verdict criterion3(const Instances& in) {
  Verdict v;
  Workbench<PartialInjections> wp(in.pi3);
  v.need(check_local_preorder(wp, 3, kSeed), 1);
  Workbench<FinAb> wa(in.ab4);
  v.need(check_local_preorder(wa, 4, kSeed), 1);
  return v;
}

template <class F>
Verdict per_instance(const Instances& in, F&& f) {
  Verdict v;
  {
    Workbench<FinAb> wb(in.ab);
    f(v, wb, std::size_t{4});
  }
  {
    Workbench<PartialInjections> wb(in.pi);
    f(v, wb, std::size_t{3});
  }
  {
    Workbench<OneObjectGroupoid> wb(in.s3);
    f(v, wb, std::size_t{1});
  }
  return v;
}

Verdict criterion4(const Instances& in) {
  return per_instance(in, [](Verdict& v, auto& wb, std::size_t) { v.need(check_exchange_square(wb, {kSeed, 200}), 200); });
}

Verdict criterion5(const Instances& in) {
  return per_instance(in, [](Verdict& v, auto& wb, std::size_t) { v.need(check_em_factor(wb, {kSeed, 200}), 200); });
}

Verdict criterion6(const Instances& in) {
  return per_instance(in, [](Verdict& v, auto& wb, std::size_t bound) {
    auto [rm, re] = check_star_bipullback(wb, {{kSeed, 100}, bound});
    v.need(rm, 100);
    v.need(re, 100);
  });
}

Verdict criterion7(const Instances& in) {
  Verdict v;
  {
    Workbench<FinAb> wb(in.ab);
    v.need(check_grid_certification(wb, {{kSeed, 200}, false, 4}), 200);
    v.need(check_fake_mono(wb, {{kSeed, 0}, true, 4}), 1);
  }
  {
    Workbench<PartialInjections> wb(in.pi);
    v.need(check_grid_certification(wb, {{kSeed, 200}, false, 4}), 200);
    v.need(check_fake_mono(wb, {{kSeed, 0}, true, 3}), 1);
  }
  {
    Workbench<OneObjectGroupoid> wb(in.s3);
    v.need(check_grid_certification(wb, {{kSeed, 200}, false, 1}), 200);
    v.need(check_fake_mono(wb, {{kSeed, 0}, true, 1}), 1);
  }
  return v;
}

Verdict criterion8(const Instances& in) {
  Verdict v;
  {
    Workbench<PartialInjections> wb(in.pi3);
    const InputScope all{{kSeed, 0}, true, 3};
    v.need(check_symmetry(wb, all), 1);
    v.need(check_identity(wb, all), 1);
    Timer t;
    v.need(check_stacking(wb, all), 1);
    v.need(t.seconds() < 120.0, "pinj stacking in " + secs(t.seconds()));
  }
  {
    Workbench<FinAb> wb(in.ab);
    const InputScope sampled{{kSeed, 200}, false, 4};
    v.need(check_symmetry(wb, sampled), 200);
    v.need(check_identity(wb, sampled), 200);
    Timer t;
    v.need(check_stacking(wb, sampled), 200);
    v.need(t.seconds() < 120.0, "finab stacking in " + secs(t.seconds()));
  }
  return v;
}

Verdict criterion9(const Instances& in) {
  Verdict v;
  {
    Workbench<FinAb> wb(in.ab);
    // the associativity check also compares both bracketings with subgroup_compose
    v.need(check_rel_associativity(wb, {{kSeed, 500}, false, 4}), 500);
  }
  {
    Workbench<PartialInjections> wb(in.pi2);
    v.need(check_rel_associativity(wb, {{kSeed, 0}, true, 2}), 1);
  }
  return v;
}

Verdict criterion10(const Instances& in) {
  Verdict v;
  v.need(finab::check_goursat_roundtrip(in.ab, 16), 1);
  Workbench<FinAb> wb(in.ab);
  v.need(finab::check_zigzag_roundtrip(wb, {kSeed, 200}), 200);
  return v;
}

Verdict criterion11(const Instances& in) {
  Verdict v;
  {
    Workbench<FinAb> wb(in.ab);
    v.need(check_rrr(wb, {{kSeed, 200}, false, 4}), 200);
  }
  {
    Workbench<PartialInjections> wb(in.pi3);
    v.need(check_rrr(wb, {{kSeed, 0}, true, 3}), 1);
  }
  return v;
}

Verdict criterion12() {
  Verdict v;
  const std::vector<std::vector<std::string>> runs{
      {"check-axioms", "--instance", "pinj", "--max-size", "3", "--samples", "100", "--seed", "7"},
      {"suite", "associativity", "--instance", "finab", "--samples", "100", "--seed", "7"},
      {"suite", "stacking", "--instance", "finab", "--samples", "50", "--seed", "7"},
      {"suite", "v-conditions", "--instance", "pinj", "--max-size", "3", "--samples", "30", "--seed", "7"},
      {"suite", "goursat", "--samples", "50", "--seed", "7"},
  };
  for (const auto& args : runs) {
    std::ostringstream a, b, ea, eb;
    const int ca = cli::run_cli(args, a, ea);
    const int cb = cli::run_cli(args, b, eb);
    std::string line;
    for (const auto& w : args) line += (line.empty() ? "" : " ") + w;
    v.need(ca == 0 && ca == cb && a.str() == b.str() && !a.str().empty(),
           line + ": byte-identical, " + std::to_string(a.str().size()) + " bytes");
  }
  return v;
}

}  // namespace

int main() {
  Instances in;
  Axioms ax;
  ax.ab = timed_axioms(in.ab, 4, ax.t_ab);
  ax.pi = timed_axioms(in.pi, 3, ax.t_pi);
  ax.s3 = timed_axioms(in.s3, 1, ax.t_s3);

  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"axiom suite", [&] { return criterion1(ax); }},
      {"pasting lemma and dual", [&] { return criterion2(ax); }},
      {"local preorder", [&] { return criterion3(in); }},
      {"exchange square", [&] { return criterion4(in); }},
      {"(E*, M_*) factorization", [&] { return criterion5(in); }},
      {"bipullback images", [&] { return criterion6(in); }},
      {"fake pullback grids", [&] { return criterion7(in); }},
      {"symmetry, identity, stacking", [&] { return criterion8(in); }},
      {"relation associativity", [&] { return criterion9(in); }},
      {"Goursat roundtrip", [&] { return criterion10(in); }},
      {"rr°r = r", [&] { return criterion11(in); }},
      {"determinism", [&] { return criterion12(); }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Timer t;
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.notes.push_back(std::string("exception: ") + e.what());
    }
    if (!v.ok) ++failed;
    std::cout << "criterion " << k + 1 << " " << (v.ok ? "PASS" : "FAIL") << ": " << criteria[k].first << " ["
              << secs(t.seconds()) << "]\n";
    for (const auto& n : v.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed;
}
