#pragma once

#include <map>
#include <string>
#include <vector>

#include "spancat/fakepb/fakepb_checks.hpp"
#include "spancat/relcalc/oracles.hpp"
#include "spancat/relcalc/relation.hpp"

namespace spancat {

/// X <-m- U -d->> Y <<-e- V -n-> Z from random class members, with X fixed.
template <SuitableCategory C>
Relation<C> random_relation_from(Sampler<C>& s, const typename C::Object& x) {
  const C& c = s.cat();
  const auto m = s.m_into(x);
  const auto d = s.e_from(c.dom(m));
  const auto e = s.e_into(c.cod(d));
  const auto n = s.m_from(c.dom(e));
  return make_relation(make_span(c, d, m), make_span(c, e, n));
}

template <SuitableCategory C>
Relation<C> random_relation(Sampler<C>& s) {
  return random_relation_from(s, s.object());
}

/// One relation per end-fixed iso class between pool objects of
/// cardinality at most `bound`, grouped by source.
template <SuitableCategory C>
  requires HasSpanKey<C> && HasZigZagKey<C>
std::map<typename C::Object, std::vector<Relation<C>>> all_relations(Workbench<C>& wb, std::size_t bound) {
  const C& c = wb.cat;
  const auto objs = wb.pool_up_to(bound);
  std::map<typename C::Object, std::vector<Relation<C>>> out;
  for (const auto& x : objs)
    for (const auto& z : objs) {
      using Key = decltype(zigzag_key(c, std::declval<Relation<C>>()));
      std::set<Key> seen;
      for (const auto& y : objs) {
        const auto ls = spans_between(wb.cache, y, x, wb.pool);
        const auto rs = spans_between(wb.cache, y, z, wb.pool);
        for (const auto& l : ls)
          for (const auto& r : rs) {
            Relation<C> rel = make_relation(l, r);
            if (seen.insert(zigzag_key(c, rel)).second) out[x].push_back(std::move(rel));
          }
      }
    }
  return out;
}

template <SuitableCategory C>
nlohmann::json dump_relations(const C& c, std::initializer_list<std::pair<const char*, const Relation<C>*>> rs) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, r] : rs) j[name] = relation_to_json(c, *r);
  return j;
}

template <SuitableCategory C>
  requires HasSpanKey<C> && HasZigZagKey<C>
std::vector<Relation<C>> relation_inputs(Workbench<C>& wb, const InputScope& sc) {
  std::vector<Relation<C>> out;
  if (sc.exhaustive) {
    for (auto& [x, rs] : all_relations(wb, sc.bound))
      for (auto& r : rs) out.push_back(std::move(r));
    return out;
  }
  auto s = wb.sampler(sc.opt.seed);
  for (std::size_t k = 0; k < sc.opt.samples; ++k) out.push_back(random_relation(s));
  return out;
}

/// rel_identity is a two-sided unit.
template <SuitableCategory C>
  requires HasSpanKey<C> && HasZigZagKey<C>
CheckReport check_rel_units(Workbench<C>& wb, const InputScope& sc) {
  CheckReport rep("relation-units", C::kName, sc.opt.seed);
  const C& c = wb.cat;
  for (const auto& r : relation_inputs(wb, sc)) {
    const auto a = rel_compose(c, r, rel_identity(c, r.x));
    const auto b = rel_compose(c, rel_identity(c, r.z), r);
    const bool ok = rel_iso_eq(wb.cache, a, r) && rel_iso_eq(wb.cache, b, r) && rel_iso_eq_by_search(wb.cache, a, r) &&
                    rel_iso_eq_by_search(wb.cache, b, r);
    rep.record(ok, dump_relations(c, {{"r", &r}}));
  }
  rep.note = sc.describe();
  return rep;
}

/// The keyed comparison and the iso search agree on every pair of
/// parallel relations.
template <SuitableCategory C>
  requires HasSpanKey<C> && HasZigZagKey<C>
CheckReport check_rel_key_agreement(Workbench<C>& wb, std::size_t bound, std::uint64_t seed = 0) {
  CheckReport rep("relation-key-agreement", C::kName, seed);
  const C& c = wb.cat;
  std::size_t equal = 0;
  for (const auto& [x, rs] : all_relations(wb, bound))
    for (const auto& a : rs)
      for (const auto& b : rs) {
        if (a.z != b.z) continue;
        const bool keyed = rel_iso_eq(wb.cache, a, b);
        if (keyed) ++equal;
        rep.record(keyed == rel_iso_eq_by_search(wb.cache, a, b), dump_relations(c, {{"a", &a}, {"b", &b}}));
      }
  rep.note = "exhaustive, cardinality <= " + std::to_string(bound) + ", " + std::to_string(equal) + " iso pairs";
  return rep;
}

namespace detail {

template <SuitableCategory C>
struct RelTriple {
  Relation<C> r1, r2, r3;
};

template <SuitableCategory C>
  requires HasSpanKey<C> && HasZigZagKey<C>
std::vector<RelTriple<C>> triple_inputs(Workbench<C>& wb, const InputScope& sc) {
  std::vector<RelTriple<C>> out;
  if (sc.exhaustive) {
    const auto from = all_relations(wb, sc.bound);
    for (const auto& [x, r1s] : from)
      for (const auto& r1 : r1s)
        for (const auto& r2 : from.at(r1.z))
          for (const auto& r3 : from.at(r2.z)) out.push_back({r1, r2, r3});
    return out;
  }
  auto s = wb.sampler(sc.opt.seed);
  for (std::size_t k = 0; k < sc.opt.samples; ++k) {
    Relation<C> r1 = random_relation(s);
    Relation<C> r2 = random_relation_from(s, r1.z);
    Relation<C> r3 = random_relation_from(s, r2.z);
    out.push_back({std::move(r1), std::move(r2), std::move(r3)});
  }
  return out;
}

template <SuitableCategory C>
  requires HasSpanKey<C> && HasZigZagKey<C>
std::vector<std::pair<Relation<C>, Relation<C>>> pair_inputs(Workbench<C>& wb, const InputScope& sc) {
  std::vector<std::pair<Relation<C>, Relation<C>>> out;
  if (sc.exhaustive) {
    const auto from = all_relations(wb, sc.bound);
    for (const auto& [x, r1s] : from)
      for (const auto& r1 : r1s)
        for (const auto& r2 : from.at(r1.z)) out.emplace_back(r1, r2);
    return out;
  }
  auto s = wb.sampler(sc.opt.seed);
  for (std::size_t k = 0; k < sc.opt.samples; ++k) {
    Relation<C> r1 = random_relation(s);
    Relation<C> r2 = random_relation_from(s, r1.z);
    out.emplace_back(std::move(r1), std::move(r2));
  }
  return out;
}

}  // namespace detail

/// (r3 r2) r1 ~ r3 (r2 r1); with an oracle, both sides also equal the
/// classical composite of the inputs.
template <SuitableCategory C>
  requires HasSpanKey<C> && HasZigZagKey<C>
CheckReport check_rel_associativity(Workbench<C>& wb, const InputScope& sc, std::size_t search_samples = 100) {
  CheckReport rep("associativity", C::kName, sc.opt.seed);
  const C& c = wb.cat;
  std::size_t k = 0;
  for (const auto& [r1, r2, r3] : detail::triple_inputs(wb, sc)) {
    const auto a = rel_compose(c, rel_compose(c, r3, r2), r1);
    const auto b = rel_compose(c, r3, rel_compose(c, r2, r1));
    bool ok = rel_iso_eq(wb.cache, a, b);
    if (ok && k++ < search_samples) ok = rel_iso_eq_by_search(wb.cache, a, b);
    nlohmann::json dump = nullptr;
    if constexpr (HasCompositionOracle<C>) {
      using O = CompositionOracle<C>;
      const auto want = O::compose(c, O::of(c, r3), O::compose(c, O::of(c, r2), O::of(c, r1)));
      ok = ok && O::equal(O::of(c, a), want) && O::equal(O::of(c, b), want);
      if (!ok) dump = {{"oracle", O::dump(want)}, {"left_bracketing", O::dump(O::of(c, a))},
                       {"right_bracketing", O::dump(O::of(c, b))}};
    }
    if (!ok) {
      if (dump.is_null()) dump = nlohmann::json::object();
      dump["relations"] = dump_relations(c, {{"r1", &r1}, {"r2", &r2}, {"r3", &r3}});
    }
    rep.record(ok, dump);
  }
  rep.note = sc.describe();
  if constexpr (HasCompositionOracle<C>) rep.note += ", oracle " + std::string(CompositionOracle<C>::kName);
  return rep;
}

/// The oracle composite of two relations matches rel_compose.
template <SuitableCategory C>
  requires HasSpanKey<C> && HasZigZagKey<C> && HasCompositionOracle<C>
CheckReport check_rel_oracle(Workbench<C>& wb, const InputScope& sc) {
  using O = CompositionOracle<C>;
  CheckReport rep("composition-oracle", C::kName, sc.opt.seed);
  const C& c = wb.cat;
  for (const auto& [r1, r2] : detail::pair_inputs(wb, sc)) {
    const auto got = O::of(c, rel_compose(c, r2, r1));
    const auto want = O::compose(c, O::of(c, r2), O::of(c, r1));
    nlohmann::json dump = nullptr;
    if (!O::equal(got, want))
      dump = {{"got", O::dump(got)}, {"want", O::dump(want)}, {"relations", dump_relations(c, {{"r1", &r1}, {"r2", &r2}})}};
    rep.record(O::equal(got, want), dump);
  }
  rep.note = sc.describe() + ", oracle " + std::string(O::kName);
  return rep;
}

/// graph(g . f) ~ graph(g) graph(f) and graph(1) ~ rel_identity.
template <SuitableCategory C>
  requires HasZigZagKey<C>
CheckReport check_graph_functoriality(Workbench<C>& wb, const CheckOptions& opt) {
  CheckReport rep("graph-functoriality", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const auto f = s.any_from(s.object());
    const auto g = s.any_from(c.cod(f));
    const bool ok =
        rel_iso_eq(wb.cache, graph_relation(c, c.compose(g, f)), rel_compose(c, graph_relation(c, g), graph_relation(c, f))) &&
        rel_iso_eq(wb.cache, graph_relation(c, c.identity(c.dom(f))), rel_identity(c, c.dom(f)));
    rep.record(ok, dump_mors(c, {{"f", &f}, {"g", &g}}));
  }
  return rep;
}

/// r r° r ~ r, after a properness pre-check; reverse is an involution.
template <SuitableCategory C>
  requires HasSpanKey<C> && HasZigZagKey<C>
CheckReport check_rrr(Workbench<C>& wb, const InputScope& sc) {
  CheckReport rep("rrr", C::kName, sc.opt.seed);
  const C& c = wb.cat;
  if (!check_proper(wb, CheckOptions{sc.opt.seed, 200}).passed()) {
    rep.skip("instance failed the properness pre-check");
    return rep;
  }
  for (const auto& r : relation_inputs(wb, sc)) {
    const auto rrr = rel_compose(c, r, rel_compose(c, rel_reverse(r), r));
    const bool ok = rel_iso_eq(wb.cache, rrr, r) && rel_iso_eq_by_search(wb.cache, rrr, r);
    rep.record(ok, dump_relations(c, {{"r", &r}}));
  }
  rep.note = sc.describe();
  return rep;
}

template <SuitableCategory C>
  requires HasSpanKey<C> && HasZigZagKey<C>
CheckReport check_rel_reverse(Workbench<C>& wb, const InputScope& sc) {
  CheckReport rep("reverse", C::kName, sc.opt.seed);
  const C& c = wb.cat;
  for (const auto& r : relation_inputs(wb, sc)) {
    const auto rr = rel_reverse(rel_reverse(r));
    const auto id = rel_identity(c, r.x);
    const bool ok = rr.x == r.x && rr.z == r.z && rr.left.d == r.left.d && rr.left.m == r.left.m &&
                    rr.right.d == r.right.d && rr.right.m == r.right.m && rel_iso_eq(wb.cache, rel_reverse(id), id);
    rep.record(ok, dump_relations(c, {{"r", &r}}));
  }
  rep.note = sc.describe();
  return rep;
}

struct RelationOptions {
  InputScope scope;
  std::size_t key_bound = 2;
  std::size_t graph_samples = 200;
};

template <SuitableCategory C>
  requires HasSpanKey<C> && HasZigZagKey<C>
SuiteReport suite_associativity(Workbench<C>& wb, const RelationOptions& opt) {
  SuiteReport suite{"associativity", wb.name(), opt.scope.opt.seed, {}};
  suite.checks.push_back(check_rel_associativity(wb, opt.scope));
  if constexpr (HasCompositionOracle<C>) suite.checks.push_back(check_rel_oracle(wb, opt.scope));
  suite.checks.push_back(check_rel_units(wb, opt.scope));
  suite.checks.push_back(check_graph_functoriality(wb, CheckOptions{opt.scope.opt.seed, opt.graph_samples}));
  suite.checks.push_back(check_rel_key_agreement(wb, opt.key_bound, opt.scope.opt.seed));
  return suite;
}

template <SuitableCategory C>
  requires HasSpanKey<C> && HasZigZagKey<C>
SuiteReport suite_rrr(Workbench<C>& wb, const RelationOptions& opt) {
  SuiteReport suite{"rrr", wb.name(), opt.scope.opt.seed, {}};
  suite.checks.push_back(check_rrr(wb, opt.scope));
  suite.checks.push_back(check_rel_reverse(wb, opt.scope));
  return suite;
}

}  // namespace spancat
