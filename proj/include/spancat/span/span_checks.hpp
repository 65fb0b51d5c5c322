#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spancat/core/axioms.hpp"
#include "spancat/span/em_span.hpp"

namespace spancat {

/// Random EM-spans built from random class members out of or into a
/// random apex.
template <SuitableCategory C>
EMSpan<C> random_span(Sampler<C>& s) {
  const auto r = s.object();
  return make_span(s.cat(), s.e_from(r), s.m_from(r));
}

template <SuitableCategory C>
EMSpan<C> random_span_from(Sampler<C>& s, const typename C::Object& u) {
  const auto d = s.e_into(u);
  return make_span(s.cat(), d, s.m_from(s.cat().dom(d)));
}

template <SuitableCategory C>
EMSpan<C> random_span_into(Sampler<C>& s, const typename C::Object& w) {
  const auto m = s.m_into(w);
  return make_span(s.cat(), s.e_from(s.cat().dom(m)), m);
}

template <SuitableCategory C>
nlohmann::json dump_spans(const C& c, std::initializer_list<std::pair<const char*, const EMSpan<C>*>> fs) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, f] : fs) j[name] = span_to_json(c, *f);
  return j;
}

/// Unit laws for span_compose with id_span.
template <SuitableCategory C>
CheckReport check_span_units(Workbench<C>& wb, const CheckOptions& opt) {
  CheckReport rep("span-units", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const EMSpan<C> f = random_span(s);
    const bool ok = span_iso_eq(c, span_compose(c, f, id_span(c, f.src)), f) &&
                    span_iso_eq(c, span_compose(c, id_span(c, f.tgt), f), f);
    rep.record(ok, dump_spans(c, {{"f", &f}}));
  }
  return rep;
}

/// (h . g) . f and h . (g . f) are iso.
template <SuitableCategory C>
CheckReport check_span_associativity(Workbench<C>& wb, const CheckOptions& opt) {
  CheckReport rep("span-associativity", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const EMSpan<C> f = random_span(s);
    const EMSpan<C> g = random_span_from(s, f.tgt);
    const EMSpan<C> h = random_span_from(s, g.tgt);
    const EMSpan<C> a = span_compose(c, span_compose(c, h, g), f);
    const EMSpan<C> b = span_compose(c, h, span_compose(c, g, f));
    rep.record(span_iso_eq(c, a, b) && span_iso_eq_by_cell(c, a, b), dump_spans(c, {{"f", &f}, {"g", &g}, {"h", &h}}));
  }
  return rep;
}

/// Lifts are pseudo-functorial: (m2 m1)_* ~ m2_* m1_* and
/// (e2 e1)^* ~ e1^* e2^*.
template <SuitableCategory C>
CheckReport check_lift_functoriality(Workbench<C>& wb, const CheckOptions& opt) {
  CheckReport rep("lift-functoriality", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const auto x = s.object();
    const auto m1 = s.m_from(x);
    const auto m2 = s.m_from(c.cod(m1));
    const auto e1 = s.e_from(x);
    const auto e2 = s.e_from(c.cod(e1));
    const bool ok =
        span_iso_eq(c, lift_m(c, c.compose(m2, m1)), span_compose(c, lift_m(c, m2), lift_m(c, m1))) &&
        span_iso_eq(c, lift_e(c, c.compose(e2, e1)), span_compose(c, lift_e(c, e1), lift_e(c, e2))) &&
        span_iso_eq(c, lift_m(c, c.identity(x)), id_span(c, x)) && span_iso_eq(c, lift_e(c, c.identity(x)), id_span(c, x));
    rep.record(ok, dump_mors(c, {{"m1", &m1}, {"m2", &m2}, {"e1", &e1}, {"e2", &e2}}));
  }
  return rep;
}

/// Exhaustive over all EM-spans between pool objects of cardinality at most
/// `bound`: each parallel pair has at most one cell, the direct solver
/// agrees with enumeration, and cells between M_* members, between E^*
/// members and from E^* to M_* are invertible.
template <SuitableCategory C>
CheckReport check_local_preorder(Workbench<C>& wb, std::size_t bound, std::uint64_t seed = 0) {
  CheckReport rep("local-preorder", C::kName, seed);
  const C& c = wb.cat;
  const auto objs = wb.pool_up_to(bound);
  auto in_m_star = [&](const EMSpan<C>& f) { return c.classify(f.d).is_iso(); };
  auto in_e_star = [&](const EMSpan<C>& f) { return c.classify(f.m).is_iso(); };
  std::size_t with_cell = 0;
  for (const auto& u : objs)
    for (const auto& w : objs) {
      const auto spans = all_spans_between(wb.cache, u, w, wb.pool);
      for (const auto& f : spans)
        for (const auto& g : spans) {
          const auto cells = all_cells(wb.cache, f, g);
          const auto solved = cell_between(c, f, g);
          bool ok = cells.size() <= 1 && solved.has_value() == !cells.empty();
          if (ok && solved) {
            ok = *solved == cells.front();
            const bool must_be_iso = (in_m_star(f) && in_m_star(g)) || (in_e_star(f) && in_e_star(g)) ||
                                     (in_e_star(f) && in_m_star(g));
            if (must_be_iso) ok = ok && c.classify(*solved).is_iso();
            ++with_cell;
          }
          rep.record(ok, dump_spans(c, {{"f", &f}, {"g", &g}}));
        }
    }
  rep.note = "exhaustive, cardinality <= " + std::to_string(bound) + ", " + std::to_string(with_cell) + " pairs with a cell";
  return rep;
}

/// Exchange square: exactly one cell upper => lower, found by the solver,
/// and every alternative (E, M) factorization of e . m through a pool
/// object gives an iso-equal square (checked on a subsample).
template <SuitableCategory C>
CheckReport check_exchange_square(Workbench<C>& wb, const CheckOptions& opt, std::size_t uniqueness_samples = 50) {
  using Mor = typename C::Morphism;
  CheckReport rep("exchange-square", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Mor m = s.m_from(s.object());
    const Mor e = s.e_from(c.cod(m));
    bool ok = true;
    try {
      const ExchangeSquare<C> ex = exchange_square(c, m, e);
      const auto cells = all_cells(wb.cache, ex.upper, ex.lower);
      ok = cells.size() == 1 && cells.front() == ex.cell && c.compose(ex.fact.m, ex.fact.e) == c.compose(e, m) &&
           c.classify(ex.fact.e).in_e && c.classify(ex.fact.m).in_m;
      if (ok && k < uniqueness_samples) {
        const Mor em = c.compose(e, m);
        for (const auto& t : wb.pool)
          for (const Mor& e2 : wb.cache.e_homs(c.dom(m), t))
            for (const Mor& m2 : wb.cache.m_homs(t, c.cod(e))) {
              if (c.compose(m2, e2) != em) continue;
              const EMSpan<C> upper2 = span_compose(c, lift_m(c, m), lift_e(c, e2));
              const EMSpan<C> lower2 = span_compose(c, lift_e(c, e), lift_m(c, m2));
              const Mor phi = c.fill_diagonal(Square<C>{ex.fact.e, e2, ex.fact.m, m2});
              ok = ok && c.classify(phi).is_iso() && cell_between(c, upper2, lower2).has_value();
            }
      }
    } catch (const std::exception&) {
      ok = false;
    }
    rep.record(ok, dump_mors(c, {{"m", &m}, {"e", &e}}));
  }
  return rep;
}

/// (E^*, M_*) factorization: m_* . d^* recomposes to f, and the two
/// factors lie in the starred classes.
template <SuitableCategory C>
CheckReport check_em_factor(Workbench<C>& wb, const CheckOptions& opt) {
  CheckReport rep("em-factorization", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const EMSpan<C> f = random_span(s);
    const EMFactorization<C> fa = em_factor_span(c, f);
    const EMSpan<C> back = span_compose(c, fa.m_star, fa.e_star);
    const bool ok = span_iso_eq(c, back, f) && span_iso_eq_by_cell(c, back, f) && c.classify(fa.e_star.m).is_iso() &&
                    c.classify(fa.m_star.d).is_iso() && fa.e_star.tgt == fa.m_star.src;
    rep.record(ok, dump_spans(c, {{"f", &f}}));
  }
  return rep;
}

/// Bounded bipullback property of the square p1 : P -> A, p2 : P -> B over
/// f : A -> C, g : B -> C in the locally preordered Spn(E, M): the square
/// commutes up to iso, and for each competitor object T every pair of spans
/// (a, b) with f a ~ g b has exactly one mediator h : T -> P up to iso.
template <SuitableCategory C>
  requires HasSpanKey<C>
bool bipullback_holds(HomCache<C>& cache, const EMSpan<C>& p1, const EMSpan<C>& p2, const EMSpan<C>& f,
                      const EMSpan<C>& g, const std::vector<typename C::Object>& competitors,
                      const std::vector<typename C::Object>& apexes) {
  const C& c = cache.cat();
  if (!span_iso_eq(c, span_compose(c, f, p1), span_compose(c, g, p2))) return false;
  using Key = decltype(span_key(c, f));
  for (const auto& t : competitors) {
    std::map<Key, std::vector<Key>> by_a, by_b;
    for (const auto& a : spans_between(cache, t, f.src, apexes))
      by_a[span_key(c, span_compose(c, f, a))].push_back(span_key(c, a));
    for (const auto& b : spans_between(cache, t, g.src, apexes))
      by_b[span_key(c, span_compose(c, g, b))].push_back(span_key(c, b));
    std::map<std::pair<Key, Key>, std::size_t> mediators;
    for (const auto& h : spans_between(cache, t, p1.src, apexes))
      ++mediators[{span_key(c, span_compose(c, p1, h)), span_key(c, span_compose(c, p2, h))}];
    std::size_t pairs = 0;
    for (const auto& [key, as] : by_a) {
      auto it = by_b.find(key);
      if (it == by_b.end()) continue;
      for (const auto& ka : as)
        for (const auto& kb : it->second) {
          ++pairs;
          auto mt = mediators.find({ka, kb});
          if (mt == mediators.end() || mt->second != 1) return false;
        }
    }
    if (pairs != mediators.size()) return false;
  }
  return true;
}

struct BipullbackOptions {
  CheckOptions base{0, 100};
  std::size_t competitor_bound = 4;
};

/// All-M pullbacks lifted by (-)_* (first report) and all-E pushouts lifted
/// by (-)^* (second report) are bipullbacks; the constructed legs lie in
/// M_* and E^* respectively.
template <SuitableCategory C>
  requires HasSpanKey<C>
std::pair<CheckReport, CheckReport> check_star_bipullback(Workbench<C>& wb, const BipullbackOptions& opt) {
  using Mor = typename C::Morphism;
  const auto& seed = opt.base.seed;
  CheckReport rm("bipullback-m", C::kName, seed), re("bipullback-e", C::kName, seed);
  auto s = wb.sampler(seed);
  const C& c = wb.cat;
  const auto competitors = wb.pool_up_to(opt.competitor_bound);
  for (std::size_t k = 0; k < opt.base.samples; ++k) {
    const auto cc = s.object();
    const Mor m1 = s.m_into(cc);
    const Mor m2 = s.m_into(cc);
    const Cone<C> pb = c.pullback_along_m(m1, m2);
    const bool classes = c.classify(pb.leg1).in_m && c.classify(pb.leg2).in_m;
    const bool ok = classes && bipullback_holds(wb.cache, lift_m(c, pb.leg1), lift_m(c, pb.leg2), lift_m(c, m1),
                                                lift_m(c, m2), competitors, wb.pool);
    rm.record(ok, dump_mors(c, {{"m1", &m1}, {"m2", &m2}}));
  }
  for (std::size_t k = 0; k < opt.base.samples; ++k) {
    const auto d0 = s.object();
    const Mor e1 = s.e_from(d0);
    const Mor e2 = s.e_from(d0);
    const Cone<C> po = c.pushout_along_e(e1, e2);
    const bool classes = c.classify(po.leg1).in_e && c.classify(po.leg2).in_e;
    const bool ok = classes && bipullback_holds(wb.cache, lift_e(c, po.leg1), lift_e(c, po.leg2), lift_e(c, e1),
                                                lift_e(c, e2), competitors, wb.pool);
    re.record(ok, dump_mors(c, {{"e1", &e1}, {"e2", &e2}}));
  }
  const std::string note = "competitors of cardinality <= " + std::to_string(opt.competitor_bound);
  rm.note = note;
  re.note = note;
  return {rm, re};
}

struct SpanSuiteOptions {
  CheckOptions base{0, 200};
  std::size_t local_bound = 3;
};

/// Units, associativity, lifts, local preorder, exchange square and the
/// (E^*, M_*) factorization.
template <SuitableCategory C>
  requires HasSpanKey<C>
SuiteReport suite_spans(Workbench<C>& wb, const SpanSuiteOptions& opt) {
  SuiteReport suite{"spans", wb.name(), opt.base.seed, {}};
  suite.checks.push_back(check_span_units(wb, opt.base));
  suite.checks.push_back(check_span_associativity(wb, opt.base));
  suite.checks.push_back(check_lift_functoriality(wb, opt.base));
  suite.checks.push_back(check_local_preorder(wb, opt.local_bound, opt.base.seed));
  suite.checks.push_back(check_exchange_square(wb, opt.base));
  suite.checks.push_back(check_em_factor(wb, opt.base));
  return suite;
}

template <SuitableCategory C>
  requires HasSpanKey<C>
SuiteReport suite_bipullback(Workbench<C>& wb, const BipullbackOptions& opt) {
  SuiteReport suite{"bipullback", wb.name(), opt.base.seed, {}};
  auto [rm, re] = check_star_bipullback(wb, opt);
  suite.checks.push_back(rm);
  suite.checks.push_back(re);
  return suite;
}

}  // namespace spancat
