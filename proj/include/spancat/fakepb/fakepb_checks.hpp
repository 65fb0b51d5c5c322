#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spancat/fakepb/fake_pullback.hpp"
#include "spancat/span/span_checks.hpp"

namespace spancat {

/// Which inputs a property check runs over: every iso class of spans
/// between pool objects of cardinality at most `bound`, or `opt.samples`
/// random ones.
struct InputScope {
  CheckOptions opt;
  bool exhaustive = false;
  std::size_t bound = 3;

  std::string describe() const {
    return exhaustive ? "exhaustive, cardinality <= " + std::to_string(bound)
                      : std::to_string(opt.samples) + " samples";
  }
};

template <SuitableCategory C>
struct Cospan {
  EMSpan<C> f;  // U -> W
  EMSpan<C> g;  // V -> W
};

template <SuitableCategory C>
struct StackTriple {
  EMSpan<C> t;  // X -> U
  EMSpan<C> r;  // U -> W
  EMSpan<C> s;  // V -> W
};

template <SuitableCategory C>
  requires HasSpanKey<C>
std::vector<EMSpan<C>> spans_into(Workbench<C>& wb, const typename C::Object& w, std::size_t bound) {
  std::vector<EMSpan<C>> out;
  for (const auto& u : wb.pool_up_to(bound))
    for (auto& f : spans_between(wb.cache, u, w, wb.pool)) out.push_back(std::move(f));
  return out;
}

template <SuitableCategory C>
  requires HasSpanKey<C>
std::vector<EMSpan<C>> span_inputs(Workbench<C>& wb, const InputScope& sc) {
  std::vector<EMSpan<C>> out;
  if (sc.exhaustive) {
    for (const auto& w : wb.pool_up_to(sc.bound))
      for (auto& f : spans_into(wb, w, sc.bound)) out.push_back(std::move(f));
    return out;
  }
  auto s = wb.sampler(sc.opt.seed);
  for (std::size_t k = 0; k < sc.opt.samples; ++k) out.push_back(random_span(s));
  return out;
}

template <SuitableCategory C>
  requires HasSpanKey<C>
std::vector<Cospan<C>> cospan_inputs(Workbench<C>& wb, const InputScope& sc) {
  std::vector<Cospan<C>> out;
  if (sc.exhaustive) {
    for (const auto& w : wb.pool_up_to(sc.bound)) {
      const auto into = spans_into(wb, w, sc.bound);
      for (const auto& f : into)
        for (const auto& g : into) out.push_back({f, g});
    }
    return out;
  }
  auto s = wb.sampler(sc.opt.seed);
  for (std::size_t k = 0; k < sc.opt.samples; ++k) {
    const auto w = s.object();
    EMSpan<C> f = random_span_into(s, w);
    out.push_back({std::move(f), random_span_into(s, w)});
  }
  return out;
}

template <SuitableCategory C>
  requires HasSpanKey<C>
std::vector<StackTriple<C>> stack_inputs(Workbench<C>& wb, const InputScope& sc) {
  std::vector<StackTriple<C>> out;
  if (sc.exhaustive) {
    for (const auto& [r, s] : cospan_inputs(wb, sc))
      for (const auto& t : spans_into(wb, r.src, sc.bound)) out.push_back({t, r, s});
    return out;
  }
  auto s = wb.sampler(sc.opt.seed);
  for (std::size_t k = 0; k < sc.opt.samples; ++k) {
    const auto w = s.object();
    EMSpan<C> r = random_span_into(s, w);
    EMSpan<C> sp = random_span_into(s, w);
    EMSpan<C> t = random_span_into(s, r.src);
    out.push_back({std::move(t), std::move(r), std::move(sp)});
  }
  return out;
}

/// Every grid passes the four square invariants, the class invariants and
/// the invertibility transfers d -> s and m -> j.
template <SuitableCategory C>
  requires HasSpanKey<C>
CheckReport check_grid_certification(Workbench<C>& wb, const InputScope& sc) {
  CheckReport rep("grid-certification", C::kName, sc.opt.seed);
  const C& c = wb.cat;
  std::size_t d_iso = 0, m_iso = 0;
  for (const auto& [f, g] : cospan_inputs(wb, sc)) {
    const auto fp = fake_pullback(c, f, g);
    const GridCertificate cert = certify_grid(wb.cache, fp.grid, wb.tests);
    if (c.classify(f.d).is_iso()) ++d_iso;
    if (c.classify(f.m).is_iso()) ++m_iso;
    nlohmann::json dump = nullptr;
    if (!cert.ok()) dump = {{"f", span_to_json(c, f)}, {"g", span_to_json(c, g)}, {"certificate", cert.to_json()},
                            {"grid", grid_to_json(c, fp.grid)}};
    rep.record(cert.ok(), dump);
  }
  rep.note = sc.describe() + ", invertible d in " + std::to_string(d_iso) + ", invertible m in " + std::to_string(m_iso);
  return rep;
}

/// fake_pullback(g, f) with legs swapped is the same span as
/// fake_pullback(f, g).
template <SuitableCategory C>
  requires HasSpanKey<C>
CheckReport check_symmetry(Workbench<C>& wb, const InputScope& sc) {
  CheckReport rep("symmetry", C::kName, sc.opt.seed);
  const C& c = wb.cat;
  for (const auto& [f, g] : cospan_inputs(wb, sc)) {
    const auto fg = fake_pullback(c, f, g);
    const auto gf = fake_pullback(c, g, f);
    const SpanPair<C> swapped{gf.grid.q, gf.right_leg, gf.left_leg};
    rep.record(span_pair_iso_eq(wb.cache, fg.pair(), swapped), dump_spans(c, {{"f", &f}, {"g", &g}}));
  }
  rep.note = sc.describe();
  return rep;
}

/// fake_pullback(f, 1) ~ (1, f) and fake_pullback(1, f) ~ (f, 1).
template <SuitableCategory C>
  requires HasSpanKey<C>
CheckReport check_identity(Workbench<C>& wb, const InputScope& sc) {
  CheckReport rep("identity", C::kName, sc.opt.seed);
  const C& c = wb.cat;
  for (const auto& f : span_inputs(wb, sc)) {
    const EMSpan<C> idw = id_span(c, f.tgt), idu = id_span(c, f.src);
    const auto a = fake_pullback(c, f, idw);
    const auto b = fake_pullback(c, idw, f);
    const bool ok = span_pair_iso_eq(wb.cache, a.pair(), SpanPair<C>{f.src, idu, f}) &&
                    span_pair_iso_eq(wb.cache, b.pair(), SpanPair<C>{f.src, f, idu});
    rep.record(ok, dump_spans(c, {{"f", &f}}));
  }
  rep.note = sc.describe();
  return rep;
}

/// Fake pullback of (r, s) gives Q with legs s_bar : Q -> U and
/// r_bar : Q -> V; the fake pullback of (t, s_bar) gives P with legs
/// P -> X and t_bar : P -> Q. The pasted span (P; leg, r_bar . t_bar) must
/// be the fake pullback of (r . t, s).
template <SuitableCategory C>
  requires HasSpanKey<C>
CheckReport check_stacking(Workbench<C>& wb, const InputScope& sc) {
  CheckReport rep("stacking", C::kName, sc.opt.seed);
  const C& c = wb.cat;
  for (const auto& [t, r, s] : stack_inputs(wb, sc)) {
    const auto fp1 = fake_pullback(c, r, s);
    const auto fp2 = fake_pullback(c, t, fp1.left_leg);
    const SpanPair<C> pasted{fp2.grid.q, fp2.left_leg, span_compose(c, fp1.right_leg, fp2.right_leg)};
    const auto whole = fake_pullback(c, span_compose(c, r, t), s);
    const bool ok = span_pair_iso_eq(wb.cache, pasted, whole.pair());
    nlohmann::json dump = nullptr;
    if (!ok)
      dump = {{"t", span_to_json(c, t)},
              {"r", span_to_json(c, r)},
              {"s", span_to_json(c, s)},
              {"grid_rs", grid_to_json(c, fp1.grid)},
              {"grid_t", grid_to_json(c, fp2.grid)},
              {"grid_whole", grid_to_json(c, whole.grid)}};
    rep.record(ok, dump);
  }
  rep.note = sc.describe();
  return rep;
}

/// fake_pullback(f, f) is the identity span on the source. Skipped unless
/// the properness check passes first.
template <SuitableCategory C>
  requires HasSpanKey<C>
CheckReport check_fake_mono(Workbench<C>& wb, const InputScope& sc) {
  CheckReport rep("fake-mono", C::kName, sc.opt.seed);
  const C& c = wb.cat;
  if (!check_proper(wb, CheckOptions{sc.opt.seed, 200}).passed()) {
    rep.skip("instance failed the properness pre-check");
    return rep;
  }
  for (const auto& f : span_inputs(wb, sc)) {
    const auto fp = fake_pullback(c, f, f);
    const EMSpan<C> idx = id_span(c, f.src);
    rep.record(span_pair_iso_eq(wb.cache, fp.pair(), SpanPair<C>{f.src, idx, idx}), dump_spans(c, {{"f", &f}}));
  }
  rep.note = sc.describe();
  return rep;
}

/// Bipullbacks of all-M and all-E squares, lifted.
template <SuitableCategory C>
  requires HasSpanKey<C>
std::pair<CheckReport, CheckReport> check_v1(Workbench<C>& wb, const BipullbackOptions& opt) {
  auto [rm, re] = check_star_bipullback(wb, opt);
  rm.check_name = "V1-lower";
  re.check_name = "V1-upper";
  return {rm, re};
}

/// For a = a0^* (a0 : Z -> X in E) and x = x0_* (x0 : Y -> Z in M) the
/// square X <-y- J -b-> Y with y = m_bar_*, b = e_bar^* carries exactly
/// one cell x b => a y. On the first `uniqueness_samples` inputs every
/// square (b', y') in E^* x M_* over pool objects carrying such a cell is
/// equivalent to it.
template <SuitableCategory C>
  requires HasSpanKey<C>
CheckReport check_v2(Workbench<C>& wb, const CheckOptions& opt, std::size_t uniqueness_samples = 50) {
  using Mor = typename C::Morphism;
  CheckReport rep("V2", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  std::size_t alternatives = 0;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Mor x0 = s.m_from(s.object());
    const Mor a0 = s.e_from(c.cod(x0));
    bool ok = true;
    try {
      const ExchangeSquare<C> ex = exchange_square(c, x0, a0);
      const EMSpan<C> b = lift_e(c, ex.fact.e);
      const EMSpan<C> y = lift_m(c, ex.fact.m);
      ok = all_cells(wb.cache, ex.upper, ex.lower).size() == 1;
      if (ok && k < uniqueness_samples) {
        const EMSpan<C> xs = lift_m(c, x0), as = lift_e(c, a0);
        const SpanPair<C> square{ex.fact.mid, y, b};
        for (const auto& t : wb.pool)
          for (const Mor& e2 : wb.cache.e_homs(c.dom(x0), t))
            for (const Mor& m2 : wb.cache.m_homs(t, c.cod(a0))) {
              const EMSpan<C> b2 = lift_e(c, e2), y2 = lift_m(c, m2);
              if (!cell_between(c, span_compose(c, xs, b2), span_compose(c, as, y2))) continue;
              ++alternatives;
              ok = ok && span_pair_iso_eq(wb.cache, square, SpanPair<C>{t, y2, b2});
            }
      }
    } catch (const std::exception&) {
      ok = false;
    }
    rep.record(ok, dump_mors(c, {{"x", &x0}, {"a", &a0}}));
  }
  rep.note = std::to_string(alternatives) + " alternative squares compared";
  return rep;
}

/// Instance-level data of the V3 input: a pullback square of M-maps
///
///     X -x-> Y
///     r      s
///     A -y-> B
///
/// and a factorization s . a = b . t with a : Z -> Y in E, t : Z -> C in M,
/// b : C -> B in E.
template <SuitableCategory C>
struct V3Input {
  typename C::Morphism x, r, s, y, a, t, b;
};

/// I is the pullback of a along x (legs c in E, v in M), J the pullback of
/// b along y (legs d in E, w in M), q : I -> J the mediator with
/// d q = r c and w q = t v.
template <SuitableCategory C>
struct V3Output {
  typename C::Morphism c, v, d, w, q;
};

template <SuitableCategory C>
V3Output<C> v3_complete(Workbench<C>& wb, const V3Input<C>& in) {
  const C& c = wb.cat;
  require(wb.m(in.x) && wb.m(in.r) && wb.m(in.s) && wb.m(in.y), "v3: left square must consist of M-maps");
  require(wb.e(in.a) && wb.m(in.t) && wb.e(in.b), "v3: right square has the wrong classes");
  require(c.compose(in.s, in.x) == c.compose(in.y, in.r), "v3: left square does not commute");
  require(c.compose(in.s, in.a) == c.compose(in.b, in.t), "v3: right square does not commute");
  const Cone<C> pi = c.pullback_along_m(in.a, in.x);
  const Cone<C> pj = c.pullback_along_m(in.b, in.y);
  const auto rc = c.compose(in.r, pi.leg2);
  const auto tv = c.compose(in.t, pi.leg1);
  std::optional<typename C::Morphism> q;
  for (const auto& h : wb.cache.homs(pi.apex, pj.apex)) {
    if (c.compose(pj.leg2, h) != rc || c.compose(pj.leg1, h) != tv) continue;
    if (q) throw InstanceError("v3: mediator into the pullback is not unique");
    q = h;
  }
  if (!q) throw InstanceError("v3: no mediator into the pullback");
  return {pi.leg2, pi.leg1, pj.leg2, pj.leg1, *q};
}

/// Certifies the completed V3 diagram: both pullbacks, the right output
/// square a pullback of M-maps (so its lift is a bipullback) with q in M,
/// the factorizations a^* x_* ~ v_* c^* and b^* y_* ~ w_* d^*, and the
/// cell q_* c^* => d^* r_*.
template <SuitableCategory C>
bool certify_v3(Workbench<C>& wb, const V3Input<C>& in, const V3Output<C>& out) {
  const C& c = wb.cat;
  const bool squares = wb.pullback({out.v, out.c, in.a, in.x}) && wb.pullback({out.w, out.d, in.b, in.y}) &&
                       wb.pullback({out.v, out.q, in.t, out.w});
  const bool classes = wb.m(out.q) && wb.e(out.c) && wb.m(out.v) && wb.e(out.d) && wb.m(out.w);
  const bool eqs = c.compose(out.d, out.q) == c.compose(in.r, out.c) && c.compose(out.w, out.q) == c.compose(in.t, out.v);
  if (!(squares && classes && eqs)) return false;
  const bool fact1 = span_iso_eq(c, span_compose(c, lift_e(c, in.a), lift_m(c, in.x)),
                                 span_compose(c, lift_m(c, out.v), lift_e(c, out.c)));
  const bool fact2 = span_iso_eq(c, span_compose(c, lift_e(c, in.b), lift_m(c, in.y)),
                                 span_compose(c, lift_m(c, out.w), lift_e(c, out.d)));
  const bool cell = cell_between(c, span_compose(c, lift_m(c, out.q), lift_e(c, out.c)),
                                 span_compose(c, lift_e(c, out.d), lift_m(c, in.r)))
                        .has_value();
  return fact1 && fact2 && cell;
}

/// Inputs built from b . t = s . a (factorization) and the pullback of s
/// along a random M-map y.
template <SuitableCategory C>
CheckReport check_v3(Workbench<C>& wb, const CheckOptions& opt) {
  CheckReport rep("V3", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const auto t = s.m_from(s.object());
    const auto b = s.e_from(c.cod(t));
    const Factorization<C> fa = c.factorize(c.compose(b, t));
    const auto y = s.m_into(c.cod(b));
    const Cone<C> pb = c.pullback_along_m(fa.m, y);
    const V3Input<C> in{pb.leg1, pb.leg2, fa.m, y, fa.e, t, b};
    bool ok = wb.pullback({in.x, in.r, in.s, in.y});
    try {
      ok = ok && certify_v3(wb, in, v3_complete(wb, in));
    } catch (const std::exception&) {
      ok = false;
    }
    rep.record(ok, dump_mors(c, {{"x", &in.x}, {"r", &in.r}, {"s", &in.s}, {"y", &in.y}, {"a", &in.a},
                                 {"t", &in.t}, {"b", &in.b}}));
  }
  return rep;
}

/// Instance-level data of the V4 input: a pushout square of E-maps
///
///     Z -g-> F
///     a      h
///     Y -f-> E
///
/// and a factorization f . x = u . e with x : X -> Y in M, e : X -> D in E,
/// u : D -> E in M.
template <SuitableCategory C>
struct V4Input {
  typename C::Morphism g, a, h, f, x, e, u;
};

/// I is the pullback of a along x (legs c in E, v in M), g . v = p . j the
/// factorization through K, and k : K -> D the diagonal fill with
/// k j = e c and u k = h p.
template <SuitableCategory C>
struct V4Output {
  typename C::Morphism c, v, j, p, k;
};

template <SuitableCategory C>
V4Output<C> v4_complete(Workbench<C>& wb, const V4Input<C>& in) {
  const C& c = wb.cat;
  require(wb.e(in.g) && wb.e(in.a) && wb.e(in.h) && wb.e(in.f), "v4: right square must consist of E-maps");
  require(wb.m(in.x) && wb.e(in.e) && wb.m(in.u), "v4: left square has the wrong classes");
  require(c.compose(in.h, in.g) == c.compose(in.f, in.a), "v4: right square does not commute");
  require(c.compose(in.f, in.x) == c.compose(in.u, in.e), "v4: left square does not commute");
  const Cone<C> pi = c.pullback_along_m(in.a, in.x);
  const Factorization<C> fa = c.factorize(c.compose(in.g, pi.leg1));
  const auto k = c.fill_diagonal({fa.e, c.compose(in.e, pi.leg2), c.compose(in.h, fa.m), in.u});
  return {pi.leg2, pi.leg1, fa.e, fa.m, k};
}

/// Certifies the completed V4 diagram: the pullback defining I is also a
/// pushout, the left output square is a pushout of E-maps with j in E, the
/// right output square is a pushout and a pullback, and the Spn-level
/// relations j^* k^* ~ c^* e^*, p_* k^* ~ h^* u_* and the cell
/// v_* j^* => g^* p_* hold.
template <SuitableCategory C>
bool certify_v4(Workbench<C>& wb, const V4Input<C>& in, const V4Output<C>& out) {
  const C& c = wb.cat;
  const Square<C> base{out.v, out.c, in.a, in.x};
  const Square<C> left{out.j, out.c, out.k, in.e};
  const Square<C> right{out.p, out.k, in.h, in.u};
  const bool classes = wb.e(out.c) && wb.m(out.v) && wb.e(out.j) && wb.m(out.p) && wb.e(out.k);
  const bool eqs = c.compose(out.k, out.j) == c.compose(in.e, out.c) && c.compose(in.u, out.k) == c.compose(in.h, out.p) &&
                   c.compose(out.p, out.j) == c.compose(in.g, out.v);
  if (!(classes && eqs)) return false;
  const bool squares = wb.pullback(base) && wb.pushout(base) && wb.pushout(left) && wb.pushout(right) &&
                       wb.pullback(right);
  if (!squares) return false;
  const bool left_iso = span_iso_eq(c, span_compose(c, lift_e(c, out.j), lift_e(c, out.k)),
                                    span_compose(c, lift_e(c, out.c), lift_e(c, in.e)));
  const bool right_iso = span_iso_eq(c, span_compose(c, lift_m(c, out.p), lift_e(c, out.k)),
                                     span_compose(c, lift_e(c, in.h), lift_m(c, in.u)));
  const bool cell = cell_between(c, span_compose(c, lift_m(c, out.v), lift_e(c, out.j)),
                                 span_compose(c, lift_e(c, in.g), lift_m(c, out.p)))
                        .has_value();
  return left_iso && right_iso && cell;
}

/// Inputs built from the pushout of two random E-maps and the
/// factorization of f . x for a random M-map x.
template <SuitableCategory C>
CheckReport check_v4(Workbench<C>& wb, const CheckOptions& opt) {
  CheckReport rep("V4", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const auto z = s.object();
    const auto g = s.e_from(z);
    const auto a = s.e_from(z);
    const Cone<C> po = c.pushout_along_e(g, a);
    const auto x = s.m_into(c.cod(a));
    const Factorization<C> fa = c.factorize(c.compose(po.leg2, x));
    const V4Input<C> in{g, a, po.leg1, po.leg2, x, fa.e, fa.m};
    bool ok = wb.pushout({in.g, in.a, in.h, in.f});
    try {
      ok = ok && certify_v4(wb, in, v4_complete(wb, in));
    } catch (const std::exception&) {
      ok = false;
    }
    rep.record(ok, dump_mors(c, {{"g", &in.g}, {"a", &in.a}, {"h", &in.h}, {"f", &in.f}, {"x", &in.x},
                                 {"e", &in.e}, {"u", &in.u}}));
  }
  return rep;
}

struct FakePullbackOptions {
  InputScope scope;
  std::size_t v_samples = 100;
  std::size_t competitor_bound = 4;
  std::optional<InputScope> mono_scope;  // defaults to `scope`
};

/// Grid certification, symmetry, identity and fake monos.
template <SuitableCategory C>
  requires HasSpanKey<C>
SuiteReport suite_symmetry(Workbench<C>& wb, const FakePullbackOptions& opt) {
  SuiteReport suite{"symmetry", wb.name(), opt.scope.opt.seed, {}};
  suite.checks.push_back(check_grid_certification(wb, opt.scope));
  suite.checks.push_back(check_symmetry(wb, opt.scope));
  suite.checks.push_back(check_identity(wb, opt.scope));
  suite.checks.push_back(check_fake_mono(wb, opt.mono_scope.value_or(opt.scope)));
  return suite;
}

template <SuitableCategory C>
  requires HasSpanKey<C>
SuiteReport suite_stacking(Workbench<C>& wb, const FakePullbackOptions& opt) {
  SuiteReport suite{"stacking", wb.name(), opt.scope.opt.seed, {}};
  suite.checks.push_back(check_stacking(wb, opt.scope));
  return suite;
}

template <SuitableCategory C>
  requires HasSpanKey<C>
SuiteReport suite_v_conditions(Workbench<C>& wb, const FakePullbackOptions& opt) {
  const CheckOptions v{opt.scope.opt.seed, opt.v_samples};
  SuiteReport suite{"v-conditions", wb.name(), v.seed, {}};
  auto [v1l, v1u] = check_v1(wb, BipullbackOptions{v, opt.competitor_bound});
  suite.checks.push_back(v1l);
  suite.checks.push_back(v1u);
  suite.checks.push_back(check_v2(wb, v));
  suite.checks.push_back(check_v3(wb, v));
  suite.checks.push_back(check_v4(wb, v));
  return suite;
}

}  // namespace spancat
