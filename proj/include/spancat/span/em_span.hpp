#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spancat/core/category.hpp"
#include "spancat/core/errors.hpp"
#include "spancat/core/universal.hpp"

namespace spancat {

/// A morphism (d, R, m) : U -> W of Spn(E, M), i.e. a span U <<-d- R -m->> W
/// with d in E and m in M.
template <SuitableCategory C>
struct EMSpan {
  typename C::Object src;
  typename C::Object tgt;
  typename C::Object apex;
  typename C::Morphism d;
  typename C::Morphism m;
};

/// Builds and validates an EM-span from its two legs.
template <SuitableCategory C>
EMSpan<C> make_span(const C& c, const typename C::Morphism& d, const typename C::Morphism& m) {
  require(c.dom(d) == c.dom(m), "EM-span legs must share their apex");
  require(c.classify(d).in_e, "EM-span left leg is not in E");
  require(c.classify(m).in_m, "EM-span right leg is not in M");
  return {c.cod(d), c.cod(m), c.dom(d), d, m};
}

template <SuitableCategory C>
EMSpan<C> id_span(const C& c, const typename C::Object& a) {
  return {a, a, a, c.identity(a), c.identity(a)};
}

/// m_* = (1, X, m) : X -> Y.
template <SuitableCategory C>
EMSpan<C> lift_m(const C& c, const typename C::Morphism& m) {
  require(c.classify(m).in_m, "lift_m: morphism is not in M");
  const auto x = c.dom(m);
  return {x, c.cod(m), x, c.identity(x), m};
}

/// e^* = (e, X, 1) : Y -> X for e : X -> Y.
template <SuitableCategory C>
EMSpan<C> lift_e(const C& c, const typename C::Morphism& e) {
  require(c.classify(e).in_e, "lift_e: morphism is not in E");
  const auto x = c.dom(e);
  return {c.cod(e), x, x, e, c.identity(x)};
}

/// g . f via the pullback of g.d along f.m.
template <SuitableCategory C>
EMSpan<C> span_compose(const C& c, const EMSpan<C>& g, const EMSpan<C>& f) {
  require(f.tgt == g.src, "span_compose: endpoint mismatch");
  const Cone<C> pb = c.pullback_along_m(g.d, f.m);
  return {f.src, g.tgt, pb.apex, c.compose(f.d, pb.leg2), c.compose(g.m, pb.leg1)};
}

template <SuitableCategory C>
struct EMFactorization {
  EMSpan<C> e_star;  // d^* : U -> R
  EMSpan<C> m_star;  // m_* : R -> W
};

template <SuitableCategory C>
EMFactorization<C> em_factor_span(const C& c, const EMSpan<C>& f) {
  return {lift_e(c, f.d), lift_m(c, f.m)};
}

template <SuitableCategory C>
bool parallel(const EMSpan<C>& f, const EMSpan<C>& g) {
  return f.src == g.src && f.tgt == g.tgt;
}

/// The unique w : f.apex -> g.apex with g.d . w = f.d and g.m . w = f.m.
template <SuitableCategory C>
std::optional<typename C::Morphism> cell_between(const C& c, const EMSpan<C>& f, const EMSpan<C>& g) {
  require(parallel(f, g), "cell_between: spans are not parallel");
  if constexpr (HasCellSolver<C>) {
    return c.solve_cell(f.d, f.m, g.d, g.m);
  } else {
    for (const auto& w : c.homs(f.apex, g.apex))
      if (c.compose(g.d, w) == f.d && c.compose(g.m, w) == f.m) return w;
    return std::nullopt;
  }
}

/// Every w : f.apex -> g.apex satisfying the two cell equations.
template <SuitableCategory C>
std::vector<typename C::Morphism> all_cells(HomCache<C>& cache, const EMSpan<C>& f, const EMSpan<C>& g) {
  const C& c = cache.cat();
  std::vector<typename C::Morphism> out;
  for (const auto& w : cache.homs(f.apex, g.apex))
    if (c.compose(g.d, w) == f.d && c.compose(g.m, w) == f.m) out.push_back(w);
  return out;
}

/// Iso-equality by an invertible cell.
template <SuitableCategory C>
bool span_iso_eq_by_cell(const C& c, const EMSpan<C>& f, const EMSpan<C>& g) {
  if (!parallel(f, g)) return false;
  const auto w = cell_between(c, f, g);
  return w && c.classify(*w).is_iso();
}

/// Iso-equality of parallel EM-spans; keyed instances compare joint images.
template <SuitableCategory C>
bool span_iso_eq(const C& c, const EMSpan<C>& f, const EMSpan<C>& g) {
  if (!parallel(f, g)) return false;
  if constexpr (HasSpanKey<C>) {
    return c.span_key(f.d, f.m) == c.span_key(g.d, g.m);
  } else {
    return span_iso_eq_by_cell(c, f, g);
  }
}

template <SuitableCategory C>
  requires HasSpanKey<C>
auto span_key(const C& c, const EMSpan<C>& f) {
  return c.span_key(f.d, f.m);
}

/// One representative per iso class of EM-spans u -> w with apex drawn
/// from `apexes`.
template <SuitableCategory C>
  requires HasSpanKey<C>
std::vector<EMSpan<C>> spans_between(HomCache<C>& cache, const typename C::Object& u, const typename C::Object& w,
                                     const std::vector<typename C::Object>& apexes) {
  const C& c = cache.cat();
  using Key = decltype(c.span_key(std::declval<typename C::Morphism>(), std::declval<typename C::Morphism>()));
  std::map<Key, bool> seen;
  std::vector<EMSpan<C>> out;
  for (const auto& r : apexes) {
    const auto& ds = cache.e_homs(r, u);
    if (ds.empty()) continue;
    for (const auto& m : cache.m_homs(r, w))
      for (const auto& d : ds)
        if (seen.emplace(c.span_key(d, m), true).second) out.push_back({u, w, r, d, m});
  }
  return out;
}

/// Every EM-span u -> w with apex from `apexes`, without deduplication.
template <SuitableCategory C>
std::vector<EMSpan<C>> all_spans_between(HomCache<C>& cache, const typename C::Object& u,
                                         const typename C::Object& w, const std::vector<typename C::Object>& apexes) {
  std::vector<EMSpan<C>> out;
  for (const auto& r : apexes) {
    const auto& ds = cache.e_homs(r, u);
    for (const auto& m : cache.m_homs(r, w))
      for (const auto& d : ds) out.push_back({u, w, r, d, m});
  }
  return out;
}

/// A span in Spn[E, M]: apex Q with legs Q -> U and Q -> V.
template <SuitableCategory C>
struct SpanPair {
  typename C::Object apex;
  EMSpan<C> left;
  EMSpan<C> right;
};

/// (l . phi_*) for an iso phi : Q' -> Q is (phi^-1 . l.d, X, l.m), so two
/// pairs agree iff some iso phi makes (phi . l'.d, l'.m) iso to l and the
/// same for the right legs.
template <SuitableCategory C>
bool span_pair_iso_eq(HomCache<C>& cache, const SpanPair<C>& p, const SpanPair<C>& q) {
  const C& c = cache.cat();
  if (p.left.tgt != q.left.tgt || p.right.tgt != q.right.tgt) return false;
  if (!c.find_iso(q.apex, p.apex)) return false;
  for (const auto& phi : cache.homs(q.apex, p.apex)) {
    if (!c.classify(phi).is_iso()) continue;
    const EMSpan<C> l{p.apex, q.left.tgt, q.left.apex, c.compose(phi, q.left.d), q.left.m};
    const EMSpan<C> r{p.apex, q.right.tgt, q.right.apex, c.compose(phi, q.right.d), q.right.m};
    if (span_iso_eq(c, p.left, l) && span_iso_eq(c, p.right, r)) return true;
  }
  return false;
}

/// The square J -e_bar^*-> X -m_*-> Y over J -m_bar_*-> Z -e^*-> Y for
/// m : X -> Y in M and e : Y -> Z in E, with e_bar, m_bar the factorization
/// of e . m.
template <SuitableCategory C>
struct ExchangeSquare {
  Factorization<C> fact;     // e . m = m_bar . e_bar through J
  EMSpan<C> upper;           // m_* . e_bar^*
  EMSpan<C> lower;           // e^* . m_bar_*
  typename C::Morphism cell;  // upper => lower
};

template <SuitableCategory C>
ExchangeSquare<C> exchange_square(const C& c, const typename C::Morphism& m, const typename C::Morphism& e) {
  require(c.classify(m).in_m, "exchange_square: m is not in M");
  require(c.classify(e).in_e, "exchange_square: e is not in E");
  require(c.cod(m) == c.dom(e), "exchange_square: m and e are not composable");
  Factorization<C> fa = c.factorize(c.compose(e, m));
  EMSpan<C> upper = span_compose(c, lift_m(c, m), lift_e(c, fa.e));
  EMSpan<C> lower = span_compose(c, lift_e(c, e), lift_m(c, fa.m));
  auto w = cell_between(c, upper, lower);
  if (!w) throw InstanceError("exchange_square: no cell between the two composites");
  return {std::move(fa), std::move(upper), std::move(lower), std::move(*w)};
}

template <SuitableCategory C>
nlohmann::json span_to_json(const C& c, const EMSpan<C>& f) {
  return {{"src", c.object_to_json(f.src)},
          {"tgt", c.object_to_json(f.tgt)},
          {"apex", c.object_to_json(f.apex)},
          {"d", c.morphism_to_json(f.d)},
          {"m", c.morphism_to_json(f.m)}};
}

/// Reads {"d": ..., "m": ...}; src, tgt and apex are re-derived from the
/// legs and checked when present.
template <SuitableCategory C>
EMSpan<C> span_from_json(const C& c, const nlohmann::json& j) {
  require(j.is_object() && j.contains("d") && j.contains("m"), "EM-span must have \"d\" and \"m\"");
  EMSpan<C> f = make_span(c, c.morphism_from_json(j.at("d")), c.morphism_from_json(j.at("m")));
  if (j.contains("src")) require(c.object_from_json(j.at("src")) == f.src, "EM-span \"src\" disagrees with d");
  if (j.contains("tgt")) require(c.object_from_json(j.at("tgt")) == f.tgt, "EM-span \"tgt\" disagrees with m");
  if (j.contains("apex"))
    require(c.object_from_json(j.at("apex")) == f.apex, "EM-span \"apex\" disagrees with the legs");
  return f;
}

}  // namespace spancat
