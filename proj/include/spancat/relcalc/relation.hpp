#pragma once

#include <json.hpp>

#include "spancat/fakepb/fake_pullback.hpp"
#include "spancat/span/em_span.hpp"

namespace spancat {

/// A relation X -/-> Z: a span X <- Y -> Z of EM-spans, i.e. the zig-zag
///
///     X <-m- U -d->> Y <<-e- V -n-> Z
///
/// with left = (d, U, m) : Y -> X and right = (e, V, n) : Y -> Z.
template <SuitableCategory C>
struct Relation {
  typename C::Object x, y, z;
  EMSpan<C> left;
  EMSpan<C> right;

  SpanPair<C> pair() const { return {y, left, right}; }
};

template <SuitableCategory C>
Relation<C> make_relation(const EMSpan<C>& left, const EMSpan<C>& right) {
  require(left.src == right.src, "relation legs must share their source");
  return {left.tgt, left.src, right.tgt, left, right};
}

template <SuitableCategory C>
Relation<C> rel_identity(const C& c, const typename C::Object& x) {
  return make_relation(id_span(c, x), id_span(c, x));
}

template <SuitableCategory C>
Relation<C> rel_reverse(const Relation<C>& r) {
  return make_relation(r.right, r.left);
}

/// r2 . r1 through the fake pullback of r1.right and r2.left.
template <SuitableCategory C>
Relation<C> rel_compose(const C& c, const Relation<C>& r2, const Relation<C>& r1) {
  require(r1.z == r2.x, "rel_compose: middle objects differ");
  const auto fp = fake_pullback(c, r1.right, r2.left);
  return make_relation(span_compose(c, r1.left, fp.left_leg), span_compose(c, r2.right, fp.right_leg));
}

/// X <-1- X -e->> I <<-1- I -m-> Z for f = m . e.
template <SuitableCategory C>
Relation<C> graph_relation(const C& c, const typename C::Morphism& f) {
  const Factorization<C> fa = c.factorize(f);
  return make_relation(lift_e(c, fa.e), lift_m(c, fa.m));
}

template <SuitableCategory C>
  requires HasZigZagKey<C>
auto zigzag_key(const C& c, const Relation<C>& r) {
  return c.zigzag_key(r.left.m, r.left.d, r.right.d, r.right.m);
}

/// End-fixed iso by search for isos on Y, U and V.
template <SuitableCategory C>
bool rel_iso_eq_by_search(HomCache<C>& cache, const Relation<C>& a, const Relation<C>& b) {
  if (a.x != b.x || a.z != b.z) return false;
  return span_pair_iso_eq(cache, a.pair(), b.pair());
}

/// End-fixed iso; keyed instances compare zig-zag invariants.
template <SuitableCategory C>
bool rel_iso_eq(HomCache<C>& cache, const Relation<C>& a, const Relation<C>& b) {
  if (a.x != b.x || a.z != b.z) return false;
  if constexpr (HasZigZagKey<C>) {
    return zigzag_key(cache.cat(), a) == zigzag_key(cache.cat(), b);
  } else {
    return rel_iso_eq_by_search(cache, a, b);
  }
}

template <SuitableCategory C>
nlohmann::json relation_to_json(const C& c, const Relation<C>& r) {
  return {{"X", c.object_to_json(r.x)},
          {"Z", c.object_to_json(r.z)},
          {"left", span_to_json(c, r.left)},
          {"right", span_to_json(c, r.right)}};
}

template <SuitableCategory C>
Relation<C> relation_from_json(const C& c, const nlohmann::json& j) {
  require(j.is_object() && j.contains("left") && j.contains("right"), "relation must have \"left\" and \"right\"");
  Relation<C> r = make_relation(span_from_json(c, j.at("left")), span_from_json(c, j.at("right")));
  if (j.contains("X")) require(c.object_from_json(j.at("X")) == r.x, "relation \"X\" disagrees with the left leg");
  if (j.contains("Z")) require(c.object_from_json(j.at("Z")) == r.z, "relation \"Z\" disagrees with the right leg");
  return r;
}

}  // namespace spancat
