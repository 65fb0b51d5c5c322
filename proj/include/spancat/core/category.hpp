#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spancat {

/// Membership of a morphism in the left class E and the right class M.
struct OrthClass {
  bool in_e = false;
  bool in_m = false;

  /// E and M intersect exactly in the isomorphisms.
  bool is_iso() const { return in_e && in_m; }
  bool operator==(const OrthClass&) const = default;
};

/// f = m . e with e in E and m in M, passing through `mid`.
template <class C>
struct Factorization {
  typename C::Morphism e;
  typename C::Object mid;
  typename C::Morphism m;
};

/// A commuting square
///
///     . --top--> .
///     |          |
///   left       right
///     v          v
///     . -bottom> .
///
/// The same orientation is used for pullbacks (apex top-left) and
/// pushouts (apex bottom-right).
template <class C>
struct Square {
  typename C::Morphism top;
  typename C::Morphism left;
  typename C::Morphism right;
  typename C::Morphism bottom;
};

/// Result of pullback_along_m(f, m): legs P -> dom f and P -> dom m.
/// Result of pushout_along_e(f, e): legs cod f -> Q and cod e -> Q.
template <class C>
struct Cone {
  typename C::Object apex;
  typename C::Morphism leg1;
  typename C::Morphism leg2;
};

/// The capability contract of a category with a suitable factorization
/// system. Every operation is const; instances are immutable after
/// construction.
template <class C>
concept SuitableCategory =
    std::totally_ordered<typename C::Object> &&
    std::totally_ordered<typename C::Morphism> &&
    requires(const C& c, const typename C::Object& a,
             const typename C::Morphism& f, const Square<C>& sq) {
      { C::kName } -> std::convertible_to<std::string_view>;
      { c.dom(f) } -> std::same_as<typename C::Object>;
      { c.cod(f) } -> std::same_as<typename C::Object>;
      { c.compose(f, f) } -> std::same_as<typename C::Morphism>;
      { c.identity(a) } -> std::same_as<typename C::Morphism>;
      { c.classify(f) } -> std::same_as<OrthClass>;
      { c.factorize(f) } -> std::same_as<Factorization<C>>;
      { c.fill_diagonal(sq) } -> std::same_as<typename C::Morphism>;
      { c.pullback_along_m(f, f) } -> std::same_as<Cone<C>>;
      { c.pushout_along_e(f, f) } -> std::same_as<Cone<C>>;
      { c.catalog() } -> std::convertible_to<const std::vector<typename C::Object>&>;
      { c.homs(a, a) } -> std::same_as<std::vector<typename C::Morphism>>;
      { c.find_iso(a, a) } -> std::same_as<std::optional<typename C::Morphism>>;
      { c.cardinality(a) } -> std::convertible_to<std::size_t>;
      { c.describe(a) } -> std::convertible_to<std::string>;
    };

/// Canonical invariant of the iso class of an EM-span U <-d- R -m-> W.
template <class C>
concept HasSpanKey = requires(const C& c, const typename C::Morphism& f) {
  { c.span_key(f, f) } -> std::totally_ordered;
};

/// Canonical invariant of the end-fixed iso class of a zig-zag
/// X <-m- U -d-> Y <-e- V -n-> Z.
template <class C>
concept HasZigZagKey = requires(const C& c, const typename C::Morphism& f) {
  { c.zigzag_key(f, f, f, f) } -> std::totally_ordered;
};

/// Direct solver for the unique w with d2 . w = d1 and m2 . w = m1.
template <class C>
concept HasCellSolver = requires(const C& c, const typename C::Morphism& f) {
  { c.solve_cell(f, f, f, f) } -> std::same_as<std::optional<typename C::Morphism>>;
};

template <SuitableCategory C>
bool is_iso(const C& c, const typename C::Morphism& f) {
  return c.classify(f).is_iso();
}

template <SuitableCategory C>
bool in_e(const C& c, const typename C::Morphism& f) {
  return c.classify(f).in_e;
}

template <SuitableCategory C>
bool in_m(const C& c, const typename C::Morphism& f) {
  return c.classify(f).in_m;
}

}  // namespace spancat
