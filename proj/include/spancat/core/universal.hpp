#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "spancat/core/category.hpp"

namespace spancat {

/// Memoized hom-set enumeration, split by class membership.
template <SuitableCategory C>
class HomCache {
 public:
  using Obj = typename C::Object;
  using Mor = typename C::Morphism;

  struct Entry {
    std::vector<Mor> all;
    std::vector<Mor> e;
    std::vector<Mor> m;
  };

  explicit HomCache(const C& c) : cat_(c) {}

  const C& cat() const { return cat_; }

  const Entry& entry(const Obj& a, const Obj& b) {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Entry en;
    en.all = cat_.homs(a, b);
    for (const Mor& f : en.all) {
      const OrthClass k = cat_.classify(f);
      if (k.in_e) en.e.push_back(f);
      if (k.in_m) en.m.push_back(f);
    }
    return cache_.emplace(std::move(key), std::move(en)).first->second;
  }

  const std::vector<Mor>& homs(const Obj& a, const Obj& b) { return entry(a, b).all; }
  const std::vector<Mor>& e_homs(const Obj& a, const Obj& b) { return entry(a, b).e; }
  const std::vector<Mor>& m_homs(const Obj& a, const Obj& b) { return entry(a, b).m; }

 private:
  const C& cat_;
  std::map<std::pair<Obj, Obj>, Entry> cache_;
};

/// Endpoints of a square, read off its edges.
template <SuitableCategory C>
struct Corners {
  typename C::Object top_left, top_right, bottom_left, bottom_right;
};

template <SuitableCategory C>
Corners<C> corners(const C& c, const Square<C>& sq) {
  return {c.dom(sq.top), c.cod(sq.top), c.cod(sq.left), c.cod(sq.right)};
}

template <SuitableCategory C>
bool square_is_well_formed(const C& c, const Square<C>& sq) {
  return c.dom(sq.top) == c.dom(sq.left) && c.cod(sq.top) == c.dom(sq.right) &&
         c.cod(sq.left) == c.dom(sq.bottom) && c.cod(sq.right) == c.cod(sq.bottom);
}

template <SuitableCategory C>
bool square_commutes(const C& c, const Square<C>& sq) {
  return square_is_well_formed(c, sq) && c.compose(sq.right, sq.top) == c.compose(sq.bottom, sq.left);
}

/// Universal property of the top-left corner, tested against every
/// object in `tests`: cones from T biject with homs T -> apex.
template <SuitableCategory C>
bool is_pullback(HomCache<C>& cache, const Square<C>& sq, const std::vector<typename C::Object>& tests) {
  const C& c = cache.cat();
  if (!square_commutes(c, sq)) return false;
  const Corners<C> k = corners(c, sq);
  using Mor = typename C::Morphism;
  for (const auto& t : tests) {
    std::map<Mor, std::size_t> by_base;
    for (const Mor& a : cache.homs(t, k.bottom_left)) ++by_base[c.compose(sq.bottom, a)];
    std::size_t cones = 0;
    for (const Mor& b : cache.homs(t, k.top_right)) {
      auto it = by_base.find(c.compose(sq.right, b));
      if (it != by_base.end()) cones += it->second;
    }
    const auto& mediators = cache.homs(t, k.top_left);
    if (mediators.size() != cones) return false;
    std::set<std::pair<Mor, Mor>> images;
    for (const Mor& h : mediators) images.emplace(c.compose(sq.left, h), c.compose(sq.top, h));
    if (images.size() != mediators.size()) return false;
  }
  return true;
}

/// Dual of is_pullback for the bottom-right corner.
template <SuitableCategory C>
bool is_pushout(HomCache<C>& cache, const Square<C>& sq, const std::vector<typename C::Object>& tests) {
  const C& c = cache.cat();
  if (!square_commutes(c, sq)) return false;
  const Corners<C> k = corners(c, sq);
  using Mor = typename C::Morphism;
  for (const auto& t : tests) {
    std::map<Mor, std::size_t> by_base;
    for (const Mor& b : cache.homs(k.top_right, t)) ++by_base[c.compose(b, sq.top)];
    std::size_t cocones = 0;
    for (const Mor& a : cache.homs(k.bottom_left, t)) {
      auto it = by_base.find(c.compose(a, sq.left));
      if (it != by_base.end()) cocones += it->second;
    }
    const auto& mediators = cache.homs(k.bottom_right, t);
    if (mediators.size() != cocones) return false;
    std::set<std::pair<Mor, Mor>> images;
    for (const Mor& h : mediators) images.emplace(c.compose(h, sq.right), c.compose(h, sq.bottom));
    if (images.size() != mediators.size()) return false;
  }
  return true;
}

template <SuitableCategory C>
bool is_mono(HomCache<C>& cache, const typename C::Morphism& f, const std::vector<typename C::Object>& tests) {
  const C& c = cache.cat();
  for (const auto& t : tests) {
    std::set<typename C::Morphism> seen;
    for (const auto& u : cache.homs(t, c.dom(f)))
      if (!seen.insert(c.compose(f, u)).second) return false;
  }
  return true;
}

template <SuitableCategory C>
bool is_epi(HomCache<C>& cache, const typename C::Morphism& f, const std::vector<typename C::Object>& tests) {
  const C& c = cache.cat();
  for (const auto& t : tests) {
    std::set<typename C::Morphism> seen;
    for (const auto& u : cache.homs(c.cod(f), t))
      if (!seen.insert(c.compose(u, f)).second) return false;
  }
  return true;
}

/// Square of a pullback cone: top = leg to dom m, left = leg to dom f.
template <SuitableCategory C>
Square<C> pullback_square(const C& c, const typename C::Morphism& f, const typename C::Morphism& m,
                          const Cone<C>& cone) {
  (void)c;
  return {cone.leg2, cone.leg1, m, f};
}

/// Square of a pushout cone: top = f, left = e.
template <SuitableCategory C>
Square<C> pushout_square(const C& c, const typename C::Morphism& f, const typename C::Morphism& e,
                         const Cone<C>& cone) {
  (void)c;
  return {f, e, cone.leg1, cone.leg2};
}

/// The transpose swaps top with left and right with bottom.
template <SuitableCategory C>
Square<C> transpose(const Square<C>& sq) {
  return {sq.left, sq.top, sq.bottom, sq.right};
}

}  // namespace spancat
