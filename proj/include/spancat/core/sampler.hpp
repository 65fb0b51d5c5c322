#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <json.hpp>

#include "spancat/core/category.hpp"
#include "spancat/core/universal.hpp"

namespace spancat {

/// Seeded random choices of objects and morphisms.
template <SuitableCategory C>
class Sampler {
 public:
  using Obj = typename C::Object;
  using Mor = typename C::Morphism;

  Sampler(HomCache<C>& cache, std::uint64_t seed, std::vector<Obj> pool)
      : cache_(cache), rng_(seed), pool_(std::move(pool)) {}

  const C& cat() const { return cache_.cat(); }
  HomCache<C>& cache() { return cache_; }
  const std::vector<Obj>& pool() const { return pool_; }

  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return index(2) == 0; }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[index(xs.size())];
  }

  Obj object() { return pick(pool_); }

  /// Uniform over hom(a, b); every hom-set here is non-empty.
  Mor hom(const Obj& a, const Obj& b) { return pick(cache_.homs(a, b)); }

  std::optional<Mor> e_hom(const Obj& a, const Obj& b) { return maybe(cache_.e_homs(a, b)); }
  std::optional<Mor> m_hom(const Obj& a, const Obj& b) { return maybe(cache_.m_homs(a, b)); }

  /// Random E-map out of `a` into some pool object.
  Mor e_from(const Obj& a) { return pick_across(a, true, true); }
  /// Random M-map into `b` from some pool object.
  Mor m_into(const Obj& b) { return pick_across(b, false, false); }
  /// Random E-map into `b` from some pool object.
  Mor e_into(const Obj& b) { return pick_across(b, false, true); }
  /// Random M-map out of `a` into some pool object.
  Mor m_from(const Obj& a) { return pick_across(a, true, false); }

  /// Random morphism out of `a`.
  Mor any_from(const Obj& a) { return hom(a, object()); }
  /// Random morphism into `b`.
  Mor any_into(const Obj& b) { return hom(object(), b); }

 private:
  std::optional<Mor> maybe(const std::vector<Mor>& xs) {
    if (xs.empty()) return std::nullopt;
    return pick(xs);
  }

  // Picks uniformly among all class members between `x` and pool objects.
  // Identities guarantee a non-empty candidate set.
  Mor pick_across(const Obj& x, bool outgoing, bool want_e) {
    std::vector<const std::vector<Mor>*> lists;
    std::size_t total = 0;
    for (const Obj& t : pool_) {
      const auto& en = outgoing ? cache_.entry(x, t) : cache_.entry(t, x);
      const auto& xs = want_e ? en.e : en.m;
      if (!xs.empty()) {
        lists.push_back(&xs);
        total += xs.size();
      }
    }
    if (total == 0) return cat().identity(x);
    std::size_t k = index(total);
    for (const auto* xs : lists) {
      if (k < xs->size()) return (*xs)[k];
      k -= xs->size();
    }
    return cat().identity(x);
  }

  HomCache<C>& cache_;
  std::mt19937_64 rng_;
  std::vector<Obj> pool_;
};

/// JSON dumps used in failure reports; each is a valid input fragment.
template <SuitableCategory C>
nlohmann::json dump_square(const C& c, const Square<C>& sq) {
  return {{"top", c.morphism_to_json(sq.top)},
          {"left", c.morphism_to_json(sq.left)},
          {"right", c.morphism_to_json(sq.right)},
          {"bottom", c.morphism_to_json(sq.bottom)}};
}

template <SuitableCategory C>
nlohmann::json dump_mors(const C& c, std::initializer_list<std::pair<const char*, const typename C::Morphism*>> ms) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, f] : ms) j[name] = c.morphism_to_json(*f);
  return j;
}

}  // namespace spancat
