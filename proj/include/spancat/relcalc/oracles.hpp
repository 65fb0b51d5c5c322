#pragma once

#include <cstddef>
#include <set>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "spancat/core/groupoid.hpp"
#include "spancat/pinj/partial_injection.hpp"
#include "spancat/relcalc/goursat.hpp"

namespace spancat {

/// Classical composition of relations for a specific instance, computed
/// without fake pullbacks. Specializations provide
///   Key of(c, r), Key compose(c, k2, k1), bool equal(a, b), json dump(k).
template <class C>
struct CompositionOracle;

template <class C>
concept HasCompositionOracle = requires { CompositionOracle<C>::kName; };

/// Goursat subgroups composed as subgroups of direct sums.
template <>
struct CompositionOracle<finab::FinAb> {
  static constexpr std::string_view kName = "subgroup-compose";
  using Key = finab::SubgroupRelation;

  static Key of(const finab::FinAb&, const Relation<finab::FinAb>& r) { return finab::goursat_to_subgroup(r); }
  static Key compose(const finab::FinAb&, const Key& k2, const Key& k1) { return finab::subgroup_compose(k1, k2); }
  static bool equal(const Key& a, const Key& b) { return a.x == b.x && a.z == b.z && a.s == b.s; }
  static nlohmann::json dump(const Key& k) { return finab::subgroup_to_json(k); }
};

/// A pinj relation read elementwise: linked pairs (x, z), plus the x in
/// the image of m and the z in the image of n that are not linked.
struct ElementRelation {
  std::size_t x_size = 0, z_size = 0;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  std::set<std::size_t> loose_x, loose_z;

  bool operator==(const ElementRelation&) const = default;
};

template <>
struct CompositionOracle<pinj::PartialInjections> {
  static constexpr std::string_view kName = "elementwise";
  using Key = ElementRelation;

  static Key of(const pinj::PartialInjections&, const Relation<pinj::PartialInjections>& r) {
    Key k{r.x.size, r.z.size, {}, {}, {}};
    const auto& [d, m] = std::pair{r.left.d, r.left.m};
    const auto& [e, n] = std::pair{r.right.d, r.right.m};
    for (std::size_t u = 0; u < d.dom().size; ++u) {
      bool linked = false;
      for (std::size_t v = 0; v < e.dom().size; ++v)
        if (d(u) && e(v) && *d(u) == *e(v)) {
          k.pairs.emplace(*m(u), *n(v));
          linked = true;
        }
      if (!linked) k.loose_x.insert(*m(u));
    }
    for (std::size_t v = 0; v < e.dom().size; ++v) {
      bool linked = false;
      for (std::size_t u = 0; u < d.dom().size; ++u) linked = linked || (d(u) && e(v) && *d(u) == *e(v));
      if (!linked) k.loose_z.insert(*n(v));
    }
    return k;
  }

  /// Pairs compose relationally. An x stays loose when it was loose, or
  /// when its partner z is loose on the left of the second relation;
  /// dually for the far end. Everything else is dropped.
  static Key compose(const pinj::PartialInjections&, const Key& k2, const Key& k1) {
    Key out{k1.x_size, k2.z_size, {}, k1.loose_x, k2.loose_z};
    for (const auto& [x, y] : k1.pairs) {
      for (const auto& [y2, z] : k2.pairs)
        if (y == y2) out.pairs.emplace(x, z);
      if (k2.loose_x.count(y)) out.loose_x.insert(x);
    }
    for (const auto& [y, z] : k2.pairs)
      if (k1.loose_z.count(y)) out.loose_z.insert(z);
    return out;
  }

  static bool equal(const Key& a, const Key& b) { return a == b; }
  static nlohmann::json dump(const Key& k) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [x, z] : k.pairs) pairs.push_back({x, z});
    return {{"pairs", pairs}, {"loose_x", k.loose_x}, {"loose_z", k.loose_z}};
  }
};

/// n e^-1 d m^-1 multiplied out in the group.
template <>
struct CompositionOracle<OneObjectGroupoid> {
  static constexpr std::string_view kName = "group-product";
  using Key = GroupElement;

  static Key of(const OneObjectGroupoid& c, const Relation<OneObjectGroupoid>& r) {
    return c.compose(c.compose(r.right.m, c.inverse(r.right.d)), c.compose(r.left.d, c.inverse(r.left.m)));
  }
  static Key compose(const OneObjectGroupoid& c, const Key& k2, const Key& k1) { return c.compose(k2, k1); }
  static bool equal(const Key& a, const Key& b) { return a == b; }
  static nlohmann::json dump(const Key& k) { return {{"element", k.index}}; }
};

}  // namespace spancat
