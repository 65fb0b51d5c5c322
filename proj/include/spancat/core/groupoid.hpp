#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spancat/core/category.hpp"

namespace spancat {

/// Multiplication table of a finite group: table[g][h] = g * h.
using GroupTable = std::vector<std::vector<std::size_t>>;

/// The single object of a one-object groupoid.
struct Star {
  auto operator<=>(const Star&) const = default;
};

/// A group element viewed as an endomorphism of the star.
struct GroupElement {
  std::size_t index = 0;
  auto operator<=>(const GroupElement&) const = default;
};

/// Checks closure, associativity, a two-sided identity and inverses.
/// Throws PreconditionError naming the first violation.
void validate_group_table(const GroupTable& table);

/// Cyclic group table, element k = k mod n.
GroupTable cyclic_group_table(std::size_t n);
/// The symmetric group on three letters.
GroupTable s3_group_table();

/// A group as a one-object category with E = M = every morphism.
class OneObjectGroupoid {
 public:
  using Object = Star;
  using Morphism = GroupElement;
  static constexpr std::string_view kName = "groupoid";

  using SpanKey = std::size_t;
  using ZigZagKey = std::size_t;

  explicit OneObjectGroupoid(GroupTable table);

  std::size_t order() const { return table_.size(); }
  const GroupTable& table() const { return table_; }
  GroupElement unit() const { return {unit_}; }
  GroupElement inverse(const GroupElement& g) const { return {inverse_[g.index]}; }

  Star dom(const GroupElement&) const { return {}; }
  Star cod(const GroupElement&) const { return {}; }
  GroupElement compose(const GroupElement& g, const GroupElement& f) const;
  GroupElement identity(Star) const { return unit(); }
  OrthClass classify(const GroupElement&) const { return {true, true}; }
  /// Canonical choice (f, *, id).
  Factorization<OneObjectGroupoid> factorize(const GroupElement& f) const;
  GroupElement fill_diagonal(const Square<OneObjectGroupoid>& sq) const;
  Cone<OneObjectGroupoid> pullback_along_m(const GroupElement& f, const GroupElement& m) const;
  Cone<OneObjectGroupoid> pushout_along_e(const GroupElement& f, const GroupElement& e) const;

  const std::vector<Star>& catalog() const { return catalog_; }
  std::vector<GroupElement> homs(Star, Star) const;
  std::optional<GroupElement> find_iso(Star, Star) const { return unit(); }
  std::size_t cardinality(Star) const { return 1; }
  std::string describe(Star) const { return "*"; }

  /// m . d^-1 determines a span up to its unique apex iso.
  SpanKey span_key(const GroupElement& d, const GroupElement& m) const;
  /// n . e^-1 . d . m^-1.
  ZigZagKey zigzag_key(const GroupElement& m, const GroupElement& d, const GroupElement& e,
                       const GroupElement& n) const;
  std::optional<GroupElement> solve_cell(const GroupElement& d1, const GroupElement& m1,
                                         const GroupElement& d2, const GroupElement& m2) const;

  nlohmann::json object_to_json(Star) const { return {{"star", true}}; }
  Star object_from_json(const nlohmann::json&) const { return {}; }
  nlohmann::json morphism_to_json(const GroupElement& g) const { return {{"element", g.index}}; }
  GroupElement morphism_from_json(const nlohmann::json& j) const;

 private:
  GroupTable table_;
  std::size_t unit_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<Star> catalog_{Star{}};
};

/// Builds the groupoid instance after validating the table.
OneObjectGroupoid groupoid_instance(const GroupTable& table);

/// Reads {"table": [[...], ...]}.
GroupTable group_table_from_json(const nlohmann::json& j);

}  // namespace spancat
