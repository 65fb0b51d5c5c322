#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spancat/core/category.hpp"
#include "spancat/finab/abelian.hpp"

namespace spancat::finab {

/// Finite abelian groups with E = surjections and M = injections.
/// The catalog holds one canonical group per iso class up to `max_order`.
class FinAb {
 public:
  using Object = AbGroup;
  using Morphism = AbHom;
  static constexpr std::string_view kName = "finab";

  explicit FinAb(std::int64_t max_order = 8);

  std::int64_t max_order() const { return max_order_; }

  AbGroup dom(const AbHom& f) const { return f.dom(); }
  AbGroup cod(const AbHom& f) const { return f.cod(); }
  AbHom compose(const AbHom& g, const AbHom& f) const;
  AbHom identity(const AbGroup& a) const { return AbHom::identity(a); }
  OrthClass classify(const AbHom& f) const;
  Factorization<FinAb> factorize(const AbHom& f) const;
  AbHom fill_diagonal(const Square<FinAb>& sq) const;
  Cone<FinAb> pullback_along_m(const AbHom& f, const AbHom& m) const;
  Cone<FinAb> pushout_along_e(const AbHom& f, const AbHom& e) const;

  const std::vector<AbGroup>& catalog() const { return catalog_; }
  std::vector<AbHom> homs(const AbGroup& a, const AbGroup& b) const { return all_homs(a, b); }
  std::optional<AbHom> find_iso(const AbGroup& a, const AbGroup& b) const;
  std::size_t cardinality(const AbGroup& a) const { return static_cast<std::size_t>(a.order()); }
  std::string describe(const AbGroup& a) const { return a.to_string(); }

  /// Element set of the joint image of (d, m); complete by joint monicity.
  std::vector<std::int64_t> span_key(const AbHom& d, const AbHom& m) const;
  /// Element set of the Goursat subgroup of the zig-zag.
  std::vector<std::int64_t> zigzag_key(const AbHom& m, const AbHom& d, const AbHom& e,
                                       const AbHom& n) const;
  /// w with d2 . w == d1 and m2 . w == m1, solved as a congruence system.
  std::optional<AbHom> solve_cell(const AbHom& d1, const AbHom& m1, const AbHom& d2,
                                  const AbHom& m2) const;

  nlohmann::json object_to_json(const AbGroup& a) const;
  AbGroup object_from_json(const nlohmann::json& j) const;
  nlohmann::json morphism_to_json(const AbHom& f) const;
  AbHom morphism_from_json(const nlohmann::json& j) const;

 private:
  std::int64_t max_order_;
  std::vector<AbGroup> catalog_;
};

}  // namespace spancat::finab
