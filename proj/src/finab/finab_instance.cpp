#include "spancat/finab/finab_instance.hpp"

#include "spancat/core/errors.hpp"

namespace spancat::finab {

FinAb::FinAb(std::int64_t max_order) : max_order_(max_order), catalog_(groups_up_to_order(max_order)) {
  require(max_order >= 1, "max group order must be positive");
}

AbHom FinAb::compose(const AbHom& g, const AbHom& f) const { return finab::compose(g, f); }

OrthClass FinAb::classify(const AbHom& f) const { return {is_surjective(f), is_injective(f)}; }

Factorization<FinAb> FinAb::factorize(const AbHom& f) const {
  AbFactorization fa = ab_factorize(f);
  return {std::move(fa.e), std::move(fa.mid), std::move(fa.m)};
}

AbHom FinAb::fill_diagonal(const Square<FinAb>& sq) const {
  require(is_surjective(sq.top), "fill_diagonal: top edge is not in E");
  require(is_injective(sq.bottom), "fill_diagonal: bottom edge is not in M");
  require(compose(sq.bottom, sq.left) == compose(sq.right, sq.top), "fill_diagonal: square does not commute");
  auto w = lift_through_mono(sq.bottom, sq.right);
  if (!w) throw InstanceError("fill_diagonal: no lift through the mono");
  if (compose(*w, sq.top) != sq.left) throw InstanceError("fill_diagonal: lift does not restrict correctly");
  return std::move(*w);
}

Cone<FinAb> FinAb::pullback_along_m(const AbHom& f, const AbHom& m) const {
  require(is_injective(m), "pullback_along_m: m is not in M");
  require(f.cod() == m.cod(), "pullback_along_m: codomains differ");
  AbCone c = ab_pullback(f, m);
  return {std::move(c.apex), std::move(c.leg1), std::move(c.leg2)};
}

Cone<FinAb> FinAb::pushout_along_e(const AbHom& f, const AbHom& e) const {
  require(is_surjective(e), "pushout_along_e: e is not in E");
  require(f.dom() == e.dom(), "pushout_along_e: domains differ");
  AbCone c = ab_pushout(f, e);
  return {std::move(c.apex), std::move(c.leg1), std::move(c.leg2)};
}

std::optional<AbHom> FinAb::find_iso(const AbGroup& a, const AbGroup& b) const { return finab::find_iso(a, b); }

std::vector<std::int64_t> FinAb::span_key(const AbHom& d, const AbHom& m) const {
  return image(pairing(d, m)).elements();
}

std::vector<std::int64_t> FinAb::zigzag_key(const AbHom& m, const AbHom& d, const AbHom& e,
                                            const AbHom& n) const {
  return goursat_subgroup(m, d, e, n).s.elements();
}

std::optional<AbHom> FinAb::solve_cell(const AbHom& d1, const AbHom& m1, const AbHom& d2,
                                       const AbHom& m2) const {
  auto w = lift_through_mono(m2, m1);
  if (!w || compose(d2, *w) != d1) return std::nullopt;
  return w;
}

nlohmann::json FinAb::object_to_json(const AbGroup& a) const { return {{"orders", a.orders()}}; }

AbGroup FinAb::object_from_json(const nlohmann::json& j) const {
  require(j.is_object() && j.contains("orders"), "group must be an object with \"orders\"");
  return AbGroup(j.at("orders").get<std::vector<std::int64_t>>());
}

nlohmann::json FinAb::morphism_to_json(const AbHom& f) const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < f.matrix().rows(); ++i) rows.push_back(f.matrix().row(i));
  return {{"dom", object_to_json(f.dom())}, {"cod", object_to_json(f.cod())}, {"matrix", rows}};
}

AbHom FinAb::morphism_from_json(const nlohmann::json& j) const {
  require(j.is_object() && j.contains("dom") && j.contains("cod") && j.contains("matrix"),
          "hom must have \"dom\", \"cod\" and \"matrix\"");
  AbGroup dom = object_from_json(j.at("dom"));
  AbGroup cod = object_from_json(j.at("cod"));
  const auto rows = j.at("matrix").get<std::vector<std::vector<std::int64_t>>>();
  require(rows.size() == cod.rank(), "matrix must have one row per codomain generator");
  IntMatrix m(cod.rank(), dom.rank());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == dom.rank(), "matrix must have one column per domain generator");
    for (std::size_t k = 0; k < rows[i].size(); ++k) m(i, k) = rows[i][k];
  }
  return AbHom(std::move(dom), std::move(cod), std::move(m));
}

}  // namespace spancat::finab
