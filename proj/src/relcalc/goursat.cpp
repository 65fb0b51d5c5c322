#include "spancat/relcalc/goursat_checks.hpp"

namespace spancat::finab {

SubgroupRelation goursat_to_subgroup(const AbRelation& r) {
  return goursat_subgroup(r.left.m, r.left.d, r.right.d, r.right.m);
}

AbRelation subgroup_to_zigzag(const FinAb& c, const SubgroupRelation& s) {
  require(s.s.ambient == direct_sum(s.x, s.z), "subgroup_to_zigzag: ambient group is not X + Z");
  const AbHom px = compose(projection_left(s.x, s.z), s.s.embedding);
  const AbHom pz = compose(projection_right(s.x, s.z), s.s.embedding);
  const Factorization<FinAb> fx = c.factorize(px);
  const Factorization<FinAb> fz = c.factorize(pz);
  const Cone<FinAb> po = c.pushout_along_e(fz.e, fx.e);
  return make_relation(make_span(c, po.leg2, fx.m), make_span(c, po.leg1, fz.m));
}

SubgroupRelation transpose(const SubgroupRelation& s) {
  const AbHom swap = pairing(projection_right(s.x, s.z), projection_left(s.x, s.z));
  return {s.z, s.x, image(compose(swap, s.s.embedding))};
}

nlohmann::json subgroup_to_json(const SubgroupRelation& s) {
  const IntMatrix& g = s.s.embedding.matrix();
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t j = 0; j < g.cols(); ++j) gens.push_back(g.column(j));
  return {{"X", {{"orders", s.x.orders()}}},
          {"Z", {{"orders", s.z.orders()}}},
          {"generators", gens},
          {"order", s.s.order()}};
}

}  // namespace spancat::finab

namespace spancat::finab {

CheckReport check_goursat_roundtrip(const FinAb& c, std::int64_t max_sum_order) {
  CheckReport rep("goursat-roundtrip", FinAb::kName, 0);
  std::size_t pairs = 0;
  for (const AbGroup& x : c.catalog())
    for (const AbGroup& z : c.catalog()) {
      if (x.order() * z.order() > max_sum_order) continue;
      ++pairs;
      for (const Subgroup& s : all_subgroups(direct_sum(x, z))) {
        const SubgroupRelation rel{x, z, s};
        bool ok = false;
        nlohmann::json dump = nullptr;
        try {
          const SubgroupRelation back = goursat_to_subgroup(subgroup_to_zigzag(c, rel));
          ok = back.x == x && back.z == z && back.s == s;
        } catch (const std::exception& ex) {
          dump = {{"error", ex.what()}};
        }
        if (!ok) dump["subgroup"] = subgroup_to_json(rel);
        rep.record(ok, dump);
      }
    }
  rep.note = std::to_string(pairs) + " catalog pairs, |X + Z| <= " + std::to_string(max_sum_order);
  return rep;
}

CheckReport check_zigzag_roundtrip(Workbench<FinAb>& wb, const CheckOptions& opt) {
  CheckReport rep("zigzag-roundtrip", FinAb::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const AbRelation r = random_relation(s);
    const AbRelation back = subgroup_to_zigzag(wb.cat, goursat_to_subgroup(r));
    rep.record(rel_iso_eq_by_search(wb.cache, back, r), dump_relations(wb.cat, {{"r", &r}}));
  }
  return rep;
}

CheckReport check_reverse_transpose(Workbench<FinAb>& wb, const CheckOptions& opt) {
  CheckReport rep("reverse-transpose", FinAb::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const AbRelation r = random_relation(s);
    const SubgroupRelation a = goursat_to_subgroup(rel_reverse(r));
    const SubgroupRelation b = transpose(goursat_to_subgroup(r));
    rep.record(a.x == b.x && a.z == b.z && a.s == b.s, dump_relations(wb.cat, {{"r", &r}}));
  }
  return rep;
}

SuiteReport suite_goursat(Workbench<FinAb>& wb, const CheckOptions& opt, std::int64_t max_sum_order) {
  SuiteReport suite{"goursat", std::string(FinAb::kName), opt.seed, {}};
  suite.checks.push_back(check_goursat_roundtrip(wb.cat, max_sum_order));
  suite.checks.push_back(check_zigzag_roundtrip(wb, opt));
  suite.checks.push_back(check_reverse_transpose(wb, opt));
  return suite;
}

}  // namespace spancat::finab
