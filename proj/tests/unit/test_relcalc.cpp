#include "doctest.h"

#include "spancat/core/groupoid.hpp"
#include "spancat/relcalc/goursat_checks.hpp"
#include "spancat/relcalc/oracles.hpp"

using namespace spancat;
using finab::AbGroup;
using finab::AbHom;
using finab::FinAb;
using finab::SubgroupRelation;
using pinj::FinSet;
using pinj::PartialInjections;
using pinj::PInj;

namespace {

const AbGroup Z1{std::vector<std::int64_t>{}};
const AbGroup Z2{{2}};
const AbGroup Z3{{3}};
const AbGroup Z4{{4}};

Relation<FinAb> full_relation(const FinAb& c, const AbGroup& x, const AbGroup& z) {
  return make_relation(make_span(c, AbHom::zero(x, Z1), c.identity(x)), make_span(c, AbHom::zero(z, Z1), c.identity(z)));
}

SubgroupRelation whole(const AbGroup& x, const AbGroup& z) {
  return {x, z, finab::image(AbHom::identity(finab::direct_sum(x, z)))};
}

}  // namespace

TEST_SUITE_BEGIN("relcalc");

TEST_CASE("diagonal through two presentations") {
  FinAb c;
  HomCache<FinAb> cache(c);
  const AbHom x2(Z3, Z3, {{2}});
  const auto twisted = make_relation(make_span(c, x2, x2), make_span(c, x2, x2));
  const auto diag = rel_identity(c, Z3);
  CHECK(rel_iso_eq(cache, twisted, diag));
  CHECK(rel_iso_eq_by_search(cache, twisted, diag));
  CHECK(finab::goursat_to_subgroup(twisted).s == finab::goursat_to_subgroup(diag).s);

  SUBCASE("the antidiagonal is different") {
    const auto anti = graph_relation(c, x2);
    CHECK_FALSE(rel_iso_eq(cache, anti, diag));
    CHECK_FALSE(rel_iso_eq_by_search(cache, anti, diag));
  }
  SUBCASE("the full relation is different") {
    CHECK_FALSE(rel_iso_eq(cache, full_relation(c, Z3, Z3), diag));
  }
}

TEST_CASE("goursat subgroups of basic relations") {
  FinAb c;
  SUBCASE("identity is the diagonal") {
    const auto s = finab::goursat_to_subgroup(rel_identity(c, Z2));
    CHECK(s.s.elements() == std::vector<std::int64_t>{0, 3});
  }
  SUBCASE("through the zero group is everything") {
    const auto s = finab::goursat_to_subgroup(full_relation(c, Z2, Z2));
    CHECK(s.s == whole(Z2, Z2).s);
  }
  SUBCASE("graph of a map") {
    const AbHom q(Z4, Z2, {{1}});
    const auto s = finab::goursat_to_subgroup(graph_relation(c, q));
    CHECK(s.s.order() == 4);
  }
}

TEST_CASE("roundtrip fixes the mod 2 subgroup of Z4 + Z2") {
  FinAb c;
  const AbGroup amb = finab::direct_sum(Z4, Z2);
  const SubgroupRelation s{Z4, Z2, finab::subgroup_from_elements(amb, {{1, 1}})};
  REQUIRE(s.s.order() == 4);
  const auto r = finab::subgroup_to_zigzag(c, s);
  CHECK(r.x == Z4);
  CHECK(r.z == Z2);
  CHECK(finab::goursat_to_subgroup(r).s == s.s);
}

TEST_CASE("transpose") {
  FinAb c;
  HomCache<FinAb> cache(c);
  const auto r = graph_relation(c, AbHom(Z4, Z2, {{1}}));
  const auto s = finab::goursat_to_subgroup(r);
  const auto t = finab::transpose(s);
  CHECK(t.x == Z2);
  CHECK(t.z == Z4);
  CHECK(finab::transpose(t).s == s.s);
  CHECK(finab::goursat_to_subgroup(rel_reverse(r)).s == t.s);
}

TEST_CASE("goursat roundtrip over small pairs") {
  FinAb c(4);
  const auto rep = finab::check_goursat_roundtrip(c, 8);
  CHECK(rep.passed());
  CHECK(rep.samples > 20);
}

TEST_CASE("composition") {
  FinAb c;
  HomCache<FinAb> cache(c);
  SUBCASE("identity is a unit") {
    const auto r = graph_relation(c, AbHom(Z4, Z2, {{1}}));
    CHECK(rel_iso_eq(cache, rel_compose(c, r, rel_identity(c, Z4)), r));
    CHECK(rel_iso_eq(cache, rel_compose(c, rel_identity(c, Z2), r), r));
  }
  SUBCASE("graphs compose like maps") {
    const AbHom f(Z4, Z2, {{1}}), g(Z2, Z4, {{2}});
    CHECK(rel_iso_eq(cache, rel_compose(c, graph_relation(c, g), graph_relation(c, f)),
                     graph_relation(c, c.compose(g, f))));
  }
  SUBCASE("matches subgroup composition") {
    const auto r1 = graph_relation(c, AbHom(Z4, Z2, {{1}}));
    const auto r2 = rel_reverse(r1);
    const auto comp = rel_compose(c, r2, r1);
    using O = CompositionOracle<FinAb>;
    CHECK(O::equal(O::of(c, comp), O::compose(c, O::of(c, r2), O::of(c, r1))));
    // x ~ x' exactly when they agree mod 2
    CHECK(O::of(c, comp).s.order() == 8);
  }
  SUBCASE("endpoint mismatch") {
    CHECK_THROWS_AS(rel_compose(c, rel_identity(c, Z2), rel_identity(c, Z4)), PreconditionError);
  }
}

TEST_CASE("rr°r on a fixed relation") {
  FinAb c;
  HomCache<FinAb> cache(c);
  const auto r = graph_relation(c, AbHom(Z4, Z2, {{1}}));
  CHECK(rel_iso_eq(cache, rel_compose(c, r, rel_compose(c, rel_reverse(r), r)), r));
  const auto f = full_relation(c, Z2, Z4);
  CHECK(rel_iso_eq(cache, rel_compose(c, f, rel_compose(c, rel_reverse(f), f)), f));
}

TEST_CASE("pinj composition against the elementwise oracle") {
  PartialInjections c(3);
  HomCache<PartialInjections> cache(c);
  const auto none = std::nullopt;
  const auto r1 = make_relation(make_span(c, PInj({2}, {1}, {0, none}), PInj({2}, {2}, {0, 1})),
                                make_span(c, PInj({1}, {1}, {0}), PInj({1}, {2}, {1})));
  const auto r2 = make_relation(make_span(c, PInj({2}, {2}, {1, 0}), PInj({2}, {2}, {0, 1})),
                                make_span(c, PInj({2}, {2}, {0, 1}), PInj({2}, {3}, {2, 0})));
  using O = CompositionOracle<PartialInjections>;
  const auto k = O::of(c, rel_compose(c, r2, r1));
  CHECK(k.pairs == std::set<std::pair<std::size_t, std::size_t>>{{0, 2}});
  CHECK(k.loose_x == std::set<std::size_t>{1});
  CHECK(k.loose_z.empty());
  CHECK(O::equal(k, O::compose(c, O::of(c, r2), O::of(c, r1))));
}

TEST_CASE("json roundtrip") {
  FinAb c;
  HomCache<FinAb> cache(c);
  const auto r = graph_relation(c, AbHom(Z4, Z2, {{1}}));
  const auto back = relation_from_json(c, relation_to_json(c, r));
  CHECK(rel_iso_eq_by_search(cache, back, r));
  auto bad = relation_to_json(c, r);
  bad["X"] = c.object_to_json(Z3);
  CHECK_THROWS_AS(relation_from_json(c, bad), PreconditionError);
}

TEST_CASE("suites at small scale") {
  SUBCASE("pinj") {
    PartialInjections c(2);
    Workbench<PartialInjections> wb(c);
    const RelationOptions opt{{{0, 0}, true, 1}, 1, 30};
    CHECK(suite_associativity(wb, opt).passed());
    CHECK(suite_rrr(wb, {{{0, 0}, true, 2}, 1, 30}).passed());
  }
  SUBCASE("finab") {
    FinAb c(4);
    Workbench<FinAb> wb(c);
    const RelationOptions opt{{{2, 40}, false, 4}, 1, 30};
    CHECK(suite_associativity(wb, opt).passed());
    CHECK(suite_rrr(wb, opt).passed());
    CHECK(finab::suite_goursat(wb, {2, 30}, 8).passed());
  }
  SUBCASE("groupoid") {
    auto g = groupoid_instance(s3_group_table());
    Workbench<OneObjectGroupoid> wb(g);
    const RelationOptions opt{{{0, 0}, true, 1}, 1, 30};
    CHECK(suite_associativity(wb, opt).passed());
  }
}

TEST_SUITE_END();
