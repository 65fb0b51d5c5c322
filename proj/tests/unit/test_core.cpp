#include "doctest.h"

#include "spancat/core/axioms.hpp"
#include "spancat/core/groupoid.hpp"
#include "spancat/finab/finab_instance.hpp"
#include "spancat/pinj/partial_injection.hpp"

using namespace spancat;

TEST_SUITE_BEGIN("core");

TEST_CASE("groupoid instances") {
  SUBCASE("trivial group") {
    auto g = groupoid_instance({{0}});
    CHECK(g.homs({}, {}).size() == 1);
  }
  SUBCASE("Z2") {
    auto g = groupoid_instance(cyclic_group_table(2));
    CHECK(g.homs({}, {}).size() == 2);
    Workbench<OneObjectGroupoid> wb(g);
    CHECK(check_axioms(wb, {{0, 50}, 50, 1}).passed());
  }
  SUBCASE("S3") {
    auto g = groupoid_instance(s3_group_table());
    CHECK(g.order() == 6);
    const GroupElement a{1}, b{3};
    CHECK(g.compose(a, b) != g.compose(b, a));
    CHECK(g.compose(a, g.inverse(a)) == g.unit());
  }
  SUBCASE("bad tables") {
    CHECK_THROWS_AS(groupoid_instance({{0, 1}, {0, 1}}), PreconditionError);
    CHECK_THROWS_AS(groupoid_instance({{0, 2}, {1, 0}}), PreconditionError);
    CHECK_THROWS_AS(groupoid_instance({}), PreconditionError);
  }
}

TEST_CASE("axiom suites pass at small scale") {
  SUBCASE("finab") {
    finab::FinAb c(4);
    Workbench<finab::FinAb> wb(c);
    const auto rep = check_axioms(wb, {{7, 60}, 30, 2});
    CHECK(rep.passed());
    CHECK(rep.checks.size() == 12);
  }
  SUBCASE("pinj") {
    pinj::PartialInjections c(3);
    Workbench<pinj::PartialInjections> wb(c);
    CHECK(check_axioms(wb, {{7, 60}, 30, 2}).passed());
  }
}

TEST_CASE("universal properties reject wrong squares") {
  finab::FinAb c(4);
  HomCache<finab::FinAb> cache(c);
  const finab::AbGroup z2({2}), z4({4}), z1(std::vector<std::int64_t>{});
  const finab::AbHom m(z2, z4, {{2}});
  SUBCASE("commuting square that is not a pullback") {
    const Square<finab::FinAb> sq{finab::AbHom::zero(z1, z2), finab::AbHom::zero(z1, z2), m, m};
    CHECK(square_commutes(c, sq));
    CHECK_FALSE(is_pullback(cache, sq, c.catalog()));
  }
  SUBCASE("commuting square that is not a pushout") {
    const finab::AbHom e(z4, z2, {{1}});
    const finab::AbHom inj(z2, finab::AbGroup({2, 2}), {{1}, {0}});
    const Square<finab::FinAb> sq{e, e, inj, inj};
    CHECK(square_commutes(c, sq));
    CHECK_FALSE(is_pushout(cache, sq, c.catalog()));
  }
  SUBCASE("mono and epi tests") {
    CHECK(is_mono(cache, m, c.catalog()));
    CHECK_FALSE(is_epi(cache, m, c.catalog()));
  }
}

TEST_CASE("reports") {
  CheckReport r("x", "finab", 3);
  r.record(true);
  r.record(false, {{"k", 1}});
  CHECK_FALSE(r.passed());
  CHECK(r.failure_count() == 1);
  CHECK(r.to_json()["failures"].size() == 1);
  CheckReport s("y", "finab", 3);
  s.skip("not applicable");
  CHECK(s.passed());
}

TEST_CASE("sampling is reproducible") {
  finab::FinAb c;
  Workbench<finab::FinAb> wb(c);
  auto s1 = wb.sampler(42);
  auto s2 = wb.sampler(42);
  for (int k = 0; k < 50; ++k) {
    const auto a = s1.object();
    CHECK(a == s2.object());
    CHECK(s1.m_into(a) == s2.m_into(a));
  }
}

TEST_SUITE_END();
