#include "doctest.h"

#include "spancat/core/groupoid.hpp"
#include "spancat/finab/finab_instance.hpp"
#include "spancat/pinj/partial_injection.hpp"
#include "spancat/span/span_checks.hpp"

using namespace spancat;
using finab::AbGroup;
using finab::AbHom;
using finab::FinAb;
using pinj::FinSet;
using pinj::PartialInjections;
using pinj::PInj;

TEST_SUITE_BEGIN("em-span");

TEST_CASE("identity spans") {
  FinAb c;
  const AbGroup z0(std::vector<std::int64_t>{}), z4({4});
  const auto id0 = id_span(c, z0);
  CHECK(id0.apex.is_trivial());
  const auto id4 = id_span(c, z4);
  CHECK(span_iso_eq(c, lift_m(c, c.identity(z4)), id4));
  CHECK(span_iso_eq(c, lift_e(c, c.identity(z4)), id4));
  const auto fa = em_factor_span(c, id4);
  CHECK(span_iso_eq(c, fa.e_star, id4));
  CHECK(span_iso_eq(c, fa.m_star, id4));
}

TEST_CASE("units hold on sampled spans") {
  FinAb c;
  Workbench<FinAb> wb(c);
  auto s = wb.sampler(5);
  for (int k = 0; k < 100; ++k) {
    const auto f = random_span(s);
    CHECK(span_iso_eq(c, span_compose(c, f, id_span(c, f.src)), f));
    CHECK(span_iso_eq(c, span_compose(c, id_span(c, f.tgt), f), f));
  }
}

TEST_CASE("lifts are functorial") {
  FinAb c;
  const AbGroup z2({2}), z4({4}), z8({8});
  const AbHom m1(z2, z4, {{2}}), m2(z4, z8, {{2}});
  CHECK(span_iso_eq(c, span_compose(c, lift_m(c, m2), lift_m(c, m1)), lift_m(c, c.compose(m2, m1))));
  const AbHom e1(z8, z4, {{1}}), e2(z4, z2, {{1}});
  // (-)^* reverses the order
  CHECK(span_iso_eq(c, span_compose(c, lift_e(c, e1), lift_e(c, e2)), lift_e(c, c.compose(e2, e1))));
}

TEST_CASE("pinj composite agrees with elementwise span composition") {
  PartialInjections c(3);
  HomCache<PartialInjections> cache(c);
  std::size_t cases = 0;
  for (std::size_t a : {1u, 2u})
    for (std::size_t b : {1u, 2u, 3u})
      for (const auto& f : all_spans_between(cache, FinSet{a}, FinSet{b}, c.catalog()))
        for (const auto& g : all_spans_between(cache, FinSet{b}, FinSet{3}, c.catalog())) {
          // g-points whose d-leg hits f's m-leg, plus g-points where d is undefined
          std::set<std::pair<long, long>> want;
          for (std::size_t t = 0; t < g.apex.size; ++t) {
            if (!g.d(t)) want.emplace(-1, long(*g.m(t)));
            for (std::size_t r = 0; r < f.apex.size; ++r)
              if (g.d(t) && *g.d(t) == *f.m(r)) want.emplace(f.d(r) ? long(*f.d(r)) : -1, long(*g.m(t)));
          }
          const auto h = span_compose(c, g, f);
          std::set<std::pair<long, long>> got;
          for (std::size_t r = 0; r < h.apex.size; ++r) got.emplace(h.d(r) ? long(*h.d(r)) : -1, long(*h.m(r)));
          CHECK(got == want);
          ++cases;
        }
  CHECK(cases > 100);
}

TEST_CASE("em factorization recomposes") {
  PartialInjections c(3);
  Workbench<PartialInjections> wb(c);
  auto s = wb.sampler(9);
  for (int k = 0; k < 100; ++k) {
    const auto f = random_span(s);
    const auto fa = em_factor_span(c, f);
    CHECK(span_iso_eq(c, span_compose(c, fa.m_star, fa.e_star), f));
  }
}

TEST_CASE("cells") {
  FinAb c;
  const AbGroup z2({2}), z4({4});
  const auto f = make_span(c, AbHom(z4, z2, {{1}}), AbHom(z4, z4, {{3}}));
  const auto cell = cell_between(c, f, f);
  REQUIRE(cell);
  CHECK(*cell == c.identity(z4));
  const auto g = make_span(c, AbHom(z4, z2, {{1}}), AbHom(z4, z4, {{1}}));
  const auto w = cell_between(c, f, g);
  REQUIRE(w);
  CHECK(c.classify(*w).is_iso());
  CHECK_THROWS_AS(make_span(c, AbHom(z2, z4, {{2}}), AbHom(z2, z4, {{2}})), PreconditionError);
}

TEST_CASE("exchange square") {
  FinAb c;
  const AbGroup z2({2}), z4({4});
  SUBCASE("mono then quotient factors through zero") {
    const auto ex = exchange_square(c, AbHom(z2, z4, {{2}}), AbHom(z4, z2, {{1}}));
    CHECK(ex.fact.mid.is_trivial());
    CHECK(span_iso_eq(c, ex.upper, ex.lower));
  }
  SUBCASE("identity sides") {
    const AbHom e(z4, z2, {{1}}), m(z2, z4, {{2}});
    const auto a = exchange_square(c, c.identity(z4), e);
    CHECK(c.classify(a.fact.m).is_iso());
    const auto b = exchange_square(c, m, c.identity(z4));
    CHECK(c.classify(b.fact.e).is_iso());
  }
}

TEST_CASE("span checks at small scale") {
  PartialInjections c(3);
  Workbench<PartialInjections> wb(c);
  CHECK(suite_spans(wb, {{1, 60}, 2}).passed());
  CHECK(suite_bipullback(wb, {{1, 20}, 2}).passed());

  auto g = groupoid_instance(s3_group_table());
  Workbench<OneObjectGroupoid> gw(g);
  CHECK(suite_spans(gw, {{1, 60}, 1}).passed());
}

TEST_CASE("bipullback rejects a non-pullback square") {
  FinAb c(4);
  HomCache<FinAb> cache(c);
  const AbGroup z1(std::vector<std::int64_t>{}), z2({2}), z4({4});
  const AbHom m(z2, z4, {{2}});
  const auto zero = lift_m(c, AbHom::zero(z1, z2));
  CHECK_FALSE(bipullback_holds(cache, zero, zero, lift_m(c, m), lift_m(c, m), c.catalog(), c.catalog()));
  const auto id = lift_m(c, c.identity(z2));
  CHECK(bipullback_holds(cache, id, id, lift_m(c, m), lift_m(c, m), c.catalog(), c.catalog()));
}

TEST_SUITE_END();
