#include "doctest.h"

#include "spancat/core/groupoid.hpp"
#include "spancat/fakepb/fakepb_checks.hpp"
#include "spancat/finab/finab_instance.hpp"
#include "spancat/pinj/partial_injection.hpp"

using namespace spancat;
using finab::AbGroup;
using finab::AbHom;
using finab::FinAb;
using pinj::FinSet;
using pinj::PartialInjections;
using pinj::PInj;

TEST_SUITE_BEGIN("fakepb");

TEST_CASE("two copies of the same mono") {
  FinAb c;
  HomCache<FinAb> cache(c);
  const AbGroup z2({2}), z4({4});
  const auto f = lift_m(c, AbHom(z2, z4, {{2}}));
  const auto fp = fake_pullback(c, f, f);
  CHECK(fp.grid.q == z2);
  CHECK(span_iso_eq(c, fp.left_leg, id_span(c, z2)));
  CHECK(span_iso_eq(c, fp.right_leg, id_span(c, z2)));
  CHECK(certify_grid(cache, fp.grid, c.catalog()).ok());
}

TEST_CASE("identity cospan") {
  FinAb c;
  HomCache<FinAb> cache(c);
  const AbGroup z3({3});
  const auto fp = fake_pullback(c, id_span(c, z3), id_span(c, z3));
  CHECK(span_iso_eq(c, fp.left_leg, id_span(c, z3)));
  CHECK(span_iso_eq(c, fp.right_leg, id_span(c, z3)));
}

TEST_CASE("mono against a quotient") {
  FinAb c;
  HomCache<FinAb> cache(c);
  const AbGroup z2({2}), z4({4});
  const auto fp = fake_pullback(c, lift_m(c, AbHom(z2, z4, {{2}})), lift_e(c, AbHom(z4, z2, {{1}})));
  CHECK(certify_grid(cache, fp.grid, c.catalog()).ok());
  CHECK(fp.grid.z == z2);
  CHECK(fp.grid.y.is_trivial());
}

TEST_CASE("corrupted grids fail certification") {
  FinAb c;
  HomCache<FinAb> cache(c);
  const AbGroup z2({2}), z4({4});
  const auto f = lift_m(c, AbHom(z2, z4, {{2}}));
  auto fp = fake_pullback(c, f, lift_m(c, c.identity(z4)));
  REQUIRE(certify_grid(cache, fp.grid, c.catalog()).ok());
  SUBCASE("pushout leg replaced by zero") {
    auto g = fp.grid;
    g.r = AbHom::zero(c.dom(g.r), c.cod(g.r));
    CHECK_FALSE(certify_grid(cache, g, c.catalog()).ok());
  }
  SUBCASE("pullback apex shrunk") {
    auto g = fp.grid;
    const AbGroup z1(std::vector<std::int64_t>{});
    g.z = z1;
    g.n_bar = AbHom::zero(z1, c.cod(g.n_bar));
    g.m_bar = AbHom::zero(z1, c.cod(g.m_bar));
    g.d_bar = AbHom::zero(z1, g.x);
    g.e_bar = AbHom::zero(z1, g.y);
    CHECK_FALSE(certify_grid(cache, g, c.catalog()).ok());
  }
}

TEST_CASE("pinj cospan with a partial leg") {
  PartialInjections c(3);
  HomCache<PartialInjections> cache(c);
  const auto f = make_span(c, PInj(FinSet{2}, FinSet{1}, {0, std::nullopt}), PInj(FinSet{2}, FinSet{2}, {0, 1}));
  const auto g = lift_m(c, PInj(FinSet{1}, FinSet{2}, {1}));
  const auto fp = fake_pullback(c, f, g);
  CHECK(certify_grid(cache, fp.grid, c.catalog()).ok());
  CHECK(fp.grid.z == FinSet{1});
  // the shared point sits where d is undefined
  CHECK(fp.grid.x == FinSet{0});
  CHECK(fp.grid.y == FinSet{1});
}

TEST_CASE("wrong stacking comparison is detected") {
  PartialInjections c(2);
  HomCache<PartialInjections> cache(c);
  const auto f = lift_m(c, PInj(FinSet{1}, FinSet{2}, {0}));
  const auto g = lift_m(c, PInj(FinSet{1}, FinSet{2}, {1}));
  const auto a = fake_pullback(c, f, f);
  const auto b = fake_pullback(c, f, g);
  CHECK(span_pair_iso_eq(cache, a.pair(), a.pair()));
  CHECK_FALSE(span_pair_iso_eq(cache, a.pair(), b.pair()));
}

TEST_CASE("dot output") {
  FinAb c;
  HomCache<FinAb> cache(c);
  const auto f = lift_m(c, AbHom(AbGroup({2}), AbGroup({4}), {{2}}));
  const auto fp = fake_pullback(c, f, f);
  const auto cert = certify_grid(cache, fp.grid, c.catalog());
  const std::string dot = grid_to_dot(c, fp.grid, &cert);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("FAILED") == std::string::npos);
}

TEST_CASE("suites at small scale") {
  SUBCASE("pinj exhaustive") {
    PartialInjections c(2);
    Workbench<PartialInjections> wb(c);
    FakePullbackOptions opt{{{0, 0}, true, 2}, 20, 2, std::nullopt};
    CHECK(suite_symmetry(wb, opt).passed());
    CHECK(suite_stacking(wb, opt).passed());
    CHECK(suite_v_conditions(wb, opt).passed());
  }
  SUBCASE("finab sampled") {
    FinAb c(4);
    Workbench<FinAb> wb(c);
    FakePullbackOptions opt{{{3, 30}, false, 4}, 15, 2, std::nullopt};
    CHECK(suite_symmetry(wb, opt).passed());
    CHECK(suite_stacking(wb, opt).passed());
    CHECK(suite_v_conditions(wb, opt).passed());
  }
  SUBCASE("groupoid") {
    auto g = groupoid_instance(s3_group_table());
    Workbench<OneObjectGroupoid> wb(g);
    FakePullbackOptions opt{{{0, 0}, true, 1}, 20, 1, std::nullopt};
    CHECK(suite_symmetry(wb, opt).passed());
    CHECK(suite_stacking(wb, opt).passed());
  }
}

TEST_SUITE_END();
