#include "doctest.h"

#include "spancat/core/axioms.hpp"
#include "spancat/pinj/partial_injection.hpp"

using namespace spancat;
using namespace spancat::pinj;

namespace {

constexpr auto none = std::nullopt;

PInj pi(std::size_t a, std::size_t b, std::vector<PInj::Target> t) { return PInj(FinSet{a}, FinSet{b}, std::move(t)); }

}  // namespace

TEST_SUITE_BEGIN("pinj");

TEST_CASE("composition with empty overlap") {
  PartialInjections c;
  const PInj f = pi(2, 2, {1, none});
  CHECK(c.compose(f, f) == PInj::empty(FinSet{2}, FinSet{2}));
  CHECK(c.compose(c.identity(FinSet{2}), f) == f);
  CHECK(c.compose(f, c.identity(FinSet{2})) == f);
}

TEST_CASE("identity on the empty set") {
  PartialInjections c;
  const PInj id = c.identity(FinSet{0});
  CHECK(id.is_total());
  CHECK(id.defined_count() == 0);
  CHECK(c.classify(id).is_iso());
}

TEST_CASE("reverse is an involution") {
  PartialInjections c(3);
  for (const PInj& f : c.homs(FinSet{2}, FinSet{3})) {
    CHECK(pinj_reverse(pinj_reverse(f)) == f);
    CHECK(pinj_reverse(f).dom() == f.cod());
  }
}

TEST_CASE("classification") {
  PartialInjections c;
  CHECK(c.classify(pi(1, 2, {1})) == OrthClass{false, true});
  CHECK(c.classify(pi(2, 1, {0, none})) == OrthClass{true, false});
  CHECK(c.classify(pi(2, 2, {1, 0})) == OrthClass{true, true});
  CHECK(c.classify(pi(2, 2, {1, none})) == OrthClass{false, false});
}

TEST_CASE("factorization") {
  PartialInjections c;
  SUBCASE("partial map with a single point") {
    const auto fa = c.factorize(pi(3, 2, {1, none, none}));
    CHECK(fa.mid == FinSet{1});
    CHECK(fa.e == pi(3, 1, {0, none, none}));
    CHECK(fa.m == pi(1, 2, {1}));
  }
  SUBCASE("empty map") {
    const auto fa = c.factorize(PInj::empty(FinSet{2}, FinSet{2}));
    CHECK(fa.mid == FinSet{0});
    CHECK(fa.m.dom() == FinSet{0});
    CHECK(c.classify(fa.e).in_e);
  }
  SUBCASE("total map factors through a bijection") {
    const auto fa = c.factorize(pi(2, 3, {2, 0}));
    CHECK(c.classify(fa.e).is_iso());
    CHECK(c.compose(fa.m, fa.e) == pi(2, 3, {2, 0}));
  }
}

TEST_CASE("diagonal fill between singletons") {
  PartialInjections c;
  HomCache<PartialInjections> cache(c);
  const PInj e = pi(2, 1, {none, 0});
  const PInj m = pi(1, 2, {0});
  const PInj u = pi(2, 1, {none, 0});
  const PInj v = pi(1, 2, {0});
  const PInj w = c.fill_diagonal({e, u, v, m});
  std::size_t fillers = 0;
  for (const PInj& x : cache.homs(FinSet{1}, FinSet{1}))
    if (c.compose(x, e) == u && c.compose(m, x) == v) ++fillers;
  CHECK(fillers == 1);
  CHECK(w == c.identity(FinSet{1}));
}

TEST_CASE("pullback along an identity keeps the whole domain") {
  PartialInjections c(3);
  HomCache<PartialInjections> cache(c);
  const PInj f = pi(2, 1, {0, none});
  const PInj m = c.identity(FinSet{1});
  const Cone<PartialInjections> pb = c.pullback_along_m(f, m);
  CHECK(pb.apex == FinSet{2});
  CHECK(c.classify(pb.leg1).is_iso());
  CHECK(is_pullback(cache, pullback_square(c, f, m, pb), c.catalog()));

  SUBCASE("the defined part alone is not a pullback") {
    const Square<PartialInjections> sq{pi(1, 1, {0}), pi(1, 2, {0}), m, f};
    CHECK(square_commutes(c, sq));
    CHECK_FALSE(is_pullback(cache, sq, c.catalog()));
  }
}

TEST_CASE("pullback and pushout are certified") {
  PartialInjections c(3);
  HomCache<PartialInjections> cache(c);
  const PInj f = pi(2, 3, {2, none});
  const PInj m = pi(2, 3, {0, 2});
  const auto pb = c.pullback_along_m(f, m);
  CHECK(c.classify(pb.leg1).in_m);
  CHECK(is_pullback(cache, pullback_square(c, f, m, pb), c.catalog()));

  const PInj g = pi(2, 2, {1, none});
  const PInj e = pi(2, 1, {none, 0});
  const auto po = c.pushout_along_e(g, e);
  CHECK(c.classify(po.leg1).in_e);
  CHECK(is_pushout(cache, pushout_square(c, g, e, po), c.catalog()));

  const auto po_id = c.pushout_along_e(c.identity(FinSet{2}), e);
  CHECK(po_id.apex == FinSet{1});
  CHECK(c.classify(po_id.leg2).is_iso());
}

TEST_CASE("invalid maps are rejected") {
  CHECK_THROWS_AS(pi(2, 2, {0, 0}), PreconditionError);
  CHECK_THROWS_AS(pi(1, 2, {2}), PreconditionError);
}

TEST_CASE("hom-set sizes") {
  // sum over k of C(a,k) C(b,k) k!
  CHECK(all_partial_injections(FinSet{2}, FinSet{2}).size() == 7);
  CHECK(all_partial_injections(FinSet{3}, FinSet{3}).size() == 34);
  CHECK(all_partial_injections(FinSet{0}, FinSet{3}).size() == 1);
}

TEST_CASE("json roundtrip") {
  PartialInjections c;
  const PInj f = pi(3, 2, {none, 1, 0});
  CHECK(c.morphism_from_json(c.morphism_to_json(f)) == f);
}

TEST_SUITE_END();
