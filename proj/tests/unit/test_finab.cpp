#include "doctest.h"

#include <set>

#include "spancat/core/errors.hpp"
#include "spancat/core/universal.hpp"
#include "spancat/finab/finab_instance.hpp"
#include "spancat/finab/normal_form.hpp"

using namespace spancat;
using namespace spancat::finab;

namespace {

const AbGroup Z1{std::vector<std::int64_t>{}};
const AbGroup Z2{{2}};
const AbGroup Z3{{3}};
const AbGroup Z4{{4}};
const AbGroup Z6{{6}};

AbHom hom(const AbGroup& a, const AbGroup& b, IntMatrix m) { return AbHom(a, b, std::move(m)); }

// (x, z) pairs of a subgroup of x + z, as element codes of each side.
std::set<std::pair<std::int64_t, std::int64_t>> pairs_of(const SubgroupRelation& r) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  const AbGroup amb = direct_sum(r.x, r.z);
  for (std::int64_t code : r.s.elements()) {
    Element e = amb.decode(code);
    Element xs(e.begin(), e.begin() + static_cast<long>(r.x.rank()));
    Element zs(e.begin() + static_cast<long>(r.x.rank()), e.end());
    out.emplace(r.x.encode(xs), r.z.encode(zs));
  }
  return out;
}

SubgroupRelation graph(const AbHom& f) {
  return {f.dom(), f.cod(), image(pairing(AbHom::identity(f.dom()), f))};
}

}  // namespace

TEST_SUITE_BEGIN("finab");

TEST_CASE("times two on Z4 squares to zero") {
  FinAb c;
  const AbHom x2 = hom(Z4, Z4, {{2}});
  CHECK(c.compose(x2, x2) == AbHom::zero(Z4, Z4));
  CHECK(c.compose(c.identity(Z4), x2) == x2);
}

TEST_CASE("classification") {
  FinAb c;
  CHECK(c.classify(hom(Z4, Z4, {{2}})) == OrthClass{false, false});
  CHECK(c.classify(hom(Z4, Z2, {{1}})) == OrthClass{true, false});
  CHECK(c.classify(hom(Z2, Z4, {{2}})) == OrthClass{false, true});
  CHECK(c.classify(c.identity(Z2)) == OrthClass{true, true});
}

TEST_CASE("factorize times two through Z2") {
  FinAb c;
  const AbHom x2 = hom(Z4, Z4, {{2}});
  const auto fa = c.factorize(x2);
  CHECK(fa.mid == Z2);
  CHECK(fa.e == hom(Z4, Z2, {{1}}));
  CHECK(fa.m == hom(Z2, Z4, {{2}}));
  CHECK(c.compose(fa.m, fa.e) == x2);

  SUBCASE("already epi or mono") {
    CHECK(c.find_iso(c.factorize(hom(Z4, Z2, {{1}})).mid, Z2));
    CHECK(c.find_iso(c.factorize(hom(Z2, Z4, {{2}})).mid, Z2));
    const auto id = c.factorize(c.identity(Z6));
    CHECK(c.classify(id.e).is_iso());
    CHECK(c.classify(id.m).is_iso());
  }
}

TEST_CASE("diagonal fill") {
  FinAb c;
  const AbHom e = hom(Z4, Z2, {{1}});
  const AbHom m = hom(Z2, Z4, {{2}});
  const AbHom w = c.fill_diagonal({e, e, m, m});
  CHECK(w == c.identity(Z2));

  SUBCASE("identity square") {
    const AbHom u = hom(Z4, Z2, {{1}});
    CHECK(c.fill_diagonal({c.identity(Z4), u, u, c.identity(Z2)}) == u);
  }
}

TEST_CASE("pullbacks") {
  FinAb c;
  HomCache<FinAb> cache(c);
  SUBCASE("over the zero group") {
    const AbCone pb = ab_pullback(AbHom::zero(Z2, Z1), AbHom::zero(Z2, Z1));
    CHECK(pb.apex.order() == 4);
    CHECK(c.find_iso(pb.apex, AbGroup({2, 2})));
  }
  SUBCASE("mod 2 against the identity") {
    const AbCone pb = ab_pullback(hom(Z4, Z2, {{1}}), c.identity(Z2));
    CHECK(pb.apex.order() == 4);
    CHECK(c.find_iso(pb.apex, Z4));
  }
  SUBCASE("along a mono is certified") {
    const AbHom f = hom(Z4, Z4, {{1}});
    const AbHom m = hom(Z2, Z4, {{2}});
    const Cone<FinAb> pb = c.pullback_along_m(f, m);
    CHECK(c.classify(pb.leg1).in_m);
    CHECK(is_pullback(cache, pullback_square(c, f, m, pb), c.catalog()));
  }
}

TEST_CASE("pushouts") {
  FinAb c;
  HomCache<FinAb> cache(c);
  SUBCASE("of identities") {
    const Cone<FinAb> po = c.pushout_along_e(c.identity(Z2), c.identity(Z2));
    CHECK(po.apex == Z2);
  }
  SUBCASE("of a mono along a map to zero") {
    const AbHom m = hom(Z2, Z4, {{2}});
    const AbHom e = AbHom::zero(Z2, Z1);
    const Cone<FinAb> po = c.pushout_along_e(m, e);
    CHECK(c.find_iso(po.apex, Z2));
    CHECK(c.classify(po.leg1) == OrthClass{true, false});
    CHECK(c.classify(po.leg2).in_m);
    CHECK(is_pushout(cache, pushout_square(c, m, e, po), c.catalog()));
  }
}

TEST_CASE("isomorphism search") {
  FinAb c;
  CHECK(c.find_iso(AbGroup({2, 3}), Z6));
  CHECK_FALSE(c.find_iso(Z4, AbGroup({2, 2})));
  const auto iso = c.find_iso(AbGroup({3, 2}), Z6);
  REQUIRE(iso);
  CHECK(c.classify(*iso).is_iso());
}

TEST_CASE("catalog up to order 8") {
  FinAb c(8);
  // 1, 2, 3, 4, 2+2, 5, 6, 7, 8, 2+4, 2+2+2
  CHECK(c.catalog().size() == 11);
  CHECK(c.catalog().front().is_trivial());
}

TEST_CASE("Smith normal form") {
  SUBCASE("diag(2, 3)") {
    const IntMatrix a{{2, 0}, {0, 3}};
    const SmithForm s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(s.diagonal() == std::vector<std::int64_t>{1, 6});
    CHECK(s.u * s.u_inv == IntMatrix::identity(2));
    CHECK(s.v * s.v_inv == IntMatrix::identity(2));
  }
  SUBCASE("zero and identity") {
    CHECK(smith_normal_form(IntMatrix(2, 3)).d.is_zero());
    CHECK(smith_normal_form(IntMatrix::identity(3)).d == IntMatrix::identity(3));
  }
  SUBCASE("hermite form") {
    const IntMatrix a{{4, 6}, {2, 2}};
    const HermiteForm h = hermite_form(a);
    CHECK(a * h.v == h.h);
    CHECK(h.rank == 2);
  }
}

TEST_CASE("kernel image cokernel") {
  const AbHom x2 = hom(Z4, Z4, {{2}});
  CHECK(kernel(x2).elements() == std::vector<std::int64_t>{0, 2});
  CHECK(image(x2).elements() == std::vector<std::int64_t>{0, 2});
  CHECK(image(AbHom::zero(Z4, Z6)).order() == 1);
  CHECK(cokernel(AbHom::identity(Z6)).group.is_trivial());
  CHECK(cokernel(x2).group.order() == 2);
}

TEST_CASE("subgroup enumeration") {
  CHECK(all_subgroups(Z4).size() == 3);
  CHECK(all_subgroups(AbGroup({2, 2})).size() == 5);
  CHECK(all_subgroups(AbGroup({2, 4})).size() == 8);
}

TEST_CASE("malformed homomorphism is rejected") {
  CHECK_THROWS_AS(AbHom(Z2, Z4, IntMatrix{{1}}), PreconditionError);
}

TEST_CASE("subgroup composition") {
  FinAb c;
  SUBCASE("diagonal is a unit") {
    const auto diag = graph(AbHom::identity(Z2));
    const auto comp = subgroup_compose(diag, diag);
    CHECK(comp.s == diag.s);
    CHECK(pairs_of(comp) == std::set<std::pair<std::int64_t, std::int64_t>>{{0, 0}, {1, 1}});
  }
  SUBCASE("graphs compose like maps") {
    for (const AbGroup& x : {Z2, Z4, AbGroup({2, 2})})
      for (const AbGroup& y : {Z2, Z4})
        for (const AbGroup& z : {Z2, Z4, Z6})
          for (const AbHom& f : c.homs(x, y))
            for (const AbHom& g : c.homs(y, z))
              CHECK(subgroup_compose(graph(f), graph(g)).s == graph(c.compose(g, f)).s);
  }
  SUBCASE("against elementwise composition") {
    const std::vector<AbGroup> gs{Z2, Z4, AbGroup({2, 2})};
    std::size_t cases = 0;
    for (const AbGroup& x : gs)
      for (const AbGroup& y : gs)
        for (const Subgroup& s : all_subgroups(direct_sum(x, y)))
          for (const Subgroup& t : all_subgroups(direct_sum(y, Z2))) {
            const SubgroupRelation sr{x, y, s}, tr{y, Z2, t};
            std::set<std::pair<std::int64_t, std::int64_t>> want;
            for (auto [a, b] : pairs_of(sr))
              for (auto [b2, d] : pairs_of(tr))
                if (b == b2) want.emplace(a, d);
            CHECK(pairs_of(subgroup_compose(sr, tr)) == want);
            ++cases;
          }
    CHECK(cases > 100);
  }
  SUBCASE("with a full relation") {
    const SubgroupRelation full{Z2, Z2, image(AbHom::identity(direct_sum(Z2, Z2)))};
    const auto s = graph(hom(Z4, Z2, {{1}}));
    CHECK(subgroup_compose(s, full).s.order() == 8);
  }
}

TEST_CASE("json roundtrip") {
  FinAb c;
  const AbHom f = hom(AbGroup({2, 4}), Z4, {{2, 1}});
  CHECK(c.morphism_from_json(c.morphism_to_json(f)) == f);
  CHECK(c.object_from_json(c.object_to_json(Z6)) == Z6);
}

TEST_SUITE_END();
