#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spancat/core/category.hpp"
#include "spancat/core/check_report.hpp"
#include "spancat/core/errors.hpp"
#include "spancat/core/sampler.hpp"
#include "spancat/core/universal.hpp"

namespace spancat {

struct CheckOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 500;
};

/// Shared state for a batch of checks on one instance: the hom cache,
/// the pool objects are sampled from, and the competitor objects used by
/// universal-property tests.
template <SuitableCategory C>
struct Workbench {
  using Obj = typename C::Object;
  using Mor = typename C::Morphism;

  explicit Workbench(const C& c) : cat(c), cache(c), pool(c.catalog()), tests(c.catalog()) {}

  const C& cat;
  HomCache<C> cache;
  std::vector<Obj> pool;
  std::vector<Obj> tests;

  std::vector<Obj> pool_up_to(std::size_t card) const {
    std::vector<Obj> out;
    for (const Obj& o : pool)
      if (cat.cardinality(o) <= card) out.push_back(o);
    return out;
  }

  Sampler<C> sampler(std::uint64_t seed) { return Sampler<C>(cache, seed, pool); }
  bool pullback(const Square<C>& sq) { return is_pullback(cache, sq, tests); }
  bool pushout(const Square<C>& sq) { return is_pushout(cache, sq, tests); }
  bool e(const Mor& f) const { return cat.classify(f).in_e; }
  bool m(const Mor& f) const { return cat.classify(f).in_m; }
  std::string name() const { return std::string(C::kName); }
};

/// Closure of E and M under composition, and identities in both classes.
template <SuitableCategory C>
CheckReport check_classes(Workbench<C>& wb, const CheckOptions& opt) {
  CheckReport rep("classes", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const auto a = s.object();
    const auto e1 = s.e_from(a);
    const auto e2 = s.e_from(c.cod(e1));
    const auto m1 = s.m_into(a);
    const auto m2 = s.m_into(c.dom(m1));
    const auto id = c.identity(a);
    const bool ok = wb.e(c.compose(e2, e1)) && wb.m(c.compose(m1, m2)) && c.classify(id).is_iso() &&
                    c.compose(c.identity(c.cod(e1)), e1) == e1 && c.compose(e1, id) == e1;
    rep.record(ok, dump_mors(c, {{"e1", &e1}, {"e2", &e2}, {"m1", &m1}, {"m2", &m2}}));
  }
  return rep;
}

/// E-maps are epimorphisms and M-maps are monomorphisms at catalog scope.
template <SuitableCategory C>
CheckReport check_proper(Workbench<C>& wb, const CheckOptions& opt) {
  CheckReport rep("proper", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const auto e = s.e_from(s.object());
    const auto m = s.m_into(s.object());
    const bool ok = is_epi(wb.cache, e, wb.tests) && is_mono(wb.cache, m, wb.tests);
    rep.record(ok, dump_mors(wb.cat, {{"e", &e}, {"m", &m}}));
  }
  return rep;
}

/// Unique diagonal fill: w |-> (w.e, m.w) is a bijection from hom(Y, A)
/// onto commuting pairs, and fill_diagonal finds it.
template <SuitableCategory C>
CheckReport check_fs1(Workbench<C>& wb, const CheckOptions& opt) {
  using Mor = typename C::Morphism;
  CheckReport rep("FS1", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Mor e = s.e_from(s.object());
    const Mor m = s.m_from(s.object());
    const auto x = c.dom(e), y = c.cod(e), a = c.dom(m), b = c.cod(m);
    std::map<Mor, std::size_t> by_base;
    for (const Mor& u : wb.cache.homs(x, a)) ++by_base[c.compose(m, u)];
    std::size_t pairs = 0;
    for (const Mor& v : wb.cache.homs(y, b)) {
      auto it = by_base.find(c.compose(v, e));
      if (it != by_base.end()) pairs += it->second;
    }
    const auto& ws = wb.cache.homs(y, a);
    std::set<std::pair<Mor, Mor>> images;
    for (const Mor& w : ws) images.emplace(c.compose(w, e), c.compose(m, w));
    bool ok = images.size() == ws.size() && ws.size() == pairs;
    if (ok && !ws.empty()) {
      const Mor& w0 = s.pick(ws);
      const Square<C> sq{e, c.compose(w0, e), c.compose(m, w0), m};
      try {
        ok = c.fill_diagonal(sq) == w0;
      } catch (const std::exception&) {
        ok = false;
      }
    }
    rep.record(ok, dump_mors(c, {{"e", &e}, {"m", &m}}));
  }
  return rep;
}

/// Factorization classes and recomposition; essential uniqueness against
/// every alternative factorization through a test object, on a subsample.
template <SuitableCategory C>
CheckReport check_fs2(Workbench<C>& wb, const CheckOptions& opt, std::size_t uniqueness_samples = 60) {
  using Mor = typename C::Morphism;
  CheckReport rep("FS2", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const auto a = s.object(), b = s.object();
    const Mor f = s.hom(a, b);
    const Factorization<C> fa = c.factorize(f);
    bool ok = wb.e(fa.e) && wb.m(fa.m) && c.cod(fa.e) == fa.mid && c.dom(fa.m) == fa.mid &&
              c.compose(fa.m, fa.e) == f;
    if (ok && k < uniqueness_samples) {
      for (const auto& t : wb.tests) {
        for (const Mor& e2 : wb.cache.e_homs(a, t)) {
          for (const Mor& m2 : wb.cache.m_homs(t, b)) {
            if (c.compose(m2, e2) != f) continue;
            const Mor w = c.fill_diagonal(Square<C>{fa.e, e2, fa.m, m2});
            ok = ok && c.classify(w).is_iso() && c.compose(w, fa.e) == e2 && c.compose(m2, w) == fa.m;
          }
        }
      }
    }
    rep.record(ok, dump_mors(c, {{"f", &f}}));
  }
  return rep;
}

/// Pullbacks along M exist, are pullbacks, and the leg parallel to m is
/// in M (first report); legs pulled back from E-maps stay in E (second).
template <SuitableCategory C>
std::pair<CheckReport, CheckReport> check_sfs1_sfs3(Workbench<C>& wb, const CheckOptions& opt) {
  using Mor = typename C::Morphism;
  CheckReport r1("SFS1", C::kName, opt.seed), r3("SFS3", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const auto a = s.object(), cc = s.object();
    const bool want_e = s.coin();
    std::optional<Mor> fe = want_e ? s.e_hom(a, cc) : std::nullopt;
    const Mor f = fe ? *fe : s.hom(a, cc);
    const Mor m = s.m_into(cc);
    const Cone<C> cone = c.pullback_along_m(f, m);
    const Square<C> sq = pullback_square(c, f, m, cone);
    const auto dump = dump_mors(c, {{"f", &f}, {"m", &m}});
    r1.record(wb.m(cone.leg1) && wb.pullback(sq), dump);
    if (wb.e(f)) r3.record(wb.e(cone.leg2), dump);
  }
  return {r1, r3};
}

/// Dual of check_sfs1_sfs3 for pushouts along E.
template <SuitableCategory C>
std::pair<CheckReport, CheckReport> check_sfs2_sfs4(Workbench<C>& wb, const CheckOptions& opt) {
  using Mor = typename C::Morphism;
  CheckReport r2("SFS2", C::kName, opt.seed), r4("SFS4", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const auto a = s.object(), b = s.object();
    const bool want_m = s.coin();
    std::optional<Mor> fm = want_m ? s.m_hom(a, b) : std::nullopt;
    const Mor f = fm ? *fm : s.hom(a, b);
    const Mor e = s.e_from(a);
    const Cone<C> cone = c.pushout_along_e(f, e);
    const Square<C> sq = pushout_square(c, f, e, cone);
    const auto dump = dump_mors(c, {{"f", &f}, {"e", &e}});
    r2.record(wb.e(cone.leg1) && wb.pushout(sq), dump);
    if (wb.m(f)) r4.record(wb.m(cone.leg2), dump);
  }
  return {r2, r4};
}

namespace detail {

template <SuitableCategory C>
std::vector<typename C::Morphism> class_filtered_out(Workbench<C>& wb, const typename C::Object& q,
                                                     const typename C::Morphism& to_e,
                                                     const typename C::Morphism& to_m) {
  std::vector<typename C::Morphism> out;
  for (const auto& t : wb.pool)
    for (const auto& k : wb.cache.homs(q, t))
      if (wb.e(wb.cat.compose(k, to_e)) && wb.m(wb.cat.compose(k, to_m))) out.push_back(k);
  return out;
}

template <SuitableCategory C>
std::vector<typename C::Morphism> class_filtered_in(Workbench<C>& wb, const typename C::Object& p,
                                                    const typename C::Morphism& from_e,
                                                    const typename C::Morphism& from_m) {
  std::vector<typename C::Morphism> out;
  for (const auto& t : wb.pool)
    for (const auto& k : wb.cache.homs(t, p))
      if (wb.e(wb.cat.compose(from_e, k)) && wb.m(wb.cat.compose(from_m, k))) out.push_back(k);
  return out;
}

}  // namespace detail

/// Squares with top n in M, left e in E, right d in E, bottom m in M:
/// pullback iff pushout. Squares come from pullbacks of cospans, pushouts
/// of spans pushed further along a class-preserving map, and pullbacks
/// precomposed with one.
template <SuitableCategory C>
CheckReport check_sfs5(Workbench<C>& wb, const CheckOptions& opt) {
  using Mor = typename C::Morphism;
  CheckReport rep("SFS5", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  std::size_t bicartesian = 0, neither = 0;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const std::size_t mode = k % 3;
    auto make = [&]() -> Square<C> {
      if (mode == 1) {
        const auto d0 = s.object();
        const Mor e = s.e_from(d0);
        const Mor n = s.m_from(d0);
        const Cone<C> po = c.pushout_along_e(n, e);
        Square<C> out{n, e, po.leg1, po.leg2};
        if (s.index(3) != 0) {
          const auto ks = detail::class_filtered_out(wb, po.apex, po.leg1, po.leg2);
          if (!ks.empty()) {
            const Mor& kk = s.pick(ks);
            out.right = c.compose(kk, po.leg1);
            out.bottom = c.compose(kk, po.leg2);
          }
        }
        return out;
      }
      const auto cc = s.object();
      const Mor m = s.m_into(cc);
      const Mor d = s.e_into(cc);
      const Cone<C> pb = c.pullback_along_m(d, m);
      Square<C> out{pb.leg1, pb.leg2, d, m};
      if (mode == 2) {
        const auto ks = detail::class_filtered_in(wb, pb.apex, pb.leg2, pb.leg1);
        if (!ks.empty()) {
          const Mor& kk = s.pick(ks);
          out.top = c.compose(pb.leg1, kk);
          out.left = c.compose(pb.leg2, kk);
        }
      }
      return out;
    };
    const Square<C> sq = make();
    const bool shape = wb.m(sq.top) && wb.e(sq.left) && wb.e(sq.right) && wb.m(sq.bottom) && square_commutes(c, sq);
    const bool pb = wb.pullback(sq);
    const bool po = wb.pushout(sq);
    if (pb && po) ++bicartesian;
    if (!pb && !po) ++neither;
    rep.record(shape && pb == po, dump_square(c, sq));
  }
  rep.note = std::to_string(bicartesian) + " bicartesian, " + std::to_string(neither) + " neither";
  return rep;
}

/// An M-morphism of factorizations
///
///     A -d->> B -i-> C
///     l       m      n
///     X -e->> Y -j-> Z
///
/// with l, m, n in M.
template <SuitableCategory C>
struct FactorizationLadder {
  typename C::Morphism d, i, e, j, l, m, n;

  Square<C> left() const { return {d, l, m, e}; }
  Square<C> right() const { return {i, m, n, j}; }
  Square<C> pasted(const C& c) const { return {c.compose(i, d), l, n, c.compose(j, e)}; }

  nlohmann::json to_json(const C& c) const {
    return dump_mors(c, {{"d", &d}, {"i", &i}, {"e", &e}, {"j", &j}, {"l", &l}, {"m", &m}, {"n", &n}});
  }
};

/// Pasted square is a pullback iff both component squares are.
template <SuitableCategory C>
CheckReport check_pasting_lemma(Workbench<C>& wb, const CheckOptions& opt) {
  using Mor = typename C::Morphism;
  CheckReport rep("pasting", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  std::size_t pasted_pb = 0;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const std::size_t mode = k % 3;
    const Mor e = s.e_from(s.object());
    const Mor j = s.m_from(c.cod(e));
    const Mor n = s.m_into(c.cod(j));
    const Cone<C> right = c.pullback_along_m(j, n);
    Mor m = right.leg1;
    Mor i = right.leg2;
    if (mode == 1) {
      const Mor kk = s.m_into(right.apex);
      m = c.compose(m, kk);
      i = c.compose(i, kk);
    }
    const Cone<C> left = c.pullback_along_m(e, m);
    Mor l = left.leg1;
    Mor d = left.leg2;
    if (mode == 2) {
      const Mor kk = s.m_into(left.apex);
      const Factorization<C> fa = c.factorize(c.compose(d, kk));
      d = fa.e;
      l = c.compose(l, kk);
      i = c.compose(i, fa.m);
      m = c.compose(m, fa.m);
    }
    const FactorizationLadder<C> lad{d, i, e, j, l, m, n};
    const bool shape = wb.e(lad.d) && wb.e(lad.e) && wb.m(lad.i) && wb.m(lad.j) && wb.m(lad.l) && wb.m(lad.m) &&
                       wb.m(lad.n) && square_commutes(c, lad.left()) && square_commutes(c, lad.right());
    const bool whole = wb.pullback(lad.pasted(c));
    const bool parts = wb.pullback(lad.left()) && wb.pullback(lad.right());
    if (whole) ++pasted_pb;
    rep.record(shape && whole == parts, lad.to_json(c));
  }
  rep.note = std::to_string(pasted_pb) + " pasted squares were pullbacks";
  return rep;
}

/// The dual: with l, m, n in E, the pasted square is a pushout iff both
/// component squares are.
template <SuitableCategory C>
CheckReport check_pasting_dual(Workbench<C>& wb, const CheckOptions& opt) {
  using Mor = typename C::Morphism;
  CheckReport rep("pasting-dual", C::kName, opt.seed);
  auto s = wb.sampler(opt.seed);
  const C& c = wb.cat;
  std::size_t pasted_po = 0;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const std::size_t mode = k % 3;
    const auto a = s.object();
    const Mor d = s.e_from(a);
    const Mor i = s.m_from(c.cod(d));
    const Mor l = s.e_from(a);
    const Cone<C> left = c.pushout_along_e(d, l);
    Mor m = left.leg1;
    Mor e = left.leg2;
    if (mode == 1) {
      const Mor kk = s.e_from(left.apex);
      m = c.compose(kk, m);
      e = c.compose(kk, e);
    }
    const Cone<C> right = c.pushout_along_e(i, m);
    Mor n = right.leg1;
    Mor j = right.leg2;
    if (mode == 2) {
      const Mor kk = s.e_from(right.apex);
      const Factorization<C> fa = c.factorize(c.compose(kk, j));
      j = fa.m;
      n = c.compose(kk, n);
      e = c.compose(fa.e, e);
      m = c.compose(fa.e, m);
    }
    const FactorizationLadder<C> lad{d, i, e, j, l, m, n};
    const bool shape = wb.e(lad.d) && wb.e(lad.e) && wb.m(lad.i) && wb.m(lad.j) && wb.e(lad.l) && wb.e(lad.m) &&
                       wb.e(lad.n) && square_commutes(c, lad.left()) && square_commutes(c, lad.right());
    const bool whole = wb.pushout(lad.pasted(c));
    const bool parts = wb.pushout(lad.left()) && wb.pushout(lad.right());
    if (whole) ++pasted_po;
    rep.record(shape && whole == parts, lad.to_json(c));
  }
  rep.note = std::to_string(pasted_po) + " pasted squares were pushouts";
  return rep;
}

/// Every span X <<- S >-> Y between pool objects of cardinality at most
/// `bound` is jointly monic against all test objects.
template <SuitableCategory C>
CheckReport check_jointly_monic(Workbench<C>& wb, std::size_t bound, std::uint64_t seed = 0) {
  using Mor = typename C::Morphism;
  CheckReport rep("jointly-monic", C::kName, seed);
  const C& c = wb.cat;
  const auto objs = wb.pool_up_to(bound);
  for (const auto& sx : objs)
    for (const auto& x : objs)
      for (const auto& y : objs)
        for (const Mor& d : wb.cache.e_homs(sx, x))
          for (const Mor& m : wb.cache.m_homs(sx, y)) {
            bool ok = true;
            for (const auto& t : wb.tests) {
              std::set<std::pair<Mor, Mor>> seen;
              for (const Mor& u : wb.cache.homs(t, sx))
                ok = ok && seen.emplace(c.compose(d, u), c.compose(m, u)).second;
            }
            rep.record(ok, dump_mors(c, {{"d", &d}, {"m", &m}}));
          }
  rep.note = "exhaustive, cardinality <= " + std::to_string(bound);
  return rep;
}

/// Every cospan X >-> C <<- Y is jointly epic.
template <SuitableCategory C>
CheckReport check_jointly_epic(Workbench<C>& wb, std::size_t bound, std::uint64_t seed = 0) {
  using Mor = typename C::Morphism;
  CheckReport rep("jointly-epic", C::kName, seed);
  const C& c = wb.cat;
  const auto objs = wb.pool_up_to(bound);
  for (const auto& cc : objs)
    for (const auto& x : objs)
      for (const auto& y : objs)
        for (const Mor& m : wb.cache.m_homs(x, cc))
          for (const Mor& e : wb.cache.e_homs(y, cc)) {
            bool ok = true;
            for (const auto& t : wb.tests) {
              std::set<std::pair<Mor, Mor>> seen;
              for (const Mor& k : wb.cache.homs(cc, t))
                ok = ok && seen.emplace(c.compose(k, m), c.compose(k, e)).second;
            }
            rep.record(ok, dump_mors(c, {{"m", &m}, {"e", &e}}));
          }
  rep.note = "exhaustive, cardinality <= " + std::to_string(bound);
  return rep;
}

struct AxiomOptions {
  CheckOptions base;
  std::size_t pasting_samples = 200;
  std::size_t jointly_bound = 4;
};

/// FS1, FS2, SFS1-SFS5, pasting (both forms), jointly monic/epic.
template <SuitableCategory C>
SuiteReport check_axioms(Workbench<C>& wb, const AxiomOptions& opt) {
  SuiteReport suite{"axioms", wb.name(), opt.base.seed, {}};
  const CheckOptions paste{opt.base.seed, opt.pasting_samples};
  suite.checks.push_back(check_classes(wb, opt.base));
  suite.checks.push_back(check_fs1(wb, opt.base));
  suite.checks.push_back(check_fs2(wb, opt.base));
  auto [s1, s3] = check_sfs1_sfs3(wb, opt.base);
  auto [s2, s4] = check_sfs2_sfs4(wb, opt.base);
  suite.checks.push_back(s1);
  suite.checks.push_back(s2);
  suite.checks.push_back(s3);
  suite.checks.push_back(s4);
  suite.checks.push_back(check_sfs5(wb, opt.base));
  suite.checks.push_back(check_pasting_lemma(wb, paste));
  suite.checks.push_back(check_pasting_dual(wb, paste));
  suite.checks.push_back(check_jointly_monic(wb, opt.jointly_bound, opt.base.seed));
  suite.checks.push_back(check_jointly_epic(wb, opt.jointly_bound, opt.base.seed));
  return suite;
}

}  // namespace spancat
