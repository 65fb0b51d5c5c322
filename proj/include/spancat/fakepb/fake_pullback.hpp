#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spancat/core/axioms.hpp"
#include "spancat/span/em_span.hpp"

namespace spancat {

/// The nine-object witness of a fake pullback of the cospan
/// (d, R, m) : U -> W <- V : (e, S, n):
///
///     Q <<-s-- Y --j->> V
///     ^r       ^e_bar   ^e
///     X <<-d_bar- Z -m_bar-> S
///     vi       vn_bar   vn
///     U <<-d-- R --m--> W
///
/// Bottom right is a pullback, bottom left and top right are
/// factorizations, top left is a pushout.
template <SuitableCategory C>
struct FakePullbackGrid {
  using Obj = typename C::Object;
  using Mor = typename C::Morphism;

  Obj q, x, y, z, u, r_obj, s_obj, v, w;
  Mor r, s, i, j, d_bar, e_bar, n_bar, m_bar;
  Mor d, m, e, n;

  Square<C> bottom_right() const { return {m_bar, n_bar, n, m}; }
  Square<C> top_left() const { return {e_bar, d_bar, s, r}; }
};

template <SuitableCategory C>
struct FakePullbackResult {
  FakePullbackGrid<C> grid;
  EMSpan<C> left_leg;   // (r, X, i) : Q -> U
  EMSpan<C> right_leg;  // (s, Y, j) : Q -> V

  SpanPair<C> pair() const { return {grid.q, left_leg, right_leg}; }
};

/// Pullback, two factorizations, pushout, in that order.
template <SuitableCategory C>
FakePullbackResult<C> fake_pullback(const C& c, const EMSpan<C>& f, const EMSpan<C>& g) {
  require(f.tgt == g.tgt, "fake_pullback: spans do not form a cospan");
  const Cone<C> pb = c.pullback_along_m(f.m, g.m);
  const auto& n_bar = pb.leg1;
  const auto& m_bar = pb.leg2;
  const Factorization<C> lf = c.factorize(c.compose(f.d, n_bar));
  const Factorization<C> rf = c.factorize(c.compose(g.d, m_bar));
  const Cone<C> po = c.pushout_along_e(rf.e, lf.e);
  FakePullbackGrid<C> grid{po.apex, lf.mid, rf.mid, pb.apex, f.src, f.apex, g.apex, g.src, f.tgt,
                           po.leg2, po.leg1, lf.m,   rf.m,    lf.e,   rf.e,    n_bar, m_bar,
                           f.d,     f.m,     g.d,    g.m};
  EMSpan<C> left{grid.q, grid.u, grid.x, grid.r, grid.i};
  EMSpan<C> right{grid.q, grid.v, grid.y, grid.s, grid.j};
  return {std::move(grid), std::move(left), std::move(right)};
}

/// Outcome of re-verifying every invariant of a grid.
struct GridCertificate {
  bool bottom_right_pullback = false;
  bool bottom_left_factorization = false;
  bool top_right_factorization = false;
  bool top_left_pushout = false;
  bool classes = false;
  bool s_invertible = true;  // d invertible implies s invertible
  bool j_invertible = true;  // m invertible implies j invertible

  bool ok() const {
    return bottom_right_pullback && bottom_left_factorization && top_right_factorization && top_left_pushout &&
           classes && s_invertible && j_invertible;
  }
  nlohmann::json to_json() const {
    return {{"bottom_right_pullback", bottom_right_pullback},
            {"bottom_left_factorization", bottom_left_factorization},
            {"top_right_factorization", top_right_factorization},
            {"top_left_pushout", top_left_pushout},
            {"classes", classes},
            {"s_invertible", s_invertible},
            {"j_invertible", j_invertible}};
  }
};

template <SuitableCategory C>
GridCertificate certify_grid(HomCache<C>& cache, const FakePullbackGrid<C>& g,
                             const std::vector<typename C::Object>& tests) {
  const C& c = cache.cat();
  auto e = [&](const auto& f) { return c.classify(f).in_e; };
  auto m = [&](const auto& f) { return c.classify(f).in_m; };
  auto iso = [&](const auto& f) { return c.classify(f).is_iso(); };
  GridCertificate cert;
  cert.bottom_right_pullback = is_pullback(cache, g.bottom_right(), tests);
  cert.bottom_left_factorization = c.compose(g.i, g.d_bar) == c.compose(g.d, g.n_bar);
  cert.top_right_factorization = c.compose(g.j, g.e_bar) == c.compose(g.e, g.m_bar);
  cert.top_left_pushout = is_pushout(cache, g.top_left(), tests);
  cert.classes = e(g.r) && e(g.s) && e(g.d) && e(g.e) && e(g.d_bar) && e(g.e_bar) && m(g.i) && m(g.j) && m(g.m) &&
                 m(g.n) && m(g.m_bar) && m(g.n_bar);
  if (iso(g.d)) cert.s_invertible = iso(g.s);
  if (iso(g.m)) cert.j_invertible = iso(g.j);
  return cert;
}

template <SuitableCategory C>
nlohmann::json grid_to_json(const C& c, const FakePullbackGrid<C>& g) {
  auto o = [&](const auto& x) { return c.object_to_json(x); };
  auto f = [&](const auto& x) { return c.morphism_to_json(x); };
  return {{"objects",
           {{"Q", o(g.q)}, {"X", o(g.x)}, {"Y", o(g.y)}, {"Z", o(g.z)}, {"U", o(g.u)},
            {"R", o(g.r_obj)}, {"S", o(g.s_obj)}, {"V", o(g.v)}, {"W", o(g.w)}}},
          {"morphisms",
           {{"r", f(g.r)}, {"s", f(g.s)}, {"i", f(g.i)}, {"j", f(g.j)}, {"d_bar", f(g.d_bar)},
            {"e_bar", f(g.e_bar)}, {"n_bar", f(g.n_bar)}, {"m_bar", f(g.m_bar)}, {"d", f(g.d)},
            {"m", f(g.m)}, {"e", f(g.e)}, {"n", f(g.n)}}}};
}

template <SuitableCategory C>
nlohmann::json fake_pullback_to_json(const C& c, const FakePullbackResult<C>& fp) {
  return {{"grid", grid_to_json(c, fp.grid)},
          {"left_leg", span_to_json(c, fp.left_leg)},
          {"right_leg", span_to_json(c, fp.right_leg)}};
}

/// Nine-node DOT layout of the grid, squares annotated.
template <SuitableCategory C>
std::string grid_to_dot(const C& c, const FakePullbackGrid<C>& g, const GridCertificate* cert = nullptr) {
  std::string out = "digraph fake_pullback {\n  rankdir=LR;\n  node [shape=plaintext];\n";
  const struct {
    const char* id;
    std::string label;
    int row, col;
  } nodes[] = {{"Q", c.describe(g.q), 0, 0}, {"Y", c.describe(g.y), 0, 1},     {"V", c.describe(g.v), 0, 2},
               {"X", c.describe(g.x), 1, 0}, {"Z", c.describe(g.z), 1, 1},     {"S", c.describe(g.s_obj), 1, 2},
               {"U", c.describe(g.u), 2, 0}, {"R", c.describe(g.r_obj), 2, 1}, {"W", c.describe(g.w), 2, 2}};
  for (const auto& n : nodes)
    out += "  " + std::string(n.id) + " [label=\"" + n.id + " = " + n.label + "\", pos=\"" +
           std::to_string(2 * n.col) + "," + std::to_string(2 * (2 - n.row)) + "!\"];\n";
  const struct {
    const char *from, *to, *name, *kind;
  } edges[] = {{"Y", "Q", "s", "E"},      {"Y", "V", "j", "M"},     {"X", "Q", "r", "E"},
               {"Z", "Y", "e_bar", "E"},  {"S", "V", "e", "E"},     {"Z", "X", "d_bar", "E"},
               {"Z", "S", "m_bar", "M"},  {"X", "U", "i", "M"},     {"Z", "R", "n_bar", "M"},
               {"S", "W", "n", "M"},      {"R", "U", "d", "E"},     {"R", "W", "m", "M"}};
  for (const auto& e : edges)
    out += "  " + std::string(e.from) + " -> " + e.to + " [label=\"" + e.name + "\"" +
           (std::string(e.kind) == "E" ? ", arrowhead=normalnormal" : ", arrowtail=inv, dir=both") + "];\n";
  auto tag = [&](const char* name, bool ok) { return std::string(name) + (cert ? (ok ? " (ok)" : " (FAILED)") : ""); };
  out += "  note_tl [label=\"" + tag("top-left: pushout", cert && cert->top_left_pushout) + "\"];\n";
  out += "  note_tr [label=\"" + tag("top-right: factorization", cert && cert->top_right_factorization) + "\"];\n";
  out += "  note_bl [label=\"" + tag("bottom-left: factorization", cert && cert->bottom_left_factorization) + "\"];\n";
  out += "  note_br [label=\"" + tag("bottom-right: pullback", cert && cert->bottom_right_pullback) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace spancat
