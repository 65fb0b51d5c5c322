#include "spancat/finab/abelian.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spancat/core/errors.hpp"
#include "spancat/finab/normal_form.hpp"

namespace spancat::finab {

// ---------------------------------------------------------------- AbGroup

AbGroup::AbGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  for (std::int64_t o : orders_) require(o >= 1, "group orders must be positive");
}

std::int64_t AbGroup::order() const {
  std::int64_t n = 1;
  for (std::int64_t o : orders_) n = checked_mul(n, o);
  return n;
}

std::int64_t AbGroup::encode(std::span<const std::int64_t> x) const {
  std::int64_t code = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) code = code * orders_[i] + mod_floor(x[i], orders_[i]);
  return code;
}

Element AbGroup::decode(std::int64_t code) const {
  Element x(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    x[i] = code % orders_[i];
    code /= orders_[i];
  }
  return x;
}

Element AbGroup::reduce(std::span<const std::int64_t> x) const {
  Element r(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) r[i] = mod_floor(x[i], orders_[i]);
  return r;
}

std::string AbGroup::to_string() const {
  if (orders_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < orders_.size(); ++i) out << (i ? "+" : "") << "Z/" << orders_[i];
  return out.str();
}

AbGroup direct_sum(const AbGroup& a, const AbGroup& b) {
  std::vector<std::int64_t> o = a.orders();
  o.insert(o.end(), b.orders().begin(), b.orders().end());
  return AbGroup(std::move(o));
}

AbGroup canonical_form(const AbGroup& g) {
  const SmithForm s = smith_normal_form(IntMatrix::diagonal(g.orders(), g.rank(), g.rank()));
  std::vector<std::int64_t> inv;
  for (std::int64_t d : s.diagonal())
    if (d > 1) inv.push_back(d);
  return AbGroup(std::move(inv));
}

std::vector<AbGroup> groups_up_to_order(std::int64_t max_order) {
  std::vector<AbGroup> out;
  std::vector<std::int64_t> seq;
  std::function<void(std::int64_t, std::int64_t)> extend = [&](std::int64_t last, std::int64_t prod) {
    out.emplace_back(seq);
    for (std::int64_t next = std::max<std::int64_t>(last, 2); prod * next <= max_order; next += std::max<std::int64_t>(last, 1)) {
      if (next % last != 0) continue;
      seq.push_back(next);
      extend(next, prod * next);
      seq.pop_back();
    }
  };
  extend(1, 1);
  std::sort(out.begin(), out.end(), [](const AbGroup& a, const AbGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.orders() < b.orders();
  });
  return out;
}

// ------------------------------------------------------------------ AbHom

AbHom::AbHom(AbGroup dom, AbGroup cod, IntMatrix matrix)
    : dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(matrix)) {
  require(matrix_.rows() == cod_.rank() && matrix_.cols() == dom_.rank(),
          "hom matrix shape does not match " + dom_.to_string() + " -> " + cod_.to_string());
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j) matrix_(i, j) = mod_floor(matrix_(i, j), cod_.orders()[i]);
  for (std::size_t j = 0; j < matrix_.cols(); ++j)
    for (std::size_t i = 0; i < matrix_.rows(); ++i)
      require(mod_floor(checked_mul(dom_.orders()[j], matrix_(i, j)), cod_.orders()[i]) == 0,
              "hom is not well defined on generator " + std::to_string(j));
}

AbHom AbHom::zero(const AbGroup& dom, const AbGroup& cod) { return AbHom(dom, cod, IntMatrix(cod.rank(), dom.rank())); }

AbHom AbHom::identity(const AbGroup& g) { return AbHom(g, g, IntMatrix::identity(g.rank())); }

Element AbHom::apply(std::span<const std::int64_t> x) const { return cod_.reduce(matrix_.apply(x)); }

std::int64_t AbHom::apply_code(std::int64_t code) const {
  const Element x = dom_.decode(code);
  return cod_.encode(matrix_.apply(x));
}

std::string AbHom::to_string() const {
  return dom_.to_string() + " -" + matrix_.to_string() + "-> " + cod_.to_string();
}

AbHom compose(const AbHom& g, const AbHom& f) {
  require(f.cod() == g.dom(), "compose: " + f.cod().to_string() + " != " + g.dom().to_string());
  return AbHom(f.dom(), g.cod(), g.matrix() * f.matrix());
}

AbHom add(const AbHom& f, const AbHom& g) {
  require(f.dom() == g.dom() && f.cod() == g.cod(), "add: homs are not parallel");
  IntMatrix m = f.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = checked_add(m(i, j), g.matrix()(i, j));
  return AbHom(f.dom(), f.cod(), std::move(m));
}

AbHom negate(const AbHom& f) { return AbHom(f.dom(), f.cod(), -f.matrix()); }

AbHom projection_left(const AbGroup& a, const AbGroup& b) {
  return AbHom(direct_sum(a, b), a, IntMatrix::hconcat(IntMatrix::identity(a.rank()), IntMatrix(a.rank(), b.rank())));
}

AbHom projection_right(const AbGroup& a, const AbGroup& b) {
  return AbHom(direct_sum(a, b), b, IntMatrix::hconcat(IntMatrix(b.rank(), a.rank()), IntMatrix::identity(b.rank())));
}

AbHom injection_left(const AbGroup& a, const AbGroup& b) {
  return AbHom(a, direct_sum(a, b), IntMatrix::vconcat(IntMatrix::identity(a.rank()), IntMatrix(b.rank(), a.rank())));
}

AbHom injection_right(const AbGroup& a, const AbGroup& b) {
  return AbHom(b, direct_sum(a, b), IntMatrix::vconcat(IntMatrix(a.rank(), b.rank()), IntMatrix::identity(b.rank())));
}

AbHom pairing(const AbHom& f, const AbHom& g) {
  require(f.dom() == g.dom(), "pairing: domains differ");
  return AbHom(f.dom(), direct_sum(f.cod(), g.cod()), IntMatrix::vconcat(f.matrix(), g.matrix()));
}

AbHom copairing(const AbHom& f, const AbHom& g) {
  require(f.cod() == g.cod(), "copairing: codomains differ");
  return AbHom(direct_sum(f.dom(), g.dom()), f.cod(), IntMatrix::hconcat(f.matrix(), g.matrix()));
}

// -------------------------------------------------------------- Subgroups

std::vector<std::int64_t> Subgroup::elements() const {
  const std::int64_t n = embedding.dom().order();
  std::vector<std::int64_t> codes;
  codes.reserve(static_cast<std::size_t>(n));
  for (std::int64_t c = 0; c < n; ++c) codes.push_back(embedding.apply_code(c));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

bool Subgroup::operator==(const Subgroup& other) const {
  return ambient == other.ambient && order() == other.order() && elements() == other.elements();
}

GeneratedSubgroup subgroup_from_generators(const AbGroup& ambient, const IntMatrix& generators) {
  require(generators.rows() == ambient.rank(), "generators have the wrong length");
  const std::size_t n = ambient.rank(), k = generators.cols();
  if (k == 0) {
    const AbGroup trivial;
    return {{ambient, AbHom::zero(trivial, ambient)}, IntMatrix(0, 0)};
  }
  // Relations among the generators: first k coordinates of ker [G | diag(a)].
  const IntMatrix presentation = IntMatrix::hconcat(generators, IntMatrix::diagonal(ambient.orders(), n, n));
  const IntMatrix relations = integer_kernel(presentation).row_range(0, k);
  const SmithForm s = smith_normal_form(relations);
  const auto diag = s.diagonal();
  std::vector<std::size_t> keep;
  std::vector<std::int64_t> factors;
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t d = i < diag.size() ? diag[i] : 0;
    if (d == 0) throw InstanceError("generated subgroup of a finite group must be finite");
    if (d > 1) {
      keep.push_back(i);
      factors.push_back(d);
    }
  }
  AbGroup group(std::move(factors));
  AbHom embedding(group, ambient, generators * s.u_inv.select_cols(keep));
  IntMatrix coords = s.u.select_rows(keep);
  for (std::size_t r = 0; r < coords.rows(); ++r)
    for (std::size_t c = 0; c < coords.cols(); ++c) coords(r, c) = mod_floor(coords(r, c), group.orders()[r]);
  return {{ambient, std::move(embedding)}, std::move(coords)};
}

Subgroup subgroup_from_elements(const AbGroup& ambient, const std::vector<Element>& generators) {
  IntMatrix g(ambient.rank(), generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t i = 0; i < ambient.rank(); ++i) g(i, j) = generators[j].at(i);
  return subgroup_from_generators(ambient, g).subgroup;
}

Subgroup kernel(const AbHom& f) {
  const AbGroup& a = f.dom();
  const AbGroup& b = f.cod();
  const IntMatrix system = IntMatrix::hconcat(f.matrix(), IntMatrix::diagonal(b.orders(), b.rank(), b.rank()));
  const IntMatrix lattice = integer_kernel(system).row_range(0, a.rank());
  return subgroup_from_generators(a, lattice).subgroup;
}

Subgroup image(const AbHom& f) { return subgroup_from_generators(f.cod(), f.matrix()).subgroup; }

Cokernel cokernel(const AbHom& f) {
  const AbGroup& b = f.cod();
  const std::size_t m = b.rank();
  const IntMatrix presentation = IntMatrix::hconcat(IntMatrix::diagonal(b.orders(), m, m), f.matrix());
  const SmithForm s = smith_normal_form(presentation);
  const auto diag = s.diagonal();
  std::vector<std::size_t> keep;
  std::vector<std::int64_t> factors;
  for (std::size_t i = 0; i < m; ++i) {
    if (diag[i] > 1) {
      keep.push_back(i);
      factors.push_back(diag[i]);
    }
  }
  AbGroup q(std::move(factors));
  return {q, AbHom(b, q, s.u.select_rows(keep))};
}

namespace {

std::int64_t cokernel_order(const AbHom& f) {
  const AbGroup& b = f.cod();
  const std::size_t m = b.rank();
  const SmithForm s = smith_normal_form(IntMatrix::hconcat(IntMatrix::diagonal(b.orders(), m, m), f.matrix()));
  std::int64_t n = 1;
  for (std::int64_t d : s.diagonal()) n = checked_mul(n, d);
  return n;
}

}  // namespace

bool is_surjective(const AbHom& f) { return cokernel_order(f) == 1; }

bool is_injective(const AbHom& f) {
  // |im f| = |B| / |coker f|
  return f.cod().order() / cokernel_order(f) == f.dom().order();
}

AbFactorization ab_factorize(const AbHom& f) {
  GeneratedSubgroup img = subgroup_from_generators(f.cod(), f.matrix());
  const AbGroup mid = img.subgroup.embedding.dom();
  AbHom e(f.dom(), mid, std::move(img.coordinates));
  return {std::move(e), mid, std::move(img.subgroup.embedding)};
}

AbCone ab_pullback(const AbHom& f, const AbHom& g) {
  require(f.cod() == g.cod(), "pullback: codomains differ");
  const Subgroup k = kernel(copairing(f, negate(g)));
  const AbGroup apex = k.embedding.dom();
  return {apex, compose(projection_left(f.dom(), g.dom()), k.embedding),
          compose(projection_right(f.dom(), g.dom()), k.embedding)};
}

AbCone ab_pushout(const AbHom& f, const AbHom& g) {
  require(f.dom() == g.dom(), "pushout: domains differ");
  const Cokernel q = cokernel(pairing(f, negate(g)));
  return {q.group, compose(q.quotient, injection_left(f.cod(), g.cod())),
          compose(q.quotient, injection_right(f.cod(), g.cod()))};
}

std::optional<AbHom> lift_through_mono(const AbHom& m, const AbHom& v) {
  require(m.cod() == v.cod(), "lift: codomains differ");
  require(is_injective(m), "lift: map is not injective");
  const AbGroup& s = m.dom();
  const AbGroup& b = m.cod();
  const IntMatrix system = IntMatrix::hconcat(m.matrix(), IntMatrix::diagonal(b.orders(), b.rank(), b.rank()));
  IntMatrix w(s.rank(), v.dom().rank());
  for (std::size_t j = 0; j < v.dom().rank(); ++j) {
    const auto target = v.matrix().column(j);
    const auto sol = solve_integer(system, target);
    if (!sol) return std::nullopt;
    for (std::size_t i = 0; i < s.rank(); ++i) w(i, j) = (*sol)[i];
  }
  return AbHom(v.dom(), s, std::move(w));
}

CanonicalIso canonical_iso(const AbGroup& g) {
  GeneratedSubgroup gs = subgroup_from_generators(g, IntMatrix::identity(g.rank()));
  AbGroup can = gs.subgroup.embedding.dom();
  AbHom to(g, can, std::move(gs.coordinates));
  return {can, std::move(to), std::move(gs.subgroup.embedding)};
}

std::optional<AbHom> find_iso(const AbGroup& a, const AbGroup& b) {
  const CanonicalIso ca = canonical_iso(a);
  const CanonicalIso cb = canonical_iso(b);
  if (ca.canonical != cb.canonical) return std::nullopt;
  return compose(cb.from_canonical, ca.to_canonical);
}

std::vector<AbHom> all_homs(const AbGroup& a, const AbGroup& b, std::size_t limit) {
  // Images of each generator: elements killed by the generator's order.
  std::vector<std::vector<Element>> choices(a.rank());
  std::size_t total = 1;
  for (std::size_t j = 0; j < a.rank(); ++j) {
    for (std::int64_t c = 0; c < b.order(); ++c) {
      Element x = b.decode(c);
      bool ok = true;
      for (std::size_t i = 0; i < b.rank() && ok; ++i) ok = (a.orders()[j] * x[i]) % b.orders()[i] == 0;
      if (ok) choices[j].push_back(std::move(x));
    }
    total *= choices[j].size();
    if (total > limit) throw std::length_error("hom set " + a.to_string() + " -> " + b.to_string() + " too large");
  }
  std::vector<AbHom> out;
  out.reserve(total);
  std::vector<std::size_t> idx(a.rank(), 0);
  IntMatrix m(b.rank(), a.rank());
  for (;;) {
    for (std::size_t j = 0; j < a.rank(); ++j)
      for (std::size_t i = 0; i < b.rank(); ++i) m(i, j) = choices[j][idx[j]][i];
    out.emplace_back(a, b, m);
    std::size_t j = a.rank();
    while (j > 0) {
      --j;
      if (++idx[j] < choices[j].size()) break;
      idx[j] = 0;
      if (j == 0) return out;
    }
    if (a.rank() == 0) return out;
  }
}

std::vector<Subgroup> all_subgroups(const AbGroup& g) {
  const std::int64_t n = g.order();
  auto add_codes = [&](std::int64_t x, std::int64_t y) {
    Element ex = g.decode(x), ey = g.decode(y);
    for (std::size_t i = 0; i < ex.size(); ++i) ex[i] += ey[i];
    return g.encode(ex);
  };
  using Members = std::vector<bool>;
  std::set<Members> seen;
  std::vector<std::pair<Members, std::vector<std::int64_t>>> found;
  std::deque<std::size_t> queue;
  Members zero(static_cast<std::size_t>(n), false);
  zero[0] = true;
  seen.insert(zero);
  found.push_back({zero, {}});
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    for (std::int64_t c = 0; c < n; ++c) {
      if (found[at].first[static_cast<std::size_t>(c)]) continue;
      Members next = found[at].first;
      // H + <c>
      std::vector<std::int64_t> base;
      for (std::int64_t h = 0; h < n; ++h)
        if (next[static_cast<std::size_t>(h)]) base.push_back(h);
      std::int64_t multiple = c;
      while (!found[at].first[static_cast<std::size_t>(multiple)]) {
        for (std::int64_t h : base) next[static_cast<std::size_t>(add_codes(h, multiple))] = true;
        multiple = add_codes(multiple, c);
      }
      if (seen.insert(next).second) {
        auto gens = found[at].second;
        gens.push_back(c);
        found.push_back({std::move(next), std::move(gens)});
        queue.push_back(found.size() - 1);
      }
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& [members, gens] : found) {
    std::vector<Element> elems;
    for (std::int64_t c : gens) elems.push_back(g.decode(c));
    out.push_back(subgroup_from_elements(g, elems));
  }
  return out;
}

SubgroupRelation subgroup_compose(const SubgroupRelation& s, const SubgroupRelation& t) {
  require(s.z == t.x, "subgroup_compose: middle groups differ");
  const AbHom sx = compose(projection_left(s.x, s.z), s.s.embedding);
  const AbHom sy = compose(projection_right(s.x, s.z), s.s.embedding);
  const AbHom ty = compose(projection_left(t.x, t.z), t.s.embedding);
  const AbHom tz = compose(projection_right(t.x, t.z), t.s.embedding);
  const AbCone p = ab_pullback(sy, ty);
  const AbHom to_xz = pairing(compose(sx, p.leg1), compose(tz, p.leg2));
  return {s.x, t.z, image(to_xz)};
}

SubgroupRelation goursat_subgroup(const AbHom& m, const AbHom& d, const AbHom& e, const AbHom& n) {
  require(m.dom() == d.dom() && e.dom() == n.dom() && d.cod() == e.cod(), "goursat_subgroup: zig-zag endpoints do not match");
  const AbCone p = ab_pullback(d, e);
  const AbHom to_xz = pairing(compose(m, p.leg1), compose(n, p.leg2));
  return {m.cod(), n.cod(), image(to_xz)};
}

}  // namespace spancat::finab
