#include "spancat/pinj/partial_injection.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "spancat/core/errors.hpp"

namespace spancat::pinj {

PInj::PInj(FinSet dom, FinSet cod, std::vector<Target> assignment)
    : dom_(dom), cod_(cod), map_(std::move(assignment)) {
  require(map_.size() == dom_.size, "assignment length must equal the domain size");
  std::vector<bool> used(cod_.size, false);
  for (const Target& t : map_) {
    if (!t) continue;
    require(*t < cod_.size, "assignment target out of range");
    require(!used[*t], "assignment is not injective");
    used[*t] = true;
  }
}

PInj PInj::identity(FinSet a) {
  std::vector<Target> m(a.size);
  for (std::size_t i = 0; i < a.size; ++i) m[i] = i;
  return PInj(a, a, std::move(m));
}

PInj PInj::empty(FinSet dom, FinSet cod) { return PInj(dom, cod, std::vector<Target>(dom.size)); }

bool PInj::is_total() const {
  return std::all_of(map_.begin(), map_.end(), [](const Target& t) { return t.has_value(); });
}

bool PInj::is_surjective() const { return defined_count() == cod_.size; }

std::size_t PInj::defined_count() const {
  return static_cast<std::size_t>(std::count_if(map_.begin(), map_.end(), [](const Target& t) { return t.has_value(); }));
}

std::vector<std::size_t> PInj::domain_of_definition() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> PInj::image() const {
  std::vector<std::size_t> out;
  for (const Target& t : map_)
    if (t) out.push_back(*t);
  std::sort(out.begin(), out.end());
  return out;
}

std::string PInj::to_string() const {
  std::ostringstream out;
  out << '{' << dom_.size << "} -[";
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (i) out << ' ';
    if (map_[i])
      out << *map_[i];
    else
      out << '_';
  }
  out << "]-> {" << cod_.size << '}';
  return out.str();
}

PInj pinj_compose(const PInj& g, const PInj& f) {
  require(f.cod() == g.dom(), "compose: endpoint mismatch " + f.to_string() + " then " + g.to_string());
  std::vector<PInj::Target> m(f.dom().size);
  for (std::size_t x = 0; x < m.size(); ++x)
    if (auto y = f(x)) m[x] = g(*y);
  return PInj(f.dom(), g.cod(), std::move(m));
}

PInj pinj_reverse(const PInj& f) {
  std::vector<PInj::Target> m(f.cod().size);
  for (std::size_t x = 0; x < f.dom().size; ++x)
    if (auto y = f(x)) m[*y] = x;
  return PInj(f.cod(), f.dom(), std::move(m));
}

std::vector<PInj> all_partial_injections(FinSet a, FinSet b) {
  std::vector<PInj> out;
  std::vector<PInj::Target> m(a.size);
  std::vector<bool> used(b.size, false);
  std::function<void(std::size_t)> go = [&](std::size_t x) {
    if (x == a.size) {
      out.emplace_back(a, b, m);
      return;
    }
    m[x].reset();
    go(x + 1);
    for (std::size_t y = 0; y < b.size; ++y) {
      if (used[y]) continue;
      used[y] = true;
      m[x] = y;
      go(x + 1);
      used[y] = false;
    }
    m[x].reset();
  };
  go(0);
  return out;
}

PartialInjections::PartialInjections(std::size_t max_size) : max_size_(max_size) {
  for (std::size_t n = 0; n <= max_size; ++n) catalog_.push_back(FinSet{n});
}

Factorization<PartialInjections> PartialInjections::factorize(const PInj& f) const {
  const std::vector<std::size_t> defined = f.domain_of_definition();
  const FinSet mid{defined.size()};
  std::vector<PInj::Target> e(f.dom().size), m(mid.size);
  for (std::size_t i = 0; i < defined.size(); ++i) {
    e[defined[i]] = i;
    m[i] = f(defined[i]);
  }
  return {PInj(f.dom(), mid, std::move(e)), mid, PInj(mid, f.cod(), std::move(m))};
}

PInj PartialInjections::fill_diagonal(const Square<PartialInjections>& sq) const {
  const PInj& e = sq.top;
  const PInj& m = sq.bottom;
  require(e.is_surjective(), "fill_diagonal: top edge is not in E");
  require(m.is_total(), "fill_diagonal: bottom edge is not in M");
  require(compose(m, sq.left) == compose(sq.right, e), "fill_diagonal: square does not commute");
  const PInj m_inv = pinj_reverse(m);
  std::vector<PInj::Target> w(e.cod().size);
  for (std::size_t y = 0; y < w.size(); ++y) {
    if (auto b = sq.right(y)) {
      w[y] = m_inv(*b);
      if (!w[y]) throw InstanceError("fill_diagonal: image not contained in the mono");
    }
  }
  PInj result(e.cod(), m.dom(), std::move(w));
  if (compose(result, e) != sq.left) throw InstanceError("fill_diagonal: lift does not restrict correctly");
  return result;
}

Cone<PartialInjections> PartialInjections::pullback_along_m(const PInj& f, const PInj& m) const {
  require(m.is_total(), "pullback_along_m: m is not in M");
  require(f.cod() == m.cod(), "pullback_along_m: codomains differ");
  const PInj m_inv = pinj_reverse(m);
  // Drop exactly the points f sends outside the image of m.
  std::vector<std::size_t> kept;
  for (std::size_t a = 0; a < f.dom().size; ++a) {
    const auto c = f(a);
    if (!c || m_inv(*c)) kept.push_back(a);
  }
  const FinSet apex{kept.size()};
  std::vector<PInj::Target> to_a(apex.size), to_b(apex.size);
  for (std::size_t p = 0; p < kept.size(); ++p) {
    to_a[p] = kept[p];
    if (const auto c = f(kept[p])) to_b[p] = m_inv(*c);
  }
  return {apex, PInj(apex, f.dom(), std::move(to_a)), PInj(apex, m.dom(), std::move(to_b))};
}

Cone<PartialInjections> PartialInjections::pushout_along_e(const PInj& f, const PInj& e) const {
  require(e.is_surjective(), "pushout_along_e: e is not in E");
  require(f.dom() == e.dom(), "pushout_along_e: domains differ");
  const Cone<PartialInjections> pb = pullback_along_m(pinj_reverse(f), pinj_reverse(e));
  return {pb.apex, pinj_reverse(pb.leg1), pinj_reverse(pb.leg2)};
}

std::optional<PInj> PartialInjections::find_iso(FinSet a, FinSet b) const {
  if (a != b) return std::nullopt;
  return PInj::identity(a);
}

PartialInjections::SpanKey PartialInjections::span_key(const PInj& d, const PInj& m) const {
  require(d.dom() == m.dom(), "span_key: legs do not share an apex");
  SpanKey key;
  for (std::size_t r = 0; r < d.dom().size; ++r) {
    const long left = d(r) ? static_cast<long>(*d(r)) : -1;
    const long right = m(r) ? static_cast<long>(*m(r)) : -1;
    key.emplace_back(left, right);
  }
  std::sort(key.begin(), key.end());
  return key;
}

PartialInjections::ZigZagKey PartialInjections::zigzag_key(const PInj& m, const PInj& d, const PInj& e,
                                                           const PInj& n) const {
  require(m.dom() == d.dom() && e.dom() == n.dom() && d.cod() == e.cod(),
          "zigzag_key: zig-zag endpoints do not match");
  const PInj e_inv = pinj_reverse(e);
  ZigZagKey key;
  std::vector<bool> linked_v(e.dom().size, false);
  for (std::size_t u = 0; u < d.dom().size; ++u) {
    const auto x = m(u);
    const auto y = d(u);
    const auto v = y ? e_inv(*y) : std::nullopt;
    if (v && x && n(*v)) {
      key.pairs.emplace_back(*x, *n(*v));
      linked_v[*v] = true;
    } else if (x) {
      key.dangling_x.push_back(*x);
    }
  }
  for (std::size_t v = 0; v < e.dom().size; ++v)
    if (!linked_v[v] && n(v)) key.dangling_z.push_back(*n(v));
  std::sort(key.pairs.begin(), key.pairs.end());
  std::sort(key.dangling_x.begin(), key.dangling_x.end());
  std::sort(key.dangling_z.begin(), key.dangling_z.end());
  return key;
}

std::optional<PInj> PartialInjections::solve_cell(const PInj& d1, const PInj& m1, const PInj& d2,
                                                  const PInj& m2) const {
  require(m2.is_total(), "solve_cell: target right leg is not in M");
  const PInj m2_inv = pinj_reverse(m2);
  std::vector<PInj::Target> w(m1.dom().size);
  for (std::size_t r = 0; r < w.size(); ++r) {
    if (const auto t = m1(r)) {
      w[r] = m2_inv(*t);
      if (!w[r]) return std::nullopt;
    }
  }
  PInj cell(m1.dom(), m2.dom(), std::move(w));
  if (compose(d2, cell) != d1) return std::nullopt;
  return cell;
}

nlohmann::json PartialInjections::object_to_json(FinSet a) const { return {{"size", a.size}}; }

FinSet PartialInjections::object_from_json(const nlohmann::json& j) const {
  require(j.is_object() && j.contains("size"), "set must be an object with \"size\"");
  const auto n = j.at("size").get<long long>();
  require(n >= 0, "set size must be non-negative");
  return FinSet{static_cast<std::size_t>(n)};
}

nlohmann::json PartialInjections::morphism_to_json(const PInj& f) const {
  nlohmann::json map = nlohmann::json::array();
  for (const auto& t : f.assignment()) {
    if (t)
      map.push_back(*t);
    else
      map.push_back(nullptr);
  }
  return {{"dom", object_to_json(f.dom())}, {"cod", object_to_json(f.cod())}, {"map", map}};
}

PInj PartialInjections::morphism_from_json(const nlohmann::json& j) const {
  require(j.is_object() && j.contains("dom") && j.contains("cod") && j.contains("map"),
          "pinj must have \"dom\", \"cod\" and \"map\"");
  const FinSet dom = object_from_json(j.at("dom"));
  const FinSet cod = object_from_json(j.at("cod"));
  require(j.at("map").is_array(), "\"map\" must be an array");
  std::vector<PInj::Target> m;
  for (const auto& t : j.at("map")) {
    if (t.is_null()) {
      m.emplace_back();
    } else {
      const auto v = t.get<long long>();
      require(v >= 0, "map targets must be non-negative");
      m.emplace_back(static_cast<std::size_t>(v));
    }
  }
  return PInj(dom, cod, std::move(m));
}

}  // namespace spancat::pinj
