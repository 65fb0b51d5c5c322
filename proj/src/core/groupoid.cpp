#include "spancat/core/groupoid.hpp"

#include <array>

#include "spancat/core/errors.hpp"

namespace spancat {

void validate_group_table(const GroupTable& table) {
  const std::size_t n = table.size();
  require(n > 0, "group table is empty");
  for (const auto& row : table) {
    require(row.size() == n, "group table is not square");
    for (std::size_t v : row) require(v < n, "group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        require(table[table[a][b]][c] == table[a][table[b][c]], "group table is not associative");
  std::optional<std::size_t> unit;
  for (std::size_t e = 0; e < n && !unit; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) unit = e;
  }
  require(unit.has_value(), "group table has no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = table[a][b] == *unit && table[b][a] == *unit;
    require(found, "group table element " + std::to_string(a) + " has no inverse");
  }
}

GroupTable cyclic_group_table(std::size_t n) {
  require(n > 0, "cyclic group order must be positive");
  GroupTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

GroupTable s3_group_table() {
  // Permutations of {0,1,2} in lexicographic order; product is (g * h)(x) = g(h(x)).
  const std::array<std::array<std::size_t, 3>, 6> perms{{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  auto index_of = [&](const std::array<std::size_t, 3>& p) {
    for (std::size_t k = 0; k < perms.size(); ++k)
      if (perms[k] == p) return k;
    return perms.size();
  };
  GroupTable t(6, std::vector<std::size_t>(6));
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h) {
      std::array<std::size_t, 3> p{};
      for (std::size_t x = 0; x < 3; ++x) p[x] = perms[g][perms[h][x]];
      t[g][h] = index_of(p);
    }
  return t;
}

OneObjectGroupoid::OneObjectGroupoid(GroupTable table) : table_(std::move(table)) {
  validate_group_table(table_);
  const std::size_t n = table_.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a;
    if (ok) {
      unit_ = e;
      break;
    }
  }
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == unit_) inverse_[a] = b;
}

GroupElement OneObjectGroupoid::compose(const GroupElement& g, const GroupElement& f) const {
  require(g.index < order() && f.index < order(), "group element out of range");
  return {table_[g.index][f.index]};
}

Factorization<OneObjectGroupoid> OneObjectGroupoid::factorize(const GroupElement& f) const {
  return {f, Star{}, unit()};
}

GroupElement OneObjectGroupoid::fill_diagonal(const Square<OneObjectGroupoid>& sq) const {
  require(compose(sq.bottom, sq.left) == compose(sq.right, sq.top), "fill_diagonal: square does not commute");
  return compose(sq.left, inverse(sq.top));
}

Cone<OneObjectGroupoid> OneObjectGroupoid::pullback_along_m(const GroupElement& f,
                                                            const GroupElement& m) const {
  return {Star{}, unit(), compose(inverse(m), f)};
}

Cone<OneObjectGroupoid> OneObjectGroupoid::pushout_along_e(const GroupElement& f,
                                                           const GroupElement& e) const {
  return {Star{}, unit(), compose(f, inverse(e))};
}

std::vector<GroupElement> OneObjectGroupoid::homs(Star, Star) const {
  std::vector<GroupElement> out;
  for (std::size_t k = 0; k < order(); ++k) out.push_back({k});
  return out;
}

OneObjectGroupoid::SpanKey OneObjectGroupoid::span_key(const GroupElement& d, const GroupElement& m) const {
  return compose(m, inverse(d)).index;
}

OneObjectGroupoid::ZigZagKey OneObjectGroupoid::zigzag_key(const GroupElement& m, const GroupElement& d,
                                                           const GroupElement& e,
                                                           const GroupElement& n) const {
  return compose(compose(n, inverse(e)), compose(d, inverse(m))).index;
}

std::optional<GroupElement> OneObjectGroupoid::solve_cell(const GroupElement& d1, const GroupElement& m1,
                                                          const GroupElement& d2,
                                                          const GroupElement& m2) const {
  const GroupElement w = compose(inverse(m2), m1);
  if (compose(d2, w) != d1) return std::nullopt;
  return w;
}

GroupElement OneObjectGroupoid::morphism_from_json(const nlohmann::json& j) const {
  require(j.is_object() && j.contains("element"), "groupoid morphism must have \"element\"");
  const auto k = j.at("element").get<long long>();
  require(k >= 0 && static_cast<std::size_t>(k) < order(), "group element out of range");
  return {static_cast<std::size_t>(k)};
}

OneObjectGroupoid groupoid_instance(const GroupTable& table) { return OneObjectGroupoid(table); }

GroupTable group_table_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("table"), "group table file must have \"table\"");
  const auto& rows = j.at("table");
  require(rows.is_array(), "\"table\" must be an array of rows");
  GroupTable t;
  for (const auto& row : rows) {
    require(row.is_array(), "group table rows must be arrays");
    std::vector<std::size_t> r;
    for (const auto& v : row) {
      require(v.is_number_integer() && v.get<long long>() >= 0, "group table entries must be non-negative integers");
      r.push_back(v.get<std::size_t>());
    }
    t.push_back(std::move(r));
  }
  validate_group_table(t);
  return t;
}

}  // namespace spancat
