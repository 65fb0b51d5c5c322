#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spancat/core/category.hpp"

namespace spancat::pinj {

/// The set {0, ..., size - 1}.
struct FinSet {
  std::size_t size = 0;

  auto operator<=>(const FinSet&) const = default;
};

/// A partial map dom -> cod, injective where defined.
class PInj {
 public:
  using Target = std::optional<std::size_t>;

  /// Validates range and injectivity; throws PreconditionError.
  PInj(FinSet dom, FinSet cod, std::vector<Target> assignment);

  static PInj identity(FinSet a);
  static PInj empty(FinSet dom, FinSet cod);

  FinSet dom() const { return dom_; }
  FinSet cod() const { return cod_; }
  const std::vector<Target>& assignment() const { return map_; }
  Target operator()(std::size_t x) const { return map_[x]; }

  bool is_total() const;
  bool is_surjective() const;
  std::size_t defined_count() const;
  /// Sorted elements where the map is defined.
  std::vector<std::size_t> domain_of_definition() const;
  /// Sorted image.
  std::vector<std::size_t> image() const;

  std::string to_string() const;

  auto operator<=>(const PInj&) const = default;
  bool operator==(const PInj&) const = default;

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<Target> map_;
};

/// g . f, defined exactly on f^-1(dom g).
PInj pinj_compose(const PInj& g, const PInj& f);
/// The inverse relation, cod -> dom.
PInj pinj_reverse(const PInj& f);

/// Every partial injection a -> b, in a fixed deterministic order.
std::vector<PInj> all_partial_injections(FinSet a, FinSet b);

/// Finite sets and partial injections. E = surjective partial injections
/// (the i^*), M = total injections (the i_*).
class PartialInjections {
 public:
  using Object = FinSet;
  using Morphism = PInj;
  static constexpr std::string_view kName = "pinj";

  /// Span invariant: sorted (d(r) or -1, m(r)) over the apex.
  using SpanKey = std::vector<std::pair<long, long>>;
  /// Zig-zag invariant: linked pairs, dangling x's, dangling z's.
  struct ZigZagKey {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> dangling_x;
    std::vector<std::size_t> dangling_z;
    auto operator<=>(const ZigZagKey&) const = default;
  };

  explicit PartialInjections(std::size_t max_size = 4);

  std::size_t max_size() const { return max_size_; }

  FinSet dom(const PInj& f) const { return f.dom(); }
  FinSet cod(const PInj& f) const { return f.cod(); }
  PInj compose(const PInj& g, const PInj& f) const { return pinj_compose(g, f); }
  PInj identity(FinSet a) const { return PInj::identity(a); }
  OrthClass classify(const PInj& f) const { return {f.is_surjective(), f.is_total()}; }
  Factorization<PartialInjections> factorize(const PInj& f) const;
  PInj fill_diagonal(const Square<PartialInjections>& sq) const;
  Cone<PartialInjections> pullback_along_m(const PInj& f, const PInj& m) const;
  Cone<PartialInjections> pushout_along_e(const PInj& f, const PInj& e) const;

  const std::vector<FinSet>& catalog() const { return catalog_; }
  std::vector<PInj> homs(FinSet a, FinSet b) const { return all_partial_injections(a, b); }
  std::optional<PInj> find_iso(FinSet a, FinSet b) const;
  std::size_t cardinality(FinSet a) const { return a.size; }
  std::string describe(FinSet a) const { return "{" + std::to_string(a.size) + "}"; }

  SpanKey span_key(const PInj& d, const PInj& m) const;
  ZigZagKey zigzag_key(const PInj& m, const PInj& d, const PInj& e, const PInj& n) const;
  std::optional<PInj> solve_cell(const PInj& d1, const PInj& m1, const PInj& d2, const PInj& m2) const;

  nlohmann::json object_to_json(FinSet a) const;
  FinSet object_from_json(const nlohmann::json& j) const;
  nlohmann::json morphism_to_json(const PInj& f) const;
  PInj morphism_from_json(const nlohmann::json& j) const;

 private:
  std::size_t max_size_;
  std::vector<FinSet> catalog_;
};

}  // namespace spancat::pinj
