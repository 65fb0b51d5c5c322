#pragma once

#include <compare>
#include <optional>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spancat/finab/int_matrix.hpp"

namespace spancat::finab {

using Element = std::vector<std::int64_t>;

/// Direct sum of cyclic groups Z/orders[0] + ... + Z/orders[k-1].
/// Order-1 summands are allowed; canonical_form() removes them.
class AbGroup {
 public:
  AbGroup() = default;
  explicit AbGroup(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::int64_t order() const;
  bool is_trivial() const { return order() == 1; }

  /// Mixed-radix index of an element, in [0, order()).
  std::int64_t encode(std::span<const std::int64_t> x) const;
  Element decode(std::int64_t code) const;
  Element reduce(std::span<const std::int64_t> x) const;
  Element zero() const { return Element(rank(), 0); }

  std::string to_string() const;

  auto operator<=>(const AbGroup&) const = default;
  bool operator==(const AbGroup&) const = default;

 private:
  std::vector<std::int64_t> orders_;
};

AbGroup direct_sum(const AbGroup& a, const AbGroup& b);

/// Invariant-factor form: d1 | d2 | ... with every di > 1.
AbGroup canonical_form(const AbGroup& g);

/// All canonical groups of order <= max_order, the trivial group first,
/// then ordered by order and invariant factors.
std::vector<AbGroup> groups_up_to_order(std::int64_t max_order);

/// A homomorphism given by an integer matrix with cod.rank() rows and
/// dom.rank() columns. Entry (i, j) is kept reduced modulo cod.orders()[i].
class AbHom {
 public:
  /// Reduces the matrix and validates well-definedness; throws
  /// PreconditionError when a column is not killed by its generator order.
  AbHom(AbGroup dom, AbGroup cod, IntMatrix matrix);

  static AbHom zero(const AbGroup& dom, const AbGroup& cod);
  static AbHom identity(const AbGroup& g);

  const AbGroup& dom() const { return dom_; }
  const AbGroup& cod() const { return cod_; }
  const IntMatrix& matrix() const { return matrix_; }

  Element apply(std::span<const std::int64_t> x) const;
  std::int64_t apply_code(std::int64_t code) const;

  std::string to_string() const;

  auto operator<=>(const AbHom&) const = default;
  bool operator==(const AbHom&) const = default;

 private:
  AbGroup dom_;
  AbGroup cod_;
  IntMatrix matrix_;
};

AbHom compose(const AbHom& g, const AbHom& f);
AbHom add(const AbHom& f, const AbHom& g);
AbHom negate(const AbHom& f);

// Structure maps of direct sums.
AbHom projection_left(const AbGroup& a, const AbGroup& b);
AbHom projection_right(const AbGroup& a, const AbGroup& b);
AbHom injection_left(const AbGroup& a, const AbGroup& b);
AbHom injection_right(const AbGroup& a, const AbGroup& b);
/// x -> (f x, g x)
AbHom pairing(const AbHom& f, const AbHom& g);
/// (x, y) -> f x + g y
AbHom copairing(const AbHom& f, const AbHom& g);

/// A subgroup, presented by a monomorphism from a canonical-form group.
/// Equality compares element sets in the ambient group.
struct Subgroup {
  AbGroup ambient;
  AbHom embedding;

  /// Sorted element codes in the ambient group.
  std::vector<std::int64_t> elements() const;
  std::int64_t order() const { return embedding.dom().order(); }

  bool operator==(const Subgroup& other) const;
};

/// The subgroup generated by the columns of `generators` together with
/// the coordinate map: `coordinates` sends a coefficient vector over the
/// generators to the corresponding element of the subgroup's group.
struct GeneratedSubgroup {
  Subgroup subgroup;
  IntMatrix coordinates;
};

GeneratedSubgroup subgroup_from_generators(const AbGroup& ambient, const IntMatrix& generators);
Subgroup subgroup_from_elements(const AbGroup& ambient, const std::vector<Element>& generators);

Subgroup kernel(const AbHom& f);
Subgroup image(const AbHom& f);

struct Cokernel {
  AbGroup group;
  AbHom quotient;
};

Cokernel cokernel(const AbHom& f);

bool is_injective(const AbHom& f);
bool is_surjective(const AbHom& f);

/// (e, mid, m) with e onto the image and m the image embedding.
struct AbFactorization {
  AbHom e;
  AbGroup mid;
  AbHom m;
};

AbFactorization ab_factorize(const AbHom& f);

struct AbCone {
  AbGroup apex;
  AbHom leg1;
  AbHom leg2;
};

/// Pullback of f: A -> C and g: B -> C as the kernel of A + B -> C.
/// leg1: P -> A, leg2: P -> B.
AbCone ab_pullback(const AbHom& f, const AbHom& g);
/// Pushout of f: A -> B and g: A -> C as the cokernel of A -> B + C.
/// leg1: B -> Q, leg2: C -> Q.
AbCone ab_pushout(const AbHom& f, const AbHom& g);

/// The unique w with m . w == v, when it exists; m must be injective.
std::optional<AbHom> lift_through_mono(const AbHom& m, const AbHom& v);

/// Isomorphisms between a group and its canonical form.
struct CanonicalIso {
  AbGroup canonical;
  AbHom to_canonical;
  AbHom from_canonical;
};

CanonicalIso canonical_iso(const AbGroup& g);

/// Some isomorphism a -> b, or nullopt when the invariant factors differ.
std::optional<AbHom> find_iso(const AbGroup& a, const AbGroup& b);

/// Every homomorphism a -> b. Throws std::length_error above `limit`.
std::vector<AbHom> all_homs(const AbGroup& a, const AbGroup& b, std::size_t limit = 1u << 22);

/// Every subgroup of g, by closure under adding cyclic subgroups.
std::vector<Subgroup> all_subgroups(const AbGroup& g);

/// A relation from x to z: a subgroup of x + z.
struct SubgroupRelation {
  AbGroup x;
  AbGroup z;
  Subgroup s;
};

/// {(x, z) : exists y, (x, y) in s and (y, z) in t}, computed as the
/// image of the pullback of the two middle projections.
SubgroupRelation subgroup_compose(const SubgroupRelation& s, const SubgroupRelation& t);

/// The image of the pullback of X <-m- U -d-> Y <-e- V -n-> Z in X + Z.
SubgroupRelation goursat_subgroup(const AbHom& m, const AbHom& d, const AbHom& e, const AbHom& n);

}  // namespace spancat::finab
