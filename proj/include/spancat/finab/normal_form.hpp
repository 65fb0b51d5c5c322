#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spancat/finab/int_matrix.hpp"

namespace spancat::finab {

/// u * a * v == d, with d diagonal, non-negative, and each nonzero
/// diagonal entry dividing the next. u_inv and v_inv are the exact
/// inverses of the unimodular transforms.
struct SmithForm {
  IntMatrix u;
  IntMatrix u_inv;
  IntMatrix d;
  IntMatrix v;
  IntMatrix v_inv;

  /// Leading diagonal entries of d (length min(rows, cols)).
  std::vector<std::int64_t> diagonal() const;
  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Column-style Hermite form: a * v == h, v unimodular, h lower
/// echelon with positive pivots and the entries left of each pivot
/// reduced into [0, pivot). The first `rank` columns of h are the
/// pivot columns; the rest are zero.
struct HermiteForm {
  IntMatrix h;
  IntMatrix v;
  std::size_t rank = 0;
};

HermiteForm hermite_form(const IntMatrix& a);

/// Basis of the integer kernel {x : a x = 0}, as columns.
IntMatrix integer_kernel(const IntMatrix& a);

/// Some integer solution of a x = b, or nullopt when none exists.
std::optional<std::vector<std::int64_t>> solve_integer(const IntMatrix& a,
                                                       std::span<const std::int64_t> b);

}  // namespace spancat::finab
