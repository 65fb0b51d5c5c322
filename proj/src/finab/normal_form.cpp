#include "spancat/finab/normal_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace spancat::finab {

namespace {

struct Ext {
  std::int64_t g, x, y;  // x*a + y*b == g >= 0
};

Ext extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = checked_sub(old_r, checked_mul(q, r));
    std::swap(old_r, r);
    old_s = checked_sub(old_s, checked_mul(q, s));
    std::swap(old_s, s);
    old_t = checked_sub(old_t, checked_mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Row and column operations mirrored onto the transforms so that
// u * a * v == d and the inverses stay exact.
class SmithWorker {
 public:
  explicit SmithWorker(const IntMatrix& a)
      : d_(a),
        u_(IntMatrix::identity(a.rows())),
        ui_(IntMatrix::identity(a.rows())),
        v_(IntMatrix::identity(a.cols())),
        vi_(IntMatrix::identity(a.cols())) {}

  void swap_rows(std::size_t a, std::size_t b) {
    d_.swap_rows(a, b);
    u_.swap_rows(a, b);
    ui_.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d_.swap_cols(a, b);
    v_.swap_cols(a, b);
    vi_.swap_rows(a, b);
  }
  void negate_row(std::size_t i) {
    d_.negate_row(i);
    u_.negate_row(i);
    ui_.negate_col(i);
  }
  // row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, std::int64_t q) {
    d_.add_row_multiple(dst, src, q);
    u_.add_row_multiple(dst, src, q);
    ui_.add_col_multiple(src, dst, checked_sub(0, q));
  }
  // col[dst] += q * col[src]
  void add_col(std::size_t dst, std::size_t src, std::int64_t q) {
    d_.add_col_multiple(dst, src, q);
    v_.add_col_multiple(dst, src, q);
    vi_.add_row_multiple(src, dst, checked_sub(0, q));
  }

  SmithForm run() {
    const std::size_t m = d_.rows(), n = d_.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      for (;;) {
        if (!move_smallest_to(t)) return finish();
        const std::int64_t p = d_(t, t);
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (d_(i, t) == 0) continue;
          add_row(i, t, checked_sub(0, d_(i, t) / p));
          if (d_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d_(t, j) == 0) continue;
          add_col(j, t, checked_sub(0, d_(t, j) / p));
          if (d_(t, j) != 0) clean = false;
        }
        if (!clean) continue;
        if (auto bad = non_divisible_row(t)) {
          add_row(t, *bad, 1);
          continue;
        }
        break;
      }
      if (d_(t, t) < 0) negate_row(t);
    }
    return finish();
  }

 private:
  bool move_smallest_to(std::size_t t) {
    std::int64_t best = 0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = t; i < d_.rows(); ++i)
      for (std::size_t j = t; j < d_.cols(); ++j) {
        const std::int64_t v = std::llabs(d_(i, j));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best == 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  std::optional<std::size_t> non_divisible_row(std::size_t t) const {
    const std::int64_t p = d_(t, t);
    for (std::size_t i = t + 1; i < d_.rows(); ++i)
      for (std::size_t j = t + 1; j < d_.cols(); ++j)
        if (d_(i, j) % p != 0) return i;
    return std::nullopt;
  }

  SmithForm finish() { return {std::move(u_), std::move(ui_), std::move(d_), std::move(v_), std::move(vi_)}; }

  IntMatrix d_, u_, ui_, v_, vi_;
};

}  // namespace

std::vector<std::int64_t> SmithForm::diagonal() const {
  std::vector<std::int64_t> out(std::min(d.rows(), d.cols()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = d(i, i);
  return out;
}

std::size_t SmithForm::rank() const {
  const auto diag = diagonal();
  return static_cast<std::size_t>(std::count_if(diag.begin(), diag.end(), [](std::int64_t v) { return v != 0; }));
}

SmithForm smith_normal_form(const IntMatrix& a) { return SmithWorker(a).run(); }

HermiteForm hermite_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t n = a.cols();
  std::size_t col = 0;
  for (std::size_t r = 0; r < h.rows() && col < n; ++r) {
    for (std::size_t j = col + 1; j < n; ++j) {
      const std::int64_t x = h(r, col), y = h(r, j);
      if (y == 0) continue;
      const Ext e = extended_gcd(x, y);
      const std::int64_t xg = x / e.g, yg = y / e.g;
      // [col j] <- [col j] * [[e.x, -yg], [e.y, xg]], determinant 1.
      for (IntMatrix* m : {&h, &v}) {
        for (std::size_t i = 0; i < m->rows(); ++i) {
          const std::int64_t ci = (*m)(i, col), cj = (*m)(i, j);
          (*m)(i, col) = checked_add(checked_mul(e.x, ci), checked_mul(e.y, cj));
          (*m)(i, j) = checked_add(checked_mul(checked_sub(0, yg), ci), checked_mul(xg, cj));
        }
      }
    }
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0) {
      h.negate_col(col);
      v.negate_col(col);
    }
    const std::int64_t p = h(r, col);
    for (std::size_t k = 0; k < col; ++k) {
      const std::int64_t q = h(r, k) >= 0 ? h(r, k) / p : -((-h(r, k) + p - 1) / p);
      if (q == 0) continue;
      h.add_col_multiple(k, col, checked_sub(0, q));
      v.add_col_multiple(k, col, checked_sub(0, q));
    }
    ++col;
  }
  return {std::move(h), std::move(v), col};
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const HermiteForm hf = hermite_form(a);
  return hf.v.col_range(hf.rank, a.cols());
}

std::optional<std::vector<std::int64_t>> solve_integer(const IntMatrix& a,
                                                       std::span<const std::int64_t> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  const SmithForm s = smith_normal_form(a);
  const std::vector<std::int64_t> ub = s.u.apply(b);
  std::vector<std::int64_t> w(a.cols(), 0);
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const std::int64_t di = i < diag.size() ? diag[i] : 0;
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (ub[i] % di != 0) return std::nullopt;
    w[i] = ub[i] / di;
  }
  return s.v.apply(w);
}

}  // namespace spancat::finab
