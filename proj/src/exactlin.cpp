#include "meyer/exactlin.hpp"

#include <algorithm>
#include <cstdlib>

namespace meyer {

std::vector<std::size_t> rref_in_place(RatMat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    const Rat inv_pivot = Rat(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv_pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const RatMat& m) {
  RatMat copy = m;
  return rref_in_place(copy).size();
}

std::size_t rank(const IntMat& m) { return rank(to_rational(m)); }

namespace {

// Rescale a rational vector to the primitive integer vector that is a
// positive multiple of it.
void make_primitive(std::vector<Rat>& v) {
  Int lcm_den = 1;
  for (const auto& e : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(e));
  Int gcd_num = 0;
  std::vector<Int> scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
    gcd_num = boost::multiprecision::gcd(gcd_num, scaled[i]);
  }
  if (gcd_num == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(scaled[i] / gcd_num);
}

}  // namespace

std::vector<std::vector<Rat>> kernel_basis(const RatMat& m) {
  RatMat r = m;
  const std::vector<std::size_t> pivots = rref_in_place(r);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (pivots[k] < f) v[pivots[k]] = -r(k, f);
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rat>> kernel_basis(const IntMat& m) {
  return kernel_basis(to_rational(m));
}

RatMat inverse(const RatMat& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse needs a square matrix");
  const std::size_t n = m.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref_in_place(aug);
  // A singular left block pushes pivots into the augmented half, so the
  // count alone is not conclusive.
  if (pivots.size() < n || pivots.back() >= n)
    throw SingularMatrix("matrix has determinant zero");
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Rat det(const RatMat& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant needs a square matrix");
  RatMat a = m;
  const std::size_t n = a.rows();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      a.swap_rows(c, p);
      d = -d;
    }
    d *= a(c, c);
    const Rat inv_pivot = Rat(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rat f = a(i, c) * inv_pivot;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

Int det(const IntMat& m) {
  const Rat d = det(to_rational(m));
  return numerator(d);
}

SignatureTriple signature_of_symmetric(const RatMat& gram) {
  if (!gram.is_square()) throw DimensionMismatch("gram matrix must be square");
  if (!gram.is_symmetric())
    throw NonSymmetricInput("gram matrix must equal its transpose");

  RatMat a = gram;
  const std::size_t n = a.rows();
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  SignatureTriple sig;
  while (!active.empty()) {
    // Prefer a nonzero diagonal pivot; first in index order.
    std::size_t pivot = n;
    for (std::size_t i : active)
      if (a(i, i) != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      // Diagonal is all zero. Find an off-diagonal entry; if none, the
      // rest of the form is null.
      std::size_t hi = n, hj = n;
      for (std::size_t ii = 0; ii < active.size() && hi == n; ++ii)
        for (std::size_t jj = ii + 1; jj < active.size(); ++jj)
          if (a(active[ii], active[jj]) != 0) {
            hi = active[ii];
            hj = active[jj];
            break;
          }
      if (hi == n) {
        sig.zero += active.size();
        break;
      }
      // Hyperbolic split: after e_i += e_j the new diagonal entry is
      // 2*a(i,j) != 0, and the pair ends up contributing (+1, -1).
      for (std::size_t k = 0; k < n; ++k) a(hi, k) += a(hj, k);
      for (std::size_t k = 0; k < n; ++k) a(k, hi) += a(k, hj);
      pivot = hi;
    }

    if (a(pivot, pivot) > 0)
      ++sig.positive;
    else
      ++sig.negative;

    const Rat inv_pivot = Rat(1) / a(pivot, pivot);
    for (std::size_t r : active) {
      if (r == pivot || a(r, pivot) == 0) continue;
      const Rat f = a(r, pivot) * inv_pivot;
      for (std::size_t k = 0; k < n; ++k) a(r, k) -= f * a(pivot, k);
      for (std::size_t k = 0; k < n; ++k) a(k, r) -= f * a(k, pivot);
    }
    active.erase(std::find(active.begin(), active.end(), pivot));
  }
  return sig;
}

namespace {

struct SmithState {
  IntMat d, u, v;

  void row_swap(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
  }
  // row a -= q * row b
  void row_sub(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < d.cols(); ++j) d(a, j) -= q * d(b, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) -= q * u(b, j);
  }
  // col a -= q * col b
  void col_sub(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < d.rows(); ++i) d(i, a) -= q * d(i, b);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, a) -= q * v(i, b);
  }
  void row_negate(std::size_t a) {
    for (std::size_t j = 0; j < d.cols(); ++j) d(a, j) = -d(a, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) = -u(a, j);
  }
};

// Smallest nonzero |entry| in the submatrix with corner (t, t); row-major
// scan breaks ties. Returns false when the submatrix is zero.
bool find_pivot(const IntMat& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int a = abs(d(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

std::vector<Int> SmithDecomposition::diagonal() const {
  std::vector<Int> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

std::vector<Int> SmithDecomposition::torsion() const {
  std::vector<Int> out;
  for (const Int& e : diagonal())
    if (e > 1) out.push_back(e);
  return out;
}

SmithDecomposition smith_normal_form(const IntMat& m) {
  SmithState s{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(s.d, t, pi, pj)) break;
    s.row_swap(t, pi);
    s.col_swap(t, pj);

    for (;;) {
      // Reduce column t, then row t, against the pivot. Any nonzero
      // remainder becomes a strictly smaller pivot, so this terminates.
      bool reduced = true;
      for (std::size_t i = t + 1; i < s.d.rows(); ++i) {
        if (s.d(i, t) == 0) continue;
        const Int q = s.d(i, t) / s.d(t, t);
        s.row_sub(i, t, q);
        if (s.d(i, t) != 0) reduced = false;
      }
      for (std::size_t j = t + 1; j < s.d.cols(); ++j) {
        if (s.d(t, j) == 0) continue;
        const Int q = s.d(t, j) / s.d(t, t);
        s.col_sub(j, t, q);
        if (s.d(t, j) != 0) reduced = false;
      }
      if (!reduced) {
        std::size_t qi = 0, qj = 0;
        find_pivot(s.d, t, qi, qj);
        s.row_swap(t, qi);
        s.col_swap(t, qj);
        continue;
      }

      // Divisibility: fold any entry the pivot misses into row t and
      // restart this step with a smaller pivot.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < s.d.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < s.d.cols(); ++j)
          if (s.d(i, j) % s.d(t, t) != 0) {
            s.row_sub(t, i, Int(-1));  // row t += row i
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }

    if (s.d(t, t) < 0) s.row_negate(t);
  }

  SmithDecomposition out{std::move(s.d), std::move(s.u), std::move(s.v), 0};
  for (const Int& e : out.diagonal())
    if (e != 0) ++out.rank;
  return out;
}

}  // namespace meyer
