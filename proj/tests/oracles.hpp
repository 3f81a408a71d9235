#pragma once

// Independent oracles for the test suite. Everything here recomputes a
// quantity the library also computes, but by a visibly different method:
//   - signature via Sturm chains on the characteristic polynomial,
//   - signature via the Jacobi leading-principal-minor rule,
//   - Smith diagonal via determinant divisors (gcds of k x k minors),
//   - determinants via cofactor expansion.
// Agreement between the two sides is then meaningful evidence, not a
// tautology. All arithmetic is exact.

#include <cstddef>
#include <optional>
#include <vector>

#include "meyer/matrix.hpp"
#include "meyer/numeric.hpp"
#include "meyer/rng.hpp"

namespace oracles {

using meyer::Int;
using meyer::IntMat;
using meyer::Rat;
using meyer::RatMat;

// ---------------------------------------------------------------------------
// Cofactor-expansion determinant. Exponential, fine for the n <= 6 matrices
// the tests feed it; deliberately shares no code with the library's
// elimination-based det.
template <typename T>
T cofactor_det(const meyer::Mat<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw meyer::DimensionMismatch("cofactor_det needs a square matrix");
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T total(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    meyer::Mat<T> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const T term = m(0, j) * cofactor_det(minor);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, coefficients low-to-high, no trailing
// high-order zeros (empty vector = the zero polynomial).
using Poly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Rat(Int(k)) * p[k]);
  poly_trim(d);
  return d;
}

// Remainder of a by b, b != 0.
inline Poly poly_rem(Poly a, const Poly& b) {
  poly_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rat factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
    poly_trim(a);
  }
  return a;
}

inline Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence;
// exact over Q, no elimination, no pivoting.
inline Poly char_poly(const RatMat& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw meyer::DimensionMismatch("char_poly needs a square matrix");
  std::vector<Rat> c(n + 1);
  c[n] = 1;  // coefficient of x^n
  RatMat m = RatMat::identity(n);  // M_0
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    Rat trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += m(i, i);
    const Rat ck = -trace / Rat(Int(k));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
  }
  return c;
}

inline int rat_sign(const Rat& r) { return r.sign(); }

// Sign changes in a sequence, zeros skipped.
inline std::size_t sign_variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (const int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Signature of a symmetric rational matrix by Sturm's theorem on its
// characteristic polynomial: after splitting off the zero eigenvalues, the
// chain counts the distinct roots left and right of 0. Returns nullopt when
// the nonzero-eigenvalue part is not squarefree (a repeated root would make
// the distinct-root count lie about multiplicities); callers resample.
inline std::optional<long long> sturm_signature(const RatMat& sym) {
  if (!sym.is_symmetric())
    throw meyer::NonSymmetricInput("sturm_signature needs a symmetric matrix");
  Poly p = char_poly(sym);
  poly_trim(p);

  // x^z factor = zero eigenvalues (symmetric matrices are diagonalizable, so
  // the algebraic multiplicity of 0 equals the kernel dimension).
  std::size_t z = 0;
  while (z < p.size() && p[z] == 0) ++z;
  Poly q(p.begin() + static_cast<std::ptrdiff_t>(z), p.end());
  if (q.size() <= 1) return 0;  // no nonzero eigenvalues at all

  const Poly dq = poly_derivative(q);
  if (poly_gcd(q, dq).size() > 1) return std::nullopt;  // repeated roots

  std::vector<Poly> chain = {q, dq};
  while (!chain.back().empty()) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    for (Rat& coeff : r) coeff = -coeff;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }

  std::vector<int> at_minus_inf, at_zero, at_plus_inf;
  for (const Poly& s : chain) {
    const int lead = rat_sign(s.back());
    const std::size_t deg = s.size() - 1;
    at_plus_inf.push_back(lead);
    at_minus_inf.push_back(deg % 2 == 0 ? lead : -lead);
    at_zero.push_back(rat_sign(s.front()));
  }
  const std::size_t v_minus = sign_variations(at_minus_inf);
  const std::size_t v_zero = sign_variations(at_zero);
  const std::size_t v_plus = sign_variations(at_plus_inf);

  // Roots in (-inf, 0]: v_minus - v_zero; q(0) != 0 so these are all < 0.
  const long long negative = static_cast<long long>(v_minus - v_zero);
  const long long positive = static_cast<long long>(v_zero - v_plus);
  return positive - negative;
}

// Jacobi's rule: when every leading principal minor D_1..D_n is nonzero, the
// negative index equals the number of sign changes in 1, D_1, ..., D_n.
// Returns nullopt when a minor vanishes; callers resample.
inline std::optional<long long> jacobi_signature(const RatMat& sym) {
  if (!sym.is_symmetric())
    throw meyer::NonSymmetricInput("jacobi_signature needs a symmetric matrix");
  const std::size_t n = sym.rows();
  std::vector<int> signs = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    RatMat lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = sym(i, j);
    const Rat d = cofactor_det(lead);
    if (d == 0) return std::nullopt;
    signs.push_back(rat_sign(d));
  }
  long long changes = 0;
  for (std::size_t k = 1; k <= n; ++k)
    if (signs[k] != signs[k - 1]) ++changes;
  return static_cast<long long>(n) - 2 * changes;
}

// ---------------------------------------------------------------------------
// Smith diagonal via determinant divisors: d_k = gcd of all k x k minors,
// and the k-th invariant factor is d_k / d_{k-1}. Exponential in the matrix
// size; fine up to 5 x 5.
namespace detail {

inline void combinations(std::size_t n, std::size_t k,
                         std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace detail

inline std::vector<Int> determinant_divisor_diagonal(const IntMat& m) {
  const std::size_t r = m.rows(), c = m.cols();
  const std::size_t n = r < c ? r : c;
  std::vector<Int> diag(n, Int(0));
  Int prev(1);
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    detail::combinations(r, k, row_sets);
    detail::combinations(c, k, col_sets);
    Int dk(0);
    for (const auto& rs : row_sets)
      for (const auto& cs : col_sets) {
        IntMat sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        Int d = cofactor_det(sub);
        if (d < 0) d = -d;
        dk = boost::multiprecision::gcd(dk, d);
        if (dk == 1) break;
      }
    if (dk == 0) break;  // every larger minor vanishes too
    diag[k - 1] = dk / prev;
    prev = dk;
  }
  return diag;
}

// ---------------------------------------------------------------------------
// Seeded random matrices for property tests.
inline IntMat random_int_matrix(meyer::SeededRng& rng, std::size_t rows,
                                std::size_t cols, long long bound) {
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.next_int(-bound, bound);
  return m;
}

inline IntMat random_symmetric_int_matrix(meyer::SeededRng& rng, std::size_t n,
                                          long long bound) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = rng.next_int(-bound, bound);
      m(j, i) = m(i, j);
    }
  return m;
}

}  // namespace oracles
