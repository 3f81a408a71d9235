#include "meyer/symplectic.hpp"

#include <utility>

namespace meyer {

IntMat symplectic_form(std::size_t g) {
  IntMat j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMat& m, std::size_t g) {
  if (m.rows() != 2 * g || m.cols() != 2 * g)
    throw DimensionMismatch("expected a 2g x 2g matrix");
  const IntMat j = symplectic_form(g);
  return m.transpose() * j * m == j;
}

SpElement::SpElement(std::size_t g, IntMat m) : g_(g), m_(std::move(m)) {
  if (g_ == 0) throw DimensionMismatch("genus must be positive");
  if (!is_symplectic(m_, g_))
    throw NotSymplectic("matrix does not preserve the symplectic form");
}

SpElement SpElement::identity(std::size_t g) {
  return SpElement(g, IntMat::identity(2 * g));
}

SpElement SpElement::operator*(const SpElement& rhs) const {
  if (g_ != rhs.g_) throw GenusMismatch("cannot multiply across genera");
  return SpElement(g_, m_ * rhs.m_);
}

SpElement SpElement::inverse() const {
  const IntMat j = symplectic_form(g_);
  return SpElement(g_, -(j * m_.transpose() * j));
}

UrSpElement::UrSpElement(std::size_t g, IntMat p, IntMat q, IntMat s)
    : g_(g), p_(std::move(p)), q_(std::move(q)), s_(std::move(s)) {
  if (g_ == 0) throw DimensionMismatch("genus must be positive");
  for (const IntMat* b : {&p_, &q_, &s_})
    if (b->rows() != g_ || b->cols() != g_)
      throw DimensionMismatch("blocks must be g x g");
  if (p_.transpose() * s_ != IntMat::identity(g_))
    throw NotSymplectic("tP S != I");
  const IntMat qs = q_.transpose() * s_;
  if (qs != qs.transpose()) throw NotSymplectic("tQ S is not symmetric");
}

UrSpElement UrSpElement::identity(std::size_t g) {
  return UrSpElement(g, IntMat::identity(g), IntMat(g, g), IntMat::identity(g));
}

SpElement UrSpElement::assemble() const {
  IntMat m(2 * g_, 2 * g_);
  for (std::size_t i = 0; i < g_; ++i)
    for (std::size_t j = 0; j < g_; ++j) {
      m(i, j) = p_(i, j);
      m(i, g_ + j) = q_(i, j);
      m(g_ + i, g_ + j) = s_(i, j);
    }
  return SpElement(g_, std::move(m));
}

UrSpElement UrSpElement::operator*(const UrSpElement& rhs) const {
  if (g_ != rhs.g_) throw GenusMismatch("cannot multiply across genera");
  return UrSpElement(g_, p_ * rhs.p_, p_ * rhs.q_ + q_ * rhs.s_, s_ * rhs.s_);
}

UrSpElement UrSpElement::inverse() const {
  // [[P,Q],[O,S]]^{-1} = [[tS, -tS Q tP],[O, tP]] using P^{-1} = tS.
  const IntMat st = s_.transpose(), pt = p_.transpose();
  return UrSpElement(g_, st, -(st * q_ * pt), pt);
}

UrSpElement split_ursp(const SpElement& a) {
  const std::size_t g = a.genus();
  const IntMat& m = a.matrix();
  IntMat p(g, g), q(g, g), s(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      if (m(g + i, j) != 0)
        throw NotUpperTriangular("lower-left block is nonzero");
      p(i, j) = m(i, j);
      q(i, j) = m(i, g + j);
      s(i, j) = m(g + i, g + j);
    }
  return UrSpElement(g, std::move(p), std::move(q), std::move(s));
}

IntMat random_unimodular(std::size_t n, SeededRng& rng, std::size_t count,
                         std::size_t bound) {
  IntMat m = IntMat::identity(n);
  for (std::size_t step = 0; step < count; ++step) {
    if (n == 1) {
      if (rng.next_int(0, 1) == 1) m(0, 0) = -m(0, 0);
      continue;
    }
    const int kind = static_cast<int>(rng.next_int(0, 3));
    const std::size_t i = static_cast<std::size_t>(rng.next_int(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rng.next_int(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    switch (kind) {
      case 0:
      case 1: {  // shear dominates to spread entries around
        const long k = rng.next_nonzero(static_cast<long>(bound ? bound : 1));
        for (std::size_t c = 0; c < n; ++c) m(i, c) += Int(k) * m(j, c);
        break;
      }
      case 2:
        m.swap_rows(i, j);
        break;
      default:
        for (std::size_t c = 0; c < n; ++c) m(i, c) = -m(i, c);
        break;
    }
  }
  return m;
}

UrSpElement random_ursp(std::size_t g, std::uint64_t seed, std::size_t complexity) {
  SeededRng rng(mix64(seed, 0x7573705f72616e64ull));
  IntMat p = IntMat::identity(g);
  IntMat p_inv = IntMat::identity(g);
  const long bound = complexity ? static_cast<long>(complexity) : 1;
  for (std::size_t step = 0; step < complexity; ++step) {
    if (g == 1) {
      if (rng.next_int(0, 1) == 1) {
        p(0, 0) = -p(0, 0);
        p_inv(0, 0) = -p_inv(0, 0);
      }
      continue;
    }
    const int kind = static_cast<int>(rng.next_int(0, 3));
    const std::size_t i = static_cast<std::size_t>(rng.next_int(0, static_cast<long>(g) - 1));
    std::size_t j = static_cast<std::size_t>(rng.next_int(0, static_cast<long>(g) - 2));
    if (j >= i) ++j;
    switch (kind) {
      case 0:
      case 1: {
        // p *= E_ij(k) on the right; p_inv gets E_ij(-k) on the left.
        const long k = rng.next_nonzero(bound);
        for (std::size_t r = 0; r < g; ++r) p(r, j) += Int(k) * p(r, i);
        for (std::size_t c = 0; c < g; ++c) p_inv(i, c) -= Int(k) * p_inv(j, c);
        break;
      }
      case 2:
        p.swap_cols(i, j);
        p_inv.swap_rows(i, j);
        break;
      default:
        for (std::size_t r = 0; r < g; ++r) p(r, i) = -p(r, i);
        for (std::size_t c = 0; c < g; ++c) p_inv(i, c) = -p_inv(i, c);
        break;
    }
  }

  IntMat n(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i; j < g; ++j) {
      const Int e = complexity ? Int(rng.next_int(-static_cast<long>(complexity),
                                                  static_cast<long>(complexity)))
                               : Int(0);
      n(i, j) = e;
      n(j, i) = e;
    }

  return UrSpElement(g, p, p * n, p_inv.transpose());
}

UrSpElement stabilize(const UrSpElement& a, std::size_t g_target) {
  const std::size_t g = a.genus();
  if (g_target < g) throw GenusDecrease("stabilization cannot shrink the genus");
  if (g_target == g) return a;
  IntMat p(g_target, g_target), q(g_target, g_target), s(g_target, g_target);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      p(i, j) = a.p()(i, j);
      q(i, j) = a.q()(i, j);
      s(i, j) = a.s()(i, j);
    }
  for (std::size_t i = g; i < g_target; ++i) {
    p(i, i) = 1;
    s(i, i) = 1;
  }
  return UrSpElement(g_target, std::move(p), std::move(q), std::move(s));
}

}  // namespace meyer
