#pragma once

#include <cstdint>

#include "meyer/errors.hpp"
#include "meyer/matrix.hpp"
#include "meyer/rng.hpp"

namespace meyer {

// The standard symplectic form J = [[O, I],[-I, O]] in the basis
// (a_1..a_g, b_1..b_g), <a_i, b_j> = delta_ij.
IntMat symplectic_form(std::size_t g);

// True iff tM J M = J. M must be 2g x 2g.
bool is_symplectic(const IntMat& m, std::size_t g);

// An element of Sp(2g;Z). The symplectic condition is checked at
// construction, so a live SpElement is always genuine.
class SpElement {
 public:
  SpElement(std::size_t g, IntMat m);

  static SpElement identity(std::size_t g);

  std::size_t genus() const { return g_; }
  const IntMat& matrix() const { return m_; }

  SpElement operator*(const SpElement& rhs) const;
  // A^{-1} = -J tA J, so inverses stay integral with no elimination.
  SpElement inverse() const;

  bool operator==(const SpElement&) const = default;

 private:
  std::size_t g_;
  IntMat m_;
};

// An element of the upper-right-triangular subgroup urSp(2g;Z): the
// assembled matrix is [[P, Q],[O, S]] with tP S = I and tQ S symmetric.
class UrSpElement {
 public:
  UrSpElement(std::size_t g, IntMat p, IntMat q, IntMat s);

  static UrSpElement identity(std::size_t g);

  std::size_t genus() const { return g_; }
  const IntMat& p() const { return p_; }
  const IntMat& q() const { return q_; }
  const IntMat& s() const { return s_; }

  SpElement assemble() const;

  UrSpElement operator*(const UrSpElement& rhs) const;
  UrSpElement inverse() const;

  bool operator==(const UrSpElement&) const = default;

 private:
  std::size_t g_;
  IntMat p_, q_, s_;
};

// Block decomposition of a symplectic matrix; throws NotUpperTriangular
// when the lower-left g x g block is nonzero.
UrSpElement split_ursp(const SpElement& a);

// Product of `count` random elementary factors (shears, swaps, sign
// flips), so always unimodular. Entry sizes scale with `bound`.
IntMat random_unimodular(std::size_t n, SeededRng& rng, std::size_t count,
                         std::size_t bound);

// Deterministic in (g, seed, complexity): P is a product of `complexity`
// elementary unimodular factors, S = (tP)^{-1}, Q = P N with N random
// symmetric, entries in [-complexity, complexity].
UrSpElement random_ursp(std::size_t g, std::uint64_t seed, std::size_t complexity);

// Genus stabilization: P and S extend by an identity block, Q by a zero
// block. Throws GenusDecrease when g_target < genus.
UrSpElement stabilize(const UrSpElement& a, std::size_t g_target);

}  // namespace meyer
