#pragma once

#include <cstddef>
#include <vector>

#include "meyer/matrix.hpp"

namespace meyer {

// Inertia of a symmetric bilinear form: counts of +1, -1 and 0 entries in
// any exact diagonalization. positive + negative + zero = dimension.
struct SignatureTriple {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t dimension() const { return positive + negative + zero; }
  long long signature() const {
    return static_cast<long long>(positive) - static_cast<long long>(negative);
  }
  bool operator==(const SignatureTriple&) const = default;
};

// Reduced row echelon form, in place. Returns the pivot columns in
// increasing order. Fully deterministic: the pivot of each step is the
// first nonzero entry in the leftmost unfinished column.
std::vector<std::size_t> rref_in_place(RatMat& m);

std::size_t rank(const RatMat& m);
std::size_t rank(const IntMat& m);

// Basis of { v : M v = 0 }, canonical form: the RREF free-variable basis,
// with each vector rescaled to the primitive integer vector whose free
// coordinate is positive. Deterministic, and identical to a saturated
// integral kernel basis column for column.
std::vector<std::vector<Rat>> kernel_basis(const RatMat& m);
std::vector<std::vector<Rat>> kernel_basis(const IntMat& m);

// Throws SingularMatrix when det M = 0, DimensionMismatch when not square.
RatMat inverse(const RatMat& m);

Rat det(const RatMat& m);
Int det(const IntMat& m);

// Inertia of a symmetric form by simultaneous row/column reduction over Q.
// When every remaining diagonal entry is zero but some off-diagonal entry
// is not, the hyperbolic pair it spans contributes (+1, -1). Throws
// NonSymmetricInput unless G equals its transpose.
SignatureTriple signature_of_symmetric(const RatMat& gram);

// u * input * v == d, with u, v unimodular and d diagonal satisfying
// d1 | d2 | ... | dr, all nonnegative, zeros last.
struct SmithDecomposition {
  IntMat d;
  IntMat u;
  IntMat v;
  std::size_t rank = 0;

  // Diagonal entries of d, in order (including trailing zeros).
  std::vector<Int> diagonal() const;
  // Elementary divisors > 1 (the torsion part of the cokernel).
  std::vector<Int> torsion() const;
};

// Pivot choice: smallest nonzero absolute value in the active submatrix,
// ties broken by row-major scan order.
SmithDecomposition smith_normal_form(const IntMat& m);

}  // namespace meyer
