#pragma once

#include <optional>
#include <vector>

#include "meyer/cocycle.hpp"
#include "meyer/exactlin.hpp"
#include "meyer/symplectic.hpp"

namespace meyer {

// The invariant subspace U = Ker(S - I) of the handlebody's first homology,
// carrying the pairing <x, y> = tx tQ y. Its signature is phi_v.
struct InvariantForm {
  std::size_t g = 0;
  std::vector<std::vector<Rat>> basis;  // g-vectors spanning Ker(S - I)
  RatMat gram;
  SignatureTriple signature;
};

InvariantForm invariant_form(const UrSpElement& a);

// The handlebody Meyer function: signature of the invariant form. Always
// bounded by the genus in absolute value.
long long phi_v(const UrSpElement& a);

// Integral homology of the mapping torus with monodromy acting through A.
//   h2_rank        rank of H2 = integer kernel of S - I
//   h2rel_*        free rank and torsion of H2(rel boundary) = coker(P - I)
//   d_matrix       the connecting map x -> Qx written in the Smith basis of
//                  coker(P - I): rows of U Q reduced mod the elementary
//                  divisors (rows with divisor 1 vanish, 0 means no
//                  reduction)
//   h1_torsion     torsion of coker(S - I); only filled on request
struct TorusHomologyReport {
  std::size_t g = 0;
  std::size_t h2_rank = 0;
  std::size_t h2rel_rank = 0;
  std::vector<Int> h2rel_torsion;
  IntMat d_matrix;
  RatMat intersection_gram;
  long long signature = 0;
  std::optional<std::vector<Int>> h1_torsion;
};

TorusHomologyReport mapping_torus_homology(const UrSpElement& a,
                                           bool with_h1_torsion = false);

// tau(A, B) == phi_v(A) + phi_v(B) - phi_v(AB), exactly.
bool verify_cobounding(const UrSpElement& a, const UrSpElement& b);

}  // namespace meyer
