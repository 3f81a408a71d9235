#pragma once

#include <vector>

#include "meyer/exactlin.hpp"
#include "meyer/symplectic.hpp"

namespace meyer {

// The space V_{A,B} = {(x, y) : (A^{-1} - I)x + (B - I)y = 0} inside
// Q^{2g} + Q^{2g}, carrying the pairing <(x,y),(x',y')> = t(x+y) J (I-B) y'.
// The signature of the pairing is Meyer's cocycle evaluated at (A, B).
struct CocycleSpace {
  std::size_t g;
  SpElement a, b;
  std::vector<std::vector<Rat>> basis;  // 4g-vectors, x stacked on top of y
  RatMat gram;
};

CocycleSpace cocycle_space(const SpElement& a, const SpElement& b);

long long tau(const SpElement& a, const SpElement& b);

// tau(A,B) + tau(AB,C) == tau(B,C) + tau(A,BC), exactly.
bool check_cocycle_identity(const SpElement& a, const SpElement& b,
                            const SpElement& c);

}  // namespace meyer
