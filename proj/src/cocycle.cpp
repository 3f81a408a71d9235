#include "meyer/cocycle.hpp"

namespace meyer {

CocycleSpace cocycle_space(const SpElement& a, const SpElement& b) {
  if (a.genus() != b.genus())
    throw GenusMismatch("cocycle arguments must share a genus");
  const std::size_t g = a.genus();
  const std::size_t n = 2 * g;

  const IntMat lhs = a.inverse().matrix() - IntMat::identity(n);
  const IntMat rhs = b.matrix() - IntMat::identity(n);
  RatMat system(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      system(i, j) = Rat(lhs(i, j));
      system(i, n + j) = Rat(rhs(i, j));
    }
  std::vector<std::vector<Rat>> basis = kernel_basis(system);

  // Pairing <(x,y),(x',y')> = t(x+y) W y' with W = J (I - B).
  const RatMat w = to_rational(symplectic_form(g) * (IntMat::identity(n) - b.matrix()));
  const std::size_t dim = basis.size();
  RatMat gram(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Rat> y(basis[j].begin() + static_cast<std::ptrdiff_t>(n),
                       basis[j].end());
    const std::vector<Rat> wy = w * y;
    for (std::size_t i = 0; i < dim; ++i) {
      Rat entry = 0;
      for (std::size_t k = 0; k < n; ++k)
        entry += (basis[i][k] + basis[i][n + k]) * wy[k];
      gram(i, j) = entry;
    }
  }
  if (!gram.is_symmetric())
    throw NonSymmetricInput("cocycle pairing failed its symmetry check");

  return CocycleSpace{g, a, b, std::move(basis), std::move(gram)};
}

long long tau(const SpElement& a, const SpElement& b) {
  return signature_of_symmetric(cocycle_space(a, b).gram).signature();
}

bool check_cocycle_identity(const SpElement& a, const SpElement& b,
                            const SpElement& c) {
  return tau(a, b) + tau(a * b, c) == tau(b, c) + tau(a, b * c);
}

}  // namespace meyer
