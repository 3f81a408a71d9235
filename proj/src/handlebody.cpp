#include "meyer/handlebody.hpp"

namespace meyer {

InvariantForm invariant_form(const UrSpElement& a) {
  const std::size_t g = a.genus();
  const IntMat s_minus_i = a.s() - IntMat::identity(g);
  std::vector<std::vector<Rat>> basis = kernel_basis(s_minus_i);

  const RatMat qt = to_rational(a.q().transpose());
  const std::size_t dim = basis.size();
  RatMat gram(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const std::vector<Rat> qy = qt * basis[j];
    for (std::size_t i = 0; i < dim; ++i) {
      Rat entry = 0;
      for (std::size_t k = 0; k < g; ++k) entry += basis[i][k] * qy[k];
      gram(i, j) = entry;
    }
  }
  if (!gram.is_symmetric())
    throw NonSymmetricInput("invariant pairing failed its symmetry check");

  const SignatureTriple sig = signature_of_symmetric(gram);
  return InvariantForm{g, std::move(basis), std::move(gram), sig};
}

long long phi_v(const UrSpElement& a) {
  return invariant_form(a).signature.signature();
}

TorusHomologyReport mapping_torus_homology(const UrSpElement& a,
                                           bool with_h1_torsion) {
  const std::size_t g = a.genus();
  const IntMat eye = IntMat::identity(g);
  const SmithDecomposition snf_s = smith_normal_form(a.s() - eye);
  const SmithDecomposition snf_p = smith_normal_form(a.p() - eye);

  TorusHomologyReport report;
  report.g = g;
  report.h2_rank = g - snf_s.rank;
  report.h2rel_rank = g - snf_p.rank;
  report.h2rel_torsion = snf_p.torsion();

  report.d_matrix = snf_p.u * a.q();
  const std::vector<Int> divisors = snf_p.diagonal();
  for (std::size_t i = 0; i < g; ++i) {
    const Int& d = divisors[i];
    if (d == 0) continue;  // free coordinate, nothing to reduce by
    for (std::size_t j = 0; j < g; ++j) {
      Int r = report.d_matrix(i, j) % d;
      if (r < 0) r += d;
      report.d_matrix(i, j) = r;
    }
  }

  const InvariantForm form = invariant_form(a);
  report.intersection_gram = form.gram;
  report.signature = form.signature.signature();

  if (with_h1_torsion) report.h1_torsion = snf_s.torsion();
  return report;
}

bool verify_cobounding(const UrSpElement& a, const UrSpElement& b) {
  const long long t = tau(a.assemble(), b.assemble());
  return t == phi_v(a) + phi_v(b) - phi_v(a * b);
}

}  // namespace meyer
