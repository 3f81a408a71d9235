#pragma once

#include <cstdint>
#include <vector>

#include "meyer/cocycle.hpp"
#include "meyer/handlebody.hpp"
#include "meyer/rng.hpp"
#include "meyer/words.hpp"

namespace meyer {

// Constants pinning the homomorphism mu on the hyperelliptic handlebody
// group, split by the parity of the genus, together with the scale c_g
// relating mu to the difference of the two Meyer functions.
struct MuConstants {
  std::size_t g = 0;
  Rat mu_t1;
  Rat mu_s1;
  Rat mu_r1;  // identically 0: a homomorphism to Z kills the torsion class
  Rat scale;  // c_g = 2/(2g+1) for even g, 1/(2g+1) for odd g

  // Validates that the constants annihilate the defining relations
  // 4 mu(t1) + 2g mu(s1) = 0 and 2(g+1) mu(t1) + g(g+1) mu(s1) = 0.
  static MuConstants for_genus(std::size_t g);
};

// The hyperelliptic Meyer function, by the telescoping recursion
// phi(uv) = phi(u) + phi(v) - tau(rho(u), rho(v)) over the expanded twist
// word, from the base value phi(t_i) = (g+1)/(2g+1) and the inverse rule
// phi(u^-1) = tau(rho(u), rho(u)^-1) - phi(u). Cost is linear in the
// expanded word length, one cocycle evaluation per twist.
Rat phi_h(const Word& w, std::size_t g);

// Letter-count against MuConstants. Throws NotInHandlebodyGroup on words
// containing a bare t2 or t3.
Rat mu(const Word& w, std::size_t g);

// phi_h(w) - phi_v of the evaluated word; defined on the same words as mu,
// and additionally the evaluation must land in urSp.
Rat difference(const Word& w, std::size_t g);

// Random word over {t1, r1, s1}, length uniform in [1, max_len], exponents
// in {-2, -1, 1, 2}.
Word random_handlebody_word(SeededRng& rng, std::size_t max_len);

struct MainTheoremCase {
  Word word;
  Rat phi_h_value;
  long long phi_v_value = 0;
  Rat difference_value;
  Rat scaled_mu;
  bool pass = false;
};

struct MainTheoremReport {
  std::size_t g = 0;
  std::vector<MainTheoremCase> cases;
  bool pass = true;
};

// Checks difference(w) == c_g * mu(w) exactly on every supplied word plus
// `random_cases` seeded random words of length <= 12.
MainTheoremReport verify_main_theorem(std::size_t g,
                                      const std::vector<Word>& sample_words,
                                      std::uint64_t seed,
                                      std::size_t random_cases = 100);

}  // namespace meyer
