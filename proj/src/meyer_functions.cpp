#include "meyer/meyer_functions.hpp"

namespace meyer {

MuConstants MuConstants::for_genus(std::size_t g) {
  if (g == 0) throw DimensionMismatch("genus must be positive");
  MuConstants k;
  k.g = g;
  const Int gi(g);
  if (g % 2 == 0) {
    k.mu_s1 = 1;
    k.mu_t1 = Rat(-gi, Int(2));
    k.scale = Rat(Int(2), 2 * gi + 1);
  } else {
    k.mu_t1 = Rat(-gi);
    k.mu_s1 = 2;
    k.scale = Rat(Int(1), 2 * gi + 1);
  }
  k.mu_r1 = 0;
  const Rat gr(gi);
  if (4 * k.mu_t1 + 2 * gr * k.mu_s1 != 0 ||
      2 * (gr + 1) * k.mu_t1 + gr * (gr + 1) * k.mu_s1 != 0)
    throw Error("mu constants fail their defining relations");
  return k;
}

Rat phi_h(const Word& w, std::size_t g) {
  if (g == 0) throw DimensionMismatch("genus must be positive");
  const Rat base = Rat(Int(g) + 1, 2 * Int(g) + 1);

  Rat value = 0;
  SpElement acc = SpElement::identity(g);
  for (const Letter& t : expand_to_twists(w)) {
    const SpElement m = generator_matrix(t.gen, g);
    SpElement factor = t.exponent > 0 ? m : m.inverse();
    const Rat letter_value =
        t.exponent > 0 ? base : Rat(tau(m, m.inverse())) - base;
    value += letter_value - Rat(tau(acc, factor));
    acc = acc * factor;
  }
  return value;
}

Rat mu(const Word& w, std::size_t g) {
  const MuConstants k = MuConstants::for_genus(g);
  Rat total = 0;
  for (const Letter& l : w) {
    switch (l.gen) {
      case Generator::T1:
        total += Rat(l.exponent) * k.mu_t1;
        break;
      case Generator::S1:
        total += Rat(l.exponent) * k.mu_s1;
        break;
      case Generator::R1:
        break;  // mu_r1 = 0
      case Generator::T2:
      case Generator::T3:
        throw NotInHandlebodyGroup(
            "mu is undefined on words containing a bare t2 or t3");
    }
  }
  return total;
}

Rat difference(const Word& w, std::size_t g) {
  for (const Letter& l : w)
    if (l.gen == Generator::T2 || l.gen == Generator::T3)
      throw NotInHandlebodyGroup(
          "difference is undefined on words containing a bare t2 or t3");
  const UrSpElement u = split_ursp(evaluate_word(w, g));
  return phi_h(w, g) - Rat(phi_v(u));
}

Word random_handlebody_word(SeededRng& rng, std::size_t max_len) {
  static const Generator pool[] = {Generator::T1, Generator::R1, Generator::S1};
  const long long len = rng.next_int(1, static_cast<long long>(max_len));
  Word w;
  w.reserve(static_cast<std::size_t>(len));
  for (long long i = 0; i < len; ++i) {
    const Generator gen = pool[rng.next_int(0, 2)];
    w.push_back(Letter{gen, rng.next_nonzero(2)});
  }
  return w;
}

MainTheoremReport verify_main_theorem(std::size_t g,
                                      const std::vector<Word>& sample_words,
                                      std::uint64_t seed,
                                      std::size_t random_cases) {
  if (g < 2)
    throw GenusTooSmall("main theorem verification needs genus at least 2");

  MainTheoremReport report;
  report.g = g;
  const Rat scale = MuConstants::for_genus(g).scale;

  const auto run_case = [&](const Word& w) {
    MainTheoremCase c;
    c.word = w;
    c.phi_h_value = phi_h(w, g);
    c.phi_v_value = phi_v(split_ursp(evaluate_word(w, g)));
    c.difference_value = c.phi_h_value - Rat(c.phi_v_value);
    c.scaled_mu = scale * mu(w, g);
    c.pass = c.difference_value == c.scaled_mu;
    report.pass = report.pass && c.pass;
    report.cases.push_back(std::move(c));
  };

  for (const Word& w : sample_words) run_case(w);
  SeededRng rng(mix64(seed, static_cast<std::uint64_t>(g)));
  for (std::size_t k = 0; k < random_cases; ++k)
    run_case(random_handlebody_word(rng, 12));
  return report;
}

}  // namespace meyer
