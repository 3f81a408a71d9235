#pragma once

#include <array>
#include <string>
#include <vector>

#include "meyer/symplectic.hpp"

namespace meyer {

// Mapping-class generators. r1 and s1 abbreviate the twist words
// t2^-1 t3^-1 t1 t2 and t2 t3 t1 t2; they are never given matrices of
// their own.
enum class Generator { T1, T2, T3, R1, S1 };

std::string to_string(Generator gen);

struct Letter {
  Generator gen;
  long long exponent = 1;

  bool operator==(const Letter&) const = default;
};

// A formal word in the generators; empty means the identity. Exponents are
// nonzero on anything the parser produces.
using Word = std::vector<Letter>;

// Grammar:  word := eps | term (sep term)*
//           sep  := whitespace | '*'
//           term := gen ('^' signed-integer)?
//           gen  := 't1' | 't2' | 't3' | 'r1' | 's1'
// Separators tolerate runs of whitespace around an optional '*'. An omitted
// exponent means 1; exponent 0 is rejected. Errors carry a byte offset.
Word parse_word(const std::string& text);

// Canonical text form: single spaces, '^e' only when e != 1. parse_word is
// a left inverse of this.
std::string print_word(const Word& w);

// Reversed letters with negated exponents: the group inverse, formally.
Word inverse_word(const Word& w);

// Flatten to single twists: every output letter is t1, t2 or t3 with
// exponent +1 or -1, and r1/s1 are replaced by their defining words.
std::vector<Letter> expand_to_twists(const Word& w);

// Homology classes of the three chain curves in the genus-2 coordinates
// (a1, a2, b1, b2). c1 is the class of the t1 curve; c2 and c3 are pinned
// by derive_chain_classes and stored here as a vetted constant.
struct ChainClasses {
  std::array<int, 4> c1, c2, c3;

  bool operator==(const ChainClasses&) const = default;
};

// The constant, with its invariants revalidated on first use per process.
const ChainClasses& chain_classes();

// Exhaustive search over entries in [-2, 2]: c2 and c3 must pair correctly
// with their neighbors in the chain, reproduce the pinned genus-2 image of
// s1 as a transvection composite, and send the r1 word into urSp. Returns
// the lexicographically smallest solution; throws NoSolution if the
// conventions were mis-transcribed.
ChainClasses derive_chain_classes();

// The image of a single generator in Sp(2g;Z). t2, t3, r1, s1 need g >= 2;
// genus 1 only supports powers of t1.
SpElement generator_matrix(Generator gen, std::size_t g);

// Product of generator images in written order; negative exponents via the
// exact symplectic inverse.
SpElement evaluate_word(const Word& w, std::size_t g);

}  // namespace meyer
