#include <doctest.h>

#include "meyer/words.hpp"

using namespace meyer;

namespace {

std::size_t offset_of(const std::string& text) {
  try {
    parse_word(text);
  } catch (const ParseError& e) {
    return e.offset;
  }
  FAIL("expected a ParseError for: ", text);
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("parse_word: canonical and tolerant forms") {
  CHECK(parse_word("") == Word{});
  CHECK(parse_word("   \t\n ") == Word{});
  CHECK(parse_word("t1") == Word{{Generator::T1, 1}});
  CHECK(parse_word("t1^3") == Word{{Generator::T1, 3}});
  CHECK(parse_word("t1^+3") == Word{{Generator::T1, 3}});
  CHECK(parse_word("s1^-2") == Word{{Generator::S1, -2}});
  CHECK(parse_word("t1 t2 t3 r1 s1") ==
        Word{{Generator::T1, 1},
             {Generator::T2, 1},
             {Generator::T3, 1},
             {Generator::R1, 1},
             {Generator::S1, 1}});
  // '*' with or without spaces, runs of whitespace, trailing whitespace.
  CHECK(parse_word("t1*s1") == parse_word("t1 s1"));
  CHECK(parse_word("t1 * s1") == parse_word("t1 s1"));
  CHECK(parse_word("  t1   s1  ") == parse_word("t1 s1"));
  CHECK(parse_word("t1^-1*t1^-1") == Word{{Generator::T1, -1}, {Generator::T1, -1}});
  // 18-digit exponents are in range.
  CHECK(parse_word("t1^999999999999999999") ==
        Word{{Generator::T1, 999999999999999999LL}});
}

TEST_CASE("parse_word: every defect is reported at the right byte") {
  CHECK(offset_of("t4") == 0);        // unknown generator
  CHECK(offset_of("x1") == 0);        // unknown generator
  CHECK(offset_of("t") == 0);         // expected a generator
  CHECK(offset_of("t1 q2") == 3);     // unknown generator, second term
  CHECK(offset_of("t1^^2") == 3);     // expected an exponent
  CHECK(offset_of("t1^") == 3);       // expected an exponent
  CHECK(offset_of("t1^-") == 4);      // expected an exponent (after sign)
  CHECK(offset_of("t1^0") == 3);      // exponent must be nonzero
  CHECK(offset_of("t1^-0") == 3);     // exponent must be nonzero
  CHECK(offset_of("t1^1000000000000000000") == 3);  // 19 digits: out of range
  CHECK(offset_of("t1x1") == 2);      // missing separator
  CHECK(offset_of("t1 *") == 4);      // dangling '*'
  CHECK(offset_of("t1 * ") == 5);     // dangling '*' with trailing space

  // The error text is part of the contract too.
  try {
    parse_word("t1^^2");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "expected an exponent (at offset 3)");
  }
}

TEST_CASE("print_word: canonical text, parse round trip") {
  CHECK(print_word({}) == "");
  CHECK(print_word({{Generator::T1, 1}}) == "t1");
  CHECK(print_word({{Generator::T1, -1}}) == "t1^-1");
  CHECK(print_word({{Generator::S1, 2}, {Generator::R1, 1}}) == "s1^2 r1");

  const Word w = parse_word("t1^2 * r1^-3  s1");
  CHECK(print_word(w) == "t1^2 r1^-3 s1");
  CHECK(parse_word(print_word(w)) == w);
}

TEST_CASE("inverse_word: reverses and negates") {
  const Word w = parse_word("t1^2 s1");
  CHECK(inverse_word(w) == parse_word("s1^-1 t1^-2"));
  CHECK(inverse_word(Word{}) == Word{});
  CHECK(inverse_word(inverse_word(w)) == w);
}

TEST_CASE("expand_to_twists: r1 and s1 flatten to their defining words") {
  const auto r1 = expand_to_twists(parse_word("r1"));
  CHECK(r1 == std::vector<Letter>{{Generator::T2, -1},
                                  {Generator::T3, -1},
                                  {Generator::T1, 1},
                                  {Generator::T2, 1}});
  const auto s1 = expand_to_twists(parse_word("s1"));
  CHECK(s1 == std::vector<Letter>{{Generator::T2, 1},
                                  {Generator::T3, 1},
                                  {Generator::T1, 1},
                                  {Generator::T2, 1}});
  // Negative exponents invert and reverse; plain twists just repeat.
  const auto s1_inv = expand_to_twists(parse_word("s1^-1"));
  CHECK(s1_inv == std::vector<Letter>{{Generator::T2, -1},
                                      {Generator::T1, -1},
                                      {Generator::T3, -1},
                                      {Generator::T2, -1}});
  CHECK(expand_to_twists(parse_word("t1^3")) ==
        std::vector<Letter>(3, Letter{Generator::T1, 1}));
  CHECK(expand_to_twists(parse_word("t1^-2")) ==
        std::vector<Letter>(2, Letter{Generator::T1, -1}));
  CHECK(expand_to_twists(parse_word("r1^2")).size() == 8);

  // Every expanded letter is a single twist with exponent +-1.
  for (const Letter& l : expand_to_twists(parse_word("t1^2 r1^-1 s1^3"))) {
    CHECK((l.gen == Generator::T1 || l.gen == Generator::T2 ||
           l.gen == Generator::T3));
    CHECK((l.exponent == 1 || l.exponent == -1));
  }
}

TEST_CASE("chain classes: pinned values regenerate from the search") {
  const ChainClasses& cc = chain_classes();
  CHECK(cc.c1 == std::array<int, 4>{1, 0, 0, 0});
  CHECK(cc.c2 == std::array<int, 4>{-2, 1, -1, 0});
  CHECK(cc.c3 == std::array<int, 4>{-1, 1, 0, 0});
  // The exhaustive search lands on the stored constant.
  CHECK(derive_chain_classes() == cc);

  // Chain intersection pattern: consecutive classes pair to +-1, the ends
  // are disjoint.
  const auto pair = [](const std::array<int, 4>& u, const std::array<int, 4>& v) {
    return u[0] * v[2] + u[1] * v[3] - u[2] * v[0] - u[3] * v[1];
  };
  CHECK(pair(cc.c1, cc.c2) * pair(cc.c1, cc.c2) == 1);
  CHECK(pair(cc.c2, cc.c3) * pair(cc.c2, cc.c3) == 1);
  CHECK(pair(cc.c1, cc.c3) == 0);
}

TEST_CASE("generator_matrix: pinned images") {
  CHECK(generator_matrix(Generator::T1, 1).matrix() == IntMat{{1, 1}, {0, 1}});
  CHECK(generator_matrix(Generator::S1, 2).matrix() == IntMat{{-1, 0, 2, -1},
                                                              {1, 1, -1, 1},
                                                              {0, 0, -1, 1},
                                                              {0, 0, 0, 1}});
  // t1 at higher genus: the genus-1 twist in the (a1, b1) plane.
  const IntMat t1_g2 = generator_matrix(Generator::T1, 2).matrix();
  IntMat expected = IntMat::identity(4);
  expected(0, 2) = 1;
  CHECK(t1_g2 == expected);
}

TEST_CASE("generator_matrix: genus floors") {
  for (const Generator gen :
       {Generator::T2, Generator::T3, Generator::R1, Generator::S1})
    CHECK_THROWS_AS(generator_matrix(gen, 1), GenusTooSmall);
  CHECK_THROWS_AS(generator_matrix(Generator::T1, 0), DimensionMismatch);
  CHECK_NOTHROW(generator_matrix(Generator::T1, 1));
}

TEST_CASE("generator images: twists fix their own classes, r1/s1 land in urSp") {
  // A transvection acts trivially on its defining class.
  const ChainClasses& cc = chain_classes();
  const std::array<Generator, 3> gens = {Generator::T1, Generator::T2,
                                         Generator::T3};
  const std::array<std::array<int, 4>, 3> classes = {cc.c1, cc.c2, cc.c3};
  for (std::size_t k = 0; k < 3; ++k) {
    const IntMat m = generator_matrix(gens[k], 2).matrix();
    std::vector<Int> v = {Int(classes[k][0]), Int(classes[k][1]),
                          Int(classes[k][2]), Int(classes[k][3])};
    CHECK(m * v == v);
  }

  // r1 and s1 stay upper-right-triangular at every genus; a bare t2 does not.
  for (std::size_t g = 2; g <= 4; ++g) {
    CHECK_NOTHROW(split_ursp(generator_matrix(Generator::R1, g)));
    CHECK_NOTHROW(split_ursp(generator_matrix(Generator::S1, g)));
    CHECK_NOTHROW(split_ursp(generator_matrix(Generator::T1, g)));
    CHECK_THROWS_AS(split_ursp(generator_matrix(Generator::T2, g)),
                    NotUpperTriangular);
  }
}

TEST_CASE("evaluate_word: monoid homomorphism with exact inverses") {
  CHECK(evaluate_word({}, 2) == SpElement::identity(2));
  CHECK(evaluate_word(parse_word("t2 t3 t1 t2"), 2) ==
        generator_matrix(Generator::S1, 2));
  CHECK(evaluate_word(parse_word("t1^-1"), 1).matrix() ==
        IntMat{{1, -1}, {0, 1}});

  const std::vector<std::string> words = {"t1", "s1 r1^-2", "t2^3 t3^-1 t1",
                                          "r1 s1 r1^-1 s1^-1"};
  for (const std::string& left : words)
    for (const std::string& right : words) {
      const Word u = parse_word(left), v = parse_word(right);
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      CHECK(evaluate_word(uv, 2) == evaluate_word(u, 2) * evaluate_word(v, 2));
    }
  for (const std::string& text : words) {
    const Word w = parse_word(text);
    Word cancel = w;
    const Word winv = inverse_word(w);
    cancel.insert(cancel.end(), winv.begin(), winv.end());
    CHECK(evaluate_word(cancel, 2) == SpElement::identity(2));
    CHECK(evaluate_word(cancel, 3) == SpElement::identity(3));
  }
  CHECK_THROWS_AS(evaluate_word(parse_word("s1"), 1), GenusTooSmall);
  CHECK_THROWS_AS(evaluate_word(parse_word("t1"), 0), DimensionMismatch);
}
