#include <gtest/gtest.h>

#include <random>

#include "twistcheck/words.hpp"

using namespace twistcheck;

namespace {

Model load(int g) { return Model(build_surface(g), load_config(TWISTCHECK_DATA_DIR "/model.cfg")); }

ErrorCode code_of(const std::string& text, int g) {
  try {
    parse_word(text, g);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::BadConfig;
}

}  // namespace

TEST(Parse, OrderAndExponents) {
  auto w = parse_word("TAU1 B0", 5);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w.letters[0], (Letter{"TAU1", 1}));
  EXPECT_EQ(w.letters[1], (Letter{"B0", 1}));
  EXPECT_EQ(parse_word("A1' Y3^-1", 5).letters, (std::vector<Letter>{{"A1", -1}, {"Y3", -1}}));
  EXPECT_TRUE(parse_word("ID", 5).empty());
  EXPECT_TRUE(parse_word("   ", 5).empty());
}

TEST(Parse, RightmostAppliedFirst) {
  auto m = load(5);
  GeneratorTable G(m);
  auto f = evaluate(parse_word("TAU1 B0", 5), G);
  EXPECT_TRUE(equal_in_reps(f, compose(G.at("TAU1"), G.at("B0"))));
  auto x = basis_class(5, 3);
  EXPECT_EQ(f.apply(x), G.at("TAU1").apply(G.at("B0").apply(x)));
}

TEST(Parse, Errors) {
  EXPECT_EQ(code_of("A9", 5), ErrorCode::UnknownToken);
  EXPECT_EQ(code_of("A1 Q", 5), ErrorCode::UnknownToken);
  EXPECT_EQ(code_of("A1^2", 5), ErrorCode::MalformedExponent);
  EXPECT_EQ(code_of("A1'' B0", 5), ErrorCode::MalformedExponent);
  EXPECT_EQ(code_of("A1 ,", 5), ErrorCode::UnknownToken);
  try {
    parse_word("A1 B0 ZZ", 5);
  } catch (const WordError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_NO_THROW(parse_word("A9", 9));
}

TEST(Reduce, Examples) {
  EXPECT_TRUE(free_reduce(parse_word("A1 A1'", 5)).empty());
  EXPECT_TRUE(free_reduce(parse_word("A1 B0 B0' A1'", 5)).empty());
  auto w = parse_word("A1 B0 A1'", 5);
  EXPECT_EQ(free_reduce(w), w);
}

TEST(Reduce, IdempotentAndRoundTrip) {
  std::mt19937_64 rng(2024);
  for (int g : {5, 7, 9}) {
    for (int trial = 0; trial < 200; ++trial) {
      auto w = random_word(rng, g, 12);
      auto r = free_reduce(w);
      EXPECT_EQ(free_reduce(r), r);
      EXPECT_EQ(parse_word(print_word(w), g), w);
      EXPECT_TRUE(free_reduce(concat(w, inverse(w))).empty());
    }
  }
}

TEST(Evaluate, Homomorphism) {
  for (int g : {5, 7}) {
    auto m = load(g);
    GeneratorTable G(m);
    std::mt19937_64 rng(0x7715 + g);
    for (int trial = 0; trial < 100; ++trial) {
      auto u = random_word(rng, g, 6), v = random_word(rng, g, 6);
      EXPECT_TRUE(equal_in_reps(evaluate(concat(u, v), G), compose(evaluate(u, G), evaluate(v, G))));
      EXPECT_TRUE(equal_in_reps(evaluate(free_reduce(u), G), evaluate(u, G)));
      EXPECT_TRUE(equal_in_reps(evaluate(inverse(u), G), inverse(evaluate(u, G))));
    }
  }
}

TEST(Evaluate, SigmaPowerAndIdentity) {
  auto m = load(5);
  GeneratorTable G(m);
  std::string ten;
  for (int i = 0; i < 10; ++i) ten += "SGM ";
  EXPECT_TRUE(is_identity_in_reps(evaluate(parse_word(ten, 5), G)));
  EXPECT_TRUE(is_identity_in_reps(evaluate(parse_word("ID", 5), G)));
  EXPECT_FALSE(is_identity_in_reps(evaluate(parse_word("SGM SGM SGM SGM SGM", 5), G)));
}

TEST(Evaluate, Memberships) {
  auto m = load(5);
  GeneratorTable G(m);
  EXPECT_EQ(evaluate(parse_word("Y1", 5), G).det_free(), -1);
  EXPECT_EQ(evaluate(parse_word("SGM", 5), G).det_free(), 1);
  EXPECT_EQ(evaluate(parse_word("U1 U2", 5), G).det_free(), 1);
}

TEST(Alphabet, Complete) {
  auto a = alphabet(5);
  for (const char* t : {"A1", "A5", "B0", "C", "E", "U3", "Y5", "SGM", "ROT", "TAU1", "TAU2", "TAU3", "D2"})
    EXPECT_TRUE(is_token(t, 5)) << t;
  EXPECT_FALSE(is_token("A6", 5));
  EXPECT_FALSE(is_token("a1", 5));
  auto m = load(5);
  GeneratorTable G(m);
  for (const auto& t : a) EXPECT_NO_THROW(G.at(t)) << t;
}
