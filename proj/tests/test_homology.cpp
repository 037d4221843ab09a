#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "twistcheck/chain_complex.hpp"
#include "twistcheck/model.hpp"

using namespace twistcheck;

namespace {

Model load(int g) { return Model(build_surface(g), load_config(TWISTCHECK_DATA_DIR "/model.cfg")); }

}  // namespace

TEST(Canonicalize, TorsionRelation) {
  EXPECT_EQ(canonicalize({2, 2, 2, 2, 2}).coeffs(), (IntVec{0, 0, 0, 0, 0}));
  EXPECT_EQ(canonicalize({1, 1, 1, 1, 1}).coeffs(), (IntVec{1, 1, 1, 1, 1}));
  EXPECT_EQ(canonicalize({0, 0, 0, 0, 3}).coeffs(), (IntVec{-2, -2, -2, -2, 1}));
}

TEST(Canonicalize, Idempotent) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IntVec v(7);
    for (auto& x : v) x = d(rng);
    auto c = canonicalize(v);
    EXPECT_EQ(canonicalize(c.coeffs()), c);
    EXPECT_TRUE(c.coeffs().back() == 0 || c.coeffs().back() == 1);
    EXPECT_EQ(-(-c), c);
  }
}

TEST(FreePart, Examples) {
  EXPECT_EQ(free_part(torsion_class(5)), (FreePart{{0, 0, 0, 0}, 1}));
  EXPECT_EQ(free_part(basis_class(5, 1)), (FreePart{{1, 0, 0, 0}, 0}));
  auto a1 = canonicalize({1, 1, 0, 0, 0});
  EXPECT_EQ(free_part(a1), (FreePart{{1, 1, 0, 0}, 0}));
}

TEST(FreePart, RoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    IntVec v(5);
    for (auto& x : v) x = d(rng);
    auto c = canonicalize(v);
    EXPECT_EQ(from_free_part(free_part(c)), c);
  }
}

TEST(PairZ2, Examples) {
  auto m = load(5);
  EXPECT_EQ(pair_z2(bits_of(5, {1}), bits_of(5, {1})), 1);
  EXPECT_EQ(pair_z2(m.curve("a1").class_z2, m.curve("a2").class_z2), 1);
  EXPECT_EQ(pair_z2(m.curve("a1").class_z2, m.curve("a3").class_z2), 0);
}

TEST(PairZ, Examples) {
  auto m = load(5);
  auto a1 = m.curve("a1");
  EXPECT_EQ(pair_row(basis_class(5, 1), a1.pairing_row), 1);
  EXPECT_EQ(pair_row(a1.class_z, a1.pairing_row), 0);
  for (const auto& n : m.curve_names()) {
    auto c = m.curve(n);
    if (c.two_sided) {
      EXPECT_EQ(pair_row(torsion_class(5), c.pairing_row), 0) << n;
    }
  }
}

TEST(PairZ, ReducesToMod2Form) {
  for (int g : {5, 7, 9}) {
    auto m = load(g);
    for (const auto& xn : m.curve_names()) {
      auto x = m.curve(xn);
      for (const auto& cn : m.curve_names()) {
        auto c = m.curve(cn);
        if (!c.two_sided) continue;
        long long z = pair_row(x.class_z, c.pairing_row);
        EXPECT_EQ(((z % 2) + 2) % 2, pair_z2(x.class_z2, c.class_z2)) << xn << " " << cn;
      }
    }
  }
}

TEST(Transvect, CoreAlongChain) {
  // the a_i route traces to -(mu_1 + mu_2) and pairs +1 with mu_1, so the
  // twist sends mu_1 to mu_1 - (mu_1 + mu_2) = -mu_2
  auto m = load(5);
  auto a1 = m.curve("a1");
  auto img = transvect_row(basis_class(5, 1), a1.pairing_row, a1.class_z);
  EXPECT_EQ(img, -basis_class(5, 2));
  EXPECT_EQ(reduce_mod2(img), bits_of(5, {2}));
}

TEST(Transvect, FixesOrthogonal) {
  auto m = load(7);
  auto a1 = m.curve("a1");
  for (int k = 4; k <= 7; ++k)
    EXPECT_EQ(transvect_row(basis_class(7, k), a1.pairing_row, a1.class_z), basis_class(7, k));
}

TEST(ChainComplex, InvariantFactors) {
  for (int g : {3, 5, 7, 9, 11}) {
    auto t0 = std::chrono::steady_clock::now();
    auto h = chain_complex_oracle(g);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_EQ(h.h0, (HomologyGroup{1, {}})) << g;
    EXPECT_EQ(h.h1, (HomologyGroup{g - 1, {2}})) << g;
    EXPECT_EQ(h.h2, (HomologyGroup{0, {}})) << g;
    EXPECT_LT(secs, 1.0);
  }
}

TEST(ChainComplex, BoundarySquaresToZero) {
  auto cx = two_g_gon_complex(5);
  const auto& d1 = cx.d1;
  const auto& d2 = cx.d2;
  for (std::size_t i = 0; i < d1.size(); ++i)
    for (std::size_t k = 0; k < d2[0].size(); ++k) {
      long long s = 0;
      for (std::size_t j = 0; j < d2.size(); ++j) s += d1[i][j] * d2[j][k];
      EXPECT_EQ(s, 0);
    }
}

TEST(Smith, KnownDiagonal) {
  EXPECT_EQ(smith_diagonal({{2, 4}, {6, 8}}), (std::vector<long long>{2, 4}));
  EXPECT_EQ(smith_diagonal({{0, 0}, {0, 0}}), (std::vector<long long>{}));
  EXPECT_EQ(smith_diagonal({{1, 2, 3}}), (std::vector<long long>{1}));
}
