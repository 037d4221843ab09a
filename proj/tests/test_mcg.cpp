#include <gtest/gtest.h>

#include "twistcheck/words.hpp"

using namespace twistcheck;

namespace {

Model load(int g) { return Model(build_surface(g), load_config(TWISTCHECK_DATA_DIR "/model.cfg")); }

}  // namespace

TEST(DehnTwist, ChainOnCore) {
  auto m = load(5);
  auto a1 = m.curve("a1");
  auto A1 = dehn_twist(a1);
  EXPECT_EQ(A1.apply(basis_class(5, 1)), transvect_row(basis_class(5, 1), a1.pairing_row, a1.class_z));
  EXPECT_EQ(A1.det_free(), 1);
  EXPECT_EQ(dehn_twist(m.curve("b0")).det_free(), 1);
}

TEST(DehnTwist, OneSidedRejected) {
  auto m = load(5);
  try {
    dehn_twist(m.curve("mu1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TwoSidedRequired);
  }
}

TEST(DehnTwist, EveryTwistInSubgroup) {
  for (int g : {5, 7, 9}) {
    auto m = load(g);
    for (const auto& n : m.curve_names()) {
      auto c = m.curve(n);
      if (!c.two_sided) continue;
      auto T = dehn_twist(c);
      EXPECT_TRUE(in_twist_subgroup(T)) << n;
      EXPECT_TRUE(reps_compatible(T)) << n;
    }
  }
}

TEST(Transposition, OutsideSubgroup) {
  for (int g : {5, 7}) {
    auto m = load(g);
    for (int i = 1; i <= g; ++i) {
      auto U = crosscap_transposition(m, i);
      EXPECT_EQ(U.det_free(), -1) << i;
      EXPECT_FALSE(in_twist_subgroup(U));
      EXPECT_TRUE(is_identity_in_reps(power(U, 2)));
    }
  }
}

TEST(Slide, ReversesACore) {
  // Y_1 = A_1 U_1 reverses one of the two cores it involves; which one
  // depends on the orientation of a_1
  auto m = load(5);
  auto Y = crosscap_slide(m, 1);
  EXPECT_EQ(Y.apply(basis_class(5, 2)), -basis_class(5, 2));
  EXPECT_EQ(Y.det_free(), -1);
  EXPECT_FALSE(in_twist_subgroup(Y));
  EXPECT_TRUE(equal_in_reps(Y, compose(dehn_twist(m.curve("a1")), crosscap_transposition(m, 1))));
}

TEST(Rigid, IdentityAndSigma) {
  auto m = load(5);
  EXPECT_TRUE(is_identity_in_reps(from_rigid(m, RigidSymmetry::identity(5))));
  EXPECT_EQ(from_rigid(m, m.symmetry("sigma")).det_free(), 1);
  EXPECT_TRUE(in_twist_subgroup(from_rigid(m, m.symmetry("tau1"))));
}

TEST(Rigid, HomomorphismOnGroup) {
  auto m = load(5);
  auto all = rigid_group(5);
  for (const auto& r : all)
    for (const auto& s : all)
      EXPECT_TRUE(equal_in_reps(from_rigid(m, rigid_compose(r, s)), compose(from_rigid(m, r), from_rigid(m, s))));
}

TEST(Reflections, DeterminantByGenus) {
  // reflections act on the free part with determinant (-1)^((g-1)/2)
  for (int g : {3, 5, 7, 9}) {
    auto m = load(g);
    int expect = ((g - 1) / 2) % 2 ? -1 : 1;
    EXPECT_EQ(from_rigid(m, m.symmetry("tau1")).det_free(), expect) << g;
    EXPECT_EQ(from_rigid(m, m.symmetry("tau2")).det_free(), expect) << g;
    EXPECT_EQ(from_rigid(m, m.symmetry("tau3")).det_free(), 1) << g;
  }
}

TEST(Algebra, InverseAndPower) {
  auto m = load(7);
  GeneratorTable G(m);
  for (const char* tok : {"A1", "B0", "C", "E", "SGM", "U3", "Y2", "TAU1"}) {
    const auto& f = G.at(tok);
    EXPECT_TRUE(is_identity_in_reps(compose(f, inverse(f)))) << tok;
    EXPECT_TRUE(equal_in_reps(power(f, 3), compose(f, compose(f, f)))) << tok;
    EXPECT_TRUE(equal_in_reps(power(f, -2), inverse(compose(f, f)))) << tok;
    EXPECT_TRUE(is_identity_in_reps(power(f, 0)));
  }
}

TEST(Equality, TorsionProducts) {
  for (int g : {5, 7}) {
    auto m = load(g);
    GeneratorTable G(m);
    EXPECT_TRUE(is_identity_in_reps(power(compose(G.at("TAU1"), G.at("B0")), 2)));
    EXPECT_TRUE(is_identity_in_reps(power(compose(G.at("TAU2"), G.at("C")), 2)));
    EXPECT_EQ(rep_order(compose(G.at("TAU2"), G.at("C")), 10), 2);
    EXPECT_EQ(rep_order(compose(G.at("TAU1"), G.at("B0")), 10), 2);
  }
}

TEST(Equality, BraidAndDistinct) {
  auto m = load(5);
  GeneratorTable G(m);
  const auto &A1 = G.at("A1"), &A2 = G.at("A2");
  EXPECT_TRUE(equal_in_reps(compose(A1, compose(A2, A1)), compose(A2, compose(A1, A2))));
  EXPECT_FALSE(equal_in_reps(A1, A2));
  // disjoint chain curves commute
  EXPECT_TRUE(equal_in_reps(compose(A1, G.at("A3")), compose(G.at("A3"), A1)));
}

TEST(Order, SigmaAndIdentity) {
  for (int g : {5, 7}) {
    auto m = load(g);
    EXPECT_EQ(rep_order(MappingClass::identity(g), 1), 1);
    EXPECT_EQ(rep_order(from_rigid(m, m.symmetry("sigma")), 4 * g), 2 * g);
  }
  auto m = load(5);
  EXPECT_FALSE(rep_order(dehn_twist(m.curve("a1")), 50));
}

TEST(KleinBottle, SlideAndTransposition) {
  for (int g : {5, 7}) {
    auto m = load(g);
    GeneratorTable G(m);
    for (int i = 1; i <= g; ++i) {
      auto s = std::to_string(i);
      EXPECT_TRUE(equal_in_reps(G.at("Y" + s), compose(G.at("A" + s), G.at("U" + s))));
      EXPECT_TRUE(is_identity_in_reps(power(G.at("Y" + s), 2)));
      EXPECT_TRUE(is_identity_in_reps(power(G.at("U" + s), 2)));
      EXPECT_TRUE(is_identity_in_reps(G.at("D" + s)));
    }
  }
}

TEST(Naturality, ConjugateTwist) {
  // f T_c f^-1 = T_{f(c)} for rigid f, inverted when f reverses the
  // orientation of the sphere
  for (int g : {5, 7}) {
    auto m = load(g);
    for (const char* sym : {"t", "tau1", "tau2", "tau3", "sigma"}) {
      auto r = m.symmetry(sym);
      auto F = from_rigid(m, r);
      for (const char* n : {"a1", "b0", "c", "e"}) {
        auto c = m.curve(n);
        auto lhs = compose(F, compose(dehn_twist(c), inverse(F)));
        auto rhs = dehn_twist(apply_rigid_to_curve(r, c));
        if (r.orientation_sign() < 0) rhs = inverse(rhs);
        EXPECT_TRUE(equal_in_reps(lhs, rhs)) << g << " " << sym << " " << n;
      }
    }
  }
}

TEST(CurveIdentity, ConjugateByA1) {
  for (int g : {5, 7, 9}) {
    auto m = load(g);
    GeneratorTable G(m);
    auto A1 = G.at("A1");
    auto img = inverse(A1).apply(m.curve("e").class_z);
    auto c = m.curve("c").class_z;
    EXPECT_TRUE(img == c || img == -c) << g;
    EXPECT_TRUE(equal_in_reps(G.at("C"), compose(inverse(A1), compose(G.at("E"), A1)))) << g;
  }
}
