#include <random>

#include <gtest/gtest.h>

#include "fixtures_access.hpp"
#include "spincover/forms.hpp"
#include "spincover/orbits.hpp"

using namespace spincover;
namespace fx = testing_fixtures;

TEST(Pair, DotAndSymplectic) {
  auto d = FormSpace::dot(3);
  EXPECT_EQ(pair(*d, GF2Vec::parse("110"), GF2Vec::parse("011")), 1u);
  auto s = FormSpace::symplectic(2);
  EXPECT_EQ(pair(*s, GF2Vec::parse("1000"), GF2Vec::parse("0100")), 1u);
  EXPECT_EQ(pair(*s, GF2Vec::parse("1000"), GF2Vec::parse("0010")), 0u);
  EXPECT_EQ(pair(*s, GF2Vec::parse("1011"), GF2Vec::parse("1011")), 0u);
  EXPECT_THROW(pair(*s, GF2Vec::parse("10"), GF2Vec::parse("1000")), ShapeError);
}

TEST(Pair, FastPathsAgreeWithGram) {
  std::mt19937_64 rng(3);
  auto s = FormSpace::symplectic(3);
  auto generic = FormSpace::general(s->gram());
  for (int k = 0; k < 500; ++k) {
    GF2Vec u(6, rng()), v(6, rng());
    EXPECT_EQ(s->pair(u, v), generic->pair(u, v));
  }
}

TEST(Isometry, DirectChecks) {
  EXPECT_EQ(is_isometry(*FormSpace::dot(2), GF2Mat::parse("01;10")), fx::expected("is_isometry_dot2_swap").get<bool>());
  EXPECT_EQ(is_isometry(*FormSpace::symplectic(1), GF2Mat::parse("10;11")),
            fx::expected("is_isometry_symp1_transvection").get<bool>());
  EXPECT_TRUE(is_isometry(*FormSpace::dot(4), GF2Mat::identity(4)));
  EXPECT_FALSE(is_isometry(*FormSpace::dot(2), GF2Mat::parse("11;01")));
  EXPECT_FALSE(is_isometry(*FormSpace::dot(2), GF2Mat::parse("11;11")));
  EXPECT_THROW(Isometry::make(FormSpace::dot(2), GF2Mat::parse("11;01")), DomainError);
}

TEST(Transvection, InvolutionOnRandomVectors) {
  bool all = true;
  for (const auto& y : fx::input("transvection_involution")["ys"]) {
    GF2Vec v = GF2Vec::parse(y.get<std::string>());
    auto sp = FormSpace::symplectic(v.size() / 2);
    auto t = transvection(sp, v);
    all = all && (t * t).mat() == GF2Mat::identity(v.size()) && is_isometry(*sp, t.mat());
  }
  EXPECT_EQ(all, fx::expected("transvection_involution").get<bool>());
}

TEST(Transvection, DotNeedsIsotropicVector) {
  auto d = FormSpace::dot(3);
  EXPECT_THROW(transvection(d, GF2Vec::parse("100")), DomainError);
  EXPECT_EQ(transvection(d, GF2Vec::parse("110")).mat(), GF2Mat::parse("010;100;001"));
}

TEST(Enumerate, GroupOrdersMatchOracle) {
  EXPECT_EQ(enumerate_isometries(FormSpace::dot(2)).size(), fx::expected("enumerate_dot2").get<std::size_t>());
  EXPECT_EQ(enumerate_isometries(FormSpace::dot(3)).size(), fx::expected("enumerate_dot3").get<std::size_t>());
  EXPECT_EQ(enumerate_isometries(FormSpace::dot(4)).size(), fx::expected("enumerate_dot4").get<std::size_t>());
  EXPECT_EQ(enumerate_isometries(FormSpace::symplectic(1)).size(), fx::expected("enumerate_symp1").get<std::size_t>());
  EXPECT_EQ(enumerate_isometries(FormSpace::symplectic(2)).size(), fx::expected("enumerate_symp2").get<std::size_t>());
}

TEST(Enumerate, LargerOrders) {
  EXPECT_EQ(enumerate_isometries(FormSpace::dot(5)).size(), 720u);
  EXPECT_EQ(enumerate_isometries(FormSpace::dot(6)).size(), 23040u);
}

TEST(Enumerate, GuardRefusesHugeGroups) {
  EnumerationLimits tight;
  tight.dot_max_dim = 3;
  EXPECT_THROW(enumerate_isometries(FormSpace::dot(4), tight), GuardError);
}

TEST(Closure, AdjacentSwapsGiveAllPermutations) {
  auto d = FormSpace::dot(3);
  std::vector<Isometry> gens{Isometry::make(d, GF2Mat::parse("010;100;001")), Isometry::make(d, GF2Mat::parse("100;001;010"))};
  auto group = closure(gens);
  EXPECT_EQ(group.size(), fx::expected("closure_dot3_adjacent_swaps")["order"].get<std::size_t>());
  EXPECT_EQ(sorted_matrices(group), sorted_matrices(enumerate_isometries(d)));
}

TEST(Closure, TwoTransvectionsGenerateSp2) {
  auto s = FormSpace::symplectic(1);
  std::vector<Isometry> gens{transvection(s, GF2Vec::parse("10")), transvection(s, GF2Vec::parse("01"))};
  auto group = closure(gens);
  EXPECT_EQ(group.size(), fx::expected("closure_symp1_transvections")["order"].get<std::size_t>());
  EXPECT_EQ(sorted_matrices(group), sorted_matrices(enumerate_isometries(s)));
}

TEST(Orbits, DecomposeAndEscape) {
  auto d = FormSpace::dot(3);
  std::vector<GF2Mat> gens;
  for (const auto& g : enumerate_isometries(d)) gens.push_back(g.mat());
  auto rep = orbit_decompose(all_vectors(3), gens, [](const GF2Vec& x, const GF2Mat& m) { return m.apply(x); });
  EXPECT_EQ(rep.sorted_sizes(), (std::vector<std::size_t>{1, 1, 3, 3}));
  std::vector<GF2Vec> partial{GF2Vec::parse("100")};
  EXPECT_THROW(orbit_decompose(partial, gens, [](const GF2Vec& x, const GF2Mat& m) { return m.apply(x); }), DomainError);
}

TEST(QuadForm, RefinementLaw) {
  for (std::size_t g = 1; g <= 3; ++g) {
    auto s = FormSpace::symplectic(g);
    for (const auto& vals : all_vectors(2 * g)) {
      QuadForm q(s, vals);
      for (const auto& x : all_vectors(2 * g)) {
        for (const auto& y : all_vectors(2 * g)) ASSERT_EQ(q(x + y), q(x) ^ q(y) ^ s->pair(x, y));
      }
    }
  }
  EXPECT_THROW(QuadForm(FormSpace::dot(2), GF2Vec(2)), DomainError);
}

TEST(Arf, StandardValues) {
  auto s = FormSpace::symplectic(1);
  SymplecticBasis b{{GF2Vec::parse("10"), GF2Vec::parse("01")}};
  EXPECT_EQ(arf(QuadForm(s, GF2Vec::parse("11")), b), 1u);
  EXPECT_EQ(arf(QuadForm(s, GF2Vec::parse("10")), b), 0u);
  SymplecticBasis bad{{GF2Vec::parse("10"), GF2Vec::parse("10")}};
  EXPECT_THROW(arf(QuadForm(s, GF2Vec::parse("11")), bad), DomainError);
}

TEST(Arf, InvariantUnderChangeOfSymplecticBasis) {
  const auto& in = fx::input("arf_basis_invariance");
  auto s = FormSpace::symplectic(2);
  QuadForm q(s, GF2Vec::parse(in["basis_values"].get<std::string>()));
  const unsigned expected = fx::expected("arf_basis_invariance")["arf"].get<unsigned>();
  auto group = enumerate_isometries(s);
  std::mt19937_64 rng(11);
  for (int k = 0; k < in["bases"].get<int>(); ++k) {
    const auto& f = group[rng() % group.size()];
    SymplecticBasis b;
    for (std::size_t i = 0; i < 2; ++i) b.emplace_back(f.mat().col(2 * i), f.mat().col(2 * i + 1));
    EXPECT_EQ(arf(q, b), expected);
  }
}
