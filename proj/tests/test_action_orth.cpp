#include <random>

#include <gtest/gtest.h>

#include "fixtures_access.hpp"
#include "spincover/action_orth.hpp"
#include "spincover/verify.hpp"

using namespace spincover;
namespace fx = testing_fixtures;

namespace {

std::string fact_of(const CheckReport& rep, const std::string& key) {
  for (const auto& [k, v] : rep.facts) {
    if (k == key) return v;
  }
  return "<missing " + key + ">";
}

std::vector<std::vector<std::string>> partition_text(const OrbitReport& rep) {
  std::vector<std::vector<std::string>> out;
  for (const auto& block : rep.partition()) {
    std::vector<std::string> b;
    // drop the fiber coordinate, always 1
    for (const auto& v : block) b.push_back(v.slice(0, v.size() - 1).to_string());
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::string>> fixture_partition(const fx::FJson& j) {
  auto out = j.get<std::vector<std::vector<std::string>>>();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Lift, SwapRowMatchesFixture) {
  for (const std::string rho : {"00", "10"}) {
    GF2Mat m = lift_matrix(GF2Mat::parse("01;10"), GF2Vec::parse(rho));
    EXPECT_EQ(m.row(2).slice(0, 2).to_string(), fx::expected("lift_swap_rho" + rho).get<std::string>());
    EXPECT_EQ(m.block(0, 0, 2, 2), GF2Mat::parse("01;10"));
  }
}

TEST(Lift, RejectsNonOrthogonal) {
  auto sym = FormSpace::symplectic(1);
  auto t = Isometry::make(sym, GF2Mat::parse("11;01"));
  EXPECT_THROW(lift_F_sigma(t, SectionParams::zero(1)), DomainError);
}

TEST(Lift, MonomorphismForEveryRho) {
  for (std::size_t g : {1, 2}) {
    const auto& e = fx::expected("jn_g" + std::to_string(g));
    ASSERT_TRUE(e["homomorphism"].get<bool>());
    ASSERT_TRUE(e["injective"].get<bool>());
    for (const auto& rho : all_vectors(g + 1)) {
      auto rep = jn_check(g, SectionParams::with_rho(g, rho));
      EXPECT_TRUE(rep.passed) << rep.failure;
      EXPECT_EQ(fact_of(rep, "group_order"), std::to_string(e["order"].get<std::size_t>()));
    }
  }
  EXPECT_TRUE(jn_check(3, SectionParams::with_rho(3, GF2Vec::parse("1011"))).passed);
}

TEST(Action, RightActionLaw) {
  std::mt19937_64 rng(17);
  for (std::size_t g = 1; g <= 4; ++g) {
    auto space = FormSpace::dot(g + 1);
    for (int k = 0; k < 50; ++k) {
      SectionParams params = SectionParams::with_rho(g, random_vector(g + 1, rng));
      auto f = Isometry::make(space, random_orthogonal(g + 1, rng));
      auto h = Isometry::make(space, random_orthogonal(g + 1, rng));
      auto psi = SpecialCovering::on_n(g, random_vector(g + 1, rng));
      // psi . (F H) = (psi . F) . H
      EXPECT_EQ(act_A1(psi, f * h, params), act_A1(act_A1(psi, f, params), h, params));
    }
  }
}

TEST(Witness, SwapForSingleGenus) {
  const auto& e = fx::expected("witness_g1_swap");
  auto w = equivalence_witness(GF2Vec::parse("10"), GF2Vec::parse("01"));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->mat(), fx::matrix(e["matrix"]));
  EXPECT_EQ(w->mat().pullback(GF2Vec::parse("10")).to_string() == "01", e["maps"].get<bool>());
}

TEST(Witness, RandomPairsInSameClass) {
  std::mt19937_64 rng(23);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int k = 0; k < 200; ++k) {
      GF2Vec a = random_vector(n, rng);
      GF2Vec b = random_orthogonal(n, rng).pullback(a);
      auto w = equivalence_witness(a, b);
      ASSERT_TRUE(w.has_value()) << a.to_string() << " " << b.to_string();
      EXPECT_TRUE(is_isometry(*FormSpace::dot(n), w->mat()));
      EXPECT_EQ(w->mat().pullback(a), b);
    }
  }
  EXPECT_FALSE(equivalence_witness(GF2Vec::parse("000"), GF2Vec::parse("111")).has_value());
  EXPECT_FALSE(equivalence_witness(GF2Vec::parse("100"), GF2Vec::parse("110")).has_value());
}

TEST(ClassifyA1, PartitionsMatchOracle) {
  for (std::size_t g : {1, 2, 3}) {
    const auto& e = fx::expected("classify_A1_g" + std::to_string(g));
    auto rep = classify_A1(g, SectionParams::zero(g));
    EXPECT_EQ(rep.sorted_sizes(), e["sizes"].get<std::vector<std::size_t>>());
    EXPECT_EQ(partition_text(rep), fixture_partition(e["partition"]));
  }
}

TEST(ClassifyA1, SizesAcrossGenusAndRho) {
  for (std::size_t g = 1; g <= 5; ++g) {
    for (const auto& rho : g <= 3 ? all_vectors(g + 1) : std::vector<GF2Vec>{GF2Vec(g + 1), GF2Vec::ones(g + 1)}) {
      auto rep = classify_A1(g, SectionParams::with_rho(g, rho));
      EXPECT_EQ(rep.sorted_sizes(), expected_A1_sizes(g)) << "g=" << g << " rho=" << rho.to_string();
    }
  }
  EXPECT_EQ(expected_A1_sizes(4), (std::vector<std::size_t>{1, 1, 15, 15}));
  EXPECT_EQ(expected_A1_sizes(5), (std::vector<std::size_t>{1, 1, 30, 32}));
}

TEST(ClassifyA1, EnginesAgree) {
  for (std::size_t g = 1; g <= 4; ++g) {
    SectionParams params = SectionParams::with_rho(g, GF2Vec::unit(g + 1, 0));
    auto full = classify_A1(g, params, OrbitEngine::FullGroup);
    auto gens = classify_A1(g, params, OrbitEngine::Generators);
    EXPECT_EQ(partition_text(full), partition_text(gens));
  }
}

TEST(ClassifyA1, FixedPointsHaveExpectedParity) {
  for (std::size_t g : {1, 2}) {
    auto rep = classify_A1(g, SectionParams::zero(g));
    std::vector<unsigned> sums;
    for (const auto& o : rep.orbits) {
      if (o.size() == 1) sums.push_back(o.smallest().slice(0, g + 1).sum());
    }
    std::sort(sums.begin(), sums.end());
    EXPECT_EQ(sums, fx::expected("lemma01_g" + std::to_string(g))["fixed_point_sums"].get<std::vector<unsigned>>());
  }
  for (std::size_t g = 1; g <= 4; ++g) EXPECT_TRUE(lemma01_check(g).passed);
}

TEST(Classes, FormClassification) {
  EXPECT_EQ(classify_form(GF2Vec::parse("000")), FormClass::Theta0);
  EXPECT_EQ(classify_form(GF2Vec::parse("111")), FormClass::Theta1);
  EXPECT_EQ(classify_form(GF2Vec::parse("110")), FormClass::Orb0);
  EXPECT_EQ(classify_form(GF2Vec::parse("100")), FormClass::Orb1);
}

TEST(Lemmas, OnesFixedAndTransitivity) {
  const auto& u = fx::expected("uti_dim3");
  ASSERT_TRUE(u["all_fix_ones"].get<bool>());
  auto rep = uti_check(2);
  EXPECT_TRUE(rep.passed) << rep.failure;
  EXPECT_EQ(fact_of(rep, "orthogonal_maps_checked"), std::to_string(u["maps"].get<std::size_t>()));
  const auto& t = fx::expected("trans_g3");
  EXPECT_EQ(t["H0"].size(), 1u);
  EXPECT_EQ(t["H1"].size(), 1u);
  for (std::size_t g = 2; g <= 5; ++g) EXPECT_TRUE(lemma_checks(g).passed) << g;
}

TEST(Stabilizer, SmallCasesMatchOracle) {
  auto s100 = stabilizer_check(2, AlphaRep::Alpha1);
  EXPECT_EQ(s100.stabilizer_order, fx::expected("stabilizer_g2_100")["order"].get<std::size_t>());
  auto s110 = stabilizer_check(2, AlphaRep::Alpha0);
  EXPECT_EQ(s110.stabilizer_order, fx::expected("stabilizer_g2_110")["order"].get<std::size_t>());
}

TEST(Stabilizer, GeneratorsSpanStabilizer) {
  for (std::size_t g = 1; g <= 5; ++g) {
    auto rep = stabilizer_check(g, AlphaRep::Alpha1);
    EXPECT_TRUE(rep.check.passed) << rep.check.failure;
    EXPECT_EQ(rep.closure_order, rep.stabilizer_order);
  }
  for (std::size_t g = 1; g <= 4; ++g) {
    auto rep = stabilizer_check(g, AlphaRep::Alpha0);
    EXPECT_TRUE(rep.check.passed) << rep.check.failure;
    EXPECT_EQ(rep.closure_order, rep.stabilizer_order);
  }
  // without the extra transvection the permutations alone fall short
  auto a1 = stabilizer_check(4, AlphaRep::Alpha1);
  EXPECT_EQ(a1.stabilizer_order, 48u);
  EXPECT_EQ(a1.closure_without_transvection, 24u);
  auto a0 = stabilizer_check(3, AlphaRep::Alpha0);
  EXPECT_EQ(a0.stabilizer_order, 8u);
  EXPECT_EQ(a0.closure_without_transvection, 4u);
}
