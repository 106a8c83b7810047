#include <map>
#include <random>

#include <gtest/gtest.h>

#include "fixtures_access.hpp"
#include "spincover/action_symp.hpp"
#include "spincover/verify.hpp"

using namespace spincover;
namespace fx = testing_fixtures;

TEST(FS, DeltaRowForTc1) {
  const auto& in = fx::input("f_s_g1_T_c1");
  GF2Mat f = fx::matrix(in["f"]);
  GF2Mat fs = f_s_raw(f, GF2Vec::parse(in["r"].get<std::string>()));
  EXPECT_EQ(fs.row(2).slice(0, 2).to_string(), fx::expected("f_s_g1_T_c1").get<std::string>());
  EXPECT_EQ(fs.block(0, 0, 2, 2), f);
  EXPECT_EQ(fs.row(2)[2], 1u);
}

TEST(FS, IntertwinesTheSection) {
  ASSERT_TRUE(fx::expected("f_s_relations_all_x").get<bool>());
  std::mt19937_64 rng(29);
  for (std::size_t g = 1; g <= 3; ++g) {
    auto sp = FormSpace::symplectic(g);
    for (int k = 0; k < 30; ++k) {
      auto params = SectionParams::with_r(g, random_vector(2 * g, rng));
      auto f = Isometry::make(sp, random_symplectic(g, rng));
      GF2Mat fs = f_s_matrix(f, params).mat;
      for (const auto& x : all_vectors(2 * g)) ASSERT_EQ(fs.apply(s_eval(params, x)), s_eval(params, f(x)));
    }
  }
}

TEST(FS, RejectsNonSymplectic) {
  // swapping c_1 and c_3 is orthogonal but breaks the pairing of c_1 with c_2
  auto dot = FormSpace::dot(4);
  EXPECT_THROW(f_s_matrix(Isometry::make(dot, GF2Mat::parse("0010;0100;1000;0001")), SectionParams::zero(2)), DomainError);
}

TEST(Gs, MembershipFixtures) {
  auto sp = FormSpace::symplectic(1);
  auto te = Isometry::make(sp, fx::matrix(fx::input("in_Gs_g1_T_eprime1")["f"]));
  EXPECT_EQ(in_Gs(te, SectionParams::zero(1)), fx::expected("in_Gs_g1_T_eprime1").get<bool>());
  auto tc = Isometry::make(sp, fx::matrix(fx::input("in_Gs_g1_T_c1")["f"]));
  for (const auto& [r, want] : fx::expected("in_Gs_g1_T_c1").items()) {
    EXPECT_EQ(in_Gs(tc, SectionParams::with_r(1, GF2Vec::parse(r))), want.get<bool>()) << r;
  }
}

TEST(Gs, MembershipEqualsPreservingEpi) {
  VerifyOptions opts;
  for (std::size_t g : {1, 2}) {
    Rng rng(g);
    auto rep = checks::gs(g, opts, rng);
    EXPECT_TRUE(rep.passed) << rep.failure;
  }
}

TEST(Kt, MembershipAndGenerators) {
  auto sp = FormSpace::symplectic(2);
  auto t = transvection(sp, GF2Vec::parse(fx::input("in_Kt_g2_T_eprime_sum")["y"].get<std::string>()));
  EXPECT_EQ(in_Kt(t, SectionParams::zero(2)), fx::expected("in_Kt_g2_T_eprime_sum").get<bool>());
  auto sp1 = FormSpace::symplectic(1);
  for (const std::string r : {"00", "10"}) {
    std::vector<std::string> ys;
    for (const auto& g : kt_generators(1, SectionParams::with_r(1, GF2Vec::parse(r)))) {
      // a transvection T_y has image of (T_y - I) spanned by y
      GF2Mat moved = g.mat() + GF2Mat::identity(2);
      for (const auto& y : all_vectors(2)) {
        if (!y.is_zero() && moved == transvection_matrix(*sp1, y) + GF2Mat::identity(2)) ys.push_back(y.to_string());
      }
    }
    EXPECT_EQ(ys, fx::expected("kt_generators_g1_r" + r).get<std::vector<std::string>>());
  }
}

TEST(Kt, OrdersMatchOracleForEveryR) {
  auto sp = FormSpace::symplectic(2);
  auto group = enumerate_isometries(sp);
  for (const auto& [r, want] : fx::expected("factorize_g2_exhaustive")["kt_order"].items()) {
    auto params = SectionParams::with_r(2, GF2Vec::parse(r));
    std::size_t count = 0;
    for (const auto& f : group) count += in_Kt(f, params);
    EXPECT_EQ(count, want.get<std::size_t>()) << r;
    EXPECT_TRUE(kt_in_gs_check(2, params).passed) << r;
  }
}

TEST(Kt, FactorizationReplays) {
  VerifyOptions opts;
  for (std::size_t g = 1; g <= 4; ++g) {
    Rng rng(100 + g);
    auto rep = checks::genkt(g, opts, rng);
    EXPECT_TRUE(rep.passed) << rep.failure;
  }
}

TEST(Kt, FactorizationRejectsNonSymplectic) {
  EXPECT_THROW(factorize_transvections(Isometry::make(FormSpace::dot(2), GF2Mat::parse("01;10")), {}), DomainError);
}

TEST(Arf, SingleGenusFixtures) {
  for (const std::string phi : {"00", "11"}) {
    auto cov = SpecialCovering::on_o(1, GF2Vec::parse(phi));
    auto [basis, closed] = arf_closed_form(cov, SectionParams::zero(1));
    auto want = fx::expected("arf_g1_phi" + phi).get<std::vector<unsigned>>();
    EXPECT_EQ(basis, want[0]);
    EXPECT_EQ(closed, want[1]);
  }
}

TEST(Arf, ClosedFormAgreesEverywhere) {
  for (std::size_t g = 1; g <= 3; ++g) {
    for (const auto& r : all_vectors(2 * g)) {
      auto params = SectionParams::with_r(g, r);
      for (const auto& m : epi_set(g)) {
        auto [basis, closed] = arf_closed_form(m.phi, params);
        ASSERT_EQ(basis, closed) << "g=" << g << " r=" << r.to_string() << " phi=" << m.phi.values().to_string();
      }
    }
  }
}

TEST(ClassifyEpi, MatchesOracleForEveryR) {
  for (std::size_t g : {1, 2}) {
    for (const auto& [r, want] : fx::expected("classify_epi_g" + std::to_string(g)).items()) {
      auto params = SectionParams::with_r(g, GF2Vec::parse(r));
      auto c = classify_epi(g, params, EpiMode::Both);
      ASSERT_TRUE(c.partitions_agree.has_value());
      EXPECT_TRUE(*c.partitions_agree) << r;
      auto sizes = want["sizes"].get<std::vector<std::size_t>>();
      std::sort(sizes.begin(), sizes.end());
      EXPECT_EQ(c.report.sorted_sizes(), sizes) << r;
      EXPECT_EQ(c.report.sorted_sizes(), expected_epi_sizes(g, params)) << r;

      // oracle blocks are on the c-bar values; library points carry the h bit
      std::map<std::string, unsigned> arf_by_point;
      const auto& blocks = want["partition"];
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (const auto& p : blocks[b]) arf_by_point[p.get<std::string>()] = want["arf"][b].get<unsigned>();
      }
      for (const auto& m : epi_set(g)) {
        std::string key = m.phi.base_values().to_string();
        ASSERT_TRUE(arf_by_point.count(key)) << key;
        EXPECT_EQ(arf_of(m.phi, params), arf_by_point[key]) << r << " " << key;
      }
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        GF2Vec first = GF2Vec::parse(blocks[b][0].get<std::string>()).concat(GF2Vec(1, 1));
        for (const auto& p : blocks[b]) {
          EXPECT_TRUE(c.report.same_orbit(first, GF2Vec::parse(p.get<std::string>()).concat(GF2Vec(1, 1))));
        }
      }
    }
  }
}

TEST(ClassifyEpi, LargerGenusSizes) {
  std::mt19937_64 rng(31);
  for (std::size_t g = 3; g <= 5; ++g) {
    for (int k = 0; k < 4; ++k) {
      auto params = SectionParams::with_r(g, random_vector(2 * g, rng));
      EXPECT_EQ(classify_epi(g, params, EpiMode::Kt).report.sorted_sizes(), expected_epi_sizes(g, params));
    }
    GF2Vec exc(2 * g);
    for (std::size_t i = 0; i < g; ++i) exc.set(2 * i, 1);
    auto params = SectionParams::with_r(g, exc);
    EXPECT_EQ(classify_epi(g, params, EpiMode::Kt).report.sorted_sizes(), std::vector<std::size_t>{std::size_t{1} << g});
  }
  EXPECT_THROW(gs_lifts(4, SectionParams::zero(4)), GuardError);
}

TEST(KernelTransvections, FixEbarPrime) {
  ASSERT_TRUE(fx::expected("T_Y_s_fixes_ebar_prime").get<bool>());
  for (std::size_t g = 1; g <= 3; ++g) {
    OSurface o{g};
    TotalO tot{g};
    auto sp = o.space();
    for (const auto& r : all_vectors(2 * g)) {
      auto params = SectionParams::with_r(g, r);
      for (const auto& y : span_elements(o.ker_pi_basis(), 2 * g)) {
        GF2Mat fs = f_s_matrix(transvection(sp, y), params).mat;
        for (const auto& k : tot.ker_tilde_pi_basis()) ASSERT_EQ(fs.apply(k), k);
      }
    }
  }
}

TEST(Witness, AllOnesShiftNeedsNoTransvection) {
  auto psi = SpecialCovering::on_n(2, GF2Vec::parse("010"));
  auto psi2 = SpecialCovering::on_n(2, GF2Vec::parse("010") + GF2Vec::parse(fx::input("cor_all_ones_shift")["delta"].get<std::string>()));
  for (const auto& r : all_vectors(4)) {
    auto w = cor_witness(psi, psi2, SectionParams::with_r(2, r));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->mat(), transvection_matrix(*FormSpace::symplectic(2), GF2Vec::parse(fx::expected("cor_all_ones_shift")["V"].get<std::string>())));
  }
}

TEST(Witness, PairCountsMatchOracle) {
  for (const auto& [r, want] : fx::expected("cor_pairs_g2")["same_orbit_pairs"].items()) {
    auto params = SectionParams::with_r(2, GF2Vec::parse(r));
    std::size_t count = 0;
    for (const auto& psi : specials(2)) {
      for (const auto& psi2 : specials(2)) count += cor_witness(psi, psi2, params).has_value();
    }
    EXPECT_EQ(count, want.get<std::size_t>()) << r;
  }
  VerifyOptions opts;
  Rng rng(3);
  EXPECT_TRUE(checks::cor(2, opts, rng).passed);
}
