#pragma once

// Golden values computed by the oracles. `spincover verify --regen-fixtures`
// writes build_fixtures() to fixtures/fixtures.json; the test suite checks the
// file is reproduced byte for byte and compares the library against it.

#include <random>
#include <set>
#include <string>

#include <json.hpp>

#include "oracles.hpp"

namespace oracle {

using FJson = nlohmann::ordered_json;

inline FJson fixture(const std::string& name, FJson input, FJson expected, const std::string& oracle_id) {
  FJson f;
  f["name"] = name;
  f["input"] = std::move(input);
  f["expected"] = std::move(expected);
  f["oracle"] = oracle_id;
  return f;
}

inline Bits random_bits(std::size_t n, std::mt19937_64& rng) {
  Bits b(n);
  for (auto& x : b) x = rng() & 1;
  return b;
}

inline Mat random_mat(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Mat m;
  for (std::size_t i = 0; i < r; ++i) m.push_back(random_bits(c, rng));
  return m;
}

inline std::vector<std::vector<std::string>> partition_strings(const std::vector<std::vector<Bits>>& part) {
  std::vector<std::vector<std::string>> out;
  for (const auto& block : part) {
    std::vector<std::string> b;
    for (const auto& x : block) b.push_back(str(x));
    out.push_back(b);
  }
  return out;
}

inline std::vector<Mat> orth_group(std::size_t n) { return enumerate_matrices(n, is_orth); }
inline std::vector<Mat> symp_group(std::size_t g) { return enumerate_matrices(2 * g, is_symp); }

inline std::vector<std::vector<Bits>> a1_partition(std::size_t g, const Bits& rho) {
  auto act = [&](const Bits& psi, const Mat& f) { return act_orth(psi, f, rho); };
  return orbit_naive(all_bits(g + 1), orth_group(g + 1), act);
}

inline std::vector<std::vector<Bits>> epi_partition(std::size_t g, const Bits& r) {
  std::vector<Mat> gs;
  for (const auto& f : symp_group(g))
    if (in_gs(f, r)) gs.push_back(f);
  auto act = [&](const Bits& phi, const Mat& f) { return act_symp(phi, f, r); };
  return orbit_naive(epi_members(g), gs, act);
}

inline FJson build_fixtures() {
  std::mt19937_64 rng(0x5eedf1c5u);
  FJson all = FJson::array();

  // gf2core
  {
    Mat a = random_mat(8, 8, rng), b = random_mat(8, 8, rng);
    all.push_back(fixture("mat_mul_random_8x8", {{"a", rows(a)}, {"b", rows(b)}}, rows(mul(a, b)), "naive triple loop"));
  }
  {
    int invertible = 0;
    for (std::uint64_t k = 0; k < 16; ++k) invertible += rank(matrix_from_index(2, k)) == 2;
    all.push_back(fixture("mat_inv_all_2x2", {{"dim", 2}}, {{"invertible", invertible}}, "rank"));
  }
  {
    Mat a = random_mat(6, 9, rng);
    Bits x = random_bits(9, rng);
    Bits b = mat_apply(a, x);
    Mat ker_rows = a;
    all.push_back(fixture("solve_random_6x9", {{"a", rows(a)}, {"b", str(b)}},
                          {{"consistent", true}, {"kernel_dim", 9 - rank(ker_rows)}}, "rank and residual"));
  }

  // grouptool
  all.push_back(fixture("is_isometry_dot2_swap", {{"space", "dot2"}, {"m", {"01", "10"}}},
                        is_orth(from_rows({"01", "10"})), "direct check"));
  all.push_back(fixture("is_isometry_symp1_transvection", {{"space", "symp1"}, {"m", {"10", "11"}}},
                        is_symp(from_rows({"10", "11"})), "direct check"));
  {
    std::vector<std::string> ys;
    bool involutive = true;
    for (int k = 0; k < 100; ++k) {
      std::size_t g = 1 + rng() % 3;
      Bits y = random_bits(2 * g, rng);
      Mat t = transvection_symp(y);
      involutive = involutive && mul(t, t) == ident(2 * g);
      ys.push_back(str(y));
    }
    all.push_back(fixture("transvection_involution", {{"ys", ys}}, involutive, "composition"));
  }
  all.push_back(fixture("enumerate_dot2", {{"space", "dot2"}}, orth_group(2).size(), "oracle_enumerate_matrices"));
  all.push_back(fixture("enumerate_dot3", {{"space", "dot3"}}, orth_group(3).size(), "oracle_enumerate_matrices"));
  all.push_back(fixture("enumerate_dot4", {{"space", "dot4"}}, orth_group(4).size(), "oracle_enumerate_matrices"));
  all.push_back(fixture("enumerate_symp1", {{"space", "symp1"}}, symp_group(1).size(), "oracle_enumerate_matrices"));
  all.push_back(fixture("enumerate_symp2", {{"space", "symp2"}}, symp_group(2).size(), "oracle_enumerate_matrices"));
  {
    std::set<Mat> grp;
    for (const auto& m : orth_group(3)) grp.insert(m);
    bool perms = true;
    for (const auto& m : grp) {
      for (const auto& r : m) perms = perms && std::count(r.begin(), r.end(), 1) == 1;
    }
    all.push_back(fixture("closure_dot3_adjacent_swaps", {{"space", "dot3"}},
                          {{"order", grp.size()}, {"all_permutations", perms}}, "oracle_enumerate_matrices"));
    all.push_back(fixture("closure_symp1_transvections", {{"space", "symp1"}, {"ys", {"10", "01"}}},
                          {{"order", symp_group(1).size()}}, "oracle_enumerate_matrices"));
  }
  {
    // q(x) = sum x_i q_i + sum_{i<j} x_i x_j J_ij on Z_2^4, Arf by counting
    Bits qv = random_bits(4, rng);
    auto q = [&](const Bits& x) {
      int v = dotp(x, qv);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) v ^= x[i] & x[j] & omega(unit(4, i), unit(4, j));
      return v;
    };
    all.push_back(fixture("arf_basis_invariance", {{"g", 2}, {"basis_values", str(qv)}, {"bases", 20}},
                          {{"arf", arf_by_count(q, 2)}}, "zero count"));
  }

  // homology
  {
    FJson ranks = FJson::array();
    for (std::size_t g = 1; g <= 6; ++g) ranks.push_back(rank(pi_star(g)));
    all.push_back(fixture("pi_star_rank", {{"g_max", 6}}, ranks, "rank"));
  }
  all.push_back(fixture("tilde_pi_h_column", {{"g_max", 6}}, "h", "special coverings force it"));
  all.push_back(fixture("sigma_section_property", {{"g_max", 4}, {"samples", 100}}, true, "compose with projection"));
  {
    Bits x = bits("11");
    Bits r = bits("00");
    Bits s = x;
    s.push_back(s_h(r, x));
    all.push_back(fixture("s_eval_g1_c1_plus_c2", {{"g", 1}, {"r", "00"}, {"a", "11"}}, str(s), "quadratic law"));
  }

  // action-orth
  for (const std::string rho : {"00", "10"}) {
    all.push_back(fixture("lift_swap_rho" + rho, {{"g", 1}, {"f", {"01", "10"}}, {"rho", rho}},
                          str(lift_row(from_rows({"01", "10"}), bits(rho))), "formula evaluation"));
  }
  for (std::size_t g : {1, 2}) {
    auto grp = orth_group(g + 1);
    std::set<Mat> lifts;
    bool hom = true;
    Bits rho(g + 1, 0);
    auto full = [&](const Mat& f) {
      Mat m = zeros(g + 2, g + 2);
      for (std::size_t i = 0; i <= g; ++i)
        for (std::size_t j = 0; j <= g; ++j) m[i][j] = f[i][j];
      Bits d = lift_row(f, rho);
      for (std::size_t j = 0; j <= g; ++j) m[g + 1][j] = d[j];
      m[g + 1][g + 1] = 1;
      return m;
    };
    for (const auto& a : grp) {
      lifts.insert(full(a));
      for (const auto& b : grp) hom = hom && full(mul(a, b)) == mul(full(a), full(b));
    }
    all.push_back(fixture("jn_g" + std::to_string(g), {{"g", g}},
                          {{"homomorphism", hom}, {"injective", lifts.size() == grp.size()}, {"order", grp.size()}}, "exhaustive"));
  }
  all.push_back(fixture("act_right_action_law", {{"g_max", 4}, {"samples", 50}}, true, "matrix associativity"));
  {
    Mat swap = from_rows({"01", "10"});
    // theta o T = theta' as row vector times matrix
    Bits th = bits("10");
    Bits img(2);
    for (std::size_t j = 0; j < 2; ++j) img[j] = dotp(th, col(swap, j));
    all.push_back(fixture("witness_g1_swap", {{"theta", "10"}, {"theta2", "01"}},
                          {{"matrix", rows(swap)}, {"maps", str(img) == "01"}}, "only nontrivial element"));
  }
  all.push_back(fixture("witness_random_pairs", {{"g_max", 5}, {"samples", 200}}, true, "witness verification"));
  for (std::size_t g : {1, 2, 3}) {
    auto part = a1_partition(g, Bits(g + 1, 0));
    all.push_back(fixture("classify_A1_g" + std::to_string(g), {{"g", g}, {"rho", str(Bits(g + 1, 0))}},
                          {{"sizes", block_sizes(part)}, {"partition", partition_strings(part)}}, "oracle_orbit_naive"));
  }
  for (std::size_t g : {1, 2}) {
    Bits rho(g + 1, 0);
    auto part = a1_partition(g, rho);
    FJson sums = FJson::array();
    for (const auto& b : part)
      if (b.size() == 1) sums.push_back(std::accumulate(b[0].begin(), b[0].end(), 0) % 2);
    all.push_back(fixture("lemma01_g" + std::to_string(g), {{"g", g}, {"rho", str(rho)}}, {{"fixed_point_sums", sums}},
                          "oracle_orbit_naive"));
  }
  {
    bool fixes = true;
    for (const auto& m : orth_group(3)) fixes = fixes && mat_apply(m, bits("111")) == bits("111");
    all.push_back(fixture("uti_dim3", {{"dim", 3}}, {{"maps", orth_group(3).size()}, {"all_fix_ones", fixes}}, "exhaustive"));
  }
  {
    std::vector<Bits> h0, h1;
    for (const auto& x : all_bits(3)) {
      if (x == bits("000") || x == bits("111")) continue;
      (dotp(x, bits("111")) ? h1 : h0).push_back(x);
    }
    auto act = [](const Bits& x, const Mat& m) { return mat_apply(m, x); };
    auto p0 = orbit_naive(h0, orth_group(3), act);
    auto p1 = orbit_naive(h1, orth_group(3), act);
    all.push_back(fixture("trans_g3", {{"dim", 3}},
                          {{"H0", partition_strings(p0)}, {"H1", partition_strings(p1)}}, "oracle_orbit_naive"));
  }
  for (const std::string alpha : {"100", "110"}) {
    int order = 0;
    for (const auto& m : orth_group(3)) {
      Bits img(3);
      for (std::size_t j = 0; j < 3; ++j) img[j] = dotp(bits(alpha), col(m, j));
      order += img == bits(alpha);
    }
    all.push_back(fixture("stabilizer_g2_" + alpha, {{"g", 2}, {"alpha", alpha}}, {{"order", order}},
                          "oracle_enumerate_matrices"));
  }

  // action-symp
  {
    Mat t = from_rows({"11", "01"});
    Bits r = bits("00");
    // Delta_j: h-coefficient of f_s(cbar_j) = s(f c_j) + r_j h
    Bits delta(2);
    for (std::size_t j = 0; j < 2; ++j) delta[j] = s_h(r, col(t, j)) ^ r[j];
    all.push_back(fixture("f_s_g1_T_c1", {{"f", rows(t)}, {"r", "00"}}, str(delta), "defining relations"));
  }
  all.push_back(fixture("f_s_relations_all_x", {{"g_max", 3}}, true, "exhaustive x"));
  all.push_back(fixture("in_Gs_g1_T_eprime1", {{"f", rows(transvection_symp(bits("11")))}, {"r", "00"}},
                        in_gs(transvection_symp(bits("11")), bits("00")), "direct image test"));
  {
    FJson per_r = FJson::object();
    for (const auto& r : all_bits(2)) per_r[str(r)] = in_gs(transvection_symp(bits("10")), r);
    all.push_back(fixture("in_Gs_g1_T_c1", {{"f", rows(transvection_symp(bits("10")))}}, per_r, "direct image test"));
  }
  all.push_back(fixture("in_Kt_g2_T_eprime_sum", {{"y", "1111"}, {"r", "0000"}},
                        in_kt(transvection_symp(bits("1111")), bits("0000")), "pairing check"));
  for (const std::string r : {"00", "10"}) {
    FJson ys = FJson::array();
    Bits y = bits("11");
    if (!omega(y, t_vector(bits(r)))) ys.push_back(str(y));
    all.push_back(fixture("kt_generators_g1_r" + r, {{"g", 1}, {"r", r}}, ys, "pairing oracle"));
  }
  {
    FJson counts = FJson::object();
    for (const auto& r : all_bits(4)) {
      int c = 0;
      for (const auto& f : symp_group(2)) c += in_kt(f, r);
      counts[str(r)] = c;
    }
    all.push_back(fixture("factorize_g2_exhaustive", {{"g", 2}}, {{"kt_order", counts}}, "oracle_enumerate_matrices"));
  }
  for (const std::string phi : {"00", "11"}) {
    Bits p = bits(phi), r = bits("00");
    int arf = arf_by_count([&](const Bits& x) { return phi_s(p, r, x); }, 1);
    all.push_back(fixture("arf_g1_phi" + phi, {{"g", 1}, {"r", "00"}, {"phi", phi}}, {arf, arf}, "zero count"));
  }
  for (std::size_t g : {1, 2}) {
    FJson per_r = FJson::object();
    for (const auto& r : all_bits(2 * g)) {
      auto part = epi_partition(g, r);
      FJson arfs = FJson::array();
      for (const auto& b : part) arfs.push_back(arf_by_count([&](const Bits& x) { return phi_s(b[0], r, x); }, g));
      per_r[str(r)] = {{"sizes", block_sizes(part)}, {"partition", partition_strings(part)}, {"arf", arfs}};
    }
    all.push_back(fixture("classify_epi_g" + std::to_string(g), {{"g", g}, {"mode", "gs"}}, per_r, "oracle_orbit_naive"));
  }
  {
    // (T_Y)_s on ebar'_i: s(T_Y e'_i) + beta_i h, Y in ker pi_*
    bool fixes = true;
    for (std::size_t g : {1, 2, 3}) {
      for (const auto& r : all_bits(2 * g)) {
        for (const auto& yb : all_bits(g)) {
          Bits y(2 * g, 0);
          for (std::size_t i = 0; i < g; ++i) y[2 * i] = y[2 * i + 1] = yb[i];
          Mat t = transvection_symp(y);
          for (std::size_t i = 0; i < g; ++i) {
            Bits img = mat_apply(t, e_prime(g, i));
            int beta = r[2 * i] ^ r[2 * i + 1] ^ 1;
            fixes = fixes && img == e_prime(g, i) && (s_h(r, img) ^ beta) == 0;
          }
        }
      }
    }
    all.push_back(fixture("T_Y_s_fixes_ebar_prime", {{"g_max", 3}}, fixes, "direct evaluation"));
  }
  all.push_back(fixture("cor_all_ones_shift", {{"g", 2}, {"delta", "111"}}, {{"V", "0000"}}, "identification psi + 1"));
  {
    // same E_pi orbit under the full G_s filter, for every psi pair and r
    FJson per_r = FJson::object();
    for (const auto& r : all_bits(4)) {
      auto part = epi_partition(2, r);
      int same = 0;
      for (const auto& psi : all_bits(3))
        for (const auto& psi2 : all_bits(3)) {
          auto phi_of = [](const Bits& p) {
            Bits f(4);
            for (std::size_t i = 0; i < 2; ++i) f[2 * i] = f[2 * i + 1] = p[0] ^ p[i + 1];
            return f;
          };
          for (const auto& b : part)
            if (std::count(b.begin(), b.end(), phi_of(psi)) && std::count(b.begin(), b.end(), phi_of(psi2))) ++same;
        }
      per_r[str(r)] = same;
    }
    all.push_back(fixture("cor_pairs_g2", {{"g", 2}}, {{"same_orbit_pairs", per_r}}, "oracle_orbit_naive"));
  }

  // liftweak
  all.push_back(fixture("project_g2_T_eprime1", {{"g", 2}, {"y", "1100"}}, {{"projections", {rows(ident(3))}}},
                        "kernel vector"));
  all.push_back(fixture("roundtrip_lift_project", {{"g_max", 4}}, true, "exhaustive roundtrip"));
  {
    // g = 1, F = swap: pi_* f = F pi_* with f = I
    Mat f = ident(2), big_f = from_rows({"01", "10"});
    bool commutes = mul(big_f, pi_star(1)) == mul(pi_star(1), f);
    all.push_back(fixture("lift_g1_swap", {{"g", 1}, {"F", rows(big_f)}}, {{"f", rows(f)}, {"commutes", commutes}},
                          "commuting square"));
  }
  all.push_back(fixture("lift_all_g_le_4", {{"g_max", 4}}, true, "exhaustive"));
  for (std::size_t g : {1, 2}) {
    Mat pi = pi_star(g);
    all.push_back(fixture("is_lift_pair_T_eprime1_g" + std::to_string(g), {{"g", g}},
                          mul(ident(g + 1), pi) == mul(pi, transvection_symp(e_prime(g, 0))), "kernel vector"));
    all.push_back(fixture("is_lift_pair_T_e1_g" + std::to_string(g), {{"g", g}},
                          mul(ident(g + 1), pi) == mul(pi, transvection_symp(unit(2 * g, 0))), "moves pi_*"));
  }
  for (std::size_t n : {3, 4}) {
    // identity on H = E^perp, v = v_0: solutions of v'.x = v.x on H, those outside H
    Bits e(n, 1), v = unit(n, 0);
    int solutions = 0, admissible = 0;
    for (const auto& w : all_bits(n)) {
      bool ok = true;
      for (const auto& x : all_bits(n))
        if (!dotp(x, e)) ok = ok && dotp(w, x) == dotp(v, x);
      if (ok) {
        ++solutions;
        admissible += dotp(w, e);
      }
    }
    all.push_back(fixture("gene_dim" + std::to_string(n), {{"dim", n}, {"v", str(v)}},
                          {{"solutions", solutions}, {"admissible", admissible}}, "solve and count"));
  }
  all.push_back(fixture("weak_class_equals_epsilon", {{"g_max", 5}}, true, "cross-module identity"));
  all.push_back(fixture("weak_witness_g1", {{"psi", "10"}, {"psi2", "01"}}, {{"delta", str(add(bits("10"), bits("01")))}},
                        "direct verification"));

  // cli
  all.push_back(fixture("verify_all_max_g3", {{"args", "verify --all --max-g 3"}}, {{"exit", 0}}, "the suite"));
  all.push_back(fixture("classify_o_g2_json", {{"args", "classify-o --g 2 --rho 000 --format json"}},
                        {{"sizes", block_sizes(a1_partition(2, bits("000")))}}, "oracle_orbit_naive"));
  return all;
}

}  // namespace oracle
