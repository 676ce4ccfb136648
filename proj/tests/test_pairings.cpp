#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ihpair/pairings.hpp"

using namespace ihpair;

namespace {
PairingSpec spec_r2(int g, int m, int n, std::set<std::pair<int, int>> b = {}, int z = 0) {
  PairingSpec s;
  s.r = 2;
  s.g = g;
  s.m = z;
  if (m) s.a[2] = m;
  if (n) s.f[2] = n;
  s.b = std::move(b);
  return s;
}
}  // namespace

TEST_CASE("degree bookkeeping") {
  // ih r=2 g=2: f^3 has total degree 6 = 2 dim
  CHECK(degree_check(Target::IH, spec_r2(2, 0, 3)));
  CHECK_FALSE(degree_check(Target::IH, spec_r2(2, 0, 4)));
  // p0 r=2 g=2: dim 4, z f^3 works
  CHECK(degree_check(Target::P0, spec_r2(2, 0, 3, {}, 1)));
  CHECK_FALSE(degree_check(Target::P0, spec_r2(2, 0, 3)));
  // z-power is rejected outside P0
  PairingSpec bad = spec_r2(2, 0, 3, {}, 1);
  CHECK_FALSE(degree_check(Target::IH, bad));
  CHECK(target_dimension(Target::M1, 3, 2) == 8);
  CHECK(target_dimension(Target::P0, 3, 2) == 10);
}

TEST_CASE("rank-2 spot oracle values") {
  CHECK(ih_pairing(spec_r2(2, 0, 3)).value == 1);
  CHECK(ih_pairing(spec_r2(2, 1, 1)).value == rat(-1, 2));
  // <gamma> = <b1 b3> + <b2 b4> = 2
  CHECK(ih_rank2_with_gamma(2, 0, 0, 1) == 2);
  CHECK(ih_pairing(spec_r2(2, 0, 0, {{2, 1}, {2, 3}})).value == 1);
}

TEST_CASE("p0 value z f^3") {
  PairingResult res = integrate_p0(spec_r2(2, 0, 3, {}, 1));
  CHECK(res.value == -1);
  CHECK(res.degree_ok);
}

TEST_CASE("m1 generic and one-variable paths agree") {
  PairingSpec s = spec_r2(2, 0, 3);
  Rat generic = integrate_m1(s).value;
  CHECK(generic == rank2_reference(Target::M1, s, 1));
  CHECK(generic == rank2_reference(Target::M1, s, 2));
  CHECK(generic == rat(1, 2));
}

TEST_CASE("reference path covers all targets") {
  for (int g = 2; g <= 3; ++g) {
    PairingSpec s = spec_r2(g, 0, 3 * (g - 1));
    CHECK(ih_pairing(s).value == rank2_reference(Target::IH, s));
    PairingSpec sp = spec_r2(g, 0, 3 * (g - 1), {}, 1);
    CHECK(integrate_p0(sp).value == rank2_reference(Target::P0, sp));
    CHECK(integrate_m1(s).value == rank2_reference(Target::M1, s));
  }
  // with a-classes and b-classes
  PairingSpec s = spec_r2(2, 1, 1);
  CHECK(ih_pairing(s).value == rank2_reference(Target::IH, s));
  PairingSpec sb = spec_r2(2, 0, 0, {{2, 1}, {2, 3}});
  CHECK(ih_pairing(sb).value == rank2_reference(Target::IH, sb));
}

TEST_CASE("rank2 closed form examples") {
  CHECK(rank2_residue_form(2, 0, 3, 0) == 1);
  CHECK(rank2_residue_form(2, 1, 1, 0) == rat(-1, 2));
  CHECK(rank2_residue_form(2, 0, 0, 1) == 2);
  CHECK_THROWS(rank2_residue_form(2, 0, 2, 0));
}

TEST_CASE("kappa and the kiem pairing") {
  CHECK(kappa(0) == 1);
  CHECK(kappa(1) == rat(1, 3));
  CHECK(kappa(2) == rat(-1, 45));
  CHECK(kiem_pairing(2, 0, 3) == 8);
  // (-1)^3 6! 2^4 kappa_2 = -720*16*(-1/45)
  CHECK(kiem_pairing(3, 0, 6) == 256);
  CHECK(kiem_pairing(3, 1, 4) == -128);
  // consistency with the residue form
  CHECK(kiem_pairing(3, 0, 6) == rat_pow(Rat(2), 6) * rank2_residue_form(3, 0, 6, 0));
  CHECK_THROWS(kiem_pairing(3, 2, 0));
}

TEST_CASE("gamma expansion") {
  auto e0 = gamma_expand(0, 2);
  REQUIRE(e0.size() == 1);
  CHECK(e0[0].first == 1);
  CHECK(e0[0].second.empty());
  auto e1 = gamma_expand(1, 2);
  REQUIRE(e1.size() == 2);
  CHECK(e1[0].second == std::set<std::pair<int, int>>{{2, 1}, {2, 3}});
  CHECK(e1[1].second == std::set<std::pair<int, int>>{{2, 2}, {2, 4}});
  CHECK(gamma_expand(3, 2).empty());
  // p = 2 picks up the pair-regrouping parity
  auto e2 = gamma_expand(2, 3);
  CHECK(e2.size() == 3);
  for (const auto& [c, t] : e2) CHECK(c == -2);
}

TEST_CASE("fundamental class normalization") {
  CHECK(fundamental_class_check(2) == 1);
  CHECK(fundamental_class_check(4) == 1);
}

TEST_CASE("m1 odd classes against the one-variable path") {
  PairingSpec s = spec_r2(2, 0, 0, {{2, 1}, {2, 3}});
  CHECK(integrate_m1(s).value == -1);
  CHECK(rank2_reference(Target::M1, s) == -1);
  PairingSpec t = spec_r2(3, 0, 3, {{2, 2}, {2, 5}});
  CHECK(integrate_m1(t).value == rank2_reference(Target::M1, t));
}

TEST_CASE("ih equals p0 against z^{r-1} at rank 3") {
  PairingSpec si;
  si.r = 3;
  si.g = 2;
  si.f[2] = 2;
  si.f[3] = 3;
  PairingSpec sp = si;
  sp.m = 2;
  Rat vi = ih_pairing(si).value;
  CHECK(vi == rat(4, 27));
  CHECK(vi == integrate_p0(sp).value);
}

TEST_CASE("mixed classes at rank 3 are relabeling invariant") {
  PairingSpec s;
  s.r = 3;
  s.g = 2;
  s.a[2] = 1;
  s.f[2] = 3;
  s.b = {{2, 1}, {2, 3}};
  Rat v = ih_pairing(s).value;
  CHECK(v == rat(5, 3));
  PairingSpec t = s;
  t.b = {{2, 2}, {2, 4}};
  CHECK(ih_pairing(t).value == v);
}

TEST_CASE("family independence at rank 2") {
  PairingSpec s = spec_r2(2, 0, 3);
  EngineOptions opt;
  opt.cross_check = false;
  opt.family_index = 1;
  Rat v1 = ih_pairing(s, opt).value;
  opt.family_index = 2;
  Rat v2 = ih_pairing(s, opt).value;
  CHECK(v1 == v2);
}

TEST_CASE("symplectic relabeling invariance") {
  // swapping the pairs (1, 1+g) and (2, 2+g) leaves the value unchanged
  Rat a = ih_pairing(spec_r2(2, 0, 0, {{2, 1}, {2, 3}})).value;
  Rat b = ih_pairing(spec_r2(2, 0, 0, {{2, 2}, {2, 4}})).value;
  CHECK(a == b);
}

TEST_CASE("degree mismatch returns zero with a flag") {
  PairingResult res = ih_pairing(spec_r2(2, 0, 4));
  CHECK(res.value == 0);
  CHECK_FALSE(res.degree_ok);
  // forced through the engine it still vanishes exactly
  EngineOptions opt;
  opt.debug_no_cancel = true;
  opt.cross_check = false;
  CHECK(ih_pairing(spec_r2(2, 0, 4), opt).value == 0);
}

TEST_CASE("result metadata") {
  PairingResult res = ih_pairing(spec_r2(2, 0, 3));
  CHECK(res.engine == kEngineVersion);
  CHECK(res.family_index == 2);
  CHECK(res.windows.yneg > 0);
}
