#include <doctest.h>

#include <cmath>
#include <sstream>

#include "c14/closure.hpp"
#include "c14/symtensor.hpp"
#include "params_gen.hpp"

using namespace c14;

namespace {

const PolyFamily kPoly;

Multipliers sample_point() {
  Multipliers m;
  m.lambda = 2;
  m.lam_vec = {1, 0, 0};
  m.mat(0, 0) = 1;
  return m;
}

bool all_zero(const DenseTensorQ& t) {
  for (const auto& x : t.v)
    if (x != 0) return false;
  return true;
}

std::vector<double> grid(double a, double step, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(a + step * i);
  return g;
}

}  // namespace

TEST_CASE("zero potential gives zero fluxes") {
  auto ct = flux_tensors_exact(Series(6), 4, sample_point(), kPoly);
  for (int n = 0; n <= 4; ++n) {
    CHECK(all_zero(ct.F[n]));
    CHECK(all_zero(ct.G[n]));
  }
  CHECK(ct.h_prime == 0);
}

TEST_CASE("H1 fluxes are symmetric through second order") {
  auto fs = flux_series(build_H1(2), 2);
  for (int n = 0; n <= 2; ++n) {
    CHECK(antisym_first_pair(fs.F.grade(n)).is_zero());
    CHECK(antisym_first_pair(fs.G.grade(n)).is_zero());
  }
  prop::Gen g(61);
  for (int t = 0; t < 5; ++t) {
    auto ct = flux_tensors_exact(build_H1(2), 2, g.multipliers(), kPoly);
    for (int n = 0; n <= 2; ++n) CHECK(all_zero(antisym_first_pair(ct.F[n])));
    CHECK(ct.relation_residual == 0);
  }
}

TEST_CASE("single delta term flux") {
  // H = c delta^{(i hk j)} mu_i mu_hk lambda_j, so F^{kij} = c delta^{(kijl)} lambda_l.
  CHECK(prop::error_of([] { make_delta_term(1, 1, 0, 0, 1, 4); }) == ErrorKind::Parity);
  Rational c = rat(5, 3);
  Series H = make_delta_term(1, 1, 1, 0, c, 5).scalar();
  auto d4 = sym_delta(2);
  prop::Gen g(62);
  for (int t = 0; t < 5; ++t) {
    auto m = g.multipliers();
    auto ct = flux_tensors_exact(H, 3, m, kPoly);
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Rational expect = 0;
          for (int l = 0; l < 3; ++l) expect += c * d4.get({k + 1, i + 1, j + 1, l + 1}) * m.lam_vec[l];
          Rational got = 0;
          for (int n = 0; n <= 3; ++n) got += ct.F[n].at({k, i, j});
          CHECK(got == expect);
        }
  }
}

TEST_CASE("delta flux examples") {
  auto zero = delta_flux_exact(SolutionParams(), 3, sample_point());
  for (int n = 0; n <= 3; ++n) {
    CHECK(all_zero(zero.F[n]));
    CHECK(all_zero(zero.G[n]));
  }

  // F = G1 alone: the remainder is lambda^k (G0 delta^{ij} - lambda^i lambda^j).
  SolutionParams p;
  p.F = PolyF::named("G1");
  prop::Gen g(63);
  for (int t = 0; t < 5; ++t) {
    auto m = g.multipliers();
    auto df = delta_flux_exact(p, 4, m);
    Rational G0 = 0;
    for (const auto& x : m.lam_vec) G0 += x * x;
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Rational got = 0;
          for (int n = 0; n <= 4; ++n) got += df.F[n].at({k, i, j});
          Rational expect = m.lam_vec[k] * ((i == j ? G0 : Rational(0)) - m.lam_vec[i] * m.lam_vec[j]);
          CHECK(got == expect);
        }
  }
}

TEST_CASE("order-3 antisymmetric part at the sample point") {
  SolutionParams p;
  p.beta[1] = 1;
  p.F = PolyF::named("G1");
  p.theta = close_table({}, 6).table;
  Series H = build_H1(4) + build_DeltaH(p, 4);
  auto ct = flux_tensors_exact(H, 4, sample_point(), kPoly);
  auto a3 = antisym_first_pair(ct.F[3]);
  CHECK(a3.at({0, 1, 1}) == rat(-9, 2));
  CHECK(a3.at({1, 0, 1}) == rat(9, 2));
  auto rows = antisym_profile(ct.F, ct.G, 4);
  REQUIRE(rows.size() == 5);
  const Rational expect[] = {0, 0, 0, rat(9, 2), rat(5, 4)};
  for (int n = 0; n <= 4; ++n) {
    CHECK(rows[n].F == expect[n]);
    CHECK(rows[n].G == 0);
  }
  // The closed-form remainder carries the whole antisymmetric part.
  auto df = delta_flux_exact(p, 4, sample_point());
  for (int n = 0; n <= 4; ++n) CHECK(antisym_first_pair(df.F[n]).v == antisym_first_pair(ct.F[n]).v);
  auto dd = delta_flux(p, 4, sample_point());
  CHECK(std::abs(antisym_first_pair(dd.F[3]).at({0, 1, 1}) + 4.5) < 1e-12);
}

TEST_CASE("closed-form remainder matches the symbolic flux antisymmetry") {
  prop::Gen g(64);
  for (int t = 0; t < 4; ++t) {
    auto p = prop::random_params(g, 4, true);
    auto fs = flux_series(build_DeltaH(p, 4), 4);
    auto ds = delta_flux_series(p, 4);
    for (int n = 0; n <= 4; ++n) {
      CHECK(antisym_first_pair(fs.F.grade(n)).comps() == antisym_first_pair(ds.F.grade(n)).comps());
      CHECK(antisym_first_pair(fs.G.grade(n)).comps() == antisym_first_pair(ds.G.grade(n)).comps());
    }
  }
}

TEST_CASE("antisymmetric profile of symmetric input is zero") {
  std::vector<DenseTensorQ> F(3, DenseTensorQ(3)), G(3, DenseTensorQ(2));
  auto d = sym_delta(2);
  for (int n = 0; n < 3; ++n)
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i) {
        G[n].at({k, i}) = n + (k == i);
        for (int j = 0; j < 3; ++j) F[n].at({k, i, j}) = d.get({k + 1, i + 1, j + 1, 1}) * (n + 1);
      }
  for (const auto& row : antisym_profile(F, G, 2)) {
    CHECK(row.F == 0);
    CHECK(row.G == 0);
  }
}

TEST_CASE("beta_0 obstruction") {
  Beta0Ansatz a;
  auto ok = check_beta0(a);
  CHECK(ok.solvable);
  CHECK(ok.f1_f2_vanish);
  CHECK(ok.f7_relation);
  CHECK(ok.candidate_zero);
  a.beta0 = 1;
  CHECK_FALSE(check_beta0(a).solvable);
  for (int d = 0; d <= 4; ++d) {
    Beta0Ansatz b;
    b.degree = d;
    CHECK(check_beta0(b).solvable);
    b.beta0 = rat(-2, 7);
    CHECK_FALSE(check_beta0(b).solvable);
  }
  Beta0Ansatz bad;
  bad.degree = 9;
  CHECK(prop::error_of([&] { check_beta0(bad); }) == ErrorKind::Input);
}

TEST_CASE("integration constant on synthetic tables") {
  auto rho = grid(0.5, 0.1, 6), T = grid(1.0, 0.1, 6);
  auto seven = verify_integration_constant(synthetic_thermo_table(rho, T, [](double, double t) { return 7 / t; }), 1e-9);
  CHECK(seven.constant == doctest::Approx(7));
  CHECK(seven.rho_independent);
  CHECK(seven.tf_constant);
  CHECK_FALSE(seven.constant_zero);

  auto zero = verify_integration_constant(synthetic_thermo_table(rho, T, [](double, double) { return 0.0; }), 1e-9);
  CHECK(zero.consistent());
  CHECK(zero.constant_zero);
  CHECK(zero.verdict == "first-order symmetry holds");

  auto lin = verify_integration_constant(synthetic_thermo_table(rho, T, [](double, double t) { return t; }), 1e-9);
  CHECK_FALSE(lin.tf_constant);
  CHECK_FALSE(lin.consistent());

  auto dep = verify_integration_constant(synthetic_thermo_table(rho, T, [](double r, double t) { return r / t; }), 1e-9);
  CHECK_FALSE(dep.rho_independent);
}

TEST_CASE("thermo CSV round trip and errors") {
  auto t = synthetic_thermo_table({1, 2, 3, 4}, {1, 1.5, 2, 2.5}, [](double, double x) { return 3 / x; });
  std::stringstream ss;
  write_thermo_csv(ss, t);
  auto back = read_thermo_csv(ss);
  REQUIRE(back.rho.size() == 4);
  REQUIRE(back.T.size() == 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(back.f(i, j) == doctest::Approx(t.f(i, j)));

  std::stringstream bad_header("x,T,p,eps,h2,beta2,beta3\n1,1,1,1,1,1,1\n");
  CHECK(prop::error_of([&] { read_thermo_csv(bad_header); }) == ErrorKind::Input);
  std::stringstream bad_num("rho,T,p,eps,h2,beta2,beta3\n1,1,one,1,1,1,1\n");
  CHECK(prop::error_of([&] { read_thermo_csv(bad_num); }) == ErrorKind::Input);
  std::stringstream one_point("rho,T,p,eps,h2,beta2,beta3\n1,1,1,1,1,1,1\n");
  CHECK(prop::error_of([&] { read_thermo_csv(one_point); }) == ErrorKind::Grid);
}
