#include <doctest.h>

#include <cmath>

#include "c14/galilean.hpp"
#include "c14/solutions.hpp"
#include "params_gen.hpp"

using namespace c14;

namespace {

Velocity random_velocity(prop::Gen& g) { return {g.rational(5, 4), g.rational(5, 4), g.rational(5, 4)}; }

Vec14 random_state(prop::Gen& g) {
  Vec14 s;
  for (auto& x : s) x = g.rational(9, 5);
  s[0] = g.nonzero(9, 5);
  return s;
}

double max_abs(const DenseTensor& t) {
  double m = 0;
  for (double x : t.v) m = std::max(m, std::abs(x));
  return m;
}

// Column/row offsets inside Vec14.
constexpr int F = 0, F1 = 1, F11 = 4, F12 = 5, G = 10, G1 = 11;

}  // namespace

TEST_CASE("X matrix examples") {
  CHECK(build_X({0, 0, 0}).is_identity());
  auto x = build_X({1, 0, 0});
  CHECK(x(G, F) == 1);
  CHECK(x(G1, F1) == 3);
  auto y = build_X({1, 2, 0});
  CHECK(y(F11, F) == 1);
  CHECK(y(F12, F) == 2);
}

TEST_CASE("X group laws for random rational velocities") {
  prop::Gen g(71);
  for (int t = 0; t < 20; ++t) {
    auto u = random_velocity(g), w = random_velocity(g);
    Velocity mu{-u[0], -u[1], -u[2]}, s{u[0] + w[0], u[1] + w[1], u[2] + w[2]};
    CHECK((build_X(mu) * build_X(u)).is_identity());
    CHECK(build_X(w) * build_X(u) == build_X(s));
  }
}

TEST_CASE("state transform round trip and composition") {
  prop::Gen g(72);
  for (int t = 0; t < 10; ++t) {
    auto s = random_state(g);
    std::array<Vec14, 3> flux{random_state(g), random_state(g), random_state(g)};
    auto v = random_velocity(g), w = random_velocity(g);
    auto id = transform_state(s, flux, {0, 0, 0});
    CHECK(id.F == s);
    CHECK(id.Fk == flux);
    auto there = transform_state(s, flux, v);
    auto back = transform_state(there.F, there.Fk, {-v[0], -v[1], -v[2]});
    CHECK(back.F == s);
    CHECK(back.Fk == flux);
    auto two = transform_state(there.F, there.Fk, w);
    auto one = transform_state(s, flux, {v[0] + w[0], v[1] + w[1], v[2] + w[2]});
    CHECK(two.F == one.F);
    CHECK(two.Fk == one.Fk);
  }
  Vec14 zero{};
  CHECK(prop::error_of([&] { velocity_of(zero); }) == ErrorKind::Pole);
  Vec14 s{};
  s[0] = 2;
  s[1] = 4;
  CHECK(velocity_of(s) == Velocity{2, 0, 0});
}

TEST_CASE("multiplier transform examples") {
  Multipliers m;
  m.lam_vec = {0, 1, 0};
  auto a = transform_multipliers(m, {1, 0, 0});
  CHECK(a.mat(0, 1) == m.mat(0, 1) - 1);
  prop::Gen g(73);
  for (int t = 0; t < 10; ++t) {
    auto r = g.multipliers();
    auto v = random_velocity(g);
    auto out = transform_multipliers(r, v);
    CHECK(out.lam_vec == r.lam_vec);
    CHECK(to_vec14(transform_multipliers(r, {0, 0, 0})) == to_vec14(r));
  }
}

TEST_CASE("explicit multiplier law equals the matrix law") {
  prop::Gen g(74);
  for (int t = 0; t < 20; ++t) {
    auto r = g.multipliers();
    auto v = random_velocity(g);
    CHECK(to_vec14(transform_multipliers(r, v)) == to_vec14(transform_multipliers_matrix(r, v)));
  }
}

TEST_CASE("velocity derivative matches finite differences") {
  prop::Gen g(75);
  for (int t = 0; t < 10; ++t) {
    auto r = g.multipliers();
    for (int i = 0; i < 3; ++i) {
      auto exact = multiplier_velocity_derivative(r, i);
      auto fd = multiplier_velocity_derivative_fd(r, i, 1e-4);
      for (int c = 0; c < 14; ++c) CHECK(std::abs(to_double(exact[c]) - fd[c]) < 1e-6);
    }
  }
}

TEST_CASE("Galilean residual") {
  ExpFamily e;
  auto pts = sample_points(20, 3);
  GalileanResidual h1(build_H1(4));
  for (const auto& m : pts) {
    auto [a, b] = h1(m, e);
    CHECK(max_abs(a) < 1e-9);
    CHECK(max_abs(b) < 1e-9);
  }
  auto [za, zb] = galilean_residual(Series(6), pts[0], e);
  CHECK(max_abs(za) == 0);
  CHECK(max_abs(zb) == 0);

  Series bad(6);
  for (int i = 0; i < 3; ++i) {
    std::array<int, kNumVars> ex{};
    ex[var_mu(i)] = 2;
    bad.add_term(make_mono(ex), 1);
  }
  auto [ba, bb] = galilean_residual(bad, pts[0], e);
  CHECK(max_abs(ba) + max_abs(bb) > 0.1);
  CHECK(prop::error_of([] { GalileanResidual r(Series(1)); }) == ErrorKind::Headroom);
}

TEST_CASE("Galilean residual of H1 + DeltaH for random parameters") {
  ExpFamily e;
  prop::Gen g(76);
  auto pts = sample_points(10, 9);
  for (int t = 0; t < 3; ++t) {
    auto p = prop::random_params(g, 3);
    GalileanResidual res(build_H1(3) + build_DeltaH(p, 3));
    for (const auto& m : pts) {
      auto [a, b] = res(m, e);
      CHECK(max_abs(a) < 1e-9);
      CHECK(max_abs(b) < 1e-9);
    }
  }
}
