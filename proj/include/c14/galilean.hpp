#pragma once

#include <array>
#include <utility>
#include <vector>

#include "c14/series.hpp"

namespace c14 {

// Component order: F, F_1..F_3, F_11,F_12,F_13,F_22,F_23,F_33, G, G_1..G_3.
using Vec14 = std::array<Rational, 14>;
using StateVector14 = Vec14;
using Velocity = std::array<Rational, 3>;

struct XMatrix {
  std::array<std::array<Rational, 14>, 14> a;
  XMatrix();
  static XMatrix identity();
  Rational& operator()(int r, int c) { return a[r][c]; }
  const Rational& operator()(int r, int c) const { return a[r][c]; }
  friend XMatrix operator*(const XMatrix& x, const XMatrix& y);
  friend Vec14 operator*(const XMatrix& x, const Vec14& v);
  bool operator==(const XMatrix& o) const { return a == o.a; }
  bool is_identity() const;
};

// Off-diagonal packed columns carry the sum over both index orderings, so the
// matrix acting on a packed state reproduces the tensor law.
XMatrix build_X(const Velocity& v);

// v^i = F^i / F; F = 0 is a pole.
Velocity velocity_of(const StateVector14& s);

struct TransformedState {
  StateVector14 F;
  std::array<StateVector14, 3> Fk;
};
// F_a = X(v) F_r, F^k_a = X(v) F^k_r + v^k F_a.
TransformedState transform_state(const StateVector14& s, const std::array<StateVector14, 3>& flux,
                                 const Velocity& v_tau);

Vec14 to_vec14(const Multipliers& m);
Multipliers from_vec14(const Vec14& v);

// Explicit closed-form law for the absolute-frame multipliers.
Multipliers transform_multipliers(const Multipliers& m, const Velocity& v_tau);
// Same map through the matrix: mu^a_B = mu^r_C X^C_B(-v), contracted over full indices.
Multipliers transform_multipliers_matrix(const Multipliers& m, const Velocity& v_tau);

// d mu^a / d v^i at the given multipliers, closed form and central difference.
Vec14 multiplier_velocity_derivative(const Multipliers& m, int i);
std::array<double, 14> multiplier_velocity_derivative_fd(const Multipliers& m, int i, double h);

// Both boost conditions evaluated at a point: rank-1 and rank-2 residuals.
std::pair<DenseTensor, DenseTensor> galilean_residual(const Series& H, const Multipliers& at,
                                                      const PsiRealization& real);

// Same, with the symbolic residual built once for many points.
class GalileanResidual {
 public:
  explicit GalileanResidual(const Series& H);
  std::pair<DenseTensor, DenseTensor> operator()(const Multipliers& at,
                                                 const PsiRealization& real) const;

 private:
  std::vector<CompiledSeries> scalar_, vector_;  // summed residual components
};

}  // namespace c14
