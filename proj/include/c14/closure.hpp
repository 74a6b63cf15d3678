#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "c14/solutions.hpp"

namespace c14 {

// Symbolic fluxes and potentials of H.
struct FluxSeries {
  TensorSeries F;   // F^{kij} = d2H/dmu_k dmu_ij, indices (k,i,j)
  TensorSeries G;   // G^{ki} = d2H/dmu_k dlambda_i
  Series h;         // dH/dmu
  TensorSeries hk;  // dH/dmu_k
};

// Exact through `order`; needs H exact through order + 2.
FluxSeries flux_series(const Series& H, int order);

template <class T>
struct ClosureTensorsT {
  std::vector<Dense<T>> F;  // F[n]: grade-n part, rank 3
  std::vector<Dense<T>> G;  // rank 2
  T h_prime{};
  Dense<T> h_prime_k{1};
  // max |dh'/dmu_i - dh'^i/dmu|
  T relation_residual{};
};
using ClosureTensors = ClosureTensorsT<double>;
using ClosureTensorsQ = ClosureTensorsT<Rational>;

ClosureTensors flux_tensors(const Series& H, int order, const Multipliers& at,
                            const PsiRealization& real);
ClosureTensorsQ flux_tensors_exact(const Series& H, int order, const Multipliers& at,
                                   const PsiRealization& real);

// Closed-form non-symmetric remainders of the deviation fluxes.
struct DeltaFluxSeries {
  TensorSeries F;  // rank 3
  TensorSeries G;  // rank 2
};
DeltaFluxSeries delta_flux_series(const SolutionParams& params, int order);

// Graded evaluation, grades 0..order.
template <class T>
struct DeltaFluxT {
  std::vector<Dense<T>> F, G;
};
DeltaFluxT<double> delta_flux(const SolutionParams& params, int order, const Multipliers& at);
DeltaFluxT<Rational> delta_flux_exact(const SolutionParams& params, int order,
                                      const Multipliers& at);

// Antisymmetric part over the first index pair.
DenseTensor antisym_first_pair(const DenseTensor& t);
DenseTensorQ antisym_first_pair(const DenseTensorQ& t);
TensorSeries antisym_first_pair(const TensorSeries& t);

template <class T>
struct AntisymRow {
  int order;
  T F, G;  // max-norms
};
std::vector<AntisymRow<double>> antisym_profile(const std::vector<DenseTensor>& F,
                                                const std::vector<DenseTensor>& G,
                                                int max_order);
std::vector<AntisymRow<Rational>> antisym_profile(const std::vector<DenseTensorQ>& F,
                                                  const std::vector<DenseTensorQ>& G,
                                                  int max_order);

// Second-degree ansatz for the vector potential in mu_ij, coefficients
// f_1..f_8 polynomial in G0 of degree <= `degree`.
struct Beta0Ansatz {
  int degree = 4;
  Rational beta0 = 0;
  // Optional candidate: f[i][m] is the G0^m coefficient of f_{i+1}.
  std::array<std::vector<Rational>, 8> f;
};

struct Beta0Report {
  bool solvable = false;
  int unknowns = 0, equations = 0, rank = 0;
  // Over the whole solution family (only meaningful when solvable).
  bool f1_f2_vanish = false;
  bool f7_relation = false;
  // Residual of the supplied candidate is identically zero.
  bool candidate_zero = false;
  // Solution family as text, one free direction per entry.
  std::vector<std::string> family;
};

Beta0Report check_beta0(const Beta0Ansatz& a);

struct ThermoTable {
  std::vector<double> rho, T;
  // Row-major over the grid, rho outer: index i * T.size() + j.
  std::vector<double> p, eps, h2, beta2, beta3;

  void validate() const;
  double f(size_t i, size_t j) const;
};

ThermoTable read_thermo_csv(std::istream& in);
void write_thermo_csv(std::ostream& out, const ThermoTable& t);

// Table with fixed smooth p, eps, h2, beta3 and beta2 chosen so that f = f_target.
ThermoTable synthetic_thermo_table(const std::vector<double>& rho, const std::vector<double>& T,
                                   const std::function<double(double, double)>& f_target);

struct IntegrationConstantReport {
  double constant = 0;        // mean of T f
  double rho_derivative = 0;  // max |df/drho|
  double tf_derivative = 0;   // max |d(T f)/dT|
  double tf_spread = 0;       // max |T f - constant|
  double rho_threshold = 0, tf_threshold = 0;
  bool rho_independent = false;
  bool tf_constant = false;
  bool constant_zero = false;
  std::string verdict;
  bool consistent() const { return rho_independent && tf_constant; }
};

IntegrationConstantReport verify_integration_constant(const ThermoTable& t, double tol);

}  // namespace c14
