#include "c14/galilean.hpp"

#include "c14/solutions.hpp"

namespace c14 {

namespace {

constexpr int kF = 0, kFi = 1, kFij = 4, kG = 10, kGi = 11;

// (i,j) pairs in packed order 11,12,13,22,23,33.
const std::array<std::pair<int, int>, 6> kPairs{{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};

Rational weight(int comp) {
  if (comp < kFij || comp >= kG) return 1;
  auto [i, j] = kPairs[comp - kFij];
  return i == j ? 1 : 2;
}

Rational delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

XMatrix::XMatrix() {
  for (auto& r : a) r.fill(Rational(0));
}

XMatrix XMatrix::identity() {
  XMatrix x;
  for (int i = 0; i < 14; ++i) x.a[i][i] = 1;
  return x;
}

bool XMatrix::is_identity() const { return *this == identity(); }

XMatrix operator*(const XMatrix& x, const XMatrix& y) {
  XMatrix z;
  for (int i = 0; i < 14; ++i)
    for (int k = 0; k < 14; ++k) {
      if (x.a[i][k] == 0) continue;
      for (int j = 0; j < 14; ++j) z.a[i][j] += x.a[i][k] * y.a[k][j];
    }
  return z;
}

Vec14 operator*(const XMatrix& x, const Vec14& v) {
  Vec14 out;
  out.fill(Rational(0));
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j) out[i] += x.a[i][j] * v[j];
  return out;
}

XMatrix build_X(const Velocity& v) {
  XMatrix x;
  Rational v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  x(kF, kF) = 1;
  for (int i = 0; i < 3; ++i) {
    x(kFi + i, kF) = v[i];
    x(kFi + i, kFi + i) = 1;
  }
  for (int r = 0; r < 6; ++r) {
    auto [i, j] = kPairs[r];
    x(kFij + r, kF) = v[i] * v[j];
    // 2 v^(i delta^j)_a = v^i delta^j_a + v^j delta^i_a
    for (int a = 0; a < 3; ++a) x(kFij + r, kFi + a) = v[i] * delta(j, a) + v[j] * delta(i, a);
    x(kFij + r, kFij + r) = 1;
  }
  x(kG, kF) = v2;
  for (int a = 0; a < 3; ++a) x(kG, kFi + a) = 2 * v[a];
  x(kG, kG) = 1;
  for (int i = 0; i < 3; ++i) {
    int row = kGi + i;
    x(row, kF) = v2 * v[i];
    for (int a = 0; a < 3; ++a) x(row, kFi + a) = v2 * delta(i, a) + 2 * v[i] * v[a];
    for (int c = 0; c < 6; ++c) {
      auto [a, b] = kPairs[c];
      // 2 delta^i_(a v_b), summed over both orderings of an off-diagonal pair
      Rational e = delta(i, a) * v[b] + delta(i, b) * v[a];
      x(row, kFij + c) = a == b ? e : 2 * e;
    }
    x(row, kG) = v[i];
    x(row, kGi + i) = 1;
  }
  return x;
}

Velocity velocity_of(const StateVector14& s) {
  if (s[kF] == 0) fail(ErrorKind::Pole, "velocity undefined for F = 0");
  return {s[kFi] / s[kF], s[kFi + 1] / s[kF], s[kFi + 2] / s[kF]};
}

TransformedState transform_state(const StateVector14& s, const std::array<StateVector14, 3>& flux,
                                 const Velocity& v_tau) {
  XMatrix x = build_X(v_tau);
  TransformedState t;
  t.F = x * s;
  for (int k = 0; k < 3; ++k) {
    t.Fk[k] = x * flux[k];
    for (int c = 0; c < 14; ++c) t.Fk[k][c] += v_tau[k] * t.F[c];
  }
  return t;
}

Vec14 to_vec14(const Multipliers& m) {
  Vec14 v;
  v[kF] = m.mu;
  for (int i = 0; i < 3; ++i) v[kFi + i] = m.mu_vec[i];
  for (int r = 0; r < 6; ++r) v[kFij + r] = m.mu_mat[r];
  v[kG] = m.lambda;
  for (int i = 0; i < 3; ++i) v[kGi + i] = m.lam_vec[i];
  return v;
}

Multipliers from_vec14(const Vec14& v) {
  Multipliers m;
  m.mu = v[kF];
  for (int i = 0; i < 3; ++i) m.mu_vec[i] = v[kFi + i];
  for (int r = 0; r < 6; ++r) m.mu_mat[r] = v[kFij + r];
  m.lambda = v[kG];
  for (int i = 0; i < 3; ++i) m.lam_vec[i] = v[kGi + i];
  return m;
}

Multipliers transform_multipliers(const Multipliers& r, const Velocity& v) {
  Rational v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  Rational lv = 0, muv = 0, mvv = 0;
  for (int i = 0; i < 3; ++i) {
    lv += r.lam_vec[i] * v[i];
    muv += r.mu_vec[i] * v[i];
    for (int j = 0; j < 3; ++j) mvv += r.mat(i, j) * v[i] * v[j];
  }
  Multipliers a;
  a.mu = r.mu - muv + mvv + r.lambda * v2 - lv * v2;
  for (int h = 0; h < 3; ++h) {
    Rational mih = 0;
    for (int i = 0; i < 3; ++i) mih += r.mat(i, h) * v[i];
    a.mu_vec[h] = r.mu_vec[h] - 2 * mih - 2 * r.lambda * v[h] + r.lam_vec[h] * v2 + 2 * lv * v[h];
  }
  for (auto [h, k] : kPairs)
    a.mat(h, k) = r.mat(h, k) - (r.lam_vec[h] * v[k] + r.lam_vec[k] * v[h]);
  a.lambda = r.lambda - lv;
  a.lam_vec = r.lam_vec;
  return a;
}

Multipliers transform_multipliers_matrix(const Multipliers& m, const Velocity& v) {
  XMatrix x = build_X({-v[0], -v[1], -v[2]});
  Vec14 mr = to_vec14(m), out;
  for (int b = 0; b < 14; ++b) {
    Rational acc = 0;
    for (int c = 0; c < 14; ++c) acc += weight(c) * mr[c] * x(c, b);
    out[b] = acc / weight(b);
  }
  return from_vec14(out);
}

Vec14 multiplier_velocity_derivative(const Multipliers& m, int i) {
  if (i < 0 || i > 2) fail(ErrorKind::Input, "velocity index out of range");
  Multipliers d;
  d.lambda = 0;
  d.mu = -m.mu_vec[i];
  for (int h = 0; h < 3; ++h) d.mu_vec[h] = -2 * m.mat(i, h) - 2 * m.lambda * delta(h, i);
  for (auto [h, k] : kPairs) d.mat(h, k) = -(m.lam_vec[h] * delta(k, i) + m.lam_vec[k] * delta(h, i));
  d.lambda = -m.lam_vec[i];
  return to_vec14(d);
}

std::array<double, 14> multiplier_velocity_derivative_fd(const Multipliers& m, int i, double h) {
  if (i < 0 || i > 2) fail(ErrorKind::Input, "velocity index out of range");
  if (!(h > 0)) fail(ErrorKind::Input, "step must be positive");
  Rational hq(h);
  Velocity vp{0, 0, 0}, vm{0, 0, 0};
  vp[i] = hq;
  vm[i] = -hq;
  Vec14 p = to_vec14(transform_multipliers(m, vp)), q = to_vec14(transform_multipliers(m, vm));
  std::array<double, 14> out;
  for (int c = 0; c < 14; ++c) out[c] = to_double((p[c] - q[c]) / (2 * hq));
  return out;
}

GalileanResidual::GalileanResidual(const Series& H) {
  if (H.max_order() < 2) fail(ErrorKind::Headroom, "galilean residual needs two orders of headroom");
  auto conds = galilean_conditions(H, H.max_order() - 2);
  for (int n = 0; n < 2; ++n) {
    TensorSeries sum(n + 1, H.max_order() - 2);
    for (const auto& t : conds[n].terms) sum += t;
    for (const auto& c : sum.comps()) (n == 0 ? scalar_ : vector_).emplace_back(c);
  }
}

std::pair<DenseTensor, DenseTensor> GalileanResidual::operator()(const Multipliers& at,
                                                                 const PsiRealization& real) const {
  std::pair<DenseTensor, DenseTensor> out{DenseTensor(1), DenseTensor(2)};
  for (size_t c = 0; c < scalar_.size(); ++c) out.first.v[c] = scalar_[c].evaluate(at, real).first;
  for (size_t c = 0; c < vector_.size(); ++c) out.second.v[c] = vector_[c].evaluate(at, real).first;
  return out;
}

std::pair<DenseTensor, DenseTensor> galilean_residual(const Series& H, const Multipliers& at,
                                                      const PsiRealization& real) {
  return GalileanResidual(H)(at, real);
}

}  // namespace c14
