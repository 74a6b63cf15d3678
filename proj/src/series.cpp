#include "c14/series.hpp"

#include <cmath>
#include <functional>
#include <mutex>

namespace c14 {

namespace {
constexpr int kBits = 4;
constexpr std::uint64_t kField = 0xF;
constexpr int kSShift = 48;
// Bits that receive a carry out of each 4-bit exponent field.
constexpr std::uint64_t kCarryBits = [] {
  std::uint64_t c = 0;
  for (int v = 1; v <= kNumVars; ++v) c |= std::uint64_t{1} << (kBits * v);
  return c;
}();
constexpr std::uint64_t kExpMask = (std::uint64_t{1} << kSShift) - 1;

const std::array<std::array<int, 2>, 6> kPairs{{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};

Mono mono_mul(Mono a, Mono b) {
  std::uint64_t ea = a & kExpMask, eb = b & kExpMask;
  std::uint64_t sum = ea + eb;
  if (((ea ^ eb ^ sum) & kCarryBits) != 0 || sum > kExpMask)
    fail(ErrorKind::Shape, "monomial exponent overflow (more than 15 per variable)");
  std::uint64_t s = (a >> kSShift) + (b >> kSShift);
  if (s > 0xFFFF) fail(ErrorKind::Shape, "mu power overflow");
  return sum | (s << kSShift);
}

Mono mono_shift(Mono m, int var, int delta) {
  int e = mono_exp(m, var) + delta;
  if (e < 0 || e > 15) fail(ErrorKind::Shape, "monomial exponent out of range");
  m &= ~(kField << (kBits * var));
  return m | (static_cast<std::uint64_t>(e) << (kBits * var));
}

Mono mono_with_s(Mono m, int s) {
  if (s < 0 || s > 0xFFFF) fail(ErrorKind::Shape, "mu power out of range");
  return (m & kExpMask) | (static_cast<std::uint64_t>(s) << kSShift);
}
}  // namespace

int var_mu(int i) { return i; }
int packed_pair(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j > 2) fail(ErrorKind::Shape, "spatial index out of range");
  static const int table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return table[i][j];
}
int var_mat(int i, int j) { return 3 + packed_pair(i, j); }
int var_lam(int i) { return 9 + i; }

int mono_exp(Mono m, int var) { return static_cast<int>((m >> (kBits * var)) & kField); }
int mono_s(Mono m) { return static_cast<int>(m >> kSShift); }
int mono_p(Mono m) { return mono_exp(m, 0) + mono_exp(m, 1) + mono_exp(m, 2); }
int mono_q(Mono m) {
  int q = 0;
  for (int v = 3; v < 9; ++v) q += mono_exp(m, v);
  return q;
}
int mono_r(Mono m) { return mono_exp(m, 9) + mono_exp(m, 10) + mono_exp(m, 11); }
int mono_order(Mono m) {
  int o = 0;
  for (int v = 0; v < kNumVars; ++v) o += mono_exp(m, v);
  return o;
}

Mono make_mono(const std::array<int, kNumVars>& exps, int s) {
  Mono m = 0;
  for (int v = 0; v < kNumVars; ++v) {
    if (exps[v] < 0 || exps[v] > 15) fail(ErrorKind::Shape, "monomial exponent out of range");
    m |= static_cast<std::uint64_t>(exps[v]) << (kBits * v);
  }
  return mono_with_s(m, s);
}

const Rational& Multipliers::var(int v) const {
  if (v < 3) return mu_vec[v];
  if (v < 9) return mu_mat[v - 3];
  return lam_vec[v - 9];
}

bool Multipliers::at_equilibrium() const {
  for (int v = 0; v < kNumVars; ++v)
    if (var(v) != 0) return false;
  return true;
}

SymTensor Multipliers::mu_vec_tensor() const {
  return SymTensor::vector(mu_vec[0], mu_vec[1], mu_vec[2]);
}
SymTensor Multipliers::mu_mat_tensor() const {
  return SymTensor::matrix(mu_mat[0], mu_mat[1], mu_mat[2], mu_mat[3], mu_mat[4], mu_mat[5]);
}
SymTensor Multipliers::lam_vec_tensor() const {
  return SymTensor::vector(lam_vec[0], lam_vec[1], lam_vec[2]);
}

Series Series::constant(const LambdaScalar& c, int max_order) {
  Series s(max_order);
  s.add_term(0, c);
  return s;
}

Series Series::variable(int var, int max_order) {
  Series s(max_order);
  s.add_term(mono_shift(0, var, 1), LambdaScalar(1));
  return s;
}

int Series::valuation() const {
  if (terms_.empty()) return max_order_ + 1;
  int v = max_order_ + 1;
  for (const auto& [m, c] : terms_) v = std::min(v, mono_order(m));
  return v;
}

bool Series::has_psi() const {
  for (const auto& [m, c] : terms_)
    if (c.has_psi()) return true;
  return false;
}

void Series::add_term(Mono m, const LambdaScalar& c) {
  if (c.is_zero() || mono_order(m) > max_order_) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Series& Series::operator+=(const Series& o) {
  max_order_ = std::min(max_order_, o.max_order_);
  if (!terms_.empty()) {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = mono_order(it->first) > max_order_ ? terms_.erase(it) : std::next(it);
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  max_order_ = std::min(max_order_, o.max_order_);
  for (auto it = terms_.begin(); it != terms_.end();)
    it = mono_order(it->first) > max_order_ ? terms_.erase(it) : std::next(it);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& [m, c] : r.terms_) c *= -1;
  return r;
}

Series operator*(const Series& a, const Series& b) {
  int top = std::min(a.max_order_ + b.valuation(), b.max_order_ + a.valuation());
  Series r(top);
  for (const auto& [ma, ca] : a.terms_) {
    int oa = mono_order(ma);
    for (const auto& [mb, cb] : b.terms_) {
      if (oa + mono_order(mb) > top) continue;
      r.add_term(mono_mul(ma, mb), ca * cb);
    }
  }
  return r;
}

Series Series::scaled(const LambdaScalar& c) const {
  Series r(max_order_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

Series Series::scaled(const Rational& c) const {
  Series r(max_order_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Series Series::mul_var(int var) const {
  Series r(max_order_ + 1);
  for (const auto& [m, c] : terms_) r.terms_.emplace(mono_shift(m, var, 1), c);
  return r;
}

Series Series::mul_lambda(int e) const {
  Series r(max_order_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.mul_lambda(e));
  return r;
}

Series Series::mul_mu(int k) const {
  Series r(max_order_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(mono_with_s(m, mono_s(m) + k), c);
  return r;
}

Series Series::d_var(int var) const {
  Series r(max_order_ - 1);
  for (const auto& [m, c] : terms_) {
    int e = mono_exp(m, var);
    if (e == 0) continue;
    r.add_term(mono_shift(m, var, -1), c * Rational(e));
  }
  return r;
}

Series Series::d_mu() const {
  Series r(max_order_);
  for (const auto& [m, c] : terms_) {
    r.add_term(m, c14::d_mu(c));
    int s = mono_s(m);
    if (s > 0) r.add_term(mono_with_s(m, s - 1), c * Rational(s));
  }
  return r;
}

Series Series::d_lambda() const {
  Series r(max_order_);
  for (const auto& [m, c] : terms_) r.add_term(m, c14::d_lambda(c));
  return r;
}

Series Series::truncated(int n) const {
  Series r(std::min(n, max_order_));
  for (const auto& [m, c] : terms_)
    if (mono_order(m) <= r.max_order_) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Series Series::grade(int n) const {
  Series r(max_order_);
  for (const auto& [m, c] : terms_)
    if (mono_order(m) == n) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Series Series::drop_var_family(int first_var, int count) const {
  Series r(max_order_);
  for (const auto& [m, c] : terms_) {
    bool keep = true;
    for (int v = first_var; v < first_var + count; ++v) keep = keep && mono_exp(m, v) == 0;
    if (keep) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

MuDegree Series::mu_degree() const {
  MuDegree d;
  for (const auto& [m, c] : terms_) {
    if (c.has_psi()) d.transcendental = true;
    d.degree = std::max(d.degree.value_or(0), mono_s(m));
  }
  return d;
}

CompiledSeries::CompiledSeries(const Series& s) {
  std::map<PsiSymbol, int> slot;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    Term t{m, static_cast<int>(coefs_.size()), 0};
    s_max_ = std::max(s_max_, mono_s(m));
    for (const auto& [mono, q] : c.monomials()) {
      int psi = -1;
      if (mono.psi) {
        auto [it, fresh] = slot.try_emplace(*mono.psi, static_cast<int>(psis_.size()));
        if (fresh) psis_.push_back(*mono.psi);
        psi = it->second;
      }
      if (first) lam_min_ = lam_max_ = mono.lam_exp;
      first = false;
      lam_min_ = std::min(lam_min_, mono.lam_exp);
      lam_max_ = std::max(lam_max_, mono.lam_exp);
      coefs_.push_back({q.get_d(), mono.lam_exp, psi});
    }
    t.end = static_cast<int>(coefs_.size());
    terms_.push_back(t);
  }
}

std::pair<double, double> CompiledSeries::evaluate(const Multipliers& at,
                                                   const PsiRealization& real) const {
  if (terms_.empty()) return {0.0, 0.0};
  double mu = at.mu.get_d(), lam = at.lambda.get_d();
  if (lam_min_ < 0 && lam == 0.0) fail(ErrorKind::Pole, "lambda = 0 with a negative power");
  std::array<std::array<double, 16>, kNumVars> pw;
  for (int v = 0; v < kNumVars; ++v) {
    double x = at.var(v).get_d();
    pw[v][0] = 1;
    for (int e = 1; e < 16; ++e) pw[v][e] = pw[v][e - 1] * x;
  }
  std::vector<double> lam_pw(lam_max_ - lam_min_ + 1);
  for (int e = lam_min_; e <= lam_max_; ++e) lam_pw[e - lam_min_] = std::pow(lam, e);
  std::vector<double> mu_pw(s_max_ + 1, 1.0);
  for (int e = 1; e <= s_max_; ++e) mu_pw[e] = mu_pw[e - 1] * mu;
  std::vector<double> psi(psis_.size());
  for (size_t i = 0; i < psis_.size(); ++i) psi[i] = real.value(psis_[i].n, psis_[i].k, mu, lam);

  double acc = 0, abs_acc = 0;
  for (const auto& t : terms_) {
    double c = 0;
    for (int i = t.begin; i < t.end; ++i) {
      const auto& k = coefs_[i];
      double v = k.c * lam_pw[k.lam_exp - lam_min_];
      if (k.psi >= 0) v *= psi[k.psi];
      c += v;
    }
    double v = c * mu_pw[mono_s(t.m)];
    for (int var = 0; var < kNumVars && v != 0.0; ++var) {
      int e = mono_exp(t.m, var);
      if (e) v *= pw[var][e];
    }
    acc += v;
    abs_acc += std::fabs(v);
  }
  return {acc, abs_acc};
}

double Series::evaluate(const Multipliers& at, const PsiRealization& real) const {
  return CompiledSeries(*this).evaluate(at, real).first;
}

double Series::evaluate_abs(const Multipliers& at, const PsiRealization& real) const {
  return CompiledSeries(*this).evaluate(at, real).second;
}

Rational Series::evaluate_exact(const Multipliers& at, const PsiRealization& real) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = eval_scalar_exact(c, at.mu, at.lambda, real) * pow(at.mu, mono_s(m));
    for (int var = 0; var < kNumVars && v != 0; ++var) {
      int e = mono_exp(m, var);
      if (e) v *= pow(at.var(var), e);
    }
    acc += v;
  }
  return acc;
}

template <class T>
T& Dense<T>::at(const std::vector<int>& idx) {
  return v[flat_index(idx)];
}
template <class T>
const T& Dense<T>::at(const std::vector<int>& idx) const {
  return v[flat_index(idx)];
}
template struct Dense<double>;
template struct Dense<Rational>;

size_t flat_index(const std::vector<int>& idx) {
  size_t f = 0;
  for (int i : idx) {
    if (i < 0 || i > 2) fail(ErrorKind::Shape, "free index out of range");
    f = f * 3 + static_cast<size_t>(i);
  }
  return f;
}

std::vector<int> unflatten(size_t flat, int rank) {
  std::vector<int> idx(rank);
  for (int i = rank - 1; i >= 0; --i) {
    idx[i] = static_cast<int>(flat % 3);
    flat /= 3;
  }
  return idx;
}

TensorSeries::TensorSeries(int rank, int max_order)
    : rank_(rank), comps_(Dense<int>::pow3(rank), Series(max_order)) {
  if (rank < 0) fail(ErrorKind::InvalidRank, "negative free rank");
}

TensorSeries TensorSeries::from_scalar(const Series& s) {
  TensorSeries t(0, s.max_order());
  t.comps_[0] = s;
  return t;
}

int TensorSeries::max_order() const {
  int m = comps_[0].max_order();
  for (const auto& c : comps_) m = std::min(m, c.max_order());
  return m;
}

const Series& TensorSeries::scalar() const {
  if (rank_ != 0) fail(ErrorKind::Shape, "scalar() on a tensor series");
  return comps_[0];
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& o) {
  if (o.rank_ != rank_) fail(ErrorKind::Shape, "rank mismatch in tensor-series sum");
  for (size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& o) {
  if (o.rank_ != rank_) fail(ErrorKind::Shape, "rank mismatch in tensor-series difference");
  for (size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

TensorSeries TensorSeries::scaled(const Rational& c) const {
  TensorSeries r = *this;
  for (auto& s : r.comps_) s = s.scaled(c);
  return r;
}

TensorSeries TensorSeries::truncated(int n) const {
  TensorSeries r = *this;
  for (auto& s : r.comps_) s = s.truncated(n);
  return r;
}

TensorSeries TensorSeries::grade(int n) const {
  TensorSeries r = *this;
  for (auto& s : r.comps_) s = s.grade(n);
  return r;
}

bool TensorSeries::is_zero() const {
  for (const auto& s : comps_)
    if (!s.is_zero()) return false;
  return true;
}

DenseTensor TensorSeries::evaluate(const Multipliers& at, const PsiRealization& real) const {
  DenseTensor d(rank_);
  for (size_t i = 0; i < comps_.size(); ++i) d.v[i] = comps_[i].evaluate(at, real);
  return d;
}

DenseTensor TensorSeries::evaluate_abs(const Multipliers& at, const PsiRealization& real) const {
  DenseTensor d(rank_);
  for (size_t i = 0; i < comps_.size(); ++i) d.v[i] = comps_[i].evaluate_abs(at, real);
  return d;
}

DenseTensorQ TensorSeries::evaluate_exact(const Multipliers& at, const PsiRealization& real) const {
  DenseTensorQ d(rank_);
  for (size_t i = 0; i < comps_.size(); ++i) d.v[i] = comps_[i].evaluate_exact(at, real);
  return d;
}

TensorSeries differentiate(const TensorSeries& s, Var v) {
  switch (v) {
    case Var::Mu:
    case Var::Lambda: {
      TensorSeries r = s;
      for (auto& c : r.comps()) c = v == Var::Mu ? c.d_mu() : c.d_lambda();
      return r;
    }
    case Var::MuVec:
    case Var::LamVec: {
      TensorSeries r(s.rank() + 1, s.max_order() - 1);
      for (size_t f = 0; f < s.comps().size(); ++f) {
        auto idx = unflatten(f, s.rank());
        idx.push_back(0);
        for (int i = 0; i < 3; ++i) {
          idx.back() = i;
          r.at(idx) = s.comps()[f].d_var(v == Var::MuVec ? var_mu(i) : var_lam(i));
        }
      }
      return r;
    }
    case Var::MuMat: {
      TensorSeries r(s.rank() + 2, s.max_order() - 1);
      for (size_t f = 0; f < s.comps().size(); ++f) {
        auto idx = unflatten(f, s.rank());
        idx.push_back(0);
        idx.push_back(0);
        for (int i = 0; i < 3; ++i)
          for (int j = i; j < 3; ++j) {
            Series d = s.comps()[f].d_var(var_mat(i, j));
            if (i != j) d = d.scaled(Rational(1, 2));
            idx[idx.size() - 2] = i;
            idx.back() = j;
            r.at(idx) = d;
            idx[idx.size() - 2] = j;
            idx.back() = i;
            r.at(idx) = d;
          }
      }
      return r;
    }
  }
  return s;
}

TensorSeries differentiate(const Series& s, Var v) {
  return differentiate(TensorSeries::from_scalar(s), v);
}

namespace {

void compositions(int n, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(n);
    f(cur);
    cur.pop_back();
    return;
  }
  for (int k = n; k >= 0; --k) {
    cur.push_back(k);
    compositions(n - k, parts, cur, f);
    cur.pop_back();
  }
}

using RawPoly = std::vector<std::pair<Mono, Rational>>;

// Gaussian-moment evaluation: for z ~ N(0, I),
//   E[z_{a1} ... z_{a2n}] = (2n-1)!! delta^{(a1 ... a2n)}.
RawPoly delta_contraction_raw(int p, int q, int r, const std::vector<int>& fixed) {
  int slots = static_cast<int>(fixed.size()) + p + 2 * q + r;
  RawPoly out;
  if (slots % 2 != 0) fail(ErrorKind::Parity, "odd number of delta slots");
  Rational norm = 1 / double_factorial(slots - 1);
  std::array<int, 3> base{0, 0, 0};
  for (int f : fixed) {
    if (f < 0 || f > 2) fail(ErrorKind::Shape, "fixed index out of range");
    ++base[f];
  }
  std::map<Mono, Rational> acc;
  std::vector<int> ca, cb, cc;
  compositions(p, 3, ca, [&](const std::vector<int>& a) {
    compositions(q, 6, cb, [&](const std::vector<int>& b) {
      compositions(r, 3, cc, [&](const std::vector<int>& c) {
        std::array<int, 3> z = base;
        for (int i = 0; i < 3; ++i) z[i] += a[i] + c[i];
        for (int k = 0; k < 6; ++k) {
          z[kPairs[k][0]] += b[k];
          z[kPairs[k][1]] += b[k];
        }
        Rational moment = 1;
        for (int i = 0; i < 3; ++i) {
          if (z[i] % 2) return;
          moment *= double_factorial(z[i] - 1);
        }
        Rational coef = factorial(p) * factorial(q) * factorial(r) * moment * norm;
        std::array<int, kNumVars> e{};
        for (int i = 0; i < 3; ++i) {
          coef /= factorial(a[i]) * factorial(c[i]);
          e[var_mu(i)] = a[i];
          e[var_lam(i)] = c[i];
        }
        for (int k = 0; k < 6; ++k) {
          coef /= factorial(b[k]);
          if (kPairs[k][0] != kPairs[k][1]) coef *= pow(Rational(2), b[k]);
          e[3 + k] = b[k];
        }
        acc[make_mono(e)] += coef;
      });
    });
  });
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, c);
  return out;
}

}  // namespace

Series delta_contraction(int p, int q, int r, const std::vector<int>& fixed, int max_order) {
  if (p < 0 || q < 0 || r < 0) fail(ErrorKind::Shape, "negative contraction count");
  std::vector<int> key_fixed = fixed;
  std::sort(key_fixed.begin(), key_fixed.end());
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, std::vector<int>>, RawPoly> cache;
  Series s(max_order);
  if (p + q + r > max_order) {
    if ((static_cast<int>(fixed.size()) + p + r) % 2 != 0)
      fail(ErrorKind::Parity, "odd number of delta slots");
    return s;
  }
  const RawPoly* raw;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, q, r, key_fixed);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, delta_contraction_raw(p, q, r, key_fixed)).first;
    raw = &it->second;
  }
  for (const auto& [m, c] : *raw) s.add_term(m, LambdaScalar(c));
  return s;
}

TensorSeries make_delta_term(int p, int q, int r, int s, const LambdaScalar& coeff, int max_order,
                             int free) {
  if ((p + r + free) % 2 != 0)
    fail(ErrorKind::Parity, "p + r + free must be even (p=" + std::to_string(p) +
                                ", r=" + std::to_string(r) + ")");
  if (s < 0) fail(ErrorKind::Shape, "negative mu power");
  TensorSeries t(free, max_order);
  for (size_t f = 0; f < t.comps().size(); ++f) {
    auto idx = unflatten(f, free);
    t.comps()[f] = delta_contraction(p, q, r, idx, max_order).scaled(coeff).mul_mu(s);
  }
  return t;
}

}  // namespace c14
