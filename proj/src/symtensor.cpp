#include "c14/symtensor.hpp"

#include <algorithm>
#include <mutex>

namespace c14 {

SymTensor::SymTensor(int rank, ScalarMode mode) : rank_(rank), mode_(mode) {
  if (rank < 0) fail(ErrorKind::InvalidRank, "negative tensor rank");
}

SymTensor SymTensor::scalar(const Rational& v) {
  SymTensor t(0);
  t.set({}, v);
  return t;
}

SymTensor SymTensor::vector(const Rational& a, const Rational& b, const Rational& c) {
  SymTensor t(1);
  t.set({1}, a);
  t.set({2}, b);
  t.set({3}, c);
  return t;
}

SymTensor SymTensor::matrix(const Rational& m11, const Rational& m12, const Rational& m13,
                            const Rational& m22, const Rational& m23, const Rational& m33) {
  SymTensor t(2);
  t.set({1, 1}, m11);
  t.set({1, 2}, m12);
  t.set({1, 3}, m13);
  t.set({2, 2}, m22);
  t.set({2, 3}, m23);
  t.set({3, 3}, m33);
  return t;
}

MultiIndex SymTensor::canonical(MultiIndex idx) const {
  if (static_cast<int>(idx.size()) != rank_)
    fail(ErrorKind::Shape, "index length " + std::to_string(idx.size()) + " for rank " +
                               std::to_string(rank_));
  for (int i : idx)
    if (i < 1 || i > 3) fail(ErrorKind::Shape, "index out of {1,2,3}");
  std::sort(idx.begin(), idx.end());
  return idx;
}

Rational SymTensor::get(MultiIndex idx) const {
  auto k = canonical(std::move(idx));
  if (mode_ == ScalarMode::Float) fail(ErrorKind::Shape, "exact read of a float tensor");
  auto it = rat_.find(k);
  return it == rat_.end() ? Rational(0) : it->second;
}

double SymTensor::get_float(MultiIndex idx) const {
  auto k = canonical(std::move(idx));
  if (mode_ == ScalarMode::Rational) {
    auto it = rat_.find(k);
    return it == rat_.end() ? 0.0 : it->second.get_d();
  }
  auto it = flt_.find(k);
  return it == flt_.end() ? 0.0 : it->second;
}

void SymTensor::set(MultiIndex idx, const Rational& v) {
  auto k = canonical(std::move(idx));
  if (mode_ == ScalarMode::Float) {
    set_float(k, v.get_d());
    return;
  }
  if (v == 0)
    rat_.erase(k);
  else
    rat_[k] = v;
}

void SymTensor::set_float(MultiIndex idx, double v) {
  auto k = canonical(std::move(idx));
  if (mode_ == ScalarMode::Rational) fail(ErrorKind::Shape, "float write into a rational tensor");
  if (v == 0.0)
    flt_.erase(k);
  else
    flt_[k] = v;
}

SymTensor SymTensor::to_float() const {
  if (mode_ == ScalarMode::Float) return *this;
  SymTensor t(rank_, ScalarMode::Float);
  for (const auto& [k, v] : rat_) t.set_float(k, v.get_d());
  return t;
}

bool SymTensor::operator==(const SymTensor& o) const {
  return rank_ == o.rank_ && mode_ == o.mode_ && rat_ == o.rat_ && flt_ == o.flt_;
}

std::vector<MultiIndex> sorted_indices(int rank) {
  std::vector<MultiIndex> out;
  MultiIndex cur(rank, 1);
  if (rank == 0) return {MultiIndex{}};
  while (true) {
    out.push_back(cur);
    int pos = rank - 1;
    while (pos >= 0 && cur[pos] == 3) --pos;
    if (pos < 0) break;
    int v = cur[pos] + 1;
    for (int i = pos; i < rank; ++i) cur[i] = v;
  }
  return out;
}

namespace {

// Multiplicity factor prod(m_i!) / n! for a sorted multi-index.
Rational arrangement_weight(const MultiIndex& idx) {
  Rational w = 1;
  int run = 0;
  for (size_t i = 0; i < idx.size(); ++i) {
    run = (i > 0 && idx[i] == idx[i - 1]) ? run + 1 : 1;
    w *= run;
  }
  return w / factorial(static_cast<int>(idx.size()));
}

SymTensor sym_delta_uncached(int n, const SymTensor& prev) {
  SymTensor out(2 * n);
  for (const auto& idx : sorted_indices(2 * n)) {
    Rational acc = 0;
    for (size_t j = 1; j < idx.size(); ++j) {
      if (idx[j] != idx[0]) continue;
      MultiIndex rest;
      for (size_t t = 1; t < idx.size(); ++t)
        if (t != j) rest.push_back(idx[t]);
      acc += prev.get(rest);
    }
    out.set(idx, acc / (2 * n - 1));
  }
  return out;
}

}  // namespace

SymTensor sym_delta(int n) {
  if (n < 1) fail(ErrorKind::InvalidRank, "sym_delta needs n >= 1, got " + std::to_string(n));
  static std::mutex mu;
  static std::vector<SymTensor> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.push_back(SymTensor::scalar(1));
  while (static_cast<int>(cache.size()) <= n) {
    int k = static_cast<int>(cache.size());
    cache.push_back(sym_delta_uncached(k, cache.back()));
  }
  return cache[n];
}

SymTensor symmetrize(const RawTable& raw, int rank) {
  std::map<MultiIndex, Rational> acc;
  for (const auto& [key, v] : raw) {
    if (static_cast<int>(key.size()) != rank) fail(ErrorKind::Shape, "raw key length mismatch");
    MultiIndex k = key;
    std::sort(k.begin(), k.end());
    acc[k] += v;
  }
  SymTensor out(rank);
  for (const auto& [k, v] : acc) out.set(k, v * arrangement_weight(k));
  return out;
}

SymTensor symmetrize(const SymTensor& t) {
  if (t.mode() == ScalarMode::Float) return t;
  RawTable raw;
  for (const auto& [k, v] : t.components()) {
    MultiIndex p = k;
    do {
      raw[p] = v;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return symmetrize(raw, t.rank());
}

ContractArg ContractArg::vec(const SymTensor& v) {
  if (v.rank() != 1) fail(ErrorKind::Shape, "vector argument must be rank 1");
  return {v};
}

ContractArg ContractArg::mat(const SymTensor& m) {
  if (m.rank() != 2) fail(ErrorKind::Shape, "matrix argument must be rank 2");
  return {m};
}

namespace {

template <class T>
T read(const SymTensor& t, const MultiIndex& idx) {
  if constexpr (std::is_same_v<T, double>)
    return t.get_float(idx);
  else
    return t.get(idx);
}

template <class T>
SymTensor contract_impl(const SymTensor& t, const std::vector<ContractArg>& args, int used,
                        ScalarMode mode) {
  int free_rank = t.rank() - used;
  SymTensor out(free_rank, mode);
  for (const auto& f : sorted_indices(free_rank)) {
    T acc = 0;
    MultiIndex slots(used, 1);
    while (true) {
      MultiIndex full = f;
      full.insert(full.end(), slots.begin(), slots.end());
      T term = read<T>(t, full);
      if (term != 0) {
        size_t pos = 0;
        for (const auto& a : args) {
          if (a.value.rank() == 1) {
            term *= read<T>(a.value, {slots[pos]});
            pos += 1;
          } else {
            term *= read<T>(a.value, {slots[pos], slots[pos + 1]});
            pos += 2;
          }
        }
        acc += term;
      }
      int p = used - 1;
      while (p >= 0 && slots[p] == 3) slots[p--] = 1;
      if (p < 0) break;
      ++slots[p];
    }
    if constexpr (std::is_same_v<T, double>)
      out.set_float(f, acc);
    else
      out.set(f, acc);
  }
  return out;
}

}  // namespace

SymTensor contract(const SymTensor& t, const std::vector<ContractArg>& args) {
  int used = 0;
  bool flt = t.mode() == ScalarMode::Float;
  for (const auto& a : args) {
    used += a.value.rank();
    flt = flt || a.value.mode() == ScalarMode::Float;
  }
  if (used > t.rank())
    fail(ErrorKind::Shape, "contraction uses " + std::to_string(used) + " slots of a rank " +
                               std::to_string(t.rank()) + " tensor");
  if (flt) return contract_impl<double>(t, args, used, ScalarMode::Float);
  return contract_impl<Rational>(t, args, used, ScalarMode::Rational);
}

SymTensor outer(const SymTensor& a, const SymTensor& b) {
  int n = a.rank() + b.rank();
  bool flt = a.mode() == ScalarMode::Float || b.mode() == ScalarMode::Float;
  SymTensor out(n, flt ? ScalarMode::Float : ScalarMode::Rational);
  // Average of A(I_S) B(I_rest) over all rank(A)-subsets S of positions.
  Rational norm = 1 / (factorial(n) / (factorial(a.rank()) * factorial(b.rank())));
  for (const auto& idx : sorted_indices(n)) {
    std::vector<int> pick(n, 0);
    std::fill(pick.begin() + b.rank(), pick.end(), 1);
    Rational racc = 0;
    double facc = 0;
    do {
      MultiIndex ia, ib;
      for (int i = 0; i < n; ++i) (pick[i] ? ia : ib).push_back(idx[i]);
      if (flt)
        facc += a.get_float(ia) * b.get_float(ib);
      else
        racc += a.get(ia) * b.get(ib);
    } while (std::next_permutation(pick.begin(), pick.end()));
    if (flt)
      out.set_float(idx, facc * norm.get_d());
    else
      out.set(idx, racc * norm);
  }
  return out;
}

}  // namespace c14
