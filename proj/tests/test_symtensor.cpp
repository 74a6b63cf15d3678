#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "c14/symtensor.hpp"
#include "prop.hpp"

using namespace c14;

namespace {

// Average of prod delta over all orderings of the index tuple.
Rational brute_sym_delta(const MultiIndex& idx) {
  std::vector<int> perm(idx.size());
  std::iota(perm.begin(), perm.end(), 0);
  long hits = 0, total = 0;
  do {
    ++total;
    bool ok = true;
    for (size_t k = 0; k + 1 < perm.size() && ok; k += 2) ok = idx[perm[k]] == idx[perm[k + 1]];
    hits += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  Rational r(hits, total);
  r.canonicalize();
  return r;
}

SymTensor random_vector(prop::Gen& g) {
  return SymTensor::vector(g.rational(5, 4), g.rational(5, 4), g.rational(5, 4));
}

SymTensor random_matrix(prop::Gen& g) {
  return SymTensor::matrix(g.rational(5, 4), g.rational(5, 4), g.rational(5, 4), g.rational(5, 4),
                           g.rational(5, 4), g.rational(5, 4));
}

Rational dot(const SymTensor& a, const SymTensor& b) {
  Rational s = 0;
  for (int i = 1; i <= 3; ++i) s += a.get({i}) * b.get({i});
  return s;
}

}  // namespace

TEST_CASE("sym_delta examples") {
  auto d1 = sym_delta(1);
  CHECK(d1.get({1, 1}) == 1);
  CHECK(d1.get({1, 2}) == 0);
  CHECK(sym_delta(2).get({1, 1, 2, 2}) == Rational(1, 3));
  CHECK(sym_delta(2).get({2, 1, 2, 1}) == Rational(1, 3));
  auto v = SymTensor::vector(1, 2, 3);
  auto full = contract(sym_delta(2), {ContractArg::vec(v), ContractArg::vec(v), ContractArg::vec(v),
                                      ContractArg::vec(v)});
  CHECK(full.rank() == 0);
  CHECK(full.get({}) == 196);
}

TEST_CASE("sym_delta rejects non-positive n") {
  CHECK(prop::error_of([] { sym_delta(0); }) == ErrorKind::InvalidRank);
  CHECK(prop::error_of([] { sym_delta(-2); }) == ErrorKind::InvalidRank);
}

TEST_CASE("sym_delta recursion equals permutation average up to rank 8") {
  for (int n = 1; n <= 4; ++n) {
    auto d = sym_delta(n);
    for (const auto& idx : sorted_indices(2 * n)) {
      CAPTURE(n);
      CHECK(d.get(idx) == brute_sym_delta(idx));
    }
  }
}

TEST_CASE("symmetrize examples") {
  auto s = symmetrize(RawTable{{{1, 2}, 2}, {{2, 1}, 0}}, 2);
  CHECK(s.get({1, 2}) == 1);
  CHECK(s.get({2, 1}) == 1);
  auto t = symmetrize(RawTable{{{1, 2, 3}, 6}}, 3);
  std::vector<int> p{1, 2, 3};
  do {
    CHECK(t.get(p) == 1);
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(prop::error_of([] { symmetrize(RawTable{{{1, 2}, 1}, {{1, 2, 3}, 1}}, 2); }) ==
        ErrorKind::Shape);
}

TEST_CASE("symmetrize is idempotent on random raw tables") {
  prop::Gen g(11);
  for (int trial = 0; trial < 30; ++trial) {
    int rank = g.integer(1, 4);
    RawTable raw;
    int entries = g.integer(1, 6);
    for (int e = 0; e < entries; ++e) {
      std::vector<int> key(rank);
      for (auto& k : key) k = g.integer(1, 3);
      raw[key] += g.rational(9, 5);
    }
    auto once = symmetrize(raw, rank);
    CHECK(symmetrize(once) == once);
  }
}

TEST_CASE("contract examples") {
  auto v = SymTensor::vector(1, 2, 3);
  CHECK(contract(sym_delta(1), {ContractArg::vec(v), ContractArg::vec(v)}).get({}) == 14);
  auto r2 = contract(sym_delta(2), {ContractArg::vec(v), ContractArg::vec(v)});
  CHECK(r2.rank() == 2);
  CHECK(r2.get({1, 1}) == Rational(16, 3));
  auto I = SymTensor::matrix(1, 0, 0, 1, 0, 1);
  CHECK(contract(sym_delta(2), {ContractArg::mat(I), ContractArg::mat(I)}).get({}) == 5);
  CHECK(prop::error_of([&] {
          contract(sym_delta(1), {ContractArg::vec(v), ContractArg::mat(I)});
        }) == ErrorKind::Shape);
}

TEST_CASE("outer examples") {
  CHECK(outer(SymTensor::scalar(2), SymTensor::scalar(3)).get({}) == 6);
  auto e1 = SymTensor::vector(1, 0, 0);
  auto vv = outer(e1, e1);
  for (const auto& idx : sorted_indices(2)) CHECK(vv.get(idx) == (idx == MultiIndex{1, 1} ? 1 : 0));
  CHECK(outer(sym_delta(1), SymTensor::vector(0, 1, 0)).get({1, 1, 2}) == Rational(1, 3));
}

TEST_CASE("full contraction of sym_delta gives powers of v.v") {
  prop::Gen g(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto v = random_vector(g);
    for (int n = 1; n <= 4; ++n) {
      std::vector<ContractArg> args(2 * n, ContractArg::vec(v));
      CHECK(contract(sym_delta(n), args).get({}) == pow(dot(v, v), n));
    }
  }
}

TEST_CASE("two-free-index contraction identity for even r") {
  prop::Gen g(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto l = random_vector(g);
    Rational ll = dot(l, l);
    for (int r : {0, 2, 4}) {
      std::vector<ContractArg> args(r, ContractArg::vec(l));
      auto lhs = contract(sym_delta((r + 2) / 2), args);
      for (int a = 1; a <= 3; ++a)
        for (int k = 1; k <= 3; ++k) {
          Rational rhs = (a == k ? pow(ll, r / 2) : Rational(0));
          if (r >= 2) rhs += r * l.get({a}) * l.get({k}) * pow(ll, (r - 2) / 2);
          rhs /= r + 1;
          CAPTURE(r);
          CHECK(lhs.get({a, k}) == rhs);
        }
    }
  }
}

TEST_CASE("contract does not depend on argument order") {
  prop::Gen g(9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ContractArg> args{ContractArg::vec(random_vector(g)), ContractArg::mat(random_matrix(g)),
                                  ContractArg::vec(random_vector(g))};
    auto t = sym_delta(3);
    auto base = contract(t, args);
    std::vector<int> p{0, 1, 2};
    while (std::next_permutation(p.begin(), p.end())) {
      std::vector<ContractArg> perm{args[p[0]], args[p[1]], args[p[2]]};
      CHECK(contract(t, perm) == base);
    }
  }
}

TEST_CASE("unsorted lookup reads the canonical entry") {
  SymTensor t(3);
  t.set({3, 1, 2}, 7);
  CHECK(t.get({1, 2, 3}) == 7);
  CHECK(t.get({2, 3, 1}) == 7);
  CHECK(t.components().size() == 1);
  CHECK(prop::error_of([&] { t.get({1, 2}); }) == ErrorKind::Shape);
}
