#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "adj3/graded.hpp"

using namespace adj3;

namespace {

// Independent sign oracle: multiply out adjacent transpositions one by one,
// moving the word perm back to the identity.
int koszul_oracle(std::vector<int> word, const std::vector<int>& degrees) {
  int sign = 1;
  for (size_t i = 0; i + 1 < word.size(); ++i) {
    for (size_t j = 0; j + 1 < word.size() - i; ++j) {
      if (word[j] > word[j + 1]) {
        if (degrees[word[j]] % 2 != 0 && degrees[word[j + 1]] % 2 != 0) sign = -sign;
        std::swap(word[j], word[j + 1]);
      }
    }
  }
  return sign;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("koszul sign basics") {
  CHECK(koszul_sign({1, 0}, {1, 1}) == -1);   // two odd elements anticommute
  CHECK(koszul_sign({0, 1, 2}, {3, 1, 2}) == 1);  // identity
  CHECK(koszul_sign({1, 0}, {1, 2}) == 1);    // (-1)^{1*2}
  CHECK(koszul_sign({1, 0}, {2, 2}) == 1);
  CHECK_THROWS(koszul_sign({0, 0}, {1, 1}));
  CHECK_THROWS(koszul_sign({0, 1}, {1, 1, 1}));
}

TEST_CASE("koszul sign matches transposition oracle exhaustively") {
  // all permutations of <= 5 elements, several degree patterns
  std::vector<std::vector<int>> degree_sets = {
      {1, 1, 1, 1, 1}, {2, 2, 2, 2, 2}, {1, 2, 3, 1, 2}, {0, 1, 0, 1, 2}};
  for (int n = 1; n <= 5; ++n) {
    for (const auto& degs_full : degree_sets) {
      std::vector<int> degs(degs_full.begin(), degs_full.begin() + n);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        CHECK(koszul_sign(perm, degs) == koszul_oracle(perm, degs));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("koszul sign composes") {
  // chi(sigma o tau) = chi(sigma on tau-permuted degrees) * chi(tau)
  std::vector<int> degs = {1, 2, 1, 3, 1};
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> d(degs.begin(), degs.begin() + n);
    std::vector<int> sigma(n), tau(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    int checked = 0;
    do {
      std::iota(tau.begin(), tau.end(), 0);
      do {
        std::vector<int> comp(n), dtau(n);
        for (int i = 0; i < n; ++i) comp[i] = tau[sigma[i]];
        for (int i = 0; i < n; ++i) dtau[i] = d[tau[i]];
        CHECK(koszul_sign(comp, d) == koszul_sign(sigma, dtau) * koszul_sign(tau, d));
        ++checked;
      } while (std::next_permutation(tau.begin(), tau.end()) && checked < 400);
    } while (std::next_permutation(sigma.begin(), sigma.end()) && checked < 400);
  }
}

TEST_CASE("unshuffles enumerate") {
  auto u02 = unshuffles(0, 2);
  REQUIRE(u02.size() == 1);
  CHECK(u02[0] == std::vector<int>{0, 1});

  auto u13 = unshuffles(1, 3);
  REQUIRE(u13.size() == 3);  // binomial(3,1)
  CHECK(u13[0] == std::vector<int>{0, 1, 2});
  CHECK(u13[1] == std::vector<int>{1, 0, 2});
  CHECK(u13[2] == std::vector<int>{2, 0, 1});

  CHECK(unshuffles(2, 4).size() == 6);  // binomial(4,2)
  CHECK_THROWS(unshuffles(3, 2));
}

TEST_CASE("unshuffle count and filter oracle, i <= 6") {
  for (int i = 0; i <= 6; ++i) {
    for (int j = 0; j <= i; ++j) {
      auto got = unshuffles(j, i);
      CHECK(static_cast<long>(got.size()) == binomial(i, j));
      // oracle: filter all permutations
      std::vector<int> perm(i);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::vector<int>> expect;
      do {
        bool inc1 = std::is_sorted(perm.begin(), perm.begin() + j);
        bool inc2 = std::is_sorted(perm.begin() + j, perm.end());
        if (inc1 && inc2) expect.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
      std::sort(expect.begin(), expect.end());
      auto sorted = got;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == expect);
    }
  }
}

TEST_CASE("multilinear apply") {
  GradedVectorSpace g;
  g.add_component(0, {"e1", "e2"});

  // 2-dim Lie algebra with [e1,e2] = e1
  MultilinearMap mu2(2, 0, Symmetry::GradedAntisymmetric);
  mu2.set({{0, 0}, {0, 1}}, GradedElement::basis({0, 0}));

  auto e1 = GradedElement::basis({0, 0});
  auto e2 = GradedElement::basis({0, 1});
  CHECK(mu2.apply({e1, e2}) == e1);
  CHECK(mu2.apply({e2, e1}) == -e1);
  CHECK(mu2.apply({e1, e1}).is_zero());
  CHECK(mu2.apply({GradedElement(), e2}).is_zero());
  CHECK(mu2.antisymmetry_consistent());

  // linearity in each slot on rational combinations
  auto x = rat(3, 4) * e1 + rat(-2, 5) * e2;
  auto y = rat(7, 3) * e1 + rat(1, 2) * e2;
  auto lhs = mu2.apply({x + y, e2});
  auto rhs = mu2.apply({x, e2}) + mu2.apply({y, e2});
  CHECK(lhs == rhs);
}

TEST_CASE("graded antisymmetric map on even square is zero") {
  MultilinearMap m(2, 0, Symmetry::GradedAntisymmetric);
  // setting a nonzero value on (x,x) with |x| even must be rejected
  CHECK_THROWS(m.set({{0, 0}, {0, 0}}, GradedElement::basis({0, 1})));
  // while an odd square is fine
  MultilinearMap modd(2, -2, Symmetry::GradedAntisymmetric);
  modd.set({{-1, 0}, {-1, 0}}, GradedElement::basis({-4, 0}));
  CHECK(modd.apply({GradedElement::basis({-1, 0}), GradedElement::basis({-1, 0})}) ==
        GradedElement::basis({-4, 0}));
}

TEST_CASE("degree homogeneity is enforced") {
  MultilinearMap m(1, 1);
  CHECK_THROWS(m.set({{0, 0}}, GradedElement::basis({0, 0})));  // needs degree 1
  m.set({{0, 0}}, GradedElement::basis({1, 0}));
  CHECK(m.apply({GradedElement::basis({0, 0})}) == GradedElement::basis({1, 0}));
}

TEST_CASE("shifted space re-grades") {
  GradedVectorSpace v;
  v.add_component(0, 2, "a");
  v.add_component(-1, 1, "b");
  auto s = v.shifted(1);  // V[1]_j = V_{j+1}
  CHECK(s.dim(-1) == 2);
  CHECK(s.dim(-2) == 1);
  CHECK(s.dim(0) == 0);
}
