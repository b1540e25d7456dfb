#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adj3/polyform.hpp"

using namespace adj3;

TEST_CASE("coordinate rules") {
  const int n = 3;
  auto x1 = PolyForm::coordinate(n, 0);
  auto x2 = PolyForm::coordinate(n, 1);
  auto dx1 = PolyForm::dx(n, 0);
  auto dx2 = PolyForm::dx(n, 1);

  // d(x1 dx2) = dx1 ^ dx2
  CHECK(wedge(x1, dx2).d() == wedge(dx1, dx2));
  // dx1 ^ dx1 = 0
  CHECK(wedge(dx1, dx1).is_zero());
  // dx1 ^ dx2 = - dx2 ^ dx1
  CHECK(wedge(dx1, dx2) == -wedge(dx2, dx1));
  // functions commute
  CHECK(wedge(x1, x2) == wedge(x2, x1));
}

TEST_CASE("d squares to zero and Leibniz holds on random forms") {
  std::mt19937_64 rng(101);
  const int n = 3;
  for (int trial = 0; trial < 40; ++trial) {
    int p = static_cast<int>(rng() % 3);
    int q = static_cast<int>(rng() % 3);
    auto w = random_polyform(rng, n, p, 3, 4);
    auto e = random_polyform(rng, n, q, 3, 4);
    CHECK(w.d().d().is_zero());
    auto lhs = wedge(w, e).d();
    auto rhs = wedge(w.d(), e) + (p % 2 == 0 ? wedge(w, e.d()) : -wedge(w, e.d()));
    CHECK(lhs == rhs);
    // graded commutativity
    auto ab = wedge(w, e);
    auto ba = wedge(e, w);
    CHECK(ab == ((p * q) % 2 == 0 ? ba : -ba));
  }
}

TEST_CASE("valued forms and multilinear application") {
  const int n = 3;
  GradedVectorSpace L;
  L.add_component(0, 2, "x");
  L.add_component(-1, 1, "y");

  // mu2: wedge-compatible bracket [x1,x2] = x1 on degree 0
  MultilinearMap mu2(2, 0, Symmetry::GradedAntisymmetric);
  mu2.set({{0, 0}, {0, 1}}, GradedElement::basis({0, 0}));

  ValuedForm A(2, n);
  A[0] = PolyForm::dx(n, 0);
  A[1] = wedge(PolyForm::coordinate(n, 1), PolyForm::dx(n, 1));

  auto AA = apply_on_forms(mu2, {&A, &A}, {0, 0}, 2, 0, n);
  // [A,A] has component 2 * A0 ^ A1 along x1
  auto expect = Rational(2) * wedge(A[0], A[1]);
  CHECK(AA[0] == expect);
  CHECK(AA[1].is_zero());
}

TEST_CASE("constant detection") {
  const int n = 3;
  auto c = PolyForm::scalar(n, rat(7, 1));
  CHECK(c.is_integer_constant());
  CHECK(c.constant_value() == rat(7));
  auto h = PolyForm::scalar(n, rat(1, 2));
  CHECK(h.is_constant_function());
  CHECK_FALSE(h.is_integer_constant());
  CHECK_FALSE(PolyForm::coordinate(n, 0).is_constant_function());
  CHECK(PolyForm(n).is_constant_function());
}
