#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shiftarg/ugl.hpp"

#include <stdexcept>

using namespace shiftarg;

namespace {

UElement E(int n, int i, int j) { return UElement::gen(n, i, j); }

}  // namespace

TEST_CASE("pbw straightening of a single out-of-order pair") {
  // E_21 E_12 = E_12 E_21 + E_22 - E_11
  UElement lhs = E(2, 2, 1) * E(2, 1, 2);
  UElement rhs = E(2, 1, 2) * E(2, 2, 1) + E(2, 2, 2) - E(2, 1, 1);
  CHECK(lhs == rhs);
  CHECK(lhs.str() == "E[1,2]*E[2,1] - E[1,1] + E[2,2]");

  // E_22 E_12 = E_12 E_22 - E_12
  CHECK(E(2, 2, 2) * E(2, 1, 2) == E(2, 1, 2) * E(2, 2, 2) - E(2, 1, 2));

  // commuting pair stays put: E_11 E_22 == E_22 E_11
  CHECK(E(2, 1, 1) * E(2, 2, 2) == E(2, 2, 2) * E(2, 1, 1));
}

TEST_CASE("commutation relations") {
  // [E_ij, E_kl] = d_kj E_il - d_il E_kj over gl_3
  CHECK(commutator(E(3, 1, 1), E(3, 1, 2)) == E(3, 1, 2));
  CHECK(commutator(E(3, 1, 2), E(3, 2, 3)) == E(3, 1, 3));
  CHECK(commutator(E(3, 1, 2), E(3, 2, 1)) == E(3, 1, 1) - E(3, 2, 2));
  CHECK(commutator(E(3, 1, 2), E(3, 3, 1)).is_zero() == false);
  CHECK(commutator(E(3, 1, 2), E(3, 3, 1)) == -E(3, 3, 2));
  CHECK(commutator(E(3, 1, 2), E(3, 1, 3)).is_zero());
  CHECK(commutator(E(3, 1, 1), E(3, 2, 2)).is_zero());
}

TEST_CASE("product associativity across straightening") {
  UElement a = E(3, 3, 1), b = E(3, 2, 3), c = E(3, 1, 2);
  CHECK((a * b) * c == a * (b * c));
  UElement p = E(3, 2, 1) * E(3, 1, 2) + E(3, 3, 3) * Rational(1, 2);
  UElement q = E(3, 1, 3) * E(3, 3, 1) - UElement::scalar(3, Rational(2));
  UElement r = E(3, 2, 2) * E(3, 2, 1);
  CHECK((p * q) * r == p * (q * r));
}

TEST_CASE("scalars, degree, zero") {
  UElement s = UElement::scalar(2, Rational(5, 2));
  Rational v;
  CHECK(s.is_scalar(&v));
  CHECK(v == Rational(5, 2));
  CHECK(s.degree() == 0);
  CHECK(UElement(2).degree() == -1);
  CHECK(UElement(2).is_zero());
  CHECK((s - s).is_zero());

  UElement p = E(2, 1, 2) * E(2, 2, 1) * E(2, 1, 1);
  CHECK(p.degree() == 3);
  CHECK_FALSE(p.is_scalar());
  CHECK_THROWS_AS(E(2, 1, 1) + E(3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(UElement::gen(2, 3, 1), std::invalid_argument);
}

TEST_CASE("parse and str round trip") {
  UElement p = E(2, 1, 1) * E(2, 1, 1) * E(2, 2, 2) * Rational(3, 2) - E(2, 1, 2);
  CHECK(p.str() == "3/2*E[1,1]^2*E[2,2] - E[1,2]");
  CHECK(UElement::parse(2, p.str()) == p);
  CHECK(UElement::parse(2, "0").is_zero());
  CHECK(UElement::parse(3, "E[2,3]*E[3,2] + 1/3") ==
        E(3, 2, 3) * E(3, 3, 2) + UElement::scalar(3, Rational(1, 3)));
}

TEST_CASE("quadratic casimir is central") {
  // C = sum_{i,j} E_ij E_ji, straightened
  UElement c(2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) c += E(2, i, j) * E(2, j, i);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(commutator(c, E(2, i, j)).is_zero());

  UElement c3(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) c3 += E(3, i, j) * E(3, j, i);
  CHECK(commutator(c3, E(3, 1, 3)).is_zero());
  CHECK(commutator(c3, E(3, 2, 1)).is_zero());
}

TEST_CASE("symbol keeps the top filtration layer") {
  auto vt = VarTable::gl(2);
  UElement u = E(2, 2, 1) * E(2, 1, 2);  // = E_12 E_21 + E_22 - E_11
  CPoly top = symbol(u, 2);
  CHECK(top == CPoly::var(vt, 1) * CPoly::var(vt, 2));
  // the degree-1 layer of the same element
  CHECK(symbol(u - E(2, 1, 2) * E(2, 2, 1), 1) == CPoly::var(vt, 3) - CPoly::var(vt, 0));
  CHECK(symbol(UElement(2), 0).is_zero());
  CHECK_THROWS_AS(symbol(u, 1), std::invalid_argument);
}

TEST_CASE("poisson bracket mirrors the commutator one degree down") {
  auto vt = VarTable::gl(2);
  CPoly e11 = CPoly::var(vt, 0), e12 = CPoly::var(vt, 1);
  CPoly e21 = CPoly::var(vt, 2), e22 = CPoly::var(vt, 3);

  // on generators the bracket is the Lie bracket itself
  CHECK(poisson(e12, e21) == e11 - e22);
  CHECK(poisson(e11, e12) == e12);
  CHECK(poisson(e11, e22).is_zero());

  // Leibniz on a quadratic pair
  CHECK(poisson(e11 * e22, e12) == e12 * e22 - e11 * e12);

  // symbol([a,b], p+q-1) = {symbol(a,p), symbol(b,q)} for filtered a, b
  UElement a = E(2, 1, 2) * E(2, 2, 1), b = E(2, 1, 1) * E(2, 1, 2);
  CPoly top = symbol(commutator(a, b), 3);
  CHECK_FALSE(top.is_zero());
  CHECK(top == poisson(symbol(a, 2), symbol(b, 2)));
  CHECK(top == e11 * e12 * e22 - e11 * e11 * e12);
}
