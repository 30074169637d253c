#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support.hpp"

using namespace quivloc;
using namespace testsupport;

namespace {

Variable v(std::size_t k) { return Variable::arrowVar(k); }
Polynomial X(std::size_t k) { return Polynomial::variable(v(k)); }

const VariableNames abc({"i", "j"}, {"a", "b", "c"});

}  // namespace

TEST_CASE("elementarySymmetric") {
  auto r1 = Variable::flatRoot(0, 1), r2 = Variable::flatRoot(0, 2);
  CHECK(elementarySymmetric(1, {r1, r2}) == Polynomial::variable(r1) + Polynomial::variable(r2));
  CHECK(elementarySymmetric(2, {v(0), v(1), v(2)}) == X(0) * X(1) + X(0) * X(2) + X(1) * X(2));
  CHECK(elementarySymmetric(0, {v(0)}) == Polynomial(1));
  CHECK(elementarySymmetric(0, {}) == Polynomial(1));
  CHECK_THROWS_AS(elementarySymmetric(3, {v(0), v(1)}), DomainError);
}

TEST_CASE("generating function of elementary symmetric functions") {
  // sum_k e_k t^k = prod (1 + t v), with t an extra variable.
  for (std::size_t n = 0; n <= 4; ++n) {
    std::vector<Variable> vars;
    for (std::size_t k = 0; k < n; ++k) vars.push_back(v(k));
    Polynomial t = X(9);
    Polynomial lhs, rhs(1);
    for (std::size_t k = 0; k <= n; ++k) lhs += elementarySymmetric(k, vars) * t.pow(static_cast<unsigned>(k));
    for (const auto& var : vars) rhs *= Polynomial(1) + t * Polynomial::variable(var);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("substitute") {
  CHECK((X(0) * X(1)).substitute({{v(0), Polynomial()}}).isZero());
  auto xi = Variable::flatRoot(0, 1), xj = Variable::flatRoot(1, 1);
  Polynomial diff = Polynomial::variable(xi) - Polynomial::variable(xj);
  CHECK(diff.substitute({{xi, X(0)}, {xj, Polynomial()}}) == X(0));
  // h -> -x_0 kills (x_0 + h)(x_1 + h).
  Polynomial h = X(5);
  CHECK(((X(0) + h) * (X(1) + h)).substitute({{v(5), -X(0)}}).isZero());
  // Simultaneous, not sequential.
  CHECK((X(0) + Rational(2) * X(1)).substitute({{v(0), X(1)}, {v(1), X(0)}}) == X(1) + Rational(2) * X(0));
}

TEST_CASE("serialization") {
  CHECK(serialize(Polynomial(), abc) == "0");
  Polynomial p = Rational(2) * (X(0) + X(1) + X(2));
  CHECK(serialize(p, abc) == "2*x_a + 2*x_b + 2*x_c");
  Polynomial q = Rational(-1, 3) * X(2).pow(2) + X(1) + Rational(2) * X(0);
  CHECK(serialize(q, abc) == "2*x_a + x_b - 1/3*x_c^2");
  CHECK(serialize(Polynomial(Rational(-7, 2)), abc) == "-7/2");
  CHECK(serialize(Polynomial::variable(Variable::flatRoot(1, 2)), abc) == "xi[j;2]");
  Character chi({1, -1, 0});
  CHECK(serialize(Polynomial::variable(Variable::chernRoot(0, chi, 1)), abc) == "xi[i;x_a-x_b;1]");
  CHECK(serialize(Polynomial::variable(Variable::chernRoot(0, Character::zero(3), 2)), abc) == "xi[i;0;2]");
}

TEST_CASE("parser accepts the canonical grammar and more") {
  CHECK(parsePolynomial("2*x_a + 2*x_b + 2*x_c", abc) == Rational(2) * (X(0) + X(1) + X(2)));
  CHECK(parsePolynomial("2*(x_a+x_b+x_c)", abc) == Rational(2) * (X(0) + X(1) + X(2)));
  CHECK(parsePolynomial("(x_a - x_b)^2", abc) == (X(0) - X(1)).pow(2));
  CHECK(parsePolynomial("-1/3*x_c^2", abc) == Rational(-1, 3) * X(2).pow(2));
  CHECK(parsePolynomial("xi[i;x_a-x_b;1]", abc) ==
        Polynomial::variable(Variable::chernRoot(0, Character({1, -1, 0}), 1)));
  CHECK(parsePolynomial("xi[j;3]", abc) == Polynomial::variable(Variable::flatRoot(1, 3)));
  CHECK_THROWS_AS(parsePolynomial("x_q", abc), ParseError);
  CHECK_THROWS_AS(parsePolynomial("2*", abc), ParseError);
  CHECK_THROWS_AS(parsePolynomial("(x_a", abc), ParseError);
  CHECK_THROWS_AS(parsePolynomial("1/0", abc), ParseError);
}

TEST_CASE("serialization round trip on random polynomials") {
  std::mt19937 rng(2024);
  std::vector<Variable> vars{v(0), v(1), v(2), Variable::flatRoot(0, 1), Variable::flatRoot(1, 2),
                             Variable::chernRoot(1, Character({0, 1, -2}), 1)};
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p = randomPolynomial(rng, vars, 1 + trial % 6, 3);
    std::string s = serialize(p, abc);
    Polynomial back = parsePolynomial(s, abc);
    CHECK(back == p);
    CHECK(serialize(back, abc) == s);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  std::vector<Variable> vars{v(0), v(1), Variable::flatRoot(0, 1)};
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial a = randomPolynomial(rng, vars, 3, 2), b = randomPolynomial(rng, vars, 3, 2),
               c = randomPolynomial(rng, vars, 3, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).isZero());
  }
}

TEST_CASE("isSymmetricUnderBlocks") {
  auto r1 = Variable::flatRoot(0, 1), r2 = Variable::flatRoot(0, 2);
  Polynomial a = Polynomial::variable(r1), b = Polynomial::variable(r2);
  CHECK(isSymmetricUnderBlocks(a + b, {{r1, r2}}));
  CHECK_FALSE(isSymmetricUnderBlocks(a - b, {{r1, r2}}));
  CHECK(isSymmetricUnderBlocks(a * b + X(0), {{r1, r2}}));
}

TEST_CASE("dividedByLinear") {
  auto r1 = Variable::flatRoot(0, 1), r2 = Variable::flatRoot(0, 2);
  Polynomial a = Polynomial::variable(r1), b = Polynomial::variable(r2);
  CHECK((b * b - a * a).dividedByLinear(r2, a) == a + b);
  CHECK_THROWS_AS((b * b).dividedByLinear(r2, a), InvariantViolation);
}

TEST_CASE("degree and homogeneity") {
  CHECK(Polynomial().degree() == -1);
  CHECK((X(0) * X(1) + X(2).pow(2)).isHomogeneous());
  CHECK_FALSE((X(0) + Polynomial(1)).isHomogeneous());
  CHECK((X(0) + X(1).pow(3)).homogeneousComponent(3) == X(1).pow(3));
}
