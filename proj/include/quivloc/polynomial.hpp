#ifndef QUIVLOC_POLYNOMIAL_HPP
#define QUIVLOC_POLYNOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace quivloc {

using Rational = mpq_class;
class Quiver;

/// Integer vector indexed by the arrows of a quiver; an element of the
/// character lattice of the arrow torus.
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<std::int64_t> c) : c_(std::move(c)) {}
  static Character zero(std::size_t arrows) { return Character(std::vector<std::int64_t>(arrows, 0)); }
  static Character unit(std::size_t arrows, std::size_t a);

  std::size_t size() const { return c_.size(); }
  std::int64_t operator[](std::size_t a) const { return c_[a]; }
  const std::vector<std::int64_t>& entries() const { return c_; }
  bool isZero() const;

  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  Character operator-() const;

  auto operator<=>(const Character&) const = default;

 private:
  std::vector<std::int64_t> c_;
};

enum class VariableKind : std::uint8_t { Arrow = 0, FlatRoot = 1, ChernRoot = 2 };

/// Indeterminates of the ambient rings:
///   Arrow(a)             x_a, the equivariant parameter of arrow a;
///   FlatRoot(v, s)       the s-th Chern root at vertex v of the full group;
///   ChernRoot(v, chi, s) the s-th Chern root of the weight-chi piece at v
///                        on a fixed-point component.
/// The total order is (kind, arrow, vertex, character, slot).
struct Variable {
  VariableKind kind = VariableKind::Arrow;
  std::uint32_t arrow = 0;
  std::uint32_t vertex = 0;
  Character character;
  std::uint32_t slot = 0;

  static Variable arrowVar(std::size_t a);
  static Variable flatRoot(std::size_t vertex, std::size_t slot);
  static Variable chernRoot(std::size_t vertex, Character chi, std::size_t slot);

  auto operator<=>(const Variable&) const = default;
};

/// Sparse monomial: variables in increasing order with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(const Variable& v, std::uint32_t e = 1);
  /// Factors may be unsorted and repeated; zero exponents are dropped.
  static Monomial fromFactors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return f_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(const Variable& v) const;
  bool isOne() const { return f_.empty(); }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return f_ == o.f_; }

 private:
  std::vector<Factor> f_;
  std::uint32_t degree_ = 0;
};

/// Canonical term order: ascending total degree, then descending lex on
/// exponent vectors (the smallest variable is the most significant).
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact multivariate polynomial over the rationals.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, TermOrder>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Polynomial variable(const Variable& v) { return term(Monomial(v), 1); }
  static Polynomial term(const Monomial& m, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool isHomogeneous() const;
  Polynomial homogeneousComponent(unsigned deg) const;
  Rational coefficient(const Monomial& m) const;
  std::set<Variable> variables() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  Polynomial pow(unsigned e) const;

  void addTerm(const Monomial& m, const Rational& c);

  /// Variable renaming (must be injective on the variables of this polynomial).
  Polynomial renamed(const std::map<Variable, Variable>& renaming) const;
  /// Simultaneous substitution; unassigned variables pass through.
  Polynomial substitute(const std::map<Variable, Polynomial>& assignment) const;
  /// Exact quotient by (v - c) where c does not involve v. Throws
  /// InvariantViolation when the division leaves a remainder.
  Polynomial dividedByLinear(const Variable& v, const Polynomial& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

 private:
  Terms terms_;
};

/// Sum_a chi_a x_a.
Polynomial linearForm(const Character& chi);

/// e_k(vars); e_0 = 1. Throws DomainError when k > vars.size().
Polynomial elementarySymmetric(std::size_t k, const std::vector<Variable>& vars);

/// True iff p is invariant under every permutation of each block.
bool isSymmetricUnderBlocks(const Polynomial& p, const std::vector<std::vector<Variable>>& blocks);

/// Display names for vertices and arrows, used by the textual grammar.
/// Without explicit names, vertices print as v0, v1, ... and arrows as
/// a0, a1, ...
class VariableNames {
 public:
  VariableNames() = default;
  VariableNames(std::vector<std::string> vertices, std::vector<std::string> arrows);
  static VariableNames fromQuiver(const Quiver& q);
  static VariableNames generic(std::size_t vertices, std::size_t arrows);

  std::size_t arrowCount() const { return arrows_.size(); }
  std::string vertexName(std::size_t v) const;
  std::string arrowName(std::size_t a) const;
  std::optional<std::size_t> vertexIndex(const std::string& name) const;
  std::optional<std::size_t> arrowIndex(const std::string& name) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> arrows_;
};

/// Canonical text form, e.g. `2*x_a + x_b - 1/3*x_c^2`; "0" for zero.
/// Flat roots print as `xi[v;s]`, Chern roots as `xi[v;<character>;s]` where
/// the character is written as a linear form in the x_a (or `0`).
std::string serialize(const Polynomial& p, const VariableNames& names);
std::string serialize(const Variable& v, const VariableNames& names);
std::string serialize(const Character& chi, const VariableNames& names);
std::string toLatex(const Polynomial& p, const VariableNames& names);

/// Parser for the canonical grammar, additionally accepting parentheses and
/// integer powers of parenthesized expressions. Throws ParseError.
Polynomial parsePolynomial(const std::string& text, const VariableNames& names);

}  // namespace quivloc

#endif  // QUIVLOC_POLYNOMIAL_HPP
