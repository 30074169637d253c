#include "quivloc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "quivloc/error.hpp"
#include "quivloc/quiver.hpp"

namespace quivloc {

// ---------------------------------------------------------------------------
// Character

Character Character::unit(std::size_t arrows, std::size_t a) {
  Character c = zero(arrows);
  c.c_.at(a) = 1;
  return c;
}

bool Character::isZero() const {
  return std::all_of(c_.begin(), c_.end(), [](auto x) { return x == 0; });
}

Character Character::operator+(const Character& o) const {
  if (o.size() != size()) throw DomainError("character lattice size mismatch");
  Character r(*this);
  for (std::size_t a = 0; a < c_.size(); ++a) r.c_[a] += o.c_[a];
  return r;
}

Character Character::operator-(const Character& o) const { return *this + (-o); }

Character Character::operator-() const {
  Character r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

// ---------------------------------------------------------------------------
// Variable / Monomial

Variable Variable::arrowVar(std::size_t a) {
  Variable v;
  v.kind = VariableKind::Arrow;
  v.arrow = static_cast<std::uint32_t>(a);
  return v;
}

Variable Variable::flatRoot(std::size_t vertex, std::size_t slot) {
  Variable v;
  v.kind = VariableKind::FlatRoot;
  v.vertex = static_cast<std::uint32_t>(vertex);
  v.slot = static_cast<std::uint32_t>(slot);
  return v;
}

Variable Variable::chernRoot(std::size_t vertex, Character chi, std::size_t slot) {
  Variable v;
  v.kind = VariableKind::ChernRoot;
  v.vertex = static_cast<std::uint32_t>(vertex);
  v.character = std::move(chi);
  v.slot = static_cast<std::uint32_t>(slot);
  return v;
}

Monomial::Monomial(const Variable& v, std::uint32_t e) {
  if (e > 0) {
    f_.emplace_back(v, e);
    degree_ = e;
  }
}

Monomial Monomial::fromFactors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.f_.empty() && m.f_.back().first == v)
      m.f_.back().second += e;
    else
      m.f_.emplace_back(std::move(v), e);
    m.degree_ += e;
  }
  return m;
}

std::uint32_t Monomial::exponent(const Variable& v) const {
  auto it = std::lower_bound(f_.begin(), f_.end(), v,
                             [](const Factor& f, const Variable& x) { return f.first < x; });
  return (it != f_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : f_)
    if (other.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.f_.reserve(f_.size() + o.f_.size());
  auto i = f_.begin();
  auto j = o.f_.begin();
  while (i != f_.end() || j != o.f_.end()) {
    if (j == o.f_.end() || (i != f_.end() && i->first < j->first)) {
      m.f_.push_back(*i++);
    } else if (i == f_.end() || j->first < i->first) {
      m.f_.push_back(*j++);
    } else {
      m.f_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.degree_ = degree_ + o.degree_;
  return m;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    const auto& [va, ea] = fa[i];
    const auto& [vb, eb] = fb[j];
    if (va == vb) {
      if (ea != eb) return ea > eb;
      ++i;
      ++j;
    } else {
      // The side carrying the smaller variable has the larger exponent there.
      return va < vb;
    }
  }
  return i < fa.size() && j == fb.size();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

bool Polynomial::isHomogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Polynomial Polynomial::homogeneousComponent(unsigned deg) const {
  Polynomial p;
  for (const auto& [m, c] : terms_)
    if (m.degree() == deg) p.terms_.emplace_hint(p.terms_.end(), m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Variable> Polynomial::variables() const {
  std::set<Variable> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) vars.insert(v);
  return vars;
}

void Polynomial::addTerm(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.addTerm(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::renamed(const std::map<Variable, Variable>& renaming) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(m.factors().size());
    for (const auto& [v, e] : m.factors()) {
      auto it = renaming.find(v);
      factors.emplace_back(it == renaming.end() ? v : it->second, e);
    }
    r.addTerm(Monomial::fromFactors(std::move(factors)), c);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::map<Variable, Polynomial>& assignment) const {
  std::map<std::pair<Variable, std::uint32_t>, Polynomial> powers;
  auto power = [&](const Variable& v, std::uint32_t e, const Polynomial& base) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, base.pow(e)).first;
    return it->second;
  };

  Polynomial r;
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> kept;
    Polynomial acc(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        kept.emplace_back(v, e);
      else
        acc *= power(v, e, it->second);
      if (acc.isZero()) break;
    }
    if (acc.isZero()) continue;
    Monomial rest = Monomial::fromFactors(std::move(kept));
    for (const auto& [am, ac] : acc.terms_) r.addTerm(am * rest, ac);
  }
  return r;
}

Polynomial Polynomial::dividedByLinear(const Variable& v, const Polynomial& c) const {
  if (c.variables().count(v)) throw DomainError("divisor constant term involves the division variable");
  // Split p = sum_k p_k v^k with p_k free of v.
  std::map<std::uint32_t, Polynomial> coeffs;
  for (const auto& [m, coeff] : terms_) {
    std::uint32_t e = m.exponent(v);
    std::vector<Monomial::Factor> rest;
    for (const auto& f : m.factors())
      if (!(f.first == v)) rest.push_back(f);
    coeffs[e].addTerm(Monomial::fromFactors(std::move(rest)), coeff);
  }
  if (coeffs.empty()) return {};
  // Synthetic division by (v - c): q_{k-1} = p_k + c q_k, remainder p_0 + c q_0.
  std::uint32_t top = coeffs.rbegin()->first;
  Polynomial quotient;
  Polynomial carry;
  for (std::uint32_t k = top; k >= 1; --k) {
    auto it = coeffs.find(k);
    Polynomial qk = (it == coeffs.end() ? Polynomial() : it->second) + c * carry;
    Monomial vpow(v, k - 1);
    for (const auto& [m, coeff] : qk.terms_) quotient.addTerm(m * vpow, coeff);
    carry = std::move(qk);
  }
  auto it0 = coeffs.find(0);
  Polynomial remainder = (it0 == coeffs.end() ? Polynomial() : it0->second) + c * carry;
  if (!remainder.isZero()) throw InvariantViolation("exact division by a linear factor left a remainder");
  return quotient;
}

Polynomial linearForm(const Character& chi) {
  Polynomial p;
  for (std::size_t a = 0; a < chi.size(); ++a)
    if (chi[a] != 0) p.addTerm(Monomial(Variable::arrowVar(a)), Rational(chi[a]));
  return p;
}

Polynomial elementarySymmetric(std::size_t k, const std::vector<Variable>& vars) {
  if (k > vars.size()) throw DomainError("elementary symmetric degree exceeds the number of variables");
  // e[j] after processing a prefix of vars.
  std::vector<Polynomial> e(k + 1);
  e[0] = Polynomial(1);
  for (const auto& v : vars) {
    Polynomial x = Polynomial::variable(v);
    for (std::size_t j = k; j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e[k];
}

bool isSymmetricUnderBlocks(const Polynomial& p, const std::vector<std::vector<Variable>>& blocks) {
  for (const auto& block : blocks) {
    // Adjacent transpositions generate the symmetric group of the block.
    for (std::size_t r = 0; r + 1 < block.size(); ++r) {
      std::map<Variable, Variable> swap{{block[r], block[r + 1]}, {block[r + 1], block[r]}};
      if (!(p.renamed(swap) == p)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Names and text

VariableNames::VariableNames(std::vector<std::string> vertices, std::vector<std::string> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {}

VariableNames VariableNames::fromQuiver(const Quiver& q) {
  std::vector<std::string> arrows;
  for (const auto& a : q.arrows()) arrows.push_back(a.id);
  return VariableNames(q.vertexNames(), std::move(arrows));
}

VariableNames VariableNames::generic(std::size_t vertices, std::size_t arrows) {
  std::vector<std::string> vs, as;
  for (std::size_t v = 0; v < vertices; ++v) vs.push_back("v" + std::to_string(v));
  for (std::size_t a = 0; a < arrows; ++a) as.push_back("a" + std::to_string(a));
  return VariableNames(std::move(vs), std::move(as));
}

std::string VariableNames::vertexName(std::size_t v) const {
  return v < vertices_.size() ? vertices_[v] : "v" + std::to_string(v);
}

std::string VariableNames::arrowName(std::size_t a) const {
  return a < arrows_.size() ? arrows_[a] : "a" + std::to_string(a);
}

namespace {

std::optional<std::size_t> lookup(const std::vector<std::string>& names, const std::string& name, char prefix) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  if (names.empty() && name.size() > 1 && name[0] == prefix &&
      std::all_of(name.begin() + 1, name.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    return static_cast<std::size_t>(std::stoul(name.substr(1)));
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> VariableNames::vertexIndex(const std::string& name) const {
  return lookup(vertices_, name, 'v');
}

std::optional<std::size_t> VariableNames::arrowIndex(const std::string& name) const {
  return lookup(arrows_, name, 'a');
}

std::string serialize(const Character& chi, const VariableNames& names) {
  std::string s = serialize(linearForm(chi), names);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::string serialize(const Variable& v, const VariableNames& names) {
  switch (v.kind) {
    case VariableKind::Arrow:
      return "x_" + names.arrowName(v.arrow);
    case VariableKind::FlatRoot:
      return "xi[" + names.vertexName(v.vertex) + ";" + std::to_string(v.slot) + "]";
    case VariableKind::ChernRoot:
      return "xi[" + names.vertexName(v.vertex) + ";" + serialize(v.character, names) + ";" +
             std::to_string(v.slot) + "]";
  }
  return "?";
}

namespace {

std::string monomialText(const Monomial& m, const VariableNames& names) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += "*";
    s += serialize(v, names);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string latexVariable(const Variable& v, const VariableNames& names) {
  switch (v.kind) {
    case VariableKind::Arrow:
      return "x_{" + names.arrowName(v.arrow) + "}";
    case VariableKind::FlatRoot:
      return "\\xi_{" + names.vertexName(v.vertex) + "," + std::to_string(v.slot) + "}";
    case VariableKind::ChernRoot:
      return "\\xi_{" + names.vertexName(v.vertex) + "," + serialize(v.character, names) + "," +
             std::to_string(v.slot) + "}";
  }
  return "?";
}

}  // namespace

std::string serialize(const Polynomial& p, const VariableNames& names) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (m.isOne()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += monomialText(m, names);
    }
  }
  return out;
}

std::string toLatex(const Polynomial& p, const VariableNames& names) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string coeff;
    if (mag.get_den() != 1)
      coeff = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    else
      coeff = mag.get_str();
    if (m.isOne()) {
      out += coeff;
      continue;
    }
    if (mag != 1) out += coeff + " ";
    bool firstFactor = true;
    for (const auto& [v, e] : m.factors()) {
      if (!firstFactor) out += " ";
      firstFactor = false;
      out += latexVariable(v, names);
      if (e > 1) out += "^{" + std::to_string(e) + "}";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over
//   expr   := [+|-] term { (+|-) term }
//   term   := factor { * factor }
//   factor := number | variable [^ n] | ( expr ) [^ n]

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, const VariableNames& names) : s_(text), names_(names) {}

  Polynomial parseAll() {
    Polynomial p = parseExpr();
    skipSpace();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" + s_ +
                     "'");
  }

  void skipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skipSpace();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial parseExpr() {
    Polynomial result;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial t = parseTerm();
    result = negate ? -t : t;
    for (;;) {
      if (accept('+'))
        result += parseTerm();
      else if (accept('-'))
        result -= parseTerm();
      else
        break;
    }
    return result;
  }

  Polynomial parseTerm() {
    Polynomial p = parseFactor();
    while (accept('*')) p *= parseFactor();
    return p;
  }

  unsigned parseUnsigned() {
    skipSpace();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    return static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
  }

  Polynomial maybePower(Polynomial base) {
    if (accept('^')) return base.pow(parseUnsigned());
    return base;
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected an identifier");
    return s_.substr(start, pos_ - start);
  }

  std::string untilAny(const std::string& stops) {
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char ch = s_[pos_];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && stops.find(ch) != std::string::npos) break;
      ++pos_;
    }
    if (pos_ == s_.size()) fail("unterminated variable");
    return s_.substr(start, pos_ - start);
  }

  Character parseCharacter(const std::string& text) {
    Polynomial p = PolynomialParser(text, names_).parseAll();
    std::vector<std::int64_t> c(names_.arrowCount(), 0);
    for (const auto& [m, coeff] : p.terms()) {
      if (m.degree() != 1 || m.factors().front().first.kind != VariableKind::Arrow || coeff.get_den() != 1)
        fail("character must be an integral linear form in arrow variables");
      auto a = m.factors().front().first.arrow;
      if (a >= c.size()) c.resize(a + 1, 0);
      c[a] = coeff.get_num().get_si();
    }
    return Character(std::move(c));
  }

  Polynomial parseVariable() {
    // at 'x'
    if (s_.compare(pos_, 3, "xi[") == 0) {
      pos_ += 3;
      std::string vertex = untilAny(";]");
      auto vi = names_.vertexIndex(vertex);
      if (!vi) fail("unknown vertex '" + vertex + "'");
      if (!accept(';')) fail("expected ';'");
      std::string second = untilAny(";]");
      if (accept(']')) {
        unsigned slot = static_cast<unsigned>(std::stoul(second));
        return Polynomial::variable(Variable::flatRoot(*vi, slot));
      }
      if (!accept(';')) fail("expected ';' or ']'");
      Character chi = parseCharacter(second);
      unsigned slot = parseUnsigned();
      if (!accept(']')) fail("expected ']'");
      return Polynomial::variable(Variable::chernRoot(*vi, std::move(chi), slot));
    }
    if (s_.compare(pos_, 2, "x_") == 0) {
      pos_ += 2;
      std::string name = identifier();
      auto ai = names_.arrowIndex(name);
      if (!ai) fail("unknown arrow '" + name + "'");
      return Polynomial::variable(Variable::arrowVar(*ai));
    }
    fail("unknown variable");
  }

  Polynomial parseFactor() {
    skipSpace();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial inner = parseExpr();
      if (!accept(')')) fail("expected ')'");
      return maybePower(std::move(inner));
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num = s_.substr(start, pos_ - start);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected a denominator");
        num += "/" + s_.substr(dstart, pos_ - dstart);
      }
      Rational r(num);
      if (r.get_den() == 0) fail("zero denominator");
      r.canonicalize();
      return maybePower(Polynomial(r));
    }
    if (ch == 'x') return maybePower(parseVariable());
    fail(std::string("unexpected character '") + ch + "'");
  }

  const std::string& s_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parsePolynomial(const std::string& text, const VariableNames& names) {
  return PolynomialParser(text, names).parseAll();
}

}  // namespace quivloc
