// Shared fixtures and independent oracles for the test executables.
#ifndef QUIVLOC_TESTS_SUPPORT_HPP
#define QUIVLOC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "quivloc/covering.hpp"
#include "quivloc/error.hpp"
#include "quivloc/polynomial.hpp"
#include "quivloc/presentation.hpp"
#include "quivloc/quiver.hpp"

namespace testsupport {

using namespace quivloc;

inline Quiver makeQuiver(std::vector<std::string> vertices, std::vector<RawArrow> arrows) {
  return validateQuiver(RawQuiver{std::move(vertices), std::move(arrows)});
}

/// i -> j with arrows named 0..m-1.
inline Quiver kronecker(std::size_t m) {
  std::vector<RawArrow> arrows;
  for (std::size_t a = 0; a < m; ++a) arrows.push_back({std::to_string(a), "i", "j"});
  return makeQuiver({"i", "j"}, arrows);
}

inline Quiver threeKronecker() {
  return makeQuiver({"i", "j"}, {{"a", "i", "j"}, {"b", "i", "j"}, {"c", "i", "j"}});
}

/// Sources i1, i2; sinks j1, j2, j3; arrow "ji" from source i to sink j.
inline Quiver k23() {
  std::vector<RawArrow> arrows;
  for (int j = 1; j <= 3; ++j)
    for (int i = 1; i <= 2; ++i)
      arrows.push_back({std::to_string(j) + std::to_string(i), "i" + std::to_string(i), "j" + std::to_string(j)});
  return makeQuiver({"i1", "i2", "j1", "j2", "j3"}, arrows);
}

inline StabilityCondition k23Theta() { return StabilityCondition({3, 3, -2, -2, -2}); }

inline Quiver pathQuiver() { return makeQuiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}); }

inline Polynomial x(const Quiver& q, const std::string& arrow) {
  return Polynomial::variable(Variable::arrowVar(*q.arrowIndex(arrow)));
}

/// Turns compact notation such as "2(a+b+c)", "a^2 - ab + 2b^2" into the
/// canonical grammar over single-letter arrow names.
inline std::string expandCompact(const std::string& s) {
  std::string out;
  char prev = 0;
  for (char c : s) {
    if (c == ' ') continue;
    bool prevAtom = std::isalnum(static_cast<unsigned char>(prev)) || prev == ')';
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (prevAtom && prev != '^') out += '*';
      out += "x_";
      out += c;
    } else if (c == '(') {
      if (prevAtom) out += '*';
      out += c;
    } else {
      out += c;
    }
    prev = c;
  }
  return out;
}

inline Polynomial compact(const Quiver& q, const std::string& s) {
  return parsePolynomial(expandCompact(s), VariableNames::fromQuiver(q));
}

/// Exact evaluation of a polynomial at a point (missing variables are 0).
inline Rational evaluate(const Polynomial& p, const std::map<Variable, Rational>& point) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      Rational value = it == point.end() ? Rational(0) : it->second;
      for (std::uint32_t k = 0; k < e; ++k) term *= value;
    }
    total += term;
  }
  return total;
}

/// Rank of a small dense rational matrix by Gaussian elimination.
inline std::size_t matrixRank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Random polynomial in the given variables with small integer coefficients.
inline Polynomial randomPolynomial(std::mt19937& rng, const std::vector<Variable>& vars, int terms, int maxExp) {
  std::uniform_int_distribution<int> coef(-5, 5), exp(0, maxExp), den(1, 3);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> f;
    for (const auto& v : vars) {
      int e = exp(rng);
      if (e) f.emplace_back(v, static_cast<std::uint32_t>(e));
    }
    Rational c(coef(rng), den(rng));
    c.canonicalize();
    p.addTerm(Monomial::fromFactors(f), c);
  }
  return p;
}

// 3-Kronecker component order used by the displayed column vectors: the star
// first, then the zigzags by their arrow word, reversal identified.
inline const std::vector<std::string>& zigzagWords() {
  static const std::vector<std::string> words{"abab", "abac", "abca", "abcb", "acab", "acac",
                                              "acbc", "babc", "bacb", "bcac", "bcbc", "cabc"};
  return words;
}

/// Arrow word of a zigzag covering vector, or "" for the star.
inline std::string zigzagWord(const Quiver& q, const CoveringDimVector& beta) {
  std::vector<CoveringVertex> is, js;
  for (const auto& [v, m] : beta.entries) (v.vertex == 0 ? is : js).push_back(v);
  if (is.size() == 1) return "";
  // Edges between i- and j-points whose characters differ by a unit vector.
  auto label = [&](const CoveringVertex& i, const CoveringVertex& j) -> char {
    Character diff = j.character - i.character;
    for (std::size_t a = 0; a < q.arrowCount(); ++a)
      if (diff == Character::unit(q.arrowCount(), a)) return q.arrow(a).id[0];
    return 0;
  };
  auto degree = [&](const CoveringVertex& j) {
    int d = 0;
    for (const auto& i : is) d += label(i, j) ? 1 : 0;
    return d;
  };
  CoveringVertex current = *std::find_if(js.begin(), js.end(), [&](const auto& j) { return degree(j) == 1; });
  std::vector<CoveringVertex> visited{current};
  std::string word;
  bool atJ = true;
  for (;;) {
    bool moved = false;
    for (const auto& next : atJ ? is : js) {
      if (std::find(visited.begin(), visited.end(), next) != visited.end()) continue;
      char l = atJ ? label(next, current) : label(current, next);
      if (!l) continue;
      word += l;
      visited.push_back(next);
      current = next;
      atJ = !atJ;
      moved = true;
      break;
    }
    if (!moved) break;
  }
  std::string rev(word.rbegin(), word.rend());
  return std::min(word, rev);
}

/// Position of a component in the displayed order (0 = star).
inline std::size_t displayedPosition(const Quiver& q, const CoveringDimVector& beta) {
  std::string w = zigzagWord(q, beta);
  if (w.empty()) return 0;
  auto it = std::find(zigzagWords().begin(), zigzagWords().end(), w);
  if (it == zigzagWords().end()) throw InvariantViolation("unexpected zigzag word " + w);
  return 1 + static_cast<std::size_t>(it - zigzagWords().begin());
}

// The four displayed 13-entry columns for z_{1,1}, z_{2,1}, z_{1,2}, z_{1,3}.
inline const std::vector<std::vector<std::string>>& displayedColumns() {
  static const std::vector<std::vector<std::string>> cols{
      {"2(a+b+c)", "3a+3b", "3a+b+2c", "4a+b+c", "2a+3b+c", "3a+2b+c", "3a+3c", "2a+b+3c", "a+3b+2c", "a+4b+c",
       "a+2b+3c", "3b+3c", "a+b+4c"},
      {"a^2+b^2+c^2", "2a^2 - ab + 2b^2", "2a^2 - ac + bc + c^2", "2a^2 + bc", "a^2 - ab + 2b^2 + ac",
       "2a^2 - ab + b^2 + bc", "2a^2 - ac + 2c^2", "a^2 + ab - ac + 2c^2", "2b^2 + ac - bc + c^2", "2b^2 + ac",
       "ab + b^2 - bc + 2c^2", "2b^2 - bc + 2c^2", "ab + 2c^2"},
      {"2ab+2ac+2bc", "a^2 + 4ab + b^2", "a^2 + b^2 + 4ac", "2a^2 + 2ab + b^2 + 2ac - 2bc + c^2",
       "4ab + b^2 + c^2", "a^2 + 4ab + c^2", "a^2 + 4ac + c^2", "b^2 + 4ac + c^2", "a^2 + b^2 + 4bc",
       "a^2 + 2ab + 2b^2 - 2ac + 2bc + c^2", "a^2 + 4bc + c^2", "b^2 + 4bc + c^2",
       "a^2 - 2ab + b^2 + 2ac + 2bc + 2c^2"},
      {"2abc", "a^2b + ab^2", "-a^2b + ab^2 + 2a^2c", "a^2b + ab^2 + a^2c - 2abc + ac^2", "2ab^2 - b^2c + bc^2",
       "2a^2b - a^2c + ac^2", "a^2c + ac^2", "b^2c + 2ac^2 - bc^2", "a^2b - ab^2 + 2b^2c",
       "a^2b + ab^2 - 2abc + b^2c + bc^2", "a^2c - ac^2 + 2bc^2", "b^2c + bc^2",
       "a^2c - 2abc + b^2c + ac^2 + bc^2"}};
  return cols;
}

/// (k, l) of the displayed columns, in order.
inline const std::vector<std::pair<std::size_t, std::size_t>>& displayedIndices() {
  static const std::vector<std::pair<std::size_t, std::size_t>> idx{{1, 1}, {2, 1}, {1, 2}, {1, 3}};
  return idx;
}

// K(2,3) trees in the displayed order, as 0/1 matrices (rows j, columns i).
inline const std::vector<std::string>& displayedTrees() {
  static const std::vector<std::string> trees{"11/10/01", "01/10/11", "01/11/10",
                                              "11/01/10", "10/01/11", "10/11/01"};
  return trees;
}

/// Arrow ids of a K(2,3) 0/1 matrix "r1/r2/r3".
inline std::vector<std::string> matrixArrows(const std::string& m) {
  std::vector<std::string> out;
  int row = 1, col = 1;
  for (char c : m) {
    if (c == '/') {
      ++row;
      col = 1;
      continue;
    }
    if (c == '1') out.push_back(std::to_string(row) + std::to_string(col));
    ++col;
  }
  return out;
}

/// Random Weyl-invariant polynomial times at most one arrow variable.
inline Polynomial randomSymmetric(std::mt19937& rng, const Quiver& q, const DimensionVector& d) {
  auto names = VariableNames::fromQuiver(q);
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2), arrow(0, static_cast<int>(q.arrowCount()));
  Polynomial p;
  for (int t = 0; t < 2; ++t) {
    auto monos = symmetricMonomials(d, static_cast<unsigned>(deg(rng)), names);
    if (monos.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    Polynomial term = monos[pick(rng)].expanded * Rational(coef(rng));
    int a = arrow(rng);
    if (a < static_cast<int>(q.arrowCount())) term *= Polynomial::variable(Variable::arrowVar(a));
    p += term;
  }
  return p;
}

/// Two-vertex quiver (possibly with a back arrow and a loop) and d1, d2 with |d1 + d2| <= 4.
struct Instance {
  Quiver q;
  DimensionVector d1, d2;
};

inline Instance randomInstance(std::mt19937& rng) {
  std::uniform_int_distribution<int> arrows(0, 2), dim(0, 2), shape(0, 2);
  std::vector<RawArrow> raw;
  int k = 0;
  for (int t = arrows(rng); t > 0; --t) raw.push_back({"a" + std::to_string(k++), "i", "j"});
  if (shape(rng) == 0) raw.push_back({"a" + std::to_string(k++), "j", "i"});
  if (shape(rng) == 0) raw.push_back({"a" + std::to_string(k++), "i", "i"});
  Quiver q = makeQuiver({"i", "j"}, raw);
  DimensionVector d1, d2;
  do {
    d1 = DimensionVector({dim(rng), dim(rng)});
    d2 = DimensionVector({dim(rng), dim(rng)});
  } while (d1.isZero() || d2.isZero() || (d1 + d2).total() > 4);
  return {q, d1, d2};
}

}  // namespace testsupport

#endif  // QUIVLOC_TESTS_SUPPORT_HPP
