#include "quivloc/toric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "quivloc/error.hpp"
#include "quivloc/linalg.hpp"

namespace quivloc {

namespace {

bool isSpanningTree(const Quiver& q, const std::vector<std::size_t>& arrows) {
  if (arrows.size() + 1 != q.vertexCount()) return false;
  std::vector<std::size_t> all(q.vertexCount());
  std::iota(all.begin(), all.end(), 0);
  return isConnectedSupport(q, arrows, all);
}

void forEachSubset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (current.size() == k) {
      fn(current);
      return;
    }
    for (std::size_t x = start; x + (k - current.size()) <= n; ++x) {
      current.push_back(x);
      rec(x + 1);
      current.pop_back();
    }
  };
  rec(0);
}

std::vector<std::size_t> without(const std::vector<std::size_t>& arrows, std::size_t a) {
  std::vector<std::size_t> out;
  for (auto b : arrows)
    if (b != a) out.push_back(b);
  return out;
}

void requireTreeInput(const Quiver& q, const StabilityCondition& theta) {
  if (!q.isConnected()) throw DomainError("thin moduli computations need a connected quiver");
  if (!q.isAcyclic()) throw DomainError("thin moduli computations need an acyclic quiver");
  requireNormalized(q, theta);
}

Polynomial killArrows(const Polynomial& f, const std::vector<std::size_t>& arrows) {
  std::map<Variable, Polynomial> zero;
  for (auto a : arrows) zero.emplace(Variable::arrowVar(a), Polynomial());
  return f.substitute(zero);
}

}  // namespace

bool ArrowSubset::contains(std::size_t a) const { return std::binary_search(arrows.begin(), arrows.end(), a); }

ArrowSubset classifyArrowSubset(const Quiver& q, std::vector<std::size_t> arrows) {
  std::sort(arrows.begin(), arrows.end());
  arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
  ArrowSubset s{arrows, ArrowSubsetKind::Other};
  if (isSpanningTree(q, arrows)) {
    s.kind = ArrowSubsetKind::SpanningTree;
  } else {
    for (auto a : arrows)
      if (isSpanningTree(q, without(arrows, a))) {
        s.kind = ArrowSubsetKind::SpanningAlmostTree;
        break;
      }
  }
  return s;
}

Monomial xI(const Quiver& q, const std::vector<bool>& inI) {
  if (inI.size() != q.vertexCount()) throw DomainError("vertex subset does not match the quiver");
  std::vector<Monomial::Factor> factors;
  for (std::size_t a = 0; a < q.arrowCount(); ++a) {
    const auto& arr = q.arrow(a);
    if (inI[arr.source] && !inI[arr.target]) factors.emplace_back(Variable::arrowVar(a), 1);
  }
  return Monomial::fromFactors(std::move(factors));
}

void requireNormalized(const Quiver& q, const StabilityCondition& theta) {
  if (theta.size() != q.vertexCount()) throw DomainError("stability condition does not match the quiver");
  if (theta(DimensionVector::thin(q.vertexCount())) != 0)
    throw DomainError("theta(1) must be 0; subtract a multiple of (1,...,1) scaled to make it so");
}

std::vector<Monomial> thinKernelGenerators(const Quiver& q, const StabilityCondition& theta, StabilityMode mode) {
  requireNormalized(q, theta);
  const std::size_t n = q.vertexCount();
  if (n >= 63) throw DomainError("too many vertices for subset enumeration");
  std::set<Monomial, TermOrder> gens;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    std::vector<bool> inI(n);
    std::vector<std::int64_t> e(n);
    for (std::size_t v = 0; v < n; ++v) {
      inI[v] = mask >> v & 1;
      e[v] = inI[v] ? 1 : 0;
    }
    std::int64_t value = theta(DimensionVector(std::move(e)));
    if (mode == StabilityMode::Semistable ? value > 0 : value >= 0) gens.insert(xI(q, inI));
  }
  return {gens.begin(), gens.end()};
}

std::vector<Monomial> minimalGenerators(const std::vector<Monomial>& gens) {
  std::vector<Monomial> out;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    bool minimal = true;
    for (std::size_t m = 0; m < gens.size() && minimal; ++m) {
      if (m == k || !gens[m].divides(gens[k])) continue;
      // Equal monomials: keep the first occurrence only.
      if (gens[m] == gens[k] && m > k) continue;
      minimal = false;
    }
    if (minimal) out.push_back(gens[k]);
  }
  return out;
}

std::vector<Monomial> monomialBasis(const Quiver& q, const StabilityCondition& theta, StabilityMode mode,
                                    unsigned maxDegree) {
  auto gens = minimalGenerators(thinKernelGenerators(q, theta, mode));
  std::vector<Monomial> out;
  for (unsigned deg = 0; deg <= maxDegree; ++deg) {
    auto level = arrowMonomials(q.arrowCount(), deg);
    std::sort(level.begin(), level.end(), TermOrder{});
    for (auto& m : level) {
      // Generators are squarefree, so divisibility is a support condition.
      bool excluded = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
      if (!excluded) out.push_back(std::move(m));
    }
  }
  return out;
}

bool thinStable(const Quiver& q, const std::vector<std::size_t>& support, const StabilityCondition& theta) {
  requireNormalized(q, theta);
  const std::size_t n = q.vertexCount();
  if (n >= 63) throw DomainError("too many vertices for subset enumeration");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    bool closed = true;
    for (auto a : support) {
      const auto& arr = q.arrow(a);
      if ((mask >> arr.source & 1) && !(mask >> arr.target & 1)) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    std::int64_t value = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) value += theta[v];
    if (value >= 0) return false;
  }
  return true;
}

std::vector<ArrowSubset> stableSpanningTrees(const Quiver& q, const StabilityCondition& theta) {
  requireTreeInput(q, theta);
  std::vector<ArrowSubset> out;
  if (q.vertexCount() == 0) return out;
  forEachSubset(q.arrowCount(), q.vertexCount() - 1, [&](const std::vector<std::size_t>& arrows) {
    if (isSpanningTree(q, arrows) && thinStable(q, arrows, theta))
      out.push_back({arrows, ArrowSubsetKind::SpanningTree});
  });
  return out;
}

std::vector<GkmEdge> stableAlmostTrees(const Quiver& q, const StabilityCondition& theta) {
  requireTreeInput(q, theta);
  auto trees = stableSpanningTrees(q, theta);
  auto treeIndex = [&](const std::vector<std::size_t>& arrows) {
    for (std::size_t k = 0; k < trees.size(); ++k)
      if (trees[k].arrows == arrows) return k;
    throw InvariantViolation("stable tree missing from the enumeration");
  };

  std::vector<GkmEdge> out;
  forEachSubset(q.arrowCount(), q.vertexCount(), [&](const std::vector<std::size_t>& arrows) {
    ArrowSubset omega = classifyArrowSubset(q, arrows);
    if (omega.kind != ArrowSubsetKind::SpanningAlmostTree || !thinStable(q, arrows, theta)) return;
    std::vector<std::size_t> removals;
    for (auto a : arrows) {
      auto rest = without(arrows, a);
      if (isSpanningTree(q, rest) && thinStable(q, rest, theta)) removals.push_back(a);
    }
    if (removals.size() != 2)
      throw InvariantViolation("stable almost tree " + formatArrowSubset(omega, q) + " has " +
                               std::to_string(removals.size()) + " stable-tree removals instead of 2");
    GkmEdge edge;
    edge.omega = omega;
    edge.alpha0 = removals[0];
    edge.alphaInf = removals[1];
    edge.omega0 = {without(arrows, edge.alpha0), ArrowSubsetKind::SpanningTree};
    edge.omegaInf = {without(arrows, edge.alphaInf), ArrowSubsetKind::SpanningTree};
    edge.tree0 = treeIndex(edge.omega0.arrows);
    edge.treeInf = treeIndex(edge.omegaInf.arrows);
    out.push_back(std::move(edge));
  });
  return out;
}

GkmGraph gkmGraph(const Quiver& q, const StabilityCondition& theta) {
  GkmGraph g;
  g.trees = stableSpanningTrees(q, theta);
  g.edges = stableAlmostTrees(q, theta);
  return g;
}

ToricTuple iStarToric(const Polynomial& f, const std::vector<ArrowSubset>& trees) {
  for (const auto& v : f.variables())
    if (v.kind != VariableKind::Arrow) throw DomainError("toric restriction needs a polynomial in arrow variables");
  ToricTuple out;
  for (const auto& h : trees) out.push_back(killArrows(f, h.arrows));
  return out;
}

GkmCheck gkmMembership(const ToricTuple& t, const GkmGraph& graph, const VariableNames& names) {
  if (t.size() != graph.trees.size()) throw DomainError("tuple length does not match the number of fixed points");
  GkmCheck check;
  for (std::size_t h = 0; h < t.size(); ++h)
    for (const auto& v : t[h].variables())
      if (v.kind != VariableKind::Arrow || graph.trees[h].contains(v.arrow)) {
        check.member = false;
        check.violations.push_back(
            {graph.edges.size(), "entry " + std::to_string(h + 1) + " uses " + serialize(v, names) +
                                     ", which is not a complement variable of its tree",
             t[h]});
      }
  for (std::size_t k = 0; k < graph.edges.size(); ++k) {
    const auto& e = graph.edges[k];
    Polynomial left = killArrows(t[e.tree0], {e.alpha0});
    Polynomial right = killArrows(t[e.treeInf], {e.alphaInf});
    if (left == right) continue;
    check.member = false;
    check.violations.push_back({k,
                                "edge " + std::to_string(k + 1) + " (trees " + std::to_string(e.tree0 + 1) + " and " +
                                    std::to_string(e.treeInf + 1) + ", x_" + names.arrowName(e.alpha0) + " = 0 vs x_" +
                                    names.arrowName(e.alphaInf) + " = 0)",
                                left - right});
  }
  return check;
}

std::vector<ImageBasisElement> imageBasis(const Quiver& q, const StabilityCondition& theta, unsigned maxDegree) {
  auto trees = stableSpanningTrees(q, theta);
  std::vector<ImageBasisElement> out;
  std::vector<std::vector<std::vector<Polynomial>>> byDegree(maxDegree + 1);
  for (const auto& m : monomialBasis(q, theta, StabilityMode::Stable, maxDegree)) {
    ImageBasisElement el{m, iStarToric(Polynomial::term(m, 1), trees)};
    byDegree[m.degree()].push_back(el.tuple);
    out.push_back(std::move(el));
  }
  for (unsigned deg = 0; deg <= maxDegree; ++deg)
    if (tupleSpanRank(byDegree[deg]) != byDegree[deg].size())
      throw InvariantViolation("restriction to fixed points is not injective in degree " + std::to_string(deg));
  return out;
}

std::string formatArrowSubset(const ArrowSubset& s, const Quiver& q) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.arrows.size(); ++k) {
    if (k) out += ",";
    out += q.arrow(s.arrows[k]).id;
  }
  return out + "}";
}

}  // namespace quivloc
