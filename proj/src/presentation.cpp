#include "quivloc/presentation.hpp"

#include <functional>
#include <map>

#include "quivloc/error.hpp"
#include "quivloc/linalg.hpp"
#include "quivloc/parallel.hpp"

namespace quivloc {

namespace {

// All sorted k-subsets of {1..n}.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t x = start; x + (k - current.size()) <= n + 1; ++x) {
      current.push_back(x);
      rec(x + 1);
      current.pop_back();
    }
  };
  rec(1);
  return out;
}

Polynomial root(std::size_t v, std::size_t slot) { return Polynomial::variable(Variable::flatRoot(v, slot)); }

// prod_{a < a' in s} (xi[v;a'] - xi[v;a])
Polynomial vandermonde(std::size_t v, const std::vector<std::size_t>& s) {
  Polynomial p(1);
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = x + 1; y < s.size(); ++y) p *= root(v, s[y]) - root(v, s[x]);
  return p;
}

}  // namespace

std::vector<SlopeDecomposition> slopeDecompositions(const DimensionVector& d, const StabilityCondition& theta,
                                                    StabilityMode mode) {
  if (d.isZero()) throw DomainError("slope decompositions need a nonzero dimension vector");
  std::vector<SlopeDecomposition> out;
  std::vector<std::int64_t> current(d.size(), 0);
  // Odometer over 0 <= d' <= d in lex order.
  for (;;) {
    DimensionVector dp(current);
    if (!dp.isZero() && dp != d) {
      DimensionVector dpp = d - dp;
      Slope a = slope(theta, dp), b = slope(theta, dpp);
      bool ok = mode == StabilityMode::Semistable ? a > b : a >= b;
      if (ok) out.push_back({dp, dpp, mode});
    }
    std::size_t v = d.size();
    while (v > 0) {
      --v;
      if (current[v] < d[v]) {
        ++current[v];
        break;
      }
      current[v] = 0;
      if (v == 0) return out;
    }
    if (d.size() == 0) return out;
  }
}

std::vector<std::vector<Variable>> flatRootBlocks(const DimensionVector& d) {
  std::vector<std::vector<Variable>> blocks;
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d[v] == 0) continue;
    std::vector<Variable> block;
    for (std::int64_t s = 1; s <= d[v]; ++s) block.push_back(Variable::flatRoot(v, s));
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Polynomial chernClass(std::size_t vertex, std::size_t r, const DimensionVector& d) {
  std::vector<Variable> vars;
  for (std::int64_t s = 1; s <= d[vertex]; ++s) vars.push_back(Variable::flatRoot(vertex, s));
  return elementarySymmetric(r, vars);
}

std::int64_t shuffleDegreeShift(const Quiver& q, const DimensionVector& dPrime,
                                const DimensionVector& dDoublePrime) {
  std::int64_t shift = 0;
  for (const auto& a : q.arrows()) shift += dPrime[a.source] * dDoublePrime[a.target];
  for (std::size_t v = 0; v < q.vertexCount(); ++v) shift -= dPrime[v] * dDoublePrime[v];
  return shift;
}

Polynomial shuffleProduct(const Quiver& q, const DimensionVector& dPrime, const DimensionVector& dDoublePrime,
                          const Polynomial& f, const Polynomial& g) {
  if (dPrime.size() != q.vertexCount() || dDoublePrime.size() != q.vertexCount())
    throw DomainError("dimension vectors do not match the quiver");
  if (!isSymmetricUnderBlocks(f, flatRootBlocks(dPrime)))
    throw DomainError("left shuffle factor is not symmetric in its Chern roots");
  if (!isSymmetricUnderBlocks(g, flatRootBlocks(dDoublePrime)))
    throw DomainError("right shuffle factor is not symmetric in its Chern roots");

  const std::size_t n = q.vertexCount();
  DimensionVector d = dPrime + dDoublePrime;

  std::vector<std::vector<std::vector<std::size_t>>> choices(n);
  for (std::size_t v = 0; v < n; ++v)
    choices[v] = combinations(static_cast<std::size_t>(d[v]), static_cast<std::size_t>(dPrime[v]));

  // Numerator over the common denominator prod_v Vandermonde(v; 1..d_v):
  //   1/Delta_0(pi) = sign(pi) * V_S * V_C / V.
  Polynomial numerator;
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    std::vector<std::vector<std::size_t>> first(n), second(n);
    std::map<Variable, Variable> renameF, renameG;
    int inversions = 0;
    Polynomial factor(1);
    for (std::size_t v = 0; v < n; ++v) {
      first[v] = choices[v][pick[v]];
      std::vector<bool> used(static_cast<std::size_t>(d[v]) + 1, false);
      for (auto x : first[v]) used[x] = true;
      for (std::size_t x = 1; x <= static_cast<std::size_t>(d[v]); ++x)
        if (!used[x]) second[v].push_back(x);
      for (std::size_t r = 0; r < first[v].size(); ++r)
        renameF.emplace(Variable::flatRoot(v, r + 1), Variable::flatRoot(v, first[v][r]));
      for (std::size_t r = 0; r < second[v].size(); ++r)
        renameG.emplace(Variable::flatRoot(v, r + 1), Variable::flatRoot(v, second[v][r]));
      for (auto a : first[v])
        for (auto b : second[v])
          if (a > b) ++inversions;
      factor *= vandermonde(v, first[v]) * vandermonde(v, second[v]);
    }
    Polynomial term = f.renamed(renameF) * g.renamed(renameG) * factor;
    for (std::size_t a = 0; a < q.arrowCount() && !term.isZero(); ++a) {
      const auto& arr = q.arrow(a);
      Polynomial xa = Polynomial::variable(Variable::arrowVar(a));
      for (auto r : first[arr.source])
        for (auto s : second[arr.target]) term *= root(arr.target, s) - root(arr.source, r) + xa;
    }
    if (inversions % 2 == 1)
      numerator -= term;
    else
      numerator += term;

    std::size_t v = n;
    bool done = true;
    while (v > 0) {
      --v;
      if (pick[v] + 1 < choices[v].size()) {
        ++pick[v];
        done = false;
        break;
      }
      pick[v] = 0;
    }
    if (done) break;
  }

  Polynomial result = std::move(numerator);
  for (std::size_t v = 0; v < n && !result.isZero(); ++v)
    for (std::int64_t r = 1; r <= d[v]; ++r)
      for (std::int64_t s = r + 1; s <= d[v]; ++s)
        result = result.dividedByLinear(Variable::flatRoot(v, s), root(v, r));
  return result;
}

std::vector<SymmetricMonomial> symmetricMonomials(const DimensionVector& d, unsigned deg,
                                                  const VariableNames& names) {
  struct Slot {
    std::size_t vertex;
    std::size_t r;
  };
  std::vector<Slot> slots;
  for (std::size_t v = 0; v < d.size(); ++v)
    for (std::int64_t r = 1; r <= d[v]; ++r) slots.push_back({v, static_cast<std::size_t>(r)});

  std::map<std::pair<std::size_t, std::size_t>, Polynomial> classes;
  auto cls = [&](std::size_t v, std::size_t r) -> const Polynomial& {
    auto key = std::make_pair(v, r);
    auto it = classes.find(key);
    if (it == classes.end()) it = classes.emplace(key, chernClass(v, r, d)).first;
    return it->second;
  };

  std::vector<SymmetricMonomial> out;
  std::vector<unsigned> exps(slots.size(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t idx, unsigned remaining) {
    if (idx == slots.size()) {
      if (remaining != 0) return;
      SymmetricMonomial m;
      m.degree = deg;
      m.exponents.assign(d.size(), {});
      for (std::size_t v = 0; v < d.size(); ++v) m.exponents[v].assign(static_cast<std::size_t>(d[v]), 0);
      m.expanded = Polynomial(1);
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (exps[k] == 0) continue;
        m.exponents[slots[k].vertex][slots[k].r - 1] = exps[k];
        if (!m.label.empty()) m.label += "*";
        m.label += "c[" + names.vertexName(slots[k].vertex) + ";" + std::to_string(slots[k].r) + "]";
        if (exps[k] > 1) m.label += "^" + std::to_string(exps[k]);
        m.expanded *= cls(slots[k].vertex, slots[k].r).pow(exps[k]);
      }
      if (m.label.empty()) m.label = "1";
      out.push_back(std::move(m));
      return;
    }
    unsigned w = static_cast<unsigned>(slots[idx].r);
    for (unsigned e = remaining / w + 1; e-- > 0;) {
      exps[idx] = e;
      rec(idx + 1, remaining - e * w);
    }
    exps[idx] = 0;
  };
  rec(0, deg);
  return out;
}

std::vector<Monomial> arrowMonomials(std::size_t arrowCount, unsigned deg) {
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> factors;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t a, unsigned remaining) {
    if (a == arrowCount) {
      if (remaining == 0) out.push_back(Monomial::fromFactors(factors));
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      if (e > 0) factors.emplace_back(Variable::arrowVar(a), e);
      rec(a + 1, remaining - e);
      if (e > 0) factors.pop_back();
    }
  };
  rec(0, deg);
  return out;
}

KernelGeneratorSet kernelGenerators(const Quiver& q, const DimensionVector& d, const StabilityCondition& theta,
                                    StabilityMode mode, unsigned maxDegree) {
  KernelGeneratorSet set;
  set.maxDegree = maxDegree;
  set.mode = mode;
  if (d.isZero()) return set;
  const auto names = VariableNames::fromQuiver(q);

  for (const auto& dec : slopeDecompositions(d, theta, mode)) {
    const std::int64_t shift = shuffleDegreeShift(q, dec.dPrime, dec.dDoublePrime);
    // Products whose degree would be negative vanish identically.
    const std::int64_t minInput = std::max<std::int64_t>(0, -shift);
    const std::int64_t maxInput = static_cast<std::int64_t>(maxDegree) - shift;

    struct Job {
      const SymmetricMonomial* f;
      const SymmetricMonomial* g;
      unsigned degree;
    };
    std::vector<std::vector<SymmetricMonomial>> fs, gs;
    for (std::int64_t m = 0; m <= maxInput; ++m) {
      fs.push_back(symmetricMonomials(dec.dPrime, static_cast<unsigned>(m), names));
      gs.push_back(symmetricMonomials(dec.dDoublePrime, static_cast<unsigned>(m), names));
    }
    std::vector<Job> jobs;
    for (std::int64_t m = minInput; m <= maxInput; ++m)
      for (std::int64_t df = 0; df <= m; ++df)
        for (const auto& f : fs[static_cast<std::size_t>(df)])
          for (const auto& g : gs[static_cast<std::size_t>(m - df)])
            jobs.push_back({&f, &g, static_cast<unsigned>(m + shift)});

    auto products = parallelMap<Polynomial>(jobs.size(), [&](std::size_t idx) {
      return shuffleProduct(q, dec.dPrime, dec.dDoublePrime, jobs[idx].f->expanded, jobs[idx].g->expanded);
    });

    for (std::size_t idx = 0; idx < jobs.size(); ++idx) {
      const auto& job = jobs[idx];
      const Polynomial& p = products[idx];
      if (!p.isZero() && (!p.isHomogeneous() || p.degree() != static_cast<int>(job.degree)))
        throw InvariantViolation("shuffle product has unexpected degree");
      if (p.isZero()) {
        set.generators.push_back({dec, job.f->label, job.g->label, Monomial(), Polynomial(), job.degree, true});
        continue;
      }
      for (unsigned extra = 0; job.degree + extra <= maxDegree; ++extra)
        for (const auto& am : arrowMonomials(q.arrowCount(), extra))
          set.generators.push_back(
              {dec, job.f->label, job.g->label, am, p * Polynomial::term(am, 1), job.degree + extra, false});
    }
  }
  return set;
}

std::vector<std::size_t> ambientDimensions(const Quiver& q, const DimensionVector& d, unsigned maxDegree) {
  std::vector<std::size_t> weights;
  for (std::size_t v = 0; v < d.size(); ++v)
    for (std::int64_t r = 1; r <= d[v]; ++r) weights.push_back(static_cast<std::size_t>(r));
  for (std::size_t a = 0; a < q.arrowCount(); ++a) weights.push_back(1);
  std::vector<std::size_t> dims(maxDegree + 1, 0);
  dims[0] = 1;
  for (auto w : weights)
    for (std::size_t n = w; n <= maxDegree; ++n) dims[n] += dims[n - w];
  return dims;
}

std::vector<std::size_t> gradedQuotientDimensions(const Quiver& q, const DimensionVector& d,
                                                  const KernelGeneratorSet& kernel) {
  auto dims = ambientDimensions(q, d, kernel.maxDegree);
  std::vector<std::vector<Polynomial>> byDegree(kernel.maxDegree + 1);
  for (const auto& gen : kernel.generators)
    if (!gen.zero && gen.degree <= kernel.maxDegree) byDegree[gen.degree].push_back(gen.product);
  auto ranks = parallelMap<std::size_t>(byDegree.size(), [&](std::size_t n) { return spanRank(byDegree[n]); });
  for (std::size_t n = 0; n < dims.size(); ++n) {
    if (ranks[n] > dims[n]) throw InvariantViolation("kernel span exceeds the ambient dimension");
    dims[n] -= ranks[n];
  }
  return dims;
}

std::vector<ZGenerator> zGenerators(const DimensionVector& d) {
  std::vector<ZGenerator> out;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (i == j || d[i] == 0 || d[j] == 0) continue;
      for (std::int64_t k = 1; k <= d[i]; ++k)
        for (std::int64_t l = 1; l <= d[j]; ++l)
          out.push_back({i, j, static_cast<std::size_t>(k), static_cast<std::size_t>(l)});
    }
  return out;
}

}  // namespace quivloc
