#include "quivloc/covering.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>

#include "quivloc/error.hpp"
#include "quivloc/parallel.hpp"

namespace quivloc {

std::vector<CoveringVertex> CoveringDimVector::support() const {
  std::vector<CoveringVertex> out;
  for (const auto& [v, m] : entries) out.push_back(v);
  return out;
}

DimensionVector CoveringDimVector::coveredDimension(std::size_t n) const {
  std::vector<std::int64_t> d(n, 0);
  for (const auto& [v, m] : entries) d.at(v.vertex) += m;
  return DimensionVector(std::move(d));
}

bool CoveringDimVector::isThin() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.second == 1; });
}

LocalCoveringQuiver localCoveringQuiver(const Quiver& q, const std::vector<CoveringVertex>& support) {
  LocalCoveringQuiver local;
  local.vertices = support;
  std::sort(local.vertices.begin(), local.vertices.end());
  local.vertices.erase(std::unique(local.vertices.begin(), local.vertices.end()), local.vertices.end());

  const auto names = VariableNames::fromQuiver(q);
  std::map<CoveringVertex, std::string> labels;
  RawQuiver raw;
  for (const auto& v : local.vertices) {
    std::string label = "(" + q.vertexName(v.vertex) + ";" + serialize(v.character, names) + ")";
    labels.emplace(v, label);
    raw.vertices.push_back(label);
  }
  for (const auto& v : local.vertices)
    for (std::size_t a = 0; a < q.arrowCount(); ++a) {
      const auto& arr = q.arrow(a);
      if (arr.source != v.vertex) continue;
      CoveringVertex head{arr.target, v.character + Character::unit(q.arrowCount(), a)};
      auto it = labels.find(head);
      if (it == labels.end()) continue;
      raw.arrows.push_back({arr.id + "@" + labels[v], labels[v], it->second});
      local.baseArrow.push_back(a);
    }
  local.quiver = validateQuiver(raw);
  return local;
}

DimensionVector localDimension(const LocalCoveringQuiver& local, const CoveringDimVector& beta) {
  std::vector<std::int64_t> out;
  for (const auto& v : local.vertices) {
    auto it = beta.entries.find(v);
    out.push_back(it == beta.entries.end() ? 0 : it->second);
  }
  return DimensionVector(std::move(out));
}

StabilityCondition liftedStability(const LocalCoveringQuiver& local, const StabilityCondition& theta) {
  std::vector<std::int64_t> out;
  for (const auto& v : local.vertices) out.push_back(theta[v.vertex]);
  return StabilityCondition(std::move(out));
}

CoveringDimVector translate(const CoveringDimVector& beta, const Character& shift) {
  CoveringDimVector out;
  for (const auto& [v, m] : beta.entries) out.entries.emplace(CoveringVertex{v.vertex, v.character + shift}, m);
  return out;
}

CoveringDimVector canonicalTranslate(const CoveringDimVector& beta) {
  if (beta.entries.empty()) throw DomainError("cannot translate an empty covering vector");
  return translate(beta, -beta.entries.begin()->first.character);
}

namespace {

// Compositions of `total` into `parts` positive integers, in lex order.
std::vector<std::vector<std::int64_t>> compositions(std::int64_t total, std::size_t parts) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> current;
  std::function<void(std::int64_t)> rec = [&](std::int64_t remaining) {
    if (current.size() + 1 == parts) {
      current.push_back(remaining);
      out.push_back(current);
      current.pop_back();
      return;
    }
    std::int64_t left = static_cast<std::int64_t>(parts - current.size() - 1);
    for (std::int64_t x = 1; x <= remaining - left; ++x) {
      current.push_back(x);
      rec(remaining - x);
      current.pop_back();
    }
  };
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  rec(total);
  return out;
}

}  // namespace

std::vector<CoveringDimVector> enumerateCoveringVectors(const Quiver& q, const DimensionVector& d) {
  if (d.size() != q.vertexCount()) throw DomainError("dimension vector does not match the quiver");
  if (d.isZero()) throw DomainError("covering vectors need a nonzero dimension vector");
  const std::size_t n = q.vertexCount();
  const std::size_t arrows = q.arrowCount();

  std::size_t root = 0;
  while (d[root] == 0) ++root;

  auto neighbours = [&](const CoveringVertex& v) {
    std::vector<CoveringVertex> out;
    for (std::size_t a = 0; a < arrows; ++a) {
      const auto& arr = q.arrow(a);
      if (arr.source == v.vertex) out.push_back({arr.target, v.character + Character::unit(arrows, a)});
      if (arr.target == v.vertex) out.push_back({arr.source, v.character - Character::unit(arrows, a)});
    }
    return out;
  };

  using Support = std::vector<CoveringVertex>;
  std::set<Support> seen;
  std::deque<Support> queue;
  Support start{{root, Character::zero(arrows)}};
  seen.insert(start);
  queue.push_back(start);

  std::vector<CoveringDimVector> out;
  std::set<CoveringDimVector> found;
  while (!queue.empty()) {
    Support support = std::move(queue.front());
    queue.pop_front();

    std::vector<std::int64_t> fiber(n, 0);
    for (const auto& v : support) ++fiber[v.vertex];

    bool complete = true;
    for (std::size_t i = 0; i < n; ++i)
      if ((d[i] > 0) != (fiber[i] > 0)) complete = false;
    if (complete) {
      // Distribute d_i over the fiber of i in every possible way.
      std::vector<std::vector<std::vector<std::int64_t>>> splits(n);
      for (std::size_t i = 0; i < n; ++i) splits[i] = compositions(d[i], static_cast<std::size_t>(fiber[i]));
      std::vector<std::size_t> pick(n, 0);
      for (;;) {
        CoveringDimVector beta;
        std::vector<std::size_t> used(n, 0);
        for (const auto& v : support) beta.entries.emplace(v, splits[v.vertex][pick[v.vertex]][used[v.vertex]++]);
        auto canonical = canonicalTranslate(beta);
        if (found.insert(canonical).second) out.push_back(std::move(canonical));
        std::size_t i = n;
        bool done = true;
        while (i > 0) {
          --i;
          if (pick[i] + 1 < splits[i].size()) {
            ++pick[i];
            done = false;
            break;
          }
          pick[i] = 0;
        }
        if (done) break;
      }
    }

    for (const auto& v : support)
      for (auto& w : neighbours(v)) {
        if (d[w.vertex] <= fiber[w.vertex]) continue;
        if (std::binary_search(support.begin(), support.end(), w)) continue;
        Support grown = support;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), w), w);
        if (seen.insert(grown).second) queue.push_back(std::move(grown));
      }
  }

  for (const auto& beta : out)
    if (beta.coveredDimension(n) != d) throw InvariantViolation("enumerated covering vector does not cover d");
  return out;
}

std::set<DimensionVector> genericSubdimensionVectors(const Quiver& qf, const DimensionVector& beta) {
  if (qf.hasLoops()) throw DomainError("generic subdimension vectors need a quiver without loops");
  if (beta.size() != qf.vertexCount()) throw DomainError("dimension vector does not match the quiver");
  const std::size_t n = beta.size();

  // Mixed-radix index of every 0 <= e <= beta.
  std::vector<std::size_t> radix(n);
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    radix[i] = count;
    count *= static_cast<std::size_t>(beta[i] + 1);
  }
  auto index = [&](const DimensionVector& e) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) k += static_cast<std::size_t>(e[i]) * radix[i];
    return k;
  };
  std::vector<DimensionVector> all(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::int64_t> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::int64_t>((k / radix[i]) % static_cast<std::size_t>(beta[i] + 1));
    all[k] = DimensionVector(std::move(e));
  }

  // subs[x]: generic subdimension vectors of x. Every e <= x has an index
  // below x's, so a forward sweep sees them first.
  std::vector<std::vector<std::size_t>> subs(count);
  for (std::size_t x = 0; x < count; ++x) {
    const auto& dx = all[x];
    for (std::size_t e = 0; e <= x; ++e) {
      const auto& de = all[e];
      if (!de.leq(dx)) continue;
      if (e == x) {
        subs[x].push_back(e);
        continue;
      }
      DimensionVector quotient = dx - de;
      bool ok = true;
      for (auto ep : subs[e])
        if (eulerForm(qf, all[ep], quotient) < 0) {
          ok = false;
          break;
        }
      if (ok) subs[x].push_back(e);
    }
  }
  std::set<DimensionVector> out;
  for (auto e : subs[index(beta)]) out.insert(all[e]);
  return out;
}

namespace {

bool thinClosureStable(const Quiver& qf, const DimensionVector& beta, const StabilityCondition& theta) {
  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < beta.size(); ++v) {
    if (beta[v] > 1) throw DomainError("thin stability route needs a thin dimension vector");
    if (beta[v] == 1) support.push_back(v);
  }
  if (support.size() >= 63) throw DomainError("support too large for the thin stability route");
  const Slope total = slope(theta, beta);
  const std::uint64_t full = (std::uint64_t{1} << support.size()) - 1;
  std::vector<std::int64_t> position(beta.size(), -1);
  for (std::size_t k = 0; k < support.size(); ++k) position[support[k]] = static_cast<std::int64_t>(k);
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    bool closed = true;
    for (const auto& a : qf.arrows()) {
      if (position[a.source] < 0 || position[a.target] < 0) continue;
      if ((mask >> position[a.source] & 1) && !(mask >> position[a.target] & 1)) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    std::vector<std::int64_t> e(beta.size(), 0);
    for (std::size_t k = 0; k < support.size(); ++k)
      if (mask >> k & 1) e[support[k]] = 1;
    if (slope(theta, DimensionVector(std::move(e))) >= total) return false;
  }
  return true;
}

}  // namespace

bool stableLocusNonempty(const Quiver& qf, const DimensionVector& beta, const StabilityCondition& theta,
                         StabilityRoute route) {
  if (beta.isZero()) throw DomainError("stability needs a nonzero dimension vector");
  if (qf.hasLoops()) throw DomainError("stability check needs a quiver without loops");
  if (route == StabilityRoute::Auto)
    route = std::all_of(beta.entries().begin(), beta.entries().end(), [](auto e) { return e <= 1; })
                ? StabilityRoute::ThinClosure
                : StabilityRoute::GenericSubdimension;
  if (route == StabilityRoute::ThinClosure) return thinClosureStable(qf, beta, theta);

  const Slope total = slope(theta, beta);
  for (const auto& e : genericSubdimensionVectors(qf, beta)) {
    if (e.isZero() || e == beta) continue;
    if (slope(theta, e) >= total) return false;
  }
  return true;
}

std::vector<FixedComponent> fixedComponents(const Quiver& q, const DimensionVector& d,
                                            const StabilityCondition& theta) {
  if (theta.size() != q.vertexCount()) throw DomainError("stability condition does not match the quiver");
  auto candidates = enumerateCoveringVectors(q, d);
  auto checked = parallelMap<std::optional<FixedComponent>>(candidates.size(), [&](std::size_t k) {
    const auto& beta = candidates[k];
    auto local = localCoveringQuiver(q, beta.support());
    auto dim = localDimension(local, beta);
    std::optional<FixedComponent> result;
    if (stableLocusNonempty(local.quiver, dim, liftedStability(local, theta))) {
      std::int64_t dimension = 1 - eulerForm(local.quiver, dim, dim);
      result = FixedComponent{beta, dimension, dimension == 0};
    }
    return result;
  });
  std::vector<FixedComponent> out;
  for (auto& c : checked)
    if (c) out.push_back(std::move(*c));
  return out;
}

std::string formatCovering(const CoveringDimVector& beta, const VariableNames& names) {
  std::string out;
  for (const auto& [v, m] : beta.entries) {
    if (!out.empty()) out += " ";
    out += "(" + names.vertexName(v.vertex) + ";" + serialize(v.character, names) + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

}  // namespace quivloc
