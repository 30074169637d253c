#include "quivloc/localization.hpp"

#include <functional>
#include <map>

#include "quivloc/error.hpp"
#include "quivloc/parallel.hpp"

namespace quivloc {

namespace {

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

Polynomial shiftedRoot(std::size_t vertex, const std::pair<Character, std::size_t>& slot, bool dropRoots) {
  Polynomial p = -linearForm(slot.first);
  if (!dropRoots) p += Polynomial::variable(Variable::chernRoot(vertex, slot.first, slot.second));
  return p;
}

}  // namespace

CharacterAssignment characterAssignment(const CoveringDimVector& beta, const DimensionVector& d) {
  if (beta.coveredDimension(d.size()) != d) throw DomainError("covering vector does not cover d");
  CharacterAssignment out;
  out.slots.resize(d.size());
  for (const auto& [v, m] : beta.entries)
    for (std::int64_t s = 1; s <= m; ++s) out.slots[v.vertex].emplace_back(v.character, static_cast<std::size_t>(s));
  return out;
}

Polynomial iBetaStar(const Polynomial& p, const CharacterAssignment& assignment, bool dropRoots) {
  std::vector<std::vector<Variable>> blocks;
  std::map<Variable, Polynomial> substitution;
  for (std::size_t v = 0; v < assignment.slots.size(); ++v) {
    std::vector<Variable> block;
    for (std::size_t r = 0; r < assignment.slots[v].size(); ++r) {
      block.push_back(Variable::flatRoot(v, r + 1));
      substitution.emplace(block.back(), shiftedRoot(v, assignment.slots[v][r], dropRoots));
    }
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  if (!isSymmetricUnderBlocks(p, blocks)) throw DomainError("pull-back needs a Weyl-invariant polynomial");
  return p.substitute(substitution);
}

Polynomial fBeta(const CharacterAssignment& assignment, std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                 bool isolatedOnly) {
  if (i == j) throw DomainError("z generators need distinct vertices");
  if (i >= assignment.slots.size() || j >= assignment.slots.size()) throw DomainError("vertex out of range");
  const auto& left = assignment.slots[i];
  const auto& right = assignment.slots[j];
  if (k < 1 || k > left.size() || l < 1 || l > right.size()) throw DomainError("z generator index out of range");

  std::vector<std::vector<Polynomial>> factor(left.size(), std::vector<Polynomial>(right.size()));
  for (std::size_t r = 0; r < left.size(); ++r)
    for (std::size_t t = 0; t < right.size(); ++t)
      factor[r][t] = shiftedRoot(i, left[r], isolatedOnly) - shiftedRoot(j, right[t], isolatedOnly);

  Polynomial sum;
  forEachSubset(left.size(), k, [&](const std::vector<std::size_t>& rs) {
    forEachSubset(right.size(), l, [&](const std::vector<std::size_t>& ts) {
      Polynomial term(1);
      for (auto r : rs)
        for (auto t : ts) term *= factor[r][t];
      sum += term;
    });
  });
  return sum;
}

Polynomial fBeta(const CoveringDimVector& beta, const DimensionVector& d, std::size_t i, std::size_t j,
                 std::size_t k, std::size_t l, bool isolatedOnly) {
  return fBeta(characterAssignment(beta, d), i, j, k, l, isolatedOnly);
}

std::string zLabel(const ZGenerator& z, const VariableNames& names) {
  return "z[" + names.vertexName(z.i) + "," + names.vertexName(z.j) + ";" + std::to_string(z.k) + "," +
         std::to_string(z.l) + "]";
}

LocalizationImage localizationImageGenerators(const Quiver& q, const DimensionVector& d,
                                              const StabilityCondition& theta) {
  LocalizationImage image;
  image.components = fixedComponents(q, d, theta);
  if (image.components.empty()) throw DomainError("the stable locus has no torus-fixed points");
  const auto names = VariableNames::fromQuiver(q);

  std::vector<CharacterAssignment> assignments;
  for (const auto& c : image.components) assignments.push_back(characterAssignment(c.beta, d));

  for (const auto& z : zGenerators(d)) {
    ImageGenerator gen;
    gen.label = zLabel(z, names);
    gen.z = z;
    gen.tuple = parallelMap<Polynomial>(image.components.size(), [&](std::size_t c) {
      return fBeta(assignments[c], z.i, z.j, z.k, z.l, image.components[c].isolated);
    });
    image.generators.push_back(std::move(gen));
  }
  for (std::size_t a = 0; a < q.arrowCount(); ++a) {
    ImageGenerator gen;
    gen.label = "x_" + names.arrowName(a);
    gen.arrow = a;
    gen.tuple.assign(image.components.size(), Polynomial::variable(Variable::arrowVar(a)));
    image.generators.push_back(std::move(gen));
  }
  return image;
}

bool translationInvarianceCheck(const CoveringDimVector& beta, const DimensionVector& d, const Character& shift,
                                std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  Polynomial original = fBeta(beta, d, i, j, k, l, false);
  Polynomial moved = fBeta(translate(beta, shift), d, i, j, k, l, false);
  std::map<Variable, Variable> back;
  for (const auto& v : moved.variables())
    if (v.kind == VariableKind::ChernRoot) back.emplace(v, Variable::chernRoot(v.vertex, v.character - shift, v.slot));
  return moved.renamed(back) == original;
}

}  // namespace quivloc
