#ifndef QUIVLOC_LOCALIZATION_HPP
#define QUIVLOC_LOCALIZATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quivloc/covering.hpp"
#include "quivloc/polynomial.hpp"
#include "quivloc/presentation.hpp"
#include "quivloc/quiver.hpp"

namespace quivloc {

/// Per base vertex i, the pairs (chi_{i,r}, s_{i,r}) for r = 1..d_i.
struct CharacterAssignment {
  std::vector<std::vector<std::pair<Character, std::size_t>>> slots;
};

/// Lex order on characters, slots increasing within a fiber. Throws
/// DomainError when beta does not cover d.
CharacterAssignment characterAssignment(const CoveringDimVector& beta, const DimensionVector& d);

/// xi[i;r] -> xi[i;chi_{i,r};s_{i,r}] - chi_{i,r}, or -chi_{i,r} with
/// dropRoots. Arrow variables are fixed. p must be symmetric in the blocks
/// xi[i;1..d_i] (DomainError otherwise).
Polynomial iBetaStar(const Polynomial& p, const CharacterAssignment& assignment, bool dropRoots);

/// Sum over k-subsets R of 1..d_i and l-subsets T of 1..d_j of
/// prod_{r in R, t in T} (xi_{i,r} - chi_{i,r} - xi_{j,t} + chi_{j,t}),
/// with the root terms omitted when isolatedOnly is set.
Polynomial fBeta(const CharacterAssignment& assignment, std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                 bool isolatedOnly);
Polynomial fBeta(const CoveringDimVector& beta, const DimensionVector& d, std::size_t i, std::size_t j,
                 std::size_t k, std::size_t l, bool isolatedOnly);

using LocalizationTuple = std::vector<Polynomial>;

struct ImageGenerator {
  std::string label;
  std::optional<ZGenerator> z;     // set for f_beta(z) tuples
  std::optional<std::size_t> arrow;  // set for the constant x_a tuples
  LocalizationTuple tuple;
};

struct LocalizationImage {
  std::vector<FixedComponent> components;
  std::vector<ImageGenerator> generators;
};

/// Generators of the image of the localization map: the tuples
/// (f_beta(z))_beta for every z_{k,l}^{i,j}, then (x_a, ..., x_a) per arrow.
/// Isolated components use the root-free specialization.
LocalizationImage localizationImageGenerators(const Quiver& q, const DimensionVector& d,
                                              const StabilityCondition& theta);

/// f_beta after translating beta by `shift` equals f_beta, once the characters
/// of the Chern root symbols are shifted back.
bool translationInvarianceCheck(const CoveringDimVector& beta, const DimensionVector& d, const Character& shift,
                                std::size_t i, std::size_t j, std::size_t k, std::size_t l);

/// "z[i,j;k,l]" with vertex names.
std::string zLabel(const ZGenerator& z, const VariableNames& names);

}  // namespace quivloc

#endif  // QUIVLOC_LOCALIZATION_HPP
