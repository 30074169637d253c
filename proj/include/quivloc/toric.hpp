#ifndef QUIVLOC_TORIC_HPP
#define QUIVLOC_TORIC_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "quivloc/polynomial.hpp"
#include "quivloc/presentation.hpp"
#include "quivloc/quiver.hpp"

namespace quivloc {

enum class ArrowSubsetKind { SpanningTree, SpanningAlmostTree, Other };

/// A set of arrows (sorted indices) with its classification.
struct ArrowSubset {
  std::vector<std::size_t> arrows;
  ArrowSubsetKind kind = ArrowSubsetKind::Other;

  bool contains(std::size_t a) const;
  bool operator==(const ArrowSubset& o) const { return arrows == o.arrows; }
};

ArrowSubset classifyArrowSubset(const Quiver& q, std::vector<std::size_t> arrows);

/// prod of x_a over arrows a with s(a) in I and t(a) not in I.
Monomial xI(const Quiver& q, const std::vector<bool>& inI);

/// Throws DomainError unless theta(1) = 0.
void requireNormalized(const Quiver& q, const StabilityCondition& theta);

/// x_I for all proper nonempty I with theta(1_I) > 0 (semistable) or >= 0
/// (stable), deduplicated, in term order.
std::vector<Monomial> thinKernelGenerators(const Quiver& q, const StabilityCondition& theta, StabilityMode mode);

/// The members of `gens` not divisible by another member.
std::vector<Monomial> minimalGenerators(const std::vector<Monomial>& gens);

/// Arrow monomials of degree <= maxDegree not divisible by any kernel
/// generator, by degree then term order.
std::vector<Monomial> monomialBasis(const Quiver& q, const StabilityCondition& theta, StabilityMode mode,
                                    unsigned maxDegree);

/// True iff theta(1_S) < 0 for every proper nonempty S closed under the
/// support arrows.
bool thinStable(const Quiver& q, const std::vector<std::size_t>& support, const StabilityCondition& theta);

struct GkmEdge {
  ArrowSubset omega;
  std::size_t alpha0 = 0;
  std::size_t alphaInf = 0;
  ArrowSubset omega0;  // omega - alpha0
  ArrowSubset omegaInf;  // omega - alphaInf
  std::size_t tree0 = 0;  // index of omega0 among the stable trees
  std::size_t treeInf = 0;
};

/// Stable spanning trees in lex order of their arrow sets. Needs a
/// connected acyclic quiver and normalized theta.
std::vector<ArrowSubset> stableSpanningTrees(const Quiver& q, const StabilityCondition& theta);

/// Stable spanning almost trees with their two stable-tree removals; alpha0
/// is the earlier of the two arrows. Throws InvariantViolation when the
/// number of such removals is not two.
std::vector<GkmEdge> stableAlmostTrees(const Quiver& q, const StabilityCondition& theta);

struct GkmGraph {
  std::vector<ArrowSubset> trees;
  std::vector<GkmEdge> edges;
};

GkmGraph gkmGraph(const Quiver& q, const StabilityCondition& theta);

/// One polynomial per stable tree, in the order of GkmGraph::trees.
using ToricTuple = std::vector<Polynomial>;

/// (f with x_a = 0 for a in H)_H.
ToricTuple iStarToric(const Polynomial& f, const std::vector<ArrowSubset>& trees);

struct GkmViolation {
  std::size_t edge = 0;
  std::string description;
  Polynomial difference;
};

struct GkmCheck {
  bool member = true;
  std::vector<GkmViolation> violations;
};

/// Checks that entry H only uses complement variables and that
/// t[omega0](x_alpha0 = 0) = t[omegaInf](x_alphaInf = 0) for every edge.
GkmCheck gkmMembership(const ToricTuple& t, const GkmGraph& graph, const VariableNames& names);

struct ImageBasisElement {
  Monomial monomial;
  ToricTuple tuple;
};

/// iStarToric of the stable-mode monomial basis up to maxDegree; throws
/// InvariantViolation if the images are dependent in some degree.
std::vector<ImageBasisElement> imageBasis(const Quiver& q, const StabilityCondition& theta, unsigned maxDegree);

/// Arrow names of a subset, e.g. "{11,12,21,32}".
std::string formatArrowSubset(const ArrowSubset& s, const Quiver& q);

}  // namespace quivloc

#endif  // QUIVLOC_TORIC_HPP
