#ifndef QUIVLOC_COVERING_HPP
#define QUIVLOC_COVERING_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "quivloc/polynomial.hpp"
#include "quivloc/quiver.hpp"

namespace quivloc {

/// A vertex (i, chi) of the universal abelian covering quiver.
struct CoveringVertex {
  std::size_t vertex = 0;
  Character character;

  auto operator<=>(const CoveringVertex&) const = default;
};

/// Finitely supported dimension vector on the covering quiver. Keys are
/// ordered by (vertex, lex character); only positive entries are stored.
struct CoveringDimVector {
  std::map<CoveringVertex, std::int64_t> entries;

  std::vector<CoveringVertex> support() const;
  /// sum_chi beta_{i,chi} for each of the n base vertices.
  DimensionVector coveredDimension(std::size_t n) const;
  bool isThin() const;

  auto operator<=>(const CoveringDimVector&) const = default;
};

/// The full subquiver of the covering quiver on a finite support.
struct LocalCoveringQuiver {
  Quiver quiver;
  std::vector<CoveringVertex> vertices;  // quiver vertex k is vertices[k]
  std::vector<std::size_t> baseArrow;    // quiver arrow k lifts baseArrow[k]
};

/// Arrows (a, chi) from (s(a), chi) to (t(a), chi + x_a) between support points.
/// Vertices keep the given order after sorting and deduplication.
LocalCoveringQuiver localCoveringQuiver(const Quiver& q, const std::vector<CoveringVertex>& support);

/// beta restricted to the local quiver's vertices.
DimensionVector localDimension(const LocalCoveringQuiver& local, const CoveringDimVector& beta);

/// theta_hat(i, chi) = theta_i.
StabilityCondition liftedStability(const LocalCoveringQuiver& local, const StabilityCondition& theta);

/// Shifts every character by `shift`.
CoveringDimVector translate(const CoveringDimVector& beta, const Character& shift);

/// Representative of the translation class: the smallest support key (least
/// base vertex, then lex-least character) is moved to character 0.
CoveringDimVector canonicalTranslate(const CoveringDimVector& beta);

/// All covering vectors of d with connected support, up to translation,
/// as canonical translates in order of discovery.
std::vector<CoveringDimVector> enumerateCoveringVectors(const Quiver& q, const DimensionVector& d);

/// All 0 <= e <= beta such that every representation of dimension beta has a
/// subrepresentation of dimension e. Throws DomainError on loops.
std::set<DimensionVector> genericSubdimensionVectors(const Quiver& qf, const DimensionVector& beta);

enum class StabilityRoute { Auto, GenericSubdimension, ThinClosure };

/// Existence of a theta-stable representation of dimension beta.
/// ThinClosure requires beta thin on its support and checks arrow-closed subsets.
bool stableLocusNonempty(const Quiver& qf, const DimensionVector& beta, const StabilityCondition& theta,
                         StabilityRoute route = StabilityRoute::Auto);

struct FixedComponent {
  CoveringDimVector beta;
  std::int64_t dimension = 0;
  bool isolated = false;
};

std::vector<FixedComponent> fixedComponents(const Quiver& q, const DimensionVector& d,
                                            const StabilityCondition& theta);

/// e.g. "(i;0)^2 (j;x_a) (j;x_b)".
std::string formatCovering(const CoveringDimVector& beta, const VariableNames& names);

}  // namespace quivloc

#endif  // QUIVLOC_COVERING_HPP
