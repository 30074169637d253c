#ifndef QUIVLOC_PRESENTATION_HPP
#define QUIVLOC_PRESENTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "quivloc/polynomial.hpp"
#include "quivloc/quiver.hpp"

namespace quivloc {

enum class StabilityMode { Semistable, Stable };

/// d = dPrime + dDoublePrime with both parts nonzero and
/// mu(dPrime) > mu(dDoublePrime) (semistable) or >= (stable).
struct SlopeDecomposition {
  DimensionVector dPrime;
  DimensionVector dDoublePrime;
  StabilityMode mode = StabilityMode::Stable;
};

/// All admissible decompositions, ordered lexicographically by dPrime.
std::vector<SlopeDecomposition> slopeDecompositions(const DimensionVector& d, const StabilityCondition& theta,
                                                    StabilityMode mode);

/// The blocks xi[v;1..d_v] per vertex with d_v > 0.
std::vector<std::vector<Variable>> flatRootBlocks(const DimensionVector& d);

/// x_{v,r} = e_r(xi[v;1], ..., xi[v;d_v]) expanded in flat roots.
Polynomial chernClass(std::size_t vertex, std::size_t r, const DimensionVector& d);

/// Sum over per-vertex (d'_v, d''_v)-shuffles of f * g * Delta_1 / Delta_0.
/// f must be symmetric in the blocks xi[v;1..d'_v], g in xi[v;1..d''_v];
/// both may carry arrow variables as scalars. Throws DomainError for
/// non-symmetric input and InvariantViolation if the denominators fail to
/// clear.
Polynomial shuffleProduct(const Quiver& q, const DimensionVector& dPrime, const DimensionVector& dDoublePrime,
                          const Polynomial& f, const Polynomial& g);

/// Degree of f * g for homogeneous f, g of degree 0: deg Delta_1 - deg Delta_0.
std::int64_t shuffleDegreeShift(const Quiver& q, const DimensionVector& dPrime,
                                const DimensionVector& dDoublePrime);

/// A monomial in the Chern classes x_{v,r} of one factor, with its expansion.
struct SymmetricMonomial {
  std::vector<std::vector<unsigned>> exponents;  // [vertex][r-1]
  std::string label;
  Polynomial expanded;
  unsigned degree = 0;
};

/// All monomials in x_{v,r} (r <= d_v, weight r) of weighted degree exactly deg.
std::vector<SymmetricMonomial> symmetricMonomials(const DimensionVector& d, unsigned deg,
                                                  const VariableNames& names);

/// Monomials in the arrow variables of total degree exactly deg.
std::vector<Monomial> arrowMonomials(std::size_t arrowCount, unsigned deg);

struct KernelGenerator {
  SlopeDecomposition decomposition;
  std::string fLabel;
  std::string gLabel;
  Monomial arrowFactor;
  Polynomial product;  // arrowFactor * (f * g)
  unsigned degree = 0;
  bool zero = false;
};

struct KernelGeneratorSet {
  unsigned maxDegree = 0;
  StabilityMode mode = StabilityMode::Stable;
  std::vector<KernelGenerator> generators;
};

/// Every arrowFactor * (f * g) of degree <= maxDegree over the slope
/// decompositions of d, with f, g monomials in the Chern classes of the two
/// factors. Their Q-span is the kernel of the restriction to the
/// (semi)stable locus, in degrees <= maxDegree.
KernelGeneratorSet kernelGenerators(const Quiver& q, const DimensionVector& d, const StabilityCondition& theta,
                                    StabilityMode mode, unsigned maxDegree);

/// dim of degree-n part of (tensor_v Q[x_{v,1..d_v}]) (x) Q[x_a], n = 0..maxDegree.
std::vector<std::size_t> ambientDimensions(const Quiver& q, const DimensionVector& d, unsigned maxDegree);

/// Graded dimensions of the ambient ring modulo the kernel span, n = 0..maxDegree.
std::vector<std::size_t> gradedQuotientDimensions(const Quiver& q, const DimensionVector& d,
                                                  const KernelGeneratorSet& kernel);

/// Index data of z_{k,l}^{i,j}: i != j, 1 <= k <= d_i, 1 <= l <= d_j.
struct ZGenerator {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 1;
  std::size_t l = 1;
};

/// All z_{k,l}^{i,j} for ordered pairs i != j with d_i, d_j > 0.
std::vector<ZGenerator> zGenerators(const DimensionVector& d);

}  // namespace quivloc

#endif  // QUIVLOC_PRESENTATION_HPP
