#ifndef QUIVLOC_LINALG_HPP
#define QUIVLOC_LINALG_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "quivloc/polynomial.hpp"

namespace quivloc {

/// Incremental row echelon form over Q for sparse vectors with ordered keys.
template <class Key, class Compare = std::less<Key>>
class EchelonBasis {
 public:
  using Vector = std::map<Key, Rational, Compare>;

  /// Reduces v against the basis; keeps it when independent.
  /// Returns true iff v was linearly independent of the current basis.
  bool insert(Vector v) {
    reduce(v);
    if (v.empty()) return false;
    Rational lead = v.begin()->second;
    for (auto& [k, c] : v) c /= lead;
    Key pivot = v.begin()->first;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(Vector v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(Vector& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      Rational factor = it->second;
      Key resume = it->first;
      for (const auto& [k, c] : row->second) {
        auto [pos, inserted] = v.try_emplace(k, 0);
        pos->second -= factor * c;
        if (pos->second == 0) v.erase(pos);
      }
      it = v.upper_bound(resume);
    }
  }

  std::map<Key, Vector, Compare> rows_;
};

/// Coordinates of a polynomial in the monomial basis.
inline std::map<Monomial, Rational, TermOrder> coordinates(const Polynomial& p) {
  return {p.terms().begin(), p.terms().end()};
}

/// Exact rank of the Q-span of the given polynomials.
std::size_t spanRank(const std::vector<Polynomial>& polys);

/// Exact rank of the span of tuples of polynomials (coordinates are
/// (component index, monomial)).
std::size_t tupleSpanRank(const std::vector<std::vector<Polynomial>>& tuples);

}  // namespace quivloc

#endif  // QUIVLOC_LINALG_HPP
