#include "quivloc/linalg.hpp"

#include <utility>

namespace quivloc {

std::size_t spanRank(const std::vector<Polynomial>& polys) {
  EchelonBasis<Monomial, TermOrder> basis;
  for (const auto& p : polys) basis.insert(coordinates(p));
  return basis.rank();
}

namespace {

struct TupleKeyOrder {
  bool operator()(const std::pair<std::size_t, Monomial>& a, const std::pair<std::size_t, Monomial>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return TermOrder{}(a.second, b.second);
  }
};

}  // namespace

std::size_t tupleSpanRank(const std::vector<std::vector<Polynomial>>& tuples) {
  using Key = std::pair<std::size_t, Monomial>;
  EchelonBasis<Key, TupleKeyOrder> basis;
  for (const auto& t : tuples) {
    EchelonBasis<Key, TupleKeyOrder>::Vector v;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (const auto& [m, c] : t[i].terms()) v.emplace(Key{i, m}, c);
    basis.insert(std::move(v));
  }
  return basis.rank();
}

}  // namespace quivloc
