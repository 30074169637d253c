#ifndef QUIVLOC_QUIVER_HPP
#define QUIVLOC_QUIVER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace quivloc {

using Rational = mpq_class;

/// Raw, unvalidated quiver description as it comes out of a document.
struct RawArrow {
  std::string id;
  std::string source;
  std::string target;
};

struct RawQuiver {
  std::vector<std::string> vertices;
  std::vector<RawArrow> arrows;
};

struct Arrow {
  std::string id;
  std::size_t source;
  std::size_t target;

  bool operator==(const Arrow&) const = default;
};

/// A finite quiver. Declaration order of vertices and arrows is canonical:
/// every index-based structure in the library (dimension vectors, characters,
/// variable orders) is keyed by these indices.
class Quiver {
 public:
  Quiver() = default;

  std::size_t vertexCount() const { return vertices_.size(); }
  std::size_t arrowCount() const { return arrows_.size(); }

  const std::string& vertexName(std::size_t v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertexNames() const { return vertices_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<std::size_t> vertexIndex(const std::string& name) const;
  std::optional<std::size_t> arrowIndex(const std::string& name) const;

  bool isConnected() const { return connected_; }
  bool isAcyclic() const { return acyclic_; }
  bool hasLoops() const;

  RawQuiver toRaw() const;

  bool operator==(const Quiver& other) const {
    return vertices_ == other.vertices_ && arrows_ == other.arrows_;
  }

 private:
  friend Quiver validateQuiver(const RawQuiver& raw);

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  bool connected_ = true;
  bool acyclic_ = true;
};

/// Checks ids and endpoints and computes the connectedness/acyclicity flags.
/// Throws DomainError on duplicate ids or dangling endpoints.
Quiver validateQuiver(const RawQuiver& raw);

/// Nonnegative integer vector indexed by the vertices of a quiver.
class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::vector<std::int64_t> entries);
  static DimensionVector zero(std::size_t n) { return DimensionVector(std::vector<std::int64_t>(n, 0)); }
  static DimensionVector thin(std::size_t n) { return DimensionVector(std::vector<std::int64_t>(n, 1)); }
  /// Builds from a name-keyed map; vertices not mentioned get 0.
  static DimensionVector fromMap(const Quiver& q, const std::map<std::string, std::int64_t>& entries);

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t v) const { return entries_[v]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  std::int64_t total() const;
  bool isZero() const;
  bool isThin() const;

  DimensionVector operator+(const DimensionVector& o) const;
  DimensionVector operator-(const DimensionVector& o) const;
  DimensionVector scaled(std::int64_t k) const;
  /// Componentwise partial order.
  bool leq(const DimensionVector& o) const;

  auto operator<=>(const DimensionVector&) const = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Integer-valued linear form on dimension vectors.
class StabilityCondition {
 public:
  StabilityCondition() = default;
  explicit StabilityCondition(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  static StabilityCondition fromMap(const Quiver& q, const std::map<std::string, std::int64_t>& entries);

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t v) const { return entries_[v]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  std::int64_t operator()(const DimensionVector& d) const;

  bool operator==(const StabilityCondition&) const = default;

 private:
  std::vector<std::int64_t> entries_;
};

struct Slope {
  Rational value;

  friend bool operator==(const Slope& a, const Slope& b) { return a.value == b.value; }
  friend bool operator<(const Slope& a, const Slope& b) { return a.value < b.value; }
  friend bool operator<=(const Slope& a, const Slope& b) { return a.value <= b.value; }
  friend bool operator>(const Slope& a, const Slope& b) { return a.value > b.value; }
  friend bool operator>=(const Slope& a, const Slope& b) { return a.value >= b.value; }
};

/// theta(d) / sum_i d_i. Throws DomainError for d = 0.
Slope slope(const StabilityCondition& theta, const DimensionVector& d);

/// <d,e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j.
std::int64_t eulerForm(const Quiver& q, const DimensionVector& d, const DimensionVector& e);

/// Connectivity of the underlying unoriented graph on `vertices` using only
/// the arrows in `arrows` whose endpoints both lie in `vertices`. The empty
/// vertex set counts as disconnected.
bool isConnectedSupport(const Quiver& q, const std::vector<std::size_t>& arrows,
                        const std::vector<std::size_t>& vertices);

/// Whole quiver together with the stability data read from an input document.
struct QuiverProblem {
  Quiver quiver;
  std::optional<StabilityCondition> theta;
  std::optional<DimensionVector> d;
};

/// Parses the JSON input document (see README for the grammar). Throws
/// ParseError on malformed JSON/shape and DomainError on invalid quivers.
QuiverProblem parseQuiverDocument(const std::string& text);
QuiverProblem loadQuiverDocument(const std::string& path);
std::string writeQuiverDocument(const QuiverProblem& problem);

}  // namespace quivloc

#endif  // QUIVLOC_QUIVER_HPP
