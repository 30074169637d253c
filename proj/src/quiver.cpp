#include "quivloc/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "quivloc/error.hpp"

namespace quivloc {

namespace {

std::size_t findRoot(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Kahn's algorithm; loops make the quiver cyclic.
bool computeAcyclic(std::size_t n, const std::vector<Arrow>& arrows) {
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& a : arrows) {
    out[a.source].push_back(a.target);
    ++indegree[a.target];
  }
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) stack.push_back(v);
  std::size_t seen = 0;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    ++seen;
    for (auto w : out[v])
      if (--indegree[w] == 0) stack.push_back(w);
  }
  return seen == n;
}

}  // namespace

std::optional<std::size_t> Quiver::vertexIndex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::arrowIndex(const std::string& name) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].id == name) return a;
  return std::nullopt;
}

bool Quiver::hasLoops() const {
  return std::any_of(arrows_.begin(), arrows_.end(),
                     [](const Arrow& a) { return a.source == a.target; });
}

RawQuiver Quiver::toRaw() const {
  RawQuiver raw;
  raw.vertices = vertices_;
  for (const auto& a : arrows_) raw.arrows.push_back({a.id, vertices_[a.source], vertices_[a.target]});
  return raw;
}

Quiver validateQuiver(const RawQuiver& raw) {
  Quiver q;
  std::set<std::string> seen;
  for (const auto& v : raw.vertices) {
    if (v.empty()) throw DomainError("empty vertex id");
    if (!seen.insert(v).second) throw DomainError("duplicate vertex id '" + v + "'");
    q.vertices_.push_back(v);
  }
  std::set<std::string> seenArrows;
  for (const auto& a : raw.arrows) {
    if (a.id.empty()) throw DomainError("empty arrow id");
    if (!seenArrows.insert(a.id).second) throw DomainError("duplicate arrow id '" + a.id + "'");
    auto s = q.vertexIndex(a.source);
    auto t = q.vertexIndex(a.target);
    if (!s) throw DomainError("arrow '" + a.id + "' has undeclared source '" + a.source + "'");
    if (!t) throw DomainError("arrow '" + a.id + "' has undeclared target '" + a.target + "'");
    q.arrows_.push_back({a.id, *s, *t});
  }
  std::vector<std::size_t> all(q.vertexCount()), arrows(q.arrowCount());
  std::iota(all.begin(), all.end(), 0);
  std::iota(arrows.begin(), arrows.end(), 0);
  q.connected_ = q.vertexCount() == 0 || isConnectedSupport(q, arrows, all);
  q.acyclic_ = computeAcyclic(q.vertexCount(), q.arrows_);
  return q;
}

DimensionVector::DimensionVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  for (auto e : entries_)
    if (e < 0) throw DomainError("dimension vectors must be nonnegative");
}

DimensionVector DimensionVector::fromMap(const Quiver& q, const std::map<std::string, std::int64_t>& entries) {
  std::vector<std::int64_t> v(q.vertexCount(), 0);
  for (const auto& [name, value] : entries) {
    auto idx = q.vertexIndex(name);
    if (!idx) throw DomainError("dimension vector mentions unknown vertex '" + name + "'");
    v[*idx] = value;
  }
  return DimensionVector(std::move(v));
}

std::int64_t DimensionVector::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool DimensionVector::isZero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

bool DimensionVector::isThin() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 1; });
}

DimensionVector DimensionVector::operator+(const DimensionVector& o) const {
  std::vector<std::int64_t> r(entries_);
  for (std::size_t v = 0; v < r.size(); ++v) r[v] += o.entries_.at(v);
  return DimensionVector(std::move(r));
}

DimensionVector DimensionVector::operator-(const DimensionVector& o) const {
  std::vector<std::int64_t> r(entries_);
  for (std::size_t v = 0; v < r.size(); ++v) r[v] -= o.entries_.at(v);
  return DimensionVector(std::move(r));
}

DimensionVector DimensionVector::scaled(std::int64_t k) const {
  std::vector<std::int64_t> r(entries_);
  for (auto& e : r) e *= k;
  return DimensionVector(std::move(r));
}

bool DimensionVector::leq(const DimensionVector& o) const {
  for (std::size_t v = 0; v < entries_.size(); ++v)
    if (entries_[v] > o.entries_.at(v)) return false;
  return true;
}

StabilityCondition StabilityCondition::fromMap(const Quiver& q,
                                               const std::map<std::string, std::int64_t>& entries) {
  std::vector<std::int64_t> v(q.vertexCount(), 0);
  for (const auto& [name, value] : entries) {
    auto idx = q.vertexIndex(name);
    if (!idx) throw DomainError("stability condition mentions unknown vertex '" + name + "'");
    v[*idx] = value;
  }
  return StabilityCondition(std::move(v));
}

std::int64_t StabilityCondition::operator()(const DimensionVector& d) const {
  std::int64_t s = 0;
  for (std::size_t v = 0; v < entries_.size(); ++v) s += entries_[v] * d[v];
  return s;
}

Slope slope(const StabilityCondition& theta, const DimensionVector& d) {
  if (d.isZero()) throw DomainError("slope of the zero dimension vector is undefined");
  Rational r(theta(d), d.total());
  r.canonicalize();
  return Slope{r};
}

std::int64_t eulerForm(const Quiver& q, const DimensionVector& d, const DimensionVector& e) {
  std::int64_t s = 0;
  for (std::size_t v = 0; v < q.vertexCount(); ++v) s += d[v] * e[v];
  for (const auto& a : q.arrows()) s -= d[a.source] * e[a.target];
  return s;
}

bool isConnectedSupport(const Quiver& q, const std::vector<std::size_t>& arrows,
                        const std::vector<std::size_t>& vertices) {
  if (vertices.empty()) return false;
  std::vector<bool> inSet(q.vertexCount(), false);
  for (auto v : vertices) inSet.at(v) = true;
  std::vector<std::size_t> parent(q.vertexCount());
  std::iota(parent.begin(), parent.end(), 0);
  for (auto a : arrows) {
    const auto& arr = q.arrow(a);
    if (!inSet[arr.source] || !inSet[arr.target]) continue;
    parent[findRoot(parent, arr.source)] = findRoot(parent, arr.target);
  }
  auto root = findRoot(parent, vertices.front());
  return std::all_of(vertices.begin(), vertices.end(),
                     [&](std::size_t v) { return findRoot(parent, v) == root; });
}

QuiverProblem parseQuiverDocument(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed quiver document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("quiver document must be an object");

  RawQuiver raw;
  std::map<std::string, std::int64_t> theta, dim;
  try {
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
      throw ParseError("quiver document needs a 'vertices' array");
    for (const auto& v : doc["vertices"]) raw.vertices.push_back(v.get<std::string>());
    if (doc.contains("arrows")) {
      if (!doc["arrows"].is_array()) throw ParseError("'arrows' must be an array");
      for (const auto& a : doc["arrows"]) {
        if (!a.is_object() || !a.contains("id") || !a.contains("src") || !a.contains("tgt"))
          throw ParseError("each arrow needs 'id', 'src' and 'tgt'");
        raw.arrows.push_back({a["id"].get<std::string>(), a["src"].get<std::string>(),
                              a["tgt"].get<std::string>()});
      }
    }
    if (doc.contains("theta")) theta = doc["theta"].get<std::map<std::string, std::int64_t>>();
    if (doc.contains("d")) dim = doc["d"].get<std::map<std::string, std::int64_t>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("quiver document has the wrong shape: ") + e.what());
  }

  QuiverProblem problem;
  problem.quiver = validateQuiver(raw);
  if (doc.contains("theta")) problem.theta = StabilityCondition::fromMap(problem.quiver, theta);
  if (doc.contains("d")) problem.d = DimensionVector::fromMap(problem.quiver, dim);
  return problem;
}

QuiverProblem loadQuiverDocument(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open quiver file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parseQuiverDocument(buffer.str());
}

std::string writeQuiverDocument(const QuiverProblem& problem) {
  using nlohmann::ordered_json;
  const auto& q = problem.quiver;
  ordered_json doc;
  doc["vertices"] = q.vertexNames();
  doc["arrows"] = ordered_json::array();
  for (const auto& a : q.arrows())
    doc["arrows"].push_back({{"id", a.id}, {"src", q.vertexName(a.source)}, {"tgt", q.vertexName(a.target)}});
  if (problem.theta) {
    ordered_json t = ordered_json::object();
    for (std::size_t v = 0; v < q.vertexCount(); ++v) t[q.vertexName(v)] = (*problem.theta)[v];
    doc["theta"] = t;
  }
  if (problem.d) {
    ordered_json t = ordered_json::object();
    for (std::size_t v = 0; v < q.vertexCount(); ++v) t[q.vertexName(v)] = (*problem.d)[v];
    doc["d"] = t;
  }
  return doc.dump(2) + "\n";
}

}  // namespace quivloc
