// instance.hpp — core data model: cycles, chords, crossing, instances.
//
// The problem: given the cycle C_n on vertices 1..n and a candidate set S of
// chords (called links), pick a small subset whose addition makes the graph
// 3-vertex-connected. This header defines chords and the crossing relation,
// the validated Instance type, the LinkSet view used for solutions and
// partial solutions, and the two on-disk formats (JSON and plain text).
//
// Vertices are 1-based; all cyclic arithmetic is wrapped in helpers so the
// n <-> 1 seam is handled in exactly one place.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace vca {

using VertexList = std::vector<int>;

// A chord of C_n: an edge between two non cyclically consecutive vertices,
// stored normalized with a < b.
struct Chord {
  int a{0};
  int b{0};
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

inline std::string to_string(const Chord& c) {
  return "{" + std::to_string(c.a) + "," + std::to_string(c.b) + "}";
}

// Successor/predecessor on the cycle (1-based, wrapping).
inline int cyclic_next(int v, int n) { return v == n ? 1 : v + 1; }
inline int cyclic_prev(int v, int n) { return v == 1 ? n : v - 1; }

inline bool cyclically_consecutive(int a, int b, int n) {
  return cyclic_next(a, n) == b || cyclic_next(b, n) == a;
}

// Normalizes and validates a chord of C_n.
inline Chord make_chord(int a, int b, int n) {
  if (a < 1 || a > n || b < 1 || b > n)
    throw FormatError("vertex out of range [1," + std::to_string(n) +
                      "]: " + to_string(Chord{a, b}));
  if (a == b) throw LoopError("loop at vertex " + std::to_string(a));
  if (a > b) std::swap(a, b);
  if (cyclically_consecutive(a, b, n))
    throw CycleEdgeError("endpoints " + to_string(Chord{a, b}) +
                         " are cyclically consecutive in C_" +
                         std::to_string(n));
  return Chord{a, b};
}

// No-throw validity predicate for already-normalized pairs.
inline bool valid_chord(const Chord& c, int n) {
  return 1 <= c.a && c.a < c.b && c.b <= n &&
         !cyclically_consecutive(c.a, c.b, n);
}

// Two chords cross iff their endpoints interleave around the cycle:
// x.a < y.a < x.b < y.b or y.a < x.a < y.b < x.b. Chords sharing a vertex
// never cross.
inline bool crosses(const Chord& x, const Chord& y) {
  return (x.a < y.a && y.a < x.b && x.b < y.b) ||
         (y.a < x.a && x.a < y.b && y.b < x.b);
}

// The two open sides into which a chord splits the cycle: first the interval
// {a+1..b-1}, then the wrapped interval {b+1..n, 1..a-1}. Both are nonempty
// for a valid chord.
inline std::pair<VertexList, VertexList> sides(const Chord& c, int n) {
  VertexList first, second;
  for (int v = c.a + 1; v < c.b; ++v) first.push_back(v);
  for (int v = c.b + 1; v <= n; ++v) second.push_back(v);
  for (int v = 1; v < c.a; ++v) second.push_back(v);
  return {std::move(first), std::move(second)};
}

namespace detail {

// Component-based feasibility on a raw chord list: S' 3-connects C_n iff S'
// covers every vertex and the crossing graph of S' is a single connected
// component of size >= 2. Shared by Instance validation and the generator's
// retry loop; the reporting oracles live in feasibility.hpp.
inline bool chords_three_connect(int n, const std::vector<Chord>& links) {
  if (n < 4) return false;
  const int m = static_cast<int>(links.size());
  if (m < 2) return false;

  std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);
  for (const Chord& c : links) covered[c.a] = covered[c.b] = 1;
  for (int v = 1; v <= n; ++v)
    if (!covered[v]) return false;

  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (crosses(links[i], links[j])) parent[find(i)] = find(j);
  const int root = find(0);
  for (int i = 1; i < m; ++i)
    if (find(i) != root) return false;
  return true;
}

}  // namespace detail

// A validated problem instance: cycle size n >= 4 plus the candidate link
// set S, stored canonically (a < b, sorted lexicographically, no
// duplicates). Construction verifies that S itself 3-connects the cycle;
// every algorithm in the library relies on that invariant. Immutable after
// construction, so instances are safe to share across threads.
class Instance {
 public:
  Instance(int n, std::vector<Chord> links) : n_(n), links_(std::move(links)) {
    if (n_ < 4)
      throw FormatError("cycle size must be at least 4, got " +
                        std::to_string(n_));
    std::sort(links_.begin(), links_.end());
    for (std::size_t i = 0; i < links_.size(); ++i) {
      if (!valid_chord(links_[i], n_))
        throw FormatError("invalid chord " + to_string(links_[i]) +
                          " for C_" + std::to_string(n_));
      if (i > 0 && links_[i] == links_[i - 1])
        throw FormatError("duplicate link " + to_string(links_[i]));
    }
    if (!detail::chords_three_connect(n_, links_))
      throw InfeasibleCandidateSetError(
          "candidate set does not 3-connect C_" + std::to_string(n_));
  }

  int n() const { return n_; }
  const std::vector<Chord>& links() const { return links_; }
  int link_count() const { return static_cast<int>(links_.size()); }

  // Position of c in the canonical link order, if c is a candidate link.
  std::optional<int> link_index(const Chord& c) const {
    auto it = std::lower_bound(links_.begin(), links_.end(), c);
    if (it == links_.end() || *it != c) return std::nullopt;
    return static_cast<int>(it - links_.begin());
  }

  friend bool operator==(const Instance& x, const Instance& y) {
    return x.n_ == y.n_ && x.links_ == y.links_;
  }

 private:
  int n_;
  std::vector<Chord> links_;
};

// An ordered subset of an instance's links, with a vertex -> member-links
// incidence index. This is the working currency of the solvers: solutions
// S', partial solutions F, completions Q, improvement sets K, matchings M.
class LinkSet {
 public:
  LinkSet() = default;

  explicit LinkSet(const Instance& inst) : inst_(&inst) {
    incidence_.assign(static_cast<std::size_t>(inst.n()) + 1, {});
  }

  // Builds from member chords; every member must be a candidate link.
  LinkSet(const Instance& inst, const std::vector<Chord>& members)
      : LinkSet(inst) {
    std::vector<int> idx;
    idx.reserve(members.size());
    for (const Chord& c : members) {
      auto i = inst.link_index(c);
      if (!i)
        throw FormatError("chord " + to_string(c) +
                          " is not a candidate link of the instance");
      idx.push_back(*i);
    }
    assign_indices(std::move(idx));
  }

  // Builds from positions into instance().links().
  static LinkSet from_indices(const Instance& inst, std::vector<int> idx) {
    LinkSet s(inst);
    for (int i : idx)
      if (i < 0 || i >= inst.link_count())
        throw FormatError("link index out of range: " + std::to_string(i));
    s.assign_indices(std::move(idx));
    return s;
  }

  static LinkSet full(const Instance& inst) {
    std::vector<int> idx(static_cast<std::size_t>(inst.link_count()));
    for (int i = 0; i < inst.link_count(); ++i) idx[static_cast<std::size_t>(i)] = i;
    return from_indices(inst, std::move(idx));
  }

  const Instance& instance() const {
    if (!inst_) throw Error("LinkSet not bound to an instance");
    return *inst_;
  }

  const std::vector<Chord>& members() const { return members_; }
  const std::vector<int>& indices() const { return idx_; }
  int size() const { return static_cast<int>(idx_.size()); }
  bool empty() const { return idx_.empty(); }

  bool contains_index(int i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
  }
  bool contains(const Chord& c) const {
    auto i = instance().link_index(c);
    return i && contains_index(*i);
  }

  // Member links incident to vertex v, as positions into members().
  const std::vector<int>& incident(int v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }

  // Sorted list of vertices covered by the members (the set V of this set).
  VertexList covered_vertices() const {
    VertexList out;
    for (int v = 1; v < static_cast<int>(incidence_.size()); ++v)
      if (!incidence_[static_cast<std::size_t>(v)].empty()) out.push_back(v);
    return out;
  }

  LinkSet unite(const LinkSet& other) const {
    check_same_instance(other);
    std::vector<int> idx;
    std::set_union(idx_.begin(), idx_.end(), other.idx_.begin(),
                   other.idx_.end(), std::back_inserter(idx));
    return from_indices(instance(), std::move(idx));
  }

  LinkSet minus(const LinkSet& other) const {
    check_same_instance(other);
    std::vector<int> idx;
    std::set_difference(idx_.begin(), idx_.end(), other.idx_.begin(),
                        other.idx_.end(), std::back_inserter(idx));
    return from_indices(instance(), std::move(idx));
  }

  bool subset_of(const LinkSet& other) const {
    check_same_instance(other);
    return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(),
                         idx_.end());
  }

  friend bool operator==(const LinkSet& x, const LinkSet& y) {
    return x.inst_ == y.inst_ && x.idx_ == y.idx_;
  }

 private:
  void assign_indices(std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    idx_ = std::move(idx);
    members_.clear();
    members_.reserve(idx_.size());
    for (auto& lane : incidence_) lane.clear();
    for (std::size_t pos = 0; pos < idx_.size(); ++pos) {
      const Chord& c = inst_->links()[static_cast<std::size_t>(idx_[pos])];
      members_.push_back(c);
      incidence_[static_cast<std::size_t>(c.a)].push_back(
          static_cast<int>(pos));
      incidence_[static_cast<std::size_t>(c.b)].push_back(
          static_cast<int>(pos));
    }
  }

  void check_same_instance(const LinkSet& other) const {
    if (inst_ != other.inst_)
      throw Error("LinkSet operands belong to different instances");
  }

  const Instance* inst_{nullptr};
  std::vector<int> idx_;           // sorted positions into instance().links()
  std::vector<Chord> members_;     // the same links, materialized
  std::vector<std::vector<int>> incidence_;  // vertex -> member positions
};

// ------------------------------------------------------------------ formats

enum class InstanceFormat { json, text };

// JSON: {"n": <int>, "links": [[a,b], ...]}.
// Text: first line n, then one "a b" pair per line.
// Both canonical on output: a < b and links sorted lexicographically.
inline std::string serialize_instance(const Instance& inst,
                                      InstanceFormat format =
                                          InstanceFormat::json) {
  if (format == InstanceFormat::json) {
    nlohmann::ordered_json j;
    j["n"] = inst.n();
    auto& arr = j["links"] = nlohmann::ordered_json::array();
    for (const Chord& c : inst.links()) arr.push_back({c.a, c.b});
    return j.dump() + "\n";
  }
  std::ostringstream out;
  out << inst.n() << "\n";
  for (const Chord& c : inst.links()) out << c.a << " " << c.b << "\n";
  return out.str();
}

namespace detail {

inline Instance parse_instance_json(const std::string& bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("links") ||
      j.size() != 2)
    throw FormatError("instance JSON must be {\"n\":…, \"links\":[[a,b],…]}");
  if (!j["n"].is_number_integer())
    throw FormatError("\"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (!j["links"].is_array()) throw FormatError("\"links\" must be an array");
  std::vector<Chord> links;
  for (const auto& item : j["links"]) {
    if (!item.is_array() || item.size() != 2 ||
        !item[0].is_number_integer() || !item[1].is_number_integer())
      throw FormatError("each link must be a two-integer array");
    links.push_back(make_chord(item[0].get<int>(), item[1].get<int>(), n));
  }
  return Instance(n, std::move(links));
}

inline Instance parse_instance_text(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string line;
  int n = 0;
  bool have_n = false;
  std::vector<Chord> links;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank line
    if (!have_n) {
      std::size_t used = 0;
      try {
        n = std::stoi(first, &used);
      } catch (const std::exception&) {
        throw FormatError("first line must be the cycle size n");
      }
      if (used != first.size())
        throw FormatError("first line must be the cycle size n");
      std::string extra;
      if (fields >> extra) throw FormatError("unexpected text after n");
      have_n = true;
      continue;
    }
    int a = 0, b = 0;
    std::size_t used = 0;
    std::string second, extra;
    if (!(fields >> second) || (fields >> extra))
      throw FormatError("expected exactly \"a b\" on line: " + line);
    try {
      a = std::stoi(first, &used);
      if (used != first.size()) throw std::invalid_argument(first);
      b = std::stoi(second, &used);
      if (used != second.size()) throw std::invalid_argument(second);
    } catch (const std::exception&) {
      throw FormatError("expected integers on line: " + line);
    }
    links.push_back(make_chord(a, b, n));
  }
  if (!have_n) throw FormatError("empty instance file");
  return Instance(n, std::move(links));
}

}  // namespace detail

// Auto-detects the format: JSON iff the first non-whitespace byte is '{'.
inline Instance parse_instance(const std::string& bytes) {
  for (char ch : bytes) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    return ch == '{' ? detail::parse_instance_json(bytes)
                     : detail::parse_instance_text(bytes);
  }
  throw FormatError("empty instance file");
}

}  // namespace vca
