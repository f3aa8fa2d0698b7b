// circle.hpp — circle graphs, circle components, border chords, zones.
//
// The circle graph of a set of chords has one node per chord and an edge
// wherever two chords cross. A circle component is a chord set whose circle
// graph is connected and has at least two nodes. For a component L, the
// border chords P(L) join cyclically consecutive covered vertices of V(L)
// across a gap, and each border chord's zone I(ab, L) is the side of ab that
// contains no vertex of V(L). Contracting everything outside a closed zone
// yields a smaller instance of the same problem (the zone instance).
#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "instance.hpp"

namespace vca {

// Adjacency view of the crossing relation on a link set.
struct CircleGraph {
  std::vector<Chord> nodes;                  // sorted lexicographically
  std::vector<std::vector<int>> adjacency;   // positions into nodes
};

// A circle component together with its derived structure.
struct CircleComponent {
  int n{0};
  std::vector<Chord> links;          // sorted lexicographically
  VertexList covered;                // V(L), sorted
  std::vector<Chord> border_chords;  // P(L), sorted lexicographically
  // zones[i] is the zone of border_chords[i]: the vertices strictly inside
  // the gap, listed in arc order from one chord endpoint to the other.
  std::vector<VertexList> zones;
  VertexList internal_vertices;      // covered, not incident to any border chord
  VertexList border_vertices;        // covered, incident to a border chord
};

// Partition of a link set into maximal circle components plus the links
// that cross nothing (singletons).
struct ComponentPartition {
  std::vector<CircleComponent> components;
  std::vector<Chord> singletons;
};

inline CircleGraph circle_graph(const LinkSet& F) {
  CircleGraph g;
  g.nodes = F.members();
  const int m = static_cast<int>(g.nodes.size());
  g.adjacency.assign(static_cast<std::size_t>(m), {});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (crosses(g.nodes[static_cast<std::size_t>(i)],
                  g.nodes[static_cast<std::size_t>(j)])) {
        g.adjacency[static_cast<std::size_t>(i)].push_back(j);
        g.adjacency[static_cast<std::size_t>(j)].push_back(i);
      }
  return g;
}

namespace detail {

// Crossing-connectivity component labels for a chord list; returns the
// number of classes and fills labels with class ids in order of first
// appearance (so class ids follow the smallest member in lex order).
inline int crossing_components(const std::vector<Chord>& links,
                               std::vector<int>& labels) {
  const int m = static_cast<int>(links.size());
  std::vector<int> parent(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (crosses(links[static_cast<std::size_t>(i)],
                  links[static_cast<std::size_t>(j)]))
        parent[static_cast<std::size_t>(find(j))] = find(i);
  labels.assign(static_cast<std::size_t>(m), -1);
  int classes = 0;
  std::vector<int> root_label(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    int r = find(i);
    if (root_label[static_cast<std::size_t>(r)] < 0)
      root_label[static_cast<std::size_t>(r)] = classes++;
    labels[static_cast<std::size_t>(i)] = root_label[static_cast<std::size_t>(r)];
  }
  return classes;
}

inline CircleComponent build_profile(int n, const std::vector<Chord>& links) {
  CircleComponent out;
  out.n = n;
  out.links = links;

  std::vector<char> covered_flag(static_cast<std::size_t>(n) + 1, 0);
  for (const Chord& c : links) covered_flag[static_cast<std::size_t>(c.a)] =
      covered_flag[static_cast<std::size_t>(c.b)] = 1;
  for (int v = 1; v <= n; ++v)
    if (covered_flag[static_cast<std::size_t>(v)]) out.covered.push_back(v);

  // Walk consecutive covered vertices around the cycle; a gap of at least
  // one vertex yields a border chord (a gap of zero would be a cycle edge,
  // which is not a chord and is excluded by definition).
  const int k = static_cast<int>(out.covered.size());
  std::vector<std::pair<Chord, VertexList>> borders;
  for (int i = 0; i < k; ++i) {
    const int u = out.covered[static_cast<std::size_t>(i)];
    const int w = out.covered[static_cast<std::size_t>((i + 1) % k)];
    if (u == w) continue;
    VertexList gap;
    for (int v = cyclic_next(u, n); v != w; v = cyclic_next(v, n))
      gap.push_back(v);
    if (!gap.empty())
      borders.emplace_back(make_chord(u, w, n), std::move(gap));
  }
  std::sort(borders.begin(), borders.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<char> border_flag(static_cast<std::size_t>(n) + 1, 0);
  for (auto& [chord, zone] : borders) {
    border_flag[static_cast<std::size_t>(chord.a)] = 1;
    border_flag[static_cast<std::size_t>(chord.b)] = 1;
    out.border_chords.push_back(chord);
    out.zones.push_back(std::move(zone));
  }
  for (int v : out.covered)
    (border_flag[static_cast<std::size_t>(v)] ? out.border_vertices
                                              : out.internal_vertices)
        .push_back(v);
  return out;
}

inline std::string profile_key(int n, const std::vector<Chord>& links) {
  std::string key = std::to_string(n);
  for (const Chord& c : links) {
    key += ',';
    key += std::to_string(c.a);
    key += '-';
    key += std::to_string(c.b);
  }
  return key;
}

}  // namespace detail

// Profile of a circle component: covered vertices, border chords, zones,
// internal/border classification. Results are memoized per content (the
// cache is thread-local, so concurrent callers never contend and always see
// values identical to a fresh computation).
inline CircleComponent component_profile(const LinkSet& L) {
  const std::vector<Chord>& links = L.members();
  if (links.size() < 2)
    throw NotAComponentError("a circle component needs at least 2 links, got " +
                             std::to_string(links.size()));
  std::vector<int> labels;
  if (detail::crossing_components(links, labels) != 1)
    throw NotAComponentError("circle graph of the given links is disconnected");

  const int n = L.instance().n();
  thread_local std::unordered_map<std::string, CircleComponent> cache;
  const std::string key = detail::profile_key(n, links);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (cache.size() > 4096) cache.clear();
  CircleComponent profile = detail::build_profile(n, links);
  cache.emplace(key, profile);
  return profile;
}

// Splits F into maximal circle components (profiled) and singletons.
// Components are ordered by their lexicographically smallest link.
inline ComponentPartition components(const LinkSet& F) {
  ComponentPartition out;
  std::vector<int> labels;
  const int classes = detail::crossing_components(F.members(), labels);
  std::vector<std::vector<Chord>> groups(static_cast<std::size_t>(classes));
  for (std::size_t i = 0; i < labels.size(); ++i)
    groups[static_cast<std::size_t>(labels[i])].push_back(F.members()[i]);
  for (auto& group : groups) {
    if (group.size() == 1) {
      out.singletons.push_back(group.front());
    } else {
      out.components.push_back(
          component_profile(LinkSet(F.instance(), group)));
    }
  }
  std::sort(out.singletons.begin(), out.singletons.end());
  return out;
}

// Union of the border chords P(L) over all components of F (the perimeter
// of the family), sorted and deduplicated.
inline std::vector<Chord> family_border_chords(const LinkSet& F) {
  std::set<Chord> acc;
  for (const CircleComponent& comp : components(F).components)
    acc.insert(comp.border_chords.begin(), comp.border_chords.end());
  return {acc.begin(), acc.end()};
}

// Whether the component L crosses chord c, decided structurally: c is
// crossed iff it is an internal chord of L (both endpoints covered and not
// a border chord) or it crosses some border chord. Must agree with the
// direct scan over L's links; the tests compare both.
inline bool component_crosses_chord(const CircleComponent& L, const Chord& c) {
  const bool a_covered =
      std::binary_search(L.covered.begin(), L.covered.end(), c.a);
  const bool b_covered =
      std::binary_search(L.covered.begin(), L.covered.end(), c.b);
  if (a_covered && b_covered)
    return !std::binary_search(L.border_chords.begin(), L.border_chords.end(),
                               c);
  for (const Chord& p : L.border_chords)
    if (crosses(c, p)) return true;
  return false;
}

// Whether e connects X: X ∪ {e} is a circle component (connected crossing
// graph, at least two links).
inline bool connects(const Chord& e, const LinkSet& X) {
  if (X.contains(e)) throw Error("connects: e must not belong to X");
  std::vector<Chord> all = X.members();
  all.push_back(e);
  std::sort(all.begin(), all.end());
  if (all.size() < 2) return false;
  std::vector<int> labels;
  return detail::crossing_components(all, labels) == 1;
}

// Builds the zone instance of border chord ab of component L: keep the
// closed zone {a} ∪ I(ab,L) ∪ {b}, contract everything else to a single new
// vertex v0, erase the links of L, add ab itself as a link, drop links that
// become loops or external cycle edges, and merge parallel classes. Returns
// the new instance together with the link map ψ from surviving original
// links to their images (parallel links map to the same image).
inline std::pair<Instance, std::map<Chord, Chord>> zone_instance(
    const Chord& ab, const CircleComponent& L, const LinkSet& S) {
  const int n = S.instance().n();
  if (n != L.n) throw Error("zone_instance: component belongs to another cycle");
  auto it = std::lower_bound(L.border_chords.begin(), L.border_chords.end(), ab);
  if (it == L.border_chords.end() || *it != ab)
    throw NotABorderChordError("chord " + to_string(ab) +
                               " is not a border chord of the component");
  const VertexList& zone =
      L.zones[static_cast<std::size_t>(it - L.border_chords.begin())];
  const int n_zone = static_cast<int>(zone.size()) + 3;
  if (n_zone < 4)
    throw DegenerateZoneError("zone instance would have fewer than 4 vertices");

  // New cycle order: one endpoint of ab, the zone in arc order, the other
  // endpoint, then the contracted vertex v0.
  VertexList seq;
  if (zone.front() == cyclic_next(ab.a, n)) {
    seq.push_back(ab.a);
    seq.insert(seq.end(), zone.begin(), zone.end());
    seq.push_back(ab.b);
  } else {
    seq.push_back(ab.b);
    seq.insert(seq.end(), zone.begin(), zone.end());
    seq.push_back(ab.a);
  }

  const int v0 = n_zone;
  std::vector<int> new_index(static_cast<std::size_t>(n) + 1, v0);
  for (std::size_t pos = 0; pos < seq.size(); ++pos)
    new_index[static_cast<std::size_t>(seq[pos])] = static_cast<int>(pos) + 1;

  std::map<Chord, Chord> psi;
  std::set<Chord> zone_links;
  for (const Chord& s : S.members()) {
    if (std::binary_search(L.links.begin(), L.links.end(), s)) continue;
    int u = new_index[static_cast<std::size_t>(s.a)];
    int w = new_index[static_cast<std::size_t>(s.b)];
    if (u == w) continue;  // loop at v0: both endpoints were contracted
    if (u > w) std::swap(u, w);
    if (cyclically_consecutive(u, w, n_zone)) continue;  // external cycle edge
    const Chord image{u, w};
    psi.emplace(s, image);
    zone_links.insert(image);
  }
  zone_links.insert(Chord{1, n_zone - 1});  // ab becomes a link of the zone

  Instance zi(n_zone,
              std::vector<Chord>(zone_links.begin(), zone_links.end()));
  return {std::move(zi), std::move(psi)};
}

}  // namespace vca
