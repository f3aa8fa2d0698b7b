// feasibility.hpp — feasibility oracles, greedy pruning, minimal completions.
//
// A link subset S' is feasible when C_n ∪ S' is 3-vertex-connected. Three
// equivalent oracles are provided and cross-validated by the tests:
//  * crossing-based: every chord of C_n is crossed by some member;
//  * component-based: S' covers every vertex and forms a single circle
//    component (the hot-path oracle, near-linear after sorting);
//  * brute force: delete every vertex pair and check connectivity (the
//    trusted, deliberately simple test oracle).
// On failure the first two report an uncrossed chord, whose endpoints are a
// separating pair of C_n ∪ S'.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "circle.hpp"
#include "errors.hpp"
#include "instance.hpp"

namespace vca {

struct FeasibilityReport {
  bool feasible{false};
  // Witness when infeasible: a chord of C_n crossed by no member; its two
  // endpoints disconnect C_n ∪ S' when removed.
  std::optional<Chord> uncrossed_chord;
  // Witness when feasible: the single circle component (all of S').
  std::vector<Chord> component;
};

// Crossing-based oracle: scans all chords of C_n in lexicographic order and
// reports the first uncrossed one. O(n² · |S'|); fine at desk scale, and
// the component-based oracle below is the hot-path choice anyway.
inline FeasibilityReport is_feasible_crossing(int n,
                                              const std::vector<Chord>& links) {
  for (int a = 1; a <= n - 2; ++a) {
    for (int b = a + 2; b <= n; ++b) {
      if (a == 1 && b == n) continue;  // cycle edge, not a chord
      const Chord c{a, b};
      bool crossed = false;
      for (const Chord& e : links)
        if (crosses(e, c)) {
          crossed = true;
          break;
        }
      if (!crossed) return {false, c, {}};
    }
  }
  FeasibilityReport report;
  report.feasible = true;
  report.component = links;
  std::sort(report.component.begin(), report.component.end());
  return report;
}

// Component-based oracle: feasible iff S' covers every vertex and its
// crossing graph is one connected component with at least two links.
inline FeasibilityReport is_feasible_components(
    int n, const std::vector<Chord>& links) {
  std::vector<Chord> sorted = links;
  std::sort(sorted.begin(), sorted.end());

  // Uncovered vertex v: the chord {v-1, v+1} is crossed only by links with
  // an endpoint at v, so it is an uncrossed witness.
  std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);
  for (const Chord& c : sorted)
    covered[static_cast<std::size_t>(c.a)] =
        covered[static_cast<std::size_t>(c.b)] = 1;
  for (int v = 1; v <= n; ++v)
    if (!covered[static_cast<std::size_t>(v)])
      return {false, make_chord(cyclic_prev(v, n), cyclic_next(v, n), n), {}};

  std::vector<int> labels;
  const int classes = detail::crossing_components(sorted, labels);
  if (classes == 1) {
    FeasibilityReport report;
    report.feasible = true;
    report.component = std::move(sorted);
    return report;
  }

  // A singleton link is itself an uncrossed chord.
  std::vector<int> class_size(static_cast<std::size_t>(classes), 0);
  for (int label : labels) ++class_size[static_cast<std::size_t>(label)];
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (class_size[static_cast<std::size_t>(labels[i])] == 1)
      return {false, sorted[i], {}};

  // Several genuine components: any border chord of any of them is crossed
  // neither by that component nor by any other (a link crossing a border
  // chord would itself be crossed by the component, merging the classes).
  std::vector<Chord> first_group;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (labels[i] == labels[0]) first_group.push_back(sorted[i]);
  CircleComponent profile = detail::build_profile(n, first_group);
  return {false, profile.border_chords.front(), {}};
}

// Brute-force oracle: for every vertex pair, delete both and test
// connectivity of what remains of C_n ∪ S'.
inline bool is_three_connected(int n, const std::vector<Chord>& links) {
  if (n < 4) return false;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) {
    adj[static_cast<std::size_t>(v)].push_back(cyclic_next(v, n));
    adj[static_cast<std::size_t>(v)].push_back(cyclic_prev(v, n));
  }
  for (const Chord& c : links) {
    adj[static_cast<std::size_t>(c.a)].push_back(c.b);
    adj[static_cast<std::size_t>(c.b)].push_back(c.a);
  }
  std::vector<int> queue;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      std::fill(seen.begin(), seen.end(), 0);
      seen[static_cast<std::size_t>(u)] = seen[static_cast<std::size_t>(v)] = 1;
      int start = 0;
      for (int w = 1; w <= n; ++w)
        if (w != u && w != v) {
          start = w;
          break;
        }
      queue.assign(1, start);
      seen[static_cast<std::size_t>(start)] = 1;
      int reached = 1;
      while (!queue.empty()) {
        const int w = queue.back();
        queue.pop_back();
        for (int x : adj[static_cast<std::size_t>(w)])
          if (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            ++reached;
            queue.push_back(x);
          }
      }
      if (reached != n - 2) return false;
    }
  }
  return true;
}

// LinkSet conveniences.
inline FeasibilityReport is_feasible_crossing(const LinkSet& s) {
  return is_feasible_crossing(s.instance().n(), s.members());
}
inline FeasibilityReport is_feasible_components(const LinkSet& s) {
  return is_feasible_components(s.instance().n(), s.members());
}
inline bool is_three_connected(int n, const LinkSet& s) {
  return is_three_connected(n, s.members());
}

// Greedy reverse-delete: walks the members in lexicographic order and drops
// every link whose removal keeps the set feasible. One pass suffices:
// feasibility is monotone under supersets, so a link kept because its
// removal broke feasibility then would break it against the smaller final
// set too. The result is inclusion-minimal and, by the structure of minimal
// solutions, acyclic as a graph on [n] with size at most n-2.
inline LinkSet prune_minimal(const LinkSet& s) {
  const int n = s.instance().n();
  if (!detail::chords_three_connect(n, s.members()))
    throw InfeasibleInputError("prune_minimal: input set is not feasible");
  std::vector<int> kept = s.indices();
  for (int candidate : s.indices()) {
    std::vector<int> trial;
    trial.reserve(kept.size() - 1);
    for (int i : kept)
      if (i != candidate) trial.push_back(i);
    std::vector<Chord> chords;
    chords.reserve(trial.size());
    for (int i : trial)
      chords.push_back(s.instance().links()[static_cast<std::size_t>(i)]);
    if (detail::chords_three_connect(n, chords)) kept = std::move(trial);
  }
  return LinkSet::from_indices(s.instance(), std::move(kept));
}

// Minimal completion of F within S: the inclusion-minimal Q ⊆ S\F with F∪Q
// feasible, obtained by starting from Q0 = S\F and pruning in lexicographic
// order (starting full and pruning guarantees inclusion-minimality, which a
// greedy growth would not).
inline LinkSet minimal_completion(const LinkSet& f, const LinkSet& s) {
  if (!f.subset_of(s)) throw Error("minimal_completion: F must be a subset of S");
  const Instance& inst = s.instance();
  if (!detail::chords_three_connect(inst.n(), s.members()))
    throw InfeasibleInputError("minimal_completion: S is not feasible");

  std::vector<int> current = s.indices();
  std::vector<char> in_f(static_cast<std::size_t>(inst.link_count()), 0);
  for (int i : f.indices()) in_f[static_cast<std::size_t>(i)] = 1;
  for (int candidate : s.indices()) {
    if (in_f[static_cast<std::size_t>(candidate)]) continue;
    std::vector<int> trial;
    trial.reserve(current.size() - 1);
    for (int i : current)
      if (i != candidate) trial.push_back(i);
    std::vector<Chord> chords;
    chords.reserve(trial.size());
    for (int i : trial)
      chords.push_back(inst.links()[static_cast<std::size_t>(i)]);
    if (detail::chords_three_connect(inst.n(), chords))
      current = std::move(trial);
  }
  std::vector<int> q;
  for (int i : current)
    if (!in_f[static_cast<std::size_t>(i)]) q.push_back(i);
  return LinkSet::from_indices(inst, std::move(q));
}

}  // namespace vca
