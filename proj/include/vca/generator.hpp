// generator.hpp — deterministic instance families: full, random, planted.
//
// All generators produce a feasible candidate set (the Instance constructor
// re-validates) and are reproducible: the same arguments and seed yield the
// same instance on every platform, because the only entropy sources are
// splitmix64 and std::mt19937_64, both fully specified.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "feasibility.hpp"
#include "instance.hpp"

namespace vca {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the top 53 bits of the engine output.
inline double unit_draw(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline void check_gen_args(int n, double p) {
  if (n < 4) throw FormatError("generator: n must be at least 4");
  if (!(p > 0.0) || p > 1.0)
    throw FormatError("generator: density p must lie in (0, 1]");
}

}  // namespace detail

// Every chord of the cycle: n(n-3)/2 links.
inline Instance gen_all_chords(int n) {
  if (n < 4) throw FormatError("generator: n must be at least 4");
  std::vector<Chord> links;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 2; b <= n; ++b)
      if (!(a == 1 && b == n)) links.push_back(Chord{a, b});
  return Instance(n, std::move(links));
}

// Each chord included independently with probability p. If the draw is
// infeasible the seed is re-derived and the draw repeated, up to a fixed
// attempt bound.
inline Instance gen_random(int n, double p, std::uint64_t seed) {
  detail::check_gen_args(n, p);
  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::mt19937_64 eng(
        detail::splitmix64(seed + static_cast<std::uint64_t>(attempt)));
    std::vector<Chord> links;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 2; b <= n; ++b) {
        if (a == 1 && b == n) continue;
        if (detail::unit_draw(eng) < p) links.push_back(Chord{a, b});
      }
    if (is_feasible_crossing(n, links).feasible)
      return Instance(n, std::move(links));
  }
  throw GenerationFailedError(
      "no feasible random draw for n=" + std::to_string(n) + ", p=" +
      std::to_string(p) + " within " + std::to_string(kMaxAttempts) +
      " attempts; raise p");
}

// k crossing pairs planted in disjoint windows spread around the cycle, then
// deterministic bridging links until the set is feasible. The planted pairs
// start out as k separate circle components, which is the interesting regime
// for multi-component local search. k scales with p (roughly p * n/4) and
// the window placement is jittered from the seed.
inline Instance gen_planted(int n, double p, std::uint64_t seed) {
  detail::check_gen_args(n, p);
  const int k_cap = n / 4;
  int k = static_cast<int>(std::llround(p * static_cast<double>(n) / 4.0));
  k = std::max(1, std::min(k, k_cap));

  std::set<Chord> links;
  const int spacing = n / k;
  const int rotation = static_cast<int>(
      detail::splitmix64(seed) % static_cast<std::uint64_t>(n));
  for (int j = 0; j < k; ++j) {
    const int slack = spacing - 4;
    const int jitter =
        slack > 0
            ? static_cast<int>(
                  detail::splitmix64(seed ^ (0x5bf0'3635ULL + 2 * static_cast<std::uint64_t>(j))) %
                  static_cast<std::uint64_t>(slack + 1))
            : 0;
    const int base = (rotation + j * spacing + jitter) % n;  // 0-based
    auto vertex = [n, base](int offset) { return (base + offset) % n + 1; };
    links.insert(make_chord(vertex(0), vertex(2), n));
    links.insert(make_chord(vertex(1), vertex(3), n));
  }

  // Bridge remaining uncrossed chords: connect the midpoints of the two
  // sides of the first uncrossed chord, which always crosses it and is never
  // already present. Each round crosses at least one new chord, so this
  // terminates.
  for (;;) {
    std::vector<Chord> current(links.begin(), links.end());
    const FeasibilityReport report = is_feasible_crossing(n, current);
    if (report.feasible) return Instance(n, std::move(current));
    const Chord gap = *report.uncrossed_chord;
    const auto [first, second] = sides(gap, n);
    const int u = first[first.size() / 2];
    const int w = second[second.size() / 2];
    links.insert(make_chord(u, w, n));
  }
}

}  // namespace vca
