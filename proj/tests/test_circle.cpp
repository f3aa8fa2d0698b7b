// test_circle.cpp — crossing graph, component profiles, zones, contractions.

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "test_helpers.hpp"
#include "vca/circle.hpp"
#include "vca/errors.hpp"
#include "vca/feasibility.hpp"
#include "vca/instance.hpp"

using vca::Chord;
using vca::Instance;
using vca::LinkSet;

namespace {

// n=8 workhorse: one small component {1,3},{2,4} inside a feasible S.
Instance eight() {
  return Instance(8, {Chord{1, 3}, Chord{2, 4}, Chord{2, 6}, Chord{5, 7},
                      Chord{4, 8}, Chord{1, 5}});
}

}  // namespace

TEST_CASE("circle graph adjacency mirrors pairwise crossing", "[circle]") {
  Instance inst = eight();
  const vca::CircleGraph g = vca::circle_graph(LinkSet::full(inst));
  REQUIRE(g.nodes.size() == 6);
  // nodes sorted: {1,3},{1,5},{2,4},{2,6},{4,8},{5,7}
  CHECK(g.nodes[0] == Chord{1, 3});
  CHECK(g.adjacency[0] == std::vector<int>{2, 3});       // {1,3} x {2,4},{2,6}
  CHECK(g.adjacency[1] == std::vector<int>{3, 4});       // {1,5} x {2,6},{4,8}
  CHECK(g.adjacency[4] == std::vector<int>{1, 3});       // {4,8} x {1,5},{2,6}
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (int j : g.adjacency[i])
      CHECK(vca::crosses(g.nodes[i], g.nodes[static_cast<std::size_t>(j)]));
}

TEST_CASE("component profile: covered set, perimeter, zones", "[circle]") {
  Instance inst = eight();
  const LinkSet pair(inst, {Chord{1, 3}, Chord{2, 4}});
  const vca::CircleComponent profile = vca::component_profile(pair);

  CHECK(profile.n == 8);
  CHECK(profile.covered == vca::VertexList{1, 2, 3, 4});
  REQUIRE(profile.border_chords == std::vector<Chord>{{1, 4}});
  REQUIRE(profile.zones.size() == 1);
  CHECK(profile.zones[0] == vca::VertexList{5, 6, 7, 8});
  CHECK(profile.internal_vertices == vca::VertexList{2, 3});
  CHECK(profile.border_vertices == vca::VertexList{1, 4});

  CHECK_THROWS_AS(vca::component_profile(LinkSet(inst, {Chord{1, 3}})),
                  vca::NotAComponentError);
  CHECK_THROWS_AS(
      vca::component_profile(LinkSet(inst, {Chord{1, 3}, Chord{5, 7}})),
      vca::NotAComponentError);
}

TEST_CASE("profiles of planted corpus components are internally consistent",
          "[circle]") {
  for (const Instance& inst : test_helpers::planted_corpus()) {
    const auto partition = vca::components(LinkSet::full(inst));
    for (const vca::CircleComponent& comp : partition.components) {
      // Zones partition the uncovered vertices; border chords pair up with
      // zones; internal + border vertices partition the covered set.
      std::size_t zone_total = 0;
      REQUIRE(comp.zones.size() == comp.border_chords.size());
      for (const auto& zone : comp.zones) {
        CHECK_FALSE(zone.empty());
        zone_total += zone.size();
      }
      CHECK(zone_total + comp.covered.size() ==
            static_cast<std::size_t>(comp.n));
      CHECK(comp.internal_vertices.size() + comp.border_vertices.size() ==
            comp.covered.size());
      // Every border chord joins two covered vertices and crosses no link
      // of the component.
      for (const Chord& border : comp.border_chords) {
        CHECK(std::binary_search(comp.covered.begin(), comp.covered.end(),
                                 border.a));
        CHECK(std::binary_search(comp.covered.begin(), comp.covered.end(),
                                 border.b));
        for (const Chord& link : comp.links)
          CHECK_FALSE(vca::crosses(border, link));
      }
    }
  }
}

TEST_CASE("components partition splits crossing classes and singletons",
          "[circle]") {
  // {2,7} makes the candidate set feasible but stays out of f, so f splits
  // into two crossing classes plus one singleton.
  Instance inst(10,
                {Chord{1, 3}, Chord{2, 4}, Chord{5, 8}, Chord{6, 9},
                 Chord{5, 10}, Chord{2, 7}});
  const LinkSet f(inst, {Chord{1, 3}, Chord{2, 4}, Chord{5, 8}, Chord{6, 9},
                         Chord{5, 10}});
  const vca::ComponentPartition partition = vca::components(f);
  REQUIRE(partition.components.size() == 2);
  CHECK(partition.components[0].links ==
        std::vector<Chord>{{1, 3}, {2, 4}});
  CHECK(partition.components[1].links ==
        std::vector<Chord>{{5, 8}, {6, 9}});
  CHECK(partition.singletons == std::vector<Chord>{{5, 10}});

  CHECK(partition.components[1].border_chords ==
        std::vector<Chord>{{5, 9}, {6, 8}});
  CHECK(partition.components[1].internal_vertices.empty());

  CHECK(vca::family_border_chords(f) ==
        std::vector<Chord>{{1, 4}, {5, 9}, {6, 8}});
}

TEST_CASE("component_crosses_chord matches the direct link scan", "[circle]") {
  for (const Instance& inst : test_helpers::planted_corpus()) {
    const auto partition = vca::components(LinkSet::full(inst));
    for (const vca::CircleComponent& comp : partition.components) {
      for (int a = 1; a <= inst.n(); ++a)
        for (int b = a + 2; b <= inst.n(); ++b) {
          if (a == 1 && b == inst.n()) continue;
          const Chord c{a, b};
          bool direct = false;
          for (const Chord& link : comp.links)
            if (vca::crosses(link, c)) {
              direct = true;
              break;
            }
          CHECK(vca::component_crosses_chord(comp, c) == direct);
        }
    }
  }
}

TEST_CASE("connects means forming a single crossing class", "[circle]") {
  Instance inst = eight();
  const LinkSet pair(inst, {Chord{1, 3}, Chord{2, 4}});
  CHECK(vca::connects(Chord{2, 6}, pair));
  CHECK_FALSE(vca::connects(Chord{5, 7}, pair));
  CHECK_FALSE(vca::connects(Chord{4, 8}, pair));  // shares vertex 4, no cross
  CHECK_THROWS_AS(vca::connects(Chord{1, 3}, pair), vca::Error);
}

TEST_CASE("zone instance contracts the far side of a border chord",
          "[circle]") {
  Instance inst = eight();
  const LinkSet pair(inst, {Chord{1, 3}, Chord{2, 4}});
  const vca::CircleComponent profile = vca::component_profile(pair);
  const auto [zi, psi] = vca::zone_instance(Chord{1, 4}, profile,
                                            LinkSet::full(inst));

  // Closed zone {4,5,6,7,8,1} plus the contracted vertex: n' = 7, with the
  // border chord itself surviving as the link {1, 6}.
  CHECK(zi.n() == 7);
  const std::map<Chord, Chord> expected{
      {Chord{2, 6}, Chord{3, 7}},  // 2 contracts to v0=7, 6 -> 3
      {Chord{5, 7}, Chord{2, 4}},
      {Chord{4, 8}, Chord{1, 5}},
      {Chord{1, 5}, Chord{2, 6}},
  };
  CHECK(psi == expected);
  CHECK(zi.links() ==
        std::vector<Chord>{{1, 5}, {1, 6}, {2, 4}, {2, 6}, {3, 7}});

  CHECK_THROWS_AS(
      vca::zone_instance(Chord{2, 5}, profile, LinkSet::full(inst)),
      vca::NotABorderChordError);
}

TEST_CASE("degenerate zones are rejected, not dereferenced", "[circle]") {
  Instance inst = eight();
  vca::CircleComponent fake;
  fake.n = 8;
  fake.border_chords = {Chord{1, 3}};
  fake.zones = {{}};
  CHECK_THROWS_AS(
      vca::zone_instance(Chord{1, 3}, fake, LinkSet::full(inst)),
      vca::DegenerateZoneError);
}

TEST_CASE("completions transfer into zone instances", "[circle]") {
  // If Q completes F' ∪ L, where F' are the links inside the closed zone,
  // then the image of Q under the contraction completes the image of F'
  // plus the border chord in the zone instance.
  for (const Instance& inst : test_helpers::planted_corpus()) {
    const LinkSet full = LinkSet::full(inst);
    const auto partition = vca::components(full);
    if (partition.components.empty()) continue;
    const vca::CircleComponent& comp = partition.components.front();
    if (comp.border_chords.empty()) continue;
    const Chord border = comp.border_chords.front();
    const auto [zi, psi] = vca::zone_instance(border, comp, full);

    const LinkSet l(inst, comp.links);
    const LinkSet q = vca::minimal_completion(l, full);
    REQUIRE(vca::is_feasible_crossing(l.unite(q)).feasible);
    std::vector<Chord> image;
    for (const Chord& link : q.members()) {
      auto it = psi.find(link);
      if (it != psi.end()) image.push_back(it->second);
    }
    image.push_back(Chord{1, zi.n() - 1});
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    CHECK(vca::is_feasible_crossing(zi.n(), image).feasible);
  }
}
