// test_instance.cpp — chords, crossing, instances, link sets, rationals.

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "test_helpers.hpp"
#include "vca/errors.hpp"
#include "vca/instance.hpp"
#include "vca/rational.hpp"

using vca::Chord;
using vca::Instance;
using vca::LinkSet;

TEST_CASE("make_chord normalizes and validates", "[instance]") {
  CHECK(vca::make_chord(5, 2, 8) == Chord{2, 5});
  CHECK(vca::make_chord(2, 5, 8) == Chord{2, 5});
  CHECK_THROWS_AS(vca::make_chord(3, 3, 8), vca::LoopError);
  CHECK_THROWS_AS(vca::make_chord(3, 4, 8), vca::CycleEdgeError);
  CHECK_THROWS_AS(vca::make_chord(1, 8, 8), vca::CycleEdgeError);
  CHECK_THROWS_AS(vca::make_chord(0, 3, 8), vca::FormatError);
  CHECK_THROWS_AS(vca::make_chord(2, 9, 8), vca::FormatError);
  // {1, n} wraps into a cycle edge but {1, n-1} is a genuine chord.
  CHECK(vca::valid_chord(Chord{1, 7}, 8));
  CHECK_FALSE(vca::valid_chord(Chord{1, 8}, 8));
}

TEST_CASE("crossing is interleaving and nothing else", "[instance]") {
  CHECK(vca::crosses(Chord{1, 3}, Chord{2, 4}));
  CHECK(vca::crosses(Chord{2, 4}, Chord{1, 3}));
  CHECK_FALSE(vca::crosses(Chord{1, 3}, Chord{1, 4}));   // shared vertex
  CHECK_FALSE(vca::crosses(Chord{1, 3}, Chord{3, 5}));   // shared vertex
  CHECK_FALSE(vca::crosses(Chord{1, 4}, Chord{2, 3}));   // nested
  CHECK_FALSE(vca::crosses(Chord{1, 3}, Chord{4, 6}));   // disjoint arcs
  CHECK(vca::crosses(Chord{2, 6}, Chord{4, 8}));
}

TEST_CASE("crossing agrees with the geometric oracle on samples",
          "[instance]") {
  // Exhaustive agreement for n = 4..12 is the first acceptance criterion;
  // here a couple of n values document the intended equivalence.
  for (int n : {6, 9}) {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 2; b <= n; ++b) {
        if (a == 1 && b == n) continue;
        for (int c = 1; c <= n; ++c)
          for (int d = c + 2; d <= n; ++d) {
            if (c == 1 && d == n) continue;
            const Chord x{a, b}, y{c, d};
            CHECK(vca::crosses(x, y) == test_helpers::geometric_crosses(x, y));
          }
      }
  }
}

TEST_CASE("sides splits the cycle into the two open arcs", "[instance]") {
  const auto [first, second] = vca::sides(Chord{3, 6}, 8);
  CHECK(first == vca::VertexList{4, 5});
  CHECK(second == vca::VertexList{7, 8, 1, 2});
  const auto [inner, outer] = vca::sides(Chord{1, 3}, 5);
  CHECK(inner == vca::VertexList{2});
  CHECK(outer == vca::VertexList{4, 5});
}

TEST_CASE("instance construction canonicalizes and validates", "[instance]") {
  // Canonical order regardless of input order.
  Instance inst(6, {Chord{2, 5}, Chord{1, 4}, Chord{3, 6}, Chord{2, 6}});
  CHECK(inst.links() ==
        std::vector<Chord>{{1, 4}, {2, 5}, {2, 6}, {3, 6}});
  CHECK(inst.link_count() == 4);
  CHECK(inst.link_index(Chord{2, 6}) == 2);
  CHECK_FALSE(inst.link_index(Chord{1, 3}).has_value());

  CHECK_THROWS_AS(Instance(3, {}), vca::FormatError);
  CHECK_THROWS_AS(Instance(6, {Chord{1, 4}, Chord{1, 4}, Chord{2, 5}}),
                  vca::FormatError);
  CHECK_THROWS_AS(Instance(6, {Chord{1, 7}}), vca::FormatError);
  // A candidate set that does not 3-connect the cycle is rejected outright.
  CHECK_THROWS_AS(Instance(6, {Chord{1, 4}, Chord{2, 5}}),
                  vca::InfeasibleCandidateSetError);
  CHECK_THROWS_AS(Instance(8, {Chord{1, 3}, Chord{2, 4}}),
                  vca::InfeasibleCandidateSetError);
}

TEST_CASE("link sets are index sets with chord views", "[instance]") {
  Instance inst(8, {Chord{1, 3}, Chord{1, 5}, Chord{2, 4}, Chord{2, 6},
                    Chord{3, 7}, Chord{4, 8}, Chord{5, 7}, Chord{6, 8}});
  const LinkSet full = LinkSet::full(inst);
  CHECK(full.size() == 8);

  const LinkSet f(inst, {Chord{2, 6}, Chord{1, 5}});
  CHECK(f.indices() == std::vector<int>{1, 3});
  CHECK(f.members() == std::vector<Chord>{{1, 5}, {2, 6}});
  CHECK(f.contains(Chord{1, 5}));
  CHECK_FALSE(f.contains(Chord{1, 3}));
  CHECK(f.covered_vertices() == vca::VertexList{1, 2, 5, 6});
  CHECK(f.incident(5) == std::vector<int>{0});
  CHECK(f.incident(7).empty());

  const LinkSet g(inst, {Chord{1, 5}, Chord{4, 8}});
  CHECK(f.unite(g).members() ==
        std::vector<Chord>{{1, 5}, {2, 6}, {4, 8}});
  CHECK(f.minus(g).members() == std::vector<Chord>{{2, 6}});
  CHECK(f.subset_of(full));
  CHECK_FALSE(full.subset_of(f));
  CHECK(f.unite(g).subset_of(full));

  CHECK_THROWS_AS(LinkSet(inst, {Chord{1, 4}}), vca::Error);
  CHECK_THROWS_AS(LinkSet::from_indices(inst, {0, 99}), vca::Error);
}

TEST_CASE("instance serialization round-trips in both formats", "[instance]") {
  Instance inst(7, {Chord{1, 3}, Chord{2, 7}, Chord{3, 5}, Chord{4, 6},
                    Chord{5, 7}, Chord{1, 4}});
  const std::string as_json = vca::serialize_instance(inst);
  CHECK(as_json ==
        "{\"n\":7,\"links\":[[1,3],[1,4],[2,7],[3,5],[4,6],[5,7]]}\n");
  CHECK(vca::parse_instance(as_json) == inst);

  const std::string as_text =
      vca::serialize_instance(inst, vca::InstanceFormat::text);
  CHECK(as_text == "7\n1 3\n1 4\n2 7\n3 5\n4 6\n5 7\n");
  CHECK(vca::parse_instance(as_text) == inst);

  // Auto-detection keys on the first non-whitespace byte.
  CHECK(vca::parse_instance("  \n" + as_json) == inst);
  CHECK(vca::parse_instance("\n  7\n1 3\n1 4\n2 7\n3 5\n4 6\n5 7\n") == inst);
}

TEST_CASE("instance parsing rejects malformed input", "[instance]") {
  CHECK_THROWS_AS(vca::parse_instance(""), vca::FormatError);
  CHECK_THROWS_AS(vca::parse_instance("   \n"), vca::FormatError);
  CHECK_THROWS_AS(vca::parse_instance("{\"n\":6}"), vca::FormatError);
  CHECK_THROWS_AS(vca::parse_instance("{\"n\":6,\"links\":[[1]]}"),
                  vca::FormatError);
  CHECK_THROWS_AS(
      vca::parse_instance("{\"n\":6,\"links\":[[1,4],[2,5],[3,6]],\"x\":1}"),
      vca::FormatError);
  CHECK_THROWS_AS(vca::parse_instance("six\n1 3\n"), vca::FormatError);
  CHECK_THROWS_AS(vca::parse_instance("6\n1\n"), vca::FormatError);
  CHECK_THROWS_AS(vca::parse_instance("6\n1 4 9\n"), vca::FormatError);
  // Structurally fine but semantically bad chords surface as typed errors.
  CHECK_THROWS_AS(vca::parse_instance("6\n1 1\n"), vca::LoopError);
  CHECK_THROWS_AS(vca::parse_instance("6\n5 6\n"), vca::CycleEdgeError);
}

TEST_CASE("rational parsing and formatting are exact", "[instance]") {
  CHECK(vca::parse_rational("3/4") == vca::Rational(3, 4));
  CHECK(vca::parse_rational("8/11") == vca::Rational(8, 11));
  CHECK(vca::parse_rational("1") == vca::Rational(1));
  CHECK(vca::parse_rational("6/8") == vca::Rational(3, 4));  // normalized
  CHECK(vca::format_rational(vca::Rational(3, 4)) == "3/4");
  CHECK(vca::format_rational(vca::Rational(2)) == "2/1");
  CHECK_THROWS_AS(vca::parse_rational("0.75"), vca::FormatError);
  CHECK_THROWS_AS(vca::parse_rational("3/0"), vca::FormatError);
  CHECK_THROWS_AS(vca::parse_rational("x/y"), vca::FormatError);
  CHECK_THROWS_AS(vca::parse_rational(""), vca::FormatError);

  CHECK(vca::floor_rat(vca::Rational(7, 2)) == 3);
  CHECK(vca::ceil_rat(vca::Rational(7, 2)) == 4);
  CHECK(vca::floor_rat(vca::Rational(-7, 2)) == -4);
  CHECK(vca::ceil_rat(vca::Rational(-7, 2)) == -3);
  CHECK(vca::ceil_rat(vca::Rational(6)) == 6);

  CHECK(vca::format_decimal(vca::Rational(1, 3), 6) == "0.333333");
  CHECK(vca::format_decimal(vca::Rational(233, 121), 10) == "1.9256198347");
}
