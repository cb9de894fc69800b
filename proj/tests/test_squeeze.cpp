#include <gtest/gtest.h>

#include <random>
#include <set>

#include "phenyl/squeeze.hpp"
#include "support.hpp"

using namespace phenyl;
using phenyl::testing::kCoil6;

namespace {

SqueezeError::Kind rejection_kind(std::string_view text) {
  try {
    validate_squeeze(parse_squeeze_spec(text));
  } catch (const SqueezeError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "spec was accepted";
  return SqueezeError::Kind::Parse;
}

int parse_error_line(std::string_view text) {
  try {
    parse_squeeze_spec(text);
  } catch (const SqueezeError& e) {
    EXPECT_EQ(e.kind(), SqueezeError::Kind::Parse);
    return e.line();
  }
  ADD_FAILURE() << "document was accepted";
  return -1;
}

}  // namespace

TEST(ParseSpec, SingleHexagon) {
  const SqueezeSpec s = parse_squeeze_spec("phenylene v1\n1\n");
  EXPECT_EQ(s.hexagon_count, 1);
  EXPECT_TRUE(s.attachments.empty());
}

TEST(ParseSpec, LinearThreeChain) {
  const SqueezeSpec s = parse_squeeze_spec("phenylene v1\n3\n2 1 0\n3 2 0\n");
  const SqueezeSpec expected{3, {{2, 1, 0}, {3, 2, 0}}};
  EXPECT_EQ(s, expected);
}

TEST(ParseSpec, CommentsAndBlankLinesAreIgnored) {
  const SqueezeSpec s = parse_squeeze_spec("# made by hand\nphenylene v1\n\n2\n  # child parent dir\n2 1 3\n");
  EXPECT_EQ(s, (SqueezeSpec{2, {{2, 1, 3}}}));
}

TEST(ParseSpec, DirectionOutOfRangeReportsLine) {
  EXPECT_EQ(parse_error_line("phenylene v1\n2\n2 1 6\n"), 3);
}

TEST(ParseSpec, MalformedDocumentsReportLine) {
  EXPECT_EQ(parse_error_line("phenylene v2\n1\n"), 1);
  EXPECT_EQ(parse_error_line("phenylene v1\nx\n"), 2);
  EXPECT_EQ(parse_error_line("phenylene v1\n0\n"), 2);
  EXPECT_EQ(parse_error_line("phenylene v1\n3\n2 1 0\n2 1 3\n"), 4);  // duplicate child
  EXPECT_EQ(parse_error_line("phenylene v1\n3\n2 1 0\n3 3 0\n"), 4);  // parent not below child
  EXPECT_EQ(parse_error_line("phenylene v1\n2\n4 1 0\n"), 3);         // child out of range
  EXPECT_EQ(parse_error_line("phenylene v1\n2\n2 1\n"), 3);           // missing field
  EXPECT_EQ(parse_error_line("phenylene v1\n2\n2 a 0\n"), 3);         // non-numeric
  EXPECT_THROW(parse_squeeze_spec(""), SqueezeError);
  EXPECT_THROW(parse_squeeze_spec("phenylene v1\n3\n2 1 0\n"), SqueezeError);  // missing child 3
}

TEST(ParseSpec, FormatRoundTrips) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 9; ++n) {
    const SqueezeSpec s = random_valid_spec(n, rng);
    EXPECT_EQ(parse_squeeze_spec(format_squeeze_spec(s)), s);
  }
}

TEST(GenerateLinear, SmallCases) {
  EXPECT_EQ(generate_linear_spec(1), (SqueezeSpec{1, {}}));
  EXPECT_EQ(generate_linear_spec(3), (SqueezeSpec{3, {{2, 1, 0}, {3, 2, 0}}}));
  EXPECT_ANY_THROW(generate_linear_spec(0));
}

TEST(GenerateLinear, CentersAreCollinear) {
  const Squeeze sq = validate_squeeze(generate_linear_spec(5));
  ASSERT_EQ(sq.hexagon_count(), 5u);
  for (int h = 0; h < 5; ++h) EXPECT_EQ(sq.hexagons[h], (Cell{h, 0}));
}

TEST(Validate, TwoHexagonChain) {
  const Squeeze sq = validate_squeeze(generate_linear_spec(2));
  EXPECT_EQ(sq.vertices.size(), 10u);
  EXPECT_EQ(sq.edges.size(), 11u);
  ASSERT_EQ(sq.inner_dual.size(), 1u);
  const DualEdge& d = sq.inner_dual[0];
  EXPECT_EQ(d.parent, 0);
  EXPECT_EQ(d.child, 1);
  EXPECT_EQ(sq.edges[d.shared_edge].hexagons.size(), 2u);
  EXPECT_EQ(sq.hexagon_sides[0][0], d.shared_edge);
  EXPECT_EQ(sq.hexagon_sides[1][3], d.shared_edge);
}

TEST(Validate, CellCollision) {
  EXPECT_EQ(rejection_kind("phenylene v1\n3\n2 1 0\n3 2 3\n"), SqueezeError::Kind::CellCollision);
}

TEST(Validate, InternalVertex) {
  // Hexagons 2 and 3 both touch hexagon 1 and each other around one corner.
  EXPECT_EQ(rejection_kind("phenylene v1\n3\n2 1 0\n3 1 1\n"), SqueezeError::Kind::InternalVertex);
}

TEST(Validate, CoilClosesARingAroundAnEmptyCell) {
  // Cells (0,0),(1,0),(1,1),(0,2),(-1,2),(-1,1) surround (0,1) without a
  // vertex in three hexagons; hexagons 1 and 6 touch, closing a dual cycle.
  EXPECT_EQ(rejection_kind(kCoil6), SqueezeError::Kind::DualCycle);
}

TEST(Validate, DirectionClassesAgreeAcrossSharedEdges) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Squeeze sq = validate_squeeze(random_valid_spec(2 + trial % 8, rng));
    for (std::size_t h = 0; h < sq.hexagon_count(); ++h)
      for (int c = 0; c < 6; ++c) EXPECT_EQ(sq.edges[sq.hexagon_sides[h][c]].direction_class, side_class(c));
    for (const SqueezeVertex& v : sq.vertices) EXPECT_LE(v.hexagons.size(), 2u);
  }
}

TEST(Validate, CataCondensedCounts) {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 12; ++n) {
    const Squeeze sq = validate_squeeze(random_valid_spec(n, rng));
    EXPECT_EQ(sq.vertices.size(), static_cast<std::size_t>(4 * n + 2));
    EXPECT_EQ(sq.edges.size(), static_cast<std::size_t>(5 * n + 1));
    EXPECT_EQ(sq.inner_dual.size(), static_cast<std::size_t>(n - 1));
  }
}

TEST(Validate, NeighbourDirectionsAreSeparated) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Squeeze sq = validate_squeeze(random_valid_spec(6, rng));
    std::vector<std::vector<int>> dirs(sq.hexagon_count());
    for (const DualEdge& d : sq.inner_dual) {
      dirs[d.parent].push_back(d.direction);
      dirs[d.child].push_back((d.direction + 3) % 6);
    }
    for (const auto& ds : dirs)
      for (std::size_t a = 0; a < ds.size(); ++a)
        for (std::size_t b = a + 1; b < ds.size(); ++b) {
          const int gap = (ds[a] - ds[b] + 6) % 6;
          EXPECT_GE(std::min(gap, 6 - gap), 2);
        }
  }
}

TEST(SpecHash, StableAndDiscriminating) {
  const std::string h = spec_hash(generate_linear_spec(3));
  EXPECT_EQ(h.size(), 16u);
  EXPECT_EQ(h, spec_hash(parse_squeeze_spec("phenylene v1\n3\n2 1 0\n3 2 0\n")));
  EXPECT_NE(h, spec_hash(parse_squeeze_spec("phenylene v1\n3\n2 1 0\n3 2 1\n")));
}

TEST(Enumerate, EveryVisitedSpecValidatesAndIsDistinct) {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> seen;
    int count = 0;
    enumerate_valid_specs(n, [&](const SqueezeSpec& s) {
      ++count;
      EXPECT_EQ(s.hexagon_count, n);
      EXPECT_NO_THROW(validate_squeeze(s));
      seen.insert(format_squeeze_spec(s));
    });
    EXPECT_EQ(static_cast<int>(seen.size()), count);
    if (n == 1) { EXPECT_EQ(count, 1); }
    if (n == 2) { EXPECT_EQ(count, 6); }
  }
}

TEST(RandomSpec, DeterministicForSeed) {
  std::mt19937_64 a(99), b(99);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(random_valid_spec(n, a), random_valid_spec(n, b));
}
