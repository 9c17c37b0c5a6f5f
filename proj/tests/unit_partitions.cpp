#include "doctest.h"

#include "qlb/orbit.hpp"

using namespace qlb;

TEST_CASE("partition text round trips with highlight") {
  const auto p = parse_partition("*1,2,3/4/5,6");
  CHECK(p.partition.n == 6);
  REQUIRE(p.partition.numBlocks() == 3);
  CHECK(p.partition.blocks[0] == 0b000111);
  CHECK(p.partition.blocks[1] == 0b001000);
  CHECK(p.partition.blocks[2] == 0b110000);
  REQUIRE(p.highlighted.has_value());
  CHECK(*p.highlighted == 0);
  CHECK(format_partition(p.partition, p.highlighted) == "*1,2,3/4/5,6");
  CHECK(format_partition(p.partition) == "1,2,3/4/5,6");
}

TEST_CASE("parser rejects malformed partitions") {
  CHECK_THROWS_AS(parse_partition("1,2/2,3"), ParseError);
  CHECK_THROWS_AS(parse_partition("1/3"), ParseError);
  CHECK_THROWS_AS(parse_partition("1,x/2"), ParseError);
  CHECK_THROWS_AS(parse_partition("*1/*2"), ParseError);
  CHECK_THROWS_AS(parse_partition(""), ParseError);
  CHECK_THROWS_AS(parse_partition("0,1"), ParseError);
}

TEST_CASE("blocks canonicalize by minimum element") {
  const auto p = Partition::from_blocks(4, {0b1100, 0b0011});
  CHECK(p.blocks[0] == 0b0011);
  CHECK(p.blocks[1] == 0b1100);
  CHECK(p.blockOf(3) == 1);
  CHECK(p.sizes() == std::vector<int>{2, 2});
}

TEST_CASE("permutations relabel and keep the highlight on its block") {
  const auto p = parse_partition("*1,2/3/4");
  const HighlightedPartition hp{p.partition, *p.highlighted};
  const auto img = apply_permutation(hp, {3, 4, 1, 2});
  CHECK(format_partition(img.partition, img.highlighted) == "1/2/*3,4");
}

TEST_CASE("splitting detaches one element into a singleton") {
  const auto p = parse_partition("*1,2,3/4");
  const HighlightedPartition hp{p.partition, *p.highlighted};
  const auto s = split_off(hp, 2);
  CHECK(format_partition(s.partition, s.highlighted) == "*1,3/2/4");
  CHECK_THROWS_AS(split_off(s, 2), ParseError); // singleton now
  CHECK_THROWS_AS(split_off(hp, 4), ParseError); // not in the block
}

TEST_CASE("orbit size formula matches frozen values") {
  CHECK(orbit_size_formula(4, {2, 1, 1}) == 6);
  CHECK(orbit_size_formula(6, {2, 1, 1, 1, 1}) == 15);
  CHECK(orbit_size_formula(8, {2, 1, 1, 1, 1, 1, 1}) == 28);
  CHECK(orbit_size_formula(4, {1, 1, 1, 1}, 1) == 4);
  CHECK(orbit_size_formula(9, {3, 2, 2, 1, 1}, 3) == 3780);
  CHECK(orbit_size_formula(9, {2, 2, 2, 1, 1, 1}, 2) == 3780);
  CHECK(orbit_size_formula(9, {2, 2, 2, 1, 1, 1}) == 1260);
  CHECK(orbit_size_formula(9, {2, 2, 1, 1, 1, 1, 1}) == 378);
  CHECK(orbit_size_formula(6, {3, 2, 1}) == 60);
  CHECK(orbit_size_formula(6, {2, 2, 1, 1}, 2) == 90);
  CHECK(orbit_size_formula(6, {2, 1, 1, 1, 1}, 1) == 60);
  CHECK(orbit_size_formula(6, {2, 1, 1, 1, 1}) == 15);
  CHECK(orbit_size_formula(6, {2, 2, 1, 1}) == 45);
  CHECK(orbit_size_formula(9, {3, 1, 1, 1, 1, 1, 1}) == 84);
  CHECK_THROWS_AS(orbit_size_formula(4, {2, 1}), ParseError);
}

TEST_CASE("orbit enumeration agrees with the formula and is sorted unique") {
  const auto seed = parse_partition("1,2/3/4").partition;
  const auto orbit = orbit_of(seed, KnowledgeSystem::intersection_at_least(2));
  REQUIRE(orbit.size() == 6);
  for (std::size_t m = 0; m + 1 < orbit.size(); ++m)
    CHECK(orbit.members[m].blocks < orbit.members[m + 1].blocks);
  for (const auto& p : orbit.members)
    CHECK(p.sizes() == std::vector<int>{1, 1, 2});

  const auto big = orbit_of(parse_partition("1,2,3/4,5/6,7/8/9").partition);
  CHECK(big.size() == 3780);
}

TEST_CASE("highlighted orbits enumerate one member per eligible block") {
  const auto p = parse_partition("*1/2/3/4");
  const auto M1 = orbit_of(HighlightedPartition{p.partition, *p.highlighted});
  REQUIRE(M1.size() == 4);
  for (std::size_t m = 0; m < 4; ++m)
    CHECK(M1.part(m).blocks[static_cast<std::size_t>(M1.hi(m))] ==
          std::uint64_t{1} << m);

  const auto ed = parse_partition("*1,2/3/4");
  const auto M2 = orbit_of(HighlightedPartition{ed.partition, *ed.highlighted});
  CHECK(M2.size() == 6);

  const auto d3 = parse_partition("1,2/*3,4/5/6");
  const auto O = orbit_of(HighlightedPartition{d3.partition, *d3.highlighted});
  CHECK(O.size() == 90);
}

TEST_CASE("member lookup inverts enumeration") {
  const auto ed = parse_partition("*1,2/3/4");
  const auto M2 = orbit_of(HighlightedPartition{ed.partition, *ed.highlighted});
  for (std::size_t m = 0; m < M2.size(); ++m)
    CHECK(member_index(M2, M2.part(m), M2.hi(m)) == m);
  CHECK_THROWS_AS(member_index(M2, discrete_partition(4), 0), ParseError);
}

TEST_CASE("orbit cap throws instead of enumerating") {
  const auto seed = parse_partition("1,2/3/4").partition;
  CHECK_THROWS_AS(orbit_of(seed, KnowledgeSystem::none(), 5), CapExceeded);
  // 12 pairs among 40 singletons on [64] blow the representable range.
  std::vector<int> sizes(40, 1);
  sizes.insert(sizes.end(), 12, 2);
  CHECK_THROWS_AS(orbit_size_formula(64, sizes), CapExceeded);
}

TEST_CASE("knowledge predicates on sets") {
  const auto ed = parse_partition("1,2/3/4").partition;
  const auto iak = KnowledgeSystem::intersection_at_least(2);
  CHECK(in_plus(iak, ed, -1, 0b0011));
  CHECK(in_plus(iak, ed, -1, 0b1011));
  CHECK_FALSE(in_plus(iak, ed, -1, 0b0101));
  CHECK_FALSE(in_plus(iak, ed, -1, 0b1100)); // {3, 4} are separate singletons

  const auto hs = KnowledgeSystem::highlighted_superset();
  CHECK(in_plus(hs, ed, 0, 0b0011));
  CHECK(in_plus(hs, ed, 0, 0b1011));
  CHECK_FALSE(in_plus(hs, ed, 0, 0b0001));

  CHECK(in_boundary(hs, ed, 0, 0b0001, 2));
  CHECK_FALSE(in_boundary(hs, ed, 0, 0b0011, 2)); // i already present
  CHECK_FALSE(in_boundary(hs, ed, 0, 0b0000, 1)); // still missing element 2
  CHECK(in_boundary(iak, ed, -1, 0b0001, 2));
  CHECK_FALSE(in_boundary(iak, ed, -1, 0b0001, 3));
}
