#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "gq/io.hpp"
#include "gq/partition.hpp"
#include "gq/relation.hpp"
#include "oracles.hpp"

using namespace gq;

TEST_CASE("encode_tuple uses base n with the first coordinate most significant") {
  CHECK(encode_tuple(Tuple{1, 0, 1}, 2) == 5);
  CHECK(encode_tuple(Tuple{0, 0}, 3) == 0);
  CHECK(encode_tuple(Tuple{3}, 4) == 3);
  CHECK_THROWS_AS((void)encode_tuple(Tuple{0, 2}, 2), RangeError);
}

TEST_CASE("decode_tuple inverts encode_tuple") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      auto const all = oracle::all_tuples(n, m);
      for (std::size_t c = 0; c < all.size(); ++c) {
        CHECK(decode_tuple(c, n, m) == all[c]);
        CHECK(encode_tuple(all[c], n) == c);
      }
    }
  }
}

TEST_CASE("point limit guards construction") {
  auto const saved = max_points();
  set_max_points(100);
  CHECK_THROWS_AS(FiniteRelation(3, 5), ResourceError);
  CHECK_NOTHROW(FiniteRelation(3, 4));
  set_max_points(saved);
  CHECK(max_points() == saved);
}

TEST_CASE("set operations on relations") {
  auto const le = fixture::chain(3);
  auto       ge = FiniteRelation(3, 2);
  for (auto const& t : le.tuples()) {
    ge.insert(Tuple{t[1], t[0]});
  }
  CHECK(intersect(le, ge) == fixture::equality(3));
  CHECK(intersect(le, FiniteRelation::full(3, 2)) == le);
  CHECK(intersect(le, le) == le);
  CHECK(fixture::equality(3).is_subset_of(le));
  CHECK_FALSE(ge.is_subset_of(le));
  CHECK_THROWS_AS((void)intersect(le, FiniteRelation(3, 3)), ArityError);

  auto u = le;
  u |= ge;
  CHECK(u == FiniteRelation::full(3, 2));
  CHECK(le.size() == 6);
  CHECK(FiniteRelation(2, 2).empty());
}

TEST_CASE("from_mask and tuples agree with codes") {
  auto const r = FiniteRelation::from_mask(2, 2, 0b1011);
  CHECK(r.codes() == std::vector<std::size_t>{0, 1, 3});
  CHECK(r.tuples() == std::vector<Tuple>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(r == fixture::chain(2));
}

TEST_CASE("diagonal_relation") {
  CHECK(diagonal_relation(2, {0, 0}) == fixture::equality(2));
  CHECK(diagonal_relation(2, {0, 1}) == FiniteRelation::full(2, 2));
  CHECK(diagonal_relation(3, {0, 0, 0}) == constant_tuples(3, 3));
  CHECK(constant_tuples(3, 3).tuples() == std::vector<Tuple>{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});

  // {a : a_0 = a_2} over 3 elements.
  auto const d = diagonal_relation(3, {5, 1, 5});
  for (auto const& t : oracle::all_tuples(3, 3)) {
    CHECK(d.contains(t) == (t[0] == t[2]));
  }
}

TEST_CASE("partitions and equivalence relations") {
  CHECK(partition_to_relation(EquivPartition::discrete(3)) == fixture::equality(3));
  CHECK(partition_to_relation(EquivPartition::single_block(2)) == FiniteRelation::full(2, 2));

  auto const rho = FiniteRelation::from_tuples(3, 2, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}});
  auto const psi = relation_to_partition(rho);
  CHECK(psi.blocks() == std::vector<std::vector<Element>>{{0, 1}, {2}});
  CHECK(partition_to_relation(psi) == rho);

  CHECK_THROWS_AS((void)relation_to_partition(fixture::chain(2)), ClassificationError);
  CHECK_THROWS_AS((void)relation_to_partition(FiniteRelation::from_tuples(2, 2, {{0, 0}})),
                  ClassificationError);
  CHECK_THROWS_AS((void)relation_to_partition(FiniteRelation::full(2, 3)), ClassificationError);
}

TEST_CASE("all_partitions matches brute-force equivalence counts") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const parts = all_partitions(n);
    CHECK(parts.size() == oracle::count_equivalences(n));
    std::set<FiniteRelation> seen;
    for (auto const& p : parts) {
      auto const r = partition_to_relation(p);
      CHECK(oracle::equivalence(r));
      CHECK(relation_to_partition(r) == p);
      seen.insert(r);
    }
    CHECK(seen.size() == parts.size());
  }
}

TEST_CASE("partition refinement and quotient map") {
  auto const psi = EquivPartition::from_blocks(4, {{0, 2}, {1}, {3}});
  CHECK(psi.num_blocks() == 3);
  CHECK(psi.block_of(2) == 0);
  CHECK(psi.quotient_map().values() == std::vector<Element>{0, 1, 0, 2});
  CHECK(EquivPartition::discrete(4).refines(psi));
  CHECK(psi.refines(EquivPartition::single_block(4)));
  CHECK_FALSE(psi.refines(EquivPartition::discrete(4)));
  CHECK(EquivPartition({7, 3, 7, 9}) == psi);
}

TEST_CASE("relation text round trip") {
  auto const d = parse_relation("rel 2 2\n0 0\n1 1\n");
  CHECK(d == fixture::equality(2));

  auto const one = parse_relation("# comment\n\nrel 3 4\n0 2 3\n");
  CHECK(one.universe_size() == 4);
  CHECK(one.tuples() == std::vector<Tuple>{{0, 2, 3}});

  for (std::uint64_t mask = 0; mask < 512; mask += 37) {
    auto const r = FiniteRelation::from_mask(3, 2, mask);
    CHECK(parse_relation(serialize_relation(r)) == r);
  }
  CHECK(serialize_relation(fixture::chain(2)) == "rel 2 2\n0 0\n0 1\n1 1\n");
}

TEST_CASE("relation parse errors carry line numbers") {
  auto line_of = [](std::string const& text) -> std::size_t {
    try {
      (void)parse_relation(text);
    } catch (ParseError const& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("relation 2 2\n") == 1);
  CHECK(line_of("rel 2 2\n0 0\n0 1 1\n") == 3);
  CHECK(line_of("rel 2 2\n\n0 2\n") == 3);
  CHECK(line_of("rel 2 x\n") == 1);
}

TEST_CASE("partition and matrix text round trip") {
  auto const psi = EquivPartition::from_blocks(5, {{0, 3}, {1, 2, 4}});
  CHECK(parse_partition(serialize_partition(psi)) == psi);

  Matrix const mat(6, 2, {1, 0, 3, 5});
  CHECK(parse_matrix(serialize_matrix(mat)) == mat);
  CHECK_THROWS_AS((void)parse_matrix("matrix 2 2\n0 1\n"), ParseError);
}

TEST_CASE("matrix accessors") {
  Matrix const mat(6, 3, {0, 1, 2, 3, 4, 5, 0, 1, 2});
  CHECK(mat.row(1) == Tuple{3, 4, 5});
  CHECK(mat.column(2) == Tuple{2, 5, 2});
  CHECK(mat.diagonal() == Tuple{0, 4, 2});
}

TEST_CASE("index maps") {
  IndexMap const cyc(3, {1, 2, 0});
  CHECK(cyc.is_bijection());
  CHECK(cyc.inverse().values() == std::vector<std::size_t>{2, 0, 1});
  IndexMap const fold(2, {0, 0, 1});
  CHECK_FALSE(fold.is_bijection());
  CHECK_THROWS_AS((void)fold.inverse(), ArityError);
  CHECK_THROWS_AS(IndexMap(2, {0, 2}), RangeError);
}
