#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "gq/analysis.hpp"
#include "gq/construct.hpp"
#include "gq/operation.hpp"
#include "oracles.hpp"

using namespace gq;

namespace {

  FiniteOperation to_lib(oracle::Op const& f) {
    return FiniteOperation(f.n, f.k, f.table);
  }

  FiniteOperation xor2() {
    return FiniteOperation::from_function(2, 2, [](auto x) { return x[0] ^ x[1]; });
  }

  // Binary identities straight from their defining equations.
  struct BinaryIdentities {
    bool id = true, ab = true, entropic = true;
  };

  BinaryIdentities binary_identities(oracle::Op const& f) {
    BinaryIdentities r;
    auto             g = [&](Element a, Element b) { return f(oracle::Tuple{a, b}); };
    for (auto const& x : oracle::all_tuples(f.n, 4)) {
      auto const lhs = g(g(x[0], x[1]), g(x[2], x[3]));
      r.ab           = r.ab && lhs == g(x[0], x[3]);
      r.entropic     = r.entropic && lhs == g(g(x[0], x[2]), g(x[1], x[3]));
    }
    for (Element a = 0; a < f.n; ++a) {
      r.id = r.id && g(a, a) == a;
    }
    return r;
  }

  FiniteRelation graph_naive(oracle::Op const& f) {
    FiniteRelation out(f.n, f.k + 1);
    for (auto const& x : oracle::all_tuples(f.n, f.k)) {
      auto t = x;
      t.push_back(f(x));
      out.insert(t);
    }
    return out;
  }

  // All unary maps x -> f(a_1, .., x, .., a_k).
  std::vector<oracle::Op> naive_translations(oracle::Op const& f) {
    std::set<std::vector<Element>> tables;
    for (std::size_t i = 0; i < f.k; ++i) {
      for (auto const& a : oracle::all_tuples(f.n, f.k)) {
        std::vector<Element> t;
        for (Element x = 0; x < f.n; ++x) {
          auto args = a;
          args[i]   = x;
          t.push_back(f(args));
        }
        tables.insert(t);
      }
    }
    std::vector<oracle::Op> out;
    for (auto const& t : tables) {
      out.push_back({f.n, 1, t});
    }
    return out;
  }

}  // namespace

TEST_CASE("applying operations") {
  auto const e = FiniteOperation::projection(2, 2, 0);
  CHECK(apply_rows(e, {{0, 1}, {1, 0}}) == Tuple{0, 1});
  CHECK(apply_rows(op_and(), {{0, 1}, {1, 1}}) == Tuple{0, 1});
  CHECK(apply_rows(FiniteOperation::constant(3, 0), {{2, 1, 1}}) == Tuple{0, 0, 0});
  CHECK(apply(op_or(3), {1, 2}) == 2);
  CHECK_THROWS_AS((void)apply(op_and(), {1}), ArityError);
  CHECK_THROWS_AS((void)apply_rows(op_and(), {{0, 1}, {1}}), ArityError);
}

TEST_CASE("preservation") {
  auto const le = fixture::chain(2);
  CHECK(preserves(op_and(), le).holds);
  CHECK(preserves(op_or(), le).holds);
  CHECK(preserves(xor2(), FiniteRelation::full(2, 3)).holds);
  auto const neg = preserves(op_not(), le);
  REQUIRE_FALSE(neg.holds);
  REQUIRE(neg.witness.size() == 1);
  CHECK(neg.witness[0] == Tuple{0, 1});

  for (std::size_t k = 1; k <= 2; ++k) {
    for (auto const& f : oracle::all_ops(2, k)) {
      for (std::size_t m = 1; m <= 2; ++m) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << oracle::power(2, m)); ++mask) {
          auto const r   = FiniteRelation::from_mask(2, m, mask);
          auto const res = preserves(to_lib(f), r);
          REQUIRE(res.holds == oracle::preserves(f, r));
          if (!res.holds) {
            CHECK_FALSE(r.contains(apply_rows(to_lib(f), res.witness)));
          }
        }
      }
    }
  }
}

TEST_CASE("translations") {
  auto const u = FiniteOperation(3, 1, {2, 0, 1});
  CHECK(translations(u) == OperationSet{u});
  CHECK(translations(op_and()) == OperationSet{FiniteOperation::constant(2, 0),
                                               FiniteOperation::identity(2)});
  CHECK(translations(FiniteOperation::projection(2, 2, 0))
        == OperationSet{FiniteOperation::constant(2, 0), FiniteOperation::identity(2),
                        FiniteOperation::constant(2, 1)});

  for (auto const& f : oracle::all_ops(3, 2)) {
    if (f.table[0] % 7 != 0) {
      continue;  // a deterministic sample of the 19683 tables
    }
    OperationSet want;
    for (auto const& t : naive_translations(f)) {
      want.push_back(to_lib(t));
    }
    std::sort(want.begin(), want.end());
    CHECK(translations(to_lib(f)) == want);
  }
}

TEST_CASE("property Xi on gQuords") {
  CHECK(xi_holds(op_and(), fixture::chain(2)));
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << oracle::power(2, m)); ++mask) {
      auto const r = FiniteRelation::from_mask(2, m, mask);
      if (!oracle::gquord(r)) {
        continue;
      }
      for (std::size_t k = 1; k <= 2; ++k) {
        for (auto const& f : oracle::all_ops(2, k)) {
          bool all = true;
          for (auto const& t : naive_translations(f)) {
            all = all && oracle::preserves(t, r);
          }
          CHECK(oracle::preserves(f, r) == all);
          CHECK(xi_holds(to_lib(f), r));
        }
      }
    }
  }
}

TEST_CASE("property Xi can fail on a reflexive non-gQuord") {
  auto const r = FiniteRelation::from_tuples(2, 3, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 1, 1}});
  CHECK_FALSE(oracle::gquord(r));
  CHECK_FALSE(xi_holds(op_or(), r));
}

TEST_CASE("endomorphism monoids") {
  CHECK(end_monoid(2, {fixture::chain(2)})
        == OperationSet{FiniteOperation::constant(2, 0), FiniteOperation::identity(2),
                        FiniteOperation::constant(2, 1)});
  CHECK(end_monoid(3, {FiniteRelation::full(3, 2)}).size() == 27);
  CHECK(end_monoid(3, {fixture::equality(3)}).size() == 27);
}

TEST_CASE("bounded polymorphisms") {
  auto const le = fixture::chain(2);
  auto const pol = pol_bounded(2, {le}, 2);
  std::size_t oracle_count = 0;
  for (auto const& f : oracle::all_ops(2, 2)) {
    oracle_count += oracle::preserves(f, le);
  }
  CHECK(pol.size() == oracle_count);
  CHECK(pol.size() == 6);
  CHECK(std::find(pol.begin(), pol.end(), op_and()) != pol.end());
  CHECK(std::find(pol.begin(), pol.end(), xor2()) == pol.end());

  CHECK(pol_bounded(2, {FiniteRelation::full(2, 2)}, 3).size() == 256);
  CHECK(pol_bounded(3, {fixture::equality(3)}, 1).size() == 27);
  CHECK_THROWS_AS((void)pol_bounded(3, {le}, 2, 1000), ResourceError);

  auto const c3 = fixture::chain(3);
  CHECK(pol_bounded(3, {c3}, 2, 1u << 24, Exec::serial)
        == pol_bounded(3, {c3}, 2, 1u << 24, Exec::parallel));
  std::size_t c3_count = 0;
  for (auto const& f : oracle::all_ops(3, 2)) {
    c3_count += oracle::preserves(f, c3);
  }
  CHECK(pol_bounded(3, {c3}, 2).size() == c3_count);
}

TEST_CASE("invariance under generators") {
  OperationSet const m{op_and(), op_or(), FiniteOperation::constant(2, 0),
                       FiniteOperation::constant(2, 1)};
  CHECK(invariant_under(fixture::chain(2), m));
  CHECK_FALSE(invariant_under(FiniteRelation::from_tuples(2, 2, {{0, 1}}),
                              {FiniteOperation::constant(2, 0)}));
}

TEST_CASE("lattice operations of an order") {
  auto const two = lattice_ops_from_order(fixture::chain(2));
  REQUIRE(two.ops.has_value());
  CHECK(two.ops->meet == op_and());
  CHECK(two.ops->join == op_or());

  auto const poset = lattice_ops_from_order(fixture::corpus_relation("ex_5_3_order.rel"));
  CHECK_FALSE(poset.ops.has_value());
  REQUIRE(poset.witness.has_value());
  CHECK(*poset.witness == std::pair<Element, Element>{1, 2});
  CHECK(poset.missing_join);

  auto const square = direct_product(fixture::chain(2), fixture::chain(2));
  auto const sq     = lattice_ops_from_order(square);
  REQUIRE(sq.ops.has_value());
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) {
      Element const lo = std::min(a / 2, b / 2) * 2 + std::min(a % 2, b % 2);
      Element const hi = std::max(a / 2, b / 2) * 2 + std::max(a % 2, b % 2);
      CHECK(sq.ops->meet({a, b}) == lo);
      CHECK(sq.ops->join({a, b}) == hi);
    }
  }

  CHECK_THROWS_AS((void)lattice_ops_from_order(FiniteRelation::full(2, 2)), ClassificationError);

  auto const maj = majority(*sq.ops);
  for (auto const& x : oracle::all_tuples(4, 3)) {
    if (x[0] == x[1] || x[0] == x[2]) {
      CHECK(maj({x[0], x[1], x[2]}) == x[0]);
    } else if (x[1] == x[2]) {
      CHECK(maj({x[0], x[1], x[2]}) == x[1]);
    }
  }
}

TEST_CASE("identities of the standard rectangular band") {
  auto const band = rect_band(2);
  CHECK(band == parse_operation(read_file(fixture::corpus_path("rect_band_2.op"))));
  CHECK(check_identity(band, Identity::ID).holds);
  CHECK(check_identity(band, Identity::AB).holds);
  CHECK(check_identity(band, Identity::C, 0, &band).holds);
  CHECK(check_identity(band, Identity::ABi, 0).holds);
  CHECK(check_identity(band, Identity::ABi, 1).holds);
}

TEST_CASE("identities of meet and xor") {
  auto const meet = op_and();
  CHECK(check_identity(meet, Identity::ID).holds);
  CHECK(check_identity(meet, Identity::C, 0, &meet).holds);
  auto const ab = check_identity(meet, Identity::AB);
  REQUIRE_FALSE(ab.holds);
  REQUIRE(ab.witness.size() == 4);
  auto const& w = ab.witness;
  CHECK(meet({meet({w[0], w[1]}), meet({w[2], w[3]})}) != meet({w[0], w[3]}));
  // The assignment x11 = 1, x12 = 0, x21 = 1, x22 = 1 also violates AB.
  CHECK(meet({meet({1, 0}), meet({1, 1})}) != meet({1, 1}));

  auto const id = check_identity(xor2(), Identity::ID);
  REQUIRE_FALSE(id.holds);
  CHECK(id.witness == std::vector<Element>{1});

  CHECK_THROWS_AS((void)check_identity(meet, Identity::ABi, 2), ArityError);
  CHECK_THROWS_AS((void)check_identity(meet, Identity::C), Error);
}

TEST_CASE("identity checks agree with their defining equations") {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (auto const& f : oracle::all_ops(n, 2)) {
      auto const lib  = to_lib(f);
      auto const want = binary_identities(f);
      CHECK(check_identity(lib, Identity::ID).holds == want.id);
      CHECK(check_identity(lib, Identity::AB).holds == want.ab);
      CHECK(check_identity(lib, Identity::C, 0, &lib).holds == want.entropic);
    }
  }
}

TEST_CASE("graphs of operations") {
  CHECK(graph_of(FiniteOperation::identity(2)) == fixture::equality(2));
  CHECK(graph_of(op_and()).tuples()
        == std::vector<Tuple>{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
  // The graph of meet is not a ternary gQuord.
  CHECK_FALSE(oracle::gquord(graph_naive({2, 2, {0, 0, 0, 1}})));

  auto const band  = rect_band(2);
  auto const graph = graph_of(band);
  CHECK(graph.size() == 16);
  CHECK(classify(graph).is_gpord);
  CHECK(oracle::gquord(graph));
  CHECK(oracle::bin_sym(graph) == fixture::equality(4));

  for (auto const& f : oracle::all_ops(2, 2)) {
    CHECK(graph_of(to_lib(f)) == graph_naive(f));
  }
}

TEST_CASE("rectangular report on the band") {
  auto const rep = rectangular_theorem_check(rect_band(2));
  CHECK(rep.entropic);
  CHECK(rep.idempotent);
  CHECK(rep.absorptive);
  CHECK(rep.graph_gquord);
  CHECK(rep.graph_gpord);
  CHECK(rep.equivalence_ok);
  CHECK(rep.gpord_implied_ok);
}

TEST_CASE("absorption and graph transitivity for entropic binary operations") {
  struct Counts {
    std::size_t entropic = 0, ab = 0, graph_gquord = 0, literal_failures = 0;
  };
  auto sweep = [](std::size_t n) {
    Counts c;
    for (auto const& f : oracle::all_ops(n, 2)) {
      auto const ids = binary_identities(f);
      if (!ids.entropic) {
        continue;
      }
      auto const graph  = graph_naive(f);
      bool const trans  = oracle::transitive(graph);
      bool const gquord = trans && oracle::reflexive(graph);
      ++c.entropic;
      c.ab += ids.ab;
      c.graph_gquord += gquord;
      c.literal_failures += ids.ab != gquord;

      CHECK(ids.ab == trans);
      CHECK((ids.ab && ids.id) == gquord);

      auto const rep = rectangular_theorem_check(to_lib(f));
      CHECK(rep.entropic);
      CHECK(rep.absorptive == ids.ab);
      CHECK(rep.graph_transitive == trans);
      CHECK(rep.graph_gquord == gquord);
      CHECK(rep.transitive_ok);
      CHECK(rep.gquord_ok);
      CHECK(rep.gpord_implied_ok);
    }
    return c;
  };

  auto const two = sweep(2);
  CHECK(two.entropic == 10);
  CHECK(two.ab == 4);
  CHECK(two.graph_gquord == 2);
  CHECK(two.literal_failures == 2);

  // The constant operation 0 is entropic and absorptive, but its graph misses
  // (1, 1, 1).
  auto const zero = rectangular_theorem_check(FiniteOperation::constant(2, 0, 2));
  CHECK(zero.entropic);
  CHECK(zero.absorptive);
  CHECK(zero.graph_transitive);
  CHECK_FALSE(zero.graph_gquord);
  CHECK_FALSE(zero.equivalence_ok);
}

TEST_CASE("absorption and graph transitivity on three elements") {
  std::size_t entropic = 0, ab = 0, gquord = 0;
  for (auto const& f : oracle::all_ops(3, 2)) {
    auto const ids = binary_identities(f);
    if (!ids.entropic) {
      continue;
    }
    auto const graph = graph_naive(f);
    bool const trans = oracle::transitive(graph);
    ++entropic;
    ab += ids.ab;
    gquord += trans && oracle::reflexive(graph);
    CHECK(ids.ab == trans);
  }
  CHECK(entropic == 369);
  CHECK(ab == 17);
  CHECK(gquord == 2);
}

TEST_CASE("operation text and builtins") {
  auto const band = rect_band(2);
  CHECK(parse_operation(serialize_operation(band)) == band);
  CHECK_THROWS_AS((void)parse_operation("op 2 2\n0 1 1\n"), ParseError);
  CHECK_THROWS_AS((void)parse_operation("op 1 2\n0 2\n"), ParseError);

  CHECK(builtin_operation("and", 2) == op_and());
  CHECK(builtin_operation("or", 3) == op_or(3));
  CHECK(builtin_operation("not", 2) == op_not());
  CHECK(builtin_operation("const 1", 3) == FiniteOperation::constant(3, 1));
  CHECK(builtin_operation("proj 3 2", 2) == FiniteOperation::projection(2, 3, 2));
  CHECK(builtin_operation("rect-band 2", 4) == band);
  auto const maj = builtin_operation("majority-from-order le", 2, [](std::string const&) {
    return fixture::chain(2);
  });
  CHECK(maj({0, 1, 1}) == 1);
  CHECK(maj({0, 1, 0}) == 0);
  CHECK_THROWS_AS((void)builtin_operation("frobnicate", 2), ParseError);
}
