#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "gq/analysis.hpp"
#include "gq/experiments.hpp"
#include "gq/sweep.hpp"
#include "oracles.hpp"

using namespace gq;

namespace {

  std::vector<FiniteRelation> oracle_filter(std::size_t n, std::size_t m,
                                            bool (*pred)(FiniteRelation const&)) {
    std::vector<FiniteRelation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << oracle::power(n, m)); ++mask) {
      auto r = FiniteRelation::from_mask(n, m, mask);
      if (pred(r)) {
        out.push_back(std::move(r));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool oracle_preorder(FiniteRelation const& r) {
    return oracle::reflexive(r) && oracle::binary_transitive(r);
  }

  bool oracle_geq(FiniteRelation const& r) {
    return oracle::gquord(r) && oracle::tos(r) == r;
  }

}  // namespace

TEST_CASE("filter_indices keeps ascending order in both modes") {
  auto pred = [](std::size_t i) { return i % 3 == 1 || i % 7 == 0; };
  auto const s = filter_indices(10000, pred, Exec::serial);
  auto const p = filter_indices(10000, pred, Exec::parallel);
  CHECK(s == p);
  CHECK(std::is_sorted(s.begin(), s.end()));
  std::size_t want = 0;
  for (std::size_t i = 0; i < 10000; ++i) {
    want += pred(i);
  }
  CHECK(s.size() == want);
}

TEST_CASE("gQuord counts") {
  struct Row {
    std::size_t n, m, count;
  };
  for (auto [n, m, count] : {Row{2, 1, 1}, Row{2, 2, 4}, Row{2, 3, 29}, Row{3, 2, 29},
                             Row{4, 2, 355}, Row{2, 4, 355}}) {
    CAPTURE(n);
    CAPTURE(m);
    auto const par = enumerate_gquords(n, m, Exec::parallel);
    CHECK(par.size() == count);
    CHECK(enumerate_gquords(n, m, Exec::serial) == par);
    CHECK(std::is_sorted(par.begin(), par.end()));
  }
  CHECK(enumerate_gquords(3, 3).size() == 6467);
}

TEST_CASE("closure enumeration equals the brute-force filter") {
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
    auto const want = oracle_filter(n, m, oracle::gquord);
    CHECK(enumerate_gquords(n, m) == want);
    auto const filt = filter_relations(
        n, m, [](FiniteRelation const& r) { return is_gquord(r); }, Exec::serial);
    CHECK(filt == want);
  }
}

TEST_CASE("preorders and equivalences") {
  auto const pre = enumerate_kind(Kind::preorders, 3, 2);
  CHECK(pre.size() == 29);
  CHECK(pre == oracle_filter(3, 2, oracle_preorder));
  CHECK(enumerate_kind(Kind::preorders, 4, 2).size() == 355);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(enumerate_kind(Kind::equivalences, n, 2).size() == oracle::count_equivalences(n));
  }
}

TEST_CASE("generalized equivalences correspond to equivalences") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 2; m <= 3; ++m) {
      CHECK(enumerate_geqs(n, m).size() == oracle::count_equivalences(n));
    }
  }
  CHECK(enumerate_geqs(4, 3).size() == 15);
  CHECK(enumerate_geqs(2, 3) == oracle_filter(2, 3, oracle_geq));
  CHECK(enumerate_geqs(3, 2) == oracle_filter(3, 2, oracle_geq));
  CHECK(enumerate_geqs(3, 1).size() == 1);
}

TEST_CASE("least generalized equivalence") {
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    auto const r = FiniteRelation::from_mask(2, 3, mask);
    auto const g = geq_closure(r);
    CHECK(r.is_subset_of(g));
    CHECK(oracle_geq(g));
    for (auto const& e : oracle_filter(2, 3, oracle_geq)) {
      if (r.is_subset_of(e)) {
        CHECK(g.is_subset_of(e));
      }
    }
  }
}

TEST_CASE("kinds") {
  for (auto k : {Kind::gquord, Kind::geq, Kind::gpord, Kind::wgpord, Kind::equivalences,
                 Kind::preorders}) {
    CHECK(parse_kind(kind_name(k)) == k);
  }
  CHECK_THROWS_AS((void)parse_kind("lattices"), Error);

  auto const gp = enumerate_kind(Kind::gpord, 2, 3);
  auto const wg = enumerate_kind(Kind::wgpord, 2, 3);
  for (auto const& r : gp) {
    CHECK(oracle::bin_sym(r) == fixture::equality(2));
  }
  for (auto const& r : wg) {
    CHECK(oracle::exchange(r) == fixture::equality(2));
  }
  CHECK(std::includes(wg.begin(), wg.end(), gp.begin(), gp.end()));
}

TEST_CASE("relation filter size guard") {
  CHECK_THROWS_AS((void)filter_relations(
                      3, 3, [](FiniteRelation const&) { return true; }, Exec::serial, 20),
                  ResourceError);
}

TEST_CASE("pp sweeps") {
  auto const c2 = fixture::chain(2);
  CHECK(pp_family_atoms(4) == 20);
  auto const phi = pp_family_formula(2, 0b11, "le");
  CHECK(phi.free_count == 2);
  CHECK(phi.bound_count == 1);
  CHECK(phi.atoms.size() == 2);

  auto const s = pp_sweep(c2, 2, 6, Exec::serial);
  auto const p = pp_sweep(c2, 2, 6, Exec::parallel);
  CHECK(s.formulas == p.formulas);
  CHECK(s.outputs == p.outputs);
  CHECK(s.formulas == 1 + 6 + 15 + 20 + 15 + 6 + 1);
  CHECK(s.outside_closure.empty());

  // Each output matches direct evaluation of its formula.
  RelationStore env;
  env.add("le", c2);
  std::set<FiniteRelation> direct;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    direct.insert(eval_pp(pp_family_formula(2, mask, "le"), env, 2));
  }
  CHECK(std::set<FiniteRelation>(s.outputs.begin(), s.outputs.end()) == direct);
  CHECK_THROWS_AS((void)pp_sweep(FiniteRelation::full(2, 3), 2, 2), ArityError);
}

TEST_CASE("pp sweep over the six-element poset leaves the qf-closure") {
  auto const poset = fixture::corpus_relation("ex_5_3_order.rel");
  auto const sw    = pp_sweep(poset, 4, 4);
  auto const sigma = fixture::corpus_relation("ex_5_3_sigma.rel");
  CHECK(std::find(sw.outputs.begin(), sw.outputs.end(), sigma) != sw.outputs.end());
  CHECK(std::find(sw.outside_closure.begin(), sw.outside_closure.end(), sigma)
        != sw.outside_closure.end());
}

TEST_CASE("conjecture harness report is consistent") {
  auto const poset = fixture::corpus_relation("ex_5_3_order.rel");
  auto const rep   = conjecture_search(poset, 3, 6, Exec::serial);
  CHECK(rep.arity == 3);
  CHECK(rep.formulas > 0);
  CHECK(rep.gquord_outputs <= rep.outputs);
  for (auto const& c : rep.candidates) {
    CHECK(is_gquord(c));
    CHECK_FALSE(in_qfpp_closure(c, {poset}));
  }
  auto const par = conjecture_search(poset, 3, 6, Exec::parallel);
  CHECK(par.candidates == rep.candidates);
  CHECK(par.outputs == rep.outputs);
}
