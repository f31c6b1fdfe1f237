// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "gq/analysis.hpp"
#include "gq/construct.hpp"
#include "gq/experiments.hpp"
#include "gq/formula.hpp"
#include "gq/operation.hpp"
#include "gq/suites.hpp"
#include "gq/sweep.hpp"
#include "oracles.hpp"

using namespace gq;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string info;
  };

  // Accumulates sub-checks; the first failure is kept as the message.
  struct Tally {
    Outcome out;

    void require(bool ok, std::string const& what) {
      if (!ok && out.pass) {
        out.pass = false;
        out.info = "failed: " + what;
      }
    }
  };

  std::string str(std::size_t v) {
    return std::to_string(v);
  }

  std::vector<FiniteRelation> all_relations(std::size_t n, std::size_t m) {
    std::vector<FiniteRelation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << oracle::power(n, m)); ++mask) {
      out.push_back(FiniteRelation::from_mask(n, m, mask));
    }
    return out;
  }

  // 1: the pp-defined relation over the six-element poset.
  Outcome pinned_counterexample() {
    Tally         t;
    RelationStore env;
    env.add("poset", fixture::corpus_relation("ex_5_3_order.rel"));
    auto const phi   = parse_formula(read_file(fixture::corpus_path("ex_5_3_sigma.ppf")));
    auto const sigma = eval_pp(phi, env, 6);
    auto const mat   = parse_matrix(read_file(fixture::corpus_path("ex_5_3_matrix.txt")));
    t.require(sigma == fixture::corpus_relation("ex_5_3_sigma.rel"), "sigma matches corpus");
    t.require(oracle::reflexive(sigma), "sigma reflexive");
    t.require(models_matrix(sigma, mat), "sigma models the matrix");
    t.require(mat.diagonal() == Tuple{1, 2, 3, 4}, "matrix diagonal is (a,b,c,d)");
    t.require(!sigma.contains(mat.diagonal()), "diagonal outside sigma");
    t.require(!is_transitive(sigma), "sigma not transitive");
    if (t.out.pass) {
      t.out.info = "|sigma|=" + str(sigma.size()) + ", diagonal (a,b,c,d) excluded";
    }
    return t.out;
  }

  // 2: binary gQuords on {0,1} are the nonempty invariants of meet, join and
  // the constants.
  Outcome boolean_invariants() {
    Tally                         t;
    std::vector<oracle::Op> const gens{{2, 2, {0, 0, 0, 1}}, {2, 2, {0, 1, 1, 1}},
                                       {2, 1, {0, 0}},       {2, 1, {1, 1}}};
    std::string counts;
    for (std::size_t m = 1; m <= 4; ++m) {
      std::size_t gq = 0;
      std::size_t inv = 0;
      for (auto const& r : all_relations(2, m)) {
        bool invariant = true;
        for (auto const& g : gens) {
          invariant = invariant && oracle::preserves(g, r);
        }
        bool const quord = m <= 3 ? oracle::gquord(r) : is_gquord(r);
        inv += invariant && !r.empty();
        gq += quord;
        t.require(quord == (invariant && !r.empty()), "m=" + str(m) + " relation "
                                                          + serialize_relation(r));
      }
      t.require(gq == enumerate_gquords(2, m).size(), "closure enumeration m=" + str(m));
      counts += (m > 1 ? ", " : "") + str(gq);
    }
    if (t.out.pass) {
      t.out.info = "m=1..4: " + counts + " gQuords, each equal to the nonempty invariants";
    }
    return t.out;
  }

  // 3: decomposition bijection.
  Outcome decomposition() {
    Tally       t;
    std::string info;
    auto round_trip = [&](std::vector<FiniteRelation> const& rels, std::string const& tag) {
      std::set<std::pair<std::vector<Element>, FiniteRelation>> seen;
      for (auto const& r : rels) {
        auto const d = decompose(r);
        t.require(recompose(d.sigma, d.tau) == r, tag + " round trip");
        seen.insert({d.sigma.block_ids(), d.tau});
      }
      t.require(seen.size() == rels.size(), tag + " injective");
      info += tag + ":" + str(rels.size()) + " ";
    };

    for (std::size_t m = 1; m <= 3; ++m) {
      std::vector<FiniteRelation> gs;
      for (auto const& r : all_relations(2, m)) {
        if (oracle::gquord(r)) {
          gs.push_back(r);
        }
      }
      round_trip(gs, "n2m" + str(m));
    }
    for (std::size_t n = 3; n <= 4; ++n) {
      std::vector<FiniteRelation> pre;
      for (auto const& r : all_relations(n, 2)) {
        if (oracle::reflexive(r) && oracle::binary_transitive(r)) {
          pre.push_back(r);
        }
      }
      t.require(pre.size() == (n == 3 ? 29u : 355u), "preorder count n=" + str(n));
      round_trip(pre, "preorders" + str(n));
    }

    // All valid (sigma, tau) pairs at n <= 3, m = 2.
    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& sigma : all_partitions(n)) {
        for (auto const& tau : all_relations(sigma.num_blocks(), 2)) {
          if (!oracle::gquord(tau)
              || oracle::exchange(tau) != fixture::equality(tau.universe_size())) {
            continue;
          }
          ++pairs;
          auto const d = decompose(recompose(sigma, tau));
          t.require(d.sigma == sigma && d.tau == tau, "pair round trip n=" + str(n));
        }
      }
    }
    info += "pairs:" + str(pairs) + " ";

    // Sampled closure-generated ternary gQuords on three elements.
    std::mt19937_64 rng(20240611);
    std::size_t     samples = 0;
    for (; samples < 10000; ++samples) {
      FiniteRelation r   = constant_tuples(3, 3);
      auto const     pct = 1 + rng() % 30;
      for (std::size_t c = 0; c < r.points(); ++c) {
        if (rng() % 100 < pct) {
          r.insert(c);
        }
      }
      r            = transitive_closure(r);
      auto const d = decompose(r);
      t.require(recompose(d.sigma, d.tau) == r, "sampled round trip");
    }
    info += "sampled:" + str(samples);
    if (t.out.pass) {
      t.out.info = info;
    }
    return t.out;
  }

  // 4: equivalences lift bijectively onto generalized equivalences.
  Outcome geq_lattice() {
    Tally       t;
    std::string info;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t m = 2; m <= 3; ++m) {
        auto const                   parts = all_partitions(n);
        auto const                   geqs  = enumerate_geqs(n, m);
        std::set<FiniteRelation>     lifts;
        for (auto const& psi : parts) {
          auto const up = lift_partition(psi, m);
          t.require(oracle::gquord(up) && oracle::tos(up) == up, "lift is a gEq");
          t.require(bin_sym(up) == partition_to_relation(psi), "[2] inverts the lift");
          lifts.insert(up);
          for (auto const& phi : parts) {
            t.require(psi.refines(phi) == up.is_subset_of(lift_partition(phi, m)),
                      "lift preserves and reflects inclusion");
          }
        }
        t.require(lifts == std::set<FiniteRelation>(geqs.begin(), geqs.end()),
                  "lifts are all gEqs n=" + str(n) + " m=" + str(m));
        for (auto const& th : geqs) {
          t.require(lift_relation(bin_sym(th), m) == th, "lift inverts [2]");
        }
        t.require(geqs.size() == oracle::count_equivalences(n), "count n=" + str(n));
      }
    }
    auto const fifteen = enumerate_geqs(4, 3).size();
    t.require(fifteen == 15, "|gEq^(3)(4)| = 15");
    if (t.out.pass) {
      t.out.info = "n<=4, m=2..3; |gEq^(3)(4)|=" + str(fifteen);
    }
    return t.out;
  }

  Outcome from_suite(std::string const& name) {
    SuiteParams p;
    p.corpus_dir   = GQ_CORPUS_DIR;
    auto const rep = run_suite(name, p);
    Outcome    out{rep.passed(), str(rep.checks.size()) + " checks of suite " + name};
    for (auto const& c : rep.checks) {
      if (!c.pass) {
        out.info = "failed: " + c.name + " (" + c.info + ")";
        break;
      }
    }
    return out;
  }

  // 7: property Xi for every gQuord on {0,1} and every operation of arity <= 3.
  Outcome xi_property() {
    Tally       t;
    std::size_t pairs = 0;
    for (std::size_t m = 1; m <= 3; ++m) {
      for (auto const& r : all_relations(2, m)) {
        if (!oracle::gquord(r)) {
          continue;
        }
        for (std::size_t k = 1; k <= 3; ++k) {
          for (auto const& f : oracle::all_ops(2, k)) {
            ++pairs;
            t.require(xi_holds(FiniteOperation(2, k, f.table), r),
                      "Xi for " + serialize_relation(r));
          }
        }
      }
    }
    if (t.out.pass) {
      t.out.info = str(pairs) + " (rho, f) pairs";
    }
    return t.out;
  }

  // 8: for entropic binary f, AB_f iff graph(f) is a gQuord; the band's graph
  // is a gPord.
  Outcome rectangular() {
    Tally       t;
    std::string info;
    std::size_t counterexamples = 0;
    bool        repaired        = true;
    std::string first;
    for (std::size_t n = 2; n <= 3; ++n) {
      std::size_t entropic = 0;
      for (auto const& f : oracle::all_ops(n, 2)) {
        FiniteOperation const op(n, 2, f.table);
        if (!check_identity(op, Identity::C, 0, &op).holds) {
          continue;
        }
        ++entropic;
        bool const ab    = check_identity(op, Identity::AB).holds;
        bool const id    = check_identity(op, Identity::ID).holds;
        auto const graph = graph_of(op);
        bool const trans = is_transitive(graph);
        bool const quord = trans && is_reflexive(graph);
        if (ab != quord) {
          ++counterexamples;
          if (first.empty()) {
            first = "table";
            for (auto v : f.table) {
              first += " " + str(v);
            }
            first += " on n=" + str(n);
          }
        }
        repaired = repaired && ab == trans && (ab && id) == quord;
      }
      info += "n=" + str(n) + ": " + str(entropic) + " entropic; ";
    }
    t.require(counterexamples == 0,
              "AB iff gQuord(graph) has " + str(counterexamples)
                  + " counterexamples, first " + first
                  + " (AB iff graph transitive, and AB and ID iff gQuord(graph): "
                  + (repaired ? "hold" : "fail") + ")");

    auto const band = rect_band(2);
    auto const rep  = classify(graph_of(band));
    t.require(rep.is_gpord && graph_of(band).size() == 16, "band graph is a 16-tuple gPord");
    if (t.out.pass) {
      t.out.info = info;
    }
    return t.out;
  }

  // 9: pp sweeps over lattices stay inside the qf-closure; over the
  // six-element poset they leave it, sigma among the outputs.
  Outcome lattice_sweeps() {
    Tally       t;
    std::string info;
    std::vector<std::pair<std::string, FiniteRelation>> const lattices{
        {"chain2", fixture::chain(2)},
        {"chain3", fixture::chain(3)},
        {"chain4", fixture::chain(4)},
        {"diamond", direct_product(fixture::chain(2), fixture::chain(2))}};
    for (auto const& [name, rho] : lattices) {
      t.require(lattice_ops_from_order(rho).ops.has_value(), name + " is a lattice");
      for (std::size_t m = 2; m <= 4; ++m) {
        auto const sw = pp_sweep(rho, m, 6);
        t.require(sw.outside_closure.empty(),
                  name + " m=" + str(m) + " has outputs outside the qf-closure");
        if (m == 4) {
          info += name + ":" + str(sw.outputs.size()) + " ";
        }
      }
    }
    auto const poset = fixture::corpus_relation("ex_5_3_order.rel");
    auto const sigma = fixture::corpus_relation("ex_5_3_sigma.rel");
    auto const sw    = pp_sweep(poset, 4, 6);
    std::size_t non_gquord = 0;
    for (auto const& r : sw.outputs) {
      non_gquord += !is_gquord(r);
    }
    t.require(non_gquord > 0, "poset sweep produces a non-gQuord");
    t.require(std::find(sw.outputs.begin(), sw.outputs.end(), sigma) != sw.outputs.end(),
              "sigma among the poset outputs");
    if (t.out.pass) {
      t.out.info = info + "poset: " + str(non_gquord) + " non-gQuords incl. sigma";
    }
    return t.out;
  }

  // 10: the conjecture harness terminates with a well-formed report.
  Outcome conjecture() {
    Tally       t;
    auto const  poset = fixture::corpus_relation("ex_5_3_order.rel");
    std::string info;
    for (std::size_t m = 2; m <= 4; ++m) {
      auto const rep = conjecture_search(poset, m, 6);
      t.require(rep.arity == m && rep.formulas > 0 && rep.gquord_outputs <= rep.outputs,
                "report counts m=" + str(m));
      for (auto const& c : rep.candidates) {
        auto const text = serialize_relation(c);
        t.require(parse_relation(text) == c && is_gquord(c), "candidate serialization");
      }
      info += "m=" + str(m) + ": " + str(rep.candidates.size()) + " candidates; ";
    }
    if (t.out.pass) {
      t.out.info = info;
    }
    return t.out;
  }

}  // namespace

int main() {
  struct Criterion {
    char const*              title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {"pinned non-lattice counterexample", pinned_counterexample},
      {"Boolean gQuords are the invariants of meet, join, constants", boolean_invariants},
      {"decomposition is a bijection", decomposition},
      {"equivalences lift onto generalized equivalences", geq_lattice},
      {"closure under constructions", [] { return from_suite("closure-props"); }},
      {"factor relations", [] { return from_suite("factor-props"); }},
      {"property Xi on gQuords", xi_property},
      {"entropic f: AB iff graph is a gQuord", rectangular},
      {"pp sweeps over lattices stay qf-definable", lattice_sweeps},
      {"conjecture harness terminates", conjecture},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    out;
    try {
      out = criteria[i].run();
    } catch (std::exception const& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s %s (%s) [%.1fs]\n", i + 1, out.pass ? "PASS" : "FAIL",
                criteria[i].title, out.info.c_str(), secs);
    std::fflush(stdout);
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
