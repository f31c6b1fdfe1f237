#include "gq/suites.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "gq/analysis.hpp"
#include "gq/construct.hpp"
#include "gq/experiments.hpp"
#include "gq/formula.hpp"
#include "gq/io.hpp"
#include "gq/operation.hpp"
#include "gq/sweep.hpp"

namespace gq {

  bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.pass; });
  }

  namespace {

    using Relations = std::vector<FiniteRelation>;
    using Sizes     = std::vector<std::pair<std::size_t, std::size_t>>;

    struct Ctx {
      SuiteReport&       rep;
      SuiteParams const& p;

      void check(std::string name, bool pass, std::string info = {}, std::string witness = {}) {
        rep.checks.push_back({std::move(name), pass, std::move(info), std::move(witness)});
      }
    };

    std::string nm(std::size_t n, std::size_t m) {
      return "n=" + std::to_string(n) + " m=" + std::to_string(m);
    }

    std::string corpus_file(SuiteParams const& p, std::string const& name) {
      return (std::filesystem::path(p.corpus_dir) / name).string();
    }

    FiniteRelation load_relation(SuiteParams const& p, std::string const& name) {
      return parse_relation(read_file(corpus_file(p, name)));
    }

    // Indices of the items failing `ok`, ascending.
    template <typename T, typename Pred>
    std::vector<std::size_t> failures(std::vector<T> const& items, Pred ok, Exec exec) {
      return filter_indices(items.size(), [&](std::size_t i) { return !ok(items[i]); }, exec);
    }

    std::string first_difference(Relations const& a, Relations const& b) {
      for (auto const& r : a) {
        if (!std::binary_search(b.begin(), b.end(), r)) {
          return "only in first set:\n" + serialize_relation(r);
        }
      }
      for (auto const& r : b) {
        if (!std::binary_search(a.begin(), a.end(), r)) {
          return "only in second set:\n" + serialize_relation(r);
        }
      }
      return {};
    }

    std::string pair_text(FiniteRelation const& a, FiniteRelation const& b) {
      return serialize_relation(a) + serialize_relation(b);
    }

    FiniteRelation chain(std::size_t n) {
      FiniteRelation r(n, 2);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
          r.insert(a * n + b);
        }
      }
      return r;
    }

    FiniteRelation diagonal2(std::size_t n) {
      return constant_tuples(n, 2);
    }

    FiniteRelation exch_relation(FiniteRelation const& rho) {
      return partition_to_relation(exchange_eq(rho));
    }

    std::vector<IndexMap> permutations(std::size_t m) {
      std::vector<std::size_t> pi(m);
      for (std::size_t i = 0; i < m; ++i) {
        pi[i] = i;
      }
      std::vector<IndexMap> out;
      do {
        out.emplace_back(m, pi);
      } while (std::next_permutation(pi.begin(), pi.end()));
      return out;
    }

    std::vector<SurjectiveMap> surjections(std::size_t n, std::size_t k) {
      std::vector<SurjectiveMap> out;
      std::vector<Element>       map(n);
      for (std::size_t code = 0; code < ipow(k, n); ++code) {
        decode_tuple(code, k, map);
        std::vector<bool> hit(k, false);
        for (auto v : map) {
          hit[v] = true;
        }
        if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
          out.emplace_back(k, map);
        }
      }
      return out;
    }

    // Every reflexive, totally symmetric m-ary relation on n elements, built
    // from unions of permutation orbits.
    Relations tolerances(std::size_t n, std::size_t m) {
      std::vector<Tuple> orbits;
      Tuple              t(m);
      for (std::size_t code = 0; code < ipow(n, m); ++code) {
        decode_tuple(code, n, t);
        if (std::is_sorted(t.begin(), t.end()) && t.front() != t.back()) {
          orbits.push_back(t);
        }
      }
      if (orbits.size() > 20) {
        throw ResourceError("too many permutation orbits to enumerate tolerances");
      }
      Relations out;
      for (std::size_t mask = 0; mask < (std::size_t{1} << orbits.size()); ++mask) {
        FiniteRelation rho = constant_tuples(n, m);
        for (std::size_t o = 0; o < orbits.size(); ++o) {
          if (mask >> o & 1) {
            Tuple u = orbits[o];
            do {
              rho.insert(encode_tuple(u, n));
            } while (std::next_permutation(u.begin(), u.end()));
          }
        }
        out.push_back(std::move(rho));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    // gQuords per size, computed once per suite run.
    class GquordCache {
     public:
      explicit GquordCache(Exec exec) : _exec(exec) {}
      Relations const& get(std::size_t n, std::size_t m) {
        auto key = std::pair{n, m};
        auto it  = _cache.find(key);
        if (it == _cache.end()) {
          it = _cache.emplace(key, enumerate_gquords(n, m, _exec)).first;
        }
        return it->second;
      }

     private:
      Exec                                                    _exec;
      std::map<std::pair<std::size_t, std::size_t>, Relations> _cache;
    };

    Relations sample(Relations const& all, std::size_t count, std::mt19937_64& rng) {
      if (count >= all.size()) {
        return all;
      }
      Relations out;
      for (std::size_t i = 0; i < count; ++i) {
        out.push_back(all[rng() % all.size()]);
      }
      return out;
    }

    // ---------------------------------------------------------------- boolean-thm

    void suite_boolean(Ctx& c) {
      std::size_t const  top = c.p.m.value_or(4);
      OperationSet const gens{op_and(), op_or(), FiniteOperation::constant(2, 0),
                              FiniteOperation::constant(2, 1)};
      for (std::size_t m = 1; m <= top; ++m) {
        auto const gq  = filter_relations(2, m, is_gquord, c.p.exec);
        auto const inv = filter_relations(
            2, m, [&](FiniteRelation const& r) { return invariant_under(r, gens); }, c.p.exec);
        bool const empty_in = !inv.empty() && inv.front().empty();
        Relations  nonempty;
        std::copy_if(inv.begin(), inv.end(), std::back_inserter(nonempty),
                     [](auto const& r) { return !r.empty(); });

        std::string const tag = "m=" + std::to_string(m);
        c.check(tag + " gquords equal nonempty invariants of {and,or,c0,c1}", gq == nonempty,
                "gquords=" + std::to_string(gq.size())
                    + " nonempty_invariants=" + std::to_string(nonempty.size()),
                first_difference(gq, nonempty));
        c.check(tag + " empty relation is invariant (excluded from gquords)", empty_in);
        auto const enumerated = enumerate_gquords(2, m, c.p.exec);
        c.check(tag + " closure enumeration agrees with brute force", enumerated == gq,
                "enumerated=" + std::to_string(enumerated.size()),
                first_difference(enumerated, gq));
        auto const defined = qfpp_closure(2, {chain(2)}, m);
        c.check(tag + " gquords are exactly the qf-pp relations over the order", defined == gq,
                "definable=" + std::to_string(defined.size()), first_difference(defined, gq));
      }
    }

    // ---------------------------------------------------------------- example-5-3

    void suite_example(Ctx& c) {
      auto const order  = load_relation(c.p, "ex_5_3_order.rel");
      auto const stored = load_relation(c.p, "ex_5_3_sigma.rel");
      auto const phi    = parse_formula(read_file(corpus_file(c.p, "ex_5_3_sigma.ppf")));
      auto const mat    = parse_matrix(read_file(corpus_file(c.p, "ex_5_3_matrix.txt")));

      auto const lat = lattice_ops_from_order(order);
      c.check("order is a bounded partial order but not a lattice",
              !lat.ops && lat.witness == std::pair<Element, Element>{1, 2} && lat.missing_join,
              lat.witness ? "pair without least upper bound: (" + std::to_string(lat.witness->first)
                                + "," + std::to_string(lat.witness->second) + ")"
                          : "");

      RelationStore env;
      env.add("poset", order);
      auto const sigma = eval_pp(phi, env, order.universe_size(), 1);
      c.check("sigma evaluated from its formula equals the corpus relation", sigma == stored,
              "size=" + std::to_string(sigma.size()));
      auto const refl = reflexivity_witness(sigma);
      c.check("sigma is reflexive", !refl,
              refl ? "missing constant tuple at " + std::to_string(*refl) : "");
      c.check("sigma models the 4x4 matrix", models_matrix(sigma, mat), "", serialize_matrix(mat));
      auto const diag = mat.diagonal();
      c.check("diagonal (a,b,c,d) lies outside sigma",
              diag == Tuple{1, 2, 3, 4} && !sigma.contains(diag),
              "diagonal=" + serialize_tuple(diag));
      auto const tr = check_transitive(sigma);
      bool const genuine
          = !tr.holds && models_matrix(sigma, *tr.witness) && !sigma.contains(tr.witness->diagonal());
      c.check("sigma is not transitive", genuine, "",
              tr.witness ? serialize_matrix(*tr.witness) : "");
      c.check("sigma is not qf-pp definable from the order", !in_qfpp_closure(sigma, {order}));
    }

    // ---------------------------------------------------------------- decomposition

    bool round_trip_ok(FiniteRelation const& rho) {
      auto const d = decompose(rho);
      return recompose(d.sigma, d.tau) == rho && d.sigma == exchange_eq(rho)
          && d.tau == factor(rho, d.sigma) && is_gquord(d.tau)
          && exchange_eq(d.tau).is_discrete();
    }

    void check_round_trips(Ctx& c, Relations const& gqs, std::string const& tag) {
      auto const bad = failures(gqs, round_trip_ok, c.p.exec);
      c.check("recompose(decompose(rho)) = rho, " + tag, bad.empty(),
              std::to_string(gqs.size()) + " round trips",
              bad.empty() ? "" : serialize_relation(gqs[bad.front()]));
    }

    void decomposition_sizes(Ctx& c, GquordCache& cache, std::size_t n, std::size_t m) {
      auto const& gqs = cache.get(n, m);
      check_round_trips(c, gqs, nm(n, m));

      std::set<std::pair<std::vector<Element>, FiniteRelation>> seen;
      for (auto const& rho : gqs) {
        auto d = decompose(rho);
        seen.emplace(d.sigma.block_ids(), std::move(d.tau));
      }
      c.check("decompose is injective, " + nm(n, m), seen.size() == gqs.size(),
              std::to_string(seen.size()) + " distinct decompositions");
    }

    void decomposition_pairs(Ctx& c, GquordCache& cache, std::size_t n, std::size_t m) {
      struct Pair {
        EquivPartition sigma;
        FiniteRelation tau;
      };
      std::vector<Pair> pairs;
      for (auto const& psi : all_partitions(n)) {
        for (auto const& tau : cache.get(psi.num_blocks(), m)) {
          if (exchange_eq(tau).is_discrete()) {
            pairs.push_back({psi, tau});
          }
        }
      }
      auto const bad = failures(
          pairs,
          [](Pair const& pr) {
            auto const rho = recompose(pr.sigma, pr.tau);
            auto const d   = decompose(rho);
            return is_gquord(rho) && d.sigma == pr.sigma && d.tau == pr.tau;
          },
          c.p.exec);
      c.check("decompose(recompose(sigma, tau)) = (sigma, tau), " + nm(n, m), bad.empty(),
              std::to_string(pairs.size()) + " pairs",
              bad.empty() ? "" : serialize_partition(pairs[bad.front()].sigma)
                                     + serialize_relation(pairs[bad.front()].tau));

      auto const bad_c = failures(
          pairs,
          [](Pair const& pr) {
            auto const rho       = recompose(pr.sigma, pr.tau);
            bool const tau_gpord = bin_sym(pr.tau) == diagonal2(pr.tau.universe_size());
            return tau_gpord == (exch_relation(rho) == bin_sym(rho));
          },
          c.p.exec);
      c.check("tau is a gPord iff exchange equivalence = binary symmetric part, " + nm(n, m),
              bad_c.empty(), "",
              bad_c.empty() ? "" : serialize_partition(pairs[bad_c.front()].sigma)
                                       + serialize_relation(pairs[bad_c.front()].tau));
    }

    Relations sampled_gquords(std::size_t n, std::size_t m, std::size_t count, std::uint64_t seed) {
      std::mt19937_64   rng(seed);
      std::size_t const points = ipow(n, m);
      Relations         out;
      out.reserve(count);
      for (std::size_t i = 0; i < count; ++i) {
        // density between 1 and 8 tuples in `points`, on average
        std::size_t const p   = 1 + rng() % 8;
        FiniteRelation    rho = constant_tuples(n, m);
        for (std::size_t code = 0; code < points; ++code) {
          if (rng() % points < p) {
            rho.insert(code);
          }
        }
        out.push_back(transitive_closure(rho));
      }
      return out;
    }

    void suite_decomposition(Ctx& c) {
      GquordCache cache(c.p.exec);
      if (c.p.n || c.p.m) {
        std::size_t const n = c.p.n.value_or(3);
        std::size_t const m = c.p.m.value_or(2);
        decomposition_sizes(c, cache, n, m);
        decomposition_pairs(c, cache, n, m);
        if (c.p.samples) {
          check_round_trips(c, sampled_gquords(n, m, *c.p.samples, c.p.seed),
                            nm(n, m) + " sampled");
        }
      } else {
        for (auto [n, m] : Sizes{{2, 1}, {2, 2}, {2, 3}, {3, 2}, {4, 2}, {3, 3}}) {
          decomposition_sizes(c, cache, n, m);
        }
        for (std::size_t n = 1; n <= 3; ++n) {
          for (std::size_t m = 2; m <= 3; ++m) {
            decomposition_pairs(c, cache, n, m);
          }
        }
        check_round_trips(c, sampled_gquords(3, 3, c.p.samples.value_or(10000), c.p.seed),
                          "n=3 m=3 sampled");
      }

      bool rejected = false;
      try {
        static_cast<void>(recompose(EquivPartition::discrete(2), FiniteRelation::full(2, 2)));
      } catch (ClassificationError const&) {
        rejected = true;
      }
      c.check("recompose rejects a quotient relation that is not a wgPord", rejected);
    }

    // ---------------------------------------------------------------- closure-props

    void closure_constructions(Ctx& c, Relations const& gqs, std::string const& tag) {
      if (gqs.empty()) {
        return;
      }
      std::size_t const m     = gqs.front().arity();
      auto const        perms = permutations(m);
      auto const        bad   = failures(
          gqs,
          [&](FiniteRelation const& rho) {
            for (auto const& pi : perms) {
              if (!is_gquord(permute(rho, pi))) {
                return false;
              }
            }
            return is_gquord(add_fictitious(rho)) && (m < 2 || is_gquord(identify_first_two(rho)));
          },
          c.p.exec);
      c.check("permute, fictitious coordinate and identification keep gquords, " + tag,
              bad.empty(), std::to_string(gqs.size()) + " relations",
              bad.empty() ? "" : serialize_relation(gqs[bad.front()]));
    }

    void closure_intersections(Ctx& c, Relations const& a, Relations const& b, std::string const& tag) {
      auto const bad = filter_indices(
          a.size(),
          [&](std::size_t i) {
            return std::any_of(b.begin(), b.end(),
                               [&](auto const& r) { return !is_gquord(intersect(a[i], r)); });
          },
          c.p.exec);
      c.check("intersections of gquords are gquords, " + tag, bad.empty(),
              std::to_string(a.size() * b.size()) + " pairs",
              bad.empty() ? "" : serialize_relation(a[bad.front()]));
    }

    void closure_qfpp(Ctx& c, Relations const& gqs, std::size_t target, std::string const& tag) {
      std::vector<std::size_t> sizes(gqs.size());
      auto const               bad = filter_indices(
          gqs.size(),
          [&](std::size_t i) {
            auto const cl = qfpp_closure(gqs[i].universe_size(), {gqs[i]}, target);
            sizes[i]      = cl.size();
            return !std::all_of(cl.begin(), cl.end(), [](auto const& r) { return is_gquord(r); });
          },
          c.p.exec);
      std::size_t total = 0;
      for (auto s : sizes) {
        total += s;
      }
      c.check("qf-pp definable relations (arity " + std::to_string(target)
                  + ") over a gquord are gquords, " + tag,
              bad.empty(), std::to_string(total) + " relations",
              bad.empty() ? "" : serialize_relation(gqs[bad.front()]));
    }

    void closure_products(Ctx& c, std::size_t m) {
      auto const        all   = filter_relations(2, m, [](auto const&) { return true; }, c.p.exec);
      std::size_t const count = all.size();
      auto const        gq    = filter_indices(
          count, [&](std::size_t i) { return is_gquord(all[i]); }, c.p.exec);
      std::vector<std::uint8_t> is_gq(count, 0);
      for (auto i : gq) {
        is_gq[i] = 1;
      }
      auto const bad = filter_indices(
          count * count,
          [&](std::size_t k) {
            std::size_t const i = k / count;
            std::size_t const j = k % count;
            return is_gquord(direct_product(all[i], all[j])) != (is_gq[i] && is_gq[j]);
          },
          c.p.exec);
      c.check("product is a gquord iff both factors are, n1=n2=2 m=" + std::to_string(m),
              bad.empty(), std::to_string(count * count) + " pairs",
              bad.empty() ? "" : pair_text(all[bad.front() / count], all[bad.front() % count]));
    }

    void closure_restrictions(Ctx& c, GquordCache& cache, std::size_t m) {
      auto const& big   = cache.get(3, m);
      auto const& small = cache.get(2, m);
      for (std::vector<Element> b : {std::vector<Element>{0, 1}, {0, 2}, {1, 2}}) {
        Relations images;
        for (auto const& rho : big) {
          images.push_back(restrict(rho, b));
        }
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        c.check("restrictions of gquords on 3 elements to {" + std::to_string(b[0]) + ","
                    + std::to_string(b[1]) + "} are exactly the gquords on 2 elements, m="
                    + std::to_string(m),
                images == small, std::to_string(images.size()) + " images",
                first_difference(images, small));
      }
    }

    void closure_equivalence_clones(Ctx& c, std::size_t n, std::size_t m) {
      std::size_t total = 0;
      bool        ok    = true;
      std::string witness;
      for (auto const& psi : all_partitions(n)) {
        auto const rel  = partition_to_relation(psi);
        auto const endo = end_monoid(n, {rel});
        auto const cl   = qfpp_closure(n, {rel}, m);
        total += cl.size();
        auto const bad = failures(
            cl, [&](FiniteRelation const& r) { return is_gquord(r) && invariant_under(r, endo); },
            c.p.exec);
        if (!bad.empty() && ok) {
          ok      = false;
          witness = serialize_partition(psi) + serialize_relation(cl[bad.front()]);
        }
      }
      c.check("qf-pp relations over an equivalence are gquords preserved by its endomorphisms, "
                  + nm(n, m),
              ok, std::to_string(total) + " relations", witness);
    }

    void suite_closure(Ctx& c) {
      GquordCache     cache(c.p.exec);
      std::mt19937_64 rng(c.p.seed);
      for (auto [n, m] : Sizes{{2, 1}, {2, 2}, {2, 3}, {3, 2}}) {
        closure_constructions(c, cache.get(n, m), nm(n, m));
        closure_intersections(c, cache.get(n, m), cache.get(n, m), nm(n, m));
      }
      auto const s33 = sample(cache.get(3, 3), c.p.samples.value_or(300), rng);
      closure_constructions(c, s33, "n=3 m=3 sampled");
      closure_intersections(c, s33, sample(cache.get(3, 3), 20, rng), "n=3 m=3 sampled");

      for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t target = 1; target <= 3; ++target) {
          closure_qfpp(c, cache.get(2, m), target, nm(2, m));
        }
      }
      closure_qfpp(c, cache.get(3, 2), 2, nm(3, 2));
      closure_qfpp(c, cache.get(3, 2), 3, nm(3, 2));

      closure_products(c, 2);
      closure_products(c, 3);
      closure_restrictions(c, cache, 2);
      closure_restrictions(c, cache, 3);

      for (std::size_t n = 2; n <= 4; ++n) {
        for (std::size_t m = 1; m <= 3; ++m) {
          closure_equivalence_clones(c, n, m);
        }
      }
    }

    // ---------------------------------------------------------------- factor-props

    bool factor_checks(FiniteRelation const& rho, EquivPartition const& psi) {
      auto const psi_rel = partition_to_relation(psi);
      auto const bs      = bin_sym(rho);
      auto const ex      = exch_relation(rho);
      auto const fac     = factor(rho, psi);
      auto const blk     = block_factor(rho, psi);
      bool const a       = psi_rel.is_subset_of(bs) == is_gquord(blk);
      bool const b       = psi_rel.is_subset_of(ex) == (is_gquord(fac) && fac == blk);
      // the exchange equivalence is the largest one with the exchange property
      bool const largest = has_exchange_property(psi, rho) == psi_rel.is_subset_of(ex);
      bool const sub     = blk.is_subset_of(fac);
      return a && b && largest && sub;
    }

    bool factor_checks_own(FiniteRelation const& rho) {
      std::size_t const m   = rho.arity();
      auto const        bsp = relation_to_partition(bin_sym(rho));
      auto const        exp = exchange_eq(rho);
      std::size_t const kb  = bsp.num_blocks();
      bool const c1 = bin_sym(block_factor(rho, bsp)) == diagonal2(kb);
      bool const c2 = abs(factor(rho, bsp)) == constant_tuples(kb, m);
      bool const c3 = exchange_eq(factor(rho, exp)).is_discrete();
      bool const ex = has_exchange_property(exp, rho) && factor(rho, exp) == block_factor(rho, exp);
      bool const sub = exch_relation(rho).is_subset_of(bin_sym(rho));
      return c1 && c2 && c3 && ex && sub;
    }

    void suite_factor(Ctx& c) {
      GquordCache cache(c.p.exec);
      Sizes const sizes{{2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};

      for (auto [n, m] : sizes) {
        auto const& gqs   = cache.get(n, m);
        auto const  parts = all_partitions(n);
        auto const  bad   = failures(
            gqs,
            [&](FiniteRelation const& rho) {
              return std::all_of(parts.begin(), parts.end(),
                                 [&](auto const& psi) { return factor_checks(rho, psi); });
            },
            c.p.exec);
        c.check("block factor / factor gquord criteria and maximality of the exchange "
                "equivalence, " + nm(n, m),
                bad.empty(), std::to_string(gqs.size() * parts.size()) + " (rho, psi) pairs",
                bad.empty() ? "" : serialize_relation(gqs[bad.front()]));

        auto const bad_own = failures(gqs, factor_checks_own, c.p.exec);
        c.check("quotients by [2] and <2> are antisymmetric resp. exchange-free, " + nm(n, m),
                bad_own.empty(), "",
                bad_own.empty() ? "" : serialize_relation(gqs[bad_own.front()]));

        auto const bad_410 = failures(
            gqs,
            [](FiniteRelation const& rho) {
              auto const lambda = relation_to_partition(bin_sym(rho)).quotient_map();
              bool const equal  = exch_relation(rho) == bin_sym(rho);
              return equal == (preimage(image(rho, lambda), lambda) == rho);
            },
            c.p.exec);
        c.check("<2> = [2] iff rho is saturated under the map onto A/[2], " + nm(n, m),
                bad_410.empty(), "",
                bad_410.empty() ? "" : serialize_relation(gqs[bad_410.front()]));

        if (m < 2) {
          continue;  // unary: tos(A) = Delta^(1) = A while [2] of A is full
        }
        FiniteRelation const diag_m = constant_tuples(n, m);
        auto const           bad_anti = failures(
            gqs,
            [&](FiniteRelation const& rho) {
              return tos(rho).is_subset_of(diag_m) == (bin_sym(rho) == diagonal2(n));
            },
            c.p.exec);
        c.check("antisymmetry (tos within the diagonal) iff [2] trivial, " + nm(n, m),
                bad_anti.empty(), "",
                bad_anti.empty() ? "" : serialize_relation(gqs[bad_anti.front()]));
      }

      for (auto [n, m] : Sizes{{2, 2}, {2, 3}, {3, 2}}) {
        auto const& gqs = cache.get(n, m);
        bool        ok43 = true, ok47 = true;
        std::string w43, w47;
        FiniteRelation const diag = diagonal2(n);
        for (auto const& r1 : gqs) {
          for (auto const& r2 : gqs) {
            auto const meet = intersect(exch_relation(r1), exch_relation(r2));
            if (ok43 && !meet.is_subset_of(exch_relation(intersect(r1, r2)))) {
              ok43 = false;
              w43  = pair_text(r1, r2);
            }
            if (ok47 && r1.is_subset_of(r2) && bin_sym(r2) == diag && bin_sym(r1) != diag) {
              ok47 = false;
              w47  = pair_text(r1, r2);
            }
          }
        }
        c.check("meet of exchange equivalences lies in that of the intersection, " + nm(n, m),
                ok43, std::to_string(gqs.size() * gqs.size()) + " pairs", w43);
        c.check("gquords below a gPord are gPords, " + nm(n, m), ok47, "", w47);
      }

      // homomorphic images along surjections 3 -> 2
      auto const maps = surjections(3, 2);
      for (std::size_t m = 1; m <= 3; ++m) {
        bool        pre_ok = true, img_ok = true;
        std::string w_pre, w_img;
        for (auto const& lambda : maps) {
          for (auto const& sigma : cache.get(2, m)) {
            auto const pre = preimage(sigma, lambda);
            if (pre_ok
                && !(is_gquord(pre) && preimage(image(pre, lambda), lambda) == pre
                     && image(pre, lambda) == sigma)) {
              pre_ok = false;
              w_pre  = serialize_relation(sigma);
            }
          }
          for (auto const& rho : cache.get(3, m)) {
            if (img_ok && preimage(image(rho, lambda), lambda) == rho
                && !is_gquord(image(rho, lambda))) {
              img_ok = false;
              w_img  = serialize_relation(rho);
            }
          }
        }
        c.check("preimages of gquords are saturated gquords, 3->2 m=" + std::to_string(m),
                pre_ok, "", w_pre);
        c.check("images of saturated gquords are gquords, 3->2 m=" + std::to_string(m), img_ok,
                "", w_img);
      }

      {
        Relations rels = filter_relations(3, 2, [](auto const&) { return true; }, c.p.exec);
        auto const& g33 = cache.get(3, 3);
        rels.insert(rels.end(), g33.begin(), g33.end());
        auto const bad = failures(
            rels,
            [&](FiniteRelation const& rho) {
              for (auto const& lambda : maps) {
                std::vector<std::size_t> labels(lambda.values().begin(), lambda.values().end());
                bool const exch = has_exchange_property(EquivPartition(labels), rho);
                if (exch != (preimage(image(rho, lambda), lambda) == rho)) {
                  return false;
                }
              }
              return true;
            },
            c.p.exec);
        c.check("kernel has the exchange property iff rho is saturated, 3->2", bad.empty(),
                std::to_string(rels.size() * maps.size()) + " cases",
                bad.empty() ? "" : serialize_relation(rels[bad.front()]));
      }

      for (std::size_t n = 2; n <= 4; ++n) {
        auto const parts = all_partitions(n);
        for (std::size_t m = 2; m <= 3; ++m) {
          auto const geqs = enumerate_geqs(n, m, c.p.exec);
          bool       ok11 = true, ok12 = true;
          std::string w11, w12;
          for (auto const& theta : geqs) {
            if (ok11 && exch_relation(theta) != bin_sym(theta)) {
              ok11 = false;
              w11  = serialize_relation(theta);
            }
            for (auto const& psi : parts) {
              auto const lhs = block_factor(theta, psi);
              auto const rhs = lift_relation(block_factor(bin_sym(theta), psi), m);
              if (ok12 && lhs != rhs) {
                ok12 = false;
                w12  = serialize_relation(theta) + serialize_partition(psi);
              }
            }
          }
          c.check("gEq: <2> = [2], " + nm(n, m), ok11, std::to_string(geqs.size()) + " gEqs",
                  w11);
          c.check("gEq: block factor is the lift of the binary block factor, " + nm(n, m), ok12,
                  "", w12);
        }
      }

      // the pinned non-monotonicity example on 4 elements
      auto const sigma = load_relation(c.p, "remark_4_5_sigma.rel");
      auto const rho   = load_relation(c.p, "remark_4_5_rho.rel");
      auto const es    = exchange_eq(sigma);
      auto const er    = exchange_eq(rho);
      c.check("pinned: sigma within rho, both gquords",
              sigma.is_subset_of(rho) && is_gquord(sigma) && is_gquord(rho));
      c.check("pinned: (0,1) in <2> of sigma but not of rho", es.related(0, 1) && !er.related(0, 1),
              "", serialize_partition(es) + serialize_partition(er));
      c.check("pinned: <2> of rho is trivial", er.is_discrete());
      c.check("pinned: [2] of rho is Delta plus (0,1),(1,0)",
              bin_sym(rho) == FiniteRelation::from_tuples(4, 2, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {1, 0}}),
              "", serialize_relation(bin_sym(rho)));
      auto const rep = classify(rho);
      c.check("pinned: rho is a wgPord but not a gPord", rep.is_wgpord && !rep.is_gpord);
    }

    // ---------------------------------------------------------------- geq-iso

    void suite_geq(Ctx& c) {
      std::size_t const nmax = c.p.n.value_or(4);
      for (std::size_t n = 1; n <= nmax; ++n) {
        auto const parts = all_partitions(n);
        for (std::size_t m = 2; m <= c.p.m.value_or(3); ++m) {
          auto const geqs = enumerate_geqs(n, m, c.p.exec);
          Relations  lifts;
          bool       inverse = true, monotone = true;
          for (auto const& psi : parts) {
            auto const up = lift_partition(psi, m);
            lifts.push_back(up);
            inverse = inverse && bin_sym(up) == partition_to_relation(psi);
          }
          for (auto const& theta : geqs) {
            inverse = inverse
                   && lift_partition(relation_to_partition(bin_sym(theta)), m) == theta;
          }
          for (std::size_t i = 0; i < parts.size(); ++i) {
            for (std::size_t j = 0; j < parts.size(); ++j) {
              bool const below = partition_to_relation(parts[i]).is_subset_of(
                  partition_to_relation(parts[j]));
              monotone = monotone && below == lifts[i].is_subset_of(lifts[j]);
            }
          }
          std::sort(lifts.begin(), lifts.end());
          c.check("lifts of equivalences are exactly the gEqs, " + nm(n, m), lifts == geqs,
                  "equivalences=" + std::to_string(parts.size())
                      + " geqs=" + std::to_string(geqs.size()),
                  first_difference(lifts, geqs));
          c.check("lift and [2] are mutually inverse, " + nm(n, m), inverse);
          c.check("lift preserves and reflects inclusion, " + nm(n, m), monotone);

          if (ipow(n, m) <= 16) {
            auto const brute = filter_relations(
                n, m, [](FiniteRelation const& r) { return is_gquord(r) && is_totally_symmetric(r); },
                c.p.exec);
            c.check("gEq enumeration agrees with brute force, " + nm(n, m), brute == geqs,
                    "", first_difference(brute, geqs));
          }

          auto const bad = failures(
              geqs,
              [&](FiniteRelation const& theta) {
                auto const bs = bin_sym(theta);
                bool pairs    = true;
                Tuple t(m);
                theta.for_each_code([&](std::size_t code) {
                  decode_tuple(code, n, t);
                  for (std::size_t i = 0; i < m; ++i) {
                    for (std::size_t j = 0; j < m; ++j) {
                      pairs = pairs && bs.contains(t[i] * n + t[j]);
                    }
                  }
                });
                return pairs && lift_relation(bs, m) == theta && abs(theta) == theta;
              },
              c.p.exec);
          c.check("gEq members have all pairs in [2]; theta = lift([2]) = abs(theta), " + nm(n, m),
                  bad.empty(), "", bad.empty() ? "" : serialize_relation(geqs[bad.front()]));
        }
      }
      {
        auto const single = enumerate_geqs(4, 1, c.p.exec);
        c.check("unary: the only gEq is A", single.size() == 1 && single.front() == FiniteRelation::full(4, 1));
      }

      GquordCache cache(c.p.exec);
      for (auto [n, m] : Sizes{{2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
        auto const& gqs = cache.get(n, m);
        auto const  bad = failures(
            gqs,
            [](FiniteRelation const& rho) {
              auto const a = abs(rho);
              return is_gquord(a) && is_totally_symmetric(a) && tos(rho) == a;
            },
            c.p.exec);
        c.check("abs of a gquord is a gEq and equals tos, " + nm(n, m), bad.empty(), "",
                bad.empty() ? "" : serialize_relation(gqs[bad.front()]));
      }

      for (auto [n, m] : Sizes{{2, 2}, {2, 3}, {3, 2}}) {
        auto const all = filter_relations(n, m, [](auto const&) { return true; }, c.p.exec);
        auto const bad = filter_indices(
            all.size(),
            [&](std::size_t i) {
              for (auto const& r : all) {
                auto const meet = intersect(all[i], r);
                if (tos(meet) != intersect(tos(all[i]), tos(r))
                    || abs(meet) != intersect(abs(all[i]), abs(r))
                    || bin_sym(meet) != intersect(bin_sym(all[i]), bin_sym(r))
                    || (all[i].is_subset_of(r) && !bin_sym(all[i]).is_subset_of(bin_sym(r)))) {
                  return true;
                }
              }
              return false;
            },
            c.p.exec);
        c.check("tos, abs and [2] commute with intersection; [2] is monotone, " + nm(n, m),
                bad.empty(), std::to_string(all.size() * all.size()) + " pairs",
                bad.empty() ? "" : serialize_relation(all[bad.front()]));

        auto const reflexive = filter_relations(n, m, is_reflexive, c.p.exec);
        auto const bad_abs   = failures(
            reflexive,
            [&](FiniteRelation const& r) { return abs(r) == lift_relation(bin_sym(r), m); },
            c.p.exec);
        c.check("abs(rho) = lift([2] of rho) for reflexive rho, " + nm(n, m), bad_abs.empty(),
                std::to_string(reflexive.size()) + " relations",
                bad_abs.empty() ? "" : serialize_relation(reflexive[bad_abs.front()]));
      }

      for (auto [n, m] : Sizes{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
        auto const tols = tolerances(n, m);
        auto const bad  = failures(
            tols,
            [](FiniteRelation const& r) {
              auto const t = transitive_closure(r);
              return is_gquord(t) && is_totally_symmetric(t);
            },
            c.p.exec);
        c.check("transitive closure of a generalized tolerance is a gEq, " + nm(n, m),
                bad.empty(), std::to_string(tols.size()) + " tolerances",
                bad.empty() ? "" : serialize_relation(tols[bad.front()]));
      }

      for (std::size_t n = 2; n <= 3; ++n) {
        OperationSet ops;
        std::size_t const k = n == 2 ? 2 : 1;
        for (std::size_t t = 0; t < ipow(n, ipow(n, k)); ++t) {
          std::vector<Element> table(ipow(n, k));
          decode_tuple(t, n, table);
          ops.emplace_back(n, k, std::move(table));
        }
        bool        ok = true;
        std::string w;
        for (auto const& psi : all_partitions(n)) {
          auto const rel = partition_to_relation(psi);
          for (std::size_t m = 2; m <= 3; ++m) {
            auto const up = lift_partition(psi, m);
            for (auto const& f : ops) {
              if (ok && preserves(f, rel).holds != preserves(f, up).holds) {
                ok = false;
                w  = serialize_partition(psi) + serialize_operation(f);
              }
            }
          }
        }
        c.check("an operation preserves psi iff it preserves its lifts, n=" + std::to_string(n)
                    + " k=" + std::to_string(k),
                ok, std::to_string(ops.size()) + " operations", w);
      }
    }

    // ---------------------------------------------------------------- rectangular

    OperationSet all_operations(std::size_t n, std::size_t k) {
      std::size_t const cells = ipow(n, k);
      OperationSet      out;
      std::vector<Element> table(cells);
      for (std::size_t t = 0; t < ipow(n, cells); ++t) {
        decode_tuple(t, n, table);
        out.emplace_back(n, k, table);
      }
      return out;
    }

    void rect_sweep(Ctx& c, std::size_t n, std::size_t k) {
      auto const ops = all_operations(n, k);
      std::vector<RectangularReport> reps(ops.size());
      auto const literal = filter_indices(
          ops.size(),
          [&](std::size_t i) {
            reps[i] = rectangular_theorem_check(ops[i]);
            return !reps[i].equivalence_ok;
          },
          c.p.exec);
      std::size_t entropic = 0, absorptive = 0, graph_gq = 0, rect = 0;
      std::vector<std::size_t> bad_tr, bad_gq, bad_po;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        auto const& r = reps[i];
        entropic += r.entropic;
        absorptive += r.entropic && r.absorptive;
        graph_gq += r.entropic && r.graph_gquord;
        rect += r.entropic && r.idempotent && r.absorptive;
        if (!r.transitive_ok) {
          bad_tr.push_back(i);
        }
        if (!r.gquord_ok) {
          bad_gq.push_back(i);
        }
        if (!r.gpord_implied_ok) {
          bad_po.push_back(i);
        }
      }
      std::string const tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      std::string const counts = std::to_string(ops.size()) + " operations, "
                               + std::to_string(entropic) + " entropic, "
                               + std::to_string(absorptive) + " entropic with AB, "
                               + std::to_string(graph_gq) + " with gquord graph, "
                               + std::to_string(rect) + " rectangular";
      auto first = [&](std::vector<std::size_t> const& bad) {
        return bad.empty() ? std::string{} : serialize_operation(ops[bad.front()]);
      };
      c.check("entropic f: AB holds iff graph is a gquord, " + tag, literal.empty(),
              counts + ", " + std::to_string(literal.size()) + " counterexamples", first(literal));
      c.check("entropic f: AB holds iff graph is transitive, " + tag, bad_tr.empty(), "",
              first(bad_tr));
      c.check("entropic f: AB and ID hold iff graph is a gquord, " + tag, bad_gq.empty(), "",
              first(bad_gq));
      c.check("rectangular f: graph is a gPord, " + tag, bad_po.empty(), "", first(bad_po));
    }

    // Binary and ternary term operations of (A, f) for binary f.
    OperationSet term_operations(FiniteOperation const& f, std::size_t k) {
      std::size_t const n = f.universe_size();
      std::set<FiniteOperation> terms;
      for (std::size_t i = 0; i < k; ++i) {
        terms.insert(FiniteOperation::projection(n, k, i));
      }
      for (bool grew = true; grew;) {
        grew = false;
        std::vector<FiniteOperation> const cur(terms.begin(), terms.end());
        for (auto const& g : cur) {
          for (auto const& h : cur) {
            std::vector<Element> table(ipow(n, k));
            for (std::size_t code = 0; code < table.size(); ++code) {
              table[code] = f({g.at(code), h.at(code)});
            }
            grew = terms.emplace(n, k, std::move(table)).second || grew;
          }
        }
      }
      return {terms.begin(), terms.end()};
    }

    void suite_rectangular(Ctx& c) {
      rect_sweep(c, 2, 2);
      rect_sweep(c, 3, 2);
      rect_sweep(c, 2, 3);

      auto const band   = rect_band(2);
      auto const stored = parse_operation(read_file(corpus_file(c.p, "rect_band_2.op")));
      c.check("rectangular band on 2x2 matches the corpus table", band == stored);
      auto const rep = rectangular_theorem_check(band);
      c.check("band is entropic, idempotent and satisfies AB",
              rep.entropic && rep.idempotent && rep.absorptive);
      auto const graph = graph_of(band);
      c.check("band graph has 16 tuples and is a gPord", graph.size() == 16 && rep.graph_gpord,
              "size=" + std::to_string(graph.size()));

      for (std::size_t k = 2; k <= 3; ++k) {
        auto const terms = term_operations(band, k);
        auto const bad   = failures(
            terms,
            [](FiniteOperation const& t) {
              auto const g = graph_of(t);
              return is_gquord(g) && bin_sym(g) == constant_tuples(t.universe_size(), 2);
            },
            c.p.exec);
        c.check("graphs of all " + std::to_string(k) + "-ary term operations of the band are gPords",
                bad.empty(), std::to_string(terms.size()) + " term operations",
                bad.empty() ? "" : serialize_operation(terms[bad.front()]));
      }

      auto const meet = check_identity(op_and(), Identity::AB);
      c.check("min on {0,1} fails AB and its graph is not a gquord",
              !meet.holds && !is_gquord(graph_of(op_and())));
    }

    // ---------------------------------------------------------------- xi

    std::vector<std::size_t> sorted_tables(OperationSet ops) {
      std::sort(ops.begin(), ops.end());
      std::vector<std::size_t> out;
      for (auto const& f : ops) {
        out.push_back(encode_tuple(f.table(), f.universe_size()));
      }
      return out;
    }

    void suite_xi(Ctx& c) {
      OperationSet ops;
      for (std::size_t k = 1; k <= 3; ++k) {
        auto const part = all_operations(2, k);
        ops.insert(ops.end(), part.begin(), part.end());
      }
      GquordCache cache(c.p.exec);
      for (std::size_t m = 1; m <= 3; ++m) {
        auto const& gqs = cache.get(2, m);
        auto const  bad = failures(
            gqs,
            [&](FiniteRelation const& rho) {
              return std::all_of(ops.begin(), ops.end(),
                                 [&](auto const& f) { return xi_holds(f, rho); });
            },
            c.p.exec);
        c.check("f preserves a gquord iff all its translations do, n=2 m=" + std::to_string(m),
                bad.empty(), std::to_string(gqs.size() * ops.size()) + " (rho, f) pairs",
                bad.empty() ? "" : serialize_relation(gqs[bad.front()]));
      }

      {
        std::string found;
        for (std::size_t m = 1; m <= 3 && found.empty(); ++m) {
          auto const cands = filter_relations(
              2, m, [](FiniteRelation const& r) { return is_reflexive(r) && !is_gquord(r); },
              c.p.exec);
          for (auto const& rho : cands) {
            for (auto const& f : ops) {
              if (!xi_holds(f, rho)) {
                found = serialize_relation(rho) + serialize_operation(f);
                break;
              }
            }
            if (!found.empty()) {
              break;
            }
          }
        }
        c.check("some reflexive non-gquord on {0,1} violates the translation property",
                !found.empty(), "");
        if (!found.empty()) {
          c.rep.checks.back().witness = found;
          c.rep.checks.back().show    = true;
        }
      }

      for (std::size_t n = 2; n <= 3; ++n) {
        auto const all = filter_relations(n, 2, [](auto const&) { return true; }, c.p.exec);
        auto const bad = failures(
            all,
            [&](FiniteRelation const& rho) {
              return sorted_tables(pol_bounded(n, {rho}, 1, 1u << 24, Exec::serial))
                  == sorted_tables(end_monoid(n, {rho}));
            },
            c.p.exec);
        c.check("unary polymorphisms equal endomorphisms, binary relations n=" + std::to_string(n),
                bad.empty(), std::to_string(all.size()) + " relations",
                bad.empty() ? "" : serialize_relation(all[bad.front()]));
      }

      {
        auto const le3    = chain(3);
        auto const serial = pol_bounded(3, {le3}, 2, 1u << 24, Exec::serial);
        auto const par    = pol_bounded(3, {le3}, 2, 1u << 24, Exec::parallel);
        c.check("serial and parallel binary polymorphism search agree on the 3-chain",
                sorted_tables(serial) == sorted_tables(par),
                std::to_string(serial.size()) + " polymorphisms");
      }

      auto const le2 = chain(2);
      auto       end = end_monoid(2, {le2});
      std::sort(end.begin(), end.end());
      OperationSet expect{FiniteOperation::constant(2, 0), FiniteOperation::identity(2),
                          FiniteOperation::constant(2, 1)};
      std::sort(expect.begin(), expect.end());
      c.check("End of the 2-chain is {c0, id, c1}", end == expect,
              std::to_string(end.size()) + " endomorphisms");
      auto const pol2 = pol_bounded(2, {le2}, 2);
      c.check("the 2-chain has 6 binary polymorphisms", pol2.size() == 6,
              std::to_string(pol2.size()) + " polymorphisms");
    }

    // ---------------------------------------------------------------- lattice-pp

    void lattice_case(Ctx& c, std::string const& label, FiniteRelation const& order) {
      auto const lat = lattice_ops_from_order(order);
      c.check(label + " is a lattice order", lat.ops.has_value());
      std::size_t const top = c.p.m.value_or(4);
      for (std::size_t m = c.p.m ? top : 2; m <= top; ++m) {
        auto const sweep = pp_sweep(order, m, c.p.max_atoms, c.p.exec);
        c.check(label + ": every pp output lies in the qf-pp closure, m=" + std::to_string(m),
                sweep.outside_closure.empty(),
                std::to_string(sweep.formulas) + " formulas, "
                    + std::to_string(sweep.outputs.size()) + " outputs",
                sweep.outside_closure.empty() ? ""
                                              : serialize_relation(sweep.outside_closure.front()));
        bool const small = m == 2 || (m == 3 && order.universe_size() <= 3);
        if (small) {
          auto const closure = qfpp_closure(order.universe_size(), {order}, m);
          bool       agree   = true;
          for (auto const& out : sweep.outputs) {
            agree = agree && std::binary_search(closure.begin(), closure.end(), out);
          }
          c.check(label + ": hull test agrees with the explicit closure, m=" + std::to_string(m),
                  agree, std::to_string(closure.size()) + " closure members");
        }
      }
    }

    void suite_lattice(Ctx& c) {
      lattice_case(c, "chain2", chain(2));
      lattice_case(c, "chain3", chain(3));
      lattice_case(c, "chain4", chain(4));
      lattice_case(c, "diamond", direct_product(chain(2), chain(2)));

      for (std::size_t n = 2; n <= 3; ++n) {
        for (auto const& psi : all_partitions(n)) {
          auto const rel = partition_to_relation(psi);
          for (std::size_t m = 2; m <= 3; ++m) {
            auto const sweep = pp_sweep(rel, m, std::min<std::size_t>(c.p.max_atoms, 4), c.p.exec);
            bool const gq    = std::all_of(sweep.outputs.begin(), sweep.outputs.end(),
                                           [](auto const& r) { return is_gquord(r); });
            c.check("equivalence n=" + std::to_string(n)
                        + " blocks=" + std::to_string(psi.num_blocks()) + " m=" + std::to_string(m)
                        + ": pp outputs are gquords in the qf-pp closure",
                    gq && sweep.outside_closure.empty(),
                    std::to_string(sweep.outputs.size()) + " outputs");
          }
        }
      }

      auto const order = load_relation(c.p, "ex_5_3_order.rel");
      auto const sigma = load_relation(c.p, "ex_5_3_sigma.rel");
      auto const sweep = pp_sweep(order, 4, c.p.max_atoms, c.p.exec);
      bool const found = std::binary_search(sweep.outputs.begin(), sweep.outputs.end(), sigma);
      c.check("non-lattice poset: sigma is a pp output and not a gquord",
              found && !is_gquord(sigma),
              std::to_string(sweep.outputs.size()) + " outputs, "
                  + std::to_string(sweep.outside_closure.size()) + " outside the closure");
    }

    // ---------------------------------------------------------------- conjecture-search

    void suite_conjecture(Ctx& c) {
      auto const        order = load_relation(c.p, "ex_5_3_order.rel");
      std::size_t const lo    = c.p.m.value_or(2);
      std::size_t const hi    = c.p.m.value_or(4);
      for (std::size_t m = lo; m <= hi; ++m) {
        auto const rep = conjecture_search(order, m, c.p.max_atoms, c.p.exec);
        std::string text;
        for (auto const& cand : rep.candidates) {
          text += serialize_relation(cand);
        }
        c.check("search m=" + std::to_string(m), true,
                "formulas=" + std::to_string(rep.formulas) + " outputs="
                    + std::to_string(rep.outputs) + " gquords=" + std::to_string(rep.gquord_outputs)
                    + " non_gpord_gquords=" + std::to_string(rep.non_gpord_gquords)
                    + " candidates=" + std::to_string(rep.candidates.size()));
        if (!text.empty()) {
          c.rep.checks.back().witness = text;
          c.rep.checks.back().show    = true;
        }
      }
    }

    struct SuiteEntry {
      char const* name;
      void (*run)(Ctx&);
    };

    SuiteEntry const suites[] = {
        {"boolean-thm", suite_boolean},     {"example-5-3", suite_example},
        {"decomposition", suite_decomposition}, {"closure-props", suite_closure},
        {"factor-props", suite_factor},     {"geq-iso", suite_geq},
        {"rectangular", suite_rectangular}, {"xi", suite_xi},
        {"conjecture-search", suite_conjecture}, {"lattice-pp", suite_lattice},
    };

  }  // namespace

  std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (auto const& s : suites) {
      out.emplace_back(s.name);
    }
    return out;
  }

  SuiteReport run_suite(std::string const& name, SuiteParams const& params) {
    for (auto const& s : suites) {
      if (name == s.name) {
        SuiteReport rep;
        rep.suite = name;
        Ctx ctx{rep, params};
        s.run(ctx);
        return rep;
      }
    }
    throw Error("unknown suite \"" + name + "\"");
  }

  std::string format_suite_report(SuiteReport const& report) {
    std::ostringstream out;
    out << "suite=" << report.suite << '\n';
    std::size_t index = 0;
    for (auto const& c : report.checks) {
      out << "check." << ++index << '=' << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.info.empty()) {
        out << " (" << c.info << ')';
      }
      out << '\n';
      if ((!c.pass || c.show) && !c.witness.empty()) {
        std::istringstream lines(c.witness);
        for (std::string line; std::getline(lines, line);) {
          out << "  " << line << '\n';
        }
      }
    }
    out << "RESULT=" << (report.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
  }

}  // namespace gq
