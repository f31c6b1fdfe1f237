#include "gq/experiments.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "gq/analysis.hpp"
#include "gq/construct.hpp"
#include "gq/sweep.hpp"

namespace gq {

  namespace {
    std::vector<std::pair<std::size_t, std::size_t>> family_pairs(std::size_t m) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t u = 0; u <= m; ++u) {
        for (std::size_t v = 0; v <= m; ++v) {
          if (u != v) {
            pairs.emplace_back(u, v);
          }
        }
      }
      return pairs;
    }

    // All masks over `bits` positions with at most `k` bits set, ordered by
    // size and then lexicographically.
    std::vector<std::uint64_t> small_subsets(std::size_t bits, std::size_t k) {
      std::vector<std::uint64_t> out;
      auto rec = [&](auto&& self, std::size_t start, std::size_t left, std::uint64_t mask) -> void {
        if (left == 0) {
          out.push_back(mask);
          return;
        }
        for (std::size_t b = start; b < bits; ++b) {
          self(self, b + 1, left - 1, mask | (std::uint64_t{1} << b));
        }
      };
      for (std::size_t size = 0; size <= std::min(k, bits); ++size) {
        rec(rec, 0, size, 0);
      }
      return out;
    }
  }  // namespace

  PpFormula pp_family_formula(std::size_t m, std::uint64_t mask, std::string const& relname) {
    PpFormula phi;
    phi.free_count  = m;
    phi.bound_count = 1;
    auto const pairs = family_pairs(m);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1) {
        phi.atoms.push_back({relname, IndexMap(m + 1, {pairs[b].first, pairs[b].second})});
      }
    }
    return phi;
  }

  PpSweep pp_sweep(FiniteRelation const& rho, std::size_t m, std::size_t max_atoms, Exec exec) {
    if (rho.arity() != 2) {
      throw ArityError("pp sweeps need a binary relation");
    }
    std::size_t const n     = rho.universe_size();
    auto const        pairs = family_pairs(m);
    if (pairs.size() > 63) {
      throw ResourceError("too many atoms in the formula family");
    }
    std::vector<FiniteRelation> cyl;
    for (auto const& [u, v] : pairs) {
      cyl.push_back(cylinder(rho, IndexMap(m + 1, {u, v})));
    }
    auto const masks = small_subsets(pairs.size(), max_atoms);

    auto eval = [&](std::uint64_t mask) {
      FiniteRelation body = FiniteRelation::full(n, m + 1);
      for (std::size_t b = 0; b < cyl.size(); ++b) {
        if (mask >> b & 1) {
          body &= cyl[b];
        }
      }
      FiniteRelation out(n, m);
      body.for_each_code([&](std::size_t code) { out.insert(code / n); });
      return out;
    };

    std::size_t const                        chunk  = 256;
    std::size_t const                        chunks = (masks.size() + chunk - 1) / chunk;
    std::vector<std::vector<FiniteRelation>> parts(chunks);
    auto run_chunk = [&](std::size_t c) {
      std::unordered_set<FiniteRelation> local;
      std::size_t const                  end = std::min(masks.size(), (c + 1) * chunk);
      for (std::size_t i = c * chunk; i < end; ++i) {
        local.insert(eval(masks[i]));
      }
      parts[c].assign(local.begin(), local.end());
    };
    if (exec == Exec::serial) {
      for (std::size_t c = 0; c < chunks; ++c) {
        run_chunk(c);
      }
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::size_t c = 0; c < chunks; ++c) {
        run_chunk(c);
      }
    }

    std::unordered_set<FiniteRelation> all;
    for (auto& p : parts) {
      for (auto& r : p) {
        all.insert(std::move(r));
      }
    }
    PpSweep res;
    res.formulas = masks.size();
    res.outputs.assign(all.begin(), all.end());
    std::sort(res.outputs.begin(), res.outputs.end());

    auto const atoms = qfpp_atoms(n, {rho}, m);
    for (auto const& out : res.outputs) {
      if (qfpp_hull(out, atoms) != out) {
        res.outside_closure.push_back(out);
      }
    }
    return res;
  }

  ConjectureReport conjecture_search(FiniteRelation const& rho,
                                     std::size_t           m,
                                     std::size_t           max_atoms,
                                     Exec                  exec) {
    PpSweep const    sweep = pp_sweep(rho, m, max_atoms, exec);
    ConjectureReport rep;
    rep.arity    = m;
    rep.formulas = sweep.formulas;
    rep.outputs  = sweep.outputs.size();

    auto const gq_idx = filter_indices(
        sweep.outputs.size(), [&](std::size_t i) { return is_gquord(sweep.outputs[i]); },
        exec);
    rep.gquord_outputs = gq_idx.size();

    std::size_t const    n    = rho.universe_size();
    FiniteRelation const full = FiniteRelation::full(n, m);
    FiniteRelation const diag = constant_tuples(n, 2);
    for (auto i : gq_idx) {
      auto const& out = sweep.outputs[i];
      if (out != full && bin_sym(out) != diag) {
        ++rep.non_gpord_gquords;
      }
      if (std::binary_search(sweep.outside_closure.begin(), sweep.outside_closure.end(), out)) {
        rep.candidates.push_back(out);
      }
    }
    return rep;
  }

}  // namespace gq
