#include "gq/sweep.hpp"

#include <algorithm>
#include <unordered_set>

#include "gq/analysis.hpp"

namespace gq {

  std::vector<std::size_t> filter_indices(std::size_t                             total,
                                          std::function<bool(std::size_t)> const& pred,
                                          Exec                                    exec) {
    std::vector<std::size_t> out;
    if (exec == Exec::serial) {
      for (std::size_t i = 0; i < total; ++i) {
        if (pred(i)) {
          out.push_back(i);
        }
      }
      return out;
    }
    // Fixed chunks merged in chunk order keep the result independent of
    // the schedule.
    std::size_t const                     chunk  = 1024;
    std::size_t const                     chunks = (total + chunk - 1) / chunk;
    std::vector<std::vector<std::size_t>> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t c = 0; c < chunks; ++c) {
      std::size_t const end = std::min(total, (c + 1) * chunk);
      for (std::size_t i = c * chunk; i < end; ++i) {
        if (pred(i)) {
          parts[c].push_back(i);
        }
      }
    }
    for (auto const& p : parts) {
      out.insert(out.end(), p.begin(), p.end());
    }
    return out;
  }

  std::vector<FiniteRelation>
  filter_relations(std::size_t                                       n,
                   std::size_t                                       m,
                   std::function<bool(FiniteRelation const&)> const& pred,
                   Exec                                              exec,
                   std::size_t                                       max_bits) {
    std::size_t const points = checked_points(n, m);
    if (points > max_bits || points >= 64) {
      throw ResourceError("brute force over 2^" + std::to_string(points)
                          + " relations exceeds the limit of 2^"
                          + std::to_string(std::min<std::size_t>(max_bits, 63)));
    }
    auto const hits = filter_indices(
        std::size_t{1} << points,
        [&](std::size_t mask) { return pred(FiniteRelation::from_mask(n, m, mask)); },
        exec);
    std::vector<FiniteRelation> out;
    out.reserve(hits.size());
    for (auto mask : hits) {
      out.push_back(FiniteRelation::from_mask(n, m, mask));
    }
    return out;
  }

  std::vector<FiniteRelation> enumerate_closed(FiniteRelation const& seed,
                                               ClosureOp const&      close,
                                               Exec                  exec,
                                               std::size_t           limit) {
    std::unordered_set<FiniteRelation> seen;
    std::vector<FiniteRelation>        frontier{close(seed)};
    seen.insert(frontier.front());

    while (!frontier.empty()) {
      std::vector<std::vector<FiniteRelation>> grown(frontier.size());
      auto expand = [&](std::size_t i) {
        FiniteRelation const& base = frontier[i];
        for (std::size_t code = 0; code < base.points(); ++code) {
          if (!base.contains(code)) {
            FiniteRelation next = base;
            next.insert(code);
            grown[i].push_back(close(next));
          }
        }
      };
      if (exec == Exec::serial) {
        for (std::size_t i = 0; i < frontier.size(); ++i) {
          expand(i);
        }
      } else {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t i = 0; i < frontier.size(); ++i) {
          expand(i);
        }
      }
      std::vector<FiniteRelation> next;
      for (auto& batch : grown) {
        for (auto& rho : batch) {
          if (seen.insert(rho).second) {
            if (seen.size() > limit) {
              throw ResourceError("more than " + std::to_string(limit)
                                  + " closed relations");
            }
            next.push_back(std::move(rho));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<FiniteRelation> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<FiniteRelation> enumerate_gquords(std::size_t n, std::size_t m, Exec exec) {
    static_cast<void>(checked_points(n, m));
    return enumerate_closed(constant_tuples(n, m), transitive_closure, exec);
  }

  FiniteRelation geq_closure(FiniteRelation const& rho) {
    std::size_t const n   = rho.universe_size();
    FiniteRelation    sym = rho;
    sym |= constant_tuples(n, rho.arity());
    Tuple t(rho.arity());
    rho.for_each_code([&](std::size_t code) {
      decode_tuple(code, n, t);
      std::sort(t.begin(), t.end());
      do {
        sym.insert(encode_tuple(t, n));
      } while (std::next_permutation(t.begin(), t.end()));
    });
    return transitive_closure(sym);
  }

  std::vector<FiniteRelation> enumerate_geqs(std::size_t n, std::size_t m, Exec exec) {
    static_cast<void>(checked_points(n, m));
    return enumerate_closed(constant_tuples(n, m), geq_closure, exec);
  }

  Kind parse_kind(std::string const& name) {
    if (name == "gquord") return Kind::gquord;
    if (name == "geq") return Kind::geq;
    if (name == "gpord") return Kind::gpord;
    if (name == "wgpord") return Kind::wgpord;
    if (name == "equivalences") return Kind::equivalences;
    if (name == "preorders") return Kind::preorders;
    throw Error("unknown kind \"" + name
                + "\" (expected gquord, geq, gpord, wgpord, equivalences or preorders)");
  }

  std::string kind_name(Kind kind) {
    switch (kind) {
      case Kind::gquord: return "gquord";
      case Kind::geq: return "geq";
      case Kind::gpord: return "gpord";
      case Kind::wgpord: return "wgpord";
      case Kind::equivalences: return "equivalences";
      case Kind::preorders: return "preorders";
    }
    return "?";
  }

  std::vector<FiniteRelation> enumerate_kind(Kind kind, std::size_t n, std::size_t m, Exec exec) {
    switch (kind) {
      case Kind::gquord: return enumerate_gquords(n, m, exec);
      case Kind::preorders: return enumerate_gquords(n, 2, exec);
      case Kind::geq: return enumerate_geqs(n, m, exec);
      case Kind::equivalences: return enumerate_geqs(n, 2, exec);
      case Kind::gpord:
      case Kind::wgpord: break;
    }
    auto const           all  = enumerate_gquords(n, m, exec);
    FiniteRelation const diag = constant_tuples(n, 2);
    std::vector<FiniteRelation> out;
    for (auto const& rho : all) {
      bool const keep = kind == Kind::gpord ? bin_sym(rho) == diag
                                            : exchange_eq(rho).is_discrete();
      if (keep) {
        out.push_back(rho);
      }
    }
    return out;
  }

}  // namespace gq
