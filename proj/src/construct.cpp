#include "gq/construct.hpp"

#include <algorithm>

#include "gq/analysis.hpp"
#include "gq/io.hpp"

namespace gq {

  FiniteRelation permute(FiniteRelation const& rho, IndexMap const& pi) {
    if (!pi.is_bijection() || pi.target_arity() != rho.arity()) {
      throw ArityError("permute needs a bijection on the "
                       + std::to_string(rho.arity()) + " coordinates");
    }
    return apply_index_map(rho, pi);
  }

  FiniteRelation cylinder(FiniteRelation const& sigma, IndexMap const& alpha) {
    if (alpha.source_arity() != sigma.arity()) {
      throw ArityError("atom lists " + std::to_string(alpha.source_arity())
                       + " variables for a relation of arity "
                       + std::to_string(sigma.arity()));
    }
    std::size_t const n = sigma.universe_size();
    std::size_t const m = alpha.target_arity();
    FiniteRelation    out(n, m);
    Tuple             t(m);
    Tuple             u(sigma.arity());
    for (std::size_t code = 0; code < out.points(); ++code) {
      decode_tuple(code, n, t);
      for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = t[alpha[i]];
      }
      if (sigma.contains(encode_tuple(u, n))) {
        out.insert(code);
      }
    }
    return out;
  }

  FiniteRelation add_fictitious(FiniteRelation const& rho) {
    std::size_t const n = rho.universe_size();
    FiniteRelation    out(n, rho.arity() + 1);
    rho.for_each_code([&](std::size_t code) {
      for (std::size_t x = 0; x < n; ++x) {
        out.insert(code * n + x);
      }
    });
    return out;
  }

  FiniteRelation identify_first_two(FiniteRelation const& rho) {
    std::size_t const m = rho.arity();
    if (m < 2) {
      throw ArityError("identification of coordinates needs arity >= 2");
    }
    std::vector<std::size_t> map(m);
    map[0] = 0;
    for (std::size_t i = 1; i < m; ++i) {
      map[i] = i - 1;
    }
    // (a_1, ..., a_{m-1}) is kept iff (a_1, a_1, a_2, ...) is in rho.
    return cylinder(rho, IndexMap(m - 1, std::move(map)));
  }

  FiniteRelation direct_product(FiniteRelation const& rho1,
                                FiniteRelation const& rho2) {
    if (rho1.arity() != rho2.arity()) {
      throw ArityError("direct product needs equal arities");
    }
    std::size_t const m  = rho1.arity();
    std::size_t const n1 = rho1.universe_size();
    std::size_t const n2 = rho2.universe_size();
    FiniteRelation    out(n1 * n2, m);
    Tuple             a(m), b(m), c(m);
    rho1.for_each_code([&](std::size_t code1) {
      decode_tuple(code1, n1, a);
      rho2.for_each_code([&](std::size_t code2) {
        decode_tuple(code2, n2, b);
        for (std::size_t i = 0; i < m; ++i) {
          c[i] = static_cast<Element>(a[i] * n2 + b[i]);
        }
        out.insert(encode_tuple(c, n1 * n2));
      });
    });
    return out;
  }

  FiniteRelation restrict(FiniteRelation const& rho, std::vector<Element> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.empty()) {
      throw RangeError("restriction to the empty set");
    }
    if (subset.back() >= rho.universe_size()) {
      throw RangeError("subset element " + std::to_string(subset.back())
                       + " outside the universe");
    }
    std::size_t const k = subset.size();
    std::size_t const m = rho.arity();
    FiniteRelation    out(k, m);
    Tuple             t(m), u(m);
    for (std::size_t code = 0; code < out.points(); ++code) {
      decode_tuple(code, k, t);
      for (std::size_t i = 0; i < m; ++i) {
        u[i] = subset[t[i]];
      }
      if (rho.contains(encode_tuple(u, rho.universe_size()))) {
        out.insert(code);
      }
    }
    return out;
  }

  FiniteRelation image(FiniteRelation const& rho, SurjectiveMap const& lambda) {
    if (lambda.source_size() != rho.universe_size()) {
      throw ArityError("map source size differs from the universe");
    }
    std::size_t const m = rho.arity();
    FiniteRelation    out(lambda.target_size(), m);
    Tuple             t(m);
    rho.for_each_code([&](std::size_t code) {
      decode_tuple(code, rho.universe_size(), t);
      for (auto& x : t) {
        x = lambda(x);
      }
      out.insert(encode_tuple(t, lambda.target_size()));
    });
    return out;
  }

  FiniteRelation preimage(FiniteRelation const& sigma,
                          SurjectiveMap const&  lambda) {
    if (lambda.target_size() != sigma.universe_size()) {
      throw ArityError("map target size differs from the universe");
    }
    std::size_t const n = lambda.source_size();
    std::size_t const m = sigma.arity();
    FiniteRelation    out(n, m);
    Tuple             t(m);
    for (std::size_t code = 0; code < out.points(); ++code) {
      decode_tuple(code, n, t);
      for (auto& x : t) {
        x = lambda(x);
      }
      if (sigma.contains(encode_tuple(t, sigma.universe_size()))) {
        out.insert(code);
      }
    }
    return out;
  }

  namespace {
    void require_same_universe(EquivPartition const& psi,
                               FiniteRelation const& rho) {
      if (psi.universe_size() != rho.universe_size()) {
        throw ArityError("partition and relation live on different universes");
      }
    }

    // For every block tuple, how many members of rho it contains.
    std::vector<std::size_t> block_counts(FiniteRelation const& rho,
                                          EquivPartition const& psi) {
      std::size_t const        k = psi.num_blocks();
      std::size_t const        m = rho.arity();
      std::vector<std::size_t> counts(ipow(k, m), 0);
      Tuple                    t(m);
      rho.for_each_code([&](std::size_t code) {
        decode_tuple(code, rho.universe_size(), t);
        std::size_t q = 0;
        for (auto x : t) {
          q = q * k + psi.block_index(x);
        }
        ++counts[q];
      });
      return counts;
    }

    std::size_t box_size(std::size_t q, EquivPartition const& psi, std::size_t m) {
      std::size_t const k    = psi.num_blocks();
      std::size_t       size = 1;
      for (std::size_t i = 0; i < m; ++i) {
        size *= psi.blocks()[q % k].size();
        q /= k;
      }
      return size;
    }
  }  // namespace

  bool has_exchange_property(EquivPartition const& psi,
                             FiniteRelation const& rho) {
    require_same_universe(psi, rho);
    auto const counts = block_counts(rho, psi);
    for (std::size_t q = 0; q < counts.size(); ++q) {
      if (counts[q] != 0 && counts[q] != box_size(q, psi, rho.arity())) {
        return false;
      }
    }
    return true;
  }

  FiniteRelation factor(FiniteRelation const& rho, EquivPartition const& psi) {
    require_same_universe(psi, rho);
    auto const     counts = block_counts(rho, psi);
    FiniteRelation out(psi.num_blocks(), rho.arity());
    for (std::size_t q = 0; q < counts.size(); ++q) {
      if (counts[q] != 0) {
        out.insert(q);
      }
    }
    return out;
  }

  FiniteRelation block_factor(FiniteRelation const& rho,
                              EquivPartition const& psi) {
    require_same_universe(psi, rho);
    auto const     counts = block_counts(rho, psi);
    FiniteRelation out(psi.num_blocks(), rho.arity());
    for (std::size_t q = 0; q < counts.size(); ++q) {
      if (counts[q] != 0 && counts[q] == box_size(q, psi, rho.arity())) {
        out.insert(q);
      }
    }
    return out;
  }

  Decomposition decompose(FiniteRelation const& rho) {
    if (auto a = reflexivity_witness(rho)) {
      throw ClassificationError("decompose needs a gQuord: not reflexive at "
                                + std::to_string(*a));
    }
    auto trans = check_transitive(rho);
    if (!trans.holds) {
      throw ClassificationError(
          "decompose needs a gQuord: not transitive, witness\n"
          + serialize_matrix(*trans.witness));
    }
    EquivPartition sigma = exchange_eq(rho);
    FiniteRelation tau   = factor(rho, sigma);
    return {std::move(sigma), std::move(tau)};
  }

  FiniteRelation recompose(EquivPartition const& sigma,
                           FiniteRelation const& tau) {
    if (tau.universe_size() != sigma.num_blocks()) {
      throw ArityError("quotient relation has universe size "
                       + std::to_string(tau.universe_size()) + ", partition has "
                       + std::to_string(sigma.num_blocks()) + " blocks");
    }
    if (auto a = reflexivity_witness(tau)) {
      throw ClassificationError("recompose needs a weak generalized partial "
                                "order: not reflexive at "
                                + std::to_string(*a));
    }
    auto trans = check_transitive(tau);
    if (!trans.holds) {
      throw ClassificationError("recompose needs a weak generalized partial "
                                "order: not transitive, witness\n"
                                + serialize_matrix(*trans.witness));
    }
    EquivPartition const exch = exchange_eq(tau);
    if (!exch.is_discrete()) {
      for (Element b = 0; b < exch.universe_size(); ++b) {
        if (exch.block_of(b) != b) {
          throw ClassificationError(
              "recompose needs a weak generalized partial order: blocks "
              + std::to_string(exch.block_of(b)) + " and " + std::to_string(b)
              + " are exchangeable");
        }
      }
    }
    return preimage(tau, sigma.quotient_map());
  }

}  // namespace gq
