#pragma once

// Exhaustive enumeration kernels.  Every kernel has an OpenMP version and
// a serial reference selected by Exec; results are identical and come in
// ascending order of encoding.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gq/exec.hpp"
#include "gq/relation.hpp"

namespace gq {

  //! Indices i in [0, total) with pred(i), ascending.  `pred` must be safe
  //! to call concurrently.
  [[nodiscard]] std::vector<std::size_t>
  filter_indices(std::size_t                             total,
                 std::function<bool(std::size_t)> const& pred,
                 Exec                                    exec = Exec::parallel);

  //! The relation whose members are the set bits of `mask` (n^m <= 64).
  [[nodiscard]] inline FiniteRelation relation_from_index(std::size_t   n,
                                                          std::size_t   m,
                                                          std::uint64_t mask) {
    return FiniteRelation::from_mask(n, m, mask);
  }

  //! All m-ary relations on n elements satisfying pred, by brute force over
  //! the 2^(n^m) subsets.  Throws ResourceError if n^m > max_bits.
  [[nodiscard]] std::vector<FiniteRelation>
  filter_relations(std::size_t                                       n,
                   std::size_t                                       m,
                   std::function<bool(FiniteRelation const&)> const& pred,
                   Exec        exec     = Exec::parallel,
                   std::size_t max_bits = 24);

  //! A closure operator on m-ary relations.
  using ClosureOp = std::function<FiniteRelation(FiniteRelation const&)>;

  //! All closed sets of `close` that contain close(seed), found by
  //! repeatedly closing "closed set plus one tuple".  Throws ResourceError
  //! once more than `limit` sets are found.
  [[nodiscard]] std::vector<FiniteRelation>
  enumerate_closed(FiniteRelation const& seed,
                   ClosureOp const&      close,
                   Exec                  exec  = Exec::parallel,
                   std::size_t           limit = 1'000'000);

  //! All m-ary gQuords on n elements (closure enumeration).
  [[nodiscard]] std::vector<FiniteRelation>
  enumerate_gquords(std::size_t n, std::size_t m, Exec exec = Exec::parallel);

  //! All m-ary generalized equivalences on n elements (closure
  //! enumeration with the least gEq containing a relation).
  [[nodiscard]] std::vector<FiniteRelation>
  enumerate_geqs(std::size_t n, std::size_t m, Exec exec = Exec::parallel);

  //! The least generalized equivalence containing rho: the transitive
  //! closure of its reflexive, totally symmetric saturation.
  [[nodiscard]] FiniteRelation geq_closure(FiniteRelation const& rho);

  enum class Kind { gquord, geq, gpord, wgpord, equivalences, preorders };

  [[nodiscard]] Kind        parse_kind(std::string const& name);
  [[nodiscard]] std::string kind_name(Kind kind);

  //! Relations of the given kind; equivalences and preorders are binary
  //! and ignore m.
  [[nodiscard]] std::vector<FiniteRelation>
  enumerate_kind(Kind kind, std::size_t n, std::size_t m, Exec exec = Exec::parallel);

}  // namespace gq
