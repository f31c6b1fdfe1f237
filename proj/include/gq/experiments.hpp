#pragma once

// Bounded pp-formula sweeps over a single binary relation.
//
// The family for arity m has free variables 0..m-1 and one bound
// variable y = m; its atoms are (u, v) in rho for ordered pairs u != v of
// variables, and a formula is any set of at most `max_atoms` of them.

#include <cstddef>
#include <vector>

#include "gq/exec.hpp"
#include "gq/formula.hpp"
#include "gq/relation.hpp"

namespace gq {

  struct PpSweep {
    std::size_t                 formulas = 0;
    std::vector<FiniteRelation> outputs;         // distinct, ascending
    std::vector<FiniteRelation> outside_closure; // outputs not qf-pp definable
  };

  //! Evaluates every formula of the family and tests each distinct output
  //! for qf-pp definability from {rho}.
  [[nodiscard]] PpSweep pp_sweep(FiniteRelation const& rho,
                                 std::size_t           m,
                                 std::size_t           max_atoms,
                                 Exec                  exec = Exec::parallel);

  //! The formula of the family selected by the bit mask over the atom list.
  [[nodiscard]] PpFormula pp_family_formula(std::size_t m, std::uint64_t mask,
                                            std::string const& relname);

  //! Number of atoms in the family for arity m.
  [[nodiscard]] constexpr std::size_t pp_family_atoms(std::size_t m) noexcept {
    return (m + 1) * m;
  }

  struct ConjectureReport {
    std::size_t                 arity = 0;
    std::size_t                 formulas = 0;
    std::size_t                 outputs = 0;
    std::size_t                 gquord_outputs = 0;
    std::size_t                 non_gpord_gquords = 0;  // excluding A^m
    std::vector<FiniteRelation> candidates;  // gQuords outside the qf-closure
  };

  //! For a bounded poset rho: which gQuords produced by the family are not
  //! qf-pp definable from rho.  Searches; asserts nothing.
  [[nodiscard]] ConjectureReport conjecture_search(FiniteRelation const& rho,
                                                   std::size_t           m,
                                                   std::size_t           max_atoms,
                                                   Exec exec = Exec::parallel);

}  // namespace gq
