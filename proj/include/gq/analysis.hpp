#pragma once

// Predicates and closure operators for generalized quasiorders.
//
// An m-ary relation rho is reflexive if it contains every constant tuple,
// and (generalized) transitive if for every m x m matrix whose rows and
// columns all belong to rho the diagonal belongs to rho as well.  Reflexive
// transitive relations are generalized quasiorders (gQuords).

#include <optional>
#include <string>
#include <utility>

#include "gq/partition.hpp"
#include "gq/relation.hpp"

namespace gq {

  //! The least element a with (a,...,a) not in rho.
  [[nodiscard]] std::optional<Element>
  reflexivity_witness(FiniteRelation const& rho);

  [[nodiscard]] inline bool is_reflexive(FiniteRelation const& rho) {
    return !reflexivity_witness(rho).has_value();
  }

  //! True iff every row and every column of `mat` is a member of rho.
  [[nodiscard]] bool models_matrix(FiniteRelation const& rho,
                                   Matrix const&         mat);

  struct TransitivityResult {
    bool                  holds;
    std::optional<Matrix> witness;  // modelled by rho, diagonal outside rho
  };

  //! Exhaustive; the witness has the least violating diagonal, and is the
  //! least such matrix in row-major order.
  [[nodiscard]] TransitivityResult check_transitive(FiniteRelation const& rho);

  [[nodiscard]] inline bool is_transitive(FiniteRelation const& rho) {
    return check_transitive(rho).holds;
  }

  //! The set of diagonals of all matrices modelled by rho.
  [[nodiscard]] FiniteRelation delta_step(FiniteRelation const& rho);

  //! Least transitive relation containing rho (fixpoint of rho u d(rho)).
  [[nodiscard]] FiniteRelation transitive_closure(FiniteRelation const& rho);

  //! rho^alpha = {(a_alpha(0), ..., a_alpha(m-1)) : a in rho} for any
  //! alpha : m -> m.
  [[nodiscard]] FiniteRelation apply_index_map(FiniteRelation const& rho,
                                               IndexMap const&       alpha);

  //! Totally symmetric part: tuples all of whose permutations lie in rho.
  [[nodiscard]] FiniteRelation tos(FiniteRelation const& rho);
  //! Absolutely symmetric part: tuples t with {t_1..t_m}^m inside rho.
  [[nodiscard]] FiniteRelation abs(FiniteRelation const& rho);
  //! Binary symmetric part rho^[2] = {(a,b) : {a,b}^m inside rho}.
  [[nodiscard]] FiniteRelation bin_sym(FiniteRelation const& rho);
  //! Exchange equivalence rho^<2>.
  [[nodiscard]] EquivPartition exchange_eq(FiniteRelation const& rho);
  //! psi^(m) = {a : (a_i, a_j) in psi for all i, j}.
  [[nodiscard]] FiniteRelation lift_partition(EquivPartition const& psi,
                                              std::size_t           m);

  //! The same for an arbitrary binary relation psi.
  [[nodiscard]] FiniteRelation lift_relation(FiniteRelation const& psi,
                                             std::size_t           m);

  //! A tuple of rho with some permutation outside rho.
  [[nodiscard]] std::optional<Tuple>
  total_symmetry_witness(FiniteRelation const& rho);
  //! A tuple t of rho with some element of {t_1..t_m}^m outside rho.
  [[nodiscard]] std::optional<Tuple>
  absolute_symmetry_witness(FiniteRelation const& rho);

  struct ClassificationReport {
    bool empty                = false;
    bool reflexive            = false;
    bool totally_symmetric    = false;
    bool absolutely_symmetric = false;
    bool transitive           = false;
    bool antisymmetric        = false;  // tos(rho) within Delta^(m)
    bool is_gquord            = false;
    bool is_geq               = false;
    bool is_gtolerance        = false;
    bool is_gpord             = false;
    bool is_wgpord            = false;

    std::optional<Element> reflexivity_witness;
    std::optional<Tuple>   symmetry_witness;
    std::optional<Tuple>   absolute_symmetry_witness;
    std::optional<Tuple>   antisymmetry_witness;  // non-constant tuple of tos
    std::optional<Matrix>  transitivity_witness;
    // For gQuords only: a pair a != b in rho^[2] (resp. rho^<2>).
    std::optional<std::pair<Element, Element>> bin_sym_witness;
    std::optional<std::pair<Element, Element>> exchange_witness;
    // Both definitions of generalized partial order, for comparison.
    bool bin_sym_trivial  = false;
    bool exchange_trivial = false;
  };

  [[nodiscard]] ClassificationReport classify(FiniteRelation const& rho);

  //! Cheap exact membership tests used by enumeration sweeps.
  [[nodiscard]] bool is_gquord(FiniteRelation const& rho);
  [[nodiscard]] bool is_totally_symmetric(FiniteRelation const& rho);

  //! "key=value" lines, witnesses included, no trailing RESULT line.  A
  //! transitivity witness matrix follows its diagonal as an indented block.
  [[nodiscard]] std::string format_report(ClassificationReport const& rep);

}  // namespace gq
