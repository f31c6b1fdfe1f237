#pragma once

// Relational constructions: coordinate operations, products, restriction,
// homomorphic images and preimages, factor relations, and the
// decomposition of a gQuord into its exchange equivalence and a weak
// generalized partial order on the quotient.
//
// Quotient universes A/psi number the blocks of psi by increasing least
// member (see EquivPartition::block_index).

#include <vector>

#include "gq/partition.hpp"
#include "gq/relation.hpp"

namespace gq {

  //! rho^pi = {(a_pi(0), ..., a_pi(m-1)) : a in rho}; pi must be bijective.
  [[nodiscard]] FiniteRelation permute(FiniteRelation const& rho,
                                       IndexMap const&       pi);

  //! {a : (a_alpha(0), ..., a_alpha(s-1)) in sigma} over m coordinates,
  //! where alpha : s -> m and sigma is s-ary.
  [[nodiscard]] FiniteRelation cylinder(FiniteRelation const& sigma,
                                        IndexMap const&       alpha);

  //! Adds a fictitious last coordinate.
  [[nodiscard]] FiniteRelation add_fictitious(FiniteRelation const& rho);

  //! {(a_1, ..., a_{m-1}) : (a_1, a_1, a_2, ..., a_{m-1}) in rho}.
  [[nodiscard]] FiniteRelation identify_first_two(FiniteRelation const& rho);

  //! Over A1 x A2, the pair (a, b) encoded as a * |A2| + b.
  [[nodiscard]] FiniteRelation direct_product(FiniteRelation const& rho1,
                                              FiniteRelation const& rho2);

  //! rho restricted to B, re-indexed by the order-preserving renaming of
  //! B (sorted ascending) onto {0..|B|-1}.
  [[nodiscard]] FiniteRelation restrict(FiniteRelation const& rho,
                                        std::vector<Element>  subset);

  [[nodiscard]] FiniteRelation image(FiniteRelation const& rho,
                                     SurjectiveMap const&  lambda);
  [[nodiscard]] FiniteRelation preimage(FiniteRelation const& sigma,
                                        SurjectiveMap const&  lambda);

  //! Every member's block box [a_1] x ... x [a_m] lies inside rho.
  [[nodiscard]] bool has_exchange_property(EquivPartition const& psi,
                                           FiniteRelation const& rho);

  //! rho/psi = {([a_1], ..., [a_m]) : a in rho} over A/psi.
  [[nodiscard]] FiniteRelation factor(FiniteRelation const& rho,
                                      EquivPartition const& psi);
  //! rho/[psi] = {(B_1, ..., B_m) : B_1 x ... x B_m inside rho}.
  [[nodiscard]] FiniteRelation block_factor(FiniteRelation const& rho,
                                            EquivPartition const& psi);

  struct Decomposition {
    EquivPartition sigma;  // exchange equivalence of rho
    FiniteRelation tau;    // rho / sigma, over sigma.num_blocks() elements
  };

  //! Throws ClassificationError unless rho is a gQuord.
  [[nodiscard]] Decomposition decompose(FiniteRelation const& rho);

  //! {a : ([a_1], ..., [a_m]) in tau}.  Throws ClassificationError unless
  //! tau is a weak generalized partial order on A/sigma.
  [[nodiscard]] FiniteRelation recompose(EquivPartition const& sigma,
                                         FiniteRelation const& tau);

}  // namespace gq
