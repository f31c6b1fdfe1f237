#pragma once

// Primitive positive formulas over named relations.
//
// An atom (x_alpha(0), ..., x_alpha(s-1)) in sigma is stored as the name of
// sigma and the IndexMap alpha into the formula's variables.  Free
// variables are 0..m-1, bound ones m..m+s-1.  The name "eq" always denotes
// the equality relation Delta_A.
//
// Text format:
//
//   free 4 bound 1
//   atom poset 0 4
//   atom poset 4 2

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gq/relation.hpp"

namespace gq {

  class RelationStore {
   public:
    void add(std::string name, FiniteRelation rho);

    //! Throws Error for an unknown name.
    [[nodiscard]] FiniteRelation const& get(std::string const& name) const;
    [[nodiscard]] bool contains(std::string const& name) const {
      return _rels.count(name) != 0;
    }
    [[nodiscard]] std::vector<std::string> names() const;

   private:
    std::map<std::string, FiniteRelation> _rels;
  };

  inline constexpr char const* equality_name = "eq";

  struct Atom {
    std::string relation;
    IndexMap    vars;
  };

  struct QfPpFormula {
    std::size_t       free_count = 0;
    std::vector<Atom> atoms;
  };

  struct PpFormula {
    std::size_t       free_count  = 0;
    std::size_t       bound_count = 0;
    std::vector<Atom> atoms;
  };

  //! Intersection of the atom cylinders over n elements; the empty
  //! conjunction denotes A^m.
  [[nodiscard]] FiniteRelation eval_qfpp(QfPpFormula const&   phi,
                                         RelationStore const& env,
                                         std::size_t          n);

  //! Evaluates the body over m + s variables, then projects out the bound
  //! ones.  Throws ResourceError if s exceeds `bound_limit`.
  [[nodiscard]] FiniteRelation eval_pp(PpFormula const&     phi,
                                       RelationStore const& env,
                                       std::size_t          n,
                                       std::size_t          bound_limit = 3);

  //! The atoms {sigma^alpha : sigma in Q u {Delta_A}, alpha : s -> m}
  //! together with A^m, deduplicated, in ascending order.
  [[nodiscard]] std::vector<FiniteRelation>
  qfpp_atoms(std::size_t n, std::vector<FiniteRelation> const& q, std::size_t m);

  //! Every m-ary relation definable from Q by a quantifier-free pp-formula,
  //! in ascending order.  Throws ResourceError once more than `budget`
  //! relations have been found.
  [[nodiscard]] std::vector<FiniteRelation>
  qfpp_closure(std::size_t                        n,
               std::vector<FiniteRelation> const& q,
               std::size_t                        m,
               std::size_t                        budget = 1'000'000);

  //! The least qf-pp definable relation containing sigma: the intersection
  //! of all atoms that contain it.
  [[nodiscard]] FiniteRelation qfpp_hull(FiniteRelation const&              sigma,
                                         std::vector<FiniteRelation> const& atoms);

  //! sigma is qf-pp definable from Q iff it equals its hull.
  [[nodiscard]] bool in_qfpp_closure(FiniteRelation const&              sigma,
                                     std::vector<FiniteRelation> const& q);

  [[nodiscard]] PpFormula   parse_formula(std::string_view text);
  [[nodiscard]] std::string serialize_formula(PpFormula const& phi);

}  // namespace gq
