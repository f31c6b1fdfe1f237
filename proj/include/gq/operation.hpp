#pragma once

// Finite operations f : A^k -> A stored as value tables indexed by the
// tuple encoding of their arguments, together with preservation of
// relations, translations, bounded Pol/End enumeration, lattice
// operations of an order and the identities of rectangular algebras.
//
// Text format: "op <k> <n>" followed by the n^k table values in
// ascending argument-code order, separated by any whitespace.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "gq/exec.hpp"
#include "gq/relation.hpp"

namespace gq {

  class FiniteOperation {
   public:
    FiniteOperation(std::size_t n, std::size_t k, std::vector<Element> table);

    [[nodiscard]] static FiniteOperation
    from_function(std::size_t                                     n,
                  std::size_t                                     k,
                  std::function<Element(std::span<Element const>)> f);
    [[nodiscard]] static FiniteOperation identity(std::size_t n);
    //! e^k_i(x) = x_i, with i 0-based.
    [[nodiscard]] static FiniteOperation projection(std::size_t n,
                                                    std::size_t k,
                                                    std::size_t i);
    //! The k-ary operation with constant value a (k = 1 by default).
    [[nodiscard]] static FiniteOperation constant(std::size_t n,
                                                  Element     a,
                                                  std::size_t k = 1);

    [[nodiscard]] std::size_t universe_size() const noexcept {
      return _n;
    }
    [[nodiscard]] std::size_t arity() const noexcept {
      return _k;
    }
    [[nodiscard]] std::vector<Element> const& table() const noexcept {
      return _table;
    }
    //! Value at an encoded argument tuple.
    [[nodiscard]] Element at(std::size_t code) const {
      return _table[code];
    }
    [[nodiscard]] Element operator()(std::span<Element const> args) const;
    [[nodiscard]] Element operator()(std::initializer_list<Element> args) const {
      return (*this)(std::span<Element const>(args.begin(), args.size()));
    }

    friend bool operator==(FiniteOperation const&,
                           FiniteOperation const&) = default;
    friend bool operator<(FiniteOperation const& a, FiniteOperation const& b) {
      return std::tie(a._n, a._k, a._table) < std::tie(b._n, b._k, b._table);
    }

   private:
    std::size_t          _n;
    std::size_t          _k;
    std::vector<Element> _table;
  };

  using OperationSet = std::vector<FiniteOperation>;

  //! Builtins on n elements: meet/join of the chain 0 < 1 < ... < n-1.
  [[nodiscard]] FiniteOperation op_and(std::size_t n = 2);
  [[nodiscard]] FiniteOperation op_or(std::size_t n = 2);
  //! x -> n - 1 - x.
  [[nodiscard]] FiniteOperation op_not(std::size_t n = 2);
  //! The standard rectangular band on n0 x n0, (a, b) encoded as a*n0 + b,
  //! with (a, b) * (c, d) = (a, d).
  [[nodiscard]] FiniteOperation rect_band(std::size_t n0);

  [[nodiscard]] Element apply(FiniteOperation const& f, Tuple const& args);
  //! The m-tuple obtained by applying f to the k rows componentwise.
  [[nodiscard]] Tuple apply_rows(FiniteOperation const&    f,
                                 std::vector<Tuple> const& rows);

  struct PreservationResult {
    bool               holds = true;
    std::vector<Tuple> witness;  // k members of rho mapped outside rho
  };

  [[nodiscard]] PreservationResult preserves(FiniteOperation const& f,
                                             FiniteRelation const&  rho);

  //! All unary maps x -> f(a_1, .., x, .., a_k), deduplicated and sorted.
  //! A nullary f yields its constant as a unary map.
  [[nodiscard]] OperationSet translations(FiniteOperation const& f);

  //! (f preserves rho) == (every translation of f preserves rho).
  [[nodiscard]] bool xi_holds(FiniteOperation const& f,
                              FiniteRelation const&  rho);

  //! All n^n unary operations preserving every relation of q.
  [[nodiscard]] OperationSet end_monoid(std::size_t                        n,
                                        std::vector<FiniteRelation> const& q);

  //! All k-ary operations preserving every relation of q, in ascending
  //! table order.  Throws ResourceError if n^(n^k) exceeds `budget`.
  [[nodiscard]] OperationSet pol_bounded(std::size_t                        n,
                                         std::vector<FiniteRelation> const& q,
                                         std::size_t                        k,
                                         std::size_t budget = 1u << 24,
                                         Exec        exec = Exec::parallel);

  //! Every generator preserves rho.
  [[nodiscard]] bool invariant_under(FiniteRelation const& rho,
                                     OperationSet const&   gens);

  struct LatticeOps {
    FiniteOperation meet;
    FiniteOperation join;
  };

  struct LatticeResult {
    std::optional<LatticeOps> ops;
    // When ops is absent: the least pair (a, b), a < b numerically, lacking
    // a least upper bound (missing_join) or a greatest lower bound.
    std::optional<std::pair<Element, Element>> witness;
    bool                                       missing_join = false;
  };

  //! rho must be a partial order (ClassificationError otherwise).
  [[nodiscard]] LatticeResult lattice_ops_from_order(FiniteRelation const& rho);

  //! (x meet y) join (y meet z) join (z meet x).
  [[nodiscard]] FiniteOperation majority(LatticeOps const& ops);

  enum class Identity { ID, ABi, AB, C };

  struct IdentityResult {
    bool holds = true;
    // Values of the variables of the identity, in the order they are
    // listed in its definition (x_1..x_k then the y's for ABi, x_11..x_kk
    // row-major for AB and C).
    std::vector<Element> witness;
  };

  //! `position` selects i (0-based) for ABi; `g` is required for C.
  [[nodiscard]] IdentityResult check_identity(FiniteOperation const& f,
                                              Identity               tag,
                                              std::size_t            position = 0,
                                              FiniteOperation const* g = nullptr);

  //! {(a_1, ..., a_k, f(a))}, a (k+1)-ary relation.
  [[nodiscard]] FiniteRelation graph_of(FiniteOperation const& f);

  struct RectangularReport {
    bool entropic     = false;
    bool idempotent   = false;
    bool absorptive   = false;  // AB_f
    bool graph_transitive = false;
    bool graph_gquord     = false;
    bool graph_gpord      = false;
    // Vacuously true unless f is entropic.  equivalence_ok: AB_f iff the
    // graph is a gQuord.  transitive_ok: AB_f iff the graph is transitive.
    // gquord_ok: AB_f and ID_f iff the graph is a gQuord.
    // gpord_implied_ok: ID_f and AB_f imply the graph is a gPord.
    bool applicable       = false;
    bool equivalence_ok   = false;
    bool transitive_ok    = false;
    bool gquord_ok        = false;
    bool gpord_implied_ok = false;
  };

  [[nodiscard]] RectangularReport rectangular_theorem_check(FiniteOperation const& f);

  [[nodiscard]] FiniteOperation parse_operation(std::string_view text);

  //! Named constructors: "and", "or", "not" (on n elements), "const <a>",
  //! "proj <k> <i>", "rect-band <n0>", "majority-from-order <name>" (the
  //! order is fetched through `lookup`).  Throws ParseError on unknown names.
  [[nodiscard]] FiniteOperation
  builtin_operation(std::string_view                                        name,
                    std::size_t                                             n,
                    std::function<FiniteRelation(std::string const&)> const& lookup = {});
  [[nodiscard]] std::string     serialize_operation(FiniteOperation const& f);

}  // namespace gq
