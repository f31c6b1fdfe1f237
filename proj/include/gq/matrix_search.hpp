#pragma once

// Backtracking search for m x m matrices whose rows and columns all lie in
// a relation rho ("rho models the matrix").  Cells are filled row by row;
// every partial row and partial column must be a prefix of some member of
// rho.  With the diagonal fixed in advance, a partial row i (resp. column
// j) that has not reached the diagonal must moreover extend to a member
// whose coordinate i (resp. j) equals the prescribed diagonal entry.
// Before the search, cell domains are narrowed to values that occur in
// some member compatible with the domains of the rest of the row and of
// the column (repeated until stable).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gq/relation.hpp"

namespace gq {

  class MatrixSearch {
   public:
    explicit MatrixSearch(FiniteRelation const& rho);

    //! A matrix modelled by rho with the given diagonal, if one exists.
    //! The returned matrix is the least one in row-major order.
    [[nodiscard]] std::optional<Matrix> find_with_diagonal(Tuple const& diag);

    [[nodiscard]] bool has_diagonal(Tuple const& diag) {
      return find_with_diagonal(diag).has_value();
    }

    //! Number of search nodes visited since construction.
    [[nodiscard]] std::size_t nodes() const noexcept {
      return _nodes;
    }

   private:
    // prefix of length k (k <= m) is admissible
    [[nodiscard]] bool prefix_ok(std::size_t k, std::size_t code) const {
      return _prefix[k].test(code);
    }
    // prefix of length k extends to a member with coordinate pos == v
    [[nodiscard]] bool prefix_ok(std::size_t k,
                                 std::size_t code,
                                 std::size_t pos,
                                 Element     v) const {
      return _pinned[(k * _m + pos) * _n + v].test(code);
    }

    bool extend(std::size_t cell);
    bool narrow_domains();

    [[nodiscard]] std::size_t line_cell(std::size_t line, std::size_t p) const {
      return line < _m ? line * _m + p : p * _m + (line - _m);
    }

    std::size_t           _n;
    std::size_t           _m;
    std::vector<Bitset>   _prefix;  // _prefix[k] over n^k codes
    std::vector<Bitset>   _pinned;  // indexed by (k, pos, v), pos >= k

    std::vector<Element>      _members;  // decoded tuples of rho, row-major
    std::vector<std::uint8_t> _dom;      // (cell, value) still possible
    std::vector<std::uint8_t> _support;

    Tuple                    _diag;
    std::vector<Element>     _cells;
    std::vector<std::size_t> _row_code;
    std::vector<std::size_t> _col_code;
    std::size_t              _nodes  = 0;
    std::size_t              _budget = 0;
  };

}  // namespace gq
