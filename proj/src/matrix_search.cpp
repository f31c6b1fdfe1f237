#include "gq/matrix_search.hpp"

#include <algorithm>
#include <limits>

namespace gq {

  namespace {
    constexpr std::size_t quick_nodes = 64;
  }

  MatrixSearch::MatrixSearch(FiniteRelation const& rho)
      : _n(rho.universe_size()),
        _m(rho.arity()),
        _prefix(_m + 1),
        _pinned((_m + 1) * _m * _n),
        _diag(_m),
        _cells(_m * _m),
        _row_code(_m),
        _col_code(_m) {
    _members.reserve(rho.size() * _m);
    for (std::size_t k = 0; k <= _m; ++k) {
      _prefix[k] = Bitset(ipow(_n, k));
      for (std::size_t pos = k; pos < _m; ++pos) {
        for (std::size_t v = 0; v < _n; ++v) {
          _pinned[(k * _m + pos) * _n + v] = Bitset(ipow(_n, k));
        }
      }
    }
    Tuple t(_m);
    rho.for_each_code([&](std::size_t code) {
      decode_tuple(code, _n, t);
      _members.insert(_members.end(), t.begin(), t.end());
      std::size_t prefix = 0;
      for (std::size_t k = 0; k <= _m; ++k) {
        _prefix[k].set(prefix);
        for (std::size_t pos = k; pos < _m; ++pos) {
          _pinned[(k * _m + pos) * _n + t[pos]].set(prefix);
        }
        if (k < _m) {
          prefix = prefix * _n + t[k];
        }
      }
    });
  }

  std::optional<Matrix> MatrixSearch::find_with_diagonal(Tuple const& diag) {
    if (diag.size() != _m) {
      throw ArityError("diagonal length does not match relation arity");
    }
    for (auto v : diag) {
      if (v >= _n) {
        throw RangeError("diagonal entry outside the universe");
      }
    }
    _diag = diag;
    std::fill(_row_code.begin(), _row_code.end(), 0);
    std::fill(_col_code.begin(), _col_code.end(), 0);
    _dom.assign(_m * _m * _n, 1);
    for (std::size_t i = 0; i < _m; ++i) {
      std::fill_n(_dom.begin() + (i * _m + i) * _n, _n, 0);
      _dom[(i * _m + i) * _n + diag[i]] = 1;
    }
    // Most searches finish within a few nodes, before narrowing would pay
    // for itself; the rest restart with narrowed domains.
    _budget = quick_nodes;
    bool found = extend(0);
    if (!found && _budget == 0) {
      _budget = std::numeric_limits<std::size_t>::max();
      std::fill(_row_code.begin(), _row_code.end(), 0);
      std::fill(_col_code.begin(), _col_code.end(), 0);
      found = narrow_domains() && extend(0);
    }
    if (!found) {
      return std::nullopt;
    }
    return Matrix(_n, _m, _cells);
  }

  bool MatrixSearch::narrow_domains() {
    std::size_t const count = _members.size() / std::max<std::size_t>(_m, 1);
    _support.resize(_m * _n);
    bool changed = true;
    for (int pass = 0; changed && pass < 1; ++pass) {
      changed = false;
      for (std::size_t line = 0; line < 2 * _m; ++line) {
        std::fill(_support.begin(), _support.end(), 0);
        for (std::size_t r = 0; r < count; ++r) {
          Element const* t  = _members.data() + r * _m;
          bool           ok = true;
          for (std::size_t p = 0; p < _m && ok; ++p) {
            ok = _dom[line_cell(line, p) * _n + t[p]] != 0;
          }
          if (ok) {
            for (std::size_t p = 0; p < _m; ++p) {
              _support[p * _n + t[p]] = 1;
            }
          }
        }
        for (std::size_t p = 0; p < _m; ++p) {
          std::uint8_t* dom   = _dom.data() + line_cell(line, p) * _n;
          bool          alive = false;
          for (std::size_t v = 0; v < _n; ++v) {
            if (dom[v] && !_support[p * _n + v]) {
              dom[v]  = 0;
              changed = true;
            }
            alive = alive || dom[v];
          }
          if (!alive) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool MatrixSearch::extend(std::size_t cell) {
    if (cell == _m * _m) {
      return true;
    }
    if (_budget == 0) {
      return false;
    }
    --_budget;
    ++_nodes;
    std::size_t const i = cell / _m;
    std::size_t const j = cell % _m;

    std::size_t const row_saved = _row_code[i];
    std::size_t const col_saved = _col_code[j];

    Element lo = 0;
    Element hi = static_cast<Element>(_n);
    if (i == j) {
      lo = _diag[i];
      hi = lo + 1;
    }
    std::uint8_t const* dom = _dom.data() + cell * _n;
    for (Element v = lo; v < hi; ++v) {
      if (!dom[v]) {
        continue;
      }
      std::size_t const row = row_saved * _n + v;  // length j + 1
      std::size_t const col = col_saved * _n + v;  // length i + 1
      bool const row_ok = (j < i) ? prefix_ok(j + 1, row, i, _diag[i])
                                  : prefix_ok(j + 1, row);
      if (!row_ok) {
        continue;
      }
      bool const col_ok = (i < j) ? prefix_ok(i + 1, col, j, _diag[j])
                                  : prefix_ok(i + 1, col);
      if (!col_ok) {
        continue;
      }
      _cells[cell]  = v;
      _row_code[i] = row;
      _col_code[j] = col;
      if (extend(cell + 1)) {
        return true;
      }
    }
    _row_code[i] = row_saved;
    _col_code[j] = col_saved;
    return false;
  }

}  // namespace gq
