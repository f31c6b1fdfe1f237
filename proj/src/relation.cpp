#include "gq/relation.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace gq {

  namespace {
    std::atomic<std::size_t> point_limit{std::size_t(1) << 24};
  }

  std::size_t max_points() noexcept {
    return point_limit.load(std::memory_order_relaxed);
  }

  void set_max_points(std::size_t limit) noexcept {
    point_limit.store(limit, std::memory_order_relaxed);
  }

  std::size_t checked_points(std::size_t n, std::size_t m) {
    if (n == 0) {
      throw RangeError("universe must be nonempty");
    }
    std::size_t const limit = max_points();
    std::size_t       r     = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (r > limit / n) {
        throw ResourceError("relation of arity " + std::to_string(m)
                            + " over " + std::to_string(n)
                            + " elements exceeds the point limit of "
                            + std::to_string(limit));
      }
      r *= n;
    }
    if (r > limit) {
      throw ResourceError("relation exceeds the point limit of "
                          + std::to_string(limit));
    }
    return r;
  }

  Universe::Universe(std::size_t n) : _n(n) {
    if (n == 0) {
      throw RangeError("universe must have at least one element");
    }
  }

  std::size_t encode_tuple(std::span<Element const> t, std::size_t n) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] >= n) {
        throw RangeError("coordinate " + std::to_string(i) + " has value "
                         + std::to_string(t[i]) + ", outside 0.."
                         + std::to_string(n - 1));
      }
      code = code * n + t[i];
    }
    return code;
  }

  void decode_tuple(std::size_t code, std::size_t n, std::span<Element> out) {
    for (std::size_t i = out.size(); i-- > 0;) {
      out[i] = static_cast<Element>(code % n);
      code /= n;
    }
  }

  Tuple decode_tuple(std::size_t code, std::size_t n, std::size_t m) {
    Tuple t(m);
    decode_tuple(code, n, t);
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteRelation
  ////////////////////////////////////////////////////////////////////////

  FiniteRelation::FiniteRelation(std::size_t n, std::size_t m)
      : _n(Universe(n).size()), _m(m), _bits(checked_points(n, m)) {
    if (m == 0) {
      throw ArityError("relation arity must be positive");
    }
  }

  FiniteRelation FiniteRelation::full(std::size_t n, std::size_t m) {
    FiniteRelation r(n, m);
    r._bits.set_all();
    return r;
  }

  FiniteRelation FiniteRelation::from_tuples(std::size_t            n,
                                             std::size_t            m,
                                             std::span<Tuple const> tuples) {
    FiniteRelation r(n, m);
    for (auto const& t : tuples) {
      r.insert(t);
    }
    return r;
  }

  FiniteRelation
  FiniteRelation::from_tuples(std::size_t                  n,
                              std::size_t                  m,
                              std::initializer_list<Tuple> il) {
    return from_tuples(n, m, std::span<Tuple const>(il.begin(), il.size()));
  }

  FiniteRelation
  FiniteRelation::from_bits(std::size_t n, std::size_t m, Bitset bits) {
    FiniteRelation r(n, m);
    if (bits.size() != r.points()) {
      throw ArityError("bitset size does not match n^m");
    }
    r._bits = std::move(bits);
    return r;
  }

  FiniteRelation FiniteRelation::from_mask(std::size_t   n,
                                           std::size_t   m,
                                           std::uint64_t mask) {
    FiniteRelation r(n, m);
    if (r.points() > 64) {
      throw ArityError("from_mask needs n^m <= 64");
    }
    for (std::size_t c = 0; c < r.points(); ++c) {
      if ((mask >> c) & 1U) {
        r._bits.set(c);
      }
    }
    return r;
  }

  bool FiniteRelation::contains(std::span<Element const> t) const {
    if (t.size() != _m) {
      throw ArityError("tuple has " + std::to_string(t.size())
                       + " coordinates, relation arity is "
                       + std::to_string(_m));
    }
    return _bits.test(encode_tuple(t, _n));
  }

  void FiniteRelation::insert(std::size_t code) {
    if (code >= points()) {
      throw RangeError("tuple code out of range");
    }
    _bits.set(code);
  }

  void FiniteRelation::insert(std::span<Element const> t) {
    if (t.size() != _m) {
      throw ArityError("tuple has " + std::to_string(t.size())
                       + " coordinates, relation arity is "
                       + std::to_string(_m));
    }
    _bits.set(encode_tuple(t, _n));
  }

  void FiniteRelation::erase(std::size_t code) {
    if (code >= points()) {
      throw RangeError("tuple code out of range");
    }
    _bits.reset(code);
  }

  std::vector<Tuple> FiniteRelation::tuples() const {
    std::vector<Tuple> out;
    out.reserve(size());
    for_each_code([&](std::size_t c) { out.push_back(decode_tuple(c, _n, _m)); });
    return out;
  }

  std::vector<std::size_t> FiniteRelation::codes() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each_code([&](std::size_t c) { out.push_back(c); });
    return out;
  }

  void FiniteRelation::require_compatible(FiniteRelation const& that) const {
    if (_n != that._n || _m != that._m) {
      throw ArityError("relations differ in universe or arity ("
                       + std::to_string(_m) + "-ary over "
                       + std::to_string(_n) + " vs "
                       + std::to_string(that._m) + "-ary over "
                       + std::to_string(that._n) + ")");
    }
  }

  bool FiniteRelation::is_subset_of(FiniteRelation const& that) const {
    require_compatible(that);
    return _bits.is_subset_of(that._bits);
  }

  FiniteRelation& FiniteRelation::operator&=(FiniteRelation const& that) {
    require_compatible(that);
    _bits &= that._bits;
    return *this;
  }

  FiniteRelation& FiniteRelation::operator|=(FiniteRelation const& that) {
    require_compatible(that);
    _bits |= that._bits;
    return *this;
  }

  FiniteRelation intersect(FiniteRelation const& a, FiniteRelation const& b) {
    FiniteRelation r = a;
    r &= b;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrix
  ////////////////////////////////////////////////////////////////////////

  Matrix::Matrix(std::size_t n, std::size_t order)
      : _n(Universe(n).size()), _order(order), _entries(order * order, 0) {}

  Matrix::Matrix(std::size_t n, std::size_t order, std::vector<Element> entries)
      : _n(Universe(n).size()), _order(order), _entries(std::move(entries)) {
    if (_entries.size() != order * order) {
      throw ArityError("matrix of order " + std::to_string(order) + " needs "
                       + std::to_string(order * order) + " entries");
    }
    for (auto e : _entries) {
      if (e >= n) {
        throw RangeError("matrix entry " + std::to_string(e)
                         + " outside the universe");
      }
    }
  }

  void Matrix::set(std::size_t i, std::size_t j, Element v) {
    if (v >= _n) {
      throw RangeError("matrix entry outside the universe");
    }
    _entries[i * _order + j] = v;
  }

  Tuple Matrix::row(std::size_t i) const {
    return Tuple(_entries.begin() + i * _order,
                 _entries.begin() + (i + 1) * _order);
  }

  Tuple Matrix::column(std::size_t j) const {
    Tuple t(_order);
    for (std::size_t i = 0; i < _order; ++i) {
      t[i] = at(i, j);
    }
    return t;
  }

  Tuple Matrix::diagonal() const {
    Tuple t(_order);
    for (std::size_t i = 0; i < _order; ++i) {
      t[i] = at(i, i);
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // IndexMap, SurjectiveMap
  ////////////////////////////////////////////////////////////////////////

  IndexMap::IndexMap(std::size_t target_arity, std::vector<std::size_t> map)
      : _target(target_arity), _map(std::move(map)) {
    for (auto v : _map) {
      if (v >= _target) {
        throw RangeError("index map value " + std::to_string(v)
                         + " >= target arity " + std::to_string(_target));
      }
    }
  }

  IndexMap IndexMap::identity(std::size_t m) {
    std::vector<std::size_t> v(m);
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = i;
    }
    return IndexMap(m, std::move(v));
  }

  bool IndexMap::is_bijection() const noexcept {
    if (_map.size() != _target) {
      return false;
    }
    std::vector<bool> seen(_target, false);
    for (auto v : _map) {
      if (seen[v]) {
        return false;
      }
      seen[v] = true;
    }
    return true;
  }

  IndexMap IndexMap::inverse() const {
    if (!is_bijection()) {
      throw ArityError("index map is not a bijection");
    }
    std::vector<std::size_t> inv(_target);
    for (std::size_t i = 0; i < _map.size(); ++i) {
      inv[_map[i]] = i;
    }
    return IndexMap(_target, std::move(inv));
  }

  SurjectiveMap::SurjectiveMap(std::size_t target_size, std::vector<Element> map)
      : _target(Universe(target_size).size()), _map(std::move(map)) {
    if (_map.empty()) {
      throw RangeError("surjective map needs a nonempty source");
    }
    std::vector<bool> hit(_target, false);
    for (auto v : _map) {
      if (v >= _target) {
        throw RangeError("map value " + std::to_string(v)
                         + " outside target of size "
                         + std::to_string(_target));
      }
      hit[v] = true;
    }
    auto it = std::find(hit.begin(), hit.end(), false);
    if (it != hit.end()) {
      throw RangeError("map is not surjective: "
                       + std::to_string(it - hit.begin())
                       + " has no preimage");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Diagonal relations
  ////////////////////////////////////////////////////////////////////////

  FiniteRelation diagonal_relation(std::size_t                     n,
                                   std::vector<std::size_t> const& index_blocks) {
    std::size_t const m = index_blocks.size();
    FiniteRelation    r(n, m);
    Tuple             t(m);
    for (std::size_t c = 0; c < r.points(); ++c) {
      decode_tuple(c, n, t);
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          if (index_blocks[i] == index_blocks[j] && t[i] != t[j]) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        r.insert(c);
      }
    }
    return r;
  }

  FiniteRelation constant_tuples(std::size_t n, std::size_t m) {
    FiniteRelation r(n, m);
    Tuple          t(m);
    for (Element a = 0; a < n; ++a) {
      std::fill(t.begin(), t.end(), a);
      r.insert(t);
    }
    return r;
  }

}  // namespace gq
