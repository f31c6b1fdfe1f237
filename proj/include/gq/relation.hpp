#pragma once

// Core value types: universes, tuples, m-ary relations, matrices and
// coordinate maps.  Elements of a universe of size n are 0, ..., n - 1.
// Tuples are encoded as base-n integers with the first coordinate most
// significant, and a relation is a dense bitset over these codes.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "gq/bitset.hpp"
#include "gq/errors.hpp"

namespace gq {

  using Element = std::uint32_t;
  using Tuple   = std::vector<Element>;

  //! Upper bound on n^m for any relation that may be constructed.
  //! Defaults to 2^24.
  [[nodiscard]] std::size_t max_points() noexcept;
  void                      set_max_points(std::size_t limit) noexcept;

  //! n^m, throwing ResourceError if it exceeds max_points().
  [[nodiscard]] std::size_t checked_points(std::size_t n, std::size_t m);

  //! n^k without a limit check (overflow is the caller's problem).
  [[nodiscard]] constexpr std::size_t ipow(std::size_t n,
                                           std::size_t k) noexcept {
    std::size_t r = 1;
    while (k-- > 0) {
      r *= n;
    }
    return r;
  }

  //! A finite base set {0, ..., n - 1}, n >= 1.
  class Universe {
   public:
    explicit Universe(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }

    friend bool operator==(Universe, Universe) = default;

   private:
    std::size_t _n;
  };

  [[nodiscard]] std::size_t encode_tuple(std::span<Element const> t,
                                         std::size_t               n);
  [[nodiscard]] Tuple decode_tuple(std::size_t code,
                                   std::size_t n,
                                   std::size_t m);
  // Writes the decoding into `out` (which must have size m).
  void decode_tuple(std::size_t code, std::size_t n, std::span<Element> out);

  class FiniteRelation {
   public:
    //! The empty m-ary relation on {0, ..., n - 1}.
    FiniteRelation(std::size_t n, std::size_t m);

    [[nodiscard]] static FiniteRelation full(std::size_t n, std::size_t m);
    [[nodiscard]] static FiniteRelation
    from_tuples(std::size_t n, std::size_t m, std::span<Tuple const> tuples);
    [[nodiscard]] static FiniteRelation
    from_tuples(std::size_t n, std::size_t m, std::initializer_list<Tuple> il);
    //! Members are the codes whose bit is set in `bits`.
    [[nodiscard]] static FiniteRelation
    from_bits(std::size_t n, std::size_t m, Bitset bits);
    //! Members are the codes c with bit c of `mask` set; n^m <= 64.
    [[nodiscard]] static FiniteRelation
    from_mask(std::size_t n, std::size_t m, std::uint64_t mask);

    [[nodiscard]] std::size_t universe_size() const noexcept {
      return _n;
    }
    [[nodiscard]] std::size_t arity() const noexcept {
      return _m;
    }
    //! n^m, the number of encodable tuples.
    [[nodiscard]] std::size_t points() const noexcept {
      return _bits.size();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _bits.count();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _bits.none();
    }

    [[nodiscard]] bool contains(std::size_t code) const noexcept {
      return _bits.test(code);
    }
    [[nodiscard]] bool contains(std::span<Element const> t) const;

    void insert(std::size_t code);
    void insert(std::span<Element const> t);
    void erase(std::size_t code);

    [[nodiscard]] Bitset const& bits() const noexcept {
      return _bits;
    }

    template <typename F>
    void for_each_code(F&& f) const {
      _bits.for_each(std::forward<F>(f));
    }

    //! Members in ascending code order.
    [[nodiscard]] std::vector<Tuple> tuples() const;
    [[nodiscard]] std::vector<std::size_t> codes() const;

    [[nodiscard]] bool is_subset_of(FiniteRelation const& that) const;

    FiniteRelation& operator&=(FiniteRelation const& that);
    FiniteRelation& operator|=(FiniteRelation const& that);

    [[nodiscard]] std::size_t hash() const noexcept {
      return _bits.hash() ^ (_m * 0x9e3779b1U);
    }

    friend bool operator==(FiniteRelation const&,
                           FiniteRelation const&) = default;

    //! Orders first by (n, m), then by the bitset read as an integer.
    friend bool operator<(FiniteRelation const& a, FiniteRelation const& b) {
      if (a._n != b._n) {
        return a._n < b._n;
      }
      if (a._m != b._m) {
        return a._m < b._m;
      }
      return a._bits < b._bits;
    }

   private:
    void require_compatible(FiniteRelation const& that) const;

    std::size_t _n;
    std::size_t _m;
    Bitset      _bits;
  };

  struct RelationHash {
    std::size_t operator()(FiniteRelation const& r) const noexcept {
      return r.hash();
    }
  };

  [[nodiscard]] FiniteRelation intersect(FiniteRelation const& a,
                                         FiniteRelation const& b);

  //! Square matrix of universe elements, stored row-major.
  class Matrix {
   public:
    Matrix(std::size_t n, std::size_t order);
    Matrix(std::size_t n, std::size_t order, std::vector<Element> entries);

    [[nodiscard]] std::size_t universe_size() const noexcept {
      return _n;
    }
    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }
    [[nodiscard]] Element at(std::size_t i, std::size_t j) const {
      return _entries[i * _order + j];
    }
    void set(std::size_t i, std::size_t j, Element v);

    [[nodiscard]] Tuple row(std::size_t i) const;
    [[nodiscard]] Tuple column(std::size_t j) const;
    [[nodiscard]] Tuple diagonal() const;

    [[nodiscard]] std::vector<Element> const& entries() const noexcept {
      return _entries;
    }

    friend bool operator==(Matrix const&, Matrix const&) = default;

   private:
    std::size_t          _n;
    std::size_t          _order;
    std::vector<Element> _entries;
  };

  //! A map alpha : {0..s-1} -> {0..m-1} on coordinate positions.
  class IndexMap {
   public:
    IndexMap(std::size_t target_arity, std::vector<std::size_t> map);

    [[nodiscard]] static IndexMap identity(std::size_t m);

    [[nodiscard]] std::size_t source_arity() const noexcept {
      return _map.size();
    }
    [[nodiscard]] std::size_t target_arity() const noexcept {
      return _target;
    }
    [[nodiscard]] std::size_t operator[](std::size_t i) const {
      return _map[i];
    }
    [[nodiscard]] std::vector<std::size_t> const& values() const noexcept {
      return _map;
    }
    [[nodiscard]] bool is_bijection() const noexcept;
    //! Throws ArityError unless is_bijection().
    [[nodiscard]] IndexMap inverse() const;

    friend bool operator==(IndexMap const&, IndexMap const&) = default;

   private:
    std::size_t              _target;
    std::vector<std::size_t> _map;
  };

  //! A surjection lambda : {0..n-1} -> {0..n'-1}.
  class SurjectiveMap {
   public:
    SurjectiveMap(std::size_t target_size, std::vector<Element> map);

    [[nodiscard]] std::size_t source_size() const noexcept {
      return _map.size();
    }
    [[nodiscard]] std::size_t target_size() const noexcept {
      return _target;
    }
    [[nodiscard]] Element operator()(Element a) const {
      return _map[a];
    }
    [[nodiscard]] std::vector<Element> const& values() const noexcept {
      return _map;
    }

   private:
    std::size_t          _target;
    std::vector<Element> _map;
  };

  //! The diagonal relation {a : i ~ j => a_i = a_j} where `index_blocks[i]`
  //! labels the block of coordinate i in a partition of {0..m-1}.
  [[nodiscard]] FiniteRelation
  diagonal_relation(std::size_t n, std::vector<std::size_t> const& index_blocks);

  //! Delta_A^(m) = {(a, ..., a)}.
  [[nodiscard]] FiniteRelation constant_tuples(std::size_t n, std::size_t m);

}  // namespace gq

template <>
struct std::hash<gq::FiniteRelation> {
  std::size_t operator()(gq::FiniteRelation const& r) const noexcept {
    return r.hash();
  }
};
