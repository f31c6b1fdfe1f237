#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gq {

  // Dense fixed-size bitset; the size is a runtime value.
  class Bitset {
   public:
    Bitset() = default;
    explicit Bitset(std::size_t size)
        : _words((size + 63) / 64, 0), _size(size) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _size;
    }

    [[nodiscard]] bool test(std::size_t i) const noexcept {
      return (_words[i >> 6] >> (i & 63)) & 1U;
    }

    void set(std::size_t i) noexcept {
      _words[i >> 6] |= std::uint64_t(1) << (i & 63);
    }

    void reset(std::size_t i) noexcept {
      _words[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    void set_all() noexcept {
      for (auto& w : _words) {
        w = ~std::uint64_t(0);
      }
      trim();
    }

    [[nodiscard]] std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : _words) {
        c += std::popcount(w);
      }
      return c;
    }

    [[nodiscard]] bool none() const noexcept {
      for (auto w : _words) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] bool is_subset_of(Bitset const& that) const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if ((_words[i] & ~that._words[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    Bitset& operator&=(Bitset const& that) noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] &= that._words[i];
      }
      return *this;
    }

    Bitset& operator|=(Bitset const& that) noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] |= that._words[i];
      }
      return *this;
    }

    // Calls f(i) for every set bit, ascending.
    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t w = 0; w < _words.size(); ++w) {
        std::uint64_t x = _words[w];
        while (x != 0) {
          f(w * 64 + std::countr_zero(x));
          x &= x - 1;
        }
      }
    }

    // Index of the first set bit >= from, or size() if there is none.
    [[nodiscard]] std::size_t find_next(std::size_t from) const noexcept {
      if (from >= _size) {
        return _size;
      }
      std::size_t   w = from >> 6;
      std::uint64_t x = _words[w] & (~std::uint64_t(0) << (from & 63));
      while (true) {
        if (x != 0) {
          return w * 64 + std::countr_zero(x);
        }
        if (++w == _words.size()) {
          return _size;
        }
        x = _words[w];
      }
    }

    [[nodiscard]] std::size_t hash() const noexcept {
      std::uint64_t h = 0xcbf29ce484222325ULL ^ _size;
      for (auto w : _words) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }

    [[nodiscard]] std::vector<std::uint64_t> const& words() const noexcept {
      return _words;
    }

    friend bool operator==(Bitset const&, Bitset const&) = default;

    friend bool operator<(Bitset const& a, Bitset const& b) noexcept {
      // Compares the bitsets as unsigned integers (bit i has weight 2^i).
      if (a._size != b._size) {
        return a._size < b._size;
      }
      for (std::size_t i = a._words.size(); i-- > 0;) {
        if (a._words[i] != b._words[i]) {
          return a._words[i] < b._words[i];
        }
      }
      return false;
    }

   private:
    void trim() noexcept {
      if (_size % 64 != 0 && !_words.empty()) {
        _words.back() &= (std::uint64_t(1) << (_size % 64)) - 1;
      }
    }

    std::vector<std::uint64_t> _words;
    std::size_t                _size = 0;
  };

}  // namespace gq
