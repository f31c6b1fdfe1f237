#include "gq/partition.hpp"

#include <string>

namespace gq {

  EquivPartition::EquivPartition(std::vector<std::size_t> const& labels)
      : _block_of(labels.size()), _index(labels.size()) {
    if (labels.empty()) {
      throw RangeError("partition of an empty universe");
    }
    for (std::size_t x = 0; x < labels.size(); ++x) {
      std::size_t y = 0;
      while (labels[y] != labels[x]) {
        ++y;
      }
      _block_of[x] = static_cast<Element>(y);
      if (y == x) {
        _index[x] = _blocks.size();
        _blocks.push_back({});
      } else {
        _index[x] = _index[y];
      }
      _blocks[_index[x]].push_back(static_cast<Element>(x));
    }
  }

  EquivPartition EquivPartition::discrete(std::size_t n) {
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = i;
    }
    return EquivPartition(labels);
  }

  EquivPartition EquivPartition::single_block(std::size_t n) {
    return EquivPartition(std::vector<std::size_t>(n, 0));
  }

  EquivPartition
  EquivPartition::from_blocks(std::size_t                              n,
                              std::vector<std::vector<Element>> const& blocks) {
    std::size_t const        unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> labels(n, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw RangeError("empty block");
      }
      for (auto x : blocks[b]) {
        if (x >= n) {
          throw RangeError("block element " + std::to_string(x)
                           + " outside the universe");
        }
        if (labels[x] != unset) {
          throw RangeError("element " + std::to_string(x)
                           + " occurs in two blocks");
        }
        labels[x] = b;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (labels[x] == unset) {
        throw RangeError("element " + std::to_string(x)
                         + " is not covered by any block");
      }
    }
    return EquivPartition(labels);
  }

  bool EquivPartition::refines(EquivPartition const& that) const {
    if (universe_size() != that.universe_size()) {
      throw ArityError("partitions over different universes");
    }
    for (std::size_t x = 0; x < universe_size(); ++x) {
      if (!that.related(static_cast<Element>(x), _block_of[x])) {
        return false;
      }
    }
    return true;
  }

  SurjectiveMap EquivPartition::quotient_map() const {
    std::vector<Element> map(universe_size());
    for (std::size_t x = 0; x < map.size(); ++x) {
      map[x] = static_cast<Element>(_index[x]);
    }
    return SurjectiveMap(num_blocks(), std::move(map));
  }

  FiniteRelation partition_to_relation(EquivPartition const& psi) {
    std::size_t const n = psi.universe_size();
    FiniteRelation    r(n, 2);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (psi.related(a, b)) {
          r.insert(a * n + b);
        }
      }
    }
    return r;
  }

  EquivPartition relation_to_partition(FiniteRelation const& rho) {
    if (rho.arity() != 2) {
      throw ClassificationError("not an equivalence relation: arity is "
                                + std::to_string(rho.arity()) + ", not 2");
    }
    std::size_t const n = rho.universe_size();
    for (Element a = 0; a < n; ++a) {
      if (!rho.contains(a * n + a)) {
        throw ClassificationError(
            "not an equivalence relation: reflexivity fails at ("
            + std::to_string(a) + "," + std::to_string(a) + ")");
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (rho.contains(a * n + b) && !rho.contains(b * n + a)) {
          throw ClassificationError(
              "not an equivalence relation: symmetry fails, ("
              + std::to_string(a) + "," + std::to_string(b) + ") present but ("
              + std::to_string(b) + "," + std::to_string(a) + ") missing");
        }
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!rho.contains(a * n + b)) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          if (rho.contains(b * n + c) && !rho.contains(a * n + c)) {
            throw ClassificationError(
                "not an equivalence relation: transitivity fails, ("
                + std::to_string(a) + "," + std::to_string(c)
                + ") missing");
          }
        }
      }
    }
    std::vector<std::size_t> labels(n);
    for (Element a = 0; a < n; ++a) {
      Element b = 0;
      while (!rho.contains(a * n + b)) {
        ++b;
      }
      labels[a] = b;
    }
    return EquivPartition(labels);
  }

  std::vector<EquivPartition> all_partitions(std::size_t n) {
    std::vector<EquivPartition> out;
    std::vector<std::size_t>    rgs(n, 0);
    std::vector<std::size_t>    max_prefix(n, 0);
    while (true) {
      out.emplace_back(rgs);
      // Advance the restricted growth string (rgs[i] <= 1 + max rgs[<i]).
      std::size_t i = n;
      while (i-- > 1) {
        if (rgs[i] <= max_prefix[i - 1]) {
          ++rgs[i];
          max_prefix[i] = std::max(max_prefix[i - 1], rgs[i]);
          for (std::size_t j = i + 1; j < n; ++j) {
            rgs[j]        = 0;
            max_prefix[j] = max_prefix[j - 1];
          }
          break;
        }
      }
      if (i == 0 || i == static_cast<std::size_t>(-1)) {
        break;
      }
    }
    return out;
  }

}  // namespace gq
