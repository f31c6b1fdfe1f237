#pragma once

#include <cstddef>
#include <vector>

#include "gq/relation.hpp"

namespace gq {

  //! An equivalence relation on {0..n-1} stored as a block partition.
  //! block_of(x) is the least element of the block containing x.
  class EquivPartition {
   public:
    //! Elements with equal labels are put in the same block; any label
    //! values are accepted.
    explicit EquivPartition(std::vector<std::size_t> const& labels);

    [[nodiscard]] static EquivPartition discrete(std::size_t n);
    [[nodiscard]] static EquivPartition single_block(std::size_t n);
    [[nodiscard]] static EquivPartition
    from_blocks(std::size_t n, std::vector<std::vector<Element>> const& blocks);

    [[nodiscard]] std::size_t universe_size() const noexcept {
      return _block_of.size();
    }
    //! Canonical representative: the least member of x's block.
    [[nodiscard]] Element block_of(Element x) const {
      return _block_of[x];
    }
    //! Position of x's block when blocks are ordered by least member.
    [[nodiscard]] std::size_t block_index(Element x) const {
      return _index[x];
    }
    [[nodiscard]] std::size_t num_blocks() const noexcept {
      return _blocks.size();
    }
    //! Blocks in canonical order, members ascending.
    [[nodiscard]] std::vector<std::vector<Element>> const&
    blocks() const noexcept {
      return _blocks;
    }
    [[nodiscard]] std::vector<Element> const& block_ids() const noexcept {
      return _block_of;
    }
    [[nodiscard]] bool related(Element a, Element b) const {
      return _block_of[a] == _block_of[b];
    }
    [[nodiscard]] bool is_discrete() const noexcept {
      return _blocks.size() == _block_of.size();
    }
    //! True if every block of *this is contained in a block of that.
    [[nodiscard]] bool refines(EquivPartition const& that) const;

    //! The canonical map x -> block_index(x) onto A / psi.
    [[nodiscard]] SurjectiveMap quotient_map() const;

    friend bool operator==(EquivPartition const& a, EquivPartition const& b) {
      return a._block_of == b._block_of;
    }

   private:
    std::vector<Element>              _block_of;
    std::vector<std::size_t>          _index;
    std::vector<std::vector<Element>> _blocks;
  };

  [[nodiscard]] FiniteRelation partition_to_relation(EquivPartition const& psi);

  //! Throws ClassificationError naming the first violated axiom
  //! (arity, reflexivity, symmetry, transitivity).
  [[nodiscard]] EquivPartition relation_to_partition(FiniteRelation const& rho);

  //! All equivalence relations on {0..n-1}, via restricted growth strings.
  [[nodiscard]] std::vector<EquivPartition> all_partitions(std::size_t n);

}  // namespace gq
