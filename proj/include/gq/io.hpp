#pragma once

// Text formats.
//
//   relation:   "rel <m> <n>" then one tuple per line (m integers)
//   partition:  "part <n>" then one block per line (its members)
//   matrix:     "matrix <m> <n>" then m rows of m integers
//
// Blank lines and lines whose first non-blank character is '#' are
// ignored.  Serialization is canonical: tuples in ascending code order,
// blocks ordered by least member.

#include <string>
#include <string_view>

#include "gq/partition.hpp"
#include "gq/relation.hpp"

namespace gq {

  [[nodiscard]] FiniteRelation parse_relation(std::string_view text);
  [[nodiscard]] std::string    serialize_relation(FiniteRelation const& rho);

  [[nodiscard]] EquivPartition parse_partition(std::string_view text);
  [[nodiscard]] std::string    serialize_partition(EquivPartition const& psi);

  [[nodiscard]] Matrix      parse_matrix(std::string_view text);
  [[nodiscard]] std::string serialize_matrix(Matrix const& mat);

  [[nodiscard]] std::string serialize_tuple(Tuple const& t);

  //! Whole file contents; throws Error if the file cannot be read.
  [[nodiscard]] std::string read_file(std::string const& path);
  void write_file(std::string const& path, std::string const& contents);

  namespace detail {
    struct Line {
      std::size_t              number;
      std::vector<std::string> words;
    };
    //! Splits into whitespace-separated words, dropping comments and
    //! blank lines.
    [[nodiscard]] std::vector<Line> tokenize(std::string_view text);
    [[nodiscard]] std::size_t parse_count(std::string const& word,
                                          std::size_t        line);
  }  // namespace detail

}  // namespace gq
