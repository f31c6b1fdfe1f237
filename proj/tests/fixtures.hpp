#pragma once

#include <string>

#include "gq/io.hpp"
#include "gq/relation.hpp"

namespace fixture {

  inline std::string corpus_path(std::string const& name) {
    return std::string(GQ_CORPUS_DIR) + "/" + name;
  }

  inline gq::FiniteRelation corpus_relation(std::string const& name) {
    return gq::parse_relation(gq::read_file(corpus_path(name)));
  }

  //! 0 <= 1 <= ... <= n-1.
  inline gq::FiniteRelation chain(std::size_t n) {
    gq::FiniteRelation r(n, 2);
    for (gq::Element a = 0; a < n; ++a) {
      for (gq::Element b = a; b < n; ++b) {
        r.insert(gq::Tuple{a, b});
      }
    }
    return r;
  }

  inline gq::FiniteRelation equality(std::size_t n) {
    return gq::constant_tuples(n, 2);
  }

}  // namespace fixture
