#include "gq/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gq {

  namespace detail {

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++number;
        std::string_view raw = text.substr(pos, end - pos);
        pos                  = end + 1;

        std::istringstream       in{std::string(raw)};
        std::vector<std::string> words;
        std::string              w;
        while (in >> w) {
          words.push_back(w);
        }
        if (words.empty() || words.front().front() == '#') {
          continue;
        }
        out.push_back({number, std::move(words)});
      }
      return out;
    }

    std::size_t parse_count(std::string const& word, std::size_t line) {
      std::size_t value = 0;
      auto [ptr, ec]
          = std::from_chars(word.data(), word.data() + word.size(), value);
      if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw ParseError(line, "expected a non-negative integer, got '"
                                   + word + "'");
      }
      return value;
    }

  }  // namespace detail

  using detail::parse_count;
  using detail::tokenize;

  FiniteRelation parse_relation(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) {
      throw ParseError(0, "missing 'rel <m> <n>' header");
    }
    auto const& head = lines.front();
    if (head.words.size() != 3 || head.words[0] != "rel") {
      throw ParseError(head.number, "expected header 'rel <m> <n>'");
    }
    std::size_t const m = parse_count(head.words[1], head.number);
    std::size_t const n = parse_count(head.words[2], head.number);
    if (m == 0 || n == 0) {
      throw ParseError(head.number, "arity and universe size must be >= 1");
    }
    FiniteRelation rho(n, m);
    Tuple          t(m);
    for (std::size_t k = 1; k < lines.size(); ++k) {
      auto const& line = lines[k];
      if (line.words.size() != m) {
        throw ParseError(line.number,
                         "expected " + std::to_string(m)
                             + " coordinates, got "
                             + std::to_string(line.words.size()));
      }
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t v = parse_count(line.words[i], line.number);
        if (v >= n) {
          throw ParseError(line.number, "coordinate " + std::to_string(v)
                                            + " outside 0.."
                                            + std::to_string(n - 1));
        }
        t[i] = static_cast<Element>(v);
      }
      rho.insert(t);
    }
    return rho;
  }

  std::string serialize_tuple(Tuple const& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i != 0) {
        s += ' ';
      }
      s += std::to_string(t[i]);
    }
    return s;
  }

  std::string serialize_relation(FiniteRelation const& rho) {
    std::string s = "rel " + std::to_string(rho.arity()) + " "
                    + std::to_string(rho.universe_size()) + "\n";
    Tuple t(rho.arity());
    rho.for_each_code([&](std::size_t c) {
      decode_tuple(c, rho.universe_size(), t);
      s += serialize_tuple(t);
      s += '\n';
    });
    return s;
  }

  EquivPartition parse_partition(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) {
      throw ParseError(0, "missing 'part <n>' header");
    }
    auto const& head = lines.front();
    if (head.words.size() != 2 || head.words[0] != "part") {
      throw ParseError(head.number, "expected header 'part <n>'");
    }
    std::size_t const n = parse_count(head.words[1], head.number);
    if (n == 0) {
      throw ParseError(head.number, "universe size must be >= 1");
    }
    std::vector<std::vector<Element>> blocks;
    for (std::size_t k = 1; k < lines.size(); ++k) {
      std::vector<Element> block;
      for (auto const& w : lines[k].words) {
        std::size_t v = parse_count(w, lines[k].number);
        if (v >= n) {
          throw ParseError(lines[k].number,
                           "element " + std::to_string(v) + " outside 0.."
                               + std::to_string(n - 1));
        }
        block.push_back(static_cast<Element>(v));
      }
      blocks.push_back(std::move(block));
    }
    try {
      return EquivPartition::from_blocks(n, blocks);
    } catch (RangeError const& e) {
      throw ParseError(0, e.what());
    }
  }

  std::string serialize_partition(EquivPartition const& psi) {
    std::string s = "part " + std::to_string(psi.universe_size()) + "\n";
    for (auto const& block : psi.blocks()) {
      s += serialize_tuple(block);
      s += '\n';
    }
    return s;
  }

  Matrix parse_matrix(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) {
      throw ParseError(0, "missing 'matrix <m> <n>' header");
    }
    auto const& head = lines.front();
    if (head.words.size() != 3 || head.words[0] != "matrix") {
      throw ParseError(head.number, "expected header 'matrix <m> <n>'");
    }
    std::size_t const m = parse_count(head.words[1], head.number);
    std::size_t const n = parse_count(head.words[2], head.number);
    if (m == 0 || n == 0) {
      throw ParseError(head.number, "order and universe size must be >= 1");
    }
    if (lines.size() != m + 1) {
      throw ParseError(lines.back().number,
                       "expected " + std::to_string(m) + " matrix rows");
    }
    std::vector<Element> entries;
    for (std::size_t k = 1; k <= m; ++k) {
      if (lines[k].words.size() != m) {
        throw ParseError(lines[k].number,
                         "expected " + std::to_string(m) + " entries");
      }
      for (auto const& w : lines[k].words) {
        std::size_t v = parse_count(w, lines[k].number);
        if (v >= n) {
          throw ParseError(lines[k].number,
                           "entry " + std::to_string(v) + " outside 0.."
                               + std::to_string(n - 1));
        }
        entries.push_back(static_cast<Element>(v));
      }
    }
    return Matrix(n, m, std::move(entries));
  }

  std::string serialize_matrix(Matrix const& mat) {
    std::string s = "matrix " + std::to_string(mat.order()) + " "
                    + std::to_string(mat.universe_size()) + "\n";
    for (std::size_t i = 0; i < mat.order(); ++i) {
      s += serialize_tuple(mat.row(i));
      s += '\n';
    }
    return s;
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_file(std::string const& path, std::string const& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error("cannot write '" + path + "'");
    }
    out << contents;
  }

}  // namespace gq
