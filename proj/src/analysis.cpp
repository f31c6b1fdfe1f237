#include "gq/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gq/io.hpp"
#include "gq/matrix_search.hpp"

namespace gq {

  std::optional<Element> reflexivity_witness(FiniteRelation const& rho) {
    std::size_t const n = rho.universe_size();
    std::size_t const m = rho.arity();
    // code of (a, ..., a) is a * (1 + n + ... + n^(m-1))
    std::size_t unit = 0;
    for (std::size_t i = 0; i < m; ++i) {
      unit = unit * n + 1;
    }
    for (Element a = 0; a < n; ++a) {
      if (!rho.contains(a * unit)) {
        return a;
      }
    }
    return std::nullopt;
  }

  bool models_matrix(FiniteRelation const& rho, Matrix const& mat) {
    if (mat.order() != rho.arity()) {
      throw ArityError("matrix order " + std::to_string(mat.order())
                       + " does not match relation arity "
                       + std::to_string(rho.arity()));
    }
    if (mat.universe_size() != rho.universe_size()) {
      throw ArityError("matrix and relation live on different universes");
    }
    for (std::size_t i = 0; i < mat.order(); ++i) {
      if (!rho.contains(mat.row(i)) || !rho.contains(mat.column(i))) {
        return false;
      }
    }
    return true;
  }

  TransitivityResult check_transitive(FiniteRelation const& rho) {
    std::size_t const n = rho.universe_size();
    std::size_t const m = rho.arity();
    MatrixSearch      search(rho);
    Tuple             diag(m);
    for (std::size_t code = 0; code < rho.points(); ++code) {
      if (rho.contains(code)) {
        continue;
      }
      decode_tuple(code, n, diag);
      if (auto mat = search.find_with_diagonal(diag)) {
        return {false, std::move(mat)};
      }
    }
    return {true, std::nullopt};
  }

  FiniteRelation delta_step(FiniteRelation const& rho) {
    std::size_t const n = rho.universe_size();
    std::size_t const m = rho.arity();
    MatrixSearch      search(rho);
    FiniteRelation    out(n, m);
    Tuple             diag(m);
    for (std::size_t code = 0; code < rho.points(); ++code) {
      decode_tuple(code, n, diag);
      if (search.has_diagonal(diag)) {
        out.insert(code);
      }
    }
    return out;
  }

  FiniteRelation transitive_closure(FiniteRelation const& rho) {
    std::size_t const n       = rho.universe_size();
    std::size_t const m       = rho.arity();
    FiniteRelation    current = rho;
    Tuple             diag(m);
    while (true) {
      MatrixSearch   search(current);
      FiniteRelation next = current;
      for (std::size_t code = 0; code < current.points(); ++code) {
        if (current.contains(code)) {
          continue;
        }
        decode_tuple(code, n, diag);
        if (search.has_diagonal(diag)) {
          next.insert(code);
        }
      }
      if (next == current) {
        return current;
      }
      current = std::move(next);
    }
  }

  FiniteRelation apply_index_map(FiniteRelation const& rho,
                                 IndexMap const&       alpha) {
    if (alpha.target_arity() != rho.arity()) {
      throw ArityError("index map targets arity "
                       + std::to_string(alpha.target_arity())
                       + ", relation arity is " + std::to_string(rho.arity()));
    }
    std::size_t const n = rho.universe_size();
    FiniteRelation    out(n, alpha.source_arity());
    Tuple             t(rho.arity());
    Tuple             u(alpha.source_arity());
    rho.for_each_code([&](std::size_t code) {
      decode_tuple(code, n, t);
      for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = t[alpha[i]];
      }
      out.insert(encode_tuple(u, n));
    });
    return out;
  }

  FiniteRelation tos(FiniteRelation const& rho) {
    // Largest subset closed under the adjacent transpositions, which
    // generate the symmetric group.
    std::size_t const n       = rho.universe_size();
    std::size_t const m       = rho.arity();
    FiniteRelation    current = rho;
    Tuple             t(m);
    bool              changed = true;
    while (changed) {
      changed = false;
      for (auto code : current.codes()) {
        decode_tuple(code, n, t);
        for (std::size_t i = 0; i + 1 < m; ++i) {
          std::swap(t[i], t[i + 1]);
          bool const in = current.contains(encode_tuple(t, n));
          std::swap(t[i], t[i + 1]);
          if (!in) {
            current.erase(code);
            changed = true;
            break;
          }
        }
      }
    }
    return current;
  }

  namespace {
    // Is S^m inside rho, where S is the set of values of t?
    class CubeCache {
     public:
      explicit CubeCache(FiniteRelation const& rho) : _rho(rho) {}

      bool cube_inside(Tuple const& t) {
        std::vector<Element> values(t);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        auto it = _cache.find(values);
        if (it != _cache.end()) {
          return it->second;
        }
        bool result = compute(values);
        _cache.emplace(std::move(values), result);
        return result;
      }

     private:
      bool compute(std::vector<Element> const& values) const {
        std::size_t const m = _rho.arity();
        std::size_t const k = values.size();
        Tuple             u(m);
        for (std::size_t idx = 0; idx < ipow(k, m); ++idx) {
          std::size_t x = idx;
          for (std::size_t i = m; i-- > 0;) {
            u[i] = values[x % k];
            x /= k;
          }
          if (!_rho.contains(encode_tuple(u, _rho.universe_size()))) {
            return false;
          }
        }
        return true;
      }

      FiniteRelation const&                  _rho;
      std::map<std::vector<Element>, bool> _cache;
    };
  }  // namespace

  FiniteRelation abs(FiniteRelation const& rho) {
    std::size_t const n = rho.universe_size();
    FiniteRelation    out(n, rho.arity());
    CubeCache         cache(rho);
    Tuple             t(rho.arity());
    rho.for_each_code([&](std::size_t code) {
      decode_tuple(code, n, t);
      if (cache.cube_inside(t)) {
        out.insert(code);
      }
    });
    return out;
  }

  FiniteRelation bin_sym(FiniteRelation const& rho) {
    std::size_t const n = rho.universe_size();
    FiniteRelation    out(n, 2);
    CubeCache         cache(rho);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (cache.cube_inside({a, b})) {
          out.insert(a * n + b);
        }
      }
    }
    return out;
  }

  EquivPartition exchange_eq(FiniteRelation const& rho) {
    // key[a] records, for every position i and every context (the other
    // m - 1 coordinates), whether placing a at position i yields a member.
    std::size_t const n       = rho.universe_size();
    std::size_t const m       = rho.arity();
    std::size_t const context = ipow(n, m - 1);
    std::vector<Bitset> key(n, Bitset(m * context));
    Tuple               t(m);
    rho.for_each_code([&](std::size_t code) {
      decode_tuple(code, n, t);
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t const low_weight = ipow(n, m - 1 - i);
        std::size_t const high       = code / (low_weight * n);
        std::size_t const low        = code % low_weight;
        key[t[i]].set(i * context + high * low_weight + low);
      }
    });
    std::vector<std::size_t> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t b = 0;
      while (!(key[b] == key[a])) {
        ++b;
      }
      labels[a] = b;
    }
    return EquivPartition(labels);
  }

  FiniteRelation lift_partition(EquivPartition const& psi, std::size_t m) {
    std::size_t const n = psi.universe_size();
    FiniteRelation    out(n, m);
    Tuple             t(m);
    for (std::size_t code = 0; code < out.points(); ++code) {
      decode_tuple(code, n, t);
      bool ok = true;
      for (std::size_t i = 1; i < m && ok; ++i) {
        ok = psi.related(t[0], t[i]);
      }
      if (ok) {
        out.insert(code);
      }
    }
    return out;
  }

  FiniteRelation lift_relation(FiniteRelation const& psi, std::size_t m) {
    if (psi.arity() != 2) {
      throw ArityError("lifting needs a binary relation");
    }
    std::size_t const n = psi.universe_size();
    FiniteRelation    out(n, m);
    Tuple             t(m);
    for (std::size_t code = 0; code < out.points(); ++code) {
      decode_tuple(code, n, t);
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) {
        for (std::size_t j = 0; j < m && ok; ++j) {
          ok = psi.contains(t[i] * n + t[j]);
        }
      }
      if (ok) {
        out.insert(code);
      }
    }
    return out;
  }

  std::optional<Tuple> total_symmetry_witness(FiniteRelation const& rho) {
    std::size_t const    n = rho.universe_size();
    std::size_t const    m = rho.arity();
    std::optional<Tuple> found;
    Tuple                t(m);
    // Closure under adjacent transpositions of each member suffices.
    rho.for_each_code([&](std::size_t code) {
      if (found) {
        return;
      }
      decode_tuple(code, n, t);
      for (std::size_t i = 0; i + 1 < m; ++i) {
        std::swap(t[i], t[i + 1]);
        bool const in = rho.contains(encode_tuple(t, n));
        std::swap(t[i], t[i + 1]);
        if (!in) {
          found = t;
          return;
        }
      }
    });
    return found;
  }

  std::optional<Tuple> absolute_symmetry_witness(FiniteRelation const& rho) {
    std::size_t const    n = rho.universe_size();
    std::optional<Tuple> found;
    CubeCache            cache(rho);
    Tuple                t(rho.arity());
    rho.for_each_code([&](std::size_t code) {
      if (found) {
        return;
      }
      decode_tuple(code, n, t);
      if (!cache.cube_inside(t)) {
        found = t;
      }
    });
    return found;
  }

  bool is_gquord(FiniteRelation const& rho) {
    return is_reflexive(rho) && is_transitive(rho);
  }

  bool is_totally_symmetric(FiniteRelation const& rho) {
    return !total_symmetry_witness(rho).has_value();
  }

  ClassificationReport classify(FiniteRelation const& rho) {
    std::size_t const    n = rho.universe_size();
    std::size_t const    m = rho.arity();
    ClassificationReport rep;
    rep.empty               = rho.empty();
    rep.reflexivity_witness = reflexivity_witness(rho);
    rep.reflexive           = !rep.reflexivity_witness.has_value();

    rep.symmetry_witness          = total_symmetry_witness(rho);
    rep.totally_symmetric         = !rep.symmetry_witness.has_value();
    rep.absolute_symmetry_witness = absolute_symmetry_witness(rho);
    rep.absolutely_symmetric      = !rep.absolute_symmetry_witness.has_value();

    auto trans               = check_transitive(rho);
    rep.transitive           = trans.holds;
    rep.transitivity_witness = std::move(trans.witness);

    FiniteRelation const symmetric_part = tos(rho);
    Tuple                t(m);
    symmetric_part.for_each_code([&](std::size_t code) {
      if (rep.antisymmetry_witness) {
        return;
      }
      decode_tuple(code, n, t);
      if (std::any_of(t.begin(), t.end(), [&](Element x) { return x != t[0]; })) {
        rep.antisymmetry_witness = t;
      }
    });
    rep.antisymmetric = !rep.antisymmetry_witness.has_value();

    FiniteRelation const binary = bin_sym(rho);
    for (Element a = 0; a < n && !rep.bin_sym_witness; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (a != b && binary.contains(a * n + b)) {
          rep.bin_sym_witness = std::make_pair(a, b);
          break;
        }
      }
    }
    rep.bin_sym_trivial = !rep.bin_sym_witness.has_value();

    EquivPartition const exch = exchange_eq(rho);
    for (Element a = 0; a < n; ++a) {
      if (exch.block_of(a) != a) {
        rep.exchange_witness = std::make_pair(exch.block_of(a), a);
        break;
      }
    }
    rep.exchange_trivial = !rep.exchange_witness.has_value();

    rep.is_gquord     = rep.reflexive && rep.transitive;
    rep.is_geq        = rep.is_gquord && rep.totally_symmetric;
    rep.is_gtolerance = rep.reflexive && rep.totally_symmetric;
    rep.is_gpord      = rep.is_gquord && rep.bin_sym_trivial;
    rep.is_wgpord     = rep.is_gquord && rep.exchange_trivial;
    return rep;
  }

  std::string format_report(ClassificationReport const& rep) {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    std::string s;
    auto line = [&](char const* key, std::string const& value) {
      s += key;
      s += '=';
      s += value;
      s += '\n';
    };
    line("empty", flag(rep.empty));
    line("reflexive", flag(rep.reflexive));
    if (rep.reflexivity_witness) {
      line("reflexivity_witness", std::to_string(*rep.reflexivity_witness));
    }
    line("totally_symmetric", flag(rep.totally_symmetric));
    if (rep.symmetry_witness) {
      line("symmetry_witness", serialize_tuple(*rep.symmetry_witness));
    }
    line("absolutely_symmetric", flag(rep.absolutely_symmetric));
    if (rep.absolute_symmetry_witness) {
      line("absolute_symmetry_witness",
           serialize_tuple(*rep.absolute_symmetry_witness));
    }
    line("antisymmetric", flag(rep.antisymmetric));
    if (rep.antisymmetry_witness) {
      line("antisymmetry_witness", serialize_tuple(*rep.antisymmetry_witness));
    }
    line("transitive", flag(rep.transitive));
    if (rep.transitivity_witness) {
      line("transitivity_witness_diagonal",
           serialize_tuple(rep.transitivity_witness->diagonal()));
      // The matrix itself follows as an indented block.
      auto const mat = serialize_matrix(*rep.transitivity_witness);
      for (std::size_t pos = 0; pos < mat.size();) {
        auto const end = mat.find('\n', pos);
        s += "  ";
        s += mat.substr(pos, end - pos);
        s += '\n';
        pos = end == std::string::npos ? mat.size() : end + 1;
      }
    }
    line("bin_sym_trivial", flag(rep.bin_sym_trivial));
    if (rep.bin_sym_witness) {
      line("bin_sym_witness", std::to_string(rep.bin_sym_witness->first) + " "
                                  + std::to_string(rep.bin_sym_witness->second));
    }
    line("exchange_trivial", flag(rep.exchange_trivial));
    if (rep.exchange_witness) {
      line("exchange_witness",
           std::to_string(rep.exchange_witness->first) + " "
               + std::to_string(rep.exchange_witness->second));
    }
    line("gquord", flag(rep.is_gquord));
    line("geq", flag(rep.is_geq));
    line("gtolerance", flag(rep.is_gtolerance));
    line("gpord", flag(rep.is_gpord));
    line("wgpord", flag(rep.is_wgpord));
    return s;
  }

}  // namespace gq
