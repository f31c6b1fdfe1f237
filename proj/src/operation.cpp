#include "gq/operation.hpp"

#include <algorithm>
#include <sstream>

#include "gq/analysis.hpp"
#include "gq/io.hpp"

namespace gq {

  FiniteOperation::FiniteOperation(std::size_t n, std::size_t k, std::vector<Element> table)
      : _n(n), _k(k), _table(std::move(table)) {
    if (n == 0) {
      throw RangeError("universe must be nonempty");
    }
    std::size_t const size = checked_points(n, k);
    if (_table.size() != size) {
      throw ArityError("operation table has " + std::to_string(_table.size())
                       + " entries, expected " + std::to_string(size));
    }
    for (auto v : _table) {
      if (v >= n) {
        throw RangeError("table value " + std::to_string(v) + " outside 0.."
                         + std::to_string(n - 1));
      }
    }
  }

  FiniteOperation FiniteOperation::from_function(
      std::size_t n, std::size_t k, std::function<Element(std::span<Element const>)> f) {
    std::size_t const    size = checked_points(n, k);
    std::vector<Element> table(size);
    Tuple                args(k);
    for (std::size_t code = 0; code < size; ++code) {
      decode_tuple(code, n, args);
      table[code] = f(args);
    }
    return FiniteOperation(n, k, std::move(table));
  }

  FiniteOperation FiniteOperation::identity(std::size_t n) {
    return projection(n, 1, 0);
  }

  FiniteOperation FiniteOperation::projection(std::size_t n, std::size_t k, std::size_t i) {
    if (i >= k) {
      throw RangeError("projection index " + std::to_string(i) + " for arity "
                       + std::to_string(k));
    }
    return from_function(n, k, [i](std::span<Element const> x) { return x[i]; });
  }

  FiniteOperation FiniteOperation::constant(std::size_t n, Element a, std::size_t k) {
    if (a >= n) {
      throw RangeError("constant " + std::to_string(a) + " outside the universe");
    }
    return FiniteOperation(n, k, std::vector<Element>(checked_points(n, k), a));
  }

  Element FiniteOperation::operator()(std::span<Element const> args) const {
    if (args.size() != _k) {
      throw ArityError("operation of arity " + std::to_string(_k) + " applied to "
                       + std::to_string(args.size()) + " arguments");
    }
    return _table[encode_tuple(args, _n)];
  }

  FiniteOperation op_and(std::size_t n) {
    return FiniteOperation::from_function(
        n, 2, [](std::span<Element const> x) { return std::min(x[0], x[1]); });
  }

  FiniteOperation op_or(std::size_t n) {
    return FiniteOperation::from_function(
        n, 2, [](std::span<Element const> x) { return std::max(x[0], x[1]); });
  }

  FiniteOperation op_not(std::size_t n) {
    return FiniteOperation::from_function(n, 1, [n](std::span<Element const> x) {
      return static_cast<Element>(n - 1 - x[0]);
    });
  }

  FiniteOperation rect_band(std::size_t n0) {
    return FiniteOperation::from_function(
        n0 * n0, 2, [n0](std::span<Element const> x) {
          Element const a = x[0] / n0;
          Element const d = x[1] % n0;
          return static_cast<Element>(a * n0 + d);
        });
  }

  Element apply(FiniteOperation const& f, Tuple const& args) {
    return f(args);
  }

  Tuple apply_rows(FiniteOperation const& f, std::vector<Tuple> const& rows) {
    if (rows.size() != f.arity()) {
      throw ArityError("operation of arity " + std::to_string(f.arity())
                       + " applied to " + std::to_string(rows.size()) + " rows");
    }
    if (rows.empty()) {
      throw ArityError("a nullary operation needs the row length explicitly");
    }
    std::size_t const m = rows.front().size();
    Tuple             out(m);
    Tuple             args(rows.size());
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m) {
          throw ArityError("rows of different lengths");
        }
        args[r] = rows[r][j];
      }
      out[j] = f(args);
    }
    return out;
  }

  PreservationResult preserves(FiniteOperation const& f, FiniteRelation const& rho) {
    if (f.universe_size() != rho.universe_size()) {
      throw ArityError("operation and relation live on different universes");
    }
    std::size_t const n = rho.universe_size();
    std::size_t const m = rho.arity();
    std::size_t const k = f.arity();

    auto const                members = rho.codes();
    std::size_t const         count   = members.size();
    std::vector<Element>      flat(count * m);
    for (std::size_t r = 0; r < count; ++r) {
      decode_tuple(members[r], n, std::span<Element>(flat.data() + r * m, m));
    }
    if (count == 0 && k > 0) {
      return {};
    }

    // Odometer over k-tuples of members, first index most significant.
    std::vector<std::size_t> idx(k, 0);
    Tuple                    image(m);
    while (true) {
      for (std::size_t j = 0; j < m; ++j) {
        std::size_t arg = 0;
        for (std::size_t r = 0; r < k; ++r) {
          arg = arg * n + flat[idx[r] * m + j];
        }
        image[j] = f.at(arg);
      }
      if (!rho.contains(encode_tuple(image, n))) {
        PreservationResult res{false, {}};
        for (std::size_t r = 0; r < k; ++r) {
          res.witness.emplace_back(flat.begin() + idx[r] * m,
                                   flat.begin() + (idx[r] + 1) * m);
        }
        return res;
      }
      std::size_t r = k;
      while (r > 0 && ++idx[r - 1] == count) {
        idx[--r] = 0;
      }
      if (r == 0) {
        break;
      }
    }
    return {};
  }

  OperationSet translations(FiniteOperation const& f) {
    std::size_t const n = f.universe_size();
    std::size_t const k = f.arity();
    OperationSet      out;
    if (k == 0) {
      out.push_back(FiniteOperation::constant(n, f.at(0)));
      return out;
    }
    Tuple args(k);
    Tuple rest(k - 1);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = 0; c < ipow(n, k - 1); ++c) {
        decode_tuple(c, n, rest);
        std::vector<Element> table(n);
        for (Element x = 0; x < n; ++x) {
          for (std::size_t p = 0, q = 0; p < k; ++p) {
            args[p] = p == i ? x : rest[q++];
          }
          table[x] = f(args);
        }
        out.emplace_back(n, 1, std::move(table));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool xi_holds(FiniteOperation const& f, FiniteRelation const& rho) {
    bool const whole = preserves(f, rho).holds;
    bool       parts = true;
    for (auto const& t : translations(f)) {
      if (!preserves(t, rho).holds) {
        parts = false;
        break;
      }
    }
    return whole == parts;
  }

  bool invariant_under(FiniteRelation const& rho, OperationSet const& gens) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](auto const& g) { return preserves(g, rho).holds; });
  }

  OperationSet end_monoid(std::size_t n, std::vector<FiniteRelation> const& q) {
    OperationSet         out;
    std::vector<Element> table(n);
    for (std::size_t code = 0; code < checked_points(n, n); ++code) {
      decode_tuple(code, n, table);
      FiniteOperation f(n, 1, table);
      bool const ok = std::all_of(q.begin(), q.end(), [&](auto const& rho) {
        return preserves(f, rho).holds;
      });
      if (ok) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  OperationSet pol_bounded(std::size_t                        n,
                           std::vector<FiniteRelation> const& q,
                           std::size_t                        k,
                           std::size_t                        budget,
                           Exec                               exec) {
    std::size_t const cells = checked_points(n, k);
    std::size_t       total = 1;
    for (std::size_t c = 0; c < cells; ++c) {
      if (total > budget / n) {
        throw ResourceError("enumerating " + std::to_string(n) + "^"
                            + std::to_string(cells) + " operations of arity "
                            + std::to_string(k) + " exceeds the budget of "
                            + std::to_string(budget));
      }
      total *= n;
    }
    // Cheap relations first so that most candidates fail fast.
    std::vector<FiniteRelation> rels = q;
    std::stable_sort(rels.begin(), rels.end(), [](auto const& a, auto const& b) {
      return a.size() < b.size();
    });

    auto candidate = [&](std::size_t t) -> std::optional<FiniteOperation> {
      std::vector<Element> table(cells);
      decode_tuple(t, n, table);
      FiniteOperation f(n, k, std::move(table));
      for (auto const& rho : rels) {
        if (!preserves(f, rho).holds) {
          return std::nullopt;
        }
      }
      return f;
    };

    OperationSet out;
    if (exec == Exec::serial) {
      for (std::size_t t = 0; t < total; ++t) {
        if (auto f = candidate(t)) {
          out.push_back(std::move(*f));
        }
      }
      return out;
    }

    std::vector<std::uint8_t> keep(total, 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t t = 0; t < total; ++t) {
      keep[t] = candidate(t).has_value() ? 1 : 0;
    }
    for (std::size_t t = 0; t < total; ++t) {
      if (keep[t]) {
        out.push_back(*candidate(t));
      }
    }
    return out;
  }

  namespace {
    bool leq(FiniteRelation const& rho, Element a, Element b) {
      return rho.contains(static_cast<std::size_t>(a) * rho.universe_size() + b);
    }

    void require_partial_order(FiniteRelation const& rho) {
      if (rho.arity() != 2) {
        throw ClassificationError("not a binary relation");
      }
      std::size_t const n = rho.universe_size();
      for (Element a = 0; a < n; ++a) {
        if (!leq(rho, a, a)) {
          throw ClassificationError("not reflexive at " + std::to_string(a));
        }
      }
      for (Element a = 0; a < n; ++a) {
        for (Element b = a + 1; b < n; ++b) {
          if (leq(rho, a, b) && leq(rho, b, a)) {
            throw ClassificationError("not antisymmetric at (" + std::to_string(a)
                                      + "," + std::to_string(b) + ")");
          }
        }
      }
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          for (Element c = 0; c < n; ++c) {
            if (leq(rho, a, b) && leq(rho, b, c) && !leq(rho, a, c)) {
              throw ClassificationError(
                  "not transitive at (" + std::to_string(a) + ","
                  + std::to_string(b) + "," + std::to_string(c) + ")");
            }
          }
        }
      }
    }

    // Least element of the bound set with respect to rho (or of its
    // reverse when `upper` is false).
    std::optional<Element> best_bound(FiniteRelation const& rho, Element a, Element b, bool upper) {
      std::size_t const    n = rho.universe_size();
      std::vector<Element> bounds;
      for (Element u = 0; u < n; ++u) {
        if (upper ? leq(rho, a, u) && leq(rho, b, u) : leq(rho, u, a) && leq(rho, u, b)) {
          bounds.push_back(u);
        }
      }
      for (auto u : bounds) {
        bool const best = std::all_of(bounds.begin(), bounds.end(), [&](Element v) {
          return upper ? leq(rho, u, v) : leq(rho, v, u);
        });
        if (best) {
          return u;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  LatticeResult lattice_ops_from_order(FiniteRelation const& rho) {
    require_partial_order(rho);
    std::size_t const    n = rho.universe_size();
    std::vector<Element> meet(n * n), join(n * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = a; b < n; ++b) {
        auto const lub = best_bound(rho, a, b, true);
        auto const glb = best_bound(rho, a, b, false);
        if (!lub || !glb) {
          LatticeResult res;
          res.witness      = std::pair{a, b};
          res.missing_join = !lub;
          return res;
        }
        join[a * n + b] = join[b * n + a] = *lub;
        meet[a * n + b] = meet[b * n + a] = *glb;
      }
    }
    LatticeResult res;
    res.ops = LatticeOps{FiniteOperation(n, 2, std::move(meet)),
                         FiniteOperation(n, 2, std::move(join))};
    return res;
  }

  FiniteOperation majority(LatticeOps const& ops) {
    auto const& m = ops.meet;
    auto const& j = ops.join;
    return FiniteOperation::from_function(
        m.universe_size(), 3, [&](std::span<Element const> x) {
          return j({j({m({x[0], x[1]}), m({x[1], x[2]})}), m({x[2], x[0]})});
        });
  }

  namespace {
    // Runs `check` on every assignment of `vars` variables and returns the
    // first failing one.
    template <typename Check>
    IdentityResult for_all_assignments(std::size_t n, std::size_t vars, Check check) {
      std::size_t const total = checked_points(n, vars);
      Tuple             x(vars);
      for (std::size_t code = 0; code < total; ++code) {
        decode_tuple(code, n, x);
        if (!check(x)) {
          return {false, x};
        }
      }
      return {};
    }
  }  // namespace

  IdentityResult check_identity(FiniteOperation const& f,
                                Identity               tag,
                                std::size_t            position,
                                FiniteOperation const* g) {
    std::size_t const n = f.universe_size();
    std::size_t const k = f.arity();
    if (k == 0) {
      throw ArityError("identities need an operation of positive arity");
    }
    switch (tag) {
      case Identity::ID:
        return for_all_assignments(n, 1, [&](Tuple const& x) {
          return f(Tuple(k, x[0])) == x[0];
        });

      case Identity::ABi: {
        if (position >= k) {
          throw ArityError("absorption position " + std::to_string(position)
                           + " for arity " + std::to_string(k));
        }
        Tuple inner(k), outer(k);
        return for_all_assignments(n, 2 * k - 1, [&](Tuple const& v) {
          // v = x_1..x_k, then y_j for j != position
          for (std::size_t j = 0, y = k; j < k; ++j) {
            inner[j] = j == position ? v[position] : v[y++];
          }
          std::copy(v.begin(), v.begin() + k, outer.begin());
          outer[position] = f(inner);
          return f(outer) == f(std::span<Element const>(v.data(), k));
        });
      }

      case Identity::AB: {
        Tuple rows(k), diag(k);
        return for_all_assignments(n, k * k, [&](Tuple const& v) {
          for (std::size_t i = 0; i < k; ++i) {
            rows[i] = f(std::span<Element const>(v.data() + i * k, k));
            diag[i] = v[i * k + i];
          }
          return f(rows) == f(diag);
        });
      }

      case Identity::C: {
        if (g == nullptr) {
          throw ArityError("the commutation identity needs a second operation");
        }
        if (g->universe_size() != n) {
          throw ArityError("operations live on different universes");
        }
        std::size_t const l = g->arity();
        if (l == 0) {
          throw ArityError("identities need an operation of positive arity");
        }
        Tuple grow(l), gvals(k), fcol(k), fvals(l);
        return for_all_assignments(n, k * l, [&](Tuple const& v) {
          // v is the k x l matrix x_ij row-major
          for (std::size_t i = 0; i < k; ++i) {
            std::copy(v.begin() + i * l, v.begin() + (i + 1) * l, grow.begin());
            gvals[i] = (*g)(grow);
          }
          for (std::size_t j = 0; j < l; ++j) {
            for (std::size_t i = 0; i < k; ++i) {
              fcol[i] = v[i * l + j];
            }
            fvals[j] = f(fcol);
          }
          return f(gvals) == (*g)(fvals);
        });
      }
    }
    throw Error("unknown identity");
  }

  FiniteRelation graph_of(FiniteOperation const& f) {
    std::size_t const n = f.universe_size();
    FiniteRelation    out(n, f.arity() + 1);
    for (std::size_t code = 0; code < f.table().size(); ++code) {
      out.insert(code * n + f.at(code));
    }
    return out;
  }

  RectangularReport rectangular_theorem_check(FiniteOperation const& f) {
    RectangularReport rep;
    rep.entropic   = check_identity(f, Identity::C, 0, &f).holds;
    rep.idempotent = check_identity(f, Identity::ID).holds;
    rep.absorptive = check_identity(f, Identity::AB).holds;

    FiniteRelation const graph = graph_of(f);
    rep.graph_transitive       = is_transitive(graph);
    rep.graph_gquord           = rep.graph_transitive && is_reflexive(graph);
    rep.graph_gpord
        = rep.graph_gquord && bin_sym(graph) == constant_tuples(f.universe_size(), 2);

    rep.applicable     = rep.entropic;
    rep.equivalence_ok = !rep.entropic || rep.absorptive == rep.graph_gquord;
    rep.transitive_ok  = !rep.entropic || rep.absorptive == rep.graph_transitive;
    rep.gquord_ok
        = !rep.entropic || (rep.absorptive && rep.idempotent) == rep.graph_gquord;
    rep.gpord_implied_ok
        = !(rep.entropic && rep.idempotent && rep.absorptive) || rep.graph_gpord;
    return rep;
  }

  FiniteOperation parse_operation(std::string_view text) {
    auto const lines = detail::tokenize(text);
    if (lines.empty()) {
      throw ParseError(0, "empty operation");
    }
    auto const& head = lines.front();
    if (head.words.size() != 3 || head.words[0] != "op") {
      throw ParseError(head.number, "expected header \"op <k> <n>\"");
    }
    std::size_t const k = detail::parse_count(head.words[1], head.number);
    std::size_t const n = detail::parse_count(head.words[2], head.number);
    if (n == 0) {
      throw ParseError(head.number, "universe must be nonempty");
    }
    std::size_t const    size = checked_points(n, k);
    std::vector<Element> table;
    std::size_t          last = head.number;
    for (std::size_t l = 1; l < lines.size(); ++l) {
      for (auto const& w : lines[l].words) {
        std::size_t const v = detail::parse_count(w, lines[l].number);
        if (v >= n) {
          throw ParseError(lines[l].number, "value " + w + " outside 0.."
                                                + std::to_string(n - 1));
        }
        if (table.size() == size) {
          throw ParseError(lines[l].number, "more than " + std::to_string(size)
                                                + " table values");
        }
        table.push_back(static_cast<Element>(v));
      }
      last = lines[l].number;
    }
    if (table.size() != size) {
      throw ParseError(last, "expected " + std::to_string(size)
                                 + " table values, got "
                                 + std::to_string(table.size()));
    }
    return FiniteOperation(n, k, std::move(table));
  }

  FiniteOperation builtin_operation(std::string_view                                        name,
                                    std::size_t                                             n,
                                    std::function<FiniteRelation(std::string const&)> const& lookup) {
    auto const lines = detail::tokenize(name);
    if (lines.size() != 1) {
      throw ParseError(0, "expected a single-line operation name");
    }
    auto const& w     = lines.front().words;
    auto        count = [&](std::size_t i) { return detail::parse_count(w[i], 0); };
    auto        arity = [&](std::size_t k) {
      if (w.size() != k) {
        throw ParseError(0, "\"" + w[0] + "\" takes " + std::to_string(k - 1) + " argument(s)");
      }
    };
    if (w[0] == "and" || w[0] == "or" || w[0] == "not") {
      arity(1);
      return w[0] == "and" ? op_and(n) : w[0] == "or" ? op_or(n) : op_not(n);
    }
    if (w[0] == "const") {
      arity(2);
      auto const a = count(1);
      if (a >= n) {
        throw RangeError("constant " + w[1] + " outside the universe");
      }
      return FiniteOperation::constant(n, static_cast<Element>(a));
    }
    if (w[0] == "proj") {
      arity(3);
      return FiniteOperation::projection(n, count(1), count(2));
    }
    if (w[0] == "rect-band") {
      arity(2);
      return rect_band(count(1));
    }
    if (w[0] == "majority-from-order") {
      arity(2);
      if (!lookup) {
        throw ParseError(0, "majority-from-order needs a relation binding");
      }
      auto const lat = lattice_ops_from_order(lookup(w[1]));
      if (!lat.ops) {
        throw ClassificationError("order \"" + w[1] + "\" is not a lattice order");
      }
      return majority(*lat.ops);
    }
    throw ParseError(0, "unknown operation name \"" + w[0] + "\"");
  }

  std::string serialize_operation(FiniteOperation const& f) {
    std::ostringstream out;
    out << "op " << f.arity() << ' ' << f.universe_size() << '\n';
    std::size_t const n = f.universe_size();
    // one line per value of the leading arguments
    std::size_t const width = f.arity() == 0 ? 1 : n;
    for (std::size_t c = 0; c < f.table().size(); ++c) {
      out << f.at(c) << ((c + 1) % width == 0 ? '\n' : ' ');
    }
    return out.str();
  }

}  // namespace gq
