#include "gq/formula.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "gq/construct.hpp"
#include "gq/io.hpp"

namespace gq {

  void RelationStore::add(std::string name, FiniteRelation rho) {
    if (name == equality_name) {
      throw Error("the name \"eq\" is reserved for equality");
    }
    _rels.insert_or_assign(std::move(name), std::move(rho));
  }

  FiniteRelation const& RelationStore::get(std::string const& name) const {
    auto it = _rels.find(name);
    if (it == _rels.end()) {
      throw Error("unknown relation \"" + name + "\"");
    }
    return it->second;
  }

  std::vector<std::string> RelationStore::names() const {
    std::vector<std::string> out;
    for (auto const& [name, rho] : _rels) {
      out.push_back(name);
    }
    return out;
  }

  namespace {
    FiniteRelation conjunction(std::vector<Atom> const& atoms,
                               std::size_t              vars,
                               RelationStore const&     env,
                               std::size_t              n) {
      static_cast<void>(checked_points(n, vars));
      FiniteRelation const eq  = constant_tuples(n, 2);
      FiniteRelation       out = FiniteRelation::full(n, vars);
      for (auto const& atom : atoms) {
        FiniteRelation const& sigma
            = atom.relation == equality_name ? eq : env.get(atom.relation);
        if (sigma.universe_size() != n) {
          throw ArityError("relation \"" + atom.relation + "\" lives on "
                           + std::to_string(sigma.universe_size())
                           + " elements, formula on " + std::to_string(n));
        }
        if (atom.vars.target_arity() != vars) {
          throw ArityError("atom over " + std::to_string(atom.vars.target_arity())
                           + " variables in a formula with "
                           + std::to_string(vars));
        }
        out &= cylinder(sigma, atom.vars);
        if (out.empty()) {
          break;
        }
      }
      return out;
    }
  }  // namespace

  FiniteRelation eval_qfpp(QfPpFormula const&   phi,
                           RelationStore const& env,
                           std::size_t          n) {
    return conjunction(phi.atoms, phi.free_count, env, n);
  }

  FiniteRelation eval_pp(PpFormula const&     phi,
                         RelationStore const& env,
                         std::size_t          n,
                         std::size_t          bound_limit) {
    if (phi.bound_count > bound_limit) {
      throw ResourceError(std::to_string(phi.bound_count)
                          + " bound variables exceed the limit of "
                          + std::to_string(bound_limit));
    }
    FiniteRelation const body
        = conjunction(phi.atoms, phi.free_count + phi.bound_count, env, n);
    // Bound variables are the least significant coordinates.
    std::size_t const tail = ipow(n, phi.bound_count);
    FiniteRelation    out(n, phi.free_count);
    body.for_each_code([&](std::size_t code) { out.insert(code / tail); });
    return out;
  }

  std::vector<FiniteRelation>
  qfpp_atoms(std::size_t n, std::vector<FiniteRelation> const& q, std::size_t m) {
    std::vector<FiniteRelation> gens = q;
    gens.push_back(constant_tuples(n, 2));

    std::unordered_set<FiniteRelation> seen;
    seen.insert(FiniteRelation::full(n, m));
    for (auto const& sigma : gens) {
      if (sigma.universe_size() != n) {
        throw ArityError("generator relation on the wrong universe");
      }
      std::size_t const        s = sigma.arity();
      std::vector<std::size_t> alpha(s, 0);
      for (std::size_t k = 0; k < ipow(m, s); ++k) {
        std::size_t rest = k;
        for (std::size_t i = s; i-- > 0;) {
          alpha[i] = rest % m;
          rest /= m;
        }
        seen.insert(cylinder(sigma, IndexMap(m, alpha)));
      }
    }
    std::vector<FiniteRelation> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<FiniteRelation> qfpp_closure(std::size_t                        n,
                                           std::vector<FiniteRelation> const& q,
                                           std::size_t                        m,
                                           std::size_t budget) {
    auto const atoms = qfpp_atoms(n, q, m);

    std::unordered_set<FiniteRelation> seen;
    std::vector<FiniteRelation>        found;
    auto add = [&](FiniteRelation rho) {
      if (seen.insert(rho).second) {
        found.push_back(std::move(rho));
        if (found.size() > budget) {
          throw ResourceError("qf-pp closure exceeds the budget of "
                              + std::to_string(budget) + " relations ("
                              + std::to_string(found.size()) + " found so far)");
        }
      }
    };
    // After processing atoms a_1..a_k, `found` holds every intersection
    // of a subset of them.
    add(FiniteRelation::full(n, m));
    for (auto const& atom : atoms) {
      std::size_t const before = found.size();
      for (std::size_t i = 0; i < before; ++i) {
        add(intersect(found[i], atom));
      }
    }
    std::sort(found.begin(), found.end());
    return found;
  }

  FiniteRelation qfpp_hull(FiniteRelation const&              sigma,
                           std::vector<FiniteRelation> const& atoms) {
    FiniteRelation hull = FiniteRelation::full(sigma.universe_size(), sigma.arity());
    for (auto const& atom : atoms) {
      if (sigma.is_subset_of(atom)) {
        hull &= atom;
      }
    }
    return hull;
  }

  bool in_qfpp_closure(FiniteRelation const&              sigma,
                       std::vector<FiniteRelation> const& q) {
    auto const atoms = qfpp_atoms(sigma.universe_size(), q, sigma.arity());
    return qfpp_hull(sigma, atoms) == sigma;
  }

  PpFormula parse_formula(std::string_view text) {
    auto const lines = detail::tokenize(text);
    if (lines.empty()) {
      throw ParseError(0, "empty formula");
    }
    auto const& head = lines.front();
    if (head.words.size() != 4 || head.words[0] != "free"
        || head.words[2] != "bound") {
      throw ParseError(head.number, "expected header \"free <m> bound <s>\"");
    }
    PpFormula phi;
    phi.free_count  = detail::parse_count(head.words[1], head.number);
    phi.bound_count = detail::parse_count(head.words[3], head.number);
    std::size_t const vars = phi.free_count + phi.bound_count;
    if (vars == 0) {
      throw ParseError(head.number, "a formula needs at least one variable");
    }
    for (std::size_t l = 1; l < lines.size(); ++l) {
      auto const& line = lines[l];
      if (line.words.size() < 3 || line.words[0] != "atom") {
        throw ParseError(line.number,
                         "expected \"atom <relation> <variables...>\"");
      }
      std::vector<std::size_t> map;
      for (std::size_t w = 2; w < line.words.size(); ++w) {
        std::size_t const v = detail::parse_count(line.words[w], line.number);
        if (v >= vars) {
          throw ParseError(line.number, "variable " + std::to_string(v)
                                            + " out of range (formula has "
                                            + std::to_string(vars) + ")");
        }
        map.push_back(v);
      }
      phi.atoms.push_back({line.words[1], IndexMap(vars, std::move(map))});
    }
    return phi;
  }

  std::string serialize_formula(PpFormula const& phi) {
    std::ostringstream out;
    out << "free " << phi.free_count << " bound " << phi.bound_count << '\n';
    for (auto const& atom : phi.atoms) {
      out << "atom " << atom.relation;
      for (auto v : atom.vars.values()) {
        out << ' ' << v;
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace gq
