// gq: command-line front end for the generalized quasiorder library.
//
// Exit codes: 0 success / predicate holds, 1 predicate or check failed,
// 2 usage or input error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gq/analysis.hpp"
#include "gq/construct.hpp"
#include "gq/formula.hpp"
#include "gq/io.hpp"
#include "gq/operation.hpp"
#include "gq/suites.hpp"
#include "gq/sweep.hpp"

#ifndef GQ_CORPUS_DIR
#define GQ_CORPUS_DIR "corpus"
#endif

namespace {

  using namespace gq;

  std::vector<std::size_t> parse_list(std::string const& text) {
    std::vector<std::size_t> out;
    std::stringstream        in(text);
    for (std::string item; std::getline(in, item, ',');) {
      if (item.empty()) {
        continue;
      }
      std::size_t pos   = 0;
      unsigned long v   = 0;
      try {
        v = std::stoul(item, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos != item.size()) {
        throw ParseError(0, "bad list entry \"" + item + "\"");
      }
      out.push_back(v);
    }
    return out;
  }

  std::vector<Element> to_elements(std::vector<std::size_t> const& v) {
    return {v.begin(), v.end()};
  }

  FiniteRelation load(std::string const& path) {
    return parse_relation(read_file(path));
  }

  void emit(std::string const& out, std::string const& text) {
    if (out.empty() || out == "-") {
      std::cout << text;
    } else {
      write_file(out, text);
    }
  }

  void apply_env_limit() {
    if (char const* s = std::getenv("GQ_MAX_POINTS")) {
      auto const v = parse_list(s);
      if (v.size() != 1 || v.front() == 0) {
        throw ParseError(0, "GQ_MAX_POINTS must be a positive integer");
      }
      set_max_points(v.front());
    }
  }

  std::map<std::string, FiniteRelation> parse_bindings(std::vector<std::string> const& env) {
    std::map<std::string, FiniteRelation> out;
    for (auto const& binding : env) {
      auto const eq = binding.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ParseError(0, "--env expects name=file, got \"" + binding + "\"");
      }
      out.insert_or_assign(binding.substr(0, eq), load(binding.substr(eq + 1)));
    }
    return out;
  }

  // ---------------------------------------------------------------- check

  struct CheckOpts {
    std::string              file;
    std::vector<std::string> predicates;
  };

  bool predicate_value(ClassificationReport const& r, std::string const& p) {
    static std::map<std::string, bool ClassificationReport::*> const table{
        {"reflexive", &ClassificationReport::reflexive},
        {"transitive", &ClassificationReport::transitive},
        {"totally-symmetric", &ClassificationReport::totally_symmetric},
        {"absolutely-symmetric", &ClassificationReport::absolutely_symmetric},
        {"antisymmetric", &ClassificationReport::antisymmetric},
        {"gquord", &ClassificationReport::is_gquord},
        {"geq", &ClassificationReport::is_geq},
        {"gtolerance", &ClassificationReport::is_gtolerance},
        {"gpord", &ClassificationReport::is_gpord},
        {"wgpord", &ClassificationReport::is_wgpord},
        {"empty", &ClassificationReport::empty},
    };
    return r.*table.at(p);
  }

  int run_check(CheckOpts const& o) {
    auto const rho = load(o.file);
    auto const rep = classify(rho);
    std::cout << "arity=" << rho.arity() << "\nuniverse=" << rho.universe_size()
              << "\nsize=" << rho.size() << '\n'
              << format_report(rep);
    bool ok = true;
    for (auto const& p : o.predicates) {
      bool const v = predicate_value(rep, p);
      std::cout << "requested." << p << '=' << (v ? "true" : "false") << '\n';
      ok = ok && v;
    }
    std::cout << "RESULT=" << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? 0 : 1;
  }

  // ---------------------------------------------------------------- construct

  struct ConstructOpts {
    std::string              sub;
    std::vector<std::string> inputs;
    std::string              out;
    std::string              map;
    std::string              subset;
    std::string              partition;
    std::string              relation;
    std::size_t              arity = 0;
    std::size_t              target = 0;
    std::size_t              bound_limit = 3;
    std::vector<std::string> env;
    std::string              out_partition;
    std::string              out_relation;
  };

  void need_inputs(ConstructOpts const& o, std::size_t count) {
    if (o.inputs.size() != count) {
      throw ParseError(0, "construct " + o.sub + " expects " + std::to_string(count)
                              + " input file(s)");
    }
  }

  void need(std::string const& value, char const* flag, std::string const& sub) {
    if (value.empty()) {
      throw ParseError(0, "construct " + sub + " requires " + flag);
    }
  }

  SurjectiveMap surjection_from(ConstructOpts const& o, std::size_t fallback_target) {
    need(o.map, "--map", o.sub);
    auto const values = to_elements(parse_list(o.map));
    std::size_t target = o.target;
    if (target == 0) {
      target = fallback_target;
      for (auto v : values) {
        target = std::max<std::size_t>(target, v + 1);
      }
    }
    return SurjectiveMap(target, values);
  }

  int run_construct(ConstructOpts const& o) {
    auto const& s = o.sub;
    auto unary = [&](auto&& f) {
      need_inputs(o, 1);
      emit(o.out, serialize_relation(f(load(o.inputs[0]))));
      return 0;
    };
    auto partition_arg = [&] {
      need(o.partition, "--partition", s);
      return parse_partition(read_file(o.partition));
    };

    if (s == "permute") {
      need(o.map, "--map", s);
      return unary([&](auto const& r) {
        auto const m = parse_list(o.map);
        return permute(r, IndexMap(m.size(), m));
      });
    }
    if (s == "fictitious") {
      return unary([](auto const& r) { return add_fictitious(r); });
    }
    if (s == "identify") {
      return unary([](auto const& r) { return identify_first_two(r); });
    }
    if (s == "intersect" || s == "product") {
      need_inputs(o, 2);
      auto const a = load(o.inputs[0]);
      auto const b = load(o.inputs[1]);
      emit(o.out, serialize_relation(s == "intersect" ? intersect(a, b) : direct_product(a, b)));
      return 0;
    }
    if (s == "restrict") {
      need(o.subset, "--subset", s);
      return unary([&](auto const& r) { return restrict(r, to_elements(parse_list(o.subset))); });
    }
    if (s == "image") {
      return unary([&](auto const& r) { return image(r, surjection_from(o, 0)); });
    }
    if (s == "preimage") {
      return unary(
          [&](auto const& r) { return preimage(r, surjection_from(o, r.universe_size())); });
    }
    if (s == "factor") {
      return unary([&](auto const& r) { return factor(r, partition_arg()); });
    }
    if (s == "block-factor") {
      return unary([&](auto const& r) { return block_factor(r, partition_arg()); });
    }
    if (s == "closure") {
      return unary([](auto const& r) { return transitive_closure(r); });
    }
    if (s == "tos") {
      return unary([](auto const& r) { return tos(r); });
    }
    if (s == "abs") {
      return unary([](auto const& r) { return abs(r); });
    }
    if (s == "binsym") {
      return unary([](auto const& r) { return bin_sym(r); });
    }
    if (s == "exch") {
      need_inputs(o, 1);
      emit(o.out, serialize_partition(exchange_eq(load(o.inputs[0]))));
      return 0;
    }
    if (s == "lift") {
      if (o.arity == 0) {
        throw ParseError(0, "construct lift requires --m");
      }
      if (!o.partition.empty()) {
        emit(o.out, serialize_relation(lift_partition(partition_arg(), o.arity)));
      } else {
        need_inputs(o, 1);
        emit(o.out, serialize_relation(lift_relation(load(o.inputs[0]), o.arity)));
      }
      return 0;
    }
    if (s == "decompose") {
      need_inputs(o, 1);
      auto const d = decompose(load(o.inputs[0]));
      if (o.out_partition.empty() && o.out_relation.empty()) {
        std::cout << serialize_partition(d.sigma) << serialize_relation(d.tau);
      } else {
        need(o.out_partition, "--out-partition", s);
        need(o.out_relation, "--out-relation", s);
        write_file(o.out_partition, serialize_partition(d.sigma));
        write_file(o.out_relation, serialize_relation(d.tau));
      }
      return 0;
    }
    if (s == "recompose") {
      need(o.relation, "--relation", s);
      emit(o.out, serialize_relation(recompose(partition_arg(), load(o.relation))));
      return 0;
    }
    if (s == "eval") {
      need_inputs(o, 1);
      auto const    phi = parse_formula(read_file(o.inputs[0]));
      RelationStore store;
      for (auto& [name, rho] : parse_bindings(o.env)) {
        store.add(name, std::move(rho));
      }
      std::size_t n = 0;
      for (auto const& name : store.names()) {
        std::size_t const k = store.get(name).universe_size();
        if (n != 0 && n != k) {
          throw ArityError("environment relations live on different universes");
        }
        n = k;
      }
      if (n == 0) {
        throw ParseError(0, "construct eval needs at least one --env binding");
      }
      emit(o.out, serialize_relation(eval_pp(phi, store, n, o.bound_limit)));
      return 0;
    }
    throw ParseError(0, "unknown construct subcommand \"" + s + "\"");
  }

  // ---------------------------------------------------------------- enumerate

  struct EnumerateOpts {
    std::string kind;
    std::size_t n = 2;
    std::size_t m = 2;
    bool        count_only = false;
    std::string method     = "closure";
    bool        serial     = false;
  };

  int run_enumerate(EnumerateOpts const& o) {
    Kind const kind = parse_kind(o.kind);
    Exec const exec = o.serial ? Exec::serial : Exec::parallel;
    std::vector<FiniteRelation> rels;
    if (o.method == "closure") {
      rels = enumerate_kind(kind, o.n, o.m, exec);
    } else if (o.method == "filter") {
      std::size_t const m = (kind == Kind::preorders || kind == Kind::equivalences) ? 2 : o.m;
      rels = filter_relations(
          o.n, m,
          [kind](FiniteRelation const& r) {
            auto const rep = classify(r);
            switch (kind) {
              case Kind::gquord: return rep.is_gquord;
              case Kind::geq: return rep.is_geq;
              case Kind::gpord: return rep.is_gpord;
              case Kind::wgpord: return rep.is_wgpord;
              case Kind::equivalences: return rep.is_geq;
              case Kind::preorders: return rep.is_gquord;
            }
            return false;
          },
          exec);
    } else {
      throw ParseError(0, "unknown method \"" + o.method + "\" (closure, filter)");
    }
    std::size_t const m = rels.empty() ? o.m : rels.front().arity();
    if (o.count_only) {
      std::cout << rels.size() << '\n';
      return 0;
    }
    std::cout << "kind=" << kind_name(kind) << "\nn=" << o.n << "\nm=" << m
              << "\ncount=" << rels.size() << '\n';
    for (auto const& r : rels) {
      std::cout << serialize_relation(r);
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized quasiorders on finite sets"};
  app.require_subcommand(1);

  CheckOpts check;
  auto*     check_cmd = app.add_subcommand("check", "classify a relation file");
  check_cmd->add_option("file", check.file, "relation file")->required();
  for (char const* p : {"reflexive", "transitive", "totally-symmetric", "absolutely-symmetric",
                        "antisymmetric", "gquord", "geq", "gtolerance", "gpord", "wgpord",
                        "empty"}) {
    std::string const name = p;
    check_cmd->add_flag_callback("--" + name, [&check, name] { check.predicates.push_back(name); },
                                 "require " + name);
  }

  ConstructOpts cons;
  auto* cons_cmd = app.add_subcommand("construct", "build a relation from others");
  cons_cmd->add_option("sub", cons.sub,
                       "permute fictitious identify intersect product restrict image preimage "
                       "factor block-factor closure tos abs binsym exch lift decompose "
                       "recompose eval")
      ->required();
  cons_cmd->add_option("inputs", cons.inputs, "input files");
  cons_cmd->add_option("-o,--out", cons.out, "output file (default stdout)");
  cons_cmd->add_option("--map", cons.map, "comma-separated index or element map");
  cons_cmd->add_option("--target", cons.target, "target universe size for --map");
  cons_cmd->add_option("--subset", cons.subset, "comma-separated elements");
  cons_cmd->add_option("--partition", cons.partition, "partition file");
  cons_cmd->add_option("--relation", cons.relation, "quotient relation file");
  cons_cmd->add_option("--m", cons.arity, "arity of a lift");
  cons_cmd->add_option("--env", cons.env, "name=file binding for eval");
  cons_cmd->add_option("--bound-limit", cons.bound_limit, "largest bound-variable count");
  cons_cmd->add_option("--out-partition", cons.out_partition, "decompose: partition output");
  cons_cmd->add_option("--out-relation", cons.out_relation, "decompose: quotient output");

  EnumerateOpts en;
  auto* en_cmd = app.add_subcommand("enumerate", "list relations of a kind");
  en_cmd->add_option("kind", en.kind, "gquord geq gpord wgpord equivalences preorders")->required();
  en_cmd->add_option("--n", en.n, "universe size");
  en_cmd->add_option("--m", en.m, "arity");
  en_cmd->add_flag("--count-only", en.count_only, "print only the count");
  en_cmd->add_option("--method", en.method, "closure (default) or filter");
  en_cmd->add_flag("--serial", en.serial, "single-threaded reference path");

  std::string suite;
  SuiteParams params;
  params.corpus_dir = GQ_CORPUS_DIR;
  bool  serial      = false;
  auto* ver_cmd     = app.add_subcommand("verify", "run a verification suite");
  ver_cmd->add_option("suite", suite, "suite name")->required();
  ver_cmd->add_option("--n", params.n, "universe size");
  ver_cmd->add_option("--m", params.m, "arity");
  ver_cmd->add_option("--samples", params.samples, "sample count");
  ver_cmd->add_option("--seed", params.seed, "random seed");
  ver_cmd->add_option("--atoms", params.max_atoms, "atoms per pp formula");
  ver_cmd->add_option("--corpus", params.corpus_dir, "corpus directory");
  ver_cmd->add_flag("--serial", serial, "single-threaded reference path");

  std::string              op_sub, op_file, op_rel, op_builtin;
  std::vector<std::string> op_env;
  std::size_t              op_k = 2;
  std::size_t              op_n = 2;
  auto* op_cmd = app.add_subcommand("operation", "inspect a finite operation");
  op_cmd->add_option("sub", op_sub, "show identities graph preserves xi pol")->required();
  op_cmd->add_option("file", op_file, "operation file (relation file for pol)");
  op_cmd->add_option("--builtin", op_builtin,
                     "named operation: and, or, not, \"const a\", \"proj k i\", "
                     "\"rect-band n0\", \"majority-from-order name\"");
  op_cmd->add_option("--n", op_n, "universe size for builtins");
  op_cmd->add_option("--env", op_env, "name=file binding for majority-from-order");
  op_cmd->add_option("--relation", op_rel, "relation file");
  op_cmd->add_option("--k", op_k, "arity for pol");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    apply_env_limit();
    if (*check_cmd) {
      return run_check(check);
    }
    if (*cons_cmd) {
      return run_construct(cons);
    }
    if (*en_cmd) {
      return run_enumerate(en);
    }
    if (*ver_cmd) {
      params.exec = serial ? Exec::serial : Exec::parallel;
      auto const names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "error: unknown suite \"" << suite << "\"; known:";
        for (auto const& s : names) {
          std::cerr << ' ' << s;
        }
        std::cerr << '\n';
        return 2;
      }
      auto const rep = run_suite(suite, params);
      std::cout << format_suite_report(rep);
      return rep.passed() ? 0 : 1;
    }
    if (*op_cmd) {
      auto need_rel = [&] {
        if (op_rel.empty()) {
          throw ParseError(0, "operation " + op_sub + " requires --relation");
        }
        return load(op_rel);
      };
      if (op_sub == "pol") {
        if (op_file.empty()) {
          throw ParseError(0, "operation pol needs a relation file");
        }
        auto const rho = load(op_file);
        auto const pol = pol_bounded(rho.universe_size(), {rho}, op_k);
        std::cout << "k=" << op_k << "\ncount=" << pol.size() << '\n';
        for (auto const& f : pol) {
          std::cout << serialize_operation(f);
        }
        return 0;
      }
      auto const f = [&] {
        if (op_builtin.empty()) {
          if (op_file.empty()) {
            throw ParseError(0, "operation needs a file or --builtin");
          }
          return parse_operation(read_file(op_file));
        }
        auto const bindings = parse_bindings(op_env);
        return builtin_operation(op_builtin, op_n, [&](std::string const& name) {
          auto const it = bindings.find(name);
          if (it == bindings.end()) {
            throw ParseError(0, "no --env binding for \"" + name + "\"");
          }
          return it->second;
        });
      }();
      if (op_sub == "show") {
        std::cout << serialize_operation(f);
        return 0;
      }
      if (op_sub == "identities") {
        auto const r = rectangular_theorem_check(f);
        auto flag    = [](bool b) { return b ? "true" : "false"; };
        std::cout << "idempotent=" << flag(r.idempotent) << "\nentropic=" << flag(r.entropic)
                  << "\nabsorptive=" << flag(r.absorptive)
                  << "\ngraph_gquord=" << flag(r.graph_gquord)
                  << "\ngraph_gpord=" << flag(r.graph_gpord) << '\n';
        bool const ok = r.equivalence_ok && r.gpord_implied_ok;
        std::cout << "RESULT=" << (ok ? "PASS" : "FAIL") << '\n';
        return ok ? 0 : 1;
      }
      if (op_sub == "graph") {
        std::cout << serialize_relation(graph_of(f));
        return 0;
      }
      if (op_sub == "preserves" || op_sub == "xi") {
        auto const rho = need_rel();
        bool       ok  = false;
        if (op_sub == "preserves") {
          auto const r = preserves(f, rho);
          ok           = r.holds;
          std::cout << "preserves=" << (ok ? "true" : "false") << '\n';
          for (auto const& row : r.witness) {
            std::cout << "witness_row=" << serialize_tuple(row) << '\n';
          }
        } else {
          ok = xi_holds(f, rho);
          std::cout << "xi=" << (ok ? "true" : "false") << '\n';
        }
        std::cout << "RESULT=" << (ok ? "PASS" : "FAIL") << '\n';
        return ok ? 0 : 1;
      }
      throw ParseError(0, "unknown operation subcommand \"" + op_sub + "\"");
    }
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
