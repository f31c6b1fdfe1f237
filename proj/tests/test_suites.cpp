#include <doctest.h>

#include "gq/analysis.hpp"
#include "gq/operation.hpp"
#include "gq/suites.hpp"

using namespace gq;

namespace {

  SuiteParams params() {
    SuiteParams p;
    p.corpus_dir = GQ_CORPUS_DIR;
    return p;
  }

  std::string failures(SuiteReport const& rep) {
    std::string out;
    for (auto const& c : rep.checks) {
      if (!c.pass) {
        out += c.name + " (" + c.info + ")\n" + c.witness;
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("suites other than the rectangular one pass") {
  for (auto const& name : suite_names()) {
    if (name == "rectangular") {
      continue;
    }
    CAPTURE(name);
    auto const rep = run_suite(name, params());
    CHECK(!rep.checks.empty());
    INFO(failures(rep));
    CHECK(rep.passed());
  }
}

TEST_CASE("rectangular suite fails only on the literal absorption equivalence") {
  auto const rep = run_suite("rectangular", params());
  std::size_t failed = 0;
  for (auto const& c : rep.checks) {
    if (c.pass) {
      continue;
    }
    ++failed;
    CAPTURE(c.name);
    CHECK(c.name.rfind("entropic f: AB holds iff graph is a gquord", 0) == 0);
    // The witness is an entropic, absorptive operation whose graph is
    // transitive but not reflexive.
    auto const f   = parse_operation(c.witness);
    auto const chk = rectangular_theorem_check(f);
    CHECK(chk.entropic);
    CHECK(chk.absorptive);
    CHECK(chk.graph_transitive);
    CHECK_FALSE(is_reflexive(graph_of(f)));
  }
  CHECK(failed == 3);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("suite reports are deterministic") {
  auto p = params();
  p.exec = Exec::serial;
  auto const a = format_suite_report(run_suite("decomposition", p));
  p.exec = Exec::parallel;
  auto const b = format_suite_report(run_suite("decomposition", p));
  CHECK(a == b);
  CHECK(b.rfind("suite=decomposition\n", 0) == 0);
  CHECK(b.find("\nRESULT=PASS\n") != std::string::npos);
}

TEST_CASE("unknown suite") {
  CHECK_THROWS_AS((void)run_suite("no-such-suite", params()), Error);
}
