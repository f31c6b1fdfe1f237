#pragma once

// Named verification suites.  Each suite runs a fixed list of exhaustive
// or seeded checks and records one result per check.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gq/exec.hpp"

namespace gq {

  struct SuiteParams {
    std::optional<std::size_t> n;        // restricts sweeps to one size
    std::optional<std::size_t> m;        // arity (max arity for boolean-thm)
    std::optional<std::size_t> samples;  // sampled checks
    std::size_t                max_atoms = 6;
    std::uint64_t              seed      = 20240611;
    std::string                corpus_dir;
    Exec                       exec = Exec::parallel;
  };

  struct CheckResult {
    std::string name;
    bool        pass = true;
    std::string info;     // one line
    std::string witness;  // serialized objects, may span lines
    bool        show = false;  // print the witness even when passing
  };

  struct SuiteReport {
    std::string              suite;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const;
  };

  [[nodiscard]] std::vector<std::string> suite_names();

  //! Throws Error for an unknown suite name.
  [[nodiscard]] SuiteReport run_suite(std::string const& name,
                                      SuiteParams const& params);

  //! "suite=...", one "check.<k>=PASS|FAIL <name> (<info>)" line per check
  //! (k counts from 1), indented witness lines, then "RESULT=PASS|FAIL".
  [[nodiscard]] std::string format_suite_report(SuiteReport const& report);

}  // namespace gq
