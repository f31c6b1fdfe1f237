#pragma once

namespace gq {

  //! Selects the OpenMP kernel or the serial reference for enumeration
  //! sweeps.  Both produce identical, canonically ordered results.
  enum class Exec { serial, parallel };

}  // namespace gq
