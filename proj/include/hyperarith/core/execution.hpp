#pragma once

namespace hyperarith {

/// Selects between the OpenMP kernel and its serial reference. The serial
/// path is kept for testing: both must produce identical, identically
/// ordered results.
enum class Execution { Serial, Parallel };

}  // namespace hyperarith
