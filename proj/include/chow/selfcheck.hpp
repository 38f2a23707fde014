#pragma once

#include <iosfwd>

namespace chow {

enum class CheckLevel { Quick, Full };

/// Invariant suite used by the command-line `verify` subcommand: rebuilds
/// the resolutions, checks shapes / symmetry / skewness / support ranks /
/// controls, and (at Full level) equivariance residuals, Hilbert functions
/// in degrees 0..4, scale coherence and the pencil degree. Prints one line
/// per check; returns true iff everything passed.
bool run_selfcheck(CheckLevel level, std::ostream& os);

}  // namespace chow
