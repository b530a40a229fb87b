#pragma once

#include <iosfwd>
#include <string>

namespace pdepot {

/// Self-contained invariant suites runnable from the CLI:
///   pde    - heat-equation / Hermite residuals of the stock potentials
///   ito    - per-round wealth decomposition identity and inequality
///   bounds - wealth floors, conjugate caps and bound ordering
///   tail   - exact binomial tail vs its analytic floor
///   all    - everything above
/// Diagnostics go to `log`; returns true when every check passes.
bool verify_suite(const std::string& name, std::ostream& log);

}  // namespace pdepot
