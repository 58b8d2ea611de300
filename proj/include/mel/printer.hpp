#pragma once

#include <string>

#include "mel/formula.hpp"

namespace mel {

/// Renders f in the syntax accepted by parse_formula, re-sugaring derived
/// operators. parse_formula(print_formula(f)) == f for every f.
///
/// Intervals equal to [0..w) are omitted. Singleton intervals on one-step
/// operators print as "[m]"; every other interval prints half-open.
std::string print_formula(const Formula& f);

std::string print_theory(const Theory& t);

}  // namespace mel
