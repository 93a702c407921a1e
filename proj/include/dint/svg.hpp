#pragma once

#include "dint/interval.hpp"

#include <string>

namespace dint {

/// One horizontal segment per interval, labeled "v" (single part) or "v_i",
/// rows assigned greedily left to right so segments never visually overlap.
/// Deterministic for a given representation.
std::string render_svg(const DIntervalRep& rep);

}  // namespace dint
