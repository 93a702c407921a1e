#pragma once

#include "dint/interval.hpp"

#include <string>

namespace dint {

/// Representation file format:
///   {"d": int, "vertices": {"<id>": [["<num>","<num>"], ...], ...}}
/// where <num> is an integer or "p/q" rational string. The writer emits
/// lowest-terms rationals and vertices in ascending id order.
DIntervalRep parse_representation(const std::string& text);
std::string write_representation(const DIntervalRep& rep);

}  // namespace dint
