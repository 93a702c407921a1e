#pragma once

#include "dint/interval.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace dint {

struct LabeledItem {
  int label = 0;
  Interval iv;
};

/// A multiset of intervals with unique integer labels. Coordinate duplicates
/// (twins) are allowed.
struct LabeledFamily {
  std::vector<LabeledItem> items;
};

/// An item intersects three pairwise disjoint items, so no unit-length family
/// with the same intersection pattern exists.
struct ClawPresent : std::runtime_error {
  int center;
  std::array<int, 3> leaves;

  ClawPresent(int c, std::array<int, 3> ls)
      : std::runtime_error("item " + std::to_string(c) +
                           " intersects three pairwise disjoint items"),
        center(c),
        leaves(ls) {}
};

/// The coordinate assignment failed its own feasibility check. This cannot
/// happen on inputs satisfying the precondition; it signals a bug.
struct InfeasibleOrder : std::logic_error {
  using std::logic_error::logic_error;
};

/// Rewrites every item to a unit-length interval while preserving the pairwise
/// intersection pattern exactly (closed-interval semantics, so tangencies stay
/// intersections). Requires that no item meet three pairwise disjoint items.
/// Items keep their labels and input order; connected components of the
/// intersection graph are placed on disjoint ranges, ordered by smallest label.
LabeledFamily unitize(const LabeledFamily& fam);

}  // namespace dint
