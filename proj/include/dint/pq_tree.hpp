#pragma once

#include <memory>
#include <vector>

namespace dint {

/// Booth-Lueker PQ-tree over the universe 0..k-1, used as the
/// consecutive-ones engine: after a sequence of successful reduce() calls,
/// every frontier permutation keeps each reduced subset consecutive.
class PQTree {
public:
  explicit PQTree(int universe_size);
  PQTree(const PQTree&) = delete;
  PQTree& operator=(const PQTree&) = delete;
  PQTree(PQTree&&) = default;
  PQTree& operator=(PQTree&&) = default;
  ~PQTree();

  /// Constrains the elements of subset to be consecutive. Returns false if
  /// impossible; the tree must not be used further after a failure.
  bool reduce(const std::vector<int>& subset);

  /// One admissible permutation of the universe.
  std::vector<int> frontier() const;

  struct Node;  // opaque, defined in the implementation

private:
  std::unique_ptr<Node> root_;
  int universe_;
};

}  // namespace dint
