#include "dint/pq_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace dint {

struct PQTree::Node {
  enum Kind { Leaf, P, Q };
  Kind kind;
  int leaf = -1;
  std::vector<std::unique_ptr<Node>> children;
  int pertinent = 0;  // number of marked leaves below, per reduction

  explicit Node(int leaf_value) : kind(Leaf), leaf(leaf_value) {}
  explicit Node(Kind k) : kind(k) {}
};

namespace {

using NodePtr = std::unique_ptr<PQTree::Node>;
using Node = PQTree::Node;

enum class Label { Empty, Full, Partial, Fail };

struct Res {
  Label label = Label::Fail;
  NodePtr node;  // for Partial: a Q whose frontier is empties then fulls
};

NodePtr make_p(std::vector<NodePtr> children) {
  if (children.size() == 1) return std::move(children.front());
  auto n = std::make_unique<Node>(Node::P);
  n->children = std::move(children);
  return n;
}

NodePtr make_q(std::vector<NodePtr> children) {
  if (children.size() == 1) return std::move(children.front());
  if (children.size() == 2) return make_p(std::move(children));
  auto n = std::make_unique<Node>(Node::Q);
  n->children = std::move(children);
  return n;
}

int count_pertinent(Node* n, const std::vector<char>& marked) {
  if (n->kind == Node::Leaf) {
    n->pertinent = marked[n->leaf] ? 1 : 0;
  } else {
    n->pertinent = 0;
    for (auto& c : n->children) n->pertinent += count_pertinent(c.get(), marked);
  }
  return n->pertinent;
}

// Splices a Partial result (a Q with empties first, fulls last) into a child
// sequence. When reversed, fulls come first.
void splice(std::vector<NodePtr>& out, NodePtr partial, bool reversed) {
  if (partial->kind != Node::Q && partial->kind != Node::P) {
    out.push_back(std::move(partial));
    return;
  }
  auto& ch = partial->children;
  if (reversed) std::reverse(ch.begin(), ch.end());
  for (auto& c : ch) out.push_back(std::move(c));
}

Res reduce_node(NodePtr n, bool is_root);

// Common handling for P-nodes.
Res reduce_p(NodePtr n, bool is_root) {
  std::vector<NodePtr> empties, fulls;
  std::vector<NodePtr> partials;
  for (auto& child : n->children) {
    bool child_root = false;
    Res r = reduce_node(std::move(child), child_root);
    switch (r.label) {
      case Label::Empty: empties.push_back(std::move(r.node)); break;
      case Label::Full: fulls.push_back(std::move(r.node)); break;
      case Label::Partial: partials.push_back(std::move(r.node)); break;
      case Label::Fail: return {};
    }
  }
  if (partials.empty() && fulls.empty()) {
    return {Label::Empty, make_p(std::move(empties))};
  }
  if (partials.empty() && empties.empty() && !is_root) {
    return {Label::Full, make_p(std::move(fulls))};
  }

  if (!is_root) {
    if (partials.size() > 1) return {};
    // Build a Q: empties, then the partial's children, then fulls.
    std::vector<NodePtr> qch;
    if (!empties.empty()) qch.push_back(make_p(std::move(empties)));
    if (!partials.empty()) splice(qch, std::move(partials.front()), false);
    if (!fulls.empty()) qch.push_back(make_p(std::move(fulls)));
    return {Label::Partial, make_q(std::move(qch))};
  }

  // Pertinent root: fulls only need to be consecutive somewhere.
  if (partials.size() > 2) return {};
  if (partials.empty()) {
    if (fulls.size() <= 1 || empties.empty()) {
      for (auto& f : fulls) empties.push_back(std::move(f));
      return {Label::Full, make_p(std::move(empties))};
    }
    std::vector<NodePtr> ch = std::move(empties);
    ch.push_back(make_p(std::move(fulls)));
    return {Label::Full, make_p(std::move(ch))};
  }
  std::vector<NodePtr> qch;
  splice(qch, std::move(partials.front()), false);  // empties .. fulls
  if (!fulls.empty()) qch.push_back(make_p(std::move(fulls)));
  if (partials.size() == 2) splice(qch, std::move(partials[1]), true);  // fulls .. empties
  NodePtr pertinent_child = make_q(std::move(qch));
  if (empties.empty()) return {Label::Full, std::move(pertinent_child)};
  std::vector<NodePtr> ch = std::move(empties);
  ch.push_back(std::move(pertinent_child));
  return {Label::Full, make_p(std::move(ch))};
}

Res reduce_q(NodePtr n, bool is_root) {
  std::vector<Res> rs;
  for (auto& child : n->children) {
    Res r = reduce_node(std::move(child), false);
    if (r.label == Label::Fail) return {};
    rs.push_back(std::move(r));
  }
  size_t k = rs.size();
  auto is_empty = [&](size_t i) { return rs[i].label == Label::Empty; };
  auto is_full = [&](size_t i) { return rs[i].label == Label::Full; };

  size_t first_ne = k, last_ne = 0;
  bool any_ne = false;
  for (size_t i = 0; i < k; ++i)
    if (!is_empty(i)) {
      if (!any_ne) first_ne = i;
      last_ne = i;
      any_ne = true;
    }
  if (!any_ne) {
    std::vector<NodePtr> ch;
    for (auto& r : rs) ch.push_back(std::move(r.node));
    return {Label::Empty, make_q(std::move(ch))};
  }
  // Non-empty results must form one consecutive block with full interior.
  for (size_t i = first_ne; i <= last_ne; ++i)
    if (is_empty(i)) return {};
  for (size_t i = first_ne + 1; i < last_ne; ++i)
    if (!is_full(i)) return {};
  bool left_partial = rs[first_ne].label == Label::Partial;
  bool right_partial = rs[last_ne].label == Label::Partial;

  bool all_full = !left_partial && !right_partial && first_ne == 0 && last_ne == k - 1;
  if (all_full && !is_root) {
    std::vector<NodePtr> ch;
    for (auto& r : rs) ch.push_back(std::move(r.node));
    return {Label::Full, make_q(std::move(ch))};
  }

  if (is_root) {
    // Block may sit anywhere: empties, [partial], fulls, [partial], empties.
    std::vector<NodePtr> ch;
    for (size_t i = 0; i < first_ne; ++i) ch.push_back(std::move(rs[i].node));
    if (left_partial)
      splice(ch, std::move(rs[first_ne].node), false);
    else
      ch.push_back(std::move(rs[first_ne].node));
    for (size_t i = first_ne + 1; i < last_ne; ++i) ch.push_back(std::move(rs[i].node));
    if (last_ne != first_ne) {
      if (right_partial)
        splice(ch, std::move(rs[last_ne].node), true);
      else
        ch.push_back(std::move(rs[last_ne].node));
    }
    for (size_t i = last_ne + 1; i < k; ++i) ch.push_back(std::move(rs[i].node));
    return {Label::Full, make_q(std::move(ch))};
  }

  // Non-root: after orientation the children must read empties*, partial?,
  // fulls*, so the block reaches one end with any partial at the inner
  // boundary. Normalize so the result's fulls form a suffix.
  bool single = first_ne == last_ne;
  if (!single && left_partial && right_partial) return {};
  if (single || (last_ne == k - 1 && !right_partial)) {
    bool at_right = last_ne == k - 1;
    bool at_left = first_ne == 0;
    if (single && !at_right && !at_left) return {};
    if (single && !at_right) {
      // Lone pertinent child at the left end: flip the whole Q.
      std::vector<NodePtr> ch;
      for (size_t i = k; i-- > 1;) ch.push_back(std::move(rs[i].node));
      if (left_partial)
        splice(ch, std::move(rs[0].node), false);
      else
        ch.push_back(std::move(rs[0].node));
      return {Label::Partial, make_q(std::move(ch))};
    }
    std::vector<NodePtr> ch;
    for (size_t i = 0; i < first_ne; ++i) ch.push_back(std::move(rs[i].node));
    if (left_partial)
      splice(ch, std::move(rs[first_ne].node), false);
    else
      ch.push_back(std::move(rs[first_ne].node));
    for (size_t i = first_ne + 1; i <= last_ne; ++i) ch.push_back(std::move(rs[i].node));
    return {Label::Partial, make_q(std::move(ch))};
  }
  if (first_ne == 0 && !left_partial) {
    // Mirror image: flip so the fulls end up at the right.
    std::vector<NodePtr> ch;
    for (size_t i = k; i-- > last_ne + 1;) ch.push_back(std::move(rs[i].node));
    if (right_partial)
      splice(ch, std::move(rs[last_ne].node), false);
    else
      ch.push_back(std::move(rs[last_ne].node));
    for (size_t i = last_ne; i-- > first_ne;) ch.push_back(std::move(rs[i].node));
    return {Label::Partial, make_q(std::move(ch))};
  }
  return {};
}

Res reduce_node(NodePtr n, bool is_root) {
  if (n->pertinent == 0) return {Label::Empty, std::move(n)};
  if (n->kind == Node::Leaf) return {Label::Full, std::move(n)};
  if (n->kind == Node::P) return reduce_p(std::move(n), is_root);
  return reduce_q(std::move(n), is_root);
}

void collect_frontier(const Node* n, std::vector<int>& out) {
  if (n->kind == Node::Leaf) {
    out.push_back(n->leaf);
    return;
  }
  for (const auto& c : n->children) collect_frontier(c.get(), out);
}

}  // namespace

PQTree::PQTree(int universe_size) : universe_(universe_size) {
  if (universe_size < 1) throw std::invalid_argument("universe must be nonempty");
  if (universe_size == 1) {
    root_ = std::make_unique<Node>(0);
    return;
  }
  root_ = std::make_unique<Node>(Node::P);
  for (int i = 0; i < universe_size; ++i) root_->children.push_back(std::make_unique<Node>(i));
}

PQTree::~PQTree() = default;

bool PQTree::reduce(const std::vector<int>& subset) {
  if (!root_) return false;
  std::vector<char> marked(universe_, 0);
  int count = 0;
  for (int x : subset) {
    if (x < 0 || x >= universe_) throw std::out_of_range("element outside universe");
    if (!marked[x]) {
      marked[x] = 1;
      ++count;
    }
  }
  if (count <= 1) return true;
  count_pertinent(root_.get(), marked);

  // Descend to the pertinent root: the deepest node covering all of subset.
  NodePtr* slot = &root_;
  for (;;) {
    Node* cur = slot->get();
    if (cur->kind == Node::Leaf) break;
    NodePtr* next = nullptr;
    for (auto& c : cur->children)
      if (c->pertinent == count) {
        next = &c;
        break;
      }
    if (!next) break;
    slot = next;
  }
  Res r = reduce_node(std::move(*slot), true);
  if (r.label == Label::Fail) {
    root_.reset();
    return false;
  }
  *slot = std::move(r.node);
  return true;
}

std::vector<int> PQTree::frontier() const {
  std::vector<int> out;
  if (root_) collect_frontier(root_.get(), out);
  return out;
}

}  // namespace dint
