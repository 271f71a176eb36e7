#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toptypes {

using VertexId = std::int32_t;
inline constexpr VertexId kNoParent = -1;

// Finite rooted tree stored as a parent array. Children lists are derived and
// their order carries no meaning. Optional per-vertex string labels.
class RootedTree {
 public:
  RootedTree() = default;

  // Exactly one entry equals kNoParent; the links must form a single tree.
  // labels is either empty or has one entry per vertex.
  static RootedTree from_parents(std::vector<VertexId> parent, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return parent_.size(); }
  bool empty() const noexcept { return parent_.empty(); }
  VertexId root() const noexcept { return root_; }
  VertexId parent(VertexId v) const { return parent_[check(v)]; }
  const std::vector<VertexId>& parents() const noexcept { return parent_; }
  std::span<const VertexId> children(VertexId v) const;
  int depth(VertexId v) const { return depth_[check(v)]; }
  int height() const noexcept { return height_; }

  // Vertices in depth-first preorder starting at the root.
  const std::vector<VertexId>& preorder() const noexcept { return preorder_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::string& label(VertexId v) const { return labels_[check(v)]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // a lies on the root-to-b path (a == b allowed).
  bool is_ancestor(VertexId a, VertexId b) const;
  // Deepest common ancestor.
  VertexId meet(VertexId a, VertexId b) const;

  // Same vertex ids and labels, rooted at v.
  RootedTree reroot(VertexId v) const;

 private:
  std::size_t check(VertexId v) const;

  std::vector<VertexId> parent_;
  std::vector<std::string> labels_;
  VertexId root_ = kNoParent;
  std::vector<std::size_t> child_offset_;
  std::vector<VertexId> child_list_;
  std::vector<int> depth_;
  std::vector<std::size_t> enter_;
  std::vector<std::size_t> leave_;
  std::vector<VertexId> preorder_;
  int height_ = 0;
};

// Parenthesis format: Tree := "(" Tree* ")". Ids follow reading order, root 0.
RootedTree parse_tree(std::string_view text);
std::string serialize_tree(const RootedTree& t);

// JSON format {"parent": [-1, 0, 0, ...], "labels": [...]} (labels optional).
RootedTree parse_tree_json(std::string_view text);
std::string tree_to_json(const RootedTree& t);

// Either format, chosen by the first non-blank character.
RootedTree parse_tree_any(std::string_view text);

// Parenthesis encoding with children sorted lexicographically; equal iff the
// rooted trees are isomorphic.
std::string canonical_form(const RootedTree& t);
std::string canonical_form(const RootedTree& t, VertexId v);

bool is_ancestor(const RootedTree& t, VertexId a, VertexId b);
VertexId meet(const RootedTree& t, VertexId a, VertexId b);

std::string to_dot(const RootedTree& t);

// Interns rooted-subtree isomorphism classes as small integers (AHU style).
// A class is identified by the sorted multiset of its children's classes, so
// a child class id is always smaller than its parent's. One interner can be
// shared across several trees to make their ids comparable.
class SubtreeClasses {
 public:
  int intern(std::vector<int> child_classes);
  // Class id of every vertex of t.
  std::vector<int> classify(const RootedTree& t);

  std::size_t count() const noexcept { return children_.size(); }
  const std::vector<int>& children(int cls) const { return children_.at(static_cast<std::size_t>(cls)); }
  int vertex_count(int cls) const { return sizes_.at(static_cast<std::size_t>(cls)); }
  int height(int cls) const { return heights_.at(static_cast<std::size_t>(cls)); }

 private:
  std::map<std::vector<int>, int> ids_;
  std::vector<std::vector<int>> children_;
  std::vector<int> sizes_;
  std::vector<int> heights_;
};

}  // namespace toptypes
