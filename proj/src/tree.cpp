#include "toptypes/tree.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "toptypes/error.hpp"

namespace toptypes {

RootedTree RootedTree::from_parents(std::vector<VertexId> parent, std::vector<std::string> labels) {
  const std::size_t n = parent.size();
  if (n == 0) throw DomainError("tree must have at least one vertex");
  if (!labels.empty() && labels.size() != n) throw DomainError("label count does not match vertex count");

  RootedTree t;
  t.parent_ = std::move(parent);
  t.labels_ = std::move(labels);

  std::vector<std::size_t> degree(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    VertexId p = t.parent_[v];
    if (p == kNoParent) {
      if (t.root_ != kNoParent) throw DomainError("tree has more than one root");
      t.root_ = static_cast<VertexId>(v);
      continue;
    }
    if (p < 0 || static_cast<std::size_t>(p) >= n || static_cast<std::size_t>(p) == v)
      throw DomainError("parent index out of range at vertex " + std::to_string(v));
    ++degree[static_cast<std::size_t>(p)];
  }
  if (t.root_ == kNoParent) throw DomainError("tree has no root");

  t.child_offset_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) t.child_offset_[v + 1] = t.child_offset_[v] + degree[v];
  t.child_list_.assign(n - 1, 0);
  std::vector<std::size_t> fill(t.child_offset_.begin(), t.child_offset_.end() - 1);
  for (std::size_t v = 0; v < n; ++v) {
    VertexId p = t.parent_[v];
    if (p != kNoParent) t.child_list_[fill[static_cast<std::size_t>(p)]++] = static_cast<VertexId>(v);
  }

  // Iterative DFS from the root; anything unreached sits on a cycle.
  t.depth_.assign(n, -1);
  t.enter_.assign(n, 0);
  t.leave_.assign(n, 0);
  t.preorder_.reserve(n);
  std::vector<std::pair<VertexId, std::size_t>> stack;
  stack.emplace_back(t.root_, 0);
  t.depth_[static_cast<std::size_t>(t.root_)] = 0;
  t.enter_[static_cast<std::size_t>(t.root_)] = 0;
  t.preorder_.push_back(t.root_);
  std::size_t clock = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto kids = t.children(v);
    if (next < kids.size()) {
      VertexId c = kids[next++];
      auto cu = static_cast<std::size_t>(c);
      t.depth_[cu] = t.depth_[static_cast<std::size_t>(v)] + 1;
      t.height_ = std::max(t.height_, t.depth_[cu]);
      t.enter_[cu] = clock++;
      t.preorder_.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      t.leave_[static_cast<std::size_t>(v)] = clock++;
      stack.pop_back();
    }
  }
  if (t.preorder_.size() != n) throw DomainError("parent links contain a cycle");
  return t;
}

std::size_t RootedTree::check(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= parent_.size())
    throw DomainError("vertex id " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

std::span<const VertexId> RootedTree::children(VertexId v) const {
  auto u = check(v);
  return {child_list_.data() + child_offset_[u], child_offset_[u + 1] - child_offset_[u]};
}

bool RootedTree::is_ancestor(VertexId a, VertexId b) const {
  auto x = check(a);
  auto y = check(b);
  return enter_[x] <= enter_[y] && leave_[y] <= leave_[x];
}

VertexId RootedTree::meet(VertexId a, VertexId b) const {
  check(a);
  check(b);
  while (depth_[static_cast<std::size_t>(a)] > depth_[static_cast<std::size_t>(b)]) a = parent_[static_cast<std::size_t>(a)];
  while (depth_[static_cast<std::size_t>(b)] > depth_[static_cast<std::size_t>(a)]) b = parent_[static_cast<std::size_t>(b)];
  while (a != b) {
    a = parent_[static_cast<std::size_t>(a)];
    b = parent_[static_cast<std::size_t>(b)];
  }
  return a;
}

RootedTree RootedTree::reroot(VertexId v) const {
  check(v);
  auto parent = parent_;
  VertexId prev = kNoParent;
  VertexId cur = v;
  while (cur != kNoParent) {
    VertexId up = parent_[static_cast<std::size_t>(cur)];
    parent[static_cast<std::size_t>(cur)] = prev;
    prev = cur;
    cur = up;
  }
  return from_parents(std::move(parent), labels_);
}

RootedTree parse_tree(std::string_view text) {
  std::vector<VertexId> parent;
  std::vector<VertexId> open;
  bool closed_root = false;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(') {
      if (closed_root) throw ParseError("tree text: more than one top-level tree at offset " + std::to_string(pos));
      parent.push_back(open.empty() ? kNoParent : open.back());
      open.push_back(static_cast<VertexId>(parent.size() - 1));
    } else if (c == ')') {
      if (open.empty()) throw ParseError("tree text: unbalanced ')' at offset " + std::to_string(pos));
      open.pop_back();
      if (open.empty()) closed_root = true;
    } else {
      throw ParseError("tree text: unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(pos));
    }
  }
  if (parent.empty()) throw ParseError("tree text: empty input");
  if (!open.empty()) throw ParseError("tree text: unbalanced '(' (missing ')')");
  return RootedTree::from_parents(std::move(parent));
}

std::string serialize_tree(const RootedTree& t) {
  std::string out;
  out.reserve(2 * t.size());
  std::vector<std::pair<VertexId, std::size_t>> stack{{t.root(), 0}};
  out += '(';
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto kids = t.children(v);
    if (next < kids.size()) {
      VertexId c = kids[next++];
      out += '(';
      stack.emplace_back(c, 0);
    } else {
      out += ')';
      stack.pop_back();
    }
  }
  return out;
}

RootedTree parse_tree_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tree json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("parent") || !doc["parent"].is_array())
    throw ParseError("tree json: expected an object with a \"parent\" array");
  std::vector<VertexId> parent;
  for (const auto& p : doc["parent"]) {
    if (!p.is_number_integer()) throw ParseError("tree json: parent entries must be integers");
    parent.push_back(p.get<VertexId>());
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw ParseError("tree json: \"labels\" must be an array");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw ParseError("tree json: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  if (parent.empty()) throw ParseError("tree json: empty parent array");
  try {
    return RootedTree::from_parents(std::move(parent), std::move(labels));
  } catch (const DomainError& e) {
    throw ParseError(std::string("tree json: ") + e.what());
  }
}

std::string tree_to_json(const RootedTree& t) {
  nlohmann::json doc;
  doc["parent"] = t.parents();
  if (t.has_labels()) doc["labels"] = t.labels();
  return doc.dump();
}

RootedTree parse_tree_any(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_tree_json(text);
  try {
    return parse_tree(text);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string canonical_form(const RootedTree& t, VertexId v) {
  // Post-order over the subtree of v using a reversed preorder.
  std::vector<VertexId> order;
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (VertexId c : t.children(u)) stack.push_back(c);
  }
  std::vector<std::string> code(t.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId u = *it;
    std::vector<std::string> parts;
    for (VertexId c : t.children(u)) parts.push_back(std::move(code[static_cast<std::size_t>(c)]));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& p : parts) s += p;
    s += ')';
    code[static_cast<std::size_t>(u)] = std::move(s);
  }
  return code[static_cast<std::size_t>(v)];
}

std::string canonical_form(const RootedTree& t) { return canonical_form(t, t.root()); }

bool is_ancestor(const RootedTree& t, VertexId a, VertexId b) { return t.is_ancestor(a, b); }
VertexId meet(const RootedTree& t, VertexId a, VertexId b) { return t.meet(a, b); }

std::string to_dot(const RootedTree& t) {
  std::ostringstream out;
  out << "digraph {\n";
  for (VertexId v : t.preorder()) {
    std::string label = t.has_labels() ? t.label(v) : std::to_string(v);
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out << "  " << v << " [label=\"" << escaped << "\"];\n";
  }
  for (VertexId v : t.preorder())
    for (VertexId c : t.children(v)) out << "  " << v << " -> " << c << ";\n";
  out << "}\n";
  return out.str();
}

int SubtreeClasses::intern(std::vector<int> child_classes) {
  std::sort(child_classes.begin(), child_classes.end());
  auto it = ids_.find(child_classes);
  if (it != ids_.end()) return it->second;
  int id = static_cast<int>(children_.size());
  int size = 1;
  int height = 0;
  for (int c : child_classes) {
    size += vertex_count(c);
    height = std::max(height, this->height(c) + 1);
  }
  ids_.emplace(child_classes, id);
  children_.push_back(std::move(child_classes));
  sizes_.push_back(size);
  heights_.push_back(height);
  return id;
}

std::vector<int> SubtreeClasses::classify(const RootedTree& t) {
  std::vector<int> cls(t.size(), -1);
  const auto& order = t.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<int> kids;
    for (VertexId c : t.children(*it)) kids.push_back(cls[static_cast<std::size_t>(c)]);
    cls[static_cast<std::size_t>(*it)] = intern(std::move(kids));
  }
  return cls;
}

}  // namespace toptypes
