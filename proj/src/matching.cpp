#include "toptypes/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace toptypes {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

BipartiteMatcher::BipartiteMatcher(std::size_t left, std::size_t right)
    : adjacency_(left), mate_left_(left, kUnmatched), mate_right_(right, kUnmatched), level_(left, kInf), cursor_(left, 0) {}

void BipartiteMatcher::add_edge(std::size_t u, std::size_t v) {
  if (u >= adjacency_.size() || v >= mate_right_.size())
    throw std::out_of_range("matching edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of bounds");
  adjacency_[u].push_back(static_cast<int>(v));
}

// BFS from free left vertices; true if some free right vertex is reachable.
bool BipartiteMatcher::layer() {
  std::queue<int> queue;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    if (mate_left_[u] == kUnmatched) {
      level_[u] = 0;
      queue.push(static_cast<int>(u));
    } else {
      level_[u] = kInf;
    }
  }
  bool found = false;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int v : adjacency_[static_cast<std::size_t>(u)]) {
      int w = mate_right_[static_cast<std::size_t>(v)];
      if (w == kUnmatched) {
        found = true;
      } else if (level_[static_cast<std::size_t>(w)] == kInf) {
        level_[static_cast<std::size_t>(w)] = level_[static_cast<std::size_t>(u)] + 1;
        queue.push(w);
      }
    }
  }
  return found;
}

bool BipartiteMatcher::augment(int u) {
  auto uu = static_cast<std::size_t>(u);
  for (auto& k = cursor_[uu]; k < adjacency_[uu].size(); ++k) {
    int v = adjacency_[uu][k];
    int w = mate_right_[static_cast<std::size_t>(v)];
    if (w == kUnmatched || (level_[static_cast<std::size_t>(w)] == level_[uu] + 1 && augment(w))) {
      mate_left_[uu] = v;
      mate_right_[static_cast<std::size_t>(v)] = u;
      return true;
    }
  }
  level_[uu] = kInf;
  return false;
}

std::size_t BipartiteMatcher::solve() {
  std::size_t size = 0;
  for (int m : mate_left_)
    if (m != kUnmatched) ++size;
  while (layer()) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
      if (mate_left_[u] == kUnmatched && augment(static_cast<int>(u))) ++size;
  }
  return size;
}

}  // namespace toptypes
