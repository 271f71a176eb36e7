#pragma once

#include <cstddef>
#include <vector>

namespace toptypes {

// Maximum-cardinality matching in a bipartite graph (Hopcroft-Karp).
// Left vertices 0..left-1, right vertices 0..right-1.
class BipartiteMatcher {
 public:
  static constexpr int kUnmatched = -1;

  BipartiteMatcher(std::size_t left, std::size_t right);

  void add_edge(std::size_t u, std::size_t v);

  // Runs to completion and returns the matching size.
  std::size_t solve();

  // Partner of left vertex u after solve(), or kUnmatched.
  int mate_of_left(std::size_t u) const { return mate_left_[u]; }
  int mate_of_right(std::size_t v) const { return mate_right_[v]; }

 private:
  bool layer();
  bool augment(int u);

  std::vector<std::vector<int>> adjacency_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace toptypes
