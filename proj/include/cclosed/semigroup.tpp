#pragma once

namespace cclosed::detail {

  // Depth-first search that tries to include each candidate before skipping
  // it, so cliques are visited in lexicographic order and the first clique of
  // the maximum size is the least one. A branch is cut when it cannot beat
  // the best size found so far. Cliques are not grown beyond `cap` members.
  template <typename Adjacent>
  std::vector<element_type> max_clique(std::vector<element_type> const& candidates,
                                       Adjacent&&                       adjacent,
                                       std::size_t                      cap) {
    std::vector<element_type> best;
    std::vector<element_type> current;

    auto search = [&](auto&& self, std::vector<element_type> const& pool) -> void {
      if (current.size() + pool.size() <= best.size()
          || best.size() == cap) {
        return;
      }
      if (pool.empty() || current.size() == cap) {
        best = current;
        return;
      }
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (current.size() + (pool.size() - i) <= best.size()) {
          return;
        }
        std::vector<element_type> next;
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
          if (adjacent(pool[i], pool[j])) {
            next.push_back(pool[j]);
          }
        }
        current.push_back(pool[i]);
        self(self, next);
        current.pop_back();
      }
    };
    search(search, candidates);
    return best;
  }

}  // namespace cclosed::detail
