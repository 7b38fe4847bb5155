#ifndef SYMPCP_DETAIL_LAYERED_BFS_HPP_
#define SYMPCP_DETAIL_LAYERED_BFS_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

namespace sympcp::detail {

  template <typename State>
  struct Successor {
    enum class Kind { state, accept, too_long };
    Kind        kind;
    std::size_t move;
    State       state;
  };

  struct BfsResult {
    std::optional<std::vector<std::size_t>> moves;
    bool                                    overhang_hit = false;
    bool                                    states_hit   = false;
    bool                                    depth_hit    = false;
    std::size_t                             states       = 0;
    std::size_t                             depth        = 0;

    [[nodiscard]] bool truncated() const noexcept {
      return overhang_hit || states_hit || depth_hit;
    }
  };

  // Runs fn(i) for i in [0, n), split into contiguous chunks over at most
  // `threads` workers.
  template <typename Fn>
  void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    threads = std::max(1u, threads);
    if (threads == 1 || n < 2 * threads) {
      for (std::size_t i = 0; i < n; ++i) {
        fn(i);
      }
      return;
    }
    std::size_t const        chunk = (n + threads - 1) / threads;
    std::vector<std::jthread> workers;
    for (std::size_t lo = 0; lo < n; lo += chunk) {
      std::size_t const hi = std::min(n, lo + chunk);
      workers.emplace_back([lo, hi, &fn] {
        for (std::size_t i = lo; i < hi; ++i) {
          fn(i);
        }
      });
    }
  }

  // Breadth-first search by path length over a graph whose successors depend
  // only on the state. States reached again are merged into their first
  // occurrence. Successors must be listed in increasing move order; with that
  // the first accepted path is the shortest and, among those, the
  // lexicographically least move sequence. Layers may be expanded by several
  // workers, but results are merged in layer order, so the outcome does not
  // depend on `threads`.
  template <typename State, typename Hash, typename Expand>
  BfsResult layered_bfs(State       start,
                        Expand&&    expand,
                        std::size_t max_depth,
                        std::size_t max_states,
                        unsigned    threads) {
    constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    struct Node {
      std::size_t parent;
      std::size_t move;
    };

    BfsResult                        result;
    std::vector<Node>                nodes{{npos, 0}};
    std::unordered_set<State, Hash>  visited{start};
    std::vector<std::pair<State, std::size_t>> layer;
    layer.emplace_back(std::move(start), 0);

    auto path_to = [&nodes](std::size_t node, std::size_t last) {
      std::vector<std::size_t> moves{last};
      for (; nodes[node].parent != npos; node = nodes[node].parent) {
        moves.push_back(nodes[node].move);
      }
      std::reverse(moves.begin(), moves.end());
      return moves;
    };

    for (std::size_t depth = 0; !layer.empty(); ++depth) {
      std::vector<std::vector<Successor<State>>> children(layer.size());
      parallel_for(layer.size(), threads, [&](std::size_t i) {
        children[i] = expand(layer[i].first);
      });

      if (depth == max_depth) {
        // Only decide whether the bound cut anything off.
        for (auto const& succs : children) {
          for (auto const& s : succs) {
            if (s.kind != Successor<State>::Kind::state
                || !visited.contains(s.state)) {
              result.depth_hit = true;
            }
          }
        }
        break;
      }

      std::vector<std::pair<State, std::size_t>> next;
      for (std::size_t i = 0; i < layer.size(); ++i) {
        for (auto& s : children[i]) {
          switch (s.kind) {
            case Successor<State>::Kind::too_long:
              result.overhang_hit = true;
              break;
            case Successor<State>::Kind::accept:
              result.moves  = path_to(layer[i].second, s.move);
              result.depth  = depth + 1;
              result.states = visited.size();
              return result;
            case Successor<State>::Kind::state:
              if (visited.contains(s.state)) {
                break;
              }
              if (visited.size() >= max_states) {
                result.states_hit = true;
                break;
              }
              visited.insert(s.state);
              nodes.push_back({layer[i].second, s.move});
              next.emplace_back(std::move(s.state), nodes.size() - 1);
              break;
          }
        }
      }
      layer        = std::move(next);
      result.depth = depth + 1;
    }
    result.states = visited.size();
    return result;
  }

}  // namespace sympcp::detail

#endif  // SYMPCP_DETAIL_LAYERED_BFS_HPP_
