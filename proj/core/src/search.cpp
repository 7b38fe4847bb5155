#include "sympcp/search.hpp"

#include <algorithm>

#include "sympcp/detail/layered_bfs.hpp"
#include "sympcp/detail/overhang.hpp"

namespace sympcp {

  void SearchLimits::validate() const {
    if (max_tiles == 0 || max_overhang == 0 || max_states == 0) {
      throw Error("search limits must be positive");
    }
  }

  char const* to_string(Outcome o) noexcept {
    switch (o) {
      case Outcome::solution:
        return "solution";
      case Outcome::unsolvable:
        return "unsolvable";
      case Outcome::exhausted:
        return "exhausted";
    }
    return "?";
  }

  namespace {
    struct OverhangHash {
      std::size_t operator()(detail::Overhang const& o) const {
        return detail::hash_value(o);
      }
    };

    std::string limits_hit(detail::BfsResult const& r) {
      std::string out;
      auto        add = [&out](char const* s) {
        out += out.empty() ? "" : ",";
        out += s;
      };
      if (r.depth_hit) {
        add("max-tiles");
      }
      if (r.overhang_hit) {
        add("max-overhang");
      }
      if (r.states_hit) {
        add("max-states");
      }
      return out;
    }
  }  // namespace

  SearchOutcome<PcpSolution> solve(PcpInstance const&  inst,
                                   SearchLimits const& limits,
                                   unsigned            threads) {
    limits.validate();
    using Outcome = SearchOutcome<PcpSolution>;

    auto const& pairs = inst.pairs();
    bool        all_longer_top = true, all_longer_bottom = true;
    bool        any_start = false;
    for (auto const& [u, v] : pairs) {
      all_longer_top    = all_longer_top && u.size() > v.size();
      all_longer_bottom = all_longer_bottom && u.size() < v.size();
      any_start         = any_start || prefix_comparable(u, v);
    }
    if (all_longer_top || all_longer_bottom) {
      return Outcome::unsolvable(reason::length_monotone);
    }
    if (!any_start) {
      return Outcome::unsolvable(reason::no_start);
    }

    using Succ  = detail::Successor<detail::Overhang>;
    auto expand = [&](detail::Overhang const& o) {
      std::vector<Succ> out;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto next = detail::extend(o, pairs[i].first, pairs[i].second);
        if (!next) {
          continue;
        }
        if (next->empty()) {
          out.push_back({Succ::Kind::accept, i, {}});
        } else if (next->rest.size() > limits.max_overhang) {
          out.push_back({Succ::Kind::too_long, i, {}});
        } else {
          out.push_back({Succ::Kind::state, i, std::move(*next)});
        }
      }
      return out;
    };

    auto result = detail::layered_bfs<detail::Overhang, OverhangHash>(
        detail::Overhang{}, expand, limits.max_tiles, limits.max_states,
        threads);
    SearchStats stats{result.states, result.depth};
    if (result.moves) {
      return Outcome::found(PcpSolution(std::move(*result.moves)), stats);
    }
    if (result.truncated()) {
      return Outcome::exhausted(limits_hit(result), stats);
    }
    return Outcome::unsolvable(reason::state_exhausted, stats);
  }

  std::vector<PcpSolution> enumerate_solutions(PcpInstance const& inst,
                                               std::size_t max_tiles) {
    std::vector<PcpSolution> found;
    std::size_t const        k = inst.size();
    for (std::size_t n = 1; n <= max_tiles; ++n) {
      // Odometer over {0..k-1}^n in lexicographic order.
      std::vector<std::size_t> seq(n, 0);
      while (true) {
        PcpSolution candidate(seq);
        if (check_solution(inst, candidate)) {
          found.push_back(std::move(candidate));
        }
        std::size_t pos = n;
        while (pos > 0 && seq[pos - 1] == k - 1) {
          seq[--pos] = 0;
        }
        if (pos == 0) {
          break;
        }
        ++seq[pos - 1];
      }
    }
    return found;
  }

}  // namespace sympcp
