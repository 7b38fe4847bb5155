#ifndef SYMPCP_SEARCH_HPP_
#define SYMPCP_SEARCH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympcp/errors.hpp"
#include "sympcp/words.hpp"

namespace sympcp {

  struct SearchLimits {
    std::size_t max_tiles    = 32;
    std::size_t max_overhang = 64;
    std::size_t max_states   = 1'000'000;

    // Throws sympcp::Error if any limit is zero.
    void validate() const;
  };

  enum class Outcome { solution, unsolvable, exhausted };

  [[nodiscard]] char const* to_string(Outcome o) noexcept;

  // Reason tags.
  namespace reason {
    inline constexpr char const* length_monotone = "length-monotone";
    inline constexpr char const* no_start        = "no-start";
    inline constexpr char const* state_exhausted = "state-exhausted";
  }  // namespace reason

  struct SearchStats {
    std::size_t states = 0;
    std::size_t depth  = 0;
  };

  // Result of a bounded search: a witness, a sound proof that none exists
  // (with a reason tag), or an indeterminate "limits hit". For exhausted
  // results the reason lists the limits that cut the search short.
  template <typename T>
  class SearchOutcome {
   public:
    static SearchOutcome found(T witness, SearchStats stats = {}) {
      return SearchOutcome(Outcome::solution, std::move(witness), {}, stats);
    }
    static SearchOutcome unsolvable(std::string why, SearchStats stats = {}) {
      return SearchOutcome(Outcome::unsolvable, std::nullopt, std::move(why),
                           stats);
    }
    static SearchOutcome exhausted(std::string why, SearchStats stats = {}) {
      return SearchOutcome(Outcome::exhausted, std::nullopt, std::move(why),
                           stats);
    }

    [[nodiscard]] Outcome kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] bool has_witness() const noexcept {
      return _witness.has_value();
    }
    [[nodiscard]] T const& witness() const {
      if (!_witness) {
        throw Error("search outcome carries no witness");
      }
      return *_witness;
    }
    [[nodiscard]] std::string const& reason() const noexcept {
      return _reason;
    }
    [[nodiscard]] SearchStats const& stats() const noexcept {
      return _stats;
    }

   private:
    SearchOutcome(Outcome          k,
                  std::optional<T> w,
                  std::string      why,
                  SearchStats      stats)
        : _kind(k),
          _witness(std::move(w)),
          _reason(std::move(why)),
          _stats(stats) {}

    Outcome          _kind;
    std::optional<T> _witness;
    std::string      _reason;
    SearchStats      _stats;
  };

  // Breadth-first search over overhang configurations. A returned solution is
  // the shortest one and, among those, lexicographically least.
  [[nodiscard]] SearchOutcome<PcpSolution> solve(PcpInstance const&  inst,
                                                 SearchLimits const& limits,
                                                 unsigned threads = 1);

  // Every solution of length <= max_tiles, in canonical order, by scanning
  // all k^n index sequences.
  [[nodiscard]] std::vector<PcpSolution>
  enumerate_solutions(PcpInstance const& inst, std::size_t max_tiles);

}  // namespace sympcp

#endif  // SYMPCP_SEARCH_HPP_
