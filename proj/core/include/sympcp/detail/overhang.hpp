#ifndef SYMPCP_DETAIL_OVERHANG_HPP_
#define SYMPCP_DETAIL_OVERHANG_HPP_

#include <cstddef>
#include <optional>

#include <boost/container_hash/hash.hpp>

#include "sympcp/words.hpp"

namespace sympcp::detail {

  // The unmatched suffix of the longer of two words that are prefix
  // comparable, together with which of them is ahead. An empty overhang is
  // always stored with top_ahead == true.
  struct Overhang {
    bool      top_ahead = true;
    word_type rest;

    [[nodiscard]] bool empty() const noexcept {
      return rest.empty();
    }
    bool operator==(Overhang const&) const = default;
  };

  inline std::size_t hash_value(Overhang const& o) {
    std::size_t seed = o.top_ahead ? 0x9e3779b9 : 0;
    boost::hash_range(seed, o.rest.cbegin(), o.rest.cend());
    return seed;
  }

  // Appends top_add to the top word and bottom_add to the bottom word.
  // Returns nullopt when the two sides stop being prefix comparable.
  inline std::optional<Overhang> extend(Overhang const&  o,
                                        word_type const& top_add,
                                        word_type const& bottom_add) {
    word_type const* ahead_add  = o.top_ahead ? &top_add : &bottom_add;
    word_type const* behind_add = o.top_ahead ? &bottom_add : &top_add;
    // Lengthened leading side is o.rest + *ahead_add; trailing side gains
    // *behind_add.
    std::size_t const lead_len = o.rest.size() + ahead_add->size();
    auto              lead_at  = [&](std::size_t i) {
      return i < o.rest.size() ? o.rest[i] : (*ahead_add)[i - o.rest.size()];
    };
    std::size_t const common = std::min(lead_len, behind_add->size());
    for (std::size_t i = 0; i < common; ++i) {
      if (lead_at(i) != (*behind_add)[i]) {
        return std::nullopt;
      }
    }
    Overhang result;
    if (lead_len >= behind_add->size()) {
      result.top_ahead = o.top_ahead;
      result.rest.reserve(lead_len - common);
      for (std::size_t i = common; i < lead_len; ++i) {
        result.rest.push_back(lead_at(i));
      }
    } else {
      result.top_ahead = !o.top_ahead;
      result.rest.assign(behind_add->cbegin() + common, behind_add->cend());
    }
    if (result.rest.empty()) {
      result.top_ahead = true;
    }
    return result;
  }

}  // namespace sympcp::detail

#endif  // SYMPCP_DETAIL_OVERHANG_HPP_
