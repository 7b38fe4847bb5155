#ifndef SYMPCP_FLOYD_HPP_
#define SYMPCP_FLOYD_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "sympcp/words.hpp"

namespace sympcp {

  // A finite semigroup presentation <B | R>. The relation list is closed
  // under swapping on construction: missing swaps are appended in order and
  // duplicates are dropped. Both sides of a relation must be non-empty and
  // distinct.
  class Presentation {
   public:
    Presentation(alphabet_ptr letters, std::vector<pair_type> relations);

    [[nodiscard]] alphabet_ptr const& letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] std::vector<pair_type> const& relations() const noexcept {
      return _relations;
    }
    [[nodiscard]] std::optional<std::size_t>
    find(word_type const& lhs, word_type const& rhs) const;

   private:
    alphabet_ptr           _letters;
    std::vector<pair_type> _relations;
  };

  // x_t = p . lhs . s  and  x_{t+1} = p . rhs . s, where
  // (lhs, rhs) = relations()[relation] and |p| = position.
  struct RewriteWitness {
    std::size_t position = 0;
    std::size_t relation = 0;

    bool operator==(RewriteWitness const&) const = default;
  };

  // x_1 -> x_2 -> ... -> x_n. A step without a witness is a copy step
  // (x_{t+1} = x_t).
  class Derivation {
   public:
    Derivation(std::vector<word_type>                     steps,
               std::vector<std::optional<RewriteWitness>> witnesses);

    [[nodiscard]] std::vector<word_type> const& steps() const noexcept {
      return _steps;
    }
    [[nodiscard]] std::vector<std::optional<RewriteWitness>> const&
    witnesses() const noexcept {
      return _witnesses;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _steps.size();
    }
    [[nodiscard]] word_type const& front() const {
      return _steps.front();
    }
    [[nodiscard]] word_type const& back() const {
      return _steps.back();
    }

    bool operator==(Derivation const&) const = default;

   private:
    std::vector<word_type>                     _steps;
    std::vector<std::optional<RewriteWitness>> _witnesses;
  };

  // True iff every step is what its witness says. Throws sympcp::Error on a
  // witness that points outside the word or at a missing relation, and on
  // words that are empty or leave the alphabet.
  [[nodiscard]] bool check_derivation(Presentation const& pres,
                                      Derivation const&   d);

  // The PCP alphabet {<, >, o, o~} u B u B~. Tokens: "<" and ">" for the
  // left and right boundary markers, "o" for the ring, and a trailing "~"
  // for the overline.
  class FloydAlphabet {
   public:
    static constexpr symbol_type left_mark  = 0;
    static constexpr symbol_type right_mark = 1;
    static constexpr symbol_type ring       = 2;
    static constexpr symbol_type ring_bar   = 3;

    explicit FloydAlphabet(Alphabet const& letters);

    [[nodiscard]] alphabet_ptr const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::size_t letter_count() const noexcept {
      return _letters;
    }

    [[nodiscard]] symbol_type letter(symbol_type b) const {
      return static_cast<symbol_type>(4 + b);
    }
    [[nodiscard]] symbol_type letter_bar(symbol_type b) const {
      return static_cast<symbol_type>(4 + _letters + b);
    }
    [[nodiscard]] bool is_letter(symbol_type s) const noexcept {
      return s >= 4 && s < 4 + _letters;
    }
    [[nodiscard]] bool is_letter_bar(symbol_type s) const noexcept {
      return s >= 4 + _letters && s < 4 + 2 * _letters;
    }
    // The B-index of a plain or overlined letter.
    [[nodiscard]] symbol_type base(symbol_type s) const noexcept {
      return is_letter_bar(s) ? s - 4 - static_cast<symbol_type>(_letters)
                              : s - 4;
    }

    // Overline as an involution on B u B~ u {o, o~}.
    [[nodiscard]] symbol_type bar(symbol_type s) const;

    [[nodiscard]] word_type plain(word_type const& x) const;
    [[nodiscard]] word_type overlined(word_type const& x) const;

   private:
    std::size_t  _letters;
    alphabet_ptr _alphabet;
  };

  // Letter copies (b, b~), (b~, b) for b in B u {o}; relation pairs
  // (u, v~), (u~, v) for (u, v) in R; and the boundary pairs (<xo, <) and
  // (>, o~y>). That is 2|B| + 2 + 2|R| + 2 pairs.
  [[nodiscard]] PcpInstance build_pcp(Presentation const& pres,
                                      word_type const&    x,
                                      word_type const&    y);
  // build_pcp plus (<, <xo) and (o~y>, >); always symmetric.
  [[nodiscard]] PcpInstance build_sympcp(Presentation const& pres,
                                         word_type const&    x,
                                         word_type const&    y);

  // Pads the derivation to an odd number of words, at least 3, with copy
  // steps and spells it as a solution of build_sympcp(pres, x_1, x_n). The
  // first pair used is (<x_1 o, <), so it also solves build_pcp. Throws
  // InvalidDerivation if check_derivation fails.
  [[nodiscard]] PcpSolution derivation_to_solution(Presentation const& pres,
                                                   Derivation const&   d);

  // Reads a derivation from x to y off a solution of build_sympcp(pres, x,
  // y). Only the shortest prefix of `sol` that is itself a solution is
  // used. A solution starting with (<, <xo) is read with its coordinates
  // swapped. Multi-relation blocks become one step per relation; blocks
  // without relation pairs become copy steps. Throws MalformedSolution.
  [[nodiscard]] Derivation solution_to_derivation(Presentation const& pres,
                                                  word_type const&    x,
                                                  word_type const&    y,
                                                  PcpSolution const&  sol);

}  // namespace sympcp

#endif  // SYMPCP_FLOYD_HPP_
