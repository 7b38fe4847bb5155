#ifndef SYMPCP_WORDS_HPP_
#define SYMPCP_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sympcp {

  using symbol_type = std::uint32_t;
  using word_type   = std::vector<symbol_type>;
  using pair_type   = std::pair<word_type, word_type>;

  // An ordered table of distinct symbol tokens. The table order fixes every
  // canonical encoding (binary codes, JSON, text rendering).
  class Alphabet {
   public:
    explicit Alphabet(std::vector<std::string> tokens);

    // The alphabet {"0", "1", ..., "n-1"}.
    static std::shared_ptr<Alphabet const> digits(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept {
      return _tokens.size();
    }
    [[nodiscard]] std::vector<std::string> const& tokens() const noexcept {
      return _tokens;
    }
    [[nodiscard]] std::string const& token(symbol_type s) const;
    [[nodiscard]] std::optional<symbol_type> find(std::string_view tok) const;
    [[nodiscard]] symbol_type index(std::string_view tok) const;

    // True if every token is exactly one character, so words can be written
    // as plain strings.
    [[nodiscard]] bool single_character() const noexcept {
      return _single_char;
    }

    // Reads a word from text. Whitespace- or comma-separated tokens are
    // accepted for any alphabet; otherwise the text is read one character
    // per symbol, which needs a single-character alphabet.
    [[nodiscard]] word_type parse(std::string_view text) const;
    [[nodiscard]] std::string render(word_type const& w) const;

    bool operator==(Alphabet const& that) const noexcept {
      return _tokens == that._tokens;
    }

   private:
    std::vector<std::string> _tokens;
    bool                     _single_char;
  };

  using alphabet_ptr = std::shared_ptr<Alphabet const>;

  alphabet_ptr make_alphabet(std::vector<std::string> tokens);
  bool         same_alphabet(alphabet_ptr const& a, alphabet_ptr const& b);

  // Raw word helpers; callers are responsible for alphabet agreement.
  [[nodiscard]] bool is_prefix(word_type const& p, word_type const& w);
  [[nodiscard]] bool prefix_comparable(word_type const& u, word_type const& v);
  [[nodiscard]] word_type concat(word_type const& u, word_type const& v);
  void                    append(word_type& u, word_type const& v);

  // A word tagged with its alphabet.
  class Word {
   public:
    Word(alphabet_ptr alphabet, word_type symbols);
    static Word parse(alphabet_ptr alphabet, std::string_view text);

    [[nodiscard]] alphabet_ptr const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] word_type const& symbols() const noexcept {
      return _symbols;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _symbols.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _symbols.empty();
    }
    [[nodiscard]] std::string str() const {
      return _alphabet->render(_symbols);
    }

    bool operator==(Word const& that) const;

   private:
    alphabet_ptr _alphabet;
    word_type    _symbols;
  };

  // Both throw sympcp::Error on alphabet mismatch.
  [[nodiscard]] Word concat(Word const& u, Word const& v);
  [[nodiscard]] bool prefix_comparable(Word const& u, Word const& v);

  // A non-empty sequence of distinct non-trivial pairs (u_i, v_i), u_i != v_i.
  class PcpInstance {
   public:
    PcpInstance(alphabet_ptr alphabet, std::vector<pair_type> pairs);

    [[nodiscard]] alphabet_ptr const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::vector<pair_type> const& pairs() const noexcept {
      return _pairs;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _pairs.size();
    }
    [[nodiscard]] pair_type const& at(std::size_t i) const;

    [[nodiscard]] std::optional<std::size_t> find(word_type const& u,
                                                  word_type const& v) const;
    // Index of (v_i, u_i), if present.
    [[nodiscard]] std::optional<std::size_t> swap_index(std::size_t i) const;

    bool operator==(PcpInstance const& that) const;

   private:
    alphabet_ptr           _alphabet;
    std::vector<pair_type> _pairs;
  };

  // A non-empty index sequence (j_1, ..., j_n).
  class PcpSolution {
   public:
    PcpSolution(std::vector<std::size_t> indices);
    PcpSolution(std::initializer_list<std::size_t> indices)
        : PcpSolution(std::vector<std::size_t>(indices)) {}

    [[nodiscard]] std::vector<std::size_t> const& indices() const noexcept {
      return _indices;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _indices.size();
    }
    [[nodiscard]] std::size_t operator[](std::size_t i) const {
      return _indices.at(i);
    }

    bool operator==(PcpSolution const&) const = default;

   private:
    std::vector<std::size_t> _indices;
  };

  // Shorter first, then lexicographic by index.
  [[nodiscard]] bool canonical_less(PcpSolution const& a,
                                    PcpSolution const& b);

  // (u_{j_1} ... u_{j_n}, v_{j_1} ... v_{j_n}); throws on an index >= k.
  [[nodiscard]] pair_type concatenate(PcpInstance const& inst,
                                      PcpSolution const& sol);
  [[nodiscard]] bool      check_solution(PcpInstance const& inst,
                                         PcpSolution const& sol);

  // Appends the swapped pairs that are missing, in original order.
  [[nodiscard]] PcpInstance symmetric_closure(PcpInstance const& inst);
  [[nodiscard]] bool        is_symmetric(PcpInstance const& inst);

  // ceil(log2(n)) for n >= 2.
  [[nodiscard]] std::size_t code_length(std::size_t alphabet_size);
  // Symbol at table position p becomes the ell-bit numeral of p, most
  // significant bit first.
  [[nodiscard]] word_type   binary_block(std::size_t position, std::size_t ell);
  [[nodiscard]] PcpInstance binary_code(PcpInstance const& inst);

  [[nodiscard]] alphabet_ptr binary_alphabet();
  [[nodiscard]] alphabet_ptr quaternary_alphabet();
  [[nodiscard]] bool         is_binary(PcpInstance const& inst);

  // 0 -> 00, 1 -> 01, 2 -> 10, 3 -> 11.
  [[nodiscard]] word_type recode_4_to_2(word_type const& w);
  [[nodiscard]] Word      recode_4_to_2(Word const& w);

}  // namespace sympcp

#endif  // SYMPCP_WORDS_HPP_
