#include "sympcp/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "sympcp/errors.hpp"

namespace sympcp {

  Alphabet::Alphabet(std::vector<std::string> tokens)
      : _tokens(std::move(tokens)), _single_char(true) {
    if (_tokens.empty()) {
      throw Error("alphabet must contain at least one symbol");
    }
    std::set<std::string_view> seen;
    for (auto const& t : _tokens) {
      if (t.empty()) {
        throw Error("alphabet tokens must be non-empty");
      }
      if (!seen.insert(t).second) {
        throw Error("duplicate alphabet token \"" + t + "\"");
      }
      for (char c : t) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
          throw Error("alphabet token \"" + t
                      + "\" contains whitespace or a comma");
        }
      }
      _single_char = _single_char && t.size() == 1;
    }
  }

  std::shared_ptr<Alphabet const> Alphabet::digits(std::size_t n) {
    std::vector<std::string> tokens;
    tokens.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      tokens.push_back(std::to_string(i));
    }
    return std::make_shared<Alphabet const>(std::move(tokens));
  }

  std::string const& Alphabet::token(symbol_type s) const {
    if (s >= _tokens.size()) {
      throw Error("symbol index " + std::to_string(s)
                  + " out of range for alphabet of size "
                  + std::to_string(_tokens.size()));
    }
    return _tokens[s];
  }

  std::optional<symbol_type> Alphabet::find(std::string_view tok) const {
    auto it = std::find(_tokens.cbegin(), _tokens.cend(), tok);
    if (it == _tokens.cend()) {
      return std::nullopt;
    }
    return static_cast<symbol_type>(it - _tokens.cbegin());
  }

  symbol_type Alphabet::index(std::string_view tok) const {
    auto s = find(tok);
    if (!s) {
      throw Error("unknown symbol \"" + std::string(tok) + "\"");
    }
    return *s;
  }

  word_type Alphabet::parse(std::string_view text) const {
    word_type result;
    bool      separated = std::any_of(text.cbegin(), text.cend(), [](char c) {
      return c == ',' || std::isspace(static_cast<unsigned char>(c));
    });
    if (separated) {
      std::size_t i = 0;
      while (i < text.size()) {
        while (i < text.size()
               && (text[i] == ','
                   || std::isspace(static_cast<unsigned char>(text[i])))) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ','
               && !std::isspace(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        if (j > i) {
          result.push_back(index(text.substr(i, j - i)));
        }
        i = j;
      }
      return result;
    }
    if (!_single_char && !text.empty()) {
      // A lone multi-character token is still unambiguous.
      if (auto s = find(text)) {
        return {*s};
      }
      throw Error("word \"" + std::string(text)
                  + "\" must separate tokens with spaces or commas");
    }
    for (char c : text) {
      result.push_back(index(std::string_view(&c, 1)));
    }
    return result;
  }

  std::string Alphabet::render(word_type const& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0 && !_single_char) {
        out += ' ';
      }
      out += token(w[i]);
    }
    return out;
  }

  alphabet_ptr make_alphabet(std::vector<std::string> tokens) {
    return std::make_shared<Alphabet const>(std::move(tokens));
  }

  bool same_alphabet(alphabet_ptr const& a, alphabet_ptr const& b) {
    return a == b || (a != nullptr && b != nullptr && *a == *b);
  }

  ////////////////////////////////////////////////////////////////////////
  // Raw words
  ////////////////////////////////////////////////////////////////////////

  bool is_prefix(word_type const& p, word_type const& w) {
    return p.size() <= w.size() && std::equal(p.cbegin(), p.cend(), w.cbegin());
  }

  bool prefix_comparable(word_type const& u, word_type const& v) {
    return u.size() <= v.size() ? is_prefix(u, v) : is_prefix(v, u);
  }

  word_type concat(word_type const& u, word_type const& v) {
    word_type result;
    result.reserve(u.size() + v.size());
    result.insert(result.end(), u.cbegin(), u.cend());
    result.insert(result.end(), v.cbegin(), v.cend());
    return result;
  }

  void append(word_type& u, word_type const& v) {
    u.insert(u.end(), v.cbegin(), v.cend());
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(alphabet_ptr alphabet, word_type symbols)
      : _alphabet(std::move(alphabet)), _symbols(std::move(symbols)) {
    if (_alphabet == nullptr) {
      throw Error("word requires an alphabet");
    }
    for (auto s : _symbols) {
      if (s >= _alphabet->size()) {
        throw Error("symbol index " + std::to_string(s)
                    + " out of range for alphabet of size "
                    + std::to_string(_alphabet->size()));
      }
    }
  }

  Word Word::parse(alphabet_ptr alphabet, std::string_view text) {
    auto w = alphabet->parse(text);
    return Word(std::move(alphabet), std::move(w));
  }

  bool Word::operator==(Word const& that) const {
    return same_alphabet(_alphabet, that._alphabet)
           && _symbols == that._symbols;
  }

  namespace {
    void check_same_alphabet(Word const& u, Word const& v) {
      if (!same_alphabet(u.alphabet(), v.alphabet())) {
        throw Error("alphabet mismatch");
      }
    }
  }  // namespace

  Word concat(Word const& u, Word const& v) {
    check_same_alphabet(u, v);
    return Word(u.alphabet(), concat(u.symbols(), v.symbols()));
  }

  bool prefix_comparable(Word const& u, Word const& v) {
    check_same_alphabet(u, v);
    return prefix_comparable(u.symbols(), v.symbols());
  }

  ////////////////////////////////////////////////////////////////////////
  // PcpInstance
  ////////////////////////////////////////////////////////////////////////

  PcpInstance::PcpInstance(alphabet_ptr alphabet, std::vector<pair_type> pairs)
      : _alphabet(std::move(alphabet)), _pairs(std::move(pairs)) {
    if (_alphabet == nullptr) {
      throw Error("PCP instance requires an alphabet");
    }
    if (_pairs.empty()) {
      throw Error("PCP instance must have at least one pair");
    }
    std::set<pair_type> seen;
    for (std::size_t i = 0; i < _pairs.size(); ++i) {
      auto const& [u, v] = _pairs[i];
      for (auto const* w : {&u, &v}) {
        for (auto s : *w) {
          if (s >= _alphabet->size()) {
            throw Error("pair " + std::to_string(i)
                        + " uses a symbol outside the alphabet");
          }
        }
      }
      if (u == v) {
        throw Error("pair " + std::to_string(i) + " (" + _alphabet->render(u)
                    + ", " + _alphabet->render(v)
                    + ") is trivial: both coordinates are equal");
      }
      if (!seen.insert(_pairs[i]).second) {
        throw Error("pair " + std::to_string(i) + " (" + _alphabet->render(u)
                    + ", " + _alphabet->render(v) + ") is a duplicate");
      }
    }
  }

  pair_type const& PcpInstance::at(std::size_t i) const {
    if (i >= _pairs.size()) {
      throw Error("pair index " + std::to_string(i) + " out of range [0, "
                  + std::to_string(_pairs.size()) + ")");
    }
    return _pairs[i];
  }

  std::optional<std::size_t> PcpInstance::find(word_type const& u,
                                               word_type const& v) const {
    for (std::size_t i = 0; i < _pairs.size(); ++i) {
      if (_pairs[i].first == u && _pairs[i].second == v) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> PcpInstance::swap_index(std::size_t i) const {
    auto const& [u, v] = at(i);
    return find(v, u);
  }

  bool PcpInstance::operator==(PcpInstance const& that) const {
    return same_alphabet(_alphabet, that._alphabet) && _pairs == that._pairs;
  }

  ////////////////////////////////////////////////////////////////////////
  // PcpSolution
  ////////////////////////////////////////////////////////////////////////

  PcpSolution::PcpSolution(std::vector<std::size_t> indices)
      : _indices(std::move(indices)) {
    if (_indices.empty()) {
      throw Error("PCP solution must be a non-empty index sequence");
    }
  }

  bool canonical_less(PcpSolution const& a, PcpSolution const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a.indices() < b.indices();
  }

  pair_type concatenate(PcpInstance const& inst, PcpSolution const& sol) {
    pair_type result;
    for (auto j : sol.indices()) {
      auto const& [u, v] = inst.at(j);
      append(result.first, u);
      append(result.second, v);
    }
    return result;
  }

  bool check_solution(PcpInstance const& inst, PcpSolution const& sol) {
    auto [top, bottom] = concatenate(inst, sol);
    return top == bottom;
  }

  PcpInstance symmetric_closure(PcpInstance const& inst) {
    auto pairs = inst.pairs();
    for (auto const& [u, v] : inst.pairs()) {
      if (!inst.find(v, u)) {
        pairs.emplace_back(v, u);
      }
    }
    return PcpInstance(inst.alphabet(), std::move(pairs));
  }

  bool is_symmetric(PcpInstance const& inst) {
    for (std::size_t i = 0; i < inst.size(); ++i) {
      if (!inst.swap_index(i)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Binary recoding
  ////////////////////////////////////////////////////////////////////////

  std::size_t code_length(std::size_t alphabet_size) {
    if (alphabet_size < 2) {
      throw Error("binary coding needs an alphabet of size at least 2");
    }
    std::size_t ell = 0;
    while ((std::size_t(1) << ell) < alphabet_size) {
      ++ell;
    }
    return ell;
  }

  word_type binary_block(std::size_t position, std::size_t ell) {
    word_type block(ell, 0);
    for (std::size_t b = 0; b < ell; ++b) {
      block[ell - 1 - b] = static_cast<symbol_type>((position >> b) & 1);
    }
    return block;
  }

  PcpInstance binary_code(PcpInstance const& inst) {
    auto const ell = code_length(inst.alphabet()->size());
    std::vector<word_type> blocks;
    for (std::size_t p = 0; p < inst.alphabet()->size(); ++p) {
      blocks.push_back(binary_block(p, ell));
    }
    auto encode = [&blocks](word_type const& w) {
      word_type out;
      for (auto s : w) {
        append(out, blocks[s]);
      }
      return out;
    };
    std::vector<pair_type> pairs;
    pairs.reserve(inst.size());
    for (auto const& [u, v] : inst.pairs()) {
      pairs.emplace_back(encode(u), encode(v));
    }
    return PcpInstance(binary_alphabet(), std::move(pairs));
  }

  alphabet_ptr binary_alphabet() {
    static alphabet_ptr const alphabet = Alphabet::digits(2);
    return alphabet;
  }

  alphabet_ptr quaternary_alphabet() {
    static alphabet_ptr const alphabet = Alphabet::digits(4);
    return alphabet;
  }

  bool is_binary(PcpInstance const& inst) {
    return same_alphabet(inst.alphabet(), binary_alphabet());
  }

  word_type recode_4_to_2(word_type const& w) {
    word_type out;
    out.reserve(2 * w.size());
    for (auto d : w) {
      if (d > 3) {
        throw Error("recode_4_to_2 expects digits 0-3, found "
                    + std::to_string(d));
      }
      out.push_back(d >> 1);
      out.push_back(d & 1);
    }
    return out;
  }

  Word recode_4_to_2(Word const& w) {
    if (!same_alphabet(w.alphabet(), quaternary_alphabet())) {
      throw Error("recode_4_to_2 expects a word over {0,1,2,3}");
    }
    return Word(binary_alphabet(), recode_4_to_2(w.symbols()));
  }

}  // namespace sympcp
