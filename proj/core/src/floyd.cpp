#include "sympcp/floyd.hpp"

#include <algorithm>
#include <set>

#include "sympcp/errors.hpp"

namespace sympcp {

  namespace {
    void check_letters(Alphabet const& letters, word_type const& w) {
      for (auto s : w) {
        if (s >= letters.size()) {
          throw Error("symbol index " + std::to_string(s)
                      + " is not a letter of the presentation");
        }
      }
    }

    void check_nonempty_word(Alphabet const& letters,
                             word_type const& w,
                             char const*      what) {
      if (w.empty()) {
        throw Error(std::string(what) + " must be a non-empty word");
      }
      check_letters(letters, w);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Presentation and Derivation
  ////////////////////////////////////////////////////////////////////////

  Presentation::Presentation(alphabet_ptr letters, std::vector<pair_type> rels)
      : _letters(std::move(letters)), _relations() {
    if (_letters == nullptr) {
      throw Error("presentation requires an alphabet");
    }
    std::set<pair_type> seen;
    auto                add = [&](word_type const& l, word_type const& r) {
      if (seen.emplace(l, r).second) {
        _relations.emplace_back(l, r);
      }
    };
    for (auto const& [l, r] : rels) {
      check_nonempty_word(*_letters, l, "relation side");
      check_nonempty_word(*_letters, r, "relation side");
      if (l == r) {
        throw Error("relation " + _letters->render(l) + " = "
                    + _letters->render(r) + " is trivial");
      }
      add(l, r);
    }
    for (auto const& [l, r] : rels) {
      add(r, l);
    }
  }

  std::optional<std::size_t> Presentation::find(word_type const& lhs,
                                                word_type const& rhs) const {
    for (std::size_t i = 0; i < _relations.size(); ++i) {
      if (_relations[i].first == lhs && _relations[i].second == rhs) {
        return i;
      }
    }
    return std::nullopt;
  }

  Derivation::Derivation(std::vector<word_type>                     steps,
                         std::vector<std::optional<RewriteWitness>> witnesses)
      : _steps(std::move(steps)), _witnesses(std::move(witnesses)) {
    if (_steps.empty()) {
      throw Error("derivation must contain at least one word");
    }
    if (_witnesses.size() + 1 != _steps.size()) {
      throw Error("derivation with " + std::to_string(_steps.size())
                  + " words needs " + std::to_string(_steps.size() - 1)
                  + " witnesses, got " + std::to_string(_witnesses.size()));
    }
  }

  bool check_derivation(Presentation const& pres, Derivation const& d) {
    auto const& letters = *pres.letters();
    for (auto const& w : d.steps()) {
      check_nonempty_word(letters, w, "derivation word");
    }
    bool ok = true;
    for (std::size_t t = 0; t + 1 < d.size(); ++t) {
      auto const& from = d.steps()[t];
      auto const& to   = d.steps()[t + 1];
      auto const& wit  = d.witnesses()[t];
      if (!wit) {
        ok = ok && from == to;
        continue;
      }
      if (wit->relation >= pres.relations().size()) {
        throw Error("step " + std::to_string(t + 1) + " names relation "
                    + std::to_string(wit->relation) + " but there are only "
                    + std::to_string(pres.relations().size()));
      }
      auto const& [lhs, rhs] = pres.relations()[wit->relation];
      if (wit->position + lhs.size() > from.size()) {
        throw Error("step " + std::to_string(t + 1) + " rewrites at position "
                    + std::to_string(wit->position)
                    + " past the end of the word");
      }
      auto const p = static_cast<std::ptrdiff_t>(wit->position);
      bool const step_ok
          = std::equal(lhs.cbegin(), lhs.cend(), from.cbegin() + p)
            && to.size() == from.size() - lhs.size() + rhs.size()
            && std::equal(from.cbegin(), from.cbegin() + p, to.cbegin())
            && std::equal(rhs.cbegin(), rhs.cend(), to.cbegin() + p)
            && std::equal(from.cbegin() + p
                              + static_cast<std::ptrdiff_t>(lhs.size()),
                          from.cend(),
                          to.cbegin() + p
                              + static_cast<std::ptrdiff_t>(rhs.size()));
      ok = ok && step_ok;
    }
    return ok;
  }

  ////////////////////////////////////////////////////////////////////////
  // FloydAlphabet
  ////////////////////////////////////////////////////////////////////////

  FloydAlphabet::FloydAlphabet(Alphabet const& letters)
      : _letters(letters.size()), _alphabet() {
    std::vector<std::string> tokens{"<", ">", "o", "o~"};
    for (auto const& t : letters.tokens()) {
      if (t == "<" || t == ">" || t == "o" || t.back() == '~') {
        throw Error("letter \"" + t
                    + "\" clashes with the reduction's reserved tokens "
                      "(<, >, o, trailing ~)");
      }
      tokens.push_back(t);
    }
    for (auto const& t : letters.tokens()) {
      tokens.push_back(t + "~");
    }
    _alphabet = make_alphabet(std::move(tokens));
  }

  symbol_type FloydAlphabet::bar(symbol_type s) const {
    if (s == ring) {
      return ring_bar;
    }
    if (s == ring_bar) {
      return ring;
    }
    if (is_letter(s)) {
      return letter_bar(base(s));
    }
    if (is_letter_bar(s)) {
      return letter(base(s));
    }
    throw Error("boundary markers have no overline");
  }

  word_type FloydAlphabet::plain(word_type const& x) const {
    word_type out;
    out.reserve(x.size());
    for (auto b : x) {
      out.push_back(letter(b));
    }
    return out;
  }

  word_type FloydAlphabet::overlined(word_type const& x) const {
    word_type out;
    out.reserve(x.size());
    for (auto b : x) {
      out.push_back(letter_bar(b));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The reduction
  ////////////////////////////////////////////////////////////////////////

  namespace {
    pair_type start_pair(FloydAlphabet const& A, word_type const& x) {
      word_type top{FloydAlphabet::left_mark};
      append(top, A.plain(x));
      top.push_back(FloydAlphabet::ring);
      return {top, {FloydAlphabet::left_mark}};
    }

    pair_type end_pair(FloydAlphabet const& A, word_type const& y) {
      word_type bottom{FloydAlphabet::ring_bar};
      append(bottom, A.plain(y));
      bottom.push_back(FloydAlphabet::right_mark);
      return {{FloydAlphabet::right_mark}, bottom};
    }

    std::vector<pair_type> floyd_pairs(Presentation const&  pres,
                                       FloydAlphabet const& A,
                                       word_type const&     x,
                                       word_type const&     y) {
      auto const& letters = *pres.letters();
      check_nonempty_word(letters, x, "x");
      check_nonempty_word(letters, y, "y");
      std::vector<pair_type> pairs;
      std::vector<symbol_type> copyable;
      for (symbol_type b = 0; b < letters.size(); ++b) {
        copyable.push_back(A.letter(b));
      }
      copyable.push_back(FloydAlphabet::ring);
      for (auto s : copyable) {
        pairs.push_back({{s}, {A.bar(s)}});
      }
      for (auto s : copyable) {
        pairs.push_back({{A.bar(s)}, {s}});
      }
      for (auto const& [u, v] : pres.relations()) {
        pairs.emplace_back(A.plain(u), A.overlined(v));
      }
      for (auto const& [u, v] : pres.relations()) {
        pairs.emplace_back(A.overlined(u), A.plain(v));
      }
      pairs.push_back(start_pair(A, x));
      pairs.push_back(end_pair(A, y));
      return pairs;
    }
  }  // namespace

  PcpInstance build_pcp(Presentation const& pres,
                        word_type const&    x,
                        word_type const&    y) {
    FloydAlphabet A(*pres.letters());
    return PcpInstance(A.alphabet(), floyd_pairs(pres, A, x, y));
  }

  PcpInstance build_sympcp(Presentation const& pres,
                           word_type const&    x,
                           word_type const&    y) {
    FloydAlphabet A(*pres.letters());
    auto          pairs = floyd_pairs(pres, A, x, y);
    auto [st, sb]       = start_pair(A, x);
    auto [et, eb]       = end_pair(A, y);
    pairs.emplace_back(sb, st);
    pairs.emplace_back(eb, et);
    return PcpInstance(A.alphabet(), std::move(pairs));
  }

  PcpSolution derivation_to_solution(Presentation const& pres,
                                     Derivation const&   d) {
    if (!check_derivation(pres, d)) {
      throw InvalidDerivation("derivation does not follow its witnesses");
    }
    auto steps     = d.steps();
    auto witnesses = d.witnesses();
    while (steps.size() < 3 || steps.size() % 2 == 0) {
      steps.push_back(steps.back());
      witnesses.emplace_back(std::nullopt);
    }

    FloydAlphabet A(*pres.letters());
    auto const    inst = build_sympcp(pres, steps.front(), steps.back());
    std::vector<std::size_t> indices;
    auto                     use = [&](word_type const& top,
                   word_type const& bottom) {
      auto i = inst.find(top, bottom);
      if (!i) {
        throw InvalidDerivation("derivation uses a pair outside the reduction");
      }
      indices.push_back(*i);
    };

    auto const first = start_pair(A, steps.front());
    use(first.first, first.second);
    std::size_t const n = steps.size();
    for (std::size_t t = 1; t < n; ++t) {
      // Step t rewrites x_t into x_{t+1}; on odd t the top row carries the
      // overlined copy of x_{t+1}.
      bool const  top_bar = t % 2 == 1;
      auto const& from    = steps[t - 1];
      auto const& wit     = witnesses[t - 1];
      auto        copy    = [&](symbol_type b) {
        word_type p{A.letter(b)}, q{A.letter_bar(b)};
        top_bar ? use(q, p) : use(p, q);
      };
      std::size_t pos = 0;
      while (pos < from.size()) {
        if (wit && pos == wit->position) {
          auto const& [lhs, rhs] = pres.relations()[wit->relation];
          top_bar ? use(A.overlined(rhs), A.plain(lhs))
                  : use(A.plain(rhs), A.overlined(lhs));
          pos += lhs.size();
        } else {
          copy(from[pos++]);
        }
      }
      if (t + 1 < n) {
        top_bar ? use({FloydAlphabet::ring_bar}, {FloydAlphabet::ring})
                : use({FloydAlphabet::ring}, {FloydAlphabet::ring_bar});
      }
    }
    auto const last = end_pair(A, steps.back());
    use(last.first, last.second);
    return PcpSolution(std::move(indices));
  }

  namespace {
    struct Segment {
      word_type bottom;  // x_t
      word_type top;     // x_{t+1}
      // (offset in x_t, relation index)
      std::vector<std::pair<std::size_t, std::size_t>> rewrites;
    };
  }  // namespace

  Derivation solution_to_derivation(Presentation const& pres,
                                    word_type const&    x,
                                    word_type const&    y,
                                    PcpSolution const&  sol) {
    auto const    inst = build_sympcp(pres, x, y);
    FloydAlphabet A(*pres.letters());

    for (auto j : sol.indices()) {
      if (j >= inst.size()) {
        throw MalformedSolution("pair index " + std::to_string(j)
                                + " out of range");
      }
    }
    // Shortest prefix that is a solution.
    std::vector<pair_type> tiles;
    word_type              top, bottom;
    for (auto j : sol.indices()) {
      tiles.push_back(inst.at(j));
      append(top, tiles.back().first);
      append(bottom, tiles.back().second);
      if (!prefix_comparable(top, bottom)) {
        throw MalformedSolution("index sequence is not a solution");
      }
      if (top == bottom) {
        break;
      }
    }
    if (top != bottom) {
      throw MalformedSolution("index sequence is not a solution");
    }

    auto const start = start_pair(A, x);
    if (tiles.front() == pair_type{start.second, start.first}) {
      for (auto& [u, v] : tiles) {
        std::swap(u, v);
      }
    } else if (tiles.front() != start) {
      throw MalformedSolution(
          "solution does not start with a boundary pair for x");
    }

    auto all_of = [](word_type const& w, auto pred) {
      return !w.empty() && std::all_of(w.cbegin(), w.cend(), pred);
    };
    auto is_plain = [&A](symbol_type s) { return A.is_letter(s); };
    auto is_bar   = [&A](symbol_type s) { return A.is_letter_bar(s); };
    auto strip    = [&A](word_type const& w) {
      word_type out;
      for (auto s : w) {
        out.push_back(A.base(s));
      }
      return out;
    };

    std::vector<Segment> segments(1);
    std::optional<word_type> final_word;
    for (std::size_t i = 1; i < tiles.size() && !final_word; ++i) {
      auto const& [T, B] = tiles[i];
      bool const top_bar = segments.size() % 2 == 1;
      auto&      seg     = segments.back();
      symbol_type const sep_top
          = top_bar ? FloydAlphabet::ring_bar : FloydAlphabet::ring;
      if (T == word_type{sep_top} && B == word_type{A.bar(sep_top)}) {
        segments.emplace_back();
        continue;
      }
      if (!top_bar && T == word_type{FloydAlphabet::right_mark}
          && B.size() >= 3 && B.front() == FloydAlphabet::ring_bar
          && B.back() == FloydAlphabet::right_mark) {
        final_word = strip(word_type(B.cbegin() + 1, B.cend() - 1));
        if (i + 1 != tiles.size()) {
          throw MalformedSolution("pairs follow the closing boundary pair");
        }
        break;
      }
      bool const shaped = top_bar ? all_of(T, is_bar) && all_of(B, is_plain)
                                  : all_of(T, is_plain) && all_of(B, is_bar);
      if (!shaped) {
        throw MalformedSolution("pair " + std::to_string(i)
                                + " does not fit the alternating block "
                                  "structure");
      }
      auto const lhs = strip(B), rhs = strip(T);
      if (lhs != rhs || lhs.size() != 1) {
        auto r = pres.find(lhs, rhs);
        if (!r) {
          throw MalformedSolution("pair " + std::to_string(i)
                                  + " is not a relation pair");
        }
        seg.rewrites.emplace_back(seg.bottom.size(), *r);
      }
      append(seg.bottom, lhs);
      append(seg.top, rhs);
    }
    if (!final_word) {
      throw MalformedSolution("solution never reaches the closing pair");
    }

    std::vector<word_type>                     steps{x};
    std::vector<std::optional<RewriteWitness>> witnesses;
    for (auto const& seg : segments) {
      if (seg.bottom.empty() || seg.bottom != steps.back()) {
        throw MalformedSolution("block does not continue the derivation");
      }
      if (seg.rewrites.empty()) {
        steps.push_back(steps.back());
        witnesses.emplace_back(std::nullopt);
        continue;
      }
      std::ptrdiff_t shift = 0;
      for (auto [offset, r] : seg.rewrites) {
        auto const& [lhs, rhs] = pres.relations()[r];
        auto const  pos        = static_cast<std::size_t>(
            static_cast<std::ptrdiff_t>(offset) + shift);
        word_type next(steps.back().cbegin(),
                       steps.back().cbegin() + static_cast<std::ptrdiff_t>(pos));
        append(next, rhs);
        next.insert(next.end(),
                    steps.back().cbegin()
                        + static_cast<std::ptrdiff_t>(pos + lhs.size()),
                    steps.back().cend());
        steps.push_back(std::move(next));
        witnesses.push_back(RewriteWitness{pos, r});
        shift += static_cast<std::ptrdiff_t>(rhs.size())
                 - static_cast<std::ptrdiff_t>(lhs.size());
      }
      if (steps.back() != seg.top) {
        throw MalformedSolution("block rewrites do not produce its top row");
      }
    }
    if (steps.back() != *final_word || *final_word != y) {
      throw MalformedSolution("derivation does not end at y");
    }
    return Derivation(std::move(steps), std::move(witnesses));
  }

}  // namespace sympcp
