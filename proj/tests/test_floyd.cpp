#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sympcp/sympcp.hpp"

using namespace sympcp;

namespace {
  alphabet_ptr ab() {
    static auto const a = make_alphabet({"a", "b"});
    return a;
  }

  Presentation commuting() {
    return Presentation(ab(), {{{0, 1}, {1, 0}}});
  }

  word_type w(std::string_view s) {
    return ab()->parse(s);
  }

  std::string render(PcpInstance const& inst, word_type const& x) {
    return inst.alphabet()->render(x);
  }

  bool has_pair(PcpInstance const& inst, std::string_view u,
                std::string_view v) {
    auto const& a = *inst.alphabet();
    return inst.find(a.parse(u), a.parse(v)).has_value();
  }
}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("closure under swapping") {
    auto p = commuting();
    REQUIRE(p.relations().size() == 2);
    CHECK(p.relations()[1] == pair_type{w("ba"), w("ab")});
    auto q = Presentation(ab(), {{w("ab"), w("ba")}, {w("ba"), w("ab")}});
    CHECK(q.relations() == p.relations());
    CHECK(p.find(w("ba"), w("ab")) == 1u);
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(Presentation(ab(), {{{}, w("a")}}), Error);
    CHECK_THROWS_AS(Presentation(ab(), {{w("a"), w("a")}}), Error);
    CHECK_THROWS_AS(Presentation(ab(), {{{2}, w("a")}}), Error);
    CHECK_NOTHROW(Presentation(ab(), {}));
  }
}

TEST_SUITE("check_derivation") {
  TEST_CASE("examples") {
    auto p = commuting();
    CHECK(check_derivation(p, Derivation({w("aab"), w("aba")},
                                         {RewriteWitness{1, 0}})));
    CHECK(check_derivation(Presentation(ab(), {}), Derivation({w("a")}, {})));
    CHECK_FALSE(check_derivation(Presentation(ab(), {}),
                                 Derivation({w("a"), w("b")}, {std::nullopt})));
    CHECK_FALSE(check_derivation(p, Derivation({w("aab"), w("aba")},
                                               {RewriteWitness{0, 0}})));
    CHECK_FALSE(check_derivation(p, Derivation({w("aab"), w("bab")},
                                               {RewriteWitness{1, 0}})));
  }

  TEST_CASE("malformed witnesses") {
    auto p = commuting();
    CHECK_THROWS_AS((void) check_derivation(
                        p, Derivation({w("aab"), w("aba")},
                                      {RewriteWitness{2, 0}})),
                    Error);
    CHECK_THROWS_AS((void) check_derivation(
                        p, Derivation({w("aab"), w("aba")},
                                      {RewriteWitness{1, 5}})),
                    Error);
    CHECK_THROWS_AS(Derivation({}, {}), Error);
    CHECK_THROWS_AS(Derivation({w("a"), w("a")}, {}), Error);
  }
}

TEST_SUITE("floyd alphabet") {
  TEST_CASE("layout and overline") {
    FloydAlphabet A(*ab());
    CHECK(A.alphabet()->size() == 4 + 2 * 2);
    CHECK(A.alphabet()->tokens()
          == std::vector<std::string>{"<", ">", "o", "o~", "a", "b", "a~",
                                      "b~"});
    CHECK(A.bar(A.letter(1)) == A.letter_bar(1));
    CHECK(A.bar(A.bar(A.letter(0))) == A.letter(0));
    CHECK(A.bar(FloydAlphabet::ring) == FloydAlphabet::ring_bar);
    CHECK_THROWS_AS((void) A.bar(FloydAlphabet::left_mark), Error);
    CHECK_THROWS_AS(FloydAlphabet(Alphabet({"o"})), Error);
    CHECK_THROWS_AS(FloydAlphabet(Alphabet({"c~"})), Error);
  }
}

TEST_SUITE("build_pcp") {
  TEST_CASE("pair set of the commuting presentation") {
    auto P = build_pcp(commuting(), w("aab"), w("aba"));
    // 2(|B| + 1) letter pairs, 2|R| relation pairs, 2 boundary pairs.
    CHECK(P.size() == 2 * 3 + 2 * 2 + 2);
    CHECK(has_pair(P, "< a a b o", "<"));
    CHECK(has_pair(P, ">", "o~ a b a >"));
    CHECK(has_pair(P, "o", "o~"));
    CHECK(has_pair(P, "o~", "o"));
    CHECK(has_pair(P, "a", "a~"));
    CHECK(has_pair(P, "b~", "b"));
    CHECK(has_pair(P, "a b", "b~ a~"));
    CHECK(has_pair(P, "a~ b~", "b a"));
    CHECK_FALSE(is_symmetric(P));
  }

  TEST_CASE("empty words are rejected") {
    CHECK_THROWS_AS((void) build_pcp(commuting(), {}, w("a")), Error);
    CHECK_THROWS_AS((void) build_sympcp(commuting(), w("a"), {}), Error);
  }

  TEST_CASE("symmetric version") {
    auto P  = build_pcp(commuting(), w("aab"), w("aba"));
    auto sP = build_sympcp(commuting(), w("aab"), w("aba"));
    CHECK(sP.size() == P.size() + 2);
    CHECK(is_symmetric(sP));
    for (auto const& [u, v] : P.pairs()) {
      CHECK(sP.find(u, v).has_value());
    }
    CHECK(has_pair(sP, "<", "< a a b o"));
    CHECK(has_pair(sP, "o~ a b a >", ">"));

    auto single = make_alphabet({"a"});
    auto tiny   = build_sympcp(Presentation(single, {}), {0}, {0});
    CHECK(tiny.size() == 8);
    CHECK(is_symmetric(tiny));
  }
}

TEST_SUITE("derivation_to_solution") {
  TEST_CASE("single word") {
    auto single = make_alphabet({"a"});
    auto pres   = Presentation(single, {});
    auto sol    = derivation_to_solution(pres, Derivation({{0}}, {}));
    auto sP     = build_sympcp(pres, {0}, {0});
    REQUIRE(sol.size() == 5);
    CHECK(check_solution(sP, sol));
    auto [top, bottom] = concatenate(sP, sol);
    CHECK(render(sP, top) == "< a o a~ o~ a >");
    CHECK(render(sP, top) == render(sP, bottom));
    CHECK(sP.at(sol[0]) == pair_type{sP.alphabet()->parse("< a o"),
                                     sP.alphabet()->parse("<")});
    CHECK(sP.at(sol[1]) == pair_type{sP.alphabet()->parse("a~"),
                                     sP.alphabet()->parse("a")});
    CHECK(sP.at(sol[4]) == pair_type{sP.alphabet()->parse(">"),
                                     sP.alphabet()->parse("o~ a >")});
  }

  TEST_CASE("one rewrite, padded to three words") {
    auto p   = commuting();
    auto d   = Derivation({w("aab"), w("aba")}, {RewriteWitness{1, 0}});
    auto sol = derivation_to_solution(p, d);
    auto sP  = build_sympcp(p, w("aab"), w("aba"));
    CHECK(check_solution(sP, sol));
    CHECK(check_solution(build_pcp(p, w("aab"), w("aba")), sol));
    CHECK(sP.at(sol[0]).second == sP.alphabet()->parse("<"));
  }

  TEST_CASE("invalid derivations") {
    auto p = commuting();
    CHECK_THROWS_AS((void) derivation_to_solution(
                        p, Derivation({w("aab"), w("bab")},
                                      {RewriteWitness{1, 0}})),
                    InvalidDerivation);
  }
}

TEST_SUITE("solution_to_derivation") {
  TEST_CASE("round trip") {
    auto p   = commuting();
    auto d   = Derivation({w("aab"), w("aba"), w("baa")},
                          {RewriteWitness{1, 0}, RewriteWitness{0, 0}});
    auto sol = derivation_to_solution(p, d);
    auto back = solution_to_derivation(p, w("aab"), w("baa"), sol);
    CHECK(check_derivation(p, back));
    CHECK(back.front() == w("aab"));
    CHECK(back.back() == w("baa"));
  }

  TEST_CASE("swapped start gives the same derivation") {
    auto p    = commuting();
    auto d    = Derivation({w("aab"), w("aba")}, {RewriteWitness{1, 0}});
    auto sol  = derivation_to_solution(p, d);
    auto sP   = build_sympcp(p, w("aab"), w("aba"));
    std::vector<std::size_t> swapped;
    for (auto j : sol.indices()) {
      swapped.push_back(*sP.swap_index(j));
    }
    REQUIRE(check_solution(sP, swapped));
    auto a = solution_to_derivation(p, w("aab"), w("aba"), sol);
    auto b = solution_to_derivation(p, w("aab"), w("aba"), swapped);
    CHECK(a == b);
  }

  TEST_CASE("non-solutions are rejected") {
    auto p = commuting();
    CHECK_THROWS_AS((void) solution_to_derivation(p, w("aab"), w("aba"),
                                                  PcpSolution{0, 1}),
                    MalformedSolution);
  }
}

TEST_SUITE("floyd properties") {
  TEST_CASE("solver agrees with word-level search") {
    std::vector<Presentation> presentations = {
        commuting(),
        Presentation(ab(), {{w("aa"), w("b")}}),
        Presentation(ab(), {{w("ab"), w("b")}}),
    };
    std::vector<word_type> words = {w("a"),  w("b"),  w("ab"), w("ba"),
                                    w("aa"), w("bb"), w("aab"), w("aba")};
    for (auto const& pres : presentations) {
      for (auto const& x : words) {
        for (auto const& y : words) {
          bool const expected = oracle::derivable(pres, x, y, 4, 3);
          auto const sP       = build_sympcp(pres, x, y);
          auto const out      = solve(sP, {30, 16, 200000});
          CAPTURE(ab()->render(x));
          CAPTURE(ab()->render(y));
          CHECK(out.has_witness() == expected);
          if (!out.has_witness()) {
            continue;
          }
          auto const& first = sP.at(out.witness()[0]);
          auto const& A     = *sP.alphabet();
          auto        start = A.parse("<");
          auto        full  = start;
          FloydAlphabet F(*ab());
          append(full, F.plain(x));
          full.push_back(FloydAlphabet::ring);
          CHECK((first == pair_type{full, start}
                 || first == pair_type{start, full}));
          auto d = solution_to_derivation(pres, x, y, out.witness());
          CHECK(check_derivation(pres, d));
          CHECK(d.front() == x);
          CHECK(d.back() == y);
        }
      }
    }
  }
}
