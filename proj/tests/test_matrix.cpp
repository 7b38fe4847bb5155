#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sympcp/sympcp.hpp"

using namespace sympcp;

namespace {
  word_type digits(std::string_view s) {
    word_type w;
    for (char c : s) {
      w.push_back(static_cast<symbol_type>(c - '0'));
    }
    return w;
  }

  PcpInstance binary(std::vector<std::pair<char const*, char const*>> ps) {
    std::vector<pair_type> pairs;
    for (auto [u, v] : ps) {
      pairs.emplace_back(digits(u), digits(v));
    }
    return PcpInstance(binary_alphabet(), pairs);
  }

  Mat3 mat(std::array<std::array<long, 3>, 3> const& e) {
    Mat3 m;
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        m(r, c) = e[r][c];
      }
    }
    return m;
  }

  word_type random_word(std::mt19937_64& rng, std::size_t max_len,
                        symbol_type base) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<symbol_type> sym(0, base - 1);
    word_type                                  w(len(rng));
    for (auto& s : w) {
      s = sym(rng);
    }
    return w;
  }

  StringPair random_pair(std::mt19937_64& rng, std::size_t max_len) {
    return {random_word(rng, max_len, 2), random_word(rng, max_len, 4)};
  }

  // The displayed matrix, built entry by entry from the oracle valuations.
  Mat3 displayed(StringPair const& p) {
    Mat3 m;
    m(0, 0) = oracle::power(2, p.w.size());
    m(0, 1) = oracle::little_endian(p.w, 2);
    m(1, 1) = 1;
    m(2, 1) = oracle::little_endian(p.J, 4);
    m(2, 2) = oracle::power(4, p.J.size());
    return m;
  }

  Mat3 const L = mat({{{1, 0, 0}, {0, 1, 0}, {0, 2, 4}}});
}  // namespace

TEST_SUITE("valuations") {
  TEST_CASE("beta") {
    CHECK(beta({}) == 0);
    CHECK(beta(digits("01")) == 2);
    CHECK(beta(digits("011")) == 6);
    CHECK_THROWS_AS((void) beta(digits("012")), Error);
  }

  TEST_CASE("phi4") {
    CHECK(phi4({}) == 0);
    CHECK(phi4(digits("2")) == 2);
    CHECK(phi4(digits("220")) == 10);
    CHECK(phi4(digits("20213")) == 866);
    CHECK_THROWS_AS((void) phi4(digits("4")), Error);
  }

  TEST_CASE("large words need big integers") {
    word_type J(100, 3);
    CHECK(phi4(J) == oracle::power(4, 100) - 1);
    CHECK(beta(word_type(70, 1)) == oracle::power(2, 70) - 1);
  }

  TEST_CASE("agree with Horner evaluation") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 2000; ++t) {
      auto w = random_word(rng, 40, 2);
      auto J = random_word(rng, 40, 4);
      CHECK(beta(w) == oracle::little_endian(w, 2));
      CHECK(phi4(J) == oracle::little_endian(J, 4));
    }
  }

  TEST_CASE("concatenation recurrences") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 2000; ++t) {
      auto w = random_word(rng, 20, 2), u = random_word(rng, 20, 2);
      auto J = random_word(rng, 20, 4), K = random_word(rng, 20, 4);
      CHECK(beta(concat(w, u))
            == beta(w) + oracle::power(2, w.size()) * beta(u));
      CHECK(phi4(concat(J, K))
            == phi4(J) + oracle::power(4, J.size()) * phi4(K));
    }
  }
}

TEST_SUITE("index codes") {
  TEST_CASE("examples") {
    CHECK(index_code(0, encoding_params(1)) == digits("0"));
    CHECK(index_code(1, encoding_params(2)) == digits("1"));
    CHECK(index_code(2, encoding_params(3)) == digits("10"));
    CHECK(encoding_params(1).h == 1);
    CHECK(encoding_params(4).h == 2);
    CHECK(encoding_params(5).h == 3);
    CHECK_THROWS_AS((void) index_code(3, encoding_params(3)), Error);
  }

  TEST_CASE("codes are distinct and of uniform length") {
    for (std::size_t k = 1; k <= 40; ++k) {
      auto const p = encoding_params(k);
      std::set<word_type> seen(p.index_codes.begin(), p.index_codes.end());
      CHECK(seen.size() == k);
      for (auto const& c : p.index_codes) {
        CHECK(c.size() == p.h);
      }
    }
  }
}

TEST_SUITE("generator tags") {
  TEST_CASE("text form") {
    CHECK(to_string(GenTag{GenKind::ubar, 3}) == "ubar:3");
    CHECK(parse_gen_tag("eps2") == GenTag{GenKind::eps2, 0});
    CHECK(parse_gen_tag("vbar:12") == GenTag{GenKind::vbar, 12});
    CHECK_THROWS_AS((void) parse_gen_tag("w:1"), Error);
    CHECK_THROWS_AS((void) parse_gen_tag("u:"), Error);
    CHECK_THROWS_AS((void) parse_gen_tag("u:1x"), Error);
  }

  TEST_CASE("canonical order") {
    auto tags = generator_tags(2);
    REQUIRE(tags.size() == 9);
    CHECK(tags[0] == GenTag{GenKind::eps2, 0});
    CHECK(tags[1] == GenTag{GenKind::u, 0});
    CHECK(tags[4] == GenTag{GenKind::vbar, 0});
    CHECK(tags[5] == GenTag{GenKind::u, 1});
    CHECK(generator_tags(2, true).size() == 5);
  }
}

TEST_SUITE("matrices") {
  TEST_CASE("single pair instance") {
    auto m = build_matrices(binary({{"00", "0"}}));
    CHECK(m.L == L);
    CHECK(m.U[0] == mat({{{4, 0, 0}, {0, 1, 0}, {0, 2, 16}}}));
    CHECK(m.V[0] == mat({{{2, 0, 0}, {0, 1, 0}, {0, 8, 16}}}));
    CHECK(m.Vbar[0] == mat({{{2, 0, 0}, {0, 1, 0}, {0, 12, 16}}}));
    CHECK(m.Ubar[0] == mat({{{4, 0, 0}, {0, 1, 0}, {0, 50, 64}}}));
  }

  TEST_CASE("L does not depend on the instance") {
    CHECK(build_matrices(binary({{"0", "1"}, {"11", ""}, {"1", "0"}})).L
          == L);
  }

  TEST_CASE("non-binary instances are rejected") {
    auto a = make_alphabet({"x", "y"});
    CHECK_THROWS_AS((void) build_matrices(PcpInstance(a, {{{0}, {1}}})),
                    Error);
  }

  TEST_CASE("entries match the table pairs") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
      std::uniform_int_distribution<std::size_t> k(1, 6);
      auto inst = oracle::random_binary_instance(rng, k(rng), 4);
      auto m    = build_matrices(inst);
      for (auto tag : generator_tags(inst.size())) {
        CHECK(m.at(tag) == displayed(table_pair(inst, m.params, tag)));
      }
    }
  }

  TEST_CASE("products") {
    auto m  = build_matrices(binary({{"00", "0"}}));
    auto lu = mat_mul(m.L, m.U[0]);
    CHECK(lu(2, 1) == 10);
    CHECK(lu(2, 2) == 64);
    CHECK(Mat3::identity() * m.U[0] == m.U[0]);

    auto two = build_matrices(binary({{"00", "0"}, {"0", "00"}}));
    auto lhs = two.U[0] * two.Ubar[1];
    auto rhs = two.L * two.V[0] * two.Vbar[1];
    CHECK(lhs == mat({{{8, 0, 0}, {0, 1, 0}, {0, 866, 1024}}}));
    CHECK(rhs == lhs);
  }

  TEST_CASE("associativity") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 200; ++t) {
      auto a = pair_to_matrix(random_pair(rng, 12));
      auto b = pair_to_matrix(random_pair(rng, 12));
      auto c = pair_to_matrix(random_pair(rng, 12));
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_SUITE("pair encoding") {
  TEST_CASE("pair_to_matrix") {
    CHECK(pair_to_matrix({{}, digits("2")}) == L);
    CHECK(pair_to_matrix({digits("00"), digits("20")})
          == mat({{{4, 0, 0}, {0, 1, 0}, {0, 2, 16}}}));
    CHECK(pair_to_matrix({}) == Mat3::identity());
  }

  TEST_CASE("matrix_to_pair") {
    auto p = matrix_to_pair(mat({{{8, 0, 0}, {0, 1, 0}, {0, 866, 1024}}}));
    CHECK(p.w == digits("000"));
    CHECK(p.J == digits("20213"));
    CHECK(matrix_to_pair(L) == StringPair{{}, digits("2")});
  }

  TEST_CASE("matrices outside the image") {
    auto good = mat({{{8, 0, 0}, {0, 1, 0}, {0, 866, 1024}}});
    auto bad  = [&good](std::size_t r, std::size_t c, long v) {
      auto m  = good;
      m(r, c) = v;
      return m;
    };
    CHECK_THROWS_AS((void) matrix_to_pair(bad(0, 0, 3)), NotInImage);
    CHECK_THROWS_AS((void) matrix_to_pair(bad(2, 2, 8)), NotInImage);
    CHECK_THROWS_AS((void) matrix_to_pair(bad(2, 2, 0)), NotInImage);
    CHECK_THROWS_AS((void) matrix_to_pair(bad(1, 1, 2)), NotInImage);
    CHECK_THROWS_AS((void) matrix_to_pair(bad(0, 2, 1)), NotInImage);
    CHECK_THROWS_AS((void) matrix_to_pair(bad(1, 0, 1)), NotInImage);
    CHECK_THROWS_AS((void) matrix_to_pair(bad(1, 2, 1)), NotInImage);
    CHECK_THROWS_AS((void) matrix_to_pair(bad(2, 0, 1)), NotInImage);
    CHECK_THROWS_AS((void) matrix_to_pair(bad(0, 1, 8)), NotInImage);
    CHECK_THROWS_AS((void) matrix_to_pair(bad(2, 1, 1024)), NotInImage);
  }

  TEST_CASE("homomorphism") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 1000; ++t) {
      auto p = random_pair(rng, 15), q = random_pair(rng, 15);
      CHECK(pair_to_matrix(p * q) == pair_to_matrix(p) * pair_to_matrix(q));
      CHECK(pair_to_matrix(p) == displayed(p));
    }
  }

  TEST_CASE("decode inverts encode") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 1000; ++t) {
      auto p = random_pair(rng, 30);
      auto m = pair_to_matrix(p);
      CHECK(matrix_to_pair(m) == p);
      CHECK(pair_to_matrix(matrix_to_pair(m)) == m);
    }
  }
}

TEST_SUITE("verify_embedding") {
  TEST_CASE("fixed sequences") {
    auto one = binary({{"00", "0"}});
    auto m1  = build_matrices(one);
    CHECK(matrix_to_pair(m1.U[0]) == StringPair{digits("00"), digits("20")});

    auto two = binary({{"00", "0"}, {"0", "00"}});
    auto m2  = build_matrices(two);
    CHECK(matrix_to_pair(m2.U[0] * m2.Ubar[1])
          == StringPair{digits("000"), digits("20213")});

    auto three = binary({{"1", "0"}, {"01", "1"}, {"110", "00"}});
    auto m3    = build_matrices(three);
    CHECK(matrix_to_pair(m3.U[0] * m3.U[2] * m3.Ubar[1])
          == StringPair{digits("111001"), digits("2002102013")});
  }

  TEST_CASE("random sequences decode to concatenated pairs") {
    auto rep = verify_embedding(binary({{"00", "0"}, {"0", "00"}}), 500, 8, 1);
    CHECK(rep.trials == 500);
    CHECK(rep.ok());
    auto rep2 = verify_embedding(binary({{"01", ""}, {"1", "10"}, {"", "1"}}),
                                 500, 8, 2);
    CHECK(rep2.ok());
  }
}
