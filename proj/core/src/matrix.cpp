#include "sympcp/matrix.hpp"

#include <charconv>
#include <random>

#include "sympcp/errors.hpp"

namespace sympcp {

  StringPair operator*(StringPair const& p, StringPair const& q) {
    return {concat(p.w, q.w), concat(p.J, q.J)};
  }

  Mat3 Mat3::identity() {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  Mat3 mat_mul(Mat3 const& a, Mat3 const& b) {
    Mat3 c;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        Nat sum = 0;
        for (std::size_t l = 0; l < 3; ++l) {
          if (!a(i, l).is_zero() && !b(l, j).is_zero()) {
            sum += a(i, l) * b(l, j);
          }
        }
        c(i, j) = std::move(sum);
      }
    }
    return c;
  }

  Mat3 operator*(Mat3 const& a, Mat3 const& b) {
    return mat_mul(a, b);
  }

  Nat beta(word_type const& w) {
    Nat result = 0;
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (w[t] > 1) {
        throw Error("beta expects a binary word");
      }
      if (w[t] == 1) {
        boost::multiprecision::bit_set(result, static_cast<unsigned>(t));
      }
    }
    return result;
  }

  Nat phi4(word_type const& J) {
    Nat result = 0;
    for (std::size_t t = 0; t < J.size(); ++t) {
      if (J[t] > 3) {
        throw Error("phi4 expects a word over {0,1,2,3}");
      }
      if (J[t] != 0) {
        result |= Nat(J[t]) << (2 * t);
      }
    }
    return result;
  }

  EncodingParams encoding_params(std::size_t k) {
    if (k == 0) {
      throw Error("encoding needs at least one pair");
    }
    std::size_t h = 0;
    while ((std::size_t(1) << h) < k) {
      ++h;
    }
    h = std::max<std::size_t>(h, 1);
    EncodingParams params{k, h, {}};
    params.index_codes.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      params.index_codes.push_back(binary_block(i, h));
    }
    return params;
  }

  word_type const& index_code(std::size_t i, EncodingParams const& params) {
    if (i >= params.k) {
      throw Error("pair index " + std::to_string(i) + " out of range [0, "
                  + std::to_string(params.k) + ")");
    }
    return params.index_codes[i];
  }

  ////////////////////////////////////////////////////////////////////////
  // Generator tags
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::array<std::string_view, 5> kind_names
        = {"eps2", "u", "ubar", "v", "vbar"};
  }

  std::string to_string(GenTag tag) {
    if (tag.kind == GenKind::eps2) {
      return "eps2";
    }
    return std::string(kind_names[static_cast<std::size_t>(tag.kind)]) + ":"
           + std::to_string(tag.index);
  }

  GenTag parse_gen_tag(std::string_view text) {
    if (text == "eps2") {
      return {GenKind::eps2, 0};
    }
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw Error("malformed generator tag \"" + std::string(text) + "\"");
    }
    auto name = text.substr(0, colon);
    auto num  = text.substr(colon + 1);
    for (std::size_t k = 1; k < kind_names.size(); ++k) {
      if (name == kind_names[k]) {
        std::size_t index = 0;
        auto [ptr, ec]
            = std::from_chars(num.data(), num.data() + num.size(), index);
        if (ec != std::errc() || ptr != num.data() + num.size()
            || num.empty()) {
          break;
        }
        return {static_cast<GenKind>(k), index};
      }
    }
    throw Error("malformed generator tag \"" + std::string(text) + "\"");
  }

  std::vector<GenTag> generator_tags(std::size_t k, bool reduced) {
    std::vector<GenTag> tags{{GenKind::eps2, 0}};
    for (std::size_t i = 0; i < k; ++i) {
      tags.push_back({GenKind::u, i});
      if (!reduced) {
        tags.push_back({GenKind::ubar, i});
      }
      tags.push_back({GenKind::v, i});
      if (!reduced) {
        tags.push_back({GenKind::vbar, i});
      }
    }
    return tags;
  }

  StringPair table_pair(PcpInstance const&    inst,
                        EncodingParams const& params,
                        GenTag                tag) {
    if (tag.kind == GenKind::eps2) {
      return {{}, {2}};
    }
    auto const& [u, v] = inst.at(tag.index);
    auto const& code   = index_code(tag.index, params);
    switch (tag.kind) {
      case GenKind::u:
        return {u, concat({2}, code)};
      case GenKind::ubar:
        return {u, concat(concat({2}, code), {3})};
      case GenKind::v:
        return {v, concat(code, {2})};
      case GenKind::vbar:
        return {v, concat(code, {3})};
      case GenKind::eps2:
        break;
    }
    throw Error("unknown generator kind");
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrices
  ////////////////////////////////////////////////////////////////////////

  Mat3 const& EncodedMatrices::at(GenTag tag) const {
    if (tag.kind == GenKind::eps2) {
      return L;
    }
    if (tag.index >= params.k) {
      throw Error("generator " + to_string(tag) + " has no matrix");
    }
    switch (tag.kind) {
      case GenKind::u:
        return U[tag.index];
      case GenKind::ubar:
        return Ubar[tag.index];
      case GenKind::v:
        return V[tag.index];
      case GenKind::vbar:
        return Vbar[tag.index];
      case GenKind::eps2:
        break;
    }
    return L;
  }

  namespace {
    Nat pow2(std::size_t e) {
      return Nat(1) << e;
    }

    Mat3 encoded(Nat a, Nat b, Nat c, Nat d) {
      return Mat3({{{std::move(a), std::move(b), 0},
                    {0, 1, 0},
                    {0, std::move(c), std::move(d)}}});
    }
  }  // namespace

  EncodedMatrices build_matrices(PcpInstance const& inst) {
    if (!is_binary(inst)) {
      throw Error("matrix encoding needs an instance over {0, 1}");
    }
    EncodedMatrices out{encoding_params(inst.size()), encoded(1, 0, 2, 4), {},
                        {},
                        {},
                        {}};
    auto const h = out.params.h;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      auto const& [u, v] = inst.at(i);
      Nat const code     = phi4(out.params.index_codes[i]);
      out.U.push_back(
          encoded(pow2(u.size()), beta(u), 2 + code * 4, pow2(2 * (h + 1))));
      out.Ubar.push_back(encoded(pow2(u.size()),
                                 beta(u),
                                 2 + code * 4 + 3 * pow2(2 * (h + 1)),
                                 pow2(2 * (h + 2))));
      out.V.push_back(encoded(
          pow2(v.size()), beta(v), code + 2 * pow2(2 * h), pow2(2 * (h + 1))));
      out.Vbar.push_back(encoded(
          pow2(v.size()), beta(v), code + 3 * pow2(2 * h), pow2(2 * (h + 1))));
    }
    return out;
  }

  Mat3 pair_to_matrix(StringPair const& p) {
    return encoded(pow2(p.w.size()), beta(p.w), phi4(p.J), pow2(2 * p.J.size()));
  }

  namespace {
    // Returns e with x == 2^e, or -1.
    long exponent_of_two(Nat const& x) {
      if (x <= 0 || (x & (x - 1)) != 0) {
        return -1;
      }
      return static_cast<long>(boost::multiprecision::msb(x));
    }
  }  // namespace

  StringPair matrix_to_pair(Mat3 const& m) {
    for (auto [r, c] : {std::pair{0, 2}, {1, 0}, {1, 2}, {2, 0}}) {
      if (m(r, c) != 0) {
        throw NotInImage("entry (" + std::to_string(r + 1) + ","
                         + std::to_string(c + 1) + ") must be 0");
      }
    }
    if (m(1, 1) != 1) {
      throw NotInImage("entry (2,2) must be 1");
    }
    long const w_len = exponent_of_two(m(0, 0));
    if (w_len < 0) {
      throw NotInImage("entry (1,1) is not a power of 2");
    }
    long const e = exponent_of_two(m(2, 2));
    if (e < 0 || e % 2 != 0) {
      throw NotInImage("entry (3,3) is not a power of 4");
    }
    std::size_t const J_len = static_cast<std::size_t>(e / 2);
    Nat const&        b     = m(0, 1);
    Nat const&        f     = m(2, 1);
    if (b < 0 || b >= m(0, 0)) {
      throw NotInImage("entry (1,2) is not the value of a binary word of "
                       "length "
                       + std::to_string(w_len));
    }
    if (f < 0 || f >= m(2, 2)) {
      throw NotInImage("entry (3,2) is not the value of a base-4 word of "
                       "length "
                       + std::to_string(J_len));
    }
    StringPair p;
    p.w.resize(static_cast<std::size_t>(w_len));
    for (std::size_t t = 0; t < p.w.size(); ++t) {
      p.w[t] = boost::multiprecision::bit_test(b, static_cast<unsigned>(t))
                   ? 1
                   : 0;
    }
    p.J.resize(J_len);
    for (std::size_t t = 0; t < J_len; ++t) {
      p.J[t] = static_cast<symbol_type>(((f >> (2 * t)) & 3).convert_to<unsigned>());
    }
    return p;
  }

  EmbeddingReport verify_embedding(PcpInstance const& inst,
                                   std::size_t        trials,
                                   std::size_t        max_len,
                                   std::uint64_t      seed) {
    if (max_len == 0) {
      throw Error("verify_embedding needs max_len >= 1");
    }
    auto const      mats = build_matrices(inst);
    auto const      tags = generator_tags(inst.size());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> length(1, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, tags.size() - 1);

    EmbeddingReport report;
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<GenTag> seq(length(rng));
      for (auto& g : seq) {
        g = tags[pick(rng)];
      }
      Mat3       product = Mat3::identity();
      StringPair expected;
      for (auto g : seq) {
        product  = product * mats.at(g);
        expected = expected * table_pair(inst, mats.params, g);
      }
      bool ok = false;
      try {
        ok = matrix_to_pair(product) == expected;
      } catch (NotInImage const&) {
        ok = false;
      }
      if (!ok) {
        report.failures.push_back(std::move(seq));
      }
      ++report.trials;
    }
    return report;
  }

}  // namespace sympcp
