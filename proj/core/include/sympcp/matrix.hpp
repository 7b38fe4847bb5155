#ifndef SYMPCP_MATRIX_HPP_
#define SYMPCP_MATRIX_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sympcp/words.hpp"

namespace sympcp {

  // Arbitrary-precision natural number. Entries grow like 4^|J|.
  using Nat = boost::multiprecision::cpp_int;

  // An element (w, J) of {0,1}* x {0,1,2,3}*; symbols are the digits
  // themselves.
  struct StringPair {
    word_type w;
    word_type J;

    bool operator==(StringPair const&) const = default;
  };

  // Coordinatewise concatenation.
  [[nodiscard]] StringPair operator*(StringPair const& p, StringPair const& q);

  class Mat3 {
   public:
    using rows_type = std::array<std::array<Nat, 3>, 3>;

    Mat3() = default;
    explicit Mat3(rows_type rows) : _rows(std::move(rows)) {}

    [[nodiscard]] static Mat3 identity();

    // Zero-based row and column.
    [[nodiscard]] Nat const& operator()(std::size_t r, std::size_t c) const {
      return _rows.at(r).at(c);
    }
    [[nodiscard]] Nat& operator()(std::size_t r, std::size_t c) {
      return _rows.at(r).at(c);
    }
    [[nodiscard]] rows_type const& rows() const noexcept {
      return _rows;
    }

    bool operator==(Mat3 const&) const = default;

   private:
    rows_type _rows{};
  };

  [[nodiscard]] Mat3 mat_mul(Mat3 const& a, Mat3 const& b);
  [[nodiscard]] Mat3 operator*(Mat3 const& a, Mat3 const& b);

  // Both valuations read the leftmost digit as least significant:
  //   beta(x_0 ... x_{n-1}) = sum x_t 2^t,  phi4(x_0 ... x_{n-1}) = sum x_t 4^t.
  [[nodiscard]] Nat beta(word_type const& w);
  [[nodiscard]] Nat phi4(word_type const& J);

  struct EncodingParams {
    std::size_t            k;
    std::size_t            h;
    std::vector<word_type> index_codes;
  };

  // h = max(ceil(log2 k), 1); code of i is the h-bit numeral of i, most
  // significant bit first.
  [[nodiscard]] EncodingParams   encoding_params(std::size_t k);
  [[nodiscard]] word_type const& index_code(std::size_t           i,
                                            EncodingParams const& params);

  // The five generator families and their string pairs:
  //   eps2 -> (e, 2), u:i -> (u_i, 2 i), ubar:i -> (u_i, 2 i 3),
  //   v:i -> (v_i, i 2), vbar:i -> (v_i, i 3).
  enum class GenKind : std::uint8_t { eps2, u, ubar, v, vbar };

  struct GenTag {
    GenKind     kind  = GenKind::eps2;
    std::size_t index = 0;

    auto operator<=>(GenTag const&) const = default;
  };

  [[nodiscard]] std::string to_string(GenTag tag);
  [[nodiscard]] GenTag      parse_gen_tag(std::string_view text);

  // eps2 first, then u, ubar, v, vbar for each pair in turn. The reduced set
  // drops ubar and vbar.
  [[nodiscard]] std::vector<GenTag> generator_tags(std::size_t k,
                                                   bool reduced = false);

  [[nodiscard]] StringPair table_pair(PcpInstance const&    inst,
                                      EncodingParams const& params,
                                      GenTag                tag);

  struct EncodedMatrices {
    EncodingParams    params;
    Mat3              L;
    std::vector<Mat3> U, Ubar, V, Vbar;

    [[nodiscard]] Mat3 const& at(GenTag tag) const;
  };

  // Throws sympcp::Error unless the instance is over the alphabet {0, 1}.
  [[nodiscard]] EncodedMatrices build_matrices(PcpInstance const& inst);

  //          [ 2^|w|  beta(w)  0      ]
  // (w, J) ->[ 0      1        0      ]
  //          [ 0      phi4(J)  4^|J|  ]
  [[nodiscard]] Mat3 pair_to_matrix(StringPair const& p);
  // Inverse of pair_to_matrix; throws NotInImage outside its image.
  [[nodiscard]] StringPair matrix_to_pair(Mat3 const& m);

  struct EmbeddingReport {
    std::size_t                      trials = 0;
    std::vector<std::vector<GenTag>> failures;

    [[nodiscard]] bool ok() const noexcept {
      return failures.empty();
    }
  };

  // Multiplies random generator sequences (length 1..max_len) and checks that
  // each product decodes to the concatenation of the corresponding pairs.
  [[nodiscard]] EmbeddingReport verify_embedding(PcpInstance const& inst,
                                                 std::size_t        trials,
                                                 std::size_t        max_len,
                                                 std::uint64_t      seed);

}  // namespace sympcp

#endif  // SYMPCP_MATRIX_HPP_
