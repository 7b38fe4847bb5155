#ifndef SYMPCP_FRENESS_HPP_
#define SYMPCP_FRENESS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "sympcp/matrix.hpp"
#include "sympcp/search.hpp"
#include "sympcp/words.hpp"

namespace sympcp {

  // A generator of the string-pair semigroup together with the template it
  // was built from.
  struct GammaGenerator {
    StringPair pair;
    GenTag     tag;

    bool operator==(GammaGenerator const&) const = default;
  };

  [[nodiscard]] GammaGenerator make_generator(PcpInstance const&    inst,
                                              EncodingParams const& params,
                                              GenTag                tag);

  // The 4k+1 generators, ordered as generator_tags(k).
  [[nodiscard]] std::vector<GammaGenerator>
  build_gamma(PcpInstance const& inst);
  // The 2k+1 generators without the letter 3.
  [[nodiscard]] std::vector<GammaGenerator>
  build_gamma_reduced(PcpInstance const& inst);

  // A candidate relation p_1 ... p_m = q_1 ... q_n.
  struct GammaRelation {
    std::vector<GammaGenerator> p;
    std::vector<GammaGenerator> q;

    bool operator==(GammaRelation const&) const = default;
  };

  [[nodiscard]] StringPair product(std::span<GammaGenerator const> seq);

  // Builds a relation from generator tags, resolving each tag against inst.
  [[nodiscard]] GammaRelation relation_from_tags(PcpInstance const& inst,
                                                 std::vector<GenTag> const& p,
                                                 std::vector<GenTag> const& q);

  // (u_j1, 2 j1) ... (u_jn, 2 jn 3) = (e, 2)(v_j1, j1 2) ... (v_jn, jn 3).
  // Throws MalformedSolution if sol does not solve inst.
  [[nodiscard]] GammaRelation relation_from_solution(PcpInstance const& inst,
                                                     PcpSolution const& sol);

  // The letter-3-free relation
  //   (u_j1, 2 j1) ... (u_j{n-1}, 2 j{n-1}) (e,2)(e,2) (u_jn, j'n 2)
  //     = (e,2)(v_j1, j1 2) ... (v_j{n-1}, j{n-1} 2) (v_jn, 2 j'n) (e,2)
  // where pair j'n is the swap of pair jn. Throws sympcp::Error if inst is
  // not symmetric, MalformedSolution if sol does not solve inst.
  [[nodiscard]] GammaRelation
  relation_from_solution_symmetric(PcpInstance const& inst,
                                   PcpSolution const& sol);

  // True iff both sides are non-empty with equal products, p_1 != q_1 and
  // p_m != q_n. Throws sympcp::Error if rel uses a generator not in gens.
  [[nodiscard]] bool verify_relation(std::span<GammaGenerator const> gens,
                                     GammaRelation const&            rel);

  // Replays the relation through the 3x3 matrices of inst and compares the
  // two products entrywise.
  [[nodiscard]] bool matrix_relation_check(PcpInstance const&   inst,
                                           GammaRelation const& rel);

  enum class BlockKind { two_two, two_three };

  [[nodiscard]] char const* to_string(BlockKind k) noexcept;

  // One matched pair of blocks B (a factor of p) and C (a factor of q). One
  // of them spells the u-chain (u_h1, 2 h1) ... and the other the v-chain
  // (e, 2)(v_h1, h1 2) ... over the same pair indices h1 ... hs.
  struct Block {
    BlockKind                   kind;
    bool                        u_on_p;
    std::vector<std::size_t>    indices;
    // indices read from p's side, as pairs of symmetric_closure(inst):
    // equal to `indices` when u_on_p, else the swapped pairs.
    std::vector<std::size_t>    solution_indices;
    std::vector<GammaGenerator> b;
    std::vector<GammaGenerator> c;
  };

  struct BlockFactorization {
    std::vector<Block> blocks;
  };

  // Scans the relation left to right, closing a 2-2 block when the u-side
  // reads (e, 2) and a 2-3 block when a (u_j, 2 j 3) is matched by
  // (v_j, j 3). Throws MalformedRelation when no continuation exists, for
  // example when both sides carry the same generator at a block boundary.
  [[nodiscard]] BlockFactorization factor_blocks(PcpInstance const&   inst,
                                                 GammaRelation const& rel);

  // Concatenated solution_indices of all blocks: a solution of
  // symmetric_closure(inst) (of inst itself when inst is symmetric).
  [[nodiscard]] PcpSolution extract_pcp_solution(BlockFactorization const& f);

  // Bounded search for a relation over gens. The two sequences are explored
  // jointly: the side whose second coordinate is shorter is extended next
  // (p on ties), so each relation corresponds to exactly one move sequence.
  // max_tiles bounds m + n and max_overhang bounds the unmatched suffix in
  // each coordinate. A returned relation has the least m + n and, among
  // those, the lexicographically least move sequence (generator positions in
  // gens). Every generator must have a non-empty second coordinate.
  [[nodiscard]] SearchOutcome<GammaRelation>
  find_relation(std::span<GammaGenerator const> gens,
                SearchLimits const&             limits,
                unsigned                        threads = 1);

}  // namespace sympcp

#endif  // SYMPCP_FRENESS_HPP_
