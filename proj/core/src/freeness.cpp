#include "sympcp/freeness.hpp"

#include <algorithm>

#include <boost/container_hash/hash.hpp>

#include "sympcp/detail/layered_bfs.hpp"
#include "sympcp/detail/overhang.hpp"
#include "sympcp/errors.hpp"

namespace sympcp {

  GammaGenerator make_generator(PcpInstance const&    inst,
                                EncodingParams const& params,
                                GenTag                tag) {
    return {table_pair(inst, params, tag), tag};
  }

  namespace {
    std::vector<GammaGenerator> gamma(PcpInstance const& inst, bool reduced) {
      if (!is_binary(inst)) {
        throw Error("generator construction needs an instance over {0, 1}");
      }
      auto const                  params = encoding_params(inst.size());
      std::vector<GammaGenerator> gens;
      for (auto tag : generator_tags(inst.size(), reduced)) {
        gens.push_back(make_generator(inst, params, tag));
      }
      return gens;
    }
  }  // namespace

  std::vector<GammaGenerator> build_gamma(PcpInstance const& inst) {
    return gamma(inst, false);
  }

  std::vector<GammaGenerator> build_gamma_reduced(PcpInstance const& inst) {
    return gamma(inst, true);
  }

  StringPair product(std::span<GammaGenerator const> seq) {
    StringPair out;
    for (auto const& g : seq) {
      append(out.w, g.pair.w);
      append(out.J, g.pair.J);
    }
    return out;
  }

  GammaRelation relation_from_tags(PcpInstance const&         inst,
                                   std::vector<GenTag> const& p,
                                   std::vector<GenTag> const& q) {
    auto const    params = encoding_params(inst.size());
    GammaRelation rel;
    for (auto t : p) {
      rel.p.push_back(make_generator(inst, params, t));
    }
    for (auto t : q) {
      rel.q.push_back(make_generator(inst, params, t));
    }
    return rel;
  }

  GammaRelation relation_from_solution(PcpInstance const& inst,
                                       PcpSolution const& sol) {
    if (!check_solution(inst, sol)) {
      throw MalformedSolution("index sequence is not a solution");
    }
    auto const&         js = sol.indices();
    std::vector<GenTag> p, q{{GenKind::eps2, 0}};
    for (std::size_t t = 0; t < js.size(); ++t) {
      bool const last = t + 1 == js.size();
      p.push_back({last ? GenKind::ubar : GenKind::u, js[t]});
      q.push_back({last ? GenKind::vbar : GenKind::v, js[t]});
    }
    return relation_from_tags(inst, p, q);
  }

  GammaRelation relation_from_solution_symmetric(PcpInstance const& inst,
                                                 PcpSolution const& sol) {
    if (!is_symmetric(inst)) {
      throw Error("the letter-3-free relation needs a symmetric instance");
    }
    if (!check_solution(inst, sol)) {
      throw MalformedSolution("index sequence is not a solution");
    }
    auto const& js    = sol.indices();
    auto const  jn    = js.back();
    auto const  swap  = inst.swap_index(jn);
    if (!swap || *swap == jn) {
      throw Error("pair " + std::to_string(jn) + " has no distinct swap");
    }
    GenTag const        eps{GenKind::eps2, 0};
    std::vector<GenTag> p, q{eps};
    for (std::size_t t = 0; t + 1 < js.size(); ++t) {
      p.push_back({GenKind::u, js[t]});
      q.push_back({GenKind::v, js[t]});
    }
    // (u_jn, j'n 2) is V_{j'n} and (v_jn, 2 j'n) is U_{j'n}.
    p.insert(p.end(), {eps, eps, {GenKind::v, *swap}});
    q.insert(q.end(), {{GenKind::u, *swap}, eps});
    return relation_from_tags(inst, p, q);
  }

  bool verify_relation(std::span<GammaGenerator const> gens,
                       GammaRelation const&            rel) {
    for (auto const* side : {&rel.p, &rel.q}) {
      for (auto const& g : *side) {
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) {
          throw Error("generator " + to_string(g.tag)
                      + " is not among the given generators");
        }
      }
    }
    if (rel.p.empty() || rel.q.empty()) {
      return false;
    }
    return rel.p.front() != rel.q.front() && rel.p.back() != rel.q.back()
           && product(rel.p) == product(rel.q);
  }

  bool matrix_relation_check(PcpInstance const& inst, GammaRelation const& rel) {
    auto const mats = build_matrices(inst);
    auto       mult = [&mats](std::vector<GammaGenerator> const& seq) {
      Mat3 m = Mat3::identity();
      for (auto const& g : seq) {
        m = m * mats.at(g.tag);
      }
      return m;
    };
    return mult(rel.p) == mult(rel.q);
  }

  ////////////////////////////////////////////////////////////////////////
  // Block factorization
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(BlockKind k) noexcept {
    return k == BlockKind::two_two ? "2-2" : "2-3";
  }

  namespace {
    bool is_u_type(GenTag t) {
      return t.kind == GenKind::u || t.kind == GenKind::ubar;
    }

    // Reads generators from one side of the relation.
    struct Cursor {
      std::vector<GammaGenerator> const& seq;
      std::size_t                        pos = 0;

      [[nodiscard]] bool done() const {
        return pos == seq.size();
      }
      GammaGenerator const& take(char const* context) {
        if (done()) {
          throw MalformedRelation(std::string("relation ends inside a block ")
                                  + context);
        }
        return seq[pos++];
      }
    };
  }  // namespace

  BlockFactorization factor_blocks(PcpInstance const&   inst,
                                   GammaRelation const& rel) {
    if (rel.p.empty() || rel.q.empty()) {
      throw MalformedRelation("both sides of a relation must be non-empty");
    }
    if (product(rel.p) != product(rel.q)) {
      throw MalformedRelation("the two sides have different products");
    }
    auto const closure = symmetric_closure(inst);

    BlockFactorization result;
    Cursor             P{rel.p}, Q{rel.q};
    word_type          p_first, q_first;
    while (!P.done() || !Q.done()) {
      if (P.done() || Q.done()) {
        throw MalformedRelation("one side ends before the other");
      }
      auto const p_tag = P.seq[P.pos].tag;
      auto const q_tag = Q.seq[Q.pos].tag;
      Block      block;
      if (q_tag.kind == GenKind::eps2 && is_u_type(p_tag)) {
        block.u_on_p = true;
      } else if (p_tag.kind == GenKind::eps2 && is_u_type(q_tag)) {
        block.u_on_p = false;
      } else if (p_tag == q_tag) {
        throw MalformedRelation("both sides carry " + to_string(p_tag)
                                + " at the start of block "
                                + std::to_string(result.blocks.size() + 1));
      } else {
        throw MalformedRelation("block "
                                + std::to_string(result.blocks.size() + 1)
                                + " starts with " + to_string(p_tag) + " / "
                                + to_string(q_tag)
                                + "; expected (e,2) against a u-generator");
      }
      Cursor& X = block.u_on_p ? P : Q;  // u-chain
      Cursor& Y = block.u_on_p ? Q : P;  // v-chain
      std::size_t const x0 = X.pos, y0 = Y.pos;
      Y.take("after its opening (e,2)");
      while (true) {
        auto const& g = X.take("on the u-side");
        if (g.tag.kind == GenKind::eps2) {
          if (block.indices.empty()) {
            throw MalformedRelation("empty 2-2 block");
          }
          block.kind = BlockKind::two_two;
          break;
        }
        if (!is_u_type(g.tag)) {
          throw MalformedRelation("unexpected " + to_string(g.tag)
                                  + " on the u-side of a block");
        }
        auto const  h = g.tag.index;
        auto const& m = Y.take("on the v-side");
        if (g.tag.kind == GenKind::u) {
          if (m.tag == GenTag{GenKind::vbar, h}) {
            throw MalformedRelation("no generator can match the letter 3 of "
                                    + to_string(m.tag));
          }
          if (m.tag != GenTag{GenKind::v, h}) {
            throw MalformedRelation(to_string(g.tag) + " is matched by "
                                    + to_string(m.tag));
          }
          block.indices.push_back(h);
          continue;
        }
        if (m.tag != GenTag{GenKind::vbar, h}) {
          throw MalformedRelation(to_string(g.tag) + " is matched by "
                                  + to_string(m.tag));
        }
        block.indices.push_back(h);
        block.kind = BlockKind::two_three;
        break;
      }
      auto slice = [](Cursor const& c, std::size_t from) {
        return std::vector<GammaGenerator>(
            c.seq.begin() + static_cast<std::ptrdiff_t>(from),
            c.seq.begin() + static_cast<std::ptrdiff_t>(c.pos));
      };
      block.b = slice(P, block.u_on_p ? x0 : y0);
      block.c = slice(Q, block.u_on_p ? y0 : x0);
      if (product(block.b).J != product(block.c).J) {
        throw MalformedRelation("block second coordinates differ");
      }
      for (auto h : block.indices) {
        if (block.u_on_p) {
          block.solution_indices.push_back(h);
        } else {
          auto const& [u, v] = inst.at(h);
          block.solution_indices.push_back(*closure.find(v, u));
        }
      }
      append(p_first, product(block.b).w);
      append(q_first, product(block.c).w);
      if (!prefix_comparable(p_first, q_first)) {
        throw MalformedRelation("first coordinates are not prefix comparable "
                                "after block "
                                + std::to_string(result.blocks.size() + 1));
      }
      result.blocks.push_back(std::move(block));
    }
    if (p_first != q_first) {
      throw MalformedRelation("first coordinates differ");
    }
    return result;
  }

  PcpSolution extract_pcp_solution(BlockFactorization const& f) {
    std::vector<std::size_t> indices;
    for (auto const& b : f.blocks) {
      indices.insert(indices.end(), b.solution_indices.cbegin(),
                     b.solution_indices.cend());
    }
    return PcpSolution(std::move(indices));
  }

  ////////////////////////////////////////////////////////////////////////
  // Relation search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // phase 0: nothing placed; 1: only p_1 placed; 2: both sides started.
    struct RelationState {
      std::uint8_t     phase = 0;
      std::uint32_t    first = 0;
      detail::Overhang w;
      detail::Overhang J;

      bool operator==(RelationState const&) const = default;
    };

    struct RelationStateHash {
      std::size_t operator()(RelationState const& s) const {
        std::size_t seed = s.phase;
        boost::hash_combine(seed, s.first);
        boost::hash_combine(seed, detail::hash_value(s.w));
        boost::hash_combine(seed, detail::hash_value(s.J));
        return seed;
      }
    };
  }  // namespace

  SearchOutcome<GammaRelation>
  find_relation(std::span<GammaGenerator const> gens,
                SearchLimits const&             limits,
                unsigned                        threads) {
    limits.validate();
    using Outcome = SearchOutcome<GammaRelation>;
    if (gens.empty()) {
      throw Error("relation search needs at least one generator");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].pair.J.empty()) {
        throw Error("generator " + to_string(gens[i].tag)
                    + " has an empty second coordinate");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (gens[i].pair == gens[j].pair) {
          throw Error("generators " + to_string(gens[j].tag) + " and "
                      + to_string(gens[i].tag) + " are equal");
        }
      }
    }

    using Succ        = detail::Successor<RelationState>;
    word_type const e = {};
    auto expand = [&](RelationState const& s) {
      std::vector<Succ> out;
      // Extend q when it is behind in the second coordinate.
      bool const to_q
          = s.phase == 1 || (s.phase == 2 && s.J.top_ahead && !s.J.empty());
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (s.phase == 1 && g == s.first) {
          continue;
        }
        auto const& [w, J] = gens[g].pair;
        auto nw = to_q ? detail::extend(s.w, e, w) : detail::extend(s.w, w, e);
        if (!nw) {
          continue;
        }
        auto nJ = to_q ? detail::extend(s.J, e, J) : detail::extend(s.J, J, e);
        if (!nJ) {
          continue;
        }
        if (s.phase != 0 && nw->empty() && nJ->empty()) {
          out.push_back({Succ::Kind::accept, g, {}});
        } else if (nw->rest.size() > limits.max_overhang
                   || nJ->rest.size() > limits.max_overhang) {
          out.push_back({Succ::Kind::too_long, g, {}});
        } else {
          RelationState next{
              static_cast<std::uint8_t>(std::min(s.phase + 1, 2)),
              s.phase == 0 ? static_cast<std::uint32_t>(g) : 0u,
              std::move(*nw),
              std::move(*nJ)};
          out.push_back({Succ::Kind::state, g, std::move(next)});
        }
      }
      return out;
    };

    auto result = detail::layered_bfs<RelationState, RelationStateHash>(
        RelationState{}, expand, limits.max_tiles, limits.max_states, threads);
    SearchStats stats{result.states, result.depth};
    if (result.moves) {
      GammaRelation rel;
      std::size_t   p_len = 0, q_len = 0;
      for (std::size_t i = 0; i < result.moves->size(); ++i) {
        auto const& g    = gens[(*result.moves)[i]];
        bool const  to_q = i == 1 || (i > 1 && p_len > q_len);
        (to_q ? rel.q : rel.p).push_back(g);
        (to_q ? q_len : p_len) += g.pair.J.size();
      }
      return Outcome::found(std::move(rel), stats);
    }
    if (result.truncated()) {
      std::string why;
      for (auto [hit, name] : {std::pair{result.depth_hit, "max-tiles"},
                               {result.overhang_hit, "max-overhang"},
                               {result.states_hit, "max-states"}}) {
        if (hit) {
          why += (why.empty() ? "" : ",") + std::string(name);
        }
      }
      return Outcome::exhausted(why, stats);
    }
    return Outcome::unsolvable(reason::state_exhausted, stats);
  }

}  // namespace sympcp
