#ifndef SYMPCP_IO_HPP_
#define SYMPCP_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "sympcp/floyd.hpp"
#include "sympcp/freeness.hpp"
#include "sympcp/matrix.hpp"
#include "sympcp/search.hpp"
#include "sympcp/words.hpp"

// JSON readers and writers. Readers throw FormatError on malformed text and
// sympcp::Error when the decoded value breaks a type invariant. Writers
// produce deterministic, two-space indented output ending in a newline.
//
// Words are written as strings over single-character alphabets and as token
// arrays otherwise; readers accept both.
namespace sympcp::io {

  // {"alphabet": [tokens], "pairs": [[u, v], ...]}
  [[nodiscard]] PcpInstance read_instance(std::string_view text);
  [[nodiscard]] std::string write_instance(PcpInstance const& inst);

  // {"letters": [tokens], "relations": [[lhs, rhs], ...]}
  [[nodiscard]] Presentation read_presentation(std::string_view text);
  [[nodiscard]] std::string  write_presentation(Presentation const& pres);

  // {"steps": [words], "witnesses": [{"position": p, "relation": r} | null]}
  // Relation indices refer to pres.relations().
  [[nodiscard]] Derivation  read_derivation(std::string_view    text,
                                            Presentation const& pres);
  [[nodiscard]] std::string write_derivation(Derivation const&   d,
                                             Presentation const& pres);

  // {"indices": [...]} or a bare array.
  [[nodiscard]] PcpSolution read_solution(std::string_view text);
  [[nodiscard]] std::string write_solution(PcpSolution const& sol);
  [[nodiscard]] std::string
  write_solutions(std::vector<PcpSolution> const& sols);

  // {"outcome": ..., "indices": [...], "reason": ...}
  [[nodiscard]] std::string
  write_outcome(SearchOutcome<PcpSolution> const& outcome);

  // {"rows": [[d, d, d], ...]} with decimal-string entries; readers also
  // accept plain JSON integers.
  [[nodiscard]] Mat3        read_matrix(std::string_view text);
  [[nodiscard]] std::string write_matrix(Mat3 const& m);
  // {"k": k, "h": h, "L": matrix, "generators": [{"tag": t, "rows": ...}]}
  [[nodiscard]] std::string write_matrices(EncodedMatrices const& mats);

  // {"w": "...", "J": "..."}
  [[nodiscard]] StringPair  read_string_pair(std::string_view text);
  [[nodiscard]] std::string write_string_pair(StringPair const& p);

  // [{"tag": t, "w": "...", "J": "..."}, ...]
  [[nodiscard]] std::string write_gamma(std::vector<GammaGenerator> const& g);

  // {"p": [tags], "q": [tags]}, resolved against inst.
  [[nodiscard]] GammaRelation read_relation(std::string_view   text,
                                            PcpInstance const& inst);
  [[nodiscard]] std::string   write_relation(GammaRelation const& rel);
  // write_relation plus the two products.
  [[nodiscard]] std::string write_relation_report(GammaRelation const& rel,
                                                  bool verified);
  [[nodiscard]] std::string
  write_relation_outcome(SearchOutcome<GammaRelation> const& outcome);

  // {"blocks": [{"kind", "u_side", "indices", "solution_indices", "b",
  // "c"}], "solution": [...]}
  [[nodiscard]] std::string
  write_factorization(BlockFactorization const& f);

  // {"trials": n, "ok": bool, "failures": [[tags], ...]}
  [[nodiscard]] std::string
  write_embedding_report(EmbeddingReport const& report);

}  // namespace sympcp::io

#endif  // SYMPCP_IO_HPP_
