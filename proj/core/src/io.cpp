#include "sympcp/io.hpp"

#include <algorithm>

#include <json.hpp>

#include "sympcp/errors.hpp"

namespace sympcp::io {

  namespace {
    using json = nlohmann::ordered_json;

    json parse(std::string_view text) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
      }
    }

    std::string dump(json const& j) {
      return j.dump(2) + "\n";
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object()) {
        throw FormatError("expected a JSON object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        throw FormatError(std::string("missing field \"") + key + "\"");
      }
      return *it;
    }

    json const& array(json const& j, char const* what) {
      if (!j.is_array()) {
        throw FormatError(std::string(what) + " must be a JSON array");
      }
      return j;
    }

    std::size_t to_index(json const& j, char const* what) {
      if (!j.is_number_unsigned()) {
        throw FormatError(std::string(what)
                          + " must be a non-negative integer");
      }
      return j.get<std::size_t>();
    }

    std::vector<std::string> tokens(json const& j, char const* what) {
      std::vector<std::string> out;
      if (j.is_string()) {
        for (char c : j.get<std::string>()) {
          out.emplace_back(1, c);
        }
        return out;
      }
      for (auto const& t : array(j, what)) {
        if (!t.is_string()) {
          throw FormatError(std::string(what) + " entries must be strings");
        }
        out.push_back(t.get<std::string>());
      }
      return out;
    }

    word_type read_word(json const& j, Alphabet const& alphabet) {
      if (j.is_string()) {
        return alphabet.parse(j.get<std::string>());
      }
      word_type w;
      for (auto const& t : array(j, "word")) {
        if (!t.is_string()) {
          throw FormatError("word symbols must be strings");
        }
        w.push_back(alphabet.index(t.get<std::string>()));
      }
      return w;
    }

    json write_word(word_type const& w, Alphabet const& alphabet) {
      if (alphabet.single_character()) {
        return alphabet.render(w);
      }
      json out = json::array();
      for (auto s : w) {
        out.push_back(alphabet.token(s));
      }
      return out;
    }

    std::vector<pair_type> read_pairs(json const& j, Alphabet const& alphabet,
                                      char const* what) {
      std::vector<pair_type> out;
      for (auto const& p : array(j, what)) {
        if (!p.is_array() || p.size() != 2) {
          throw FormatError(std::string(what) + " entries must be [u, v]");
        }
        out.emplace_back(read_word(p[0], alphabet), read_word(p[1], alphabet));
      }
      return out;
    }

    json write_pairs(std::vector<pair_type> const& pairs,
                     Alphabet const&               alphabet) {
      json out = json::array();
      for (auto const& [u, v] : pairs) {
        out.push_back({write_word(u, alphabet), write_word(v, alphabet)});
      }
      return out;
    }

    json indices(std::vector<std::size_t> const& v) {
      json out = json::array();
      for (auto i : v) {
        out.push_back(i);
      }
      return out;
    }

    std::string digits(word_type const& w) {
      std::string out;
      for (auto d : w) {
        out += static_cast<char>('0' + d);
      }
      return out;
    }

    word_type read_digits(json const& j, symbol_type base, char const* what) {
      word_type w;
      if (j.is_string()) {
        for (char c : j.get<std::string>()) {
          if (c < '0' || c >= static_cast<char>('0' + base)) {
            throw FormatError(std::string(what) + " contains '" + c
                              + "', expected digits below "
                              + std::to_string(base));
          }
          w.push_back(static_cast<symbol_type>(c - '0'));
        }
        return w;
      }
      for (auto const& d : array(j, what)) {
        auto v = to_index(d, what);
        if (v >= base) {
          throw FormatError(std::string(what) + " digit out of range");
        }
        w.push_back(static_cast<symbol_type>(v));
      }
      return w;
    }

    json pair_json(StringPair const& p) {
      return {{"w", digits(p.w)}, {"J", digits(p.J)}};
    }

    json matrix_rows(Mat3 const& m) {
      json rows = json::array();
      for (auto const& row : m.rows()) {
        json r = json::array();
        for (auto const& e : row) {
          r.push_back(e.str());
        }
        rows.push_back(r);
      }
      return rows;
    }

    json tags(std::vector<GammaGenerator> const& seq) {
      json out = json::array();
      for (auto const& g : seq) {
        out.push_back(to_string(g.tag));
      }
      return out;
    }

    json relation_json(GammaRelation const& rel) {
      return {{"p", tags(rel.p)}, {"q", tags(rel.q)}};
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Instances, presentations, derivations
  ////////////////////////////////////////////////////////////////////////

  PcpInstance read_instance(std::string_view text) {
    auto const j        = parse(text);
    auto       alphabet = make_alphabet(tokens(field(j, "alphabet"), "alphabet"));
    return PcpInstance(alphabet,
                       read_pairs(field(j, "pairs"), *alphabet, "pairs"));
  }

  std::string write_instance(PcpInstance const& inst) {
    json j;
    j["alphabet"] = inst.alphabet()->tokens();
    j["pairs"]    = write_pairs(inst.pairs(), *inst.alphabet());
    return dump(j);
  }

  Presentation read_presentation(std::string_view text) {
    auto const j       = parse(text);
    auto       letters = make_alphabet(tokens(field(j, "letters"), "letters"));
    return Presentation(
        letters, read_pairs(field(j, "relations"), *letters, "relations"));
  }

  std::string write_presentation(Presentation const& pres) {
    json j;
    j["letters"]   = pres.letters()->tokens();
    j["relations"] = write_pairs(pres.relations(), *pres.letters());
    return dump(j);
  }

  Derivation read_derivation(std::string_view text, Presentation const& pres) {
    auto const             j = parse(text);
    std::vector<word_type> steps;
    for (auto const& s : array(field(j, "steps"), "steps")) {
      steps.push_back(read_word(s, *pres.letters()));
    }
    std::vector<std::optional<RewriteWitness>> witnesses;
    if (j.contains("witnesses")) {
      for (auto const& w : array(j["witnesses"], "witnesses")) {
        if (w.is_null()) {
          witnesses.emplace_back();
        } else {
          witnesses.push_back(
              RewriteWitness{to_index(field(w, "position"), "position"),
                             to_index(field(w, "relation"), "relation")});
        }
      }
    }
    return Derivation(std::move(steps), std::move(witnesses));
  }

  std::string write_derivation(Derivation const& d, Presentation const& pres) {
    json j;
    json steps = json::array();
    for (auto const& s : d.steps()) {
      steps.push_back(write_word(s, *pres.letters()));
    }
    json witnesses = json::array();
    for (auto const& w : d.witnesses()) {
      if (w) {
        witnesses.push_back(
            {{"position", w->position}, {"relation", w->relation}});
      } else {
        witnesses.push_back(nullptr);
      }
    }
    j["steps"]     = steps;
    j["witnesses"] = witnesses;
    return dump(j);
  }

  ////////////////////////////////////////////////////////////////////////
  // Solutions and outcomes
  ////////////////////////////////////////////////////////////////////////

  PcpSolution read_solution(std::string_view text) {
    auto const  j   = parse(text);
    json const& arr = j.is_array() ? j : field(j, "indices");
    std::vector<std::size_t> out;
    for (auto const& i : array(arr, "indices")) {
      out.push_back(to_index(i, "index"));
    }
    return PcpSolution(std::move(out));
  }

  std::string write_solution(PcpSolution const& sol) {
    return dump({{"indices", indices(sol.indices())}});
  }

  std::string write_solutions(std::vector<PcpSolution> const& sols) {
    json list = json::array();
    for (auto const& s : sols) {
      list.push_back(indices(s.indices()));
    }
    return dump({{"count", sols.size()}, {"solutions", list}});
  }

  std::string write_outcome(SearchOutcome<PcpSolution> const& outcome) {
    json j;
    j["outcome"] = to_string(outcome.kind());
    j["indices"] = outcome.has_witness()
                       ? indices(outcome.witness().indices())
                       : json::array();
    j["reason"]  = outcome.reason();
    j["states"]  = outcome.stats().states;
    j["depth"]   = outcome.stats().depth;
    return dump(j);
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrices and string pairs
  ////////////////////////////////////////////////////////////////////////

  Mat3 read_matrix(std::string_view text) {
    auto const  j    = parse(text);
    auto const& rows = array(field(j, "rows"), "rows");
    if (rows.size() != 3) {
      throw FormatError("a matrix needs exactly 3 rows");
    }
    Mat3 m;
    for (std::size_t r = 0; r < 3; ++r) {
      auto const& row = array(rows[r], "row");
      if (row.size() != 3) {
        throw FormatError("each matrix row needs exactly 3 entries");
      }
      for (std::size_t c = 0; c < 3; ++c) {
        auto const& e = row[c];
        if (e.is_number_unsigned()) {
          m(r, c) = Nat(e.get<std::uint64_t>());
          continue;
        }
        if (!e.is_string()) {
          throw FormatError("matrix entries must be decimal strings");
        }
        auto const s = e.get<std::string>();
        if (s.empty()
            || !std::all_of(s.begin(), s.end(),
                            [](char ch) { return ch >= '0' && ch <= '9'; })) {
          throw FormatError("matrix entry \"" + s
                            + "\" is not a non-negative decimal");
        }
        m(r, c) = Nat(s);
      }
    }
    return m;
  }

  std::string write_matrix(Mat3 const& m) {
    return dump({{"rows", matrix_rows(m)}});
  }

  std::string write_matrices(EncodedMatrices const& mats) {
    json gens = json::array();
    for (auto tag : generator_tags(mats.params.k)) {
      gens.push_back(
          {{"tag", to_string(tag)}, {"rows", matrix_rows(mats.at(tag))}});
    }
    json codes = json::array();
    for (auto const& c : mats.params.index_codes) {
      codes.push_back(digits(c));
    }
    return dump({{"k", mats.params.k},
                 {"h", mats.params.h},
                 {"index_codes", codes},
                 {"generators", gens}});
  }

  StringPair read_string_pair(std::string_view text) {
    auto const j = parse(text);
    return {read_digits(field(j, "w"), 2, "w"),
            read_digits(field(j, "J"), 4, "J")};
  }

  std::string write_string_pair(StringPair const& p) {
    return dump(pair_json(p));
  }

  ////////////////////////////////////////////////////////////////////////
  // Generators and relations
  ////////////////////////////////////////////////////////////////////////

  std::string write_gamma(std::vector<GammaGenerator> const& gens) {
    json out = json::array();
    for (auto const& g : gens) {
      auto p = pair_json(g.pair);
      out.push_back({{"tag", to_string(g.tag)}, {"w", p["w"]}, {"J", p["J"]}});
    }
    return dump(out);
  }

  GammaRelation read_relation(std::string_view text, PcpInstance const& inst) {
    auto const j    = parse(text);
    auto       side = [&j](char const* key) {
      std::vector<GenTag> out;
      for (auto const& t : array(field(j, key), key)) {
        if (!t.is_string()) {
          throw FormatError("generator tags must be strings");
        }
        out.push_back(parse_gen_tag(t.get<std::string>()));
      }
      return out;
    };
    auto const p = side("p");
    auto const q = side("q");
    for (auto const* s : {&p, &q}) {
      for (auto t : *s) {
        if (t.kind != GenKind::eps2 && t.index >= inst.size()) {
          throw Error("generator " + to_string(t) + " refers to a missing pair");
        }
      }
    }
    return relation_from_tags(inst, p, q);
  }

  std::string write_relation(GammaRelation const& rel) {
    return dump(relation_json(rel));
  }

  std::string write_relation_report(GammaRelation const& rel, bool verified) {
    auto j        = relation_json(rel);
    j["verified"] = verified;
    j["product_p"] = pair_json(product(rel.p));
    j["product_q"] = pair_json(product(rel.q));
    return dump(j);
  }

  std::string
  write_relation_outcome(SearchOutcome<GammaRelation> const& outcome) {
    json j;
    j["outcome"] = to_string(outcome.kind());
    if (outcome.has_witness()) {
      auto const& rel = outcome.witness();
      j["p"]          = tags(rel.p);
      j["q"]          = tags(rel.q);
      j["product"]    = pair_json(product(rel.p));
    } else {
      j["p"] = json::array();
      j["q"] = json::array();
    }
    j["reason"] = outcome.reason();
    j["states"] = outcome.stats().states;
    j["depth"]  = outcome.stats().depth;
    return dump(j);
  }

  std::string write_factorization(BlockFactorization const& f) {
    json blocks = json::array();
    for (auto const& b : f.blocks) {
      blocks.push_back({{"kind", to_string(b.kind)},
                        {"u_side", b.u_on_p ? "p" : "q"},
                        {"indices", indices(b.indices)},
                        {"solution_indices", indices(b.solution_indices)},
                        {"b", tags(b.b)},
                        {"c", tags(b.c)}});
    }
    return dump({{"blocks", blocks},
                 {"solution", indices(extract_pcp_solution(f).indices())}});
  }

  std::string write_embedding_report(EmbeddingReport const& report) {
    json failures = json::array();
    for (auto const& seq : report.failures) {
      json s = json::array();
      for (auto t : seq) {
        s.push_back(to_string(t));
      }
      failures.push_back(s);
    }
    return dump({{"trials", report.trials},
                 {"ok", report.ok()},
                 {"failures", failures}});
  }

}  // namespace sympcp::io
