#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympcp/sympcp.hpp"

namespace sympcp::cli {

  namespace {
    using json = nlohmann::ordered_json;

    struct Options {
      std::string   input;
      std::string   output;
      std::string   format       = "text";
      std::size_t   max_tiles    = SearchLimits{}.max_tiles;
      std::size_t   max_overhang = SearchLimits{}.max_overhang;
      std::size_t   max_states   = SearchLimits{}.max_states;
      std::uint64_t seed         = 20240601;
      unsigned      threads      = 1;
      std::string   x, y;
      std::string   solution, derivation, relation;
      std::string   w, j;
      bool          reduced    = false;
      bool          symmetric  = false;
      bool          asymmetric = false;
      std::size_t   trials     = 1000;
      std::size_t   max_len    = 8;

      [[nodiscard]] SearchLimits limits() const {
        SearchLimits l{max_tiles, max_overhang, max_states};
        l.validate();
        return l;
      }
    };

    // What a command hands back: the exit code and both renderings.
    struct Report {
      int         code = affirmative;
      std::string json_text;
      std::string text;
    };

    // Usage problems detected after parsing (missing files, flags).
    struct UsageError : Error {
      using Error::Error;
    };

    std::string read_file(std::string const& path, char const* flag) {
      if (path.empty()) {
        throw UsageError(std::string("missing ") + flag);
      }
      if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), {}};
      }
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw UsageError("cannot read " + path);
      }
      return {std::istreambuf_iterator<char>(in), {}};
    }

    std::string dump(json const& j) {
      return j.dump(2) + "\n";
    }

    ////////////////////////////////////////////////////////////////////////
    // Text rendering
    ////////////////////////////////////////////////////////////////////////

    std::string quoted(Alphabet const& a, word_type const& w) {
      return "\"" + a.render(w) + "\"";
    }

    std::string digits(word_type const& w) {
      std::string out;
      for (auto d : w) {
        out += static_cast<char>('0' + d);
      }
      return out;
    }

    std::string join(std::vector<std::size_t> const& v) {
      std::string out;
      for (auto i : v) {
        out += (out.empty() ? "" : " ") + std::to_string(i);
      }
      return out;
    }

    std::string pair_text(StringPair const& p) {
      return "(\"" + digits(p.w) + "\", \"" + digits(p.J) + "\")";
    }

    std::string instance_text(PcpInstance const& inst) {
      auto const&        a = *inst.alphabet();
      std::ostringstream s;
      s << "alphabet:";
      for (auto const& t : a.tokens()) {
        s << ' ' << t;
      }
      s << "\npairs: " << inst.size() << '\n';
      for (std::size_t i = 0; i < inst.size(); ++i) {
        auto const& [u, v] = inst.at(i);
        s << "  " << i << ": (" << quoted(a, u) << ", " << quoted(a, v)
          << ")\n";
      }
      return s.str();
    }

    std::string matrix_text(Mat3 const& m) {
      std::ostringstream s;
      for (auto const& row : m.rows()) {
        s << "  [";
        for (std::size_t c = 0; c < 3; ++c) {
          s << (c ? ", " : "") << row[c];
        }
        s << "]\n";
      }
      return s.str();
    }

    std::string tags_text(std::vector<GammaGenerator> const& seq) {
      std::string out;
      for (auto const& g : seq) {
        out += (out.empty() ? "" : " ") + to_string(g.tag);
      }
      return out;
    }

    std::string relation_text(GammaRelation const& rel) {
      return "p: " + tags_text(rel.p) + "\nq: " + tags_text(rel.q)
             + "\nproduct p: " + pair_text(product(rel.p))
             + "\nproduct q: " + pair_text(product(rel.q)) + "\n";
    }

    std::string derivation_text(Derivation const& d, Alphabet const& letters) {
      std::ostringstream s;
      for (std::size_t t = 0; t < d.size(); ++t) {
        s << "  " << letters.render(d.steps()[t]);
        if (t + 1 < d.size()) {
          auto const& w = d.witnesses()[t];
          if (w) {
            s << "  -> relation " << w->relation << " at " << w->position;
          } else {
            s << "  -> copy";
          }
        }
        s << '\n';
      }
      return s.str();
    }

    std::string factorization_text(BlockFactorization const& f) {
      std::ostringstream s;
      for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        auto const& b = f.blocks[i];
        s << "block " << i + 1 << ": " << to_string(b.kind) << ", u-side "
          << (b.u_on_p ? 'p' : 'q') << ", indices " << join(b.indices)
          << ", solution indices " << join(b.solution_indices) << "\n  B: "
          << tags_text(b.b) << "\n  C: " << tags_text(b.c) << '\n';
      }
      s << "solution: " << join(extract_pcp_solution(f).indices()) << '\n';
      return s.str();
    }

    template <typename T, typename F>
    std::string outcome_text(SearchOutcome<T> const& o, F&& witness_text) {
      std::string s = std::string("outcome: ") + to_string(o.kind()) + "\n";
      if (o.has_witness()) {
        s += witness_text(o.witness());
      } else {
        s += "reason: " + o.reason() + "\n";
      }
      s += "states: " + std::to_string(o.stats().states)
           + "\ndepth: " + std::to_string(o.stats().depth) + "\n";
      return s;
    }

    int outcome_code(Outcome o) {
      switch (o) {
        case Outcome::solution:
          return affirmative;
        case Outcome::unsolvable:
          return negative;
        case Outcome::exhausted:
          return exhausted;
      }
      return usage_error;
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    PcpInstance input_instance(Options const& o) {
      return io::read_instance(read_file(o.input, "--input"));
    }

    Report cmd_validate(Options const& o) {
      auto const text = read_file(o.input, "--input");
      Report     r;
      try {
        auto const inst = io::read_instance(text);
        json       j;
        j["valid"]     = true;
        j["pairs"]     = inst.size();
        j["alphabet"]  = inst.alphabet()->size();
        j["symmetric"] = is_symmetric(inst);
        j["binary"]    = is_binary(inst);
        r.json_text    = dump(j);
        r.text         = instance_text(inst) + "valid: yes\nsymmetric: "
                 + (is_symmetric(inst) ? "yes" : "no") + "\n";
      } catch (FormatError const&) {
        throw;
      } catch (Error const& e) {
        r.code      = negative;
        r.json_text = dump({{"valid", false}, {"error", e.what()}});
        r.text      = std::string("valid: no\nerror: ") + e.what() + "\n";
      }
      return r;
    }

    Report instance_report(PcpInstance const& inst) {
      return {affirmative, io::write_instance(inst), instance_text(inst)};
    }

    Report cmd_symmetrize(Options const& o) {
      return instance_report(symmetric_closure(input_instance(o)));
    }

    Report cmd_encode_binary(Options const& o) {
      return instance_report(binary_code(input_instance(o)));
    }

    Report cmd_solve(Options const& o) {
      auto const out = solve(input_instance(o), o.limits(), o.threads);
      return {outcome_code(out.kind()), io::write_outcome(out),
              outcome_text(out, [](PcpSolution const& s) {
                return "indices: " + join(s.indices()) + "\n";
              })};
    }

    Report cmd_enumerate(Options const& o) {
      auto const sols = enumerate_solutions(input_instance(o), o.max_tiles);
      std::string text = "solutions: " + std::to_string(sols.size()) + "\n";
      for (auto const& s : sols) {
        text += "  " + join(s.indices()) + "\n";
      }
      return {sols.empty() ? negative : affirmative, io::write_solutions(sols),
              text};
    }

    struct FloydInput {
      Presentation pres;
      word_type    x, y;
    };

    FloydInput floyd_input(Options const& o) {
      auto pres = io::read_presentation(read_file(o.input, "--input"));
      if (o.x.empty() || o.y.empty()) {
        throw UsageError("--x and --y are required");
      }
      auto x = pres.letters()->parse(o.x);
      auto y = pres.letters()->parse(o.y);
      return {std::move(pres), std::move(x), std::move(y)};
    }

    Report cmd_reduce(Options const& o) {
      auto const in = floyd_input(o);
      return instance_report(o.asymmetric ? build_pcp(in.pres, in.x, in.y)
                                          : build_sympcp(in.pres, in.x, in.y));
    }

    Report cmd_translate(Options const& o) {
      auto pres = io::read_presentation(read_file(o.input, "--input"));
      if (!o.derivation.empty() == !o.solution.empty()) {
        throw UsageError("give exactly one of --derivation and --solution");
      }
      if (!o.derivation.empty()) {
        auto const d   = io::read_derivation(read_file(o.derivation,
                                                       "--derivation"),
                                             pres);
        auto const sol = derivation_to_solution(pres, d);
        auto const P   = build_sympcp(pres, d.front(), d.back());
        json       j   = json::parse(io::write_solution(sol));
        j["instance"]  = json::parse(io::write_instance(P));
        return {affirmative, dump(j),
                "indices: " + join(sol.indices()) + "\n"
                    + instance_text(P)};
      }
      if (o.x.empty() || o.y.empty()) {
        throw UsageError("--x and --y are required with --solution");
      }
      auto const x   = pres.letters()->parse(o.x);
      auto const y   = pres.letters()->parse(o.y);
      auto const sol = io::read_solution(read_file(o.solution, "--solution"));
      auto const d   = solution_to_derivation(pres, x, y, sol);
      return {affirmative, io::write_derivation(d, pres),
              derivation_text(d, *pres.letters())};
    }

    Report cmd_matrices(Options const& o) {
      auto const         mats = build_matrices(input_instance(o));
      std::ostringstream s;
      s << "k: " << mats.params.k << "\nh: " << mats.params.h << '\n';
      for (auto tag : generator_tags(mats.params.k)) {
        s << to_string(tag) << ":\n" << matrix_text(mats.at(tag));
      }
      return {affirmative, io::write_matrices(mats), s.str()};
    }

    StringPair input_pair(Options const& o) {
      if (!o.input.empty()) {
        return io::read_string_pair(read_file(o.input, "--input"));
      }
      return io::read_string_pair(dump({{"w", o.w}, {"J", o.j}}));
    }

    Report cmd_encode_pair(Options const& o) {
      auto const m = pair_to_matrix(input_pair(o));
      return {affirmative, io::write_matrix(m), matrix_text(m)};
    }

    Report cmd_decode_matrix(Options const& o) {
      auto const m = io::read_matrix(read_file(o.input, "--input"));
      auto const p = matrix_to_pair(m);
      return {affirmative, io::write_string_pair(p), pair_text(p) + "\n"};
    }

    Report cmd_verify_embedding(Options const& o) {
      auto const rep
          = verify_embedding(input_instance(o), o.trials, o.max_len, o.seed);
      std::string text = "trials: " + std::to_string(rep.trials)
                         + "\nfailures: " + std::to_string(rep.failures.size())
                         + "\n";
      return {rep.ok() ? affirmative : negative,
              io::write_embedding_report(rep), text};
    }

    Report gamma_report(std::vector<GammaGenerator> const& gens) {
      std::string text;
      for (auto const& g : gens) {
        text += to_string(g.tag) + ": " + pair_text(g.pair) + "\n";
      }
      return {affirmative, io::write_gamma(gens), text};
    }

    Report cmd_gamma(Options const& o) {
      return gamma_report(build_gamma(input_instance(o)));
    }

    Report cmd_gamma_reduced(Options const& o) {
      return gamma_report(build_gamma_reduced(input_instance(o)));
    }

    Report cmd_relation_from_solution(Options const& o) {
      auto const inst = input_instance(o);
      auto const sol = io::read_solution(read_file(o.solution, "--solution"));
      auto const rel = o.symmetric ? relation_from_solution_symmetric(inst, sol)
                                   : relation_from_solution(inst, sol);
      bool const ok  = verify_relation(build_gamma(inst), rel);
      return {ok ? affirmative : negative, io::write_relation_report(rel, ok),
              relation_text(rel) + "verified: " + (ok ? "yes" : "no") + "\n"};
    }

    std::vector<GammaGenerator> generators(Options const&     o,
                                           PcpInstance const& inst) {
      return o.reduced ? build_gamma_reduced(inst) : build_gamma(inst);
    }

    Report cmd_find_relation(Options const& o) {
      auto const inst = input_instance(o);
      auto const out  = find_relation(generators(o, inst), o.limits(),
                                     o.threads);
      return {outcome_code(out.kind()), io::write_relation_outcome(out),
              outcome_text(out, relation_text)};
    }

    GammaRelation input_relation(Options const& o, PcpInstance const& inst) {
      return io::read_relation(read_file(o.relation, "--relation"), inst);
    }

    Report cmd_verify_relation(Options const& o) {
      auto const inst = input_instance(o);
      auto const rel  = input_relation(o, inst);
      try {
        bool const ok = verify_relation(generators(o, inst), rel);
        return {ok ? affirmative : negative, io::write_relation_report(rel, ok),
                relation_text(rel) + "verified: " + (ok ? "yes" : "no")
                    + "\n"};
      } catch (Error const& e) {
        // A generator outside the chosen set is a failed verification.
        json j    = json::parse(io::write_relation_report(rel, false));
        j["error"] = e.what();
        return {negative, dump(j),
                std::string("verified: no\nerror: ") + e.what() + "\n"};
      }
    }

    Report cmd_factor_blocks(Options const& o) {
      auto const inst = input_instance(o);
      auto const f    = factor_blocks(inst, input_relation(o, inst));
      return {affirmative, io::write_factorization(f), factorization_text(f)};
    }

    Report cmd_matrix_relation_check(Options const& o) {
      auto const inst = input_instance(o);
      auto const rel  = input_relation(o, inst);
      bool const ok   = matrix_relation_check(inst, rel);
      json       j    = json::parse(io::write_relation(rel));
      j["equal"]      = ok;
      return {ok ? affirmative : negative, dump(j),
              relation_text(rel) + "matrix products equal: "
                  + (ok ? "yes" : "no") + "\n"};
    }

    Report cmd_demo_counterexample(Options const& o) {
      auto const inst = PcpInstance(binary_alphabet(), {{{0, 0}, {0}}});
      auto const gens = build_gamma(inst);
      GenTag const e{GenKind::eps2, 0}, u{GenKind::u, 0},
          ub{GenKind::ubar, 0}, v{GenKind::v, 0}, vb{GenKind::vbar, 0};
      std::vector<std::pair<std::string, GammaRelation>> const rels = {
          {"R1", relation_from_tags(inst, {u, e, e, vb}, {e, v, ub})},
          {"R2", relation_from_tags(inst, {u, e, e, v}, {e, v, u, e})},
          {"R3", relation_from_tags(inst, {u, ub, e, v, vb},
                                    {e, v, vb, u, ub})}};

      auto const solved  = solve(inst, o.limits(), o.threads);
      auto const closure = symmetric_closure(inst);
      bool       all_ok  = solved.kind() == Outcome::unsolvable;
      json       j;
      j["instance"]  = json::parse(io::write_instance(inst));
      j["solve"]     = json::parse(io::write_outcome(solved));
      j["generators"] = json::parse(io::write_gamma(gens));
      std::string text = instance_text(inst) + "solve: "
                         + to_string(solved.kind()) + " (" + solved.reason()
                         + ")\n";
      json list = json::array();
      for (auto const& [name, rel] : rels) {
        bool const ok  = verify_relation(gens, rel);
        auto const f   = factor_blocks(inst, rel);
        auto const sol = extract_pcp_solution(f);
        bool const solves = check_solution(closure, sol);
        all_ok            = all_ok && ok && solves;
        auto entry        = json::parse(io::write_relation_report(rel, ok));
        entry["name"]     = name;
        entry["factorization"] = json::parse(io::write_factorization(f));
        entry["solves_closure"] = solves;
        list.push_back(entry);
        text += "\n" + name + " [" + (ok ? "verified" : "NOT verified")
                + "]\n" + relation_text(rel) + factorization_text(f)
                + "solves closure: " + (solves ? "yes" : "no") + "\n";
      }
      j["relations"] = list;
      j["closure"]   = json::parse(io::write_instance(closure));
      return {all_ok ? affirmative : negative, dump(j), text};
    }

    using Command = std::function<Report(Options const&)>;

    struct CommandSpec {
      char const* name;
      char const* help;
      Command     fn;
    };

    std::vector<CommandSpec> const& commands() {
      static std::vector<CommandSpec> const all = {
          {"validate", "check an instance file", cmd_validate},
          {"symmetrize", "add the missing swapped pairs", cmd_symmetrize},
          {"solve", "bounded search for a PCP solution", cmd_solve},
          {"enumerate", "list all solutions up to --max-tiles",
           cmd_enumerate},
          {"reduce", "presentation plus --x/--y to a symmetric PCP",
           cmd_reduce},
          {"translate", "derivation to solution or solution to derivation",
           cmd_translate},
          {"encode-binary", "recode an instance over {0,1}",
           cmd_encode_binary},
          {"matrices", "the 3x3 matrices of a binary instance",
           cmd_matrices},
          {"encode-pair", "string pair to matrix", cmd_encode_pair},
          {"decode-matrix", "matrix to string pair", cmd_decode_matrix},
          {"verify-embedding", "random check of the matrix embedding",
           cmd_verify_embedding},
          {"gamma", "the 4k+1 string-pair generators", cmd_gamma},
          {"gamma-reduced", "the 2k+1 generators without letter 3",
           cmd_gamma_reduced},
          {"relation-from-solution", "relation spelled by a PCP solution",
           cmd_relation_from_solution},
          {"find-relation", "bounded search for a generator relation",
           cmd_find_relation},
          {"verify-relation", "check a relation over the generators",
           cmd_verify_relation},
          {"factor-blocks", "split a relation into 2-2 and 2-3 blocks",
           cmd_factor_blocks},
          {"matrix-relation-check", "replay a relation through matrices",
           cmd_matrix_relation_check},
          {"demo-counterexample", "the {(00,0)} relations end to end",
           cmd_demo_counterexample},
      };
      return all;
    }

    void emit(Options const& o, Report const& r, std::ostream& out) {
      auto const& body = o.format == "json" ? r.json_text : r.text;
      if (o.output.empty() || o.output == "-") {
        out << body;
        return;
      }
      std::ofstream file(o.output, std::ios::binary);
      if (!file || !(file << body)) {
        throw UsageError("cannot write " + o.output);
      }
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Symmetric PCP, Floyd reduction and matrix freeness toolkit",
                 "sympcp"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--input", o.input, "input file (- for stdin)");
    app.add_option("--output", o.output, "report file (default stdout)");
    app.add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-tiles", o.max_tiles, "bound on sequence length")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-overhang", o.max_overhang,
                   "bound on the unmatched suffix")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-states", o.max_states, "visited-state budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "seed for randomized checks");
    app.add_option("--threads", o.threads, "worker threads")
        ->check(CLI::PositiveNumber);
    app.add_option("--x", o.x, "source word");
    app.add_option("--y", o.y, "target word");
    app.add_option("--solution", o.solution, "solution file");
    app.add_option("--derivation", o.derivation, "derivation file");
    app.add_option("--relation", o.relation, "relation file");
    app.add_option("--w", o.w, "first coordinate over {0,1}");
    app.add_option("--j", o.j, "second coordinate over {0,1,2,3}");
    app.add_option("--trials", o.trials, "number of random sequences")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-len", o.max_len, "longest random sequence")
        ->check(CLI::PositiveNumber);
    app.add_flag("--reduced", o.reduced, "use the letter-3-free generators");
    app.add_flag("--symmetric", o.symmetric,
                 "build the letter-3-free relation");
    app.add_flag("--asymmetric", o.asymmetric,
                 "omit the swapped boundary pairs");

    std::map<CLI::App const*, Command> dispatch;
    for (auto const& c : commands()) {
      dispatch[app.add_subcommand(c.name, c.help)] = c.fn;
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return affirmative;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return affirmative;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return usage_error;
    }

    auto const* sub = app.get_subcommands().front();
    try {
      auto const report = dispatch.at(sub)(o);
      emit(o, report, out);
      return report.code;
    } catch (NotInImage const& e) {
      emit(o, {negative, dump({{"ok", false}, {"error", e.what()}}),
               std::string("not in image: ") + e.what() + "\n"},
           out);
      return negative;
    } catch (MalformedRelation const& e) {
      emit(o, {negative, dump({{"ok", false}, {"error", e.what()}}),
               std::string("malformed relation: ") + e.what() + "\n"},
           out);
      return negative;
    } catch (MalformedSolution const& e) {
      emit(o, {negative, dump({{"ok", false}, {"error", e.what()}}),
               std::string("malformed solution: ") + e.what() + "\n"},
           out);
      return negative;
    } catch (InvalidDerivation const& e) {
      emit(o, {negative, dump({{"ok", false}, {"error", e.what()}}),
               std::string("invalid derivation: ") + e.what() + "\n"},
           out);
      return negative;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return usage_error;
    }
  }

}  // namespace sympcp::cli
