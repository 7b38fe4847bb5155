#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = sympcp::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  // A scratch directory with one file per name.
  struct Files {
    fs::path dir;

    Files() {
      dir = fs::temp_directory_path()
            / ("sympcp_cli_" + std::to_string(std::random_device{}()));
      fs::create_directories(dir);
    }
    ~Files() {
      std::error_code ec;
      fs::remove_all(dir, ec);
    }
    std::string put(std::string const& name, std::string const& text) const {
      auto path = dir / name;
      std::ofstream(path) << text;
      return path.string();
    }
  };

  char const* const single = R"({"alphabet": "01", "pairs": [["00", "0"]]})";
  char const* const closed
      = R"({"alphabet": "01", "pairs": [["00", "0"], ["0", "00"]]})";
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"solve"}).code == 2);
    CHECK(run({"solve", "--input", "/nonexistent/file.json"}).code == 2);
    Files f;
    auto  in = f.put("i.json", single);
    CHECK(run({"solve", "--input", in, "--max-tiles", "0"}).code == 2);
    CHECK(run({"solve", "--input", in, "--format", "yaml"}).code == 2);
    CHECK(run({"solve", "--input", f.put("bad.json", "{")}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("solve exit codes") {
    Files f;
    auto  r = run({"solve", "--input", f.put("i.json", single), "--format",
                   "json"});
    CHECK(r.code == 1);
    CHECK(r.out.find("length-monotone") != std::string::npos);

    auto s = run({"solve", "--input", f.put("c.json", closed), "--max-tiles",
                  "4", "--max-overhang", "8", "--max-states", "10000"});
    CHECK(s.code == 0);
    CHECK(s.out.find("indices: 0 1") != std::string::npos);

    auto e = run({"solve", "--input",
                  f.put("h.json",
                        R"({"alphabet": "01", "pairs": [["11","1"],["010","110"]]})"),
                  "--max-tiles", "6"});
    CHECK(e.code == 3);
  }

  TEST_CASE("json reports are byte identical across runs and workers") {
    Files f;
    auto  in = f.put("c.json", closed);
    auto  a  = run({"find-relation", "--input", in, "--format", "json"});
    auto  b  = run({"find-relation", "--input", in, "--format", "json",
                    "--threads", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("decode-matrix") {
    Files f;
    auto  r = run({"decode-matrix", "--input",
                   f.put("m.json",
                         R"({"rows": [["8","0","0"],["0","1","0"],["0","866","1024"]]})")});
    CHECK(r.code == 0);
    CHECK(r.out == "(\"000\", \"20213\")\n");
    auto bad = run({"decode-matrix", "--input",
                    f.put("b.json",
                          R"({"rows": [["3","0","0"],["0","1","0"],["0","0","1"]]})")});
    CHECK(bad.code == 1);
  }

  TEST_CASE("encode-pair") {
    auto r = run({"encode-pair", "--w", "000", "--j", "20213", "--format",
                  "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"866\"") != std::string::npos);
  }

  TEST_CASE("instance commands") {
    Files f;
    auto  in = f.put("i.json", single);
    CHECK(run({"validate", "--input", in}).code == 0);
    CHECK(run({"validate", "--input",
               f.put("t.json", R"({"alphabet": "01", "pairs": [["0","0"]]})")})
              .code
          == 1);
    auto sym = run({"symmetrize", "--input", in, "--format", "json"});
    CHECK(sym.code == 0);
    CHECK(sym.out.find("\"00\"") != std::string::npos);
    auto out = f.dir / "sym.json";
    CHECK(run({"symmetrize", "--input", in, "--format", "json", "--output",
               out.string()})
              .code
          == 0);
    CHECK(run({"solve", "--input", out.string()}).code == 0);
    CHECK(run({"enumerate", "--input", in, "--max-tiles", "4"}).code == 1);
    CHECK(run({"enumerate", "--input", out.string(), "--max-tiles", "2"}).code
          == 0);
    CHECK(run({"encode-binary", "--input",
               f.put("abc.json",
                     R"({"alphabet": "abc", "pairs": [["a","bc"]]})")})
              .code
          == 0);
    CHECK(run({"matrices", "--input", in}).code == 0);
    CHECK(run({"gamma", "--input", in}).code == 0);
    CHECK(run({"gamma-reduced", "--input", in}).code == 0);
    CHECK(run({"verify-embedding", "--input", in, "--trials", "50"}).code == 0);
  }

  TEST_CASE("floyd commands") {
    Files f;
    auto  pres = f.put("p.json",
                       R"({"letters": ["a","b"], "relations": [["ab","ba"]]})");
    auto  red  = run({"reduce", "--input", pres, "--x", "aab", "--y", "aba"});
    CHECK(red.code == 0);
    CHECK(red.out.find("pairs: 14") != std::string::npos);
    auto asym = run({"reduce", "--input", pres, "--x", "aab", "--y", "aba",
                     "--asymmetric"});
    CHECK(asym.out.find("pairs: 12") != std::string::npos);
    CHECK(run({"reduce", "--input", pres}).code == 2);

    auto deriv = f.put(
        "d.json",
        R"({"steps": ["aab","aba"], "witnesses": [{"position":1,"relation":0}]})");
    auto sol = run({"translate", "--input", pres, "--derivation", deriv,
                    "--format", "json"});
    CHECK(sol.code == 0);
    auto sol_file = f.put("s.json", sol.out);
    auto back = run({"translate", "--input", pres, "--solution", sol_file,
                     "--x", "aab", "--y", "aba"});
    CHECK(back.code == 0);
    CHECK(back.out.find("aab") != std::string::npos);

    auto wrong = f.put(
        "w.json",
        R"({"steps": ["aab","bab"], "witnesses": [{"position":1,"relation":0}]})");
    CHECK(run({"translate", "--input", pres, "--derivation", wrong}).code == 1);
  }

  TEST_CASE("relation commands") {
    Files f;
    auto  in  = f.put("i.json", single);
    auto  cl  = f.put("c.json", closed);
    auto  r1  = f.put("r1.json",
                      R"({"p": ["u:0","eps2","eps2","vbar:0"], "q": ["eps2","v:0","ubar:0"]})");
    auto  bad = f.put("bad.json",
                      R"({"p": ["u:0","eps2","eps2"], "q": ["eps2","v:0","ubar:0"]})");
    CHECK(run({"verify-relation", "--input", in, "--relation", r1}).code == 0);
    CHECK(run({"verify-relation", "--input", in, "--relation", bad}).code == 1);
    CHECK(run({"verify-relation", "--input", in, "--relation", r1,
               "--reduced"})
              .code
          == 1);
    CHECK(run({"matrix-relation-check", "--input", in, "--relation", r1}).code
          == 0);
    CHECK(run({"matrix-relation-check", "--input", in, "--relation", bad})
              .code
          == 1);
    auto fb = run({"factor-blocks", "--input", in, "--relation", r1});
    CHECK(fb.code == 0);
    CHECK(fb.out.find("solution: 0 1") != std::string::npos);
    CHECK(run({"factor-blocks", "--input", in, "--relation", bad}).code == 1);

    auto sol = f.put("s.json", "[0, 1]");
    CHECK(run({"relation-from-solution", "--input", cl, "--solution", sol})
              .code
          == 0);
    CHECK(run({"relation-from-solution", "--input", cl, "--solution", sol,
               "--symmetric"})
              .code
          == 0);
    CHECK(run({"relation-from-solution", "--input", cl, "--solution",
               f.put("n.json", "[0]")})
              .code
          == 1);
    CHECK(run({"find-relation", "--input", in, "--max-tiles", "12"}).code == 0);
    CHECK(run({"find-relation", "--input", in, "--max-tiles", "3"}).code == 3);
  }

  TEST_CASE("demo-counterexample") {
    auto r = run({"demo-counterexample"});
    CHECK(r.code == 0);
    CHECK(r.out.find("R1 [verified]") != std::string::npos);
    CHECK(r.out.find("R2 [verified]") != std::string::npos);
    CHECK(r.out.find("R3 [verified]") != std::string::npos);
    CHECK(r.out.find("solution: 0 1\n") != std::string::npos);
    auto j1 = run({"demo-counterexample", "--format", "json"});
    auto j2 = run({"demo-counterexample", "--format", "json"});
    CHECK(j1.out == j2.out);
  }
}
