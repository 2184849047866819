#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"

#include "cclosed/cli.hpp"
#include "cclosed/error.hpp"
#include "cclosed/table_io.hpp"

#include "fixtures.hpp"

using namespace cclosed;
using namespace fixtures;
namespace fs = std::filesystem;

namespace {
  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  bool contains(std::string const& haystack, std::string const& needle) {
    return haystack.find(needle) != std::string::npos;
  }

  // A scratch directory removed on destruction.
  class Scratch {
   public:
    Scratch() {
      static int counter = 0;
      _dir = fs::temp_directory_path()
             / ("cclosed-test-" + std::to_string(::getpid()) + "-"
                + std::to_string(counter++));
      fs::create_directories(_dir);
    }
    ~Scratch() {
      std::error_code ec;
      fs::remove_all(_dir, ec);
    }
    std::string file(std::string const& name, std::string const& content) const {
      auto const path = (_dir / name).string();
      std::ofstream(path) << content;
      return path;
    }
    fs::path const& dir() const {
      return _dir;
    }

   private:
    fs::path _dir;
  };
}  // namespace

TEST_SUITE("table format") {
  TEST_CASE("parses the chain") {
    CHECK(parse_table("3\n0 0 0\n0 1 1\n0 1 2") == L3);
    CHECK(parse_table("# meet\n\n3\n# rows\n0 0 0\n0 1 1\n0 1 2\n") == L3);
  }

  TEST_CASE("rejects non-associative tables with the witness") {
    CHECK_THROWS_WITH_AS(parse_table("2\n1 0\n0 0"), doctest::Contains("(0,0,1)"),
                         PreconditionError);
    CHECK(parse_table("2\n1 0\n0 0", Associativity::skip).size() == 2);
  }

  TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_WITH_AS(parse_table("2\n0 1\n1 2"),
                         doctest::Contains("entry 2 out of range"), ParseError);
    try {
      parse_table("2\n0 1\n1 2");
    } catch (ParseError const& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_table(""), ParseError);
    CHECK_THROWS_AS(parse_table("0\n"), ParseError);
    CHECK_THROWS_AS(parse_table("2\n0 x\n0 0"), ParseError);
    CHECK_THROWS_AS(parse_table("2\n0 0 0\n0 0"), ParseError);
    CHECK_THROWS_AS(parse_table("2\n0 0"), ParseError);
    CHECK_THROWS_AS(parse_table("2\n0 0\n0 0\n0 0"), ParseError);
  }

  TEST_CASE("render round trip") {
    for (auto const& t : {L3, Z4, T5, N3}) {
      CHECK(parse_table(render_table(t, {"a comment"})) == t);
    }
    CHECK(render_table(L3) == "3\n0 0 0\n0 1 1\n0 1 2\n");
    CHECK(render_table(L3, {"x"}).rfind("# x\n", 0) == 0);
  }
}

TEST_SUITE("command line") {
  TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"validate"}).code == 2);
    CHECK(run({"validate", "/nonexistent/file.tbl"}).code == 2);
    CHECK(run({"enumerate", "--order", "9"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("validate") {
    Scratch s;
    auto const good = s.file("z3.tbl", "3\n0 1 2\n1 2 0\n2 0 1\n");
    auto const bad  = s.file("bad.tbl", "2\n1 0\n0 0\n");
    auto const r    = run({"validate", good});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "associative: yes"));
    auto const b = run({"validate", bad});
    CHECK(b.code == 1);
    CHECK(contains(b.out, "witness 0,0,1"));
    auto const j = nlohmann::json::parse(run({"validate", bad, "--json"}).out);
    CHECK(j["associative"] == false);
    CHECK(j["associativity_witness"] == nlohmann::json{0, 0, 1});
  }

  TEST_CASE("analyze lists the structure") {
    Scratch    s;
    auto const l3 = s.file("L3.tbl", "3\n0 0 0\n0 1 1\n0 1 2\n");
    auto const r  = run({"analyze", l3});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "idempotents E: {0,1,2}"));
    CHECK(contains(r.out, "0<1 1<2"));
    CHECK(contains(r.out, "H-classes: {0} {1} {2}"));
    CHECK(contains(r.out, "pi: 0->0 1->1 2->2"));
    CHECK(contains(r.out, "center Z: {0,1,2}"));
    auto const j = nlohmann::json::parse(run({"--json", "analyze", l3}).out);
    CHECK(j["hasse"] == nlohmann::json{{0, 1}, {1, 2}});
  }

  TEST_CASE("classify") {
    auto const r = run({"classify", "(null)"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "C-closed: no"));
    CHECK(contains(r.out, "Theorem 1.4"));
    auto const j = nlohmann::json::parse(run({"classify", "--json", "(taimanov)"}).out);
    CHECK(j["c_closed"] == true);
    CHECK(j["ideally_closed"] == false);
    CHECK(j["failing_condition"]["name"] == "almost-clifford");
    auto const e = run({"classify", "(group (prufer 4))"});
    CHECK(e.code == 2);
    CHECK(contains(e.err, "not prime"));
  }

  TEST_CASE("classify refuses non-commutative tables") {
    Scratch    s;
    auto const lz = s.file("lz.tbl", "2\n0 0\n1 1\n");
    auto const r  = run({"classify", lz});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "commutative"));
  }

  TEST_CASE("classify a table file") {
    Scratch    s;
    auto const z3 = s.file("z3.tbl", "3\n0 1 2\n1 2 0\n2 0 1\n");
    auto const r  = run({"classify", z3});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "finite => all properties hold"));
    auto const d = run({"classify", "(product (table " + z3 + ") (null))"});
    CHECK(d.code == 0);
    CHECK(contains(d.out, "C-closed: no"));
  }

  TEST_CASE("quotients") {
    Scratch    s;
    auto const t5 = s.file("t5.tbl", render_table(T5));
    auto const r  = run({"quotient", t5, "--ideal", "0,1"});
    CHECK(r.code == 0);
    CHECK(parse_table(r.out) == CayleyTable{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    auto const l3 = s.file("L3.tbl", render_table(L3));
    auto const c  = run({"quotient", l3, "--pairs", "1:2"});
    CHECK(c.code == 0);
    CHECK(parse_table(c.out) == CayleyTable{{0, 0}, {0, 1}});
    CHECK(run({"quotient", l3, "--ideal", "2"}).code == 2);
    CHECK(run({"quotient", l3}).code == 2);
    CHECK(run({"quotient", l3, "--ideal", "0", "--pairs", "1:2"}).code == 2);
    CHECK(run({"quotient", l3, "--pairs", "1-2"}).code == 2);
  }

  TEST_CASE("power") {
    Scratch    s;
    auto const c2 = s.file("c2.tbl", "2\n0 0\n0 1\n");
    auto const r  = run({"power", c2});
    CHECK(r.code == 0);
    CHECK(parse_table(r.out) == CayleyTable{{0, 0, 0}, {0, 1, 2}, {0, 2, 2}});
  }

  TEST_CASE("enumerate writes a corpus") {
    Scratch    s;
    auto const dir = (s.dir() / "corpus").string();
    auto const r   = run({"enumerate", "--order", "3", "--up-to-iso", "--out", dir});
    CHECK(r.code == 0);
    std::size_t files = 0;
    for (auto const& entry : fs::directory_iterator(dir)) {
      CHECK(read_table_file(entry.path().string()).size() == 3);
      ++files;
    }
    CHECK(files == 12);
    auto const j = nlohmann::json::parse(run({"enumerate", "--order", "2", "--json"}).out);
    CHECK(j["count"] == 6);
  }

  TEST_CASE("suite") {
    auto const r = run({"suite", "--max-order", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "all properties hold"));
    CHECK(run({"suite", "--max-order", "7"}).code == 2);
  }

  TEST_CASE("json output is byte-stable") {
    auto const a = run({"--json", "classify", "(product (taimanov) (semilattice chain-omega))"});
    auto const b = run({"--json", "classify", "(product (taimanov) (semilattice chain-omega))"});
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::accept(a.out));
  }
}
