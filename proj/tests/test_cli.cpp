#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "lcklab/cli.hpp"
#include "lcklab/io.hpp"
#include "lcklab/report.hpp"
#include "support.hpp"

using namespace lcklab;
using namespace lcklab::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lck-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Report machine(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "machine"});
  const Run r = run(args);
  Report rep = Report::parse_machine(r.out);
  CHECK(rep.exit_code() == r.code);
  return rep;
}

std::string value_of(const Report& r, const std::string& name) {
  const auto* j = r.find("value", name);
  REQUIRE_MESSAGE(j, name);
  return (*j)["value"].get<std::string>();
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("lcklab-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string emit(const TempDir& dir, const std::string& key) {
  std::string name = key;
  std::replace(name.begin(), name.end(), '/', '_');
  const std::string path = dir.file(name + ".json");
  REQUIRE(run({"catalog", "emit", key, "-o", path}).code == 0);
  return path;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("catalog list") {
  const Run r = run({"catalog", "list"});
  CHECK(r.code == 0);
  for (const auto& k : catalog_keys()) CHECK(r.out.find(k.to_string()) != std::string::npos);
}

TEST_CASE("emitted files re-parse to the catalog algebra") {
  TempDir dir;
  for (const auto& k : catalog_keys()) {
    const AlgebraFile f = read_algebra_file(emit(dir, k.to_string()));
    CHECK(f == to_algebra_file(build(k)));
  }
  const Run to_stdout = run({"catalog", "emit", "surface(2)"});
  CHECK(parse_algebra_file(to_stdout.out).algebra == build(CatalogKey::parse("surface(2)")).algebra);
}

TEST_CASE("check: pass, failed check, parse error") {
  TempDir dir;
  const std::string s6 = emit(dir, "surface(6)");
  const Report ok = machine({"check", s6});
  CHECK(ok.exit_code() == 0);
  CHECK(ok.all_items_pass());
  CHECK(value_of(ok, "computed Lee form") == "w");
  CHECK(value_of(ok, "Vaisman") == "yes");
  CHECK(value_of(ok, "Reeb form φ") == "z");
  // the machine form is also accepted before the subcommand's own options
  CHECK(Report::parse_machine(run({"check", s6, "--format", "machine"}).out) == ok);

  AlgebraFile f = read_algebra_file(s6);
  f.forms["theta"] = 2 * f.forms["theta"];
  const std::string twice = dir.file("twice.json");
  write(twice, emit_algebra_file(f));
  const Report bad = machine({"check", twice});
  CHECK(bad.exit_code() == 1);
  REQUIRE(bad.find("item", "dΩ = θ∧Ω"));
  CHECK((*bad.find("item", "dΩ = θ∧Ω"))["pass"] == false);

  std::string text = emit_algebra_file(read_algebra_file(s6));
  text.replace(text.find("\"coeff\": \"1\""), 12, "\"coeff\": \"1/0\"");
  const std::string broken = dir.file("broken.json");
  write(broken, text);
  const Run r = run({"check", broken});
  CHECK(r.code == 2);
  CHECK((r.out + r.err).find("1/0") != std::string::npos);
  CHECK((r.out + r.err).find("/J/0/coeff") != std::string::npos);

  CHECK(run({"check", dir.file("missing.json")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", s6, "--omega", "nope"}).code == 2);
}

TEST_CASE("check on the Inoue surface reports the failed decomposition without failing") {
  TempDir dir;
  const Report r = machine({"check", emit(dir, "surface(3)")});
  CHECK(r.exit_code() == 0);
  CHECK(value_of(r, "computed Lee form") == "-w");
  CHECK(value_of(r, "given θ matches computed") == "yes");
  CHECK(value_of(r, "Vaisman") == "no");
  CHECK(value_of(r, "Ω = −θ∧φ + dφ") == "fails for both signs of η");
}

TEST_CASE("cohomology") {
  TempDir dir;
  const std::string h4 = emit(dir, "heisenberg_type(2)");
  const Report all = machine({"cohomology", h4});
  CHECK(all.exit_code() == 0);
  for (int p = 0; p <= 4; ++p) CHECK(value_of(all, "dim H^" + std::to_string(p) + "_θ") == "0");
  const Report trivial = machine({"cohomology", h4, "--theta", "0", "--p", "0"});
  CHECK(value_of(trivial, "dim H^0_θ") == "1");
  CHECK(trivial.find("value", "dim H^1_θ") == nullptr);
  const Report s6 = machine({"cohomology", emit(dir, "surface(6)")});
  for (int p = 0; p <= 4; ++p) CHECK(value_of(s6, "dim H^" + std::to_string(p) + "_θ") == "0");

  AlgebraFile f = read_algebra_file(emit(dir, "surface(6)"));
  f.forms["theta"] = Cochain::dual(4, 2);
  const std::string open = dir.file("open.json");
  write(open, emit_algebra_file(f));
  CHECK(machine({"cohomology", open}).exit_code() == 1);
  CHECK(run({"cohomology", h4, "--p", "7"}).code == 2);
}

TEST_CASE("classify") {
  TempDir dir;
  const Report r = machine({"classify", emit(dir, "surface(1)")});
  CHECK(value_of(r, "label") == "Prop4-3ii");
  CHECK(machine({"classify", emit(dir, "surface(6)")}).exit_code() == 0);
  CHECK(value_of(machine({"classify", emit(dir, "prop4_family(7i)")}), "lattice") == "no");
  CHECK(run({"classify", emit(dir, "heisenberg_type(3)")}).code == 2);
}

TEST_CASE("double-root") {
  const Report r = machine({"double-root", "--m", "3", "--n", "3"});
  CHECK(r.exit_code() == 0);
  CHECK(value_of(r, "double root") == "1");
  CHECK(value_of(machine({"double-root", "--m", "0", "--n", "0"}), "double root") == "none");
  CHECK(run({"double-root", "--m", "x", "--n", "1"}).code == 2);
}

TEST_CASE("search") {
  TempDir dir;
  const Run none = run({"search", emit(dir, "prop4_family(3i)")});
  CHECK(none.code == 1);
  CHECK(none.out.find("no witness on grid") != std::string::npos);
  CHECK(none.out.find("-3:3:1/2") != std::string::npos);
  const Report found = machine({"--threads", "2", "search", emit(dir, "heisenberg_type(2)"), "--grid", "-1:1:1"});
  CHECK(found.exit_code() == 0);
  CHECK(value_of(found, "grid") == "-1:1:1");
  CHECK(value_of(found, "result") == "witness found");
  CHECK(run({"search", emit(dir, "surface(6)"), "--grid", "1:0:1"}).code == 2);
}

TEST_CASE("human output never shows decimals for exact values") {
  TempDir dir;
  for (const char* k : {"u2_Jdelta(2,1,+)", "hopf_Jd(1/2)", "surface(4,3)"}) {
    const Run r = run({"check", emit(dir, k)});
    CHECK_MESSAGE(r.code == 0, k);
    for (std::size_t i = 1; i + 1 < r.out.size(); ++i)
      CHECK_FALSE((std::isdigit(static_cast<unsigned char>(r.out[i - 1])) && r.out[i] == '.' &&
                   std::isdigit(static_cast<unsigned char>(r.out[i + 1]))));
  }
}
