#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "autseq/cli.hpp"
#include "autseq/errors.hpp"
#include "autseq/io.hpp"
#include "autseq/sequence.hpp"

using namespace autseq;
namespace fs = std::filesystem;

namespace {

const fs::path kData = AUTSEQ_DATA_DIR;

const char* kThueMorse = R"(seqdec-dfao v1
base 2
outputs 0 1
initial 0
state 0 out=0
  on 0 -> 0
  on 1 -> 1
state 1 out=1
  on 0 -> 1
  on 1 -> 0
)";

// Drops comments and blank lines and trims each remaining line.
std::string normalized(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    const auto b = line.find_first_not_of(" \t"), e = line.find_last_not_of(" \t\r");
    if (b != std::string::npos) out += line.substr(b, e - b + 1) + '\n';
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "seqdec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<fs::path> shipped_dfaos() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(kData))
    if (e.path().extension() == ".dfao") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string error_of(const std::string& text) {
  try {
    parse_dfao(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parse the Thue-Morse file") {
  const Dfao m = parse_dfao(kThueMorse);
  CHECK(to_string(prefix(m, 16), m.alphabet()) == "0110100110010110");
  CHECK(serialize_dfao(m) == kThueMorse);
  CHECK(m == builtin_dfao("thue-morse"));
}

TEST_CASE("shipped files round-trip") {
  for (const auto& p : shipped_dfaos()) {
    CAPTURE(p.string());
    const std::string text = slurp(p);
    const Dfao m = parse_dfao(text);
    CHECK(normalized(serialize_dfao(m)) == normalized(text));
    CHECK(parse_dfao(serialize_dfao(m)) == m);
  }
  for (const auto& name : builtin_dfao_names())
    CHECK(load_dfao(kData / (name + ".dfao")) == builtin_dfao(name));
}

TEST_CASE("parse errors name the line, state and digit") {
  std::string missing = kThueMorse;
  missing.erase(missing.rfind("  on 1 -> 0\n"));
  const std::string e = error_of(missing);
  CHECK(e.find("state 1") != std::string::npos);
  CHECK(e.find("digit 1") != std::string::npos);
  CHECK(e.find("line 8") != std::string::npos);

  CHECK(error_of("seqdec-dfao v2\n").find("line 1") != std::string::npos);
  CHECK(error_of(std::string(kThueMorse) + "bogus\n").find("line 11") != std::string::npos);
  std::string bad_letter = kThueMorse;
  bad_letter.replace(bad_letter.find("out=1"), 5, "out=7");
  CHECK(error_of(bad_letter).find("unknown letter") != std::string::npos);

  // 0-edge from state 0 into a state with another output.
  std::string unstable = kThueMorse;
  unstable.replace(unstable.find("on 0 -> 0"), 9, "on 0 -> 1");
  try {
    parse_dfao(unstable);
    FAIL("accepted a machine that is not zero-stable");
  } catch (const InputError& err) {
    CHECK(std::string(err.what()).find("state 0") != std::string::npos);
  }
  CHECK_THROWS_AS(load_dfao(kData / "no-such-file.dfao"), InputError);
}

TEST_CASE("permutation files") {
  const auto psi = parse_psi(slurp(kData / "binary-cf-order.psi"), {"0", "1"});
  CHECK(psi.ranks.size() == 2);
  const auto alt = cf_alternating(2, 2);
  for (std::uint64_t n = 0; n < 64; ++n)
    CHECK(psi.ranks[eval(psi.selector, n)] == alt.ranks[eval(alt.selector, n)]);
  CHECK_THROWS_AS(parse_psi(slurp(kData / "binary-cf-order.psi"), {"0", "1", "2"}), InputError);
}

TEST_CASE("verdict JSON") {
  Verdict v{true, "contains", Witness{{1, BigInt(1) << 70}}, {{"nfa_states", 9}}};
  const auto j = nlohmann::json::parse(verdict_json(v));
  CHECK(j["decision"] == "contains");
  CHECK(j["witness"][0] == 1);
  CHECK(j["witness"][1] == "1180591620717411303424");
  CHECK(j["stats"]["nfa_states"] == 9);
  const auto none = nlohmann::json::parse(verdict_json(Verdict{false, "avoids", std::nullopt, {}}));
  CHECK(none.contains("witness"));
  CHECK(none["witness"].is_null());
  CHECK(none["stats"].is_object());
}

TEST_CASE("command line") {
  const std::string tm = (kData / "thue-morse.dfao").string();
  const auto overlap = cli({"decide", "overlap", tm, "--json"});
  CHECK(overlap.code == 0);
  const auto j = nlohmann::json::parse(overlap.out);
  CHECK(j["decision"] == "avoids");
  CHECK(j["stats"].contains("dfa_states"));
  CHECK(cli({"eval", tm, "5"}).out == "0\n");
  CHECK(cli({"prefix", tm, "16"}).out == "0110100110010110\n");
  const auto periodic = cli({"decide", "periodic", (kData / "period2.dfao").string()});
  CHECK(periodic.out.rfind("ultimately-periodic\nwitness (2,0)\n", 0) == 0);
  CHECK(cli({"decide", "power", tm, "--num", "2", "--den", "2"}).code == 2);
  CHECK(cli({"info", (kData / "missing.dfao").string()}).code == 2);
  CHECK(cli({"decide", "overlap", tm, "--max-states", "5"}).code == 3);
  CHECK(cli({"no-such-command"}).code == 2);
}

TEST_CASE("command line writes automata") {
  const fs::path out = fs::temp_directory_path() / "autseq-orbit-test.dfao";
  const auto r = cli({"orbit", (kData / "thue-morse.dfao").string(), "--extreme", "least", "-o", out.string()});
  CHECK(r.code == 0);
  const Dfao b = load_dfao(out);
  CHECK(to_string(prefix(b, 15), b.alphabet()) == "001011001101001");
  fs::remove(out);
}

TEST_CASE("command line matches the library on shipped files") {
  for (const auto& p : shipped_dfaos()) {
    CAPTURE(p.string());
    const Dfao m = load_dfao(p);
    CHECK(cli({"decide", "periodic", p.string(), "--json"}).out ==
          verdict_json(decide_ultimate_periodicity(m)) + "\n");
    if (m.num_states() <= 5)
      CHECK(cli({"decide", "overlap", p.string(), "--json"}).out == verdict_json(decide_overlap(m)) + "\n");
  }
}

}
