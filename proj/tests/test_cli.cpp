#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "pseudoword/bisequence.hpp"
#include "pseudoword/closure.hpp"
#include "pseudoword/normalize.hpp"
#include "pseudoword/oracle.hpp"
#include "pseudoword/periodicity.hpp"
#include "pseudoword/records.hpp"
#include "pseudoword/verify.hpp"

#ifndef PSEUDOWORD_BIN
#error "PSEUDOWORD_BIN must point at the pseudoword executable"
#endif

namespace {

using namespace pseudoword;

struct RunResult {
  int exitCode = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(PSEUDOWORD_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    r.output.append(buffer, got);
  }
  int status = pclose(pipe);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

bool has_line(const std::string& text, const std::string& line) {
  for (const std::string& l : lines_of(text)) {
    if (l == line) return true;
  }
  return false;
}

DirectiveBiSequence make_bi(const std::string& alphabetText, const std::string& deltaText,
                            const std::string& thetaText) {
  Alphabet a = parse_alphabet(alphabetText);
  AntimorphismRegistry reg = builtin_registry(a);
  return DirectiveBiSequence(a, parse_letter_track(deltaText, a),
                             parse_antimorphism_track(thetaText, reg));
}

}  // namespace

// The CLI is a thin adapter: its structured output must be byte-identical to
// the record the library renders for the same computation.

TEST_CASE("generate record is byte-identical to the library rendering") {
  RunResult r = run_cli("generate -d \"(011)\" -t \"(EER)\" -n 4");
  REQUIRE(r.exitCode == 0);
  DirectiveBiSequence bi = make_bi("2", "(011)", "(EER)");
  CHECK(r.output == render_chain_record(generate_chain(bi, 4)));
}

TEST_CASE("generate --length record is byte-identical to the library rendering") {
  RunResult r = run_cli("generate -d \"(0)\" -t \"(E)\" -l 12");
  REQUIRE(r.exitCode == 0);
  DirectiveBiSequence bi = make_bi("2", "(0)", "(E)");
  CHECK(r.output == render_prefix_record(bi, word_prefix(bi, 12)));
  CHECK(has_line(r.output, "word: 010101010101"));
}

TEST_CASE("normalize record is byte-identical to the library rendering") {
  RunResult r = run_cli("normalize -d \"(011)\" -t \"(EER)\"");
  REQUIRE(r.exitCode == 0);
  DirectiveBiSequence bi = make_bi("2", "(011)", "(EER)");
  CHECK(r.output == render_normalization_record(bi, normalize_binary(bi)));
  CHECK(has_line(r.output, "resultDelta: 01(10)"));
  CHECK(has_line(r.output, "resultTheta: (RE)"));
  CHECK(has_line(r.output, "  P2@1: 0:E -> 0:R 1:E"));
  CHECK(has_line(r.output, "  P3@3: 1:E -> 1:R 0:E"));
  CHECK(has_line(r.output, "  F@5: 1:R 0:E 1:E -> 1:R 0:E 1:R 0:E"));
}

TEST_CASE("decide record is byte-identical to the library rendering") {
  RunResult r = run_cli("decide -d \"(011)\" -t \"(EER)\"");
  REQUIRE(r.exitCode == 0);
  DirectiveBiSequence bi = make_bi("2", "(011)", "(EER)");
  CHECK(r.output == render_decision_record(bi, decide(bi)));
  CHECK(has_line(r.output, "verdict: Periodic"));
  CHECK(has_line(r.output, "certificate: binary-bijection"));
  CHECK(has_line(r.output, "minimalPeriod: 0110"));
}

TEST_CASE("period is a synonym of decide") {
  RunResult viaPeriod = run_cli("period -a 3 -d \"(102)\" -t \"(E2 E0 E1)\"");
  RunResult viaDecide = run_cli("decide -a 3 -d \"(102)\" -t \"(E2 E0 E1)\"");
  REQUIRE(viaPeriod.exitCode == 0);
  CHECK(viaPeriod.output == viaDecide.output);
  CHECK(has_line(viaPeriod.output, "certificate: ternary-case-3"));
  CHECK(has_line(viaPeriod.output, "minimalPeriod: 100221"));
}

TEST_CASE("complexity record is byte-identical to the library rendering") {
  RunResult r = run_cli("complexity -d \"(01)\" -t \"(E)\" -l 500 --max-n 3");
  REQUIRE(r.exitCode == 0);
  DirectiveBiSequence bi = make_bi("2", "(01)", "(E)");
  Word w = word_prefix(bi, 500);
  CHECK(r.output == render_complexity_record(bi, w.size(), factor_profile(w, 3)));
  CHECK(has_line(r.output, "  1: 2"));
  CHECK(has_line(r.output, "  2: 4"));
  CHECK(has_line(r.output, "  3: 6"));
}

TEST_CASE("verify record is byte-identical to the library rendering") {
  RunResult r = run_cli("verify --max-preamble 1 --max-cycle 2");
  REQUIRE(r.exitCode == 0);
  Alphabet a2(2);
  FamilyBounds bounds{1, 2};
  CHECK(r.output == render_agreement_record(a2, agreement_sweep(a2, bounds, bounds, 2000, 200)));
  CHECK(has_line(r.output, "instances: 324"));
  CHECK(has_line(r.output, "disagreements: 0"));
}

TEST_CASE("explore single record is byte-identical and flags mismatches via exit code") {
  RunResult r = run_cli("explore -a 3 -d \"(01)\" -t \"(E0 E1)\"");
  CHECK(r.exitCode == 1);
  DirectiveBiSequence bi = make_bi("3", "(01)", "(E0 E1)");
  CHECK(r.output == render_conjecture_record(bi, check_conjecture(bi, 2000, 200)));
  CHECK(has_line(r.output, "conditionsHold: false"));
  CHECK(has_line(r.output, "empiricalVerdict: Periodic"));
  CHECK(has_line(r.output, "mismatch: true"));
}

TEST_CASE("explore sweep deduplicates equivalent presentations") {
  // Raw enumeration gives 36 presentations; canonical dedup leaves 16.
  RunResult r = run_cli("explore --max-preamble 1 --max-cycle 1 "
                        "--prefix-length 1000 --period-bound 100");
  CHECK(r.exitCode == 0);
  Alphabet a2(2);
  FamilyBounds bounds{1, 1};
  std::vector<DirectiveBiSequence> family = dedupe_family(enumerate_family(a2, bounds, bounds));
  CHECK(family.size() == 16);
  CHECK(r.output == render_conjecture_sweep_record(
                        a2, conjecture_sweep(a2, family, 1000, 100)));
  CHECK(has_line(r.output, "instances: 16"));
  CHECK(has_line(r.output, "mismatches: 0"));
}

TEST_CASE("generate accepts declared antimorphisms") {
  RunResult r = run_cli("generate -a 3 -d \"(0)\" -t \"(X)\" -n 3 -A \"X:0>1,1>0,2>2\"");
  CHECK(r.exitCode == 0);
  CHECK(has_line(r.output, "  3: 010101"));
}

TEST_CASE("normalize --ternary-step applies one rewrite") {
  RunResult r = run_cli("normalize -a 3 -d \"12(0)\" -t \"E1 R(R)\" --ternary-step 1");
  CHECK(r.exitCode == 0);
  CHECK(has_line(r.output, "resultDelta: 1202(0)"));
  CHECK(has_line(r.output, "resultTheta: E1 R E1(R)"));
  CHECK(has_line(r.output, "changed: true"));
}

TEST_CASE("normalize --ternary-normal-form rewrites a reversal+exchange tail") {
  RunResult r = run_cli("normalize -a 3 -d \"0(211)\" -t \"(R E0 E0)\" --ternary-normal-form");
  CHECK(r.exitCode == 0);
  CHECK(has_line(r.output, "resultDelta: 02(12)"));
  CHECK(has_line(r.output, "resultTheta: R E0(R E0)"));
}

TEST_CASE("normalize --check-depth appends an empirical verification") {
  RunResult r = run_cli("normalize -d \"(011)\" -t \"(EER)\" --check-depth 8");
  CHECK(r.exitCode == 0);
  CHECK(has_line(r.output, "normalizedCheck: pass"));
}

TEST_CASE("decide reports open cases as Unknown with evidence") {
  RunResult r = run_cli("decide -a 3 -d \"(01)\" -t \"(E0 E1)\"");
  CHECK(r.exitCode == 0);
  CHECK(has_line(r.output, "verdict: Unknown"));
  CHECK(has_line(r.output, "certificate: open-ternary-exchange-tail"));
  CHECK(r.output.find("evidence: empirical verdict: Periodic") != std::string::npos);
}

TEST_CASE("text output mode prints the documented summaries") {
  RunResult decide = run_cli("decide -d \"(011)\" -t \"(EER)\" -o text");
  CHECK(decide.exitCode == 0);
  CHECK(decide.output == "kind=Periodic period=0110\n");

  RunResult normalize = run_cli("normalize -d \"(011)\" -t \"(EER)\" -o text");
  CHECK(normalize.exitCode == 0);
  CHECK(normalize.output == "01(10) / (RE)\n");

  RunResult generate = run_cli("generate -a 3 -d \"0(211)\" -t \"(R E0 E0)\" -n 4 -o text");
  CHECK(generate.exitCode == 0);
  CHECK(generate.output == "w1: 0\nw2: 0210\nw3: 0210120210\nw4: 0210120210120\n");
}

TEST_CASE("parse errors exit with code 2 and name the position") {
  RunResult r = run_cli("decide -d \"0x(1)\" -t \"(R)\"");
  CHECK(r.exitCode == 2);
  CHECK(r.output.find("parse error") != std::string::npos);
  CHECK(r.output.find("position") != std::string::npos);
}

TEST_CASE("domain errors exit with code 2") {
  RunResult r = run_cli("decide -a 4 -d \"(0123)\" -t \"(R)\"");
  CHECK(r.exitCode == 2);
}

TEST_CASE("missing subcommand is a usage error") {
  RunResult r = run_cli("");
  CHECK(r.exitCode == 2);
}

TEST_CASE("--help succeeds") {
  RunResult r = run_cli("--help");
  CHECK(r.exitCode == 0);
  CHECK(r.output.find("generate") != std::string::npos);
  CHECK(r.output.find("normalize") != std::string::npos);
}
