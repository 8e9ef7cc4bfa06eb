#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pseudoword/bisequence.hpp"
#include "pseudoword/records.hpp"
#include "pseudoword/verify.hpp"

using namespace pseudoword;

namespace {

std::string key_of(const DirectiveBiSequence& bi) {
  return format_letter_track(bi.delta(), bi.alphabet()) + "|" +
         format_antimorphism_track(bi.theta());
}

}  // namespace

TEST_CASE("all_involutions enumerates exactly the involutive antimorphisms") {
  {
    std::vector<Antimorphism> inv = all_involutions(Alphabet(2));
    REQUIRE(inv.size() == 2);
    CHECK(inv[0].name() == "R");
    CHECK(inv[0].fixes_letters());
    CHECK(inv[1].name() == "E");
  }
  {
    std::vector<Antimorphism> inv = all_involutions(Alphabet(3));
    REQUIRE(inv.size() == 4);
    CHECK(inv[0].name() == "R");
    std::set<std::string> names;
    for (const Antimorphism& t : inv) {
      names.insert(t.name());
      CHECK(t.apply(t.apply(Word{0, 1, 2})) == Word({0, 1, 2}));
    }
    CHECK(names == std::set<std::string>{"R", "E0", "E1", "E2"});
  }
  {
    // d = 4: identity + 6 single swaps + 3 double swaps.
    std::vector<Antimorphism> inv = all_involutions(Alphabet(4));
    CHECK(inv.size() == 10);
    CHECK(inv[0].name() == "R");
  }
}

TEST_CASE("enumerate_family counts match the closed formulas") {
  Alphabet a2(2);
  // Preambles of length <= 1 over 2 letters: 3; cycles of length 1: 2.
  // Same shape for the 2 antimorphisms: (3*2) * (3*2) = 36.
  CHECK(enumerate_family(a2, {1, 1}, {1, 1}).size() == 36);
  // Preambles <= 1: 3, cycles <= 2: 6 -> 18 per track, 324 total.
  CHECK(enumerate_family(a2, {1, 2}, {1, 2}).size() == 324);
  // Preambles <= 2: 7, cycles <= 3: 14 -> 98 per track, 9604 total.
  CHECK(enumerate_family(a2, {2, 3}, {2, 3}).size() == 9604);
  // Ternary: (4*3) * (5*4) with preamble <= 1, cycle 1 over 4 involutions.
  CHECK(enumerate_family(Alphabet(3), {1, 1}, {1, 1}).size() == 240);
  CHECK_THROWS_AS(enumerate_family(a2, {1, 0}, {1, 1}), std::invalid_argument);
}

TEST_CASE("dedupe_family keeps one representative per generated bi-sequence") {
  Alphabet a2(2);
  std::vector<DirectiveBiSequence> family = enumerate_family(a2, {1, 1}, {1, 1});
  std::vector<DirectiveBiSequence> unique = dedupe_family(family);
  CHECK(unique.size() == 16);
  // Every survivor is pairwise inequivalent.
  for (std::size_t i = 0; i < unique.size(); ++i) {
    for (std::size_t j = i + 1; j < unique.size(); ++j) {
      CHECK(!unique[i].same_bisequence(unique[j]));
    }
  }
  // Every dropped member is equivalent to some survivor.
  for (const DirectiveBiSequence& bi : family) {
    bool represented = false;
    for (const DirectiveBiSequence& u : unique) {
      if (u.same_bisequence(bi)) {
        represented = true;
        break;
      }
    }
    CHECK(represented);
  }
  // First occurrences survive with their original presentation.
  CHECK(key_of(unique[0]) == key_of(family[0]));
}

TEST_CASE("agreement sweeps are deterministic across thread counts") {
  Alphabet a2(2);
  FamilyBounds bounds{1, 1};
  AgreementReport one = agreement_sweep(a2, bounds, bounds, 1000, 100, 1);
  AgreementReport two = agreement_sweep(a2, bounds, bounds, 1000, 100, 2);
  CHECK(render_agreement_record(a2, one) == render_agreement_record(a2, two));
  CHECK(one.instances == 36);
  CHECK(one.disagreementCount == 0);
  CHECK(one.periodic + one.aperiodic + one.deciderUnknown == one.instances);
}

TEST_CASE("family-list sweep overloads agree with the bounds overloads") {
  Alphabet a2(2);
  FamilyBounds bounds{1, 1};
  std::vector<DirectiveBiSequence> family = enumerate_family(a2, bounds, bounds);
  {
    AgreementReport byBounds = agreement_sweep(a2, bounds, bounds, 1000, 100);
    AgreementReport byList = agreement_sweep(a2, family, 1000, 100);
    CHECK(render_agreement_record(a2, byBounds) == render_agreement_record(a2, byList));
  }
  {
    ConjectureSweepReport byBounds = conjecture_sweep(a2, bounds, bounds, 1000, 100);
    ConjectureSweepReport byList = conjecture_sweep(a2, family, 1000, 100);
    CHECK(render_conjecture_sweep_record(a2, byBounds) ==
          render_conjecture_sweep_record(a2, byList));
  }
}

TEST_CASE("conjecture sweep finds no mismatch on the small binary family") {
  Alphabet a2(2);
  FamilyBounds bounds{1, 1};
  ConjectureSweepReport report = conjecture_sweep(a2, bounds, bounds, 1000, 100);
  CHECK(report.instances == 36);
  CHECK(report.mismatchCount == 0);
  CHECK(report.empiricalPeriodic + report.empiricalAperiodic + report.empiricalUnknown ==
        report.instances);
}

TEST_CASE("conjecture sweep surfaces the open ternary mismatch family") {
  // Cycle pairs of distinct exchanges generate periodic words missed by the
  // conjectured conditions; the sweep must report them as mismatches.
  Alphabet a3(3);
  AntimorphismRegistry reg = builtin_registry(a3);
  std::vector<DirectiveBiSequence> family = {
      DirectiveBiSequence(a3, parse_letter_track("(01)", a3),
                          parse_antimorphism_track("(E0 E1)", reg)),
      DirectiveBiSequence(a3, parse_letter_track("(1)", a3),
                          parse_antimorphism_track("(E1)", reg)),
  };
  ConjectureSweepReport report = conjecture_sweep(a3, family, 2000, 200);
  CHECK(report.instances == 2);
  CHECK(report.mismatchCount == 1);
  REQUIRE(report.mismatches.size() == 1);
  CHECK(report.mismatches[0].delta == "(01)");
  CHECK(report.mismatches[0].theta == "(E0 E1)");
  CHECK(report.mismatches[0].detail.find("Periodic") != std::string::npos);
}
