#include "kal/bpol1.hpp"

#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "kal/constructions.hpp"
#include "kal/verify.hpp"

using namespace kal;

TEST_CASE("bpol1_bound values") {
  CHECK(bpol1_bound(4, 2) == BigInt("17179869184"));  // 4 * 2^32
  CHECK(bpol1_bound(1, 1) == 2);
  CHECK(bpol1_bound(2, 1) == 32);
}

TEST_CASE("xi over the trivial variety and one letter") {
  auto trivial = std::make_shared<FiniteMonoid>();
  Alphabet alph("a");
  MonoidHom hom{trivial, alph, {0}};
  auto xi = xi_image(hom);
  // Only "no marker seen" vs "marker seen": the language A* a A*.
  CHECK(xi.size() == 2);
}

TEST_CASE("xi over SL and two letters") {
  auto hom = sl_free_monoid(Alphabet("ab"));
  auto xi = xi_image(hom);
  CHECK(xi.size() <= 100);
  CHECK(xi.size() <= 900);
  CHECK(BigInt(xi.size()) <= bpol1_bound(hom.target->size, 2));
  CHECK_NOTHROW(xi.monoid->validate());

  // All components of every element share the same diagonal.
  for (auto const& tuple : xi.elements) {
    for (auto const& comp : tuple) {
      CHECK(comp.p11 == tuple[0].p11);
      CHECK(comp.p22 == tuple[0].p11);
    }
  }
}

TEST_CASE("xi image stays within the per-letter mu image product") {
  auto hom = sl_free_monoid(Alphabet("ab"));
  RecognizedLanguage lang{hom, {hom.target->size - 1}};
  auto mu_a = mu_image(lang, lang, 'a', kDefaultCap, false);
  auto mu_b = mu_image(lang, lang, 'b', kDefaultCap, false);
  auto xi = xi_image(hom);
  CHECK(xi.size() <= mu_a.size() * mu_b.size());
}

TEST_CASE("verify_paper on the bundled expected values") {
  auto expected = load_expected();
  auto report = verify_paper(expected);
  // Criterion 1 is honestly red: the published witness pair is not tight for
  // ell = 2 (see the tightness test in test_constructions.cpp). Everything
  // else must pass.
  for (int criterion = 2; criterion <= 9; ++criterion) {
    CHECK(report.criterion_pass(criterion));
  }
  CHECK_FALSE(report.criterion_pass(1));
  for (auto const& c : report.checks) {
    if (!c.pass) {
      CHECK(c.criterion == 1);
      CHECK(c.name.find("l2") != std::string::npos);
    }
  }
}

TEST_CASE("verify_paper fails on a perturbed expected value") {
  auto expected = load_expected();
  expected["example1"]["mu_image_size"] = 23;
  auto report = verify_paper(expected);
  CHECK_FALSE(report.overall());
  CHECK_FALSE(report.criterion_pass(6));
  CHECK(report.criterion_pass(7));
}

TEST_CASE("verify report is deterministic and serializes") {
  auto expected = load_expected();
  auto r1 = verify_paper(expected);
  auto r2 = verify_paper(expected);
  std::ostringstream s1, s2;
  print_report(s1, r1);
  print_report(s2, r2);
  CHECK(s1.str() == s2.str());

  auto j = report_to_json(r1);
  CHECK(j["overall"] == false);  // the ell = 2 tightness rows stay red
  CHECK(j["checks"].size() == r1.checks.size());
}
