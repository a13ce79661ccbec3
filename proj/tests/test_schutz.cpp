#include "kal/schutz.hpp"

#include <random>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "kal/constructions.hpp"
#include "kal/errors.hpp"
#include "support.hpp"

using namespace kal;
namespace ts = kal::testsupport;

namespace {

MonoidPtr cyclic(std::uint32_t n) {
  auto m = std::make_shared<FiniteMonoid>();
  m->size = n;
  m->identity = 0;
  m->table.resize(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      m->table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    }
  }
  return m;
}

SchutzElement elem(SchutzContext const& ctx, std::uint32_t p11,
                   std::uint32_t p22,
                   std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs) {
  SchutzElement e;
  e.p11 = p11;
  e.p22 = p22;
  e.p12 = Bitset(ctx.mn());
  for (auto [x, y] : pairs) {
    e.p12.set(x * ctx.n() + y);
  }
  return e;
}

SchutzElement random_elem(SchutzContext const& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> md(0, ctx.m() - 1);
  std::uniform_int_distribution<std::uint32_t> nd(0, ctx.n() - 1);
  std::bernoulli_distribution bd(0.4);
  SchutzElement e;
  e.p11 = md(rng);
  e.p22 = nd(rng);
  e.p12 = Bitset(ctx.mn());
  for (std::uint32_t b = 0; b < ctx.mn(); ++b) {
    if (bd(rng)) {
      e.p12.set(b);
    }
  }
  return e;
}

}  // namespace

TEST_CASE("schutz_mul identity and a hand-checked product") {
  SchutzContext ctx{cyclic(2), cyclic(2)};
  auto e = ctx.identity();
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto p = random_elem(ctx, rng);
    CHECK(ctx.mul(p, e) == p);
    CHECK(ctx.mul(e, p) == p);
  }

  auto p = elem(ctx, 1, 0, {{0, 0}});
  auto q = elem(ctx, 1, 1, {{0, 1}});
  auto pq = elem(ctx, 0, 1, {{1, 1}, {0, 1}});
  CHECK(ctx.mul(p, q) == pq);
}

TEST_CASE("schutz_mul is associative on random triples") {
  SchutzContext ctx{cyclic(2), cyclic(2)};
  std::mt19937 rng(5);
  for (int i = 0; i < 1000; ++i) {
    auto p = random_elem(ctx, rng);
    auto q = random_elem(ctx, rng);
    auto r = random_elem(ctx, rng);
    CHECK(ctx.mul(ctx.mul(p, q), r) == ctx.mul(p, ctx.mul(q, r)));
  }
}

TEST_CASE("schutz_enumerate has size mn * 2^mn") {
  CHECK(schutz_enumerate(SchutzContext{cyclic(2), cyclic(2)})->size == 64);
  CHECK(schutz_enumerate(SchutzContext{cyclic(1), cyclic(1)})->size == 2);
  auto big = schutz_enumerate(SchutzContext{cyclic(4), cyclic(2)});
  CHECK(big->size == 2048);
  CHECK_NOTHROW(big->validate());
  CHECK_THROWS_AS(schutz_enumerate(SchutzContext{cyclic(2), cyclic(2)}, 10),
                  SizeLimitError);
}

TEST_CASE("mu_of_word on small words") {
  Alphabet alph("abc");
  auto langK = syntactic_monoid(mod_count_dfa('b', 2, alph));
  auto langL = syntactic_monoid(mod_count_dfa('c', 2, alph));
  SchutzContext ctx{langK.hom.target, langL.hom.target};

  CHECK(mu_of_word(langK, langL, 'a', "") == ctx.identity());

  auto a = mu_of_word(langK, langL, 'a', "a");
  CHECK(a.p11 == langK.hom.of_letter('a'));
  CHECK(a.p22 == langL.hom.of_letter('a'));
  CHECK(a.p12.count() == 1);
  CHECK(a.p12.test(langK.hom.target->identity * ctx.n() +
                   langL.hom.target->identity));
}

TEST_CASE("mu_of_word matches the listed factorization set") {
  Alphabet alph("abc");
  auto langB = syntactic_monoid(content_dfa("ab", alph));
  auto langC = syntactic_monoid(content_dfa("ac", alph));
  auto mu = mu_of_word(langB, langC, 'a', "aababacacaa");
  CHECK(mu.p12.count() == 7);
  CHECK(mu == ts::mu_scan(langB, langC, 'a', "aababacacaa"));
}

TEST_CASE("mu is a homomorphism: fold equals definitional scan") {
  std::mt19937 rng(9);
  Alphabet alph("abc");
  auto langK = syntactic_monoid(mod_count_dfa('b', 2, alph));
  auto langL = syntactic_monoid(mod_count_dfa('c', 3, alph));
  SchutzContext ctx{langK.hom.target, langL.hom.target};
  for (int i = 0; i < 1000; ++i) {
    Word u = ts::random_word(rng, alph, 8);
    Word v = ts::random_word(rng, alph, 8);
    auto mu_u = mu_of_word(langK, langL, 'a', u);
    auto mu_v = mu_of_word(langK, langL, 'a', v);
    CHECK(ctx.mul(mu_u, mu_v) == mu_of_word(langK, langL, 'a', u + v));
    CHECK(mu_u == ts::mu_scan(langK, langL, 'a', u));
  }
}

TEST_CASE("mu_image sizes reproduce the paper's configurations") {
  Alphabet alph3("abc");
  auto langK = syntactic_monoid(mod_count_dfa('b', 2, alph3));
  auto langL = syntactic_monoid(mod_count_dfa('c', 2, alph3));
  auto img = mu_image(langK, langL, 'a');
  CHECK(img.size() == 64);  // surjective onto Z2 ◊ Z2
  CHECK_NOTHROW(img.monoid->validate());

  Alphabet alph4("abcd");
  auto langB = syntactic_monoid(star_dfa("ab", alph4));
  auto langC = syntactic_monoid(star_dfa("ac", alph4));
  CHECK(mu_image(langB, langC, 'a').size() == 22);

  auto sl = sl_free_monoid(Alphabet("ab"));
  RecognizedLanguage slang{sl, {sl.target->size - 1}};
  CHECK(mu_image(slang, slang, 'a', kDefaultCap, false).size() == 30);
}

TEST_CASE("mu_image agrees with mu_of_word through the hom") {
  std::mt19937 rng(13);
  Alphabet alph("abc");
  auto langK = syntactic_monoid(mod_count_dfa('b', 2, alph));
  auto langL = syntactic_monoid(mod_count_dfa('c', 2, alph));
  auto img = mu_image(langK, langL, 'a');
  for (int i = 0; i < 200; ++i) {
    Word u = ts::random_word(rng, alph, 8);
    CHECK(img.elements[img.hom.of_word(u)] == mu_of_word(langK, langL, 'a', u));
  }
}

TEST_CASE("image size never exceeds the full product") {
  Alphabet alph("abc");
  auto langK = syntactic_monoid(mod_count_dfa('b', 2, alph));
  auto langL = syntactic_monoid(mod_count_dfa('c', 2, alph));
  auto img = mu_image(langK, langL, 'a');
  auto full = schutz_enumerate(img.ctx);
  CHECK(img.size() <= full->size);
  CHECK(img.size() == full->size);  // the surjective configuration
}

TEST_CASE("prop6 p12 bound for J-trivial pairs") {
  std::mt19937 rng(17);
  Alphabet alph("abcd");
  std::vector<std::string> subsets{"a", "ab", "ac", "abc", "bd"};
  std::uniform_int_distribution<std::size_t> pick(0, subsets.size() - 1);
  for (int i = 0; i < 8; ++i) {
    auto langB = syntactic_monoid(content_dfa(subsets[pick(rng)], alph));
    auto langC = syntactic_monoid(content_dfa(subsets[pick(rng)], alph));
    auto gB = green_summary(*langB.hom.target);
    auto gC = green_summary(*langC.hom.target);
    REQUIRE(gB.j_trivial);
    REQUIRE(gC.j_trivial);
    std::uint32_t bound = gB.rho + gC.lambda - 1;
    auto img = mu_image(langB, langC, 'a', kDefaultCap, false);
    for (auto const& e : img.elements) {
      CHECK(e.p12.count() <= bound);
    }
  }
}

TEST_CASE("prop4 syntactic bound on random small languages") {
  std::mt19937 rng(19);
  Alphabet alph("abc");
  int tested = 0;
  while (tested < 60) {
    auto dk = ts::random_dfa(rng, 2, alph);
    auto dl = ts::random_dfa(rng, 2, alph);
    std::size_t m = transition_monoid_size(minimize(dk));
    std::size_t n = transition_monoid_size(minimize(dl));
    if (m > 3 || n > 3) {
      continue;
    }
    ++tested;
    std::uint64_t mn = m * n;
    std::uint64_t bound = mn * ((std::uint64_t{1} << mn) - 1) + 1;
    auto kal = minimize(kal_construct(dk, dl, 'a'));
    CHECK(transition_monoid_size(kal) <= bound);
  }
}

TEST_CASE("mu_recognizes membership in KaL") {
  Alphabet alph("abc");
  auto dfaK = mod_count_dfa('b', 2, alph);
  auto dfaL = mod_count_dfa('c', 2, alph);
  auto langK = syntactic_monoid(dfaK);
  auto langL = syntactic_monoid(dfaL);

  CHECK_FALSE(mu_recognizes(langK, langL, 'a', ""));
  // empty word is in K and in L here, so "a" is in KaL
  CHECK(mu_recognizes(langK, langL, 'a', "a"));

  auto kal = kal_construct(dfaK, dfaL, 'a');
  ts::all_words_upto(alph, 6, [&](Word const& w) {
    CHECK(mu_recognizes(langK, langL, 'a', w) == accepts(kal, w));
  });
}

TEST_CASE("schutz element JSON") {
  SchutzContext ctx{cyclic(2), cyclic(3)};
  auto e = elem(ctx, 1, 2, {{1, 2}, {0, 1}});
  auto j = schutz_element_to_json(e, ctx.n());
  CHECK(j["p11"] == 1);
  CHECK(j["p22"] == 2);
  CHECK(j["p12"] == nlohmann::json::array({{0, 1}, {1, 2}}));
}
