#include "kal/constructions.hpp"

#include <algorithm>

#include "doctest.h"
#include "kal/errors.hpp"
#include "kal/monoid.hpp"
#include "support.hpp"

using namespace kal;
namespace ts = kal::testsupport;

TEST_CASE("prop2_K witness") {
  CHECK_THROWS_AS(prop2_K(1), InputError);
  CHECK(accepts(prop2_K(2), "b"));
  CHECK_FALSE(accepts(prop2_K(2), "ba"));  // a resets
  for (std::uint32_t k = 2; k <= 4; ++k) {
    CHECK(minimize(prop2_K(k)).state_count == k);
  }
}

TEST_CASE("prop2_L witness") {
  CHECK_THROWS_AS(prop2_L(0), InputError);
  CHECK(accepts(prop2_L(2), "a"));
  for (std::uint32_t ell = 2; ell <= 4; ++ell) {
    CHECK(minimize(prop2_L(ell)).state_count == ell);
  }

  // Restricted to {a,b}*, membership is |u|_a = ell-1 (mod ell).
  for (std::uint32_t ell : {2u, 3u}) {
    auto d = prop2_L(ell);
    ts::all_words_upto(Alphabet("ab"), 6, [&](Word const& w) {
      std::size_t na =
          static_cast<std::size_t>(std::count(w.begin(), w.end(), 'a'));
      CHECK(accepts(d, w) == (na % ell == ell - 1));
    });
  }
}

TEST_CASE("tightness of the pair construction for small k, ell") {
  for (std::uint32_t k = 2; k <= 4; ++k) {
    for (std::uint32_t ell = 2; ell <= 4; ++ell) {
      auto kal = kal_construct(prop2_K(k), prop2_L(ell), 'a');
      std::uint32_t bound = k << ell;
      CHECK(kal.state_count <= bound);
      if (ell >= 3) {
        CHECK(minimize(kal).state_count == bound);
      } else {
        // ell = 2 is degenerate: c sends the second automaton to q1, and the
        // a-cycle maps q1 back to q1 = q_{ell-1}, so once a split has been
        // seen the trailing-b count stops mattering after any later c. The
        // minimal DFA therefore has 2k + 2 states instead of k * 2^ell.
        CHECK(minimize(kal).state_count == 2 * k + 2);
      }
    }
  }
}

TEST_CASE("mod_count_dfa") {
  Alphabet alph("abc");
  CHECK_THROWS_AS(mod_count_dfa('z', 2, alph), InputError);

  auto always = mod_count_dfa('b', 1, alph);
  ts::all_words_upto(alph, 3, [&](Word const& w) { CHECK(accepts(always, w)); });

  CHECK(accepts(mod_count_dfa('c', 2, alph), "cac"));
  auto lang = syntactic_monoid(mod_count_dfa('b', 3, alph));
  CHECK(lang.hom.target->size == 3);
  CHECK(green_summary(*lang.hom.target).is_group);
}

TEST_CASE("star_dfa") {
  Alphabet alph("abcd");
  CHECK_THROWS_AS(star_dfa("xz", alph), InputError);

  auto full = star_dfa("abcd", alph);
  CHECK(full.state_count == 1);
  CHECK(accepts(full, "dcba"));

  auto bs = star_dfa("ab", alph);
  CHECK(accepts(bs, "abba"));
  CHECK_FALSE(accepts(bs, "abca"));
  auto lang = syntactic_monoid(bs);
  CHECK(lang.hom.target->size == 2);
  // phi(x) is the identity exactly for x in B
  for (char c : alph.letters()) {
    bool in_b = (c == 'a' || c == 'b');
    CHECK((lang.hom.of_letter(c) == lang.hom.target->identity) == in_b);
  }
  CHECK(green_summary(*lang.hom.target).j_trivial);
}

TEST_CASE("content_dfa") {
  Alphabet alph("abc");
  CHECK_THROWS_AS(content_dfa("az", alph), InputError);

  auto empty_content = content_dfa("", alph);
  CHECK(accepts(empty_content, ""));
  CHECK_FALSE(accepts(empty_content, "a"));

  auto d = content_dfa("ab", alph);
  CHECK(accepts(d, "ab"));
  CHECK(accepts(d, "bbba"));
  CHECK_FALSE(accepts(d, "a"));
  CHECK_FALSE(accepts(d, "abc"));

  auto lang = syntactic_monoid(d);
  CHECK(lang.hom.target->size == 5);
  auto g = green_summary(*lang.hom.target);
  CHECK(g.j_trivial);
  CHECK(g.rho == 4);
  CHECK(g.lambda == 4);
}

TEST_CASE("sl_free_monoid") {
  auto hom = sl_free_monoid(Alphabet("ab"));
  CHECK(hom.target->size == 4);
  CHECK(hom.target->identity == 0);
  CHECK(hom.of_word("") == 0);
  CHECK(hom.of_word("abba") == hom.of_word("ab"));
  CHECK(hom.of_word("a") != hom.of_word("b"));
  CHECK_NOTHROW(hom.target->validate());
  CHECK(green_summary(*hom.target).j_trivial);
}

TEST_CASE("constructors emit valid complete DFAs") {
  Alphabet alph("abc");
  CHECK_NOTHROW(prop2_K(5).validate());
  CHECK_NOTHROW(prop2_L(4).validate());
  CHECK_NOTHROW(mod_count_dfa('a', 3, alph).validate());
  CHECK_NOTHROW(star_dfa("ab", alph).validate());
  CHECK_NOTHROW(content_dfa("ab", alph).validate());
}
