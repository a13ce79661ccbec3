// Test-only oracles and generators, independent of the library's
// implementation paths.
#ifndef KAL_TESTS_SUPPORT_HPP_
#define KAL_TESTS_SUPPORT_HPP_

#include <random>
#include <vector>

#include "kal/dfa.hpp"
#include "kal/monoid.hpp"
#include "kal/schutz.hpp"

namespace kal::testsupport {

// Membership in KaL by trying every split at the marker.
inline bool split_oracle(CompleteDfa const& dfaK, CompleteDfa const& dfaL,
                         char marker, Word const& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == marker && accepts(dfaK, w.substr(0, i)) &&
        accepts(dfaL, w.substr(i + 1))) {
      return true;
    }
  }
  return false;
}

// Definitional scan for mu: pairs (phi(u'), psi(u'')) over every
// factorization u = u' marker u''.
inline SchutzElement mu_scan(RecognizedLanguage const& langK,
                             RecognizedLanguage const& langL, char marker,
                             Word const& u) {
  SchutzElement e;
  e.p11 = langK.hom.of_word(u);
  e.p22 = langL.hom.of_word(u);
  std::uint32_t const n = langL.hom.target->size;
  e.p12 = Bitset(langK.hom.target->size * n);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == marker) {
      e.p12.set(langK.hom.of_word(u.substr(0, i)) * n +
                langL.hom.of_word(u.substr(i + 1)));
    }
  }
  return e;
}

template <typename F>
void all_words_upto(Alphabet const& alphabet, std::size_t max_len, F&& f) {
  std::vector<Word> cur{Word{}};
  f(Word{});
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (auto const& w : cur) {
      for (char c : alphabet.letters()) {
        Word w2 = w + c;
        f(w2);
        next.push_back(std::move(w2));
      }
    }
    cur = std::move(next);
  }
}

// Language equality on all words up to max_len, by brute enumeration.
inline bool same_language_upto(CompleteDfa const& d1, CompleteDfa const& d2,
                               std::size_t max_len) {
  bool same = true;
  all_words_upto(d1.alphabet, max_len, [&](Word const& w) {
    if (accepts(d1, w) != accepts(d2, w)) {
      same = false;
    }
  });
  return same;
}

inline CompleteDfa random_dfa(std::mt19937& rng, std::uint32_t max_states,
                              Alphabet const& alphabet) {
  std::uniform_int_distribution<std::uint32_t> nd(1, max_states);
  std::uint32_t n = nd(rng);
  CompleteDfa d;
  d.alphabet = alphabet;
  d.state_count = n;
  d.initial = 0;
  std::uniform_int_distribution<std::uint32_t> sd(0, n - 1);
  d.delta.resize(static_cast<std::size_t>(n) * alphabet.size());
  for (auto& t : d.delta) {
    t = sd(rng);
  }
  std::bernoulli_distribution fd(0.5);
  for (std::uint32_t s = 0; s < n; ++s) {
    if (fd(rng)) {
      d.finals.insert(s);
    }
  }
  return d;
}

inline Word random_word(std::mt19937& rng, Alphabet const& alphabet,
                        std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> ld(0, max_len);
  std::uniform_int_distribution<std::size_t> cd(0, alphabet.size() - 1);
  Word w;
  std::size_t len = ld(rng);
  for (std::size_t i = 0; i < len; ++i) {
    w += alphabet.letter(cd(rng));
  }
  return w;
}

}  // namespace kal::testsupport

#endif  // KAL_TESTS_SUPPORT_HPP_
