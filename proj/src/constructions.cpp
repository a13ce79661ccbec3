#include "kal/constructions.hpp"

#include <memory>

#include "kal/errors.hpp"

namespace kal {

namespace {

CompleteDfa make_dfa(Alphabet alphabet, std::uint32_t states,
                     std::uint32_t initial) {
  CompleteDfa d;
  d.alphabet = std::move(alphabet);
  d.state_count = states;
  d.initial = initial;
  d.delta.assign(static_cast<std::size_t>(states) * d.alphabet.size(), 0);
  return d;
}

void check_subset(std::string const& b, Alphabet const& a) {
  for (char c : b) {
    if (!a.contains(c)) {
      throw InputError(std::string("letter '") + c +
                       "' is not in the alphabet");
    }
  }
}

}  // namespace

CompleteDfa prop2_K(std::uint32_t k) {
  if (k < 2) {
    throw InputError("prop2_K requires k >= 2");
  }
  CompleteDfa d = make_dfa(Alphabet("abc"), k, 0);
  d.finals.insert(k - 1);
  for (std::uint32_t i = 0; i < k; ++i) {
    d.delta[i * 3 + 0] = 0;            // a resets
    d.delta[i * 3 + 1] = (i + 1) % k;  // b increments
    d.delta[i * 3 + 2] = i;            // c loops
  }
  return d;
}

CompleteDfa prop2_L(std::uint32_t ell) {
  if (ell < 2) {
    throw InputError("prop2_L requires ell >= 2");
  }
  CompleteDfa d = make_dfa(Alphabet("abc"), ell, 0);
  d.finals.insert(ell - 1);
  for (std::uint32_t j = 0; j < ell; ++j) {
    d.delta[j * 3 + 0] = (j + 1) % ell;  // a increments
    d.delta[j * 3 + 1] = j;              // b loops
    d.delta[j * 3 + 2] = 1;              // c sends to q1
  }
  return d;
}

CompleteDfa mod_count_dfa(char x, std::uint32_t m, Alphabet const& alphabet) {
  if (m < 1) {
    throw InputError("mod_count_dfa requires m >= 1");
  }
  std::size_t const xi = alphabet.index(x);
  CompleteDfa d = make_dfa(alphabet, m, 0);
  d.finals.insert(0);
  for (std::uint32_t s = 0; s < m; ++s) {
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      d.delta[s * alphabet.size() + a] = (a == xi) ? (s + 1) % m : s;
    }
  }
  return d;
}

CompleteDfa star_dfa(std::string const& b_letters, Alphabet const& alphabet) {
  check_subset(b_letters, alphabet);
  if (b_letters.size() == alphabet.size()) {
    CompleteDfa d = make_dfa(alphabet, 1, 0);
    d.finals.insert(0);
    return d;
  }
  CompleteDfa d = make_dfa(alphabet, 2, 0);
  d.finals.insert(0);
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    bool in_b = b_letters.find(alphabet.letter(a)) != std::string::npos;
    d.delta[0 * alphabet.size() + a] = in_b ? 0 : 1;
    d.delta[1 * alphabet.size() + a] = 1;  // sink
  }
  return d;
}

CompleteDfa content_dfa(std::string const& b_letters, Alphabet const& alphabet) {
  check_subset(b_letters, alphabet);
  std::uint32_t const nb = static_cast<std::uint32_t>(b_letters.size());
  std::uint32_t const subsets = std::uint32_t{1} << nb;
  std::uint32_t const sink = subsets;

  // States 0..2^|B|-1 are the subsets of B collected so far, plus a sink.
  CompleteDfa d = make_dfa(alphabet, subsets + 1, 0);
  d.finals.insert(subsets - 1);  // content exactly B
  for (std::uint32_t s = 0; s <= subsets; ++s) {
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      std::uint32_t target;
      if (s == sink) {
        target = sink;
      } else {
        auto pos = b_letters.find(alphabet.letter(a));
        target = (pos == std::string::npos)
                     ? sink
                     : s | (std::uint32_t{1} << pos);
      }
      d.delta[s * alphabet.size() + a] = target;
    }
  }
  return d;
}

MonoidHom sl_free_monoid(Alphabet const& alphabet) {
  std::uint32_t const n = static_cast<std::uint32_t>(alphabet.size());
  std::uint32_t const size = std::uint32_t{1} << n;
  auto m = std::make_shared<FiniteMonoid>();
  m->size = size;
  m->identity = 0;
  m->table.resize(static_cast<std::size_t>(size) * size);
  for (std::uint32_t i = 0; i < size; ++i) {
    for (std::uint32_t j = 0; j < size; ++j) {
      m->table[static_cast<std::size_t>(i) * size + j] = i | j;
    }
  }
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    images[i] = std::uint32_t{1} << i;
  }
  return MonoidHom{std::move(m), alphabet, std::move(images)};
}

}  // namespace kal
