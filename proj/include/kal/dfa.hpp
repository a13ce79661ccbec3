#ifndef KAL_DFA_HPP_
#define KAL_DFA_HPP_

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "kal/alphabet.hpp"

namespace kal {

// A total deterministic automaton. delta is stored row-major:
// delta[state * |alphabet| + letter_index].
struct CompleteDfa {
  Alphabet alphabet;
  std::uint32_t state_count = 0;
  std::uint32_t initial = 0;
  std::set<std::uint32_t> finals;
  std::vector<std::uint32_t> delta;

  std::uint32_t step(std::uint32_t state, std::size_t letter_index) const {
    return delta[state * alphabet.size() + letter_index];
  }

  // delta*(state, w); throws InputError on letters outside the alphabet.
  std::uint32_t run(std::uint32_t state, Word const& w) const;

  bool is_final(std::uint32_t state) const { return finals.count(state) != 0; }

  // Checks completeness and index ranges; throws InputError on violation.
  void validate() const;
};

bool accepts(CompleteDfa const& dfa, Word const& w);

// Minimal complete DFA of the same language. States are renumbered by
// breadth-first reachability from the initial state in alphabet order.
CompleteDfa minimize(CompleteDfa const& dfa);

// Language equality by pairwise reachability on the product; independent of
// minimize. Requires identical alphabets.
bool equivalent(CompleteDfa const& d1, CompleteDfa const& d2);

// Same automaton with the initial state moved to delta*(initial, u);
// recognizes the left derivative of the language by u.
CompleteDfa left_derivative(CompleteDfa const& dfa, Word const& u);

// Pair/subset construction recognizing the marked concatenation KaL for
// a = marker. States are reachable pairs (state of dfaK, subset of states of
// dfaL); at most k * 2^l of them.
CompleteDfa kal_construct(CompleteDfa const& dfaK, CompleteDfa const& dfaL,
                          char marker);

// Line-oriented text format:
//   alphabet a b c
//   states 4
//   initial 0
//   finals 3 1
//   trans <state> <letter> <state>   (exactly one line per (state, letter))
// '#' starts a comment line. Duplicate or missing transitions, out-of-range
// indices and unknown letters are rejected.
CompleteDfa parse_dfa(std::istream& in);
CompleteDfa parse_dfa_file(std::string const& path);
void print_dfa(std::ostream& out, CompleteDfa const& dfa);

}  // namespace kal

#endif  // KAL_DFA_HPP_
