#ifndef KAL_MONOID_HPP_
#define KAL_MONOID_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "kal/alphabet.hpp"
#include "kal/dfa.hpp"

namespace kal {

// A finite monoid given by its multiplication table, row-major.
struct FiniteMonoid {
  std::uint32_t size = 1;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> table;  // table[a * size + b] = a * b

  FiniteMonoid() : table{0} {}
  FiniteMonoid(std::uint32_t size, std::uint32_t identity,
               std::vector<std::uint32_t> table)
      : size(size), identity(identity), table(std::move(table)) {}

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table[a * size + b];
  }

  // Identity laws always; associativity exhaustively for size <= 300 and by
  // deterministic sampling above. Throws InputError on violation.
  void validate() const;
};

using MonoidPtr = std::shared_ptr<FiniteMonoid const>;

// A homomorphism A* -> target, given by letter images and extended to words
// by folding the table from the identity.
struct MonoidHom {
  MonoidPtr target;
  Alphabet alphabet;
  std::vector<std::uint32_t> letter_image;  // aligned with alphabet order

  std::uint32_t of_letter(char c) const {
    return letter_image[alphabet.index(c)];
  }
  std::uint32_t of_word(Word const& w) const;
};

// A language given as hom^{-1}(accept).
struct RecognizedLanguage {
  MonoidHom hom;
  std::vector<std::uint32_t> accept;  // sorted element indices
};

struct GreenSummary {
  bool j_trivial = false;
  bool is_group = false;
  std::uint32_t rho = 1;     // elements in a longest strict <=_R chain
  std::uint32_t lambda = 1;  // elements in a longest strict <=_L chain
};

// The monoid of state transformations induced by words, with the letter hom
// and accept = transformations sending the initial state into the finals.
// Elements are numbered by BFS over generator words in shortlex order,
// identity first.
RecognizedLanguage transition_monoid(CompleteDfa const& dfa);

// Number of distinct word-induced transformations, without building a table.
std::size_t transition_monoid_size(CompleteDfa const& dfa);

// Transition monoid of the minimal DFA; isomorphic to the syntactic monoid.
RecognizedLanguage syntactic_monoid(CompleteDfa const& dfa);

struct Quotient {
  MonoidPtr monoid;
  std::vector<std::uint32_t> projection;  // element -> class index
};

// Quotient by the syntactic congruence relative to accept: p ~ q iff
// x p y in accept <=> x q y in accept for all x, y. Computed by Moore
// refinement of {accept, rest} under the left and right translation actions
// of the generators (all elements when generators is empty).
Quotient syntactic_quotient(FiniteMonoid const& m,
                            std::vector<std::uint32_t> const& accept,
                            std::vector<std::uint32_t> const& generators = {});

GreenSummary green_summary(FiniteMonoid const& m);

// True iff h1 and h2 induce the same partition of A* (equal kernels).
bool kernel_equal(MonoidHom const& h1, MonoidHom const& h2);

// JSON format: {"size": N, "identity": i, "table": [[...], ...],
// "letters": {"a": j, ...}, "accept": [...]} with the last two optional.
nlohmann::json monoid_to_json(FiniteMonoid const& m,
                              MonoidHom const* hom = nullptr,
                              std::vector<std::uint32_t> const* accept = nullptr);

struct ParsedMonoid {
  MonoidPtr monoid;
  bool has_hom = false;
  MonoidHom hom;
  std::vector<std::uint32_t> accept;
};

ParsedMonoid monoid_from_json(nlohmann::json const& j);
ParsedMonoid monoid_from_json_file(std::string const& path);

}  // namespace kal

#endif  // KAL_MONOID_HPP_
