#ifndef KAL_CONSTRUCTIONS_HPP_
#define KAL_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <string>

#include "kal/dfa.hpp"
#include "kal/monoid.hpp"

namespace kal {

// Witness family over {a,b,c}: a resets to p0, b increments mod k, c loops.
// Initial p0, final p_{k-1}. Minimal for every k >= 2.
CompleteDfa prop2_K(std::uint32_t k);

// Witness family over {a,b,c}: a increments mod ell, b loops, c sends to q1.
// Initial q0, final q_{ell-1}. Minimal for every ell >= 2.
CompleteDfa prop2_L(std::uint32_t ell);

// Words with |u|_x congruent to 0 mod m; syntactic monoid Z_m.
CompleteDfa mod_count_dfa(char x, std::uint32_t m, Alphabet const& alphabet);

// B*: one accepting state when B = A, otherwise accepting loop plus sink.
CompleteDfa star_dfa(std::string const& b_letters, Alphabet const& alphabet);

// Words whose content (set of letters) is exactly B; materializes all 2^|B|
// subset states plus a sink, un-minimized.
CompleteDfa content_dfa(std::string const& b_letters, Alphabet const& alphabet);

// The free semilattice monoid (2^A, union) with letter hom b -> {b}.
// Element index = subset bitmask over alphabet positions; identity is the
// empty set.
MonoidHom sl_free_monoid(Alphabet const& alphabet);

}  // namespace kal

#endif  // KAL_CONSTRUCTIONS_HPP_
