#ifndef KAL_SCHUTZ_HPP_
#define KAL_SCHUTZ_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "kal/bitset.hpp"
#include "kal/monoid.hpp"

namespace kal {

inline constexpr std::size_t kDefaultCap = std::size_t{1} << 20;

// Element of M ◊ N: upper-triangular 2x2 matrix with p11 in M, p22 in N and
// p12 a subset of M x N, stored as a bitset with pair (i, j) at bit i*n + j.
struct SchutzElement {
  std::uint32_t p11 = 0;
  std::uint32_t p22 = 0;
  Bitset p12;

  bool operator==(SchutzElement const&) const = default;
  std::strong_ordering operator<=>(SchutzElement const& other) const {
    if (auto c = p11 <=> other.p11; c != 0) return c;
    if (auto c = p22 <=> other.p22; c != 0) return c;
    return p12 <=> other.p12;
  }

  std::size_t hash() const {
    return hash_combine(hash_combine(p11, p22), p12.hash());
  }
};

struct SchutzElementHash {
  std::size_t operator()(SchutzElement const& e) const { return e.hash(); }
};

// Multiplication context for M ◊ N.
struct SchutzContext {
  MonoidPtr left;   // M
  MonoidPtr right;  // N

  std::uint32_t m() const { return left->size; }
  std::uint32_t n() const { return right->size; }
  std::uint32_t mn() const { return m() * n(); }

  SchutzElement identity() const;
  SchutzElement mul(SchutzElement const& p, SchutzElement const& q) const;
};

inline SchutzElement schutz_mul(SchutzContext const& ctx,
                                SchutzElement const& p,
                                SchutzElement const& q) {
  return ctx.mul(p, q);
}

// The full product as a table, elements numbered lexicographically on
// (p11, p22, p12 bits). Size is exactly m * n * 2^{mn}; throws SizeLimitError
// when that exceeds cap.
MonoidPtr schutz_enumerate(SchutzContext const& ctx,
                           std::size_t cap = kDefaultCap);

// Image of a single letter under mu_marker.
SchutzElement mu_letter(RecognizedLanguage const& langK,
                        RecognizedLanguage const& langL, char marker,
                        char letter);

// mu_marker(u), computed as the fold of letter images.
SchutzElement mu_of_word(RecognizedLanguage const& langK,
                         RecognizedLanguage const& langL, char marker,
                         Word const& u);

struct MuImage {
  MonoidPtr monoid;  // null when built without a table
  MonoidHom hom;
  std::vector<std::uint32_t> accept;  // elements whose p12 meets S x T
  std::vector<SchutzElement> elements;
  SchutzContext ctx;

  std::size_t size() const { return elements.size(); }
};

// Submonoid of M ◊ N generated by the letter images, canonical shortlex
// numbering, with the accept set for KaL. with_table = false skips the
// multiplication table (elements and accept only).
MuImage mu_image(RecognizedLanguage const& langK,
                 RecognizedLanguage const& langL, char marker,
                 std::size_t cap = kDefaultCap, bool with_table = true);

// Membership of u in KaL: p12 of mu_marker(u) meets S x T.
bool mu_recognizes(RecognizedLanguage const& langK,
                   RecognizedLanguage const& langL, char marker, Word const& u);

// {"p11": i, "p22": j, "p12": [[x, y], ...]} with pairs sorted
// lexicographically.
nlohmann::json schutz_element_to_json(SchutzElement const& e, std::uint32_t n);

}  // namespace kal

#endif  // KAL_SCHUTZ_HPP_
