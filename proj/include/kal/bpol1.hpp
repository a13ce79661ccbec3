#ifndef KAL_BPOL1_HPP_
#define KAL_BPOL1_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kal/monoid.hpp"
#include "kal/schutz.hpp"

namespace kal {

using BigInt = boost::multiprecision::cpp_int;

// n * 2^{d * n^2}, exactly.
BigInt bpol1_bound(std::uint64_t n, std::uint64_t d);

// Image of the map u -> (mu_{a_1}(u), ..., mu_{a_d}(u)) into (F ◊ F)^d.
struct XiImage {
  MonoidPtr monoid;
  MonoidHom hom;
  std::vector<std::vector<SchutzElement>> elements;  // one tuple per element
  SchutzContext ctx;  // F ◊ F, shared by all components

  std::size_t size() const { return elements.size(); }
};

// Closure of the letter images of the tuple map; works directly on d-tuples,
// never materializing (F ◊ F)^d. letter_hom gives F and the alphabet.
XiImage xi_image(MonoidHom const& letter_hom, std::size_t cap = kDefaultCap);

}  // namespace kal

#endif  // KAL_BPOL1_HPP_
