#include "kal/bpol1.hpp"

#include <string>
#include <unordered_map>
#include <vector>

#include "kal/errors.hpp"

namespace kal {

BigInt bpol1_bound(std::uint64_t n, std::uint64_t d) {
  if (n < 1 || d < 1) {
    throw InputError("bpol1_bound requires n, d >= 1");
  }
  BigInt r = 1;
  r <<= static_cast<unsigned>(d * n * n);
  return r * n;
}

namespace {

using Tuple = std::vector<SchutzElement>;

struct TupleHash {
  std::size_t operator()(Tuple const& t) const {
    std::size_t h = t.size();
    for (auto const& e : t) {
      h = hash_combine(h, e.hash());
    }
    return h;
  }
};

}  // namespace

XiImage xi_image(MonoidHom const& letter_hom, std::size_t cap) {
  XiImage img;
  img.ctx = SchutzContext{letter_hom.target, letter_hom.target};
  Alphabet const& alph = letter_hom.alphabet;
  std::size_t const d = alph.size();
  std::uint32_t const id = letter_hom.target->identity;
  std::uint32_t const n = img.ctx.n();

  // Component i of letter b is mu_{a_i}(b): diagonal entries are the image
  // of b in F; the pair set is {(1,1)} exactly when b is the marker a_i.
  std::vector<Tuple> gens(d);
  for (std::size_t b = 0; b < d; ++b) {
    gens[b].resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      SchutzElement e;
      e.p11 = e.p22 = letter_hom.letter_image[b];
      e.p12 = Bitset(img.ctx.mn());
      if (i == b) {
        e.p12.set(id * n + id);
      }
      gens[b][i] = std::move(e);
    }
  }

  Tuple identity(d, img.ctx.identity());
  std::unordered_map<Tuple, std::uint32_t, TupleHash> index;
  auto intern = [&](Tuple t) {
    auto [it, inserted] =
        index.emplace(std::move(t), static_cast<std::uint32_t>(img.elements.size()));
    if (inserted) {
      img.elements.push_back(it->first);
    }
    return it->second;
  };

  intern(std::move(identity));
  std::vector<std::uint32_t> letter_image(d);
  for (std::size_t head = 0; head < img.elements.size(); ++head) {
    if (img.elements.size() > cap) {
      throw SizeLimitError(
          "xi image closure exceeds the materialization cap of " +
          std::to_string(cap) + " elements");
    }
    Tuple const cur = img.elements[head];
    for (std::size_t b = 0; b < d; ++b) {
      Tuple prod(d);
      for (std::size_t i = 0; i < d; ++i) {
        prod[i] = img.ctx.mul(cur[i], gens[b][i]);
      }
      std::uint32_t idx = intern(std::move(prod));
      if (head == 0) {
        letter_image[b] = idx;
      }
    }
  }

  std::uint32_t const k = static_cast<std::uint32_t>(img.elements.size());
  auto monoid = std::make_shared<FiniteMonoid>();
  monoid->size = k;
  monoid->identity = 0;
  monoid->table.resize(static_cast<std::size_t>(k) * k);
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      Tuple prod(d);
      for (std::size_t c = 0; c < d; ++c) {
        prod[c] = img.ctx.mul(img.elements[i][c], img.elements[j][c]);
      }
      monoid->table[static_cast<std::size_t>(i) * k + j] = index.at(prod);
    }
  }
  img.monoid = monoid;
  img.hom = MonoidHom{monoid, alph, std::move(letter_image)};
  return img;
}

}  // namespace kal
