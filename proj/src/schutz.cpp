#include "kal/schutz.hpp"

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kal/errors.hpp"

namespace kal {

SchutzElement SchutzContext::identity() const {
  return SchutzElement{left->identity, right->identity, Bitset(mn())};
}

SchutzElement SchutzContext::mul(SchutzElement const& p,
                                 SchutzElement const& q) const {
  std::uint32_t const ncols = n();
  SchutzElement r;
  r.p11 = left->mul(p.p11, q.p11);
  r.p22 = right->mul(p.p22, q.p22);
  r.p12 = Bitset(mn());
  q.p12.for_each([&](std::uint32_t bit) {
    std::uint32_t x = bit / ncols, y = bit % ncols;
    r.p12.set(left->mul(p.p11, x) * ncols + y);
  });
  p.p12.for_each([&](std::uint32_t bit) {
    std::uint32_t z = bit / ncols, t = bit % ncols;
    r.p12.set(z * ncols + right->mul(t, q.p22));
  });
  return r;
}

MonoidPtr schutz_enumerate(SchutzContext const& ctx, std::size_t cap) {
  std::uint32_t const m = ctx.m(), n = ctx.n(), mn = ctx.mn();
  if (mn >= 63 || (static_cast<std::size_t>(mn) << mn) > cap ||
      static_cast<std::size_t>(m) * n * (std::size_t{1} << mn) > cap) {
    throw SizeLimitError("Schutzenberger product of " + std::to_string(m) +
                         " x " + std::to_string(n) +
                         " elements exceeds the materialization cap of " +
                         std::to_string(cap) + " elements");
  }
  std::size_t const subsets = std::size_t{1} << mn;
  std::size_t const total = static_cast<std::size_t>(m) * n * subsets;

  // Element index is its rank in the lexicographic order on
  // (p11, p22, p12 bits), so products can be indexed directly.
  auto element_of = [&](std::size_t idx) {
    SchutzElement e;
    e.p12 = Bitset(mn);
    std::uint64_t bits = idx % subsets;
    for (std::uint32_t b = 0; b < mn; ++b) {
      if ((bits >> b) & 1) {
        e.p12.set(b);
      }
    }
    idx /= subsets;
    e.p22 = static_cast<std::uint32_t>(idx % n);
    e.p11 = static_cast<std::uint32_t>(idx / n);
    return e;
  };
  auto index_of = [&](SchutzElement const& e) {
    return (static_cast<std::size_t>(e.p11) * n + e.p22) * subsets +
           e.p12.to_u64();
  };

  auto monoid = std::make_shared<FiniteMonoid>();
  monoid->size = static_cast<std::uint32_t>(total);
  monoid->identity = static_cast<std::uint32_t>(index_of(ctx.identity()));
  monoid->table.resize(total * total);

  std::vector<SchutzElement> elems;
  elems.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    elems.push_back(element_of(i));
  }
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      monoid->table[i * total + j] =
          static_cast<std::uint32_t>(index_of(ctx.mul(elems[i], elems[j])));
    }
  }
  return monoid;
}

namespace {

SchutzContext context_of(RecognizedLanguage const& langK,
                         RecognizedLanguage const& langL) {
  return SchutzContext{langK.hom.target, langL.hom.target};
}

}  // namespace

SchutzElement mu_letter(RecognizedLanguage const& langK,
                        RecognizedLanguage const& langL, char marker,
                        char letter) {
  if (langK.hom.alphabet != langL.hom.alphabet) {
    throw InputError("mu: alphabets differ");
  }
  auto ctx = context_of(langK, langL);
  SchutzElement e;
  e.p11 = langK.hom.of_letter(letter);
  e.p22 = langL.hom.of_letter(letter);
  e.p12 = Bitset(ctx.mn());
  if (letter == marker) {
    // The unique factorization letter = 1 . marker . 1.
    e.p12.set(langK.hom.target->identity * ctx.n() +
              langL.hom.target->identity);
  }
  return e;
}

SchutzElement mu_of_word(RecognizedLanguage const& langK,
                         RecognizedLanguage const& langL, char marker,
                         Word const& u) {
  langK.hom.alphabet.index(marker);
  auto ctx = context_of(langK, langL);
  SchutzElement e = ctx.identity();
  for (char c : u) {
    e = ctx.mul(e, mu_letter(langK, langL, marker, c));
  }
  return e;
}

namespace {

Bitset accept_mask(RecognizedLanguage const& langK,
                   RecognizedLanguage const& langL, SchutzContext const& ctx) {
  Bitset mask(ctx.mn());
  for (auto s : langK.accept) {
    for (auto t : langL.accept) {
      mask.set(s * ctx.n() + t);
    }
  }
  return mask;
}

}  // namespace

MuImage mu_image(RecognizedLanguage const& langK,
                 RecognizedLanguage const& langL, char marker, std::size_t cap,
                 bool with_table) {
  langK.hom.alphabet.index(marker);
  MuImage img;
  img.ctx = context_of(langK, langL);
  Alphabet const& alph = langK.hom.alphabet;
  std::size_t const nletters = alph.size();

  std::vector<SchutzElement> gens;
  gens.reserve(nletters);
  for (std::size_t a = 0; a < nletters; ++a) {
    gens.push_back(mu_letter(langK, langL, marker, alph.letter(a)));
  }

  std::unordered_map<SchutzElement, std::uint32_t, SchutzElementHash> index;
  auto intern = [&](SchutzElement e) {
    auto [it, inserted] =
        index.emplace(std::move(e), static_cast<std::uint32_t>(img.elements.size()));
    if (inserted) {
      img.elements.push_back(it->first);
    }
    return it->second;
  };

  intern(img.ctx.identity());
  std::vector<std::uint32_t> letter_image(nletters);
  for (std::size_t head = 0; head < img.elements.size(); ++head) {
    if (img.elements.size() > cap) {
      throw SizeLimitError(
          "mu image closure exceeds the materialization cap of " +
          std::to_string(cap) + " elements");
    }
    SchutzElement const cur = img.elements[head];
    for (std::size_t a = 0; a < nletters; ++a) {
      std::uint32_t idx = intern(img.ctx.mul(cur, gens[a]));
      if (head == 0) {
        letter_image[a] = idx;
      }
    }
  }

  Bitset mask = accept_mask(langK, langL, img.ctx);
  for (std::uint32_t i = 0; i < img.elements.size(); ++i) {
    if (img.elements[i].p12.intersects(mask)) {
      img.accept.push_back(i);
    }
  }

  if (with_table) {
    std::uint32_t const k = static_cast<std::uint32_t>(img.elements.size());
    auto monoid = std::make_shared<FiniteMonoid>();
    monoid->size = k;
    monoid->identity = 0;
    monoid->table.resize(static_cast<std::size_t>(k) * k);
    for (std::uint32_t i = 0; i < k; ++i) {
      for (std::uint32_t j = 0; j < k; ++j) {
        monoid->table[static_cast<std::size_t>(i) * k + j] =
            index.at(img.ctx.mul(img.elements[i], img.elements[j]));
      }
    }
    img.monoid = monoid;
    img.hom = MonoidHom{monoid, alph, letter_image};
  } else {
    img.hom = MonoidHom{nullptr, alph, letter_image};
  }
  return img;
}

bool mu_recognizes(RecognizedLanguage const& langK,
                   RecognizedLanguage const& langL, char marker,
                   Word const& u) {
  auto ctx = context_of(langK, langL);
  return mu_of_word(langK, langL, marker, u)
      .p12.intersects(accept_mask(langK, langL, ctx));
}

nlohmann::json schutz_element_to_json(SchutzElement const& e, std::uint32_t n) {
  nlohmann::json j;
  j["p11"] = e.p11;
  j["p22"] = e.p22;
  auto pairs = nlohmann::json::array();
  e.p12.for_each([&](std::uint32_t bit) {
    pairs.push_back({bit / n, bit % n});
  });
  j["p12"] = std::move(pairs);
  return j;
}

}  // namespace kal
