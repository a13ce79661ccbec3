#include "kal/monoid.hpp"

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "kal/bitset.hpp"
#include "kal/errors.hpp"

namespace kal {

void FiniteMonoid::validate() const {
  if (size == 0 || identity >= size ||
      table.size() != static_cast<std::size_t>(size) * size) {
    throw InputError("malformed monoid table");
  }
  for (auto v : table) {
    if (v >= size) {
      throw InputError("monoid table entry out of range");
    }
  }
  for (std::uint32_t i = 0; i < size; ++i) {
    if (mul(identity, i) != i || mul(i, identity) != i) {
      throw InputError("identity law fails");
    }
  }
  if (size <= 300) {
    for (std::uint32_t i = 0; i < size; ++i) {
      for (std::uint32_t j = 0; j < size; ++j) {
        for (std::uint32_t k = 0; k < size; ++k) {
          if (mul(mul(i, j), k) != mul(i, mul(j, k))) {
            throw InputError("associativity fails");
          }
        }
      }
    }
  } else {
    // Deterministic sampling above the exhaustive threshold.
    std::uint64_t state = 0x853c49e6748fea9bULL;
    auto next = [&]() {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return static_cast<std::uint32_t>((state >> 33) % size);
    };
    for (int t = 0; t < 300000; ++t) {
      std::uint32_t i = next(), j = next(), k = next();
      if (mul(mul(i, j), k) != mul(i, mul(j, k))) {
        throw InputError("associativity fails (sampled)");
      }
    }
  }
}

std::uint32_t MonoidHom::of_word(Word const& w) const {
  std::uint32_t e = target->identity;
  for (char c : w) {
    e = target->mul(e, of_letter(c));
  }
  return e;
}

namespace {

struct VecHash {
  std::size_t operator()(std::vector<std::uint32_t> const& v) const {
    std::size_t h = v.size();
    for (auto x : v) {
      h = hash_combine(h, x);
    }
    return h;
  }
};

// Closure of word-induced transformations of the state set, shortlex-first
// discovery order with the identity first. Optionally builds the table.
struct TransformClosure {
  std::vector<std::vector<std::uint32_t>> elements;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash> index;
  std::vector<std::uint32_t> letter_image;
};

TransformClosure transform_closure(CompleteDfa const& dfa) {
  dfa.validate();
  std::size_t const nletters = dfa.alphabet.size();

  std::vector<std::vector<std::uint32_t>> letter_t(nletters);
  for (std::size_t a = 0; a < nletters; ++a) {
    letter_t[a].resize(dfa.state_count);
    for (std::uint32_t s = 0; s < dfa.state_count; ++s) {
      letter_t[a][s] = dfa.step(s, a);
    }
  }

  TransformClosure cl;
  std::vector<std::uint32_t> id(dfa.state_count);
  for (std::uint32_t s = 0; s < dfa.state_count; ++s) {
    id[s] = s;
  }
  cl.index.emplace(id, 0);
  cl.elements.push_back(std::move(id));

  auto intern = [&](std::vector<std::uint32_t> t) {
    auto [it, inserted] =
        cl.index.emplace(std::move(t), static_cast<std::uint32_t>(cl.elements.size()));
    if (inserted) {
      cl.elements.push_back(it->first);
    }
    return it->second;
  };

  for (std::size_t head = 0; head < cl.elements.size(); ++head) {
    for (std::size_t a = 0; a < nletters; ++a) {
      std::vector<std::uint32_t> t(dfa.state_count);
      for (std::uint32_t s = 0; s < dfa.state_count; ++s) {
        t[s] = letter_t[a][cl.elements[head][s]];
      }
      intern(std::move(t));
    }
  }

  cl.letter_image.resize(nletters);
  for (std::size_t a = 0; a < nletters; ++a) {
    cl.letter_image[a] = cl.index.at(letter_t[a]);
  }
  return cl;
}

}  // namespace

std::size_t transition_monoid_size(CompleteDfa const& dfa) {
  return transform_closure(dfa).elements.size();
}

RecognizedLanguage transition_monoid(CompleteDfa const& dfa) {
  auto cl = transform_closure(dfa);
  std::uint32_t const k = static_cast<std::uint32_t>(cl.elements.size());

  auto monoid = std::make_shared<FiniteMonoid>();
  monoid->size = k;
  monoid->identity = 0;
  monoid->table.resize(static_cast<std::size_t>(k) * k);
  std::vector<std::uint32_t> prod(dfa.state_count);
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      // Word concatenation: apply i's transformation, then j's.
      for (std::uint32_t s = 0; s < dfa.state_count; ++s) {
        prod[s] = cl.elements[j][cl.elements[i][s]];
      }
      monoid->table[static_cast<std::size_t>(i) * k + j] = cl.index.at(prod);
    }
  }

  RecognizedLanguage lang;
  lang.hom = MonoidHom{monoid, dfa.alphabet, cl.letter_image};
  for (std::uint32_t i = 0; i < k; ++i) {
    if (dfa.is_final(cl.elements[i][dfa.initial])) {
      lang.accept.push_back(i);
    }
  }
  return lang;
}

RecognizedLanguage syntactic_monoid(CompleteDfa const& dfa) {
  return transition_monoid(minimize(dfa));
}

Quotient syntactic_quotient(FiniteMonoid const& m,
                            std::vector<std::uint32_t> const& accept,
                            std::vector<std::uint32_t> const& generators) {
  for (auto a : accept) {
    if (a >= m.size) {
      throw InputError("accept index out of range");
    }
  }
  std::vector<std::uint32_t> gens = generators;
  if (gens.empty()) {
    gens.resize(m.size);
    for (std::uint32_t i = 0; i < m.size; ++i) {
      gens[i] = i;
    }
  }

  std::vector<bool> in_accept(m.size, false);
  for (auto a : accept) {
    in_accept[a] = true;
  }

  // Coarsest partition refining {accept, rest} stable under all left and
  // right translations by the generators.
  std::vector<std::uint32_t> block(m.size);
  for (std::uint32_t i = 0; i < m.size; ++i) {
    block[i] = in_accept[i] ? 1 : 0;
  }
  std::size_t nblocks = 0;
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> sig_id;
    std::vector<std::uint32_t> next(m.size);
    for (std::uint32_t e = 0; e < m.size; ++e) {
      std::vector<std::uint32_t> sig;
      sig.reserve(2 * gens.size() + 1);
      sig.push_back(block[e]);
      for (auto g : gens) {
        sig.push_back(block[m.mul(g, e)]);
        sig.push_back(block[m.mul(e, g)]);
      }
      auto [it, ins] =
          sig_id.emplace(std::move(sig), static_cast<std::uint32_t>(sig_id.size()));
      (void)ins;
      next[e] = it->second;
    }
    block = std::move(next);
    if (sig_id.size() == nblocks) {
      break;
    }
    nblocks = sig_id.size();
  }

  // Classes numbered by smallest member (first occurrence in element order,
  // which the signature map already guarantees).
  std::vector<std::uint32_t> rep(nblocks);
  std::vector<bool> have(nblocks, false);
  for (std::uint32_t e = 0; e < m.size; ++e) {
    if (!have[block[e]]) {
      have[block[e]] = true;
      rep[block[e]] = e;
    }
  }

  auto q = std::make_shared<FiniteMonoid>();
  q->size = static_cast<std::uint32_t>(nblocks);
  q->identity = block[m.identity];
  q->table.resize(nblocks * nblocks);
  for (std::uint32_t i = 0; i < nblocks; ++i) {
    for (std::uint32_t j = 0; j < nblocks; ++j) {
      q->table[static_cast<std::size_t>(i) * nblocks + j] =
          block[m.mul(rep[i], rep[j])];
    }
  }
  return Quotient{std::move(q), std::move(block)};
}

namespace {

// leq[p][q] == p <=_X q, as bit rows.
std::vector<Bitset> leq_r(FiniteMonoid const& m) {
  std::vector<Bitset> leq(m.size, Bitset(m.size));
  for (std::uint32_t q = 0; q < m.size; ++q) {
    for (std::uint32_t r = 0; r < m.size; ++r) {
      leq[m.mul(q, r)].set(q);
    }
  }
  return leq;
}

std::vector<Bitset> leq_l(FiniteMonoid const& m) {
  std::vector<Bitset> leq(m.size, Bitset(m.size));
  for (std::uint32_t q = 0; q < m.size; ++q) {
    for (std::uint32_t s = 0; s < m.size; ++s) {
      leq[m.mul(s, q)].set(q);
    }
  }
  return leq;
}

std::vector<Bitset> leq_j(FiniteMonoid const& m) {
  std::vector<Bitset> leq(m.size, Bitset(m.size));
  for (std::uint32_t q = 0; q < m.size; ++q) {
    // M q M in two sweeps.
    std::vector<std::uint32_t> right;
    right.reserve(m.size);
    for (std::uint32_t r = 0; r < m.size; ++r) {
      right.push_back(m.mul(q, r));
    }
    for (std::uint32_t s = 0; s < m.size; ++s) {
      for (auto x : right) {
        leq[m.mul(s, x)].set(q);
      }
    }
  }
  return leq;
}

// Longest strict chain (counted in elements) of the quasiorder given by leq
// rows: condense mutual pairs into classes, then DP on the class poset.
std::uint32_t longest_chain(std::vector<Bitset> const& leq) {
  std::uint32_t const n = static_cast<std::uint32_t>(leq.size());
  std::vector<std::int64_t> cls(n, -1);
  std::vector<std::uint32_t> rep;
  for (std::uint32_t p = 0; p < n; ++p) {
    if (cls[p] >= 0) {
      continue;
    }
    cls[p] = static_cast<std::int64_t>(rep.size());
    for (std::uint32_t q = p + 1; q < n; ++q) {
      if (cls[q] < 0 && leq[p].test(q) && leq[q].test(p)) {
        cls[q] = cls[p];
      }
    }
    rep.push_back(p);
  }
  std::vector<std::uint32_t> depth(rep.size(), 0);
  // depth[c] = longest chain ending at class c (going strictly downward).
  std::vector<bool> done(rep.size(), false);
  auto dfs = [&](auto&& self, std::uint32_t c) -> std::uint32_t {
    if (done[c]) {
      return depth[c];
    }
    done[c] = true;
    std::uint32_t best = 1;
    for (std::uint32_t d = 0; d < rep.size(); ++d) {
      if (d != c && leq[rep[c]].test(rep[d]) && !leq[rep[d]].test(rep[c])) {
        // class c strictly below class d
        best = std::max(best, 1 + self(self, d));
      }
    }
    depth[c] = best;
    return best;
  };
  std::uint32_t best = 1;
  for (std::uint32_t c = 0; c < rep.size(); ++c) {
    best = std::max(best, dfs(dfs, c));
  }
  return best;
}

}  // namespace

GreenSummary green_summary(FiniteMonoid const& m) {
  GreenSummary g;

  auto lr = leq_r(m);
  auto ll = leq_l(m);
  auto lj = leq_j(m);

  g.j_trivial = true;
  for (std::uint32_t p = 0; p < m.size && g.j_trivial; ++p) {
    for (std::uint32_t q = p + 1; q < m.size; ++q) {
      if (lj[p].test(q) && lj[q].test(p)) {
        g.j_trivial = false;
        break;
      }
    }
  }

  g.is_group = true;
  for (std::uint32_t x = 0; x < m.size; ++x) {
    bool inv = false;
    for (std::uint32_t y = 0; y < m.size; ++y) {
      if (m.mul(x, y) == m.identity && m.mul(y, x) == m.identity) {
        inv = true;
        break;
      }
    }
    if (!inv) {
      g.is_group = false;
      break;
    }
  }

  g.rho = longest_chain(lr);
  g.lambda = longest_chain(ll);
  return g;
}

bool kernel_equal(MonoidHom const& h1, MonoidHom const& h2) {
  if (h1.alphabet != h2.alphabet) {
    throw InputError("kernel_equal: alphabets differ");
  }
  std::size_t const nletters = h1.alphabet.size();
  std::uint32_t const n2 = h2.target->size;

  std::vector<bool> seen(static_cast<std::size_t>(h1.target->size) * n2, false);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  auto push = [&](std::uint32_t a, std::uint32_t b) {
    std::size_t key = static_cast<std::size_t>(a) * n2 + b;
    if (!seen[key]) {
      seen[key] = true;
      pairs.emplace_back(a, b);
    }
  };
  push(h1.target->identity, h2.target->identity);
  for (std::size_t head = 0; head < pairs.size(); ++head) {
    auto [a, b] = pairs[head];
    for (std::size_t l = 0; l < nletters; ++l) {
      push(h1.target->mul(a, h1.letter_image[l]),
           h2.target->mul(b, h2.letter_image[l]));
    }
  }

  // Equal kernels iff the reachable pair set is a bijection between images.
  std::map<std::uint32_t, std::uint32_t> fwd, bwd;
  for (auto [a, b] : pairs) {
    if (auto it = fwd.find(a); it != fwd.end() && it->second != b) {
      return false;
    }
    if (auto it = bwd.find(b); it != bwd.end() && it->second != a) {
      return false;
    }
    fwd[a] = b;
    bwd[b] = a;
  }
  return true;
}

nlohmann::json monoid_to_json(FiniteMonoid const& m, MonoidHom const* hom,
                              std::vector<std::uint32_t> const* accept) {
  nlohmann::json j;
  j["size"] = m.size;
  j["identity"] = m.identity;
  auto rows = nlohmann::json::array();
  for (std::uint32_t r = 0; r < m.size; ++r) {
    auto row = nlohmann::json::array();
    for (std::uint32_t c = 0; c < m.size; ++c) {
      row.push_back(m.mul(r, c));
    }
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  if (hom != nullptr) {
    nlohmann::json letters = nlohmann::json::object();
    for (std::size_t i = 0; i < hom->alphabet.size(); ++i) {
      letters[std::string(1, hom->alphabet.letter(i))] = hom->letter_image[i];
    }
    j["letters"] = std::move(letters);
  }
  if (accept != nullptr) {
    j["accept"] = *accept;
  }
  return j;
}

ParsedMonoid monoid_from_json(nlohmann::json const& j) {
  ParsedMonoid out;
  try {
    auto m = std::make_shared<FiniteMonoid>();
    m->size = j.at("size").get<std::uint32_t>();
    m->identity = j.at("identity").get<std::uint32_t>();
    m->table.clear();
    for (auto const& row : j.at("table")) {
      for (auto const& v : row) {
        m->table.push_back(v.get<std::uint32_t>());
      }
    }
    m->validate();
    out.monoid = m;
    if (j.contains("letters")) {
      std::string letters;
      for (auto const& [key, val] : j.at("letters").items()) {
        if (key.size() != 1) {
          throw InputError("monoid JSON: letters must be single characters");
        }
        letters += key;
      }
      std::sort(letters.begin(), letters.end());
      Alphabet alph(letters);
      std::vector<std::uint32_t> images(letters.size());
      for (auto const& [key, val] : j.at("letters").items()) {
        std::uint32_t img = val.get<std::uint32_t>();
        if (img >= m->size) {
          throw InputError("monoid JSON: letter image out of range");
        }
        images[alph.index(key[0])] = img;
      }
      out.hom = MonoidHom{out.monoid, alph, images};
      out.has_hom = true;
    }
    if (j.contains("accept")) {
      for (auto const& v : j.at("accept")) {
        std::uint32_t a = v.get<std::uint32_t>();
        if (a >= m->size) {
          throw InputError("monoid JSON: accept index out of range");
        }
        out.accept.push_back(a);
      }
      std::sort(out.accept.begin(), out.accept.end());
    }
  } catch (nlohmann::json::exception const& e) {
    throw InputError(std::string("monoid JSON: ") + e.what());
  }
  return out;
}

ParsedMonoid monoid_from_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open monoid file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (nlohmann::json::exception const& e) {
    throw InputError(std::string("monoid JSON parse error: ") + e.what());
  }
  return monoid_from_json(j);
}

}  // namespace kal
