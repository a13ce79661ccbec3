#include "kal/dfa.hpp"

#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "kal/bitset.hpp"
#include "kal/errors.hpp"

namespace kal {

std::uint32_t CompleteDfa::run(std::uint32_t state, Word const& w) const {
  for (char c : w) {
    state = step(state, alphabet.index(c));
  }
  return state;
}

void CompleteDfa::validate() const {
  if (state_count == 0) {
    throw InputError("DFA must have at least one state");
  }
  if (initial >= state_count) {
    throw InputError("initial state out of range");
  }
  for (auto f : finals) {
    if (f >= state_count) {
      throw InputError("final state out of range");
    }
  }
  if (delta.size() != static_cast<std::size_t>(state_count) * alphabet.size()) {
    throw InputError("transition table is not total");
  }
  for (auto t : delta) {
    if (t >= state_count) {
      throw InputError("transition target out of range");
    }
  }
}

bool accepts(CompleteDfa const& dfa, Word const& w) {
  return dfa.is_final(dfa.run(dfa.initial, w));
}

namespace {

// States reachable from the initial state, in BFS order over letters in
// alphabet order.
std::vector<std::uint32_t> reachable_order(CompleteDfa const& dfa) {
  std::vector<bool> seen(dfa.state_count, false);
  std::vector<std::uint32_t> order;
  order.reserve(dfa.state_count);
  seen[dfa.initial] = true;
  order.push_back(dfa.initial);
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::uint32_t s = order[head];
    for (std::size_t a = 0; a < dfa.alphabet.size(); ++a) {
      std::uint32_t t = dfa.step(s, a);
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  }
  return order;
}

}  // namespace

CompleteDfa minimize(CompleteDfa const& dfa) {
  dfa.validate();
  std::size_t const nletters = dfa.alphabet.size();

  auto order = reachable_order(dfa);
  std::vector<std::int64_t> pos(dfa.state_count, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[order[i]] = static_cast<std::int64_t>(i);
  }
  std::size_t const nreach = order.size();

  // Moore refinement over reachable states only.
  std::vector<std::uint32_t> block(nreach);
  for (std::size_t i = 0; i < nreach; ++i) {
    block[i] = dfa.is_final(order[i]) ? 1 : 0;
  }
  std::size_t nblocks = 2;
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> sig_id;
    std::vector<std::uint32_t> next(nreach);
    for (std::size_t i = 0; i < nreach; ++i) {
      std::vector<std::uint32_t> sig;
      sig.reserve(nletters + 1);
      sig.push_back(block[i]);
      for (std::size_t a = 0; a < nletters; ++a) {
        sig.push_back(block[pos[dfa.step(order[i], a)]]);
      }
      auto [it, inserted] =
          sig_id.emplace(std::move(sig), static_cast<std::uint32_t>(sig_id.size()));
      next[i] = it->second;
      (void)inserted;
    }
    if (sig_id.size() == nblocks) {
      block = std::move(next);
      break;
    }
    nblocks = sig_id.size();
    block = std::move(next);
  }

  // Quotient automaton on blocks, then canonical BFS renumbering.
  std::vector<std::uint32_t> rep(nblocks, 0);
  std::vector<bool> have(nblocks, false);
  for (std::size_t i = 0; i < nreach; ++i) {
    if (!have[block[i]]) {
      have[block[i]] = true;
      rep[block[i]] = order[i];
    }
  }

  std::vector<std::int64_t> renum(nblocks, -1);
  std::vector<std::uint32_t> bfs;
  std::uint32_t init_block = block[pos[dfa.initial]];
  renum[init_block] = 0;
  bfs.push_back(init_block);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    std::uint32_t b = bfs[head];
    for (std::size_t a = 0; a < nletters; ++a) {
      std::uint32_t tb = block[pos[dfa.step(rep[b], a)]];
      if (renum[tb] < 0) {
        renum[tb] = static_cast<std::int64_t>(bfs.size());
        bfs.push_back(tb);
      }
    }
  }

  CompleteDfa out;
  out.alphabet = dfa.alphabet;
  out.state_count = static_cast<std::uint32_t>(bfs.size());
  out.initial = 0;
  out.delta.resize(bfs.size() * nletters);
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    std::uint32_t b = bfs[i];
    if (dfa.is_final(rep[b])) {
      out.finals.insert(static_cast<std::uint32_t>(i));
    }
    for (std::size_t a = 0; a < nletters; ++a) {
      std::uint32_t tb = block[pos[dfa.step(rep[b], a)]];
      out.delta[i * nletters + a] = static_cast<std::uint32_t>(renum[tb]);
    }
  }
  return out;
}

bool equivalent(CompleteDfa const& d1, CompleteDfa const& d2) {
  if (d1.alphabet != d2.alphabet) {
    throw InputError("equivalent: alphabets differ");
  }
  d1.validate();
  d2.validate();
  std::size_t const nletters = d1.alphabet.size();

  std::vector<bool> seen(static_cast<std::size_t>(d1.state_count) *
                             d2.state_count,
                         false);
  std::deque<std::pair<std::uint32_t, std::uint32_t>> work;
  auto push = [&](std::uint32_t s1, std::uint32_t s2) {
    std::size_t key = static_cast<std::size_t>(s1) * d2.state_count + s2;
    if (!seen[key]) {
      seen[key] = true;
      work.emplace_back(s1, s2);
    }
  };
  push(d1.initial, d2.initial);
  while (!work.empty()) {
    auto [s1, s2] = work.front();
    work.pop_front();
    if (d1.is_final(s1) != d2.is_final(s2)) {
      return false;
    }
    for (std::size_t a = 0; a < nletters; ++a) {
      push(d1.step(s1, a), d2.step(s2, a));
    }
  }
  return true;
}

CompleteDfa left_derivative(CompleteDfa const& dfa, Word const& u) {
  dfa.validate();
  CompleteDfa out = dfa;
  out.initial = dfa.run(dfa.initial, u);
  return out;
}

CompleteDfa kal_construct(CompleteDfa const& dfaK, CompleteDfa const& dfaL,
                          char marker) {
  if (dfaK.alphabet != dfaL.alphabet) {
    throw InputError("kal_construct: alphabets differ");
  }
  dfaK.validate();
  dfaL.validate();
  std::size_t const marker_idx = dfaK.alphabet.index(marker);
  std::size_t const nletters = dfaK.alphabet.size();
  std::uint32_t const lstates = dfaL.state_count;

  Bitset lfinals(lstates);
  for (auto f : dfaL.finals) {
    lfinals.set(f);
  }

  struct Key {
    std::uint32_t p;
    Bitset q;
    bool operator==(Key const&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(Key const& k) const {
      return hash_combine(k.p, k.q.hash());
    }
  };

  std::unordered_map<Key, std::uint32_t, KeyHash> index;
  std::vector<Key> states;
  auto intern = [&](Key k) {
    auto [it, inserted] =
        index.emplace(std::move(k), static_cast<std::uint32_t>(states.size()));
    if (inserted) {
      states.push_back(it->first);
    }
    return it->second;
  };

  // (initial of K, empty subset): no marker crossed yet.
  intern(Key{dfaK.initial, Bitset(lstates)});

  std::vector<std::uint32_t> delta;
  for (std::size_t head = 0; head < states.size(); ++head) {
    Key const cur = states[head];
    for (std::size_t a = 0; a < nletters; ++a) {
      Bitset q2(lstates);
      cur.q.for_each([&](std::uint32_t s) { q2.set(dfaL.step(s, a)); });
      if (a == marker_idx && dfaK.is_final(cur.p)) {
        q2.set(dfaL.initial);
      }
      delta.push_back(intern(Key{dfaK.step(cur.p, a), std::move(q2)}));
    }
  }

  CompleteDfa out;
  out.alphabet = dfaK.alphabet;
  out.state_count = static_cast<std::uint32_t>(states.size());
  out.initial = 0;
  out.delta = std::move(delta);
  for (std::uint32_t i = 0; i < out.state_count; ++i) {
    if (states[i].q.intersects(lfinals)) {
      out.finals.insert(i);
    }
  }
  return out;
}

CompleteDfa parse_dfa(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    if (!raw.empty() && raw.front() == '#') {
      continue;
    }
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) {
      tokens.push_back(tok);
    }
    if (!tokens.empty()) {
      lines.push_back(std::move(tokens));
    }
  }
  if (lines.size() < 4) {
    throw InputError("DFA file: missing header lines");
  }

  auto expect_key = [&](std::size_t i, std::string const& key) {
    if (lines[i][0] != key) {
      throw InputError("DFA file: expected '" + key + "' line, got '" +
                       lines[i][0] + "'");
    }
  };
  auto to_u32 = [](std::string const& s) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(s, &used);
      if (used != s.size()) {
        throw std::invalid_argument(s);
      }
      return static_cast<std::uint32_t>(v);
    } catch (std::exception const&) {
      throw InputError("DFA file: bad number '" + s + "'");
    }
  };

  expect_key(0, "alphabet");
  std::string letters;
  for (std::size_t i = 1; i < lines[0].size(); ++i) {
    if (lines[0][i].size() != 1) {
      throw InputError("DFA file: letters must be single characters");
    }
    letters += lines[0][i];
  }

  CompleteDfa dfa;
  dfa.alphabet = Alphabet(letters);

  expect_key(1, "states");
  if (lines[1].size() != 2) {
    throw InputError("DFA file: malformed 'states' line");
  }
  dfa.state_count = to_u32(lines[1][1]);
  if (dfa.state_count == 0) {
    throw InputError("DFA file: state count must be positive");
  }

  expect_key(2, "initial");
  if (lines[2].size() != 2) {
    throw InputError("DFA file: malformed 'initial' line");
  }
  dfa.initial = to_u32(lines[2][1]);
  if (dfa.initial >= dfa.state_count) {
    throw InputError("DFA file: initial state out of range");
  }

  expect_key(3, "finals");
  for (std::size_t i = 1; i < lines[3].size(); ++i) {
    std::uint32_t f = to_u32(lines[3][i]);
    if (f >= dfa.state_count) {
      throw InputError("DFA file: final state out of range");
    }
    dfa.finals.insert(f);
  }

  std::size_t const nletters = dfa.alphabet.size();
  dfa.delta.assign(static_cast<std::size_t>(dfa.state_count) * nletters, 0);
  std::vector<bool> defined(dfa.delta.size(), false);
  for (std::size_t i = 4; i < lines.size(); ++i) {
    auto const& t = lines[i];
    if (t[0] != "trans" || t.size() != 4 || t[2].size() != 1) {
      throw InputError("DFA file: malformed transition line");
    }
    std::uint32_t from = to_u32(t[1]);
    std::uint32_t to = to_u32(t[3]);
    if (from >= dfa.state_count || to >= dfa.state_count) {
      throw InputError("DFA file: transition state out of range");
    }
    std::size_t a = dfa.alphabet.index(t[2][0]);
    std::size_t key = static_cast<std::size_t>(from) * nletters + a;
    if (defined[key]) {
      throw InputError("DFA file: duplicate transition for state " + t[1] +
                       " letter " + t[2]);
    }
    defined[key] = true;
    dfa.delta[key] = to;
  }
  for (std::size_t i = 0; i < defined.size(); ++i) {
    if (!defined[i]) {
      throw InputError("DFA file: missing transition for state " +
                       std::to_string(i / nletters) + " letter '" +
                       dfa.alphabet.letter(i % nletters) + "'");
    }
  }
  return dfa;
}

CompleteDfa parse_dfa_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open DFA file: " + path);
  }
  return parse_dfa(in);
}

void print_dfa(std::ostream& out, CompleteDfa const& dfa) {
  out << "alphabet";
  for (char c : dfa.alphabet.letters()) {
    out << ' ' << c;
  }
  out << '\n';
  out << "states " << dfa.state_count << '\n';
  out << "initial " << dfa.initial << '\n';
  out << "finals";
  for (auto f : dfa.finals) {
    out << ' ' << f;
  }
  out << '\n';
  for (std::uint32_t s = 0; s < dfa.state_count; ++s) {
    for (std::size_t a = 0; a < dfa.alphabet.size(); ++a) {
      out << "trans " << s << ' ' << dfa.alphabet.letter(a) << ' '
          << dfa.step(s, a) << '\n';
    }
  }
}

}  // namespace kal
