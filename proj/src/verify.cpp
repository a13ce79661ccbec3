#include "kal/verify.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kal/bpol1.hpp"
#include "kal/constructions.hpp"
#include "kal/dfa.hpp"
#include "kal/errors.hpp"
#include "kal/monoid.hpp"
#include "kal/schutz.hpp"

#ifndef KAL_EXPECTED_PATH
#define KAL_EXPECTED_PATH "data/expected.json"
#endif

namespace kal {

bool VerifyReport::overall() const {
  for (auto const& c : checks) {
    if (!c.pass) {
      return false;
    }
  }
  return true;
}

bool VerifyReport::criterion_pass(int criterion) const {
  for (auto const& c : checks) {
    if (c.criterion == criterion && !c.pass) {
      return false;
    }
  }
  return true;
}

nlohmann::json load_expected(std::string const& path) {
  std::string p = path.empty() ? KAL_EXPECTED_PATH : path;
  std::ifstream in(p);
  if (!in) {
    throw InputError("cannot open expected-values file: " + p);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (nlohmann::json::exception const& e) {
    throw InputError(std::string("expected-values JSON parse error: ") +
                     e.what());
  }
  return j;
}

namespace {

class Harness {
 public:
  explicit Harness(nlohmann::json const& expected) : expected_(expected) {}

  VerifyReport take() { return std::move(report_); }

  // Runs f under a guard: any exception becomes a failed check.
  template <typename F>
  void check(int criterion, std::string name, std::string provenance,
             std::string expected, F&& f) {
    CheckResult r;
    r.criterion = criterion;
    r.name = std::move(name);
    r.provenance = std::move(provenance);
    r.expected = std::move(expected);
    try {
      r.computed = f();
      r.pass = (r.computed == r.expected);
    } catch (std::exception const& e) {
      r.computed = std::string("error: ") + e.what();
      r.pass = false;
    }
    report_.checks.push_back(std::move(r));
  }

  nlohmann::json const& expected_json() const { return expected_; }

 private:
  nlohmann::json const& expected_;
  VerifyReport report_;
};

std::string num(std::uint64_t v) { return std::to_string(v); }

RecognizedLanguage mod_lang(char x, std::uint32_t m) {
  return syntactic_monoid(mod_count_dfa(x, m, Alphabet("abc")));
}

CompleteDfa random_dfa(std::mt19937& rng, std::uint32_t max_states,
                       Alphabet const& alphabet) {
  std::uniform_int_distribution<std::uint32_t> nd(1, max_states);
  std::uint32_t n = nd(rng);
  CompleteDfa d;
  d.alphabet = alphabet;
  d.state_count = n;
  d.initial = 0;
  std::uniform_int_distribution<std::uint32_t> sd(0, n - 1);
  d.delta.resize(static_cast<std::size_t>(n) * alphabet.size());
  for (auto& t : d.delta) {
    t = sd(rng);
  }
  std::bernoulli_distribution fd(0.5);
  for (std::uint32_t s = 0; s < n; ++s) {
    if (fd(rng)) {
      d.finals.insert(s);
    }
  }
  return d;
}

// Independent membership oracle for KaL: try every split at the marker.
bool split_oracle(CompleteDfa const& dfaK, CompleteDfa const& dfaL, char marker,
                  Word const& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == marker && accepts(dfaK, w.substr(0, i)) &&
        accepts(dfaL, w.substr(i + 1))) {
      return true;
    }
  }
  return false;
}

// Definitional scan for mu: collect (phi(u'), psi(u'')) over every
// factorization u = u' marker u''.
SchutzElement mu_scan(RecognizedLanguage const& langK,
                      RecognizedLanguage const& langL, char marker,
                      Word const& u) {
  SchutzElement e;
  e.p11 = langK.hom.of_word(u);
  e.p22 = langL.hom.of_word(u);
  std::uint32_t const n = langL.hom.target->size;
  e.p12 = Bitset(langK.hom.target->size * n);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == marker) {
      e.p12.set(langK.hom.of_word(u.substr(0, i)) * n +
                langL.hom.of_word(u.substr(i + 1)));
    }
  }
  return e;
}

template <typename F>
void all_words_upto(Alphabet const& alphabet, std::size_t max_len, F&& f) {
  std::vector<Word> cur{Word{}};
  f(Word{});
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    next.reserve(cur.size() * alphabet.size());
    for (auto const& w : cur) {
      for (char c : alphabet.letters()) {
        Word w2 = w + c;
        f(w2);
        next.push_back(std::move(w2));
      }
    }
    cur = std::move(next);
  }
}

Word random_word(std::mt19937& rng, Alphabet const& alphabet,
                 std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> ld(0, max_len);
  std::uniform_int_distribution<std::size_t> cd(0, alphabet.size() - 1);
  Word w;
  std::size_t len = ld(rng);
  for (std::size_t i = 0; i < len; ++i) {
    w += alphabet.letter(cd(rng));
  }
  return w;
}

void criterion1(Harness& h) {
  auto const& cases = h.expected_json().at("prop12_tightness").at("cases");
  for (auto const& c : cases) {
    std::uint32_t k = c.at("k"), l = c.at("l");
    h.check(1, "prop12-tightness-k" + num(k) + "-l" + num(l), "paper",
            num(c.at("states").get<std::uint64_t>()), [&] {
              auto kal = kal_construct(prop2_K(k), prop2_L(l), 'a');
              return num(minimize(kal).state_count);
            });
  }
}

void criterion2(Harness& h) {
  h.check(2, "prop1-random-bound", "paper", "100/100 within bound", [&] {
    std::mt19937 rng(20240901);
    Alphabet alph("abc");
    int ok = 0;
    for (int i = 0; i < 100; ++i) {
      auto dk = random_dfa(rng, 4, alph);
      auto dl = random_dfa(rng, 4, alph);
      auto kal = minimize(kal_construct(dk, dl, 'a'));
      std::uint64_t bound = static_cast<std::uint64_t>(dk.state_count)
                            << dl.state_count;
      if (kal.state_count <= bound) {
        ++ok;
      }
    }
    return num(ok) + "/100 within bound";
  });
}

void criterion3(Harness& h) {
  auto const& cases = h.expected_json().at("prop3_surjective").at("cases");
  for (auto const& c : cases) {
    std::uint32_t m = c.at("m"), n = c.at("n");
    h.check(3, "prop3-mu-image-m" + num(m) + "-n" + num(n), "paper",
            num(c.at("size").get<std::uint64_t>()), [&] {
              auto langK = mod_lang('b', m);
              auto langL = mod_lang('c', n);
              auto img = mu_image(langK, langL, 'a', kDefaultCap, false);
              return num(img.size());
            });
  }
}

void criterion45(Harness& h) {
  auto const& cases = h.expected_json().at("gap_syntactic").at("cases");
  for (auto const& c : cases) {
    std::uint32_t m = c.at("m"), n = c.at("n");
    std::uint64_t expected_size = c.at("size").get<std::uint64_t>();
    std::string suffix = "-m" + num(m) + "-n" + num(n);

    // Route A: transition monoid of the minimal DFA of KaL.
    h.check(4, "gap-syntactic-dfa-route" + suffix, "paper", num(expected_size),
            [&] {
              auto kal = minimize(kal_construct(mod_count_dfa('b', m, Alphabet("abc")),
                                                mod_count_dfa('c', n, Alphabet("abc")),
                                                'a'));
              return num(transition_monoid_size(kal));
            });

    // Route B: syntactic quotient of the mu image, plus kernel cross-check.
    // Kept to the two smaller witnesses.
    if (m * n <= 6) {
      h.check(4, "gap-syntactic-quotient-route" + suffix, "paper",
              num(expected_size), [&] {
                auto langK = mod_lang('b', m);
                auto langL = mod_lang('c', n);
                auto img = mu_image(langK, langL, 'a');
                auto q = syntactic_quotient(*img.monoid, img.accept,
                                            img.hom.letter_image);
                return num(q.monoid->size);
              });
      h.check(4, "gap-syntactic-kernel-equal" + suffix, "derived", "equal",
              [&] {
                auto langK = mod_lang('b', m);
                auto langL = mod_lang('c', n);
                auto kal = kal_construct(mod_count_dfa('b', m, Alphabet("abc")),
                                         mod_count_dfa('c', n, Alphabet("abc")),
                                         'a');
                auto route_dfa = syntactic_monoid(kal);
                auto img = mu_image(langK, langL, 'a');
                auto q = syntactic_quotient(*img.monoid, img.accept,
                                            img.hom.letter_image);
                std::vector<std::uint32_t> images(img.hom.letter_image.size());
                for (std::size_t i = 0; i < images.size(); ++i) {
                  images[i] = q.projection[img.hom.letter_image[i]];
                }
                MonoidHom hom_b{q.monoid, img.hom.alphabet, images};
                return kernel_equal(route_dfa.hom, hom_b) ? "equal"
                                                          : "different";
              });
    }

    h.check(5, "prop5-formula" + suffix, "paper", num(expected_size), [&] {
      std::uint64_t mn = static_cast<std::uint64_t>(m) * n;
      return num(mn * ((std::uint64_t{1} << mn) - 1) + 1);
    });
  }
}

void criterion6(Harness& h) {
  auto const& e1 = h.expected_json().at("example1");
  Alphabet alph("abcd");
  h.check(6, "example1-schutz-size", "paper",
          num(e1.at("schutz_size").get<std::uint64_t>()), [&] {
            auto langB = syntactic_monoid(star_dfa("ab", alph));
            auto langC = syntactic_monoid(star_dfa("ac", alph));
            auto full = schutz_enumerate(
                SchutzContext{langB.hom.target, langC.hom.target});
            return num(full->size);
          });
  h.check(6, "example1-mu-image-size", "paper",
          num(e1.at("mu_image_size").get<std::uint64_t>()), [&] {
            auto langB = syntactic_monoid(star_dfa("ab", alph));
            auto langC = syntactic_monoid(star_dfa("ac", alph));
            return num(mu_image(langB, langC, 'a').size());
          });
  h.check(6, "example1-syntactic-size", "paper",
          num(e1.at("syntactic_size").get<std::uint64_t>()), [&] {
            auto kal = kal_construct(star_dfa("ab", alph), star_dfa("ac", alph),
                                     'a');
            return num(transition_monoid_size(minimize(kal)));
          });
}

void criterion7(Harness& h) {
  auto const& e2 = h.expected_json().at("example2");
  Alphabet alph("abc");
  auto langB = syntactic_monoid(content_dfa("ab", alph));
  auto langC = syntactic_monoid(content_dfa("ac", alph));
  auto gB = green_summary(*langB.hom.target);
  auto gC = green_summary(*langC.hom.target);
  std::uint32_t rho = e2.at("rho"), lambda = e2.at("lambda");

  h.check(7, "example2-green-B", "paper",
          "j-trivial rho=" + num(rho) + " lambda=" + num(lambda), [&] {
            return std::string(gB.j_trivial ? "j-trivial" : "not-j-trivial") +
                   " rho=" + num(gB.rho) + " lambda=" + num(gB.lambda);
          });
  h.check(7, "example2-green-C", "paper",
          "j-trivial rho=" + num(rho) + " lambda=" + num(lambda), [&] {
            return std::string(gC.j_trivial ? "j-trivial" : "not-j-trivial") +
                   " rho=" + num(gC.rho) + " lambda=" + num(gC.lambda);
          });
  h.check(7, "example2-word-p12-size", "paper",
          num(e2.at("p12_size").get<std::uint64_t>()), [&] {
            auto mu = mu_of_word(langB, langC, 'a',
                                 e2.at("word").get<std::string>());
            return num(mu.p12.count());
          });
  h.check(7, "example2-prop6-p12-bound", "paper", "all within rho+lambda-1",
          [&] {
            std::uint32_t bound = gB.rho + gC.lambda - 1;
            auto img = mu_image(langB, langC, 'a', kDefaultCap, false);
            for (auto const& e : img.elements) {
              if (e.p12.count() > bound) {
                return std::string("element with |p12|=") + num(e.p12.count());
              }
            }
            return std::string("all within rho+lambda-1");
          });
  h.check(7, "example2-prop6-size-bound", "paper", "within binomial bound",
          [&] {
            std::uint64_t m = langB.hom.target->size;
            std::uint64_t n = langC.hom.target->size;
            std::uint64_t mn = m * n;
            std::uint32_t chain = gB.rho + gC.lambda - 1;
            // sum_{i=0}^{chain} C(mn, i)
            std::uint64_t sum = 0, binom = 1;
            for (std::uint32_t i = 0; i <= chain; ++i) {
              sum += binom;
              binom = binom * (mn - i) / (i + 1);
            }
            auto img = mu_image(langB, langC, 'a', kDefaultCap, false);
            return img.size() <= mn * sum
                       ? std::string("within binomial bound")
                       : num(img.size()) + " exceeds " + num(mn * sum);
          });
}

void criterion8(Harness& h) {
  auto const& e3 = h.expected_json().at("example3");
  Alphabet alph("ab");
  auto hom = sl_free_monoid(alph);
  std::uint32_t full = hom.target->size - 1;  // the subset A as a bitmask
  RecognizedLanguage lang{hom, {full}};

  h.check(8, "example3-mu-image-size", "paper",
          num(e3.at("mu_image_size").get<std::uint64_t>()), [&] {
            return num(mu_image(lang, lang, 'a', kDefaultCap, false).size());
          });
  h.check(8, "example3-xi-size", "derived",
          num(e3.at("xi_exact").at("value").get<std::uint64_t>()), [&] {
            return num(xi_image(hom).size());
          });
  h.check(8, "example3-xi-upper-bounds", "paper", "within 100 and 900", [&] {
    auto xi = xi_image(hom);
    std::uint64_t u100 = e3.at("xi_upper").get<std::uint64_t>();
    std::uint64_t u900 = e3.at("xi_naive_upper").get<std::uint64_t>();
    return (xi.size() <= u100 && xi.size() <= u900)
               ? std::string("within 100 and 900")
               : num(xi.size()) + " exceeds bound";
  });
  h.check(8, "example3-bpol1-bound", "paper",
          e3.at("bound_4_2").get<std::string>(), [&] {
            return bpol1_bound(4, 2).str();
          });
}

void criterion9(Harness& h) {
  h.check(9, "oracle-kal-agreement", "derived", "all words agree", [&] {
    struct Config {
      CompleteDfa dfaK, dfaL;
    };
    Alphabet alph("abc");
    std::vector<Config> configs;
    configs.push_back({prop2_K(2), prop2_L(2)});
    configs.push_back({prop2_K(3), prop2_L(2)});
    configs.push_back({mod_count_dfa('b', 2, alph), mod_count_dfa('c', 2, alph)});
    configs.push_back({content_dfa("ab", alph), content_dfa("ac", alph)});
    for (auto const& cfg : configs) {
      auto kal = kal_construct(cfg.dfaK, cfg.dfaL, 'a');
      auto langK = syntactic_monoid(cfg.dfaK);
      auto langL = syntactic_monoid(cfg.dfaL);
      std::size_t bad = 0;
      all_words_upto(alph, 6, [&](Word const& w) {
        bool direct = accepts(kal, w);
        bool via_mu = mu_recognizes(langK, langL, 'a', w);
        bool brute = split_oracle(cfg.dfaK, cfg.dfaL, 'a', w);
        if (direct != brute || via_mu != brute) {
          ++bad;
        }
      });
      if (bad != 0) {
        return num(bad) + " disagreements";
      }
    }
    return std::string("all words agree");
  });

  h.check(9, "oracle-mu-scan-vs-fold", "derived", "1000/1000 agree", [&] {
    std::mt19937 rng(20240902);
    Alphabet alph("abc");
    auto langK = mod_lang('b', 2);
    auto langL = mod_lang('c', 3);
    auto langB = syntactic_monoid(content_dfa("ab", alph));
    auto langC = syntactic_monoid(content_dfa("ac", alph));
    int ok = 0;
    for (int i = 0; i < 1000; ++i) {
      Word w = random_word(rng, alph, 12);
      bool agree1 = mu_of_word(langK, langL, 'a', w) ==
                    mu_scan(langK, langL, 'a', w);
      bool agree2 = mu_of_word(langB, langC, 'a', w) ==
                    mu_scan(langB, langC, 'a', w);
      if (agree1 && agree2) {
        ++ok;
      }
    }
    return num(ok) + "/1000 agree";
  });

  h.check(9, "oracle-schutz-associativity", "derived", "1000/1000 associative",
          [&] {
            std::mt19937 rng(20240903);
            auto z2 = mod_lang('b', 2).hom.target;
            SchutzContext ctx{z2, z2};
            std::uniform_int_distribution<std::uint32_t> ed(0, 1);
            std::uniform_int_distribution<std::uint32_t> bd(0, 15);
            auto rand_elem = [&] {
              SchutzElement e;
              e.p11 = ed(rng);
              e.p22 = ed(rng);
              e.p12 = Bitset(4);
              std::uint32_t bits = bd(rng);
              for (std::uint32_t b = 0; b < 4; ++b) {
                if ((bits >> b) & 1) {
                  e.p12.set(b);
                }
              }
              return e;
            };
            int ok = 0;
            for (int i = 0; i < 1000; ++i) {
              auto p = rand_elem(), q = rand_elem(), r = rand_elem();
              if (ctx.mul(ctx.mul(p, q), r) == ctx.mul(p, ctx.mul(q, r))) {
                ++ok;
              }
            }
            return num(ok) + "/1000 associative";
          });

  h.check(9, "oracle-minimize-properties", "derived", "100/100 pass", [&] {
    std::mt19937 rng(20240904);
    Alphabet alph("abc");
    int ok = 0;
    for (int i = 0; i < 100; ++i) {
      auto d = random_dfa(rng, 5, alph);
      auto m1 = minimize(d);
      auto m2 = minimize(m1);
      bool idempotent = m2.state_count == m1.state_count &&
                        m2.delta == m1.delta && m2.finals == m1.finals &&
                        m2.initial == m1.initial;
      if (idempotent && equivalent(d, m1)) {
        ++ok;
      }
    }
    return num(ok) + "/100 pass";
  });
}

}  // namespace

VerifyReport verify_paper(nlohmann::json const& expected) {
  Harness h(expected);
  try {
    criterion1(h);
    criterion2(h);
    criterion3(h);
    criterion45(h);
    criterion6(h);
    criterion7(h);
    criterion8(h);
    criterion9(h);
  } catch (std::exception const& e) {
    CheckResult r;
    r.criterion = 0;
    r.name = "harness";
    r.provenance = "derived";
    r.expected = "no harness error";
    r.computed = std::string("error: ") + e.what();
    r.pass = false;
    VerifyReport rep = h.take();
    rep.checks.push_back(std::move(r));
    return rep;
  }
  return h.take();
}

void print_report(std::ostream& out, VerifyReport const& report) {
  for (auto const& c : report.checks) {
    out << (c.pass ? "[PASS]" : "[FAIL]") << " c" << c.criterion << ' '
        << c.name << " expected=\"" << c.expected << "\" computed=\""
        << c.computed << "\" (" << c.provenance << ")\n";
  }
  out << (report.overall() ? "OVERALL PASS" : "OVERALL FAIL") << '\n';
}

nlohmann::json report_to_json(VerifyReport const& report) {
  nlohmann::json j;
  j["overall"] = report.overall();
  auto checks = nlohmann::json::array();
  for (auto const& c : report.checks) {
    checks.push_back({{"criterion", c.criterion},
                      {"name", c.name},
                      {"provenance", c.provenance},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass}});
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace kal
