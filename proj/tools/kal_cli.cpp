// Command-line front end: DFA algebra, syntactic monoids, Schutzenberger
// products and the paper-reproduction harness.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error,
// 3 size limit exceeded.

#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kal/bpol1.hpp"
#include "kal/constructions.hpp"
#include "kal/dfa.hpp"
#include "kal/errors.hpp"
#include "kal/monoid.hpp"
#include "kal/schutz.hpp"
#include "kal/verify.hpp"

namespace {

kal::CompleteDfa load_dfa(std::string const& path) {
  if (path == "-") {
    return kal::parse_dfa(std::cin);
  }
  return kal::parse_dfa_file(path);
}

kal::RecognizedLanguage language_of(std::string const& path) {
  return kal::syntactic_monoid(load_dfa(path));
}

void emit_monoid(kal::FiniteMonoid const& m, kal::MonoidHom const* hom,
                 std::vector<std::uint32_t> const* accept) {
  std::cout << kal::monoid_to_json(m, hom, accept).dump(2) << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"Toolkit for regular languages and their algebraic invariants"};
  app.require_subcommand(1);

  // minimize
  std::string min_path;
  auto* cmd_min = app.add_subcommand("minimize", "Minimal complete DFA");
  cmd_min->add_option("dfa", min_path, "DFA file ('-' for stdin)")->required();

  // kal
  std::string kal_k, kal_l;
  std::string kal_marker = "a";
  bool kal_minimize = false;
  auto* cmd_kal =
      app.add_subcommand("kal", "Pair/subset DFA for the marked concatenation");
  cmd_kal->add_option("dfaK", kal_k, "DFA file for K")->required();
  cmd_kal->add_option("dfaL", kal_l, "DFA file for L")->required();
  cmd_kal->add_option("--marker", kal_marker, "marker letter")->required();
  cmd_kal->add_flag("--minimize", kal_minimize, "minimize the result");

  // monoid
  std::string mon_path;
  auto* cmd_mon = app.add_subcommand("monoid", "Syntactic monoid of a DFA");
  cmd_mon->add_option("dfa", mon_path, "DFA file")->required();

  // schutz
  std::string sch_m, sch_n;
  bool sch_enum = false;
  std::size_t sch_cap = kal::kDefaultCap;
  auto* cmd_sch = app.add_subcommand("schutz", "Schutzenberger product M ◊ N");
  cmd_sch->add_option("monM", sch_m, "monoid JSON for M")->required();
  cmd_sch->add_option("monN", sch_n, "monoid JSON for N")->required();
  cmd_sch->add_flag("--enumerate", sch_enum, "emit the full product table");
  cmd_sch->add_option("--cap", sch_cap, "materialization cap (elements)");

  // mu-image
  std::string mu_k, mu_l;
  std::string mu_marker = "a";
  bool mu_elements = false;
  std::size_t mu_cap = kal::kDefaultCap;
  auto* cmd_mu = app.add_subcommand(
      "mu-image", "Image of the mu homomorphism into M ◊ N");
  cmd_mu->add_option("dfaK", mu_k, "DFA file for K")->required();
  cmd_mu->add_option("dfaL", mu_l, "DFA file for L")->required();
  cmd_mu->add_option("--marker", mu_marker, "marker letter")->required();
  cmd_mu->add_flag("--elements", mu_elements, "also list matrix elements");
  cmd_mu->add_option("--cap", mu_cap, "materialization cap (elements)");

  // green
  std::string green_path;
  auto* cmd_green =
      app.add_subcommand("green", "Green's relation summary of a monoid");
  cmd_green->add_option("monoid", green_path, "monoid JSON file")->required();

  // gen
  auto* cmd_gen = app.add_subcommand("gen", "Witness language generators");
  cmd_gen->require_subcommand(1);
  std::uint32_t gen_k = 2, gen_ell = 2, gen_mod = 2;
  std::string gen_letter = "b", gen_letters, gen_alphabet = "abc";
  auto* gen_p2k = cmd_gen->add_subcommand("prop2k", "reset/increment witness K");
  gen_p2k->add_option("--k", gen_k, "state count")->required();
  auto* gen_p2l = cmd_gen->add_subcommand("prop2l", "increment/send witness L");
  gen_p2l->add_option("--ell", gen_ell, "state count")->required();
  auto* gen_mc = cmd_gen->add_subcommand("modcount", "letter count mod m");
  gen_mc->add_option("--letter", gen_letter, "counted letter")->required();
  gen_mc->add_option("--mod", gen_mod, "modulus")->required();
  gen_mc->add_option("--alphabet", gen_alphabet, "alphabet letters");
  auto* gen_star = cmd_gen->add_subcommand("star", "B* over A");
  gen_star->add_option("--letters", gen_letters, "letters of B")->required();
  gen_star->add_option("--alphabet", gen_alphabet, "alphabet letters");
  auto* gen_cont = cmd_gen->add_subcommand("content", "words with content B");
  gen_cont->add_option("--letters", gen_letters, "letters of B")->required();
  gen_cont->add_option("--alphabet", gen_alphabet, "alphabet letters");

  // xi
  std::string xi_variety = "sl", xi_alphabet = "ab", xi_monoid_path;
  std::size_t xi_cap = kal::kDefaultCap;
  auto* cmd_xi = app.add_subcommand(
      "xi", "Free monoid image for the first polynomial level");
  cmd_xi->add_option("--variety", xi_variety,
                     "sl, trivial, or file (with --monoid)");
  cmd_xi->add_option("--alphabet", xi_alphabet, "alphabet letters");
  cmd_xi->add_option("--monoid", xi_monoid_path,
                     "monoid JSON with letter images (variety 'file')");
  cmd_xi->add_option("--cap", xi_cap, "materialization cap (elements)");

  // verify
  bool verify_json = false;
  std::string verify_expected;
  auto* cmd_verify =
      app.add_subcommand("verify", "Run the full reproduction suite");
  cmd_verify->add_flag("--json", verify_json, "emit the report as JSON");
  cmd_verify->add_option("--expected", verify_expected,
                         "expected-values JSON file");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_min->parsed()) {
    kal::print_dfa(std::cout, kal::minimize(load_dfa(min_path)));
  } else if (cmd_kal->parsed()) {
    if (kal_marker.size() != 1) {
      throw kal::InputError("marker must be a single letter");
    }
    auto out = kal::kal_construct(load_dfa(kal_k), load_dfa(kal_l),
                                  kal_marker[0]);
    if (kal_minimize) {
      out = kal::minimize(out);
    }
    kal::print_dfa(std::cout, out);
  } else if (cmd_mon->parsed()) {
    auto lang = language_of(mon_path);
    emit_monoid(*lang.hom.target, &lang.hom, &lang.accept);
  } else if (cmd_sch->parsed()) {
    auto pm = kal::monoid_from_json_file(sch_m);
    auto pn = kal::monoid_from_json_file(sch_n);
    kal::SchutzContext ctx{pm.monoid, pn.monoid};
    if (sch_enum) {
      auto full = kal::schutz_enumerate(ctx, sch_cap);
      emit_monoid(*full, nullptr, nullptr);
    } else {
      kal::BigInt size = kal::BigInt(ctx.m()) * ctx.n();
      size <<= ctx.mn();
      std::cout << "size " << size.str() << '\n';
    }
  } else if (cmd_mu->parsed()) {
    if (mu_marker.size() != 1) {
      throw kal::InputError("marker must be a single letter");
    }
    auto langK = language_of(mu_k);
    auto langL = language_of(mu_l);
    auto img = kal::mu_image(langK, langL, mu_marker[0], mu_cap);
    auto j = kal::monoid_to_json(*img.monoid, &img.hom, &img.accept);
    if (mu_elements) {
      auto elems = nlohmann::json::array();
      for (auto const& e : img.elements) {
        elems.push_back(kal::schutz_element_to_json(e, img.ctx.n()));
      }
      j["elements"] = std::move(elems);
    }
    std::cout << j.dump(2) << '\n';
  } else if (cmd_green->parsed()) {
    auto pm = kal::monoid_from_json_file(green_path);
    auto g = kal::green_summary(*pm.monoid);
    nlohmann::json j{{"jTrivial", g.j_trivial},
                     {"isGroup", g.is_group},
                     {"rho", g.rho},
                     {"lambda", g.lambda}};
    std::cout << j.dump(2) << '\n';
  } else if (cmd_gen->parsed()) {
    kal::CompleteDfa out;
    if (gen_p2k->parsed()) {
      out = kal::prop2_K(gen_k);
    } else if (gen_p2l->parsed()) {
      out = kal::prop2_L(gen_ell);
    } else if (gen_mc->parsed()) {
      if (gen_letter.size() != 1) {
        throw kal::InputError("--letter must be a single letter");
      }
      out = kal::mod_count_dfa(gen_letter[0], gen_mod,
                               kal::Alphabet(gen_alphabet));
    } else if (gen_star->parsed()) {
      out = kal::star_dfa(gen_letters, kal::Alphabet(gen_alphabet));
    } else {
      out = kal::content_dfa(gen_letters, kal::Alphabet(gen_alphabet));
    }
    kal::print_dfa(std::cout, out);
  } else if (cmd_xi->parsed()) {
    kal::MonoidHom hom;
    if (xi_variety == "sl") {
      hom = kal::sl_free_monoid(kal::Alphabet(xi_alphabet));
    } else if (xi_variety == "trivial") {
      auto m = std::make_shared<kal::FiniteMonoid>();
      kal::Alphabet alph(xi_alphabet);
      hom = kal::MonoidHom{std::move(m), alph,
                           std::vector<std::uint32_t>(alph.size(), 0)};
    } else if (xi_variety == "file") {
      auto pm = kal::monoid_from_json_file(xi_monoid_path);
      if (!pm.has_hom) {
        throw kal::InputError("monoid JSON must carry letter images for xi");
      }
      hom = pm.hom;
    } else {
      throw kal::InputError("unknown variety: " + xi_variety);
    }
    auto xi = kal::xi_image(hom, xi_cap);
    auto j = kal::monoid_to_json(*xi.monoid, &xi.hom, nullptr);
    j["bound"] = kal::bpol1_bound(hom.target->size, hom.alphabet.size()).str();
    std::cout << j.dump(2) << '\n';
  } else if (cmd_verify->parsed()) {
    auto report = kal::verify_paper(kal::load_expected(verify_expected));
    if (verify_json) {
      std::cout << kal::report_to_json(report).dump(2) << '\n';
    } else {
      kal::print_report(std::cout, report);
    }
    return report.overall() ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (kal::SizeLimitError const& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return 3;
  } catch (kal::InputError const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
