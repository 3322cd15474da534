// Command line front end for the Schubert calculus library.
//
// Exit codes: 0 success, 1 a verification failed (witness printed),
// 2 usage or parse error.

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schubert/bruhat.hpp"
#include "schubert/cache.hpp"
#include "schubert/io.hpp"
#include "schubert/qorder.hpp"
#include "schubert/schubert_basis.hpp"
#include "schubert/tableaux.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!tok.empty()) out.push_back(std::stoi(tok));
      tok.clear();
    } else {
      tok += c;
    }
  }
  if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

Word parse_word(const std::string& text) {
  if (text.find(',') != std::string::npos) {
    auto vals = parse_int_list(text);
    return Word(vals.begin(), vals.end());
  }
  Word w;
  for (char c : text) {
    if (!isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("word must be digits or a comma-separated list");
    w.push_back(c - '0');
  }
  return w;
}

int print_report(const Report& report) {
  std::cout << report.to_json().dump(2) << "\n";
  if (!report.ok()) {
    std::cerr << "verification failed (" << report.failure_count << " failure(s))\n";
    return 1;
  }
  return 0;
}

void print_interval(const LabeledInterval& iv, bool dot, bool as_json) {
  if (dot) {
    std::cout << to_dot(iv);
  } else if (as_json) {
    std::cout << to_json(iv).dump(2) << "\n";
  } else {
    std::cout << "nodes: " << iv.nodes().size() << "\ncovers: " << iv.covers().size()
              << "\nmaximal chains: " << iv.maximal_chain_count().get_str() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Schubert-polynomial calculus and chain enumeration"};
  app.require_subcommand(1);
  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "Disable the persistent cache");

  std::string arg_w, arg_u, arg_v, arg_z, arg_e, arg_lam, arg_word, arg_checker;
  std::string arg_set, arg_colors;
  int arg_k = 0, arg_n = 4, arg_bound = 3, arg_tail = -1, arg_prefix = -1, arg_p = 1;
  bool flag_dot = false, flag_json = false, flag_interval = false, flag_rank = false;
  bool cache_stats = false, cache_clear = false;

  auto* poly = app.add_subcommand("poly", "Print the Schubert polynomial of w");
  poly->add_option("w", arg_w)->required();
  poly->add_flag("--json", flag_json);

  auto* schur = app.add_subcommand("schur", "Print the Schur polynomial of lambda in k variables");
  schur->add_option("lambda", arg_lam)->required();
  schur->add_option("k", arg_k)->required();
  schur->add_flag("--json", flag_json);

  auto* mult = app.add_subcommand("mult", "Expand S_u * S_v in the Schubert basis");
  mult->add_option("u", arg_u)->required();
  mult->add_option("v", arg_v)->required();
  mult->add_flag("--json", flag_json);

  auto* cnst = app.add_subcommand("const", "Print the structure constant c^w_{u v}");
  cnst->add_option("u", arg_u)->required();
  cnst->add_option("v", arg_v)->required();
  cnst->add_option("w", arg_w)->required();

  auto* skew = app.add_subcommand("skewcoef", "Print the skew coefficient c^zeta_lambda");
  skew->add_option("zeta", arg_z)->required();
  skew->add_option("lambda", arg_lam)->required();

  auto* interval = app.add_subcommand("interval", "Materialize the interval [u,w]");
  interval->add_option("u", arg_u)->required();
  interval->add_option("w", arg_w)->required();
  interval->add_option("--k", arg_k, "k-Bruhat order instead of full Bruhat");
  interval->add_flag("--dot", flag_dot);
  interval->add_flag("--json", flag_json);

  auto* chains = app.add_subcommand("chains", "Count colored chains from u to w");
  chains->add_option("u", arg_u)->required();
  chains->add_option("w", arg_w)->required();
  chains->add_option("--colors", arg_colors, "Comma-separated colour set")->required();

  auto* greedy = app.add_subcommand("greedy", "Print the greedy chain from w down to u");
  greedy->add_option("u", arg_u)->required();
  greedy->add_option("w", arg_w)->required();
  greedy->add_option("--k", arg_k)->required();

  auto* qord = app.add_subcommand("qorder", "Rank and intervals of the graded order");
  qord->add_option("zeta", arg_z)->required();
  qord->add_flag("--interval", flag_interval);
  qord->add_flag("--rank", flag_rank);
  qord->add_flag("--dot", flag_dot);
  qord->add_flag("--json", flag_json);

  auto* rsk = app.add_subcommand("rsk", "Schensted insertion of a word");
  rsk->add_option("word", arg_word)->required();

  auto* verify = app.add_subcommand("verify", "Run a checker and print its report");
  verify->add_option("checker", arg_checker,
                     "one of: chain_identity k_bruhat_equiv skew_invariance schensted_counting "
                     "disjointness cyclic_shift deletion_theorem psi_P")
      ->required();
  verify->add_option("--n", arg_n);
  verify->add_option("--colors", arg_colors);
  verify->add_option("--bound", arg_bound);
  verify->add_option("--u", arg_u);
  verify->add_option("--w", arg_w);
  verify->add_option("--k", arg_k);
  verify->add_option("--zeta", arg_z);
  verify->add_option("--eta", arg_e);
  verify->add_option("--p", arg_p);
  verify->add_option("--set", arg_set, "Listed elements of P");
  verify->add_option("--tail", arg_tail, "All integers above this bound also lie in P");
  verify->add_option("--prefix", arg_prefix, "Shorthand for P = [n]");

  auto* cache = app.add_subcommand("cache", "Inspect or clear the persistent cache");
  cache->add_flag("--stats", cache_stats);
  cache->add_flag("--clear", cache_clear);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::shared_ptr<DiskCache> disk;
  if (!no_cache) {
    disk = std::make_shared<DiskCache>(DiskCache::default_dir());
    disk->load();
    disk->install();
  }

  try {
    if (poly->parsed()) {
      SparsePolynomial f = schubert_polynomial(Permutation::parse(arg_w));
      std::cout << (flag_json ? to_json(f).dump() : f.to_string()) << "\n";
    } else if (schur->parsed()) {
      SparsePolynomial f = schur_polynomial(Partition::parse(arg_lam), arg_k);
      std::cout << (flag_json ? to_json(f).dump() : f.to_string()) << "\n";
    } else if (mult->parsed()) {
      const auto& e = structure_constants(Permutation::parse(arg_u), Permutation::parse(arg_v));
      if (flag_json) {
        std::cout << to_json(e).dump() << "\n";
      } else {
        for (const auto& [w, c] : e.coefficients())
          std::cout << w.to_oneline() << " " << c.get_str() << "\n";
      }
    } else if (cnst->parsed()) {
      std::cout << structure_constant(Permutation::parse(arg_u), Permutation::parse(arg_v),
                                      Permutation::parse(arg_w))
                       .get_str()
                << "\n";
    } else if (skew->parsed()) {
      std::cout << skew_coefficient(Permutation::parse(arg_z), Partition::parse(arg_lam)).get_str()
                << "\n";
    } else if (interval->parsed()) {
      Permutation u = Permutation::parse(arg_u), w = Permutation::parse(arg_w);
      LabeledInterval iv =
          arg_k > 0 ? LabeledInterval::k_bruhat(u, w, arg_k) : LabeledInterval::bruhat(u, w);
      print_interval(iv, flag_dot, flag_json);
    } else if (chains->parsed()) {
      Permutation u = Permutation::parse(arg_u), w = Permutation::parse(arg_w);
      std::vector<int> colors = parse_int_list(arg_colors);
      Int via_chains = count_colored_chains(u, w, colors);
      Int via_monk = count_colored_chains_monk(u, w, colors);
      if (via_chains != via_monk) {
        std::cerr << "internal cross-check failed: chains=" << via_chains.get_str()
                  << " monk=" << via_monk.get_str() << "\n";
        return 1;
      }
      std::cout << via_chains.get_str() << "\n";
    } else if (greedy->parsed()) {
      Permutation u = Permutation::parse(arg_u), w = Permutation::parse(arg_w);
      int width = std::max(u.degree(), w.degree());
      for (const auto& step : greedy_chain(u, w, arg_k))
        std::cout << step.to_oneline(width) << "\n";
    } else if (qord->parsed()) {
      Permutation zeta = Permutation::parse(arg_z);
      if (flag_interval) {
        print_interval(q_interval(zeta), flag_dot, flag_json);
      }
      if (flag_rank || !flag_interval) std::cout << q_rank(zeta) << "\n";
    } else if (rsk->parsed()) {
      auto [p, q] = schensted(parse_word(arg_word));
      std::cout << "P: " << p.to_string() << "\nQ: " << q.to_string() << "\nshape: "
                << p.shape().to_string() << "\n";
    } else if (verify->parsed()) {
      Report report;
      if (arg_checker == "chain_identity") {
        report = check_chain_identity(arg_n, parse_int_list(arg_colors));
      } else if (arg_checker == "k_bruhat_equiv") {
        report = check_k_bruhat_equiv(arg_n);
      } else if (arg_checker == "skew_invariance") {
        report = check_skew_invariance(arg_bound);
      } else if (arg_checker == "schensted_counting") {
        report = check_schensted_counting(Permutation::parse(arg_u), Permutation::parse(arg_w),
                                          arg_k);
      } else if (arg_checker == "disjointness") {
        report = check_disjointness(Permutation::parse(arg_z), Permutation::parse(arg_e));
      } else if (arg_checker == "cyclic_shift") {
        report = check_cyclic_shift(arg_n);
      } else if (arg_checker == "deletion_theorem") {
        report = check_deletion_theorem(arg_n);
      } else if (arg_checker == "psi_P") {
        VariableSplit split;
        if (arg_prefix >= 0)
          split = VariableSplit::prefix(arg_prefix);
        else if (arg_tail >= 0)
          split = VariableSplit::with_tail(parse_int_list(arg_set), arg_tail);
        else
          split = VariableSplit::finite(parse_int_list(arg_set));
        report = check_psi_P(arg_n, split);
      } else {
        std::cerr << "unknown checker: " << arg_checker << "\n";
        return 2;
      }
      return print_report(report);
    } else if (cache->parsed()) {
      DiskCache c(DiskCache::default_dir());
      if (cache_clear) {
        c.clear();
        std::cout << "cache cleared\n";
      }
      if (cache_stats || !cache_clear) {
        auto s = c.stats();
        std::cout << "schubert records: " << s.schubert_records
                  << "\nproduct records: " << s.product_records
                  << "\nmalformed lines: " << s.malformed << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
