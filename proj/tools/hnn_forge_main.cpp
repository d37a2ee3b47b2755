// hnn-forge: exact computations in HNN extensions Gamma = HNN(G, H, theta).
//
//   hnn-forge --instance <bs:m,n | finite:path | example5> <subcommand> ...
//
// Subcommands: nf <word>, tree --radius k, analyze, verify-example5,
// bs-chain --direction d --steps s.  Exit codes: 0 success, 1 check or
// runtime failure, 2 usage error, 3 instance-validation error.
#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "hnn/bs_group.hpp"
#include "hnn/errors.hpp"
#include "hnn/example5_group.hpp"
#include "hnn/example5_suite.hpp"
#include "hnn/finite_group.hpp"
#include "hnn/membership.hpp"
#include "hnn/report.hpp"
#include "hnn/token_io.hpp"
#include "hnn/tree.hpp"
#include "hnn/word.hpp"

namespace {

// Errors that should surface as exit code 2 (bad invocation) rather than 3
// (a recognized instance selector that fails validation).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Instance =
    std::variant<hnn::BsGroup, hnn::FiniteGroup, hnn::Example5Group>;

long long parse_int(std::string_view text, const char* what) {
  long long value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw hnn::ValidationError(std::string("instance selector: '") +
                               std::string(text) + "' is not an integer (" +
                               what + ")");
  return value;
}

Instance make_instance(const std::string& selector) {
  if (selector == "example5") return hnn::Example5Group{};
  if (selector.rfind("bs:", 0) == 0) {
    const std::string body = selector.substr(3);
    const auto comma = body.find(',');
    if (comma == std::string::npos)
      throw hnn::ValidationError(
          "instance selector bs:m,n requires two comma-separated integers");
    const long long m = parse_int(body.substr(0, comma), "m");
    const long long n = parse_int(body.substr(comma + 1), "n");
    return hnn::BsGroup(m, n);
  }
  if (selector.rfind("finite:", 0) == 0)
    return hnn::FiniteGroup::from_json_file(selector.substr(7));
  throw UsageError("unknown instance selector '" + selector +
                   "'; expected bs:m,n, finite:path, or example5");
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw hnn::ResourceLimitError("cannot open output file: " + out_path);
  out << text;
}

template <hnn::Presentation P>
std::string run_nf(const P& p, const std::string& word_text) {
  const auto word = hnn::parse_word(p, word_text);
  const auto nf = hnn::normal_form(p, word);
  const auto stats = hnn::word_stats(p, nf);
  std::string out = hnn::print_normal_form(p, nf) + "\n";
  out += "stats: length=" + std::to_string(stats.length) +
         " type=" + std::to_string(stats.type) +
         " direction=" + std::to_string(stats.direction) +
         " initial_trivial=" + (stats.initial_trivial ? "true" : "false") +
         " end=" + p.print(stats.end) +
         " t_dagger_pos=" + (stats.in_t_dagger_pos ? "true" : "false") +
         " t_dagger_neg=" + (stats.in_t_dagger_neg ? "true" : "false") + "\n";
  return out;
}

template <hnn::Presentation P>
std::string run_tree(const P& p, std::size_t radius) {
  const hnn::TreeVertex<typename P::Elt> center{};
  return hnn::export_dot(p, hnn::ball(p, center, radius));
}

std::string run_bs_chain(const hnn::BsGroup& g, int direction,
                         std::size_t steps) {
  const auto chain = hnn::bs_chain(g.m(), g.n(), direction, steps);
  std::string out = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += ", ";
    out += chain[i].str();
  }
  out += "]\n";
  return out;
}

std::string run_verify(const hnn::Example5SuiteConfig& cfg, bool* passed) {
  const auto result = hnn::verify_example5_suite(cfg);
  std::string out;
  for (const auto& line : hnn::suite_ledger(result)) out += line + "\n";
  *passed = result.all_passed();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hnn-forge: exact Britton normal forms, Bass-Serre tree balls, and "
      "C*-simplicity evidence for HNN extensions"};
  app.require_subcommand(1);

  std::string selector;
  app.add_option("--instance", selector,
                 "instance selector: bs:m,n | finite:path | example5")
      ->required();
  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  std::size_t tau_length = 4;
  app.add_option("--tau-length", tau_length,
                 "conjugator search horizon (stable letters)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{8}));
  std::size_t x_len = 4;
  app.add_option("--x-len", x_len, "index-sequence length bound")
      ->check(CLI::Range(std::size_t{1}, std::size_t{6}));
  bool timing = false;
  app.add_flag("--timing", timing,
               "record wall-clock milliseconds in reports (off: pinned 0 "
               "for byte-stable output)");

  auto* nf_cmd =
      app.add_subcommand("nf", "reduce a word to Britton normal form");
  std::string word_text;
  nf_cmd->add_option("word", word_text, "whitespace-separated tokens")
      ->required();

  auto* tree_cmd =
      app.add_subcommand("tree", "export a Bass-Serre tree ball as DOT");
  std::size_t radius = 1;
  tree_cmd->add_option("--radius", radius, "ball radius around the base coset")
      ->check(CLI::Range(std::size_t{1}, std::size_t{6}));

  auto* analyze_cmd = app.add_subcommand(
      "analyze", "emit the C*-simplicity evidence report as JSON");
  std::size_t chain_steps = 10;
  analyze_cmd
      ->add_option("--chain-steps", chain_steps,
                   "containment-chain horizon for bs instances")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100}));

  auto* verify_cmd = app.add_subcommand(
      "verify-example5", "machine-check the example5 rewriting identities");

  auto* chain_cmd = app.add_subcommand(
      "bs-chain", "print the lattice containment chain of a bs instance");
  int direction = 1;
  chain_cmd->add_option("--direction", direction, "chain direction (+1 or -1)")
      ->check(CLI::IsMember({1, -1}));
  std::size_t steps = 10;
  chain_cmd->add_option("--steps", steps, "number of chain steps")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Instance inst = make_instance(selector);
    if (*nf_cmd) {
      emit(out_path, std::visit([&](const auto& g) {
             return run_nf(g, word_text);
           }, inst));
      return 0;
    }
    if (*tree_cmd) {
      emit(out_path, std::visit([&](const auto& g) {
             return run_tree(g, radius);
           }, inst));
      return 0;
    }
    if (*analyze_cmd) {
      hnn::AnalyzeConfig cfg;
      cfg.tau_length = tau_length;
      cfg.x_len = x_len;
      cfg.chain_steps = chain_steps;
      cfg.timing = timing;
      emit(out_path, std::visit([&](const auto& g) {
             return hnn::report_json(hnn::analyze(g, cfg));
           }, inst));
      return 0;
    }
    if (*verify_cmd) {
      if (!std::holds_alternative<hnn::Example5Group>(inst))
        throw UsageError("verify-example5 requires --instance example5");
      hnn::Example5SuiteConfig cfg;
      cfg.x_len = x_len;
      cfg.quasi_tau_length = tau_length;
      cfg.sweep_tau_length = tau_length;
      bool passed = false;
      emit(out_path, run_verify(cfg, &passed));
      return passed ? 0 : 1;
    }
    if (*chain_cmd) {
      const auto* bs = std::get_if<hnn::BsGroup>(&inst);
      if (bs == nullptr)
        throw UsageError("bs-chain requires --instance bs:m,n");
      emit(out_path, run_bs_chain(*bs, direction, steps));
      return 0;
    }
    throw UsageError("no subcommand selected");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hnn::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hnn::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hnn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
