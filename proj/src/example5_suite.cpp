#include "hnn/example5_suite.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "hnn/conjugators.hpp"
#include "hnn/example5_group.hpp"
#include "hnn/membership.hpp"
#include "hnn/parallel.hpp"
#include "hnn/token_io.hpp"
#include "hnn/word.hpp"

namespace hnn {

namespace {

using Elt = Example5Group::Elt;

// Conjugates h(x) along the reducer word and reports the failure, if any.
std::string reducer_case_failure(const Example5Group& g, std::uint64_t x) {
  const auto red = example5_reducer(g, x);
  if (!is_reduced(g, red.word))
    return "reducer word for " + xseq::print(x) + " is not Britton-reduced";
  Word<Elt> w = word_inverse(g, red.word);
  w.push_back(Letter<Elt>::base_letter(g.gen(x)));
  w.insert(w.end(), red.word.begin(), red.word.end());
  const auto nf = normal_form(g, w);
  const Elt expected = red.landing == 0 ? g.g0() : g.g1();
  if (!nf.prefix.empty() || !(nf.end == expected))
    return "conjugating " + xseq::print(x) + " along r = " +
           print_word(g, red.word) + " gave " +
           (nf.prefix.empty() ? g.print(nf.end) : "a non-base element") +
           ", expected " + g.print(expected);
  return {};
}

SuiteCheck check_reducer_identity(const Example5Group& g,
                                  const Example5SuiteConfig& cfg) {
  SuiteCheck check{"reducer-identity", false, {}};
  std::unordered_map<std::string, std::uint64_t> words_seen;
  std::size_t cases = 0;
  for (const auto x : xseq::all_up_to_length(static_cast<int>(cfg.x_len))) {
    if (auto failure = reducer_case_failure(g, x); !failure.empty()) {
      check.detail = failure;
      return check;
    }
    const auto key = print_word(g, example5_reducer(g, x).word);
    if (const auto [it, inserted] = words_seen.emplace(key, x); !inserted) {
      check.detail = "reducer words collide: " + xseq::print(it->second) +
                     " and " + xseq::print(x) + " both map to " + key;
      return check;
    }
    ++cases;
  }
  check.passed = true;
  check.detail = std::to_string(cases) +
                 " sequences verified; reducer words pairwise distinct";
  return check;
}

SuiteCheck check_generator_survival(const Example5Group& g,
                                    const Example5SuiteConfig& cfg) {
  SuiteCheck check{"generator-survival", false, {}};
  ConjugatorEnumerator<Example5Group> en;
  en.max_tau_length = cfg.quasi_tau_length;
  std::size_t neg = 0;
  std::size_t pos = 0;
  for (const auto x : xseq::all_up_to_length(3)) {
    const int rank = xseq::sector(x);
    if (rank != 0 && rank != 2) continue;
    const int eps = rank == 0 ? -1 : +1;
    const auto outcome = quasi_kernel_test(g, g.gen(x), eps, en);
    if (outcome.ejected()) {
      check.detail = xseq::print(x) + " was ejected from the K_" +
                     (eps == -1 ? std::string("{-1}") : std::string("1")) +
                     " intersection by r = " + print_word(g, outcome.witness);
      return check;
    }
    (eps == -1 ? neg : pos) += 1;
  }
  check.passed = true;
  check.detail = std::to_string(neg) +
                 " sector-(0,0) generators survive the K_{-1} enumeration "
                 "and " +
                 std::to_string(pos) +
                 " sector-(0,1) generators survive the K_1 enumeration at "
                 "tau-length " +
                 std::to_string(cfg.quasi_tau_length);
  return check;
}

SuiteCheck check_ejection_sweep(const Example5Group& g,
                                const Example5SuiteConfig& cfg) {
  SuiteCheck check{"ejection-sweep", false, {}};

  // The sixteen generators of the depth-2 base group, ascending.
  auto gens = xseq::all_up_to_length(2);
  std::sort(gens.begin(), gens.end());
  const std::size_t n = std::size_t{4} << gens.size();

  enum : std::uint8_t { kOk, kSpan, kTooLong, kWrongRange, kNotEjected, kThrew };
  std::vector<std::uint8_t> status(n, kOk);
  std::vector<std::uint8_t> wlen(n, 0);

  parallel_chunks(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      Elt a;
      a.e0 = static_cast<std::uint8_t>((idx >> 16) & 1);
      a.e1 = static_cast<std::uint8_t>((idx >> 17) & 1);
      for (std::size_t b = 0; b < gens.size(); ++b)
        if (idx & (std::size_t{1} << b)) a.gens.push_back(gens[b]);
      try {
        if (g.in_sector_span(a, 0)) {
          status[idx] = kSpan;
          continue;
        }
        const auto witness = example5_ejection_witness(g, a);
        std::size_t stable = 0;
        for (const auto& l : witness) stable += l.stable ? 1 : 0;
        wlen[idx] = static_cast<std::uint8_t>(stable);
        if (stable > cfg.sweep_tau_length) {
          status[idx] = kTooLong;
          continue;
        }
        const auto stats = word_stats(g, normal_form(g, witness));
        if (stats.in_t_dagger_neg) {
          status[idx] = kWrongRange;
          continue;
        }
        if (!conjugate_escapes_h(g, a, witness)) status[idx] = kNotEjected;
      } catch (const Error&) {
        status[idx] = kThrew;
      }
    }
  });

  std::size_t span = 0;
  std::size_t ejected = 0;
  std::size_t max_len = 0;
  for (std::size_t idx = 0; idx < n; ++idx) {
    switch (status[idx]) {
      case kSpan:
        ++span;
        continue;
      case kOk:
        ++ejected;
        max_len = std::max(max_len, static_cast<std::size_t>(wlen[idx]));
        continue;
      default:
        break;
    }
    Elt a;
    a.e0 = static_cast<std::uint8_t>((idx >> 16) & 1);
    a.e1 = static_cast<std::uint8_t>((idx >> 17) & 1);
    for (std::size_t b = 0; b < gens.size(); ++b)
      if (idx & (std::size_t{1} << b)) a.gens.push_back(gens[b]);
    const char* why = status[idx] == kTooLong    ? "witness exceeds the bound"
                      : status[idx] == kWrongRange
                          ? "witness lies in T_{-1}^dagger"
                      : status[idx] == kThrew ? "witness computation threw"
                                              : "witness fails to eject";
    check.detail = std::string(why) + " at element " + g.print(a);
    if (status[idx] != kThrew)
      check.detail +=
          " (witness " + print_word(g, example5_ejection_witness(g, a)) + ")";
    return check;
  }
  if (span != 16) {
    check.detail = "expected the sector-(0,0) span to meet the sweep in 16 "
                   "elements, found " +
                   std::to_string(span);
    return check;
  }
  check.passed = true;
  check.detail = std::to_string(ejected) + " of " + std::to_string(n) +
                 " canonical elements ejected with re-verified witnesses "
                 "(max tau-length " +
                 std::to_string(max_len) +
                 "); the 16-element sector-(0,0) span survives";
  return check;
}

SuiteCheck check_conjugation_length(const Example5Group& g,
                                    const Example5SuiteConfig& cfg) {
  SuiteCheck check{"conjugation-length", false, {}};
  const auto pool = xseq::all_up_to_length(4);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t done = 0;
  while (done < cfg.random_pairs) {
    const std::uint64_t x = pool[pick(rng)];
    const std::uint64_t y = pool[pick(rng)];
    if (xseq::sector(x) == xseq::sector(y))
      continue;  // resample: the formula needs distinct leading pairs
    const auto r = example5_reducer(g, x).word;
    Word<Elt> w = word_inverse(g, r);
    w.push_back(Letter<Elt>::base_letter(g.gen(y)));
    w.insert(w.end(), r.begin(), r.end());
    const auto nf = normal_form(g, w);
    const bool single_gen = nf.prefix.empty() && nf.end.e0 == 0 &&
                            nf.end.e1 == 0 && nf.end.gens.size() == 1;
    const int want = xseq::length(y) + xseq::length(x);
    if (!single_gen || xseq::length(nf.end.gens[0]) != want) {
      check.detail = "conjugating " + xseq::print(y) + " along the reducer "
                     "of " +
                     xseq::print(x) + " gave " +
                     (nf.prefix.empty() ? g.print(nf.end)
                                        : "a non-base element") +
                     ", expected a single generator of length " +
                     std::to_string(want);
      return check;
    }
    ++done;
  }
  check.passed = true;
  check.detail = std::to_string(done) +
                 " random pairs with distinct leading pairs satisfy "
                 "l(y') = l(y) + l(x)";
  return check;
}

SuiteCheck check_closure_sizes(const Example5Group& g) {
  SuiteCheck check{"closure-sizes", false, {}};
  std::vector<Elt> depth1;
  for (const auto x : xseq::all_up_to_length(1)) depth1.push_back(g.gen(x));
  const auto hbar = example5_closure(g, depth1, 64);
  const auto full = example5_closure(g, example5_g_generators(g, 1), 128);
  std::vector<Elt> sector0;
  for (const auto x : xseq::all_up_to_length(2))
    if (xseq::sector(x) == 0) sector0.push_back(g.gen(x));
  const auto span = example5_closure(g, sector0, 64);
  const auto trivial = example5_closure(g, {}, 8);

  std::unordered_set<std::string> printed;
  for (const auto& a : full) printed.insert(g.print(a));

  if (hbar.size() != 16 || full.size() != 64 || span.size() != 16 ||
      trivial.size() != 1 || printed.size() != full.size()) {
    check.detail = "sizes (" + std::to_string(hbar.size()) + ", " +
                   std::to_string(full.size()) + ", " +
                   std::to_string(span.size()) + ", " +
                   std::to_string(trivial.size()) + "), " +
                   std::to_string(printed.size()) +
                   " distinct canonical strings; expected (16, 64, 16, 1) "
                   "and 64";
    return check;
  }
  check.passed = true;
  check.detail = "depth-1 subgroup closures have sizes 16 (no stable "
                 "letters), 64 (with g0, g1), 16 (sector-(0,0) span), 1 "
                 "(empty set); all 64 canonical forms distinct";
  return check;
}

SuiteCheck check_negative_control(const Example5SuiteConfig& cfg) {
  SuiteCheck check{"negative-control", false, {}};
  const Example5Group broken(Example5Rules{false});
  const std::size_t len = std::min<std::size_t>(cfg.x_len, 2);
  for (const auto x : xseq::all_up_to_length(static_cast<int>(len))) {
    if (auto failure = reducer_case_failure(broken, x); !failure.empty()) {
      check.passed = true;
      check.detail =
          "disabling the conjugation flips breaks the reducer identity: " +
          failure;
      return check;
    }
  }
  check.detail = "mutated rewriting rules left every reducer identity "
                 "intact; the control detects nothing";
  return check;
}

}  // namespace

SuiteResult verify_example5_suite(const Example5SuiteConfig& cfg) {
  const Example5Group g;
  SuiteResult result;
  const auto run = [&result](SuiteCheck check) {
    result.checks.push_back(std::move(check));
    return result.checks.back().passed;
  };
  if (!run(check_reducer_identity(g, cfg))) return result;
  if (!run(check_generator_survival(g, cfg))) return result;
  if (!run(check_ejection_sweep(g, cfg))) return result;
  if (!run(check_conjugation_length(g, cfg))) return result;
  if (!run(check_closure_sizes(g))) return result;
  run(check_negative_control(cfg));
  return result;
}

std::vector<std::string> suite_ledger(const SuiteResult& result) {
  std::vector<std::string> lines;
  lines.reserve(result.checks.size());
  for (const auto& c : result.checks)
    lines.push_back((c.passed ? "[PASS] " : "[FAIL] ") + c.name + ": " +
                    c.detail);
  return lines;
}

}  // namespace hnn
