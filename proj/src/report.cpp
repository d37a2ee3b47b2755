#include "hnn/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "hnn/conjugators.hpp"
#include "hnn/errors.hpp"
#include "hnn/membership.hpp"
#include "hnn/token_io.hpp"
#include "hnn/word.hpp"

namespace hnn {

std::string verdict_string(SimplicityVerdict v) {
  switch (v) {
    case SimplicityVerdict::kCSimpleCertified: return "CSimpleCertified";
    case SimplicityVerdict::kCSimpleEvidence: return "CSimpleEvidence";
    case SimplicityVerdict::kNotCSimpleCertified: return "NotCSimpleCertified";
    case SimplicityVerdict::kNotCSimpleEvidence: return "NotCSimpleEvidence";
    case SimplicityVerdict::kUnknown: break;
  }
  return "Unknown";
}

std::string verdict_string(TraceVerdict v) {
  switch (v) {
    case TraceVerdict::kUniqueTraceCertified: return "UniqueTraceCertified";
    case TraceVerdict::kUniqueTraceEvidence: return "UniqueTraceEvidence";
    case TraceVerdict::kNoUniqueTraceCertified: return "NoUniqueTraceCertified";
    case TraceVerdict::kNoUniqueTraceEvidence:
      return "NoUniqueTraceEvidence";
    case TraceVerdict::kUnknown: break;
  }
  return "Unknown";
}

std::string report_json(const EvidenceReport& report) {
  nlohmann::ordered_json j;
  j["instance"] = report.instance;
  j["verdict"]["cstar_simple"] = verdict_string(report.cstar_simple);
  j["verdict"]["unique_trace"] = verdict_string(report.unique_trace);
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : report.witnesses)
    j["witnesses"].push_back({{"claim", w.claim},
                              {"witness", w.witness},
                              {"citation", w.citation}});
  j["bounds"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.bounds) j["bounds"][key] = value;
  j["elapsed_ms"] = report.elapsed_ms;
  return j.dump(2) + "\n";
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ms_since(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                            start)
          .count());
}

std::string chain_string(const std::vector<BigInt>& chain) {
  std::string s = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i != 0) s += ", ";
    s += chain[i].str();
  }
  return s + "]";
}

template <class P>
std::size_t conjugator_count(const P& p, const ConjugatorEnumerator<P>& en) {
  std::size_t n = 0;
  for_each_conjugator(p, en, [&n](const Word<typename P::Elt>&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace

EvidenceReport analyze(const BsGroup& g, const AnalyzeConfig& cfg) {
  const auto start = Clock::now();
  EvidenceReport r;
  r.instance = g.name();
  const auto verdict = bs_verdict(g.m(), g.n(), cfg.chain_steps);
  const std::string mn = "m = " + g.m().str() + ", n = " + g.n().str();
  switch (verdict.kind) {
    case BsKind::kSolvableNotCSimple:
      r.cstar_simple = SimplicityVerdict::kNotCSimpleCertified;
      r.unique_trace = TraceVerdict::kNoUniqueTraceCertified;
      r.witnesses.push_back(
          {"min(|m|, |n|) = 1: the subgroup or its stable image is the whole "
           "base group, the extension is solvable and amenable, hence not "
           "C*-simple",
           mn, "bs-simplicity-closed-form"});
      r.witnesses.push_back(
          {"a nontrivial amenable group carries its canonical trace next to "
           "many others, so the trace is not unique",
           mn, "kernel-unique-trace-criterion"});
      break;
    case BsKind::kNormalAbelianHNotCSimple:
      r.cstar_simple = SimplicityVerdict::kNotCSimpleCertified;
      r.unique_trace = TraceVerdict::kNoUniqueTraceCertified;
      r.witnesses.push_back(
          {"|m| = |n|: conjugation by the stable letter preserves "
           "H = <g^m>, so H is normal in the extension and equals the "
           "kernel",
           mn, "bs-simplicity-closed-form"});
      r.witnesses.push_back(
          {"a nontrivial normal abelian kernel defeats both C*-simplicity "
           "and trace uniqueness",
           "kernel generated by " + g.print(g.m()),
           "kernel-unique-trace-criterion"});
      break;
    case BsKind::kCSimpleEvidence: {
      r.cstar_simple = SimplicityVerdict::kCSimpleEvidence;
      r.unique_trace = TraceVerdict::kUniqueTraceEvidence;
      r.witnesses.push_back(
          {"both containment chains strictly increase for " +
               std::to_string(cfg.chain_steps) +
               " steps: evidence that the quasi-kernel intersections are "
               "trivial",
           "direction +1: " + chain_string(verdict.chain_pos) +
               "; direction -1: " + chain_string(verdict.chain_neg),
           "bs-simplicity-closed-form"});
      r.witnesses.push_back(
          {"the chains follow the exact lattice recursion, cross-checked "
           "against the conjugation oracle; the coarser closed-form "
           "exponent bound sits one stage ahead and is implied",
           "stage-1 lattices: " + verdict.chain_pos[1].str() +
               "Z (direction +1), " + verdict.chain_neg[1].str() +
               "Z (direction -1)",
           "bs-simplicity-closed-form"});
      ConjugatorEnumerator<BsGroup> en;
      en.max_tau_length = cfg.tau_length;
      const auto kernel = kernel_test(g, g.m(), en);
      if (!kernel.ejected())
        throw ContractError(
            "diverging chains promised an ejection of g^m from the kernel, "
            "but none was found within the bound");
      r.witnesses.push_back(
          {"the subgroup generator g^m is ejected from the kernel "
           "intersection by a short conjugator",
           "g = " + g.print(g.m()) + "; r = " + print_word(g, kernel.witness),
           "kernel-unique-trace-criterion"});
      std::vector<Word<BigInt>> f_set{
          {Letter<BigInt>::base_letter(BigInt(1))}};
      const auto powers = powers_search(g, f_set, PowersMode::kAvoidG, en);
      if (powers.witness)
        r.witnesses.push_back(
            {"a dispersion witness conjugates the base generator out of the "
             "base group",
             "g = " + print_word(g, *powers.witness) + " for F = {g^1}",
             "hnn-powers-dispersion"});
      break;
    }
  }
  r.bounds = {{"chain_steps", cfg.chain_steps},
              {"tau_length", cfg.tau_length}};
  if (cfg.timing) r.elapsed_ms = ms_since(start);
  return r;
}

EvidenceReport analyze(const FiniteGroup& g, const AnalyzeConfig& cfg) {
  const auto start = Clock::now();
  EvidenceReport r;
  r.instance = g.name();
  const auto verdict = finite_verdict(g);  // UnsupportedError if ascending

  std::string orders = "[";
  for (std::size_t i = 0; i < verdict.chain.size(); ++i) {
    if (i != 0) orders += ", ";
    orders += std::to_string(verdict.chain[i].size());
  }
  orders += "]";
  std::string limit = "{";
  for (std::size_t i = 0; i < verdict.kernel.size(); ++i) {
    if (i != 0) limit += ", ";
    limit += g.print(verdict.kernel[i]);
  }
  limit += "}";
  const std::size_t stabilization = verdict.chain.size() - 2;
  const std::size_t bound = stabilization + 1;

  r.witnesses.push_back(
      {"the conjugate-intersection chain H_0 > H_1 > ... stabilizes after " +
           std::to_string(stabilization) + " refinements",
       "subgroup orders " + orders, "descending-chain-criterion"});
  if (verdict.c_simple) {
    r.cstar_simple = SimplicityVerdict::kCSimpleCertified;
    r.unique_trace = TraceVerdict::kUniqueTraceCertified;
    r.witnesses.push_back(
        {"the stable limit is trivial, so every conjugate intersection "
         "collapses: C*-simplicity and the unique trace are certified for "
         "this finite-base instance",
         "limit = " + limit, "finite-intersection-equivalences"});
  } else {
    r.cstar_simple = SimplicityVerdict::kNotCSimpleCertified;
    r.unique_trace = TraceVerdict::kNoUniqueTraceCertified;
    r.witnesses.push_back(
        {"the stable limit is a nontrivial kernel: a normal amenable "
         "subgroup certifying failure of both C*-simplicity and trace "
         "uniqueness",
         "kernel = " + limit, "kernel-unique-trace-criterion"});
  }

  // Cross-check: exactly the limit elements survive every enumerated
  // conjugator at the stabilization bound.
  ConjugatorEnumerator<FiniteGroup> en;
  en.max_tau_length = bound;
  for (const auto& e : g.elements()) {
    const bool in_limit = std::find(verdict.kernel.begin(),
                                    verdict.kernel.end(),
                                    e) != verdict.kernel.end();
    const bool ejected = kernel_test(g, e, en).ejected();
    if (in_limit == ejected)
      throw ContractError(
          "finite membership cross-check disagrees with the chain limit at "
          "element " +
          g.print(e));
  }
  r.witnesses.push_back(
      {"membership cross-check at tau-length " + std::to_string(bound) +
           ": exactly the limit elements survive every enumerated "
           "conjugator",
       "all " + std::to_string(g.order()) + " base elements tested",
       "kernel-unique-trace-criterion"});

  r.bounds = {{"cross_check_tau_length", bound}};
  if (cfg.timing) r.elapsed_ms = ms_since(start);
  return r;
}

EvidenceReport analyze(const Example5Group& g, const AnalyzeConfig& cfg) {
  using Elt = Example5Group::Elt;
  const auto start = Clock::now();
  EvidenceReport r;
  r.instance = g.name();

  const Elt h00 = g.gen(xseq::pack({{0, 0}}));
  const Elt h01 = g.gen(xseq::pack({{0, 1}}));

  ConjugatorEnumerator<Example5Group> en;
  en.max_tau_length = cfg.tau_length;
  std::vector<WitnessLine> anomalies;

  const auto survive_neg = quasi_kernel_test(g, h00, -1, en);
  const auto survive_pos = quasi_kernel_test(g, h01, +1, en);
  if (survive_neg.ejected())
    anomalies.push_back({"h(0,0) was unexpectedly ejected from the K_{-1} "
                         "intersection",
                         print_word(g, survive_neg.witness),
                         "quasikernel-generators"});
  if (survive_pos.ejected())
    anomalies.push_back({"h(0,1) was unexpectedly ejected from the K_1 "
                         "intersection",
                         print_word(g, survive_pos.witness),
                         "quasikernel-generators"});

  // Kernel-triviality evidence over the depth-1 subgroup.
  constexpr std::size_t kKernelBound = 3;
  ConjugatorEnumerator<Example5Group> kernel_en;
  kernel_en.max_tau_length = kKernelBound;
  const auto g1_ball =
      example5_closure(g, example5_g_generators(g, 1), 128);
  std::size_t ejected = 0;
  for (const auto& a : g1_ball) {
    if (a == g.identity()) continue;
    const auto outcome = kernel_test(g, a, kernel_en);
    if (outcome.ejected())
      ++ejected;
    else
      anomalies.push_back(
          {"a depth-1 element survived the kernel sweep, contradicting the "
           "kernel-triviality evidence",
           g.print(a), "kernel-unique-trace-criterion"});
  }
  const Word<Elt> explicit_r{Letter<Elt>::stable_letter(-1),
                             Letter<Elt>::base_letter(g.g0()),
                             Letter<Elt>::stable_letter(-1)};
  if (!conjugate_escapes_h(g, h00, explicit_r))
    anomalies.push_back({"the explicit conjugator T g0 T failed to eject "
                         "h(0,0) from the kernel",
                         print_word(g, explicit_r),
                         "kernel-unique-trace-criterion"});

  // Reducer identities up to the configured length.
  std::size_t reducer_cases = 0;
  for (const auto x : xseq::all_up_to_length(static_cast<int>(cfg.x_len))) {
    const auto red = example5_reducer(g, x);
    Word<Elt> w = word_inverse(g, red.word);
    w.push_back(Letter<Elt>::base_letter(g.gen(x)));
    w.insert(w.end(), red.word.begin(), red.word.end());
    const auto nf = normal_form(g, w);
    const Elt expected = red.landing == 0 ? g.g0() : g.g1();
    if (!nf.prefix.empty() || !(nf.end == expected)) {
      anomalies.push_back({"reducer conjugation identity failed",
                           xseq::print(x), "reducer-conjugation-identity"});
      break;
    }
    ++reducer_cases;
  }

  // Witness transport between the two sides: an ejector r for (h(1,0), -1)
  // transports to r' = g1*tau*r ejecting g1*theta^-1(h(1,0))*g1 on the +1
  // side.
  const Elt h10 = g.gen(xseq::pack({{1, 0}}));
  const auto eject_neg = quasi_kernel_test(g, h10, -1, en);
  bool transport_ok = false;
  Word<Elt> transported;
  if (eject_neg.ejected()) {
    transported = {Letter<Elt>::base_letter(g.g1()),
                   Letter<Elt>::stable_letter(1)};
    transported.insert(transported.end(), eject_neg.witness.begin(),
                       eject_neg.witness.end());
    const Elt image = g.mul(g.g1(), g.mul(g.theta_inv(h10), g.g1()));
    const auto stats = word_stats(g, normal_form(g, transported));
    transport_ok = !stats.in_t_dagger_pos &&
                   conjugate_escapes_h(g, image, transported);
  }
  if (!transport_ok)
    anomalies.push_back({"witness transport between the quasi-kernel sides "
                         "failed on h(1,0)",
                         print_word(g, eject_neg.witness),
                         "normal-closure-transport"});

  if (!anomalies.empty()) {
    r.cstar_simple = SimplicityVerdict::kUnknown;
    r.unique_trace = TraceVerdict::kUnknown;
    r.witnesses = anomalies;
    r.bounds = {{"tau_length", cfg.tau_length}, {"x_len", cfg.x_len}};
    if (cfg.timing) r.elapsed_ms = ms_since(start);
    return r;
  }

  ConjugatorEnumerator<Example5Group> count_en = en;
  count_en.epsilon_excluded = -1;
  const std::size_t searched = conjugator_count(g, count_en);
  r.cstar_simple = SimplicityVerdict::kNotCSimpleCertified;
  r.unique_trace = TraceVerdict::kUniqueTraceEvidence;
  r.witnesses.push_back(
      {"h(0,0) survives every conjugator outside T_{-1}^dagger to "
       "tau-length " +
           std::to_string(cfg.tau_length) +
           ": the K_{-1} intersection stays nontrivial at this bound",
       "element h(0,0); " + std::to_string(searched) +
           " conjugators tested",
       "quasikernel-generators"});
  r.witnesses.push_back(
      {"h(0,1) survives every conjugator outside T_1^dagger to "
       "tau-length " +
           std::to_string(cfg.tau_length) +
           ": the K_1 intersection stays nontrivial at this bound",
       "element h(0,1); " + std::to_string(searched) +
           " conjugators tested",
       "quasikernel-generators"});
  r.witnesses.push_back(
      {"the base group is locally finite, so the subgroup and both "
       "quasi-kernels are amenable; the hypothesis is carried by the "
       "instance flag",
       "h_amenable_certified = true", "locally-finite-amenability"});
  r.witnesses.push_back(
      {"nontrivial amenable quasi-kernels on both sides: the extension is "
       "not C*-simple",
       "K_{-1} contains h(0,0); K_1 contains h(0,1)",
       "amenable-quasikernel-criterion"});
  r.witnesses.push_back(
      {"every nontrivial element of the 64-element depth-1 subgroup is "
       "ejected from the kernel intersection within tau-length " +
           std::to_string(kKernelBound) + ": kernel-triviality evidence",
       std::to_string(ejected) + " of " +
           std::to_string(g1_ball.size() - 1) +
           " ejected; explicit conjugator for h(0,0): " +
           print_word(g, explicit_r),
       "kernel-unique-trace-criterion"});
  r.witnesses.push_back(
      {"the reducer words conjugate every admissible generator onto g0 or "
       "g1, the mechanism behind the ejection witnesses",
       std::to_string(reducer_cases) + " identities verified",
       "reducer-conjugation-identity"});
  r.witnesses.push_back(
      {"ejection witnesses transport between the two quasi-kernel sides "
       "through s*tau conjugation",
       "r = " + print_word(g, eject_neg.witness) +
           " for h(1,0) becomes r' = " + print_word(g, transported),
       "normal-closure-transport"});

  r.bounds = {{"tau_length", cfg.tau_length},
              {"x_len", cfg.x_len},
              {"kernel_tau_length", kKernelBound}};
  if (cfg.timing) r.elapsed_ms = ms_since(start);
  return r;
}

}  // namespace hnn
