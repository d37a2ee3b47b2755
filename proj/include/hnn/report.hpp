// Evidence reports: machine-checked verdicts on C*-simplicity and the
// unique trace property, with re-verifiable witnesses.
//
// Verdicts separate Certified (exact finite computation, a closed-form
// classification, or a machine-checked criterion whose side hypotheses are
// carried by instance flags) from Evidence (bounded searches that can
// never exhaust an infinite intersection).  Every witness line records a
// claim, the witness word or element, and a citation tag naming the
// criterion it instantiates.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hnn/bs_group.hpp"
#include "hnn/example5_group.hpp"
#include "hnn/finite_group.hpp"

namespace hnn {

enum class SimplicityVerdict {
  kCSimpleCertified,
  kCSimpleEvidence,
  kNotCSimpleCertified,
  kNotCSimpleEvidence,
  kUnknown,
};

enum class TraceVerdict {
  kUniqueTraceCertified,
  kUniqueTraceEvidence,
  kNoUniqueTraceCertified,
  kNoUniqueTraceEvidence,
  kUnknown,
};

std::string verdict_string(SimplicityVerdict v);
std::string verdict_string(TraceVerdict v);

struct WitnessLine {
  std::string claim;
  std::string witness;
  std::string citation;
};

struct EvidenceReport {
  std::string instance;
  SimplicityVerdict cstar_simple = SimplicityVerdict::kUnknown;
  TraceVerdict unique_trace = TraceVerdict::kUnknown;
  std::vector<WitnessLine> witnesses;
  std::vector<std::pair<std::string, std::uint64_t>> bounds;
  std::uint64_t elapsed_ms = 0;
};

// Pinned JSON rendering (2-space indent, trailing newline):
// {instance, verdict: {cstar_simple, unique_trace},
//  witnesses: [{claim, witness, citation}], bounds, elapsed_ms}.
std::string report_json(const EvidenceReport& report);

struct AnalyzeConfig {
  std::size_t tau_length = 4;   // quasi-kernel search horizon
  std::size_t x_len = 4;        // index-sequence length bound
  std::size_t chain_steps = 10; // BS containment-chain horizon
  bool timing = false;          // false pins elapsed_ms = 0 for golden output
};

EvidenceReport analyze(const BsGroup& g, const AnalyzeConfig& cfg = {});
EvidenceReport analyze(const FiniteGroup& g, const AnalyzeConfig& cfg = {});
EvidenceReport analyze(const Example5Group& g, const AnalyzeConfig& cfg = {});

}  // namespace hnn
