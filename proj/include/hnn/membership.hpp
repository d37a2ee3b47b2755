// Bounded membership tests for the quasi-kernels and the kernel, plus the
// dispersion witness search.
//
// The quasi-kernel K_e is the intersection of r*H*r^-1 over all r outside
// T_e^dagger; the kernel intersects over all of Gamma.  Membership of g in
// r*H*r^-1 is tested through the equivalence g in r*H*r^-1 iff r^-1*g*r in
// H: the conjugate is Britton-reduced, and any surviving stable letter
// already certifies exclusion (the element left the base group).  All
// searches run in canonical conjugator order, so the reported witness is
// the shortest one, with ties broken lexicographically.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hnn/conjugators.hpp"
#include "hnn/errors.hpp"
#include "hnn/presentation.hpp"
#include "hnn/word.hpp"

namespace hnn {

enum class MembershipStatus { kInsideUpToBound, kEjectedBy };

template <class Elt>
struct MembershipOutcome {
  MembershipStatus status = MembershipStatus::kInsideUpToBound;
  Word<Elt> witness;       // ejecting conjugator when status == kEjectedBy
  std::size_t bound_used = 0;  // tau-length horizon that was searched

  bool ejected() const { return status == MembershipStatus::kEjectedBy; }
};

// True iff r^-1 * g * r lies outside H; this is the single re-verifiable
// fact behind every EjectedBy outcome.
template <Presentation P>
bool conjugate_escapes_h(const P& p, const typename P::Elt& g,
                         const Word<typename P::Elt>& r) {
  using L = Letter<typename P::Elt>;
  Word<typename P::Elt> w = word_inverse(p, r);
  if (!(g == p.identity())) w.push_back(L::base_letter(g));
  w.insert(w.end(), r.begin(), r.end());
  const auto nf = normal_form(p, w);
  return !nf.prefix.empty() || !p.in_h(nf.end);
}

// Tests g against the K_eps intersection over all conjugators within the
// bound (the enumerator is forced to exclude T_eps^dagger).  Returns the
// first ejecting conjugator in canonical order, else InsideUpToBound.
template <Presentation P>
MembershipOutcome<typename P::Elt> quasi_kernel_test(
    const P& p, const typename P::Elt& g, int eps,
    ConjugatorEnumerator<P> enumerator) {
  if (eps != 1 && eps != -1)
    throw ContractError("quasi-kernel side must be +1 or -1");
  enumerator.epsilon_excluded = eps;
  MembershipOutcome<typename P::Elt> out;
  out.bound_used = enumerator.max_tau_length;
  for_each_conjugator(p, enumerator,
                      [&](const Word<typename P::Elt>& r) -> bool {
                        if (!conjugate_escapes_h(p, g, r)) return true;
                        out.status = MembershipStatus::kEjectedBy;
                        out.witness = r;
                        return false;
                      });
  return out;
}

// Tests g against the kernel intersection (conjugators over all of Gamma
// within the bound).  InsideUpToBound is evidence, never a certificate,
// for infinite instances.
template <Presentation P>
MembershipOutcome<typename P::Elt> kernel_test(
    const P& p, const typename P::Elt& g,
    ConjugatorEnumerator<P> enumerator) {
  enumerator.epsilon_excluded = 0;
  MembershipOutcome<typename P::Elt> out;
  out.bound_used = enumerator.max_tau_length;
  for_each_conjugator(p, enumerator,
                      [&](const Word<typename P::Elt>& r) -> bool {
                        if (!conjugate_escapes_h(p, g, r)) return true;
                        out.status = MembershipStatus::kEjectedBy;
                        out.witness = r;
                        return false;
                      });
  return out;
}

// Which subgroup the conjugates g*f*g^-1 must avoid.
enum class PowersMode { kAvoidG, kAvoidH };

template <class Elt>
struct PowersResult {
  std::optional<Word<Elt>> witness;  // empty: exhausted at the bound
  std::size_t bound_used = 0;
};

// Searches for one g with g*f*g^-1 outside G (mode kAvoidG: the reduced
// conjugate keeps a stable letter) or outside H (mode kAvoidH: it keeps a
// stable letter or its base value leaves H) for every f in F
// simultaneously.  Returns the shortest such g, or exhaustion.
template <Presentation P>
PowersResult<typename P::Elt> powers_search(
    const P& p, const std::vector<Word<typename P::Elt>>& f_set,
    PowersMode mode, const ConjugatorEnumerator<P>& enumerator) {
  using Elt = typename P::Elt;
  for (const auto& f : f_set) {
    const auto nf = normal_form(p, f);
    if (nf.prefix.empty() && nf.end == p.identity())
      throw ContractError(
          "powers search requires non-identity elements, but the set "
          "contains the identity");
  }
  ConjugatorEnumerator<P> cfg = enumerator;
  cfg.epsilon_excluded = 0;
  PowersResult<Elt> out;
  out.bound_used = cfg.max_tau_length;
  for_each_conjugator(p, cfg, [&](const Word<Elt>& g) -> bool {
    for (const auto& f : f_set) {
      const auto w =
          word_concat(g, word_concat(f, word_inverse(p, g)));
      const auto nf = normal_form(p, w);
      if (nf.prefix.empty() &&
          (mode == PowersMode::kAvoidG || p.in_h(nf.end)))
        return true;  // this conjugator fails on f; keep searching
    }
    out.witness = g;
    return false;
  });
  return out;
}

}  // namespace hnn
