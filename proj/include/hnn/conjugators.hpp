// Deterministic enumeration of conjugator words.
//
// A conjugator is a normal-form prefix (a product of coset-representative
// letters s*tau^{+1}, s in S_{-1}, or s*tau^{-1}, s in S_1) followed by one
// end letter from a configurable finite set.  Enumeration is shortest-first
// in tau-length, then lexicographic in the prefix letters (the alphabet at
// each position runs through S_{-1} stamps before S_1 stamps, each in the
// instance's representative order, identity first), with the end letters
// innermost.  Every emitted word is a distinct canonical (prefix, end)
// pair, so no group element appears twice.
//
// With epsilon_excluded = e the enumeration skips exactly the words of type
// e whose initial letter is trivial (the family T_e^dagger carved out of
// the quasi-kernel intersection); tau-length-0 words have type 0 and are
// always emitted.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hnn/errors.hpp"
#include "hnn/presentation.hpp"
#include "hnn/word.hpp"

namespace hnn {

template <Presentation P>
struct ConjugatorEnumerator {
  using Elt = typename P::Elt;

  int epsilon_excluded = 0;        // 0: all of Gamma; +1 / -1: skip T_e^dagger
  std::size_t max_tau_length = 4;  // inclusive bound on stable letters
  std::vector<Elt> end_letters;    // empty: instance default (see below)
};

// Default end-letter set: the S_{-1} representatives when H is normal in G
// (conjugating the end letter inside its H-coset, or by any element of G,
// does not change r*H*r^-1); otherwise every base-group element, which
// requires a finite instance.
template <Presentation P>
std::vector<typename P::Elt> default_end_letters(const P& p) {
  if (p.h_normal_in_g()) return p.reps_h();
  if constexpr (EnumerablePresentation<P>) {
    return p.elements();
  } else {
    throw UnsupportedError(
        "conjugator end letters: H is not normal in G and the base group "
        "has no finite enumeration; configure end_letters explicitly");
  }
}

namespace detail {

template <Presentation P, class F>
bool conjugators_emit(const P& p, const std::vector<typename P::Elt>& ends,
                      Word<typename P::Elt>& prefix, F& visit) {
  for (const auto& e : ends) {
    if (e == p.identity()) {
      if (!visit(prefix)) return false;
      continue;
    }
    prefix.push_back(Letter<typename P::Elt>::base_letter(e));
    const bool cont = visit(prefix);
    prefix.pop_back();
    if (!cont) return false;
  }
  return true;
}

template <Presentation P, class F>
bool conjugators_rec(const P& p, int epsilon_excluded,
                     const std::vector<typename P::Elt>& reps_pos,
                     const std::vector<typename P::Elt>& reps_neg,
                     const std::vector<typename P::Elt>& ends,
                     Word<typename P::Elt>& prefix, int last_eps,
                     std::size_t remaining, F& visit) {
  using L = Letter<typename P::Elt>;
  if (remaining == 0) return conjugators_emit(p, ends, prefix, visit);
  const bool first = prefix.empty();
  for (const int eps : {1, -1}) {
    for (const auto& s : eps == 1 ? reps_pos : reps_neg) {
      const bool trivial = s == p.identity();
      if (trivial && first && eps == epsilon_excluded) continue;
      if (trivial && !first && eps != last_eps) continue;
      const std::size_t mark = prefix.size();
      if (!trivial) prefix.push_back(L::base_letter(s));
      prefix.push_back(L::stable_letter(eps));
      const bool cont = conjugators_rec(p, epsilon_excluded, reps_pos,
                                        reps_neg, ends, prefix, eps,
                                        remaining - 1, visit);
      prefix.resize(mark);
      if (!cont) return false;
    }
  }
  return true;
}

}  // namespace detail

// Calls visit(word) for every conjugator in canonical order; visit returns
// false to stop early.  Returns true iff the enumeration was exhausted.
template <Presentation P, class F>
bool for_each_conjugator(const P& p, const ConjugatorEnumerator<P>& cfg,
                         F&& visit) {
  if (cfg.epsilon_excluded < -1 || cfg.epsilon_excluded > 1)
    throw ContractError("epsilon_excluded must be one of -1, 0, +1");
  const auto ends =
      cfg.end_letters.empty() ? default_end_letters(p) : cfg.end_letters;
  const auto reps_pos = p.reps_h();
  const auto reps_neg = p.reps_theta_h();
  Word<typename P::Elt> prefix;
  for (std::size_t len = 0; len <= cfg.max_tau_length; ++len) {
    if (!detail::conjugators_rec(p, cfg.epsilon_excluded, reps_pos, reps_neg,
                                 ends, prefix, 0, len, visit))
      return false;
  }
  return true;
}

}  // namespace hnn
