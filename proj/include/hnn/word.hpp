// Words over an HNN extension and their Britton normal forms.
//
// A word is a finite sequence of letters, each either a base-group element
// or a stable letter tau^{+1} / tau^{-1}.  The empty word is the identity.
// Reduction repeatedly removes pinches
//
//     tau^-1 g tau  with g in H         ->  theta(g)
//     tau    g tau^-1 with g in theta(H) ->  theta^-1(g)
//
// until none remain (Britton's lemma: the result represents an element of G
// exactly when no stable letter survives).  The normal form additionally
// rewrites every base letter left of a stable letter onto its distinguished
// coset representative, pushing the remainder rightwards through tau:
//
//     g tau    = s theta(h) ...   with g = s h,  s = rep_h(g)
//     g tau^-1 = s theta^-1(h) ...  with g = s h,  s = rep_theta_h(g)
//
// yielding the unique expression g_1 tau^e1 ... g_n tau^en g_{n+1} with
// g_i in S_{-e_i} and g_i = 1 only when e_{i-1} = e_i.

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hnn/errors.hpp"
#include "hnn/presentation.hpp"

namespace hnn {

// A single letter: base-group element or stable letter tau^{exp}.
template <class Elt>
struct Letter {
  bool stable = false;
  Elt base{};   // meaningful when !stable
  int exp = 0;  // +1 or -1 when stable

  static Letter base_letter(Elt g) { return Letter{false, std::move(g), 0}; }
  static Letter stable_letter(int exp) { return Letter{true, Elt{}, exp}; }

  friend bool operator==(const Letter& a, const Letter& b) {
    if (a.stable != b.stable) return false;
    return a.stable ? a.exp == b.exp : a.base == b.base;
  }
};

// Words are immutable value types; every operation returns a fresh word.
template <class Elt>
using Word = std::vector<Letter<Elt>>;

// Unique coset-representative expression of a group element.
// prefix[i] = (s_i, e_i); the element is s_1 tau^e1 ... s_n tau^en end.
template <class Elt>
struct NormalForm {
  std::vector<std::pair<Elt, int>> prefix;
  Elt end{};

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.prefix == b.prefix && a.end == b.end;
  }
};

// Letter statistics of a normal form (length, type, direction, and
// membership in the two dagger families T_e^+ = {type e, trivial initial
// letter} used to carve out quasi-kernel conjugators).
template <class Elt>
struct LetterStats {
  std::size_t length = 0;
  int type = 0;       // exponent e_1; 0 when length == 0
  int direction = 0;  // exponent e_n; 0 when length == 0
  bool initial_trivial = false;
  Elt end{};
  bool in_t_dagger_pos = false;
  bool in_t_dagger_neg = false;
};

// Outcome of the cheap syntactic pre-check (no oracle calls).
struct QuickTypeInfo {
  bool not_in_g = false;  // certainly outside G; false = unknown
  int type = 0;           // +1 / -1 when certain; 0 = unknown
};

enum class ReduceStrategy { kLeftmost, kRightmost };

namespace detail {

// Merges adjacent base letters and drops identity base letters.  The result
// alternates base letters with stable letters and never contains the
// identity as a base letter (the empty word stands for the identity).
template <Presentation P>
Word<typename P::Elt> coalesce(const P& p, const Word<typename P::Elt>& w) {
  Word<typename P::Elt> out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (l.stable) {
      if (l.exp != 1 && l.exp != -1)
        throw ValidationError("stable letter exponent must be +1 or -1");
      out.push_back(l);
      continue;
    }
    if (!out.empty() && !out.back().stable) {
      out.back().base = p.mul(out.back().base, l.base);
      if (out.back().base == p.identity()) out.pop_back();
    } else if (!(l.base == p.identity())) {
      out.push_back(l);
    }
  }
  return out;
}

// Locates a pinch around the stable letter at position i (which must hold a
// stable letter) and the next stable letter.  Returns the index of the
// second stable letter or npos when the pair is not a pinch.
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

template <Presentation P>
std::size_t pinch_partner(const P& p, const Word<typename P::Elt>& w,
                          std::size_t i) {
  const std::size_t j = (i + 1 < w.size() && !w[i + 1].stable) ? i + 2 : i + 1;
  if (j >= w.size() || !w[j].stable) return npos;
  if (w[i].exp != -w[j].exp) return npos;
  const auto mid = (j == i + 2) ? w[i + 1].base : p.identity();
  if (w[j].exp == 1) {  // tau^-1 g tau
    return p.in_h(mid) ? j : npos;
  }
  return p.in_theta_h(mid) ? j : npos;  // tau g tau^-1
}

}  // namespace detail

// Britton reduction.  Returns a coalesced word without pinches; the choice
// of strategy fixes which pinch is rewritten first (confluence of the two
// is a library invariant exercised by the tests).
template <Presentation P>
Word<typename P::Elt> britton_reduce(const P& p, const Word<typename P::Elt>& w,
                                     ReduceStrategy strategy =
                                         ReduceStrategy::kLeftmost) {
  using std::size_t;
  Word<typename P::Elt> cur = detail::coalesce(p, w);
  for (;;) {
    size_t found_i = detail::npos, found_j = detail::npos;
    for (size_t i = 0; i < cur.size(); ++i) {
      if (!cur[i].stable) continue;
      const size_t j = detail::pinch_partner(p, cur, i);
      if (j == detail::npos) continue;
      found_i = i;
      found_j = j;
      if (strategy == ReduceStrategy::kLeftmost) break;
    }
    if (found_i == detail::npos) return cur;
    const auto mid = (found_j == found_i + 2) ? cur[found_i + 1].base
                                              : p.identity();
    const auto image =
        (cur[found_j].exp == 1) ? p.theta(mid) : p.theta_inv(mid);
    Word<typename P::Elt> next(cur.begin(),
                               cur.begin() + static_cast<long>(found_i));
    next.push_back(Letter<typename P::Elt>::base_letter(image));
    next.insert(next.end(), cur.begin() + static_cast<long>(found_j) + 1,
                cur.end());
    cur = detail::coalesce(p, next);
  }
}

// Full normal form: Britton reduction followed by the left-to-right coset
// rewriting pass.  Idempotent; oracle-contract violations throw.
template <Presentation P>
NormalForm<typename P::Elt> normal_form(const P& p,
                                        const Word<typename P::Elt>& w) {
  const auto reduced = britton_reduce(p, w);
  NormalForm<typename P::Elt> nf;
  auto carry = p.identity();
  for (const auto& l : reduced) {
    if (!l.stable) {
      carry = p.mul(carry, l.base);
      continue;
    }
    const auto s = (l.exp == 1) ? p.rep_h(carry) : p.rep_theta_h(carry);
    const auto h = p.mul(p.inv(s), carry);
    if (l.exp == 1 ? !p.in_h(h) : !p.in_theta_h(h))
      throw ContractError(
          "coset representative does not absorb its argument: rep^-1 * g "
          "outside the expected subgroup");
    nf.prefix.emplace_back(s, l.exp);
    carry = (l.exp == 1) ? p.theta(h) : p.theta_inv(h);
  }
  nf.end = carry;
  return nf;
}

// Rebuilds a word from a normal form (identity letters are skipped; the
// word round-trips through normal_form unchanged).
template <Presentation P>
Word<typename P::Elt> word_of(const P& p, const NormalForm<typename P::Elt>& nf) {
  Word<typename P::Elt> w;
  for (const auto& [s, e] : nf.prefix) {
    if (!(s == p.identity()))
      w.push_back(Letter<typename P::Elt>::base_letter(s));
    w.push_back(Letter<typename P::Elt>::stable_letter(e));
  }
  if (!(nf.end == p.identity()))
    w.push_back(Letter<typename P::Elt>::base_letter(nf.end));
  return w;
}

template <Presentation P>
Word<typename P::Elt> word_inverse(const P& p, const Word<typename P::Elt>& w) {
  Word<typename P::Elt> out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->stable)
      out.push_back(Letter<typename P::Elt>::stable_letter(-it->exp));
    else
      out.push_back(Letter<typename P::Elt>::base_letter(p.inv(it->base)));
  }
  return out;
}

template <class Elt>
Word<Elt> word_concat(const Word<Elt>& a, const Word<Elt>& b) {
  Word<Elt> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

template <Presentation P>
LetterStats<typename P::Elt> word_stats(const P& p,
                                        const NormalForm<typename P::Elt>& nf) {
  LetterStats<typename P::Elt> st;
  st.length = nf.prefix.size();
  st.end = nf.end;
  if (st.length > 0) {
    st.type = nf.prefix.front().second;
    st.direction = nf.prefix.back().second;
    st.initial_trivial = nf.prefix.front().first == p.identity();
    st.in_t_dagger_pos = st.type == 1 && st.initial_trivial;
    st.in_t_dagger_neg = st.type == -1 && st.initial_trivial;
  }
  return st;
}

// Syntactic necessary conditions, valid for arbitrary (even unreduced)
// words: pinches cancel stable letters in +/- pairs, so the stable-letter
// parity is reduction-invariant, and when more than half of the leading
// exponents agree at least one of them survives every reduction and stays
// leftmost.
template <class Elt>
QuickTypeInfo quick_type_check(const Word<Elt>& w) {
  QuickTypeInfo info;
  std::size_t n = 0;
  int first = 0;
  std::size_t run = 0;
  bool in_run = true;
  for (const auto& l : w) {
    if (!l.stable) continue;
    ++n;
    if (first == 0) first = l.exp;
    if (in_run && l.exp == first)
      ++run;
    else
      in_run = false;
  }
  info.not_in_g = (n % 2) == 1;
  if (n > 0 && 2 * run > n) info.type = first;
  return info;
}

// Checks the Britton reduced-word conditions without rewriting: no pinch
// tau^-1 g tau with g in H, no pinch tau g tau^-1 with g in theta(H); a
// stable-letter-free word is reduced exactly when it is a non-identity
// base element.
template <Presentation P>
bool is_reduced(const P& p, const Word<typename P::Elt>& w) {
  const auto c = detail::coalesce(p, w);
  bool any_stable = false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].stable) continue;
    any_stable = true;
    if (detail::pinch_partner(p, c, i) != detail::npos) return false;
  }
  if (!any_stable) return !c.empty();
  return true;
}

// Convenience: normal form of the product of two normal forms.
template <Presentation P>
NormalForm<typename P::Elt> nf_multiply(const P& p,
                                        const NormalForm<typename P::Elt>& a,
                                        const NormalForm<typename P::Elt>& b) {
  return normal_form(p, word_concat(word_of(p, a), word_of(p, b)));
}

}  // namespace hnn
