// The non-C*-simple example instance: an HNN extension over a locally
// finite base group G = <hbar, g0, g1> built from involutions h(x) indexed
// by admissible bit-pair sequences.
//
// Index set X.  An index is a nonempty tuple x = (i_1,j_1,...,i_n,j_n) of
// bits whose adjacent pairs avoid the two forbidden triples
//
//     (j_k, i_{k+1}, j_{k+1}) not in {(0,0,1), (1,0,0)},
//
// giving exactly 4 * 3^(n-1) tuples of length n.  pi_1 = (i_1,j_1) is the
// "sector" of x; all rewriting is prefix-driven, so sequences are packed
// into a single 64-bit word ordered exactly like the canonical form:
//
//     bits 63..62   sector rank i_1 + 2*j_1   (sector order (0,0),(1,0),(0,1),(1,1))
//     bits 61..56   length n (1..28)
//     bits 55..0    pairs, most significant first: pair k holds i at bit
//                   57-2k and j at bit 56-2k
//
// Ascending uint64 order therefore equals (sector, length, lexicographic)
// order, and common prefixes fall out of one XOR.
//
// Relations.  (R1) every h(x) is an involution; (R2) h(x) and h(y) commute
// when len(x) = len(y); (R3) for len(y) < len(x), h(y) h(x) h(y) = h(x')
// where x' flips bit i_{k+1}(x), k = len(y), exactly when y is a tuple
// prefix of x and j_k(y) = j_{k+1}(x), and x' = x otherwise.  The extra
// generators satisfy g_j^2 = 1, g_0 g_1 = g_1 g_0 and
// g_j h(i,j',...) g_j = h(i xor [j'=j], j', ...).
//
// Canonical form.  Every element is uniquely g0^e0 * g1^e1 * h(x_1)...h(x_m)
// with x_1 < ... < x_m in the packed order; multiplication inserts
// right-hand generators into the sorted list, transporting them past larger
// generators via (R2)/(R3) (which preserve sector and length, so sortedness
// is repairable by re-sorting the conjugated, mutually commuting tail).
//
// HNN data.  H = <hbar, g0> (elements with e1 = 0), theta(H) = <hbar, g1>
// (e0 = 0), both of index 2; theta maps g0 -> h(0,0), h(0,1) -> g1,
// h(0,1,rest) -> h(rest) and prepends (0,0) to every other h(x); its
// inverse mirrors the rules with the two sectors swapped.

#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hnn/errors.hpp"
#include "hnn/word.hpp"

namespace hnn {

// ---------------------------------------------------------------------------
// Packed index sequences.

namespace xseq {

inline constexpr int kMaxLength = 28;
inline constexpr std::uint64_t kPairsMask = (std::uint64_t{1} << 56) - 1;

inline int length(std::uint64_t x) { return static_cast<int>((x >> 56) & 0x3F); }
inline int sector(std::uint64_t x) { return static_cast<int>(x >> 62); }
inline int i_at(std::uint64_t x, int k) {
  return static_cast<int>((x >> (57 - 2 * k)) & 1);
}
inline int j_at(std::uint64_t x, int k) {
  return static_cast<int>((x >> (56 - 2 * k)) & 1);
}

// Packs bit pairs without admissibility checking (see validate below).
std::uint64_t pack(const std::vector<std::pair<int, int>>& pairs);
std::vector<std::pair<int, int>> unpack(std::uint64_t x);

// Admissibility: throws ValidationError naming the first offending index k
// whose triple (j_k, i_{k+1}, j_{k+1}) is forbidden.  Returns the packed
// sequence on success.
std::uint64_t validate(const std::vector<std::pair<int, int>>& pairs);

// Flips bit i_k; k = 1 also updates the sector rank.
inline std::uint64_t flip_i(std::uint64_t x, int k) {
  std::uint64_t mask = std::uint64_t{1} << (57 - 2 * k);
  if (k == 1) mask |= std::uint64_t{1} << 62;
  return x ^ mask;
}

// Length of the longest common pair prefix.
int common_prefix(std::uint64_t x, std::uint64_t y);

inline bool is_prefix(std::uint64_t shorter, std::uint64_t longer) {
  return length(shorter) <= length(longer) &&
         common_prefix(shorter, longer) == length(shorter);
}

// Removes the first pair (length must be >= 2) / prepends a pair.
std::uint64_t drop_front(std::uint64_t x);
std::uint64_t push_front(std::uint64_t x, int i, int j);

// All admissible sequences of the given length (exact / up to), in packed
// ascending order.  Counts are 4 * 3^(n-1) per length.
std::vector<std::uint64_t> all_of_length(int n);
std::vector<std::uint64_t> all_up_to_length(int n);

std::string print(std::uint64_t x);  // "h(i,j,...)"

}  // namespace xseq

// ---------------------------------------------------------------------------
// Canonical elements.

struct Example5Elt {
  std::uint8_t e0 = 0;  // exponent of g0
  std::uint8_t e1 = 0;  // exponent of g1
  std::vector<std::uint64_t> gens;  // strictly ascending packed sequences

  friend bool operator==(const Example5Elt&, const Example5Elt&) = default;
  friend auto operator<=>(const Example5Elt&, const Example5Elt&) = default;
};

struct Example5EltHash {
  std::size_t operator()(const Example5Elt& e) const;
};

// Rewriting-rule toggle.  The defaults implement the group; disabling the
// conjugation bit flip (the h-prefix rule and the g_j rule are the same
// transport at prefix depths k >= 1 and k = 0) deliberately breaks the
// presentation and exists only as the verification suite's negative
// control.
struct Example5Rules {
  bool conjugation_flip = true;
};

class Example5Group {
 public:
  using Elt = Example5Elt;

  explicit Example5Group(Example5Rules rules = {}) : rules_(rules) {}

  Elt identity() const { return Elt{}; }
  Elt mul(const Elt& a, const Elt& b) const;
  Elt inv(const Elt& a) const;

  bool in_h(const Elt& a) const { return a.e1 == 0; }
  bool in_theta_h(const Elt& a) const { return a.e0 == 0; }

  Elt theta(const Elt& a) const;
  Elt theta_inv(const Elt& a) const;

  Elt rep_h(const Elt& a) const { return a.e1 ? g1() : identity(); }
  Elt rep_theta_h(const Elt& a) const { return a.e0 ? g0() : identity(); }
  std::vector<Elt> reps_h() const { return {identity(), g1()}; }
  std::vector<Elt> reps_theta_h() const { return {identity(), g0()}; }

  bool h_normal_in_g() const { return true; }   // index 2
  bool h_amenable_certified() const { return true; }  // locally finite
  bool non_ascending() const { return true; }

  std::string print(const Elt& a) const;
  std::optional<Elt> parse_token(std::string_view tok) const;
  std::string name() const { return "example5"; }

  // Named elements.
  Elt g0() const { return Elt{1, 0, {}}; }
  Elt g1() const { return Elt{0, 1, {}}; }
  Elt gen(std::uint64_t x) const { return Elt{0, 0, {x}}; }

  // True when a lies in the subgroup generated by the generators of one
  // sector (the quasi-kernels are the two j-sector spans: rank 0 for K_-1,
  // rank 2 for K_+1).
  bool in_sector_span(const Elt& a, int sector_rank) const;

  // Conjugation of a single generator per (R2)/(R3); requires the
  // conjugator b to be no longer than a when the sectors agree.
  std::uint64_t conjugate_gen(std::uint64_t a, std::uint64_t b) const;

  const Example5Rules& rules() const { return rules_; }

 private:
  // Multiplies the canonical product v by h(b) on the right.
  void insert_gen(std::vector<std::uint64_t>& v, std::uint64_t b) const;
  // In-place conjugation of a canonical product by g_j.
  void ad_g(int j, std::vector<std::uint64_t>& v) const;
  Elt theta_gen(std::uint64_t x) const;
  Elt theta_inv_gen(std::uint64_t x) const;

  Example5Rules rules_;
};

// ---------------------------------------------------------------------------
// Reducing conjugators and closure enumeration.

// The reducing word r(x) = r_1(x) ... r_n(x) with factors tau^-1, g0 tau^-1,
// tau, g1 tau selected by pi_k(x) in sector-rank order, plus the landing
// index i(x) = j_n(x): conjugating h(x) by r(x) yields g_{i(x)}.
struct Example5Reducer {
  Word<Example5Elt> word;
  int landing = 0;  // i(x)
};
Example5Reducer example5_reducer(const Example5Group& g, std::uint64_t x);

// A conjugator word r outside T_-1-dagger with r^-1 a r provably outside H,
// built constructively (tau-length <= max generator length + 1):
//   e1 = 1        -> r = empty (a itself is outside H),
//   e0 = 1        -> r = g0 tau^-1,
//   otherwise     -> r = r(x) g_m tau^{-+} for the smallest generator x of a
//                    outside sector (0,0), m = j_n(x).
// Precondition: a outside the sector-(0,0) span (throws ContractError).
Word<Example5Elt> example5_ejection_witness(const Example5Group& g,
                                            const Example5Elt& a);

// Breadth-first closure of the given generators under multiplication, in
// deterministic discovery order starting from the identity.  Throws
// ResourceLimitError (reporting the partial size) beyond limit elements.
std::vector<Example5Elt> example5_closure(const Example5Group& g,
                                          const std::vector<Example5Elt>& gens,
                                          std::size_t limit);

// Generators of the depth-n subgroups: {g0, g1} plus all h(x), len(x) <= n.
std::vector<Example5Elt> example5_g_generators(const Example5Group& g, int n);

}  // namespace hnn
