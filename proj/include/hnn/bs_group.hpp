// Baumslag-Solitar instances BS(m,n) = <g, tau | tau^-1 g^m tau = g^n>.
//
// The base group is the infinite cyclic group written additively on
// arbitrary-precision exponents: element a stands for g^a.  H = mZ,
// theta(km) = kn, theta(H) = nZ.  Coset representatives are the residues
// 0..|m|-1 and 0..|n|-1 (identity first).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hnn/errors.hpp"

namespace hnn {

using BigInt = boost::multiprecision::cpp_int;

class BsGroup {
 public:
  using Elt = BigInt;

  // Throws ValidationError when m or n is zero.
  BsGroup(BigInt m, BigInt n);

  Elt identity() const { return 0; }
  Elt mul(const Elt& a, const Elt& b) const { return a + b; }
  Elt inv(const Elt& a) const { return -a; }

  bool in_h(const Elt& a) const { return a % m_ == 0; }
  bool in_theta_h(const Elt& a) const { return a % n_ == 0; }

  Elt theta(const Elt& a) const;
  Elt theta_inv(const Elt& a) const;

  Elt rep_h(const Elt& a) const { return mod_floor(a, abs_m_); }
  Elt rep_theta_h(const Elt& a) const { return mod_floor(a, abs_n_); }

  // Residues 0..|m|-1 resp. 0..|n|-1; capped (ResourceLimitError) so that a
  // CLI request like bs:1000000,2 cannot allocate unbounded tables.
  std::vector<Elt> reps_h() const { return residues(abs_m_); }
  std::vector<Elt> reps_theta_h() const { return residues(abs_n_); }

  bool h_normal_in_g() const { return true; }  // G abelian
  bool h_amenable_certified() const { return true; }
  bool non_ascending() const { return abs_m_ >= 2 && abs_n_ >= 2; }

  std::string print(const Elt& a) const;
  std::optional<Elt> parse_token(std::string_view tok) const;
  std::string name() const;

  const BigInt& m() const { return m_; }
  const BigInt& n() const { return n_; }

  static constexpr std::int64_t kMaxEnumeratedResidues = 4096;

 private:
  static Elt mod_floor(const Elt& a, const Elt& modulus);
  static std::vector<Elt> residues(const BigInt& modulus);

  BigInt m_, n_, abs_m_, abs_n_;
};

// Exact exponent lattices of iterated stable-letter conjugates of H.
//
// Direction +1 describes tau^-i H tau^i intersected with G (requiring every
// intermediate stage to land in G): the set of exponents a with g^a in that
// intersection is c_i Z with
//
//     c_0 = |m|,   c_{i+1} = lcm(c_i, |m|) / |m| * |n|.
//
// Direction -1 swaps the roles of (|m|, H) and (|n|, theta(H)) while still
// starting from H: c_0 = |m|, c_{i+1} = lcm(c_i, |n|) / |n| * |m|.
// Returns c_0 .. c_steps (steps+1 values).
std::vector<BigInt> bs_chain(const BigInt& m, const BigInt& n, int direction,
                             std::size_t steps);

// Closed-form classification plus the diverging-chain evidence.
enum class BsKind {
  kSolvableNotCSimple,        // min(|m|,|n|) == 1
  kNormalAbelianHNotCSimple,  // |m| == |n|
  kCSimpleEvidence,           // otherwise; some chain direction diverges
};

struct BsVerdict {
  BsKind kind;
  std::vector<BigInt> chain_pos;  // direction +1, steps entries + 1
  std::vector<BigInt> chain_neg;  // direction -1
  bool chain_pos_increasing = false;
  bool chain_neg_increasing = false;
};

BsVerdict bs_verdict(const BigInt& m, const BigInt& n, std::size_t steps = 10);

}  // namespace hnn
