// Finite-base-group instances defined by an explicit multiplication table.
//
// Elements are indices 0..order-1 (order <= 256).  Construction validates
// the full group axioms, that H is a subgroup, and that theta is an
// injective homomorphism defined exactly on H; theta(H) is derived.  Coset
// representatives are the identity for the trivial coset and the smallest
// index otherwise.
//
// JSON schema:
//   { "order": N, "table": [[...]], "identity": i,
//     "H": [...], "theta": {"h": image, ...}, "names": ["e", ...]? }
// "names" is optional display/parsing sugar (e.g. permutation cycles).

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hnn/errors.hpp"

namespace hnn {

class FiniteGroup {
 public:
  using Elt = std::uint16_t;

  static constexpr std::size_t kMaxOrder = 256;

  // Validates everything; throws ValidationError with a diagnostic.
  FiniteGroup(std::size_t order, std::vector<std::vector<Elt>> table,
              Elt identity, std::vector<Elt> h,
              std::map<Elt, Elt> theta,
              std::vector<std::string> names = {},
              std::string display_name = "finite");

  static FiniteGroup from_json_text(std::string_view text,
                                    std::string display_name = "finite");
  static FiniteGroup from_json_file(const std::string& path);

  Elt identity() const { return identity_; }
  Elt mul(Elt a, Elt b) const { return table_[a][b]; }
  Elt inv(Elt a) const { return inverse_[a]; }

  bool in_h(Elt a) const { return in_h_[a]; }
  bool in_theta_h(Elt a) const { return in_theta_h_[a]; }

  Elt theta(Elt a) const;
  Elt theta_inv(Elt a) const;

  Elt rep_h(Elt a) const { return rep_h_[a]; }
  Elt rep_theta_h(Elt a) const { return rep_theta_h_[a]; }

  std::vector<Elt> reps_h() const { return reps_h_; }
  std::vector<Elt> reps_theta_h() const { return reps_theta_h_; }

  // Full base-group enumeration (EnumerablePresentation).
  std::vector<Elt> elements() const;

  bool h_normal_in_g() const { return h_normal_; }
  bool h_amenable_certified() const { return true; }  // finite
  bool non_ascending() const { return non_ascending_; }

  std::string print(Elt a) const;
  std::optional<Elt> parse_token(std::string_view tok) const;
  std::string name() const { return display_name_; }

  std::size_t order() const { return order_; }
  const std::vector<Elt>& h() const { return h_sorted_; }
  std::vector<Elt> theta_h() const;

 private:
  void validate(const std::map<Elt, Elt>& theta_map);

  std::size_t order_;
  std::vector<std::vector<Elt>> table_;
  Elt identity_;
  std::vector<Elt> h_sorted_;
  std::vector<Elt> theta_of_;      // order_ entries; order_ marks "not in H"
  std::vector<Elt> theta_inv_of_;  // order_ marks "not in theta(H)"
  std::vector<Elt> inverse_;
  std::vector<bool> in_h_, in_theta_h_;
  std::vector<Elt> rep_h_, rep_theta_h_;
  std::vector<Elt> reps_h_, reps_theta_h_;
  bool h_normal_ = false;
  bool non_ascending_ = false;
  std::vector<std::string> names_;
  std::string display_name_;
};

// Descending certified subgroup chain
//
//   H_0 = H,
//   H_k' = H_k intersect theta(H_k intersect H)      (tau^-1-conjugate in G)
//   N    = the G-core of H_k' (intersection of all G-conjugates)
//   H_{k+1} = N intersect theta^-1(N intersect theta(H))
//
// computed until stabilization; the stable value is the intersection of all
// Gamma-conjugates of H (the kernel of the extension).  Each entry is the
// sorted element list of one H_k, ending with the first repeated value.
std::vector<std::vector<FiniteGroup::Elt>> finite_hk_chain(const FiniteGroup& g);

struct FiniteVerdict {
  bool c_simple;  // certified either way
  std::vector<std::vector<FiniteGroup::Elt>> chain;
  std::vector<FiniteGroup::Elt> kernel;  // stable limit; {identity} iff c_simple
};

// Certified classification for non-ascending finite instances; ascending
// ones (H = G or theta(H) = G) raise UnsupportedError.
FiniteVerdict finite_verdict(const FiniteGroup& g);

}  // namespace hnn
