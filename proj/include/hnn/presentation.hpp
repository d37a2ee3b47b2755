// The oracle bundle every HNN-extension instance must provide.
//
// An instance describes Gamma = HNN(G, H, theta) = <G, tau | tau^-1 h tau =
// theta(h) for h in H> purely through callbacks on base-group elements:
// exact arithmetic in G, membership in the two associated subgroups H and
// theta(H), the isomorphism theta : H -> theta(H) and its inverse, and maps
// onto distinguished left-coset representatives
//
//     S_{-1}  for G/H        (used left of tau^{+1}),
//     S_{+1}  for G/theta(H) (used left of tau^{-1}),
//
// both containing the identity.  Generic word, tree and analysis code is
// templated over this concept and never looks inside an element.

#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hnn {

template <class P>
concept Presentation = requires(const P& p, const typename P::Elt& a,
                                const typename P::Elt& b, std::string_view tok) {
  typename P::Elt;
  requires std::equality_comparable<typename P::Elt>;

  // Exact group arithmetic in G.
  { p.identity() } -> std::convertible_to<typename P::Elt>;
  { p.mul(a, b) } -> std::convertible_to<typename P::Elt>;
  { p.inv(a) } -> std::convertible_to<typename P::Elt>;

  // Subgroup membership oracles.
  { p.in_h(a) } -> std::convertible_to<bool>;
  { p.in_theta_h(a) } -> std::convertible_to<bool>;

  // theta : H -> theta(H) and its inverse; both throw ContractError when
  // called outside their domain (no silent fallback).
  { p.theta(a) } -> std::convertible_to<typename P::Elt>;
  { p.theta_inv(a) } -> std::convertible_to<typename P::Elt>;

  // Coset-representative maps: rep_h(a) is the element of S_{-1} with
  // rep_h(a)^-1 * a in H; rep_theta_h likewise for S_{+1} and theta(H).
  { p.rep_h(a) } -> std::convertible_to<typename P::Elt>;
  { p.rep_theta_h(a) } -> std::convertible_to<typename P::Elt>;

  // Full representative lists (identity first, instance order afterwards).
  // The enumeration order is part of the deterministic-output contract.
  { p.reps_h() } -> std::convertible_to<std::vector<typename P::Elt>>;
  { p.reps_theta_h() } -> std::convertible_to<std::vector<typename P::Elt>>;

  // Structural flags consumed by the analysis layer.
  { p.h_normal_in_g() } -> std::convertible_to<bool>;
  { p.h_amenable_certified() } -> std::convertible_to<bool>;
  { p.non_ascending() } -> std::convertible_to<bool>;

  // Serialization: print(a) is a whitespace-joined token sequence that the
  // word parser accepts back; parse_token handles one token.
  { p.print(a) } -> std::convertible_to<std::string>;
  { p.parse_token(tok) } -> std::convertible_to<std::optional<typename P::Elt>>;

  { p.name() } -> std::convertible_to<std::string>;
};

// Instances with a full base-group enumeration additionally expose
// elements(); detected via this trait (finite multiplication tables only).
template <class P>
concept EnumerablePresentation =
    Presentation<P> && requires(const P& p) {
      { p.elements() } -> std::convertible_to<std::vector<typename P::Elt>>;
    };

}  // namespace hnn
