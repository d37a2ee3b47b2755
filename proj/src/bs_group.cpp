#include "hnn/bs_group.hpp"

#include <boost/multiprecision/integer.hpp>
#include <sstream>

namespace hnn {

namespace {

BigInt lcm_abs(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace

BsGroup::BsGroup(BigInt m, BigInt n) : m_(std::move(m)), n_(std::move(n)) {
  if (m_ == 0 || n_ == 0)
    throw ValidationError("BS(m,n) requires m != 0 and n != 0");
  abs_m_ = abs(m_);
  abs_n_ = abs(n_);
}

BsGroup::Elt BsGroup::theta(const Elt& a) const {
  if (a % m_ != 0)
    throw ContractError("theta called outside H = " + m_.str() + "Z");
  return a / m_ * n_;
}

BsGroup::Elt BsGroup::theta_inv(const Elt& a) const {
  if (a % n_ != 0)
    throw ContractError("theta_inv called outside theta(H) = " + n_.str() +
                        "Z");
  return a / n_ * m_;
}

BsGroup::Elt BsGroup::mod_floor(const Elt& a, const Elt& modulus) {
  Elt r = a % modulus;
  if (r < 0) r += modulus;
  return r;
}

std::vector<BsGroup::Elt> BsGroup::residues(const BigInt& modulus) {
  if (modulus > kMaxEnumeratedResidues)
    throw ResourceLimitError("coset index " + modulus.str() +
                             " exceeds the enumeration cap of " +
                             std::to_string(kMaxEnumeratedResidues));
  std::vector<Elt> out;
  out.reserve(static_cast<std::size_t>(modulus));
  for (BigInt r = 0; r < modulus; ++r) out.push_back(r);
  return out;
}

std::string BsGroup::print(const Elt& a) const {
  if (a == 0) return "1";
  return "g^" + a.str();
}

std::optional<BsGroup::Elt> BsGroup::parse_token(std::string_view tok) const {
  if (tok == "1") return Elt(0);
  if (tok.size() < 3 || tok[0] != 'g' || tok[1] != '^') return std::nullopt;
  try {
    return Elt(BigInt(std::string(tok.substr(2))));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string BsGroup::name() const {
  return "bs:" + m_.str() + "," + n_.str();
}

std::vector<BigInt> bs_chain(const BigInt& m, const BigInt& n, int direction,
                             std::size_t steps) {
  if (m == 0 || n == 0)
    throw ValidationError("BS(m,n) requires m != 0 and n != 0");
  if (direction != 1 && direction != -1)
    throw ValidationError("chain direction must be +1 or -1");
  const BigInt am = abs(m), an = abs(n);
  const BigInt& div = (direction == 1) ? am : an;
  const BigInt& mult = (direction == 1) ? an : am;
  std::vector<BigInt> chain;
  chain.reserve(steps + 1);
  chain.push_back(am);
  for (std::size_t i = 0; i < steps; ++i)
    chain.push_back(lcm_abs(chain.back(), div) / div * mult);
  return chain;
}

namespace {

bool strictly_increasing(const std::vector<BigInt>& c) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] <= c[i - 1]) return false;
  return true;
}

}  // namespace

BsVerdict bs_verdict(const BigInt& m, const BigInt& n, std::size_t steps) {
  BsVerdict v{BsKind::kCSimpleEvidence,
              bs_chain(m, n, 1, steps),
              bs_chain(m, n, -1, steps),
              false,
              false};
  v.chain_pos_increasing = strictly_increasing(v.chain_pos);
  v.chain_neg_increasing = strictly_increasing(v.chain_neg);
  const BigInt am = abs(m), an = abs(n);
  if (am == 1 || an == 1) {
    v.kind = BsKind::kSolvableNotCSimple;
  } else if (am == an) {
    v.kind = BsKind::kNormalAbelianHNotCSimple;
  } else {
    v.kind = BsKind::kCSimpleEvidence;
    if (!v.chain_pos_increasing && !v.chain_neg_increasing)
      throw ContractError(
          "BS classification expects a diverging conjugate chain when "
          "min(|m|,|n|) >= 2 and |m| != |n|");
  }
  return v;
}

}  // namespace hnn
