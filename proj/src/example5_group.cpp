#include "hnn/example5_group.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <unordered_set>

namespace hnn {

namespace xseq {

namespace {

void check_pairs(const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty()) throw ValidationError("index sequence must be nonempty");
  if (pairs.size() > static_cast<std::size_t>(kMaxLength))
    throw ValidationError("index sequence longer than the cap of " +
                          std::to_string(kMaxLength) + " pairs");
  for (const auto& [i, j] : pairs)
    if ((i != 0 && i != 1) || (j != 0 && j != 1))
      throw ValidationError("index sequence entries must be bits");
}

}  // namespace

std::uint64_t pack(const std::vector<std::pair<int, int>>& pairs) {
  check_pairs(pairs);
  const int n = static_cast<int>(pairs.size());
  std::uint64_t x = static_cast<std::uint64_t>(n) << 56;
  for (int k = 1; k <= n; ++k) {
    x |= static_cast<std::uint64_t>(pairs[k - 1].first) << (57 - 2 * k);
    x |= static_cast<std::uint64_t>(pairs[k - 1].second) << (56 - 2 * k);
  }
  x |= static_cast<std::uint64_t>(pairs[0].first + 2 * pairs[0].second) << 62;
  return x;
}

std::vector<std::pair<int, int>> unpack(std::uint64_t x) {
  std::vector<std::pair<int, int>> pairs;
  const int n = length(x);
  pairs.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) pairs.emplace_back(i_at(x, k), j_at(x, k));
  return pairs;
}

std::uint64_t validate(const std::vector<std::pair<int, int>>& pairs) {
  check_pairs(pairs);
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    const int jk = pairs[k - 1].second;
    const int i = pairs[k].first;
    const int j = pairs[k].second;
    const bool forbidden = (jk == 0 && i == 0 && j == 1) ||
                           (jk == 1 && i == 0 && j == 0);
    if (forbidden)
      throw ValidationError(
          "inadmissible index sequence at k=" + std::to_string(k) +
          ": triple (j_k,i_{k+1},j_{k+1}) = (" + std::to_string(jk) + "," +
          std::to_string(i) + "," + std::to_string(j) + ") is forbidden");
  }
  return pack(pairs);
}

int common_prefix(std::uint64_t x, std::uint64_t y) {
  const int nmin = std::min(length(x), length(y));
  const std::uint64_t d = (x ^ y) & kPairsMask;
  if (d == 0) return nmin;
  const int top = 63 - std::countl_zero(d);
  return std::min((57 - top) / 2 - 1, nmin);
}

std::uint64_t drop_front(std::uint64_t x) {
  const int n = length(x);
  assert(n >= 2);
  const std::uint64_t pairs = ((x & kPairsMask) << 2) & kPairsMask;
  const std::uint64_t i = (pairs >> 55) & 1;
  const std::uint64_t j = (pairs >> 54) & 1;
  return pairs | (static_cast<std::uint64_t>(n - 1) << 56) |
         ((i + 2 * j) << 62);
}

std::uint64_t push_front(std::uint64_t x, int i, int j) {
  const int n = length(x);
  if (n + 1 > kMaxLength)
    throw ResourceLimitError("index sequence length cap of " +
                             std::to_string(kMaxLength) + " pairs exceeded");
  const std::uint64_t pairs = ((x & kPairsMask) >> 2) |
                              (static_cast<std::uint64_t>(i) << 55) |
                              (static_cast<std::uint64_t>(j) << 54);
  return pairs | (static_cast<std::uint64_t>(n + 1) << 56) |
         (static_cast<std::uint64_t>(i + 2 * j) << 62);
}

std::vector<std::uint64_t> all_of_length(int n) {
  if (n < 1 || n > kMaxLength)
    throw ValidationError("index sequence length must be in 1.." +
                          std::to_string(kMaxLength));
  std::vector<std::vector<std::pair<int, int>>> cur;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) cur.push_back({{i, j}});
  for (int k = 2; k <= n; ++k) {
    std::vector<std::vector<std::pair<int, int>>> next;
    next.reserve(cur.size() * 3);
    for (const auto& seq : cur) {
      const int jk = seq.back().second;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          if ((jk == 0 && i == 0 && j == 1) || (jk == 1 && i == 0 && j == 0))
            continue;
          auto ext = seq;
          ext.emplace_back(i, j);
          next.push_back(std::move(ext));
        }
    }
    cur = std::move(next);
  }
  std::vector<std::uint64_t> out;
  out.reserve(cur.size());
  for (const auto& seq : cur) out.push_back(pack(seq));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> all_up_to_length(int n) {
  std::vector<std::uint64_t> out;
  for (int k = 1; k <= n; ++k) {
    auto part = all_of_length(k);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string print(std::uint64_t x) {
  std::string out = "h(";
  const int n = length(x);
  for (int k = 1; k <= n; ++k) {
    if (k > 1) out += ',';
    out += static_cast<char>('0' + i_at(x, k));
    out += ',';
    out += static_cast<char>('0' + j_at(x, k));
  }
  out += ')';
  return out;
}

}  // namespace xseq

// ---------------------------------------------------------------------------

std::size_t Example5EltHash::operator()(const Example5Elt& e) const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  const auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(e.e0) | (static_cast<std::uint64_t>(e.e1) << 8));
  for (std::uint64_t x : e.gens) mix(x);
  return static_cast<std::size_t>(h);
}

std::uint64_t Example5Group::conjugate_gen(std::uint64_t a,
                                           std::uint64_t b) const {
  if (xseq::sector(a) != xseq::sector(b)) return a;  // distinct first pairs
  const int la = xseq::length(a);
  const int lb = xseq::length(b);
  if (la == lb) return a;  // (R2): equal lengths commute
  assert(lb < la);         // transport always moves the shorter conjugator
  if (!rules_.conjugation_flip) return a;
  if (!xseq::is_prefix(b, a)) return a;
  if (xseq::j_at(b, lb) != xseq::j_at(a, lb + 1)) return a;
  return xseq::flip_i(a, lb + 1);
}

void Example5Group::insert_gen(std::vector<std::uint64_t>& v,
                               std::uint64_t b) const {
  // Move h(b) leftwards to its sorted slot:  a * b  =  b * (b a b), and the
  // conjugate keeps a's sector and length, so only the transported tail can
  // fall out of order -- and only within (sector, length) blocks, whose
  // members commute; re-sorting it is a legal rewrite.
  std::size_t k = v.size();
  while (k > 0 && v[k - 1] > b) {
    v[k - 1] = conjugate_gen(v[k - 1], b);
    --k;
  }
  if (k > 0 && v[k - 1] == b) {  // (R1): involutions cancel
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(k - 1));
    std::sort(v.begin() + static_cast<std::ptrdiff_t>(k - 1), v.end());
  } else {
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(k), b);
    std::sort(v.begin() + static_cast<std::ptrdiff_t>(k + 1), v.end());
  }
}

void Example5Group::ad_g(int j, std::vector<std::uint64_t>& v) const {
  if (!rules_.conjugation_flip) return;
  constexpr std::uint64_t kFlip = (std::uint64_t{1} << 62) |
                                  (std::uint64_t{1} << 55);
  bool touched = false;
  for (std::uint64_t& x : v) {
    if (static_cast<int>(x >> 63) == j) {  // j_1 = j: flip i_1
      x ^= kFlip;
      touched = true;
    }
  }
  // Flipping i_1 swaps two whole sector blocks; their members commute with
  // everything in between, so sorting restores the canonical order.
  if (touched) std::sort(v.begin(), v.end());
}

Example5Group::Elt Example5Group::mul(const Elt& a, const Elt& b) const {
  Elt r;
  r.e0 = a.e0 ^ b.e0;
  r.e1 = a.e1 ^ b.e1;
  r.gens = a.gens;
  if (b.e0) ad_g(0, r.gens);
  if (b.e1) ad_g(1, r.gens);
  for (std::uint64_t x : b.gens) insert_gen(r.gens, x);
  return r;
}

Example5Group::Elt Example5Group::inv(const Elt& a) const {
  Elt r;
  r.e0 = a.e0;
  r.e1 = a.e1;
  for (auto it = a.gens.rbegin(); it != a.gens.rend(); ++it)
    insert_gen(r.gens, *it);
  if (a.e0) ad_g(0, r.gens);
  if (a.e1) ad_g(1, r.gens);
  return r;
}

Example5Group::Elt Example5Group::theta_gen(std::uint64_t x) const {
  static const std::uint64_t kH01 = xseq::pack({{0, 1}});
  static const std::uint64_t kH00 = xseq::pack({{0, 0}});
  if (x == kH01) return g1();
  if (x >> 62 == 2) return gen(xseq::drop_front(x));  // sector (0,1)
  (void)kH00;
  return gen(xseq::push_front(x, 0, 0));
}

Example5Group::Elt Example5Group::theta_inv_gen(std::uint64_t x) const {
  static const std::uint64_t kH00 = xseq::pack({{0, 0}});
  if (x == kH00) return g0();
  if (x >> 62 == 0) return gen(xseq::drop_front(x));  // sector (0,0)
  return gen(xseq::push_front(x, 0, 1));
}

Example5Group::Elt Example5Group::theta(const Elt& a) const {
  if (a.e1)
    throw ContractError("theta applied outside H: exponent of g1 is 1");
  Elt r;
  if (a.e0) r = gen(xseq::pack({{0, 0}}));  // theta(g0) = h(0,0)
  for (std::uint64_t x : a.gens) r = mul(r, theta_gen(x));
  return r;
}

Example5Group::Elt Example5Group::theta_inv(const Elt& a) const {
  if (a.e0)
    throw ContractError(
        "theta_inv applied outside theta(H): exponent of g0 is 1");
  Elt r;
  if (a.e1) r = gen(xseq::pack({{0, 1}}));  // theta_inv(g1) = h(0,1)
  for (std::uint64_t x : a.gens) r = mul(r, theta_inv_gen(x));
  return r;
}

std::string Example5Group::print(const Elt& a) const {
  std::string out;
  const auto add = [&out](const std::string& tok) {
    if (!out.empty()) out += ' ';
    out += tok;
  };
  if (a.e0) add("g0");
  if (a.e1) add("g1");
  for (std::uint64_t x : a.gens) add(xseq::print(x));
  if (out.empty()) out = "1";
  return out;
}

std::optional<Example5Group::Elt> Example5Group::parse_token(
    std::string_view tok) const {
  if (tok == "1") return identity();
  if (tok == "g0") return g0();
  if (tok == "g1") return g1();
  if (!tok.starts_with("h(")) return std::nullopt;
  if (!tok.ends_with(')'))
    throw ParseError("malformed generator token (missing ')'): '" +
                     std::string(tok) + "'");
  std::vector<int> bits;
  std::string_view body = tok.substr(2, tok.size() - 3);
  while (!body.empty()) {
    const std::size_t comma = body.find(',');
    const std::string_view item =
        comma == std::string_view::npos ? body : body.substr(0, comma);
    if (item == "0")
      bits.push_back(0);
    else if (item == "1")
      bits.push_back(1);
    else
      throw ParseError("generator token entries must be bits: '" +
                       std::string(tok) + "'");
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  if (bits.empty() || bits.size() % 2 != 0)
    throw ParseError("generator token needs an even, positive number of "
                     "bits: '" + std::string(tok) + "'");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t k = 0; k + 1 < bits.size(); k += 2)
    pairs.emplace_back(bits[k], bits[k + 1]);
  try {
    return gen(xseq::validate(pairs));
  } catch (const ValidationError& e) {
    throw ParseError(std::string(e.what()) + " in token '" + std::string(tok) +
                     "'");
  }
}

bool Example5Group::in_sector_span(const Elt& a, int sector_rank) const {
  if (a.e0 || a.e1) return false;
  for (std::uint64_t x : a.gens)
    if (xseq::sector(x) != sector_rank) return false;
  return true;
}

// ---------------------------------------------------------------------------

Example5Reducer example5_reducer(const Example5Group& g, std::uint64_t x) {
  using L = Letter<Example5Elt>;
  Example5Reducer out;
  const int n = xseq::length(x);
  for (int k = 1; k <= n; ++k) {
    const int i = xseq::i_at(x, k);
    const int j = xseq::j_at(x, k);
    if (i == 1) out.word.push_back(L::base_letter(j == 0 ? g.g0() : g.g1()));
    out.word.push_back(L::stable_letter(j == 0 ? -1 : +1));
  }
  out.landing = xseq::j_at(x, n);
  return out;
}

Word<Example5Elt> example5_ejection_witness(const Example5Group& g,
                                            const Example5Elt& a) {
  using L = Letter<Example5Elt>;
  if (g.in_sector_span(a, 0))
    throw ContractError(
        "ejection witness requested for an element of the sector-(0,0) span");
  Word<Example5Elt> w;
  if (a.e1) return w;  // a itself lies outside H; the identity ejects it
  if (a.e0) {          // tau g0 a g0 tau^-1 keeps the g0 exponent: not in G
    w.push_back(L::base_letter(g.g0()));
    w.push_back(L::stable_letter(-1));
    return w;
  }
  // Pure hbar part: pick the smallest generator outside sector (0,0).  No
  // other generator of a is a proper prefix of it (a prefix shares the
  // sector and sorts lower), so conjugation by its reducing word sends every
  // other generator to a single generator and x itself to g_m; the final
  // g_m tau^{-+} step then pushes the product out of G.
  std::uint64_t x = 0;
  for (std::uint64_t cand : a.gens)
    if (xseq::sector(cand) != 0) {
      x = cand;
      break;
    }
  auto reducer = example5_reducer(g, x);
  w = std::move(reducer.word);
  const int m = reducer.landing;
  w.push_back(L::base_letter(m == 0 ? g.g0() : g.g1()));
  w.push_back(L::stable_letter(m == 0 ? -1 : +1));
  return w;
}

std::vector<Example5Elt> example5_closure(const Example5Group& g,
                                          const std::vector<Example5Elt>& gens,
                                          std::size_t limit) {
  std::unordered_set<Example5Elt, Example5EltHash> seen;
  std::vector<const Example5Elt*> order;
  seen.insert(g.identity());
  order.push_back(&*seen.begin());
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Example5Elt cur = *order[head];
    for (const auto& s : gens) {
      auto [it, inserted] = seen.insert(g.mul(cur, s));
      if (!inserted) continue;
      if (order.size() >= limit)
        throw ResourceLimitError(
            "closure enumeration exceeded the limit of " +
            std::to_string(limit) + " elements (partial size " +
            std::to_string(order.size()) + ")");
      order.push_back(&*it);
    }
  }
  std::vector<Example5Elt> out;
  out.reserve(order.size());
  for (const Example5Elt* e : order) out.push_back(*e);
  return out;
}

std::vector<Example5Elt> example5_g_generators(const Example5Group& g, int n) {
  std::vector<Example5Elt> out{g.g0(), g.g1()};
  for (std::uint64_t x : xseq::all_up_to_length(n)) out.push_back(g.gen(x));
  return out;
}

}  // namespace hnn
