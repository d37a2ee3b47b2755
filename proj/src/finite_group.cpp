#include "hnn/finite_group.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hnn {

namespace {

std::string elt_str(std::size_t a) { return std::to_string(a); }

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::vector<Elt>> table,
                         Elt identity, std::vector<Elt> h,
                         std::map<Elt, Elt> theta,
                         std::vector<std::string> names,
                         std::string display_name)
    : order_(order),
      table_(std::move(table)),
      identity_(identity),
      h_sorted_(std::move(h)),
      names_(std::move(names)),
      display_name_(std::move(display_name)) {
  if (order_ == 0 || order_ > kMaxOrder)
    throw ValidationError("finite instance order must be in 1.." +
                          std::to_string(kMaxOrder));
  std::sort(h_sorted_.begin(), h_sorted_.end());
  h_sorted_.erase(std::unique(h_sorted_.begin(), h_sorted_.end()),
                  h_sorted_.end());
  validate(theta);
}

void FiniteGroup::validate(const std::map<Elt, Elt>& theta_map) {
  const std::size_t n = order_;
  if (table_.size() != n)
    throw ValidationError("multiplication table must have 'order' rows");
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n)
      throw ValidationError("multiplication table row " + elt_str(a) +
                            " must have 'order' entries");
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] >= n)
        throw ValidationError("table entry (" + elt_str(a) + "," + elt_str(b) +
                              ") out of range");
  }
  if (identity_ >= n) throw ValidationError("identity index out of range");
  for (std::size_t a = 0; a < n; ++a)
    if (table_[identity_][a] != a || table_[a][identity_] != a)
      throw ValidationError("identity element fails e*a = a*e = a at a = " +
                            elt_str(a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw ValidationError("associativity fails at (" + elt_str(a) + "," +
                                elt_str(b) + "," + elt_str(c) + ")");
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = static_cast<Elt>(b);
        found = true;
        break;
      }
    }
    if (!found)
      throw ValidationError("element " + elt_str(a) + " has no inverse");
  }

  // H must be a subgroup containing the identity.
  if (h_sorted_.empty()) throw ValidationError("H must be non-empty");
  in_h_.assign(n, false);
  for (Elt a : h_sorted_) {
    if (a >= n) throw ValidationError("H contains out-of-range index");
    in_h_[a] = true;
  }
  if (!in_h_[identity_]) throw ValidationError("H must contain the identity");
  for (Elt a : h_sorted_)
    for (Elt b : h_sorted_)
      if (!in_h_[table_[a][b]])
        throw ValidationError("H is not closed under multiplication: " +
                              elt_str(a) + "*" + elt_str(b) + " escapes H");
  for (Elt a : h_sorted_)
    if (!in_h_[inverse_[a]])
      throw ValidationError("H is not closed under inversion at " + elt_str(a));

  // theta: defined exactly on H, injective homomorphism.
  theta_of_.assign(n, static_cast<Elt>(n));
  theta_inv_of_.assign(n, static_cast<Elt>(n));
  for (const auto& [src, img] : theta_map) {
    if (src >= n || img >= n)
      throw ValidationError("theta map contains out-of-range index");
    if (!in_h_[src])
      throw ValidationError("theta defined outside H at " + elt_str(src));
    theta_of_[src] = img;
  }
  for (Elt a : h_sorted_)
    if (theta_of_[a] >= n)
      throw ValidationError("theta undefined on H element " + elt_str(a));
  in_theta_h_.assign(n, false);
  for (Elt a : h_sorted_) {
    const Elt img = theta_of_[a];
    if (theta_inv_of_[img] < n)
      throw ValidationError("theta is not injective: image " + elt_str(img) +
                            " hit twice");
    theta_inv_of_[img] = a;
    in_theta_h_[img] = true;
  }
  if (theta_of_[identity_] != identity_)
    throw ValidationError("theta must fix the identity");
  for (Elt a : h_sorted_)
    for (Elt b : h_sorted_)
      if (theta_of_[table_[a][b]] != table_[theta_of_[a]][theta_of_[b]])
        throw ValidationError("theta is not a homomorphism at (" + elt_str(a) +
                              "," + elt_str(b) + ")");

  // Coset representatives: identity for the trivial coset, else the
  // smallest index in the coset (scanning ascending indices guarantees it).
  const auto build_reps = [&](const std::vector<bool>& member,
                              std::vector<Elt>& rep_of,
                              std::vector<Elt>& reps) {
    rep_of.assign(n, static_cast<Elt>(n));
    reps.clear();
    reps.push_back(identity_);
    for (std::size_t k = 0; k < n; ++k)
      if (member[k]) rep_of[table_[identity_][k]] = identity_;
    for (std::size_t a = 0; a < n; ++a) {
      if (rep_of[a] < n) continue;
      reps.push_back(static_cast<Elt>(a));
      for (std::size_t k = 0; k < n; ++k)
        if (member[k]) rep_of[table_[a][k]] = static_cast<Elt>(a);
    }
  };
  build_reps(in_h_, rep_h_, reps_h_);
  build_reps(in_theta_h_, rep_theta_h_, reps_theta_h_);

  h_normal_ = true;
  for (std::size_t g = 0; g < n && h_normal_; ++g)
    for (Elt a : h_sorted_)
      if (!in_h_[table_[table_[g][a]][inverse_[g]]]) {
        h_normal_ = false;
        break;
      }
  const std::size_t theta_h_size =
      static_cast<std::size_t>(std::count(in_theta_h_.begin(),
                                          in_theta_h_.end(), true));
  non_ascending_ = h_sorted_.size() < n && theta_h_size < n;

  if (!names_.empty() && names_.size() != n)
    throw ValidationError("names array must have 'order' entries");
}

FiniteGroup::Elt FiniteGroup::theta(Elt a) const {
  if (a >= order_ || !in_h_[a])
    throw ContractError("theta called outside H (element " + elt_str(a) + ")");
  return theta_of_[a];
}

FiniteGroup::Elt FiniteGroup::theta_inv(Elt a) const {
  if (a >= order_ || !in_theta_h_[a])
    throw ContractError("theta_inv called outside theta(H) (element " +
                        elt_str(a) + ")");
  return theta_inv_of_[a];
}

std::vector<FiniteGroup::Elt> FiniteGroup::elements() const {
  std::vector<Elt> out(order_);
  for (std::size_t a = 0; a < order_; ++a) out[a] = static_cast<Elt>(a);
  return out;
}

std::vector<FiniteGroup::Elt> FiniteGroup::theta_h() const {
  std::vector<Elt> out;
  for (std::size_t a = 0; a < order_; ++a)
    if (in_theta_h_[a]) out.push_back(static_cast<Elt>(a));
  return out;
}

std::string FiniteGroup::print(Elt a) const {
  if (!names_.empty()) return names_[a];
  return elt_str(a);
}

std::optional<FiniteGroup::Elt> FiniteGroup::parse_token(
    std::string_view tok) const {
  for (std::size_t a = 0; a < names_.size(); ++a)
    if (names_[a] == tok) return static_cast<Elt>(a);
  std::size_t value = 0;
  if (tok.empty()) return std::nullopt;
  for (char c : tok) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value >= order_) return std::nullopt;
  }
  return static_cast<Elt>(value);
}

FiniteGroup FiniteGroup::from_json_text(std::string_view text,
                                        std::string display_name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("finite instance JSON is malformed: ") +
                     e.what());
  }
  try {
    const std::size_t order = doc.at("order").get<std::size_t>();
    std::vector<std::vector<Elt>> table;
    for (const auto& row : doc.at("table"))
      table.push_back(row.get<std::vector<Elt>>());
    const Elt identity = doc.at("identity").get<Elt>();
    const auto h = doc.at("H").get<std::vector<Elt>>();
    std::map<Elt, Elt> theta;
    for (const auto& [key, value] : doc.at("theta").items())
      theta[static_cast<Elt>(std::stoul(key))] = value.get<Elt>();
    std::vector<std::string> names;
    if (doc.contains("names"))
      names = doc.at("names").get<std::vector<std::string>>();
    return FiniteGroup(order, std::move(table), identity, h, theta,
                       std::move(names), std::move(display_name));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("finite instance JSON missing or "
                                      "mis-typed field: ") +
                          e.what());
  } catch (const std::invalid_argument&) {
    throw ValidationError("finite instance theta keys must be decimal indices");
  } catch (const std::out_of_range&) {
    throw ValidationError("finite instance theta keys must be decimal indices");
  }
}

FiniteGroup FiniteGroup::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open finite instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str(), "finite:" + path);
}

namespace {

using Elt = FiniteGroup::Elt;

std::vector<Elt> intersect_sorted(const std::vector<Elt>& a,
                                  const std::vector<Elt>& b) {
  std::vector<Elt> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<Elt> image_theta(const FiniteGroup& g, const std::vector<Elt>& s) {
  std::vector<Elt> out;
  out.reserve(s.size());
  for (Elt a : s) out.push_back(g.theta(a));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elt> preimage_theta(const FiniteGroup& g,
                                const std::vector<Elt>& s) {
  std::vector<Elt> out;
  out.reserve(s.size());
  for (Elt a : s) out.push_back(g.theta_inv(a));
  std::sort(out.begin(), out.end());
  return out;
}

// Intersection of all G-conjugates of the subgroup s (sorted input/output).
std::vector<Elt> g_core(const FiniteGroup& g, const std::vector<Elt>& s) {
  std::vector<Elt> core = s;
  for (Elt x : g.elements()) {
    std::vector<Elt> conj;
    conj.reserve(s.size());
    for (Elt a : s) conj.push_back(g.mul(g.mul(x, a), g.inv(x)));
    std::sort(conj.begin(), conj.end());
    core = intersect_sorted(core, conj);
    if (core.size() == 1) break;  // only the identity survives
  }
  return core;
}

}  // namespace

std::vector<std::vector<Elt>> finite_hk_chain(const FiniteGroup& g) {
  std::vector<std::vector<Elt>> chain;
  std::vector<Elt> hk = g.h();  // sorted
  chain.push_back(hk);
  const std::vector<Elt> theta_h = g.theta_h();
  for (;;) {
    // H_k' = H_k intersect theta(H_k intersect H); H_k is inside H by
    // construction, so this is H_k intersect theta(H_k).
    const auto hk_in_h = intersect_sorted(hk, g.h());
    const auto hk_prime = intersect_sorted(hk, image_theta(g, hk_in_h));
    const auto core = g_core(g, hk_prime);
    const auto next =
        intersect_sorted(core, preimage_theta(g, intersect_sorted(core,
                                                                  theta_h)));
    chain.push_back(next);
    if (next == hk) break;  // stabilized (chain is weakly descending)
    hk = next;
  }
  return chain;
}

FiniteVerdict finite_verdict(const FiniteGroup& g) {
  if (!g.non_ascending())
    throw UnsupportedError(
        "finite classification requires a non-ascending extension (H and "
        "theta(H) proper in G)");
  FiniteVerdict v;
  v.chain = finite_hk_chain(g);
  v.kernel = v.chain.back();
  v.c_simple = v.kernel.size() == 1 && v.kernel.front() == g.identity();
  return v;
}

}  // namespace hnn
