#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hnn/bs_group.hpp"
#include "hnn/conjugators.hpp"
#include "hnn/example5_group.hpp"
#include "hnn/finite_group.hpp"
#include "hnn/membership.hpp"
#include "hnn/report.hpp"
#include "hnn/token_io.hpp"

using namespace hnn;

namespace {

FiniteGroup make_s3() {
  int perms[6][3] = {
      {0, 1, 2},  // e
      {1, 0, 2},  // (01)
      {2, 1, 0},  // (02)
      {0, 2, 1},  // (12)
      {1, 2, 0},  // (012)
      {2, 0, 1},  // (021)
  };
  auto compose = [&](int a, int b) {
    int out[3];
    for (int x = 0; x < 3; ++x) out[x] = perms[a][perms[b][x]];
    for (int k = 0; k < 6; ++k)
      if (perms[k][0] == out[0] && perms[k][1] == out[1] &&
          perms[k][2] == out[2])
        return k;
    return -1;
  };
  std::vector<std::vector<FiniteGroup::Elt>> table(
      6, std::vector<FiniteGroup::Elt>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      table[a][b] = static_cast<FiniteGroup::Elt>(compose(a, b));
  return FiniteGroup(6, table, 0, {0, 1}, {{0, 0}, {1, 2}},
                     {"e", "(01)", "(02)", "(12)", "(012)", "(021)"}, "s3");
}

FiniteGroup make_z4() {
  std::vector<std::vector<FiniteGroup::Elt>> table(
      4, std::vector<FiniteGroup::Elt>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      table[a][b] = static_cast<FiniteGroup::Elt>((a + b) % 4);
  return FiniteGroup(4, table, 0, {0, 2}, {{0, 0}, {2, 2}}, {}, "z4");
}

template <Presentation P>
std::size_t count_conjugators(const P& p, int eps, std::size_t bound) {
  ConjugatorEnumerator<P> en;
  en.epsilon_excluded = eps;
  en.max_tau_length = bound;
  std::size_t n = 0;
  const bool exhausted = for_each_conjugator(p, en, [&](const auto&) {
    ++n;
    return true;
  });
  REQUIRE(exhausted);
  return n;
}

template <Presentation P>
std::vector<std::string> first_conjugators(const P& p, int eps,
                                           std::size_t limit) {
  ConjugatorEnumerator<P> en;
  en.epsilon_excluded = eps;
  std::vector<std::string> out;
  for_each_conjugator(p, en, [&](const Word<typename P::Elt>& w) {
    out.push_back(print_word(p, w));
    return out.size() < limit;
  });
  return out;
}

std::size_t stable_count(const Word<Example5Group::Elt>& w) {
  std::size_t n = 0;
  for (const auto& l : w) n += l.stable ? 1 : 0;
  return n;
}

bool has_citation(const EvidenceReport& r, const std::string& c) {
  for (const auto& w : r.witnesses)
    if (w.citation == c) return true;
  return false;
}

bool has_witness_text(const EvidenceReport& r, const std::string& text) {
  for (const auto& w : r.witnesses)
    if (w.witness.find(text) != std::string::npos) return true;
  return false;
}

bool has_bound(const EvidenceReport& r, const std::string& key,
               std::uint64_t value) {
  for (const auto& [k, v] : r.bounds)
    if (k == key && v == value) return true;
  return false;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

const std::vector<std::string> kCitations = {
    "bs-simplicity-closed-form",    "kernel-unique-trace-criterion",
    "hnn-powers-dispersion",        "descending-chain-criterion",
    "finite-intersection-equivalences", "quasikernel-generators",
    "locally-finite-amenability",   "amenable-quasikernel-criterion",
    "reducer-conjugation-identity", "normal-closure-transport"};

}  // namespace

TEST_CASE("conjugator enumeration counts") {
  const Example5Group g;
  CHECK(count_conjugators(g, -1, 4) == 242);
  CHECK(count_conjugators(g, +1, 4) == 242);
  CHECK(count_conjugators(g, 0, 4) == 322);
  CHECK(count_conjugators(g, 0, 3) == 106);
  CHECK(count_conjugators(g, 0, 0) == 2);

  // Finite instances default to every base element as an end letter.
  const auto s3 = make_s3();
  CHECK_FALSE(s3.h_normal_in_g());
  CHECK(default_end_letters(s3).size() == 6);
  CHECK(count_conjugators(s3, 0, 0) == 6);

  ConjugatorEnumerator<Example5Group> bad;
  bad.epsilon_excluded = 2;
  CHECK_THROWS_AS(for_each_conjugator(g, bad, [](const auto&) { return true; }),
                  ContractError);
}

TEST_CASE("conjugator enumeration order is shortest-first then lexicographic") {
  const Example5Group g;
  CHECK(g.h_normal_in_g());

  const auto full = first_conjugators(g, 0, 10);
  CHECK(full == std::vector<std::string>{"1", "g1", "t", "t g1", "g1 t",
                                         "g1 t g1", "T", "T g1", "g0 T",
                                         "g0 T g1"});

  // Excluding T_{-1}^dagger drops exactly the trivially-led negative words.
  const auto neg = first_conjugators(g, -1, 8);
  CHECK(neg == std::vector<std::string>{"1", "g1", "t", "t g1", "g1 t",
                                        "g1 t g1", "g0 T", "g0 T g1"});

  // Early stop reports a non-exhausted enumeration.
  ConjugatorEnumerator<Example5Group> en;
  CHECK_FALSE(for_each_conjugator(g, en, [](const auto&) { return false; }));
}

TEST_CASE("quasi-kernel and kernel membership outcomes") {
  const Example5Group g;
  const auto h00 = g.gen(xseq::pack({{0, 0}}));
  const auto h01 = g.gen(xseq::pack({{0, 1}}));
  const auto h10 = g.gen(xseq::pack({{1, 0}}));
  ConjugatorEnumerator<Example5Group> en;  // bound 4

  auto out = quasi_kernel_test(g, h01, -1, en);
  REQUIRE(out.ejected());
  CHECK(print_word(g, out.witness) == "t");
  CHECK(conjugate_escapes_h(g, h01, out.witness));

  out = quasi_kernel_test(g, g.g0(), -1, en);
  REQUIRE(out.ejected());
  CHECK(print_word(g, out.witness) == "g0 T");
  CHECK(conjugate_escapes_h(g, g.g0(), out.witness));

  out = kernel_test(g, h00, en);
  REQUIRE(out.ejected());
  CHECK(print_word(g, out.witness) == "T T");
  CHECK(conjugate_escapes_h(g, h00, out.witness));

  out = quasi_kernel_test(g, h10, -1, en);
  REQUIRE(out.ejected());
  CHECK(print_word(g, out.witness) == "g0 T T");

  // The generators that feed the non-C*-simplicity argument survive their
  // respective one-sided searches at the default bound.
  out = quasi_kernel_test(g, h00, -1, en);
  CHECK_FALSE(out.ejected());
  CHECK(out.bound_used == 4);
  out = quasi_kernel_test(g, h01, +1, en);
  CHECK_FALSE(out.ejected());

  // An explicit conjugator inside T_{-1}^dagger still moves h(0,0) out of H,
  // which is exactly why the kernel test (side 0) ejects it.
  CHECK(conjugate_escapes_h(g, h00, parse_word(g, "T g0 T")));

  CHECK_THROWS_AS(quasi_kernel_test(g, h00, 0, en), ContractError);
}

TEST_CASE("ejection witnesses transport to the opposite side") {
  const Example5Group g;
  // r = g0 T T ejects h(1,0) from the side -1 search; conjugating the
  // element by g1*tau and extending the word ejects the transported element
  // from the side +1 family.
  const auto moved = g.gen(xseq::pack({{1, 1}, {1, 0}}));
  const auto r_prime = parse_word(g, "g1 t g0 T T");
  CHECK(conjugate_escapes_h(g, moved, r_prime));
  const auto stats = word_stats(g, normal_form(g, r_prime));
  CHECK_FALSE(stats.in_t_dagger_pos);
}

TEST_CASE("custom end letters refine but do not change the first ejector") {
  const Example5Group g;
  const auto h10 = g.gen(xseq::pack({{1, 0}}));

  const auto defaults = default_end_letters(g);
  REQUIRE(defaults.size() == 2);
  CHECK(defaults[0] == g.identity());
  CHECK(defaults[1] == g.g1());

  ConjugatorEnumerator<Example5Group> wide;
  wide.end_letters =
      example5_closure(g, example5_g_generators(g, 1), 64);
  REQUIRE(wide.end_letters.size() == 64);
  const auto out = quasi_kernel_test(g, h10, -1, wide);
  REQUIRE(out.ejected());
  CHECK(conjugate_escapes_h(g, h10, out.witness));
  // H is normal in the base group, so end letters cannot produce an earlier
  // ejector than the representative set already finds.
  CHECK(print_word(g, out.witness) == "g0 T T");
  CHECK(stable_count(out.witness) == 2);
}

TEST_CASE("powers search disperses singletons and exhausts on the pair") {
  const Example5Group g;
  const auto h00 = g.gen(xseq::pack({{0, 0}}));
  const auto h01 = g.gen(xseq::pack({{0, 1}}));
  ConjugatorEnumerator<Example5Group> en;

  using W = Word<Example5Group::Elt>;
  using L = Letter<Example5Group::Elt>;
  const std::vector<W> pair = {{L::base_letter(h00)}, {L::base_letter(h01)}};
  const auto a = powers_search(g, pair, PowersMode::kAvoidG, en);
  const auto b = powers_search(g, pair, PowersMode::kAvoidH, en);
  CHECK_FALSE(a.witness.has_value());
  CHECK(a.bound_used == 4);
  CHECK_FALSE(b.witness.has_value());
  CHECK(b.bound_used == 4);

  const std::vector<W> with_identity = {{L::base_letter(g.identity())}};
  CHECK_THROWS_AS(powers_search(g, with_identity, PowersMode::kAvoidG, en),
                  ContractError);
}

TEST_CASE("powers search witnesses on the finite and BS instances") {
  const auto s3 = make_s3();
  ConjugatorEnumerator<FiniteGroup> fen;
  using W = Word<FiniteGroup::Elt>;
  using L = Letter<FiniteGroup::Elt>;

  const std::vector<std::pair<std::string, std::string>> want = {
      {"t", "(02)"},  // f = (01), the generator of H
      {"t (01)", "e"},  // f = (02)
      {"t", "e"},       // f = (12)
      {"t", "e"},       // f = (012)
      {"t", "e"},       // f = (021)
  };
  for (FiniteGroup::Elt f = 1; f < 6; ++f) {
    const std::vector<W> single = {{L::base_letter(f)}};
    const auto a = powers_search(s3, single, PowersMode::kAvoidG, fen);
    const auto b = powers_search(s3, single, PowersMode::kAvoidH, fen);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(print_word(s3, *a.witness) == want[f - 1].first);
    CHECK(print_word(s3, *b.witness) == want[f - 1].second);
  }

  const BsGroup bs(2, 3);
  ConjugatorEnumerator<BsGroup> ben;
  using BW = Word<BsGroup::Elt>;
  using BL = Letter<BsGroup::Elt>;
  const std::vector<BW> single = {{BL::base_letter(BigInt(1))}};
  const auto a = powers_search(bs, single, PowersMode::kAvoidG, ben);
  REQUIRE(a.witness.has_value());
  CHECK(print_word(bs, *a.witness) == "t");
}

TEST_CASE("analyze: BS verdict routes") {
  const auto r = analyze(BsGroup(2, 3));
  CHECK(r.instance == "bs:2,3");
  CHECK(r.cstar_simple == SimplicityVerdict::kCSimpleEvidence);
  CHECK(r.unique_trace == TraceVerdict::kUniqueTraceEvidence);
  CHECK(r.witnesses.size() == 4);
  CHECK(has_citation(r, "bs-simplicity-closed-form"));
  CHECK(has_citation(r, "kernel-unique-trace-criterion"));
  CHECK(has_citation(r, "hnn-powers-dispersion"));

  const auto solvable = analyze(BsGroup(1, 2));
  CHECK(solvable.cstar_simple == SimplicityVerdict::kNotCSimpleCertified);
  CHECK(solvable.unique_trace == TraceVerdict::kNoUniqueTraceCertified);

  const auto normal_h = analyze(BsGroup(2, -2));
  CHECK(normal_h.cstar_simple == SimplicityVerdict::kNotCSimpleCertified);
  CHECK(normal_h.unique_trace == TraceVerdict::kNoUniqueTraceCertified);
}

TEST_CASE("analyze: finite instance routes") {
  const auto r = analyze(make_s3());
  CHECK(r.cstar_simple == SimplicityVerdict::kCSimpleCertified);
  CHECK(r.unique_trace == TraceVerdict::kUniqueTraceCertified);
  CHECK(r.witnesses.size() == 3);
  CHECK(has_citation(r, "descending-chain-criterion"));
  CHECK(has_witness_text(r, "limit = {e}"));
  CHECK(has_bound(r, "cross_check_tau_length", 2));

  const auto z = analyze(make_z4());
  CHECK(z.cstar_simple == SimplicityVerdict::kNotCSimpleCertified);
  CHECK(z.unique_trace == TraceVerdict::kNoUniqueTraceCertified);
  CHECK(has_bound(z, "cross_check_tau_length", 1));
}

TEST_CASE("analyze: example5 report matches the golden JSON byte for byte") {
  const Example5Group g;
  const auto r = analyze(g);
  CHECK(r.cstar_simple == SimplicityVerdict::kNotCSimpleCertified);
  CHECK(r.unique_trace == TraceVerdict::kUniqueTraceEvidence);
  REQUIRE(r.witnesses.size() == 7);
  CHECK(has_citation(r, "quasikernel-generators"));
  CHECK(has_citation(r, "locally-finite-amenability"));
  CHECK(has_citation(r, "amenable-quasikernel-criterion"));
  CHECK(has_citation(r, "reducer-conjugation-identity"));
  CHECK(has_citation(r, "normal-closure-transport"));
  CHECK(has_witness_text(r, "242 conjugators tested"));
  CHECK(has_witness_text(r,
                         "63 of 63 ejected; explicit conjugator for h(0,0): "
                         "T g0 T"));
  CHECK(has_witness_text(r, "160 identities verified"));
  CHECK(has_witness_text(r, "r = g0 T T for h(1,0) becomes r' = g1 t g0 T T"));
  CHECK(has_bound(r, "tau_length", 4));
  CHECK(has_bound(r, "x_len", 4));
  CHECK(has_bound(r, "kernel_tau_length", 3));
  CHECK(r.elapsed_ms == 0);

  const auto json = report_json(r);
  CHECK(json == report_json(analyze(g)));  // deterministic
  CHECK(json ==
        read_file(std::string(HNN_GOLDEN_DIR) + "/example5_analyze.json"));
}

TEST_CASE("every citation tag comes from the documented vocabulary") {
  const std::vector<EvidenceReport> reports = {
      analyze(BsGroup(2, 3)), analyze(BsGroup(1, 2)), analyze(make_s3()),
      analyze(make_z4()), analyze(Example5Group{})};
  for (const auto& r : reports)
    for (const auto& w : r.witnesses) {
      const bool known = std::find(kCitations.begin(), kCitations.end(),
                                   w.citation) != kCitations.end();
      CHECK(known);
    }
}
