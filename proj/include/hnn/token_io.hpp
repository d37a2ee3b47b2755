// Word serialization: whitespace-separated tokens, `t` for tau, `T` for
// tau^-1, every other token handed to the instance's element parser.
// Printing emits the same token language, so normal-form output re-parses
// to itself.

#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include "hnn/errors.hpp"
#include "hnn/word.hpp"

namespace hnn {

template <Presentation P>
Word<typename P::Elt> parse_word(const P& p, std::string_view text) {
  Word<typename P::Elt> w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "t") {
      w.push_back(Letter<typename P::Elt>::stable_letter(1));
    } else if (tok == "T") {
      w.push_back(Letter<typename P::Elt>::stable_letter(-1));
    } else if (auto e = p.parse_token(tok)) {
      w.push_back(Letter<typename P::Elt>::base_letter(*e));
    } else {
      throw ParseError("unrecognized word token: '" + tok + "'");
    }
  }
  return w;
}

template <Presentation P>
std::string print_word(const P& p, const Word<typename P::Elt>& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    if (l.stable)
      out += (l.exp == 1) ? "t" : "T";
    else
      out += p.print(l.base);
  }
  if (out.empty()) out = p.print(p.identity());
  return out;
}

template <Presentation P>
std::string print_normal_form(const P& p, const NormalForm<typename P::Elt>& nf) {
  return print_word(p, word_of(p, nf));
}

}  // namespace hnn
