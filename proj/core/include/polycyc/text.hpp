// This file contains the text forms of words, elements, and generator words.
//
//   word     comma separated letters, e.g. 1,1,0; empty for the empty word.
//            A comma-free string of digits such as 110 is read one letter per
//            digit, so a lone letter above 9 carries a trailing comma: 12,
//   element  0, 1, or (u|v), e.g. (1,1,0|0) or (|0).
//   genword  tokens p<index> and p<index>' separated by whitespace or *.

#ifndef POLYCYC_TEXT_HPP_
#define POLYCYC_TEXT_HPP_

#include <string>       // for string
#include <string_view>  // for string_view

#include "element.hpp"  // for Element
#include "rewrite.hpp"  // for GenWord, NormalForm
#include "words.hpp"    // for Word

namespace polycyc {

  [[nodiscard]] std::string format_word(Word const& w);
  [[nodiscard]] std::string format_element(Element const& x);
  [[nodiscard]] std::string format_genword(GenWord const& w);

  //! "0" for zero, "1" for the empty word, otherwise format_genword.
  [[nodiscard]] std::string format_normal_form(NormalForm const& nf);

  //! \throws ParseError
  [[nodiscard]] Word parse_word(std::string_view text);

  //! Parses a single element literal.
  //!
  //! \throws ParseError
  [[nodiscard]] Element parse_element_literal(std::string_view text);

  //! Parses a generator word.
  //!
  //! \throws ParseError carrying the byte offset of the offending character.
  [[nodiscard]] GenWord parse_expression(std::string_view text);

  //! Parses a product of generator tokens and element literals and returns
  //! its value, e.g. "p0 (1|0) p1'". An empty string is the identity.
  //!
  //! \throws ParseError
  [[nodiscard]] Element parse_element(std::string_view text);

}  // namespace polycyc

#endif  // POLYCYC_TEXT_HPP_
