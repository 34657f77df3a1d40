#include "polycyc/text.hpp"

#include <cctype>   // for isdigit, isspace
#include <limits>   // for numeric_limits
#include <string>   // for string, to_string

#include "polycyc/error.hpp"  // for ParseError

namespace polycyc {

  std::string format_word(Word const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(w[i]);
    }
    if (w.size() == 1 && w[0] >= 10) {
      // Keeps a single multi-digit letter from reading back in compact form.
      out += ',';
    }
    return out;
  }

  std::string format_element(Element const& x) {
    if (x.is_zero()) {
      return "0";
    } else if (x.is_one()) {
      return "1";
    }
    return "(" + format_word(x.dom()) + "|" + format_word(x.ran()) + ")";
  }

  std::string format_genword(GenWord const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += 'p';
      out += std::to_string(w[i].index);
      if (w[i].inverse) {
        out += '\'';
      }
    }
    return out;
  }

  std::string format_normal_form(NormalForm const& nf) {
    if (nf.is_zero()) {
      return "0";
    } else if (nf.word().empty()) {
      return "1";
    }
    return format_genword(nf.word());
  }

  namespace {

    bool is_digit(char c) noexcept {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }

    bool is_separator(char c) noexcept {
      return c == '*' || std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    class Cursor {
     public:
      Cursor(std::string_view text, std::size_t base = 0)
          : _text(text), _base(base) {}

      [[nodiscard]] bool done() const noexcept {
        return _pos >= _text.size();
      }

      [[nodiscard]] char peek() const noexcept {
        return done() ? '\0' : _text[_pos];
      }

      [[nodiscard]] std::size_t offset() const noexcept {
        return _base + _pos;
      }

      void advance() noexcept {
        ++_pos;
      }

      void skip_spaces() noexcept {
        while (!done() && std::isspace(static_cast<unsigned char>(peek())) != 0) {
          ++_pos;
        }
      }

      void skip_separators() noexcept {
        while (!done() && is_separator(peek())) {
          ++_pos;
        }
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(offset(), what);
      }

      void expect(char c) {
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        advance();
      }

      letter_type number() {
        if (!is_digit(peek())) {
          fail("expected a decimal index");
        }
        letter_type value = 0;
        auto const  start = offset();
        while (!done() && is_digit(peek())) {
          letter_type const d = static_cast<letter_type>(peek() - '0');
          if (value > (std::numeric_limits<letter_type>::max() - d) / 10) {
            throw ParseError(start, "index out of range");
          }
          value = value * 10 + d;
          advance();
        }
        return value;
      }

      // Consumes characters up to, not including, the first of the stop
      // characters.
      std::string_view take_until(std::string_view stop) noexcept {
        auto const start = _pos;
        while (!done() && stop.find(peek()) == std::string_view::npos) {
          ++_pos;
        }
        return _text.substr(start, _pos - start);
      }

     private:
      std::string_view _text;
      std::size_t      _base;
      std::size_t      _pos = 0;
    };

    Word parse_word_at(std::string_view text, std::size_t base) {
      std::vector<letter_type> letters;
      Cursor                   c(text, base);
      if (text.find(',') == std::string_view::npos) {
        // Compact form: one letter per digit.
        while (c.skip_spaces(), !c.done()) {
          if (!is_digit(c.peek())) {
            c.fail("expected a digit");
          }
          letters.push_back(static_cast<letter_type>(c.peek() - '0'));
          c.advance();
        }
        return Word(std::move(letters));
      }
      c.skip_spaces();
      letters.push_back(c.number());
      while (c.skip_spaces(), !c.done()) {
        c.expect(',');
        c.skip_spaces();
        // A trailing comma is allowed so that "10," can name the single
        // letter 10.
        if (c.done()) {
          break;
        }
        letters.push_back(c.number());
      }
      return Word(std::move(letters));
    }

    // Parses "(u|v)" starting at the cursor.
    Element parse_pair(Cursor& c) {
      c.expect('(');
      auto const u_off = c.offset();
      auto const u     = c.take_until("|)");
      c.expect('|');
      auto const v_off = c.offset();
      auto const v     = c.take_until("|)");
      c.expect(')');
      return Element(parse_word_at(u, u_off), parse_word_at(v, v_off));
    }

    GenLetter parse_token(Cursor& c) {
      c.expect('p');
      GenLetter g;
      g.index = c.number();
      if (c.peek() == '\'') {
        g.inverse = true;
        c.advance();
      }
      if (!c.done() && !is_separator(c.peek())) {
        c.fail("unexpected character after generator");
      }
      return g;
    }

  }  // namespace

  Word parse_word(std::string_view text) {
    return parse_word_at(text, 0);
  }

  Element parse_element_literal(std::string_view text) {
    if (text == "0") {
      return Element::zero();
    } else if (text == "1") {
      return Element::one();
    }
    Cursor  c(text);
    Element x = parse_pair(c);
    if (!c.done()) {
      c.fail("trailing characters after element literal");
    }
    return x;
  }

  GenWord parse_expression(std::string_view text) {
    GenWord w;
    Cursor  c(text);
    c.skip_separators();
    while (!c.done()) {
      w.push_back(parse_token(c));
      c.skip_separators();
    }
    return w;
  }

  Element parse_element(std::string_view text) {
    Element result = Element::one();
    Cursor  c(text);
    c.skip_separators();
    while (!c.done()) {
      Element factor;
      char const ch = c.peek();
      if (ch == 'p') {
        auto const g = parse_token(c);
        factor = g.inverse ? inverse_generator(g.index) : generator(g.index);
      } else if (ch == '(') {
        factor = parse_pair(c);
      } else if (ch == '0' || ch == '1') {
        factor = ch == '0' ? Element::zero() : Element::one();
        c.advance();
      } else {
        c.fail("expected a generator or an element literal");
      }
      if (!c.done() && !is_separator(c.peek())) {
        c.fail("expected a separator");
      }
      result = multiply(result, factor);
      c.skip_separators();
    }
    return result;
  }

}  // namespace polycyc
