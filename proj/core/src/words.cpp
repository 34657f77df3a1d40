#include "polycyc/words.hpp"

#include <algorithm>  // for equal, min

#include "polycyc/error.hpp"  // for Error

namespace polycyc {

  Word Word::prefix(std::size_t n) const {
    n = std::min(n, _letters.size());
    return Word(std::vector<letter_type>(_letters.begin(),
                                         _letters.begin() + n));
  }

  std::strong_ordering shortlex_compare(Word const& x, Word const& y) noexcept {
    if (auto c = x.size() <=> y.size(); c != 0) {
      return c;
    }
    return x <=> y;
  }

  Word concat(Word const& x, Word const& y) {
    std::vector<letter_type> out;
    out.reserve(x.size() + y.size());
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    return Word(std::move(out));
  }

  Word repeat(Word const& w, std::size_t n) {
    std::vector<letter_type> out;
    out.reserve(w.size() * n);
    for (std::size_t i = 0; i < n; ++i) {
      out.insert(out.end(), w.begin(), w.end());
    }
    return Word(std::move(out));
  }

  bool is_prefix(Word const& p, Word const& w) noexcept {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
  }

  bool is_suffix(Word const& s, Word const& w) noexcept {
    return s.size() <= w.size()
           && std::equal(s.begin(), s.end(), w.end() - s.size());
  }

  bool prefix_comparable(Word const& x, Word const& y) noexcept {
    return is_prefix(x, y) || is_prefix(y, x);
  }

  Word strip_prefix(Word const& p, Word const& w) {
    if (!is_prefix(p, w)) {
      throw Error(ErrorCode::not_a_prefix, "the first word is not a prefix");
    }
    return Word(std::vector<letter_type>(w.begin() + p.size(), w.end()));
  }

  Word strip_suffix(Word const& s, Word const& w) {
    if (!is_suffix(s, w)) {
      throw Error(ErrorCode::not_a_suffix, "the first word is not a suffix");
    }
    return Word(std::vector<letter_type>(w.begin(), w.end() - s.size()));
  }

  std::vector<Word> enumerate_words(std::size_t alphabet_size,
                                    std::size_t max_len) {
    std::vector<Word> result{Word()};
    // Words of length k + 1 are the words of length k extended by one letter;
    // extending in order keeps each length block lexicographic.
    std::size_t first = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t const last = result.size();
      for (std::size_t i = first; i < last; ++i) {
        for (letter_type a = 0; a < alphabet_size; ++a) {
          result.push_back(concat(result[i], Word{a}));
        }
      }
      first = last;
    }
    return result;
  }

}  // namespace polycyc
