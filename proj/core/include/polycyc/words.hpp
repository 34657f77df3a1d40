// This file contains the free monoid kernel: letters, words, and the prefix
// and suffix calculus used throughout the library.

#ifndef POLYCYC_WORDS_HPP_
#define POLYCYC_WORDS_HPP_

#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <cstdint>           // for uint64_t
#include <initializer_list>  // for initializer_list
#include <span>              // for span
#include <utility>           // for move
#include <vector>            // for vector

namespace polycyc {

  //! A generator index. Indices are unbounded; any finite computation only
  //! touches finitely many of them.
  using letter_type = std::uint64_t;

  //! An element of the free monoid over the non-negative integers. The empty
  //! word is the identity.
  class Word {
   public:
    using const_iterator = std::vector<letter_type>::const_iterator;

    Word() = default;
    Word(std::initializer_list<letter_type> letters) : _letters(letters) {}
    explicit Word(std::vector<letter_type> letters)
        : _letters(std::move(letters)) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }

    [[nodiscard]] letter_type operator[](std::size_t i) const {
      return _letters[i];
    }

    [[nodiscard]] const_iterator begin() const noexcept {
      return _letters.begin();
    }

    [[nodiscard]] const_iterator end() const noexcept {
      return _letters.end();
    }

    [[nodiscard]] std::span<letter_type const> letters() const noexcept {
      return _letters;
    }

    //! The word consisting of the first \p n letters.
    [[nodiscard]] Word prefix(std::size_t n) const;

    //! Lexicographic comparison; see \ref shortlex_compare for the order used
    //! when printing sets.
    friend auto operator<=>(Word const&, Word const&) = default;
    friend bool operator==(Word const&, Word const&)  = default;

   private:
    std::vector<letter_type> _letters;
  };

  //! Length first, then lexicographic.
  [[nodiscard]] std::strong_ordering shortlex_compare(Word const& x,
                                                      Word const& y) noexcept;

  //! \p x followed by \p y.
  [[nodiscard]] Word concat(Word const& x, Word const& y);

  //! The word \p w repeated \p n times.
  [[nodiscard]] Word repeat(Word const& w, std::size_t n);

  [[nodiscard]] bool is_prefix(Word const& p, Word const& w) noexcept;
  [[nodiscard]] bool is_suffix(Word const& s, Word const& w) noexcept;

  //! True iff one of the two words is a prefix of the other.
  [[nodiscard]] bool prefix_comparable(Word const& x, Word const& y) noexcept;

  //! Returns r with w = p ++ r.
  //!
  //! \throws Error with ErrorCode::not_a_prefix if \p p is not a prefix of
  //! \p w.
  [[nodiscard]] Word strip_prefix(Word const& p, Word const& w);

  //! Returns r with w = r ++ s.
  //!
  //! \throws Error with ErrorCode::not_a_suffix if \p s is not a suffix of
  //! \p w.
  [[nodiscard]] Word strip_suffix(Word const& s, Word const& w);

  //! All words over {0, ..., alphabet_size - 1} of length at most \p max_len
  //! in shortlex order.
  [[nodiscard]] std::vector<Word> enumerate_words(std::size_t alphabet_size,
                                                  std::size_t max_len);

}  // namespace polycyc

#endif  // POLYCYC_WORDS_HPP_
