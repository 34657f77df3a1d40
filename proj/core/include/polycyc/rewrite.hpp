// This file contains words over the signed generators p_i and p_i^-1, their
// reduction to normal form under the relations p_i p_i^-1 = 1 and
// p_i p_j^-1 = 0 (i != j), and the isomorphism between normal forms and
// pair elements.

#ifndef POLYCYC_REWRITE_HPP_
#define POLYCYC_REWRITE_HPP_

#include <optional>  // for optional
#include <utility>   // for move
#include <vector>    // for vector

#include "element.hpp"  // for Element
#include "words.hpp"    // for letter_type

namespace polycyc {

  struct GenLetter {
    letter_type index = 0;
    bool inverse      = false;

    friend bool operator==(GenLetter const&, GenLetter const&) = default;
    friend auto operator<=>(GenLetter const&, GenLetter const&) = default;
  };

  [[nodiscard]] constexpr GenLetter pos(letter_type i) noexcept {
    return GenLetter{i, false};
  }

  [[nodiscard]] constexpr GenLetter inv(letter_type i) noexcept {
    return GenLetter{i, true};
  }

  //! The empty word denotes the identity.
  using GenWord = std::vector<GenLetter>;

  //! Either zero or a reduced word of shape (inverse letters)(positive
  //! letters). An empty optional is zero.
  class NormalForm {
   public:
    [[nodiscard]] static NormalForm zero() {
      return NormalForm();
    }

    //! \p w must be reduced; this is not checked.
    [[nodiscard]] static NormalForm reduced(GenWord w) {
      NormalForm nf;
      nf._word = std::move(w);
      return nf;
    }

    [[nodiscard]] bool is_zero() const noexcept {
      return !_word.has_value();
    }

    //! Only valid when !is_zero().
    [[nodiscard]] GenWord const& word() const {
      return _word.value();
    }

    friend bool operator==(NormalForm const&, NormalForm const&) = default;

   private:
    NormalForm() = default;
    std::optional<GenWord> _word;
  };

  //! Single left-to-right stack pass. An inverse letter cancels a positive
  //! stack top of the same index, collapses the whole word to zero against a
  //! positive top of a different index, and is pushed otherwise.
  [[nodiscard]] NormalForm reduce(GenWord const& w);

  //! True iff no positive letter is immediately followed by an inverse
  //! letter.
  [[nodiscard]] bool is_reduced(GenWord const& w) noexcept;

  //! The product of the images (e, i) of p_i and (i, e) of p_i^-1.
  [[nodiscard]] Element encode(GenWord const& w);

  [[nodiscard]] Element encode(NormalForm const& nf);

  //! (u, v) becomes the inverse letters of u in order followed by the
  //! positive letters of v in reverse order, so encode(decode(x)) == x.
  [[nodiscard]] NormalForm decode(Element const& x);

}  // namespace polycyc

#endif  // POLYCYC_REWRITE_HPP_
