// This file contains the element type of the polycyclic monoid and its exact
// arithmetic: products, inverses, idempotents, the natural partial order, and
// Green's relations.
//
// A non-zero element is stored as a pair (u, v) of words. It denotes the
// partial bijection of the free monoid with domain u M and range v M sending
// u w to v w. Products compose left to right: x * y applies x first and then
// y. Under this convention the generator p_i is (e, i), and the product
// p_0 p_1 is (e, 10); the letters of a positive generator word accumulate in
// reverse order.

#ifndef POLYCYC_ELEMENT_HPP_
#define POLYCYC_ELEMENT_HPP_

#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <set>      // for set
#include <vector>   // for vector

#include "words.hpp"  // for Word

namespace polycyc {

  class Element {
   public:
    //! The identity (e, e).
    Element() = default;

    Element(Word u, Word v) : _zero(false), _u(std::move(u)), _v(std::move(v)) {}

    [[nodiscard]] static Element zero() {
      Element x;
      x._zero = true;
      return x;
    }

    [[nodiscard]] static Element one() {
      return Element();
    }

    [[nodiscard]] bool is_zero() const noexcept {
      return _zero;
    }

    [[nodiscard]] bool is_one() const noexcept {
      return !_zero && _u.empty() && _v.empty();
    }

    //! The domain prefix u. Empty for zero.
    [[nodiscard]] Word const& dom() const noexcept {
      return _u;
    }

    //! The range prefix v. Empty for zero.
    [[nodiscard]] Word const& ran() const noexcept {
      return _v;
    }

    friend bool operator==(Element const&, Element const&) = default;

    //! Zero first, then by (|u|, |v|, u, v) with words compared
    //! lexicographically. This is the order used for printing sets.
    friend std::strong_ordering operator<=>(Element const& x,
                                            Element const& y) noexcept;

   private:
    bool _zero = false;
    Word _u;
    Word _v;
  };

  using ElementSet = std::set<Element>;

  //! The generator p_i, i.e. (e, i).
  [[nodiscard]] Element generator(letter_type i);

  //! The inverse generator p_i^-1, i.e. (i, e).
  [[nodiscard]] Element inverse_generator(letter_type i);

  //! The idempotent (w, w).
  [[nodiscard]] Element idempotent(Word const& w);

  [[nodiscard]] Element multiply(Element const& x, Element const& y);

  [[nodiscard]] Element inverse(Element const& x);

  //! x^0 = 1, x^n = x * x^(n-1).
  [[nodiscard]] Element power(Element const& x, std::size_t n);

  [[nodiscard]] bool is_idempotent(Element const& x) noexcept;

  //! x * x^-1.
  [[nodiscard]] Element dom_idem(Element const& x);

  //! x^-1 * x.
  [[nodiscard]] Element ran_idem(Element const& x);

  //! The semilattice operation on idempotents: the longer of the two when
  //! one prefix-extends the other, otherwise zero.
  //!
  //! \throws Error with ErrorCode::not_idempotent
  [[nodiscard]] Element meet_idem(Element const& e, Element const& f);

  //! The natural partial order: x <= y iff x = (x * x^-1) * y. Zero is the
  //! minimum; for non-zero elements this says x = (u z, v z) where
  //! y = (u, v).
  [[nodiscard]] bool natural_leq(Element const& x, Element const& y);

  //! All idempotents above the non-zero idempotent \p e; the result is the
  //! chain of prefixes of e's word, of size |u| + 1.
  //!
  //! \throws Error with ErrorCode::not_idempotent or
  //! ErrorCode::zero_has_full_up_set
  [[nodiscard]] std::vector<Element> up_set(Element const& e);

  //! The idempotents covered by \p e in the tree of idempotents, restricted
  //! to the letters 0, ..., alphabet_bound - 1.
  [[nodiscard]] std::vector<Element> tree_children(Element const& e,
                                                   std::size_t alphabet_bound);

  enum class Green { R, L, H, D, J };

  //! Green's relations. For non-zero elements R compares domains, L
  //! compares ranges, H compares both, and D = J relates any two non-zero
  //! elements. Zero is related only to itself.
  [[nodiscard]] bool green(Element const& x, Element const& y, Green rel);

  //! True iff x * x^-1 = 1, i.e. x is a product of positive generators.
  [[nodiscard]] bool is_r_class_of_identity(Element const& x) noexcept;

  //! An element x with x * x^-1 = e and x^-1 * x = f, for non-zero
  //! idempotents e and f.
  //!
  //! \throws Error with ErrorCode::not_idempotent or ErrorCode::zero_argument
  [[nodiscard]] Element connect(Element const& e, Element const& f);

  //! Zero together with every (u, v) where u and v are words over
  //! {0, ..., alphabet_size - 1} of length at most \p max_len, in the order
  //! of operator<=>.
  [[nodiscard]] std::vector<Element> universe(std::size_t alphabet_size,
                                              std::size_t max_len);

}  // namespace polycyc

#endif  // POLYCYC_ELEMENT_HPP_
