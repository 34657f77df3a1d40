// This file contains the comparison structures that live inside the
// polycyclic monoid: the semigroup of matrix units B_omega, the bicyclic
// monoid, and finite-support submonoids.

#ifndef POLYCYC_EMBEDDINGS_HPP_
#define POLYCYC_EMBEDDINGS_HPP_

#include <cstdint>  // for uint64_t
#include <set>      // for set

#include "element.hpp"  // for Element
#include "words.hpp"    // for Word, letter_type

namespace polycyc {

  //! An element of the semigroup of omega x omega matrix units: either zero
  //! or a unit (row, col).
  class MatrixUnit {
   public:
    MatrixUnit(std::uint64_t row, std::uint64_t col)
        : _zero(false), _row(row), _col(col) {}

    [[nodiscard]] static MatrixUnit zero() {
      MatrixUnit m(0, 0);
      m._zero = true;
      return m;
    }

    [[nodiscard]] bool is_zero() const noexcept {
      return _zero;
    }

    [[nodiscard]] std::uint64_t row() const noexcept {
      return _row;
    }

    [[nodiscard]] std::uint64_t col() const noexcept {
      return _col;
    }

    friend bool operator==(MatrixUnit const&, MatrixUnit const&) = default;

   private:
    bool          _zero;
    std::uint64_t _row;
    std::uint64_t _col;
  };

  //! (a, b) * (c, d) = (a, d) if b = c and zero otherwise.
  [[nodiscard]] MatrixUnit matrix_unit_mul(MatrixUnit const& x,
                                           MatrixUnit const& y) noexcept;

  //! The unit (i, j) as the element (b^i a, b^j a) with a = 0 and b = 1.
  [[nodiscard]] Element embed_matrix_unit(std::uint64_t i, std::uint64_t j);

  //! Zero goes to zero; units go through embed_matrix_unit.
  [[nodiscard]] Element embed_matrix_unit(MatrixUnit const& m);

  //! The bicyclic element q^k p^l, where p q = 1.
  struct BicyclicElt {
    std::uint64_t k = 0;
    std::uint64_t l = 0;

    friend bool operator==(BicyclicElt const&, BicyclicElt const&) = default;
  };

  //! q^k p^l * q^m p^n = q^(k + m - min(l, m)) p^(l + n - min(l, m)).
  [[nodiscard]] BicyclicElt bicyclic_mul(BicyclicElt const& x,
                                         BicyclicElt const& y) noexcept;

  //! The isomorphism of the bicyclic monoid onto the non-zero part of P_1:
  //! (k, l) goes to (0^k, 0^l).
  [[nodiscard]] Element p1_iso(BicyclicElt const& x);

  //! The copy of the bicyclic monoid generated by g = (e, v) and its inverse:
  //! (k, l) goes to (g^-1)^k g^l = (v^k, v^l).
  //!
  //! \throws Error with ErrorCode::empty_period if \p v is empty.
  [[nodiscard]] Element embed_bicyclic(Word const& v, BicyclicElt const& x);

  //! The letters occurring in either component; empty for zero and one.
  [[nodiscard]] std::set<letter_type> support(Element const& x);

  [[nodiscard]] bool in_submonoid(Element const&               x,
                                  std::set<letter_type> const& gens);

}  // namespace polycyc

#endif  // POLYCYC_EMBEDDINGS_HPP_
