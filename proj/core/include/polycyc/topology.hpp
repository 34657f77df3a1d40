// This file contains the neighbourhood oracle of the Alexandroff
// compactification topology on the polycyclic monoid: every non-zero element
// is isolated, and the open neighbourhoods of zero are the cofinite sets that
// contain zero.

#ifndef POLYCYC_TOPOLOGY_HPP_
#define POLYCYC_TOPOLOGY_HPP_

#include "element.hpp"  // for Element, ElementSet
#include "solver.hpp"   // for Side

namespace polycyc {

  //! The open neighbourhood of zero obtained by removing a finite set of
  //! non-zero elements.
  class CofiniteNbhd {
   public:
    CofiniteNbhd() = default;

    //! \throws Error with ErrorCode::zero_in_target if \p excluded contains
    //! zero.
    explicit CofiniteNbhd(ElementSet excluded);

    [[nodiscard]] ElementSet const& excluded() const noexcept {
      return _excluded;
    }

    [[nodiscard]] bool contains(Element const& x) const {
      return x.is_zero() || !_excluded.contains(x);
    }

    friend bool operator==(CofiniteNbhd const&, CofiniteNbhd const&) = default;

   private:
    ElementSet _excluded;
  };

  //! { a : x * a in A }.
  //!
  //! \throws Error with ErrorCode::zero_argument if x is zero, or
  //! ErrorCode::zero_in_target if A contains zero.
  [[nodiscard]] ElementSet preimage_right(Element const&    x,
                                          ElementSet const& A);

  //! { a : a * x in A }.
  [[nodiscard]] ElementSet preimage_left(Element const& x, ElementSet const& A);

  //! A neighbourhood V of zero with x * V contained in U (Side::right) or
  //! V * x contained in U (Side::left).
  [[nodiscard]] CofiniteNbhd continuity_witness(Element const&      x,
                                                CofiniteNbhd const& U,
                                                Side side = Side::right);

  //! A neighbourhood V of zero with V^-1 contained in U.
  [[nodiscard]] CofiniteNbhd inversion_witness(CofiniteNbhd const& U);

}  // namespace polycyc

#endif  // POLYCYC_TOPOLOGY_HPP_
