#include "polycyc/topology.hpp"

#include "polycyc/error.hpp"  // for Error

namespace polycyc {

  namespace {
    void require_no_zero(ElementSet const& A) {
      if (A.contains(Element::zero())) {
        throw Error(ErrorCode::zero_in_target,
                    "0 lies in every neighbourhood of 0 and cannot be "
                    "excluded");
      }
    }

    ElementSet preimage(Element const& x, ElementSet const& A, Side side) {
      if (x.is_zero()) {
        throw Error(ErrorCode::zero_argument,
                    "translation by 0 is constant; the preimage is not finite");
      }
      require_no_zero(A);
      ElementSet result;
      for (auto const& beta : A) {
        result.merge(solve(x, beta, side));
      }
      return result;
    }
  }  // namespace

  CofiniteNbhd::CofiniteNbhd(ElementSet excluded)
      : _excluded(std::move(excluded)) {
    require_no_zero(_excluded);
  }

  ElementSet preimage_right(Element const& x, ElementSet const& A) {
    return preimage(x, A, Side::right);
  }

  ElementSet preimage_left(Element const& x, ElementSet const& A) {
    return preimage(x, A, Side::left);
  }

  CofiniteNbhd continuity_witness(Element const&      x,
                                  CofiniteNbhd const& U,
                                  Side                side) {
    return CofiniteNbhd(preimage(x, U.excluded(), side));
  }

  CofiniteNbhd inversion_witness(CofiniteNbhd const& U) {
    ElementSet excluded;
    for (auto const& a : U.excluded()) {
      excluded.insert(inverse(a));
    }
    return CofiniteNbhd(std::move(excluded));
  }

}  // namespace polycyc
