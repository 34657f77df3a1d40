// This file contains exact solvers for the one-sided equations
// alpha * chi = beta and chi * alpha = beta with alpha, beta non-zero. Both
// solution sets are finite.

#ifndef POLYCYC_SOLVER_HPP_
#define POLYCYC_SOLVER_HPP_

#include <cstddef>  // for size_t

#include "element.hpp"  // for Element, ElementSet

namespace polycyc {

  enum class Side { left, right };

  //! Every non-zero chi with alpha * chi = beta. For alpha = (a, b) there are
  //! at most |b| + 2 of them.
  //!
  //! \throws Error with ErrorCode::zero_argument if alpha or beta is zero.
  [[nodiscard]] ElementSet solve_right(Element const& alpha,
                                       Element const& beta);

  //! Every non-zero chi with chi * alpha = beta.
  //!
  //! \throws Error with ErrorCode::zero_argument if alpha or beta is zero.
  [[nodiscard]] ElementSet solve_left(Element const& alpha,
                                      Element const& beta);

  [[nodiscard]] ElementSet solve(Element const& alpha,
                                 Element const& beta,
                                 Side          side);

  //! Filters every non-zero (u, v) with |u|, |v| <= max_len over the
  //! alphabet {0, ..., alphabet_size - 1} by direct multiplication.
  [[nodiscard]] ElementSet brute_force_solve(Element const& alpha,
                                             Element const& beta,
                                             Side           side,
                                             std::size_t    alphabet_size,
                                             std::size_t    max_len);

}  // namespace polycyc

#endif  // POLYCYC_SOLVER_HPP_
