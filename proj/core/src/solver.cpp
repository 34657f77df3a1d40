#include "polycyc/solver.hpp"

#include "polycyc/error.hpp"  // for Error

namespace polycyc {

  namespace {
    void require_nonzero(Element const& alpha, Element const& beta) {
      if (alpha.is_zero() || beta.is_zero()) {
        throw Error(ErrorCode::zero_argument,
                    "the solution set of an equation with a zero side is "
                    "not finite");
      }
    }
  }  // namespace

  ElementSet solve_right(Element const& alpha, Element const& beta) {
    require_nonzero(alpha, beta);
    Word const& a = alpha.dom();
    Word const& b = alpha.ran();
    Word const& c = beta.dom();
    Word const& d = beta.ran();

    ElementSet candidates;
    // chi = (b z, x): the product is (a z, x).
    if (is_prefix(a, c)) {
      candidates.emplace(concat(b, strip_prefix(a, c)), d);
    }
    // chi = (s, x) with b = s z: the product is (a, x z).
    if (a == c) {
      for (std::size_t n = 0; n <= b.size(); ++n) {
        Word const s = b.prefix(n);
        Word const z = strip_prefix(s, b);
        if (is_suffix(z, d)) {
          candidates.emplace(s, strip_suffix(z, d));
        }
      }
    }

    ElementSet result;
    for (auto const& chi : candidates) {
      if (multiply(alpha, chi) == beta) {
        result.insert(chi);
      }
    }
    return result;
  }

  ElementSet solve_left(Element const& alpha, Element const& beta) {
    require_nonzero(alpha, beta);
    ElementSet result;
    for (auto const& chi : solve_right(inverse(alpha), inverse(beta))) {
      Element const sol = inverse(chi);
      if (multiply(sol, alpha) == beta) {
        result.insert(sol);
      }
    }
    return result;
  }

  ElementSet solve(Element const& alpha, Element const& beta, Side side) {
    return side == Side::right ? solve_right(alpha, beta)
                               : solve_left(alpha, beta);
  }

  ElementSet brute_force_solve(Element const& alpha,
                               Element const& beta,
                               Side           side,
                               std::size_t    alphabet_size,
                               std::size_t    max_len) {
    ElementSet  result;
    auto const words = enumerate_words(alphabet_size, max_len);
    for (auto const& u : words) {
      for (auto const& v : words) {
        Element const chi(u, v);
        Element const product
            = side == Side::right ? multiply(alpha, chi) : multiply(chi, alpha);
        if (product == beta) {
          result.insert(chi);
        }
      }
    }
    return result;
  }

}  // namespace polycyc
