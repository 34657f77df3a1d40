#include "polycyc/embeddings.hpp"

#include <algorithm>  // for all_of, min

#include "polycyc/error.hpp"  // for Error

namespace polycyc {

  MatrixUnit matrix_unit_mul(MatrixUnit const& x,
                             MatrixUnit const& y) noexcept {
    if (x.is_zero() || y.is_zero() || x.col() != y.row()) {
      return MatrixUnit::zero();
    }
    return MatrixUnit(x.row(), y.col());
  }

  namespace {
    // b^i a with a = 0, b = 1. Distinct exponents give prefix incomparable
    // words.
    Word staircase(std::uint64_t i) {
      return concat(repeat(Word{1}, i), Word{0});
    }
  }  // namespace

  Element embed_matrix_unit(std::uint64_t i, std::uint64_t j) {
    return Element(staircase(i), staircase(j));
  }

  Element embed_matrix_unit(MatrixUnit const& m) {
    return m.is_zero() ? Element::zero() : embed_matrix_unit(m.row(), m.col());
  }

  BicyclicElt bicyclic_mul(BicyclicElt const& x, BicyclicElt const& y) noexcept {
    auto const t = std::min(x.l, y.k);
    return BicyclicElt{x.k + y.k - t, x.l + y.l - t};
  }

  Element p1_iso(BicyclicElt const& x) {
    return Element(repeat(Word{0}, x.k), repeat(Word{0}, x.l));
  }

  Element embed_bicyclic(Word const& v, BicyclicElt const& x) {
    if (v.empty()) {
      throw Error(ErrorCode::empty_period,
                  "the period word must be non-empty");
    }
    Element const g(Word(), v);
    return multiply(power(inverse(g), x.k), power(g, x.l));
  }

  std::set<letter_type> support(Element const& x) {
    std::set<letter_type> result(x.dom().begin(), x.dom().end());
    result.insert(x.ran().begin(), x.ran().end());
    return result;
  }

  bool in_submonoid(Element const& x, std::set<letter_type> const& gens) {
    return std::ranges::all_of(support(x),
                               [&gens](auto a) { return gens.contains(a); });
  }

}  // namespace polycyc
