#include "polycyc/element.hpp"

#include <algorithm>  // for sort

#include "polycyc/error.hpp"  // for Error

namespace polycyc {

  std::strong_ordering operator<=>(Element const& x, Element const& y) noexcept {
    if (x.is_zero() || y.is_zero()) {
      return y.is_zero() <=> x.is_zero();
    }
    if (auto c = x.dom().size() <=> y.dom().size(); c != 0) {
      return c;
    }
    if (auto c = x.ran().size() <=> y.ran().size(); c != 0) {
      return c;
    }
    if (auto c = x.dom() <=> y.dom(); c != 0) {
      return c;
    }
    return x.ran() <=> y.ran();
  }

  Element generator(letter_type i) {
    return Element(Word(), Word{i});
  }

  Element inverse_generator(letter_type i) {
    return Element(Word{i}, Word());
  }

  Element idempotent(Word const& w) {
    return Element(w, w);
  }

  Element multiply(Element const& x, Element const& y) {
    if (x.is_zero() || y.is_zero()) {
      return Element::zero();
    }
    // x maps u1 w to v1 w, and y maps u2 w to v2 w. The composite is defined
    // on those u1 w with v1 w in u2 M, which is non-empty iff v1 and u2 are
    // prefix comparable.
    Word const& u1 = x.dom();
    Word const& v1 = x.ran();
    Word const& u2 = y.dom();
    Word const& v2 = y.ran();
    if (is_prefix(v1, u2)) {
      return Element(concat(u1, strip_prefix(v1, u2)), v2);
    } else if (is_prefix(u2, v1)) {
      return Element(u1, concat(v2, strip_prefix(u2, v1)));
    }
    return Element::zero();
  }

  Element inverse(Element const& x) {
    if (x.is_zero()) {
      return x;
    }
    return Element(x.ran(), x.dom());
  }

  Element power(Element const& x, std::size_t n) {
    Element result = Element::one();
    for (std::size_t i = 0; i < n; ++i) {
      result = multiply(x, result);
      if (result.is_zero()) {
        break;
      }
    }
    return result;
  }

  bool is_idempotent(Element const& x) noexcept {
    return x.is_zero() || x.dom() == x.ran();
  }

  Element dom_idem(Element const& x) {
    return x.is_zero() ? x : idempotent(x.dom());
  }

  Element ran_idem(Element const& x) {
    return x.is_zero() ? x : idempotent(x.ran());
  }

  namespace {
    void require_idempotent(Element const& e) {
      if (!is_idempotent(e)) {
        throw Error(ErrorCode::not_idempotent,
                    "expected an idempotent (w|w) or 0");
      }
    }

    void require_nonzero_idempotent(Element const& e) {
      require_idempotent(e);
      if (e.is_zero()) {
        throw Error(ErrorCode::zero_argument,
                    "expected a non-zero idempotent");
      }
    }
  }  // namespace

  Element meet_idem(Element const& e, Element const& f) {
    require_idempotent(e);
    require_idempotent(f);
    if (e.is_zero() || f.is_zero()) {
      return Element::zero();
    }
    if (is_prefix(f.dom(), e.dom())) {
      return e;
    } else if (is_prefix(e.dom(), f.dom())) {
      return f;
    }
    return Element::zero();
  }

  bool natural_leq(Element const& x, Element const& y) {
    if (x.is_zero()) {
      return true;
    } else if (y.is_zero()) {
      return false;
    } else if (!is_prefix(y.dom(), x.dom())) {
      return false;
    }
    Word const z = strip_prefix(y.dom(), x.dom());
    return x.ran() == concat(y.ran(), z);
  }

  std::vector<Element> up_set(Element const& e) {
    require_idempotent(e);
    if (e.is_zero()) {
      throw Error(ErrorCode::zero_has_full_up_set,
                  "every idempotent lies above 0");
    }
    std::vector<Element> result;
    result.reserve(e.dom().size() + 1);
    for (std::size_t n = 0; n <= e.dom().size(); ++n) {
      result.push_back(idempotent(e.dom().prefix(n)));
    }
    return result;
  }

  std::vector<Element> tree_children(Element const& e,
                                     std::size_t    alphabet_bound) {
    require_nonzero_idempotent(e);
    std::vector<Element> result;
    result.reserve(alphabet_bound);
    for (letter_type a = 0; a < alphabet_bound; ++a) {
      result.push_back(idempotent(concat(e.dom(), Word{a})));
    }
    return result;
  }

  bool green(Element const& x, Element const& y, Green rel) {
    if (x.is_zero() || y.is_zero()) {
      return x.is_zero() && y.is_zero();
    }
    switch (rel) {
      case Green::R:
        return x.dom() == y.dom();
      case Green::L:
        return x.ran() == y.ran();
      case Green::H:
        return x.dom() == y.dom() && x.ran() == y.ran();
      case Green::D:
      case Green::J:
        return true;
    }
    return false;
  }

  bool is_r_class_of_identity(Element const& x) noexcept {
    return !x.is_zero() && x.dom().empty();
  }

  Element connect(Element const& e, Element const& f) {
    require_nonzero_idempotent(e);
    require_nonzero_idempotent(f);
    return Element(e.dom(), f.dom());
  }

  std::vector<Element> universe(std::size_t alphabet_size,
                                std::size_t max_len) {
    auto const           words = enumerate_words(alphabet_size, max_len);
    std::vector<Element> result;
    result.reserve(words.size() * words.size() + 1);
    result.push_back(Element::zero());
    for (auto const& u : words) {
      for (auto const& v : words) {
        result.emplace_back(u, v);
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

}  // namespace polycyc
