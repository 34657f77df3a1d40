#include "polycyc/rewrite.hpp"

#include <algorithm>  // for reverse

namespace polycyc {

  NormalForm reduce(GenWord const& w) {
    GenWord stack;
    stack.reserve(w.size());
    for (auto const& g : w) {
      if (g.inverse && !stack.empty() && !stack.back().inverse) {
        if (stack.back().index != g.index) {
          return NormalForm::zero();
        }
        stack.pop_back();
      } else {
        stack.push_back(g);
      }
    }
    return NormalForm::reduced(std::move(stack));
  }

  bool is_reduced(GenWord const& w) noexcept {
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
      if (!w[t].inverse && w[t + 1].inverse) {
        return false;
      }
    }
    return true;
  }

  Element encode(GenWord const& w) {
    Element result = Element::one();
    for (auto const& g : w) {
      result = multiply(result,
                        g.inverse ? inverse_generator(g.index)
                                  : generator(g.index));
      if (result.is_zero()) {
        break;
      }
    }
    return result;
  }

  Element encode(NormalForm const& nf) {
    return nf.is_zero() ? Element::zero() : encode(nf.word());
  }

  NormalForm decode(Element const& x) {
    if (x.is_zero()) {
      return NormalForm::zero();
    }
    GenWord w;
    w.reserve(x.dom().size() + x.ran().size());
    for (auto a : x.dom()) {
      w.push_back(inv(a));
    }
    auto const first_pos = w.size();
    for (auto a : x.ran()) {
      w.push_back(pos(a));
    }
    std::reverse(w.begin() + first_pos, w.end());
    return NormalForm::reduced(std::move(w));
  }

}  // namespace polycyc
