#include "polycyc/congruence.hpp"

#include <string>  // for to_string

#include "polycyc/error.hpp"  // for Error

namespace polycyc {

  namespace {

    class TraceBuilder {
     public:
      std::size_t axiom(Element const& x, Element const& y) {
        return push({x, y}, rule::Axiom{});
      }

      std::size_t lmul(Element const& c, std::size_t ref) {
        auto const& [p, q] = pair(ref);
        return push({multiply(c, p), multiply(c, q)}, rule::LMul{c, ref});
      }

      std::size_t rmul(Element const& c, std::size_t ref) {
        auto const& [p, q] = pair(ref);
        return push({multiply(p, c), multiply(q, c)}, rule::RMul{c, ref});
      }

      std::size_t sym(std::size_t ref) {
        auto const& [p, q] = pair(ref);
        return push({q, p}, rule::Sym{ref});
      }

      std::size_t trans(std::size_t first, std::size_t second) {
        return push({pair(first).first, pair(second).second},
                    rule::Trans{first, second});
      }

      // From (p, q) to (e^-1 p e', e^-1 q e') with e = (e, u) and
      // e' = (v, e), skipping multipliers equal to one.
      std::size_t sandwich(Word const& u, Word const& v, std::size_t ref) {
        if (!u.empty()) {
          ref = lmul(Element(Word(), u), ref);
        }
        if (!v.empty()) {
          ref = rmul(Element(v, Word()), ref);
        }
        return ref;
      }

      ElementPair const& pair(std::size_t ref) const {
        return _steps[ref].pair;
      }

      DerivationTrace finish() && {
        ElementPair goal = _steps.back().pair;
        return DerivationTrace{std::move(_steps), std::move(goal)};
      }

     private:
      std::size_t push(ElementPair p, Rule r) {
        _steps.push_back(Step{std::move(p), std::move(r)});
        return _steps.size() - 1;
      }

      std::vector<Step> _steps;
    };

    Element sandwiched(Word const& u, Element const& x, Word const& v) {
      return multiply(multiply(Element(Word(), u), x), Element(v, Word()));
    }

    // Continues from a step (1, z) with z != 1 to a step (1, 0).
    std::size_t collapse_from_one(TraceBuilder& b, std::size_t cur) {
      while (true) {
        Element const z = b.pair(cur).second;
        if (z.is_zero()) {
          return cur;
        }
        Word const& s = z.dom();
        Word const& t = z.ran();
        if (s == t) {
          // (s, s) with s non-empty; a one letter idempotent j disjoint from
          // s kills it.
          letter_type const j   = s[0] == 0 ? 1 : 0;
          Element const     jj  = idempotent(Word{j});
          cur                   = b.lmul(jj, cur);
          cur                   = b.lmul(Element(Word(), Word{j}), cur);
          return b.rmul(Element(Word{j}, Word()), cur);
        } else if (!prefix_comparable(s, t)) {
          // z^2 = 0, so (1, z) * z = (z, 0).
          return b.trans(cur, b.rmul(z, cur));
        } else if (is_prefix(s, t)) {
          // (s, s w) to (1, (e, w)) to (1, (w, w)).
          Word const w = strip_prefix(s, t);
          cur          = b.sandwich(s, s, cur);
          Element const g_inv(w, Word());
          auto const    left  = b.sym(b.rmul(g_inv, cur));
          auto const    right = b.lmul(g_inv, cur);
          cur                 = b.trans(left, right);
        } else {
          // (t w, t) to (1, (w, e)) to (1, (e, w)).
          Word const w = strip_prefix(t, s);
          cur          = b.sandwich(t, t, cur);
          cur          = b.sym(b.lmul(Element(Word(), w), cur));
        }
      }
    }

  }  // namespace

  DerivationTrace derive_collapse(Element const& x, Element const& y) {
    if (x == y) {
      throw Error(ErrorCode::equal_arguments,
                  "a pair of equal elements generates the identity congruence");
    }
    TraceBuilder b;
    std::size_t  cur = b.axiom(x, y);

    if (x.is_zero() || y.is_zero()) {
      Element const& z = x.is_zero() ? y : x;
      cur              = b.sandwich(z.dom(), z.ran(), cur);
      if (b.pair(cur).first.is_zero()) {
        cur = b.sym(cur);
      }
      return std::move(b).finish();
    }

    Element const z = sandwiched(y.dom(), x, y.ran());
    if (!z.is_one()) {
      cur = b.sym(b.sandwich(y.dom(), y.ran(), cur));
    } else {
      // Both sandwiches are one only when x == y.
      cur = b.sandwich(x.dom(), x.ran(), cur);
    }
    collapse_from_one(b, cur);
    return std::move(b).finish();
  }

  DerivationTrace derive_universal(Element const& x,
                                   Element const& y,
                                   Element const& a,
                                   Element const& b) {
    auto trace = derive_collapse(x, y);
    if (a.is_one() && b.is_zero()) {
      return trace;
    }
    auto& steps = trace.steps;
    auto  push  = [&steps](ElementPair p, Rule r) {
      steps.push_back(Step{std::move(p), std::move(r)});
      return steps.size() - 1;
    };
    std::size_t const collapse = steps.size() - 1;
    auto const        to_a     = push({a, Element::zero()},
                           rule::LMul{a, collapse});
    auto const        to_b     = push({b, Element::zero()},
                           rule::LMul{b, collapse});
    auto const        from_b   = push({Element::zero(), b}, rule::Sym{to_b});
    push({a, b}, rule::Trans{to_a, from_b});
    trace.goal = {a, b};
    return trace;
  }

  namespace {
    struct StepChecker {
      std::vector<Step> const& steps;
      std::size_t              index;

      bool valid_ref(std::size_t ref) const noexcept {
        return ref < index;
      }

      // Returns an empty string when the step is justified.
      std::string operator()(rule::Axiom const&) const {
        return index == 0 ? "" : "axiom used after step 0";
      }

      std::string operator()(rule::Refl const& r) const {
        return steps[index].pair == ElementPair{r.z, r.z}
                   ? ""
                   : "refl pair is not (z, z)";
      }

      std::string operator()(rule::LMul const& r) const {
        if (!valid_ref(r.ref)) {
          return "lmul refers to a later step";
        }
        auto const& [p, q] = steps[r.ref].pair;
        return steps[index].pair == ElementPair{multiply(r.by, p),
                                                multiply(r.by, q)}
                   ? ""
                   : "lmul pair does not match recomputed products";
      }

      std::string operator()(rule::RMul const& r) const {
        if (!valid_ref(r.ref)) {
          return "rmul refers to a later step";
        }
        auto const& [p, q] = steps[r.ref].pair;
        return steps[index].pair == ElementPair{multiply(p, r.by),
                                                multiply(q, r.by)}
                   ? ""
                   : "rmul pair does not match recomputed products";
      }

      std::string operator()(rule::Sym const& r) const {
        if (!valid_ref(r.ref)) {
          return "sym refers to a later step";
        }
        auto const& [p, q] = steps[r.ref].pair;
        return steps[index].pair == ElementPair{q, p} ? ""
                                                      : "sym pair is not swapped";
      }

      std::string operator()(rule::Trans const& r) const {
        if (!valid_ref(r.first) || !valid_ref(r.second)) {
          return "trans refers to a later step";
        }
        auto const& [p, q1] = steps[r.first].pair;
        auto const& [q2, s] = steps[r.second].pair;
        if (q1 != q2) {
          return "trans middles differ";
        }
        return steps[index].pair == ElementPair{p, s}
                   ? ""
                   : "trans pair does not chain its references";
      }
    };
  }  // namespace

  VerifyResult verify_trace(DerivationTrace const& t) {
    if (t.steps.empty()) {
      return {false, std::nullopt, "trace has no steps"};
    }
    if (!std::holds_alternative<rule::Axiom>(t.steps.front().rule)) {
      return {false, 0, "step 0 is not the axiom"};
    }
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      auto reason = std::visit(StepChecker{t.steps, i}, t.steps[i].rule);
      if (!reason.empty()) {
        return {false, i, std::move(reason)};
      }
    }
    if (t.steps.back().pair != t.goal) {
      return {false, std::nullopt, "last step does not derive the goal"};
    }
    return {true, std::nullopt, ""};
  }

}  // namespace polycyc
