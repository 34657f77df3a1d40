// This file contains derivation traces in the congruence generated by a single
// pair of elements, a generator that collapses any distinct pair to (1, 0),
// and an independent checker for such traces.
//
// A trace is an append-only list of steps. Every step records the pair it
// derives and the closure rule that justifies it; rules refer to earlier
// steps by index. The rules are those of a two-sided semigroup congruence:
//
//   axiom       the generating pair, step 0 only
//   refl z      (z, z)
//   lmul c, n   (c p, c q) from step n = (p, q)
//   rmul c, n   (p c, q c) from step n = (p, q)
//   sym n       (q, p) from step n = (p, q)
//   trans n, m  (p, r) from step n = (p, q) and step m = (q, r)
//
// There is deliberately no rule inverting both sides.

#ifndef POLYCYC_CONGRUENCE_HPP_
#define POLYCYC_CONGRUENCE_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <stdexcept> // for runtime_error
#include <string>    // for string
#include <utility>   // for pair
#include <variant>   // for variant
#include <vector>    // for vector

#include "element.hpp"  // for Element

namespace polycyc {

  using ElementPair = std::pair<Element, Element>;

  namespace rule {
    struct Axiom {
      friend bool operator==(Axiom const&, Axiom const&) = default;
    };
    struct Refl {
      Element z;
      friend bool operator==(Refl const&, Refl const&) = default;
    };
    struct LMul {
      Element     by;
      std::size_t ref;
      friend bool operator==(LMul const&, LMul const&) = default;
    };
    struct RMul {
      Element     by;
      std::size_t ref;
      friend bool operator==(RMul const&, RMul const&) = default;
    };
    struct Sym {
      std::size_t ref;
      friend bool operator==(Sym const&, Sym const&) = default;
    };
    struct Trans {
      std::size_t first;
      std::size_t second;
      friend bool operator==(Trans const&, Trans const&) = default;
    };
  }  // namespace rule

  using Rule
      = std::variant<rule::Axiom, rule::Refl, rule::LMul, rule::RMul, rule::Sym, rule::Trans>;

  struct Step {
    ElementPair pair;
    Rule        rule;

    friend bool operator==(Step const&, Step const&) = default;
  };

  struct DerivationTrace {
    std::vector<Step> steps;
    ElementPair       goal;

    friend bool operator==(DerivationTrace const&, DerivationTrace const&)
        = default;
  };

  //! A trace with axiom (x, y) and goal (1, 0).
  //!
  //! \throws Error with ErrorCode::equal_arguments if x == y.
  [[nodiscard]] DerivationTrace derive_collapse(Element const& x,
                                                Element const& y);

  //! A trace with axiom (x, y) and goal (a, b), built by extending
  //! derive_collapse.
  //!
  //! \throws Error with ErrorCode::equal_arguments if x == y.
  [[nodiscard]] DerivationTrace derive_universal(Element const& x,
                                                 Element const& y,
                                                 Element const& a,
                                                 Element const& b);

  struct VerifyResult {
    bool ok = false;
    //! Index of the first step that failed its check; empty when the trace
    //! is accepted or when the failure is not attributable to a step (no
    //! steps, goal mismatch).
    std::optional<std::size_t> failing_step;
    std::string                reason;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  //! Replays every step of \p t by recomputing products with multiply. Shares
  //! nothing else with the generator.
  [[nodiscard]] VerifyResult verify_trace(DerivationTrace const& t);

  //! Thrown by trace_from_json for documents that are valid JSON but not a
  //! well-formed trace, e.g. an unknown rule type.
  class TraceFormatError : public std::runtime_error {
   public:
    TraceFormatError(std::optional<std::size_t> step, std::string const& what)
        : std::runtime_error(what), _step(step) {}

    [[nodiscard]] std::optional<std::size_t> step() const noexcept {
      return _step;
    }

   private:
    std::optional<std::size_t> _step;
  };

  //! Serializes to
  //! {"goal": [x, y], "steps": [{"i": n, "pair": [x, y], "rule": {...}}]}
  //! with element literals as produced by format_element.
  [[nodiscard]] std::string trace_to_json(DerivationTrace const& t,
                                          int                    indent = 2);

  //! \throws ParseError on malformed JSON or element literals, and
  //! TraceFormatError on a structurally invalid trace.
  [[nodiscard]] DerivationTrace trace_from_json(std::string const& text);

}  // namespace polycyc

#endif  // POLYCYC_CONGRUENCE_HPP_
