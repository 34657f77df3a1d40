#include <string>  // for string

#include "json.hpp"  // for nlohmann::json

#include "polycyc/congruence.hpp"  // for DerivationTrace
#include "polycyc/error.hpp"       // for ParseError
#include "polycyc/text.hpp"        // for format_element, parse_element_literal

namespace polycyc {

  using json = nlohmann::ordered_json;

  namespace {

    json pair_to_json(ElementPair const& p) {
      return json::array({format_element(p.first), format_element(p.second)});
    }

    struct RuleToJson {
      json operator()(rule::Axiom const&) const {
        return {{"type", "axiom"}};
      }
      json operator()(rule::Refl const& r) const {
        return {{"type", "refl"}, {"by", format_element(r.z)}};
      }
      json operator()(rule::LMul const& r) const {
        return {{"type", "lmul"},
                {"by", format_element(r.by)},
                {"refs", json::array({r.ref})}};
      }
      json operator()(rule::RMul const& r) const {
        return {{"type", "rmul"},
                {"by", format_element(r.by)},
                {"refs", json::array({r.ref})}};
      }
      json operator()(rule::Sym const& r) const {
        return {{"type", "sym"}, {"refs", json::array({r.ref})}};
      }
      json operator()(rule::Trans const& r) const {
        return {{"type", "trans"},
                {"refs", json::array({r.first, r.second})}};
      }
    };

    Element element_from_json(json const& j, std::optional<std::size_t> step) {
      if (!j.is_string()) {
        throw TraceFormatError(step, "element literal must be a string");
      }
      return parse_element_literal(j.get<std::string>());
    }

    ElementPair pair_from_json(json const& j, std::optional<std::size_t> step) {
      if (!j.is_array() || j.size() != 2) {
        throw TraceFormatError(step, "pair must be an array of two elements");
      }
      return {element_from_json(j[0], step), element_from_json(j[1], step)};
    }

    std::vector<std::size_t> refs_from_json(json const& r,
                                            std::size_t expected,
                                            std::size_t step) {
      if (!r.contains("refs") || !r["refs"].is_array()
          || r["refs"].size() != expected) {
        throw TraceFormatError(step,
                               "rule needs " + std::to_string(expected)
                                   + " reference(s)");
      }
      std::vector<std::size_t> refs;
      for (auto const& n : r["refs"]) {
        if (!n.is_number_unsigned()) {
          throw TraceFormatError(step, "reference must be a step index");
        }
        refs.push_back(n.get<std::size_t>());
      }
      return refs;
    }

    Rule rule_from_json(json const& r, std::size_t step) {
      if (!r.is_object() || !r.contains("type") || !r["type"].is_string()) {
        throw TraceFormatError(step, "rule must be an object with a type");
      }
      auto const type = r["type"].get<std::string>();
      auto       by   = [&]() {
        if (!r.contains("by")) {
          throw TraceFormatError(step, type + " rule needs a multiplier");
        }
        return element_from_json(r["by"], step);
      };
      if (type == "axiom") {
        return rule::Axiom{};
      } else if (type == "refl") {
        return rule::Refl{by()};
      } else if (type == "lmul") {
        return rule::LMul{by(), refs_from_json(r, 1, step)[0]};
      } else if (type == "rmul") {
        return rule::RMul{by(), refs_from_json(r, 1, step)[0]};
      } else if (type == "sym") {
        return rule::Sym{refs_from_json(r, 1, step)[0]};
      } else if (type == "trans") {
        auto const refs = refs_from_json(r, 2, step);
        return rule::Trans{refs[0], refs[1]};
      }
      throw TraceFormatError(step, "unknown rule type \"" + type + "\"");
    }

  }  // namespace

  std::string trace_to_json(DerivationTrace const& t, int indent) {
    json steps = json::array();
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      steps.push_back({{"i", i},
                       {"pair", pair_to_json(t.steps[i].pair)},
                       {"rule", std::visit(RuleToJson{}, t.steps[i].rule)}});
    }
    json doc = {{"goal", pair_to_json(t.goal)}, {"steps", std::move(steps)}};
    return doc.dump(indent);
  }

  DerivationTrace trace_from_json(std::string const& text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(e.byte, "malformed JSON");
    }
    if (!doc.is_object() || !doc.contains("goal") || !doc.contains("steps")
        || !doc["steps"].is_array()) {
      throw TraceFormatError(std::nullopt,
                             "trace must be an object with goal and steps");
    }
    DerivationTrace t;
    t.goal = pair_from_json(doc["goal"], std::nullopt);
    for (std::size_t i = 0; i < doc["steps"].size(); ++i) {
      auto const& s = doc["steps"][i];
      if (!s.is_object() || !s.contains("pair") || !s.contains("rule")) {
        throw TraceFormatError(i, "step must have a pair and a rule");
      }
      if (s.contains("i")
          && (!s["i"].is_number_unsigned() || s["i"].get<std::size_t>() != i)) {
        throw TraceFormatError(i, "step index out of sequence");
      }
      t.steps.push_back(
          Step{pair_from_json(s["pair"], i), rule_from_json(s["rule"], i)});
    }
    return t;
  }

}  // namespace polycyc
