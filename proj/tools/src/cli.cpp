#include "polycyc/cli.hpp"

#include <algorithm>  // for reverse, max
#include <fstream>    // for ifstream, ofstream
#include <iomanip>    // for setprecision
#include <map>        // for map
#include <ostream>    // for ostream
#include <random>     // for mt19937_64
#include <sstream>    // for ostringstream, stringstream

#include "CLI11.hpp"  // for CLI::App
#include "json.hpp"   // for nlohmann::json

#include "polycyc/checks.hpp"      // for run_checks
#include "polycyc/congruence.hpp"  // for derive_collapse, verify_trace
#include "polycyc/element.hpp"     // for Element
#include "polycyc/embeddings.hpp"  // for embed_matrix_unit
#include "polycyc/error.hpp"       // for Error, ParseError
#include "polycyc/rewrite.hpp"     // for reduce, encode
#include "polycyc/solver.hpp"      // for solve
#include "polycyc/text.hpp"        // for parse_element, format_element
#include "polycyc/topology.hpp"    // for continuity_witness

namespace polycyc::cli {

  using nlohmann::json;

  namespace {

    std::string join(std::vector<std::string> const& parts) {
      std::string out;
      for (auto const& p : parts) {
        out += (out.empty() ? "" : " ") + p;
      }
      return out;
    }

    json to_json(ElementSet const& s) {
      json out = json::array();
      for (auto const& x : s) {
        out.push_back(format_element(x));
      }
      return out;
    }

    json to_json(std::vector<Element> const& xs) {
      json out = json::array();
      for (auto const& x : xs) {
        out.push_back(format_element(x));
      }
      return out;
    }

    template <typename Range>
    void print_lines(std::ostream& out, Range const& xs) {
      for (auto const& x : xs) {
        out << format_element(x) << '\n';
      }
    }

    // Elements separated by ';', each in the syntax of parse_element.
    ElementSet parse_element_list(std::string const& text) {
      ElementSet  result;
      std::size_t start = 0;
      while (start <= text.size()) {
        auto end = text.find(';', start);
        if (end == std::string::npos) {
          end = text.size();
        }
        auto item = std::string_view(text).substr(start, end - start);
        while (!item.empty() && item.front() == ' ') {
          item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
          item.remove_suffix(1);
        }
        if (!item.empty()) {
          try {
            result.insert(parse_element(item));
          } catch (ParseError const& e) {
            throw ParseError(start + e.offset(), "bad element in list");
          }
        }
        start = end + 1;
      }
      return result;
    }

    Green parse_relation(std::string const& name) {
      static std::map<std::string, Green> const names = {
          {"R", Green::R}, {"L", Green::L}, {"H", Green::H}, {"D", Green::D}, {"J", Green::J}};
      auto it = names.find(name);
      if (it == names.end()) {
        throw Error(ErrorCode::invalid_argument,
                    "relation must be one of R, L, H, D, J");
      }
      return it->second;
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Error(ErrorCode::invalid_argument, "cannot read " + path);
      }
      std::stringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    letter_type max_letter(Element const& x) {
      letter_type m = 0;
      for (auto a : x.dom()) {
        m = std::max(m, a);
      }
      for (auto a : x.ran()) {
        m = std::max(m, a);
      }
      return m;
    }

    char const* bool_text(bool b) {
      return b ? "true" : "false";
    }

    // Options shared by the subcommands, filled in by CLI11.
    struct Options {
      bool json = false;

      std::vector<std::string> expr;

      std::string side = "right";
      std::string alpha, beta;

      std::string x, y;
      std::string rel;

      bool        up       = false;
      std::size_t children = 0;

      std::uint64_t i = 0, j = 0, k = 0, l = 0;
      std::string   period;

      std::vector<std::string> to;
      std::string              output;
      std::string              file;

      std::string   point;
      bool          left = false;
      bool          inv  = false;
      std::string   exclude;
      std::size_t   samples = 0;
      std::uint64_t seed    = 20161015;

      std::string suite    = "all";
      std::size_t max_len  = 2;
      std::size_t alphabet = 2;
      bool        timing   = false;
    };

    class Runner {
     public:
      Runner(Options const& opts, std::ostream& out, std::ostream& err)
          : _o(opts), _out(out), _err(err) {}

      int eval() {
        auto const x = parse_element(join(_o.expr));
        if (_o.json) {
          _out << json{{"element", format_element(x)}}.dump() << '\n';
        } else {
          _out << format_element(x) << '\n';
        }
        return ok;
      }

      int reduce_cmd() {
        auto const nf = reduce(parse_expression(join(_o.expr)));
        if (_o.json) {
          _out << json{{"normal_form", format_normal_form(nf)},
                       {"element", format_element(encode(nf))}}
                      .dump()
               << '\n';
        } else {
          _out << format_normal_form(nf) << '\n';
        }
        return ok;
      }

      int solve_cmd() {
        auto const side
            = _o.side == "left" ? Side::left : Side::right;
        auto const sols
            = solve(parse_element(_o.alpha), parse_element(_o.beta), side);
        if (_o.json) {
          _out << json{{"side", _o.side}, {"solutions", to_json(sols)}}.dump()
               << '\n';
        } else {
          print_lines(_out, sols);
        }
        return ok;
      }

      int green_cmd() {
        auto const x = parse_element(_o.x);
        auto const y = parse_element(_o.y);
        std::vector<std::string> rels{"R", "L", "H", "D", "J"};
        if (!_o.rel.empty()) {
          rels = {_o.rel};
        }
        json doc = json::object();
        for (auto const& r : rels) {
          bool const v = green(x, y, parse_relation(r));
          if (_o.json) {
            doc[r] = v;
          } else if (rels.size() == 1) {
            _out << bool_text(v) << '\n';
          } else {
            _out << r << ' ' << bool_text(v) << '\n';
          }
        }
        if (_o.json) {
          _out << doc.dump() << '\n';
        }
        return ok;
      }

      int order_cmd() {
        auto const x = parse_element(_o.x);
        if (_o.up) {
          auto const up = up_set(x);
          _o.json ? void(_out << json{{"up_set", to_json(up)}}.dump() << '\n')
                  : print_lines(_out, up);
        } else if (_o.children > 0) {
          auto const cs = tree_children(x, _o.children);
          _o.json ? void(_out << json{{"children", to_json(cs)}}.dump() << '\n')
                  : print_lines(_out, cs);
        } else {
          if (_o.y.empty()) {
            throw Error(ErrorCode::invalid_argument,
                        "order needs two elements, --up, or --children");
          }
          bool const v = natural_leq(x, parse_element(_o.y));
          if (_o.json) {
            _out << json{{"leq", v}}.dump() << '\n';
          } else {
            _out << bool_text(v) << '\n';
          }
        }
        return ok;
      }

      int embed_matrix() {
        MatrixUnit const m(_o.i, _o.j);
        auto const       x = embed_matrix_unit(m);
        if (_o.json) {
          _out << json{{"unit", unit_text(m)}, {"element", format_element(x)}}
                      .dump()
               << '\n';
        } else {
          _out << format_element(x) << '\n';
        }
        return ok;
      }

      int embed_bicyclic_cmd() {
        BicyclicElt const b{_o.k, _o.l};
        auto const        x = embed_bicyclic(parse_word(_o.period), b);
        return print_bicyclic(b, x);
      }

      int embed_p1() {
        BicyclicElt const b{_o.k, _o.l};
        return print_bicyclic(b, p1_iso(b));
      }

      int embed_support() {
        auto const s = support(parse_element(_o.x));
        if (_o.json) {
          _out << json{{"support", s}}.dump() << '\n';
        } else {
          std::string line;
          for (auto a : s) {
            line += (line.empty() ? "" : ",") + std::to_string(a);
          }
          _out << line << '\n';
        }
        return ok;
      }

      int witness() {
        auto const x = parse_element(_o.x);
        auto const y = parse_element(_o.y);
        DerivationTrace t;
        if (_o.to.empty()) {
          t = derive_collapse(x, y);
        } else if (_o.to.size() == 2) {
          t = derive_universal(
              x, y, parse_element(_o.to[0]), parse_element(_o.to[1]));
        } else {
          throw Error(ErrorCode::invalid_argument, "--to takes two elements");
        }
        auto const text = trace_to_json(t);
        if (_o.output.empty()) {
          _out << text << '\n';
        } else {
          std::ofstream f(_o.output);
          f << text << '\n';
          if (!f) {
            throw Error(ErrorCode::invalid_argument,
                        "cannot write " + _o.output);
          }
        }
        return ok;
      }

      int verify() {
        VerifyResult result;
        try {
          result = verify_trace(trace_from_json(read_file(_o.file)));
        } catch (TraceFormatError const& e) {
          result = VerifyResult{false, e.step(), e.what()};
        }
        if (_o.json) {
          _out << json{{"ok", result.ok},
                       {"failing_step",
                        result.failing_step ? json(*result.failing_step)
                                            : json(nullptr)},
                       {"reason", result.reason}}
                      .dump()
               << '\n';
        } else if (result.ok) {
          _out << "ok\n";
        } else {
          _out << "rejected";
          if (result.failing_step) {
            _out << " at step " << *result.failing_step;
          }
          _out << ": " << result.reason << '\n';
        }
        return result.ok ? ok : failure;
      }

      int nbhd() {
        auto const         x = parse_element(_o.point);
        CofiniteNbhd const U(parse_element_list(_o.exclude));
        auto const         side = _o.left ? Side::left : Side::right;
        auto const V = _o.inv ? inversion_witness(U) : continuity_witness(x, U, side);

        std::size_t failures = 0;
        if (_o.samples > 0) {
          letter_type top = max_letter(x);
          for (auto const& e : U.excluded()) {
            top = std::max(top, max_letter(e));
          }
          auto const      pool = universe(std::max<letter_type>(top + 1, 2), 3);
          std::mt19937_64 rng(_o.seed);
          std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
          for (std::size_t n = 0; n < _o.samples; ++n) {
            auto const& a = pool[pick(rng)];
            if (!V.contains(a)) {
              continue;
            }
            Element const image = _o.inv ? inverse(a)
                                  : side == Side::right ? multiply(x, a)
                                                        : multiply(a, x);
            if (!U.contains(image)) {
              ++failures;
            }
          }
        }
        if (_o.json) {
          json doc{{"excluded", to_json(V.excluded())}};
          if (_o.samples > 0) {
            doc["samples"]  = _o.samples;
            doc["failures"] = failures;
          }
          _out << doc.dump() << '\n';
        } else {
          print_lines(_out, V.excluded());
          if (_o.samples > 0) {
            _err << "checked " << _o.samples << " samples, " << failures
                 << " failures\n";
          }
        }
        return failures == 0 ? ok : failure;
      }

      int check() {
        CheckOptions opts;
        opts.max_len  = _o.max_len;
        opts.alphabet = _o.alphabet;
        opts.seed     = _o.seed;
        auto const reports = run_checks(_o.suite, opts);

        bool all_ok = true;
        json suites = json::array();
        for (auto const& r : reports) {
          all_ok = all_ok && r.ok();
          if (_o.json) {
            json props = json::array();
            for (auto const& p : r.properties) {
              props.push_back({{"name", p.name},
                               {"cases", p.cases},
                               {"failures", p.failures},
                               {"counterexample",
                                p.counterexample ? json(*p.counterexample)
                                                 : json(nullptr)}});
            }
            json s{{"suite", r.suite},
                   {"cases", r.cases()},
                   {"failures", r.failures()},
                   {"properties", std::move(props)}};
            if (_o.timing) {
              s["wall_time_s"] = r.wall_time.count();
            }
            suites.push_back(std::move(s));
            continue;
          }
          _out << r.suite << ": " << r.cases() << " cases, " << r.failures()
               << " failures";
          if (_o.timing) {
            _out << " (" << std::fixed << std::setprecision(3)
                 << r.wall_time.count() << "s)";
          }
          _out << '\n';
          for (auto const& p : r.properties) {
            _out << "  " << (p.failures == 0 ? "ok   " : "FAIL ") << p.name
                 << ": " << p.cases << " cases, " << p.failures
                 << " failures";
            if (p.counterexample) {
              _out << "; first counterexample: " << *p.counterexample;
            }
            _out << '\n';
          }
        }
        if (_o.json) {
          _out << json{{"ok", all_ok}, {"suites", std::move(suites)}}.dump(2)
               << '\n';
        }
        return all_ok ? ok : failure;
      }

     private:
      static std::string unit_text(MatrixUnit const& m) {
        if (m.is_zero()) {
          return "0";
        }
        return "[" + std::to_string(m.row()) + "," + std::to_string(m.col())
               + "]";
      }

      int print_bicyclic(BicyclicElt const& b, Element const& x) {
        if (_o.json) {
          _out << json{{"bicyclic", {b.k, b.l}}, {"element", format_element(x)}}
                      .dump()
               << '\n';
        } else {
          _out << format_element(x) << '\n';
        }
        return ok;
      }

      Options const& _o;
      std::ostream&  _out;
      std::ostream&  _err;
    };

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    Options  o;
    CLI::App app{"Exact arithmetic in the polycyclic monoid", "polycyc"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Structured output");

    int (Runner::*action)() = nullptr;
    auto on = [&action](CLI::App* sub, int (Runner::*fn)()) {
      sub->callback([&action, fn] { action = fn; });
      return sub;
    };

    auto* eval = on(app.add_subcommand("eval", "Evaluate a product of generators "
                                               "and element literals"),
                    &Runner::eval);
    eval->add_option("expr", o.expr, "e.g. p0 p1' (0|1)")->expected(0, -1);

    auto* red = on(app.add_subcommand("reduce", "Normal form of a generator word"),
                   &Runner::reduce_cmd);
    red->add_option("expr", o.expr, "e.g. p0 p1 p1' p0'")->expected(0, -1);

    auto* sol = on(app.add_subcommand("solve", "Solve alpha*x = beta or "
                                               "x*alpha = beta"),
                   &Runner::solve_cmd);
    sol->add_option("--side", o.side, "right: alpha*x = beta, left: "
                                      "x*alpha = beta")
        ->check(CLI::IsMember({"left", "right"}));
    sol->add_option("alpha", o.alpha)->required();
    sol->add_option("beta", o.beta)->required();

    auto* gr = on(app.add_subcommand("green", "Green's relations"),
                  &Runner::green_cmd);
    gr->add_option("x", o.x)->required();
    gr->add_option("y", o.y)->required();
    gr->add_option("--rel", o.rel, "One of R, L, H, D, J; all if omitted")
        ->check(CLI::IsMember({"R", "L", "H", "D", "J"}));

    auto* ord = on(app.add_subcommand("order", "Natural partial order"),
                   &Runner::order_cmd);
    ord->add_option("x", o.x)->required();
    ord->add_option("y", o.y);
    ord->add_flag("--up", o.up, "Print the idempotents above x");
    ord->add_option("--children", o.children,
                    "Print the children of x over this many letters");

    auto* emb = app.add_subcommand("embed", "Embeddings into P_lambda");
    emb->require_subcommand(1, 1);
    auto* mat = on(emb->add_subcommand("matrix", "Matrix unit [i,j]"),
                   &Runner::embed_matrix);
    mat->add_option("i", o.i)->required();
    mat->add_option("j", o.j)->required();
    auto* bic = on(emb->add_subcommand("bicyclic", "q^k p^l in the copy "
                                                   "generated by (|v)"),
                   &Runner::embed_bicyclic_cmd);
    bic->add_option("v", o.period)->required();
    bic->add_option("k", o.k)->required();
    bic->add_option("l", o.l)->required();
    auto* p1 = on(emb->add_subcommand("p1", "q^k p^l in P_1"), &Runner::embed_p1);
    p1->add_option("k", o.k)->required();
    p1->add_option("l", o.l)->required();
    auto* sup = on(emb->add_subcommand("support", "Letters used by x"),
                   &Runner::embed_support);
    sup->add_option("x", o.x)->required();

    auto* wit = on(app.add_subcommand("witness", "Derivation collapsing the "
                                                 "congruence generated by (x, y)"),
                   &Runner::witness);
    wit->add_option("x", o.x)->required();
    wit->add_option("y", o.y)->required();
    wit->add_option("--to", o.to, "Derive (a, b) instead of (1, 0)")
        ->expected(2);
    wit->add_option("-o,--output", o.output, "Write the trace to a file");

    auto* ver = on(app.add_subcommand("verify", "Check a derivation trace"),
                   &Runner::verify);
    ver->add_option("file", o.file)->required();

    auto* nb = on(app.add_subcommand("nbhd", "Continuity witnesses for "
                                             "neighbourhoods of 0"),
                  &Runner::nbhd);
    nb->add_option("--point", o.point, "Translation by this element")
        ->required();
    nb->add_flag("--left", o.left, "Witness for a -> a*x instead of a -> x*a");
    nb->add_flag("--inverse", o.inv, "Witness for inversion instead");
    nb->add_option("--exclude", o.exclude,
                   "Finite excluded set, elements separated by ';'");
    nb->add_option("--check-samples", o.samples,
                   "Replay membership on this many random elements");
    nb->add_option("--seed", o.seed);

    auto* chk = on(app.add_subcommand("check", "Run property suites"),
                   &Runner::check);
    std::vector<std::string> suites{"all"};
    for (auto const& s : check_suites()) {
      suites.push_back(s);
    }
    chk->add_option("--suite", o.suite)->check(CLI::IsMember(suites));
    chk->add_option("--max-len", o.max_len)->check(CLI::PositiveNumber);
    chk->add_option("--alphabet", o.alphabet)->check(CLI::Range(2, 1 << 16));
    chk->add_option("--seed", o.seed);
    chk->add_flag("--timing", o.timing, "Report wall time per suite");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(std::move(reversed));
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? ok : usage;
    }

    Runner runner(o, out, err);
    try {
      return (runner.*action)();
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }
  }

}  // namespace polycyc::cli
