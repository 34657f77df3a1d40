#include "polycyc/checks.hpp"

#include <algorithm>   // for shuffle
#include <chrono>      // for steady_clock
#include <iterator>    // for back_inserter
#include <set>         // for set
#include <string>      // for string, to_string
#include <map>         // for map
#include <random>      // for mt19937_64, uniform_int_distribution

#include "polycyc/congruence.hpp"  // for derive_collapse, verify_trace
#include "polycyc/element.hpp"     // for Element, universe
#include "polycyc/embeddings.hpp"  // for embed_matrix_unit, bicyclic_mul
#include "polycyc/error.hpp"       // for Error
#include "polycyc/rewrite.hpp"     // for reduce, encode, decode
#include "polycyc/solver.hpp"      // for solve_right, brute_force_solve
#include "polycyc/text.hpp"        // for format_element
#include "polycyc/topology.hpp"    // for preimage_right, continuity_witness

namespace polycyc {

  std::size_t CheckReport::cases() const noexcept {
    std::size_t n = 0;
    for (auto const& p : properties) {
      n += p.cases;
    }
    return n;
  }

  std::size_t CheckReport::failures() const noexcept {
    std::size_t n = 0;
    for (auto const& p : properties) {
      n += p.failures;
    }
    return n;
  }

  namespace {

    class Property {
     public:
      explicit Property(std::string name) {
        _result.name = std::move(name);
      }

      template <typename Describe>
      void check(bool ok, Describe&& describe) {
        ++_result.cases;
        if (!ok) {
          ++_result.failures;
          if (!_result.counterexample) {
            _result.counterexample = describe();
          }
        }
      }

      PropertyResult result() && {
        return std::move(_result);
      }

     private:
      PropertyResult _result;
    };

    std::string show(Element const& x) {
      return format_element(x);
    }

    std::string show(Element const& x, Element const& y) {
      return show(x) + " " + show(y);
    }

    std::string show(Element const& x, Element const& y, Element const& z) {
      return show(x) + " " + show(y) + " " + show(z);
    }

    std::string show(ElementSet const& s) {
      std::string out = "{";
      for (auto const& x : s) {
        out += (out.size() > 1 ? ", " : "") + show(x);
      }
      return out + "}";
    }

    std::vector<Element> nonzero(std::vector<Element> const& xs) {
      std::vector<Element> out;
      std::copy_if(xs.begin(), xs.end(), std::back_inserter(out), [](auto const& x) {
        return !x.is_zero();
      });
      return out;
    }

    // All generator words of length at most max_len over p_0 .. p_{n - 1} and
    // their inverses.
    std::vector<GenWord> enumerate_genwords(std::size_t n, std::size_t max_len) {
      std::vector<GenLetter> symbols;
      for (letter_type i = 0; i < n; ++i) {
        symbols.push_back(pos(i));
        symbols.push_back(inv(i));
      }
      std::vector<GenWord> result{GenWord{}};
      std::size_t          first = 0;
      for (std::size_t len = 1; len <= max_len; ++len) {
        auto const last = result.size();
        for (auto i = first; i < last; ++i) {
          for (auto const& g : symbols) {
            auto w = result[i];
            w.push_back(g);
            result.push_back(std::move(w));
          }
        }
        first = last;
      }
      return result;
    }

    // Rewrites redexes in a random order rather than left to right.
    NormalForm reduce_random_order(GenWord w, std::mt19937_64& rng) {
      while (true) {
        std::vector<std::size_t> redexes;
        for (std::size_t t = 0; t + 1 < w.size(); ++t) {
          if (!w[t].inverse && w[t + 1].inverse) {
            redexes.push_back(t);
          }
        }
        if (redexes.empty()) {
          return NormalForm::reduced(std::move(w));
        }
        std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
        auto const t = redexes[pick(rng)];
        if (w[t].index != w[t + 1].index) {
          return NormalForm::zero();
        }
        w.erase(w.begin() + t, w.begin() + t + 2);
      }
    }

    std::string show(GenWord const& w) {
      return "[" + format_genword(w) + "]";
    }

    ////////////////////////////////////////////////////////////////////////
    // core
    ////////////////////////////////////////////////////////////////////////

    CheckReport check_core(CheckOptions const& opts) {
      CheckReport report{"core", {}, {}};
      auto const  U   = universe(opts.alphabet, opts.max_len);
      auto const  one = Element::one();

      {
        Property p("associativity");
        for (auto const& x : U) {
          for (auto const& y : U) {
            auto const xy = multiply(x, y);
            for (auto const& z : U) {
              p.check(multiply(xy, z) == multiply(x, multiply(y, z)),
                      [&] { return show(x, y, z); });
            }
          }
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property p("inverse axioms");
        for (auto const& x : U) {
          auto const xi = inverse(x);
          p.check(multiply(multiply(x, xi), x) == x
                      && multiply(multiply(xi, x), xi) == xi,
                  [&] { return show(x); });
        }
        for (auto const& x : U) {
          for (auto const& y : U) {
            p.check(inverse(multiply(x, y)) == multiply(inverse(y), inverse(x)),
                    [&] { return show(x, y); });
          }
        }
        report.properties.push_back(std::move(p).result());
      }
      std::vector<Element> idempotents;
      std::copy_if(U.begin(), U.end(), std::back_inserter(idempotents), [](auto const& x) {
        return is_idempotent(x);
      });
      {
        Property p("idempotents commute and meet");
        for (auto const& e : idempotents) {
          p.check(multiply(e, e) == e, [&] { return show(e); });
          for (auto const& f : idempotents) {
            auto const ef = multiply(e, f);
            p.check(ef == multiply(f, e) && ef == meet_idem(e, f),
                    [&] { return show(e, f); });
          }
        }
        for (auto const& x : U) {
          p.check(is_idempotent(x) == (multiply(x, x) == x),
                  [&] { return show(x); });
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property p("combinatorial");
        for (std::size_t i = 0; i < U.size(); ++i) {
          for (std::size_t j = i + 1; j < U.size(); ++j) {
            p.check(!green(U[i], U[j], Green::H),
                    [&] { return show(U[i], U[j]); });
          }
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property p("0-E-unitary");
        for (auto const& x : U) {
          for (auto const& e : idempotents) {
            if (e.is_zero()) {
              continue;
            }
            auto const xe = multiply(x, e);
            if (!xe.is_zero() && is_idempotent(xe)) {
              p.check(is_idempotent(x), [&] { return show(x, e); });
            }
          }
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property p("0-bisimple");
        for (auto const& e : idempotents) {
          for (auto const& f : idempotents) {
            if (e.is_zero() || f.is_zero()) {
              continue;
            }
            auto const x = connect(e, f);
            p.check(multiply(x, inverse(x)) == e && multiply(inverse(x), x) == f
                        && green(x, e, Green::R) && green(x, f, Green::L),
                    [&] { return show(e, f); });
          }
        }
        auto const nz = nonzero(U);
        for (auto const& x : nz) {
          for (auto const& y : nz) {
            p.check(green(x, y, Green::D) && green(x, y, Green::J),
                    [&] { return show(x, y); });
          }
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property p("green by idempotents");
        for (auto const& x : U) {
          for (auto const& y : U) {
            bool const r = dom_idem(x) == dom_idem(y);
            bool const l = ran_idem(x) == ran_idem(y);
            p.check(green(x, y, Green::R) == r && green(x, y, Green::L) == l
                        && green(x, y, Green::H) == (r && l),
                    [&] { return show(x, y); });
          }
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property p("R-class of the identity");
        for (auto const& x : U) {
          bool const a = is_r_class_of_identity(x);
          p.check(a == green(x, one, Green::R) && a == (dom_idem(x) == one)
                      && a == (!x.is_zero() && x.dom().empty()),
                  [&] { return show(x); });
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property p("natural partial order");
        for (auto const& x : U) {
          p.check(natural_leq(x, x) && natural_leq(Element::zero(), x),
                  [&] { return show(x); });
          for (auto const& y : U) {
            bool const leq = natural_leq(x, y);
            p.check(leq == (x == multiply(dom_idem(x), y)),
                    [&] { return show(x, y); });
            if (leq && natural_leq(y, x)) {
              p.check(x == y, [&] { return show(x, y); });
            }
            if (is_idempotent(x) && is_idempotent(y) && !x.is_zero()
                && !y.is_zero()) {
              p.check(leq == is_prefix(y.dom(), x.dom()),
                      [&] { return show(x, y); });
            }
            if (!leq) {
              continue;
            }
            for (auto const& z : U) {
              if (natural_leq(y, z)) {
                p.check(natural_leq(x, z), [&] { return show(x, y, z); });
              }
            }
          }
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property p("up sets are chains");
        for (auto const& e : idempotents) {
          if (e.is_zero()) {
            continue;
          }
          auto const up = up_set(e);
          bool       ok = up.size() == e.dom().size() + 1;
          for (auto const& f : up) {
            ok = ok && natural_leq(e, f);
            for (auto const& g : up) {
              ok = ok && (natural_leq(f, g) || natural_leq(g, f));
            }
          }
          for (auto const& c : tree_children(e, opts.alphabet)) {
            ok = ok && natural_leq(c, e) && c != e;
          }
          p.check(ok, [&] { return show(e); });
        }
        report.properties.push_back(std::move(p).result());
      }
      return report;
    }

    ////////////////////////////////////////////////////////////////////////
    // rewrite
    ////////////////////////////////////////////////////////////////////////

    CheckReport check_rewrite(CheckOptions const& opts) {
      CheckReport report{"rewrite", {}, {}};
      std::mt19937_64 rng(opts.seed);
      {
        Property p("presentation relations");
        auto const n = std::max<std::size_t>(opts.alphabet, 5);
        for (letter_type i = 0; i < n; ++i) {
          for (letter_type j = 0; j < n; ++j) {
            auto const x = encode(GenWord{pos(i), inv(j)});
            p.check(i == j ? x.is_one() : x.is_zero(), [&] {
              return show(GenWord{pos(i), inv(j)});
            });
          }
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property   p("homomorphism");
        auto const words = enumerate_genwords(opts.alphabet, 3);
        for (auto const& w1 : words) {
          auto const e1 = encode(w1);
          for (auto const& w2 : words) {
            GenWord w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            p.check(encode(w) == multiply(e1, encode(w2)),
                    [&] { return show(w1) + " " + show(w2); });
          }
        }
        report.properties.push_back(std::move(p).result());
      }
      auto const words = enumerate_genwords(opts.alphabet, 3 * opts.max_len);
      {
        Property p("reduce preserves value");
        for (auto const& w : words) {
          auto const nf = reduce(w);
          p.check(encode(w) == encode(nf)
                      && (nf.is_zero()
                          || (is_reduced(nf.word()) && nf.word().size() <= w.size())),
                  [&] { return show(w); });
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property p("confluence");
        for (auto const& w : words) {
          p.check(reduce(w) == reduce_random_order(w, rng),
                  [&] { return show(w); });
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property p("round trip");
        for (auto const& x : universe(opts.alphabet, opts.max_len)) {
          auto const nf = decode(x);
          p.check((nf.is_zero() || is_reduced(nf.word())) && encode(nf) == x,
                  [&] { return show(x); });
        }
        for (auto const& w : words) {
          if (is_reduced(w)) {
            p.check(decode(encode(w)) == NormalForm::reduced(w),
                    [&] { return show(w); });
          }
        }
        report.properties.push_back(std::move(p).result());
      }
      return report;
    }

    ////////////////////////////////////////////////////////////////////////
    // solver
    ////////////////////////////////////////////////////////////////////////

    CheckReport check_solver(CheckOptions const& opts) {
      CheckReport report{"solver", {}, {}};
      auto const  nz    = nonzero(universe(opts.alphabet, opts.max_len));
      auto const  bound = 2 * opts.max_len;
      Property    right("solve_right equals brute force");
      Property    left("solve_left equals brute force");
      Property    size("solution count at most |b| + 2");
      Property    dual("left/right duality");
      for (auto const& alpha : nz) {
        for (auto const& beta : nz) {
          auto const r = solve_right(alpha, beta);
          auto const l = solve_left(alpha, beta);
          right.check(
              r == brute_force_solve(alpha, beta, Side::right, opts.alphabet, bound),
              [&] { return show(alpha, beta) + " -> " + show(r); });
          left.check(
              l == brute_force_solve(alpha, beta, Side::left, opts.alphabet, bound),
              [&] { return show(alpha, beta) + " -> " + show(l); });
          size.check(r.size() <= alpha.ran().size() + 2
                         && l.size() <= alpha.dom().size() + 2,
                     [&] { return show(alpha, beta); });
          ElementSet flipped;
          for (auto const& chi : solve_right(inverse(alpha), inverse(beta))) {
            flipped.insert(inverse(chi));
          }
          dual.check(l == flipped, [&] { return show(alpha, beta); });
        }
      }
      Property        longer("no solutions beyond the bound");
      std::mt19937_64 rng(opts.seed);
      std::uniform_int_distribution<std::size_t> pick(0, nz.size() - 1);
      for (int i = 0; i < 20; ++i) {
        auto const& alpha = nz[pick(rng)];
        auto const& beta  = nz[pick(rng)];
        for (auto side : {Side::right, Side::left}) {
          longer.check(
              solve(alpha, beta, side)
                  == brute_force_solve(alpha, beta, side, opts.alphabet, bound + 2),
              [&] { return show(alpha, beta); });
        }
      }
      for (auto* p : {&right, &left, &size, &dual, &longer}) {
        report.properties.push_back(std::move(*p).result());
      }
      return report;
    }

    ////////////////////////////////////////////////////////////////////////
    // congruence
    ////////////////////////////////////////////////////////////////////////

    // Replaces one element of a non-axiom step's pair by a different one.
    DerivationTrace mutate(DerivationTrace t, std::mt19937_64& rng) {
      std::uniform_int_distribution<std::size_t> pick(1, t.steps.size() - 1);
      auto& pair = t.steps[pick(rng)].pair;
      auto& side = rng() % 2 == 0 ? pair.first : pair.second;
      side       = side == Element::one() ? Element::zero() : Element::one();
      return t;
    }

    CheckReport check_congruence(CheckOptions const& opts) {
      CheckReport report{"congruence", {}, {}};
      auto const  U = universe(opts.alphabet, opts.max_len);
      std::mt19937_64              rng(opts.seed);
      std::vector<DerivationTrace> sample;
      {
        Property   p("collapse witnesses verify");
        auto const goal = ElementPair{Element::one(), Element::zero()};
        for (auto const& x : U) {
          for (auto const& y : U) {
            if (x == y) {
              continue;
            }
            auto const t = derive_collapse(x, y);
            p.check(verify_trace(t).ok && t.goal == goal && t.steps.size() <= 20
                        && t.steps.front().pair == ElementPair{x, y},
                    [&] { return show(x, y); });
            if (rng() % 16 == 0 && sample.size() < 100) {
              sample.push_back(t);
            }
          }
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property p("mutated traces rejected");
        for (std::size_t i = 0; i < 100 && !sample.empty(); ++i) {
          auto const t = mutate(sample[i % sample.size()], rng);
          p.check(!verify_trace(t).ok, [&] { return trace_to_json(t, -1); });
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property p("json round trip");
        for (auto const& t : sample) {
          p.check(trace_from_json(trace_to_json(t)) == t,
                  [&] { return trace_to_json(t, -1); });
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property p("universal witnesses verify");
        std::uniform_int_distribution<std::size_t> pick(0, U.size() - 1);
        for (int i = 0; i < 500; ++i) {
          auto const& x = U[pick(rng)];
          auto        y = U[pick(rng)];
          if (x == y) {
            y = x.is_zero() ? Element::one() : Element::zero();
          }
          auto const& a = U[pick(rng)];
          auto const& b = U[pick(rng)];
          auto const  t = derive_universal(x, y, a, b);
          p.check(verify_trace(t).ok && t.goal == ElementPair{a, b},
                  [&] { return show(x, y) + " to " + show(a, b); });
        }
        report.properties.push_back(std::move(p).result());
      }
      return report;
    }

    ////////////////////////////////////////////////////////////////////////
    // embeddings
    ////////////////////////////////////////////////////////////////////////

    CheckReport check_embeddings(CheckOptions const& opts) {
      CheckReport report{"embeddings", {}, {}};
      {
        Property p("matrix units embed");
        std::map<Element, MatrixUnit> seen;
        for (std::uint64_t i = 0; i <= 5; ++i) {
          for (std::uint64_t j = 0; j <= 5; ++j) {
            MatrixUnit const m(i, j);
            seen.emplace(embed_matrix_unit(m), m);
            for (std::uint64_t k = 0; k <= 5; ++k) {
              for (std::uint64_t l = 0; l <= 5; ++l) {
                MatrixUnit const n(k, l);
                p.check(multiply(embed_matrix_unit(m), embed_matrix_unit(n))
                            == embed_matrix_unit(matrix_unit_mul(m, n)),
                        [&] {
                          return "[" + std::to_string(i) + "," + std::to_string(j)
                                 + "] [" + std::to_string(k) + ","
                                 + std::to_string(l) + "]";
                        });
              }
            }
          }
        }
        p.check(seen.size() == 36, [] { return std::string("not injective"); });
        report.properties.push_back(std::move(p).result());
      }
      {
        Property p("bicyclic monoid");
        auto     show_b = [](BicyclicElt const& x) {
          return "(" + std::to_string(x.k) + "," + std::to_string(x.l) + ")";
        };
        Word const                v{0, 1};
        std::vector<BicyclicElt> elts;
        for (std::uint64_t k = 0; k <= 5; ++k) {
          for (std::uint64_t l = 0; l <= 5; ++l) {
            elts.push_back({k, l});
          }
        }
        std::set<Element> images_p1, images_v;
        for (auto const& x : elts) {
          images_p1.insert(p1_iso(x));
          images_v.insert(embed_bicyclic(v, x));
          for (auto const& y : elts) {
            auto const xy = bicyclic_mul(x, y);
            p.check(p1_iso(xy) == multiply(p1_iso(x), p1_iso(y))
                        && embed_bicyclic(v, xy)
                               == multiply(embed_bicyclic(v, x),
                                           embed_bicyclic(v, y)),
                    [&] { return show_b(x) + " " + show_b(y); });
            if (x.k > 4 || x.l > 4 || y.k > 4 || y.l > 4) {
              continue;
            }
            for (auto const& z : elts) {
              if (z.k > 4 || z.l > 4) {
                continue;
              }
              p.check(bicyclic_mul(xy, z) == bicyclic_mul(x, bicyclic_mul(y, z)),
                      [&] { return show_b(x) + show_b(y) + show_b(z); });
            }
          }
        }
        p.check(images_p1.size() == elts.size() && images_v.size() == elts.size(),
                [] { return std::string("not injective"); });
        for (auto const& w : enumerate_words(opts.alphabet, opts.max_len)) {
          if (w.empty()) {
            continue;
          }
          Element const g(Word(), w);
          p.check(dom_idem(g).is_one() && !ran_idem(g).is_one(),
                  [&] { return show(g); });
        }
        report.properties.push_back(std::move(p).result());
      }
      {
        Property   p("support closure");
        auto const U = universe(opts.alphabet, opts.max_len);
        for (auto const& x : U) {
          auto const sx = support(x);
          p.check(support(inverse(x)) == sx, [&] { return show(x); });
          for (auto const& y : U) {
            auto both = sx;
            both.merge(support(y));
            p.check(in_submonoid(multiply(x, y), both), [&] { return show(x, y); });
          }
        }
        report.properties.push_back(std::move(p).result());
      }
      return report;
    }

    ////////////////////////////////////////////////////////////////////////
    // topology
    ////////////////////////////////////////////////////////////////////////

    CheckReport check_topology(CheckOptions const& opts) {
      CheckReport     report{"topology", {}, {}};
      auto const      nz      = nonzero(universe(opts.alphabet, opts.max_len));
      auto const      big     = universe(opts.alphabet, 2 * opts.max_len);
      auto const      replay  = universe(opts.alphabet, opts.max_len + 1);
      std::mt19937_64 rng(opts.seed);
      std::uniform_int_distribution<std::size_t> pick(0, nz.size() - 1);
      std::uniform_int_distribution<std::size_t> count(0, 3);

      Property exact("preimages match brute force");
      Property cont("separate continuity at 0");
      Property bound("preimage size bound");
      Property mono("monotonicity");
      Property inv_w("inversion witness");
      for (int i = 0; i < 1000; ++i) {
        auto const& x = nz[pick(rng)];
        ElementSet  A;
        for (auto n = count(rng); n > 0; --n) {
          A.insert(nz[pick(rng)]);
        }
        auto const describe = [&] { return show(x) + " " + show(A); };
        auto const R        = preimage_right(x, A);
        auto const L        = preimage_left(x, A);
        ElementSet bf_r, bf_l;
        for (auto const& a : big) {
          if (A.contains(multiply(x, a))) {
            bf_r.insert(a);
          }
          if (A.contains(multiply(a, x))) {
            bf_l.insert(a);
          }
        }
        exact.check(R == bf_r && L == bf_l, describe);
        bound.check(R.size() <= A.size() * (x.ran().size() + 2)
                        && L.size() <= A.size() * (x.dom().size() + 2),
                    describe);

        CofiniteNbhd const U(A);
        auto const         Vr = continuity_witness(x, U, Side::right);
        auto const         Vl = continuity_witness(x, U, Side::left);
        bool               ok = true;
        for (auto const& a : replay) {
          if (Vr.contains(a)) {
            ok = ok && U.contains(multiply(x, a));
          }
          if (Vl.contains(a)) {
            ok = ok && U.contains(multiply(a, x));
          }
        }
        cont.check(ok, describe);

        if (!A.empty()) {
          ElementSet smaller = A;
          smaller.erase(smaller.begin());
          auto const Rs = preimage_right(x, smaller);
          mono.check(std::includes(R.begin(), R.end(), Rs.begin(), Rs.end()),
                     describe);
        }

        auto const Vi = inversion_witness(U);
        bool       ok_inv = true;
        for (auto const& a : replay) {
          if (Vi.contains(a)) {
            ok_inv = ok_inv && U.contains(inverse(a));
          }
        }
        inv_w.check(ok_inv, describe);
      }
      for (auto* p : {&exact, &cont, &bound, &mono, &inv_w}) {
        report.properties.push_back(std::move(*p).result());
      }
      return report;
    }

    using SuiteFn = CheckReport (*)(CheckOptions const&);

    std::vector<std::pair<std::string, SuiteFn>> const& suite_table() {
      static std::vector<std::pair<std::string, SuiteFn>> const table
          = {{"core", &check_core},
             {"rewrite", &check_rewrite},
             {"solver", &check_solver},
             {"congruence", &check_congruence},
             {"embeddings", &check_embeddings},
             {"topology", &check_topology}};
      return table;
    }

  }  // namespace

  std::vector<std::string> const& check_suites() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& [name, fn] : suite_table()) {
        out.push_back(name);
      }
      return out;
    }();
    return names;
  }

  std::vector<CheckReport> run_checks(std::string const&  suite,
                                      CheckOptions const& opts) {
    if (opts.max_len < 1) {
      throw Error(ErrorCode::invalid_argument, "max-len must be at least 1");
    }
    if (opts.alphabet < 2) {
      throw Error(ErrorCode::invalid_argument, "alphabet must be at least 2");
    }
    std::vector<CheckReport> reports;
    bool                     found = false;
    for (auto const& [name, fn] : suite_table()) {
      if (suite != "all" && suite != name) {
        continue;
      }
      found      = true;
      auto start = std::chrono::steady_clock::now();
      auto r     = fn(opts);
      r.wall_time = std::chrono::steady_clock::now() - start;
      reports.push_back(std::move(r));
    }
    if (!found) {
      throw Error(ErrorCode::invalid_argument, "unknown suite \"" + suite + "\"");
    }
    return reports;
  }

}  // namespace polycyc
