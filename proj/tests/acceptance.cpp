// Acceptance suite. Each criterion is checked exhaustively (or on the stated
// number of random samples) and reported on one line; the exit status is
// non-zero if any criterion fails.

#include <algorithm>   // for min
#include <cstdio>      // for printf
#include <functional>  // for function
#include <random>      // for mt19937_64
#include <string>      // for string
#include <vector>      // for vector

#include "polycyc/congruence.hpp"
#include "polycyc/element.hpp"
#include "polycyc/embeddings.hpp"
#include "polycyc/rewrite.hpp"
#include "polycyc/solver.hpp"
#include "polycyc/topology.hpp"

using namespace polycyc;

namespace {

  struct Tally {
    std::size_t cases    = 0;
    std::size_t failures = 0;

    void operator()(bool ok) {
      ++cases;
      failures += ok ? 0 : 1;
    }
  };

  struct Criterion {
    char const*            name;
    std::function<Tally()> body;
  };

  std::vector<Element> nonzero(std::vector<Element> const& xs) {
    std::vector<Element> out;
    for (auto const& x : xs) {
      if (!x.is_zero()) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<GenWord> generator_words(std::size_t n, std::size_t max_len) {
    std::vector<GenWord> out{GenWord{}};
    std::size_t          first = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      auto const last = out.size();
      for (auto i = first; i < last; ++i) {
        for (letter_type a = 0; a < n; ++a) {
          for (bool inverse : {false, true}) {
            auto w = out[i];
            w.push_back(GenLetter{a, inverse});
            out.push_back(std::move(w));
          }
        }
      }
      first = last;
    }
    return out;
  }

  // q^k p^l q^m p^n in the bicyclic monoid by erasing "pq" until none is
  // left.
  BicyclicElt bicyclic_by_rewriting(BicyclicElt const& x, BicyclicElt const& y) {
    std::string s = std::string(x.k, 'q') + std::string(x.l, 'p')
                    + std::string(y.k, 'q') + std::string(y.l, 'p');
    for (auto at = s.find("pq"); at != std::string::npos; at = s.find("pq")) {
      s.erase(at, 2);
    }
    auto const qs = s.find_first_not_of('q');
    auto const k  = qs == std::string::npos ? s.size() : qs;
    return BicyclicElt{k, s.size() - k};
  }

  Element const zero = Element::zero();
  Element const one  = Element::one();

}  // namespace

int main() {
  auto const U  = universe(2, 2);
  auto const NZ = nonzero(U);

  std::vector<Criterion> const criteria = {
      {"presentation relations p_i p_j^-1 (i,j in 0..4)",
       [] {
         Tally t;
         for (letter_type i = 0; i < 5; ++i) {
           for (letter_type j = 0; j < 5; ++j) {
             t(encode(GenWord{pos(i), inv(j)}) == (i == j ? one : zero));
           }
         }
         return t;
       }},
      {"associativity over U(2,2)",
       [&] {
         Tally t;
         for (auto const& x : U) {
           for (auto const& y : U) {
             auto const xy = multiply(x, y);
             for (auto const& z : U) {
               t(multiply(xy, z) == multiply(x, multiply(y, z)));
             }
           }
         }
         return t;
       }},
      {"representation isomorphism on generator words of length <= 6",
       [] {
         Tally t;
         for (auto const& w : generator_words(2, 6)) {
           auto const nf = reduce(w);
           auto const x  = encode(w);
           t(encode(nf) == x && decode(x) == nf);
         }
         return t;
       }},
      {"one-sided equations match brute force (bound 4), |set| <= |b| + 2",
       [&] {
         Tally t;
         for (auto const& alpha : NZ) {
           for (auto const& beta : NZ) {
             auto const r = solve_right(alpha, beta);
             auto const l = solve_left(alpha, beta);
             t(r == brute_force_solve(alpha, beta, Side::right, 2, 4)
               && r.size() <= alpha.ran().size() + 2);
             t(l == brute_force_solve(alpha, beta, Side::left, 2, 4)
               && l.size() <= alpha.dom().size() + 2);
           }
         }
         return t;
       }},
      {"combinatorial: no distinct H-equivalent pair in U(2,2)",
       [&] {
         Tally t;
         for (std::size_t i = 0; i < U.size(); ++i) {
           for (std::size_t j = i + 1; j < U.size(); ++j) {
             t(!green(U[i], U[j], Green::H));
           }
         }
         return t;
       }},
      {"0-E-unitary over U(2,2)",
       [&] {
         Tally t;
         for (auto const& x : U) {
           for (auto const& e : NZ) {
             if (!is_idempotent(e)) {
               continue;
             }
             auto const xe = multiply(x, e);
             if (!xe.is_zero() && is_idempotent(xe)) {
               t(is_idempotent(x));
             } else {
               t(true);
             }
           }
         }
         return t;
       }},
      {"0-bisimple: connect(e, f) for non-zero idempotents of U(2,2)",
       [&] {
         Tally t;
         for (auto const& e : NZ) {
           for (auto const& f : NZ) {
             if (is_idempotent(e) && is_idempotent(f)) {
               auto const x = connect(e, f);
               t(multiply(x, inverse(x)) == e && multiply(inverse(x), x) == f);
             }
           }
         }
         return t;
       }},
      {"congruence-free: 2450 collapse witnesses verify, 100 mutants rejected",
       [&] {
         Tally                        t;
         std::mt19937_64              rng(2016);
         std::vector<DerivationTrace> traces;
         for (auto const& x : U) {
           for (auto const& y : U) {
             if (x == y) {
               continue;
             }
             auto tr = derive_collapse(x, y);
             t(verify_trace(tr).ok && tr.goal == ElementPair{one, zero}
               && tr.steps.front().pair == ElementPair{x, y});
             traces.push_back(std::move(tr));
           }
         }
         t(traces.size() == 2450);
         for (int i = 0; i < 100; ++i) {
           auto  m    = traces[rng() % traces.size()];
           auto& step = m.steps[1 + rng() % (m.steps.size() - 1)];
           auto& side = rng() % 2 == 0 ? step.pair.first : step.pair.second;
           side       = side == one ? zero : one;
           t(!verify_trace(m).ok);
         }
         return t;
       }},
      {"matrix units embed multiplicatively and injectively (0..5)",
       [] {
         Tally      t;
         ElementSet images;
         for (std::uint64_t i = 0; i <= 5; ++i) {
           for (std::uint64_t j = 0; j <= 5; ++j) {
             MatrixUnit const m(i, j);
             images.insert(embed_matrix_unit(m));
             for (std::uint64_t k = 0; k <= 5; ++k) {
               for (std::uint64_t l = 0; l <= 5; ++l) {
                 MatrixUnit const n(k, l);
                 auto const       mn = matrix_unit_mul(m, n);
                 t(mn == (j == k ? MatrixUnit(i, l) : MatrixUnit::zero())
                   && multiply(embed_matrix_unit(m), embed_matrix_unit(n))
                          == embed_matrix_unit(mn));
               }
             }
           }
         }
         t(images.size() == 36);
         return t;
       }},
      {"bicyclic formula, P_1 and (|0,1) copies multiplicative (exponents <= 5)",
       [] {
         Tally      t;
         Word const v{0, 1};
         for (std::uint64_t k = 0; k <= 5; ++k) {
           for (std::uint64_t l = 0; l <= 5; ++l) {
             for (std::uint64_t m = 0; m <= 5; ++m) {
               for (std::uint64_t n = 0; n <= 5; ++n) {
                 BicyclicElt const x{k, l}, y{m, n};
                 auto const        xy = bicyclic_mul(x, y);
                 auto const        c  = std::min(l, m);
                 t(xy == bicyclic_by_rewriting(x, y)
                   && xy == BicyclicElt{k + m - c, l + n - c}
                   && p1_iso(xy) == multiply(p1_iso(x), p1_iso(y))
                   && embed_bicyclic(v, xy)
                          == multiply(embed_bicyclic(v, x), embed_bicyclic(v, y)));
               }
             }
           }
         }
         t(bicyclic_mul({2, 3}, {1, 2}) == BicyclicElt{2, 4});
         return t;
       }},
      {"R-class of 1: empty domain word <=> x x^-1 = 1",
       [&] {
         Tally t;
         for (auto const& x : U) {
           bool const a = is_r_class_of_identity(x);
           t(a == (dom_idem(x) == one) && a == (!x.is_zero() && x.dom().empty()));
         }
         return t;
       }},
      {"cofinite neighbourhoods of 0: witnesses and exact preimages (1000 cases)",
       [&] {
         Tally           t;
         auto const      big = universe(2, 4);
         std::mt19937_64 rng(34);
         for (int i = 0; i < 1000; ++i) {
           auto const& x = NZ[rng() % NZ.size()];
           ElementSet  A;
           for (auto n = rng() % 4; n > 0; --n) {
             A.insert(NZ[rng() % NZ.size()]);
           }
           CofiniteNbhd const Unb(A);
           auto const         V = continuity_witness(x, Unb);
           auto const         W = continuity_witness(x, Unb, Side::left);
           auto const         R = preimage_right(x, A);
           auto const         L = preimage_left(x, A);
           bool               ok = true;
           for (auto const& a : big) {
             ok = ok && (!V.contains(a) || Unb.contains(multiply(x, a)));
             ok = ok && (!W.contains(a) || Unb.contains(multiply(a, x)));
             ok = ok && R.contains(a) == A.contains(multiply(x, a));
             ok = ok && L.contains(a) == A.contains(multiply(a, x));
           }
           t(ok);
         }
         return t;
       }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const tally = criteria[i].body();
    bool const ok    = tally.failures == 0 && tally.cases > 0;
    failed += ok ? 0 : 1;
    std::printf("[%s] %2zu. %s: %zu cases, %zu failures\n",
                ok ? "PASS" : "FAIL",
                i + 1,
                criteria[i].name,
                tally.cases,
                tally.failures);
  }
  std::printf("%zu/%zu criteria passed\n",
              criteria.size() - static_cast<std::size_t>(failed),
              criteria.size());
  return failed == 0 ? 0 : 1;
}
