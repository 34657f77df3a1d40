#include <random>  // for mt19937_64

#include "catch_amalgamated.hpp"

#include "oracle.hpp"

#include "polycyc/error.hpp"
#include "polycyc/topology.hpp"

namespace polycyc {
  using test::P;

  TEST_CASE("preimage_right", "[topology]") {
    REQUIRE(preimage_right(P("", "0"), {P("", "00")})
            == ElementSet{P("", "0"), P("0", "00")});
    REQUIRE(preimage_right(P("0", "1"), {}).empty());
    REQUIRE(preimage_right(P("0", ""), {P("1", "")}).empty());
    REQUIRE_THROWS_AS(preimage_right(Element::zero(), {P("", "1")}), Error);
    try {
      (void) preimage_right(P("", "0"), {Element::zero()});
      FAIL("expected ZeroInTarget");
    } catch (Error const& e) {
      REQUIRE(e.code() == ErrorCode::zero_in_target);
    }
  }

  TEST_CASE("preimage_left", "[topology]") {
    REQUIRE(preimage_left(P("0", ""), {Element::one()}) == ElementSet{P("", "0")});
    REQUIRE(preimage_left(P("0", ""), {}).empty());

    ElementSet const A{P("0", "1"), P("", "01"), Element::one()};
    Element const    x = P("1", "0");
    ElementSet       A_inv, dual;
    for (auto const& a : A) {
      A_inv.insert(inverse(a));
    }
    for (auto const& a : preimage_right(inverse(x), A_inv)) {
      dual.insert(inverse(a));
    }
    REQUIRE(preimage_left(x, A) == dual);
  }

  TEST_CASE("continuity_witness", "[topology]") {
    CofiniteNbhd const U({P("", "00")});
    auto const         V = continuity_witness(P("", "0"), U);
    REQUIRE(V.excluded() == ElementSet{P("", "0"), P("0", "00")});
    REQUIRE(continuity_witness(P("", "0"), CofiniteNbhd()).excluded().empty());
    REQUIRE_THROWS_AS(continuity_witness(Element::zero(), U), Error);
    REQUIRE_THROWS_AS(CofiniteNbhd({Element::zero()}), Error);
    REQUIRE(U.contains(Element::zero()));
    REQUIRE_FALSE(U.contains(P("", "00")));

    // Sampled replay over U(2,3).
    auto const      pool = universe(2, 3);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
      auto const& a = pool[rng() % pool.size()];
      if (V.contains(a)) {
        REQUIRE(U.contains(multiply(P("", "0"), a)));
      }
    }
  }

  TEST_CASE("inversion_witness", "[topology]") {
    REQUIRE(inversion_witness(CofiniteNbhd({P("0", "1")})).excluded()
            == ElementSet{P("1", "0")});
    REQUIRE(inversion_witness(CofiniteNbhd()).excluded().empty());
    CofiniteNbhd const idem({P("0", "0"), P("01", "01"), Element::one()});
    REQUIRE(inversion_witness(idem) == idem);
  }

  TEST_CASE("preimages are exact and separately continuous",
            "[topology][property]") {
    std::vector<Element> nz;
    for (auto const& x : universe(2, 2)) {
      if (!x.is_zero()) {
        nz.push_back(x);
      }
    }
    auto const      big    = universe(2, 4);
    auto const      replay = universe(2, 3);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 300; ++i) {
      auto const& x = nz[rng() % nz.size()];
      ElementSet  A;
      for (auto n = rng() % 4; n > 0; --n) {
        A.insert(nz[rng() % nz.size()]);
      }
      auto const R = preimage_right(x, A);
      auto const L = preimage_left(x, A);
      for (auto const& a : big) {
        REQUIRE(R.contains(a) == A.contains(multiply(x, a)));
        REQUIRE(L.contains(a) == A.contains(multiply(a, x)));
      }
      REQUIRE(R.size() <= A.size() * (x.ran().size() + 2));

      ElementSet bigger = A;
      bigger.insert(nz[rng() % nz.size()]);
      auto const RB = preimage_right(x, bigger);
      REQUIRE(std::includes(RB.begin(), RB.end(), R.begin(), R.end()));

      CofiniteNbhd const U(A);
      auto const         Vr = continuity_witness(x, U, Side::right);
      auto const         Vl = continuity_witness(x, U, Side::left);
      for (auto const& a : replay) {
        if (Vr.contains(a)) {
          REQUIRE(U.contains(multiply(x, a)));
        }
        if (Vl.contains(a)) {
          REQUIRE(U.contains(multiply(a, x)));
        }
      }
    }
  }

}  // namespace polycyc
