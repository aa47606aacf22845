#include <catch2/catch_amalgamated.hpp>

#include "sympow/decide.hpp"

using namespace sympow;

namespace {

Config ac_n(int n) {
  std::vector<Rational> slopes;
  for (int k = 1; k < n; ++k) slopes.emplace_back(k);
  return make_ac(n, slopes);
}

Config nci_n(int n) {
  std::vector<Rational> values;
  for (int k = 1; k <= n; ++k) values.emplace_back(k);
  return make_nci(n, values, values);
}

// Reference scan used to pin the box estimates independently of
// resurgence_estimate: walk the box with the branch-form predicate.
Rational brute_force_estimate(const Config& cfg, int N) {
  Rational best = 0;
  for (int m = 1; m <= N; ++m) {
    for (int r = 1; r <= N; ++r) {
      const bool not_contained = cfg.kind == ConfigKind::AlmostCollinear
                                     ? ac_not_contained_cases(cfg.n, m, r)
                                     : 4 * r > 3 * m + 1;
      if (not_contained && Rational(m, r) > best) best = Rational(m, r);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("containment verdicts") {
  const Config ac3 = ac_n(3);
  const Verdict v = contains(ac3, 2, 2);
  CHECK_FALSE(v.contained);
  CHECK(v.threshold == Rational(15, 7));
  REQUIRE(v.witness.has_value());
  CHECK(std::get<AcElem>(*v.witness) == AcElem{3, 0, 1});

  CHECK_FALSE(contains(ac3, 9, 8).contained);

  const Config nci = nci_n(2);
  CHECK(contains(nci, 3, 2).contained);
  const Verdict w = contains(nci, 2, 2);
  CHECK_FALSE(w.contained);
  REQUIRE(w.witness.has_value());
  CHECK(std::get<NciElem>(*w.witness) == NciElem{1, 1, 0, 1});
}

TEST_CASE("resurgence closed forms") {
  CHECK(resurgence(ac_n(3)) == Rational(9, 7));
  CHECK(resurgence(ac_n(4)) == Rational(16, 13));
  CHECK(resurgence(nci_n(1)) == Rational(4, 3));
  CHECK(resurgence(nci_n(3)) == Rational(4, 3));
}

TEST_CASE("resurgence estimates over boxes") {
  const Config nci = nci_n(2);
  CHECK(resurgence_estimate(nci, 4) == Rational(1));
  // The largest failing ratio in the 16-box is 14/11 (the pair m = 14,
  // r = 13 of the proof family gives only 16/13).
  CHECK(resurgence_estimate(nci, 16) == Rational(14, 11));
  CHECK(resurgence_estimate(nci, 16) == brute_force_estimate(nci, 16));
  CHECK_FALSE(contained_closed_form(nci, 14, 11));
  CHECK_FALSE(contained_closed_form(nci, 16, 13));

  const Config ac3 = ac_n(3);
  // Likewise 6/5 beats the witness-family ratio 9/8 inside the 9-box.
  CHECK(resurgence_estimate(ac3, 9) == Rational(6, 5));
  CHECK(resurgence_estimate(ac3, 9) == brute_force_estimate(ac3, 9));
  CHECK_FALSE(contained_closed_form(ac3, 6, 5));
  CHECK_FALSE(contained_closed_form(ac3, 9, 8));

  CHECK_THROWS_AS(resurgence_estimate(ac3, 1), std::invalid_argument);
}

TEST_CASE("estimates stay below the resurgence and are monotone") {
  for (const Config& cfg : {ac_n(3), ac_n(4), nci_n(1), nci_n(2)}) {
    Rational prev = 0;
    for (int N = 2; N <= 20; ++N) {
      const Rational est = resurgence_estimate(cfg, N);
      CHECK(est <= resurgence(cfg));
      CHECK(est >= prev);
      prev = est;
    }
  }
}

TEST_CASE("every failing pair has ratio strictly below the resurgence") {
  for (const Config& cfg : {ac_n(3), ac_n(5), nci_n(1), nci_n(2)}) {
    const Rational rho = resurgence(cfg);
    for (int m = 1; m <= 15; ++m) {
      for (int r = 1; r <= 15; ++r) {
        if (!contained_closed_form(cfg, m, r)) {
          CHECK(Rational(m, r) < rho);
        }
      }
    }
  }
}

TEST_CASE("alpha closed forms") {
  CHECK(alpha(ac_n(3), BasisFilter::symbolic(3)) == 5);
  CHECK(alpha(nci_n(1), BasisFilter::symbolic(3)) == 5);
  CHECK(alpha(nci_n(2), BasisFilter::power(4)) == 8);
  CHECK(alpha(ac_n(5), BasisFilter::symbolic(1)) == 2);
  CHECK_THROWS_AS(alpha(ac_n(3), BasisFilter::all()), std::invalid_argument);
}

TEST_CASE("alpha agrees with the combinatorial basis") {
  for (const Config& cfg : {ac_n(3), ac_n(4), ac_n(5), nci_n(1), nci_n(2), nci_n(3)}) {
    for (int v = 1; v <= 6; ++v) {
      for (const BasisFilter filter : {BasisFilter::symbolic(v), BasisFilter::power(v)}) {
        const int a = alpha(cfg, filter);
        for (int d = 0; d < a; ++d) {
          CHECK(hilbert_dim(cfg, filter, d) == 0);
        }
        CHECK(hilbert_dim(cfg, filter, a) > 0);
      }
    }
  }
}

TEST_CASE("closed form matches witness search everywhere") {
  for (const Config& cfg : {ac_n(3), ac_n(4), ac_n(5), nci_n(1), nci_n(2)}) {
    for (int m = 1; m <= 15; ++m) {
      for (int r = 1; r <= 15; ++r) {
        const Verdict closed = contains(cfg, m, r);
        const Verdict searched = contains_by_witness(cfg, m, r);
        CHECK(closed.contained == searched.contained);
        CHECK(closed.contained == !searched.witness.has_value());
        if (!closed.contained) {
          REQUIRE(closed.witness.has_value());
          // the witness really lies in the symbolic power and outside
          // the ordinary power
          if (cfg.kind == ConfigKind::AlmostCollinear) {
            const auto& e = std::get<AcElem>(*closed.witness);
            CHECK(ac_in_symbolic(cfg.n, e, m));
            CHECK_FALSE(ac_in_power(cfg.n, e, r));
          } else {
            const auto& e = std::get<NciElem>(*closed.witness);
            CHECK(nci_in_symbolic(e, m));
            CHECK_FALSE(nci_in_power(e, r));
          }
        }
      }
    }
  }
}

TEST_CASE("the branch form of the criterion equals the single inequality") {
  for (int n = 3; n <= 8; ++n) {
    const Config cfg = ac_n(n);
    for (int m = 1; m <= 30; ++m) {
      for (int r = 1; r <= 30; ++r) {
        CHECK(ac_not_contained_cases(n, m, r) == !contained_closed_form(cfg, m, r));
      }
    }
  }
}

TEST_CASE("m below r never gives containment") {
  for (const Config& cfg : {ac_n(3), ac_n(6), nci_n(1), nci_n(4)}) {
    for (int r = 2; r <= 12; ++r) {
      for (int m = 1; m < r; ++m) {
        CHECK_FALSE(contained_closed_form(cfg, m, r));
      }
    }
  }
}

TEST_CASE("power split exponent") {
  CHECK(ac_power_split_exponent(ac_n(3)) == 3);
  CHECK(ac_power_split_exponent(ac_n(5)) == 5);
  CHECK_THROWS_AS(ac_power_split_exponent(nci_n(2)), std::invalid_argument);
}

TEST_CASE("nci splits") {
  const Config cfg = nci_n(2);
  const SplitResult odd = nci_split(cfg, 1, 1);
  CHECK(odd.relation == SplitRelation::StrictSuperset);
  CHECK(odd.witness == NciElem{1, 1, 0, 1});
  CHECK(nci_split(cfg, 2, 3).relation == SplitRelation::Equal);
  CHECK(nci_split(cfg, 2, 2).relation == SplitRelation::Equal);
  CHECK_THROWS_AS(nci_split(ac_n(3), 1, 1), std::invalid_argument);
}

TEST_CASE("nci normal forms") {
  CHECK(nci_normal_form(4).power_of_i2 == 2);
  CHECK_FALSE(nci_normal_form(4).extra_factor_i);
  CHECK(nci_normal_form(5).power_of_i2 == 2);
  CHECK(nci_normal_form(5).extra_factor_i);
  CHECK(nci_normal_form(1).power_of_i2 == 0);
  CHECK(nci_normal_form(1).extra_factor_i);
}
