#include <doctest.h>

#include <stdexcept>

#include "gperiods/solve.hpp"

using namespace gp;

TEST_CASE("recurrence step shifts (1,2) down by one") {
  auto [c, y] = recurrence_step(Frac(12, 7));
  CHECK(y == Frac(5, 7));
  CHECK(c.prime_exponent(5) == 1);
  CHECK(c.prime_exponent(7) == -1);
  CHECK(c.atoms().empty());

  CHECK_THROWS_AS(recurrence_step(Frac(1, 2)), std::domain_error);
  CHECK_THROWS_AS(recurrence_step(Frac(1, 1)), std::domain_error);
  CHECK_THROWS_AS(recurrence_step(Frac(2, 1)), std::domain_error);
}

TEST_CASE("duplication step doubles the argument") {
  // coefficient (1/x) I_{1/x} 2^{-2x} at x = 1/6: 2^{1-1/3} 3 I_6
  auto [c, y] = duplication_step(Frac(1, 6));
  CHECK(y == Frac(1, 3));
  CHECK(c.prime_exponent(2) == Rat(2, 3));
  CHECK(c.prime_exponent(3) == 1);
  CHECK(c.atom_exponent(Atom::period(Frac(6, 1))) == 1);
  CHECK(c.atoms().size() == 1);

  // x = 2/5: 1/x = 5/2 contributes 2^{-1}, and 2^{-4/5} on top.
  auto [c2, y2] = duplication_step(Frac(2, 5));
  CHECK(y2 == Frac(4, 5));
  CHECK(c2.prime_exponent(2) == Rat(-9, 5));
  CHECK(c2.prime_exponent(5) == 1);
  CHECK(c2.atom_exponent(Atom::period(Frac(5, 2))) == 1);

  CHECK_THROWS_AS(duplication_step(Frac(0, 1)), std::domain_error);
  CHECK_THROWS_AS(duplication_step(Frac(1, 1)), std::domain_error);
  CHECK_THROWS_AS(duplication_step(Frac(3, 2)), std::domain_error);
}

TEST_CASE("reflection folds the small denominators into prime powers") {
  // sin(pi/3) = 3^(1/2)/2
  PeriodExpr r3 = reflection_expr(Frac(1, 3));
  CHECK(to_canonical_string(r3) == "2 * 3^(-1/2) * I_2");
  // sin(pi/4) = 2^(-1/2)
  CHECK(to_canonical_string(reflection_expr(Frac(1, 4))) == "2^(1/2) * I_2");
  // sin(pi/6) = 1/2
  CHECK(to_canonical_string(reflection_expr(Frac(1, 6))) == "2 * I_2");
  // mirrored arguments give the same sine
  CHECK(reflection_expr(Frac(2, 3)) == r3);

  CHECK(to_canonical_string(reflection_expr(Frac(1, 5))) ==
        "I_2 * sin(pi/5)^(-1)");
  CHECK(to_canonical_string(reflection_expr(Frac(2, 7))) ==
        "I_2 * sin(2pi/7)^(-1)");
  CHECK(to_canonical_string(reflection_expr(Frac(4, 7))) ==
        "I_2 * sin(3pi/7)^(-1)");

  CHECK_THROWS_AS(reflection_expr(Frac(1, 2)), std::domain_error);
  CHECK_THROWS_AS(reflection_expr(Frac(1, 1)), std::domain_error);
}

namespace {

void check_form(const Frac& arg, long exponent, const std::string& canonical) {
  ClosedForm cf = solve_closed_form(arg);
  CHECK(cf.arg == arg);
  CHECK(cf.exponent == exponent);
  CHECK(to_canonical_string(cf.expr) == canonical);
}

}  // namespace

TEST_CASE("closed forms match hand-checked values") {
  check_form(Frac(1, 1), 1, "1");
  check_form(Frac(1, 2), 2, "I_2");
  check_form(Frac(1, 3), 3, "2^(1/3) * 3^(1/2) * I_2 * I_3");
  check_form(Frac(1, 4), 2, "2^(3/2) * I_2^(1/2) * I_4");
  check_form(Frac(3, 4), 2, "2^(-1/2) * 3^(-1) * I_{4/3} * I_2^(1/2)");
  check_form(Frac(1, 5), 5,
             "2^(-13/5) * 5^3 * I_2 * I_{5/2} * I_5^2 * sin(pi/5)^(-1)");
  check_form(Frac(2, 5), 5,
             "2^(-36/5) * 3 * 5^2 * I_{5/4} * I_2 * I_{5/2}^2 * sin(2pi/5)^(-1)");
  check_form(Frac(1, 6), 2,
             "2^(7/9) * 3^(7/6) * I_2^(1/3) * I_3^(1/3) * I_6");
  check_form(Frac(1, 7), 7, "2^(-52/7) * 7^6 * I_{7/4} * I_{7/2}^2 * I_7^4");
  check_form(Frac(1, 8), 2, "2^(7/2) * I_2^(1/4) * I_4^(1/2) * I_8");
  check_form(Frac(1, 12), 4,
             "2^(40/9) * 3^(19/6) * I_2^(1/3) * I_3^(1/3) * I_6 * I_12^2");
}

TEST_CASE("integer overload reduces and range-checks") {
  ClosedForm a = solve_closed_form(mpz_class(2), mpz_class(4));
  ClosedForm b = solve_closed_form(Frac(1, 2));
  CHECK(a.exponent == b.exponent);
  CHECK(a.expr == b.expr);
  CHECK(solve_closed_form(mpz_class(5), mpz_class(5)).exponent == 1);

  CHECK_THROWS_AS(solve_closed_form(mpz_class(0), mpz_class(5)), std::domain_error);
  CHECK_THROWS_AS(solve_closed_form(mpz_class(6), mpz_class(5)), std::domain_error);
  CHECK_THROWS_AS(solve_closed_form(mpz_class(1), mpz_class(0)), std::domain_error);
  CHECK_THROWS_AS(solve_closed_form(Frac(3, 2)), std::domain_error);
  CHECK_THROWS_AS(solve_closed_form(Frac(0, 1)), std::domain_error);
}

TEST_CASE("every form is Gamma-free with the exponent its chain dictates") {
  mpz_class two(2);
  for (long q = 1; q <= 30; ++q) {
    for (long p = 1; p <= q; ++p) {
      if (mpz_class(gcd(mpz_class(p), mpz_class(q))) != 1) continue;
      Frac x(p, q);
      ClosedForm cf = solve_closed_form(x);
      CAPTURE(p);
      CAPTURE(q);
      CHECK(!cf.expr.has_gamma_atoms());

      mpz_class want;
      if (x.is_one()) {
        want = 1;
      } else {
        Chain ch = minimal_chain(x);
        mpz_class pm;
        mpz_ui_pow_ui(pm.get_mpz_t(), 2, static_cast<unsigned long>(ch.doublings));
        if (ch.closure == Closure::TerminatesAtOne) {
          want = 2;
        } else if (ch.reentry_index == 0) {
          want = ch.closure == Closure::CycleSamePlus ? mpz_class(pm - 1)
                                                      : mpz_class(pm + 1);
        } else {
          mpz_ui_pow_ui(want.get_mpz_t(), 2,
                        static_cast<unsigned long>(ch.reentry_index));
        }
      }
      CHECK(cf.exponent == want);

      for (const auto& [atom, e] : cf.expr.atoms()) {
        if (atom.kind == Atom::Kind::PeriodI) {
          CHECK(atom.arg >= Frac(1, 1));
        } else {
          // Sines only ever enter through reflection denominators.
          CHECK(atom.kind == Atom::Kind::SinPi);
          CHECK(atom.arg <= Frac(1, 2));
          CHECK(sgn(e) < 0);
        }
      }
    }
  }
}
