#include <doctest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "gperiods/gamma.hpp"
#include "gperiods/quadrature.hpp"

using namespace gp;

namespace {

Real real_lit(const char* s, long digits) {
  Real r(bits_for_digits(digits));
  REQUIRE(mpfr_set_str(r.raw(), s, 10, MPFR_RNDN) == 0);
  return r;
}

bool close_abs(const Real& a, const Real& b, long tol_exp) {
  return abs(a - b) < pow10(tol_exp, a.prec());
}

}  // namespace

TEST_CASE("endpoint singularities are handled exactly where known") {
  // I_1 = 2 int_0^1 dx / sqrt(1-x) = 4
  QuadResult r1 = period_quad(Frac(1, 1), 50);
  CHECK(r1.converged);
  CHECK(close_abs(r1.value, Real(4L, r1.value.prec()), -45));

  // I_2 = pi
  QuadResult r2 = period_quad(Frac(2, 1), 50);
  CHECK(r2.converged);
  CHECK(close_abs(r2.value, const_pi(r2.value.prec()), -45));
  QuadResult r2hi = period_quad(Frac(2, 1), 80);
  CHECK(close_abs(r2hi.value, const_pi(r2hi.value.prec()), -75));
}

TEST_CASE("quadrature reproduces frozen period values") {
  CHECK(close_abs(period_quad(Frac(4, 1), 50).value,
                  real_lit("2.622057554292119810464839589891119413682754951431623163e0", 56),
                  -45));
  CHECK(close_abs(period_quad(Frac(3, 2), 50).value,
                  real_lit("3.449479412306387379938020033508282183543811353120535435e0", 56),
                  -45));
}

TEST_CASE("quadrature agrees with the beta representation") {
  const std::vector<std::pair<long, long>> indices = {
      {1, 1}, {3, 2}, {7, 4}, {2, 1}, {5, 2}, {3, 1},
      {7, 2}, {4, 1}, {5, 1}, {7, 1}, {8, 1}};
  for (auto [n, k] : indices) {
    Frac s(n, k);
    CAPTURE(n);
    CAPTURE(k);
    QuadResult r = period_quad(s, 50);
    CHECK(r.converged);
    CHECK(r.levels >= 2);
    CHECK(r.evaluations > 0);
    CHECK(r.err_estimate < pow10(-40, r.value.prec()));
    // I_s = (2/s) B(1/s, 1/2)
    Real beta = ref_beta(s.reciprocal(), Frac(1, 2), 60) *
                Real(Frac(s.den(), s.num()), bits_for_digits(60)) * 2L;
    CHECK(close_abs(r.value, beta, -45));
  }
}

TEST_CASE("weighted integral form matches the reduced index") {
  Real direct = period_quad(Frac(7, 4), 50).value;
  Real weighted = period_quad_nk(7, 4, 50).value;
  CHECK(close_abs(direct, weighted, -45));

  CHECK(close_abs(period_quad_nk(2, 1, 50).value,
                  const_pi(bits_for_digits(50)), -45));

  // u = x^2 turns the (6,2) integral into I_3
  CHECK(close_abs(period_quad_nk(6, 2, 40).value,
                  period_quad(Frac(3, 1), 40).value, -35));
}

TEST_CASE("quadrature rejects out-of-range indices") {
  CHECK_THROWS_AS(period_quad(Frac(1, 2), 50), std::domain_error);
  CHECK_THROWS_AS(period_quad(Frac(0, 1), 50), std::domain_error);
  CHECK_THROWS_AS(period_quad_nk(0, 1, 50), std::domain_error);
  CHECK_THROWS_AS(period_quad_nk(3, 0, 50), std::domain_error);
  CHECK_THROWS_AS(period_quad_nk(3, 4, 50), std::domain_error);
  CHECK_THROWS_AS(branch_chord_integral(1, 50), std::domain_error);
  CHECK_THROWS_AS(branch_symmetry_ratio(1, 50), std::domain_error);
}

TEST_CASE("chord integral for n = 2 is minus pi") {
  CQuadResult r = branch_chord_integral(2, 40);
  CHECK(r.converged);
  Real pi = const_pi(r.value.re.prec());
  CHECK(close_abs(r.value.re, -pi, -35));
  CHECK(abs(r.value.im) < pow10(-35, r.value.im.prec()));
}

TEST_CASE("chord over prediction sits at exactly minus one") {
  for (long n = 2; n <= 8; ++n) {
    CAPTURE(n);
    SymmetryReport rep = branch_symmetry_ratio(n, 40);
    CHECK(rep.converged);
    Real tol = pow10(-30, rep.abs_ratio.prec());
    CHECK(abs(rep.abs_ratio - 1) < tol);
    CHECK(abs(rep.ratio.re + 1) < tol);
    CHECK(abs(rep.ratio.im) < tol);
    // phase of -1, sign free
    CHECK(close_abs(abs(rep.phase), const_pi(rep.phase.prec()), -30));
  }
}
