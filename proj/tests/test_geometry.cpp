#include <doctest.h>

#include <stdexcept>
#include <string>

#include "gperiods/geometry.hpp"

using namespace gp;

TEST_CASE("genus of y^2 = 1 - x^n") {
  CHECK(genus(1) == 0);
  CHECK(genus(2) == 0);
  CHECK(genus(3) == 1);
  CHECK(genus(4) == 1);
  CHECK(genus(5) == 2);
  CHECK(genus(6) == 2);
  CHECK(genus(7) == 3);
  CHECK(genus(8) == 3);
  CHECK(genus(12) == 5);
  CHECK_THROWS_AS(genus(0), std::domain_error);
}

TEST_CASE("differential classification splits at the genus") {
  CHECK(classify_form(3, 1).kind == FormKind::Holomorphic);
  CHECK(classify_form(3, 2).kind == FormKind::Meromorphic);
  CHECK(classify_form(5, 2).kind == FormKind::Holomorphic);
  CHECK(classify_form(5, 3).kind == FormKind::Meromorphic);
  CHECK(classify_form(7, 3).kind == FormKind::Holomorphic);
  CHECK(classify_form(7, 4).kind == FormKind::Meromorphic);
  CHECK(classify_form(7, 7).kind == FormKind::Meromorphic);

  CHECK_THROWS_AS(classify_form(2, 1), std::domain_error);
  CHECK_THROWS_AS(classify_form(3, 0), std::domain_error);
  CHECK_THROWS_AS(classify_form(3, 4), std::domain_error);

  CHECK(std::string(form_kind_name(FormKind::Holomorphic)) == "holomorphic");
  CHECK(std::string(form_kind_name(FormKind::Meromorphic)) == "meromorphic");
}

TEST_CASE("transcendence criterion applies away from index 1 and 2") {
  CHECK(schneider_verdict(Frac(1, 1)).verdict == Verdict::CriterionNotApplicable);
  CHECK(schneider_verdict(Frac(2, 1)).verdict == Verdict::CriterionNotApplicable);

  TranscendenceVerdict v = schneider_verdict(Frac(3, 1));
  CHECK(v.verdict == Verdict::ProvenTranscendental);
  CHECK(v.beta_a == Frac(1, 3));
  CHECK(v.beta_b == Frac(1, 2));

  CHECK(schneider_verdict(Frac(7, 4)).beta_a == Frac(4, 7));
  CHECK(schneider_verdict(Frac(5, 2)).beta_a == Frac(2, 5));
  CHECK_THROWS_AS(schneider_verdict(Frac(1, 2)), std::domain_error);

  CHECK(std::string(verdict_name(Verdict::ProvenTranscendental)) ==
        "proven transcendental");
}

TEST_CASE("period indices needing a second-kind differential") {
  CHECK(!ival_uses_meromorphic(Frac(1, 1)));
  CHECK(!ival_uses_meromorphic(Frac(2, 1)));
  CHECK(!ival_uses_meromorphic(Frac(3, 1)));
  CHECK(!ival_uses_meromorphic(Frac(5, 1)));
  CHECK(!ival_uses_meromorphic(Frac(5, 2)));
  CHECK(!ival_uses_meromorphic(Frac(7, 2)));
  CHECK(!ival_uses_meromorphic(Frac(6, 1)));
  CHECK(!ival_uses_meromorphic(Frac(12, 1)));
  CHECK(!ival_uses_meromorphic(Frac(24, 5)));
  // x^3 dx / y on the genus-1 quartic has a pole at infinity
  CHECK(ival_uses_meromorphic(Frac(7, 4)));
  CHECK(ival_uses_meromorphic(Frac(4, 3)));
  CHECK(ival_uses_meromorphic(Frac(5, 3)));
  CHECK_THROWS_AS(ival_uses_meromorphic(Frac(1, 2)), std::domain_error);
}

TEST_CASE("table rows aggregate the bookkeeping") {
  TableRow r7 = table_row(7, 30);
  CHECK(r7.q == 7);
  CHECK(r7.uses_meromorphic);
  CHECK(r7.elliptic == EllipticStatus::Unknown);
  CHECK(r7.verified);
  CHECK(r7.verdicts.size() == 3);
  for (auto& [s, v] : r7.verdicts)
    CHECK(v.verdict == Verdict::ProvenTranscendental);

  TableRow r2 = table_row(2, 30);
  CHECK(!r2.uses_meromorphic);
  CHECK(r2.elliptic == EllipticStatus::Yes);
  CHECK(r2.verdicts.size() == 1);
  CHECK(r2.verdicts[0].first == Frac(2, 1));
  CHECK(r2.verdicts[0].second.verdict == Verdict::CriterionNotApplicable);

  CHECK(table_row(5, 30).elliptic == EllipticStatus::Unknown);
  CHECK(table_row(9, 30).elliptic == EllipticStatus::NotAvailable);
  CHECK_THROWS_AS(table_row(1, 30), std::domain_error);

  CHECK(std::string(elliptic_status_name(EllipticStatus::Yes)) == "yes");
  CHECK(std::string(elliptic_status_name(EllipticStatus::Unknown)) == "unknown");
  CHECK(std::string(elliptic_status_name(EllipticStatus::NotAvailable)) == "n/a");
}

TEST_CASE("meromorphic flag matches a direct pole count") {
  for (long q = 2; q <= 20; ++q) {
    TableRow row = table_row(q, 30);
    CAPTURE(q);
    bool expect = false;
    std::size_t periods = 0;
    for (auto& [a, e] : row.form.expr.atoms()) {
      if (a.kind != Atom::Kind::PeriodI) continue;
      ++periods;
      long n = a.arg.num_long();
      long k = a.arg.den_long();
      if (n >= 3 && k > (n - 1) / 2) expect = true;
      (void)e;
    }
    CHECK(row.uses_meromorphic == expect);
    CHECK(row.verdicts.size() == periods);
    CHECK(row.verified);
  }
}
