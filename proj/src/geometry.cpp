#include "gperiods/geometry.hpp"

#include <stdexcept>

#include "gperiods/eval.hpp"
#include "gperiods/solve.hpp"

namespace gp {

long genus(long n) {
  if (n < 1) throw std::domain_error("genus: need n >= 1");
  return (n - 1) / 2;
}

FormClass classify_form(long n, long k) {
  if (n < 3) throw std::domain_error("classify_form: need n >= 3");
  if (k < 1 || k > n) throw std::domain_error("classify_form: need 1 <= k <= n");
  FormKind kind = k <= genus(n) ? FormKind::Holomorphic : FormKind::Meromorphic;
  return {n, k, kind};
}

TranscendenceVerdict schneider_verdict(const Frac& s) {
  if (s < Frac(1, 1)) throw std::domain_error("schneider_verdict: index must be >= 1");
  // I_s = (2/s) B(1/s, 1/2).  Schneider needs 1/s, 1/2 and 1/s + 1/2 all
  // non-integers: only s = 1 (integer sum) and s = 2 (B = pi, sum = 1)
  // fail that.
  if (s.is_one() || s == Frac(2, 1)) return {Verdict::CriterionNotApplicable, Frac(), Frac()};
  return {Verdict::ProvenTranscendental, s.reciprocal(), Frac(1, 2)};
}

bool ival_uses_meromorphic(const Frac& s) {
  if (s < Frac(1, 1)) throw std::domain_error("ival_uses_meromorphic: index must be >= 1");
  long n = s.num_long();
  long k = s.den_long();
  // s = n/k reduced; n <= 2 means s is 1 or 2, where no curve of positive
  // genus is in play.
  if (n < 3) return false;
  return classify_form(n, k).kind == FormKind::Meromorphic;
}

namespace {

EllipticStatus elliptic_lookup(long q) {
  // Whether the period reduces to complete elliptic integrals with
  // algebraic modulus.  Fixed lookup, never computed: classical yes for
  // q in {2,3,4,6,8}, open for q in {5,7}, no answer recorded beyond 8.
  switch (q) {
    case 2:
    case 3:
    case 4:
    case 6:
    case 8:
      return EllipticStatus::Yes;
    case 5:
    case 7:
      return EllipticStatus::Unknown;
    default:
      return EllipticStatus::NotAvailable;
  }
}

}  // namespace

TableRow table_row(long q, long digits) {
  if (q < 2) throw std::domain_error("table_row: need q >= 2");
  TableRow row;
  row.q = q;
  row.form = solve_closed_form(mpz_class(1), mpz_class(q));
  row.elliptic = elliptic_lookup(q);
  for (auto& [a, e] : row.form.expr.atoms()) {
    if (a.kind != Atom::Kind::PeriodI) continue;
    if (ival_uses_meromorphic(a.arg)) row.uses_meromorphic = true;
    row.verdicts.emplace_back(a.arg, schneider_verdict(a.arg));
  }
  VerifyResult v = verify_closed_form(row.form, digits, digits / 2);
  row.verified = v.pass;
  row.rel_err = v.rel_err;
  return row;
}

const char* form_kind_name(FormKind k) {
  return k == FormKind::Holomorphic ? "holomorphic" : "meromorphic";
}

const char* verdict_name(Verdict v) {
  return v == Verdict::ProvenTranscendental ? "proven transcendental" : "criterion not applicable";
}

const char* elliptic_status_name(EllipticStatus s) {
  switch (s) {
    case EllipticStatus::Yes: return "yes";
    case EllipticStatus::Unknown: return "unknown";
    case EllipticStatus::NotAvailable: return "n/a";
  }
  return "?";
}

}  // namespace gp
