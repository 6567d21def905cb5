#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gperiods/expr.hpp"

namespace gp {

// Genus of y^2 = 1 - x^n: floor((n-1)/2).
long genus(long n);

enum class FormKind { Holomorphic, Meromorphic };

// Differential x^{k-1} dx / y on y^2 = 1 - x^n, n >= 3, 1 <= k <= n.
// Holomorphic iff k <= genus(n); otherwise the only pole is at infinity.
struct FormClass {
  long n = 0;
  long k = 0;
  FormKind kind = FormKind::Holomorphic;
};

FormClass classify_form(long n, long k);

enum class Verdict { ProvenTranscendental, CriterionNotApplicable };

// Schneider: Beta(a, b) is transcendental for rational non-integer a, b
// with a + b non-integer.  I_s = (2/s) B(1/s, 1/2) qualifies whenever
// s is not 1 or 2; I_2 = pi falls outside the criterion.
struct TranscendenceVerdict {
  Verdict verdict = Verdict::CriterionNotApplicable;
  Frac beta_a, beta_b;  // witness arguments when proven
};

TranscendenceVerdict schneider_verdict(const Frac& s);

// Whether I_s corresponds to a meromorphic (second-kind) differential.
// I_2 and I_s with s < 3 have no curve of genus >= 1 behind them and
// count as false.
bool ival_uses_meromorphic(const Frac& s);

enum class EllipticStatus { Yes, Unknown, NotAvailable };

struct TableRow {
  long q = 0;
  ClosedForm form;
  bool uses_meromorphic = false;
  EllipticStatus elliptic = EllipticStatus::NotAvailable;
  std::vector<std::pair<Frac, TranscendenceVerdict>> verdicts;  // one per distinct period
  bool verified = false;
  std::string rel_err;
};

// Full row for Gamma(1/q): closed form, differential bookkeeping,
// transcendence verdicts and a numeric verification digest.
TableRow table_row(long q, long digits);

const char* form_kind_name(FormKind k);
const char* verdict_name(Verdict v);
const char* elliptic_status_name(EllipticStatus s);

}  // namespace gp
