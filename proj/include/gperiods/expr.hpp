#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "gperiods/fraction.hpp"

namespace gp {

// Multiplicative atoms a closed form is built from.  Sort order is the
// canonical output order: periods, then sines, then unresolved Gammas.
struct Atom {
  enum class Kind { PeriodI, SinPi, Gamma };
  Kind kind;
  Frac arg;

  // Period I_s with s >= 1.
  static Atom period(const Frac& s);
  // sin(pi r), 0 < r < 1.  Folded to r <= 1/2; denominators {1,2,3,4,6}
  // are rejected because those sines are prime-power expressible and must
  // be folded by the caller instead.
  static Atom sinpi(const Frac& r);
  // Gamma(r), 0 < r <= 1.  Allowed in intermediate expressions only.
  static Atom gamma_at(const Frac& r);

  bool operator==(const Atom& o) const { return kind == o.kind && arg == o.arg; }
  bool operator<(const Atom& o) const {
    if (kind != o.kind) return kind < o.kind;
    return arg < o.arg;
  }

  std::string str() const;
  std::string latex() const;
};

// Product of rational prime powers and atom powers, all exponents rational.
// Zero exponents are erased on the fly, so equal values compare equal.
class PeriodExpr {
public:
  PeriodExpr() = default;

  static PeriodExpr one() { return {}; }
  // Prime factorization of a positive rational, exponents scaled by e.
  static PeriodExpr from_rational(const Rat& value, const Rat& e = Rat(1));

  void mul_prime(long long p, const Rat& e);
  void mul_rational(const Rat& value, const Rat& e = Rat(1));
  void mul_atom(const Atom& a, const Rat& e);

  const std::map<long long, Rat>& primes() const { return primes_; }
  const std::map<Atom, Rat>& atoms() const { return atoms_; }

  Rat prime_exponent(long long p) const;
  Rat atom_exponent(const Atom& a) const;
  bool has_gamma_atoms() const;
  bool is_one() const { return primes_.empty() && atoms_.empty(); }

  bool operator==(const PeriodExpr&) const = default;

private:
  std::map<long long, Rat> primes_;
  std::map<Atom, Rat> atoms_;
};

PeriodExpr expr_mul(const PeriodExpr& a, const PeriodExpr& b);
PeriodExpr expr_pow(const PeriodExpr& a, const Rat& e);

std::string to_canonical_string(const PeriodExpr& e);
std::string to_latex(const PeriodExpr& e);
nlohmann::json to_json(const PeriodExpr& e);
PeriodExpr expr_from_json(const nlohmann::json& j);

// Gamma(arg)^exponent == expr, with expr free of Gamma atoms.
struct ClosedForm {
  Frac arg;
  mpz_class exponent;
  PeriodExpr expr;
};

nlohmann::json to_json(const ClosedForm& cf);

}  // namespace gp
