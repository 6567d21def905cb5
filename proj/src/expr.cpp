#include "gperiods/expr.hpp"

#include <sstream>
#include <stdexcept>

namespace gp {

namespace {

bool folded_sine_den(const mpz_class& d) {
  return d == 1 || d == 2 || d == 3 || d == 4 || d == 6;
}

std::string exp_suffix(const Rat& e) {
  if (e == 1) return "";
  if (e.get_den() == 1 && sgn(e) > 0) return "^" + e.get_str();
  return "^(" + e.get_str() + ")";
}

std::string exp_suffix_latex(const Rat& e) {
  if (e == 1) return "";
  return "^{" + e.get_str() + "}";
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("expr_from_json: bad rational '" + s + "'");
  if (r.get_den() <= 0) throw std::invalid_argument("expr_from_json: bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace

Atom Atom::period(const Frac& s) {
  if (s < Frac(1, 1)) throw std::domain_error("Atom::period: index must be >= 1");
  return {Kind::PeriodI, s};
}

Atom Atom::sinpi(const Frac& r) {
  if (r.is_zero() || r >= Frac(1, 1))
    throw std::domain_error("Atom::sinpi: argument must lie in (0,1)");
  Frac arg = r;
  if (arg > Frac(1, 2)) arg = Frac(1, 1) - arg;
  if (folded_sine_den(arg.den()))
    throw std::domain_error("Atom::sinpi: sin(pi " + arg.str() + ") is prime-power expressible");
  return {Kind::SinPi, arg};
}

Atom Atom::gamma_at(const Frac& r) {
  if (r.is_zero() || r > Frac(1, 1))
    throw std::domain_error("Atom::gamma_at: argument must lie in (0,1]");
  return {Kind::Gamma, r};
}

std::string Atom::str() const {
  switch (kind) {
    case Kind::PeriodI:
      return arg.is_integer() ? "I_" + arg.str() : "I_{" + arg.str() + "}";
    case Kind::SinPi: {
      std::string a = arg.num() == 1 ? "pi/" + arg.den().get_str()
                                     : arg.num().get_str() + "pi/" + arg.den().get_str();
      return "sin(" + a + ")";
    }
    case Kind::Gamma:
      return "Gamma(" + arg.str() + ")";
  }
  return "?";
}

std::string Atom::latex() const {
  switch (kind) {
    case Kind::PeriodI:
      return "I_{" + arg.str() + "}";
    case Kind::SinPi: {
      std::string a = arg.num() == 1 ? "\\pi/" + arg.den().get_str()
                                     : arg.num().get_str() + "\\pi/" + arg.den().get_str();
      return "\\sin(" + a + ")";
    }
    case Kind::Gamma:
      return "\\Gamma(" + arg.str() + ")";
  }
  return "?";
}

PeriodExpr PeriodExpr::from_rational(const Rat& value, const Rat& e) {
  PeriodExpr out;
  out.mul_rational(value, e);
  return out;
}

void PeriodExpr::mul_prime(long long p, const Rat& e) {
  if (p < 2) throw std::domain_error("PeriodExpr: prime must be >= 2");
  if (sgn(e) == 0) return;
  Rat& slot = primes_[p];
  slot += e;
  if (sgn(slot) == 0) primes_.erase(p);
}

void PeriodExpr::mul_rational(const Rat& value, const Rat& e) {
  if (sgn(value) <= 0) throw std::domain_error("PeriodExpr: rational factor must be positive");
  if (sgn(e) == 0) return;
  for (auto& [p, k] : factor_integer(value.get_num())) mul_prime(p, Rat(k) * e);
  for (auto& [p, k] : factor_integer(value.get_den())) mul_prime(p, Rat(-k) * e);
}

void PeriodExpr::mul_atom(const Atom& a, const Rat& e) {
  if (sgn(e) == 0) return;
  Rat& slot = atoms_[a];
  slot += e;
  if (sgn(slot) == 0) atoms_.erase(a);
}

Rat PeriodExpr::prime_exponent(long long p) const {
  auto it = primes_.find(p);
  return it == primes_.end() ? Rat(0) : it->second;
}

Rat PeriodExpr::atom_exponent(const Atom& a) const {
  auto it = atoms_.find(a);
  return it == atoms_.end() ? Rat(0) : it->second;
}

bool PeriodExpr::has_gamma_atoms() const {
  for (auto& [a, e] : atoms_)
    if (a.kind == Atom::Kind::Gamma) return true;
  return false;
}

PeriodExpr expr_mul(const PeriodExpr& a, const PeriodExpr& b) {
  PeriodExpr out = a;
  for (auto& [p, e] : b.primes()) out.mul_prime(p, e);
  for (auto& [at, e] : b.atoms()) out.mul_atom(at, e);
  return out;
}

PeriodExpr expr_pow(const PeriodExpr& a, const Rat& e) {
  PeriodExpr out;
  if (sgn(e) == 0) return out;
  for (auto& [p, pe] : a.primes()) out.mul_prime(p, Rat(pe * e));
  for (auto& [at, ae] : a.atoms()) out.mul_atom(at, Rat(ae * e));
  return out;
}

std::string to_canonical_string(const PeriodExpr& e) {
  if (e.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " * ";
    first = false;
  };
  for (auto& [p, pe] : e.primes()) {
    sep();
    os << p << exp_suffix(pe);
  }
  for (auto& [a, ae] : e.atoms()) {
    sep();
    os << a.str() << exp_suffix(ae);
  }
  return os.str();
}

std::string to_latex(const PeriodExpr& e) {
  if (e.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " \\cdot ";
    first = false;
  };
  for (auto& [p, pe] : e.primes()) {
    sep();
    os << p << exp_suffix_latex(pe);
  }
  for (auto& [a, ae] : e.atoms()) {
    sep();
    os << a.latex() << exp_suffix_latex(ae);
  }
  return os.str();
}

nlohmann::json to_json(const PeriodExpr& e) {
  nlohmann::json primes = nlohmann::json::array();
  for (auto& [p, pe] : e.primes()) primes.push_back({p, pe.get_str()});
  nlohmann::json atoms = nlohmann::json::array();
  for (auto& [a, ae] : e.atoms()) {
    const char* kind = a.kind == Atom::Kind::PeriodI  ? "I"
                       : a.kind == Atom::Kind::SinPi ? "sinpi"
                                                     : "gamma";
    atoms.push_back({{"kind", kind}, {"arg", a.arg.str()}, {"exp", ae.get_str()}});
  }
  return {{"primes", primes}, {"atoms", atoms}};
}

PeriodExpr expr_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("primes") || !j.contains("atoms"))
    throw std::invalid_argument("expr_from_json: expected {primes, atoms}");
  PeriodExpr out;
  for (auto& entry : j.at("primes")) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("expr_from_json: bad prime entry");
    long long p = entry.at(0).get<long long>();
    if (!is_prime(p)) throw std::invalid_argument("expr_from_json: " + std::to_string(p) + " is not prime");
    out.mul_prime(p, rat_from_string(entry.at(1).get<std::string>()));
  }
  for (auto& entry : j.at("atoms")) {
    std::string kind = entry.at("kind").get<std::string>();
    auto arg = Frac::parse(entry.at("arg").get<std::string>());
    if (!arg) throw std::invalid_argument("expr_from_json: bad atom arg");
    Rat e = rat_from_string(entry.at("exp").get<std::string>());
    try {
      Atom a = kind == "I"       ? Atom::period(*arg)
               : kind == "sinpi" ? Atom::sinpi(*arg)
               : kind == "gamma" ? Atom::gamma_at(*arg)
                                 : throw std::domain_error("bad atom kind '" + kind + "'");
      out.mul_atom(a, e);
    } catch (const std::domain_error& err) {
      // Out-of-range arguments are data errors here, not caller bugs.
      throw std::invalid_argument(std::string("expr_from_json: ") + err.what());
    }
  }
  return out;
}

nlohmann::json to_json(const ClosedForm& cf) {
  return {{"arg", cf.arg.str()},
          {"exponent", cf.exponent.get_str()},
          {"expr", to_json(cf.expr)}};
}

}  // namespace gp
