#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace gp {

// Exact rational, used for exponents and other signed quantities.
using Rat = mpq_class;

// Nonnegative rational kept in lowest terms with positive denominator.
// Gamma arguments, period indices and sine arguments all live here, so
// negative values are a construction error rather than a representable state.
class Frac {
public:
  Frac() : v_(0) {}
  Frac(long num, long den);
  Frac(const mpz_class& num, const mpz_class& den);
  explicit Frac(const Rat& v);

  // Accepts "p/q", "p" and decimal literals such as "1.75".
  static std::optional<Frac> parse(std::string_view text);

  const Rat& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }

  // Denominator/numerator as machine integers; throws if they do not fit.
  long num_long() const;
  long den_long() const;

  Frac reciprocal() const;  // requires nonzero

  std::string str() const { return v_.get_str(); }

  friend Frac operator+(const Frac& a, const Frac& b) { return Frac(Rat(a.v_ + b.v_)); }
  friend Frac operator*(const Frac& a, const Frac& b) { return Frac(Rat(a.v_ * b.v_)); }
  // Throws std::domain_error if b > a.
  friend Frac operator-(const Frac& a, const Frac& b);

  friend bool operator==(const Frac& a, const Frac& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Frac& a, const Frac& b) { return a.v_ != b.v_; }
  friend bool operator<(const Frac& a, const Frac& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Frac& a, const Frac& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Frac& a, const Frac& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Frac& a, const Frac& b) { return a.v_ >= b.v_; }

private:
  Rat v_;
  void check() const;
};

// Prime factorization of n >= 1 by trial division.  Factors above 1e14 are
// rejected; chain denominators never get anywhere near that.
std::map<long long, long> factor_integer(mpz_class n);

bool is_prime(long long n);

std::string rat_str(const Rat& r);

}  // namespace gp
