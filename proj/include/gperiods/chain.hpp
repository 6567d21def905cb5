#pragma once

#include <utility>
#include <vector>

#include "gperiods/fraction.hpp"

namespace gp {

enum class StepKind { Double, ReduceMod, Reflect };

struct ChainStep {
  StepKind kind;
  Frac at;  // value the step was applied to (ReduceMod records the raw value > 1)
  bool operator==(const ChainStep&) const = default;
};

enum class Closure { CycleSamePlus, CycleReflectMinus, TerminatesAtOne };

struct Chain {
  mpz_class input_num, input_den;  // as given, before reduction
  Frac start;                      // x0, reduced
  std::vector<Frac> fractions;     // x0 .. xm, all in (0,1]
  std::vector<ChainStep> steps;
  Closure closure = Closure::TerminatesAtOne;
  long doublings = 0;      // m
  long reentry_index = 0;  // j, with xm == xj (same) or xm == 1 - xj (reflect)

  // Values as they appear when the chain is written out, including the
  // raw > 1 value before each mod-1 reduction and the closure target.
  std::vector<std::string> display_path() const;
};

// One doubling applied to x in (0,1): yields 2x, or 2x - 1 when 2x > 1,
// recording the reduction as a separate step.  2x == 1 yields exactly 1.
std::pair<Frac, std::vector<ChainStep>> double_step(const Frac& x);

// Doubling orbit of p/q, stopped at the first closure event.
Chain minimal_chain(const mpz_class& p, const mpz_class& q);
Chain minimal_chain(const Frac& x);

struct PmOrder {
  long order;  // least m >= 1 with a^m == +-1 (mod n)
  int sign;    // +1 or -1; +1 for n == 1
};

// Requires n >= 1 odd and gcd(a, n) == 1.
PmOrder pm_order(const mpz_class& a, const mpz_class& n);

const char* closure_name(Closure c);

}  // namespace gp
