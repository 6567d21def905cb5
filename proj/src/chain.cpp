#include "gperiods/chain.hpp"

#include <stdexcept>

namespace gp {

std::pair<Frac, std::vector<ChainStep>> double_step(const Frac& x) {
  if (x.is_zero() || x >= Frac(1, 1))
    throw std::domain_error("double_step: argument must lie in (0,1)");
  Frac y(x.value() * 2);
  std::vector<ChainStep> steps{{StepKind::Double, x}};
  if (y > Frac(1, 1)) {
    steps.push_back({StepKind::ReduceMod, y});
    y = y - Frac(1, 1);
  }
  return {y, std::move(steps)};
}

Chain minimal_chain(const Frac& x) { return minimal_chain(x.num(), x.den()); }

Chain minimal_chain(const mpz_class& p, const mpz_class& q) {
  if (q == 0 || p < 1 || p > q)
    throw std::domain_error("minimal_chain: need 1 <= p <= q");
  Chain ch;
  ch.input_num = p;
  ch.input_den = q;
  ch.start = Frac(p, q);
  ch.fractions.push_back(ch.start);
  if (ch.start.is_one()) {
    ch.closure = Closure::TerminatesAtOne;
    return ch;
  }

  const mpz_class cap = 4 * ch.start.den();
  const Frac one(1, 1);
  Frac cur = ch.start;
  mpz_class iter = 0;
  while (true) {
    if (++iter > cap)
      throw std::logic_error("minimal_chain: iteration cap exceeded");
    auto [next, steps] = double_step(cur);
    for (auto& s : steps) ch.steps.push_back(s);
    ++ch.doublings;
    cur = next;

    if (cur.is_one()) {
      ch.fractions.push_back(cur);
      ch.closure = Closure::TerminatesAtOne;
      ch.reentry_index = 0;
      return ch;
    }

    // At most one closure event can fire at the first closure index;
    // +1 == -1 would need modulus <= 2, and an earlier match would have
    // stopped the loop already.
    long hit = -1;
    Closure kind = Closure::CycleSamePlus;
    const Frac mirror = one - cur;
    for (size_t j = 0; j < ch.fractions.size(); ++j) {
      if (ch.fractions[j] == cur) {
        if (hit >= 0) throw std::logic_error("minimal_chain: ambiguous closure");
        hit = static_cast<long>(j);
        kind = Closure::CycleSamePlus;
      } else if (ch.fractions[j] == mirror) {
        if (hit >= 0) throw std::logic_error("minimal_chain: ambiguous closure");
        hit = static_cast<long>(j);
        kind = Closure::CycleReflectMinus;
      }
    }
    ch.fractions.push_back(cur);
    if (hit >= 0) {
      ch.closure = kind;
      ch.reentry_index = hit;
      if (kind == Closure::CycleReflectMinus)
        ch.steps.push_back({StepKind::Reflect, cur});
      return ch;
    }
  }
}

std::vector<std::string> Chain::display_path() const {
  std::vector<std::string> out;
  out.push_back(fractions.front().str());
  for (long i = 0; i < doublings; ++i) {
    Frac raw(fractions[i].value() * 2);
    out.push_back(raw.str());
    if (raw > Frac(1, 1)) out.push_back(fractions[i + 1].str());
  }
  if (closure == Closure::CycleReflectMinus)
    out.push_back(fractions[reentry_index].str());
  return out;
}

PmOrder pm_order(const mpz_class& a, const mpz_class& n) {
  if (n < 1 || mpz_even_p(n.get_mpz_t()))
    throw std::domain_error("pm_order: modulus must be odd and >= 1");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  if (g != 1) throw std::domain_error("pm_order: arguments are not coprime");
  if (n == 1) return {1, +1};

  mpz_class base = a % n;
  if (base < 0) base += n;
  mpz_class r = base;
  const mpz_class minus_one = n - 1;
  for (long m = 1; m <= 2 * mpz_get_si(n.get_mpz_t()) + 2; ++m) {
    if (r == 1) return {m, +1};
    if (r == minus_one) return {m, -1};
    r = (r * base) % n;
  }
  throw std::logic_error("pm_order: no closure found");
}

const char* closure_name(Closure c) {
  switch (c) {
    case Closure::CycleSamePlus: return "cycle (+)";
    case Closure::CycleReflectMinus: return "cycle (-)";
    case Closure::TerminatesAtOne: return "terminates at 1";
  }
  return "?";
}

}  // namespace gp
