#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gperiods/chain.hpp"
#include "gperiods/eval.hpp"
#include "gperiods/gamma.hpp"
#include "gperiods/geometry.hpp"
#include "gperiods/quadrature.hpp"
#include "gperiods/solve.hpp"

namespace {

using nlohmann::json;

struct Options {
  long digits = 50;
  std::string format = "text";
  bool quadrature = false;
};

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

gp::Frac parse_fraction_arg(const std::string& text) {
  auto f = gp::Frac::parse(text);
  if (!f) throw std::domain_error("cannot parse fraction '" + text + "'");
  return *f;
}

// p/q in (0,1]; reduction is reported so the printed form matches the input.
gp::Frac gamma_argument(const std::string& text) {
  gp::Frac f = parse_fraction_arg(text);
  if (f.is_zero() || f > gp::Frac(1, 1))
    throw std::domain_error("argument must lie in (0,1], got " + text);
  return f;
}

void notice_reduced(const std::string& text, const gp::Frac& f) {
  std::string shown = f.str();
  std::string stripped;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
  if (stripped != shown && stripped != shown + "/1")
    std::cerr << "note: " << stripped << " reduced to " << shown << "\n";
}

std::string gamma_str(const gp::Frac& f) { return "Gamma(" + f.str() + ")"; }

std::string exponent_str(const mpz_class& e) {
  return e == 1 ? "" : "^" + e.get_str();
}

int cmd_chain(const Options& opt, const std::string& arg_text) {
  gp::Frac x = gamma_argument(arg_text);
  notice_reduced(arg_text, x);
  gp::Chain ch = gp::minimal_chain(x);

  if (opt.format == "json") {
    json steps = json::array();
    for (auto& s : ch.steps) {
      const char* kind = s.kind == gp::StepKind::Double      ? "double"
                         : s.kind == gp::StepKind::ReduceMod ? "reduce_mod"
                                                             : "reflect";
      steps.push_back({{"kind", kind}, {"at", s.at.str()}});
    }
    json out{{"input", ch.input_num.get_str() + "/" + ch.input_den.get_str()},
             {"start", ch.start.str()},
             {"doublings", ch.doublings},
             {"closure", gp::closure_name(ch.closure)},
             {"reentry_index", ch.reentry_index},
             {"path", ch.display_path()},
             {"steps", steps}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  const bool latex = opt.format == "latex";
  const char* gamma = latex ? "\\Gamma(" : "Gamma(";
  const char* arrow = latex ? " \\to " : " -> ";
  auto path = ch.display_path();
  if (x.is_one()) {
    std::cout << (latex ? "\\Gamma(1) = 1" : "Gamma(1) = 1") << "\n";
  } else {
    std::string line;
    for (auto& p : path) {
      if (!line.empty()) line += arrow;
      line += gamma + p + ")";
    }
    std::cout << line << "\n";
  }
  std::cout << "m = " << ch.doublings << ", closure = " << gp::closure_name(ch.closure)
            << ", reentry index = " << ch.reentry_index << "\n";
  return kExitOk;
}

int cmd_closed_form(const Options& opt, const std::string& arg_text) {
  gp::Frac x = gamma_argument(arg_text);
  notice_reduced(arg_text, x);
  gp::ClosedForm cf = gp::solve_closed_form(x);

  if (opt.format == "json") {
    json out = gp::to_json(cf);
    out["canonical"] = gp::to_canonical_string(cf.expr);
    std::cout << out.dump(2) << "\n";
  } else if (opt.format == "latex") {
    std::cout << "\\Gamma(" << cf.arg.str() << ")"
              << (cf.exponent == 1 ? "" : "^{" + cf.exponent.get_str() + "}") << " = "
              << gp::to_latex(cf.expr) << "\n";
  } else {
    std::cout << gamma_str(cf.arg) << exponent_str(cf.exponent) << " = "
              << gp::to_canonical_string(cf.expr) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, long qmax) {
  const long tol = opt.digits / 2;
  long total = 0, failures = 0;
  json rows = json::array();
  for (long q = 2; q <= qmax; ++q) {
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      gp::ClosedForm cf = gp::solve_closed_form(mpz_class(p), mpz_class(q));
      gp::VerifyResult r = gp::verify_closed_form(cf, opt.digits, tol, opt.quadrature);
      ++total;
      if (!r.pass) ++failures;
      if (opt.format == "json") {
        rows.push_back({{"arg", r.arg.str()},
                        {"exponent", r.exponent.get_str()},
                        {"rel_err", r.rel_err},
                        {"pass", r.pass}});
      } else {
        std::cout << gamma_str(r.arg) << exponent_str(r.exponent) << ": rel err " << r.rel_err
                  << (r.pass ? " pass" : " FAIL") << "\n";
      }
    }
  }
  if (opt.format == "json") {
    json out{{"digits", opt.digits},
             {"qmax", qmax},
             {"tolerance", "1e-" + std::to_string(tol)},
             {"rows", rows},
             {"total", total},
             {"failures", failures}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "verified " << (total - failures) << "/" << total << " forms at " << opt.digits
              << " digits, tolerance 1e-" << tol << "\n";
  }
  return failures == 0 ? kExitOk : kExitVerification;
}

int cmd_table(const Options& opt, long qmax) {
  json rows = json::array();
  bool all_ok = true;
  for (long q = 2; q <= qmax; ++q) {
    gp::TableRow row = gp::table_row(q, opt.digits);
    all_ok = all_ok && row.verified;
    if (opt.format == "json") {
      json verdicts = json::array();
      for (auto& [s, v] : row.verdicts) {
        json jv{{"period", s.str()}, {"verdict", gp::verdict_name(v.verdict)}};
        if (v.verdict == gp::Verdict::ProvenTranscendental)
          jv["beta_witness"] = {v.beta_a.str(), v.beta_b.str()};
        verdicts.push_back(jv);
      }
      rows.push_back({{"q", row.q},
                      {"exponent", row.form.exponent.get_str()},
                      {"closed_form", gp::to_canonical_string(row.form.expr)},
                      {"uses_meromorphic", row.uses_meromorphic},
                      {"elliptic", gp::elliptic_status_name(row.elliptic)},
                      {"verdicts", verdicts},
                      {"verified", row.verified},
                      {"rel_err", row.rel_err}});
    } else if (opt.format == "latex") {
      std::cout << row.q << " & " << row.form.exponent.get_str() << " & "
                << gp::to_latex(row.form.expr) << " & "
                << (row.uses_meromorphic ? "yes" : "no") << " & "
                << gp::elliptic_status_name(row.elliptic) << " \\\\\n";
    } else {
      std::cout << "q = " << row.q << ": " << gamma_str(row.form.arg)
                << exponent_str(row.form.exponent) << " = "
                << gp::to_canonical_string(row.form.expr) << "\n";
      std::cout << "  meromorphic form used: " << (row.uses_meromorphic ? "yes" : "no")
                << ", elliptic reduction: " << gp::elliptic_status_name(row.elliptic) << "\n";
      std::cout << "  periods:";
      for (auto& [s, v] : row.verdicts) {
        std::cout << " I_" << (s.is_integer() ? s.str() : "{" + s.str() + "}") << " ("
                  << gp::verdict_name(v.verdict) << ")";
      }
      std::cout << "\n  verification: rel err " << row.rel_err << " at " << opt.digits
                << " digits (" << (row.verified ? "pass" : "FAIL") << ")\n";
    }
  }
  if (opt.format == "json") std::cout << rows.dump(2) << "\n";
  return all_ok ? kExitOk : kExitVerification;
}

long integer_arg(const std::string& text) {
  auto f = gp::Frac::parse(text);
  if (!f || !f->is_integer()) throw std::domain_error("expected an integer, got '" + text + "'");
  return f->num_long();
}

int cmd_period(const Options& opt, const std::vector<std::string>& args) {
  if (args.empty() || args[0] != "I")
    throw std::domain_error("period: expected 'I <s>' or 'I <n> <k>'");
  gp::Frac s;
  std::optional<gp::QuadResult> quad;
  if (args.size() == 2) {
    s = parse_fraction_arg(args[1]);
    if (s < gp::Frac(1, 1)) throw std::domain_error("period index must satisfy Re(s) >= 1");
    quad = gp::period_quad(s, opt.digits);
  } else {
    long n = integer_arg(args[1]);
    long k = integer_arg(args[2]);
    quad = gp::period_quad_nk(n, k, opt.digits);
    s = gp::Frac(n, k);
  }
  const gp::QuadResult& qr = *quad;
  gp::Real ref = gp::period_value(s, opt.digits);
  gp::Real delta = abs(qr.value - ref);

  if (opt.format == "json") {
    json out{{"s", s.str()},
             {"value", qr.value.str(opt.digits)},
             {"err_estimate", qr.err_estimate.str(3)},
             {"evaluations", qr.evaluations},
             {"converged", qr.converged},
             {"beta_reference", ref.str(opt.digits)},
             {"beta_delta", delta.str(3)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "I_" << (s.is_integer() ? s.str() : "{" + s.str() + "}") << " = "
              << qr.value.str(opt.digits) << "\n";
    std::cout << "quadrature: err <= " << qr.err_estimate.str(3) << ", " << qr.evaluations
              << " evaluations, " << (qr.converged ? "converged" : "NOT converged") << "\n";
    std::cout << "beta reference: " << ref.str(opt.digits) << " (delta " << delta.str(3) << ")\n";
  }
  return qr.converged ? kExitOk : kExitVerification;
}

int cmd_branch_symmetry(const Options& opt, long n) {
  gp::SymmetryReport rep = gp::branch_symmetry_ratio(n, opt.digits);
  auto cstr = [](const gp::CReal& z, long d) {
    std::string im = z.im.str(d);
    if (!im.empty() && im[0] == '-') return z.re.str(d) + " - " + im.substr(1) + "i";
    return z.re.str(d) + " + " + im + "i";
  };
  auto cjson = [](const gp::CReal& z, long d) {
    return json{{"re", z.re.str(d)}, {"im", z.im.str(d)}};
  };
  if (opt.format == "json") {
    json chord = cjson(rep.chord.value, opt.digits);
    chord["err_estimate"] = rep.chord.err_estimate.str(3);
    chord["evaluations"] = rep.chord.evaluations;
    json out;
    out["n"] = n;
    out["chord"] = chord;
    out["expected"] = cjson(rep.expected, opt.digits);
    out["ratio"] = cjson(rep.ratio, opt.digits);
    out["abs_ratio"] = rep.abs_ratio.str(opt.digits);
    out["phase"] = rep.phase.str(opt.digits);
    out["converged"] = rep.converged;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n = " << n << "\n";
    std::cout << "chord integral:  " << cstr(rep.chord.value, opt.digits) << "\n";
    std::cout << "  err <= " << rep.chord.err_estimate.str(3) << ", " << rep.chord.evaluations
              << " evaluations, " << (rep.chord.converged ? "converged" : "NOT converged") << "\n";
    std::cout << "(1-zeta) I_n/2:  " << cstr(rep.expected, opt.digits) << "\n";
    std::cout << "ratio:           " << cstr(rep.ratio, 12) << "\n";
    std::cout << "|ratio| = " << rep.abs_ratio.str(12) << ", phase = " << rep.phase.str(12)
              << "\n";
  }
  return rep.converged ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Closed forms for Gamma(p/q) in terms of period integrals"};
  app.require_subcommand(1);
  app.add_option("--digits", opt.digits, "working precision in decimal digits")
      ->envname("GPERIODS_DIGITS")
      ->check(CLI::Range(15L, 100000L))
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  app.add_flag("--quadrature", opt.quadrature,
               "evaluate periods by quadrature instead of the Beta reference");

  std::string arg_text;
  auto* c_chain = app.add_subcommand("chain", "doubling chain for p/q");
  c_chain->add_option("fraction", arg_text, "p/q in (0,1]")->required();

  auto* c_form = app.add_subcommand("closed-form", "closed form for Gamma(p/q)^E");
  c_form->add_option("fraction", arg_text, "p/q in (0,1]")->required();

  long qmax = 8;
  auto* c_verify = app.add_subcommand("verify", "numerically verify closed forms up to qmax");
  c_verify->add_option("--qmax", qmax, "largest denominator")->check(CLI::Range(2L, 100000L))
      ->capture_default_str();

  auto* c_table = app.add_subcommand("table", "per-denominator summary with curve data");
  c_table->add_option("--qmax", qmax, "largest denominator")->check(CLI::Range(2L, 100000L))
      ->capture_default_str();

  std::vector<std::string> period_args;
  auto* c_period = app.add_subcommand("period", "evaluate I_s or I_{n/k} by quadrature");
  c_period->add_option("spec", period_args, "'I s', or 'I n k' for the integral form")
      ->expected(2, 3)
      ->required();

  long branch_n = 0;
  auto* c_branch = app.add_subcommand("branch-symmetry", "chord integral vs rotation symmetry");
  c_branch->add_option("n", branch_n, "curve degree, n >= 2")->required()
      ->check(CLI::Range(2L, 1000000L));

  // global flags remain valid after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_chain->parsed()) return cmd_chain(opt, arg_text);
    if (c_form->parsed()) return cmd_closed_form(opt, arg_text);
    if (c_verify->parsed()) return cmd_verify(opt, qmax);
    if (c_table->parsed()) return cmd_table(opt, qmax);
    if (c_period->parsed()) return cmd_period(opt, period_args);
    if (c_branch->parsed()) return cmd_branch_symmetry(opt, branch_n);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
