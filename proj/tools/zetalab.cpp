// zetalab: command-line front end for the exact, numeric and verification
// layers.

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetalab/exact.hpp"
#include "zetalab/ibp.hpp"
#include "zetalab/verify.hpp"
#include "zetalab/zeta_num.hpp"

namespace {

using zetalab::num::Complex;
using zetalab::num::PrecisionConfig;
using zetalab::num::Real;

struct Globals {
  std::optional<double> precision_target;
  std::optional<int> em_cutoff;
  std::optional<int> contour_points;

  PrecisionConfig config() const {
    PrecisionConfig cfg = zetalab::num::default_config();
    if (precision_target) cfg.target_abs_error = *precision_target;
    if (em_cutoff) cfg.em_cutoff = *em_cutoff;
    if (contour_points) cfg.contour_points = *contour_points;
    cfg.validate();
    return cfg;
  }
};

Complex parse_arg(const std::string& text, const char* flag) {
  try {
    return zetalab::num::parse_complex(text);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError(flag, "not a complex literal (a, a+bi, a-bi): " + text);
  }
}

int run_bernoulli(unsigned n, bool poly) {
  if (poly) {
    std::cout << zetalab::exact::bernoulli_polynomial(n).to_string("a") << "\n";
  } else {
    std::cout << zetalab::exact::bernoulli_number(n).to_string() << "\n";
  }
  return 0;
}

struct EvalArgs {
  std::string fn;
  int deriv = 0;
  std::string s;
  std::optional<double> alpha;
};

int run_eval(const EvalArgs& a, const PrecisionConfig& cfg) {
  namespace num = zetalab::num;
  auto need_s = [&] {
    if (a.s.empty()) throw CLI::RequiredError("--s");
    return parse_arg(a.s, "--s");
  };
  auto need_alpha = [&] {
    if (!a.alpha) throw CLI::RequiredError("--alpha");
    return static_cast<Real>(*a.alpha);
  };
  Complex value;
  if (a.fn == "zeta") {
    value = num::riemann_zeta_deriv(a.deriv, need_s(), cfg);
  } else if (a.fn == "hurwitz") {
    value = num::hurwitz_zeta_deriv(a.deriv, need_s(), need_alpha(), cfg);
  } else if (a.fn == "digamma") {
    if (a.deriv != 0) throw CLI::ValidationError("--deriv", "digamma takes no derivative order");
    value = num::digamma(need_alpha(), cfg);
  } else if (a.fn == "stieltjes") {
    value = num::stieltjes(a.deriv, a.alpha ? static_cast<Real>(*a.alpha) : Real(1), cfg);
  } else {
    if (a.deriv != 0) throw CLI::ValidationError("--deriv", "gamma takes no derivative order");
    value = num::gamma_complex(need_s(), cfg);
  }
  std::cout << num::format_complex(value) << "\n";
  return 0;
}

struct IntegrateArgs {
  std::vector<unsigned> ms;
  int deriv = 0;
  std::string s;
  bool symbolic = false;
};

int run_integrate(const IntegrateArgs& a, const PrecisionConfig& cfg) {
  const auto lc = zetalab::ibp::integral_poly_zeta(a.ms, a.deriv);
  if (a.symbolic) {
    std::cout << (lc.empty() ? std::string("0\n") : lc.to_string());
    return 0;
  }
  if (a.s.empty()) throw CLI::RequiredError("--s (or --symbolic)");
  const Complex s = parse_arg(a.s, "--s");
  if (!(s.real() < 1)) throw CLI::ValidationError("--s", "the integral converges only for Re s < 1");
  std::cout << zetalab::num::format_complex(zetalab::ibp::eval_combination(lc, s, cfg)) << "\n";
  return 0;
}

struct VerifyArgs {
  std::string filter;
  std::string format = "text";
  std::string out;
};

int run_verify(const VerifyArgs& a, const PrecisionConfig& cfg) {
  namespace v = zetalab::verify;
  const auto results = v::run_checks(a.filter, cfg);
  const auto report = v::render_report(results, a.format == "json" ? v::Format::kJson : v::Format::kText, cfg);
  if (a.out.empty()) {
    std::cout << report;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + a.out + " for writing");
    f << report;
  }
  return v::exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz zeta identities: exact Bernoulli arithmetic, numeric kernels and checks"};
  app.require_subcommand(1);
  Globals g;
  app.option_defaults()->always_capture_default(false);
  app.add_option("--precision-target", g.precision_target, "target absolute error for kernels")
      ->check(CLI::PositiveNumber);
  app.add_option("--em-cutoff", g.em_cutoff, "Euler-Maclaurin head length (>= 8)");
  app.add_option("--contour-points", g.contour_points, "contour samples (power of two)");

  unsigned bern_n = 0;
  bool bern_poly = false;
  auto* bern = app.add_subcommand("bernoulli", "print B_n or B_n(a) exactly");
  bern->add_option("--n", bern_n, "index")->required();
  bern->add_flag("--poly", bern_poly, "print the polynomial B_n(a)");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate one special-function value");
  eval->add_option("--fn", ev.fn)->required()->check(CLI::IsMember({"zeta", "hurwitz", "digamma", "stieltjes", "gamma"}));
  eval->add_option("--deriv", ev.deriv, "s-derivative order (Stieltjes index for stieltjes)");
  eval->add_option("--s", ev.s, "complex argument");
  eval->add_option("--alpha", ev.alpha, "real shift a > 0");

  IntegrateArgs in;
  auto* integ = app.add_subcommand("integrate", "integral over [0,1] of prod zeta(-m_i,a) zeta^(r)(s,a)");
  integ->add_option("--ms", in.ms, "comma-separated m_i")->required()->delimiter(',');
  integ->add_option("--deriv", in.deriv, "0 or 1")->check(CLI::IsMember({0, 1}));
  integ->add_option("--s", in.s, "complex argument, Re s < 1");
  integ->add_flag("--symbolic", in.symbolic, "print the reduction as zeta^(j)(s-k) * (num)/(den) lines");

  std::string s1, s2;
  auto* pair = app.add_subcommand("pair", "integral over [0,1] of zeta(s1,a) zeta(s2,a)");
  pair->add_option("--s1", s1)->required();
  pair->add_option("--s2", s2)->required();

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "run the identity checks");
  ver->add_option("--filter", va.filter, "id prefix");
  ver->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--out", va.out, "write the report here instead of stdout");

  for (auto* sub : {bern, eval, integ, pair, ver}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const PrecisionConfig cfg = g.config();
    if (*bern) return run_bernoulli(bern_n, bern_poly);
    if (*eval) return run_eval(ev, cfg);
    if (*integ) return run_integrate(in, cfg);
    if (*pair) {
      std::cout << zetalab::num::format_complex(
                       zetalab::ibp::pair_integral(parse_arg(s1, "--s1"), parse_arg(s2, "--s2"), cfg))
                << "\n";
      return 0;
    }
    return run_verify(va, cfg);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const zetalab::ZetaError& e) {
    std::cerr << "error (" << zetalab::to_string(e.kind()) << "): " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
