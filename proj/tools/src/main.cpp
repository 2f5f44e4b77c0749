#include "json_io.hpp"
#include "verify.hpp"

#include "spinharm/harmonic.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace spinharm;

// Usage problems (exit code 2), as opposed to verification failures (1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HalfInteger parse_half(const std::string& s, const char* what) {
  auto v = HalfInteger::parse(s);
  if (!v) throw UsageError(std::string(what) + ": cannot parse '" + s + "' as a half-integer");
  return *v;
}

// Angles accept plain floating-point literals plus the forms "pi", "pi/3",
// "2pi/3", "0.5pi", with an optional leading sign.
std::optional<double> parse_angle(const std::string& s) {
  constexpr double kPi = 3.14159265358979323846;
  std::string body = s;
  double sign = 1.0;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    if (body[0] == '-') sign = -1.0;
    body.erase(0, 1);
  }
  auto pos = body.find("pi");
  if (pos == std::string::npos) {
    try {
      std::size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size()) return std::nullopt;
      return v;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  double coef = 1.0;
  if (pos > 0) {
    try {
      std::size_t used = 0;
      coef = std::stod(body.substr(0, pos), &used);
      if (used != pos) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  std::string rest = body.substr(pos + 2);
  double div = 1.0;
  if (!rest.empty()) {
    if (rest[0] != '/') return std::nullopt;
    try {
      std::size_t used = 0;
      div = std::stod(rest.substr(1), &used);
      if (used != rest.size() - 1 || div == 0.0) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return sign * coef * kPi / div;
}

HalfInteger configured_cap() {
  const char* env = std::getenv("SPINHARM_CAP");
  if (env == nullptr || *env == '\0') return HalfInteger::from_twice(25);
  auto v = HalfInteger::parse(env);
  if (!v || v->is_negative()) throw UsageError(std::string("SPINHARM_CAP: invalid value '") + env + "'");
  return *v;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_complex(const std::complex<double>& z) {
  std::string out = fmt_double(z.real());
  out += z.imag() < 0 ? " - " : " + ";
  out += fmt_double(std::abs(z.imag()));
  out += "i";
  return out;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create output directory '" + dir + "': " + ec.message());
}

int cmd_table(const std::string& lmax_str, const std::string& format, const std::string& out_dir) {
  HalfInteger cap = configured_cap();
  HalfInteger l_max = lmax_str.empty() ? cap : parse_half(lmax_str, "--lmax");
  if (l_max.is_negative() || l_max > cap)
    throw UsageError("--lmax " + l_max.str() + " outside [0, " + cap.str() +
                     "] (cap; override with SPINHARM_CAP)");
  ensure_dir(out_dir);

  std::vector<Harmonic> table;
  for (const auto& qn : states_up_to(l_max)) table.push_back(make_harmonic(qn));

  if (format == "json") {
    Json arr = Json::array();
    for (const Harmonic& h : table) arr.push_back(harmonic_to_json(h));
    std::string path = out_dir + "/harmonics.json";
    write_json_file(path, arr);
    std::cout << "wrote " << table.size() << " records to " << path << "\n";
  } else {
    std::string path = out_dir + "/harmonics.csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << "l,m,order,poly,normSq,normConst,phiPeriodPi\n";
    for (const Harmonic& h : table) {
      std::string poly;
      for (std::size_t k = 0; k < h.poly.coeffs.size(); ++k) {
        if (k > 0) poly += ' ';
        poly += to_string(h.poly.coeffs[k]);
      }
      out << h.qn.l.str() << ',' << h.qn.m.str() << ',' << h.qn.order() << ',' << poly << ','
          << norm_squared_integral(h.qn).str() << ',' << fmt_double(normalization_constant(h.qn))
          << ',' << phi_period_in_pi(h.qn) << '\n';
    }
    std::cout << "wrote " << table.size() << " records to " << path << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& lmax_str, double h, long long nodes,
               unsigned seed, const std::string& out_dir) {
  HalfInteger cap = configured_cap();
  std::optional<HalfInteger> l_max_arg;
  if (!lmax_str.empty()) {
    HalfInteger v = parse_half(lmax_str, "--lmax");
    if (v.is_negative() || v > cap)
      throw UsageError("--lmax " + v.str() + " outside [0, " + cap.str() +
                       "] (cap; override with SPINHARM_CAP)");
    l_max_arg = v;
  }
  ensure_dir(out_dir);

  SuiteOptions opts;
  opts.h = h;
  opts.nodes = nodes;
  opts.seed = seed;
  opts.out_dir = out_dir;

  // The finite-difference bound is calibrated on the default grid for
  // l <= 9/2; that is the oracle default. Symbolic and quadrature suites
  // default to the full cap.
  const HalfInteger oracle_default =
      cap < HalfInteger::from_twice(9) ? cap : HalfInteger::from_twice(9);

  std::vector<SectionResult> sections;
  auto want = [&suite](const char* name) { return suite == "all" || suite == name; };
  if (want("eigen")) {
    opts.l_max = l_max_arg.value_or(cap);
    sections.push_back(run_eigen_suite(opts));
  }
  if (want("ladder")) {
    opts.l_max = l_max_arg.value_or(cap);
    sections.push_back(run_ladder_suite(opts));
  }
  if (want("commutators")) {
    opts.l_max = l_max_arg.value_or(cap);
    sections.push_back(run_commutators_suite(opts));
  }
  if (want("oracle")) {
    opts.l_max = l_max_arg.value_or(oracle_default);
    sections.push_back(run_oracle_suite(opts));
  }
  if (want("doublevalue")) {
    opts.l_max = l_max_arg.value_or(cap);
    sections.push_back(run_doublevalue_suite(opts));
  }

  Json summary = summary_to_json(sections);
  std::cout << summary.dump(2) << "\n";
  return summary["failures"].get<long long>() == 0 ? 0 : 1;
}

int cmd_eval(const std::string& l_str, const std::string& m_str, const std::string& theta_str,
             const std::string& phi_str) {
  constexpr double kPi = 3.14159265358979323846;
  QuantumNumbers qn{parse_half(l_str, "l"), parse_half(m_str, "m")};
  if (!qn.valid())
    throw UsageError("invalid quantum numbers (l=" + qn.l.str() + ", m=" + qn.m.str() + ")");
  auto theta = parse_angle(theta_str);
  auto phi = parse_angle(phi_str);
  if (!theta) throw UsageError("theta: cannot parse '" + theta_str + "'");
  if (!phi) throw UsageError("phi: cannot parse '" + phi_str + "'");
  if (!(*theta > 0.0 && *theta < kPi))
    throw UsageError("theta = " + fmt_double(*theta) + " outside (0, pi)");

  Harmonic h = make_harmonic(qn);
  std::complex<double> raw = h.expr.eval(*theta, *phi);
  double n = normalization_constant(qn);
  std::cout << "Y(l=" << qn.l.str() << ", m=" << qn.m.str() << ") at theta=" << fmt_double(*theta)
            << ", phi=" << fmt_double(*phi) << "\n";
  std::cout << "expr       = " << h.expr.str() << "\n";
  std::cout << "raw        = " << fmt_complex(raw) << "\n";
  std::cout << "normConst  = " << fmt_double(n) << "\n";
  std::cout << "normalized = " << fmt_complex(n * raw) << "\n";
  return 0;
}

int cmd_plotdata(const std::string& l_str, const std::string& m_str, int n_theta, int n_phi,
                 const std::string& out_dir) {
  constexpr double kPi = 3.14159265358979323846;
  QuantumNumbers qn{parse_half(l_str, "l"), parse_half(m_str, "m")};
  if (!qn.valid())
    throw UsageError("invalid quantum numbers (l=" + qn.l.str() + ", m=" + qn.m.str() + ")");
  if (n_theta < 1 || n_phi < 1) throw UsageError("nTheta and nPhi must be positive");

  Harmonic h = make_harmonic(qn);
  // |Y|² through the exact product Y·conj(Y): the phi dependence cancels
  // symbolically, so the column is bitwise constant across phi.
  TrigExpr abs2_expr = h.expr * h.expr.conj();
  const double phi_range = phi_period_in_pi(qn) * kPi;

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    file.open(out_dir + "/plotdata.csv", std::ios::binary);
    if (!file) throw UsageError("cannot write " + out_dir + "/plotdata.csv");
    out = &file;
  }

  *out << "theta,phi,reY,imY,absY2\n";
  for (int i = 0; i < n_theta; ++i) {
    double theta = (i + 1) * kPi / (n_theta + 1);
    for (int j = 0; j < n_phi; ++j) {
      double phi = j * phi_range / n_phi;
      std::complex<double> y = h.expr.eval(theta, phi);
      *out << fmt_double(theta) << ',' << fmt_double(phi) << ',' << fmt_double(y.real()) << ','
           << fmt_double(y.imag()) << ',' << fmt_double(abs2_expr.eval(theta, phi).real()) << '\n';
    }
  }
  if (!out_dir.empty())
    std::cout << "wrote " << n_theta * n_phi << " rows to " << out_dir << "/plotdata.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spinharm: exact integer and half-odd-integer spherical harmonics,\n"
      "angular-momentum operators, ladder classification, and a numerical\n"
      "oracle for cross-checking the symbolic results."};
  app.require_subcommand(1);
  // --h is a real option below; keep help on --help only.
  app.set_help_flag("--help", "print help and exit");

  std::string lmax_str, format = "json", out_dir = ".", suite;
  double h = 1e-4;
  long long nodes = 0;
  unsigned seed = 12345;

  CLI::App* table = app.add_subcommand("table", "emit every harmonic up to --lmax");
  table->set_help_flag("--help", "print help and exit");
  table->add_option("--lmax", lmax_str, "highest l, e.g. 5/2 or 2.5 (default: the cap)");
  table->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table->add_option("--out", out_dir, "output directory")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "run verification sweeps");
  verify->set_help_flag("--help", "print help and exit");
  verify->add_option("suite", suite, "eigen|ladder|commutators|oracle|doublevalue|all")
      ->required()
      ->check(CLI::IsMember({"eigen", "ladder", "commutators", "oracle", "doublevalue", "all"}));
  verify->add_option("--lmax", lmax_str,
                     "highest l (defaults: 9/2 for oracle, the cap for the rest)");
  verify->add_option("--h", h, "finite-difference step")->capture_default_str();
  verify->add_option("--nodes", nodes, "quadrature nodes (0 = per-state exactness bound)")
      ->capture_default_str();
  verify->add_option("--seed", seed, "seed for random family members")->capture_default_str();
  verify->add_option("--out", out_dir, "directory for detail reports")->capture_default_str();

  std::string l_str, m_str, theta_str, phi_str;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one harmonic at (theta, phi)");
  eval->set_help_flag("--help", "print help and exit");
  eval->add_option("l", l_str, "l as fraction or decimal, e.g. 5/2")->required();
  eval->add_option("m", m_str, "m as fraction or decimal")->required();
  eval->add_option("theta", theta_str, "angle in (0, pi); accepts forms like pi/3")->required();
  eval->add_option("phi", phi_str, "angle; accepts forms like 2pi/3")->required();

  int n_theta = 5, n_phi = 9;
  std::string plot_out;
  CLI::App* plot = app.add_subcommand("plotdata", "emit CSV samples of one harmonic");
  plot->set_help_flag("--help", "print help and exit");
  plot->add_option("l", l_str, "l as fraction or decimal")->required();
  plot->add_option("m", m_str, "m as fraction or decimal")->required();
  plot->add_option("ntheta", n_theta, "theta rows")->capture_default_str();
  plot->add_option("nphi", n_phi, "phi columns per theta")->capture_default_str();
  plot->add_option("--out", plot_out, "write plotdata.csv here instead of stdout");

  try {
    app.parse(argc, argv);
    if (table->parsed()) return cmd_table(lmax_str, format, out_dir);
    if (verify->parsed()) return cmd_verify(suite, lmax_str, h, nodes, seed, out_dir);
    if (eval->parsed()) return cmd_eval(l_str, m_str, theta_str, phi_str);
    if (plot->parsed()) return cmd_plotdata(l_str, m_str, n_theta, n_phi, plot_out);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
