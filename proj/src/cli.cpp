#include "cl3/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cl3/deformed.hpp"
#include "cl3/ideal.hpp"
#include "cl3/multivector.hpp"
#include "cl3/spectral.hpp"
#include "cl3/spinor_ks.hpp"
#include "cl3/sweep.hpp"
#include "cl3/time_reversal.hpp"

namespace cl3::cli {

namespace {

constexpr const char* kSchema = "pauli-biortho/1";

// Ordered JSON emitter.  Field order is fixed by call order and floats are
// serialized with 17 significant digits, so identical inputs produce
// byte-identical output.
class JsonWriter {
 public:
  JsonWriter& begin_obj() {
    value_prefix();
    b_ += '{';
    first_.push_back(true);
    return *this;
  }
  JsonWriter& end_obj() {
    b_ += '}';
    first_.pop_back();
    return *this;
  }
  JsonWriter& begin_arr() {
    value_prefix();
    b_ += '[';
    first_.push_back(true);
    return *this;
  }
  JsonWriter& end_arr() {
    b_ += ']';
    first_.pop_back();
    return *this;
  }
  JsonWriter& key(const std::string& k) {
    value_prefix();
    append_quoted(k);
    b_ += ':';
    pending_key_ = true;
    return *this;
  }
  JsonWriter& num(double v) {
    value_prefix();
    if (!std::isfinite(v)) {  // JSON has no inf/nan
      b_ += "null";
      return *this;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    b_ += buf;
    return *this;
  }
  JsonWriter& integer(long long v) {
    value_prefix();
    b_ += std::to_string(v);
    return *this;
  }
  JsonWriter& str(const std::string& s) {
    value_prefix();
    append_quoted(s);
    return *this;
  }
  JsonWriter& boolean(bool v) {
    value_prefix();
    b_ += v ? "true" : "false";
    return *this;
  }

  const std::string& text() const { return b_; }

 private:
  void value_prefix() {
    if (pending_key_) {
      pending_key_ = false;
      return;
    }
    if (!first_.empty()) {
      if (!first_.back()) b_ += ',';
      first_.back() = false;
    }
  }
  void append_quoted(const std::string& s) {
    b_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': b_ += "\\\""; break;
        case '\\': b_ += "\\\\"; break;
        case '\n': b_ += "\\n"; break;
        case '\t': b_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char esc[8];
            std::snprintf(esc, sizeof esc, "\\u%04x", c);
            b_ += esc;
          } else {
            b_ += c;
          }
      }
    }
    b_ += '"';
  }

  std::string b_;
  std::vector<bool> first_;
  bool pending_key_ = false;
};

void put_complex(JsonWriter& j, cplx z) {
  j.begin_arr().num(z.real()).num(z.imag()).end_arr();
}

void put_matrix(JsonWriter& j, const CMat2& m) {
  j.begin_arr();
  j.begin_arr();
  put_complex(j, m.a11);
  put_complex(j, m.a12);
  j.end_arr();
  j.begin_arr();
  put_complex(j, m.a21);
  put_complex(j, m.a22);
  j.end_arr();
  j.end_arr();
}

void put_spinor(JsonWriter& j, const Spinor& s) {
  j.begin_arr();
  put_complex(j, s.c1);
  put_complex(j, s.c2);
  j.end_arr();
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

void emit(std::ostream& out, const std::string& json_text,
          const std::string& out_file) {
  out << json_text << "\n";
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw std::runtime_error("cannot open --out file " + out_file);
    f << json_text << "\n";
  }
}

int cmd_gens(double gamma, const std::string& out_file, std::ostream& out,
             std::ostream& err) {
  const DeformationParam p(gamma);
  const DeformedBasis b = deformed_generators(p);
  const VerificationReport rep = verify_clifford_relations(b);

  const CMat2 t_norm = deformation_transform(gamma);
  const CMat2 t_printed = auerbach_transform(std::asin(gamma), M_PI);
  const CMat2 gen[3] = {b.e1g, b.e2g, b.e3g};
  double outer_res = 0.0, printed_res = 0.0;
  for (int m = 1; m <= 3; ++m) {
    outer_res = std::max(
        outer_res, (outer_product_generator(m, t_norm) - gen[m - 1]).max_abs());
    if (std::abs(t_printed.det()) > 1e-12)
      printed_res =
          std::max(printed_res,
                   (outer_product_generator(m, t_printed) - gen[m - 1])
                       .max_abs());
    else
      printed_res = std::numeric_limits<double>::infinity();
  }

  JsonWriter j;
  j.begin_obj();
  j.key("schema").str(kSchema);
  j.key("command").str("gens");
  j.key("gamma").num(p.gamma);
  j.key("omega").num(p.omega);
  j.key("generators").begin_obj();
  j.key("e1");
  put_matrix(j, b.e1g);
  j.key("e2");
  put_matrix(j, b.e2g);
  j.key("e3");
  put_matrix(j, b.e3g);
  j.key("e12");
  put_matrix(j, b.e12g);
  j.key("e23");
  put_matrix(j, b.e23g);
  j.key("e31");
  put_matrix(j, b.e31g);
  j.key("e123");
  put_matrix(j, b.e123g);
  j.end_obj();
  j.key("clifford_check").begin_obj();
  j.key("pass").boolean(rep.passed());
  j.key("max_residual").num(rep.max_residual());
  j.end_obj();
  // rank-one reconstruction against the normalized transform, plus the
  // discrepancy of the two-angle transform as printed (flag, not a failure)
  j.key("outer_product_residual").num(outer_res);
  j.key("printed_transform_residual").num(printed_res);
  j.end_obj();
  emit(out, j.text(), out_file);
  err << "gens: clifford relations " << (rep.passed() ? "pass" : "FAIL")
      << " (max residual " << rep.max_residual() << ")\n";
  return rep.passed() && outer_res <= 1e-13 ? 0 : 1;
}

int cmd_spectrum(double gamma, double b1, double b2,
                 const std::string& out_file, std::ostream& out,
                 std::ostream& err) {
  const DeformationParam p(gamma);
  const FieldConfig f(b1, b2);
  const CMat2 h = build_hamiltonian(p, f);
  const BiorthoEigensystem s = eigensystem(p, f);
  const ProjectorPair pp = projectors(s);
  const CMat2 hm = build_hamiltonian(DeformationParam(-gamma), f);

  auto eig_res = [&](const CMat2& m, const Spinor& v, double lam) {
    return norm(m * v - lam * v) / f.b;
  };
  const double eigen_res = std::max(
      {eig_res(h, s.psi_plus_g, f.b), eig_res(h, s.psi_minus_g, -f.b),
       eig_res(hm, s.psi_plus_mg, f.b), eig_res(hm, s.psi_minus_mg, -f.b)});
  const double gram_res = std::max(std::abs(inner(s.psi_minus_mg, s.psi_plus_g)),
                                   std::abs(inner(s.psi_plus_mg, s.psi_minus_g)));
  const CMat2 id = CMat2::identity();
  const double proj_res =
      std::max({(pp.pi_plus + pp.pi_minus - id).max_abs(),
                (pp.pi_plus * pp.pi_minus).max_abs(),
                (pp.pi_plus * pp.pi_plus - pp.pi_plus).max_abs(),
                (pp.pi_minus * pp.pi_minus - pp.pi_minus).max_abs()});
  const double spectral_res =
      (h - f.b * pp.pi_plus + f.b * pp.pi_minus).max_abs() / f.b;

  JsonWriter j;
  j.begin_obj();
  j.key("schema").str(kSchema);
  j.key("command").str("spectrum");
  j.key("gamma").num(p.gamma);
  j.key("omega").num(p.omega);
  j.key("B").begin_arr().num(f.b1).num(f.b2).end_arr();
  j.key("E").begin_arr().num(s.e_plus).num(s.e_minus).end_arr();
  j.key("theta").begin_arr().num(s.theta_plus).num(s.theta_minus).end_arr();
  j.key("spinors").begin_obj();
  j.key("psi_plus_g");
  put_spinor(j, s.psi_plus_g);
  j.key("psi_minus_g");
  put_spinor(j, s.psi_minus_g);
  j.key("psi_plus_mg");
  put_spinor(j, s.psi_plus_mg);
  j.key("psi_minus_mg");
  put_spinor(j, s.psi_minus_mg);
  j.end_obj();
  j.key("projectors").begin_obj();
  j.key("pi_plus");
  put_matrix(j, pp.pi_plus);
  j.key("pi_minus");
  put_matrix(j, pp.pi_minus);
  j.end_obj();
  j.key("residuals").begin_obj();
  j.key("eigen").num(eigen_res);
  j.key("gram").num(gram_res);
  j.key("projector").num(proj_res);
  j.key("spectral_rep").num(spectral_res);
  j.end_obj();
  j.end_obj();
  emit(out, j.text(), out_file);

  const double worst =
      std::max({eigen_res, gram_res, proj_res, spectral_res});
  err << "spectrum: E = [" << s.e_plus << ", " << s.e_minus
      << "], max residual " << worst << "\n";
  return worst <= 1e-12 ? 0 : 1;
}

int cmd_verify(const SweepConfig& cfg, const std::string& out_file,
               std::ostream& out, std::ostream& err) {
  const SweepReport rep = run_sweep(cfg);

  JsonWriter j;
  j.begin_obj();
  j.key("schema").str(kSchema);
  j.key("command").str("verify");
  j.key("config").begin_obj();
  j.key("gammas").begin_arr();
  for (double g : cfg.gammas) j.num(g);
  j.end_arr();
  j.key("fields").begin_arr();
  for (auto [b1, b2] : cfg.fields) j.begin_arr().num(b1).num(b2).end_arr();
  j.end_arr();
  j.key("trials").integer(cfg.trials);
  j.key("seed").integer(static_cast<long long>(cfg.seed));
  j.key("parallel").boolean(cfg.parallel);
  j.end_obj();
  j.key("checks").begin_arr();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& c : rep.checks) {
    switch (c.status) {
      case CheckStatus::Pass: ++passed; break;
      case CheckStatus::Fail: ++failed; break;
      case CheckStatus::Skip: ++skipped; break;
    }
    j.begin_obj();
    j.key("name").str(c.name);
    j.key("status").str(status_name(c.status));
    j.key("max_residual").num(c.max_residual);
    j.key("tolerance").num(c.tolerance);
    j.key("points").integer(static_cast<long long>(c.points));
    j.key("skipped_points").integer(static_cast<long long>(c.skipped));
    j.key("worst").str(c.worst);
    j.end_obj();
  }
  j.end_arr();
  j.key("summary").begin_obj();
  j.key("total").integer(static_cast<long long>(rep.checks.size()));
  j.key("passed").integer(static_cast<long long>(passed));
  j.key("failed").integer(static_cast<long long>(failed));
  j.key("skipped").integer(static_cast<long long>(skipped));
  j.end_obj();
  j.end_obj();
  emit(out, j.text(), out_file);

  for (const auto& c : rep.checks)
    err << "  [" << status_name(c.status) << "] " << c.name
        << " (max residual " << c.max_residual << ", tol " << c.tolerance
        << ")\n";
  err << "verify: " << passed << " passed, " << failed << " failed, "
      << skipped << " skipped\n";
  return rep.all_passed() ? 0 : 1;
}

int cmd_ks(int variant_num, const std::vector<double>& rvec,
           const std::vector<double>& spherical, double omega1,
           const std::string& out_file, std::ostream& out, std::ostream& err) {
  const KSVariant variant =
      variant_num == 1 ? KSVariant::MinusBranch : KSVariant::PlusBranch;
  KSQuadruple q;
  if (!rvec.empty()) {
    q = {rvec[0], rvec[1], rvec[2], rvec[3]};
  } else {
    q = ks_lift(variant, spherical[0], spherical[1], spherical[2], omega1);
  }
  const auto x = ks_map(variant, q);
  const double rhs = q.norm_sq() * q.norm_sq();
  const double norm_check =
      std::abs(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - rhs) /
      std::max(rhs, 1e-30);

  // the sandwich multivector behind the map; gamma cancels on the minus
  // branch and divides out on the plus branch, so a reference gamma serves
  const DeformationParam ref(0.5);
  const DeformedBasis b = deformed_generators(ref);
  const TimeReversedBasis tb = time_reversed_generators(b);
  const SpinorOperatorCoords coords{q.r1, q.r2, q.r4, -q.r3};
  const CMat2 xi = spinor_operator(coords, b, tb);
  Multivector sandwich = upsilon(variant, xi, b, tb);
  if (variant == KSVariant::PlusBranch)
    sandwich = (1.0 / ref.gamma) * sandwich;

  JsonWriter j;
  j.begin_obj();
  j.key("schema").str(kSchema);
  j.key("command").str("ks");
  j.key("variant").integer(variant_num);
  j.key("r").begin_arr().num(q.r1).num(q.r2).num(q.r3).num(q.r4).end_arr();
  j.key("x").begin_arr().num(x[0]).num(x[1]).num(x[2]).end_arr();
  j.key("norm_check").num(norm_check);
  j.key("upsilon").begin_arr();
  for (double c : sandwich.coeffs()) j.num(c);
  j.end_arr();
  j.end_obj();
  emit(out, j.text(), out_file);
  err << "ks: x = [" << x[0] << ", " << x[1] << ", " << x[2]
      << "], norm residual " << norm_check << "\n";
  return norm_check <= 1e-12 ? 0 : 1;
}

int cmd_evolve(double gamma, double b1, double b2,
               const std::vector<double>& psi0v, double t_final, int steps,
               const std::string& out_file, std::ostream& out,
               std::ostream& err) {
  const DeformationParam p(gamma);
  const FieldConfig f(b1, b2);
  const CMat2 h = build_hamiltonian(p, f);
  const BiorthoEigensystem s = eigensystem(p, f);
  const Spinor psi0{cplx(psi0v[0], psi0v[1]), cplx(psi0v[2], psi0v[3])};

  JsonWriter j;
  j.begin_obj();
  j.key("schema").str(kSchema);
  j.key("command").str("evolve");
  j.key("gamma").num(p.gamma);
  j.key("B").begin_arr().num(f.b1).num(f.b2).end_arr();
  j.key("psi0");
  put_spinor(j, psi0);
  j.key("series").begin_arr();
  double drift = 0.0;
  const cplx ref = inner(associated_state(psi0, s), psi0);
  for (int k = 0; k <= steps; ++k) {
    const double t = t_final * k / steps;
    const Spinor psi = evolve(h, psi0, t);
    const cplx bnorm = inner(associated_state(psi, s), psi);
    drift = std::max(drift, std::abs(bnorm - ref));
    j.begin_obj();
    j.key("t").num(t);
    j.key("psi");
    put_spinor(j, psi);
    j.key("conv_norm").num(norm(psi));
    j.key("biortho_norm");
    put_complex(j, bnorm);
    j.end_obj();
  }
  j.end_arr();
  j.key("biortho_norm_drift").num(drift);
  j.end_obj();
  emit(out, j.text(), out_file);
  err << "evolve: " << steps << " steps to t = " << t_final
      << ", bi-orthogonal norm drift " << drift << "\n";
  return drift <= 1e-8 ? 0 : 1;
}

int cmd_ideal(const std::vector<double>& psiv, const std::vector<double>& phiv,
              const std::string& out_file, std::ostream& out,
              std::ostream& err) {
  const Spinor psi{cplx(psiv[0], psiv[1]), cplx(psiv[2], psiv[3])};
  const Spinor phi{cplx(phiv[0], phiv[1]), cplx(phiv[2], phiv[3])};
  const IdealSpinor pi = embed(psi), fi = embed(phi);
  const RingElement rp = reversion_product(pi, fi);
  const RingElement cp = conjugation_product(fi, pi);

  JsonWriter j;
  j.begin_obj();
  j.key("schema").str(kSchema);
  j.key("command").str("ideal");
  j.key("xi").begin_arr().num(pi.xi0).num(pi.xi1).num(pi.xi2).num(pi.xi3).end_arr();
  j.key("xi_phi")
      .begin_arr()
      .num(fi.xi0)
      .num(fi.xi1)
      .num(fi.xi2)
      .num(fi.xi3)
      .end_arr();
  j.key("reversion_product");
  put_complex(j, rp.c);
  j.key("conjugation_product");
  put_complex(j, cp.c);
  j.end_obj();
  emit(out, j.text(), out_file);
  err << "ideal: <psi|phi> = (" << rp.c.real() << ", " << rp.c.imag() << ")\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"gamma-deformed Pauli algebra toolkit"};
  app.require_subcommand(1);

  double gamma = 0.0, b1 = 1.0, b2 = 0.0;
  std::string out_file;

  auto* gens = app.add_subcommand("gens", "deformed generators + checks");
  gens->add_option("--gamma", gamma, "deformation parameter")->required();
  gens->add_option("--out", out_file, "also write JSON report here");

  auto* spectrum = app.add_subcommand("spectrum", "eigensystem + projectors");
  spectrum->add_option("--gamma", gamma)->required();
  spectrum->add_option("--b1", b1)->required();
  spectrum->add_option("--b2", b2)->required();
  spectrum->add_option("--out", out_file);

  SweepConfig cfg = SweepConfig::defaults();
  std::vector<double> v_gammas, v_b1, v_b2;
  std::vector<std::string> tol_overrides;
  bool serial = false;
  int jobs = 0;
  auto* verify = app.add_subcommand("verify", "full invariant sweep");
  verify->add_option("--gamma", v_gammas, "sweep gammas (repeatable)");
  verify->add_option("--b1", v_b1, "field B1 values (repeatable)");
  verify->add_option("--b2", v_b2, "field B2 values (paired with --b1)");
  verify->add_option("--trials", cfg.trials, "randomized trials per check");
  verify->add_option("--seed", cfg.seed, "RNG seed");
  verify->add_flag("--serial", serial, "run the serial reference path");
  verify->add_option("--jobs", jobs, "worker threads (0 = runtime default)");
  verify->add_option("--tol", tol_overrides,
                     "per-check tolerance override NAME=VALUE (repeatable)");
  verify->add_option("--out", out_file);

  int variant = 1;
  std::vector<double> rvec, spherical;
  double omega1 = 0.0;
  auto* ks = app.add_subcommand("ks", "Kustaanheimo-Stiefel maps");
  ks->add_option("--variant", variant, "1 = minus branch, 2 = plus branch")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  ks->add_option("--r", rvec, "quadruple r1,r2,r3,r4")->delimiter(',');
  ks->add_option("--spherical", spherical, "lift input r,theta,phi")
      ->delimiter(',');
  ks->add_option("--omega1", omega1, "free lift angle");
  ks->add_option("--out", out_file);

  std::vector<double> psi0v{1.0, 0.0, 0.0, 0.0};
  double t_final = 1.0;
  int steps = 1000;
  auto* evolve_cmd = app.add_subcommand("evolve", "Schrodinger time series");
  evolve_cmd->add_option("--gamma", gamma)->required();
  evolve_cmd->add_option("--b1", b1)->required();
  evolve_cmd->add_option("--b2", b2)->required();
  evolve_cmd->add_option("--psi0", psi0v, "initial state re,im,re,im")
      ->delimiter(',');
  evolve_cmd->add_option("--t", t_final, "final time")->required();
  evolve_cmd->add_option("--steps", steps, "number of samples");
  evolve_cmd->add_option("--out", out_file);

  std::vector<double> psiv, phiv;
  auto* ideal_cmd = app.add_subcommand("ideal", "left-ideal coordinates");
  ideal_cmd->add_option("--psi", psiv, "spinor re,im,re,im")
      ->delimiter(',')
      ->required();
  ideal_cmd->add_option("--phi", phiv, "second spinor re,im,re,im")
      ->delimiter(',');
  ideal_cmd->add_option("--out", out_file);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (gens->parsed()) return cmd_gens(gamma, out_file, out, err);
    if (spectrum->parsed())
      return cmd_spectrum(gamma, b1, b2, out_file, out, err);
    if (verify->parsed()) {
      if (!v_gammas.empty()) cfg.gammas = v_gammas;
      if (!v_b1.empty() || !v_b2.empty()) {
        if (v_b1.size() != v_b2.size())
          throw std::invalid_argument("--b1 and --b2 must pair up");
        cfg.fields.clear();
        for (std::size_t i = 0; i < v_b1.size(); ++i)
          cfg.fields.emplace_back(v_b1[i], v_b2[i]);
      }
      cfg.parallel = !serial;
      if (jobs < 0) throw std::invalid_argument("--jobs must be >= 0");
#ifdef _OPENMP
      if (jobs > 0) omp_set_num_threads(jobs);
#endif
      const std::vector<std::string> known = sweep_check_names();
      for (const auto& ov : tol_overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("--tol wants NAME=VALUE, got " + ov);
        const std::string name = ov.substr(0, eq);
        if (std::find(known.begin(), known.end(), name) == known.end())
          throw std::invalid_argument("--tol: unknown check " + name);
        cfg.tolerance_overrides[name] = std::stod(ov.substr(eq + 1));
      }
      return cmd_verify(cfg, out_file, out, err);
    }
    if (ks->parsed()) {
      if (rvec.empty() == spherical.empty())
        throw std::invalid_argument("ks wants exactly one of --r, --spherical");
      if (!rvec.empty() && rvec.size() != 4)
        throw std::invalid_argument("--r wants four components");
      if (!spherical.empty() && spherical.size() != 3)
        throw std::invalid_argument("--spherical wants r,theta,phi");
      return cmd_ks(variant, rvec, spherical, omega1, out_file, out, err);
    }
    if (evolve_cmd->parsed()) {
      if (psi0v.size() != 4)
        throw std::invalid_argument("--psi0 wants four components");
      if (steps < 1) throw std::invalid_argument("--steps must be >= 1");
      return cmd_evolve(gamma, b1, b2, psi0v, t_final, steps, out_file, out,
                        err);
    }
    if (ideal_cmd->parsed()) {
      if (psiv.size() != 4)
        throw std::invalid_argument("--psi wants four components");
      if (phiv.empty()) phiv = psiv;
      if (phiv.size() != 4)
        throw std::invalid_argument("--phi wants four components");
      return cmd_ideal(psiv, phiv, out_file, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cl3::cli
