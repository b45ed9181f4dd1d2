#include "quotcoh/cli/run.hpp"

#include <chrono>

#include "quotcoh/errors.hpp"
#include "quotcoh/exterior.hpp"
#include "quotcoh/lie.hpp"
#include "quotcoh/torus.hpp"
#include "quotcoh/witness.hpp"

namespace quotcoh::cli {

namespace {

// "e1∧e2 - 1/2*e0∧e2"
std::string combination(const Vector &coeffs, const std::vector<exterior::MultiIndex> &basis,
                        const std::vector<std::string> &names) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational &c = coeffs[i];
    if (c.is_zero())
      continue;
    const std::string mono = exterior::monomial_name(basis[i], names);
    const Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    if (mag == Rational(1))
      out += mono;
    else
      out += mag.to_string() + (mono == "1" ? "" : "*" + mono);
  }
  return out.empty() ? "0" : out;
}

Report run_lie(const LieSection &cfg, const RunOptions &options, int &exit) {
  LieAlgebra g(cfg.dim);
  for (const auto &b : cfg.brackets)
    g.set_structure(b.i, b.j, b.k, b.value);
  const JacobiResult jac = jacobi_check(g);
  if (!jac) {
    const auto &t = *jac.violation;
    throw NotALieAlgebra("Jacobi identity fails on (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                         std::to_string(t[2]) + ")");
  }
  const Subspace h(cfg.dim, cfg.ideal);
  const QuotientAlgebra q = quotient(g, h);
  const CochainComplex c = ce_complex(q);
  const BettiReport b = betti(c);

  Report r;
  r.mode = "lie";
  r.betti = b.betti;
  r.ranks = b.ranks;
  std::vector<std::string> names;
  for (auto i : q.complement)
    names.push_back("e" + std::to_string(i));
  for (std::size_t k = 0; k < b.generators.size(); ++k) {
    const auto basis = exterior::enumerate_basis(q.algebra.dim(), k);
    std::vector<std::string> gens;
    for (const auto &v : b.generators[k])
      gens.push_back(combination(v, basis, names));
    r.generators.push_back(std::move(gens));
  }
  r.certificates.push_back({"jacobi", "", true, {}, {}, ""});
  r.certificates.push_back({"ideal", "dim " + std::to_string(h.dim()), true, {}, {}, ""});
  r.certificates.push_back({"d_squared_zero", "", squares_to_zero(c), {}, {}, ""});
  r.notes.push_back("cocycle representatives use the dual basis of the complement coordinates");
  if (options.check) {
    const bool twist = phi_sign_check(c);
    r.certificates.push_back({"phi_sign", "(-1)^k twist", twist, {}, {}, ""});
    if (!twist)
      exit = exit_code::check_failed;
  }
  return r;
}

Report run_torus(const TorusSection &cfg, const RunOptions &options, int &exit) {
  TorusSpec spec{cfg.n, cfg.foliation_dirs, cfg.invariance_coords, cfg.truncation};
  const TorusBettiReport tb = torus_betti(spec);

  Report r;
  r.mode = "torus";
  r.betti = tb.betti;
  r.ranks = tb.ranks;
  r.audited_modes = tb.audited_modes;
  std::vector<std::string> names;
  for (const auto &x : coordinate_names(spec.n))
    names.push_back("d" + x);
  for (const auto &degree : tb.mode_zero_generators) {
    std::vector<std::string> gens;
    for (const auto &m : degree)
      gens.push_back(exterior::monomial_name(m, names));
    r.generators.push_back(std::move(gens));
  }
  for (const auto &cert : tb.acyclicity_certificates) {
    Certificate c{"koszul", cert.mode.to_string(), cert.acyclic, cert.ranks, {}, ""};
    if (cert.failing_degree)
      c.detail = "nonzero cohomology in degree " + std::to_string(*cert.failing_degree);
    r.certificates.push_back(std::move(c));
  }
  r.notes.push_back("Fourier differential normalized: the 2*pi*i factor is set to 1 (ranks are unaffected)");
  r.notes.push_back("audit truncation |m|_inf <= " + std::to_string(spec.truncation));
  bool all_acyclic = true;
  for (const auto &c : tb.acyclicity_certificates)
    all_acyclic = all_acyclic && c.acyclic;
  if (!all_acyclic)
    exit = exit_code::internal;

  if (options.check) {
    const CrossCheck cc = cross_check_ce(spec);
    std::string detail = "CE betti";
    for (auto v : cc.ce_betti)
      detail += " " + std::to_string(v);
    r.certificates.push_back({"cross_check_ce", "abelian quotient", cc.agree, {}, {}, detail});
    const bool twist = phi_sign_check(cc.ce);
    r.certificates.push_back({"phi_sign", "(-1)^k twist", twist, {}, {}, ""});
    if ((!cc.agree || !twist) && exit == exit_code::ok)
      exit = exit_code::check_failed;
  }
  return r;
}

Report run_witness(const WitnessSection &cfg) {
  using namespace witness;
  const BumpFamily family = build_bumps(cfg.k_min, cfg.k_max, cfg.max_derivative_order, cfg.samples);
  const WitnessReport w = verify_bounds(family);

  Report r;
  r.mode = "witness";
  for (const auto &row : w.rows)
    r.certificates.push_back({"derivative_bound",
                              "k=" + std::to_string(row.k) + ",m=" + std::to_string(row.order),
                              true,
                              {},
                              {row.measured, row.bound, row.measured_scaled, row.bound_scaled},
                              "measured, bound, measured(2^k f), bound(2^k f)"});
  for (std::size_t m = 0; m < w.monotone_decrease.size(); ++m)
    r.certificates.push_back(
        {"monotone_decrease", "m=" + std::to_string(m), static_cast<bool>(w.monotone_decrease[m]), {}, {}, ""});
  r.certificates.push_back({"intervals_disjoint", "", w.intervals_disjoint, {}, {}, ""});
  for (std::size_t i = 0; i < family.k_range.size(); ++i) {
    const int k = family.k_range[i];
    r.certificates.push_back({"forced_level", "k=" + std::to_string(k), w.forced_levels[i] == k, {},
                              {static_cast<double>(w.forced_levels[i])}, ""});
  }
  r.certificates.push_back({"lift_obstruction", "", w.lift_obstruction, {}, {}, ""});
  const DegreeOneCertificate d1 = degree_one_obstruction();
  std::string witnesses;
  for (const auto &s : d1.witnesses)
    witnesses += (witnesses.empty() ? "" : ",") + s;
  r.certificates.push_back({"degree_one_obstruction",
                            d1.pullback_not_surjective ? "pullback-not-surjective" : "pullback-surjective",
                            d1.pullback_not_surjective,
                            {},
                            {static_cast<double>(d1.quotient_degree1_dim),
                             static_cast<double>(d1.invariant_basic_degree1_dim)},
                            "quotient degree-1 dim, invariant basic degree-1 dim; witness " + witnesses});
  r.notes.push_back("C_m is the measured sup of |phi^(m)| on the profile grid; relative slack 1e-9");
  return r;
}

} // namespace

RunResult run(const JobConfig &job, const RunOptions &options) {
  const auto start = std::chrono::steady_clock::now();
  RunResult out;
  int exit = exit_code::ok;
  try {
    switch (job.mode) {
    case JobMode::lie:
      out.report = run_lie(job.lie.value(), options, exit);
      break;
    case JobMode::torus:
      out.report = run_torus(job.torus.value(), options, exit);
      break;
    case JobMode::witness:
      out.report = run_witness(job.witness.value());
      break;
    }
  } catch (const MathRefusal &e) {
    exit = exit_code::refused;
    out.diagnostic = e.what();
    out.report = Report{};
    out.report.mode = to_string(job.mode);
    out.report.notes.push_back(e.what());
  } catch (const std::exception &e) {
    exit = exit_code::internal;
    out.diagnostic = std::string("internal error: ") + e.what();
    out.report = Report{};
    out.report.mode = to_string(job.mode);
    out.report.notes.push_back(out.diagnostic);
  }
  out.exit_code = exit;
  out.report.exit = exit;
  out.report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

} // namespace quotcoh::cli
