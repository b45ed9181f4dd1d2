#include "quotcoh/torus.hpp"

#include <stdexcept>

#include "quotcoh/errors.hpp"

namespace quotcoh {

bool Mode::is_zero() const {
  for (auto x : m)
    if (x != 0)
      return false;
  return true;
}

std::string Mode::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0)
      out += ",";
    out += std::to_string(m[i]);
  }
  return out + ")";
}

namespace {

ExtMatrix direction_matrix(const TorusSpec &spec) {
  ExtMatrix a(spec.foliation_dirs.size(), spec.n);
  for (std::size_t i = 0; i < spec.foliation_dirs.size(); ++i) {
    if (spec.foliation_dirs[i].size() != spec.n)
      throw InvalidSpec("foliation direction " + std::to_string(i) + " has length " +
                        std::to_string(spec.foliation_dirs[i].size()) + ", expected " +
                        std::to_string(spec.n));
    for (std::size_t j = 0; j < spec.n; ++j)
      a(i, j) = spec.foliation_dirs[i][j];
  }
  return a;
}

void check_mode_length(const Mode &mode, const TorusSpec &spec) {
  if (mode.m.size() != spec.n)
    throw std::invalid_argument("mode " + mode.to_string() + " does not live on T^" + std::to_string(spec.n));
}

} // namespace

TransverseFrame transverse_frame(const TorusSpec &spec) {
  for (auto j : spec.invariance_coords)
    if (j >= spec.n)
      throw InvalidSpec("invariance coordinate " + std::to_string(j) + " out of range");
  const ExtMatrix a = direction_matrix(spec);
  TransverseFrame frame;
  frame.pivots = generic_pivot_columns(a);
  if (frame.pivots.size() != spec.foliation_dirs.size())
    throw InvalidSpec("foliation directions are linearly dependent");
  std::vector<bool> pivot(spec.n, false);
  for (auto p : frame.pivots)
    pivot[p] = true;
  for (std::size_t j = 0; j < spec.n; ++j)
    if (!pivot[j])
      frame.coords.push_back(j);
  return frame;
}

bool survives(const Mode &mode, const TorusSpec &spec) {
  check_mode_length(mode, spec);
  for (auto j : spec.invariance_coords)
    if (j < spec.n && mode.m[j] != 0)
      return false;
  for (const auto &v : spec.foliation_dirs) {
    ExtScalar pairing;
    for (std::size_t j = 0; j < spec.n && j < v.size(); ++j)
      if (mode.m[j] != 0)
        pairing += Rational(static_cast<long>(mode.m[j])) * v[j];
    if (!ext_is_zero(pairing))
      return false;
  }
  return true;
}

namespace {

ModeComplex mode_complex_in_frame(const Mode &mode, const TransverseFrame &frame) {
  using namespace exterior;
  ModeComplex mc;
  mc.mode = mode;
  mc.transverse_coords = frame.coords;
  const std::size_t r = frame.coords.size();
  for (auto j : frame.coords)
    mc.mu.emplace_back(static_cast<long>(mode.m[j]));

  for (std::size_t k = 0; k <= r; ++k)
    mc.complex.dims.push_back(binomial(r, k));
  for (std::size_t k = 0; k < r; ++k) {
    Matrix d(mc.complex.dims[k + 1], mc.complex.dims[k]);
    const auto sources = enumerate_basis(r, k);
    for (std::size_t col = 0; col < sources.size(); ++col)
      for (std::size_t i = 0; i < r; ++i) {
        if (mc.mu[i].is_zero())
          continue;
        if (auto target = wedge_insert(i, sources[col]))
          d(rank_of(target->index, r), col) += target->sign > 0 ? mc.mu[i] : -mc.mu[i];
      }
    mc.complex.d.push_back(std::move(d));
  }
  return mc;
}

} // namespace

ModeComplex build_mode_complex(const Mode &mode, const TorusSpec &spec) {
  const TransverseFrame frame = transverse_frame(spec);
  if (!survives(mode, spec))
    throw ModeKilled("mode " + mode.to_string() + " violates the basic or invariance constraints");
  return mode_complex_in_frame(mode, frame);
}

KoszulCertificate koszul_certificate(const ModeComplex &mc) {
  if (mc.mode.is_zero())
    throw std::invalid_argument("koszul_certificate: the zero mode is not eligible");
  KoszulCertificate cert;
  cert.mode = mc.mode;
  const BettiReport b = betti_numbers(mc.complex);
  cert.ranks = b.ranks;
  cert.acyclic = true;
  for (std::size_t k = 0; k < b.betti.size(); ++k)
    if (b.betti[k] != 0) {
      cert.acyclic = false;
      cert.failing_degree = k;
      break;
    }
  return cert;
}

TorusBettiReport torus_betti(const TorusSpec &spec) {
  if (spec.truncation < 0)
    throw InvalidSpec("truncation must be non-negative");
  const TransverseFrame frame = transverse_frame(spec);
  TorusBettiReport report;
  report.transverse_coords = frame.coords;

  const Mode zero{std::vector<std::int64_t>(spec.n, 0)};
  const BettiReport base = betti(mode_complex_in_frame(zero, frame).complex);
  report.betti = base.betti;
  report.ranks = base.ranks;

  const std::size_t r = frame.coords.size();
  for (std::size_t k = 0; k <= r; ++k) {
    std::vector<exterior::MultiIndex> monomials;
    for (const auto &local : exterior::enumerate_basis(r, k)) {
      std::vector<std::size_t> global;
      for (auto i : local)
        global.push_back(frame.coords[i]);
      monomials.emplace_back(std::move(global));
    }
    report.mode_zero_generators.push_back(std::move(monomials));
  }

  // Odometer over [-N, N]^n in lexicographic order.
  const std::int64_t bound = spec.truncation;
  if (spec.n == 0 || bound == 0)
    return report;
  Mode mode{std::vector<std::int64_t>(spec.n, -bound)};
  while (true) {
    if (!mode.is_zero() && survives(mode, spec)) {
      report.acyclicity_certificates.push_back(koszul_certificate(mode_complex_in_frame(mode, frame)));
      ++report.audited_modes;
    }
    std::size_t pos = spec.n;
    while (pos > 0 && mode.m[pos - 1] == bound) {
      mode.m[pos - 1] = -bound;
      --pos;
    }
    if (pos == 0)
      break;
    ++mode.m[pos - 1];
  }
  return report;
}

Subspace rational_skeleton(const TorusSpec &spec) {
  const ExtMatrix a = direction_matrix(spec);
  const Matrix specialized = specialize(a, generic_specialization_point(a));
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < specialized.rows(); ++i)
    rows.push_back(specialized.row_vector(i));
  return Subspace(spec.n, rows);
}

CrossCheck cross_check_ce(const TorusSpec &spec) {
  CrossCheck out;
  out.torus_betti = torus_betti(spec).betti;
  const Subspace skeleton = rational_skeleton(spec);
  if (skeleton.dim() != spec.foliation_dirs.size())
    throw InvalidSpec("rational skeleton lost dimension");
  const QuotientAlgebra q = quotient(abelian(spec.n), skeleton);
  out.ce = ce_complex(q);
  out.ce_betti = betti(out.ce).betti;
  out.agree = out.ce_betti == out.torus_betti;
  return out;
}

std::vector<std::string> coordinate_names(std::size_t n) {
  std::vector<std::string> out;
  if (n <= 3) {
    const char *xyz[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < n; ++i)
      out.emplace_back(xyz[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      out.push_back("t" + std::to_string(i));
  }
  return out;
}

} // namespace quotcoh
