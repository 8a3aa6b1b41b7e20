#include "adamslab/mountain_pass.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace adamslab {

namespace {

std::vector<double> apply_stencil(const std::vector<StencilRow>& rows,
                                  const std::vector<double>& u) {
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const StencilRow& s = rows[i];
    out[i] = s.coef[0] * u[s.col[0]] + s.coef[1] * u[s.col[1]] +
             s.coef[2] * u[s.col[2]];
  }
  return out;
}

// second derivative of the smoothed power (s^2 + eps)^{N/4}; constant 2 at N=4
double p_sec(double s, int N, double eps) {
  const double q = s * s + eps;
  return 0.5 * N * std::pow(q, N / 4.0 - 1.0) +
         0.5 * N * (N / 2.0 - 2.0) * s * s * std::pow(q, N / 4.0 - 2.0);
}

// smooth cap of the given width, zero in value and slope where it ends
std::vector<double> bump_direction(const EnergyModel& m, double width) {
  std::vector<double> d(m.size(), 0.0);
  for (std::size_t i = 0; i < m.free_count; ++i) {
    const double x = m.grid->r[i] / width;
    if (x < 1.0) d[i] = (1.0 - x * x) * (1.0 - x * x);
  }
  const double nd = nodal_norm(m, d).norm(m.N);
  for (auto& v : d) v /= nd;
  return d;
}

std::vector<double> scaled(const std::vector<double>& d, double t) {
  std::vector<double> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = t * d[i];
  return out;
}

// pentadiagonal SPD Cholesky for the quadratic-part stiffness, used as the
// descent preconditioner; stencils anchor three consecutive nodes so the
// bandwidth is exactly two and the factor has no fill
class PentaChol {
 public:
  void factor(std::vector<std::array<double, 3>> band) {
    n_ = band.size();
    L_ = std::move(band);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t d = 2; d >= 1; --d) {
        if (i < d) continue;
        const std::size_t j = i - d;
        double s = L_[i][d];
        for (std::size_t k = (i >= 2 ? i - 2 : 0); k < j; ++k)
          s -= L_[i][i - k] * L_[j][j - k];
        L_[i][d] = s / L_[j][0];
      }
      double s = L_[i][0];
      for (std::size_t k = (i >= 2 ? i - 2 : 0); k < i; ++k)
        s -= L_[i][i - k] * L_[i][i - k];
      if (!(s > 0.0))
        throw std::runtime_error("mountain pass: preconditioner not SPD");
      L_[i][0] = std::sqrt(s);
    }
  }

  std::vector<double> solve(const std::vector<double>& b) const {
    std::vector<double> y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      double s = b[i];
      if (i >= 1) s -= L_[i][1] * y[i - 1];
      if (i >= 2) s -= L_[i][2] * y[i - 2];
      y[i] = s / L_[i][0];
    }
    for (std::size_t ii = n_; ii > 0; --ii) {
      const std::size_t i = ii - 1;
      double s = y[i];
      if (i + 1 < n_) s -= L_[i + 1][1] * y[i + 1];
      if (i + 2 < n_) s -= L_[i + 2][2] * y[i + 2];
      y[i] = s / L_[i][0];
    }
    return y;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::array<double, 3>> L_;  // L[i][d] = L(i, i-d)
};

PentaChol build_preconditioner(const EnergyModel& m) {
  const std::size_t nf = m.free_count;
  std::vector<std::array<double, 3>> band(nf, {0.0, 0.0, 0.0});
  auto add = [&](int a, int b, double v) {
    if (a < b || a >= static_cast<int>(nf) || b < 0) return;
    if (a - b <= 2) band[a][a - b] += v;
  };
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (int j1 = 0; j1 < 3; ++j1)
      for (int j2 = 0; j2 < 3; ++j2) {
        add(m.lap[i].col[j1], m.lap[i].col[j2],
            m.c[i] * m.w_node[i] * m.lap[i].coef[j1] * m.lap[i].coef[j2]);
        add(m.grad[i].col[j1], m.grad[i].col[j2],
            m.c[i] * m.grad[i].coef[j1] * m.grad[i].coef[j2]);
      }
  }
  for (std::size_t k = 0; k < nf; ++k) band[k][0] += m.c[k];
  PentaChol chol;
  chol.factor(std::move(band));
  return chol;
}

double dot_free(const EnergyModel& m, const std::vector<double>& a,
                const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < m.free_count; ++k) s += a[k] * b[k];
  return s;
}

double l2_free(const EnergyModel& m, const std::vector<double>& a) {
  return std::sqrt(dot_free(m, a, a));
}

// redistribute the interior knots to equal arclength, chords measured in
// the energy norm so the spacing tracks the landscape scale
void reparametrize(const EnergyModel& m, std::vector<std::vector<double>>& P) {
  const std::size_t K = P.size() - 1;
  std::vector<double> s(K + 1, 0.0);
  std::vector<double> diff(P[0].size());
  for (std::size_t k = 1; k <= K; ++k) {
    for (std::size_t i = 0; i < diff.size(); ++i)
      diff[i] = P[k][i] - P[k - 1][i];
    s[k] = s[k - 1] + nodal_norm(m, diff).norm(m.N);
  }
  if (!(s[K] > 0.0) || !std::isfinite(s[K])) return;
  std::vector<std::vector<double>> Q(K + 1);
  Q[0] = P[0];
  Q[K] = P[K];
  std::size_t seg = 1;
  for (std::size_t j = 1; j < K; ++j) {
    const double target = s[K] * static_cast<double>(j) / K;
    while (seg < K && s[seg] < target) ++seg;
    const double den = s[seg] - s[seg - 1];
    const double t = den > 0.0 ? (target - s[seg - 1]) / den : 0.0;
    Q[j].resize(P[0].size());
    for (std::size_t i = 0; i < P[0].size(); ++i)
      Q[j][i] = (1.0 - t) * P[seg - 1][i] + t * P[seg][i];
  }
  P = std::move(Q);
}

Eigen::MatrixXd assemble_hessian(const EnergyModel& m,
                                 const NonlinearitySpec& nl,
                                 const std::vector<double>& u) {
  const int nf = static_cast<int>(m.free_count);
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(nf, nf);
  const std::vector<double> Lu = apply_stencil(m.lap, u);
  const std::vector<double> Gu = apply_stencil(m.grad, u);
  const double s = 2.0 / m.N;
  auto add = [&](int a, int b, double v) {
    if (a < nf && b < nf) H(a, b) += v;
  };
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double dw = s * m.c[i] * m.w_node[i] * p_sec(Lu[i], m.N, m.eps_reg);
    const double dg = s * m.c[i] * p_sec(Gu[i], m.N, m.eps_reg);
    for (int j1 = 0; j1 < 3; ++j1)
      for (int j2 = 0; j2 < 3; ++j2) {
        add(m.lap[i].col[j1], m.lap[i].col[j2],
            dw * m.lap[i].coef[j1] * m.lap[i].coef[j2]);
        add(m.grad[i].col[j1], m.grad[i].col[j2],
            dg * m.grad[i].coef[j1] * m.grad[i].coef[j2]);
      }
  }
  for (int k = 0; k < nf; ++k)
    H(k, k) += s * m.c[k] * p_sec(u[k], m.N, m.eps_reg) -
               m.c[k] * nl.fprime(u[k]);
  return H;
}

}  // namespace

GeometryCertificate find_geometry(const EnergyModel& m,
                                  const NonlinearitySpec& nl,
                                  std::size_t directions,
                                  std::uint64_t seed) {
  if (directions == 0)
    throw std::invalid_argument("find_geometry: need at least one direction");
  GeometryCertificate cert;
  cert.directions = directions;
  cert.seed = seed;

  // caps of halving widths probe concentration, where steep nonlinearities
  // pull the ring down first; random directions probe the diffuse bulk
  std::vector<std::vector<double>> dirs;
  dirs.push_back(bump_direction(m, m.grid->R));
  for (int j = 1; j <= 5 && dirs.size() < directions; ++j)
    dirs.push_back(bump_direction(m, m.grid->R / std::pow(2.0, j)));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (dirs.size() < directions) {
    std::vector<double> d(m.size(), 0.0);
    for (std::size_t i = 0; i < m.free_count; ++i) d[i] = gauss(rng);
    const double nd = nodal_norm(m, d).norm(m.N);
    if (!(nd > 0.0)) continue;
    for (auto& v : d) v /= nd;
    dirs.push_back(std::move(d));
  }

  // geometric rho grid; keep the certified radius two steps below the
  // argmax so the ring sits strictly inside the mountain, with margin for
  // pass points whose norm lands near the argmax radius itself
  const std::size_t nrho = 24;
  double best_ring = -HUGE_VAL;
  std::size_t best_idx = 0;
  std::vector<double> rhos(nrho), rings(nrho);
  for (std::size_t j = 0; j < nrho; ++j) {
    const double rho =
        1e-3 * std::pow(4.0 / 1e-3, static_cast<double>(j) / (nrho - 1));
    double ring = HUGE_VAL;
    for (const auto& d : dirs)
      ring = std::min(ring, energy(m, scaled(d, rho), nl).j);
    rhos[j] = rho;
    rings[j] = ring;
    if (ring > best_ring) {
      best_ring = ring;
      best_idx = j;
    }
  }
  best_idx = best_idx >= 2 ? best_idx - 2 : 0;
  cert.rho = rhos[best_idx];
  cert.ring_min = rings[best_idx];

  double t = std::max(2.0 * cert.rho, 1.0);
  double j_end = energy(m, scaled(dirs[0], t), nl).j;
  int doublings = 0;
  while (j_end >= 0.0 && doublings < 60) {
    t *= 2.0;
    j_end = energy(m, scaled(dirs[0], t), nl).j;
    ++doublings;
  }
  if (j_end < 0.0 && !std::isfinite(j_end)) {
    // critical specs can overflow F between one doubling and the next;
    // back off to a finite negative energy so the path stays evaluable
    double lo = t / 2.0, hi = t;
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (lo + hi);
      const double jm = energy(m, scaled(dirs[0], mid), nl).j;
      if (jm >= 0.0) {
        lo = mid;
      } else if (std::isfinite(jm)) {
        t = mid;
        j_end = jm;
        break;
      } else {
        hi = mid;
      }
    }
  }
  cert.t_neg = t;
  cert.j_at_tneg = j_end;
  cert.valid = cert.ring_min > 0.0 && j_end < 0.0;
  return cert;
}

SolveResult mountain_pass_solve(const EnergyModel& m,
                                const NonlinearitySpec& nl,
                                const SobolevConstants& c,
                                AlphaConvention conv,
                                const SolveOptions& opt) {
  if (opt.knots < 4)
    throw std::invalid_argument("mountain_pass_solve: need at least 4 knots");
  SolveResult out;
  out.ps_bound =
      nl.kind == NonlinearityKind::CriticalExp
          ? (2.0 / c.N) *
                std::pow(c.alpha(conv) / nl.alpha0, c.N / (2.0 * nl.gamma))
          : HUGE_VAL;
  out.geometry = find_geometry(m, nl, opt.geometry_directions, opt.seed);
  out.u.assign(m.size(), 0.0);
  if (!out.geometry.valid) {
    out.residual = HUGE_VAL;
    return out;
  }

  const std::vector<double> d0 = bump_direction(m, m.grid->R);
  std::vector<std::vector<double>> P(opt.knots + 1);
  for (std::size_t k = 0; k <= opt.knots; ++k)
    P[k] = scaled(d0, out.geometry.t_neg * static_cast<double>(k) / opt.knots);

  const PentaChol chol = build_preconditioner(m);

  // min-max phase: each round locates the highest-energy knot (lowest index
  // on ties), descends that single point with preconditioned backtracking
  // line searches while it stays the maximizer, then redistributes the
  // knots to equal arclength; moving only the maximizer keeps the path
  // pinned across the ridge while its peak slides down to the pass point
  auto path_scan = [&](std::size_t& km) {
    double level = -HUGE_VAL;
    km = 1;
    for (std::size_t k = 1; k < opt.knots; ++k) {
      const double j = energy(m, P[k], nl).j;
      if (j > level) {
        level = j;
        km = k;
      }
    }
    return level;
  };
  std::size_t kmax = 0;
  double prev_level = HUGE_VAL;
  int stall = 0;
  std::vector<double> best = P[1];
  for (std::size_t iter = 1; iter <= opt.max_outer; ++iter) {
    double level = path_scan(kmax);
    const double res = weak_residual(m, P[kmax], nl).max_rel;
    out.outer_iters = iter;
    if (res < std::max(opt.tol, 1e-2)) {
      out.history.push_back({iter, level, res, 0.0, kmax});
      best = P[kmax];
      break;
    }

    double step_taken = 0.0;
    for (int sub = 0; sub < 8; ++sub) {
      const std::vector<double> g = energy_gradient(m, P[kmax], nl);
      std::vector<double> gf(g.begin(), g.begin() + m.free_count);
      const std::vector<double> pf = chol.solve(gf);
      std::vector<double> p(m.size(), 0.0);
      std::copy(pf.begin(), pf.end(), p.begin());
      const double gtp = dot_free(m, g, p);
      if (!(gtp > 0.0) || !std::isfinite(gtp)) break;
      const double j0 = energy(m, P[kmax], nl).j;
      if (!std::isfinite(j0)) break;
      bool moved = false;
      for (double s = 1.0; s > 1e-14; s *= 0.5) {
        std::vector<double> cand(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
          cand[i] = P[kmax][i] - s * p[i];
        const double jc = energy(m, cand, nl).j;
        if (std::isfinite(jc) && jc <= j0 - 1e-4 * s * gtp) {
          P[kmax] = std::move(cand);
          step_taken = s;
          moved = true;
          break;
        }
      }
      if (!moved) break;
      std::size_t km2 = 0;
      if (path_scan(km2) > energy(m, P[kmax], nl).j || km2 != kmax) break;
    }

    std::size_t km_after = 0;
    const double level_after = path_scan(km_after);
    best = P[km_after];
    out.history.push_back({iter, level_after, res, step_taken, kmax});
    if (step_taken == 0.0 ||
        std::abs(prev_level - level_after) <=
            1e-11 * (1.0 + std::abs(level_after))) {
      if (++stall >= 8) break;
    } else {
      stall = 0;
    }
    prev_level = level_after;
    reparametrize(m, P);
  }

  // Newton polish of the best pass-point candidate; the saddle is a regular
  // zero of the gradient, so damped Newton reaches round-off fast
  std::vector<double> u = best;
  const int nf = static_cast<int>(m.free_count);
  for (std::size_t it = 1; it <= opt.max_newton; ++it) {
    const std::vector<double> g = energy_gradient(m, u, nl);
    const double res = weak_residual(m, u, nl).max_rel;
    if (res < opt.tol) {
      out.converged = true;
      break;
    }
    const Eigen::MatrixXd H = assemble_hessian(m, nl, u);
    Eigen::VectorXd gv(nf);
    for (int k = 0; k < nf; ++k) gv(k) = g[k];
    const Eigen::VectorXd dv = Eigen::PartialPivLU<Eigen::MatrixXd>(H).solve(gv);
    if (!dv.allFinite()) break;
    const double g0 = l2_free(m, g);
    bool accepted = false;
    for (double s = 1.0; s > 1e-12; s *= 0.5) {
      std::vector<double> cand = u;
      for (int k = 0; k < nf; ++k) cand[k] -= s * dv(k);
      const std::vector<double> gc = energy_gradient(m, cand, nl);
      if (l2_free(m, gc) <= (1.0 - 1e-4 * s) * g0) {
        u = std::move(cand);
        out.newton_iters = it;
        out.history.push_back({out.outer_iters + it, energy(m, u, nl).j,
                               weak_residual(m, u, nl).max_rel, s, kmax});
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }

  // a polished iterate that falls inside the ring has collapsed onto the
  // trivial zero, not a pass point; keep the path iterate instead
  if (weak_residual(m, u, nl).max_rel < opt.tol &&
      nodal_norm(m, u).norm(m.N) < out.geometry.rho)
    u = best;

  out.u = u;
  out.level = energy(m, u, nl).j;
  out.residual = weak_residual(m, u, nl).max_rel;
  out.norm = nodal_norm(m, u).norm(m.N);
  out.converged = out.residual < opt.tol;
  out.below_bound = out.level < out.ps_bound;
  return out;
}

}  // namespace adamslab
