#include "reticular/numeric_system.hpp"

#include <algorithm>
#include <cmath>

namespace reticular {

std::vector<double> PointBatch::point(std::size_t i) const {
  std::vector<double> p(ncoords);
  for (std::size_t c = 0; c < ncoords; ++c) p[c] = at(c, i);
  return p;
}

void PointBatch::set_point(std::size_t i, const std::vector<double>& p) {
  for (std::size_t c = 0; c < ncoords; ++c) at(c, i) = p[c];
}

PointBatch PointBatch::from_points(std::size_t nc, const std::vector<std::vector<double>>& pts) {
  PointBatch b(nc, pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) b.set_point(i, pts[i]);
  return b;
}

bool solve_dense(std::vector<double> A, std::vector<double>& b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(A[i * n + k]) > std::fabs(A[piv * n + k])) piv = i;
    }
    if (!(std::fabs(A[piv * n + k]) > 1e-300)) return false;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A[k * n + j], A[piv * n + j]);
      std::swap(b[k], b[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = A[i * n + k] / A[k * n + k];
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) A[i * n + j] -= f * A[k * n + j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= A[k * n + j] * b[j];
    b[k] = s / A[k * n + k];
  }
  return std::all_of(b.begin(), b.end(), [](double v) { return std::isfinite(v); });
}

double det_dense(std::vector<double> A, std::size_t n) {
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(A[i * n + k]) > std::fabs(A[piv * n + k])) piv = i;
    }
    if (A[piv * n + k] == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A[k * n + j], A[piv * n + j]);
      det = -det;
    }
    det *= A[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = A[i * n + k] / A[k * n + k];
      for (std::size_t j = k; j < n; ++j) A[i * n + j] -= f * A[k * n + j];
    }
  }
  return det;
}

bool newton_step(const std::vector<double>& J, const std::vector<double>& F, std::size_t m, std::size_t n,
                 std::vector<double>& step) {
  step.assign(n, 0.0);
  if (n == 0) return m == 0;
  if (m == n) {
    step = F;
    return solve_dense(J, step, n);
  }
  if (m < n) {
    // step = J^T (J J^T)^{-1} F
    std::vector<double> G(m * m, 0.0);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        double s = 0;
        for (std::size_t k = 0; k < n; ++k) s += J[a * n + k] * J[b * n + k];
        G[a * m + b] = s;
      }
    }
    std::vector<double> w = F;
    if (!solve_dense(G, w, m)) return false;
    for (std::size_t k = 0; k < n; ++k) {
      double s = 0;
      for (std::size_t a = 0; a < m; ++a) s += J[a * n + k] * w[a];
      step[k] = s;
    }
    return true;
  }
  std::vector<double> G(n * n, 0.0), rhs(n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      double s = 0;
      for (std::size_t k = 0; k < m; ++k) s += J[k * n + a] * J[k * n + b];
      G[a * n + b] = s;
    }
    for (std::size_t k = 0; k < m; ++k) rhs[a] += J[k * n + a] * F[k];
  }
  step = rhs;
  return solve_dense(G, step, n);
}

NumericSystem::NumericSystem(const std::vector<CornerPoly>& eqs, std::vector<std::size_t> unknowns,
                             kernels::Backend backend)
    : unknowns_(std::move(unknowns)), backend_(kernels::resolve(backend)) {
  if (eqs.empty()) throw ShapeError("numeric system without equations");
  ncoords_ = eqs.front().nvars();
  for (const auto& e : eqs) {
    require_same_layout(e, eqs.front(), "numeric system");
    eqs_.push_back(kernels::compile(e));
    for (std::size_t u : unknowns_) jac_.push_back(kernels::compile(derivative(e, u)));
  }
}

void NumericSystem::residuals(const PointBatch& b, std::vector<double>& out) const {
  out.assign(eqs_.size() * b.count, 0.0);
  for (std::size_t e = 0; e < eqs_.size(); ++e) {
    kernels::eval_batch(eqs_[e], b.data.data(), b.count, out.data() + e * b.count, backend_);
  }
}

void NumericSystem::jacobian(const PointBatch& b, std::vector<double>& out) const {
  out.assign(jac_.size() * b.count, 0.0);
  for (std::size_t j = 0; j < jac_.size(); ++j) {
    kernels::eval_batch(jac_[j], b.data.data(), b.count, out.data() + j * b.count, backend_);
  }
}

namespace {

PointBatch gather(const PointBatch& b, const std::vector<std::size_t>& idx) {
  PointBatch out(b.ncoords, idx.size());
  for (std::size_t c = 0; c < b.ncoords; ++c) {
    for (std::size_t i = 0; i < idx.size(); ++i) out.at(c, i) = b.at(c, idx[i]);
  }
  return out;
}

double inf_norm(const std::vector<double>& r, std::size_t neq, std::size_t count, std::size_t i) {
  double m = 0;
  for (std::size_t e = 0; e < neq; ++e) {
    const double v = std::fabs(r[e * count + i]);
    if (!(v <= m)) m = v;  // NaN propagates as the max
  }
  return m;
}

}  // namespace

std::vector<char> NumericSystem::newton(PointBatch& b, const NewtonOptions& opt) const {
  const std::size_t m = neq(), n = nunk();
  std::vector<char> done(b.count, 0), ok(b.count, 0);
  std::vector<double> res, jac, J(m * n), F(m), step;

  for (int iter = 0; iter < opt.max_iter; ++iter) {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < b.count; ++i) {
      if (!done[i]) active.push_back(i);
    }
    if (active.empty()) break;
    PointBatch A = gather(b, active);
    residuals(A, res);
    jacobian(A, jac);

    std::vector<std::size_t> moving;
    std::vector<std::vector<double>> steps;
    std::vector<double> norm0;
    for (std::size_t a = 0; a < active.size(); ++a) {
      const double nr = inf_norm(res, m, A.count, a);
      if (!std::isfinite(nr)) {
        done[active[a]] = 1;
        continue;
      }
      if (nr < opt.tol_stop) {
        done[active[a]] = 1;
        ok[active[a]] = 1;
        continue;
      }
      for (std::size_t e = 0; e < m; ++e) {
        F[e] = res[e * A.count + a];
        for (std::size_t u = 0; u < n; ++u) J[e * n + u] = jac[(e * n + u) * A.count + a];
      }
      if (!newton_step(J, F, m, n, step)) {
        done[active[a]] = 1;
        ok[active[a]] = nr < opt.tol_accept;
        continue;
      }
      moving.push_back(a);
      steps.push_back(step);
      norm0.push_back(nr);
    }
    if (moving.empty()) continue;

    // Backtracking: shrink by `damping` while the residual grows.
    std::vector<double> lambda(moving.size(), 1.0);
    std::vector<char> accepted(moving.size(), 0);
    for (int bt = 0; bt <= 12; ++bt) {
      std::vector<std::size_t> pend;
      for (std::size_t j = 0; j < moving.size(); ++j) {
        if (!accepted[j]) pend.push_back(j);
      }
      if (pend.empty()) break;
      PointBatch T(b.ncoords, pend.size());
      for (std::size_t t = 0; t < pend.size(); ++t) {
        const std::size_t j = pend[t];
        const std::size_t src = active[moving[j]];
        for (std::size_t c = 0; c < b.ncoords; ++c) T.at(c, t) = b.at(c, src);
        for (std::size_t u = 0; u < n; ++u) T.at(unknowns_[u], t) -= lambda[j] * steps[j][u];
      }
      std::vector<double> tres;
      residuals(T, tres);
      for (std::size_t t = 0; t < pend.size(); ++t) {
        const std::size_t j = pend[t];
        const double nt = inf_norm(tres, m, T.count, t);
        const bool decreased = std::isfinite(nt) && nt <= norm0[j];
        if (!decreased && bt == 12) {
          // Stalled at a local minimum of the residual: give up on this seed.
          accepted[j] = 1;
          done[active[moving[j]]] = 1;
        } else if (decreased) {
          accepted[j] = 1;
          const std::size_t src = active[moving[j]];
          double smax = 0, xmax = 0;
          for (std::size_t u = 0; u < n; ++u) {
            b.at(unknowns_[u], src) = T.at(unknowns_[u], t);
            smax = std::max(smax, std::fabs(lambda[j] * steps[j][u]));
            xmax = std::max(xmax, std::fabs(T.at(unknowns_[u], t)));
          }
          if (!(xmax < opt.blowup)) {
            done[src] = 1;
          } else if (smax <= 1e-15 * (1 + xmax) && nt < opt.tol_accept) {
            done[src] = 1;
            ok[src] = 1;
          }
        } else {
          lambda[j] *= opt.damping;
        }
      }
    }
  }
  // Final verdict from a fresh residual evaluation.
  residuals(b, res);
  for (std::size_t i = 0; i < b.count; ++i) {
    const double nr = inf_norm(res, m, b.count, i);
    bool finite = std::isfinite(nr);
    for (std::size_t u = 0; u < n && finite; ++u) finite = std::fabs(b.at(unknowns_[u], i)) < opt.blowup;
    ok[i] = finite && nr < opt.tol_accept;
  }
  return ok;
}

std::vector<std::vector<double>> NumericSystem::tangents(const PointBatch& b) const {
  const std::size_t m = neq(), n = nunk();
  std::vector<std::vector<double>> out(b.count);
  if (m + 1 != n) throw ShapeError("tangents need one more unknown than equations");
  std::vector<double> jac;
  jacobian(b, jac);
  for (std::size_t i = 0; i < b.count; ++i) {
    // Cofactor vector: t_u = (-1)^u det(J without column u).
    std::vector<double> t(n);
    double norm = 0;
    for (std::size_t u = 0; u < n; ++u) {
      std::vector<double> M(m * m);
      for (std::size_t e = 0; e < m; ++e) {
        std::size_t cc = 0;
        for (std::size_t v = 0; v < n; ++v) {
          if (v == u) continue;
          M[e * m + cc++] = jac[(e * n + v) * b.count + i];
        }
      }
      t[u] = (u % 2 == 0 ? 1.0 : -1.0) * (m == 0 ? 1.0 : det_dense(M, m));
      norm += t[u] * t[u];
    }
    norm = std::sqrt(norm);
    if (!(norm > 1e-300) || !std::isfinite(norm)) continue;
    for (double& v : t) v /= norm;
    out[i] = std::move(t);
  }
  return out;
}

}  // namespace reticular
