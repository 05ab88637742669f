#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oracle {

Poly from(const reticular::CornerPoly& p) {
  Poly out;
  for (const auto& [e, c] : p.terms()) out[e] = c;
  return out;
}

int degree(const Mono& m) {
  int d = 0;
  for (int v : m) d += v;
  return d;
}

Poly mul(const Poly& a, const Poly& b, int l) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Mono e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (l >= 0 && degree(e) > l) continue;
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Poly diff(const Poly& p, std::size_t v) {
  Poly out;
  for (const auto& [e, c] : p) {
    if (e[v] == 0) continue;
    Mono d = e;
    d[v] -= 1;
    out[d] += c * e[v];
  }
  return out;
}

std::size_t bareiss_rank(std::vector<std::vector<Q>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (const auto& q : m[i]) lcm = lcm * q.get_den() / gcd(lcm, q.get_den());
    for (std::size_t j = 0; j < cols; ++j) {
      Q s = m[i][j] * lcm;
      a[i][j] = s.get_num();
    }
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<Mono> monomials(std::size_t nvars, int lo, int hi) {
  std::vector<Mono> out;
  Mono cur(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v + 1 == nvars) {
      cur[v] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[v] = e;
      rec(v + 1, left - e);
    }
  };
  for (int d = lo; d <= hi; ++d) {
    if (nvars == 0) {
      if (d == 0) out.push_back(cur);
      continue;
    }
    rec(0, d);
  }
  return out;
}

namespace {

std::vector<std::vector<Q>> rows_of(std::size_t nvars, int l, const std::vector<Poly>& polys,
                                    const std::vector<Mono>& cols) {
  std::map<Mono, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
  std::vector<std::vector<Q>> rows;
  for (const auto& p : polys) {
    std::vector<Q> row(cols.size());
    bool any = false;
    for (const auto& [e, c] : p) {
      if (degree(e) > l) continue;
      row[index.at(e)] = c;
      any = true;
    }
    if (any) rows.push_back(std::move(row));
  }
  (void)nvars;
  return rows;
}

std::vector<Poly> times_monomials(const std::vector<Poly>& gens, std::size_t nvars, int lo, int l) {
  std::vector<Poly> out;
  for (const auto& m : monomials(nvars, lo, l)) {
    Poly mono{{m, Q(1)}};
    for (const auto& g : gens) out.push_back(mul(mono, g, l));
  }
  return out;
}

std::vector<Poly> generators(const reticular::CornerPoly& f, bool with_f) {
  const Poly p = from(f);
  const std::size_t r = static_cast<std::size_t>(f.r());
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < r; ++i) {
    Mono xi(f.nvars(), 0);
    xi[i] = 1;
    gens.push_back(mul(Poly{{xi, Q(1)}}, diff(p, i), -1));
  }
  for (std::size_t j = r; j < f.nvars(); ++j) gens.push_back(diff(p, j));
  if (with_f) gens.push_back(p);
  return gens;
}

}  // namespace

std::size_t quotient_dim(std::size_t nvars, int l, const std::vector<Poly>& e_gens, const std::vector<Poly>& extras) {
  const auto cols = monomials(nvars, 0, l);
  auto polys = times_monomials(e_gens, nvars, 0, l);
  for (const auto& e : extras) polys.push_back(e);
  const auto rows = rows_of(nvars, l, polys, cols);
  return cols.size() - bareiss_rank(rows);
}

std::size_t codim_at(const reticular::CornerPoly& f, char mode, int l) {
  const auto gens = generators(f, mode == 'K');
  const std::size_t q = quotient_dim(f.nvars(), l, gens, {});
  return mode == 'P' ? q - 1 : q;
}

int determinacy(const reticular::CornerPoly& f, char mode, int cap) {
  const std::size_t r = static_cast<std::size_t>(f.r());
  const Poly p = from(f);
  const std::size_t nv = f.nvars();
  for (int l = 1; l <= cap; ++l) {
    const int L = l + 1;
    std::vector<Poly> gx, gy;
    for (std::size_t i = 0; i < r; ++i) {
      Mono xi(nv, 0);
      xi[i] = 1;
      gx.push_back(mul(Poly{{xi, Q(1)}}, diff(p, i), -1));
    }
    if (mode == 'K') gx.push_back(p);
    for (std::size_t j = r; j < nv; ++j) gy.push_back(diff(p, j));
    auto polys = times_monomials(gx, nv, 1, L);
    for (auto& q : times_monomials(gy, nv, 2, L)) polys.push_back(std::move(q));
    const auto cols = monomials(nv, 0, L);
    auto rows = rows_of(nv, L, polys, cols);
    const std::size_t base = bareiss_rank(rows);
    // Every degree-(l+1) monomial must already be in the span.
    bool ok = true;
    for (const auto& m : monomials(nv, L, L)) {
      auto with = rows;
      std::vector<Q> unit(cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c] == m) unit[c] = 1;
      }
      with.push_back(unit);
      if (bareiss_rank(with) != base) {
        ok = false;
        break;
      }
    }
    if (ok) return l;
  }
  return -1;
}

double directed(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b) {
  double worst = 0;
  for (const auto& p : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : b) {
      double d = 0;
      for (std::size_t i = 0; i < p.size(); ++i) d += (p[i] - q[i]) * (p[i] - q[i]);
      best = std::min(best, d);
    }
    worst = std::max(worst, std::sqrt(best));
  }
  return worst;
}

double hausdorff(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b) {
  if (a.empty() || b.empty()) return (a.empty() && b.empty()) ? 0 : std::numeric_limits<double>::infinity();
  return std::max(directed(a, b), directed(b, a));
}

std::vector<std::vector<double>> sample_curve(const std::function<std::vector<double>(double)>& c, double t0,
                                              double t1, std::size_t n,
                                              const std::vector<std::pair<double, double>>& box) {
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i <= n; ++i) {
    const auto p = c(t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n));
    bool inside = true;
    for (std::size_t d = 0; d < p.size(); ++d) inside = inside && p[d] >= box[d].first && p[d] <= box[d].second;
    if (inside) out.push_back(p);
  }
  return out;
}

std::vector<reticular::CornerPoly> random_change(const reticular::VarLayout& L, int degree, std::mt19937& rng) {
  using reticular::CornerPoly;
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> pos(1, 3);
  const std::size_t nv = L.size();
  auto random_poly = [&](int lo, int hi) {
    CornerPoly p(L);
    for (const auto& m : monomials(nv, lo, hi)) {
      const int c = coef(rng);
      if (c != 0) p.add_term(m, reticular::Rational(c, 2));
    }
    return p;
  };
  std::vector<CornerPoly> images;
  // Corner variables keep their quadrant: x_i -> x_i * (c + higher terms), c > 0.
  for (int i = 1; i <= L.r(); ++i) {
    CornerPoly unit = CornerPoly::constant(L, pos(rng)) + random_poly(1, degree - 1);
    images.push_back(CornerPoly::variable(L, L.x(i)) * unit);
  }
  // Internal variables: invertible linear part (unit lower triangular times
  // a positive diagonal), plus x-linear and higher-order terms.
  const int k = L.k();
  for (int j = 1; j <= k; ++j) {
    CornerPoly img = CornerPoly::variable(L, L.y(j)) * reticular::Rational(pos(rng));
    for (int b = 1; b < j; ++b) img += CornerPoly::variable(L, L.y(b)) * reticular::Rational(coef(rng));
    for (int i = 1; i <= L.r(); ++i) img += CornerPoly::variable(L, L.x(i)) * reticular::Rational(coef(rng));
    img += random_poly(2, degree);
    images.push_back(img);
  }
  return images;
}

}  // namespace oracle
