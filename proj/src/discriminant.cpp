#include "reticular/discriminant.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <thread>
#include <unordered_map>

#include "reticular/geometry.hpp"
#include "reticular/numeric_system.hpp"

namespace reticular {

std::size_t DiscriminantMesh::count(const std::string& stratum) const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [&](const MeshPoint& p) { return p.stratum == stratum; }));
}

std::string subset_label(unsigned mask, int r) {
  std::string s;
  for (int i = 0; i < r; ++i) {
    if (mask & (1u << i)) s += std::to_string(i + 1);
  }
  return s.empty() ? "empty" : s;
}

namespace {

using Point = std::vector<double>;

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t, std::size_t)>& fn) {
  std::size_t t = threads > 0 ? static_cast<std::size_t>(threads) : std::thread::hardware_concurrency();
  t = std::max<std::size_t>(1, std::min(t, count));
  if (t <= 1) {
    if (count > 0) fn(0, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + t - 1) / t;
  for (std::size_t w = 0; w < t; ++w) {
    const std::size_t b = w * chunk, e = std::min(count, b + chunk);
    if (b >= e) break;
    pool.emplace_back(fn, b, e);
  }
  for (auto& th : pool) th.join();
}

struct Grid {
  int n = 0;
  int res = 1;
  Region region;

  std::size_t nodes() const {
    std::size_t c = 1;
    for (int a = 0; a < n; ++a) c *= static_cast<std::size_t>(res + 1);
    return c;
  }
  std::vector<int> index(std::size_t id) const {
    std::vector<int> ix(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      ix[static_cast<std::size_t>(a)] = static_cast<int>(id % static_cast<std::size_t>(res + 1));
      id /= static_cast<std::size_t>(res + 1);
    }
    return ix;
  }
  std::size_t stride(int a) const {
    std::size_t s = 1;
    for (int b = 0; b < a; ++b) s *= static_cast<std::size_t>(res + 1);
    return s;
  }
  double coord(int a, int i) const {
    const auto& [lo, hi] = region[static_cast<std::size_t>(a)];
    return i == res ? hi : lo + (hi - lo) * i / res;
  }
  double h(int a) const {
    const auto& [lo, hi] = region[static_cast<std::size_t>(a)];
    return (hi - lo) / res;
  }
};

std::vector<Point> seed_grid(std::size_t dims, int per_axis, const std::vector<std::pair<double, double>>& box) {
  std::vector<Point> out{Point()};
  for (std::size_t d = 0; d < dims; ++d) {
    std::vector<Point> next;
    for (const auto& p : out) {
      for (int j = 0; j < per_axis; ++j) {
        const auto& [lo, hi] = box[d];
        const double v = per_axis == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * j / (per_axis - 1);
        Point q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

CornerPoly det_poly(const PolyMatrix& M, const VarLayout& L) {
  const std::size_t n = M.size();
  if (n == 0) return CornerPoly::constant(L, 1);
  if (n == 1) return M[0][0];
  CornerPoly acc(L);
  for (std::size_t j = 0; j < n; ++j) {
    if (M[0][j].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<CornerPoly> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(M[i][c]);
      }
      minor.push_back(std::move(row));
    }
    CornerPoly term = M[0][j] * det_poly(minor, L);
    if (j % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

// Equations that define one solution sheet plus the coordinates Newton may move.
struct Sheet {
  unsigned mask = 0;
  std::vector<std::size_t> free;  // free corner and internal coordinates
  std::vector<std::size_t> free_x;
  std::vector<CornerPoly> eqs;
};

class Extractor {
 public:
  Extractor(const GeneratingFamily& F, const Region& region, int res, const NumericConfig& cfg)
      : G_(F.F()), L_(G_.layout()), cfg_(cfg) {
    grid_.n = F.n();
    grid_.res = res;
    grid_.region = region;
    const auto z = F.z();
    for (std::size_t i = 0; i < L_.params().size(); ++i) {
      if (!z || L_.param(i) != *z) qids_.push_back(L_.param(i));
    }
    opt_.max_iter = cfg.newton_max_iter;
    opt_.damping = cfg.damping;
    backend_ = cfg.simd;
  }

  Sheet sheet(unsigned mask, bool with_value) const {
    Sheet s;
    s.mask = mask;
    for (int i = 1; i <= L_.r(); ++i) {
      if (!(mask & (1u << (i - 1)))) {
        s.free.push_back(L_.x(i));
        s.free_x.push_back(L_.x(i));
      }
    }
    for (int j = 1; j <= L_.k(); ++j) s.free.push_back(L_.y(j));
    const CornerPoly restricted = restrict_corner(G_, mask);
    for (std::size_t v : s.free) s.eqs.push_back(derivative(restricted, v));
    if (with_value) s.eqs.push_back(restricted);
    return s;
  }

  CornerPoly restrict_corner(const CornerPoly& p, unsigned mask) const {
    std::map<std::size_t, CornerPoly> zero;
    for (int i = 1; i <= L_.r(); ++i) {
      if (mask & (1u << (i - 1))) zero.emplace(L_.x(i), CornerPoly(L_));
    }
    return zero.empty() ? p : substitute(p, zero, -1);
  }

  Point node_point(std::size_t node) const {
    Point p(L_.size(), 0.0);
    const auto ix = grid_.index(node);
    for (int a = 0; a < grid_.n; ++a) p[qids_[static_cast<std::size_t>(a)]] = grid_.coord(a, ix[static_cast<std::size_t>(a)]);
    return p;
  }

  // Solutions of a square system at every grid node.
  std::vector<std::vector<Point>> solve_nodes(const std::vector<CornerPoly>& eqs, const std::vector<std::size_t>& unknowns,
                                              const std::vector<Point>& seeds) {
    const std::size_t N = grid_.nodes();
    std::vector<std::vector<Point>> out(N);
    if (unknowns.empty()) {
      for (std::size_t i = 0; i < N; ++i) out[i].push_back(node_point(i));
      return out;
    }
    const NumericSystem sys(eqs, unknowns, backend_);
    std::vector<std::size_t> dropped(N, 0);
    parallel_for(N, cfg_.threads, [&](std::size_t b, std::size_t e) {
      const std::size_t chunk = std::max<std::size_t>(1, 2048 / std::max<std::size_t>(1, seeds.size()));
      for (std::size_t c0 = b; c0 < e; c0 += chunk) {
        const std::size_t c1 = std::min(e, c0 + chunk);
        PointBatch batch(L_.size(), (c1 - c0) * seeds.size());
        std::size_t k = 0;
        for (std::size_t node = c0; node < c1; ++node) {
          const Point base = node_point(node);
          for (const auto& s : seeds) {
            batch.set_point(k, base);
            for (std::size_t u = 0; u < unknowns.size(); ++u) batch.at(unknowns[u], k) = s[u];
            ++k;
          }
        }
        const auto ok = sys.newton(batch, opt_);
        k = 0;
        for (std::size_t node = c0; node < c1; ++node) {
          for (std::size_t s = 0; s < seeds.size(); ++s, ++k) {
            if (!ok[k]) {
              ++dropped[node];
              continue;
            }
            add_unique(out[node], batch.point(k), unknowns);
          }
        }
      }
    });
    for (std::size_t d : dropped) dropped_ += d;
    for (auto& pts : out) std::sort(pts.begin(), pts.end());
    return out;
  }

  void add_unique(std::vector<Point>& pts, Point p, const std::vector<std::size_t>& coords) const {
    for (const auto& q : pts) {
      double d = 0;
      for (std::size_t c : coords) d = std::max(d, std::fabs(q[c] - p[c]));
      if (d < cfg_.dedupe_tol) return;
    }
    pts.push_back(std::move(p));
  }

  // Bracket sign changes of `indicator` across grid edges, then solve the
  // square system eqs + indicator with the edge's q coordinate unknown.
  std::vector<Point> edge_crossings(const std::vector<std::vector<Point>>& crit, const std::vector<CornerPoly>& eqs,
                                    const CornerPoly& indicator, const std::vector<std::size_t>& free) {
    const kernels::CompiledPoly ind = kernels::compile(indicator);
    auto sign_of = [&](const Point& p) {
      double v = 0;
      kernels::eval_batch(ind, p.data(), 1, &v, kernels::Backend::Scalar);
      return std::fabs(v) <= 1e-12 ? 0 : (v > 0 ? 1 : -1);
    };
    const std::size_t N = grid_.nodes();
    std::vector<std::array<int, 3>> counts(N, {0, 0, 0});
    std::vector<std::vector<int>> signs(N);
    for (std::size_t i = 0; i < N; ++i) {
      for (const auto& p : crit[i]) {
        const int s = sign_of(p);
        signs[i].push_back(s);
        counts[i][static_cast<std::size_t>(s + 1)] += 1;
      }
    }
    std::vector<CornerPoly> aug = eqs;
    aug.push_back(indicator);
    std::vector<Point> found;
    for (int a = 0; a < grid_.n; ++a) {
      std::vector<std::size_t> unknowns = free;
      const std::size_t qa = qids_[static_cast<std::size_t>(a)];
      unknowns.push_back(qa);
      const NumericSystem sys(aug, unknowns, backend_);
      const std::size_t stride = grid_.stride(a);
      std::vector<Point> seeds;
      std::vector<std::pair<double, double>> range;
      for (std::size_t i = 0; i < N; ++i) {
        const auto ix = grid_.index(i);
        if (ix[static_cast<std::size_t>(a)] >= grid_.res) continue;
        const std::size_t j = i + stride;
        if (counts[i] == counts[j]) continue;
        const double lo = grid_.coord(a, ix[static_cast<std::size_t>(a)]);
        const double hi = grid_.coord(a, ix[static_cast<std::size_t>(a)] + 1);
        const double mid = 0.5 * (lo + hi);
        for (std::size_t node : {i, j}) {
          for (std::size_t u = 0; u < crit[node].size(); ++u) {
            seeds.push_back(crit[node][u]);
            range.emplace_back(lo, hi);
            for (std::size_t v = u + 1; v < crit[node].size(); ++v) {
              if (signs[node][u] * signs[node][v] >= 0) continue;
              Point m(crit[node][u].size());
              for (std::size_t c = 0; c < m.size(); ++c) m[c] = 0.5 * (crit[node][u][c] + crit[node][v][c]);
              m[qa] = mid;
              seeds.push_back(std::move(m));
              range.emplace_back(lo, hi);
            }
          }
        }
      }
      if (seeds.empty()) continue;
      std::vector<std::vector<Point>> per(seeds.size());
      parallel_for(seeds.size(), cfg_.threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t c0 = b; c0 < e; c0 += 2048) {
          const std::size_t c1 = std::min(e, c0 + 2048);
          std::vector<Point> part(seeds.begin() + static_cast<std::ptrdiff_t>(c0),
                                  seeds.begin() + static_cast<std::ptrdiff_t>(c1));
          PointBatch batch = PointBatch::from_points(L_.size(), part);
          const auto ok = sys.newton(batch, opt_);
          for (std::size_t k = 0; k < part.size(); ++k) {
            const std::size_t s = c0 + k;
            if (!ok[k]) continue;
            Point p = batch.point(k);
            const double slack = 1e-12 + 1e-9 * (range[s].second - range[s].first);
            if (p[qa] < range[s].first - slack || p[qa] > range[s].second + slack) continue;
            per[s].push_back(std::move(p));
          }
        }
      });
      for (auto& v : per) {
        for (auto& p : v) found.push_back(std::move(p));
      }
    }
    return found;
  }

  // Pseudo-arclength walk along a one-dimensional solution set from each start.
  std::vector<Point> densify(const std::vector<Point>& starts, const std::vector<CornerPoly>& eqs,
                             const std::vector<std::size_t>& unknowns, const std::vector<std::size_t>& out_coords,
                             const Region& box) {
    std::vector<Point> out = starts;
    if (starts.empty()) return out;
    const NumericSystem sys(eqs, unknowns, backend_);
    const double ds = cfg_.densify_spacing;
    double hmax = 0;
    for (int a = 0; a < grid_.n; ++a) hmax = std::max(hmax, grid_.h(a));
    const double reach = 1.5 * hmax;
    const int max_steps = static_cast<int>(std::ceil(4 * reach / ds)) + 8;
    NewtonOptions corr = opt_;
    corr.max_iter = 12;
    auto inside = [&](const Point& p) {
      for (std::size_t c = 0; c < out_coords.size(); ++c) {
        const double slack = 1e-9 * (box[c].second - box[c].first);
        if (p[out_coords[c]] < box[c].first - slack || p[out_coords[c]] > box[c].second + slack) return false;
      }
      return true;
    };
    for (int dir : {1, -1}) {
      std::vector<Point> cur = starts;
      std::vector<Point> prev_t(starts.size());
      std::vector<char> alive(starts.size(), 1);
      for (int step = 0; step < max_steps; ++step) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < cur.size(); ++i) {
          if (alive[i]) idx.push_back(i);
        }
        if (idx.empty()) break;
        std::vector<Point> active;
        for (std::size_t i : idx) active.push_back(cur[i]);
        const PointBatch at = PointBatch::from_points(L_.size(), active);
        const auto tans = sys.tangents(at);
        std::vector<Point> pred;
        std::vector<std::size_t> pred_idx;
        for (std::size_t a = 0; a < idx.size(); ++a) {
          const std::size_t i = idx[a];
          Point t = tans[a];
          if (t.empty()) {
            alive[i] = 0;
            continue;
          }
          double dot = 0;
          if (prev_t[i].empty()) {
            dot = dir;
          } else {
            for (std::size_t u = 0; u < t.size(); ++u) dot += t[u] * prev_t[i][u];
          }
          if (dot < 0) {
            for (double& v : t) v = -v;
          }
          prev_t[i] = t;
          Point p = cur[i];
          for (std::size_t u = 0; u < unknowns.size(); ++u) p[unknowns[u]] += ds * t[u];
          pred.push_back(std::move(p));
          pred_idx.push_back(i);
        }
        if (pred.empty()) break;
        PointBatch batch = PointBatch::from_points(L_.size(), pred);
        const auto ok = sys.newton(batch, corr);
        for (std::size_t a = 0; a < pred_idx.size(); ++a) {
          const std::size_t i = pred_idx[a];
          Point p = batch.point(a);
          double moved = 0, from_start = 0;
          for (std::size_t u : unknowns) moved = std::max(moved, std::fabs(p[u] - cur[i][u]));
          for (std::size_t c : out_coords) from_start = std::max(from_start, std::fabs(p[c] - starts[i][c]));
          if (!ok[a] || moved < 0.1 * ds || moved > 4 * ds || !inside(p) || from_start > reach) {
            alive[i] = 0;
            continue;
          }
          cur[i] = p;
          out.push_back(std::move(p));
        }
      }
    }
    return out;
  }

  const Grid& grid() const { return grid_; }
  const VarLayout& layout() const { return L_; }
  const CornerPoly& family() const { return G_; }
  const std::vector<std::size_t>& qids() const { return qids_; }
  std::size_t dropped() const { return dropped_; }
  const NumericConfig& cfg() const { return cfg_; }

 private:
  const CornerPoly& G_;
  const VarLayout& L_;
  NumericConfig cfg_;
  Grid grid_;
  std::vector<std::size_t> qids_;
  NewtonOptions opt_;
  kernels::Backend backend_;
  std::size_t dropped_ = 0;
};

bool corner_ok(const Point& p, const std::vector<std::size_t>& free_x) {
  return std::all_of(free_x.begin(), free_x.end(), [&](std::size_t c) { return p[c] >= -1e-9; });
}

double max_residual(const std::vector<CornerPoly>& eqs, const Point& p) {
  double m = 0;
  for (const auto& e : eqs) m = std::max(m, std::fabs(e.evaluate_double(p)));
  return m;
}

// Sort, then thin points of one stratum closer than `tol` in output space.
std::vector<Point> thin(std::vector<Point> pts, const std::vector<std::size_t>& coords, double tol) {
  std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
    for (std::size_t c : coords) {
      if (a[c] != b[c]) return a[c] < b[c];
    }
    return a < b;
  });
  struct KeyHash {
    std::size_t operator()(const std::vector<long long>& k) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (long long v : k) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
      return h;
    }
  };
  std::unordered_map<std::vector<long long>, std::vector<std::size_t>, KeyHash> cells;
  std::vector<Point> kept;
  const std::size_t d = coords.size();
  for (auto& p : pts) {
    std::vector<long long> key(d);
    for (std::size_t c = 0; c < d; ++c) key[c] = static_cast<long long>(std::floor(p[coords[c]] / tol));
    bool near = false;
    // Scan the 3^d neighbouring cells.
    std::vector<long long> off(d, -1);
    for (;;) {
      std::vector<long long> k2(d);
      for (std::size_t c = 0; c < d; ++c) k2[c] = key[c] + off[c];
      auto it = cells.find(k2);
      if (it != cells.end()) {
        for (std::size_t idx : it->second) {
          double dist = 0;
          for (std::size_t c = 0; c < d; ++c) dist = std::max(dist, std::fabs(kept[idx][coords[c]] - p[coords[c]]));
          if (dist < tol) {
            near = true;
            break;
          }
        }
      }
      if (near) break;
      std::size_t c = 0;
      while (c < d && off[c] == 1) off[c++] = -1;
      if (c == d) break;
      ++off[c];
    }
    if (near) continue;
    cells[key].push_back(kept.size());
    kept.push_back(std::move(p));
  }
  return kept;
}

void validate_region(const Region& region, std::size_t want, std::size_t alt, int res) {
  if (region.size() != want && region.size() != alt) {
    throw DomainError("region needs " + std::to_string(want) + " interval(s), got " + std::to_string(region.size()));
  }
  for (const auto& [lo, hi] : region) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("region interval is empty");
  }
  if (res < 1 || res > 100000) throw DomainError("resolution must be between 1 and 100000");
}

void finish(DiscriminantMesh& mesh) {
  std::sort(mesh.points.begin(), mesh.points.end(), [](const MeshPoint& a, const MeshPoint& b) {
    if (a.coords != b.coords) return a.coords < b.coords;
    return a.stratum < b.stratum;
  });
}

}  // namespace

DiscriminantMesh caustic(const GeneratingFamily& F, const Region& region, int res, const NumericConfig& cfg) {
  if (F.kind() != Kind::Lagrangian) throw DomainError("caustic needs a Lagrangian generating family");
  if (!check_S_nondegenerate(F)) throw DomainError("caustic: family is not S-non-degenerate");
  const int n = F.n();
  if (n < 1 || n > 3) throw DomainError("caustic meshing supports 1 <= n <= 3");
  if (F.r() > 2) throw DomainError("caustic meshing supports r <= 2");
  validate_region(region, static_cast<std::size_t>(n), static_cast<std::size_t>(n), res);

  Extractor ex(F, region, res, cfg);
  const VarLayout& L = ex.layout();
  DiscriminantMesh mesh;
  mesh.kind = "caustic";
  mesh.ambient_dim = n;
  for (std::size_t q : ex.qids()) mesh.coord_names.push_back(L.name(q));
  mesh.res = res;
  mesh.region = region;
  mesh.tol_eq = cfg.tol_eq;
  mesh.tol_deg = cfg.tol_deg;

  const int r = F.r();
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << r); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });

  const Region seed_box_all(static_cast<std::size_t>(r + F.k()), {cfg.seed_lo, cfg.seed_hi});
  std::map<unsigned, Sheet> sheets;
  std::map<unsigned, std::vector<std::vector<Point>>> crit;
  for (unsigned m : masks) {
    sheets[m] = ex.sheet(m, false);
    const auto& s = sheets[m];
    const Region box(s.free.size(), {cfg.seed_lo, cfg.seed_hi});
    crit[m] = ex.solve_nodes(s.eqs, s.free, seed_grid(s.free.size(), cfg.seeds_per_axis, box));
  }

  std::vector<std::size_t> all_q = ex.qids();
  auto emit = [&](const std::string& label, std::vector<Point> pts, const std::vector<CornerPoly>& eqs,
                  const std::optional<CornerPoly>& degenerate, const std::vector<std::size_t>& free_x,
                  const std::vector<std::size_t>& unknowns) {
    mesh.strata.push_back(label);
    pts.erase(std::remove_if(pts.begin(), pts.end(), [&](const Point& p) { return !corner_ok(p, free_x); }),
              pts.end());
    if (n == 2 && !pts.empty()) {
      std::vector<std::size_t> walk_unknowns = unknowns;
      for (std::size_t q : all_q) walk_unknowns.push_back(q);
      pts = ex.densify(pts, eqs, walk_unknowns, all_q, region);
      pts.erase(std::remove_if(pts.begin(), pts.end(), [&](const Point& p) { return !corner_ok(p, free_x); }),
                pts.end());
      pts = thin(std::move(pts), all_q, 0.5 * cfg.densify_spacing);
    } else {
      pts = thin(std::move(pts), all_q, cfg.dedupe_tol);
    }
    for (const auto& p : pts) {
      std::vector<CornerPoly> check(eqs.begin(), eqs.end() - (degenerate ? 1 : 0));
      bool ok = max_residual(check, p) < cfg.tol_eq;
      if (ok && degenerate) ok = std::fabs(degenerate->evaluate_double(p)) < cfg.tol_deg;
      if (!ok) {
        ++mesh.rejected_points;
        continue;
      }
      MeshPoint mp;
      for (std::size_t q : all_q) mp.coords.push_back(p[q]);
      mp.stratum = label;
      mesh.points.push_back(std::move(mp));
    }
  };

  // Degenerate critical points of each stratum.
  for (unsigned m : masks) {
    const Sheet& s = sheets[m];
    if (s.free.empty()) {
      mesh.strata.push_back("C_" + subset_label(m, r));
      continue;
    }
    PolyMatrix H;
    const CornerPoly restricted = ex.restrict_corner(F.F(), m);
    for (std::size_t a : s.free) {
      std::vector<CornerPoly> row;
      for (std::size_t b : s.free) row.push_back(derivative(derivative(restricted, a), b));
      H.push_back(std::move(row));
    }
    const CornerPoly det = det_poly(H, L);
    auto pts = ex.edge_crossings(crit[m], s.eqs, det, s.free);
    std::vector<CornerPoly> eqs = s.eqs;
    eqs.push_back(det);
    emit("C_" + subset_label(m, r), std::move(pts), eqs, det, s.free_x, s.free);
  }
  // Boundary intersections for adjacent pairs sigma < tau.
  for (unsigned m : masks) {
    for (int i = 0; i < r; ++i) {
      if (m & (1u << i)) continue;
      const unsigned tau = m | (1u << i);
      const Sheet& t = sheets[tau];
      const CornerPoly dxi = ex.restrict_corner(derivative(F.F(), L.x(i + 1)), tau);
      auto pts = ex.edge_crossings(crit[tau], t.eqs, dxi, t.free);
      std::vector<CornerPoly> eqs = t.eqs;
      eqs.push_back(dxi);
      emit("Q_" + subset_label(m, r) + "_" + subset_label(tau, r), std::move(pts), eqs, std::nullopt, t.free_x,
           t.free);
    }
  }
  mesh.dropped_seeds = ex.dropped();
  finish(mesh);
  return mesh;
}

DiscriminantMesh wavefront(const GeneratingFamily& F, const Region& region, int res, const NumericConfig& cfg) {
  if (F.kind() != Kind::Legendrian) throw DomainError("wavefront needs a Legendrian generating family");
  if (!check_C_nondegenerate(F)) throw DomainError("wavefront: family is not C-non-degenerate");
  const int n = F.n();
  if (n > 3) throw DomainError("wavefront meshing supports n <= 3");
  if (F.r() > 2) throw DomainError("wavefront meshing supports r <= 2");
  validate_region(region, static_cast<std::size_t>(n), static_cast<std::size_t>(n + 1), res);
  const bool z_bounded = region.size() == static_cast<std::size_t>(n + 1);
  const Region qregion(region.begin(), region.begin() + n);
  const std::pair<double, double> zrange = z_bounded ? region.back() : std::make_pair(cfg.seed_lo, cfg.seed_hi);

  Extractor ex(F, qregion, n == 0 ? 1 : res, cfg);
  const VarLayout& L = ex.layout();
  const std::size_t zid = *F.z();
  DiscriminantMesh mesh;
  mesh.kind = "wavefront";
  mesh.ambient_dim = n + 1;
  std::vector<std::size_t> out_coords = ex.qids();
  out_coords.push_back(zid);
  for (std::size_t c : out_coords) mesh.coord_names.push_back(L.name(c));
  mesh.res = res;
  mesh.region = region;
  mesh.tol_eq = cfg.tol_eq;
  mesh.tol_deg = cfg.tol_deg;

  const int r = F.r();
  for (unsigned m = 0; m < (1u << r); ++m) {
    const Sheet s = ex.sheet(m, true);
    std::vector<std::size_t> unknowns = s.free;
    unknowns.push_back(zid);
    Region box(s.free.size(), {cfg.seed_lo, cfg.seed_hi});
    box.push_back(zrange);
    auto nodes = ex.solve_nodes(s.eqs, unknowns, seed_grid(unknowns.size(), cfg.seeds_per_axis, box));
    std::vector<Point> pts;
    for (auto& v : nodes) {
      for (auto& p : v) {
        if (corner_ok(p, s.free_x)) pts.push_back(std::move(p));
      }
    }
    Region out_box = qregion;
    out_box.push_back(z_bounded ? zrange : std::make_pair(-1e300, 1e300));
    if (n == 1 && !pts.empty()) {
      std::vector<std::size_t> walk = unknowns;
      for (std::size_t q : ex.qids()) walk.push_back(q);
      pts = ex.densify(pts, s.eqs, walk, out_coords, out_box);
      pts.erase(std::remove_if(pts.begin(), pts.end(), [&](const Point& p) { return !corner_ok(p, s.free_x); }),
                pts.end());
      pts = thin(std::move(pts), out_coords, 0.5 * cfg.densify_spacing);
    } else {
      pts = thin(std::move(pts), out_coords, cfg.dedupe_tol);
    }
    const std::string label = "W_" + subset_label(m, r);
    mesh.strata.push_back(label);
    for (const auto& p : pts) {
      if (z_bounded && (p[zid] < zrange.first || p[zid] > zrange.second)) continue;
      if (max_residual(s.eqs, p) >= cfg.tol_eq) {
        ++mesh.rejected_points;
        continue;
      }
      MeshPoint mp;
      for (std::size_t c : out_coords) mp.coords.push_back(p[c]);
      mp.stratum = label;
      mesh.points.push_back(std::move(mp));
    }
  }
  mesh.dropped_seeds = ex.dropped();
  finish(mesh);
  return mesh;
}

}  // namespace reticular
