#include "reticular/geometry.hpp"

#include "reticular/jet_space.hpp"
#include "reticular/row_echelon.hpp"

namespace reticular {

std::size_t exact_rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  SparseEchelon ech(m.front().size());
  for (const auto& row : m) {
    SparseRow sr;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != 0) sr.emplace_back(c, row[c]);
    }
    ech.insert(sr);
  }
  return ech.rank();
}

namespace {

Rational at_zero(const CornerPoly& p) { return p.constant_term(); }

Rational second_at_zero(const CornerPoly& F, std::size_t a, std::size_t b) {
  return at_zero(derivative(derivative(F, a), b));
}

std::vector<std::size_t> ids_where(const VarLayout& L, bool (VarLayout::*pred)(std::size_t) const) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < L.size(); ++v) {
    if ((L.*pred)(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

bool check_S_nondegenerate(const GeneratingFamily& F) {
  if (F.kind() != Kind::Lagrangian) return false;
  const VarLayout& L = F.F().layout();
  const auto xs = ids_where(L, &VarLayout::is_corner);
  const auto ys = ids_where(L, &VarLayout::is_internal);
  const auto us = ids_where(L, &VarLayout::is_param);
  std::vector<std::size_t> cols = ys;
  cols.insert(cols.end(), us.begin(), us.end());
  RationalMatrix m;
  for (auto rows : {xs, ys}) {
    for (std::size_t a : rows) {
      std::vector<Rational> row;
      for (std::size_t c : cols) row.push_back(second_at_zero(F.F(), a, c));
      m.push_back(std::move(row));
    }
  }
  return static_cast<int>(exact_rank(m)) == L.r() + L.k();
}

bool check_C_nondegenerate(const GeneratingFamily& F) {
  if (F.kind() != Kind::Legendrian) return false;
  const CornerPoly& G = F.F();
  const VarLayout& L = G.layout();
  const auto xs = ids_where(L, &VarLayout::is_corner);
  const auto ys = ids_where(L, &VarLayout::is_internal);
  for (auto group : {xs, ys}) {
    for (std::size_t v : group) {
      if (at_zero(derivative(G, v)) != 0) return false;
    }
  }
  // Columns y, q, z: the parameters in layout order with z among them.
  std::vector<std::size_t> cols = ys;
  for (std::size_t v : ids_where(L, &VarLayout::is_param)) cols.push_back(v);
  RationalMatrix m;
  std::vector<Rational> first;
  for (std::size_t c : cols) first.push_back(at_zero(derivative(G, c)));
  m.push_back(std::move(first));
  for (auto rows : {xs, ys}) {
    for (std::size_t a : rows) {
      std::vector<Rational> row;
      for (std::size_t c : cols) row.push_back(second_at_zero(G, a, c));
      m.push_back(std::move(row));
    }
  }
  return static_cast<int>(exact_rank(m)) == L.r() + L.k() + 1;
}

VarLayout symplectic_layout(int n, const std::string& q, const std::string& p) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(q + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back(p + std::to_string(i));
  return VarLayout(0, 0, names);
}

VarLayout contact_layout(int n, const std::string& q, const std::string& z, const std::string& p) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(q + std::to_string(i));
  names.push_back(z);
  for (int i = 1; i <= n; ++i) names.push_back(p + std::to_string(i));
  return VarLayout(0, 0, names);
}

std::vector<CornerPoly> hamiltonian_vf(const CornerPoly& f, int n) {
  if (f.nvars() != static_cast<std::size_t>(2 * n)) throw ShapeError("hamiltonian_vf: expected 2n variables");
  std::vector<CornerPoly> X;
  for (int j = 0; j < n; ++j) X.push_back(derivative(f, static_cast<std::size_t>(n + j)));
  for (int j = 0; j < n; ++j) X.push_back(-derivative(f, static_cast<std::size_t>(j)));
  return X;
}

std::vector<CornerPoly> contact_hamiltonian_vf(const CornerPoly& f, int n) {
  if (f.nvars() != static_cast<std::size_t>(2 * n + 1)) {
    throw ShapeError("contact_hamiltonian_vf: expected 2n+1 variables");
  }
  const VarLayout& L = f.layout();
  const std::size_t z = static_cast<std::size_t>(n);
  auto p = [&](int j) { return static_cast<std::size_t>(n + 1 + j); };
  const CornerPoly fz = derivative(f, z);
  std::vector<CornerPoly> X;
  CornerPoly xz = f;
  for (int j = 0; j < n; ++j) {
    const CornerPoly fp = derivative(f, p(j));
    X.push_back(-fp);
    xz -= CornerPoly::variable(L, p(j)) * fp;
  }
  X.push_back(xz);
  for (int j = 0; j < n; ++j) {
    X.push_back(derivative(f, static_cast<std::size_t>(j)) + CornerPoly::variable(L, p(j)) * fz);
  }
  return X;
}

PolyMatrix lie_derivative_symplectic_form(const std::vector<CornerPoly>& X, int n) {
  const std::size_t N = static_cast<std::size_t>(2 * n);
  if (X.size() != N) throw ShapeError("lie derivative: vector field has the wrong size");
  // omega(e_{p_j}, e_{q_j}) = 1
  std::vector<std::vector<int>> w(N, std::vector<int>(N, 0));
  for (int j = 0; j < n; ++j) {
    w[static_cast<std::size_t>(n + j)][static_cast<std::size_t>(j)] = 1;
    w[static_cast<std::size_t>(j)][static_cast<std::size_t>(n + j)] = -1;
  }
  const VarLayout& L = X.front().layout();
  PolyMatrix out(N, std::vector<CornerPoly>(N, CornerPoly(L)));
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) {
      CornerPoly acc(L);
      for (std::size_t c = 0; c < N; ++c) {
        if (w[c][b] != 0) acc += derivative(X[c], a) * Rational(w[c][b]);
        if (w[a][c] != 0) acc += derivative(X[c], b) * Rational(w[a][c]);
      }
      out[a][b] = std::move(acc);
    }
  }
  return out;
}

CornerPoly contact_form_on(const std::vector<CornerPoly>& X, int n) {
  if (X.size() != static_cast<std::size_t>(2 * n + 1)) throw ShapeError("contact form: wrong size");
  const VarLayout& L = X.front().layout();
  CornerPoly out = X[static_cast<std::size_t>(n)];
  for (int j = 0; j < n; ++j) {
    out -= multiply(CornerPoly::variable(L, static_cast<std::size_t>(n + 1 + j)), X[static_cast<std::size_t>(j)], -1);
  }
  return out;
}

GeneratingFamily family_from_generating_function(const CornerPoly& H, int r, int n, Kind kind) {
  if (r > n) throw DomainError("family_from_generating_function: r must not exceed n");
  if (r < 0 || n < 0) throw DomainError("family_from_generating_function: negative dimension");
  if (H.nvars() != static_cast<std::size_t>(2 * n)) {
    throw ShapeError("family_from_generating_function: H must live on (Q1..Qn, p1..pn)");
  }
  std::vector<std::string> params;
  for (int i = 1; i <= n; ++i) params.push_back("q" + std::to_string(i));
  if (kind == Kind::Legendrian) params.push_back("z");
  const VarLayout L(r, n, params);
  std::vector<CornerPoly> images;
  for (int i = 1; i <= n; ++i) {
    images.push_back(i <= r ? CornerPoly::variable(L, L.x(i)) : CornerPoly(L));
  }
  for (int j = 1; j <= n; ++j) images.push_back(CornerPoly::variable(L, L.y(j)));
  CornerPoly F = n == 0 ? CornerPoly::constant(L, H.constant_term()) : compose(H, images, -1);
  for (int j = 1; j <= n; ++j) {
    F += CornerPoly::variable(L, L.y(j)) * CornerPoly::variable(L, L.param(static_cast<std::size_t>(j - 1)));
  }
  if (kind == Kind::Legendrian) F -= CornerPoly::variable(L, *L.find("z"));
  return GeneratingFamily(std::move(F), kind);
}

VarLayout map_source_layout(MapKind kind, int n) {
  return kind == MapKind::Symplectic ? symplectic_layout(n, "Q", "P") : contact_layout(n, "Q", "Z", "P");
}

void validate_map_germ(const MapGermSpec& M) {
  if (M.n < 1) throw DomainError("map germ: n must be positive");
  if (M.r < 0 || M.r > M.n) throw DomainError("map germ: need 0 <= r <= n");
  const VarLayout src = map_source_layout(M.kind, M.n);
  const std::size_t N = src.size();
  if (M.components.size() != N) throw ShapeError("map germ: wrong number of components");
  for (const auto& c : M.components) {
    if (!(c.layout() == src)) throw ShapeError("map germ: components must live on the source layout");
    if (c.constant_term() != 0) throw DomainError("map germ: components must vanish at 0");
  }
  const int l = M.l > 0 ? M.l : M.n + 2;
  const std::size_t n = static_cast<std::size_t>(M.n);
  auto d = [&](std::size_t comp, std::size_t var) { return derivative(M.components[comp], var); };

  if (M.kind == MapKind::Symplectic) {
    // (S^* sum dp^dq)(e_a, e_b) = sum_j dp_j(a) dq_j(b) - dp_j(b) dq_j(a)
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = a + 1; b < N; ++b) {
        CornerPoly w(src);
        for (std::size_t j = 0; j < n; ++j) {
          w += multiply(d(n + j, a), d(j, b), l) - multiply(d(n + j, b), d(j, a), l);
        }
        Rational want = 0;
        if (a < n && b == a + n) want = -1;
        w -= CornerPoly::constant(src, want);
        if (!truncate(w, l).is_zero()) {
          throw DomainError("map germ is not symplectic to order " + std::to_string(l));
        }
      }
    }
    return;
  }
  // Contact: C^*(dz - p dq) = g (dZ - P dQ).
  const std::size_t zc = n;
  auto alpha = [&](std::size_t var) {
    CornerPoly a = d(zc, var);
    for (std::size_t j = 0; j < n; ++j) a -= multiply(M.components[n + 1 + j], d(j, var), l);
    return truncate(a, l);
  };
  const CornerPoly g = alpha(n);
  if (g.constant_term() == 0) throw DomainError("map germ: contact factor vanishes at 0");
  for (std::size_t j = 0; j < n; ++j) {
    const CornerPoly aq = alpha(j) + multiply(g, CornerPoly::variable(src, n + 1 + j), l);
    if (!truncate(aq, l).is_zero() || !alpha(n + 1 + j).is_zero()) {
      throw DomainError("map germ is not contact to order " + std::to_string(l));
    }
  }
}

bool stability_criterion_check(const MapGermSpec& M, int l) {
  validate_map_germ(M);
  const int need = M.kind == MapKind::Symplectic ? M.n + 1 : M.n + 2;
  if (l < need) {
    throw DomainError("stability criterion needs l >= " + std::to_string(need));
  }
  const VarLayout src = map_source_layout(M.kind, M.n);
  const std::size_t n = static_cast<std::size_t>(M.n);
  const std::size_t N = src.size();
  const std::size_t Pbase = M.kind == MapKind::Symplectic ? n : n + 1;
  // Monomial ideal B in source coordinates.
  std::vector<Exponent> B;
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(N, 0);
    e[i] = 1;
    if (static_cast<int>(i) < M.r) e[Pbase + i] = 1;
    B.push_back(e);
  }
  if (M.kind == MapKind::Contact) {
    Exponent e(N, 0);
    e[n] = 1;
    B.push_back(e);
  }
  auto in_B = [&](const Exponent& e) {
    for (const auto& g : B) {
      bool div = true;
      for (std::size_t v = 0; v < N && div; ++v) div = e[v] >= g[v];
      if (div) return true;
    }
    return false;
  };
  const int top = l + 1;
  auto reduce = [&](const CornerPoly& p) {
    CornerPoly out(src);
    for (const auto& [e, c] : p.terms()) {
      if (total_degree(e) > top) break;
      if (!in_B(e)) out.add_term(e, c);
    }
    return out;
  };

  const JetSpace J(N, top, 0);
  std::vector<std::size_t> standard;
  for (std::size_t c = 0; c < J.dim(); ++c) {
    if (!in_B(J.monomial(c))) standard.push_back(c);
  }
  // Target base coordinates (q, or q and z) pulled back by the map.
  std::vector<CornerPoly> base;
  for (std::size_t j = 0; j < Pbase; ++j) base.push_back(reduce(M.components[j]));
  std::vector<CornerPoly> gens{CornerPoly::constant(src, 1)};
  for (std::size_t j = 0; j < n; ++j) gens.push_back(reduce(M.components[Pbase + j]));

  SparseEchelon span(J.dim());
  for (int d = 0; d <= top; ++d) {
    for (const auto& m : monomials_of_degree(Pbase, d)) {
      CornerPoly pulled = CornerPoly::constant(src, 1);
      for (std::size_t v = 0; v < Pbase; ++v) {
        if (m[v] > 0) pulled = reduce(multiply(pulled, power(base[v], m[v], top), top));
      }
      if (pulled.is_zero()) continue;
      for (const auto& g : gens) span.insert(jet_row(reduce(multiply(pulled, g, top)), J));
    }
  }
  for (std::size_t c : standard) {
    if (!span.is_pivot(c) && !span.in_span(unit_row(c))) return false;
  }
  return true;
}

}  // namespace reticular
