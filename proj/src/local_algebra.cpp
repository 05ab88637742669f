#include "reticular/local_algebra.hpp"

#include <algorithm>

namespace reticular {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::R: return "R";
    case Mode::Rplus: return "Rplus";
    case Mode::K: return "K";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "R") return Mode::R;
  if (s == "Rplus" || s == "R+") return Mode::Rplus;
  if (s == "K") return Mode::K;
  throw DomainError("unknown mode '" + s + "' (expected R, Rplus or K)");
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Indeterminate: return "indeterminate";
  }
  return "?";
}

void require_germ_layout(const CornerPoly& f, const char* what) {
  if (!f.layout().params().empty()) {
    throw ShapeError(std::string(what) + ": expected a germ in x and y only, got parameters");
  }
}

void require_m2(const CornerPoly& f, const char* what) {
  for (const auto& [e, c] : f.terms()) {
    const int d = total_degree(e);
    if (d >= 2) break;
    throw DomainError(std::string(what) + ": germ is not in M^2 (term " +
                      format_monomial(f.layout(), e) + " has degree " + std::to_string(d) + ")");
  }
}

namespace {

CornerPoly shifted(const CornerPoly& g, const Exponent& m, int l) {
  CornerPoly out(g.layout());
  const int dm = total_degree(m);
  Exponent e(m.size());
  for (const auto& [ge, c] : g.terms()) {
    if (total_degree(ge) + dm > l) break;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ge[i] + m[i];
    out.add_term(e, c);
  }
  return out;
}

std::vector<CornerPoly> r_generators(const CornerPoly& f) {
  std::vector<CornerPoly> gens;
  const VarLayout& L = f.layout();
  for (int i = 1; i <= L.r(); ++i) {
    gens.push_back(multiply(CornerPoly::variable(L, L.x(i)), derivative(f, L.x(i)), -1));
  }
  for (int j = 1; j <= L.k(); ++j) gens.push_back(derivative(f, L.y(j)));
  return gens;
}

// Insert m*g for every monomial m with min_mult <= deg m and deg(m*g) <= l.
void insert_multiples(SparseEchelon& span, const JetSpace& J, const CornerPoly& g, int min_mult) {
  if (g.is_zero()) return;
  const int top = J.l() - g.order();
  for (int d = min_mult; d <= top; ++d) {
    for (const auto& m : monomials_of_degree(J.nvars(), d)) {
      span.insert(jet_row(shifted(g, m, J.l()), J));
    }
  }
}

}  // namespace

TangentModule tangent_module(const CornerPoly& f, Mode mode, int l) {
  require_germ_layout(f, "tangent_module");
  if (l < 1) throw DomainError("tangent_module: truncation must be at least 1");
  if (f.constant_term() != 0) throw DomainError("tangent_module: germ has a nonzero constant term");
  TangentModule T;
  T.mode = mode;
  T.germ = f;
  T.l = l;
  T.generators = r_generators(f);
  if (mode == Mode::K) T.generators.push_back(f);
  T.space = JetSpace(f.nvars(), l, 0);
  T.span = SparseEchelon(T.space.dim());
  for (const auto& g : T.generators) insert_multiples(T.span, T.space, g, 0);
  return T;
}

std::vector<Exponent> quotient_basis_at(const CornerPoly& f, Mode mode, int l) {
  TangentModule T = tangent_module(f, mode, l);
  std::vector<Exponent> out;
  for (std::size_t c : T.span.free_columns()) out.push_back(T.space.monomial(c));
  return out;
}

std::vector<std::string> QuotientReport::basis_strings() const {
  std::vector<std::string> out;
  for (const auto& e : basis) out.push_back(format_monomial(layout, e));
  return out;
}

QuotientReport codimension(const CornerPoly& f, Mode mode, int cap) {
  require_germ_layout(f, "codimension");
  require_m2(f, "codimension");
  QuotientReport rep;
  rep.mode = mode;
  rep.layout = f.layout();
  auto max_degree = [](const std::vector<Exponent>& b) {
    int d = 0;
    for (const auto& e : b) d = std::max(d, total_degree(e));
    return d;
  };
  auto finish = [&](std::vector<Exponent> basis) {
    if (mode == Mode::Rplus) {
      basis.erase(std::remove_if(basis.begin(), basis.end(),
                                 [](const Exponent& e) { return total_degree(e) == 0; }),
                  basis.end());
    }
    rep.codim = static_cast<int>(basis.size());
    rep.basis = std::move(basis);
  };

  const int l0 = std::min(cap, std::max(2, f.order() - 1));
  std::vector<Exponent> cur = quotient_basis_at(f, mode, l0);
  for (int l = l0; l < cap; ++l) {
    std::vector<Exponent> next = quotient_basis_at(f, mode, l + 1);
    if (max_degree(cur) <= l - 1 && next == cur) {
      rep.l_used = l;
      rep.stabilized = true;
      finish(std::move(cur));
      return rep;
    }
    cur = std::move(next);
  }
  rep.l_used = cap;
  std::vector<bool> seen(static_cast<std::size_t>(cap) + 1, false);
  for (const auto& e : cur) seen[static_cast<std::size_t>(total_degree(e))] = true;
  if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    rep.infinite = true;
    rep.stabilized = true;
    rep.codim = -1;
    rep.basis.clear();
    return rep;
  }
  finish(std::move(cur));
  return rep;
}

std::optional<int> determinacy_bound(const CornerPoly& f, Mode mode, int l_max) {
  require_germ_layout(f, "determinacy_bound");
  if (f.constant_term() != 0) throw DomainError("determinacy_bound: germ has a nonzero constant term");
  const VarLayout& L = f.layout();
  std::vector<CornerPoly> m1;  // multiplied by M
  for (int i = 1; i <= L.r(); ++i) {
    m1.push_back(multiply(CornerPoly::variable(L, L.x(i)), derivative(f, L.x(i)), -1));
  }
  if (mode == Mode::K) m1.push_back(f);
  std::vector<CornerPoly> m2;  // multiplied by M^2
  for (int j = 1; j <= L.k(); ++j) m2.push_back(derivative(f, L.y(j)));

  for (int l = 1; l <= l_max; ++l) {
    JetSpace J(f.nvars(), l + 1, 0);
    SparseEchelon span(J.dim());
    for (const auto& g : m1) insert_multiples(span, J, g, 1);
    for (const auto& g : m2) insert_multiples(span, J, g, 2);
    bool ok = true;
    for (std::size_t c = J.degree_start(l + 1); c < J.dim() && ok; ++c) {
      ok = span.in_span(unit_row(c));
    }
    if (ok) return l;
  }
  return std::nullopt;
}

Tri membership(const CornerPoly& g, const TangentModule& T, const std::vector<CornerPoly>& extras) {
  require_same_layout(g, T.germ, "membership");
  if (g.degree() > T.l) return Tri::Indeterminate;
  SparseEchelon span = T.span;
  for (const auto& e : extras) {
    require_same_layout(e, T.germ, "membership");
    span.insert(jet_row(e, T.space));
  }
  return span.in_span(jet_row(g, T.space)) ? Tri::True : Tri::False;
}

bool spans_jet_space(const TangentModule& T, const std::vector<CornerPoly>& extras) {
  SparseEchelon span = T.span;
  for (const auto& e : extras) span.insert(jet_row(e, T.space));
  return span.rank() == T.space.dim();
}

}  // namespace reticular
