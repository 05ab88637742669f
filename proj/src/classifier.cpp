#include "reticular/classifier.hpp"

#include <algorithm>

namespace reticular {
namespace {

int sgn(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Exponent unit_exp(std::size_t n, std::size_t a, std::size_t b) {
  Exponent e(n, 0);
  e[a] += 1;
  e[b] += 1;
  return e;
}

std::string sign_suffix(int s) { return s > 0 ? "+" : (s < 0 ? "-" : ""); }

}  // namespace

SplitReport split(const CornerPoly& f, int l) {
  require_germ_layout(f, "split");
  require_m2(f, "split");
  const VarLayout& L = f.layout();
  const std::size_t n = L.size();
  SplitReport rep;
  rep.truncation = l;
  CornerPoly g = truncate(f, l);

  std::vector<std::size_t> active;
  for (int j = 1; j <= L.k(); ++j) active.push_back(L.y(j));
  std::vector<std::pair<std::size_t, Rational>> pivots;

  for (;;) {
    auto diag = std::find_if(active.begin(), active.end(), [&](std::size_t a) {
      return g.coefficient(unit_exp(n, a, a)) != 0;
    });
    if (diag != active.end()) {
      const std::size_t a = *diag;
      const Rational c = g.coefficient(unit_exp(n, a, a));
      CornerPoly image = CornerPoly::variable(L, a);
      bool moved = false;
      for (std::size_t b : active) {
        if (b == a) continue;
        const Rational cab = g.coefficient(unit_exp(n, a, b));
        if (cab == 0) continue;
        image -= CornerPoly::variable(L, b) * Rational(cab / (2 * c));
        moved = true;
      }
      if (moved) {
        g = substitute(g, {{a, image}}, l);
        rep.change_log.push_back(L.name(a) + " -> " + format_poly(image));
      }
      pivots.emplace_back(a, c);
      active.erase(diag);
      continue;
    }
    bool swapped = false;
    for (std::size_t i = 0; i < active.size() && !swapped; ++i) {
      for (std::size_t j = i + 1; j < active.size() && !swapped; ++j) {
        const std::size_t a = active[i];
        const std::size_t b = active[j];
        if (g.coefficient(unit_exp(n, a, b)) == 0) continue;
        CornerPoly image = CornerPoly::variable(L, a) + CornerPoly::variable(L, b);
        g = substitute(g, {{a, image}}, l);
        rep.change_log.push_back(L.name(a) + " -> " + format_poly(image));
        swapped = true;
      }
    }
    if (!swapped) break;
  }

  // Eliminate each split variable through its critical point h(x, rest).
  for (const auto& [a, d] : pivots) {
    const CornerPoly ga = derivative(g, a);
    const Rational step = Rational(-1) / (2 * d);
    CornerPoly h(L);
    for (int it = 0; it <= l + 1; ++it) {
      CornerPoly next = h + substitute(ga, {{a, h}}, l) * step;
      next = truncate(next, l);
      if (next == h) break;
      h = std::move(next);
    }
    g = substitute(g, {{a, h}}, l);
    rep.change_log.push_back(L.name(a) + " split off, critical branch " + L.name(a) + " = " +
                             format_poly(h));
    (d > 0 ? rep.positive : rep.negative) += 1;
  }
  rep.quad_rank = static_cast<int>(pivots.size());

  const VarLayout target(L.r(), static_cast<int>(active.size()));
  std::vector<CornerPoly> images;
  for (std::size_t v = 0; v < n; ++v) {
    if (L.is_corner(v)) {
      images.push_back(CornerPoly::variable(target, v));
      continue;
    }
    auto it = std::find(active.begin(), active.end(), v);
    if (it == active.end()) {
      images.emplace_back(target);
    } else {
      const int j = static_cast<int>(it - active.begin()) + 1;
      images.push_back(CornerPoly::variable(target, target.y(j)));
      if (L.name(v) != target.name(target.y(j))) {
        rep.change_log.push_back(L.name(v) + " renamed " + target.name(target.y(j)));
      }
    }
  }
  rep.residual = n == 0 ? CornerPoly(target) : compose(g, images, l);
  return rep;
}

std::string GermClass::label() const {
  std::string s(1, series);
  s += std::to_string(index);
  if (mode != Mode::K) {
    if (series == 'A' && (index < 3 || index % 2 == 0)) return s;
    return s + sign_suffix(sign);
  }
  switch (series) {
    case 'D': return index % 2 == 0 ? s + sign_suffix(sign) : s;
    case 'C': return s + "e" + sign_suffix(sign);
    default: return s;
  }
}

int expected_codim(char series, int index, Mode mode) {
  int c = 0;
  switch (series) {
    case 'A':
    case 'B':
    case 'C':
    case 'D': c = index - 1; break;
    case 'E': c = index - 1; break;
    case 'F': c = 3; break;
    default: c = -1;
  }
  return mode == Mode::K ? c + 1 : c;
}

namespace {

struct Recognition {
  std::optional<GermClass> cls;
  int raw_sign = 0;
  bool need_more = false;
  std::string why;
};

GermClass make(char series, int index, int sign, int corank) {
  GermClass g;
  g.series = series;
  g.index = index;
  g.sign = sign;
  g.corank = corank;
  return g;
}

Rational coef2(const CornerPoly& g, int a, int b) { return g.coefficient(Exponent{a, b}); }

// Corank-2 germ in (y1, y2) with vanishing 2-jet.
Recognition recognize_corank2(const CornerPoly& g, int l) {
  Recognition rec;
  const VarLayout& L = g.layout();
  const Rational a = coef2(g, 3, 0), b = coef2(g, 2, 1), c = coef2(g, 1, 2), d = coef2(g, 0, 3);
  if (a == 0 && b == 0 && c == 0 && d == 0) {
    rec.why = "corank 2 with vanishing cubic";
    return rec;
  }
  const Rational disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
                        27 * a * a * d * d;
  if (disc != 0) {
    rec.raw_sign = disc > 0 ? -1 : 1;
    rec.cls = make('D', 4, rec.raw_sign, 2);
    return rec;
  }
  const CornerPoly C = g.homogeneous_part(3);
  const std::size_t s = L.y(1), t = L.y(2);
  const CornerPoly S = CornerPoly::variable(L, s), T = CornerPoly::variable(L, t);
  // Hessian covariant: a multiple of the square of the repeated factor.
  const CornerPoly H = derivative(derivative(C, s), s) * derivative(derivative(C, t), t) -
                       derivative(derivative(C, s), t) * derivative(derivative(C, s), t);
  if (H.is_zero()) {
    // Triple root: move it to u and read the v^4 coefficient.
    std::map<std::size_t, CornerPoly> change;
    if (a != 0) {
      change = {{s, S - T * Rational(b / (3 * a))}, {t, T}};
    } else {
      change = {{s, T}, {t, S}};
    }
    const CornerPoly h = substitute(g, change, l);
    if (l < 4) {
      rec.need_more = true;
      return rec;
    }
    const Rational c4 = coef2(h, 0, 4);
    if (c4 == 0) {
      rec.why = "triple cubic root with vanishing v^4 term (beyond E6)";
      return rec;
    }
    rec.raw_sign = sgn(c4);
    rec.cls = make('E', 6, rec.raw_sign, 2);
    return rec;
  }
  const Rational A = H.coefficient(Exponent{2, 0}), B = H.coefficient(Exponent{1, 1});
  // u is the repeated factor, w the complementary coordinate.
  std::map<std::size_t, CornerPoly> first;
  if (A != 0) {
    first = {{s, S - T * Rational(B / (2 * A))}, {t, T}};
  } else {
    first = {{s, T}, {t, S}};
  }
  CornerPoly h = substitute(g, first, l);
  const Rational alpha = coef2(h, 3, 0), beta = coef2(h, 2, 1);
  if (beta == 0) {
    rec.why = "degenerate double-root cubic";
    return rec;
  }
  // v = alpha*u + beta*w, so the cubic becomes u^2 v.
  h = substitute(h, {{t, (T - S * alpha) * Rational(1 / beta)}}, l);
  for (int j = 2; j < l; ++j) {
    const Rational e = coef2(h, 1, j);
    if (e == 0) continue;
    h = substitute(h, {{s, S - power(T, j - 1, -1) * Rational(e / 2)}}, l);
  }
  for (int m = 3; m <= l; ++m) {
    const Rational cm = coef2(h, 0, m);
    if (cm == 0) continue;
    rec.raw_sign = sgn(cm);
    rec.cls = make('D', m + 1, rec.raw_sign, 2);
    return rec;
  }
  rec.need_more = true;
  return rec;
}

Recognition recognize(const SplitReport& sp, int l) {
  Recognition rec;
  const CornerPoly& g = sp.residual;
  const int r = g.r();
  const int corank = g.k();
  if (r == 0) {
    if (corank == 0) {
      rec.cls = make('A', 1, 0, 0);
      return rec;
    }
    if (corank == 1) {
      if (g.is_zero()) {
        rec.need_more = true;
        return rec;
      }
      const int v = g.order();
      const Rational lead = g.coefficient(Exponent{v});
      rec.raw_sign = sgn(lead);
      rec.cls = make('A', v - 1, v % 2 == 0 ? rec.raw_sign : 0, 1);
      return rec;
    }
    if (corank == 2) return recognize_corank2(g, l);
    rec.why = "corank " + std::to_string(corank) + " is not simple";
    return rec;
  }
  // r == 1
  if (corank == 0) {
    if (g.is_zero()) {
      rec.need_more = true;
      return rec;
    }
    const int v = g.order();
    rec.raw_sign = sgn(g.coefficient(Exponent{v}));
    rec.cls = make('B', v, rec.raw_sign, 0);
    return rec;
  }
  if (corank >= 2) {
    rec.why = "corank " + std::to_string(corank) + " on a corner is not simple";
    return rec;
  }
  const Rational a = g.coefficient(Exponent{2, 0}), b = g.coefficient(Exponent{1, 1});
  // Order along the boundary x = 0.
  int ord = -1;
  Rational lead = 0;
  for (const auto& [e, c] : g.terms()) {
    if (e[0] == 0) {
      ord = e[1];
      lead = c;
      break;
    }
  }
  if (b != 0) {
    if (ord < 0) {
      rec.need_more = true;
      return rec;
    }
    int s = sgn(lead);
    if (b < 0 && ord % 2 == 1) s = -s;
    rec.raw_sign = s;
    rec.cls = make('C', ord, s, 1);
    return rec;
  }
  if (a != 0 && ord == 3) {
    rec.raw_sign = sgn(a);
    rec.cls = make('F', 4, rec.raw_sign, 1);
    return rec;
  }
  rec.why = a == 0 ? "vanishing 2-jet on a corner with corank 1" : "x^2 term without a y^3 term";
  return rec;
}

}  // namespace

ClassifyResult classify(const CornerPoly& f, Mode mode) {
  require_germ_layout(f, "classify");
  if (f.r() >= 2) throw UnsupportedError("classification supports r = 0 or r = 1 only");
  require_m2(f, "classify");
  if (mode == Mode::Rplus) mode = Mode::R;
  ClassifyResult out;
  out.determinacy = determinacy_bound(f, mode);

  Recognition rec;
  for (int l : {8, kDefaultCap}) {
    out.split = split(f, l);
    rec = recognize(out.split, l);
    if (!rec.need_more) break;
  }
  out.log = out.split.change_log;
  if (rec.need_more) rec.why = "residual vanishes to the working order";
  if (!rec.cls) {
    out.verdict = "NOT_SIMPLE";
    out.log.push_back("not simple: " + rec.why);
    return out;
  }
  GermClass cls = *rec.cls;
  cls.mode = mode;
  if (mode == Mode::K) {
    const bool keep = (cls.series == 'D' && cls.index % 2 == 0) || (cls.series == 'C' && cls.index % 2 == 1);
    if (cls.series == 'C' && !keep) cls.sign = 1;
    else if (!keep) cls.sign = 0;
    if (rec.raw_sign != 0) out.log.push_back("raw sign " + sign_suffix(rec.raw_sign) + " normalized to " +
                                             (cls.sign == 0 ? std::string("none") : sign_suffix(cls.sign)));
  }
  const QuotientReport q = codimension(out.split.residual, mode == Mode::K ? Mode::K : Mode::Rplus);
  const int want = expected_codim(cls.series, cls.index, mode);
  if (q.infinite || !q.stabilized || q.codim != want) {
    out.verdict = "NOT_SIMPLE";
    out.log.push_back("not simple: invariants suggest " + cls.label() + " but the codimension is " +
                      (q.infinite ? std::string("infinite") : std::to_string(q.codim)) +
                      ", expected " + std::to_string(want));
    return out;
  }
  cls.codim = q.codim;
  out.cls = cls;
  out.verdict = cls.label();
  return out;
}

bool is_simple(const CornerPoly& f, Mode mode) { return classify(f, mode).cls.has_value(); }

}  // namespace reticular
