#include "reticular/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace reticular {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool MonomialLess::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return a.size() < b.size();
}

// ---------------------------------------------------------------------------
// VarLayout

VarLayout::VarLayout(int r, int k, std::vector<std::string> params)
    : r_(r), k_(k), params_(std::move(params)) {
  if (r < 0 || k < 0) throw ShapeError("variable counts must be nonnegative");
  for (std::size_t i = 0; i < params_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (params_[i] == params_[j]) throw ShapeError("duplicate parameter name '" + params_[i] + "'");
    }
    for (int c = 1; c <= r_; ++c) {
      if (params_[i] == "x" + std::to_string(c)) throw ShapeError("parameter shadows " + params_[i]);
    }
    for (int c = 1; c <= k_; ++c) {
      if (params_[i] == "y" + std::to_string(c)) throw ShapeError("parameter shadows " + params_[i]);
    }
  }
}

std::string VarLayout::name(std::size_t var) const {
  if (var < static_cast<std::size_t>(r_)) return "x" + std::to_string(var + 1);
  if (var < static_cast<std::size_t>(r_ + k_)) return "y" + std::to_string(var - r_ + 1);
  const std::size_t p = var - static_cast<std::size_t>(r_ + k_);
  if (p >= params_.size()) throw ShapeError("variable id out of range");
  return params_[p];
}

std::optional<std::size_t> VarLayout::find(std::string_view name) const {
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (params_[i] == name) return static_cast<std::size_t>(r_ + k_) + i;
  }
  if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'y')) {
    int idx = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return std::nullopt;
      idx = idx * 10 + (name[i] - '0');
      if (idx > 100000) return std::nullopt;
    }
    if (name[1] == '0') return std::nullopt;
    if (name[0] == 'x' && idx >= 1 && idx <= r_) return static_cast<std::size_t>(idx - 1);
    if (name[0] == 'y' && idx >= 1 && idx <= k_) return static_cast<std::size_t>(r_ + idx - 1);
  }
  return std::nullopt;
}

std::size_t VarLayout::index_of(std::string_view name) const {
  auto v = find(name);
  if (!v) throw ShapeError("unknown variable '" + std::string(name) + "'");
  return *v;
}

std::size_t VarLayout::x(int i) const {
  if (i < 1 || i > r_) throw ShapeError("corner variable index out of range");
  return static_cast<std::size_t>(i - 1);
}

std::size_t VarLayout::y(int j) const {
  if (j < 1 || j > k_) throw ShapeError("internal variable index out of range");
  return static_cast<std::size_t>(r_ + j - 1);
}

// ---------------------------------------------------------------------------
// CornerPoly

CornerPoly CornerPoly::constant(const VarLayout& layout, const Rational& c) {
  CornerPoly p(layout);
  p.add_term(Exponent(layout.size(), 0), c);
  return p;
}

CornerPoly CornerPoly::variable(const VarLayout& layout, std::size_t var) {
  if (var >= layout.size()) throw ShapeError("variable id out of range");
  Exponent e(layout.size(), 0);
  e[var] = 1;
  CornerPoly p(layout);
  p.add_term(e, 1);
  return p;
}

CornerPoly CornerPoly::monomial(const VarLayout& layout, Exponent e, const Rational& c) {
  CornerPoly p(layout);
  p.add_term(e, c);
  return p;
}

void CornerPoly::check_exponent(const Exponent& e) const {
  if (e.size() != layout_.size()) throw ShapeError("exponent length does not match layout");
  for (int v : e) {
    if (v < 0) throw ShapeError("negative exponent");
  }
}

void CornerPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  check_exponent(e);
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) {
    it->second.canonicalize();  // callers may pass an unreduced a/b
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int CornerPoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

int CornerPoly::order() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);
}

Rational CornerPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational CornerPoly::constant_term() const { return coefficient(Exponent(nvars(), 0)); }

CornerPoly CornerPoly::homogeneous_part(int d) const {
  CornerPoly out(layout_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == d) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

int CornerPoly::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void require_same_layout(const CornerPoly& a, const CornerPoly& b, const char* what) {
  if (!(a.layout() == b.layout())) {
    throw ShapeError(std::string(what) + ": incompatible variable layouts");
  }
}

CornerPoly& CornerPoly::operator+=(const CornerPoly& o) {
  require_same_layout(*this, o, "add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CornerPoly& CornerPoly::operator-=(const CornerPoly& o) {
  require_same_layout(*this, o, "subtract");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CornerPoly& CornerPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto& [e, v] : terms_) v *= k;
  return *this;
}

CornerPoly CornerPoly::operator-() const {
  CornerPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

CornerPoly operator*(const CornerPoly& a, const CornerPoly& b) { return multiply(a, b, -1); }

Rational CornerPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw ShapeError("evaluation point has wrong dimension");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int j = 0; j < e[i]; ++j) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

double CornerPoly::evaluate_double(std::span<const double> point) const {
  if (point.size() != nvars()) throw ShapeError("evaluation point has wrong dimension");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) t *= std::pow(point[i], e[i]);
    }
    acc += t;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Free operations

CornerPoly truncate(const CornerPoly& p, int l) {
  CornerPoly out(p.layout());
  if (l < 0) return out;
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) <= l) out.add_term(e, c);
  }
  return out;
}

CornerPoly derivative(const CornerPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw ShapeError("derivative: unknown variable");
  CornerPoly out(p.layout());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

CornerPoly derivative(const CornerPoly& p, std::string_view var) {
  return derivative(p, p.layout().index_of(var));
}

CornerPoly multiply(const CornerPoly& a, const CornerPoly& b, int l) {
  require_same_layout(a, b, "multiply");
  CornerPoly out(a.layout());
  if (a.is_zero() || b.is_zero()) return out;
  const int ob = b.order();
  Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    const int da = total_degree(ea);
    if (l >= 0 && da + ob > l) break;  // terms are sorted by degree
    for (const auto& [eb, cb] : b.terms()) {
      if (l >= 0 && da + total_degree(eb) > l) break;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

CornerPoly power(const CornerPoly& p, int e, int l) {
  if (e < 0) throw ShapeError("negative exponent");
  CornerPoly result = CornerPoly::constant(p.layout(), 1);
  CornerPoly base = p;
  while (e > 0) {
    if (e & 1) result = multiply(result, base, l);
    e >>= 1;
    if (e > 0) base = multiply(base, base, l);
  }
  return truncate(result, l < 0 ? std::numeric_limits<int>::max() : l);
}

CornerPoly compose(const CornerPoly& p, std::span<const CornerPoly> images, int l) {
  if (images.size() != p.nvars()) throw ShapeError("compose: one image per variable required");
  if (images.empty()) {
    throw ShapeError("compose: no images");
  }
  const VarLayout& target = images[0].layout();
  for (const auto& img : images) {
    if (!(img.layout() == target)) throw ShapeError("compose: images must share a layout");
  }
  // Power cache per variable, built lazily.
  std::vector<std::vector<CornerPoly>> powers(images.size());
  auto get_power = [&](std::size_t var, int e) -> const CornerPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(CornerPoly::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) {
      cache.push_back(multiply(cache.back(), images[var], l));
    }
    return cache[static_cast<std::size_t>(e)];
  };
  std::vector<int> min_order(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    min_order[i] = images[i].is_zero() ? std::numeric_limits<int>::max() / 64 : images[i].order();
  }

  CornerPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    if (l >= 0) {
      long lower = 0;
      for (std::size_t i = 0; i < e.size(); ++i) lower += static_cast<long>(e[i]) * min_order[i];
      if (lower > l) continue;
    }
    CornerPoly term = CornerPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      if (e[i] == 0) continue;
      term = multiply(term, get_power(i, e[i]), l);
    }
    out += term;
  }
  return out;
}

CornerPoly substitute(const CornerPoly& p, const std::map<std::size_t, CornerPoly>& bindings, int l) {
  std::vector<CornerPoly> images;
  images.reserve(p.nvars());
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    auto it = bindings.find(v);
    if (it != bindings.end()) {
      if (!(it->second.layout() == p.layout())) {
        throw ShapeError("substitute: binding for " + p.layout().name(v) + " has a different layout");
      }
      images.push_back(it->second);
    } else {
      images.push_back(CornerPoly::variable(p.layout(), v));
    }
  }
  for (const auto& [v, _] : bindings) {
    if (v >= p.nvars()) throw ShapeError("substitute: unknown variable id");
  }
  if (p.nvars() == 0) return l < 0 ? p : truncate(p, l);
  return compose(p, images, l);
}

CornerPoly substitute(const CornerPoly& p, const std::map<std::string, CornerPoly>& bindings, int l) {
  std::map<std::size_t, CornerPoly> by_id;
  for (const auto& [name, img] : bindings) by_id.emplace(p.layout().index_of(name), img);
  return substitute(p, by_id, l);
}

CornerPoly relayout(const CornerPoly& p, const VarLayout& target) {
  std::vector<std::optional<std::size_t>> map(p.nvars());
  for (std::size_t v = 0; v < p.nvars(); ++v) map[v] = target.find(p.layout().name(v));
  CornerPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponent t(target.size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!map[v]) throw ShapeError("relayout: target lacks variable " + p.layout().name(v));
      t[*map[v]] += e[v];
    }
    out.add_term(t, c);
  }
  return out;
}

CornerPoly restrict_to_germ(const CornerPoly& p) {
  const VarLayout g = p.layout().germ_layout();
  const std::size_t n = g.size();
  CornerPoly out(g);
  for (const auto& [e, c] : p.terms()) {
    bool has_param = false;
    for (std::size_t v = n; v < e.size(); ++v) has_param |= e[v] != 0;
    if (has_param) continue;
    out.add_term(Exponent(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n)), c);
  }
  return out;
}

std::string format_monomial(const VarLayout& layout, const Exponent& e) {
  std::string s;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += layout.name(v);
    if (e[v] > 1) s += '^' + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

std::string format_poly(const CornerPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const std::string mono = format_monomial(p.layout(), e);
    if (mono == "1") {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace reticular
