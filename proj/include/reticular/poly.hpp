#pragma once

// Exact truncated polynomial arithmetic for germs on an r-corner.
//
// A CornerPoly lives on a fixed variable layout: corner variables x1..xr,
// internal variables y1..yk, then named parameters (q1.., z, u1.., or any
// other identifiers such as the phase-space coordinates Q1.., P1..).
// Coefficients are GMP rationals; nothing in this module touches floats
// except the explicit evaluate_double() helper used by the numeric side.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reticular {

using Rational = mpq_class;
using Exponent = std::vector<int>;

/// Graded order: total degree ascending, then lexicographically larger
/// exponent vectors first (x-block before y-block before parameters).
/// This is the order of JetSpace bases and of formatted output.
struct MonomialLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

int total_degree(const Exponent& e);

class VarLayout {
 public:
  VarLayout() = default;
  VarLayout(int r, int k, std::vector<std::string> params = {});

  int r() const { return r_; }
  int k() const { return k_; }
  const std::vector<std::string>& params() const { return params_; }
  std::size_t size() const { return static_cast<std::size_t>(r_ + k_) + params_.size(); }

  std::string name(std::size_t var) const;
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws on unknown names

  bool is_corner(std::size_t var) const { return var < static_cast<std::size_t>(r_); }
  bool is_internal(std::size_t var) const {
    return var >= static_cast<std::size_t>(r_) && var < static_cast<std::size_t>(r_ + k_);
  }
  bool is_param(std::size_t var) const { return var >= static_cast<std::size_t>(r_ + k_); }
  std::size_t x(int i) const;  // 1-based corner variable id
  std::size_t y(int j) const;  // 1-based internal variable id
  std::size_t param(std::size_t i) const { return static_cast<std::size_t>(r_ + k_) + i; }

  /// Layout of the germ part only (same r, k, no parameters).
  VarLayout germ_layout() const { return VarLayout(r_, k_); }

  bool operator==(const VarLayout& o) const = default;

 private:
  int r_ = 0;
  int k_ = 0;
  std::vector<std::string> params_;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input that is well-formed but outside an operation's domain.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CornerPoly {
 public:
  using TermMap = std::map<Exponent, Rational, MonomialLess>;

  CornerPoly() = default;
  explicit CornerPoly(VarLayout layout) : layout_(std::move(layout)) {}

  static CornerPoly constant(const VarLayout& layout, const Rational& c);
  static CornerPoly variable(const VarLayout& layout, std::size_t var);
  static CornerPoly monomial(const VarLayout& layout, Exponent e, const Rational& c = 1);

  const VarLayout& layout() const { return layout_; }
  int r() const { return layout_.r(); }
  int k() const { return layout_.k(); }
  std::size_t nvars() const { return layout_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree, -1 for the zero polynomial.
  int degree() const;
  /// Lowest total degree present, -1 for the zero polynomial.
  int order() const;
  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const;
  CornerPoly homogeneous_part(int d) const;
  /// Highest power of `var` appearing, 0 if absent.
  int degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  void add_term(const Exponent& e, const Rational& c);

  CornerPoly& operator+=(const CornerPoly& o);
  CornerPoly& operator-=(const CornerPoly& o);
  CornerPoly& operator*=(const Rational& c);
  friend CornerPoly operator+(CornerPoly a, const CornerPoly& b) { return a += b; }
  friend CornerPoly operator-(CornerPoly a, const CornerPoly& b) { return a -= b; }
  friend CornerPoly operator*(CornerPoly a, const Rational& c) { return a *= c; }
  friend CornerPoly operator*(const Rational& c, CornerPoly a) { return a *= c; }
  CornerPoly operator-() const;
  /// Untruncated product.
  friend CornerPoly operator*(const CornerPoly& a, const CornerPoly& b);

  bool operator==(const CornerPoly& o) const {
    return layout_ == o.layout_ && terms_ == o.terms_;
  }

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate_double(std::span<const double> point) const;

 private:
  void check_exponent(const Exponent& e) const;

  VarLayout layout_;
  TermMap terms_;
};

void require_same_layout(const CornerPoly& a, const CornerPoly& b, const char* what);

CornerPoly truncate(const CornerPoly& p, int l);
CornerPoly derivative(const CornerPoly& p, std::size_t var);
CornerPoly derivative(const CornerPoly& p, std::string_view var);
CornerPoly multiply(const CornerPoly& a, const CornerPoly& b, int l);
/// p^e truncated at degree l.
CornerPoly power(const CornerPoly& p, int e, int l);

/// Replace the bound variables of p by polynomials on p's own layout;
/// unbound variables stay put. Result truncated at l (l < 0: no truncation).
CornerPoly substitute(const CornerPoly& p, const std::map<std::size_t, CornerPoly>& bindings, int l);
CornerPoly substitute(const CornerPoly& p, const std::map<std::string, CornerPoly>& bindings, int l);

/// General composition: images[i] is the image of p's variable i, all images
/// share one target layout which becomes the result's layout.
CornerPoly compose(const CornerPoly& p, std::span<const CornerPoly> images, int l);

/// Re-express p on another layout, matching variables by name. Throws if p
/// uses a variable the target layout lacks.
CornerPoly relayout(const CornerPoly& p, const VarLayout& target);

/// Set every parameter of p to zero and drop them from the layout.
CornerPoly restrict_to_germ(const CornerPoly& p);

std::string format_monomial(const VarLayout& layout, const Exponent& e);
std::string format_poly(const CornerPoly& p);

}  // namespace reticular
