#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "reticular/poly.hpp"

namespace reticular {

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : e) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};

// Monomials of total degree min_degree..l in `nvars` variables, graded-lex.
class JetSpace {
 public:
  JetSpace() = default;
  JetSpace(std::size_t nvars, int l, int min_degree);

  std::size_t nvars() const { return nvars_; }
  int l() const { return l_; }
  int min_degree() const { return min_degree_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Exponent>& basis() const { return basis_; }
  const Exponent& monomial(std::size_t col) const { return basis_[col]; }
  std::optional<std::size_t> index(const Exponent& e) const;
  // First column of the given degree (== dim() past the top).
  std::size_t degree_start(int d) const;

 private:
  std::size_t nvars_ = 0;
  int l_ = 0;
  int min_degree_ = 0;
  std::vector<Exponent> basis_;
  std::vector<std::size_t> degree_start_;
  std::unordered_map<Exponent, std::size_t, ExponentHash> index_;
};

JetSpace monomial_basis(int r, int k, int l, int min_degree);
JetSpace monomial_basis(const VarLayout& layout, int l, int min_degree);

// Every monomial of total degree exactly d, graded-lex order.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int d);

}  // namespace reticular
