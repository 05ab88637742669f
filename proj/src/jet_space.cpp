#include "reticular/jet_space.hpp"

namespace reticular {
namespace {

void fill(std::size_t var, int left, Exponent& cur, std::vector<Exponent>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = left;
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (int a = left; a >= 0; --a) {
    cur[var] = a;
    fill(var + 1, left - a, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent cur(nvars, 0);
  fill(0, d, cur, out);
  return out;
}

JetSpace::JetSpace(std::size_t nvars, int l, int min_degree)
    : nvars_(nvars), l_(l), min_degree_(min_degree) {
  if (min_degree < 0 || l < min_degree) throw ShapeError("jet space needs 0 <= min_degree <= l");
  for (int d = min_degree; d <= l; ++d) {
    degree_start_.push_back(basis_.size());
    for (auto& e : monomials_of_degree(nvars, d)) basis_.push_back(std::move(e));
  }
  degree_start_.push_back(basis_.size());
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> JetSpace::index(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t JetSpace::degree_start(int d) const {
  if (d <= min_degree_) return 0;
  if (d > l_) return basis_.size();
  return degree_start_[static_cast<std::size_t>(d - min_degree_)];
}

JetSpace monomial_basis(int r, int k, int l, int min_degree) {
  if (r < 0 || k < 0) throw ShapeError("variable counts must be nonnegative");
  return JetSpace(static_cast<std::size_t>(r + k), l, min_degree);
}

JetSpace monomial_basis(const VarLayout& layout, int l, int min_degree) {
  return JetSpace(layout.size(), l, min_degree);
}

}  // namespace reticular
