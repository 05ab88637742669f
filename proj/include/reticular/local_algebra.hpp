#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reticular/jet_space.hpp"
#include "reticular/poly.hpp"
#include "reticular/row_echelon.hpp"

namespace reticular {

enum class Mode { R, Rplus, K };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

enum class Tri { False, True, Indeterminate };
std::string to_string(Tri t);

inline constexpr int kDefaultCap = 12;

struct TangentModule {
  Mode mode = Mode::R;
  CornerPoly germ;
  int l = 0;
  std::vector<CornerPoly> generators;
  JetSpace space;
  SparseEchelon span{0};
};

// Mode Rplus builds the same module as R.
TangentModule tangent_module(const CornerPoly& f, Mode mode, int l);

struct QuotientReport {
  Mode mode = Mode::R;
  bool infinite = false;
  int codim = 0;
  std::vector<Exponent> basis;
  int l_used = 0;
  bool stabilized = false;
  VarLayout layout;

  std::vector<std::string> basis_strings() const;
};

// Quotient of E by the tangent module. R counts the constant, Rplus drops
// it, K uses the module with f adjoined and counts the constant.
QuotientReport codimension(const CornerPoly& f, Mode mode, int cap = kDefaultCap);

// Pivot-free monomials of the quotient at a fixed truncation, constants
// included.
std::vector<Exponent> quotient_basis_at(const CornerPoly& f, Mode mode, int l);

// Least l <= l_max satisfying the sufficient determinacy inclusion.
std::optional<int> determinacy_bound(const CornerPoly& f, Mode mode, int l_max = kDefaultCap);

// Whether the jet of g lies in T plus the real span of extras. g with
// terms above T.l cannot be decided at that truncation.
Tri membership(const CornerPoly& g, const TangentModule& T, const std::vector<CornerPoly>& extras);

// Shared by the versality check: E_l = T + span(extras) at truncation l.
bool spans_jet_space(const TangentModule& T, const std::vector<CornerPoly>& extras);

void require_germ_layout(const CornerPoly& f, const char* what);
void require_m2(const CornerPoly& f, const char* what);

}  // namespace reticular
