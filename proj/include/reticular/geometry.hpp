#pragma once

#include <string>
#include <vector>

#include "reticular/poly.hpp"
#include "reticular/unfoldings.hpp"

namespace reticular {

using PolyMatrix = std::vector<std::vector<CornerPoly>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

std::size_t exact_rank(const RationalMatrix& m);

bool check_S_nondegenerate(const GeneratingFamily& F);
bool check_C_nondegenerate(const GeneratingFamily& F);

// Phase-space layouts: (q1..qn, p1..pn) and (q1..qn, z, p1..pn).
VarLayout symplectic_layout(int n, const std::string& q = "q", const std::string& p = "p");
VarLayout contact_layout(int n, const std::string& q = "q", const std::string& z = "z",
                         const std::string& p = "p");

// Components in layout order.
std::vector<CornerPoly> hamiltonian_vf(const CornerPoly& f, int n);
std::vector<CornerPoly> contact_hamiltonian_vf(const CornerPoly& f, int n);

// Lie derivative of sum dp^dq along X, as the matrix of the 2-form in the
// symplectic layout's coordinates.
PolyMatrix lie_derivative_symplectic_form(const std::vector<CornerPoly>& X, int n);
// (dz - sum p dq)(X).
CornerPoly contact_form_on(const std::vector<CornerPoly>& X, int n);

// F(x, y, q [, z]) = H(x_1..x_r, 0.., y) + <y, q> [- z] for H on the
// layout (Q1..Qn, p1..pn).
GeneratingFamily family_from_generating_function(const CornerPoly& H, int r, int n, Kind kind);

enum class MapKind { Symplectic, Contact };

struct MapGermSpec {
  MapKind kind = MapKind::Symplectic;
  int n = 1;
  int r = 0;
  int l = 0;  // validation order, 0 means n + 2
  // Target coordinates as polynomials on the source layout:
  // symplectic (q1..qn, p1..pn) over (Q1..Qn, P1..Pn),
  // contact (q1..qn, z, p1..pn) over (Q1..Qn, Z, P1..Pn).
  std::vector<CornerPoly> components;
};

VarLayout map_source_layout(MapKind kind, int n);
// Throws DomainError unless the germ preserves the structure to order l.
void validate_map_germ(const MapGermSpec& M);
bool stability_criterion_check(const MapGermSpec& M, int l);

}  // namespace reticular
