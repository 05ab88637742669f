#include "reticular/unfoldings.hpp"

#include <algorithm>

namespace reticular {

std::string to_string(Kind k) { return k == Kind::Lagrangian ? "Lagrangian" : "Legendrian"; }

GeneratingFamily::GeneratingFamily(CornerPoly F, Kind kind) : F_(std::move(F)), kind_(kind) {
  const bool has_z = F_.layout().find("z").has_value();
  if (kind_ == Kind::Legendrian && !has_z) throw DomainError("a Legendrian family needs the parameter z");
  if (kind_ == Kind::Lagrangian && has_z) throw DomainError("a Lagrangian family must not use z");
  if (F_.constant_term() != 0) throw DomainError("generating family has a nonzero value at 0");
}

int GeneratingFamily::n() const {
  const int np = static_cast<int>(F_.layout().params().size());
  return z() ? np - 1 : np;
}

GeneratingFamily build_versal(const CornerPoly& f, Mode mode, Kind kind, const std::string& prefix) {
  require_germ_layout(f, "build_versal");
  if (mode == Mode::R) mode = Mode::Rplus;
  if (kind == Kind::Legendrian && mode != Mode::K) {
    throw DomainError("Legendrian unfoldings are built in mode K");
  }
  const QuotientReport q = codimension(f, mode);
  if (q.infinite) throw DomainError("build_versal: codimension is infinite");
  if (!q.stabilized) throw DomainError("build_versal: codimension did not stabilize");

  std::vector<Exponent> basis = q.basis;
  std::stable_sort(basis.begin(), basis.end(),
                   [](const Exponent& a, const Exponent& b) { return total_degree(a) > total_degree(b); });
  std::vector<std::string> params;
  for (const auto& e : basis) {
    if (kind == Kind::Legendrian && total_degree(e) == 0) continue;
    params.push_back(prefix + std::to_string(params.size() + 1));
  }
  if (kind == Kind::Legendrian) params.push_back("z");
  const VarLayout L(f.r(), f.k(), params);
  CornerPoly F = relayout(f, L);
  std::size_t next = 0;
  for (const auto& e : basis) {
    Exponent full(L.size(), 0);
    std::copy(e.begin(), e.end(), full.begin());
    if (kind == Kind::Legendrian && total_degree(e) == 0) {
      full[*L.find("z")] = 1;
    } else {
      full[L.param(next++)] = 1;
    }
    F.add_term(full, 1);
  }
  return GeneratingFamily(std::move(F), kind);
}

VersalityReport check_versality(const GeneratingFamily& F, Mode mode) {
  if (mode == Mode::R) mode = Mode::Rplus;
  VersalityReport rep;
  const CornerPoly base = F.base();
  rep.codim = codimension(base, mode);
  if (rep.codim.infinite) {
    rep.versal = Tri::False;
    rep.reasons.push_back("INFINITE: the base germ has infinite codimension");
    return rep;
  }
  if (!rep.codim.stabilized) {
    rep.versal = Tri::Indeterminate;
    rep.reasons.push_back("INDETERMINATE: the codimension did not stabilize below the cap");
    return rep;
  }
  rep.determinacy = determinacy_bound(base, mode == Mode::K ? Mode::K : Mode::R);
  const int nparams = static_cast<int>(F.F().layout().params().size());
  int l = std::max(nparams + 2, rep.codim.l_used);
  if (rep.determinacy) l = std::max(l, *rep.determinacy);
  else rep.reasons.push_back("determinacy bound not found; truncation taken from the codimension certificate");
  rep.l_used = l;

  const TangentModule T = tangent_module(base, mode == Mode::K ? Mode::K : Mode::R, l);
  std::vector<CornerPoly> extras;
  if (mode == Mode::Rplus) extras.push_back(CornerPoly::constant(base.layout(), 1));
  const VarLayout& L = F.F().layout();
  for (std::size_t i = 0; i < L.params().size(); ++i) {
    extras.push_back(restrict_to_germ(derivative(F.F(), L.param(i))));
  }
  const bool ok = spans_jet_space(T, extras);
  rep.versal = ok ? Tri::True : Tri::False;
  if (ok) {
    rep.reasons.push_back("infinitesimally versal: tangent module plus parameter directions span the " +
                          std::to_string(l) + "-jets");
  } else {
    rep.reasons.push_back("not versal: parameter directions miss part of the quotient of codimension " +
                          std::to_string(rep.codim.codim));
  }
  return rep;
}

StabilityReport stability_verdict(const GeneratingFamily& F, Mode mode) {
  StabilityReport rep;
  rep.versality = check_versality(F, mode);
  const CornerPoly base = F.base();
  if (base.r() >= 2) {
    rep.class_label = "UNSUPPORTED";
  } else {
    rep.class_label = classify(base, mode == Mode::K ? Mode::K : Mode::R).verdict;
  }
  rep.stable = rep.versality.versal == Tri::True;
  rep.reasons = rep.versality.reasons;
  if (rep.stable) {
    rep.reasons.push_back("stable map: a versal generating family generates a stable map germ");
  } else if (rep.versality.versal == Tri::False) {
    rep.reasons.push_back("not stable: the generating family is not versal");
  }
  return rep;
}

}  // namespace reticular
