#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reticular/classifier.hpp"
#include "reticular/local_algebra.hpp"
#include "reticular/poly.hpp"

namespace reticular {

enum class Kind { Lagrangian, Legendrian };
std::string to_string(Kind k);

// F on layout (r, k, params). A Legendrian family carries a parameter
// named "z"; every other parameter is an unfolding direction.
class GeneratingFamily {
 public:
  GeneratingFamily() = default;
  GeneratingFamily(CornerPoly F, Kind kind);

  const CornerPoly& F() const { return F_; }
  Kind kind() const { return kind_; }
  int r() const { return F_.r(); }
  int k() const { return F_.k(); }
  // Unfolding parameters, z excluded.
  int n() const;
  std::optional<std::size_t> z() const { return F_.layout().find("z"); }
  CornerPoly base() const { return restrict_to_germ(F_); }

 private:
  CornerPoly F_;
  Kind kind_ = Kind::Lagrangian;
};

// Miniversal unfolding from the quotient basis, parameters named
// <prefix>1.. in descending degree. Legendrian kind maps the constant
// direction of a K basis to z.
GeneratingFamily build_versal(const CornerPoly& f, Mode mode, Kind kind = Kind::Lagrangian,
                              const std::string& prefix = "u");

struct VersalityReport {
  Tri versal = Tri::False;
  QuotientReport codim;
  std::optional<int> determinacy;
  int l_used = 0;
  std::vector<std::string> reasons;
};

VersalityReport check_versality(const GeneratingFamily& F, Mode mode);

struct StabilityReport {
  VersalityReport versality;
  std::string class_label;  // label, NOT_SIMPLE or UNSUPPORTED
  bool stable = false;
  std::vector<std::string> reasons;
};

StabilityReport stability_verdict(const GeneratingFamily& F, Mode mode);

}  // namespace reticular
