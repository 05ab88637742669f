#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reticular/local_algebra.hpp"
#include "reticular/poly.hpp"

namespace reticular {

class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct SplitReport {
  CornerPoly residual;  // layout (r, corank)
  int quad_rank = 0;
  int positive = 0;
  int negative = 0;
  int truncation = 0;
  std::vector<std::string> change_log;
};

// Splitting lemma in the y-variables, exact up to degree l.
SplitReport split(const CornerPoly& f, int l = 8);

struct GermClass {
  char series = 'A';
  int index = 1;
  int sign = 0;  // +1, -1, or 0 when the label carries no sign
  Mode mode = Mode::R;
  int corank = 0;
  int codim = 0;  // Rplus codimension for R, K codimension for K

  std::string label() const;
  bool operator==(const GermClass& o) const = default;
};

struct ClassifyResult {
  std::optional<GermClass> cls;  // empty: not simple
  std::string verdict;           // label or NOT_SIMPLE
  std::optional<int> determinacy;
  SplitReport split;
  std::vector<std::string> log;
};

// Mode Rplus is treated as R. Throws UnsupportedError for r >= 2.
ClassifyResult classify(const CornerPoly& f, Mode mode);
bool is_simple(const CornerPoly& f, Mode mode);

// Codimension a class must have: Rplus codimension in R mode, K
// codimension in K mode.
int expected_codim(char series, int index, Mode mode);

}  // namespace reticular
