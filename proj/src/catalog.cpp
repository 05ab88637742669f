#include "reticular/catalog.hpp"

#include <stdexcept>

#include "reticular/parse.hpp"

namespace reticular {

namespace {

struct Row {
  const char* key;
  const char* class_label;
  Kind kind;
  int r, k, n;
  const char* family;
  const char* printed;
  const char* note;
};

constexpr Kind Lag = Kind::Lagrangian;
constexpr Kind Leg = Kind::Legendrian;

// Families use the germ grammar: x1 for x, y1, y2 for y_1, y_2.
const Row kRows[] = {
    {"A2", "A2", Lag, 0, 1, 1, "y1^3 + q1*y1", "A_2:F(y_1,q_1)=y_1^3+q_1y_1", ""},
    {"A3+", "A3+", Lag, 0, 1, 2, "y1^4 + q1*y1^2 + q2*y1", "A^\\pm_3:F(y_1,q_1,q_2)=\\pm y_1^4+q_1y_1^2+q_2y_1", ""},
    {"A3-", "A3-", Lag, 0, 1, 2, "-y1^4 + q1*y1^2 + q2*y1", "A^\\pm_3:F(y_1,q_1,q_2)=\\pm y_1^4+q_1y_1^2+q_2y_1", ""},
    {"A4", "A4", Lag, 0, 1, 3, "y1^5 + q1*y1^3 + q2*y1^2 + q3*y1",
     "A_4:F(y_1,q_1,q_2,q_3)= y_1^5+q_1y_1^3+q_2y_1^2+q_3y_1", ""},
    {"A5+", "A5+", Lag, 0, 1, 4, "y1^6 + q1*y1^4 + q2*y1^3 + q3*y1^2 + q4*y1",
     "A^\\pm_5:F(y_1,q_1,q_2,q_3,q_4)= \\pm y_1^6+q_1y_1^4+q_2y_1^3+q_3y_1^2+q_4y_1", ""},
    {"A5-", "A5-", Lag, 0, 1, 4, "-y1^6 + q1*y1^4 + q2*y1^3 + q3*y1^2 + q4*y1",
     "A^\\pm_5:F(y_1,q_1,q_2,q_3,q_4)= \\pm y_1^6+q_1y_1^4+q_2y_1^3+q_3y_1^2+q_4y_1", ""},
    {"A6", "A6", Lag, 0, 1, 5, "y1^7 + q1*y1^5 + q2*y1^4 + q3*y1^3 + q4*y1^2 + q5*y1",
     "A_6:F(y_1,q_1,q_2,q_3,q_4,q_5)= y_1^7+q_1y_1^5+q_2y_1^4+q_3y_1^3+q_4y_1^2+q_5y_1", ""},
    {"D4+", "D4+", Lag, 0, 2, 3, "y1^2*y2 + y2^3 + q1*y2^2 + q2*y2 + q3*y1",
     "D^\\pm_4:F(y_1,y_2,q_1,q_2,q_3)=y_1^2y_2\\pm y_2^3+q_1y_2^2+q_2y_2+q_3y_1", ""},
    {"D4-", "D4-", Lag, 0, 2, 3, "y1^2*y2 - y2^3 + q1*y2^2 + q2*y2 + q3*y1",
     "D^\\pm_4:F(y_1,y_2,q_1,q_2,q_3)=y_1^2y_2\\pm y_2^3+q_1y_2^2+q_2y_2+q_3y_1", ""},
    {"D5+", "D5+", Lag, 0, 2, 4, "y1^2*y2 + y2^4 + q1*y2^3 + q2*y2^2 + q3*y2 + q4*y1",
     "D^\\pm_5:F(y_1,y_2,q_1,q_2,q_3,q_4)=y_1^2y_2\\pm y_2^4+q_1y_2^3+q_2y_2^2+q_3y_2+q_4y_1", ""},
    {"D5-", "D5-", Lag, 0, 2, 4, "y1^2*y2 - y2^4 + q1*y2^3 + q2*y2^2 + q3*y2 + q4*y1",
     "D^\\pm_5:F(y_1,y_2,q_1,q_2,q_3,q_4)=y_1^2y_2\\pm y_2^4+q_1y_2^3+q_2y_2^2+q_3y_2+q_4y_1", ""},
    {"D6+", "D6+", Lag, 0, 2, 5, "y1^2*y2 + y2^5 + q1*y2^4 + q2*y2^3 + q3*y2^2 + q4*y2 + q5*y1",
     "D^\\pm_6:F(y_1,y_2,q_1,q_2,q_3,q_4,q_5)=y_1^2y_2\\pm y_2^5+q_1y_2^4+q_2y_2^3+q_3y_2^2+q_4y_2+q_5y_1", ""},
    {"D6-", "D6-", Lag, 0, 2, 5, "y1^2*y2 - y2^5 + q1*y2^4 + q2*y2^3 + q3*y2^2 + q4*y2 + q5*y1",
     "D^\\pm_6:F(y_1,y_2,q_1,q_2,q_3,q_4,q_5)=y_1^2y_2\\pm y_2^5+q_1y_2^4+q_2y_2^3+q_3y_2^2+q_4y_2+q_5y_1", ""},
    {"E6+", "E6+", Lag, 0, 2, 5, "y1^3 + y2^4 + q1*y1*y2^2 + q2*y1*y2 + q3*y2^2 + q4*y1 + q5*y2",
     "E^\\pm_6:F(y_1,y_2,q_1,q_2,q_3,q_4,q_5)=y_1^3\\pm y_2^4+q_1y_1y_2^2+q_2y_1y_2+q_3y_2^2+q_4y_1+q_5y_2", ""},
    {"E6-", "E6-", Lag, 0, 2, 5, "y1^3 - y2^4 + q1*y1*y2^2 + q2*y1*y2 + q3*y2^2 + q4*y1 + q5*y2",
     "E^\\pm_6:F(y_1,y_2,q_1,q_2,q_3,q_4,q_5)=y_1^3\\pm y_2^4+q_1y_1y_2^2+q_2y_1y_2+q_3y_2^2+q_4y_1+q_5y_2", ""},
    {"B2+", "B2+", Lag, 1, 0, 1, "x1^2 + q1*x1", "B^\\pm_2:F(x,q_1)=\\pm x^2+q_1x", ""},
    {"B2-", "B2-", Lag, 1, 0, 1, "-x1^2 + q1*x1", "B^\\pm_2:F(x,q_1)=\\pm x^2+q_1x", ""},
    {"B3+", "B3+", Lag, 1, 0, 2, "x1^3 + q1*x1^2 + q2*x1", "B^\\pm_3:F(x,q_1,q_2)=\\pm x^3+q_1x^2+q_2x", ""},
    {"B3-", "B3-", Lag, 1, 0, 2, "-x1^3 + q1*x1^2 + q2*x1", "B^\\pm_3:F(x,q_1,q_2)=\\pm x^3+q_1x^2+q_2x", ""},
    {"B4+", "B4+", Lag, 1, 0, 3, "x1^4 + q1*x1^3 + q2*x1^2 + q3*x1",
     "B^\\pm_4:F(x,q_1,q_2,q_3)=\\pm x^4+q_1x^3+q_2x^2+q_1x", "printed q_1x read as q_3x"},
    {"B4-", "B4-", Lag, 1, 0, 3, "-x1^4 + q1*x1^3 + q2*x1^2 + q3*x1",
     "B^\\pm_4:F(x,q_1,q_2,q_3)=\\pm x^4+q_1x^3+q_2x^2+q_1x", "printed q_1x read as q_3x"},
    {"C3+", "C3+", Lag, 1, 1, 2, "x1*y1 + y1^3 + q1*y1^2 + q2*y1",
     "C^\\pm_3:F(x,y,q_1,q_2)=\\pm xy+y^3+q_1y^2+q_2y", ""},
    {"C3-", "C3-", Lag, 1, 1, 2, "-x1*y1 + y1^3 + q1*y1^2 + q2*y1",
     "C^\\pm_3:F(x,y,q_1,q_2)=\\pm xy+y^3+q_1y^2+q_2y", ""},
    {"C4+", "C4+", Lag, 1, 1, 3, "x1*y1 + y1^4 + q1*y1^3 + q2*y1^2 + q3*y1",
     "C^\\pm_4:F(x,y,q_1,q_2,q_3)=\\pm xy+y^4+q_1y^3+q_2y^2+q_3y", ""},
    {"C4-", "C4-", Lag, 1, 1, 3, "x1*y1 - y1^4 + q1*y1^3 + q2*y1^2 + q3*y1",
     "C^\\pm_4:F(x,y,q_1,q_2,q_3)=\\pm xy+y^4+q_1y^3+q_2y^2+q_3y",
     "printed -xy+y^4 is C4+ after y -> -y; sign moved to y^4"},
    {"F4+", "F4+", Lag, 1, 1, 3, "x1^2 + y1^3 + q1*x1*y1 + q2*x1 + q3*y1",
     "F^\\pm_4:F(x,y,q_1,q_2,q_3)=\\pm x^2+y^3+q_1xy+q_2x+q_3y", ""},
    {"F4-", "F4-", Lag, 1, 1, 3, "-x1^2 + y1^3 + q1*x1*y1 + q2*x1 + q3*y1",
     "F^\\pm_4:F(x,y,q_1,q_2,q_3)=\\pm x^2+y^3+q_1xy+q_2x+q_3y", ""},

    {"A1", "A1", Leg, 0, 1, 0, "y1^2 + z", "A_2:F(y_1,z)=y_1^2+z", "printed label A_2 read as A_1"},
    {"A2", "A2", Leg, 0, 1, 1, "y1^3 + q1*y1 + z", "A_2:F(y_1,q_1,z)=y_1^3+q_1y_1+z", ""},
    {"A3", "A3", Leg, 0, 1, 2, "y1^4 + q1*y1^2 + q2*y1 + z", "A_3:F(y_1,q_1,q_2,z)= y_1^4+q_1y_1^2+q_2y_1+z", ""},
    {"A4", "A4", Leg, 0, 1, 3, "y1^5 + q1*y1^3 + q2*y1^2 + q3*y1 + z",
     "A_4:F(y_1,q_1,q_2,q_3)= y_1^5+q_1y_1^3+q_2y_1^2+q_3y_1+z", ""},
    {"A5", "A5", Leg, 0, 1, 4, "y1^6 + q1*y1^4 + q2*y1^3 + q3*y1^2 + q4*y1 + z",
     "A_5:F(y_1,q_1,q_2,q_3,q_4)= y_1^6+q_1y_1^4+q_2y_1^3+q_3y_1^2+q_4y_1+z", ""},
    {"A6", "A6", Leg, 0, 1, 5, "y1^7 + q1*y1^5 + q2*y1^4 + q3*y1^3 + q4*y1^2 + q5*y1 + z",
     "A_6:F(y_1,q_1,q_2,q_3,q_4,q_5,z)= y_1^7+q_1y_1^5+q_2y_1^4+q_3y_1^3+q_4y_1^2+q_5y_1+z", ""},
    {"D4+", "D4+", Leg, 0, 2, 3, "y1^2*y2 + y2^3 + q1*y2^2 + q2*y2 + q3*y1 + z",
     "D^\\pm_4:F(y_1,y_2,q_1,q_2,q_3,z)=y_1^2y_2\\pm y_2^3+q_1y_2^2+q_2y_2+q_3y_1+z", ""},
    {"D4-", "D4-", Leg, 0, 2, 3, "y1^2*y2 - y2^3 + q1*y2^2 + q2*y2 + q3*y1 + z",
     "D^\\pm_4:F(y_1,y_2,q_1,q_2,q_3,z)=y_1^2y_2\\pm y_2^3+q_1y_2^2+q_2y_2+q_3y_1+z", ""},
    {"D5", "D5", Leg, 0, 2, 4, "y1^2*y2 + y2^4 + q1*y2^3 + q2*y2^2 + q3*y2 + q4*y1 + z",
     "D_5:F(y_1,y_2,q_1,q_2,q_3,q_4,z)=y_1^2y_2+ y_2^4+q_1y_2^3+q_2y_2^2+q_3y_2+q_4y_1+z", ""},
    {"D6+", "D6+", Leg, 0, 2, 5, "y1^2*y2 + y2^5 + q1*y2^4 + q2*y2^3 + q3*y2^2 + q4*y2 + q5*y1 + z",
     "D^\\pm_6:F(y_1,y_2,q_1,q_2,q_3,q_4,q_5,z)=y_1^2y_2\\pm y_2^5+q_1y_2^4+q_2y_2^3+q_3y_2^2+q_4y_2+q_5y_1+z", ""},
    {"D6-", "D6-", Leg, 0, 2, 5, "y1^2*y2 - y2^5 + q1*y2^4 + q2*y2^3 + q3*y2^2 + q4*y2 + q5*y1 + z",
     "D^\\pm_6:F(y_1,y_2,q_1,q_2,q_3,q_4,q_5,z)=y_1^2y_2\\pm y_2^5+q_1y_2^4+q_2y_2^3+q_3y_2^2+q_4y_2+q_5y_1+z", ""},
    {"E6", "E6", Leg, 0, 2, 5, "y1^3 + y2^4 + q1*y1*y2^2 + q2*y1*y2 + q3*y2^2 + q4*y1 + q5*y2 + z",
     "E_6:F(y_1,y_2,q_1,q_2,q_3,q_4,q_5,z)=y_1^3+ y_2^4+q_1y_1y_2^2+q_2y_1y_2+q_3y_2^2+q_4y_1+q_5y_2+z", ""},
    {"B2", "B2", Leg, 1, 0, 1, "x1^2 + q1*x1 + z", "B_2:F(x,q_1,z)= x^2+q_1x+z", ""},
    {"B3", "B3", Leg, 1, 0, 2, "x1^3 + q1*x1^2 + q2*x1 + z", "B_3:F(x,q_1,q_2,z)=x^3+q_1x^2+q_2x+z", ""},
    {"B4", "B4", Leg, 1, 0, 3, "x1^4 + q1*x1^3 + q2*x1^2 + q3*x1 + z",
     "B_4:F(x,q_1,q_2,q_3,z)=x^4+q_1x^3+q_2x^2+q_1x+z", "printed q_1x read as q_3x"},
    {"C3+", "C3e+", Leg, 1, 1, 2, "x1*y1 + y1^3 + q1*y1^2 + q2*y1 + z",
     "C^\\pm_3:F(x,y,q_1,q_2,z)=\\pm xy+y^3+q_1y^2+q_2y+z", ""},
    {"C3-", "C3e-", Leg, 1, 1, 2, "-x1*y1 + y1^3 + q1*y1^2 + q2*y1 + z",
     "C^\\pm_3:F(x,y,q_1,q_2,z)=\\pm xy+y^3+q_1y^2+q_2y+z", ""},
    {"C4", "C4e+", Leg, 1, 1, 3, "x1*y1 + y1^4 + q1*y1^3 + q2*y1^2 + q3*y1 + z",
     "C_4:F(x,y,q_1,q_2,q_3,z)=xy+y^4+q_1y^3+q_2y^2+q_3y+z", ""},
    {"F4", "F4", Leg, 1, 1, 3, "x1^2 + y1^3 + q1*x1*y1 + q2*x1 + q3*y1 + z",
     "F_4:F(x,y,q_1,q_2,q_3,z)=x^2+y^3+q_1xy+q_2x+q_3y+z", ""},
};

CatalogEntry build(const Row& row) {
  CatalogEntry e;
  e.key = row.key;
  e.class_label = row.class_label;
  e.printed_label = row.printed;
  e.kind = row.kind;
  e.mode = row.kind == Kind::Lagrangian ? Mode::Rplus : Mode::K;
  e.r = row.r;
  e.k = row.k;
  e.n = row.n;
  e.family_text = row.family;
  e.note = row.note;
  std::vector<std::string> params;
  for (int i = 1; i <= row.n; ++i) params.push_back("q" + std::to_string(i));
  if (row.kind == Kind::Legendrian) params.push_back("z");
  e.family = GeneratingFamily(parse_poly(row.family, row.r, row.k, params), row.kind);
  e.germ = e.family.base();
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const Row& row : kRows) out.push_back(build(row));
    return out;
  }();
  return entries;
}

std::optional<CatalogEntry> catalog_find(const std::string& key, Kind kind) {
  for (const auto& e : catalog()) {
    if (e.kind == kind && e.key == key) return e;
  }
  return std::nullopt;
}

const CatalogEntry& catalog_get(const std::string& key, Kind kind) {
  for (const auto& e : catalog()) {
    if (e.kind == kind && e.key == key) return e;
  }
  throw std::out_of_range("no " + to_string(kind) + " catalog entry '" + key + "'");
}

std::vector<CatalogEntry> catalog_list(Kind kind, std::optional<int> r, int n_max) {
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog()) {
    if (e.kind != kind || e.n > n_max) continue;
    if (r && e.r != *r) continue;
    out.push_back(e);
  }
  return out;
}

}  // namespace reticular
