#pragma once

#include <optional>
#include <vector>

#include "dualdiam/tri.hpp"

namespace dd {

// V[i][j]: (i,j) is a boundary edge (the closing pair included) or a diagonal.
struct SideMatrix {
  int n = 0;
  std::vector<char> v;
  bool operator()(int i, int j) const { return v[static_cast<std::size_t>(i) * n + j] != 0; }
};

SideMatrix side_matrix(const Polygon& poly);

inline constexpr int kInf = 1 << 29;
inline constexpr int kNegInf = -kInf;

struct DPTable {
  int n = 0;
  int d = 0;
  std::vector<int> M;       // kInf / kNegInf sentinels
  std::vector<int> choice;  // apex l, or -1
  int m(int i, int j) const { return M[static_cast<std::size_t>(i) * n + j]; }
  int apex(int i, int j) const { return choice[static_cast<std::size_t>(i) * n + j]; }
};

DPTable min_table(const SideMatrix& V, int d);
DPTable max_table(const SideMatrix& V, int d);

// Follows the choice matrix from (0, n-1).
std::vector<Tri> trace(const DPTable& t);

std::optional<Triangulation> feasible_min(const Polygon& poly, int d);
// A triangulation with dual diameter at least d, if one exists.
std::optional<Triangulation> feasible_max(const Polygon& poly, int d);

struct DtResult {
  int d = 0;
  Triangulation t;
};

DtResult min_dt(const Polygon& poly);
DtResult max_dt(const Polygon& poly);
DtResult min_dt(const Polygon& poly, const SideMatrix& V);
DtResult max_dt(const Polygon& poly, const SideMatrix& V);

enum class EarMode { min, max };

struct EarResult {
  int count = 0;
  Triangulation t;
};

EarResult extreme_ears(const Polygon& poly, EarMode mode);
EarResult extreme_ears(const Polygon& poly, const SideMatrix& V, EarMode mode);

}  // namespace dd
