#pragma once

#include <map>
#include <string>
#include <vector>

#include "dualdiam/tri.hpp"

namespace dd {

enum class Rel { eq, le, ge };

struct Claim {
  std::string quantity;
  Rel rel = Rel::eq;
  long long expected = 0;
  long long measured = 0;
  bool holds() const;
};

struct GadgetOutput {
  Polygon polygon;
  std::vector<std::string> labels;  // one name per vertex
  std::map<std::string, Triangulation> reference_triangulations;
  std::vector<Claim> claims;
  std::vector<Edge> separators;  // designed unavoidable diagonals (minears, maxlog)

  int vertex(const std::string& label) const;
};

// All generators verify their claims and throw Error("defect") on any mismatch.
GadgetOutput gen_ears_gadget(int k);
GadgetOutput gen_concat_gadget(int k, int c);
GadgetOutput gen_minears_gadget(int k, int copies, int pad = -1);  // pad < 0 means 2k
GadgetOutput gen_maxlog_polygon(int depth);

// Faces of the polygon cut along the given diagonals, as vertex cycles.
std::vector<std::vector<int>> partition_faces(const Polygon& poly, const std::vector<Edge>& diagonals);

}  // namespace dd
