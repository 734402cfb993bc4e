#pragma once

#include "dtd/pathword.hpp"
#include "dtd/qpoly.hpp"

#include <string>
#include <vector>

namespace dtd {

// Reference n = 4, eps = 0 matrices, rows and columns in the order
// UUUU, UUDD, UDUD, UDDU, DUUD, DUDU, DDUU, DDDD.
// name is one of M, Minv, N, Ninv.
std::vector<std::vector<PolyQ>> golden_matrix(const std::string& name);
std::vector<PathWord> golden_basis();

}  // namespace dtd
