#pragma once

#include "dtd/pathword.hpp"
#include "dtd/qpoly.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dtd {

enum class WeightKind { I, II };

struct IncidenceMatrix {
    std::vector<PathWord> basis;
    std::vector<std::vector<PolyQ>> entries;  // [row lambda][column mu]

    int size() const { return static_cast<int>(basis.size()); }
    const PolyQ& at(int r, int c) const { return entries[r][c]; }
    int index_of(const PathWord& w) const;
    const PolyQ& at(const PathWord& lam, const PathWord& mu) const { return at(index_of(lam), index_of(mu)); }
    bool is_identity() const;
};

IncidenceMatrix build(int n, int eps, WeightKind kind, int workers = 1);

// Exact inverse of a lower unitriangular matrix; the product check is asserted.
IncidenceMatrix invert(const IncidenceMatrix& m);

IncidenceMatrix multiply(const IncidenceMatrix& a, const IncidenceMatrix& b);

nlohmann::json to_json(const IncidenceMatrix& m);
std::string to_csv(const IncidenceMatrix& m);
std::string to_latex(const IncidenceMatrix& m);
std::string to_text(const IncidenceMatrix& m);

}  // namespace dtd
