#include "dtd/incidence.hpp"

#include "dtd/linkflip.hpp"
#include "dtd/parallel.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace dtd {

int IncidenceMatrix::index_of(const PathWord& w) const {
    for (int i = 0; i < size(); ++i)
        if (basis[i] == w) return i;
    throw DomainError("word " + w.str() + " is not in the basis");
}

bool IncidenceMatrix::is_identity() const {
    for (int r = 0; r < size(); ++r)
        for (int c = 0; c < size(); ++c)
            if (!(entries[r][c] == PolyQ(r == c ? 1 : 0))) return false;
    return true;
}

IncidenceMatrix build(int n, int eps, WeightKind kind, int workers) {
    if (n < 1) throw DomainError("matrix size n must be at least 1");
    IncidenceMatrix m;
    m.basis = enumerate_type_d(n, eps);
    const int k = m.size();
    std::map<std::string, int> pos;
    for (int i = 0; i < k; ++i) pos[m.basis[i].str()] = i;

    auto cols = parallel_map<std::vector<PolyQ>>(static_cast<size_t>(k), workers, [&](size_t c) {
        std::vector<PolyQ> col(static_cast<size_t>(k));
        std::vector<bool> seen(static_cast<size_t>(k), false);
        for (auto& f : all_flips(m.basis[c])) {
            auto it = pos.find(f.lam.str());
            if (it == pos.end())
                throw std::logic_error("flip left the sign class: " + m.basis[c].str() + " -> " + f.lam.str());
            if (seen[it->second])
                throw std::logic_error("two flip sets give the same word " + f.lam.str() + " from " + m.basis[c].str());
            seen[it->second] = true;
            col[it->second] = kind == WeightKind::I ? f.w1 : f.w2;
        }
        return col;
    });
    m.entries.assign(static_cast<size_t>(k), std::vector<PolyQ>(static_cast<size_t>(k)));
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < k; ++r) m.entries[r][c] = cols[c][r];
    return m;
}

IncidenceMatrix multiply(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    if (a.size() != b.size()) throw DomainError("matrix size mismatch");
    IncidenceMatrix r;
    r.basis = a.basis;
    const int k = a.size();
    r.entries.assign(static_cast<size_t>(k), std::vector<PolyQ>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            PolyQ s;
            for (int t = 0; t < k; ++t)
                if (!a.entries[i][t].is_zero() && !b.entries[t][j].is_zero()) s += a.entries[i][t] * b.entries[t][j];
            r.entries[i][j] = s;
        }
    return r;
}

IncidenceMatrix invert(const IncidenceMatrix& m) {
    const int k = m.size();
    for (int i = 0; i < k; ++i) {
        if (!(m.entries[i][i] == PolyQ(1))) throw DomainError("invert: diagonal entry is not 1");
        for (int j = i + 1; j < k; ++j)
            if (!m.entries[i][j].is_zero()) throw DomainError("invert: matrix is not lower triangular");
    }
    IncidenceMatrix x;
    x.basis = m.basis;
    x.entries.assign(static_cast<size_t>(k), std::vector<PolyQ>(static_cast<size_t>(k)));
    for (int j = 0; j < k; ++j) {
        x.entries[j][j] = 1;
        for (int i = j + 1; i < k; ++i) {
            PolyQ s;
            for (int t = j; t < i; ++t)
                if (!m.entries[i][t].is_zero() && !x.entries[t][j].is_zero()) s += m.entries[i][t] * x.entries[t][j];
            x.entries[i][j] = -s;
        }
    }
    if (!multiply(m, x).is_identity()) throw std::logic_error("invert: product check failed");
    return x;
}

nlohmann::json to_json(const IncidenceMatrix& m) {
    nlohmann::json basis = nlohmann::json::array();
    for (auto& w : m.basis) basis.push_back(w.str());
    nlohmann::json rows = nlohmann::json::array();
    for (auto& r : m.entries) {
        nlohmann::json row = nlohmann::json::array();
        for (auto& e : r) row.push_back(e);
        rows.push_back(row);
    }
    return {{"basis", basis}, {"entries", rows}};
}

std::string to_csv(const IncidenceMatrix& m) {
    std::ostringstream os;
    os << "lambda";
    for (auto& w : m.basis) os << ',' << w.str();
    os << '\n';
    for (int r = 0; r < m.size(); ++r) {
        os << m.basis[r].str();
        for (int c = 0; c < m.size(); ++c) os << ",\"" << m.entries[r][c].str() << '"';
        os << '\n';
    }
    return os.str();
}

std::string to_latex(const IncidenceMatrix& m) {
    std::ostringstream os;
    os << "\\begin{pmatrix}\n";
    for (int r = 0; r < m.size(); ++r) {
        for (int c = 0; c < m.size(); ++c) {
            if (c) os << " & ";
            os << m.entries[r][c].latex();
        }
        os << (r + 1 < m.size() ? " \\\\\n" : "\n");
    }
    os << "\\end{pmatrix}\n";
    return os.str();
}

std::string to_text(const IncidenceMatrix& m) {
    std::vector<std::vector<std::string>> cells;
    size_t w = 1;
    for (auto& b : m.basis) w = std::max(w, static_cast<size_t>(b.length()));
    for (auto& r : m.entries) {
        std::vector<std::string> row;
        for (auto& e : r) {
            row.push_back(e.str());
            w = std::max(w, row.back().size());
        }
        cells.push_back(std::move(row));
    }
    std::ostringstream os;
    auto pad = [&](const std::string& s) { return s + std::string(w - s.size() + 2, ' '); };
    os << pad("");
    for (auto& b : m.basis) os << pad(b.str());
    os << '\n';
    for (int r = 0; r < m.size(); ++r) {
        os << pad(m.basis[r].str());
        for (auto& s : cells[r]) os << pad(s);
        os << '\n';
    }
    return os.str();
}

}  // namespace dtd
