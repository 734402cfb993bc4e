#include "dtd/verify.hpp"

#include "dtd/incidence.hpp"
#include "dtd/linkflip.hpp"
#include "dtd/parallel.hpp"
#include "dtd/reference.hpp"
#include "dtd/tiling.hpp"
#include "dtd/treeform.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace dtd {

void CheckResult::fail(const std::string& msg) {
    pass = false;
    if (failures.size() < 10) failures.push_back(msg);
}

nlohmann::json CheckResult::to_json() const {
    return {{"number", number}, {"name", name},   {"description", description}, {"pass", pass},
            {"cases", cases},   {"failures", failures}, {"seconds", seconds}};
}

namespace {

struct Timed {
    CheckResult& r;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    explicit Timed(CheckResult& res) : r(res) {}
    ~Timed() { r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

CheckResult make(int n, const char* name, const char* desc) {
    CheckResult r;
    r.number = n;
    r.name = name;
    r.description = desc;
    return r;
}

// Runs body(i) for each i; each call returns its own failure list and case count,
// merged afterwards in index order.
struct Partial {
    long cases = 0;
    std::vector<std::string> failures;
};

void run_parallel(CheckResult& r, size_t n, int workers, const std::function<Partial(size_t)>& body) {
    auto parts = parallel_map<Partial>(n, workers, body);
    for (auto& p : parts) {
        r.cases += p.cases;
        for (auto& f : p.failures) r.fail(f);
    }
}

std::string mismatch(const std::string& what, const std::string& lam, const std::string& mu, const PolyQ& got,
                     const PolyQ& want) {
    std::string s = what + " lambda=" + lam;
    if (!mu.empty()) s += " mu=" + mu;
    return s + ": got " + got.str() + ", expected " + want.str();
}

std::vector<PathWord> words_up_to(int max_len, int min_len = 1) {
    std::vector<PathWord> out;
    for (int L = min_len; L <= max_len; ++L)
        for (auto& w : enumerate_all(L)) out.push_back(w);
    return out;
}

}  // namespace

CheckResult check_golden_matrices() {
    auto r = make(1, "golden-matrices", "n=4, eps=0: M, N and their inverses equal the reference 8x8 matrices");
    Timed t(r);
    auto m = build(4, 0, WeightKind::I), n = build(4, 0, WeightKind::II);
    if (m.basis != golden_basis()) r.fail("basis order differs from the reference one");
    const std::pair<const char*, IncidenceMatrix> all[] = {{"M", m}, {"Minv", invert(m)}, {"N", n}, {"Ninv", invert(n)}};
    for (auto& [nm, mat] : all) {
        auto g = golden_matrix(nm);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                ++r.cases;
                if (!(mat.at(i, j) == g[i][j]))
                    r.fail(mismatch(std::string(nm) + " entry", mat.basis[i].str(), mat.basis[j].str(), mat.at(i, j), g[i][j]));
            }
    }
    return r;
}

CheckResult check_matrix_bridge(int min_n, int max_n, int workers) {
    auto r = make(2, "matrix-tiling-bridge",
                  "inclusive art/tiles generating functions equal M^-1/N^-1; signed exclusive weights equal M/N");
    Timed t(r);
    for (int n = min_n; n <= max_n; ++n)
        for (int e : {0, 1}) {
            auto m = build(n, e, WeightKind::I, workers), nn = build(n, e, WeightKind::II, workers);
            auto mi = invert(m), ni = invert(nn);
            const int k = m.size();
            run_parallel(r, static_cast<size_t>(k) * k, workers, [&](size_t idx) {
                Partial p;
                int i = static_cast<int>(idx) / k, j = static_cast<int>(idx) % k;
                const auto &lam = m.basis[i], &mu = m.basis[j];
                ++p.cases;
                if (!is_above(mu, lam)) {
                    if (!m.at(i, j).is_zero() || !mi.at(i, j).is_zero() || !nn.at(i, j).is_zero() || !ni.at(i, j).is_zero())
                        p.failures.push_back("nonzero entry for incomparable pair " + lam.str() + ", " + mu.str());
                    return p;
                }
                const struct {
                    const char* what;
                    PolyQ got, want;
                } cmp[] = {
                    {"inclusive art vs M^-1", genfun_pair(lam, mu, RegionType::D, TilingClass::inclusive, Statistic::art), mi.at(i, j)},
                    {"inclusive tiles vs N^-1", genfun_pair(lam, mu, RegionType::D, TilingClass::inclusive, Statistic::tiles), ni.at(i, j)},
                    {"signed exclusive art vs M", signed_exclusive_weight(lam, mu, RegionType::D, Statistic::art), m.at(i, j)},
                    {"signed exclusive tiles vs N", signed_exclusive_weight(lam, mu, RegionType::D, Statistic::tiles), nn.at(i, j)},
                };
                for (auto& c : cmp)
                    if (!(c.got == c.want)) p.failures.push_back(mismatch(c.what, lam.str(), mu.str(), c.got, c.want));
                return p;
            });
        }
    return r;
}

CheckResult check_ddu_count() {
    auto r = make(3, "ddu-count", "P^D of DDUUDD: 36 tilings, six of them with art 5");
    Timed t(r);
    auto p = genfun_lower(PathWord::parse("DDUUDD"), RegionType::D, Statistic::art);
    r.cases = 1;
    if (p.eval_at_one() != 36) r.fail("value at q=1 is " + p.eval_at_one().str() + ", expected 36");
    if (p.coefficient(5) != 6) r.fail("coefficient of q^5 is " + p.coefficient(5).str() + ", expected 6");
    return r;
}

CheckResult check_type_d_vs_b(int max_len, int workers) {
    auto r = make(4, "type-d-vs-b",
                  "P^D(lambda) = P^B(lambda~) and the projection is a statistic-preserving bijection of tilings");
    Timed t(r);
    auto ws = words_up_to(max_len);
    run_parallel(r, ws.size(), workers, [&](size_t i) {
        Partial p;
        const PathWord& lam = ws[i];
        const PathWord lt = truncate_last(lam);
        const int eps = type_d_sign(lam);
        ++p.cases;
        auto pd = genfun_lower(lam, RegionType::D), pb = genfun_lower(lt, RegionType::B);
        if (!(pd == pb)) p.failures.push_back(mismatch("P^D vs P^B", lam.str(), "", pd, pb));

        std::set<std::string> hit;
        for (auto& mu : uppers(lam, RegionType::D)) {
            const PathWord mt = truncate_last(mu);
            hit.insert(mt.str());
            for (auto cls : {TilingClass::inclusive, TilingClass::exclusive}) {
                auto td = enumerate_tilings(lam, mu, RegionType::D, cls);
                auto tb = enumerate_tilings(lt, mt, RegionType::B, cls);
                std::vector<std::vector<Tile>> img, target;
                for (auto& d : td) {
                    auto b = project_to_type_b(d);
                    if (b.art() != d.art() || b.tile_count() != d.tile_count())
                        p.failures.push_back("projection changes statistics for " + lam.str() + "/" + mu.str());
                    if (!(lift_to_type_d(b, eps).tiles == d.tiles))
                        p.failures.push_back("lift does not invert the projection for " + lam.str() + "/" + mu.str());
                    if (!is_cover_inclusive(*b.region, b.tiles) && cls == TilingClass::inclusive)
                        p.failures.push_back("projected tiling is not cover-inclusive for " + lam.str() + "/" + mu.str());
                    img.push_back(b.tiles);
                }
                for (auto& b : tb) target.push_back(b.tiles);
                std::sort(img.begin(), img.end());
                std::sort(target.begin(), target.end());
                if (std::adjacent_find(img.begin(), img.end()) != img.end())
                    p.failures.push_back("projection is not injective on " + lam.str() + "/" + mu.str());
                if (img != target)
                    p.failures.push_back(std::string("projection misses type B tilings (") + name(cls) + ") on " +
                                         lam.str() + "/" + mu.str());
            }
        }
        for (auto& mb : uppers(lt, RegionType::B))
            if (!hit.count(mb.str())) p.failures.push_back("type B upper path " + mb.str() + " has no type D preimage");
        return p;
    });
    return r;
}

CheckResult check_p_mn(int max_total, int workers) {
    auto r = make(5, "p-equals-qb", "P^D(D^N U^M) = Q^B(M-1,N) for M >= 1");
    Timed t(r);
    const PolyQ q = PolyQ::q();
    if (!(q_b(0, 3) == (1 + q) * (1 + q * q) * (1 + q * q * q))) r.fail("Q^B(0,3) differs from (1+q)(1+q^2)(1+q^3)");
    if (!(q_b(1, 2) == (1 + q) * pow(1 + q * q, 2))) r.fail("Q^B(1,2) differs from (1+q)(1+q^2)^2");
    std::vector<std::pair<int, int>> mn;
    for (int m = 1; m <= max_total; ++m)
        for (int n = 0; m + n <= max_total; ++n) mn.push_back({m, n});
    run_parallel(r, mn.size(), workers, [&](size_t i) {
        Partial p;
        auto [m, n] = mn[i];
        auto lam = lambda_mn(m, n);
        auto got = genfun_lower(lam, RegionType::D);
        auto want = q_b(m - 1, n);
        ++p.cases;
        if (!(got == want)) p.failures.push_back(mismatch("P(M,N)", lam.str(), "", got, want));
        if (!(p_mn(m, n) == got)) p.failures.push_back(mismatch("closed form P(M,N)", lam.str(), "", p_mn(m, n), got));
        return p;
    });
    return r;
}

CheckResult check_kenyon_wilson(int max_size, int workers) {
    auto r = make(6, "kenyon-wilson", "[n]!/prod [l(c)] = P^A(lambda) for Dyck lambda");
    Timed t(r);
    std::vector<PathWord> ws;
    for (int n = 0; n <= max_size; ++n)
        for (auto& w : enumerate_dyck(n)) ws.push_back(w);
    run_parallel(r, ws.size(), workers, [&](size_t i) {
        Partial p;
        ++p.cases;
        auto got = kw_type_a(ws[i]), want = genfun_lower(ws[i], RegionType::A);
        if (!(got == want)) p.failures.push_back(mismatch("Kenyon-Wilson", ws[i].str(), "", got, want));
        return p;
    });
    return r;
}

CheckResult check_q_b(int max_total, int workers) {
    auto r = make(7, "qb-product", "Q^B(M,N) product formula equals P^B(D^N U^M)");
    Timed t(r);
    std::vector<std::pair<int, int>> mn;
    for (int m = 0; m <= max_total; ++m)
        for (int n = 0; m + n <= max_total; ++n) mn.push_back({m, n});
    run_parallel(r, mn.size(), workers, [&](size_t i) {
        Partial p;
        auto [m, n] = mn[i];
        auto lam = lambda_mn(m, n);
        ++p.cases;
        auto got = q_b(m, n), want = genfun_lower(lam, RegionType::B);
        if (!(got == want)) p.failures.push_back(mismatch("Q^B", lam.str(), "", got, want));
        return p;
    });
    return r;
}

CheckResult check_omega(int max_len, int workers) {
    auto r = make(8, "omega-tree", "omega(A(lambda)) = P^D(lambda); omega(A(DUUDUU)) = [3][6]");
    Timed t(r);
    {
        auto got = omega(build_tree(PathWord::parse("DUUDUU")));
        auto want = q_int(3) * q_int(6);
        if (!(got == want)) r.fail(mismatch("omega", "DUUDUU", "", got, want));
    }
    auto ws = words_up_to(max_len, 0);
    run_parallel(r, ws.size(), workers, [&](size_t i) {
        Partial p;
        ++p.cases;
        try {
            auto got = omega(build_tree(ws[i]));
            auto want = ws[i].empty() ? PolyQ(1) : genfun_lower(ws[i], RegionType::D);
            if (!(got == want)) p.failures.push_back(mismatch("omega", ws[i].str(), "", got, want));
            if (!ws[i].empty() && !(factorized_p_d(ws[i]) == want))
                p.failures.push_back(mismatch("factorized P^D", ws[i].str(), "", factorized_p_d(ws[i]), want));
        } catch (const std::exception& e) {
            p.failures.push_back(ws[i].str() + ": " + e.what());
        }
        return p;
    });
    return r;
}

CheckResult check_tiles_statistic(int max_len, int workers) {
    auto r = make(9, "tiles-statistic", "cover-exclusive tiles generating functions: P~^D(mu) = P~^B(mu~)");
    Timed t(r);
    auto ws = words_up_to(max_len);
    run_parallel(r, ws.size(), workers, [&](size_t i) {
        Partial p;
        ++p.cases;
        auto got = genfun_upper(ws[i], RegionType::D), want = genfun_upper(truncate_last(ws[i]), RegionType::B);
        if (!(got == want)) p.failures.push_back(mismatch("P~^D vs P~^B", ws[i].str(), "", got, want));
        return p;
    });
    return r;
}

CheckResult check_area_remark() {
    auto r = make(10, "area-remark", "area generating function of DDUU/UUUU is 2q^5");
    Timed t(r);
    r.cases = 1;
    auto got = genfun_pair(PathWord::parse("DDUU"), PathWord::parse("UUUU"), RegionType::D, TilingClass::inclusive,
                           Statistic::area);
    if (!(got == PolyQ::monomial(2, 5))) r.fail(mismatch("area", "DDUU", "UUUU", got, PolyQ::monomial(2, 5)));
    return r;
}

CheckResult check_positivity(int max_n, int workers) {
    auto r = make(11, "positivity", "entries of M^-1 and N^-1 have nonnegative coefficients");
    Timed t(r);
    for (int n = 1; n <= max_n; ++n)
        for (int e : {0, 1})
            for (auto k : {WeightKind::I, WeightKind::II}) {
                auto inv = invert(build(n, e, k, workers));
                for (int i = 0; i < inv.size(); ++i)
                    for (int j = 0; j < inv.size(); ++j) {
                        ++r.cases;
                        if (!inv.at(i, j).nonnegative())
                            r.fail(std::string(k == WeightKind::I ? "M^-1" : "N^-1") + " entry " + inv.basis[i].str() + "," +
                                   inv.basis[j].str() + " = " + inv.at(i, j).str());
                    }
            }
    return r;
}

CheckResult check_structure(const StructureSizes& s, int workers) {
    auto r = make(12, "structure",
                  "exact cover, exclusive uniqueness, flip injectivity, sign preservation, link patterns, "
                  "basis partition, triangularity, omega confluence");
    Timed t(r);

    // exact cover and at most one cover-exclusive tiling, all three region types
    auto ws = words_up_to(s.tiling_n);
    run_parallel(r, ws.size(), workers, [&](size_t i) {
        Partial p;
        const PathWord& lam = ws[i];
        for (auto type : {RegionType::D, RegionType::B, RegionType::A}) {
            if (type == RegionType::A && !classify(lam).is_dyck) continue;
            for (auto& mu : uppers(lam, type)) {
                auto reg = build_region(lam, mu, type);
                for (auto cls : {TilingClass::inclusive, TilingClass::exclusive}) {
                    auto ts = enumerate_tilings(reg, cls);
                    ++p.cases;
                    if (cls == TilingClass::exclusive && ts.size() > 1)
                        p.failures.push_back(std::string("more than one cover-exclusive tiling of type ") + name(type) +
                                             " for " + lam.str() + "/" + mu.str());
                    for (auto& til : ts) {
                        std::map<Cell, int> mult;
                        for (auto& tile : til.tiles)
                            for (auto& c : tile.cells()) ++mult[c];
                        bool ok = static_cast<int>(mult.size()) == reg->size();
                        for (auto& [c, k] : mult) ok = ok && k == 1 && reg->find(c) >= 0;
                        if (!ok) p.failures.push_back("cell multiplicity violated on " + lam.str() + "/" + mu.str());
                        if ((til.area() + til.tile_count()) % 2)
                            p.failures.push_back("half-integral art on " + lam.str() + "/" + mu.str());
                    }
                }
            }
        }
        return p;
    });

    // flips: injective on subsets, downward, sign preserving
    for (auto& w : words_up_to(s.flip_n, 0)) {
        ++r.cases;
        auto fl = all_flips(w);
        std::set<std::string> seen;
        for (auto& f : fl) {
            if (!seen.insert(f.lam.str()).second) r.fail("two flip sets of " + w.str() + " give " + f.lam.str());
            if (!is_above(w, f.lam)) r.fail("flip of " + w.str() + " to " + f.lam.str() + " is not downward");
            if (type_d_sign(w) != type_d_sign(f.lam)) r.fail("flip of " + w.str() + " changes the sign");
        }
    }

    // link patterns: complete, noncrossing, dashed arcs outer
    for (auto& w : words_up_to(s.pattern_n, 0)) {
        ++r.cases;
        auto lp = link_pattern(w);
        std::set<int> used;
        for (auto& a : lp.arcs) {
            used.insert(a.i);
            used.insert(a.j);
            for (auto& b : lp.arcs)
                if (a.i < b.i && b.i < a.j && a.j < b.j) r.fail("crossing arcs in the link pattern of " + w.str());
            if (a.dashed && std::find(lp.outer.begin(), lp.outer.end(), a) == lp.outer.end())
                r.fail("dashed arc not outer in " + w.str());
        }
        if (static_cast<int>(used.size()) != w.length() + lp.prepended) r.fail("unpaired letter in " + w.str());
    }

    // the two signs partition all words
    for (int n = 1; n <= s.partition_n; ++n) {
        ++r.cases;
        auto a = enumerate_type_d(n, 0), b = enumerate_type_d(n, 1);
        if (a.size() + b.size() != (size_t(1) << n)) r.fail("sign classes do not partition words of length " + std::to_string(n));
        std::set<std::string> u;
        for (auto& w : a) u.insert(w.str());
        for (auto& w : b) u.insert(w.str());
        if (u.size() != (size_t(1) << n)) r.fail("sign classes overlap at length " + std::to_string(n));
    }

    // unitriangularity in the lexicographic basis
    for (int n = 1; n <= s.triangular_n; ++n)
        for (int e : {0, 1})
            for (auto k : {WeightKind::I, WeightKind::II}) {
                ++r.cases;
                auto m = build(n, e, k, workers);
                for (int i = 0; i < m.size(); ++i) {
                    if (!(m.at(i, i) == PolyQ(1))) r.fail("diagonal entry is not 1");
                    for (int j = 0; j < m.size(); ++j)
                        if (i != j && !m.at(i, j).is_zero() && !(j < i && is_above(m.basis[j], m.basis[i])))
                            r.fail("entry outside the dominance order at " + m.basis[i].str() + "," + m.basis[j].str());
                }
            }

    // omega does not depend on the order of eligible merges
    auto cw = words_up_to(s.confluence_n, 0);
    run_parallel(r, cw.size(), workers, [&](size_t i) {
        Partial p;
        ++p.cases;
        try {
            auto tree = build_tree(cw[i]);
            auto vals = omega_all_orders(tree);
            if (vals.size() != 1 || !(vals[0] == omega(tree)))
                p.failures.push_back("omega depends on the merge order for " + cw[i].str());
        } catch (const std::exception& e) {
            p.failures.push_back(cw[i].str() + ": " + e.what());
        }
        return p;
    });
    return r;
}

std::vector<CheckResult> run_suite(int max_length, int workers) {
    const int k = max_length;
    StructureSizes s{k, k, k, k, k, k};
    std::vector<CheckResult> out;
    out.push_back(check_golden_matrices());
    out.push_back(check_matrix_bridge(1, k, workers));
    out.push_back(check_ddu_count());
    out.push_back(check_type_d_vs_b(k, workers));
    out.push_back(check_p_mn(k, workers));
    out.push_back(check_kenyon_wilson(k / 2, workers));
    out.push_back(check_q_b(k, workers));
    out.push_back(check_omega(k, workers));
    out.push_back(check_tiles_statistic(k, workers));
    out.push_back(check_area_remark());
    out.push_back(check_positivity(k, workers));
    out.push_back(check_structure(s, workers));
    return out;
}

}  // namespace dtd
