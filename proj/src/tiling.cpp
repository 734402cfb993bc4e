#include "dtd/tiling.hpp"

#include "dtd/parallel.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace dtd {

const char* name(RegionType t) {
    switch (t) {
        case RegionType::A: return "A";
        case RegionType::B: return "B";
        case RegionType::D: return "D";
    }
    return "?";
}
const char* name(TilingClass c) { return c == TilingClass::inclusive ? "inclusive" : "exclusive"; }
const char* name(Statistic s) {
    switch (s) {
        case Statistic::art: return "art";
        case Statistic::tiles: return "tiles";
        case Statistic::area: return "area";
    }
    return "?";
}
const char* name(TileKind k) {
    switch (k) {
        case TileKind::dyck: return "dyck";
        case TileKind::ballot_b: return "ballot_b";
        case TileKind::two_by_two: return "two_by_two";
        case TileKind::dyck_d: return "dyck_d";
        case TileKind::ballot_d: return "ballot_d";
    }
    return "?";
}

RegionType parse_region_type(const std::string& s) {
    if (s == "A") return RegionType::A;
    if (s == "B") return RegionType::B;
    if (s == "D") return RegionType::D;
    throw DomainError("unknown region type '" + s + "'");
}
TilingClass parse_tiling_class(const std::string& s) {
    if (s == "inclusive" || s == "I") return TilingClass::inclusive;
    if (s == "exclusive" || s == "II") return TilingClass::exclusive;
    throw DomainError("unknown tiling class '" + s + "'");
}
Statistic parse_statistic(const std::string& s) {
    if (s == "art") return Statistic::art;
    if (s == "tiles") return Statistic::tiles;
    if (s == "area") return Statistic::area;
    throw DomainError("unknown statistic '" + s + "'");
}

Region::Region(const PathWord& lam, const PathWord& mu, RegionType type)
    : type_(type), lam_(lam), mu_(mu), L_(lam.length()), hl_(lam.heights()), hm_(mu.heights()) {
    if (lam.length() != mu.length()) throw DomainError("region: words of different length");
    if (!is_above(mu, lam)) throw DomainError("region: " + mu.str() + " is not above " + lam.str());
    std::set<int> twos;
    if (type == RegionType::D) {
        int e = type_d_sign(lam);
        if (e != type_d_sign(mu)) throw DomainError("region: " + lam.str() + " and " + mu.str() + " have different signs");
        for (int m = -L_ - 4; m <= L_ + 4; ++m)
            if (((m - (L_ + 2 * e + 2)) % 4 + 4) % 4 == 0 && hl_[L_] <= m - 2 && hm_[L_] >= m + 2) twos.insert(m);
    }
    for (int x = 1; x <= last_column(); ++x)
        for (int y = hl_[x] + 1; y + 1 <= hm_[x]; y += 2) {
            cells_.push_back({x, y});
            two_.push_back(type == RegionType::D && x == L_ - 1 && twos.count(y));
        }
    for (int m : twos)
        if (std::find(cells_.begin(), cells_.end(), Cell{L_ - 1, m}) == cells_.end()) {
            cells_.push_back({L_ - 1, m});
            two_.push_back(true);
        }
    std::vector<int> order(cells_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return cells_[a] < cells_[b]; });
    std::vector<Cell> c2;
    std::vector<bool> t2;
    for (int i : order) {
        c2.push_back(cells_[i]);
        t2.push_back(two_[i]);
    }
    cells_ = std::move(c2);
    two_ = std::move(t2);
    if (size() > kMaxCells) throw DomainError("region too large");
    for (int i = 0; i < size(); ++i) index_[{cells_[i].x, cells_[i].y}] = i;
}

int Region::find(int x, int y) const {
    auto it = index_.find({x, y});
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> Region::two_by_two_heights() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (two_[i]) out.push_back(cells_[i].y);
    return out;
}

std::vector<Cell> Region::unit_cells() const {
    std::vector<Cell> out;
    for (int i = 0; i < size(); ++i)
        if (!two_[i]) out.push_back(cells_[i]);
    return out;
}

std::vector<Cell> Tile::cells() const {
    std::vector<Cell> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

int Tile::cell_count() const {
    int n = 0;
    for (auto& p : parts) n += static_cast<int>(p.size());
    return n;
}

int Tiling::area() const {
    int s = 0;
    for (auto& t : tiles) s += t.area;
    return s;
}
int Tiling::tile_count() const {
    int s = 0;
    for (auto& t : tiles) s += t.tiles;
    return s;
}
int Tiling::art() const {
    int a = area() + tile_count();
    if (a % 2) throw std::logic_error("tiling with half-integral art");
    return a / 2;
}
int Tiling::statistic(Statistic s) const {
    switch (s) {
        case Statistic::art: return art();
        case Statistic::tiles: return tile_count();
        case Statistic::area: return area();
    }
    return 0;
}

namespace {

// Ribbons from `start`: each step goes one column right and one row up or
// down, stays at height >= floor and inside the region.
void ribbons(const Region& r, Cell start, int floor, const std::function<void(const std::vector<Cell>&)>& out) {
    std::vector<Cell> path{start};
    std::function<void()> rec = [&] {
        out(path);
        Cell c = path.back();
        if (c.x + 1 > r.last_column()) return;
        for (int dy : {1, -1}) {
            Cell n{c.x + 1, c.y + dy};
            if (n.y < floor || r.find(n) < 0) continue;
            path.push_back(n);
            rec();
            path.pop_back();
        }
    };
    rec();
}

bool all_units(const Region& r, const std::vector<Cell>& cs) {
    for (auto& c : cs) {
        int i = r.find(c);
        if (i < 0 || r.is_two_by_two(i)) return false;
    }
    return true;
}

// Dyck prefixes ending at g: g itself, or a Dyck ribbon of unit cells that starts
// further left at the same height.
std::vector<std::vector<Cell>> prefixes_ending_at(const Region& r, Cell g) {
    std::vector<std::vector<Cell>> out{{g}};
    for (auto& st : r.cells()) {
        if (st.x >= g.x || st.y != g.y) continue;
        ribbons(r, st, g.y, [&](const std::vector<Cell>& rb) {
            if (rb.back() == g && all_units(r, rb)) out.push_back(rb);
        });
    }
    return out;
}

std::vector<Tile> dyck_tiles(const Region& r) {
    std::vector<Tile> out;
    for (int i = 0; i < r.size(); ++i) {
        Cell st = r.cell(i);
        ribbons(r, st, st.y, [&](const std::vector<Cell>& rb) {
            if (rb.back().y != st.y) return;
            // a two-by-two can only be the last cell (it sits in the last column)
            int last = r.find(rb.back());
            Tile t;
            t.parts = {rb};
            t.area = static_cast<int>(rb.size());
            t.tiles = 1;
            if (r.is_two_by_two(last))
                t.kind = rb.size() == 1 ? TileKind::two_by_two : TileKind::dyck_d;
            else
                t.kind = TileKind::dyck;
            out.push_back(std::move(t));
        });
    }
    return out;
}

std::vector<Tile> ballot_tiles(const Region& r) {
    std::vector<Tile> out;
    const bool d = r.type() == RegionType::D;
    auto twos = r.two_by_two_heights();
    auto is_two_height = [&](int m) { return std::find(twos.begin(), twos.end(), m) != twos.end(); };
    for (int gi = 0; gi < r.size(); ++gi) {
        if (r.is_two_by_two(gi)) continue;
        Cell g = r.cell(gi);
        if (g.x >= r.last_column()) continue;
        Cell a0{g.x + 1, g.y + 1}, b0{g.x + 1, g.y - 1};
        if (r.find(a0) < 0 || r.find(b0) < 0) continue;
        auto prefixes = prefixes_ending_at(r, g);
        ribbons(r, a0, g.y + 1, [&](const std::vector<Cell>& a) {
            if (a.back().x != r.last_column()) return;
            const int ya = a.back().y;
            std::vector<Cell> b;
            for (auto& c : a) b.push_back({c.x, c.y - 2});
            if (d) {
                int m;
                if (is_two_height(ya))
                    m = ya;
                else if (is_two_height(ya - 2))
                    m = ya - 2;
                else
                    return;
                if (m < g.y || (m - g.y) % 2) return;
                bool has_two = false;
                for (const std::vector<Cell>* part : std::initializer_list<const std::vector<Cell>*>{&a, &b})
                    for (auto& c : *part) {
                        int i = r.find(c);
                        if (i < 0) return;
                        if (r.is_two_by_two(i)) {
                            if (!(c == Cell{r.last_column(), m})) return;
                            has_two = true;
                        }
                    }
                if (!has_two) return;
            } else {
                int rise = ya - a.front().y;
                if (rise < 1 || rise % 2 == 0) return;
                for (auto& c : b)
                    if (r.find(c) < 0) return;
            }
            for (auto& pre : prefixes) {
                bool clash = false;
                for (auto& c : pre)
                    for (const std::vector<Cell>* part : std::initializer_list<const std::vector<Cell>*>{&a, &b})
                        if (std::find(part->begin(), part->end(), c) != part->end()) clash = true;
                if (clash) continue;
                Tile t;
                t.kind = d ? TileKind::ballot_d : TileKind::ballot_b;
                t.parts = {pre, a, b};
                t.area = t.cell_count();
                t.tiles = 1;
                out.push_back(std::move(t));
            }
        });
    }
    return out;
}

}  // namespace

std::vector<Tile> candidate_tiles(const Region& r) {
    auto out = dyck_tiles(r);
    if (r.type() != RegionType::A) {
        auto b = ballot_tiles(r);
        out.insert(out.end(), b.begin(), b.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_cover_inclusive(const Region& r, const std::vector<Tile>& tiles) {
    // Every constituent ribbon, moved down one row, lies below lambda or
    // entirely inside one other constituent that is at least as long.
    std::vector<const std::vector<Cell>*> parts;
    std::map<Cell, int> owner;
    for (auto& t : tiles)
        for (auto& p : t.parts) {
            for (auto& c : p) owner[c] = static_cast<int>(parts.size());
            parts.push_back(&p);
        }
    for (size_t k = 0; k < parts.size(); ++k) {
        int target = -2;  // -2 unset, -1 below lambda
        for (auto& c : *parts[k]) {
            Cell s{c.x, c.y - 2};
            int here;
            if (s.y + 1 <= r.lower_height(s.x)) {
                here = -1;
            } else {
                auto it = owner.find(s);
                if (it == owner.end()) return false;
                here = it->second;
            }
            if (target != -2 && here != target) return false;
            target = here;
        }
        if (target == -1) continue;
        if (target == static_cast<int>(k) || parts[target]->size() < parts[k]->size()) return false;
    }
    return true;
}

bool is_cover_exclusive(const Region& r, const std::vector<Tile>& tiles) {
    std::map<Cell, int> owner;
    for (size_t i = 0; i < tiles.size(); ++i)
        for (auto& c : tiles[i].cells()) owner[c] = static_cast<int>(i);
    auto special = [&](const Tile& t) {
        for (auto& c : t.cells()) {
            int i = r.find(c);
            if (r.is_two_by_two(i) || r.is_anchor(i)) return true;
        }
        return false;
    };
    for (size_t j = 0; j < tiles.size(); ++j) {
        std::vector<int> nbr;  // -1: outside the region
        for (auto& c : tiles[j].cells()) {
            for (Cell n : {Cell{c.x, c.y + 2}, Cell{c.x - 1, c.y + 1}, Cell{c.x + 1, c.y + 1}}) {
                if (n.x > r.last_column()) continue;
                auto it = owner.find(n);
                int o = it == owner.end() ? -1 : it->second;
                if (o == static_cast<int>(j)) continue;
                nbr.push_back(o);
            }
        }
        std::set<int> above;
        for (int o : nbr)
            if (o >= 0) above.insert(o);
        for (int i : above) {
            for (int o : nbr)
                if (o != i) return false;
            if (special(tiles[j]) && !special(tiles[i])) return false;
        }
    }
    return true;
}

std::vector<Tiling> enumerate_tilings(const std::shared_ptr<const Region>& rp, TilingClass cls) {
    const Region& r = *rp;
    auto cand = candidate_tiles(r);
    std::vector<CellSet> masks(cand.size());
    std::vector<std::vector<int>> by_first(static_cast<size_t>(r.size()));
    for (size_t t = 0; t < cand.size(); ++t) {
        int first = r.size();
        for (auto& c : cand[t].cells()) {
            int i = r.find(c);
            masks[t].set(static_cast<size_t>(i));
            first = std::min(first, i);
        }
        by_first[first].push_back(static_cast<int>(t));
    }
    std::vector<Tiling> out;
    std::vector<int> chosen;
    CellSet covered;
    std::function<void(int)> rec = [&](int from) {
        int p = from;
        while (p < r.size() && covered.test(static_cast<size_t>(p))) ++p;
        if (p == r.size()) {
            std::vector<Tile> ts;
            for (int t : chosen) ts.push_back(cand[t]);
            std::sort(ts.begin(), ts.end());
            bool ok = cls == TilingClass::inclusive ? is_cover_inclusive(r, ts) : is_cover_exclusive(r, ts);
            if (ok) out.push_back(Tiling{rp, std::move(ts)});
            return;
        }
        for (int t : by_first[p]) {
            if ((masks[t] & covered).any()) continue;
            covered |= masks[t];
            chosen.push_back(t);
            rec(p + 1);
            chosen.pop_back();
            covered &= ~masks[t];
        }
    };
    rec(0);
    return out;
}

std::shared_ptr<const Region> build_region(const PathWord& lam, const PathWord& mu, RegionType t) {
    return std::make_shared<const Region>(lam, mu, t);
}

std::vector<Tiling> enumerate_tilings(const PathWord& lam, const PathWord& mu, RegionType t, TilingClass cls) {
    return enumerate_tilings(build_region(lam, mu, t), cls);
}

PolyQ genfun_pair(const PathWord& lam, const PathWord& mu, RegionType t, TilingClass cls, Statistic w) {
    PolyQ s;
    for (auto& til : enumerate_tilings(lam, mu, t, cls)) s += PolyQ::monomial(1, til.statistic(w));
    return s;
}

PolyQ signed_exclusive_weight(const PathWord& lam, const PathWord& mu, RegionType t, Statistic w) {
    PolyQ s;
    for (auto& til : enumerate_tilings(lam, mu, t, TilingClass::exclusive))
        s += PolyQ::monomial(til.tile_count() % 2 ? -1 : 1, til.statistic(w));
    return s;
}

namespace {

std::vector<PathWord> same_class(const PathWord& w, RegionType t) {
    switch (t) {
        case RegionType::D: return enumerate_type_d(w.length(), type_d_sign(w));
        case RegionType::B: return enumerate_all(w.length());
        case RegionType::A: {
            if (w.length() % 2) return {};
            return enumerate_dyck(w.length() / 2);
        }
    }
    return {};
}

}  // namespace

std::vector<PathWord> uppers(const PathWord& lam, RegionType t) {
    std::vector<PathWord> out;
    for (auto& mu : same_class(lam, t))
        if (is_above(mu, lam)) out.push_back(mu);
    return out;
}

std::vector<PathWord> lowers(const PathWord& mu, RegionType t) {
    std::vector<PathWord> out;
    for (auto& lam : same_class(mu, t))
        if (is_above(mu, lam)) out.push_back(lam);
    return out;
}

PolyQ genfun_lower(const PathWord& lam, RegionType t, Statistic w, TilingClass cls, int workers) {
    if (t == RegionType::A && !classify(lam).is_dyck) throw DomainError("type A needs a Dyck word: " + lam.str());
    auto mus = uppers(lam, t);
    auto parts = parallel_map<PolyQ>(mus.size(), workers,
                                     [&](size_t i) { return genfun_pair(lam, mus[i], t, cls, w); });
    PolyQ s;
    for (auto& p : parts) s += p;
    return s;
}

PolyQ genfun_upper(const PathWord& mu, RegionType t, Statistic w, TilingClass cls, int workers) {
    if (t == RegionType::A && !classify(mu).is_dyck) throw DomainError("type A needs a Dyck word: " + mu.str());
    auto lams = lowers(mu, t);
    auto parts = parallel_map<PolyQ>(lams.size(), workers,
                                     [&](size_t i) { return genfun_pair(lams[i], mu, t, cls, w); });
    PolyQ s;
    for (auto& p : parts) s += p;
    return s;
}

Tiling project_to_type_b(const Tiling& d) {
    const Region& r = *d.region;
    if (r.type() != RegionType::D) throw DomainError("project_to_type_b needs a type D tiling");
    auto rb = build_region(truncate_last(r.lower()), truncate_last(r.upper()), RegionType::B);
    Tiling out{rb, {}};
    for (auto t : d.tiles) {
        for (auto& c : t.cells())
            if (rb->find(c) < 0) throw DomainError("project_to_type_b: cell outside the truncated region");
        switch (t.kind) {
            case TileKind::dyck:
            case TileKind::dyck_d:
            case TileKind::two_by_two: t.kind = TileKind::dyck; break;
            case TileKind::ballot_d: t.kind = TileKind::ballot_b; break;
            default: throw DomainError("project_to_type_b: tile kind not of type D");
        }
        out.tiles.push_back(std::move(t));
    }
    std::sort(out.tiles.begin(), out.tiles.end());
    return out;
}

Tiling lift_to_type_d(const Tiling& b, int eps) {
    const Region& r = *b.region;
    if (r.type() != RegionType::B) throw DomainError("lift_to_type_d needs a type B tiling");
    auto extend = [&](const PathWord& w) {
        for (auto s : {Step::U, Step::D}) {
            PathWord v = w + PathWord({s});
            if (type_d_sign(v) == eps) return v;
        }
        throw std::logic_error("unreachable");
    };
    auto rd = build_region(extend(r.lower()), extend(r.upper()), RegionType::D);
    Tiling out{rd, {}};
    for (auto t : b.tiles) {
        int twos = 0;
        for (auto& c : t.cells()) {
            int i = rd->find(c);
            if (i < 0) throw DomainError("lift_to_type_d: cell outside the extended region");
            twos += rd->is_two_by_two(i);
        }
        if (t.kind == TileKind::ballot_b)
            t.kind = TileKind::ballot_d;
        else if (twos == 0)
            t.kind = TileKind::dyck;
        else
            t.kind = t.cell_count() == 1 ? TileKind::two_by_two : TileKind::dyck_d;
        out.tiles.push_back(std::move(t));
    }
    std::sort(out.tiles.begin(), out.tiles.end());
    return out;
}

nlohmann::json to_json(const Tiling& t) {
    using nlohmann::json;
    const Region& r = *t.region;
    auto cell = [](const Cell& c) { return json::array({c.x, c.y}); };
    json cells = json::array();
    for (auto& c : r.unit_cells()) cells.push_back(cell(c));
    json twos = json::array();
    for (int m : r.two_by_two_heights()) twos.push_back(json::array({r.length(), m}));
    json tiles = json::array();
    for (auto& tile : t.tiles) {
        json parts = json::array();
        for (auto& p : tile.parts) {
            json pp = json::array();
            for (auto& c : p) pp.push_back(cell(c));
            parts.push_back(pp);
        }
        tiles.push_back({{"kind", name(tile.kind)},
                         {"parts", parts},
                         {"area", tile.area},
                         {"tiles", tile.tiles},
                         {"art", tile.art()}});
    }
    return json{{"type", name(r.type())},
                {"lambda", r.lower().str()},
                {"mu", r.upper().str()},
                {"cells", cells},
                {"two_by_two", twos},
                {"tiles", tiles},
                {"area", t.area()},
                {"tiles_stat", t.tile_count()},
                {"art", t.art()}};
}

}  // namespace dtd
