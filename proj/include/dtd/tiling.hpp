#pragma once

#include "dtd/pathword.hpp"
#include "dtd/qpoly.hpp"

#include <json.hpp>

#include <bitset>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace dtd {

enum class RegionType { A, B, D };
enum class TilingClass { inclusive, exclusive };
enum class Statistic { art, tiles, area };
enum class TileKind { dyck, ballot_b, two_by_two, dyck_d, ballot_d };

const char* name(RegionType t);
const char* name(TilingClass c);
const char* name(Statistic s);
const char* name(TileKind k);
RegionType parse_region_type(const std::string& s);
TilingClass parse_tiling_class(const std::string& s);
Statistic parse_statistic(const std::string& s);

// Cells are unit squares rotated by 45 degrees, centred at integer (x, y) with
// x + y odd. A two-by-two at (L, m) is stored as its west cell (L-1, m): it is
// atomic, so the west position identifies it in every tiling.
struct Cell {
    int x = 0;
    int y = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr int kMaxCells = 256;
using CellSet = std::bitset<kMaxCells>;

class Region {
public:
    Region(const PathWord& lam, const PathWord& mu, RegionType type);

    RegionType type() const { return type_; }
    const PathWord& lower() const { return lam_; }
    const PathWord& upper() const { return mu_; }
    int length() const { return L_; }
    int last_column() const { return type_ == RegionType::B ? L_ : L_ - 1; }
    int lower_height(int x) const { return hl_.at(static_cast<size_t>(x)); }
    int upper_height(int x) const { return hm_.at(static_cast<size_t>(x)); }

    int size() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }
    const Cell& cell(int i) const { return cells_[i]; }
    const std::vector<Cell>& cells() const { return cells_; }
    int find(int x, int y) const;
    int find(const Cell& c) const { return find(c.x, c.y); }

    // Type D: is cell i the two-by-two at (L, cell(i).y)?
    bool is_two_by_two(int i) const { return two_[i]; }
    // Type B: cells on the terminal column.
    bool is_anchor(int i) const { return type_ == RegionType::B && cells_[i].x == L_; }
    std::vector<int> two_by_two_heights() const;
    std::vector<Cell> unit_cells() const;

private:
    RegionType type_;
    PathWord lam_, mu_;
    int L_ = 0;
    std::vector<int> hl_, hm_;
    std::vector<Cell> cells_;
    std::vector<bool> two_;
    std::map<std::pair<int, int>, int> index_;
};

struct Tile {
    TileKind kind = TileKind::dyck;
    // Constituent ribbons, each left to right: one ribbon for Dyck-like tiles,
    // (prefix, upper ribbon, lower ribbon) for ballot tiles.
    std::vector<std::vector<Cell>> parts;
    int area = 0;
    int tiles = 0;
    int art() const { return (area + tiles) / 2; }
    std::vector<Cell> cells() const;
    int cell_count() const;
    friend bool operator==(const Tile&, const Tile&) = default;
    friend auto operator<=>(const Tile& a, const Tile& b) {
        if (a.parts != b.parts) return a.parts <=> b.parts;
        return a.kind <=> b.kind;
    }
};

struct Tiling {
    std::shared_ptr<const Region> region;
    std::vector<Tile> tiles;  // sorted
    int area() const;
    int tile_count() const;
    int art() const;
    int statistic(Statistic s) const;
};

// Admissible tiles of a region, in a deterministic order.
std::vector<Tile> candidate_tiles(const Region& r);

bool is_cover_inclusive(const Region& r, const std::vector<Tile>& tiles);
bool is_cover_exclusive(const Region& r, const std::vector<Tile>& tiles);

std::vector<Tiling> enumerate_tilings(const std::shared_ptr<const Region>& r, TilingClass cls);
std::vector<Tiling> enumerate_tilings(const PathWord& lam, const PathWord& mu, RegionType t, TilingClass cls);

// Throws DomainError unless mu is above lam (and, for type D, the signs agree).
std::shared_ptr<const Region> build_region(const PathWord& lam, const PathWord& mu, RegionType t);

PolyQ genfun_pair(const PathWord& lam, const PathWord& mu, RegionType t, TilingClass cls, Statistic w);
// (-1)^tiles q^stat summed over the cover-exclusive tilings
PolyQ signed_exclusive_weight(const PathWord& lam, const PathWord& mu, RegionType t, Statistic w);

// The upper paths admitted over lam for each region type, and the lower paths under mu.
std::vector<PathWord> uppers(const PathWord& lam, RegionType t);
std::vector<PathWord> lowers(const PathWord& mu, RegionType t);

PolyQ genfun_lower(const PathWord& lam, RegionType t, Statistic w = Statistic::art,
                   TilingClass cls = TilingClass::inclusive, int workers = 1);
PolyQ genfun_upper(const PathWord& mu, RegionType t, Statistic w = Statistic::tiles,
                   TilingClass cls = TilingClass::exclusive, int workers = 1);

// Type D tiling of R_D(lam, mu) -> type B tiling of R_B(lam~, mu~): the
// two-by-two is deleted and its west cell becomes an anchor.
Tiling project_to_type_b(const Tiling& d);
// Inverse; eps is the sign of the type D words to rebuild.
Tiling lift_to_type_d(const Tiling& b, int eps);

nlohmann::json to_json(const Tiling& t);
std::string to_svg(const Tiling& t);

}  // namespace dtd
