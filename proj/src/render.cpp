#include "dtd/tiling.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dtd {

namespace {

constexpr double kUnit = 24.0;
const char* const kPalette[] = {"#f6d5a8", "#b8dcc6", "#c9c4ec", "#f4b6c2", "#bfe0ef",
                                "#e8e3a0", "#d9c1a5", "#a9d6d0", "#e2c2e8", "#cfd8a2"};

struct Frame {
    int x0, x1, y0, y1;
    double px(double x) const { return (x - x0) * kUnit + kUnit; }
    double py(double y) const { return (y1 - y) * kUnit + kUnit; }
};

std::string pt(const Frame& f, double x, double y) {
    std::ostringstream os;
    os << f.px(x) << ',' << f.py(y);
    return os.str();
}

}  // namespace

std::string to_svg(const Tiling& t) {
    const Region& r = *t.region;
    const int L = r.length();
    auto hl = r.lower().heights(), hm = r.upper().heights();
    Frame f{0, L + 2, *std::min_element(hl.begin(), hl.end()) - 3, *std::max_element(hm.begin(), hm.end()) + 3};
    const double w = (f.x1 - f.x0) * kUnit + 2 * kUnit, h = (f.y1 - f.y0) * kUnit + 3 * kUnit;

    std::map<Cell, int> owner;
    for (size_t i = 0; i < t.tiles.size(); ++i)
        for (auto& c : t.tiles[i].cells()) owner[c] = static_cast<int>(i);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
       << ' ' << h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << f.px(L) << "\" y1=\"" << f.py(f.y0) << "\" x2=\"" << f.px(L) << "\" y2=\"" << f.py(f.y1)
       << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";

    for (size_t i = 0; i < t.tiles.size(); ++i) {
        const char* col = kPalette[i % (sizeof kPalette / sizeof *kPalette)];
        for (auto& c : t.tiles[i].cells()) {
            int ci = r.find(c);
            int s = r.is_two_by_two(ci) ? 2 : 1;
            double cx = r.is_two_by_two(ci) ? L : c.x;
            os << "<polygon points=\"" << pt(f, cx - s, c.y) << ' ' << pt(f, cx, c.y + s) << ' ' << pt(f, cx + s, c.y)
               << ' ' << pt(f, cx, c.y - s) << "\" fill=\"" << col << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
        }
    }
    // tile outlines: a cell edge is drawn where the neighbour across it belongs elsewhere
    for (auto& [c, o] : owner) {
        int ci = r.find(c);
        if (r.is_two_by_two(ci)) {
            os << "<polygon points=\"" << pt(f, L - 2, c.y) << ' ' << pt(f, L, c.y + 2) << ' ' << pt(f, L + 2, c.y) << ' '
               << pt(f, L, c.y - 2) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
            continue;
        }
        struct E {
            Cell nb;
            double ax, ay, bx, by;
        };
        const E edges[] = {{{c.x - 1, c.y + 1}, c.x - 1.0, c.y * 1.0, c.x * 1.0, c.y + 1.0},
                           {{c.x + 1, c.y + 1}, c.x * 1.0, c.y + 1.0, c.x + 1.0, c.y * 1.0},
                           {{c.x + 1, c.y - 1}, c.x + 1.0, c.y * 1.0, c.x * 1.0, c.y - 1.0},
                           {{c.x - 1, c.y - 1}, c.x * 1.0, c.y - 1.0, c.x - 1.0, c.y * 1.0}};
        for (auto& e : edges) {
            auto it = owner.find(e.nb);
            if (it != owner.end() && it->second == o) continue;
            os << "<line x1=\"" << f.px(e.ax) << "\" y1=\"" << f.py(e.ay) << "\" x2=\"" << f.px(e.bx) << "\" y2=\""
               << f.py(e.by) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        }
        if (r.is_anchor(ci))
            os << "<text x=\"" << f.px(c.x) << "\" y=\"" << f.py(c.y) + 5 << "\" font-size=\"14\" text-anchor=\"middle\">*</text>\n";
    }
    auto poly = [&](const std::vector<int>& hs, const char* col) {
        os << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"2\" points=\"";
        for (size_t i = 0; i < hs.size(); ++i) os << (i ? " " : "") << pt(f, static_cast<double>(i), hs[i]);
        os << "\"/>\n";
    };
    poly(hl, "#1f4e9c");
    poly(hm, "#b02a2a");
    os << "<text x=\"" << kUnit << "\" y=\"" << h - kUnit / 2 << "\" font-family=\"monospace\" font-size=\"12\">"
       << name(r.type()) << ' ' << r.lower().str() << " / " << r.upper().str() << "  art=" << t.art()
       << " tiles=" << t.tile_count() << " area=" << t.area() << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace dtd
