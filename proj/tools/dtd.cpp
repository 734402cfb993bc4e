// dtd: incidence matrices, tilings, trees and the identity suite from the command line.

#include "dtd/incidence.hpp"
#include "dtd/linkflip.hpp"
#include "dtd/tiling.hpp"
#include "dtd/treeform.hpp"
#include "dtd/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace dtd;

namespace {

enum Exit { ok = 0, identity_failure = 1, usage = 2, domain = 3, internal_gap = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int max_n = 10;
    int workers = 1;
    std::string format = "text";

    int n = 4;
    int epsilon = 0;
    std::string kind = "M";

    std::optional<std::string> lambda, mu;
    std::string type = "D";
    std::string cls = "inclusive";
    std::string weight = "art";

    std::optional<int> filter_art;
    std::string render;

    int max_length = 5;
    bool json = false;
    bool timings = false;
};

const auto kWord = CLI::Validator(
    [](std::string& s) -> std::string {
        if (s.empty() || s.find_first_not_of("UD") != std::string::npos) return "expected a nonempty word over U, D: " + s;
        return {};
    },
    "WORD");
const auto kWordOrEmpty = CLI::Validator(
    [](std::string& s) -> std::string {
        if (s.find_first_not_of("UD") != std::string::npos) return "expected a word over U, D: " + s;
        return {};
    },
    "WORD");

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (auto a : allowed)
        if (o.format == a) return;
    throw UsageError("format '" + o.format + "' is not available for this command");
}

PathWord word(const std::string& s, const Options& o) {
    auto w = PathWord::parse(s);
    if (w.length() > o.max_n)
        throw UsageError("length " + std::to_string(w.length()) + " exceeds the cap " + std::to_string(o.max_n) +
                         " (raise it with --max-n)");
    return w;
}

std::string sha256(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

json poly_json(const PolyQ& p) {
    json j = p;
    j["text"] = p.str();
    j["at_one"] = p.eval_at_one().str();
    return j;
}

int cmd_matrix(const Options& o) {
    check_format(o, {"text", "json", "csv", "latex"});
    if (o.n < 1 || o.n > o.max_n) throw UsageError("--n must lie in 1.." + std::to_string(o.max_n));
    const bool inv = o.kind == "Minv" || o.kind == "Ninv";
    const auto wk = (o.kind == "M" || o.kind == "Minv") ? WeightKind::I : WeightKind::II;
    auto m = build(o.n, o.epsilon, wk, o.workers);
    if (inv) m = invert(m);
    if (o.format == "json") {
        json j = to_json(m);
        j["n"] = o.n;
        j["epsilon"] = o.epsilon;
        j["kind"] = o.kind;
        std::cout << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        std::cout << to_csv(m);
    } else if (o.format == "latex") {
        std::cout << to_latex(m);
    } else {
        std::cout << to_text(m);
    }
    return ok;
}

int cmd_genfun(const Options& o) {
    check_format(o, {"text", "json", "latex"});
    const auto t = parse_region_type(o.type);
    const auto c = parse_tiling_class(o.cls);
    const auto w = parse_statistic(o.weight);
    PolyQ p;
    if (o.lambda && o.mu)
        p = genfun_pair(word(*o.lambda, o), word(*o.mu, o), t, c, w);
    else if (o.lambda)
        p = genfun_lower(word(*o.lambda, o), t, w, c, o.workers);
    else if (o.mu)
        p = genfun_upper(word(*o.mu, o), t, w, c, o.workers);
    else
        throw UsageError("genfun needs --lambda, --mu or both");

    if (o.format == "json") {
        json j = poly_json(p);
        if (o.lambda) j["lambda"] = *o.lambda;
        if (o.mu) j["mu"] = *o.mu;
        j["type"] = o.type;
        j["class"] = o.cls;
        j["weight"] = o.weight;
        std::cout << j.dump(2) << '\n';
    } else if (o.format == "latex") {
        std::cout << p.latex() << '\n';
    } else {
        std::cout << p.str() << '\n' << "q=1: " << p.eval_at_one() << '\n';
    }
    return ok;
}

std::vector<Tiling> collect_tilings(const Options& o) {
    if (!o.lambda) throw UsageError("tilings needs --lambda");
    const auto t = parse_region_type(o.type);
    const auto c = parse_tiling_class(o.cls);
    const auto lam = word(*o.lambda, o);
    std::vector<PathWord> mus;
    if (o.mu)
        mus.push_back(word(*o.mu, o));
    else
        mus = uppers(lam, t);
    std::vector<Tiling> out;
    for (auto& mu : mus)
        for (auto& til : enumerate_tilings(build_region(lam, mu, t), c))
            if (!o.filter_art || til.art() == *o.filter_art) out.push_back(til);
    return out;
}

std::string tiling_line(const Tiling& t) {
    std::ostringstream os;
    os << t.region->lower().str() << " / " << t.region->upper().str() << "  art=" << t.art()
       << " tiles=" << t.tile_count() << " area=" << t.area() << "  ";
    if (t.tiles.empty()) os << "(empty)";
    for (size_t i = 0; i < t.tiles.size(); ++i) {
        if (i) os << " | ";
        os << name(t.tiles[i].kind) << ':';
        for (auto& c : t.tiles[i].cells()) os << " (" << c.x << ',' << c.y << ')';
    }
    return os.str();
}

int cmd_tilings(const Options& o, const json& args) {
    check_format(o, {"text", "json", "svg"});
    auto ts = collect_tilings(o);

    if (!o.render.empty()) {
        fs::path dir(o.render);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
        json artifacts = json::array();
        const int digits = std::max<int>(3, static_cast<int>(std::to_string(ts.size()).size()));
        for (size_t i = 0; i < ts.size(); ++i) {
            std::ostringstream fn;
            fn << "tiling_" << std::setw(digits) << std::setfill('0') << i + 1 << ".svg";
            const std::string svg = to_svg(ts[i]);
            const fs::path p = dir / fn.str();
            std::ofstream f(p, std::ios::binary);
            if (!(f << svg)) throw std::runtime_error("cannot write " + p.string());
            artifacts.push_back({{"file", fn.str()}, {"sha256", sha256(svg)}, {"bytes", svg.size()},
                                 {"lambda", ts[i].region->lower().str()}, {"mu", ts[i].region->upper().str()},
                                 {"art", ts[i].art()}, {"tiles", ts[i].tile_count()}, {"area", ts[i].area()}});
        }
        std::sort(artifacts.begin(), artifacts.end(),
                  [](const json& a, const json& b) { return a["file"].get<std::string>() < b["file"].get<std::string>(); });
        json manifest = {{"command", "tilings"}, {"arguments", args}, {"count", ts.size()}, {"artifacts", artifacts}};
        const fs::path mp = dir / "manifest.json";
        std::ofstream mf(mp, std::ios::binary);
        if (!(mf << manifest.dump(2) << '\n')) throw std::runtime_error("cannot write " + mp.string());
    }

    if (o.format == "json") {
        json j = json::array();
        for (auto& t : ts) j.push_back(to_json(t));
        std::cout << json{{"count", ts.size()}, {"tilings", j}}.dump(2) << '\n';
    } else if (o.format == "svg") {
        for (auto& t : ts) std::cout << to_svg(t);
    } else {
        for (auto& t : ts) std::cout << tiling_line(t) << '\n';
        std::cout << ts.size() << (ts.size() == 1 ? " tiling" : " tilings");
        if (!o.render.empty()) std::cout << ", rendered to " << o.render;
        std::cout << '\n';
    }
    return ok;
}

int cmd_tree(const Options& o) {
    check_format(o, {"text", "json"});
    const auto lam = word(o.lambda.value_or(""), o);
    auto tree = build_tree(lam);
    PolyQ w;
    try {
        w = omega(tree);
    } catch (const StuckTree& e) {
        std::cerr << "stuck tree: " << e.what() << '\n' << to_text(tree) << to_json(tree).dump(2) << '\n';
        return internal_gap;
    }
    if (o.format == "json") {
        json j = {{"lambda", lam.str()}, {"link_pattern", to_json(link_pattern(lam))}, {"tree", to_json(tree)},
                  {"omega", poly_json(w)}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << (tree.edge_count() ? to_text(tree) : std::string("(empty tree)\n"));
        std::cout << "omega = " << w.str() << '\n' << "q=1: " << w.eval_at_one() << '\n';
    }
    return ok;
}

int cmd_verify(const Options& o) {
    check_format(o, {"text", "json"});
    if (o.max_length < 1 || o.max_length > o.max_n)
        throw UsageError("--max-length must lie in 1.." + std::to_string(o.max_n));
    auto res = run_suite(o.max_length, o.workers);
    bool all = true;
    for (auto& r : res) all = all && r.pass;
    if (o.json || o.format == "json") {
        json checks = json::array();
        for (auto& r : res) {
            json j = r.to_json();
            if (!o.timings) j.erase("seconds");
            checks.push_back(j);
        }
        std::cout << json{{"max_length", o.max_length}, {"pass", all}, {"checks", checks}}.dump(2) << '\n';
    } else {
        for (auto& r : res) {
            std::cout << std::setw(2) << r.number << "  " << (r.pass ? "PASS" : "FAIL") << "  " << std::left
                      << std::setw(22) << r.name << std::right << std::setw(8) << r.cases << " cases";
            if (o.timings) std::cout << "  " << std::fixed << std::setprecision(3) << r.seconds << " s";
            std::cout << '\n';
            for (auto& f : r.failures) std::cout << "      " << f << '\n';
        }
        std::cout << (all ? "all identities hold" : "identity failures") << " up to length " << o.max_length << '\n';
    }
    return all ? ok : identity_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Type D tilings, incidence matrices and generating functions"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--workers", o.workers, "worker threads for batch loops")
        ->envname("DTD_WORKERS")
        ->check(CLI::Range(1, 256));
    app.add_option("--max-n", o.max_n, "hard cap on word length")->check(CLI::Range(1, 64));
    app.add_option("--format", o.format, "text, json, csv, latex or svg")
        ->check(CLI::IsMember({"text", "json", "csv", "latex", "svg"}));

    auto* mat = app.add_subcommand("matrix", "incidence matrix M, N or an inverse");
    mat->add_option("--n", o.n, "word length")->required();
    mat->add_option("--epsilon", o.epsilon, "sign class")->check(CLI::IsMember({0, 1}));
    mat->add_option("--kind", o.kind)->check(CLI::IsMember({"M", "N", "Minv", "Ninv"}));

    auto* gen = app.add_subcommand("genfun", "generating function of tilings");
    auto* til = app.add_subcommand("tilings", "list or render tilings");
    for (auto* s : {gen, til}) {
        s->add_option("--lambda", o.lambda, "lower path")->check(kWord);
        s->add_option("--mu", o.mu, "upper path")->check(kWord);
        s->add_option("--type", o.type)->check(CLI::IsMember({"A", "B", "D"}));
        s->add_option("--class", o.cls)->check(CLI::IsMember({"inclusive", "exclusive"}));
    }
    gen->add_option("--weight", o.weight)->check(CLI::IsMember({"art", "tiles", "area"}));
    til->add_option("--filter-art", o.filter_art, "keep tilings with this art");
    til->add_option("--render", o.render, "directory for SVG files and manifest.json");

    auto* tree = app.add_subcommand("tree", "decorated tree and its omega value");
    tree->add_option("--lambda", o.lambda, "path (may be empty)")->expected(0, 1)->check(kWordOrEmpty);

    auto* ver = app.add_subcommand("verify", "run the identity suite");
    ver->add_option("--max-length", o.max_length, "length bound")->check(CLI::Range(1, 64));
    ver->add_flag("--json", o.json, "machine-readable report");
    ver->add_flag("--timings", o.timings, "include wall-clock times");

    // options may be given before or after the subcommand name
    for (auto* s : {mat, gen, til, tree, ver}) {
        s->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    // canonical argument record for manifests: everything that affects the output
    json args = {{"type", o.type}, {"class", o.cls}};
    if (o.lambda) args["lambda"] = *o.lambda;
    if (o.mu) args["mu"] = *o.mu;
    if (o.filter_art) args["filter_art"] = *o.filter_art;

    try {
        if (*mat) return cmd_matrix(o);
        if (*gen) return cmd_genfun(o);
        if (*til) return cmd_tilings(o, args);
        if (*tree) return cmd_tree(o);
        if (*ver) return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return domain;
    } catch (const StuckTree& e) {
        std::cerr << "stuck tree: " << e.what() << '\n';
        return internal_gap;
    } catch (const InexactDivision& e) {
        std::cerr << "inexact division: " << e.what() << '\n';
        return internal_gap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return domain;
    }
    return usage;
}
