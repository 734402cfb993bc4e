#include "dtd/reference.hpp"

#include <map>

namespace dtd {

namespace {

using Table = std::vector<std::vector<const char*>>;

const std::map<std::string, Table>& tables() {
    static const std::map<std::string, Table> t = {
        {"M",
         {{"1", "0", "0", "0", "0", "0", "0", "0"},
          {"-q", "1", "0", "0", "0", "0", "0", "0"},
          {"0", "-q", "1", "0", "0", "0", "0", "0"},
          {"0", "0", "-q", "1", "0", "0", "0", "0"},
          {"0", "0", "-q", "0", "1", "0", "0", "0"},
          {"0", "-q^{2}", "q^{2}", "-q", "-q", "1", "0", "0"},
          {"-q^{3}", "q^{3}", "0", "0", "0", "-q", "1", "0"},
          {"q^{4}", "0", "0", "0", "0", "0", "-q", "1"}}},
        {"Minv",
         {{"1", "0", "0", "0", "0", "0", "0", "0"},
          {"q", "1", "0", "0", "0", "0", "0", "0"},
          {"q^{2}", "q", "1", "0", "0", "0", "0", "0"},
          {"q^{3}", "q^{2}", "q", "1", "0", "0", "0", "0"},
          {"q^{3}", "q^{2}", "q", "0", "1", "0", "0", "0"},
          {"q^{3}+q^{4}", "q^{3}+q^{2}", "q^{2}", "q", "q", "1", "0", "0"},
          {"q^{3}+q^{5}", "q^{4}", "q^{3}", "q^{2}", "q^{2}", "q", "1", "0"},
          {"q^{6}", "q^{5}", "q^{4}", "q^{3}", "q^{3}", "q^{2}", "q", "1"}}},
        {"N",
         {{"1", "0", "0", "0", "0", "0", "0", "0"},
          {"-q", "1", "0", "0", "0", "0", "0", "0"},
          {"0", "-q", "1", "0", "0", "0", "0", "0"},
          {"0", "0", "-q", "1", "0", "0", "0", "0"},
          {"0", "0", "-q", "0", "1", "0", "0", "0"},
          {"0", "-q", "q^{2}", "-q", "-q", "1", "0", "0"},
          {"-q", "q^{2}", "0", "0", "0", "-q", "1", "0"},
          {"q^{2}", "0", "0", "0", "0", "0", "-q", "1"}}},
        {"Ninv",
         {{"1", "0", "0", "0", "0", "0", "0", "0"},
          {"q", "1", "0", "0", "0", "0", "0", "0"},
          {"q^{2}", "q", "1", "0", "0", "0", "0", "0"},
          {"q^{3}", "q^{2}", "q", "1", "0", "0", "0", "0"},
          {"q^{3}", "q^{2}", "q", "0", "1", "0", "0", "0"},
          {"q^{2}+q^{4}", "q+q^{3}", "q^{2}", "q", "q", "1", "0", "0"},
          {"q+q^{5}", "q^{4}", "q^{3}", "q^{2}", "q^{2}", "q", "1", "0"},
          {"q^{6}", "q^{5}", "q^{4}", "q^{3}", "q^{3}", "q^{2}", "q", "1"}}},
    };
    return t;
}

}  // namespace

std::vector<std::vector<PolyQ>> golden_matrix(const std::string& name) {
    auto it = tables().find(name);
    if (it == tables().end()) throw DomainError("no reference matrix named " + name);
    std::vector<std::vector<PolyQ>> out;
    for (auto& row : it->second) {
        std::vector<PolyQ> r;
        for (auto* e : row) r.push_back(PolyQ::parse(e));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<PathWord> golden_basis() {
    std::vector<PathWord> b;
    for (auto* w : {"UUUU", "UUDD", "UDUD", "UDDU", "DUUD", "DUDU", "DDUU", "DDDD"}) b.push_back(PathWord::parse(w));
    return b;
}

}  // namespace dtd
