#include "dtd/pathword.hpp"

#include <algorithm>

namespace dtd {

PathWord PathWord::parse(const std::string& s) {
    std::vector<Step> st;
    st.reserve(s.size());
    for (char c : s) {
        if (c == 'U')
            st.push_back(Step::U);
        else if (c == 'D')
            st.push_back(Step::D);
        else
            throw DomainError("word must consist of U and D only: '" + s + "'");
    }
    return PathWord(std::move(st));
}

std::vector<int> PathWord::heights() const {
    std::vector<int> h(steps_.size() + 1, 0);
    for (size_t i = 0; i < steps_.size(); ++i) h[i + 1] = h[i] + (steps_[i] == Step::U ? 1 : -1);
    return h;
}

int PathWord::endpoint() const {
    int h = 0;
    for (auto s : steps_) h += s == Step::U ? 1 : -1;
    return h;
}

std::string PathWord::str() const {
    std::string s;
    for (auto c : steps_) s += static_cast<char>(c);
    return s;
}

PathWord PathWord::operator+(const PathWord& o) const {
    auto st = steps_;
    st.insert(st.end(), o.steps_.begin(), o.steps_.end());
    return PathWord(std::move(st));
}

int type_d_sign(const PathWord& w) {
    int d = w.endpoint() - w.length();
    return ((d % 4) + 4) % 4 == 0 ? 0 : 1;
}

Classification classify(const PathWord& w) {
    Classification c;
    auto h = w.heights();
    c.is_ballot = *std::min_element(h.begin(), h.end()) >= 0;
    c.is_dyck = c.is_ballot && h.back() == 0;
    c.epsilon = type_d_sign(w);
    return c;
}

bool is_above(const PathWord& mu, const PathWord& lam) {
    if (mu.length() != lam.length()) throw DomainError("is_above: words of different length");
    auto a = mu.heights(), b = lam.heights();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

std::vector<PathWord> enumerate_all(int n) {
    if (n < 0 || n > 30) throw DomainError("word length out of range");
    std::vector<PathWord> out;
    out.reserve(size_t(1) << n);
    for (unsigned long code = 0; code < (1ul << n); ++code) {
        std::vector<Step> st(static_cast<size_t>(n));
        // most significant bit first, 0 = U, so codes run in lexicographic order
        for (int i = 0; i < n; ++i) st[i] = (code >> (n - 1 - i)) & 1u ? Step::D : Step::U;
        out.emplace_back(std::move(st));
    }
    return out;
}

std::vector<PathWord> enumerate_type_d(int n, int eps) {
    if (eps != 0 && eps != 1) throw DomainError("epsilon must be 0 or 1");
    std::vector<PathWord> out;
    for (auto& w : enumerate_all(n))
        if (type_d_sign(w) == eps) out.push_back(w);
    return out;
}

std::vector<PathWord> enumerate_dyck(int semilength) {
    std::vector<PathWord> out;
    for (auto& w : enumerate_all(2 * semilength))
        if (classify(w).is_dyck) out.push_back(w);
    return out;
}

PathWord truncate_last(const PathWord& w) {
    if (w.empty()) throw DomainError("cannot truncate the empty word");
    auto st = w.steps();
    st.pop_back();
    return PathWord(std::move(st));
}

std::vector<Chord> chords(const PathWord& w) {
    if (!classify(w).is_dyck) throw DomainError("chords need a Dyck word: " + w.str());
    std::vector<Chord> out;
    std::vector<int> stack;
    for (int i = 1; i <= w.length(); ++i) {
        if (w.at(i) == Step::U) {
            stack.push_back(i);
        } else {
            int o = stack.back();
            stack.pop_back();
            out.push_back({o, i, 0});
        }
    }
    // (close - open + 1)/2 counts the chord itself plus all nested ones
    for (auto& c : out) c.length = (c.close - c.open + 1) / 2;
    std::sort(out.begin(), out.end(), [](const Chord& a, const Chord& b) { return a.open < b.open; });
    return out;
}

PathWord lambda_mn(int m, int n) {
    if (m < 0 || n < 0) throw DomainError("lambda_mn needs m, n >= 0");
    std::vector<Step> st(static_cast<size_t>(n), Step::D);
    st.insert(st.end(), static_cast<size_t>(m), Step::U);
    return PathWord(std::move(st));
}

int prime_dyck_prefix(const PathWord& w) {
    int h = 0;
    for (int i = 1; i <= w.length(); ++i) {
        h += w.at(i) == Step::U ? 1 : -1;
        if (h < 0) return 0;
        if (h == 0) return i;
    }
    return 0;
}

}  // namespace dtd
