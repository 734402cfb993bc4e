#include "dtd/qpoly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace dtd {

PolyQ::PolyQ(long long c) {
    if (c != 0) c_.push_back(Int(c));
}

PolyQ::PolyQ(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::monomial(const Int& c, int k) {
    if (k < 0) throw DomainError("negative exponent");
    PolyQ p;
    if (c == 0) return p;
    p.c_.assign(static_cast<size_t>(k) + 1, Int(0));
    p.c_[k] = c;
    return p;
}

void PolyQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int PolyQ::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Int PolyQ::eval_at_one() const {
    Int s = 0;
    for (auto& c : c_) s += c;
    return s;
}

bool PolyQ::nonnegative() const {
    for (auto& c : c_)
        if (c < 0) return false;
    return true;
}

PolyQ PolyQ::scale_by_monomial(const Int& c, int k) const {
    if (k < 0) throw DomainError("negative exponent");
    if (c == 0 || is_zero()) return {};
    std::vector<Int> r(static_cast<size_t>(k), Int(0));
    r.reserve(c_.size() + k);
    for (auto& a : c_) r.push_back(a * c);
    return PolyQ(std::move(r));
}

PolyQ PolyQ::substitute_power(int k) const {
    if (k < 1) throw DomainError("substitution power must be positive");
    if (is_zero()) return {};
    std::vector<Int> r(static_cast<size_t>(degree()) * k + 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return PolyQ(std::move(r));
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyQ(std::move(r));
}

PolyQ& PolyQ::operator*=(const PolyQ& o) { return *this = *this * o; }

PolyQ operator-(const PolyQ& a) {
    PolyQ r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

namespace {

std::string render(const std::vector<Int>& c, bool tex) {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Int a = abs(c[i]);
        bool negc = c[i] < 0;
        if (first) {
            if (negc) out += "-";
        } else if (tex) {
            out += negc ? "-" : "+";
        } else {
            out += negc ? " - " : " + ";
        }
        first = false;
        if (i == 0 || a != 1) out += a.str();
        if (i >= 1) {
            out += "q";
            if (i >= 2) out += tex ? "^{" + std::to_string(i) + "}" : "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace

std::string PolyQ::str() const { return render(c_, false); }
std::string PolyQ::latex() const { return render(c_, true); }

PolyQ PolyQ::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}') s += ch;
    if (s.empty()) throw DomainError("empty polynomial text");
    PolyQ r;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        Int coef = (i > st) ? Int(s.substr(st, i - st)) : Int(1);
        int e = 0;
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t es = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == es) throw DomainError("bad exponent in '" + text + "'");
                e = std::stoi(s.substr(es, i - es));
            }
        } else if (i == st) {
            throw DomainError("cannot parse polynomial '" + text + "'");
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw DomainError("cannot parse polynomial '" + text + "'");
        r += PolyQ::monomial(coef * sign, e);
    }
    return r;
}

PolyQ add(const PolyQ& a, const PolyQ& b) { return a + b; }
PolyQ mul(const PolyQ& a, const PolyQ& b) { return a * b; }
PolyQ neg(const PolyQ& a) { return -a; }

PolyQ pow(const PolyQ& a, unsigned e) {
    PolyQ r = 1, b = a;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

PolyQ exact_div(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    std::vector<Int> r = a.coeffs();
    const auto& d = b.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) {
        if (a.is_zero()) return {};
        throw InexactDivision("inexact division: " + a.str() + " / " + b.str(), r);
    }
    std::vector<Int> quo(static_cast<size_t>(da - db) + 1, Int(0));
    const Int& lead = d.back();
    for (int k = da - db; k >= 0; --k) {
        Int& top = r[k + db];
        if (top == 0) continue;
        Int qk, rem;
        divide_qr(top, lead, qk, rem);
        if (rem != 0) throw InexactDivision("inexact division: " + a.str() + " / " + b.str(), r);
        quo[k] = qk;
        for (int j = 0; j <= db; ++j) r[k + j] -= qk * d[j];
    }
    for (auto& c : r)
        if (c != 0) {
            while (!r.empty() && r.back() == 0) r.pop_back();
            throw InexactDivision("inexact division: " + a.str() + " / " + b.str(), r);
        }
    return PolyQ(std::move(quo));
}

PolyQ q_int(int n) {
    if (n < 0) throw DomainError("q_int of a negative integer");
    return PolyQ(std::vector<Int>(static_cast<size_t>(n), Int(1)));
}

PolyQ q_factorial(int n) {
    if (n < 0) throw DomainError("q_factorial of a negative integer");
    PolyQ r = 1;
    for (int i = 2; i <= n; ++i) r *= q_int(i);
    return r;
}

PolyQ q_double_factorial_even(int m) {
    if (m < 0) throw DomainError("q_double_factorial_even of a negative integer");
    PolyQ r = 1;
    for (int i = 1; i <= m; ++i) r *= q_int(2 * i);
    return r;
}

PolyQ q_binomial(int n, int m) {
    if (m < 0 || m > n) throw DomainError("q_binomial needs 0 <= m <= n");
    return exact_div(q_factorial(n), q_factorial(n - m) * q_factorial(m));
}

PolyQ q2_binomial(int n, int m) {
    if (m < 0 || m > n) throw DomainError("q2_binomial needs 0 <= m <= n");
    return exact_div(q_double_factorial_even(n),
                     q_double_factorial_even(n - m) * q_double_factorial_even(m));
}

PolyQ one_plus_q_product(int n) {
    PolyQ r = 1;
    for (int i = 1; i <= n; ++i) r *= PolyQ(1) + PolyQ::monomial(1, i);
    return r;
}

void to_json(nlohmann::json& j, const PolyQ& p) {
    auto arr = nlohmann::json::array();
    for (auto& c : p.coeffs()) {
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            arr.push_back(static_cast<long long>(c));
        else
            arr.push_back(c.str());
    }
    j = nlohmann::json{{"coeffs", arr}};
}

void from_json(const nlohmann::json& j, PolyQ& p) {
    std::vector<Int> c;
    for (auto& e : j.at("coeffs")) {
        if (e.is_string())
            c.emplace_back(e.get<std::string>());
        else
            c.emplace_back(e.get<long long>());
    }
    p = PolyQ(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const PolyQ& p) { return os << p.str(); }

}  // namespace dtd
