#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace dtd {

using Int = boost::multiprecision::cpp_int;

class PolyQ;

// Thrown by exact_div when the divisor does not divide; carries the remainder.
class InexactDivision : public std::runtime_error {
public:
    InexactDivision(const std::string& what, std::vector<Int> rem)
        : std::runtime_error(what), remainder(std::move(rem)) {}
    std::vector<Int> remainder;
};

// Bad arguments in the mathematical sense (m > n, words of the wrong length ...).
class DomainError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Polynomial in q with integer coefficients, canonical: no trailing zeros.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(long long c);  // NOLINT implicit constant
    explicit PolyQ(std::vector<Int> coeffs);

    static PolyQ monomial(const Int& c, int k);
    static PolyQ q() { return monomial(1, 1); }

    const std::vector<Int>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Int coefficient(int i) const;
    Int eval_at_one() const;
    bool nonnegative() const;

    PolyQ scale_by_monomial(const Int& c, int k) const;
    // q -> q^k
    PolyQ substitute_power(int k) const;

    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    PolyQ& operator*=(const PolyQ& o);
    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a);
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

    // "1 + 2q^2 - q^3"
    std::string str() const;
    // "1+2q^{2}-q^{3}"
    std::string latex() const;
    // Accepts both the plain and the LaTeX rendering.
    static PolyQ parse(const std::string& s);

private:
    void trim();
    std::vector<Int> c_;
};

PolyQ add(const PolyQ& a, const PolyQ& b);
PolyQ mul(const PolyQ& a, const PolyQ& b);
PolyQ neg(const PolyQ& a);
PolyQ pow(const PolyQ& a, unsigned e);

// Long division; throws InexactDivision on a nonzero remainder.
PolyQ exact_div(const PolyQ& a, const PolyQ& b);

PolyQ q_int(int n);
PolyQ q_factorial(int n);
PolyQ q_double_factorial_even(int m);
PolyQ q_binomial(int n, int m);
PolyQ q2_binomial(int n, int m);
// prod_{i=1}^{n} (1+q^i)
PolyQ one_plus_q_product(int n);

void to_json(nlohmann::json& j, const PolyQ& p);
void from_json(const nlohmann::json& j, PolyQ& p);

std::ostream& operator<<(std::ostream& os, const PolyQ& p);

}  // namespace dtd
