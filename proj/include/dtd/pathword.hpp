#pragma once

#include "dtd/qpoly.hpp"

#include <string>
#include <vector>

namespace dtd {

enum class Step : char { U = 'U', D = 'D' };

// A word over {U, D}; heights are computed on demand.
class PathWord {
public:
    PathWord() = default;
    explicit PathWord(std::vector<Step> steps) : steps_(std::move(steps)) {}
    // Throws DomainError unless s matches ^[UD]*$.
    static PathWord parse(const std::string& s);

    int length() const { return static_cast<int>(steps_.size()); }
    bool empty() const { return steps_.empty(); }
    // 1-based, as in the arc indices
    Step at(int i) const { return steps_.at(static_cast<size_t>(i - 1)); }
    const std::vector<Step>& steps() const { return steps_; }

    // heights()[i] = height after i steps, heights()[0] = 0
    std::vector<int> heights() const;
    int endpoint() const;

    std::string str() const;

    PathWord operator+(const PathWord& o) const;
    friend bool operator==(const PathWord&, const PathWord&) = default;
    friend auto operator<=>(const PathWord& a, const PathWord& b) { return a.str() <=> b.str(); }

private:
    std::vector<Step> steps_;
};

struct Classification {
    bool is_dyck = false;
    bool is_ballot = false;
    int epsilon = 0;
};

struct Chord {
    int open = 0;
    int close = 0;
    int length = 0;
    friend bool operator==(const Chord&, const Chord&) = default;
};

int type_d_sign(const PathWord& w);
Classification classify(const PathWord& w);

// Pointwise comparison of height functions; throws DomainError on length mismatch.
bool is_above(const PathWord& mu, const PathWord& lam);

// All words of length n with sign eps, U before D lexicographically.
std::vector<PathWord> enumerate_type_d(int n, int eps);
// All 2^n words in the same order.
std::vector<PathWord> enumerate_all(int n);
std::vector<PathWord> enumerate_dyck(int semilength);

PathWord truncate_last(const PathWord& w);

// Requires a Dyck word.
std::vector<Chord> chords(const PathWord& w);

// D^N U^M
PathWord lambda_mn(int m, int n);

// Position (exclusive end) of the first return to height 0, or 0 if there is none
// before the path dips or ends.
int prime_dyck_prefix(const PathWord& w);

}  // namespace dtd
