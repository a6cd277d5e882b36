#pragma once

#include <span>
#include <vector>

namespace hopspan::exact {

// Floating-point expansion arithmetic (Priest / Shewchuk). An expansion is a
// sum of doubles, stored in increasing order of magnitude, whose components
// do not overlap. Zero components are never stored, so the sign of the value
// is the sign of the last component.

inline void two_sum(double a, double b, double& sum, double& err) {
    sum = a + b;
    const double bv = sum - a;
    const double av = sum - bv;
    err = (a - av) + (b - bv);
}

inline void two_diff(double a, double b, double& diff, double& err) {
    diff = a - b;
    const double bv = a - diff;
    const double av = diff + bv;
    err = (a - av) + (bv - b);
}

void two_product(double a, double b, double& prod, double& err);

class Expansion {
public:
    Expansion() = default;
    explicit Expansion(double v);

    static Expansion sum(double a, double b);
    static Expansion diff(double a, double b);
    static Expansion product(double a, double b);

    Expansion operator+(const Expansion& o) const;
    Expansion operator-(const Expansion& o) const;
    Expansion operator*(const Expansion& o) const;
    Expansion operator-() const;
    Expansion scaled(double b) const;

    /// -1, 0 or +1; exact.
    int sign() const;
    /// Nearest-ish double approximation of the value.
    double estimate() const;

    std::span<const double> components() const { return c_; }

private:
    std::vector<double> c_;
};

/// Exact sign of a - b for two expansions.
int compare(const Expansion& a, const Expansion& b);

}  // namespace hopspan::exact
