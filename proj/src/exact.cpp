#include "hopspan/exact.hpp"

#include <cmath>

namespace hopspan::exact {

void two_product(double a, double b, double& prod, double& err) {
    prod = a * b;
    err = std::fma(a, b, -prod);
}

Expansion::Expansion(double v) {
    if (v != 0.0) c_.push_back(v);
}

Expansion Expansion::sum(double a, double b) {
    double s, e;
    two_sum(a, b, s, e);
    Expansion out;
    if (e != 0.0) out.c_.push_back(e);
    if (s != 0.0) out.c_.push_back(s);
    return out;
}

Expansion Expansion::diff(double a, double b) {
    double d, e;
    two_diff(a, b, d, e);
    Expansion out;
    if (e != 0.0) out.c_.push_back(e);
    if (d != 0.0) out.c_.push_back(d);
    return out;
}

Expansion Expansion::product(double a, double b) {
    double p, e;
    two_product(a, b, p, e);
    Expansion out;
    if (e != 0.0) out.c_.push_back(e);
    if (p != 0.0) out.c_.push_back(p);
    return out;
}

namespace {

// Merge by magnitude, then accumulate with two_sum (fast_expansion_sum with
// zero elimination). Assumes round-to-nearest-even.
std::vector<double> linear_sum(std::span<const double> e, std::span<const double> f) {
    std::vector<double> h;
    h.reserve(e.size() + f.size());
    if (e.empty()) return {f.begin(), f.end()};
    if (f.empty()) return {e.begin(), e.end()};

    std::size_t ei = 0, fi = 0;
    auto next = [&]() {
        double v;
        if (fi >= f.size() || (ei < e.size() && std::fabs(e[ei]) < std::fabs(f[fi]))) {
            v = e[ei++];
        } else {
            v = f[fi++];
        }
        return v;
    };

    double q = next();
    double r = next();
    double qnew, hh;
    two_sum(r, q, qnew, hh);
    q = qnew;
    if (hh != 0.0) h.push_back(hh);
    while (ei < e.size() || fi < f.size()) {
        r = next();
        two_sum(q, r, qnew, hh);
        q = qnew;
        if (hh != 0.0) h.push_back(hh);
    }
    if (q != 0.0) h.push_back(q);
    return h;
}

}  // namespace

Expansion Expansion::operator+(const Expansion& o) const {
    Expansion out;
    out.c_ = linear_sum(c_, o.c_);
    return out;
}

Expansion Expansion::operator-() const {
    Expansion out = *this;
    for (double& v : out.c_) v = -v;
    return out;
}

Expansion Expansion::operator-(const Expansion& o) const { return *this + (-o); }

Expansion Expansion::scaled(double b) const {
    Expansion out;
    if (c_.empty() || b == 0.0) return out;
    out.c_.reserve(2 * c_.size());
    double q, hh;
    two_product(c_[0], b, q, hh);
    if (hh != 0.0) out.c_.push_back(hh);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        double p1, p0;
        two_product(c_[i], b, p1, p0);
        double sum;
        two_sum(q, p0, sum, hh);
        if (hh != 0.0) out.c_.push_back(hh);
        // fast_two_sum: |p1| >= |sum|.
        const double qnew = p1 + sum;
        hh = sum - (qnew - p1);
        if (hh != 0.0) out.c_.push_back(hh);
        q = qnew;
    }
    if (q != 0.0) out.c_.push_back(q);
    return out;
}

Expansion Expansion::operator*(const Expansion& o) const {
    Expansion out;
    for (double b : o.c_) out = out + scaled(b);
    return out;
}

int Expansion::sign() const {
    if (c_.empty()) return 0;
    return c_.back() > 0.0 ? 1 : -1;
}

double Expansion::estimate() const {
    double s = 0.0;
    for (double v : c_) s += v;
    return s;
}

int compare(const Expansion& a, const Expansion& b) { return (a - b).sign(); }

}  // namespace hopspan::exact
