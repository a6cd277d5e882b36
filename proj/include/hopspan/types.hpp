#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace hopspan {

/// Planar point in unit-distance units.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Undirected edge between two point indices, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that makes a geometric construction meaningless (coincident points,
/// collinear triangle, ...).
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// A point lies on a grid line, sub-cell bisector or hexagon boundary.
class BoundaryError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A triplet assignment failed its geometric certificate at run time.
class CertificateViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hopspan
