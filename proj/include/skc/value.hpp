#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace skc {

// Scalar carried by every rate/entropy computation. Either an exact
// rational or a double with an attached comparison tolerance. Arithmetic
// between exact values stays exact; any operation touching a float
// degrades the result to float and keeps the wider tolerance.
class Value {
public:
    static constexpr double kDefaultTolerance = 1e-9;

    Value() : exact_(true), q_(0) {}

    static Value rational(long num, long den = 1);
    static Value rational(const mpq_class& q);
    static Value real(double v, double tolerance = kDefaultTolerance);

    bool is_exact() const { return exact_; }
    double tolerance() const { return exact_ ? 0.0 : tol_; }
    double to_double() const { return exact_ ? q_.get_d() : f_; }

    // Exact payload; DomainError when the value is a float.
    const mpq_class& rational_payload() const;

    // Exact values pass through; floats are lifted to round(f * 2^40) / 2^40.
    // Keeps LP verdicts (comparisons of optima) stable for float sources.
    mpq_class lifted() const;

    Value operator+(const Value& o) const;
    Value operator-(const Value& o) const;
    Value operator*(const Value& o) const;
    Value operator/(const Value& o) const;
    Value operator-() const;

    Value& operator+=(const Value& o) { return *this = *this + o; }
    Value& operator-=(const Value& o) { return *this = *this - o; }

    // Three-way comparison: -1, 0, +1. Exact pairs compare exactly;
    // anything involving a float treats |a-b| <= tol as equal.
    int compare(const Value& o) const;
    int sign() const;

    bool operator==(const Value& o) const { return compare(o) == 0; }
    bool operator!=(const Value& o) const { return compare(o) != 0; }
    bool operator<(const Value& o) const { return compare(o) < 0; }
    bool operator<=(const Value& o) const { return compare(o) <= 0; }
    bool operator>(const Value& o) const { return compare(o) > 0; }
    bool operator>=(const Value& o) const { return compare(o) >= 0; }

    // "p/q (~ 1.25)" for exact values, plain decimal for floats.
    std::string str() const;

private:
    bool exact_;
    mpq_class q_;
    double f_ = 0.0;
    double tol_ = kDefaultTolerance;
};

} // namespace skc
