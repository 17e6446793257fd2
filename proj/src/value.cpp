#include "skc/value.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "skc/errors.hpp"

namespace skc {

Value Value::rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Value v;
    v.exact_ = true;
    v.q_ = mpq_class(num, den);
    v.q_.canonicalize();
    return v;
}

Value Value::rational(const mpq_class& q) {
    Value v;
    v.exact_ = true;
    v.q_ = q;
    v.q_.canonicalize();
    return v;
}

Value Value::real(double f, double tolerance) {
    Value v;
    v.exact_ = false;
    v.f_ = f;
    v.tol_ = tolerance;
    return v;
}

const mpq_class& Value::rational_payload() const {
    if (!exact_) throw DomainError("value is not exact");
    return q_;
}

mpq_class Value::lifted() const {
    if (exact_) return q_;
    const double scale = 4398046511104.0; // 2^40
    mpq_class q(static_cast<long>(std::llround(f_ * scale)), 4398046511104L);
    q.canonicalize();
    return q;
}

Value Value::operator+(const Value& o) const {
    if (exact_ && o.exact_) return rational(mpq_class(q_ + o.q_));
    return real(to_double() + o.to_double(), std::max(tolerance(), o.tolerance()));
}

Value Value::operator-(const Value& o) const {
    if (exact_ && o.exact_) return rational(mpq_class(q_ - o.q_));
    return real(to_double() - o.to_double(), std::max(tolerance(), o.tolerance()));
}

Value Value::operator*(const Value& o) const {
    if (exact_ && o.exact_) return rational(mpq_class(q_ * o.q_));
    return real(to_double() * o.to_double(), std::max(tolerance(), o.tolerance()));
}

Value Value::operator/(const Value& o) const {
    if (exact_ && o.exact_) {
        if (o.q_ == 0) throw DomainError("division by zero");
        return rational(mpq_class(q_ / o.q_));
    }
    return real(to_double() / o.to_double(), std::max(tolerance(), o.tolerance()));
}

Value Value::operator-() const {
    if (exact_) return rational(mpq_class(-q_));
    return real(-f_, tol_);
}

int Value::compare(const Value& o) const {
    if (exact_ && o.exact_) {
        int c = cmp(q_, o.q_);
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    double tol = std::max(tolerance(), o.tolerance());
    if (tol <= 0) tol = kDefaultTolerance;
    double d = to_double() - o.to_double();
    if (d > tol) return 1;
    if (d < -tol) return -1;
    return 0;
}

int Value::sign() const { return compare(Value()); }

std::string Value::str() const {
    std::ostringstream os;
    if (exact_) {
        os << q_.get_num().get_str();
        if (q_.get_den() != 1)
            os << "/" << q_.get_den().get_str() << " (≈ " << q_.get_d() << ")";
    } else {
        os << f_;
    }
    return os.str();
}

} // namespace skc
