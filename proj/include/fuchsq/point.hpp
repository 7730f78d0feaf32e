#ifndef FUCHSQ_POINT_HPP
#define FUCHSQ_POINT_HPP

#include <compare>
#include <string>

#include "fuchsq/rational.hpp"

namespace fuchsq {

// A point of P^1 over Q: a finite rational value or infinity.
// Ordering: finite points by value, infinity last.
class Point {
public:
    Point() : inf_(false), value_(0) {}
    explicit Point(Rat v) : inf_(false), value_(std::move(v)) {}
    static Point infinity() {
        Point p;
        p.inf_ = true;
        return p;
    }

    bool is_infinity() const { return inf_; }
    const Rat& value() const { return value_; }

    bool operator==(const Point& o) const {
        return inf_ == o.inf_ && (inf_ || value_ == o.value_);
    }
    bool operator<(const Point& o) const {
        if (inf_ != o.inf_) return !inf_;
        if (inf_) return false;
        return value_ < o.value_;
    }

    std::string to_string() const { return inf_ ? "inf" : rat_to_string(value_); }
    static Point from_string(const std::string& s);

private:
    bool inf_;
    Rat value_;
};

}  // namespace fuchsq

#endif
