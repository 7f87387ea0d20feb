#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace codesign {

/// Non-negative cost extended with +infinity. Addition saturates at infinity;
/// finite sums of integer-valued costs are exact.
class ExtendedCost {
public:
    constexpr ExtendedCost() = default;

    ExtendedCost(double v) : v_(v) {
        if (std::isnan(v) || v < 0.0) {
            throw std::invalid_argument("cost must be non-negative");
        }
    }

    static ExtendedCost infinity() noexcept {
        ExtendedCost c;
        c.v_ = std::numeric_limits<double>::infinity();
        return c;
    }

    bool is_infinite() const noexcept { return std::isinf(v_); }
    bool is_finite() const noexcept { return !std::isinf(v_); }

    /// Raw IEEE value; +inf when infinite.
    double value() const noexcept { return v_; }

    friend ExtendedCost operator+(ExtendedCost a, ExtendedCost b) noexcept {
        ExtendedCost r;
        r.v_ = a.v_ + b.v_;
        return r;
    }
    ExtendedCost& operator+=(ExtendedCost o) noexcept {
        v_ += o.v_;
        return *this;
    }

    friend bool operator==(ExtendedCost a, ExtendedCost b) noexcept { return a.v_ == b.v_; }
    friend std::partial_ordering operator<=>(ExtendedCost a, ExtendedCost b) noexcept {
        return a.v_ <=> b.v_;
    }

    friend std::ostream& operator<<(std::ostream& os, ExtendedCost c) {
        if (c.is_infinite()) return os << "inf";
        return os << c.v_;
    }

private:
    double v_ = 0.0;
};

/// Scale by a strictly positive factor; infinity stays infinity.
inline ExtendedCost scaled(double lambda, ExtendedCost c) {
    if (!(lambda > 0.0)) throw std::invalid_argument("scale factor must be positive");
    if (c.is_infinite()) return ExtendedCost::infinity();
    return ExtendedCost(lambda * c.value());
}

inline std::string to_string(ExtendedCost c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

}  // namespace codesign
