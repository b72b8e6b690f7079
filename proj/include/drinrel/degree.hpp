#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "error.hpp"

namespace drinrel {

/// Polynomial degree with a distinguished -infinity for the zero polynomial.
/// No implicit conversion to integers; value() of -infinity throws.
class Degree {
public:
    constexpr Degree() = default;  // -infinity
    constexpr explicit Degree(long v) : value_(v), finite_(true) {}

    static constexpr Degree neg_inf() { return Degree(); }

    constexpr bool is_neg_inf() const noexcept { return !finite_; }
    constexpr bool is_finite() const noexcept { return finite_; }

    long value() const {
        if (!finite_) throw InputError("degree of the zero polynomial has no integer value");
        return value_;
    }

    /// Degree of a product.
    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        if (!a.finite_ || !b.finite_) return Degree();
        return Degree(a.value_ + b.value_);
    }

    friend constexpr bool operator==(Degree a, Degree b) noexcept {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }
    friend constexpr bool operator==(Degree a, long b) noexcept { return a.finite_ && a.value_ == b; }
    friend constexpr std::strong_ordering operator<=>(Degree a, long b) noexcept {
        if (!a.finite_) return std::strong_ordering::less;
        return a.value_ <=> b;
    }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }
    friend std::ostream& operator<<(std::ostream& os, Degree d) { return os << d.to_string(); }

private:
    long value_ = 0;
    bool finite_ = false;
};

inline Degree max(Degree a, Degree b) noexcept { return a < b ? b : a; }
inline Degree min(Degree a, Degree b) noexcept { return a < b ? a : b; }

}  // namespace drinrel
