#pragma once

/**
 * @file xreal.hpp
 * @brief Extended real values: a certified finite enclosure or +infinity.
 *
 * Exponent-type quantities are naturally elements of [0, +inf]. XReal
 * models exactly that: either a finite value carried as a RatInterval
 * enclosure (a point interval when known exactly), or the distinguished
 * value +inf, which compares greater than every finite value.
 */

#include <dio/interval.hpp>

#include <optional>
#include <string>

namespace dio {

class XReal {
  public:
    /// Finite zero.
    XReal() : finite_(Rational(0)) {}
    /// Finite, exactly known.
    XReal(const Rational& exact) : finite_(RatInterval(exact)) {}
    /// Finite, known up to an enclosure.
    XReal(const RatInterval& enclosure) : finite_(enclosure) {}

    static XReal infinity() { return XReal(infinite_tag{}); }

    bool is_infinite() const { return !finite_.has_value(); }
    bool is_finite() const { return finite_.has_value(); }
    /// True when finite and carried as a single rational point.
    bool is_exact() const { return finite_ && finite_->is_point(); }

    /// Finite enclosure; throws std::domain_error on +inf.
    const RatInterval& enclosure() const {
        if (!finite_) throw std::domain_error("XReal: enclosure of +inf");
        return *finite_;
    }

    /// Certified order against another XReal: -1 / 0(equal) / +1, or
    /// nullopt when two overlapping finite enclosures cannot be separated.
    /// +inf equals +inf and exceeds every finite value.
    std::optional<int> compare(const XReal& other) const {
        if (is_infinite() && other.is_infinite()) return 0;
        if (is_infinite()) return 1;
        if (other.is_infinite()) return -1;
        return three_way_compare(*finite_, *other.finite_);
    }

    /// "inf" or a decimal rendering of the enclosure midpoint.
    std::string to_string(int significant_digits = 15) const {
        if (is_infinite()) return "inf";
        return to_decimal_string(finite_->midpoint(), significant_digits);
    }

  private:
    struct infinite_tag {};
    explicit XReal(infinite_tag) : finite_(std::nullopt) {}

    std::optional<RatInterval> finite_;
};

}  // namespace dio
