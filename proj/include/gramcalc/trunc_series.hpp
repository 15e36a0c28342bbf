#pragma once

#include "gramcalc/laurent.hpp"

#include <vector>

namespace gramcalc {

/// Truncated exponential generating function sum_{n<=N} c_n t^n / n!.
/// Coefficients are stored n!-scaled, so c_n is the n-th derivative at t=0.
class TruncSeries {
public:
    TruncSeries() : coeffs_(1) {}
    explicit TruncSeries(std::vector<LaurentPoly> coeffs);

    /// Series with every coefficient zero except c_0 = value.
    static TruncSeries constant(const LaurentPoly& value, int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const LaurentPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
    LaurentPoly& operator[](std::size_t n) { return coeffs_.at(n); }
    const std::vector<LaurentPoly>& coeffs() const noexcept { return coeffs_; }

    /// Copy truncated to `order` (which must not exceed the current order).
    TruncSeries truncated(int order) const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<LaurentPoly> coeffs_;
};

} // namespace gramcalc
