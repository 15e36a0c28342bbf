#pragma once

#include "gramcalc/codec.hpp"
#include "gramcalc/laurent.hpp"
#include "gramcalc/trunc_series.hpp"

#include <map>
#include <optional>
#include <string>

namespace gramcalc {

enum class Elementary { exp, sin, cos, tan, sec, sinh, cosh, log1p };

Elementary elementary_from_name(const std::string& name);

/// EGF coefficients of f(scale * t) up to `order`.
TruncSeries elementary_series(Elementary f, int order, const LaurentPoly& scale = LaurentPoly(1));

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a);
/// Binomial convolution.
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const LaurentPoly& c, const TruncSeries& a);

/// a / b. The constant term of b must divide exactly every coefficient the
/// recursion needs; a unit constant always does. Throws NonUnitConstantTerm.
TruncSeries divide(const TruncSeries& a, const TruncSeries& b);
/// Requires constant term exactly 1.
TruncSeries log(const TruncSeries& s);
/// Requires constant term 0.
TruncSeries exp(const TruncSeries& s);
/// Termwise d/dt; the order drops by one.
TruncSeries d_dt(const TruncSeries& s);
/// Antiderivative with zero constant term; the order grows by one.
TruncSeries integrate(const TruncSeries& s);

enum class SeriesOp { add, sub, mul, div, log, exp, d_dt, integrate };

TruncSeries series_arith(SeriesOp op, const TruncSeries& a, const TruncSeries* b = nullptr);

/// P(s) for P univariate in `var` with nonnegative exponents.
TruncSeries compose_poly_series(const LaurentPoly& p, const TruncSeries& s, const std::string& var = "x");

struct SeriesComparison {
    bool equal = true;
    int first_mismatch = -1;
};

/// Coefficientwise exact comparison of two series of the same order.
SeriesComparison compare_series(const TruncSeries& a, const TruncSeries& b);

/// Rational assignment plus exact square-root witnesses, e.g. x = 3/4 with
/// witness "sqrt(1-x)" = 1/2.
struct RadicalPoint {
    Point values;
    std::map<std::string, Scalar> witnesses;

    const Scalar& value(const std::string& var) const;
    const Scalar& witness(const std::string& name) const;
};

/// Checks witness^2 == radicand; throws InvalidRadicalWitness otherwise.
void require_square_root(const Scalar& witness, const Scalar& radicand, const std::string& what);

enum class ClosedForm {
    gessel_L,          ///< L(x,t) at a point with witness sqrt(1-x)
    bivariate_L,       ///< L(x,y,t) at a point with witness sqrt(y^2-x^2)
    hoffman_P,         ///< (x + tan t) / (1 - x tan t), symbolic in x
    hoffman_Q,         ///< 1 / (cos t - x sin t), symbolic in x
    eulerian_egf,      ///< xy (e^{xt} - e^{yt}) / (x e^{yt} - y e^{xt}), symbolic, n >= 1 part
    eulerian_egf_full, ///< (y - x) / (1 - x y^{-1} e^{(y-x)t}), symbolic
    eulerian_egf_uni,  ///< (1 - x) / (1 - x e^{(1-x)t}), symbolic
    david_barton_L,    ///< (1/2)(1/(cosh z - 1) + 1/(cosh z + 1)) at a point
    david_barton_M,    ///< (1/2)(1/(cosh z - 1) - 1/(cosh z + 1)) at a point
};

ClosedForm closed_form_from_name(const std::string& name);
std::string closed_form_name(ClosedForm f);

/// Expands a closed-form generating function to `order`. Point-valued forms
/// need `point`; symbolic forms ignore it.
TruncSeries closed_form_series(ClosedForm f, const RadicalPoint* point, int order);

/// Default radical points: gessel_L x=3/4, bivariate_L (3,5), david_barton x=9/25.
RadicalPoint default_point(ClosedForm f);

/// Fills in the witnesses a closed form needs from plain rational values,
/// taking exact rational square roots. Throws InvalidRadicalWitness when a
/// required radicand is not a rational square.
RadicalPoint radical_point_from_values(ClosedForm f, const Point& values);

json series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const json& j);

} // namespace gramcalc
