#include "gramcalc/series.hpp"

#include "gramcalc/error.hpp"

#include <algorithm>
#include <optional>

namespace gramcalc {

namespace {

int common_order(const TruncSeries& a, const TruncSeries& b)
{
    return std::min(a.order(), b.order());
}

std::vector<LaurentPoly> zeros(int order)
{
    return std::vector<LaurentPoly>(static_cast<std::size_t>(order) + 1);
}

std::optional<Rational> rational_sqrt(const Rational& q)
{
    if (sgn(q) < 0)
        return std::nullopt;
    Integer n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

} // namespace

Elementary elementary_from_name(const std::string& name)
{
    static const std::map<std::string, Elementary> names{
        {"exp", Elementary::exp},   {"sin", Elementary::sin},   {"cos", Elementary::cos},
        {"tan", Elementary::tan},   {"sec", Elementary::sec},   {"sinh", Elementary::sinh},
        {"cosh", Elementary::cosh}, {"log1p", Elementary::log1p}};
    auto it = names.find(name);
    if (it == names.end())
        throw Error("unknown elementary function '" + name + "'");
    return it->second;
}

TruncSeries elementary_series(Elementary f, int order, const LaurentPoly& scale)
{
    if (order < 0)
        throw Error("series order must be nonnegative");
    if (f == Elementary::tan)
        return divide(elementary_series(Elementary::sin, order, scale), elementary_series(Elementary::cos, order, scale));
    if (f == Elementary::sec)
        return divide(TruncSeries::constant(LaurentPoly(1), order), elementary_series(Elementary::cos, order, scale));

    auto c = zeros(order);
    LaurentPoly power(1);
    for (int n = 0; n <= order; ++n) {
        int sign = 0;
        switch (f) {
        case Elementary::exp:
            sign = 1;
            break;
        case Elementary::sin:
            sign = n % 2 == 0 ? 0 : (n % 4 == 1 ? 1 : -1);
            break;
        case Elementary::cos:
            sign = n % 2 == 1 ? 0 : (n % 4 == 0 ? 1 : -1);
            break;
        case Elementary::sinh:
            sign = n % 2;
            break;
        case Elementary::cosh:
            sign = 1 - n % 2;
            break;
        case Elementary::log1p:
            break;
        default:
            break;
        }
        if (f == Elementary::log1p) {
            if (n > 0)
                c[n] = Scalar(Integer(factorial(n - 1) * (n % 2 == 1 ? 1 : -1))) * power;
        } else if (sign != 0) {
            c[n] = Scalar(sign) * power;
        }
        power *= scale;
    }
    return TruncSeries(std::move(c));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b)
{
    int order = common_order(a, b);
    auto c = zeros(order);
    for (int n = 0; n <= order; ++n)
        c[n] = a[n] + b[n];
    return TruncSeries(std::move(c));
}

TruncSeries operator-(const TruncSeries& a)
{
    auto c = a.coeffs();
    for (auto& p : c)
        p = -p;
    return TruncSeries(std::move(c));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b)
{
    return a + (-b);
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
    int order = common_order(a, b);
    auto c = zeros(order);
    for (int n = 0; n <= order; ++n) {
        LaurentPoly sum;
        for (int k = 0; k <= n; ++k) {
            if (a[k].is_zero() || b[n - k].is_zero())
                continue;
            sum += Scalar(binomial(n, k)) * (a[k] * b[n - k]);
        }
        c[n] = std::move(sum);
    }
    return TruncSeries(std::move(c));
}

TruncSeries operator*(const LaurentPoly& s, const TruncSeries& a)
{
    auto c = a.coeffs();
    for (auto& p : c)
        p = s * p;
    return TruncSeries(std::move(c));
}

TruncSeries divide(const TruncSeries& a, const TruncSeries& b)
{
    int order = common_order(a, b);
    const LaurentPoly& lead = b[0];
    if (lead.is_zero())
        throw NonUnitConstantTerm("series division by a series with zero constant term");
    std::optional<Scalar> lead_inv;
    if (lead.is_constant())
        lead_inv = lead.constant_term().inverse();

    auto q = zeros(order);
    for (int n = 0; n <= order; ++n) {
        LaurentPoly r = a[n];
        for (int k = 0; k < n; ++k) {
            if (q[k].is_zero() || b[n - k].is_zero())
                continue;
            r -= Scalar(binomial(n, k)) * (q[k] * b[n - k]);
        }
        if (lead_inv) {
            q[n] = r * *lead_inv;
        } else {
            try {
                q[n] = exact_divide(r, lead);
            } catch (const InexactDivision&) {
                throw NonUnitConstantTerm("constant term of the divisor does not divide coefficient " +
                                          std::to_string(n));
            }
        }
    }
    return TruncSeries(std::move(q));
}

TruncSeries d_dt(const TruncSeries& s)
{
    if (s.order() < 1)
        throw Error("cannot differentiate an order-0 series");
    return TruncSeries(std::vector<LaurentPoly>(s.coeffs().begin() + 1, s.coeffs().end()));
}

TruncSeries integrate(const TruncSeries& s)
{
    std::vector<LaurentPoly> c;
    c.reserve(s.coeffs().size() + 1);
    c.emplace_back();
    c.insert(c.end(), s.coeffs().begin(), s.coeffs().end());
    return TruncSeries(std::move(c));
}

TruncSeries log(const TruncSeries& s)
{
    if (!(s[0] == LaurentPoly(1)))
        throw NonUnitConstantTerm("logarithm needs constant term 1");
    if (s.order() == 0)
        return TruncSeries::constant(LaurentPoly(), 0);
    return integrate(divide(d_dt(s), s.truncated(s.order() - 1)));
}

TruncSeries exp(const TruncSeries& s)
{
    if (!s[0].is_zero())
        throw NonUnitConstantTerm("exponential needs constant term 0");
    int order = s.order();
    auto e = zeros(order);
    e[0] = LaurentPoly(1);
    for (int n = 0; n < order; ++n) {
        LaurentPoly sum;
        for (int k = 0; k <= n; ++k) {
            if (s[k + 1].is_zero() || e[n - k].is_zero())
                continue;
            sum += Scalar(binomial(n, k)) * (s[k + 1] * e[n - k]);
        }
        e[n + 1] = std::move(sum);
    }
    return TruncSeries(std::move(e));
}

TruncSeries series_arith(SeriesOp op, const TruncSeries& a, const TruncSeries* b)
{
    auto need_b = [&]() -> const TruncSeries& {
        if (!b)
            throw Error("binary series operation needs a second operand");
        return *b;
    };
    switch (op) {
    case SeriesOp::add:
        return a + need_b();
    case SeriesOp::sub:
        return a - need_b();
    case SeriesOp::mul:
        return a * need_b();
    case SeriesOp::div:
        return divide(a, need_b());
    case SeriesOp::log:
        return log(a);
    case SeriesOp::exp:
        return exp(a);
    case SeriesOp::d_dt:
        return d_dt(a);
    case SeriesOp::integrate:
        return integrate(a);
    }
    return a;
}

TruncSeries compose_poly_series(const LaurentPoly& p, const TruncSeries& s, const std::string& var)
{
    auto coeffs = univariate_coefficients(p, var);
    int order = s.order();
    if (coeffs.empty())
        return TruncSeries::constant(LaurentPoly(), order);
    if (coeffs.begin()->first < 0)
        throw Error("composition needs nonnegative exponents");
    int degree = coeffs.rbegin()->first;
    TruncSeries acc = TruncSeries::constant(LaurentPoly(), order);
    for (int d = degree; d >= 0; --d) {
        acc = acc * s;
        auto it = coeffs.find(d);
        if (it != coeffs.end())
            acc[0] += LaurentPoly(it->second);
    }
    return acc;
}

SeriesComparison compare_series(const TruncSeries& a, const TruncSeries& b)
{
    if (a.order() != b.order())
        throw Error("compare_series needs equal orders (" + std::to_string(a.order()) + " vs " +
                    std::to_string(b.order()) + ")");
    for (int n = 0; n <= a.order(); ++n)
        if (!(a[n] == b[n]))
            return SeriesComparison{false, n};
    return {};
}

// ---------------------------------------------------------------------------

const Scalar& RadicalPoint::value(const std::string& var) const
{
    auto it = values.find(var);
    if (it == values.end())
        throw InvalidRadicalWitness("radical point has no value for '" + var + "'");
    return it->second;
}

const Scalar& RadicalPoint::witness(const std::string& name) const
{
    auto it = witnesses.find(name);
    if (it == witnesses.end())
        throw InvalidRadicalWitness("radical point has no witness for " + name);
    return it->second;
}

void require_square_root(const Scalar& witness, const Scalar& radicand, const std::string& what)
{
    if (!(witness * witness == radicand))
        throw InvalidRadicalWitness("witness " + witness.to_string() + " squared is not " + what + " = " +
                                    radicand.to_string());
}

ClosedForm closed_form_from_name(const std::string& name)
{
    static const std::map<std::string, ClosedForm> names{
        {"gessel_L", ClosedForm::gessel_L},
        {"bivariate_L", ClosedForm::bivariate_L},
        {"hoffman_P", ClosedForm::hoffman_P},
        {"hoffman_Q", ClosedForm::hoffman_Q},
        {"eulerian_egf", ClosedForm::eulerian_egf},
        {"eulerian_egf_full", ClosedForm::eulerian_egf_full},
        {"eulerian_egf_uni", ClosedForm::eulerian_egf_uni},
        {"david_barton_L", ClosedForm::david_barton_L},
        {"david_barton_M", ClosedForm::david_barton_M},
    };
    auto it = names.find(name);
    if (it == names.end())
        throw Error("unknown closed form '" + name + "'");
    return it->second;
}

std::string closed_form_name(ClosedForm f)
{
    switch (f) {
    case ClosedForm::gessel_L:
        return "gessel_L";
    case ClosedForm::bivariate_L:
        return "bivariate_L";
    case ClosedForm::hoffman_P:
        return "hoffman_P";
    case ClosedForm::hoffman_Q:
        return "hoffman_Q";
    case ClosedForm::eulerian_egf:
        return "eulerian_egf";
    case ClosedForm::eulerian_egf_full:
        return "eulerian_egf_full";
    case ClosedForm::eulerian_egf_uni:
        return "eulerian_egf_uni";
    case ClosedForm::david_barton_L:
        return "david_barton_L";
    case ClosedForm::david_barton_M:
        return "david_barton_M";
    }
    return "?";
}

RadicalPoint radical_point_from_values(ClosedForm f, const Point& values)
{
    RadicalPoint p{values, {}};
    auto root = [&](const std::string& label, const Scalar& radicand) {
        if (!radicand.is_real())
            throw InvalidRadicalWitness(label + " needs a real radicand");
        auto r = rational_sqrt(radicand.re());
        if (!r)
            throw InvalidRadicalWitness(label + " = sqrt(" + radicand.to_string() + ") is not rational");
        p.witnesses[label] = Scalar(*r);
    };
    switch (f) {
    case ClosedForm::gessel_L:
        root("sqrt(1-x)", Scalar(1) - p.value("x"));
        break;
    case ClosedForm::bivariate_L:
        root("sqrt(y^2-x^2)", p.value("y") * p.value("y") - p.value("x") * p.value("x"));
        break;
    case ClosedForm::david_barton_L:
    case ClosedForm::david_barton_M:
        root("sqrt(x)", p.value("x"));
        root("sqrt(1-x)", Scalar(1) - p.value("x"));
        break;
    default:
        break;
    }
    return p;
}

RadicalPoint default_point(ClosedForm f)
{
    switch (f) {
    case ClosedForm::gessel_L:
        return radical_point_from_values(f, {{"x", Scalar(Rational(3, 4))}});
    case ClosedForm::bivariate_L:
        return radical_point_from_values(f, {{"x", Scalar(3)}, {"y", Scalar(5)}});
    case ClosedForm::david_barton_L:
    case ClosedForm::david_barton_M:
        return radical_point_from_values(f, {{"x", Scalar(Rational(9, 25))}});
    default:
        return {};
    }
}

namespace {

TruncSeries at_scale(Elementary f, int order, const Scalar& scale)
{
    return elementary_series(f, order, LaurentPoly(scale));
}

TruncSeries constant_series(const LaurentPoly& c, int order)
{
    return TruncSeries::constant(c, order);
}

const RadicalPoint& need_point(const RadicalPoint* p, ClosedForm f)
{
    if (!p)
        throw InvalidRadicalWitness(closed_form_name(f) + " needs a radical point");
    return *p;
}

/// cosh(z) with z = r t + log(sqrt(x) / (1 + r)), r = sqrt(1 - x).
TruncSeries cosh_z(const RadicalPoint& p, int order)
{
    const Scalar& x = p.value("x");
    const Scalar& sx = p.witness("sqrt(x)");
    const Scalar& r = p.witness("sqrt(1-x)");
    require_square_root(sx, x, "x");
    require_square_root(r, Scalar(1) - x, "1-x");
    if (sgn(sx.re()) <= 0 || sgn(r.re()) < 0)
        throw InvalidRadicalWitness("David-Barton forms need sqrt(x) > 0 and sqrt(1-x) >= 0");
    Scalar ea = sx / (Scalar(1) + r);
    Scalar cosh_a = (ea + ea.inverse()) / Scalar(2);
    Scalar sinh_a = (ea - ea.inverse()) / Scalar(2);
    return LaurentPoly(cosh_a) * at_scale(Elementary::cosh, order, r) +
           LaurentPoly(sinh_a) * at_scale(Elementary::sinh, order, r);
}

} // namespace

TruncSeries closed_form_series(ClosedForm f, const RadicalPoint* point, int order)
{
    if (order < 0)
        throw Error("series order must be nonnegative");
    const LaurentPoly one(1);
    switch (f) {
    case ClosedForm::gessel_L: {
        const auto& p = need_point(point, f);
        const Scalar& x = p.value("x");
        const Scalar& r = p.witness("sqrt(1-x)");
        require_square_root(r, Scalar(1) - x, "1-x");
        // r / (r cosh(rt) - sinh(rt))
        TruncSeries den = LaurentPoly(r) * at_scale(Elementary::cosh, order, r) - at_scale(Elementary::sinh, order, r);
        return divide(constant_series(LaurentPoly(r), order), den);
    }
    case ClosedForm::bivariate_L: {
        const auto& p = need_point(point, f);
        const Scalar& x = p.value("x");
        const Scalar& y = p.value("y");
        const Scalar& s = p.witness("sqrt(y^2-x^2)");
        require_square_root(s, y * y - x * x, "y^2-x^2");
        // x s / (s cosh(st) - y sinh(st))
        TruncSeries den =
            LaurentPoly(s) * at_scale(Elementary::cosh, order, s) - LaurentPoly(y) * at_scale(Elementary::sinh, order, s);
        return divide(constant_series(LaurentPoly(x * s), order), den);
    }
    case ClosedForm::hoffman_P: {
        LaurentPoly x = LaurentPoly::variable("x");
        TruncSeries tan = elementary_series(Elementary::tan, order);
        return divide(constant_series(x, order) + tan, constant_series(one, order) - x * tan);
    }
    case ClosedForm::hoffman_Q: {
        LaurentPoly x = LaurentPoly::variable("x");
        TruncSeries den = elementary_series(Elementary::cos, order) - x * elementary_series(Elementary::sin, order);
        return divide(constant_series(one, order), den);
    }
    case ClosedForm::eulerian_egf: {
        VarTable xy{"x", "y"};
        LaurentPoly x = LaurentPoly::variable(xy, "x");
        LaurentPoly y = LaurentPoly::variable(xy, "y");
        TruncSeries ex = elementary_series(Elementary::exp, order, x);
        TruncSeries ey = elementary_series(Elementary::exp, order, y);
        return divide((x * y) * (ex - ey), x * ey - y * ex);
    }
    case ClosedForm::eulerian_egf_full: {
        VarTable xy{"x", "y"};
        LaurentPoly x = LaurentPoly::variable(xy, "x");
        LaurentPoly y = LaurentPoly::variable(xy, "y");
        TruncSeries e = elementary_series(Elementary::exp, order, y - x);
        return divide(constant_series(y - x, order), constant_series(one, order) - (x * y.pow(-1)) * e);
    }
    case ClosedForm::eulerian_egf_uni: {
        LaurentPoly x = LaurentPoly::variable("x");
        TruncSeries e = elementary_series(Elementary::exp, order, one - x);
        return divide(constant_series(one - x, order), constant_series(one, order) - x * e);
    }
    case ClosedForm::david_barton_L:
    case ClosedForm::david_barton_M: {
        const auto& p = need_point(point, f);
        TruncSeries c = cosh_z(p, order);
        TruncSeries unit = constant_series(one, order);
        TruncSeries inv_minus = divide(unit, c - unit);
        TruncSeries inv_plus = divide(unit, c + unit);
        LaurentPoly half(Scalar(Rational(1, 2)));
        return half * (f == ClosedForm::david_barton_L ? inv_minus + inv_plus : inv_minus - inv_plus);
    }
    }
    throw Error("unhandled closed form");
}

json series_to_json(const TruncSeries& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(to_json(c));
    return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

TruncSeries series_from_json(const json& j)
{
    try {
        std::vector<LaurentPoly> c;
        for (const auto& p : j.at("coeffs"))
            c.push_back(from_json(p));
        if (static_cast<int>(c.size()) != j.at("order").get<int>() + 1)
            throw ParseError("series order does not match coefficient count", 0);
        return TruncSeries(std::move(c));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed series JSON: ") + e.what(), 0);
    }
}

} // namespace gramcalc
