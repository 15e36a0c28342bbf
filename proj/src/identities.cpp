#include "gramcalc/identities.hpp"

#include "gramcalc/error.hpp"
#include "gramcalc/grammar.hpp"
#include "gramcalc/oracle.hpp"
#include "gramcalc/reference_tables.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace gramcalc {

namespace {

using LP = LaurentPoly;
using F = Family;
using Result = std::optional<Witness>;

#define RETURN_IF(expr)                \
    do {                               \
        if (auto w_ = (expr))          \
            return w_;                 \
    } while (0)

LP var(const char* name) { return LP::variable(name); }

Scalar binom(int n, int k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(r);
}

Scalar pow2(int e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return Scalar(r);
}

Scalar half() { return Scalar(Rational(1, 2)); }

Result differ(int n, const LP& lhs, const LP& rhs, const std::string& detail)
{
    if (lhs == rhs)
        return std::nullopt;
    return Witness{n, render(lhs), render(rhs), detail};
}

Result differ(int n, const Scalar& lhs, const Scalar& rhs, const std::string& detail)
{
    if (lhs == rhs)
        return std::nullopt;
    return Witness{n, lhs.to_string(), rhs.to_string(), detail};
}

Result fails(int n, const std::string& lhs, const std::string& rhs, const std::string& detail)
{
    return Witness{n, lhs, rhs, detail};
}

Result series_differ(const TruncSeries& a, const TruncSeries& b, const std::string& detail)
{
    auto c = compare_series(a, b);
    if (c.equal)
        return std::nullopt;
    auto k = static_cast<std::size_t>(c.first_mismatch);
    return Witness{c.first_mismatch, render(a[k]), render(b[k]), detail + ", first differing coefficient of t^k/k!"};
}

/// sum_k C(n,k) f_k g_{n-k}
LP convolution(const CheckContext& ctx, F f, F g, int n)
{
    LP sum;
    for (int k = 0; k <= n; ++k)
        sum += binom(n, k) * (ctx.family(f, k) * ctx.family(g, n - k));
    return sum;
}

/// sum_{n<=order} family(f, n + shift) t^n / n!
TruncSeries family_series(const CheckContext& ctx, F f, int order, int shift = 0)
{
    std::vector<LP> c;
    for (int n = 0; n <= order; ++n)
        c.push_back(ctx.family(f, n + shift));
    return TruncSeries(std::move(c));
}

TruncSeries eval_series(const TruncSeries& s, const Point& p)
{
    std::vector<LP> c;
    for (const auto& coeff : s.coeffs())
        c.emplace_back(evaluate(coeff, p));
    return TruncSeries(std::move(c));
}

Scalar at(const LP& f, const char* v, const Scalar& value) { return evaluate(f, {{v, value}}); }

/// Wraps a per-n statement; library errors raised at some n become a
/// witness at that n.
Checker per_n(std::function<Result(const CheckContext&, int)> body)
{
    return [body = std::move(body)](const CheckContext& ctx, int lo, int hi) -> Result {
        for (int n = lo; n <= hi; ++n) {
            try {
                RETURN_IF(body(ctx, n));
            } catch (const BoundExceeded&) {
                throw;
            } catch (const Error& e) {
                return fails(n, "error", e.what(), "exception");
            }
        }
        return std::nullopt;
    };
}

/// Series statement checked once at truncation order hi.
Checker at_order(std::function<Result(const CheckContext&, int)> body)
{
    return [body = std::move(body)](const CheckContext& ctx, int lo, int hi) -> Result {
        if (hi < lo)
            return std::nullopt;
        try {
            return body(ctx, hi);
        } catch (const BoundExceeded&) {
            throw;
        } catch (const Error& e) {
            return fails(hi, "error", e.what(), "exception");
        }
    };
}

Result transformation_holds(const Grammar& old_g, const SubstitutionMap& phi, const Grammar& new_g, int n,
                            const std::string& detail)
{
    auto t = verify_transformation(old_g, phi, new_g);
    if (t.holds)
        return std::nullopt;
    return Witness{n, render(t.derived), render(t.expected), detail + ", variable " + t.variable};
}

// Extended Eulerian grammar over (xb, yb) with z^2 = xb*yb.
const Grammar& sqrt_eulerian()
{
    static const Grammar g = [] {
        LP xb = var("xb"), yb = var("yb");
        Grammar base(VarTable{"xb", "yb"}, {{"xb", xb * yb}, {"yb", xb * yb}});
        return extend_sqrt(base, "z", xb * yb);
    }();
    return g;
}

SubstitutionMap sqrt_phi()
{
    return {{"x", var("z")}, {"y", half() * (var("xb") + var("yb"))}};
}

LP eulerian_in_bars(const LP& a_xy) { return substitute(a_xy, {{"x", var("xb")}, {"y", var("yb")}}); }

// Univariate polynomial from a k -> coefficient table.
LP table_poly(const CoefficientTable& t)
{
    LP p;
    for (const auto& [k, c] : t.coeffs)
        p += Scalar(c) * var("x").pow(k);
    return p;
}

LP coeffs_poly(const LP& f)
{
    LP p;
    for (const auto& [k, c] : univariate_coefficients(f, "x"))
        p += c * var("x").pow(k);
    return p;
}

std::string table_text(const CoefficientTable& t)
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, c] : t.coeffs) {
        os << (first ? "" : ", ") << k << ": " << c.get_str();
        first = false;
    }
    os << "}";
    return os.str();
}

Result nonnegative(const CoefficientTable& t, int n, const std::string& detail)
{
    for (const auto& [k, c] : t.coeffs)
        if (sgn(c) < 0)
            return fails(n, table_text(t), "nonnegative coefficients", detail);
    return std::nullopt;
}

// ---------------------------------------------------------------- Eulerian

Result eulerian_egf(const CheckContext& ctx, int order)
{
    TruncSeries a = family_series(ctx, F::eulerian_biv, order);
    RETURN_IF(series_differ(a, closed_form_series(ClosedForm::eulerian_egf_full, nullptr, order), "A(x,y,t)"));
    TruncSeries a1 = a;
    a1[0] = LP();
    RETURN_IF(series_differ(a1, closed_form_series(ClosedForm::eulerian_egf, nullptr, order), "n >= 1 part"));
    return series_differ(family_series(ctx, F::eulerian_uni, order),
                         closed_form_series(ClosedForm::eulerian_egf_uni, nullptr, order), "A(x,t)");
}

Result eulerian_palindromic(const CheckContext& ctx, int n)
{
    LP a = ctx.family(F::eulerian_biv, n);
    RETURN_IF(differ(n, a, substitute(a, {{"x", var("y")}, {"y", var("x")}}), "A_n(x,y) = A_n(y,x)"));
    LP u = ctx.family(F::eulerian_uni, n);
    LP rev = substitute(u, {{"x", var("x").pow(-1)}}) * var("x").pow(n + 1);
    RETURN_IF(differ(n, u, rev, "x^{n+1} A_n(1/x) = A_n(x)"));
    Scalar sum = at(u, "x", Scalar(1));
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    return differ(n, sum, Scalar(fact), "A_n(1) = n!");
}

Result gamma_eulerian(const CheckContext& ctx, int n)
{
    LP x = var("x"), y = var("y");
    RETURN_IF(transformation_holds(grammars::eulerian(), {{"u", x * y}, {"v", half() * (x + y)}}, grammars::dumont(), n,
                                   "u = xy, v = (x+y)/2"));
    LP a = ctx.family(F::eulerian_biv, n);
    LP d = substitute(ctx.family(F::dumont, n), {{"u", x * y}, {"v", half() * (x + y)}});
    RETURN_IF(differ(n, d, a, "D_n(xy, (x+y)/2) = A_n(x,y)"));
    CoefficientTable g;
    try {
        g = gamma_expansion_of(a, n);
    } catch (const NotGammaExpressible& e) {
        return fails(n, render(a), e.what(), "gamma expansion");
    }
    return nonnegative(g, n, "gamma coefficients");
}

Result euler_complex(const CheckContext& ctx, int n)
{
    Scalar an = at(ctx.family(F::eulerian_uni, n), "x", Scalar::i());
    // A_n here carries one extra factor of x, hence the i in the denominator.
    Scalar den = Scalar::i();
    for (int k = 0; k < n - 1; ++k)
        den *= Scalar(Rational(1), Rational(1));
    Scalar q = an / den;
    if (!q.is_real())
        return fails(n, q.to_string(), "real value", "A_n(i)/(i (1+i)^{n-1}) has nonzero imaginary part");
    Scalar e = evaluate(ctx.family(F::andre_biv, n), {{"u", Scalar(1)}, {"v", Scalar(1)}});
    return differ(n, q, e, "A_n(i)/(i (1+i)^{n-1}) = E_n");
}

// -------------------------------------------------------- Dumont / Andre

Result dumont_andre(const CheckContext& ctx, int n)
{
    LP lhs = substitute(ctx.family(F::dumont, n), {{"u", Scalar(2) * var("u")}});
    return differ(n, lhs, pow2(n) * ctx.family(F::andre_biv, n), "D_n(2u,v) = 2^n E_n(u,v)");
}

Result andre_eulerian(const CheckContext& ctx, int n)
{
    LP x = var("x"), y = var("y");
    LP lhs = pow2(n) * substitute(ctx.family(F::andre_biv, n), {{"u", half() * x * y}, {"v", half() * (x + y)}});
    return differ(n, lhs, ctx.family(F::eulerian_biv, n), "2^n E_n(xy/2, (x+y)/2) = A_n(x,y)");
}

// ------------------------------------------------------------- oracles

Result oracle_pair(const CheckContext& ctx, F f, int n)
{
    return differ(n, family_poly_oracle(f, n, std::max(ctx.oracle_cap, default_enumeration_bound)), ctx.family(f, n),
                  "oracle " + family_name(f));
}

Checker oracle_check(std::vector<F> fams)
{
    return per_n([fams](const CheckContext& ctx, int n) -> Result {
        for (F f : fams)
            RETURN_IF(oracle_pair(ctx, f, n));
        return std::nullopt;
    });
}

int oracle_bound(const CheckContext& ctx) { return std::max(ctx.oracle_cap, default_enumeration_bound); }

Result dumont_trees(const CheckContext& ctx, int n)
{
    RETURN_IF(oracle_pair(ctx, F::dumont, n));
    return differ(n, dumont_plane_oracle(n, oracle_bound(ctx)), ctx.family(F::dumont, n), "(u,2v)-labeled plane trees");
}

Result planted_forests(const CheckContext& ctx, int n)
{
    return differ(n, planted_forest_oracle(n, oracle_bound(ctx)), derive_n(grammars::exp_dumont(), var("a"), n),
                  "planted forests = D^n(a)");
}

// ----------------------------------------------------------------- peaks

Result mw_shift(const CheckContext& ctx, int n)
{
    RETURN_IF(differ(n, ctx.family(F::lr_peak_biv, n), ctx.family(F::interior_peak_biv, n), "W_n(x,y) = M_n(x,y)"));
    auto w = univariate_coefficients(ctx.family(F::lr_peak_uni, n), "x");
    auto m = univariate_coefficients(ctx.family(F::interior_peak_uni, n), "x");
    std::map<int, Scalar> shifted;
    for (const auto& [k, c] : m)
        shifted[k + 1] = c;
    if (w != shifted)
        return fails(n, render(ctx.family(F::lr_peak_uni, n)), render(var("x") * ctx.family(F::interior_peak_uni, n)),
                     "W(n,k+1) = M(n,k)");
    return std::nullopt;
}

Result dumont_peak(const CheckContext& ctx, int n)
{
    LP x = var("x"), y = var("y");
    RETURN_IF(transformation_holds(grammars::peak(), {{"u", x * x}, {"v", y}}, grammars::dumont(), n, "u = x^2, v = y"));
    return differ(n, substitute(ctx.family(F::dumont, n), {{"u", x * x}, {"v", y}}), ctx.family(F::interior_peak_biv, n),
                  "D_n(x^2,y) = M_n(x,y)");
}

Result left_peak_convolution(const CheckContext& ctx, int n)
{
    LP x = var("x"), y = var("y");
    LP lhs = substitute(ctx.family(F::dumont, n + 1), {{"u", x * x}, {"v", y}});
    return differ(n, lhs, convolution(ctx, F::left_peak_biv, F::left_peak_biv, n),
                  "D_{n+1}(x^2,y) = sum C(n,k) L_k L_{n-k}");
}

Result l_squared_egf(const CheckContext& ctx, int order)
{
    LP x = var("x"), y = var("y");
    // Symbolic: d/dt of sum D_n(x^2,y) t^n/n! equals L(x,y,t)^2.
    std::vector<LP> c;
    for (int n = 0; n <= order; ++n)
        c.push_back(substitute(ctx.family(F::dumont, n + 1), {{"u", x * x}, {"v", y}}));
    TruncSeries l = family_series(ctx, F::left_peak_biv, order);
    RETURN_IF(series_differ(TruncSeries(c), l * l, "sum D_{n+1}(x^2,y) t^n/n! = L(x,y,t)^2"));

    // Numeric: A'(xbar, ybar, t) from the Eulerian closed form against the
    // square of the closed form for L(x,y,t).
    RadicalPoint p = ctx.point(ClosedForm::bivariate_L);
    const Scalar& s = p.witness("sqrt(y^2-x^2)");
    Scalar xb = p.value("y") + s, yb = p.value("y") - s;
    TruncSeries a = eval_series(closed_form_series(ClosedForm::eulerian_egf_full, nullptr, order + 1),
                                {{"x", xb}, {"y", yb}});
    TruncSeries lc = closed_form_series(ClosedForm::bivariate_L, &p, order);
    return series_differ(d_dt(a), lc * lc, "A'(xbar,ybar,t) = L(x,y,t)^2 at a point");
}

Result gessel(const CheckContext& ctx, int order)
{
    RadicalPoint p = ctx.point(ClosedForm::gessel_L);
    TruncSeries lhs = eval_series(family_series(ctx, F::left_peak_uni, order), {{"x", p.value("x")}});
    return series_differ(lhs, closed_form_series(ClosedForm::gessel_L, &p, order), "L(x,t) at x = " + p.value("x").to_string());
}

Result gessel_bivariate(const CheckContext& ctx, int order)
{
    RadicalPoint p = ctx.point(ClosedForm::bivariate_L);
    TruncSeries lhs = eval_series(family_series(ctx, F::left_peak_biv, order), {{"x", p.value("x")}, {"y", p.value("y")}});
    return series_differ(lhs, closed_form_series(ClosedForm::bivariate_L, &p, order), "L(x,y,t) at a point");
}

Result david_barton_pde(const CheckContext& ctx, int n)
{
    LP x = var("x");
    LP one_minus = LP(1) - x;
    LP l = ctx.family(F::left_peak_uni, n), l1 = ctx.family(F::left_peak_uni, n + 1);
    LP m = ctx.family(F::interior_peak_uni, n), m1 = ctx.family(F::interior_peak_uni, n + 1);
    if (n == 1) {
        // constant terms of the PDEs in t
        RETURN_IF(differ(0, l, LP(1), "L_1 = 1"));
        RETURN_IF(differ(0, m, LP(1), "M_1 = 1"));
    }
    LP rl = Scalar(2) * x * one_minus * partial_derivative(l, "x") + Scalar(n) * x * l + l - l1;
    RETURN_IF(differ(n, rl, LP(), "L recurrence residual"));
    LP rm = Scalar(2) * x * one_minus * partial_derivative(m, "x") + (LP(2) - x + Scalar(n) * x) * m - m1;
    return differ(n, rm, LP(), "M recurrence residual");
}

Result david_barton_closed(const CheckContext& ctx, int order)
{
    RadicalPoint p = ctx.point(ClosedForm::david_barton_L);
    const Scalar& xv = p.value("x");
    Scalar one_minus = Scalar(1) - xv;
    TruncSeries l = eval_series(family_series(ctx, F::left_peak_uni, order, 1), {{"x", xv}});
    TruncSeries m = eval_series(family_series(ctx, F::interior_peak_uni, order, 1), {{"x", xv}});
    RETURN_IF(series_differ(LP(p.witness("sqrt(x)") / one_minus) * l,
                            closed_form_series(ClosedForm::david_barton_L, &p, order),
                            "sqrt(x)/(1-x) dL/dt at x = " + xv.to_string()));
    return series_differ(LP(xv / one_minus) * m, closed_form_series(ClosedForm::david_barton_M, &p, order),
                         "x/(1-x) dM/dt at x = " + xv.to_string());
}

Result sqrt_transformation(const CheckContext& ctx, int n)
{
    const Grammar& g = sqrt_eulerian();
    LP xb = var("xb"), yb = var("yb");
    RETURN_IF(transformation_holds(g, sqrt_phi(), grammars::peak(), n, "x = z, y = (xb+yb)/2"));
    RETURN_IF(differ(n, derive_n(g, var("z"), n), g.reduce(substitute(ctx.family(F::left_peak_biv, n), sqrt_phi())),
                     "D^n(z) = L_n(z, (xb+yb)/2)"));
    LP ratio = xb * yb.pow(-1);
    return differ(n, derive_n(g, ratio, n), ratio * (yb - xb).pow(n), "D^n(xb/yb) = (xb/yb)(yb-xb)^n");
}

Result petersen(const CheckContext& ctx, int n)
{
    LP x = var("x");
    LP lhs = substitute_rational(ctx.family(F::left_peak_uni, n), "x", Scalar(4) * x, LP(1) + x, 2, n);
    LP rhs;
    for (int k = 0; k <= n; ++k)
        rhs += binom(n, k) * pow2(k) * ((LP(1) - x).pow(n - k) * ctx.family(F::eulerian_uni, k));
    RETURN_IF(differ(n, lhs, rhs, "(1+x)^n L_n(4x/(1+x)^2) = sum C(n,k) (1-x)^{n-k} 2^k A_k(x)"));

    // Bivariate form in the ring with z^2 = xb*yb.
    const Grammar& g = sqrt_eulerian();
    LP xb = var("xb"), yb = var("yb"), z = var("z");
    LP tl = g.reduce(substitute(ctx.family(F::left_peak_biv, n), sqrt_phi()));
    LP sum;
    for (int k = 0; k <= n; ++k)
        sum += binom(n, k) * (eulerian_in_bars(ctx.family(F::eulerian_biv, k)) * (half() * (yb - xb)).pow(n - k));
    LP tr = g.reduce(z * yb.pow(-1) * sum);
    return differ(n, tl, tr, "L_n(z,(xb+yb)/2) = (z/yb) sum C(n,k) A_k(xb,yb) ((yb-xb)/2)^{n-k}");
}

Result stembridge(const CheckContext& ctx, int n)
{
    LP x = var("x");
    LP lhs = x * substitute_rational(ctx.family(F::interior_peak_uni, n), "x", Scalar(4) * x, LP(1) + x, 2, n - 1);
    return differ(n, lhs, pow2(n - 1) * ctx.family(F::eulerian_uni, n),
                  "x (1+x)^{n-1} M_n(4x/(1+x)^2) = 2^{n-1} A_n(x)");
}

Result lm_convolution(const CheckContext& ctx, int n)
{
    RETURN_IF(differ(n, ctx.family(F::left_peak_biv, n + 1), convolution(ctx, F::left_peak_biv, F::interior_peak_biv, n),
                     "L_{n+1}(x,y) = sum C(n,k) L_k M_{n-k}"));
    return differ(n, ctx.family(F::left_peak_uni, n + 1),
                  var("x") * convolution(ctx, F::left_peak_uni, F::interior_peak_uni, n),
                  "L_{n+1}(x) = x sum C(n,k) L_k(x) M_{n-k}(x)");
}

Result ll_mm(const CheckContext& ctx, int n)
{
    RETURN_IF(differ(n, convolution(ctx, F::left_peak_biv, F::left_peak_biv, n),
                     convolution(ctx, F::interior_peak_biv, F::interior_peak_biv, n), "sum L_k L_{n-k} = sum M_k M_{n-k}"));
    return differ(n, convolution(ctx, F::left_peak_uni, F::left_peak_uni, n),
                  var("x") * convolution(ctx, F::interior_peak_uni, F::interior_peak_uni, n),
                  "sum L_k(x) L_{n-k}(x) = x sum M_k(x) M_{n-k}(x)");
}

Result m_convolution(const CheckContext& ctx, int n)
{
    RETURN_IF(differ(n, ctx.family(F::interior_peak_biv, n + 1),
                     convolution(ctx, F::interior_peak_biv, F::interior_peak_biv, n), "M_{n+1} = sum C(n,k) M_k M_{n-k}"));
    return differ(n, ctx.family(F::interior_peak_uni, n + 1),
                  var("x") * convolution(ctx, F::interior_peak_uni, F::interior_peak_uni, n),
                  "M_{n+1}(x) = x sum C(n,k) M_k(x) M_{n-k}(x)");
}

Result r_convolution(const CheckContext& ctx, int n)
{
    RETURN_IF(differ(n, ctx.family(F::R_family, n), ctx.family(F::left_peak_biv, n) + ctx.family(F::interior_peak_biv, n),
                     "R_n = L_n + M_n"));
    return differ(n, ctx.family(F::R_family, n + 1), convolution(ctx, F::left_peak_biv, F::R_family, n),
                  "R_{n+1} = sum C(n,k) L_k R_{n-k}");
}

// ------------------------------------------------- derivative polynomials

Result deriv_recurrence(const CheckContext& ctx, int n)
{
    LP x = var("x");
    LP w = LP(1) + x * x;
    LP p = ctx.family(F::deriv_P, n), q = ctx.family(F::deriv_Q, n);
    if (n == 0) {
        RETURN_IF(differ(0, p, x, "P_0 = x"));
        RETURN_IF(differ(0, q, LP(1), "Q_0 = 1"));
    }
    RETURN_IF(differ(n, ctx.family(F::deriv_P, n + 1), w * partial_derivative(p, "x"), "P_{n+1} = (1+x^2) P_n'"));
    return differ(n, ctx.family(F::deriv_Q, n + 1), w * partial_derivative(q, "x") + x * q,
                  "Q_{n+1} = (1+x^2) Q_n' + x Q_n");
}

Result hoffman_egf(const CheckContext& ctx, int order)
{
    LP a = var("a"), x = var("x");
    RETURN_IF(series_differ(family_series(ctx, F::deriv_P, order), closed_form_series(ClosedForm::hoffman_P, nullptr, order),
                            "sum P_n t^n/n! = (x + tan t)/(1 - x tan t)"));
    TruncSeries q = closed_form_series(ClosedForm::hoffman_Q, nullptr, order);
    RETURN_IF(series_differ(family_series(ctx, F::deriv_Q, order), q, "sum Q_n t^n/n! = 1/(cos t - x sin t)"));
    const Grammar& g = grammars::derivative();
    RETURN_IF(series_differ(gen_coeffs(g, a, order), a * q, "Gen(a,t) = a/(cos t - x sin t)"));
    TruncSeries c = elementary_series(Elementary::cos, order), s = elementary_series(Elementary::sin, order);
    return series_differ(gen_coeffs(g, x, order), divide(x * c + s, c - x * s),
                         "Gen(x,t) = (x cos t + sin t)/(cos t - x sin t)");
}

Result inverse_pattern(const CheckContext&, int n)
{
    const Grammar& g = grammars::derivative();
    LP ai = var("a").pow(-1), x = var("x");
    int h = n / 2;
    Scalar sign_even = (h % 2 == 0) ? Scalar(1) : Scalar(-1);
    LP e1, e2;
    if (n % 2 == 0) {
        e1 = sign_even * ai;
        e2 = sign_even * (ai * x);
    } else {
        e1 = -sign_even * (ai * x);
        e2 = sign_even * ai;
    }
    RETURN_IF(differ(n, derive_n(g, ai, n), e1, "D^n(a^{-1})"));
    return differ(n, derive_n(g, ai * x, n), e2, "D^n(a^{-1} x)");
}

Result hoffman_conv(const CheckContext& ctx, int n)
{
    if (n >= 1)
        RETURN_IF(differ(n, ctx.family(F::deriv_P, n + 1), convolution(ctx, F::deriv_P, F::deriv_P, n),
                         "P_{n+1} = sum C(n,k) P_k P_{n-k}"));
    return differ(n, ctx.family(F::deriv_Q, n + 1), convolution(ctx, F::deriv_P, F::deriv_Q, n),
                  "Q_{n+1} = sum C(n,k) P_k Q_{n-k}");
}

Result mfmy_conv(const CheckContext& ctx, int n)
{
    LP sum;
    for (int k = 0; k <= n; ++k)
        sum += binom(n, k) * (ctx.family(F::deriv_P, k) * ctx.family(F::deriv_P, n + 1 - k));
    return differ(n, ctx.family(F::deriv_P, n + 2), Scalar(2) * sum, "P_{n+2} = 2 sum C(n,k) P_k P_{n+1-k}");
}

Result hoffman_pqq(const CheckContext& ctx, int n)
{
    const Grammar& g = grammars::derivative();
    LP a = var("a"), x = var("x"), w = LP(1) + x * x;
    if (n == 0)
        RETURN_IF(differ(0, derive(g, w * a.pow(-2)), LP(), "D((1+x^2) a^{-2}) = 0"));
    RETURN_IF(differ(n, ctx.family(F::deriv_P, n + 1), w * convolution(ctx, F::deriv_Q, F::deriv_Q, n),
                     "P_{n+1} = (1+x^2) sum C(n,k) Q_k Q_{n-k}"));
    return differ(n, a * a * derive_n(g, x, n + 1), w * derive_n(g, a * a, n), "a^2 D^{n+1}(x) = (1+x^2) D^n(a^2)");
}

Result pq_log(const CheckContext& ctx, int order)
{
    TruncSeries q = family_series(ctx, F::deriv_Q, order);
    TruncSeries p = family_series(ctx, F::deriv_P, order - 1);
    return series_differ(log(q), integrate(p), "log sum Q_n t^n/n! = sum P_n t^{n+1}/(n+1)!");
}

Result beta_exp(const CheckContext& ctx, int n)
{
    LP p = ctx.family(F::deriv_P, n), q = ctx.family(F::deriv_Q, n);
    CoefficientTable bq, bp, bg;
    try {
        bq = beta_expansion_of(BetaKind::Q, q, n);
        bp = beta_expansion_of(BetaKind::P, p, n);
        bg = beta_expansion_of(BetaKind::gbeta, p, n);
    } catch (const NotBetaExpressible& e) {
        return fails(n, render(p) + " ; " + render(q), e.what(), "beta expansion");
    }
    RETURN_IF(differ(n, table_poly(bq), coeffs_poly(ctx.family(F::left_peak_uni, n)), "Q_n coefficients are L(n,k)"));
    RETURN_IF(differ(n, table_poly(bp), coeffs_poly(ctx.family(F::interior_peak_uni, n)), "P_n coefficients are M(n,k)"));
    RETURN_IF(nonnegative(bg, n, "beta_{n,k}"));
    if (n <= ctx.oracle_cap) {
        CoefficientTable trees = plane_leaf_table(n, oracle_bound(ctx));
        if (trees.coeffs != bg.coeffs)
            return fails(n, table_text(bg), table_text(trees), "beta_{n,k} = plane trees with k leaves");
    }
    return std::nullopt;
}

Result beta_grammar(const CheckContext& ctx, int n)
{
    LP a = var("a"), x = var("x"), y = var("y"), z = var("z"), v = var("v"), u = var("u");
    LP w = LP(1) + x * x;
    RETURN_IF(transformation_holds(grammars::peak(), {{"x", x}, {"y", y}, {"z", x * x}}, grammars::peak_xyz(), n, "z = x^2"));
    RETURN_IF(transformation_holds(grammars::derivative(), {{"a", a}, {"v", x}, {"u", w}}, grammars::exp_dumont(), n,
                                   "v = x, u = 1+x^2"));
    LP dx = derive_n(grammars::peak_xyz(), x, n);
    LP expect;
    for (const auto& [k, c] : univariate_coefficients(ctx.family(F::left_peak_uni, n), "x"))
        expect += c * (x * y.pow(n - 2 * k) * z.pow(k));
    RETURN_IF(differ(n, dx, expect, "D^n(x) = sum L(n,k) x y^{n-2k} z^k"));
    RETURN_IF(differ(n, substitute(dx, {{"x", a}, {"y", x}, {"z", w}}), a * ctx.family(F::deriv_Q, n),
                     "x -> a, y -> x, z -> 1+x^2 gives a Q_n"));
    return differ(n, substitute(derive_n(grammars::exp_dumont(), a, n), {{"v", x}, {"u", w}}), a * ctx.family(F::deriv_Q, n),
                  "D^n(a) with v = x, u = 1+x^2 gives a Q_n");
}

Result p_eulerian_complex(const CheckContext& ctx, int n)
{
    LP x = var("x"), i = LP(Scalar::i());
    LP lhs = substitute_rational(ctx.family(F::eulerian_uni, n), "x", x + i, x - i, 1, n + 1);
    if (!lhs.is_real())
        return fails(n, render(lhs), "real coefficients", "(x-i)^{n+1} A_n((x+i)/(x-i)) has imaginary residue");
    return differ(n, ctx.family(F::deriv_P, n), lhs, "P_n = (x-i)^{n+1} A_n((x+i)/(x-i))");
}

Result p_andre(const CheckContext& ctx, int n)
{
    LP x = var("x"), w = LP(1) + x * x;
    LP p = ctx.family(F::deriv_P, n);
    RETURN_IF(differ(n, p, pow2(n) * substitute(ctx.family(F::andre_biv, n), {{"u", half() * w}, {"v", x}}),
                     "P_n = 2^n E_n((1+x^2)/2, x)"));
    LP arg = half() * w * x.pow(-2);
    return differ(n, p, pow2(n) * x.pow(n + 1) * substitute(ctx.family(F::andre_uni, n), {{"x", arg}}),
                  "P_n = 2^n x^{n+1} E_n((1+x^2)/(2x^2))");
}

Result knuth_buckholtz(const CheckContext& ctx, int n)
{
    Scalar e = evaluate(ctx.family(F::andre_biv, n), {{"u", Scalar(1)}, {"v", Scalar(1)}});
    return differ(n, at(ctx.family(F::deriv_P, n), "x", Scalar(1)), pow2(n) * e, "P_n(1) = 2^n E_n");
}

Result ma_composition(const CheckContext& ctx, int order)
{
    TruncSeries e = elementary_series(Elementary::tan, order) + elementary_series(Elementary::sec, order);
    TruncSeries d = e;
    for (int n = 0; n <= order; ++n) {
        if (n > 0)
            d = d_dt(d);
        TruncSeries lhs = LP(pow2(n)) * d;
        TruncSeries rhs = compose_poly_series(ctx.family(F::deriv_P, n), e.truncated(order - n));
        if (auto w = series_differ(lhs, rhs, "2^n E^{(n)}(t) = P_n(E(t))")) {
            w->detail += " at k = " + std::to_string(w->n);
            w->n = n;
            return w;
        }
    }
    return std::nullopt;
}

Result springer(const CheckContext& ctx, int n)
{
    Scalar two(2);
    Scalar s = at(ctx.family(F::deriv_Q, n), "x", Scalar(1));
    RETURN_IF(differ(n, s, at(ctx.family(F::left_peak_uni, n), "x", two), "Q_n(1) = L_n(2)"));
    RETURN_IF(differ(n, s, Scalar(family_number(Sequence::springer, n)), "Q_n(1) = S_n"));
    Scalar p1 = at(ctx.family(F::deriv_P, n), "x", Scalar(1));
    RETURN_IF(differ(n, p1, two * at(ctx.family(F::interior_peak_uni, n), "x", two), "P_n(1) = 2 M_n(2)"));
    return differ(n, p1, at(ctx.family(F::lr_peak_uni, n), "x", two), "P_n(1) = W_n(2)");
}

Result springer_logconvex(const CheckContext& ctx, int n)
{
    auto s = [&](int k) { return at(ctx.family(F::deriv_Q, k), "x", Scalar(1)).re(); };
    Rational lhs = s(n) * s(n), rhs = s(n - 1) * s(n + 1);
    if (lhs > rhs)
        return fails(n, Scalar(lhs).to_string(), Scalar(rhs).to_string(), "S_n^2 <= S_{n-1} S_{n+1}");
    return std::nullopt;
}

Result sequence_values(const CheckContext& ctx, int n)
{
    static const std::map<int, long> tangent{{1, 1}, {3, 2}, {5, 16}, {7, 272}};
    static const std::map<int, long> secant{{0, 1}, {2, 1}, {4, 5}, {6, 61}};
    RETURN_IF(differ(n, at(ctx.family(F::deriv_P, n), "x", Scalar(1)), Scalar(Integer(tables::p_at_one.at(n))),
                     "P_n(1) table value"));
    if (auto it = tangent.find(n); it != tangent.end())
        RETURN_IF(differ(n, at(ctx.family(F::deriv_P, n), "x", Scalar(0)), Scalar(it->second), "P_n(0) tangent number"));
    if (auto it = secant.find(n); it != secant.end())
        RETURN_IF(differ(n, at(ctx.family(F::deriv_Q, n), "x", Scalar(0)), Scalar(it->second), "Q_n(0) secant number"));
    return std::nullopt;
}

struct LeibnizCase {
    Grammar grammar;
    LP f, g;
    const char* label;
};

const std::vector<LeibnizCase>& leibniz_cases()
{
    static const std::vector<LeibnizCase> cases = [] {
        LP x = var("x"), y = var("y"), u = var("u"), v = var("v"), a = var("a");
        return std::vector<LeibnizCase>{
            {grammars::eulerian(), x, y, "eulerian: x * y"},
            {grammars::dumont(), u, v * v, "dumont: u * v^2"},
            {grammars::peak(), x, y.pow(-1), "peak: x * y^{-1}"},
            {grammars::derivative(), a, LP(1) + x * x, "derivative: a * (1+x^2)"},
        };
    }();
    return cases;
}

Result leibniz_rule(const CheckContext&, int n)
{
    for (const auto& c : leibniz_cases()) {
        auto df = derive_chain(c.grammar, c.f, n);
        auto dg = derive_chain(c.grammar, c.g, n);
        LP sum;
        for (int k = 0; k <= n; ++k)
            sum += binom(n, k) * (df[static_cast<std::size_t>(k)] * dg[static_cast<std::size_t>(n - k)]);
        RETURN_IF(differ(n, derive_n(c.grammar, c.f * c.g, n), sum, std::string("Leibniz, ") + c.label));
        RETURN_IF(series_differ(gen_coeffs(c.grammar, c.f * c.g, n), gen_coeffs(c.grammar, c.f, n) * gen_coeffs(c.grammar, c.g, n),
                                std::string("Gen(fg) = Gen(f) Gen(g), ") + c.label));
    }
    return std::nullopt;
}

#undef RETURN_IF

std::vector<IdentityCheck> build_registry()
{
    using C = ClosedForm;
    auto entry = [](std::string name, std::string description, int lo, Checker checker) {
        IdentityCheck c;
        c.name = std::move(name);
        c.description = std::move(description);
        c.lo = lo;
        c.checker = std::move(checker);
        return c;
    };
    auto oracle = [&](std::string name, std::string description, int lo, Checker checker) {
        IdentityCheck c = entry(std::move(name), std::move(description), lo, std::move(checker));
        c.oracle_backed = true;
        return c;
    };
    auto series = [&](std::string name, std::string description, int lo, std::function<Result(const CheckContext&, int)> f,
                      std::vector<C> forms = {}) {
        IdentityCheck c = entry(std::move(name), std::move(description), lo, at_order(std::move(f)));
        c.series = true;
        c.point_forms = std::move(forms);
        return c;
    };

    std::vector<IdentityCheck> r{
        series("eulerian_egf", "Eulerian EGFs, bivariate and univariate", 0, eulerian_egf),
        entry("eulerian_palindromic", "A_n symmetric in x,y; univariate palindromic; A_n(1) = n!", 1,
              per_n(eulerian_palindromic)),
        entry("gamma_eulerian", "D_n(xy,(x+y)/2) = A_n(x,y) with nonnegative gamma coefficients", 1, per_n(gamma_eulerian)),
        entry("dumont_andre", "D_n(2u,v) = 2^n E_n(u,v)", 1, per_n(dumont_andre)),
        entry("andre_eulerian", "2^n E_n(u,v) = A_n(x,y) with xy = 2u, x+y = 2v", 1, per_n(andre_eulerian)),
        entry("euler_complex", "E_n = A_n(i)/(i (1+i)^{n-1})", 1, per_n(euler_complex)),
        oracle("eulerian_oracle", "A_n from descents over permutations", 0,
               oracle_check({F::eulerian_biv, F::eulerian_uni})),
        oracle("dumont_trees", "D_n from (u,v)-labeled binary trees and (u,2v)-labeled plane trees", 0,
               per_n(dumont_trees)),
        oracle("andre_trees", "E_n from labeled 0-1-2 increasing trees", 0, oracle_check({F::andre_biv, F::andre_uni})),
        oracle("peak_L", "L_n from left peaks, vs oracle", 0, oracle_check({F::left_peak_biv, F::left_peak_uni})),
        oracle("peak_M", "M_n from interior peaks, vs oracle", 1,
               oracle_check({F::interior_peak_biv, F::interior_peak_uni})),
        oracle("peak_W", "W_n from left-right peaks, vs oracle", 1, oracle_check({F::lr_peak_biv, F::lr_peak_uni})),
        entry("MW_shift", "W(n,k+1) = M(n,k)", 1, per_n(mw_shift)),
        entry("dumont_peak", "D_n(x^2,y) = M_n(x,y)", 0, per_n(dumont_peak)),
        entry("left_peak_convolution", "D_{n+1}(x^2,y) = sum C(n,k) L_k L_{n-k}", 0, per_n(left_peak_convolution)),
        series("L_squared_egf", "A'(xbar,ybar,t) = L(x,y,t)^2", 0, l_squared_egf, {C::bivariate_L}),
        series("gessel", "closed form of L(x,t) at a radical point", 0, gessel, {C::gessel_L}),
        series("gessel_bivariate", "closed form of L(x,y,t) at a radical point", 0, gessel_bivariate, {C::bivariate_L}),
        entry("david_barton_pde", "coefficient recurrences of the L and M differential equations", 1,
              per_n(david_barton_pde)),
        series("david_barton_closed", "cosh closed forms for dL/dt and dM/dt", 0, david_barton_closed,
               {C::david_barton_L}),
        entry("sqrt_transformation", "x = z, y = (xb+yb)/2 with z^2 = xb yb carries the Eulerian grammar to the peak grammar",
              0, per_n(sqrt_transformation)),
        entry("petersen", "(1+x)^n L_n(4x/(1+x)^2) = sum C(n,k) (1-x)^{n-k} 2^k A_k(x), and its bivariate form", 0,
              per_n(petersen)),
        entry("stembridge", "x (1+x)^{n-1} M_n(4x/(1+x)^2) = 2^{n-1} A_n(x)", 1, per_n(stembridge)),
        entry("LM_convolution", "L_{n+1} = sum C(n,k) L_k M_{n-k}", 0, per_n(lm_convolution)),
        entry("LL_MM", "sum C(n,k) L_k L_{n-k} = sum C(n,k) M_k M_{n-k}", 1, per_n(ll_mm)),
        entry("M_convolution", "M_{n+1} = sum C(n,k) M_k M_{n-k}", 1, per_n(m_convolution)),
        entry("R_convolution", "R_{n+1} = sum C(n,k) L_k R_{n-k}", 0, per_n(r_convolution)),
        entry("deriv_recurrence", "P_{n+1} = (1+x^2) P_n', Q_{n+1} = (1+x^2) Q_n' + x Q_n", 0, per_n(deriv_recurrence)),
        series("hoffman_egf", "EGFs of P_n, Q_n, Gen(a,t), Gen(x,t)", 0, hoffman_egf),
        entry("inverse_pattern", "periodic derivatives of a^{-1} and a^{-1} x", 0, per_n(inverse_pattern)),
        entry("hoffman_conv", "P_{n+1} = sum C(n,k) P_k P_{n-k}, Q_{n+1} = sum C(n,k) P_k Q_{n-k}", 0,
              per_n(hoffman_conv)),
        entry("mfmy_conv", "P_{n+2} = 2 sum C(n,k) P_k P_{n+1-k}", 0, per_n(mfmy_conv)),
        entry("hoffman_PQQ", "P_{n+1} = (1+x^2) sum C(n,k) Q_k Q_{n-k}; D((1+x^2) a^{-2}) = 0", 0, per_n(hoffman_pqq)),
        oracle("jv_oracles", "P_n from JV trees, Q_n from JV forests", 0, oracle_check({F::deriv_P, F::deriv_Q})),
        oracle("planted_forests", "D^n(a) for a -> av, v -> u, u -> 2uv from planted forests", 0, per_n(planted_forests)),
        series("pq_log", "sum P_n t^{n+1}/(n+1)! = log sum Q_n t^n/n!", 1, pq_log),
        entry("beta_exp", "beta expansions of P_n and Q_n; beta_{n,k} counts plane trees", 1, per_n(beta_exp)),
        entry("beta_grammar", "x -> xy, y -> z, z -> 2yz and a -> av, v -> u, u -> 2uv give L(n,k) and a Q_n", 0,
              per_n(beta_grammar)),
        entry("p_eulerian_complex", "P_n = (x-i)^{n+1} A_n((x+i)/(x-i))", 1, per_n(p_eulerian_complex)),
        entry("p_andre", "P_n = 2^n E_n((1+x^2)/2, x) = 2^n x^{n+1} E_n((1+x^2)/(2x^2))", 1, per_n(p_andre)),
        entry("knuth_buckholtz", "P_n(1) = 2^n E_n", 0, per_n(knuth_buckholtz)),
        series("ma_composition", "2^n E^{(n)}(t) = P_n(E(t)) with E = tan + sec", 0, ma_composition),
        entry("springer", "Q_n(1) = L_n(2) = S_n and P_n(1) = 2 M_n(2) = W_n(2)", 0, per_n(springer)),
        entry("springer_logconvex_sanity", "S_n^2 <= S_{n-1} S_{n+1}", 1, per_n(springer_logconvex)),
        entry("sequence_values", "P_n(1), tangent and secant numbers", 0, per_n(sequence_values)),
        entry("leibniz_rule", "D^n(fg) = sum C(n,k) D^k(f) D^{n-k}(g) and Gen(fg) = Gen(f) Gen(g)", 0,
              per_n(leibniz_rule)),
    };
    for (auto& c : r) {
        if (c.name == "sequence_values")
            c.hi_cap = static_cast<int>(tables::p_at_one.size()) - 1;
        if (c.name == "leibniz_rule")
            c.hi_cap = 8;
    }
    std::sort(r.begin(), r.end(), [](const IdentityCheck& a, const IdentityCheck& b) { return a.name < b.name; });
    return r;
}

bool supports(ClosedForm form, const RadicalPoint& p)
{
    auto has = [&](const char* v, const char* w) { return p.values.count(v) && p.witnesses.count(w); };
    switch (form) {
    case ClosedForm::gessel_L:
        return has("x", "sqrt(1-x)");
    case ClosedForm::bivariate_L:
        return p.values.count("y") && has("x", "sqrt(y^2-x^2)");
    case ClosedForm::david_barton_L:
    case ClosedForm::david_barton_M:
        return has("x", "sqrt(x)") && has("x", "sqrt(1-x)");
    default:
        return true;
    }
}

} // namespace

CheckContext::CheckContext(FamilyProvider provider, std::vector<RadicalPoint> points)
    : provider_(std::move(provider)), points_(std::move(points))
{
}

LaurentPoly CheckContext::family(Family f, int n) const
{
    auto key = std::make_pair(f, n);
    auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;
    LaurentPoly p = provider_ ? provider_(f, n) : family_poly(f, n);
    cache_.emplace(key, p);
    return p;
}

RadicalPoint CheckContext::point(ClosedForm form) const
{
    for (const auto& p : points_)
        if (supports(form, p))
            return p;
    return default_point(form);
}

json Witness::to_json() const
{
    json j{{"n", n}, {"lhs", lhs}, {"rhs", rhs}};
    if (!detail.empty())
        j["detail"] = detail;
    return j;
}

json IdentityReport::to_json() const
{
    json j{{"name", name}, {"range", {lo, hi}}, {"status", pass ? "pass" : "fail"}};
    if (witness)
        j["witness"] = witness->to_json();
    j["millis"] = millis;
    return j;
}

std::string IdentityReport::to_text() const
{
    std::ostringstream os;
    os << (pass ? "PASS " : "FAIL ") << name << " [" << lo << ".." << hi << "]";
    if (witness)
        os << " n=" << witness->n << " lhs=" << witness->lhs << " rhs=" << witness->rhs << " (" << witness->detail << ")";
    return os.str();
}

const std::vector<IdentityCheck>& identity_registry()
{
    static const std::vector<IdentityCheck> r = build_registry();
    return r;
}

const IdentityCheck& find_identity(const std::string& name)
{
    for (const auto& c : identity_registry())
        if (c.name == name)
            return c;
    throw UnknownIdentity("unknown identity '" + name + "'");
}

int effective_hi(const IdentityCheck& check, int max_n, const CheckContext& ctx)
{
    int hi = std::min(max_n, check.hi_cap);
    if (check.oracle_backed)
        hi = std::min(hi, ctx.oracle_cap);
    return hi;
}

IdentityReport run_identity(const IdentityCheck& check, int max_n, const CheckContext& ctx)
{
    auto start = std::chrono::steady_clock::now();
    IdentityReport rep;
    rep.name = check.name;
    rep.lo = check.lo;
    rep.hi = effective_hi(check, max_n, ctx);
    if (rep.hi >= rep.lo) {
        rep.witness = check.checker(ctx, rep.lo, rep.hi);
        rep.pass = !rep.witness.has_value();
    }
    rep.millis = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return rep;
}

IdentityReport run_identity(const std::string& name, int max_n, const std::vector<RadicalPoint>& points)
{
    return run_identity(find_identity(name), max_n, CheckContext({}, points));
}

std::vector<IdentityReport> run_all(int max_n, const CheckContext& ctx)
{
    std::vector<IdentityReport> out;
    for (const auto& c : identity_registry())
        out.push_back(run_identity(c, max_n, ctx));
    return out;
}

FamilyProvider corrupted_provider(Family family, int n)
{
    return [family, n](Family f, int k) {
        LaurentPoly p = family_poly(f, k);
        if (f == family && k == n) {
            if (p.is_zero())
                return p + LaurentPoly(1);
            p.add_term(p.terms().begin()->first, Scalar(1));
        }
        return p;
    };
}

// ----------------------------------------------------------------- errata

namespace {

bool holds_for(const IdentityCheck& c, int hi)
{
    CheckContext ctx;
    return !c.checker(ctx, c.lo, hi).has_value();
}

std::vector<Erratum> build_errata()
{
    LP x = var("x"), y = var("y"), a = var("a"), u = var("u"), v = var("v");
    std::vector<Erratum> e;

    e.push_back({"table of Q_n(x), row n = 2", "1 + x^2", "1 + 2*x^2",
                 "recurrence Q_{n+1} = (1+x^2) Q_n' + x Q_n and the JV-forest oracle both give 1 + 2*x^2",
                 [=] {
                     LP corrected = LP(1) + Scalar(2) * x * x;
                     return recurrence_chain(RecurrenceKind::Q, 2)[2] == corrected &&
                            family_poly_oracle(F::deriv_Q, 2) == corrected && !(LP(1) + x * x == corrected);
                 }});
    e.push_back({"list of D^n(a) for a -> av, v -> u, u -> 2uv, entry n = 2", "a*(v^2 + v*u)", "a*(v^2 + u)",
                 "direct derivation D(av) = a v^2 + a u and the planted-forest oracle",
                 [=] {
                     LP corrected = a * (v * v + u);
                     LP d2 = derive_n(grammars::exp_dumont(), a, 2);
                     return d2 == corrected && planted_forest_oracle(2) == corrected && !(d2 == a * (v * v + v * u));
                 }});
    e.push_back({"left-peak convolution for D_{n+1}(x^2,y)", "D_{n+1}(x^2,y) = x^2 * sum_k C(n,k) L_k(x,y) L_{n-k}(x,y)",
                 "D_{n+1}(x^2,y) = sum_k C(n,k) L_k(x,y) L_{n-k}(x,y)",
                 "Leibniz expansion of D^n(x*x) in the grammar x -> xy, y -> x^2; at n = 0 the printed form gives x^4 "
                 "against D_1(x^2,y) = x^2",
                 [=] {
                     LP d1 = substitute(family_poly(F::dumont, 1), {{"u", x * x}, {"v", y}});
                     LP l0 = family_poly(F::left_peak_biv, 0);
                     bool printed_fails = !(d1 == x * x * l0 * l0);
                     return printed_fails && holds_for(find_identity("left_peak_convolution"), 8);
                 }});
    e.push_back({"univariate L/M convolution", "sum_k C(n,k) L_k(x) L_{n-k}(x) = sum_k C(n,k) M_k(x) M_{n-k}(x)",
                 "sum_k C(n,k) L_k(x) L_{n-k}(x) = x * sum_k C(n,k) M_k(x) M_{n-k}(x)",
                 "specialization of the bivariate L/M convolution; at n = 1 the left side is 2 and the printed right "
                 "side is 2*x^-1",
                 [=] {
                     LP l = Scalar(2) * family_poly(F::left_peak_uni, 0) * family_poly(F::left_peak_uni, 1);
                     LP m = Scalar(2) * family_poly(F::interior_peak_uni, 0) * family_poly(F::interior_peak_uni, 1);
                     return !(l == m) && l == x * m && holds_for(find_identity("LL_MM"), 10);
                 }});
    e.push_back({"closed form of L(x,y,t)",
                 "x*y*sqrt(y^2-x^2) / (sqrt(y^2-x^2)*cosh(t*sqrt(y^2-x)) - y*sinh(t*sqrt(y^2-x^2)))",
                 "x*sqrt(y^2-x^2) / (sqrt(y^2-x^2)*cosh(t*sqrt(y^2-x^2)) - y*sinh(t*sqrt(y^2-x^2)))",
                 "at t = 0 the printed form gives x*y while L_0(x,y) = x; the corrected form matches L_n(3,5) to order 12",
                 [=] {
                     // printed form at t = 0 is x*y
                     Scalar printed0 = Scalar(3) * Scalar(5);
                     Scalar l0 = evaluate(family_poly(F::left_peak_biv, 0), {{"x", Scalar(3)}, {"y", Scalar(5)}});
                     return !(printed0 == l0) && holds_for(find_identity("gessel_bivariate"), 12);
                 }});
    e.push_back({"value of P_n(1) in terms of peak polynomials", "P_n(1) = M_n(2)", "P_n(1) = 2*M_n(2) = W_n(2)",
                 "at n = 1: P_1(1) = 2 while M_1(2) = 1; the corrected form holds for n <= 12",
                 [=] {
                     Scalar p1 = evaluate(family_poly(F::deriv_P, 1), {{"x", Scalar(1)}});
                     Scalar m1 = evaluate(family_poly(F::interior_peak_uni, 1), {{"x", Scalar(2)}});
                     return !(p1 == m1) && holds_for(find_identity("springer"), 12);
                 }});
    e.push_back({"cosh closed forms for L(x,t) and M(x,t)",
                 "dL/dx = (1/2)(1/(cosh z - 1) + 1/(cosh z + 1)); dM/dt = (1/2)(1/(cosh z - 1) - 1/(cosh z + 1))",
                 "sqrt(x)/(1-x) * dL/dt = (1/2)(1/(cosh z - 1) + 1/(cosh z + 1)); x/(1-x) * dM/dt = (1/2)(1/(cosh z - 1) "
                 "- 1/(cosh z + 1))",
                 "at t = 0 dL/dx vanishes while the right side is sqrt(x)/(1-x); the corrected forms match the series at "
                 "x = 9/25 to order 10",
                 [=] {
                     RadicalPoint p = default_point(ClosedForm::david_barton_L);
                     TruncSeries rl = closed_form_series(ClosedForm::david_barton_L, &p, 2);
                     TruncSeries rm = closed_form_series(ClosedForm::david_barton_M, &p, 2);
                     Scalar xv = p.value("x");
                     bool l_fails = !rl[0].is_zero();
                     bool m_fails = !(rm[0] == LP(evaluate(family_poly(F::interior_peak_uni, 1), {{"x", xv}})));
                     return l_fails && m_fails && holds_for(find_identity("david_barton_closed"), 10);
                 }});
    e.push_back({"differential equations for L(x,t) and M(x,t)", "L = sum_{n>=0} L_n(x) t^n/n!, M = sum_{n>=0} M_n(x) t^n/n!",
                 "L = sum_{n>=1} L_n(x) t^n/n!, M = sum_{n>=1} sqrt(x) M_n(x) t^n/n!",
                 "expanding in t: with L_0 = 1 the t^0 coefficient is L_0 - L_1 + 1 = 1; dropping the constant term "
                 "gives the recurrences checked for n <= 12",
                 [=] {
                     LP l0 = family_poly(F::left_peak_uni, 0), l1 = family_poly(F::left_peak_uni, 1);
                     bool printed_fails = !(l0 - l1 + LP(1)).is_zero();
                     bool corrected = (LP(0) - l1 + LP(1)).is_zero();
                     return printed_fails && corrected && holds_for(find_identity("david_barton_pde"), 12);
                 }});
    e.push_back({"Eulerian polynomials from u -> uv, v -> 2u", "A_n(x) = D^n(u)", "A_n(x) = D^{n-1}(u) for n >= 1",
                 "with u = xy, v = x+y: D^{n-1}(u) equals A_n(x,y) for n <= 8, while D(u) = uv is A_2, not A_1 = u",
                 [=] {
                     const Grammar& g = grammars::eulerian_uv();
                     SubstitutionMap back{{"u", x * y}, {"v", x + y}};
                     if (substitute(derive(g, u), back) == family_poly(F::eulerian_biv, 1))
                         return false;
                     for (int n = 1; n <= 8; ++n)
                         if (!(substitute(derive_n(g, u, n - 1), back) == family_poly(F::eulerian_biv, n)))
                             return false;
                     return true;
                 }});
    e.push_back({"square-root transformation, derivative of y", "D(y) = y^2", "D(y) = x^2",
                 "the peak grammar rule y -> x^2; verify_transformation with x = z, y = (xb+yb)/2",
                 [=] { return holds_for(find_identity("sqrt_transformation"), 6) && grammars::peak().rule("y") == x * x; }});
    e.push_back({"Euler numbers from Eulerian polynomials at x = i", "E_n = A_n(i)/(1+i)^{n-1}",
                 "E_n = A_n(i)/(i*(1+i)^{n-1}) with A_n(x) = A_n(x,1) of degree n",
                 "the printed form assumes Eulerian polynomials of degree n-1; setting u = v = 1 in "
                 "2^n E_n(u,v) = A_n(x,y) gives x = 1+i, y = 1-i and the corrected form; at n = 1 the printed form "
                 "gives i",
                 [=] {
                     Scalar a1 = evaluate(family_poly(F::eulerian_uni, 1), {{"x", Scalar::i()}});
                     return !(a1 == Scalar(1)) && holds_for(find_identity("euler_complex"), 12);
                 }});
    e.push_back({"range of D_n(2u,v) = 2^n E_n(u,v)", "n >= 0", "n >= 1",
                 "at n = 0: D_0(2u,v) = v while E_0 = 1",
                 [=] {
                     return !(family_poly(F::dumont, 0) == family_poly(F::andre_biv, 0)) &&
                            holds_for(find_identity("dumont_andre"), 12);
                 }});
    e.push_back({"range of 2^n E_n(u,v) = A_n(x,y)", "n >= 0", "n >= 1", "at n = 0: E_0 = 1 while A_0(x,y) = y",
                 [=] {
                     return !(family_poly(F::andre_biv, 0) == family_poly(F::eulerian_biv, 0)) &&
                            holds_for(find_identity("andre_eulerian"), 12);
                 }});
    e.push_back({"range of P_n = (x-i)^{n+1} A_n((x+i)/(x-i))", "n >= 0", "n >= 1",
                 "at n = 0: (x-i) A_0(x) = x - i while P_0 = x",
                 [=] {
                     LP i = LP(Scalar::i());
                     return !(family_poly(F::deriv_P, 0) == (x - i) * family_poly(F::eulerian_uni, 0)) &&
                            holds_for(find_identity("p_eulerian_complex"), 12);
                 }});
    return e;
}

} // namespace

const std::vector<Erratum>& errata()
{
    static const std::vector<Erratum> e = build_errata();
    return e;
}

json errata_to_json()
{
    json out = json::array();
    for (const auto& e : errata())
        out.push_back({{"location", e.location}, {"printed", e.printed}, {"corrected", e.corrected},
                       {"confirmation", e.confirmation}});
    return out;
}

} // namespace gramcalc
