#include "gramcalc/families.hpp"

#include "gramcalc/error.hpp"

#include <stdexcept>

namespace gramcalc {

namespace {

const std::vector<std::pair<Family, std::string>>& family_names()
{
    static const std::vector<std::pair<Family, std::string>> names{
        {Family::eulerian_biv, "eulerian_biv"},
        {Family::eulerian_uni, "eulerian_uni"},
        {Family::dumont, "dumont"},
        {Family::andre_biv, "andre_biv"},
        {Family::andre_uni, "andre_uni"},
        {Family::left_peak_biv, "left_peak_biv"},
        {Family::left_peak_uni, "left_peak_uni"},
        {Family::interior_peak_biv, "interior_peak_biv"},
        {Family::interior_peak_uni, "interior_peak_uni"},
        {Family::lr_peak_biv, "lr_peak_biv"},
        {Family::lr_peak_uni, "lr_peak_uni"},
        {Family::R_family, "R_family"},
        {Family::deriv_P, "deriv_P"},
        {Family::deriv_Q, "deriv_Q"},
    };
    return names;
}

const VarTable& x_only()
{
    static const VarTable t{"x"};
    return t;
}

LaurentPoly x_var() { return LaurentPoly::variable(x_only(), "x"); }

LaurentPoly drop_y(const LaurentPoly& f)
{
    return evaluate_partial(f, {{"y", Scalar(1)}}).compact().with_vars(x_only());
}

Integer integer_of(const Scalar& s, const char* what)
{
    if (!s.is_integer())
        throw Error(std::string(what) + ": non-integer value " + s.to_string());
    return s.re().get_num();
}

} // namespace

const std::vector<Family>& all_families()
{
    static const std::vector<Family> all = [] {
        std::vector<Family> v;
        for (const auto& [f, _] : family_names())
            v.push_back(f);
        return v;
    }();
    return all;
}

std::string family_name(Family f)
{
    for (const auto& [g, name] : family_names())
        if (g == f)
            return name;
    return "?";
}

Family family_from_name(const std::string& name)
{
    for (const auto& [f, n] : family_names())
        if (n == name)
            return f;
    throw UnknownFamily("unknown family '" + name + "'");
}

FamilySpec family_spec(Family f)
{
    switch (f) {
    case Family::eulerian_biv:
    case Family::eulerian_uni:
        return {f, grammars::eulerian(), parse_poly("y", VarTable{"x", "y"})};
    case Family::dumont:
        return {f, grammars::dumont(), parse_poly("v", VarTable{"u", "v"})};
    case Family::andre_biv:
    case Family::andre_uni:
        return {f, grammars::andre(), parse_poly("v", VarTable{"u", "v"})};
    case Family::left_peak_biv:
    case Family::left_peak_uni:
        return {f, grammars::peak(), parse_poly("x", VarTable{"x", "y"})};
    case Family::interior_peak_biv:
    case Family::interior_peak_uni:
    case Family::lr_peak_biv:
    case Family::lr_peak_uni:
        return {f, grammars::peak(), parse_poly("y", VarTable{"x", "y"})};
    case Family::R_family:
        return {f, grammars::peak(), parse_poly("x + y", VarTable{"x", "y"})};
    case Family::deriv_P:
        return {f, grammars::derivative(), parse_poly("x", VarTable{"a", "x"})};
    case Family::deriv_Q:
        return {f, grammars::derivative(), parse_poly("a", VarTable{"a", "x"})};
    }
    throw UnknownFamily("unhandled family");
}

LaurentPoly eulerian_to_uni(const LaurentPoly& a_xy) { return drop_y(a_xy); }

LaurentPoly andre_to_uni(const LaurentPoly& e_uv)
{
    LaurentPoly e = evaluate_partial(e_uv, {{"v", Scalar(1)}}).compact();
    return substitute(e, {{"u", x_var()}}).compact().with_vars(x_only());
}

LaurentPoly left_peak_to_uni(const LaurentPoly& l_xy)
{
    return halve_exponents(drop_y(l_xy) * x_var().pow(-1), "x");
}

LaurentPoly interior_peak_to_uni(const LaurentPoly& m_xy)
{
    return halve_exponents(drop_y(m_xy) * x_var().pow(-2), "x");
}

LaurentPoly lr_peak_to_uni(const LaurentPoly& w_xy) { return halve_exponents(drop_y(w_xy), "x"); }

LaurentPoly family_poly(Family f, int n)
{
    if (n < 0)
        throw Error("family index must be nonnegative");
    FamilySpec spec = family_spec(f);
    if ((f == Family::andre_biv || f == Family::andre_uni) && n == 0)
        return f == Family::andre_biv ? LaurentPoly::constant(spec.seed.vars(), Scalar(1))
                                      : LaurentPoly::constant(x_only(), Scalar(1));
    LaurentPoly p = derive_n(spec.grammar, spec.seed, n);
    switch (f) {
    case Family::eulerian_uni:
        return eulerian_to_uni(p);
    case Family::andre_uni:
        return andre_to_uni(p);
    case Family::left_peak_uni:
        return left_peak_to_uni(p);
    case Family::interior_peak_uni:
        return interior_peak_to_uni(p);
    case Family::lr_peak_uni:
        return lr_peak_to_uni(p);
    case Family::deriv_P:
        return p.compact().with_vars(x_only());
    case Family::deriv_Q: {
        LaurentPoly a = LaurentPoly::variable(spec.seed.vars(), "a");
        return exact_divide(p, a).compact().with_vars(x_only());
    }
    default:
        return p;
    }
}

LaurentPoly family_poly(const std::string& name, int n) { return family_poly(family_from_name(name), n); }

Sequence sequence_from_name(const std::string& name)
{
    static const std::map<std::string, Sequence> names{{"euler", Sequence::euler},
                                                       {"tangent", Sequence::tangent},
                                                       {"secant", Sequence::secant},
                                                       {"springer", Sequence::springer},
                                                       {"p_at_one", Sequence::p_at_one}};
    auto it = names.find(name);
    if (it == names.end())
        throw UnknownSequence("unknown sequence '" + name + "'");
    return it->second;
}

std::string sequence_name(Sequence s)
{
    switch (s) {
    case Sequence::euler:
        return "euler";
    case Sequence::tangent:
        return "tangent";
    case Sequence::secant:
        return "secant";
    case Sequence::springer:
        return "springer";
    case Sequence::p_at_one:
        return "p_at_one";
    }
    return "?";
}

Integer family_number(Sequence s, int n)
{
    switch (s) {
    case Sequence::euler:
        return integer_of(evaluate(family_poly(Family::andre_biv, n), {{"u", Scalar(1)}, {"v", Scalar(1)}}), "euler");
    case Sequence::tangent:
        return integer_of(evaluate(family_poly(Family::deriv_P, n), {{"x", Scalar(0)}}), "tangent");
    case Sequence::secant:
        return integer_of(evaluate(family_poly(Family::deriv_Q, n), {{"x", Scalar(0)}}), "secant");
    case Sequence::springer:
        return integer_of(evaluate(family_poly(Family::deriv_Q, n), {{"x", Scalar(1)}}), "springer");
    case Sequence::p_at_one:
        return integer_of(evaluate(family_poly(Family::deriv_P, n), {{"x", Scalar(1)}}), "p_at_one");
    }
    throw UnknownSequence("unhandled sequence");
}

Integer family_number(const std::string& name, int n) { return family_number(sequence_from_name(name), n); }

CoefficientTable gamma_expansion(int n)
{
    if (n < 1)
        throw NotGammaExpressible("gamma expansion needs n >= 1");
    CoefficientTable t = gamma_expansion_of(family_poly(Family::eulerian_biv, n), n);

    // Cross-check in the (u, v) = (xy, x+y) basis: A_n = D^{n-1}(u).
    LaurentPoly uv = derive_n(grammars::eulerian_uv(), LaurentPoly::variable(VarTable{"u", "v"}, "u"), n - 1);
    CoefficientTable direct{"gamma", n, {}};
    for (const auto& [m, c] : uv.terms())
        direct.coeffs[m[0]] = integer_of(c, "gamma");
    if (!(direct == t))
        throw std::logic_error("gamma expansion disagrees with the (u,v) grammar at n=" + std::to_string(n));
    return t;
}

CoefficientTable gamma_expansion_of(const LaurentPoly& a_xy, int n)
{
    VarTable xy{"x", "y"};
    LaurentPoly x = LaurentPoly::variable(xy, "x"), y = LaurentPoly::variable(xy, "y");
    LaurentPoly residual = a_xy.with_vars(xy);
    CoefficientTable t{"gamma", n, {}};
    for (int k = 0; 2 * k <= n + 1; ++k) {
        Scalar c = residual.coefficient({k, n + 1 - k});
        if (c.is_zero())
            continue;
        if (!c.is_integer())
            throw NotGammaExpressible("non-integer gamma coefficient at k=" + std::to_string(k));
        residual -= c * ((x * y).pow(k) * (x + y).pow(n + 1 - 2 * k));
        t.coeffs[k] = c.re().get_num();
    }
    if (!residual.is_zero())
        throw NotGammaExpressible("nonzero residual " + render(residual) + " in gamma expansion at n=" +
                                  std::to_string(n));
    return t;
}

BetaKind beta_kind_from_name(const std::string& name)
{
    if (name == "P")
        return BetaKind::P;
    if (name == "Q")
        return BetaKind::Q;
    if (name == "gbeta")
        return BetaKind::gbeta;
    throw Error("unknown beta expansion '" + name + "'");
}

namespace {

struct BetaBasis {
    int k_min, k_max;
    int lowest(int k) const { return base_offset - 2 * k; }
    int base_offset;
    int x_scale; ///< 1, or 2 for (2x)
    int k_shift; ///< power of (1+x^2) is k + k_shift
};

BetaBasis beta_basis(BetaKind which, int n)
{
    switch (which) {
    case BetaKind::Q:
        return {0, n / 2, n, 1, 0};
    case BetaKind::P:
        return {0, (n - 1) / 2, n - 1, 1, 1};
    case BetaKind::gbeta:
        return {1, (n + 1) / 2, n + 1, 2, 0};
    }
    throw Error("unhandled beta kind");
}

std::string beta_table_name(BetaKind which)
{
    switch (which) {
    case BetaKind::Q:
        return "beta_Q";
    case BetaKind::P:
        return "beta_P";
    case BetaKind::gbeta:
        return "gbeta";
    }
    return "?";
}

LaurentPoly beta_term(const BetaBasis& b, int k)
{
    LaurentPoly x = x_var();
    LaurentPoly one = LaurentPoly::constant(x_only(), Scalar(1));
    return (Scalar(b.x_scale) * x).pow(b.lowest(k)) * (one + x * x).pow(k + b.k_shift);
}

} // namespace

CoefficientTable beta_expansion(BetaKind which, int n)
{
    if (n < 1)
        throw NotBetaExpressible("beta expansion needs n >= 1");
    return beta_expansion_of(which, family_poly(which == BetaKind::Q ? Family::deriv_Q : Family::deriv_P, n), n);
}

CoefficientTable beta_expansion_of(BetaKind which, const LaurentPoly& poly, int n)
{
    BetaBasis b = beta_basis(which, n);
    LaurentPoly residual = poly.with_vars(x_only());
    CoefficientTable t{beta_table_name(which), n, {}};
    for (int k = b.k_max; k >= b.k_min; --k) {
        LaurentPoly term = beta_term(b, k);
        Scalar c = residual.coefficient({b.lowest(k)}) / term.coefficient({b.lowest(k)});
        if (c.is_zero())
            continue;
        if (!c.is_integer())
            throw NotBetaExpressible("non-integer beta coefficient at k=" + std::to_string(k));
        residual -= c * term;
        t.coeffs[k] = c.re().get_num();
    }
    if (!residual.is_zero())
        throw NotBetaExpressible("nonzero residual " + render(residual) + " in beta expansion at n=" +
                                 std::to_string(n));
    return t;
}

LaurentPoly beta_sum(BetaKind which, const CoefficientTable& table)
{
    BetaBasis b = beta_basis(which, table.n);
    LaurentPoly sum(x_only());
    for (const auto& [k, c] : table.coeffs)
        sum += Scalar(c) * beta_term(b, k);
    return sum;
}

CoefficientTable coefficient_table(Family f, int n)
{
    CoefficientTable t{family_name(f), n, {}};
    for (const auto& [k, c] : univariate_coefficients(family_poly(f, n), "x"))
        t.coeffs[k] = integer_of(c, "coefficient table");
    return t;
}

std::vector<LaurentPoly> recurrence_chain(RecurrenceKind which, int n)
{
    LaurentPoly x = x_var();
    LaurentPoly one = LaurentPoly::constant(x_only(), Scalar(1));
    std::vector<LaurentPoly> chain{which == RecurrenceKind::P ? x : one};
    for (int k = 0; k < n; ++k) {
        const LaurentPoly& p = chain.back();
        LaurentPoly next = (one + x * x) * partial_derivative(p, "x");
        if (which == RecurrenceKind::Q)
            next += x * p;
        chain.push_back(next.with_vars(x_only()));
    }
    return chain;
}

LaurentPoly recurrence_poly(RecurrenceKind which, int n)
{
    if (n < 0)
        throw Error("recurrence index must be nonnegative");
    LaurentPoly r = recurrence_chain(which, n).back();
    LaurentPoly g = family_poly(which == RecurrenceKind::P ? Family::deriv_P : Family::deriv_Q, n);
    if (!(r == g))
        throw std::logic_error("recurrence and grammar disagree at n=" + std::to_string(n));
    return r;
}

} // namespace gramcalc
