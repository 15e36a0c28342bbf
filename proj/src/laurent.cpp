#include "gramcalc/laurent.hpp"

#include "gramcalc/error.hpp"

#include <algorithm>
#include <numeric>

namespace gramcalc {

VarTable::VarTable(std::initializer_list<std::string> names) : VarTable(std::vector<std::string>(names)) {}

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names))
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (names_[i] == names_[j])
                throw Error("duplicate variable '" + names_[i] + "' in variable table");
}

std::optional<std::size_t> VarTable::index_of(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

VarTable VarTable::merged(const VarTable& other) const
{
    std::vector<std::string> out = names_;
    for (const auto& n : other.names_)
        if (std::find(out.begin(), out.end(), n) == out.end())
            out.push_back(n);
    return VarTable(std::move(out));
}

long total_degree(const Monomial& m)
{
    return std::accumulate(m.begin(), m.end(), 0L);
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const
{
    long da = total_degree(a);
    long db = total_degree(b);
    if (da != db)
        return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(const Scalar& c)
{
    if (!c.is_zero())
        terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::constant(VarTable vars, const Scalar& c)
{
    LaurentPoly p(std::move(vars));
    if (!c.is_zero())
        p.terms_.emplace(Monomial(p.vars_.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(const std::string& name)
{
    return variable(VarTable{name}, name);
}

LaurentPoly LaurentPoly::variable(VarTable vars, const std::string& name)
{
    auto idx = vars.index_of(name);
    if (!idx)
        throw Error("variable '" + name + "' not in table");
    Monomial m(vars.size(), 0);
    m[*idx] = 1;
    return term(std::move(vars), std::move(m));
}

LaurentPoly LaurentPoly::term(VarTable vars, Monomial exps, Scalar coeff)
{
    if (exps.size() != vars.size())
        throw Error("monomial length does not match variable table");
    LaurentPoly p(std::move(vars));
    if (!coeff.is_zero())
        p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
}

bool LaurentPoly::is_constant() const
{
    if (terms_.empty())
        return true;
    if (terms_.size() != 1)
        return false;
    const auto& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Scalar LaurentPoly::constant_term() const
{
    return coefficient(Monomial(vars_.size(), 0));
}

Scalar LaurentPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

bool LaurentPoly::is_real() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

void LaurentPoly::add_term(const Monomial& m, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::with_vars(const VarTable& target) const
{
    if (target == vars_)
        return *this;
    std::vector<std::optional<std::size_t>> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        map[i] = target.index_of(vars_[i]);
    LaurentPoly out(target);
    for (const auto& [m, c] : terms_) {
        Monomial nm(target.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!map[i])
                throw Error("variable '" + vars_[i] + "' missing from target table");
            nm[*map[i]] = m[i];
        }
        out.terms_.emplace(std::move(nm), c);
    }
    return out;
}

LaurentPoly LaurentPoly::compact() const
{
    std::vector<std::string> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        bool used = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] != 0; });
        if (used)
            keep.push_back(vars_[i]);
    }
    return with_vars(VarTable(std::move(keep)));
}

std::optional<int> LaurentPoly::max_exponent(const std::string& var) const
{
    auto idx = vars_.index_of(var);
    if (terms_.empty())
        return std::nullopt;
    if (!idx)
        return 0;
    int best = terms_.begin()->first[*idx];
    for (const auto& [m, c] : terms_)
        best = std::max(best, m[*idx]);
    return best;
}

std::optional<int> LaurentPoly::min_exponent(const std::string& var) const
{
    auto idx = vars_.index_of(var);
    if (terms_.empty())
        return std::nullopt;
    if (!idx)
        return 0;
    int best = terms_.begin()->first[*idx];
    for (const auto& [m, c] : terms_)
        best = std::min(best, m[*idx]);
    return best;
}

bool LaurentPoly::has_negative_exponents() const
{
    for (const auto& [m, c] : terms_)
        for (int e : m)
            if (e < 0)
                return true;
    return false;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    if (!(vars_ == o.vars_)) {
        VarTable u = vars_.merged(o.vars_);
        *this = with_vars(u);
        return *this += o.with_vars(u);
    }
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    return *this += -o;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (!(a.vars_ == b.vars_)) {
        VarTable u = a.vars_.merged(b.vars_);
        return a.with_vars(u) * b.with_vars(u);
    }
    LaurentPoly out(a.vars_);
    Monomial m(a.vars_.size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

LaurentPoly LaurentPoly::pow(long e) const
{
    if (e < 0) {
        if (terms_.size() != 1)
            throw NonInvertibleSubstitution("negative power of a polynomial with " +
                                            std::to_string(terms_.size()) + " terms");
        const auto& [m, c] = *terms_.begin();
        Monomial inv(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            inv[i] = -m[i];
        return term(vars_, std::move(inv), c.inverse()).pow(-e);
    }
    if (terms_.size() == 1) {
        const auto& [m, c] = *terms_.begin();
        Monomial p(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            p[i] = static_cast<int>(m[i] * e);
        return term(vars_, std::move(p), c.pow(e));
    }
    LaurentPoly result = constant(vars_, Scalar(1));
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.vars_ == b.vars_)
        return a.terms_ == b.terms_;
    if (a.terms_.size() != b.terms_.size())
        return false;
    VarTable u = a.vars_.merged(b.vars_);
    return a.with_vars(u).terms_ == b.with_vars(u).terms_;
}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : numerator(std::move(num)), denominator(std::move(den))
{
    if (denominator.is_zero())
        throw DivisionByZero("rational function with zero denominator");
}

bool operator==(const RationalFunction& a, const RationalFunction& b)
{
    return a.numerator * b.denominator == b.numerator * a.denominator;
}

// ---------------------------------------------------------------------------

LaurentPoly poly_arith(ArithKind kind, const LaurentPoly& f, const LaurentPoly& g)
{
    switch (kind) {
    case ArithKind::add:
        return f + g;
    case ArithKind::sub:
        return f - g;
    case ArithKind::mul:
        return f * g;
    }
    return {};
}

LaurentPoly partial_derivative(const LaurentPoly& f, const std::string& var)
{
    LaurentPoly out(f.vars());
    auto idx = f.vars().index_of(var);
    if (!idx)
        return out;
    for (const auto& [m, c] : f.terms()) {
        int e = m[*idx];
        if (e == 0)
            continue;
        Monomial d = m;
        d[*idx] = e - 1;
        out.add_term(d, c * Scalar(e));
    }
    return out;
}

LaurentPoly substitute(const LaurentPoly& f, const SubstitutionMap& map)
{
    const VarTable& fv = f.vars();
    std::vector<std::string> names;
    auto push = [&](const std::string& n) {
        if (std::find(names.begin(), names.end(), n) == names.end())
            names.push_back(n);
    };
    std::vector<const LaurentPoly*> image(fv.size(), nullptr);
    for (std::size_t i = 0; i < fv.size(); ++i) {
        auto it = map.find(fv[i]);
        if (it == map.end()) {
            push(fv[i]);
        } else {
            image[i] = &it->second;
            for (const auto& n : it->second.vars())
                push(n);
        }
    }
    VarTable target(std::move(names));

    // Cache of powers per variable index, keyed by exponent.
    std::vector<std::map<int, LaurentPoly>> powers(fv.size());
    std::vector<LaurentPoly> base(fv.size());
    for (std::size_t i = 0; i < fv.size(); ++i)
        base[i] = image[i] ? image[i]->with_vars(target) : LaurentPoly::variable(target, fv[i]);

    auto power_of = [&](std::size_t i, int e) -> const LaurentPoly& {
        auto it = powers[i].find(e);
        if (it != powers[i].end())
            return it->second;
        if (e < 0 && !base[i].is_monomial())
            throw NonInvertibleSubstitution("variable '" + fv[i] +
                                            "' occurs with a negative exponent but maps to a non-monomial");
        return powers[i].emplace(e, base[i].pow(e)).first->second;
    };

    LaurentPoly out(target);
    for (const auto& [m, c] : f.terms()) {
        LaurentPoly t = LaurentPoly::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0)
                t *= power_of(i, m[i]);
        out += t;
    }
    return out;
}

LaurentPoly substitute_rational(const LaurentPoly& f, const std::string& var,
                                const RationalFunction& value, int clear_power)
{
    return substitute_rational(f, var, value.numerator, value.denominator, 1, clear_power);
}

LaurentPoly substitute_rational(const LaurentPoly& f, const std::string& var, const LaurentPoly& numerator,
                                const LaurentPoly& base, int base_power, int clear_power)
{
    if (base.is_zero())
        throw DivisionByZero("substituted rational function has zero denominator");
    if (base_power < 1)
        throw Error("denominator power must be positive");
    if (clear_power < 0)
        throw InsufficientClearing("negative clearing power");
    auto idx = f.vars().index_of(var);
    if (!idx || f.is_zero())
        return f * base.pow(clear_power);

    std::map<int, LaurentPoly> by_degree;
    for (const auto& [m, c] : f.terms()) {
        int e = m[*idx];
        if (e < 0)
            throw InsufficientClearing("variable '" + var + "' occurs with a negative exponent");
        if (e * base_power > clear_power)
            throw InsufficientClearing("degree " + std::to_string(e) + " in '" + var + "' needs clearing power " +
                                       std::to_string(e * base_power) + ", got " + std::to_string(clear_power));
        Monomial rest = m;
        rest[*idx] = 0;
        auto& slot = by_degree.try_emplace(e, LaurentPoly(f.vars())).first->second;
        slot.add_term(rest, c);
    }
    LaurentPoly out;
    for (const auto& [e, coeff] : by_degree)
        out += coeff.compact() * numerator.pow(e) * base.pow(clear_power - e * base_power);
    return out;
}

namespace {

Scalar eval_term(const Monomial& m, const Scalar& c, const VarTable& vars,
                 const std::vector<const Scalar*>& values)
{
    Scalar v = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!values[i])
            throw Error("no value supplied for variable '" + vars[i] + "'");
        if (m[i] < 0 && values[i]->is_zero())
            throw DivisionByZero("variable '" + vars[i] + "' with negative exponent evaluated at zero");
        v *= values[i]->pow(m[i]);
    }
    return v;
}

} // namespace

Scalar evaluate(const LaurentPoly& f, const Point& point)
{
    std::vector<const Scalar*> values(f.vars().size(), nullptr);
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto it = point.find(f.vars()[i]);
        if (it != point.end())
            values[i] = &it->second;
    }
    Scalar sum(0);
    for (const auto& [m, c] : f.terms())
        sum += eval_term(m, c, f.vars(), values);
    return sum;
}

LaurentPoly evaluate_partial(const LaurentPoly& f, const Point& point)
{
    const VarTable& fv = f.vars();
    std::vector<const Scalar*> values(fv.size(), nullptr);
    for (std::size_t i = 0; i < fv.size(); ++i) {
        auto it = point.find(fv[i]);
        if (it != point.end())
            values[i] = &it->second;
    }
    LaurentPoly out(fv);
    for (const auto& [m, c] : f.terms()) {
        Scalar v = c;
        Monomial rest = m;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!values[i] || m[i] == 0)
                continue;
            if (m[i] < 0 && values[i]->is_zero())
                throw DivisionByZero("variable '" + fv[i] + "' with negative exponent evaluated at zero");
            v *= values[i]->pow(m[i]);
            rest[i] = 0;
        }
        out.add_term(rest, v);
    }
    return out.compact();
}

LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g)
{
    if (g.is_zero())
        throw DivisionByZero("exact division by the zero polynomial");
    VarTable u = f.vars().merged(g.vars());
    LaurentPoly num = f.with_vars(u);
    LaurentPoly den = g.with_vars(u);
    if (den.is_monomial())
        return num * den.pow(-1);
    if (num.is_zero())
        return num;

    // Shift both operands to ordinary polynomials, divide, shift back.
    auto shift_of = [&](const LaurentPoly& p) {
        Monomial s(u.size(), 0);
        for (const auto& [m, c] : p.terms())
            for (std::size_t i = 0; i < m.size(); ++i)
                s[i] = std::min(s[i], m[i]);
        for (auto& e : s)
            e = -e;
        return s;
    };
    Monomial sn = shift_of(num);
    Monomial sd = shift_of(den);
    num *= LaurentPoly::term(u, sn);
    den *= LaurentPoly::term(u, sd);

    const auto& [lead_m, lead_c] = *den.terms().begin();
    Scalar lead_inv = lead_c.inverse();
    LaurentPoly quotient(u);
    LaurentPoly rem = num;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().begin();
        Monomial qm(u.size());
        for (std::size_t i = 0; i < qm.size(); ++i) {
            qm[i] = rm[i] - lead_m[i];
            if (qm[i] < 0)
                throw InexactDivision("divisor does not divide dividend exactly");
        }
        LaurentPoly t = LaurentPoly::term(u, qm, rc * lead_inv);
        quotient += t;
        rem -= t * den;
    }
    Monomial back(u.size());
    for (std::size_t i = 0; i < back.size(); ++i)
        back[i] = sd[i] - sn[i];
    return quotient * LaurentPoly::term(u, back);
}

bool is_homogeneous(const LaurentPoly& f, long degree, const std::map<std::string, long>& weights)
{
    std::vector<long> w(f.vars().size(), 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto it = weights.find(f.vars()[i]);
        if (it != weights.end())
            w[i] = it->second;
    }
    for (const auto& [m, c] : f.terms()) {
        long d = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            d += w[i] * m[i];
        if (d != degree)
            return false;
    }
    return true;
}

LaurentPoly halve_exponents(const LaurentPoly& f, const std::string& var)
{
    auto idx = f.vars().index_of(var);
    if (!idx)
        return f;
    LaurentPoly out(f.vars());
    for (const auto& [m, c] : f.terms()) {
        if (m[*idx] % 2 != 0)
            throw Error("odd exponent of '" + var + "' cannot be halved");
        Monomial h = m;
        h[*idx] /= 2;
        out.add_term(h, c);
    }
    return out;
}

std::map<int, Scalar> univariate_coefficients(const LaurentPoly& f, const std::string& var)
{
    std::map<int, Scalar> out;
    auto idx = f.vars().index_of(var);
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if ((!idx || i != *idx) && m[i] != 0)
                throw Error("polynomial is not univariate in '" + var + "'");
        out[idx ? m[*idx] : 0] += c;
    }
    return out;
}

} // namespace gramcalc
