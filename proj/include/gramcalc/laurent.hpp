#pragma once

#include "gramcalc/scalar.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gramcalc {

/// Ordered list of distinct variable names. The order fixes the canonical
/// term order of every polynomial built over the table.
class VarTable {
public:
    VarTable() = default;
    VarTable(std::initializer_list<std::string> names);
    explicit VarTable(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }
    const std::string& operator[](std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> index_of(const std::string& name) const;
    bool contains(const std::string& name) const { return index_of(name).has_value(); }

    /// This table followed by the names of `other` not already present.
    VarTable merged(const VarTable& other) const;

    auto begin() const { return names_.begin(); }
    auto end() const { return names_.end(); }

    friend bool operator==(const VarTable&, const VarTable&) = default;

private:
    std::vector<std::string> names_;
};

/// Signed exponent vector aligned with a VarTable.
using Monomial = std::vector<int>;

long total_degree(const Monomial& m);

/// Canonical order: descending total degree, ties broken by descending
/// lexicographic exponent vector. `operator()(a, b)` is true when a comes
/// first.
struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate Laurent polynomial with exact Gaussian-rational
/// coefficients. Zero coefficients are never stored and terms iterate in
/// canonical order.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Scalar, CanonicalOrder>;

    LaurentPoly() = default;
    LaurentPoly(const Scalar& c);
    LaurentPoly(long c) : LaurentPoly(Scalar(c)) {}
    LaurentPoly(int c) : LaurentPoly(Scalar(c)) {}

    /// The zero polynomial over `vars`.
    explicit LaurentPoly(VarTable vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(VarTable vars, const Scalar& c);
    static LaurentPoly variable(const std::string& name);
    static LaurentPoly variable(VarTable vars, const std::string& name);
    static LaurentPoly term(VarTable vars, Monomial exps, Scalar coeff = Scalar(1));

    const VarTable& vars() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the all-zero monomial.
    Scalar constant_term() const;
    Scalar coefficient(const Monomial& m) const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// True when every coefficient is an exact rational.
    bool is_real() const;

    /// Adds c * x^m, dropping the term if it cancels.
    void add_term(const Monomial& m, const Scalar& c);

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable that occurs with a nonzero exponent.
    LaurentPoly with_vars(const VarTable& target) const;
    /// Drops variables whose exponent is zero in every term.
    LaurentPoly compact() const;

    std::optional<int> max_exponent(const std::string& var) const;
    std::optional<int> min_exponent(const std::string& var) const;
    bool has_negative_exponents() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Scalar& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Scalar& c) { return a *= c; }
    friend LaurentPoly operator*(const Scalar& c, LaurentPoly a) { return a *= c; }

    /// Integer power; negative powers are allowed only for single-term
    /// polynomials (throws NonInvertibleSubstitution otherwise).
    LaurentPoly pow(long e) const;

    /// Exact equality regardless of variable tables.
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    VarTable vars_;
    TermMap terms_;
};

/// Quotient of two Laurent polynomials; never reduced, compared by
/// cross-multiplication.
struct RationalFunction {
    LaurentPoly numerator;
    LaurentPoly denominator{1};

    RationalFunction() = default;
    RationalFunction(LaurentPoly num, LaurentPoly den);
    RationalFunction(LaurentPoly num) : numerator(std::move(num)) {}

    friend bool operator==(const RationalFunction& a, const RationalFunction& b);
};

enum class ArithKind { add, sub, mul };

LaurentPoly poly_arith(ArithKind kind, const LaurentPoly& f, const LaurentPoly& g);

/// Formal partial derivative; the power rule applies to negative exponents.
LaurentPoly partial_derivative(const LaurentPoly& f, const std::string& var);

using SubstitutionMap = std::map<std::string, LaurentPoly>;

/// Ring homomorphism sending each mapped variable to its image. Variables
/// not in the map are left unchanged. A variable occurring with a negative
/// exponent must map to a single term.
LaurentPoly substitute(const LaurentPoly& f, const SubstitutionMap& map);

/// denominator^clear_power * f(var = value), expanded. Throws
/// InsufficientClearing if the result would still need a denominator.
LaurentPoly substitute_rational(const LaurentPoly& f, const std::string& var,
                                const RationalFunction& value, int clear_power);

/// base^clear_power * f(var = numerator / base^base_power), for values whose
/// denominator is a known power, e.g. 4x/(1+x)^2 cleared by powers of 1+x.
LaurentPoly substitute_rational(const LaurentPoly& f, const std::string& var, const LaurentPoly& numerator,
                                const LaurentPoly& base, int base_power, int clear_power);

using Point = std::map<std::string, Scalar>;

/// Exact value of f at `point`; every variable of f must be assigned.
Scalar evaluate(const LaurentPoly& f, const Point& point);

/// Partial evaluation: assigns the listed variables and keeps the rest.
LaurentPoly evaluate_partial(const LaurentPoly& f, const Point& point);

/// q with q * g == f; throws InexactDivision when g does not divide f.
LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g);

/// Every term has total degree `degree` under per-variable weights (default 1).
bool is_homogeneous(const LaurentPoly& f, long degree,
                    const std::map<std::string, long>& weights = {});

/// Replaces each exponent e of `var` by e / 2; throws if some e is odd.
LaurentPoly halve_exponents(const LaurentPoly& f, const std::string& var);

/// Univariate coefficient list: exponent -> coefficient for `var`, requiring
/// f to involve no other variable.
std::map<int, Scalar> univariate_coefficients(const LaurentPoly& f, const std::string& var);

} // namespace gramcalc
