#pragma once

#include "gramcalc/grammar.hpp"
#include "gramcalc/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace gramcalc {

enum class Family {
    eulerian_biv,
    eulerian_uni,
    dumont,
    andre_biv,
    andre_uni,
    left_peak_biv,
    left_peak_uni,
    interior_peak_biv,
    interior_peak_uni,
    lr_peak_biv,
    lr_peak_uni,
    R_family,
    deriv_P,
    deriv_Q,
};

/// Every family in declaration order.
const std::vector<Family>& all_families();
std::string family_name(Family f);
/// Throws UnknownFamily.
Family family_from_name(const std::string& name);

struct FamilySpec {
    Family name;
    Grammar grammar;
    LaurentPoly seed;
};

/// Grammar and seed of a family. Univariate families share the spec of
/// their bivariate parent.
FamilySpec family_spec(Family f);

/// The n-th member, D^n(seed) specialized per family convention.
LaurentPoly family_poly(Family f, int n);
LaurentPoly family_poly(const std::string& name, int n);

// Specializations of bivariate members to one variable x.
LaurentPoly eulerian_to_uni(const LaurentPoly& a_xy);       ///< y = 1
LaurentPoly andre_to_uni(const LaurentPoly& e_uv);          ///< v = 1, u renamed x
LaurentPoly left_peak_to_uni(const LaurentPoly& l_xy);      ///< y = 1, / x, halve
LaurentPoly interior_peak_to_uni(const LaurentPoly& m_xy);  ///< y = 1, / x^2, halve
LaurentPoly lr_peak_to_uni(const LaurentPoly& w_xy);        ///< y = 1, halve

enum class Sequence { euler, tangent, secant, springer, p_at_one };

Sequence sequence_from_name(const std::string& name);
std::string sequence_name(Sequence s);
Integer family_number(Sequence s, int n);
Integer family_number(const std::string& name, int n);

/// k -> integer coefficient.
struct CoefficientTable {
    std::string family;
    int n = 0;
    std::map<int, Integer> coeffs;

    friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

/// gamma_{n,k} with A_n(x,y) = sum gamma_{n,k} (xy)^k (x+y)^{n+1-2k}.
CoefficientTable gamma_expansion(int n);
/// Same extraction applied to an arbitrary bivariate polynomial of total
/// degree n+1. Throws NotGammaExpressible.
CoefficientTable gamma_expansion_of(const LaurentPoly& a_xy, int n);

enum class BetaKind {
    Q,     ///< Q_n = sum L(n,k) x^{n-2k} (1+x^2)^k
    P,     ///< P_n = sum M(n,k) x^{n-2k-1} (1+x^2)^{k+1}
    gbeta, ///< P_n = sum beta_{n,k} (2x)^{n+1-2k} (1+x^2)^k
};

BetaKind beta_kind_from_name(const std::string& name);
CoefficientTable beta_expansion(BetaKind which, int n);
CoefficientTable beta_expansion_of(BetaKind which, const LaurentPoly& poly, int n);
/// Rebuilds the polynomial from a beta table.
LaurentPoly beta_sum(BetaKind which, const CoefficientTable& table);

/// Coefficients of x^k in a univariate family member.
CoefficientTable coefficient_table(Family f, int n);

enum class RecurrenceKind { P, Q };

/// P_n or Q_n from the derivative recurrences alone; throws std::logic_error
/// if the result disagrees with the grammar.
LaurentPoly recurrence_poly(RecurrenceKind which, int n);
/// The raw recurrence chain 0..n, no grammar involved.
std::vector<LaurentPoly> recurrence_chain(RecurrenceKind which, int n);

} // namespace gramcalc
