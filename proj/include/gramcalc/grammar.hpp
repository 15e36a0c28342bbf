#pragma once

#include "gramcalc/codec.hpp"
#include "gramcalc/laurent.hpp"
#include "gramcalc/trunc_series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gramcalc {

/// Adjoined square root: `var`^2 = `radicand`.
struct SqrtExtension {
    std::string var;
    LaurentPoly radicand;
};

/// A context-free grammar: substitution rules var -> Laurent polynomial.
/// Variables without a rule are constants. With a square-root extension all
/// results are reduced so the extension variable has exponent 0 or 1.
class Grammar {
public:
    Grammar() = default;
    Grammar(VarTable vars, std::map<std::string, LaurentPoly> rules,
            std::optional<SqrtExtension> extension = std::nullopt);

    /// Parses lines `var -> polynomial` and an optional `sqrt z^2 = polynomial`.
    static Grammar parse(std::string_view text);
    static Grammar from_json(const json& j);
    json to_json() const;
    std::string to_text() const;

    const VarTable& vars() const noexcept { return vars_; }
    const std::map<std::string, LaurentPoly>& rules() const noexcept { return rules_; }
    const std::optional<SqrtExtension>& extension() const noexcept { return extension_; }

    /// The rule for `var`; zero for constants.
    LaurentPoly rule(const std::string& var) const;

    /// Normal form under the extension relation (identity without one).
    LaurentPoly reduce(const LaurentPoly& f) const;

private:
    VarTable vars_;
    std::map<std::string, LaurentPoly> rules_;
    std::optional<SqrtExtension> extension_;
};

/// D(f) = sum_i rule(x_i) * df/dx_i.
LaurentPoly derive(const Grammar& g, const LaurentPoly& f);
LaurentPoly derive_n(const Grammar& g, const LaurentPoly& f, int n);
/// D^0(f) .. D^n(f).
std::vector<LaurentPoly> derive_chain(const Grammar& g, const LaurentPoly& f, int n);

/// Truncated Gen(f, t) = sum D^k(f) t^k / k!, k <= order.
TruncSeries gen_coeffs(const Grammar& g, const LaurentPoly& f, int order);

/// sum_k C(n,k) D^k(f) D^{n-k}(g). Throws std::logic_error if the result
/// disagrees with D^n(f*g).
LaurentPoly leibniz_expand(const Grammar& g, const LaurentPoly& f, const LaurentPoly& h, int n);

struct TransformationCheck {
    bool holds = true;
    std::string variable; ///< first new variable where the rules disagree
    LaurentPoly derived;  ///< D_old(phi(w))
    LaurentPoly expected; ///< phi(rule_new(w))
};

/// Checks that phi carries `old_grammar` to `new_grammar`: for every new
/// variable w, D_old(phi(w)) == phi(rule_new(w)).
TransformationCheck verify_transformation(const Grammar& old_grammar, const SubstitutionMap& phi,
                                          const Grammar& new_grammar);

/// Adjoins z with z^2 = radicand and rule z -> D(radicand) / (2 z).
Grammar extend_sqrt(const Grammar& g, const std::string& z, const LaurentPoly& radicand);

/// Grammars used throughout the library.
namespace grammars {
Grammar eulerian();    ///< x -> xy, y -> xy
Grammar eulerian_uv(); ///< u -> uv, v -> 2u
Grammar dumont();      ///< u -> 2uv, v -> u
Grammar andre();       ///< u -> uv, v -> u
Grammar peak();        ///< x -> xy, y -> x^2
Grammar derivative();  ///< a -> ax, x -> 1 + x^2
Grammar exp_dumont();  ///< a -> av, v -> u, u -> 2uv
Grammar peak_xyz();    ///< x -> xy, y -> z, z -> 2yz
} // namespace grammars

} // namespace gramcalc
