#include "gramcalc/grammar.hpp"

#include "gramcalc/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gramcalc {

TruncSeries::TruncSeries(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw Error("a truncated series needs at least one coefficient");
}

TruncSeries TruncSeries::constant(const LaurentPoly& value, int order)
{
    std::vector<LaurentPoly> c(static_cast<std::size_t>(order < 0 ? 0 : order) + 1);
    c[0] = value;
    return TruncSeries(std::move(c));
}

TruncSeries TruncSeries::truncated(int order) const
{
    if (order > this->order())
        throw Error("cannot extend a truncated series from order " + std::to_string(this->order()) +
                    " to " + std::to_string(order));
    return TruncSeries(std::vector<LaurentPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

// ---------------------------------------------------------------------------

Grammar::Grammar(VarTable vars, std::map<std::string, LaurentPoly> rules, std::optional<SqrtExtension> extension)
    : vars_(std::move(vars)), rules_(std::move(rules)), extension_(std::move(extension))
{
    for (auto& [v, rhs] : rules_) {
        if (!vars_.contains(v))
            throw Error("rule for unknown variable '" + v + "'");
        for (const auto& n : rhs.vars())
            if (!vars_.contains(n) && rhs.max_exponent(n).value_or(0) != 0)
                throw Error("rule for '" + v + "' uses unknown variable '" + n + "'");
        rhs = rhs.with_vars(vars_);
    }
    if (extension_) {
        extension_->radicand = extension_->radicand.with_vars(vars_);
        if (!vars_.contains(extension_->var))
            throw ExtensionConflict("extension variable '" + extension_->var + "' not in table");
        if (extension_->radicand.max_exponent(extension_->var).value_or(0) != 0 ||
            extension_->radicand.min_exponent(extension_->var).value_or(0) != 0)
            throw ExtensionConflict("radicand may not involve the extension variable");
    }
}

LaurentPoly Grammar::rule(const std::string& var) const
{
    auto it = rules_.find(var);
    if (it == rules_.end())
        return LaurentPoly(vars_);
    return it->second;
}

LaurentPoly Grammar::reduce(const LaurentPoly& f) const
{
    if (!extension_)
        return f;
    auto idx = f.vars().index_of(extension_->var);
    if (!idx)
        return f;
    bool already = true;
    for (const auto& [m, c] : f.terms())
        if (m[*idx] != 0 && m[*idx] != 1)
            already = false;
    if (already)
        return f;

    std::map<int, LaurentPoly> radicand_powers;
    LaurentPoly out(f.vars());
    for (const auto& [m, c] : f.terms()) {
        int e = m[*idx];
        int q = e >= 0 ? e / 2 : -((-e + 1) / 2);
        int r = e - 2 * q;
        Monomial base = m;
        base[*idx] = r;
        LaurentPoly t = LaurentPoly::term(f.vars(), base, c);
        if (q != 0) {
            auto it = radicand_powers.find(q);
            if (it == radicand_powers.end())
                it = radicand_powers.emplace(q, extension_->radicand.pow(q)).first;
            t *= it->second;
        }
        out += t;
    }
    return out.with_vars(f.vars().merged(out.vars()));
}

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

} // namespace

Grammar Grammar::parse(std::string_view text)
{
    std::vector<std::pair<std::string, std::string>> raw_rules;
    std::optional<std::pair<std::string, std::string>> raw_sqrt;
    std::size_t offset = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::size_t line_start = offset;
        offset += line.size() + 1;
        auto hash = line.find('#');
        std::string body = trim(line.substr(0, hash));
        if (body.empty())
            continue;
        if (body.rfind("sqrt", 0) == 0 && body.size() > 4 && std::isspace(static_cast<unsigned char>(body[4]))) {
            auto eq = body.find('=');
            if (eq == std::string::npos)
                throw ParseError("expected 'sqrt z^2 = polynomial'", line_start);
            std::string lhs = trim(body.substr(4, eq - 4));
            auto caret = lhs.find('^');
            if (caret == std::string::npos || trim(lhs.substr(caret + 1)) != "2")
                throw ParseError("square-root relation must read 'z^2 = ...'", line_start);
            raw_sqrt.emplace(trim(lhs.substr(0, caret)), trim(body.substr(eq + 1)));
            continue;
        }
        auto arrow = body.find("->");
        if (arrow == std::string::npos)
            throw ParseError("expected 'var -> polynomial'", line_start);
        raw_rules.emplace_back(trim(body.substr(0, arrow)), trim(body.substr(arrow + 2)));
    }

    std::vector<std::string> names;
    for (const auto& [v, rhs] : raw_rules) {
        if (std::find(names.begin(), names.end(), v) != names.end())
            throw ParseError("duplicate rule for '" + v + "'", 0);
        names.push_back(v);
    }
    VarTable vars(names);
    std::map<std::string, LaurentPoly> rules;
    for (const auto& [v, rhs] : raw_rules) {
        LaurentPoly p = parse_poly(rhs, vars);
        vars = vars.merged(p.vars());
        rules.emplace(v, p);
    }
    std::optional<SqrtExtension> ext;
    if (raw_sqrt) {
        LaurentPoly rad = parse_poly(raw_sqrt->second, vars);
        vars = vars.merged(rad.vars());
        if (!vars.contains(raw_sqrt->first))
            vars = vars.merged(VarTable{raw_sqrt->first});
        ext = SqrtExtension{raw_sqrt->first, rad.with_vars(vars)};
    }
    for (auto& [v, p] : rules)
        p = p.with_vars(vars);
    return Grammar(vars, std::move(rules), std::move(ext));
}

json Grammar::to_json() const
{
    json rules = json::object();
    for (const auto& [v, rhs] : rules_)
        rules[v] = gramcalc::to_json(rhs);
    json j{{"vars", vars_.names()}, {"rules", std::move(rules)}};
    if (extension_)
        j["sqrt"] = json{{"var", extension_->var}, {"radicand", gramcalc::to_json(extension_->radicand)}};
    return j;
}

Grammar Grammar::from_json(const json& j)
{
    try {
        VarTable vars(j.at("vars").get<std::vector<std::string>>());
        std::map<std::string, LaurentPoly> rules;
        for (const auto& [v, p] : j.at("rules").items())
            rules.emplace(v, gramcalc::from_json(p));
        std::optional<SqrtExtension> ext;
        if (j.contains("sqrt"))
            ext = SqrtExtension{j.at("sqrt").at("var").get<std::string>(),
                                gramcalc::from_json(j.at("sqrt").at("radicand"))};
        return Grammar(std::move(vars), std::move(rules), std::move(ext));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed grammar JSON: ") + e.what(), 0);
    }
}

std::string Grammar::to_text() const
{
    std::ostringstream out;
    for (const auto& v : vars_) {
        auto it = rules_.find(v);
        if (it != rules_.end())
            out << v << " -> " << render(it->second.compact()) << '\n';
    }
    if (extension_)
        out << "sqrt " << extension_->var << "^2 = " << render(extension_->radicand.compact()) << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------

LaurentPoly derive(const Grammar& g, const LaurentPoly& f)
{
    LaurentPoly out(f.vars());
    for (const auto& v : f.vars()) {
        auto it = g.rules().find(v);
        if (it == g.rules().end() || it->second.is_zero())
            continue;
        LaurentPoly d = partial_derivative(f, v);
        if (d.is_zero())
            continue;
        out += it->second * d;
    }
    return g.reduce(out);
}

std::vector<LaurentPoly> derive_chain(const Grammar& g, const LaurentPoly& f, int n)
{
    if (n < 0)
        throw Error("derivative order must be nonnegative");
    std::vector<LaurentPoly> chain;
    chain.reserve(static_cast<std::size_t>(n) + 1);
    chain.push_back(g.reduce(f));
    for (int k = 0; k < n; ++k)
        chain.push_back(derive(g, chain.back()));
    return chain;
}

LaurentPoly derive_n(const Grammar& g, const LaurentPoly& f, int n)
{
    return derive_chain(g, f, n).back();
}

TruncSeries gen_coeffs(const Grammar& g, const LaurentPoly& f, int order)
{
    return TruncSeries(derive_chain(g, f, order));
}

LaurentPoly leibniz_expand(const Grammar& g, const LaurentPoly& f, const LaurentPoly& h, int n)
{
    auto df = derive_chain(g, f, n);
    auto dh = derive_chain(g, h, n);
    LaurentPoly sum;
    for (int k = 0; k <= n; ++k)
        sum += Scalar(binomial(n, k)) * (df[k] * dh[n - k]);
    sum = g.reduce(sum);
    if (!(sum == derive_n(g, f * h, n)))
        throw std::logic_error("Leibniz expansion disagrees with the iterated derivative at n=" + std::to_string(n));
    return sum;
}

TransformationCheck verify_transformation(const Grammar& old_grammar, const SubstitutionMap& phi,
                                          const Grammar& new_grammar)
{
    for (const auto& w : new_grammar.vars()) {
        auto it = phi.find(w);
        if (it == phi.end())
            throw Error("transformation does not define new variable '" + w + "'");
    }
    for (const auto& w : new_grammar.vars()) {
        LaurentPoly derived = derive(old_grammar, phi.at(w));
        LaurentPoly expected = old_grammar.reduce(substitute(new_grammar.rule(w), phi));
        if (!(derived == expected))
            return TransformationCheck{false, w, derived, expected};
    }
    return {};
}

Grammar extend_sqrt(const Grammar& g, const std::string& z, const LaurentPoly& radicand)
{
    if (g.extension())
        throw ExtensionConflict("grammar already carries a square-root extension");
    if (g.vars().contains(z))
        throw ExtensionConflict("extension variable '" + z + "' already belongs to the grammar");
    if (radicand.is_zero())
        throw ExtensionConflict("radicand must be nonzero");
    for (const auto& n : radicand.vars())
        if (!g.vars().contains(n) && radicand.max_exponent(n).value_or(0) != 0)
            throw ExtensionConflict("radicand uses variable '" + n + "' outside the grammar");

    VarTable vars = g.vars().merged(VarTable{z});
    LaurentPoly rad = radicand.with_vars(vars);
    LaurentPoly d_rad = derive(g, radicand).with_vars(vars);

    // D(z) = D(r) / (2 z) = z * D(r) / (2 r).
    LaurentPoly rule(vars);
    if (!d_rad.is_zero()) {
        LaurentPoly ratio;
        try {
            ratio = exact_divide(d_rad, rad);
        } catch (const InexactDivision&) {
            throw ExtensionConflict("derivative of the radicand is not divisible by the radicand");
        }
        rule = (ratio * LaurentPoly::variable(vars, z) * Scalar(Rational(1, 2))).with_vars(vars);
    }
    auto rules = g.rules();
    for (auto& [v, p] : rules)
        p = p.with_vars(vars);
    rules[z] = rule;
    return Grammar(vars, std::move(rules), SqrtExtension{z, rad});
}

// ---------------------------------------------------------------------------

namespace grammars {

Grammar eulerian() { return Grammar::parse("x -> x*y\ny -> x*y\n"); }
Grammar eulerian_uv() { return Grammar::parse("u -> u*v\nv -> 2*u\n"); }
Grammar dumont() { return Grammar::parse("u -> 2*u*v\nv -> u\n"); }
Grammar andre() { return Grammar::parse("u -> u*v\nv -> u\n"); }
Grammar peak() { return Grammar::parse("x -> x*y\ny -> x^2\n"); }
Grammar derivative() { return Grammar::parse("a -> a*x\nx -> 1 + x^2\n"); }
Grammar exp_dumont() { return Grammar::parse("a -> a*v\nv -> u\nu -> 2*u*v\n"); }
Grammar peak_xyz() { return Grammar::parse("x -> x*y\ny -> z\nz -> 2*y*z\n"); }

} // namespace grammars

} // namespace gramcalc
