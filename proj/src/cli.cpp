#include "gramcalc/cli.hpp"

#include "gramcalc/codec.hpp"
#include "gramcalc/error.hpp"
#include "gramcalc/families.hpp"
#include "gramcalc/identities.hpp"
#include "gramcalc/oracle.hpp"
#include "gramcalc/series.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gramcalc {

namespace {

struct Options {
    std::string format = "text";
    int n = 0;
    int max_n = default_max_n;
    int order = 12;
    std::vector<std::string> at;
    std::vector<std::string> points;
    bool diff = false;
    bool count = false;
    bool confirm = false;
    int bound = -1;
    std::string name;
    std::string arg;
};

class UsageError : public Error {
public:
    using Error::Error;
};

Point parse_assignments(const std::vector<std::string>& items)
{
    Point p;
    for (const auto& raw : items) {
        std::stringstream ss(raw);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty())
                continue;
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                throw UsageError("expected var=rational, got '" + item + "'");
            p[item.substr(0, eq)] = Scalar::parse_rational(item.substr(eq + 1));
        }
    }
    return p;
}

json integer_json(const Integer& c)
{
    if (mpz_fits_slong_p(c.get_mpz_t()))
        return c.get_si();
    return c.get_str();
}

void print_poly(std::ostream& out, const LaurentPoly& f, const std::string& format)
{
    if (format == "json") {
        out << to_json(f).dump() << "\n";
    } else if (format == "csv") {
        out << "coefficient";
        for (const auto& v : f.vars())
            out << "," << v;
        out << "\n";
        for (const auto& [m, c] : f.terms()) {
            out << c.to_string();
            for (int e : m)
                out << "," << e;
            out << "\n";
        }
    } else {
        out << render(f) << "\n";
    }
}

void print_table(std::ostream& out, const CoefficientTable& t, const std::string& format)
{
    if (format == "json") {
        json c = json::object();
        for (const auto& [k, v] : t.coeffs)
            c[std::to_string(k)] = integer_json(v);
        out << json{{"family", t.family}, {"n", t.n}, {"coeffs", c}}.dump() << "\n";
    } else if (format == "csv") {
        out << "k,coefficient\n";
        for (const auto& [k, v] : t.coeffs)
            out << k << "," << v.get_str() << "\n";
    } else {
        bool first = true;
        for (const auto& [k, v] : t.coeffs) {
            out << (first ? "" : ", ") << k << ":" << v.get_str();
            first = false;
        }
        out << "\n";
    }
}

void print_series(std::ostream& out, const TruncSeries& s, const std::string& format)
{
    if (format == "json") {
        out << series_to_json(s).dump() << "\n";
    } else if (format == "csv") {
        out << "n,coefficient\n";
        for (int k = 0; k <= s.order(); ++k)
            out << k << "," << render(s[static_cast<std::size_t>(k)]) << "\n";
    } else {
        for (int k = 0; k <= s.order(); ++k)
            out << (k ? ", " : "") << render(s[static_cast<std::size_t>(k)]);
        out << "\n";
    }
}

int enumeration_bound(const Options& o) { return o.bound >= 0 ? o.bound : default_enumeration_bound; }

std::set<std::string> form_variables(ClosedForm f)
{
    if (f == ClosedForm::bivariate_L)
        return {"x", "y"};
    return {"x"};
}

// ------------------------------------------------------------ commands

int cmd_family(const Options& o, std::ostream& out)
{
    if (o.n < 0)
        throw UsageError("--n must be nonnegative");
    print_poly(out, family_poly(o.name, o.n), o.format);
    return exit_ok;
}

int cmd_number(const Options& o, std::ostream& out)
{
    Integer v = family_number(o.name, o.n);
    if (o.format == "json")
        out << json{{"sequence", o.name}, {"n", o.n}, {"value", integer_json(v)}}.dump() << "\n";
    else
        out << v.get_str() << "\n";
    return exit_ok;
}

int cmd_table(const Options& o, std::ostream& out)
{
    CoefficientTable t;
    if (o.name == "gamma")
        t = gamma_expansion(o.n);
    else if (o.name == "beta_Q" || o.name == "beta_P" || o.name == "gbeta")
        t = beta_expansion(beta_kind_from_name(o.name), o.n);
    else if (o.name == "plane_012_leaves")
        t = plane_leaf_table(o.n, enumeration_bound(o));
    else
        t = coefficient_table(family_from_name(o.name), o.n);
    print_table(out, t, o.format);
    return exit_ok;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err)
{
    std::vector<const IdentityCheck*> checks;
    if (o.name == "all") {
        for (const auto& c : identity_registry())
            checks.push_back(&c);
    } else {
        checks.push_back(&find_identity(o.name));
    }

    std::vector<std::string> raw = o.points;
    raw.insert(raw.end(), o.at.begin(), o.at.end());
    Point values = parse_assignments(raw);
    std::vector<RadicalPoint> points;
    if (!values.empty()) {
        std::set<ClosedForm> forms;
        for (const auto* c : checks)
            forms.insert(c->point_forms.begin(), c->point_forms.end());
        for (ClosedForm f : forms) {
            auto vars = form_variables(f);
            bool covered = std::all_of(vars.begin(), vars.end(), [&](const std::string& v) { return values.count(v); });
            if (!covered)
                continue;
            try {
                points.push_back(radical_point_from_values(f, values));
            } catch (const InvalidRadicalWitness& e) {
                if (o.name != "all")
                    throw;
                err << "note: point not usable for " << closed_form_name(f) << " (" << e.what() << "); using default\n";
            }
        }
    }

    CheckContext ctx({}, points);
    if (o.bound >= 0)
        ctx.oracle_cap = o.bound;

    std::vector<IdentityReport> reports;
    for (const auto* c : checks)
        reports.push_back(run_identity(*c, o.max_n, ctx));

    int failed = 0;
    for (const auto& r : reports)
        failed += r.pass ? 0 : 1;

    if (o.format == "json") {
        if (o.name == "all") {
            json arr = json::array();
            for (const auto& r : reports)
                arr.push_back(r.to_json());
            out << arr.dump(2) << "\n";
        } else {
            out << reports.front().to_json().dump(2) << "\n";
        }
    } else if (o.format == "csv") {
        out << "name,lo,hi,status,witness_n,millis\n";
        for (const auto& r : reports)
            out << r.name << "," << r.lo << "," << r.hi << "," << (r.pass ? "pass" : "fail") << ","
                << (r.witness ? std::to_string(r.witness->n) : "") << "," << r.millis << "\n";
    } else {
        for (const auto& r : reports)
            out << r.to_text() << "\n";
        if (o.name == "all")
            out << "summary: " << (reports.size() - static_cast<std::size_t>(failed)) << " pass, " << failed << " fail\n";
    }
    return failed ? exit_failure : exit_ok;
}

int cmd_list(const Options& o, std::ostream& out)
{
    CheckContext ctx;
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& c : identity_registry())
            arr.push_back({{"name", c.name},
                           {"description", c.description},
                           {"lo", c.lo},
                           {"oracle", c.oracle_backed},
                           {"series", c.series}});
        out << arr.dump(2) << "\n";
        return exit_ok;
    }
    for (const auto& c : identity_registry())
        out << c.name << " [" << c.lo << "..] " << (c.oracle_backed ? "(oracle) " : "") << (c.series ? "(series) " : "")
            << c.description << "\n";
    return exit_ok;
}

LaurentPoly oracle_poly(const std::string& name, int n, int bound)
{
    if (name == "dumont_plane")
        return dumont_plane_oracle(n, bound);
    if (name == "planted_forest")
        return planted_forest_oracle(n, bound);
    return family_poly_oracle(family_from_name(name), n, bound);
}

LaurentPoly grammar_poly(const std::string& name, int n)
{
    if (name == "dumont_plane")
        return family_poly(Family::dumont, n);
    if (name == "planted_forest")
        return derive_n(grammars::exp_dumont(), LaurentPoly::variable("a"), n);
    return family_poly(name, n);
}

int cmd_oracle(const Options& o, std::ostream& out)
{
    LaurentPoly orc = oracle_poly(o.name, o.n, enumeration_bound(o));
    if (!o.diff) {
        print_poly(out, orc, o.format);
        return exit_ok;
    }
    LaurentPoly gram = grammar_poly(o.name, o.n);
    bool equal = gram == orc;
    if (o.format == "json") {
        out << json{{"name", o.name}, {"n", o.n}, {"grammar", render(gram)}, {"oracle", render(orc)}, {"equal", equal}}
                   .dump()
            << "\n";
    } else {
        out << "grammar: " << render(gram) << "\n";
        out << "oracle:  " << render(orc) << "\n";
        out << (equal ? "equal" : "DIFFERENT") << "\n";
    }
    return equal ? exit_ok : exit_failure;
}

int cmd_label(const Options& o, std::ostream& out)
{
    Labeling l = label_permutation(parse_permutation(o.arg), label_scheme_from_name(o.name));
    if (o.format == "json")
        out << json{{"scheme", o.name}, {"labels", l.text}, {"weight", render(l.weight)}}.dump() << "\n";
    else
        out << l.text << " | " << render(l.weight) << "\n";
    return exit_ok;
}

int cmd_series(const Options& o, std::ostream& out)
{
    if (o.order < 0)
        throw UsageError("--order must be nonnegative");
    std::vector<std::string> raw = o.at;
    raw.insert(raw.end(), o.points.begin(), o.points.end());
    Point values = parse_assignments(raw);
    TruncSeries s;
    bool point_valued = false;
    try {
        ClosedForm f = closed_form_from_name(o.name);
        point_valued = f == ClosedForm::gessel_L || f == ClosedForm::bivariate_L || f == ClosedForm::david_barton_L ||
                       f == ClosedForm::david_barton_M;
        if (point_valued) {
            RadicalPoint p = values.empty() ? default_point(f) : radical_point_from_values(f, values);
            s = closed_form_series(f, &p, o.order);
        } else {
            s = closed_form_series(f, nullptr, o.order);
        }
    } catch (const InvalidRadicalWitness&) {
        throw;
    } catch (const Error&) {
        try {
            s = elementary_series(elementary_from_name(o.name), o.order);
        } catch (const Error&) {
            Family fam = family_from_name(o.name);
            std::vector<LaurentPoly> c;
            for (int k = 0; k <= o.order; ++k)
                c.push_back(family_poly(fam, k));
            s = TruncSeries(std::move(c));
        }
    }
    if (!point_valued && !values.empty()) {
        std::vector<LaurentPoly> c;
        for (const auto& coeff : s.coeffs())
            c.push_back(evaluate_partial(coeff, values));
        s = TruncSeries(std::move(c));
    }
    print_series(out, s, o.format);
    return exit_ok;
}

int cmd_trees(const Options& o, std::ostream& out)
{
    StructureKind kind = structure_kind_from_name(o.name);
    int bound = enumeration_bound(o);
    if (o.count) {
        long c = count_structures(kind, o.n, bound);
        if (o.format == "json")
            out << json{{"kind", o.name}, {"n", o.n}, {"count", c}}.dump() << "\n";
        else
            out << c << "\n";
        return exit_ok;
    }
    json arr = json::array();
    auto emit = [&](const json& j) {
        if (o.format == "json")
            arr.push_back(j);
        else
            out << j.dump() << "\n";
    };
    if (kind == StructureKind::permutations)
        enumerate_permutations(o.n, [&](const PermRecord& r) { emit(permutation_to_json(r.sigma)); }, bound);
    else
        enumerate_trees(kind, o.n, [&](const IncreasingTree& t) { emit(structure_to_json(t)); }, bound);
    if (o.format == "json")
        out << arr.dump() << "\n";
    return exit_ok;
}

int cmd_errata(const Options& o, std::ostream& out)
{
    bool all_confirmed = true;
    std::vector<bool> confirmed;
    for (const auto& e : errata()) {
        bool ok = !o.confirm || e.confirm();
        confirmed.push_back(ok);
        all_confirmed = all_confirmed && ok;
    }
    if (o.format == "json") {
        json j = errata_to_json();
        if (o.confirm)
            for (std::size_t i = 0; i < j.size(); ++i)
                j[i]["confirmed"] = static_cast<bool>(confirmed[i]);
        out << j.dump(2) << "\n";
    } else {
        std::size_t i = 0;
        for (const auto& e : errata()) {
            out << e.location << "\n  printed:   " << e.printed << "\n  corrected: " << e.corrected
                << "\n  evidence:  " << e.confirmation << "\n";
            if (o.confirm)
                out << "  status:    " << (confirmed[i] ? "confirmed" : "NOT CONFIRMED") << "\n";
            ++i;
        }
    }
    return all_confirmed ? exit_ok : exit_failure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact grammar calculus: polynomial families, oracles, series and identity checks", "gramcalc"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* family = app.add_subcommand("family", "n-th member of a polynomial family");
    family->add_option("name", o.name, "family name")->required();
    family->add_option("--n", o.n, "index")->required();
    add_format(family);

    auto* number = app.add_subcommand("number", "n-th term of euler, tangent, secant, springer or p_at_one");
    number->add_option("name", o.name)->required();
    number->add_option("--n", o.n)->required();
    add_format(number);

    auto* table = app.add_subcommand("table", "coefficient table: gamma, beta_Q, beta_P, gbeta, plane_012_leaves or a "
                                              "univariate family");
    table->add_option("name", o.name)->required();
    table->add_option("--n", o.n)->required();
    table->add_option("--bound", o.bound, "enumeration bound");
    add_format(table);

    auto* check = app.add_subcommand("check", "run one named identity or all of them");
    check->add_option("name", o.name, "identity name or 'all'")->required();
    check->add_option("--max-n", o.max_n, "largest n (or series order)");
    check->add_option("--points", o.points, "radical point, e.g. x=3/4 or x=3,y=5");
    check->add_option("--at", o.at, "single assignment var=rational");
    check->add_option("--bound", o.bound, "cap for oracle-backed checks");
    add_format(check);

    auto* list = app.add_subcommand("list", "registered identities");
    add_format(list);

    auto* oracle = app.add_subcommand("oracle", "family member by brute-force enumeration");
    oracle->add_option("name", o.name, "family name, dumont_plane or planted_forest")->required();
    oracle->add_option("--n", o.n)->required();
    oracle->add_flag("--diff", o.diff, "compare with the grammar");
    oracle->add_option("--bound", o.bound, "enumeration bound");
    add_format(oracle);

    auto* label = app.add_subcommand("label", "L, M or W labeling of a permutation");
    label->add_option("scheme", o.name)->required();
    label->add_option("permutation", o.arg)->required();
    add_format(label);

    auto* series = app.add_subcommand("series", "EGF coefficients of a closed form, elementary function or family");
    series->add_option("name", o.name)->required();
    series->add_option("--order", o.order);
    series->add_option("--at", o.at, "var=rational");
    series->add_option("--points", o.points, "comma-separated var=rational list");
    add_format(series);

    auto* trees = app.add_subcommand("trees", "list or count structures of one kind");
    trees->add_option("kind", o.name)->required();
    trees->add_option("--n", o.n)->required();
    trees->add_flag("--count", o.count);
    trees->add_option("--bound", o.bound, "enumeration bound");
    add_format(trees);

    auto* errata_cmd = app.add_subcommand("errata", "printed statements corrected by this library");
    errata_cmd->add_flag("--confirm", o.confirm, "recompute the evidence for every entry");
    add_format(errata_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (family->parsed())
            return cmd_family(o, out);
        if (number->parsed())
            return cmd_number(o, out);
        if (table->parsed())
            return cmd_table(o, out);
        if (check->parsed())
            return cmd_check(o, out, err);
        if (list->parsed())
            return cmd_list(o, out);
        if (oracle->parsed())
            return cmd_oracle(o, out);
        if (label->parsed())
            return cmd_label(o, out);
        if (series->parsed())
            return cmd_series(o, out);
        if (trees->parsed())
            return cmd_trees(o, out);
        if (errata_cmd->parsed())
            return cmd_errata(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

} // namespace gramcalc
