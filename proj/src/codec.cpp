#include "gramcalc/codec.hpp"

#include "gramcalc/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gramcalc {

std::string render(const LaurentPoly& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        bool constant = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            Rational mag = abs(c.re());
            if (constant || mag != 1)
                coeff = Scalar::rational_string(mag);
        } else {
            coeff = c.to_string();
        }
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;

        bool need_star = false;
        if (!coeff.empty()) {
            out << coeff;
            need_star = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (need_star)
                out << '*';
            out << f.vars()[i];
            if (m[i] != 1)
                out << '^' << m[i];
            need_star = true;
        }
    }
    return out.str();
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const VarTable& hint) : text_(text), names_(hint.names()) {}

    LaurentPoly run()
    {
        // First pass collects variable names so every intermediate shares one table.
        collect_names();
        vars_ = VarTable(names_);
        pos_ = 0;
        LaurentPoly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    void collect_names()
    {
        std::size_t i = 0;
        while (i < text_.size()) {
            if (ident_start(text_[i])) {
                std::size_t j = i;
                while (j < text_.size() && ident_char(text_[j]))
                    ++j;
                std::string name(text_.substr(i, j - i));
                if (name != "I" && std::find(names_.begin(), names_.end(), name) == names_.end())
                    names_.push_back(name);
                i = j;
            } else if (std::isdigit(static_cast<unsigned char>(text_[i]))) {
                while (i < text_.size() && ident_char(text_[i]))
                    ++i;
            } else {
                ++i;
            }
        }
    }

    LaurentPoly expr()
    {
        LaurentPoly acc(vars_);
        bool negate = false;
        skip_ws();
        if (peek('+') || peek('-')) {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        LaurentPoly t = product();
        acc += negate ? -t : t;
        while (peek('+') || peek('-')) {
            bool minus = text_[pos_] == '-';
            ++pos_;
            LaurentPoly next = product();
            acc += minus ? -next : next;
        }
        return acc;
    }

    LaurentPoly product()
    {
        LaurentPoly acc = factor();
        while (peek('*')) {
            ++pos_;
            acc *= factor();
        }
        return acc;
    }

    long exponent()
    {
        skip_ws();
        bool paren = false;
        if (peek('(')) {
            paren = true;
            ++pos_;
            skip_ws();
        }
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer exponent");
        long e = std::stol(std::string(text_.substr(start, pos_ - start)));
        if (paren) {
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
        }
        return negative ? -e : e;
    }

    LaurentPoly factor()
    {
        std::size_t at = (skip_ws(), pos_);
        LaurentPoly base = primary();
        if (peek('^')) {
            ++pos_;
            long e = exponent();
            try {
                return base.pow(e);
            } catch (const NonInvertibleSubstitution&) {
                throw ParseError("negative power of a multi-term expression", at);
            }
        }
        return base;
    }

    LaurentPoly primary()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = expr();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string num(text_.substr(start, pos_ - start));
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::size_t dstart = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                if (dstart == pos_)
                    fail("expected denominator");
                num += "/" + std::string(text_.substr(dstart, pos_ - dstart));
            }
            return LaurentPoly::constant(vars_, Scalar::parse_rational(num));
        }
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_]))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == "I")
                return LaurentPoly::constant(vars_, Scalar::i());
            return LaurentPoly::variable(vars_, name);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::vector<std::string> names_;
    VarTable vars_;
    std::size_t pos_ = 0;
};

} // namespace

LaurentPoly parse_poly(std::string_view text, const VarTable& hint)
{
    return Parser(text, hint).run();
}

json scalar_to_json(const Scalar& s)
{
    if (s.is_real())
        return Scalar::rational_string(s.re());
    return json{{"re", Scalar::rational_string(s.re())}, {"im", Scalar::rational_string(s.im())}};
}

Scalar scalar_from_json(const json& j)
{
    if (j.is_string())
        return Scalar::parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Scalar(j.get<long>());
    if (j.is_object() && j.contains("re") && j.contains("im"))
        return Scalar(Scalar::parse_rational(j.at("re").get<std::string>()).re(),
                      Scalar::parse_rational(j.at("im").get<std::string>()).re());
    throw ParseError("malformed coefficient " + j.dump(), 0);
}

json to_json(const LaurentPoly& f)
{
    json terms = json::array();
    for (const auto& [m, c] : f.terms())
        terms.push_back(json{{"coeff", scalar_to_json(c)}, {"exps", m}});
    return json{{"vars", f.vars().names()}, {"terms", std::move(terms)}};
}

LaurentPoly from_json(const json& j)
{
    try {
        VarTable vars(j.at("vars").get<std::vector<std::string>>());
        LaurentPoly p(vars);
        std::size_t index = 0;
        for (const auto& t : j.at("terms")) {
            auto exps = t.at("exps").get<Monomial>();
            if (exps.size() != vars.size())
                throw ParseError("term exponent vector has wrong length", index);
            p.add_term(exps, scalar_from_json(t.at("coeff")));
            ++index;
        }
        return p;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what(), 0);
    }
}

} // namespace gramcalc
