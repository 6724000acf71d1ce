#include "cyltor/poly_text.hpp"

#include <cctype>
#include <sstream>

namespace cyltor {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const SurfaceSignature& sig;
    const std::vector<std::string>& vars;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    Int parse_integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) {
            pos = start;
            fail("expected integer");
        }
        return Int(s.substr(start, pos - start));
    }

    std::int64_t parse_exponent() {
        skip_ws();
        bool paren = eat('(');
        Int v = parse_integer();
        if (paren && !eat(')')) fail("expected ')'");
        return v.convert_to<std::int64_t>();
    }

    int parse_variable() {
        skip_ws();
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const std::string& name = vars[i];
            if (s.compare(pos, name.size(), name) == 0) {
                // longest match wins so x12 is not read as x1
                bool longer = false;
                for (std::size_t j = 0; j < vars.size(); ++j)
                    if (vars[j].size() > name.size() &&
                        s.compare(pos, vars[j].size(), vars[j]) == 0)
                        longer = true;
                if (!longer) {
                    pos += name.size();
                    return static_cast<int>(i);
                }
            }
        }
        return -1;
    }

    LaurentPolynomial parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("expected term");
        if (eat('(')) {
            LaurentPolynomial inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos])))
            return LaurentPolynomial::constant(sig, parse_integer());
        int var = parse_variable();
        if (var < 0) fail("unknown variable for the declared surface");
        ExponentVector e = ev_zero(sig);
        e[var] = 1;
        return LaurentPolynomial::monomial(sig, e);
    }

    LaurentPolynomial parse_factor() {
        std::size_t base_pos = pos;
        LaurentPolynomial base = parse_base();
        if (eat('^')) {
            std::int64_t e = parse_exponent();
            if (e >= 0) {
                LaurentPolynomial r = LaurentPolynomial::one(sig);
                for (std::int64_t i = 0; i < e; ++i) r = r * base;
                return r;
            }
            // negative power: only monomials stay in the ring
            if (base.term_count() != 1) {
                pos = base_pos;
                fail("negative power of a non-monomial");
            }
            const auto& [exp, coef] = *base.terms().begin();
            if (coef != 1 && coef != -1) {
                pos = base_pos;
                fail("negative power of a non-unit coefficient");
            }
            ExponentVector scaled(exp.size());
            for (std::size_t i = 0; i < exp.size(); ++i) scaled[i] = exp[i] * e;
            return LaurentPolynomial::monomial(sig, scaled, coef == 1 ? 1 : (e % 2 ? -1 : 1));
        }
        return base;
    }

    LaurentPolynomial parse_product() {
        LaurentPolynomial r = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                r = r * parse_factor();
                continue;
            }
            break;
        }
        return r;
    }

    LaurentPolynomial parse_expr() {
        LaurentPolynomial r(sig);
        bool negate = false;
        skip_ws();
        if (eat('-'))
            negate = true;
        else
            eat('+');
        LaurentPolynomial t = parse_product();
        r = negate ? -t : t;
        for (;;) {
            skip_ws();
            if (eat('+')) {
                r += parse_product();
            } else if (eat('-')) {
                r -= parse_product();
            } else {
                break;
            }
        }
        return r;
    }
};

std::vector<std::string> default_variables(const SurfaceSignature& sig) {
    std::vector<std::string> vars;
    for (int i = 0; i < sig.rank(); ++i) vars.push_back(variable_name(sig, i));
    return vars;
}

} // namespace

LaurentPolynomial parse_polynomial(const std::string& text, const SurfaceSignature& sig,
                                   const std::vector<std::string>& variables) {
    if (static_cast<int>(variables.size()) != sig.rank())
        throw std::invalid_argument("variable list does not match signature rank");
    Parser p{text, 0, sig, variables};
    LaurentPolynomial r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected trailing input");
    return r;
}

LaurentPolynomial parse_polynomial(const std::string& text, const SurfaceSignature& sig) {
    return parse_polynomial(text, sig, default_variables(sig));
}

std::string print_polynomial(const LaurentPolynomial& p,
                             const std::vector<std::string>& variables) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Int mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += variables[i];
            if (e[i] != 1) monomial += "^" + std::to_string(e[i]);
        }
        if (monomial.empty()) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << monomial;
        }
    }
    return out.str();
}

std::string print_polynomial(const LaurentPolynomial& p) {
    return print_polynomial(p, default_variables(p.signature()));
}

ExponentVector parse_group_element(const std::string& text, const SurfaceSignature& sig) {
    LaurentPolynomial p = parse_polynomial(text, sig);
    if (p.term_count() != 1 || p.terms().begin()->second != 1)
        throw parse_error("expected a single monomial with coefficient 1", 0);
    return p.terms().begin()->first;
}

} // namespace cyltor
