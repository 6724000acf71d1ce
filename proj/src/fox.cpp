#include "cyltor/fox.hpp"

#include "cyltor/poly_text.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cyltor {

FreeWord FreeWord::generator(int g, int power) {
    FreeWord w;
    if (g < 0) throw std::invalid_argument("FreeWord: negative generator index");
    int sign = power >= 0 ? 1 : -1;
    for (int i = 0; i < std::abs(power); ++i) w.letters_.emplace_back(g, sign);
    return w;
}

FreeWord FreeWord::from_letters(const std::vector<Letter>& letters) {
    FreeWord w;
    w.letters_ = letters;
    w.reduce();
    return w;
}

void FreeWord::reduce() {
    std::vector<Letter> out;
    for (const auto& l : letters_) {
        if (l.second != 1 && l.second != -1)
            throw std::invalid_argument("FreeWord: letter exponent must be +-1");
        if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
            out.pop_back();
        else
            out.push_back(l);
    }
    letters_ = std::move(out);
}

FreeWord FreeWord::operator*(const FreeWord& other) const {
    FreeWord w;
    w.letters_ = letters_;
    for (const auto& l : other.letters_) {
        if (!w.letters_.empty() && w.letters_.back().first == l.first &&
            w.letters_.back().second == -l.second)
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.emplace_back(it->first, -it->second);
    return w;
}

FreeWord FreeWord::pow(int k) const {
    FreeWord base = k >= 0 ? *this : inverse();
    FreeWord r;
    for (int i = 0; i < std::abs(k); ++i) r = r * base;
    return r;
}

WordSum fox_derivative(const FreeWord& w, int generator) {
    WordSum out;
    FreeWord prefix;
    for (const auto& [g, e] : w.letters()) {
        if (e == 1) {
            if (g == generator) {
                auto [it, inserted] = out.try_emplace(prefix, 1);
                if (!inserted && ++it->second == 0) out.erase(it);
            }
            prefix = prefix * FreeWord::generator(g);
        } else {
            prefix = prefix * FreeWord::generator(g, -1);
            if (g == generator) {
                auto [it, inserted] = out.try_emplace(prefix, -1);
                if (!inserted && --it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

namespace {

struct WordParser {
    const std::string& s;
    std::size_t pos = 0;
    int rank;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    int parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) {
            pos = start;
            fail("expected integer exponent");
        }
        return std::stoi(s.substr(start, pos - start));
    }

    FreeWord parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("expected word");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            FreeWord inner = parse_sequence();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        if (c == 'g' && pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            int idx = std::stoi(s.substr(start, pos - start));
            if (idx < 1 || idx > rank) fail("generator index out of range");
            return FreeWord::generator(idx - 1);
        }
        if (c >= 'a' && c <= 'z') {
            int idx = c - 'a';
            if (idx >= rank) fail("generator letter out of range for the given rank");
            ++pos;
            return FreeWord::generator(idx);
        }
        fail("expected generator or '('");
    }

    FreeWord parse_power() {
        FreeWord base = parse_atom();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip_ws();
            bool paren = pos < s.size() && s[pos] == '(';
            if (paren) ++pos;
            int e = parse_int();
            if (paren) {
                skip_ws();
                if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
                ++pos;
            }
            return base.pow(e);
        }
        return base;
    }

    FreeWord parse_sequence() {
        FreeWord w;
        for (;;) {
            skip_ws();
            if (pos >= s.size() || s[pos] == ')') break;
            w = w * parse_power();
        }
        return w;
    }
};

} // namespace

FreeWord parse_word(const std::string& text, int free_rank) {
    WordParser p{text, 0, free_rank};
    FreeWord w = p.parse_sequence();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected trailing input");
    return w;
}

std::string print_word(const FreeWord& w) {
    if (w.is_identity()) return "1";
    std::ostringstream out;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        int run = static_cast<int>(j - i) * ls[i].second;
        out << static_cast<char>('a' + ls[i].first);
        if (run != 1) out << "^" << run;
        i = j;
    }
    return out.str();
}

HandlePresentation::HandlePresentation(int rank, std::vector<FreeWord> words,
                                       const SurfaceSignature& sig, IntMatrix ident)
    : free_rank(rank), attaching_words(std::move(words)), target(sig),
      identification(std::move(ident)) {
    if (static_cast<int>(attaching_words.size()) != free_rank)
        throw std::invalid_argument(
            "HandlePresentation: as many attaching words as free generators required");
    if (identification.rows() != target.rank() || identification.cols() != free_rank)
        throw std::invalid_argument("HandlePresentation: identification matrix shape mismatch");
}

HandlePresentation HandlePresentation::trivial(int rank, const SurfaceSignature& sig,
                                               IntMatrix ident) {
    std::vector<FreeWord> words;
    for (int i = 0; i < rank; ++i) words.push_back(FreeWord::generator(i));
    return HandlePresentation(rank, std::move(words), sig, std::move(ident));
}

namespace {

ExponentVector abelianize_word(const FreeWord& w, const HandlePresentation& pres) {
    std::vector<std::int64_t> free_exp(pres.free_rank, 0);
    for (const auto& [g, e] : w.letters()) {
        if (g >= pres.free_rank)
            throw std::invalid_argument("word uses a generator beyond the free rank");
        free_exp[g] += e;
    }
    return pres.identification.apply64(free_exp);
}

} // namespace

LaurentPolynomial abelianize(const WordSum& s, const HandlePresentation& pres) {
    LaurentPolynomial out(pres.target);
    for (const auto& [w, c] : s) out.add_term(abelianize_word(w, pres), c);
    return out;
}

std::vector<std::vector<LaurentPolynomial>> abelianized_matrix(const HandlePresentation& pres) {
    std::vector<std::vector<LaurentPolynomial>> m(
        pres.free_rank, std::vector<LaurentPolynomial>(pres.free_rank));
    for (int j = 0; j < pres.free_rank; ++j) {
        for (int i = 0; i < pres.free_rank; ++i)
            m[i][j] = abelianize(fox_derivative(pres.attaching_words[j], i), pres);
    }
    return m;
}

CylinderCheck cylinder_condition(const HandlePresentation& pres) {
    IntMatrix m(pres.free_rank, pres.free_rank);
    for (int j = 0; j < pres.free_rank; ++j) {
        for (const auto& [g, e] : pres.attaching_words[j].letters()) m.at(g, j) += e;
    }
    Int det = m.determinant();
    return CylinderCheck{det == 1 || det == -1, det};
}

namespace {

LaurentPolynomial poly_determinant(const std::vector<std::vector<LaurentPolynomial>>& m,
                                   std::vector<int> cols, int row,
                                   const SurfaceSignature& sig) {
    if (cols.empty()) return LaurentPolynomial::one(sig);
    LaurentPolynomial det(sig);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const LaurentPolynomial& entry = m[row][cols[k]];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        for (std::size_t l = 0; l < cols.size(); ++l)
            if (l != k) rest.push_back(cols[l]);
        LaurentPolynomial minor = poly_determinant(m, rest, row + 1, sig);
        LaurentPolynomial term = entry * minor;
        if (k % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

} // namespace

LaurentPolynomial torsion_from_presentation(const HandlePresentation& pres) {
    CylinderCheck check = cylinder_condition(pres);
    if (!check.is_cylinder) {
        std::ostringstream msg;
        msg << "not a homology cylinder: boundary determinant " << check.determinant.str();
        throw std::domain_error(msg.str());
    }
    auto m = abelianized_matrix(pres);
    std::vector<int> cols(pres.free_rank);
    for (int i = 0; i < pres.free_rank; ++i) cols[i] = i;
    LaurentPolynomial det = poly_determinant(m, cols, 0, pres.target);
    return normalize_unit(det).cls.rep();
}

} // namespace cyltor
