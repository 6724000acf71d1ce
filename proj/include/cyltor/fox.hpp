#pragma once

#include "cyltor/intmat.hpp"
#include "cyltor/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace cyltor {

/// A freely reduced word in a free group: letters (generator index, +-1)
/// with no adjacent cancellation.
class FreeWord {
public:
    using Letter = std::pair<int, int>; // (generator, exponent +-1)

    FreeWord() = default;
    static FreeWord generator(int g, int power = 1);
    static FreeWord from_letters(const std::vector<Letter>& letters);

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }

    FreeWord operator*(const FreeWord& other) const;
    FreeWord inverse() const;
    FreeWord pow(int k) const;

    bool operator==(const FreeWord&) const = default;
    auto operator<=>(const FreeWord&) const = default;

private:
    void reduce();
    std::vector<Letter> letters_;
};

/// Formal integer combination of free words (an element of Z[F]).
using WordSum = std::map<FreeWord, Int>;

/// Standard Fox calculus: d(uv) = du + u dv, da/da = 1, d(a^-1)/da = -a^-1.
WordSum fox_derivative(const FreeWord& w, int generator);

/// Parse the word grammar: generators a..z or g1..gk, ^ integer powers,
/// juxtaposition for products, parenthesized groups.
FreeWord parse_word(const std::string& text, int free_rank);

std::string print_word(const FreeWord& w);

/// Handle data for a homology cylinder presented over the surface: as many
/// attaching words as free generators, plus the lattice identification of
/// the abelianized free group with H.
struct HandlePresentation {
    int free_rank = 0;
    std::vector<FreeWord> attaching_words;
    SurfaceSignature target;
    IntMatrix identification; // target.rank() x free_rank

    HandlePresentation() = default;
    HandlePresentation(int rank, std::vector<FreeWord> words, const SurfaceSignature& sig,
                       IntMatrix ident);

    static HandlePresentation trivial(int rank, const SurfaceSignature& sig, IntMatrix ident);
};

/// Abelianization of a word sum into Z[H] through the identification map.
LaurentPolynomial abelianize(const WordSum& s, const HandlePresentation& pres);

/// The matrix [d w_j / d x_i] pushed into Z[H]; rows indexed by generators,
/// columns by attaching words.
std::vector<std::vector<LaurentPolynomial>> abelianized_matrix(const HandlePresentation& pres);

struct CylinderCheck {
    bool is_cylinder;
    Int determinant; // of the integer matrix of abelianized exponents
};

/// The boundary map on integral chains is invertible over Z (det = +-1).
CylinderCheck cylinder_condition(const HandlePresentation& pres);

/// Determinant of the abelianized Fox matrix, unit-normalized; the torsion
/// of the presented cylinder up to +-h. Requires cylinder_condition.
LaurentPolynomial torsion_from_presentation(const HandlePresentation& pres);

} // namespace cyltor
