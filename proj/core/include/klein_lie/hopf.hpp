#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "klein_lie/enveloping.hpp"

namespace klein_lie {

struct PairWordOrder {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
        WordOrder o;
        if (o(a.first, b.first)) return true;
        if (o(b.first, a.first)) return false;
        return o(a.second, b.second);
    }
};

struct TripleWordOrder {
    bool operator()(const std::tuple<Word, Word, Word>& a,
                    const std::tuple<Word, Word, Word>& b) const {
        WordOrder o;
        if (o(std::get<0>(a), std::get<0>(b))) return true;
        if (o(std::get<0>(b), std::get<0>(a))) return false;
        if (o(std::get<1>(a), std::get<1>(b))) return true;
        if (o(std::get<1>(b), std::get<1>(a))) return false;
        return o(std::get<2>(a), std::get<2>(b));
    }
};

// Element of the graded tensor square U(L) (x) U(L); both components are
// kept in PBW normal form. Multiplication carries the color sign
//   (x (x) y)(x' (x) y') = theta(deg y, deg x') (xx') (x) (yy').
struct TensorElement {
    const GradedLieAlgebra* algebra = nullptr;
    std::map<std::pair<Word, Word>, Rational, PairWordOrder> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const Word& u, const Word& v, const Rational& c);
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.algebra == b.algebra && a.terms == b.terms;
    }
    std::string str(const GradedLieAlgebra& L) const;
};

// Triple tensors: only needed to state coassociativity; the canonical
// isomorphisms are plain flattening, signs live in multiplication alone.
struct TripleTensorElement {
    const GradedLieAlgebra* algebra = nullptr;
    std::map<std::tuple<Word, Word, Word>, Rational, TripleWordOrder> terms;

    void add_term(const Word& u, const Word& v, const Word& w, const Rational& c);
    friend bool operator==(const TripleTensorElement& a, const TripleTensorElement& b) {
        return a.algebra == b.algebra && a.terms == b.terms;
    }
    std::string str(const GradedLieAlgebra& L) const;
};

TensorElement tensor_one(const EnvelopingAlgebra& U);
TensorElement tensor_of(const EnvelopingAlgebra& U, const EnvelopingElement& a,
                        const EnvelopingElement& b);
TensorElement tensor_multiply(const EnvelopingAlgebra& U, const TensorElement& a,
                              const TensorElement& b);

// c(letter) = letter (x) 1 + 1 (x) letter, extended as an algebra morphism.
TensorElement coproduct(const EnvelopingAlgebra& U, const EnvelopingElement& x);

// Coefficient of the empty word in normal form.
Rational counit(const EnvelopingAlgebra& U, const EnvelopingElement& x);

// S(letter) = -letter, S(1) = 1, extended anti-multiplicatively with the
// color twist S(XY) = theta(x,y) S(Y) S(X); S^2 = id.
EnvelopingElement antipode(const EnvelopingAlgebra& U, const EnvelopingElement& x);

struct HopfFailure {
    std::string axiom;
    Word word;
    std::string lhs, rhs;
};

struct HopfReport {
    bool ok = true;
    std::size_t words_checked = 0;
    std::vector<HopfFailure> failures;
};

// Verifies coassociativity, the counit laws and the antipode convolution
// identity on every normal word of length <= max_word_length.
HopfReport check_hopf_axioms(const EnvelopingAlgebra& U, int max_word_length);

}  // namespace klein_lie
