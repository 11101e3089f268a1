#include "klein_lie/hopf.hpp"

#include <sstream>

#include "klein_lie/errors.hpp"

namespace klein_lie {

void TensorElement::add_term(const Word& u, const Word& v, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(u, v);
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void TripleTensorElement::add_term(const Word& u, const Word& v, const Word& w,
                                   const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_tuple(u, v, w);
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

namespace {
std::string word_str(const GradedLieAlgebra& L, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (p) out += " ";
        out += L.name(w[p]);
    }
    return out;
}
}  // namespace

std::string TensorElement::str(const GradedLieAlgebra& L) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << c.str() << " ";
        os << "(" << word_str(L, key.first) << ")(x)(" << word_str(L, key.second) << ")";
    }
    return os.str();
}

std::string TripleTensorElement::str(const GradedLieAlgebra& L) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << c.str() << " ";
        os << "(" << word_str(L, std::get<0>(key)) << ")(x)(" << word_str(L, std::get<1>(key))
           << ")(x)(" << word_str(L, std::get<2>(key)) << ")";
    }
    return os.str();
}

TensorElement tensor_one(const EnvelopingAlgebra& U) {
    TensorElement t{&U.algebra(), {}};
    t.terms[{{}, {}}] = 1;
    return t;
}

TensorElement tensor_of(const EnvelopingAlgebra& U, const EnvelopingElement& a,
                        const EnvelopingElement& b) {
    EnvelopingElement na = U.normal_form(a);
    EnvelopingElement nb = U.normal_form(b);
    TensorElement t{&U.algebra(), {}};
    for (const auto& [u, cu] : na.terms)
        for (const auto& [v, cv] : nb.terms) t.add_term(u, v, cu * cv);
    return t;
}

TensorElement tensor_multiply(const EnvelopingAlgebra& U, const TensorElement& a,
                              const TensorElement& b) {
    if (a.algebra != &U.algebra() || b.algebra != &U.algebra()) throw MixedAlgebras();
    const auto& color = U.algebra().color();
    TensorElement out{&U.algebra(), {}};
    for (const auto& [uv, c1] : a.terms)
        for (const auto& [pq, c2] : b.terms) {
            const auto& [u, v] = uv;
            const auto& [p, q] = pq;
            Rational sign = color.scalar(U.word_degree(v), U.word_degree(p));
            EnvelopingElement left = U.multiply(U.from_word(u), U.from_word(p));
            EnvelopingElement right = U.multiply(U.from_word(v), U.from_word(q));
            Rational coeff = c1 * c2 * sign;
            for (const auto& [lw, lc] : left.terms)
                for (const auto& [rw, rc] : right.terms)
                    out.add_term(lw, rw, coeff * lc * rc);
        }
    return out;
}

TensorElement coproduct(const EnvelopingAlgebra& U, const EnvelopingElement& x) {
    if (x.algebra != &U.algebra()) throw MixedAlgebras();
    TensorElement out{&U.algebra(), {}};
    for (const auto& [w, c] : x.terms) {
        TensorElement word_cop = tensor_one(U);
        for (int letter : w) {
            TensorElement primitive{&U.algebra(), {}};
            primitive.terms[{{letter}, {}}] = 1;
            primitive.terms[{{}, {letter}}] = 1;
            word_cop = tensor_multiply(U, word_cop, primitive);
        }
        for (const auto& [key, wc] : word_cop.terms)
            out.add_term(key.first, key.second, c * wc);
    }
    return out;
}

Rational counit(const EnvelopingAlgebra& U, const EnvelopingElement& x) {
    EnvelopingElement n = U.normal_form(x);
    auto it = n.terms.find(Word{});
    return it == n.terms.end() ? Rational(0) : it->second;
}

EnvelopingElement antipode(const EnvelopingAlgebra& U, const EnvelopingElement& x) {
    if (x.algebra != &U.algebra()) throw MixedAlgebras();
    const auto& L = U.algebra();
    EnvelopingElement out = U.zero();
    for (const auto& [w, c] : x.terms) {
        // S(l . rest) = theta(deg l, deg rest) S(rest) S(l), S(letter) = -letter.
        EnvelopingElement s = U.one();
        for (std::size_t p = w.size(); p-- > 0;) {
            GroupElement head = L.degree(w[p]);
            GroupElement tail = L.group().identity();
            for (std::size_t q = p + 1; q < w.size(); ++q) tail = tail * L.degree(w[q]);
            Rational sign = -L.color().scalar(head, tail);
            s = U.multiply(s, U.letter(w[p])).scaled(sign);
        }
        out = out + s.scaled(c);
    }
    return U.normal_form(out);
}

namespace {

TripleTensorElement expand_left(const EnvelopingAlgebra& U, const TensorElement& t) {
    TripleTensorElement out{&U.algebra(), {}};
    for (const auto& [key, c] : t.terms) {
        TensorElement cu = coproduct(U, U.from_word(key.first));
        for (const auto& [pq, c2] : cu.terms)
            out.add_term(pq.first, pq.second, key.second, c * c2);
    }
    return out;
}

TripleTensorElement expand_right(const EnvelopingAlgebra& U, const TensorElement& t) {
    TripleTensorElement out{&U.algebra(), {}};
    for (const auto& [key, c] : t.terms) {
        TensorElement cv = coproduct(U, U.from_word(key.second));
        for (const auto& [pq, c2] : cv.terms)
            out.add_term(key.first, pq.first, pq.second, c * c2);
    }
    return out;
}

}  // namespace

HopfReport check_hopf_axioms(const EnvelopingAlgebra& U, int max_word_length) {
    HopfReport report;
    const auto& L = U.algebra();

    for (const Word& w : U.normal_words_up_to(max_word_length)) {
        ++report.words_checked;
        EnvelopingElement x = U.from_word(w);
        TensorElement cw = coproduct(U, x);

        // Coassociativity: (c (x) Id) o c = (Id (x) c) o c.
        TripleTensorElement lhs = expand_left(U, cw);
        TripleTensorElement rhs = expand_right(U, cw);
        if (!(lhs == rhs)) {
            report.ok = false;
            report.failures.push_back({"coassociativity", w, lhs.str(L), rhs.str(L)});
        }

        // Counit laws: (eps (x) id) o c = (id (x) eps) o c = id.
        EnvelopingElement left = U.zero(), right = U.zero();
        for (const auto& [key, c] : cw.terms) {
            if (key.first.empty()) left.add_term(key.second, c);
            if (key.second.empty()) right.add_term(key.first, c);
        }
        if (!(left == x) || !(right == x)) {
            report.ok = false;
            report.failures.push_back(
                {"counit", w, left.str() + " | " + right.str(), x.str()});
        }

        // Antipode convolution: mu o (S (x) id) o c = mu o (id (x) S) o c
        // = counit(x) 1.
        EnvelopingElement conv_l = U.zero(), conv_r = U.zero();
        for (const auto& [key, c] : cw.terms) {
            conv_l = conv_l +
                     U.multiply(antipode(U, U.from_word(key.first)), U.from_word(key.second))
                         .scaled(c);
            conv_r = conv_r +
                     U.multiply(U.from_word(key.first), antipode(U, U.from_word(key.second)))
                         .scaled(c);
        }
        EnvelopingElement expected = U.scalar(counit(U, x));
        if (!(conv_l == expected) || !(conv_r == expected)) {
            report.ok = false;
            report.failures.push_back(
                {"antipode", w, conv_l.str() + " | " + conv_r.str(), expected.str()});
        }
    }
    return report;
}

}  // namespace klein_lie
