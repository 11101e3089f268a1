#include "klein_lie/enveloping.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "klein_lie/errors.hpp"

namespace klein_lie {

void EnvelopingElement::add_term(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

EnvelopingElement EnvelopingElement::operator+(const EnvelopingElement& o) const {
    if (algebra != o.algebra) throw MixedAlgebras();
    EnvelopingElement out = *this;
    for (const auto& [w, c] : o.terms) out.add_term(w, c);
    return out;
}

EnvelopingElement EnvelopingElement::operator-(const EnvelopingElement& o) const {
    if (algebra != o.algebra) throw MixedAlgebras();
    EnvelopingElement out = *this;
    for (const auto& [w, c] : o.terms) out.add_term(w, -c);
    return out;
}

EnvelopingElement EnvelopingElement::scaled(const Rational& c) const {
    EnvelopingElement out{algebra, {}};
    if (c.is_zero()) return out;
    for (const auto& [w, coeff] : terms) out.terms[w] = coeff * c;
    return out;
}

std::string EnvelopingElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        Rational coeff = c;
        if (!first) {
            os << (coeff.sign() < 0 ? " - " : " + ");
            if (coeff.sign() < 0) coeff = -coeff;
        }
        first = false;
        bool unit_word = w.empty();
        if (!coeff.is_one() || unit_word) {
            os << coeff.str();
            if (!unit_word) os << " ";
        }
        for (std::size_t p = 0; p < w.size();) {
            std::size_t q = p;
            while (q < w.size() && w[q] == w[p]) ++q;
            if (p) os << " ";
            os << algebra->name(w[p]);
            if (q - p > 1) os << "^" << (q - p);
            p = q;
        }
    }
    return os.str();
}

EnvelopingElement EnvelopingAlgebra::one() const {
    EnvelopingElement x{L_, {}};
    x.terms[{}] = 1;
    return x;
}

EnvelopingElement EnvelopingAlgebra::letter(int i) const {
    if (i < 0 || i >= L_->dim()) throw std::invalid_argument("letter index out of range");
    EnvelopingElement x{L_, {}};
    x.terms[{i}] = 1;
    return x;
}

EnvelopingElement EnvelopingAlgebra::from_word(const Word& w) const {
    for (int i : w)
        if (i < 0 || i >= L_->dim()) throw std::invalid_argument("letter index out of range");
    EnvelopingElement x{L_, {}};
    x.terms[w] = 1;
    return x;
}

EnvelopingElement EnvelopingAlgebra::scalar(const Rational& c) const {
    EnvelopingElement x{L_, {}};
    if (!c.is_zero()) x.terms[{}] = c;
    return x;
}

EnvelopingElement EnvelopingAlgebra::embed(const RationalVector& v) const {
    EnvelopingElement x{L_, {}};
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) x.terms[{static_cast<int>(i)}] = v[i];
    return x;
}

GroupElement EnvelopingAlgebra::word_degree(const Word& w) const {
    GroupElement d = L_->group().identity();
    for (int i : w) d = d * L_->degree(i);
    return d;
}

std::optional<GroupElement> EnvelopingAlgebra::degree_of(const EnvelopingElement& x) const {
    check_owner(x);
    std::optional<GroupElement> d;
    for (const auto& [w, c] : x.terms) {
        (void)c;
        GroupElement wd = word_degree(w);
        if (!d)
            d = wd;
        else if (*d != wd)
            return std::nullopt;
    }
    if (!d) return L_->group().identity();
    return d;
}

std::size_t EnvelopingAlgebra::disorder(const Word& w) const {
    std::size_t count = 0;
    for (std::size_t p = 0; p < w.size(); ++p)
        for (std::size_t q = p + 1; q < w.size(); ++q)
            if (w[p] > w[q]) ++count;
    return count;
}

int EnvelopingAlgebra::leftmost_violation(const Word& w) const {
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        if (w[p] > w[p + 1]) return static_cast<int>(p);
        if (w[p] == w[p + 1] && L_->theta(w[p], w[p]) == -1) return static_cast<int>(p);
    }
    return -1;
}

EnvelopingElement EnvelopingAlgebra::normal_form(const EnvelopingElement& x) const {
    check_owner(x);
    EnvelopingElement result{L_, {}};
    std::map<Word, Rational, WordOrder> pending = x.terms;

    while (!pending.empty()) {
        std::map<Word, Rational, WordOrder> next;
        auto emit = [&](const Word& w, const Rational& c) {
            if (c.is_zero()) return;
            auto [it, inserted] = next.try_emplace(w, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) next.erase(it);
            }
        };

        for (const auto& [w, c] : pending) {
            int p = leftmost_violation(w);
            if (p < 0) {
                result.add_term(w, c);
                continue;
            }
            int i = w[p], j = w[p + 1];
            if (i > j) {
                //  ... x_i x_j ... -> theta ... x_j x_i ... + ... [x_i,x_j] ...
                Word swapped = w;
                std::swap(swapped[p], swapped[p + 1]);
                emit(swapped, c * L_->color().scalar(L_->degree(i), L_->degree(j)));
                RationalVector br = L_->bracket_basis(i, j);
                for (int k = 0; k < L_->dim(); ++k) {
                    if (br[k].is_zero()) continue;
                    Word contracted;
                    contracted.reserve(w.size() - 1);
                    contracted.insert(contracted.end(), w.begin(), w.begin() + p);
                    contracted.push_back(k);
                    contracted.insert(contracted.end(), w.begin() + p + 2, w.end());
                    emit(contracted, c * br[k]);
                }
            } else {
                // x_i x_i -> 1/2 [x_i,x_i]  (theta(d_i,d_i) = -1; needs char != 2)
                RationalVector br = L_->bracket_basis(i, i);
                for (int k = 0; k < L_->dim(); ++k) {
                    if (br[k].is_zero()) continue;
                    Word contracted;
                    contracted.reserve(w.size() - 1);
                    contracted.insert(contracted.end(), w.begin(), w.begin() + p);
                    contracted.push_back(k);
                    contracted.insert(contracted.end(), w.begin() + p + 2, w.end());
                    emit(contracted, c * br[k] * Rational(1, 2));
                }
            }
        }
        pending = std::move(next);
    }
    return result;
}

EnvelopingElement EnvelopingAlgebra::multiply(const EnvelopingElement& a,
                                              const EnvelopingElement& b) const {
    check_owner(a);
    check_owner(b);
    EnvelopingElement concat{L_, {}};
    for (const auto& [u, cu] : a.terms)
        for (const auto& [v, cv] : b.terms) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            concat.add_term(w, cu * cv);
        }
    return normal_form(concat);
}

EnvelopingElement EnvelopingAlgebra::super_commutator(const EnvelopingElement& a,
                                                      const EnvelopingElement& b) const {
    auto da = degree_of(a);
    auto db = degree_of(b);
    if (!da || !db) throw NotHomogeneous();
    Rational theta = L_->color().scalar(*da, *db);
    return multiply(a, b) - multiply(b, a).scaled(theta);
}

std::vector<Word> EnvelopingAlgebra::normal_words_of_length(int len) const {
    std::vector<Word> out;
    Word current;
    std::function<void(int)> recurse = [&](int min_letter) {
        if (static_cast<int>(current.size()) == len) {
            if (is_normal_word(current)) out.push_back(current);
            return;
        }
        for (int i = min_letter; i < L_->dim(); ++i) {
            current.push_back(i);
            recurse(i);  // nondecreasing: any descent is a violation anyway
            current.pop_back();
        }
    };
    recurse(0);
    return out;
}

std::vector<Word> EnvelopingAlgebra::normal_words_up_to(int maxlen) const {
    std::vector<Word> out;
    for (int len = 0; len <= maxlen; ++len) {
        auto words = normal_words_of_length(len);
        out.insert(out.end(), words.begin(), words.end());
    }
    return out;
}

EnvelopingAlgebra::GradedDimension EnvelopingAlgebra::graded_dimension(int d, int bound) const {
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    if (d > bound) throw BoundExceeded();

    GradedDimension out;
    out.normal_words = static_cast<long>(normal_words_of_length(d).size());

    // Independent count: multisets of basis indices of size d, strict on
    // letters with theta(d_i,d_i) = -1.
    long strict = 0, free = 0;
    for (int i = 0; i < L_->dim(); ++i)
        (L_->theta(i, i) == -1 ? strict : free) += 1;
    Rational total;
    for (long k = 0; k <= std::min<long>(strict, d); ++k) {
        Rational choose_strict = binomial(static_cast<unsigned long>(strict),
                                          static_cast<unsigned long>(k));
        long rest = d - k;
        Rational choose_free =
            (rest == 0) ? Rational(1)
                        : (free == 0 ? Rational(0)
                                     : binomial(static_cast<unsigned long>(free + rest - 1),
                                                static_cast<unsigned long>(rest)));
        total += choose_strict * choose_free;
    }
    out.symmetric_count = static_cast<long>(total.numerator().get_si());
    out.equal = out.normal_words == out.symmetric_count;
    return out;
}

EnvelopingElement EnvelopingAlgebra::casimir(const BilinearForm& b) const {
    // n = 2 with h = b: X = sum_{i,j} b(E_i, E_j) F_j F_i.
    if (b.algebra != L_) throw MixedAlgebras();
    auto dual = dual_basis(b);  // throws Degenerate
    EnvelopingElement x = zero();
    const int n = L_->dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& weight = b.gram.at(i, j);
            if (weight.is_zero()) continue;
            EnvelopingElement fj = embed(dual[j]);
            EnvelopingElement fi = embed(dual[i]);
            x = x + multiply(fj, fi).scaled(weight);
        }
    return normal_form(x);
}

EnvelopingElement EnvelopingAlgebra::casimir(const BilinearForm& b, const NLinearForm& h) const {
    if (b.algebra != L_) throw MixedAlgebras();
    auto dual = dual_basis(b);  // throws Degenerate

    // Degree beta of the form: the common product of degrees over the
    // support of the Gram matrix. Degree-e forms give beta = e and a trivial
    // phase; the general weight Prod_s theta(beta, eps_{i_s})^s is kept.
    GroupElement beta = L_->group().identity();
    for (int i = 0; i < L_->dim(); ++i)
        for (int j = 0; j < L_->dim(); ++j)
            if (!b.gram.at(i, j).is_zero()) beta = L_->degree(i) * L_->degree(j);

    const int n = h.arity();
    const int dim = L_->dim();
    EnvelopingElement x = zero();
    std::vector<int> idx(n, 0);
    for (;;) {
        std::vector<RationalVector> args;
        args.reserve(n);
        for (int s = 0; s < n; ++s) {
            RationalVector e(dim);
            e[idx[s]] = 1;
            args.push_back(std::move(e));
        }
        Rational weight = h.eval(args);
        if (!weight.is_zero()) {
            int phase = 1;
            for (int s = 0; s < n; ++s)
                if ((s + 1) % 2 == 1) phase *= L_->color().sign(beta, L_->degree(idx[s]));
            EnvelopingElement prod = one();
            for (int s = n - 1; s >= 0; --s) prod = multiply(prod, embed(dual[idx[s]]));
            x = x + prod.scaled(weight * Rational(phase));
        }
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == dim - 1) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
    return normal_form(x);
}

void EnvelopingAlgebra::check_owner(const EnvelopingElement& x) const {
    if (x.algebra != L_) throw MixedAlgebras();
}

}  // namespace klein_lie
