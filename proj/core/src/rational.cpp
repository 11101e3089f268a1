#include "klein_lie/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace klein_lie {

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(mpq_class(1) / value_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string num, den = "1";
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        num = std::string(text.substr(0, slash));
        den = std::string(text.substr(slash + 1));
    } else {
        num = std::string(text);
    }
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    mpz_class n(num), d(den);
    if (d == 0) return std::nullopt;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

bool Rational::is_perfect_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(value_.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(value_.get_den().get_mpz_t());
}

Rational Rational::sqrt() const {
    if (!is_perfect_square()) throw std::invalid_argument("Rational: not a perfect square");
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), value_.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), value_.get_den().get_mpz_t());
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
    return value_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace klein_lie
