#include "bgg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace bgg {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
    mpq_t den;
    mpq_init(den);
    mpq_set_si(den, d, 1);
    mpq_div(v_, v_, den);
    mpq_clear(den);
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    // mpq_set_str accepts forms we must reject ("0x..", whitespace);
    // restrict to [-]digits[/digits].
    auto digits = [](const std::string& t, size_t from, size_t to) {
        if (from >= to) return false;
        for (size_t i = from; i < to; ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    size_t start = (s[0] == '-') ? 1 : 0;
    size_t slash = s.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = digits(s, start, s.size());
    } else {
        ok = digits(s, start, slash) && digits(s, slash + 1, s.size());
    }
    if (!ok) throw std::invalid_argument("rational: malformed '" + s + "'");
    Rational r;
    if (mpq_set_str(r.v_, s.c_str(), 10) != 0)
        throw std::invalid_argument("rational: malformed '" + s + "'");
    if (mpz_sgn(mpq_denref(r.v_)) == 0)
        throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    mpq_canonicalize(r.v_);
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    mpq_div(v_, v_, o.v_);
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("rational: inverse of zero");
    Rational r;
    mpq_inv(r.v_, v_);
    return r;
}

std::string Rational::str() const {
    char* raw = mpq_get_str(nullptr, 10, v_);
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    return s;
}

long Rational::num_mod(long p) const {
    return mpz_fdiv_ui(mpq_numref(v_), static_cast<unsigned long>(p));
}

long Rational::den_mod(long p) const {
    return mpz_fdiv_ui(mpq_denref(v_), static_cast<unsigned long>(p));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace bgg
