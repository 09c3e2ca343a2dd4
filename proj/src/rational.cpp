#include "medgeo/rational.hpp"

#include <cctype>

namespace medgeo {

Rat::Rat(long num, long den) {
    if (den == 0) throw invalid_input("rational with zero denominator");
    v_ = mpq_class(num, den);
    canonical();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw invalid_input("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw invalid_input("rational division by zero");
    v_ /= o.v_;
    return *this;
}

static bool valid_rat_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[i] == '-' || s[i] == '+') ++i;
    bool digits = false, slash = false, denom_digits = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            (slash ? denom_digits : digits) = true;
        } else if (c == '/' && !slash && digits) {
            slash = true;
        } else {
            return false;
        }
    }
    return digits && (!slash || denom_digits);
}

Rat Rat::parse(const std::string& s) {
    if (!valid_rat_token(s)) throw invalid_input("malformed rational '" + s + "'");
    mpq_class v;
    const std::string body = s[0] == '+' ? s.substr(1) : s;
    if (v.set_str(body, 10) != 0) throw invalid_input("malformed rational '" + s + "'");
    if (v.get_den() == 0) throw invalid_input("rational with zero denominator: '" + s + "'");
    Rat r;
    r.v_ = v;
    r.canonical();
    return r;
}

Rat Rat::dyadic(const mpz_class& m, unsigned shift) {
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), shift);
    return Rat(m, den);
}

Rat Rat::pow_uint(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
    Rat r;
    r.v_ = mpq_class(n) / mpq_class(d);
    return r;
}

std::string Rat::str() const {
    return v_.get_str();
}

std::string Rat::decimal(unsigned digits) const {
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, digits);
    // round(|num| * 10^digits / den), half away from zero
    mpz_class scaled = ::abs(num()) * p10;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den().get_mpz_t());
    if (2 * r >= den()) q += 1;
    mpz_class ip = q / p10, fp = q % p10;
    std::string out = is_negative() && q != 0 ? "-" : "";
    out += ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        out += "." + std::string(digits - frac.size(), '0') + frac;
    }
    return out;
}

const Rat& median3(const Rat& a, const Rat& b, const Rat& c) {
    if (a <= b) {
        if (b <= c) return b;
        return a <= c ? c : a;
    }
    if (a <= c) return a;
    return b <= c ? c : b;
}

} // namespace medgeo
