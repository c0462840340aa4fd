#include "trimetric/rational.hpp"

#include <cctype>
#include <ostream>

#include "trimetric/errors.hpp"

namespace trimetric {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ParseError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string s = text.substr(begin, end - begin);
    if (s.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }
    if (s.empty()) throw ParseError("bare sign is not a rational: '" + text + "'");

    Rational out;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction: '" + text + "'");
        mpz_class d(den);
        if (d == 0) throw ParseError("zero denominator: '" + text + "'");
        mpq_class q(mpz_class(num), d);
        q.canonicalize();
        out.v_ = q;
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
            (ip.empty() && fp.empty()))
            throw ParseError("malformed decimal: '" + text + "'");
        mpz_class scaled(ip.empty() ? std::string("0") : ip);
        for (char c : fp) {
            scaled *= 10;
            scaled += c - '0';
        }
        mpz_class den(1);
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        mpq_class q(scaled, den);
        q.canonicalize();
        out.v_ = q;
    } else {
        if (!all_digits(s)) throw ParseError("not a rational: '" + text + "'");
        out.v_ = mpq_class(mpz_class(s));
    }
    if (negative) out.v_ = -out.v_;
    return out;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace trimetric
