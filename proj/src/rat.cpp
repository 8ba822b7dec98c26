#include "bicircle/rat.hpp"

#include <cctype>
#include <ostream>

namespace bicircle {

Rat Rat::parse(std::string_view s) {
    if (s.empty()) fail(errc::domain_violation, "empty rational string");
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            fail(errc::domain_violation, "bad rational string: " + std::string(s));
    }
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rat(mpz_class(std::string(s)));
        }
        mpz_class n(std::string(s.substr(0, slash)));
        mpz_class d(std::string(s.substr(slash + 1)));
        if (d == 0) fail(errc::zero_division, "zero denominator in: " + std::string(s));
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        fail(errc::domain_violation, "bad rational string: " + std::string(s));
    }
}

std::string Rat::to_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::decimal_string(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round(num * 10^digits / den), ties away from zero
    mpz_class n = num() * scale;
    mpz_class d = den();
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class r2 = ::abs(r) * 2;
    if (r2 >= d) q += (sgn(n) < 0 ? -1 : 1);

    bool neg = q < 0;
    mpz_class aq = ::abs(q);
    std::string body = aq.get_str();
    std::string out = neg ? "-" : "";
    if (digits == 0) return out + body;
    if (static_cast<int>(body.size()) <= digits)
        body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<size_t>(digits), ".");
    return out + body;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

} // namespace bicircle
