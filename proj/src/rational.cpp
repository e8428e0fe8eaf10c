#include "argshift/rational.hpp"

#include "argshift/errors.hpp"

#include <cctype>

namespace argshift {

Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class to_mpz(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rat Rat::parse(std::string_view text) {
    const std::string_view t = trim(text);
    const auto slash = t.find('/');
    const std::string_view num = trim(t.substr(0, slash));
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : trim(t.substr(slash + 1));
    if (!valid_integer(num) || !valid_integer(den)) {
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    }
    mpz_class d = to_mpz(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rat(mpq_class(to_mpz(num), d));
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& base, unsigned exponent) {
    Rat result(1);
    Rat b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        b *= b;
        exponent >>= 1U;
    }
    return result;
}

} // namespace argshift
