#include "chow/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace chow {

std::optional<Rational> parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) return std::nullopt;

    auto slash = t.find('/');
    auto dot = t.find('.');
    try {
        if (slash != std::string::npos) {
            if (dot != std::string::npos) return std::nullopt;
            Rational q(t);
            if (q.get_den() == 0) return std::nullopt;
            q.canonicalize();
            return q;
        }
        if (dot != std::string::npos) {
            std::string digits = t.substr(0, dot) + t.substr(dot + 1);
            std::size_t frac_len = t.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
            BigInt num(digits);
            BigInt den(1);
            for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        Rational q(t);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite");
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

}  // namespace chow
