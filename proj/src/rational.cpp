#include "bsroots/rational.hpp"

#include "bsroots/errors.hpp"

#include <algorithm>
#include <cctype>

namespace bsroots {

namespace mp = boost::multiprecision;

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x)
{
    const Integer num = mp::numerator(x);
    const Integer den = mp::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole)
{
    if (s.empty()) throw InputError("malformed rational '" + std::string(whole) + "'");
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw InputError("malformed rational '" + std::string(whole) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw InputError("malformed rational '" + std::string(whole) + "'");
    }
    Integer v(std::string(s.substr(i)));
    return negative ? Integer(-v) : v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    const Integer num = parse_integer(s.substr(0, slash), text);
    const std::string_view den_text = s.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw InputError("malformed rational '" + std::string(text) + "'");
    const Integer den = parse_integer(den_text, text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Integer floor(const Rational& x)
{
    const Integer num = mp::numerator(x);
    const Integer den = mp::denominator(x);
    Integer q, r;
    mp::divide_qr(num, den, q, r);
    if (r < 0) --q;
    return q;
}

Integer ceil(const Rational& x) { return -floor(Rational(-x)); }

bool is_integer(const Rational& x) { return mp::denominator(x) == 1; }

Integer gcd(const Integer& a, const Integer& b) { return mp::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0) return 0;
    return mp::abs(a / mp::gcd(a, b) * b);
}

Rational frac(const Rational& x) { return x - Rational(floor(x)); }

Integer mod_prime(const Rational& x, const Integer& p)
{
    const Integer num = mp::numerator(x);
    const Integer den = mp::denominator(x);
    Integer d = den % p;
    if (d == 0) throw ModulusError("prime " + p.str() + " divides denominator " + den.str());
    // extended Euclid on (d, p)
    Integer old_r = d, r = p, old_s = 1, s = 0;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    Integer res = (num % p) * old_s % p;
    if (res < 0) res += p;
    return res;
}

IntVector primitive(IntVector v)
{
    Integer g = 0;
    for (const auto& x : v) g = mp::gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

IntVector primitive(const RatVector& v)
{
    Integer den = 1;
    for (const auto& x : v) den = lcm(den, mp::denominator(x));
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(mp::numerator(x) * (den / mp::denominator(x)));
    return primitive(std::move(out));
}

RatVector to_rational(const IntVector& v)
{
    return RatVector(v.begin(), v.end());
}

RatVector to_rational(const std::vector<long>& v)
{
    RatVector out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

Rational dot(const RatVector& a, const RatVector& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Integer dot(const IntVector& a, const IntVector& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace bsroots
