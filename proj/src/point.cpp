#include "cycloset/point.hpp"

#include <cstdlib>

namespace cycloset {

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            size_t used = 0;
            long long v = std::stoll(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
            return Rational(v);
        }
        size_t u1 = 0, u2 = 0;
        std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        long long num = std::stoll(a, &u1);
        long long den = std::stoll(b, &u2);
        if (u1 != a.size() || u2 != b.size() || den == 0)
            throw std::invalid_argument(text);
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw CycloError("ParseError", "not a rational: '" + text + "'");
    }
}

std::string to_string(const Rational& q)
{
    if (q.denominator() == 1)
        return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational wrap_turns(Rational q)
{
    long long n = q.numerator(), d = q.denominator();
    long long r = n % d;
    if (r < 0)
        r += d;
    return Rational(r, d);
}

CirclePoint CirclePoint::angle(Rational turns)
{
    CirclePoint p;
    p.kind = Kind::Angle;
    p.turns = wrap_turns(turns);
    return p;
}

CirclePoint CirclePoint::orbit(long long i, long long n)
{
    CirclePoint p;
    p.kind = Kind::Orbit;
    long long r = ((i % n) + n) % n;
    p.turns = Rational(r, n);
    p.index = r;
    return p;
}

CirclePoint CirclePoint::symbolic(int limit, long long pos, Rational limit_turns)
{
    CirclePoint p;
    p.kind = Kind::Symbolic;
    p.turns = wrap_turns(limit_turns);
    p.index = pos;
    p.limit = limit;
    return p;
}

std::string CirclePoint::label() const
{
    switch (kind) {
    case Kind::Angle:
        return to_string(turns);
    case Kind::Orbit:
        return std::to_string(index);
    case Kind::Symbolic:
        return std::to_string(limit) + ":" + std::to_string(index);
    }
    return {};
}

} // namespace cycloset
