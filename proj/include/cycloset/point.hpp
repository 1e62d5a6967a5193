#pragma once

#include <boost/rational.hpp>

#include <stdexcept>
#include <string>
#include <tuple>

namespace cycloset {

using Rational = boost::rational<long long>;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Reduce an angle measured in turns into [0,1).
Rational wrap_turns(Rational q);

class CycloError : public std::runtime_error {
public:
    CycloError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// A point of S^1 with an exact position.
///
/// Angle points sit at a rational number of turns.  Orbit points are the
/// i-th element of a finite carrier (the angle is i/n for Z_n).  Symbolic
/// points (w, n) live in the copy of Z inserted right after the limit point
/// w, ordered by n.  All three compare through the key (turns, tier, index),
/// where turns is the limit angle for symbolic points.
struct CirclePoint {
    enum class Kind { Angle, Orbit, Symbolic };

    Kind kind = Kind::Angle;
    Rational turns{0};
    long long index = 0;
    int limit = -1;

    static CirclePoint angle(Rational turns);
    static CirclePoint orbit(long long i, long long n);
    static CirclePoint symbolic(int limit, long long pos, Rational limit_turns);

    int tier() const { return kind == Kind::Symbolic ? 1 : 0; }
    long long pos() const { return index; }

    auto key() const { return std::make_tuple(turns, tier(), index); }
    bool operator==(const CirclePoint& o) const { return key() == o.key(); }
    bool operator!=(const CirclePoint& o) const { return !(*this == o); }
    bool operator<(const CirclePoint& o) const { return key() < o.key(); }

    std::string label() const;
};

} // namespace cycloset
