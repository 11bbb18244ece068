#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "error.hpp"

namespace czlab {

// All arithmetic in the engine is exact. GMP rationals keep every floor
// evaluation and divisibility test free of rounding, whatever the inputs.
using Rational = mpq_class;
using BigInt = mpz_class;

// Largest-representable iteration horizon; descriptors with no elliptic part
// have no non-degeneracy constraint and get this as their horizon.
inline constexpr std::int64_t kUnboundedHorizon = INT64_MAX / 4;

inline BigInt floor_of(const Rational& q) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

inline std::int64_t floor_i64(const Rational& q) {
    BigInt f = floor_of(q);
    if (!f.fits_slong_p()) fail(Errc::internal, "floor does not fit in 64 bits");
    return static_cast<std::int64_t>(f.get_si());
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Reduces q modulo `period` into [0, period).
inline Rational mod_period(const Rational& q, const Rational& period) {
    Rational r = q / period;
    Rational out = q - Rational(floor_of(r)) * period;
    out.canonicalize();
    return out;
}

// Reduces q modulo 2 into (-1, 1]; values in (1, 2) map to (-1, 0).
inline Rational reduce_symmetric_mod2(const Rational& q) {
    Rational r = mod_period(q, 2);
    if (r > 1) r -= 2;
    return r;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Serialized form is always "p/q" ("p" when q == 1); never floating point.
inline std::string rat_str(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

Rational parse_rational(const std::string& text);

// True iff b divides a (b > 0).
inline bool divides(std::int64_t b, std::int64_t a) { return a % b == 0; }

}  // namespace czlab
