#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "slopelab/errors.hpp"

namespace slopelab {

using Rational = mpq_class;

/// Canonicalized rational from 64-bit parts (gmpxx has no long long
/// constructors).
inline Rational make_rat(std::int64_t num, std::int64_t den = 1) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

/// Exponent of q quantized to eighths: the value is num/8.
///
/// One fixed granularity covers every fractional power the invariants
/// produce (the twist coefficient needs eighths, the torus formula needs
/// quarters, quantum integers need halves) without tracking denominators
/// at runtime.
struct Exponent {
    std::int64_t num = 0; // exponent value is num/8

    constexpr Exponent() = default;
    constexpr explicit Exponent(std::int64_t eighths) : num(eighths) {}

    static constexpr Exponent integer(std::int64_t n) { return Exponent(8 * n); }
    static constexpr Exponent half(std::int64_t n) { return Exponent(4 * n); }    // n/2
    static constexpr Exponent quarter(std::int64_t n) { return Exponent(2 * n); } // n/4

    Rational value() const { return make_rat(num, 8); }
    bool is_integer() const { return num % 8 == 0; }

    friend auto operator<=>(const Exponent&, const Exponent&) = default;
    Exponent operator+(Exponent o) const { return Exponent(num + o.num); }
    Exponent operator-(Exponent o) const { return Exponent(num - o.num); }
    Exponent operator-() const { return Exponent(-num); }
};

/// Sparse exact Laurent polynomial in q with exponents in (1/8)Z and
/// rational coefficients.  Invariants: no stored coefficient is zero,
/// coefficients are canonicalized, the zero polynomial is the empty map.
/// Values are immutable in spirit: every operation returns a fresh value.
class LaurentPoly {
public:
    using TermMap = std::map<std::int64_t, Rational>; // key: exponent in eighths

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly constant(const Rational& c);
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly monomial(const Rational& coeff, Exponent e);
    /// q^e
    static LaurentPoly q_power(Exponent e) { return monomial(1, e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(Exponent e) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(unsigned e) const;

    /// Multiply by the monomial c*q^e in place (cheap shift-and-scale).
    void shift_scale(Exponent e, const Rational& c);

    /// q -> q^{-1}: negates every exponent.  Involution; swaps the extreme
    /// degrees with negation.
    LaurentPoly substitute_q_inverse() const;

    Exponent max_exponent() const; // throws ZeroPolynomialError on 0
    Exponent min_exponent() const;

    /// True when all exponents are integers and all coefficients integral.
    bool is_integral() const;

    /// Canonical text form: one term per line "EXPNUM COEFF_NUM COEFF_DEN",
    /// EXPNUM = 8*exponent, ascending exponent order, fractions reduced.
    /// Bit-exact reproducible; used verbatim as the cache payload.
    std::string serialize() const;
    static LaurentPoly deserialize(const std::string& text);

    /// Human-readable rendering, e.g. "q^-1 + 2 + q".
    std::string pretty() const;

    void add_term(Exponent e, const Rational& c);

private:
    TermMap terms_;
};

struct DegreeData {
    Rational d_plus;
    Rational d_minus;
    int lead_sign;  // sign of the coefficient at d_plus
    int trail_sign; // sign of the coefficient at d_minus
};

/// Extreme degrees and extreme-coefficient signs.  Throws ZeroPolynomialError.
DegreeData degree_data(const LaurentPoly& p);

enum class ArithOp { Add, Sub, Mul };
LaurentPoly arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op);

/// Exact quotient r with r*den == num; throws NotDivisibleError otherwise.
/// Leading-term elimination from the top exponent downward.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// A formal quotient of Laurent polynomials.  Never simplified mid-flight;
/// only terminal exact division is attempted (rational_reduce).
struct RationalLaurent {
    LaurentPoly num;
    LaurentPoly den;

    RationalLaurent() : num(LaurentPoly::zero()), den(LaurentPoly::one()) {}
    RationalLaurent(LaurentPoly n, LaurentPoly d);

    static RationalLaurent from_poly(const LaurentPoly& p) {
        return RationalLaurent(p, LaurentPoly::one());
    }

    RationalLaurent operator+(const RationalLaurent& o) const;
    RationalLaurent operator*(const RationalLaurent& o) const;
    RationalLaurent operator*(const LaurentPoly& p) const;

    /// Maximum degree in the extended sense: d_plus[num] - d_plus[den].
    Rational d_plus_extended() const;
    Rational d_minus_extended() const;
};

/// Terminal exact division num/den; throws NotDivisibleError.
LaurentPoly rational_reduce(const RationalLaurent& r);

} // namespace slopelab
