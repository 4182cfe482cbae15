#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopelab/knots.hpp"
#include "slopelab/laurent.hpp"

namespace slopelab {

/// Quadratic quasi-polynomial of period at most 2 with exact rational
/// coefficients.  coeffs[r] applies to colors n with n mod period == r.
/// Valid for n >= threshold.  A residue's constant term may be marked
/// unknown (the cable predictor's high-twist branch leaves it symbolic).
struct QuasiPoly {
    struct Coeffs {
        Rational a, b, c;
        bool operator==(const Coeffs&) const = default;
    };

    int period = 1;
    std::vector<Coeffs> coeffs; // size == period
    int threshold = 0;
    std::vector<bool> c_unknown; // empty means all constants known

    static QuasiPoly quadratic(const Rational& a, const Rational& b, const Rational& c,
                               int threshold = 0);

    const Coeffs& at(long long n) const { return coeffs[(std::size_t)(n % period)]; }
    bool constant_known(long long n) const;
    Rational evaluate(long long n) const;

    bool a_constant() const;
    bool b_constant() const;
    bool operator==(const QuasiPoly&) const = default;
};

enum class DegreeKind { Max, Min };

/// Extreme degrees of the colored Jones at colors 1..n_max (entry i-1 is
/// color i).  normalized selects J' over J.
std::vector<Rational> degree_sequence(const KnotExprPtr& K, int n_max, DegreeKind which,
                                      bool normalized, const JonesCache* cache = nullptr);

/// Exact quasi-polynomial fit of a degree sequence.  seq[i] is the value at
/// n = n_offset + i.  Tries period 1 then period 2; each candidate period
/// interpolates a quadratic through the last three points of every residue
/// class, requires at least one further point of agreement per class, and
/// extends backward while agreement persists.  The threshold is the
/// smallest n from which every supplied point matches.
QuasiPoly fit_quasipoly(const std::vector<Rational>& seq, int n_offset);

struct SlopeData {
    std::vector<Rational> js; // {4 a_r}, deduplicated, sorted
    std::vector<Rational> jx; // {2 b_r}
};

struct ConditionDelta {
    bool pass;
    std::string reason; // empty when passing
};

std::pair<SlopeData, ConditionDelta> slopes_and_conditions(const QuasiPoly& qp);

/// Sampled leading-sign record.  Signs are per parity of the color; a
/// violation carries the witness pair.  Empirical over [n_lo, n_hi] only.
struct SignRecord {
    bool normalized;
    int n_lo, n_hi;
    int sign_even = 0, sign_odd = 0; // 0 when the parity was not sampled
    bool satisfied = true;
    int witness_m = -1, witness_n = -1;
};

SignRecord sign_condition_check(const KnotExprPtr& K, int n_lo, int n_hi, bool normalized,
                                const JonesCache* cache = nullptr);

enum class NormDirection { ToNormalized, ToUnnormalized };

/// Exact coefficient transport between the degree conventions for J and J'
/// (delta'(n) = delta(n+1) - n/2), with residue reindexing for period 2.
QuasiPoly normalize_transform(const QuasiPoly& qp, NormDirection dir);

/// Degree predictor for the twisted generalized double, in the unnormalized
/// convention.  (a1,b1,c1) are the companion's quasi-polynomial coefficients
/// at odd colors.  Requires b1 <= 0, and the boundary colors a1 = tau/4
/// (omega > 0) or a1 = tau/4 + 1/8 (omega < 0) are rejected when b1 = 0.
/// When C_plus is supplied it replaces the c1-based constant in the
/// below-threshold branches (omega > 0).
QuasiPoly predict_whitehead_delta(const Rational& a1, const Rational& b1, const Rational& c1,
                                  long long omega, long long tau,
                                  const std::optional<Rational>& C_plus = std::nullopt);

/// C_+(K,tau): max of -tau k^2 - (tau-1) k + d_+[J'_{K,2k}] over
/// 0 <= k <= N_prime, with the smallest maximizer k0.
std::pair<Rational, int> compute_C_plus(const KnotExprPtr& K, long long tau, int N_prime,
                                        const JonesCache* cache = nullptr);

/// Closed-form degree quasi-polynomial of a positive torus knot T(p,q).
QuasiPoly predict_torus_delta(int p, int q);
/// Negative torus knot T(p,-q) (p,q > 0): linear with negative slope.
QuasiPoly predict_negative_torus_delta(int p, int q);
/// Connected sum: delta_1 + delta_2 - n/2 + 1/2.
QuasiPoly predict_sum_delta(const QuasiPoly& q1, const QuasiPoly& q2);

struct CablePrediction {
    QuasiPoly qp;
    bool constant_unknown; // true on the p/q >= 4a branch
};
/// (p,q)-cable predictor (q > 1); inner must have constant a and b.
CablePrediction predict_cable_delta(long long p, long long q, const QuasiPoly& inner);

/// Structural predictor over the expression language: unknot, torus,
/// mirrored torus, connected sums and doubles of predictable companions.
QuasiPoly predict_delta(const KnotExprPtr& K);

} // namespace slopelab
