#pragma once

#include <array>
#include <vector>

#include "slopelab/laurent.hpp"

namespace slopelab {

/// Quantum integer [s] = (q^{s/2}-q^{-s/2})/(q^{1/2}-q^{-1/2}),
/// built directly in expanded form ([0] = 0).
LaurentPoly qint(int s);

/// Quantum factorial [s]! = prod_{t=1}^{s}[t], memoized.
const LaurentPoly& qfact(int s);

/// <s> = (-1)^s [s+1].
LaurentPoly qbracket(int s);

/// Pre-expands memo tables up to [max_color+1]! so concurrent readers never
/// race a writer.  Called by the engines before fanning out work.
void ensure_quantum_tables(int max_arg);

/// Multiset of quantum-integer factors prod_m [m]^{pow[m]}.  All the
/// coefficient denominators in the satellite sum are products of quantum
/// integers, so least common denominators and complements reduce to
/// componentwise max/subtract on these vectors.
class QFactorVec {
public:
    void mul_qint(int m, int count = 1);
    void mul_qfact(int m);
    /// [hi]!/[lo]! for hi >= lo.
    void mul_qfact_ratio(int hi, int lo);
    void mul(const QFactorVec& o);

    /// Componentwise max.
    static QFactorVec lcm(const QFactorVec& a, const QFactorVec& b);
    /// Componentwise difference; requires *this >= o everywhere.
    QFactorVec minus(const QFactorVec& o) const;
    /// Cancel common factors between num and den in place.
    static void cancel(QFactorVec& num, QFactorVec& den);

    bool empty() const;
    LaurentPoly to_poly() const;
    Rational degree() const; // d_plus of to_poly(), computed arithmetically

private:
    std::vector<int> pow_; // pow_[m] = multiplicity of [m]; [0],[1] unused
};

/// Skein-admissible color triple: s+t+u even, |s-t| <= u <= s+t.
struct AdmissibleTriple {
    int s, t, u;
    AdmissibleTriple(int s, int t, int u);

    static bool admissible(int s, int t, int u);

    int internal_i() const { return (t + u - s) / 2; }
    int internal_j() const { return (u + s - t) / 2; }
    int internal_k() const { return (s + t - u) / 2; }
};

/// <s,t,u> as an unreduced quotient of quantum-factorial products.
/// The value is a rational function of q in general (e.g. <2,2,2>), so the
/// quotient form is primary and the polynomial form is a convenience that
/// throws NotDivisibleError when no exact quotient exists.
RationalLaurent triple_coeff_parts(const AdmissibleTriple& t);
LaurentPoly triple_coeff(const AdmissibleTriple& t);

/// Twist coefficient delta(u;s,t)^{sign}: a single signed monomial.
LaurentPoly twist_coeff(int u, int s, int t, int sign);

/// Labels of a tetrahedral network; the four triangle conditions must hold.
struct TetLabels {
    int A, B, C, D, E, F;
    TetLabels(int A, int B, int C, int D, int E, int F);

    std::array<int, 4> lower_bounds() const; // a_1..a_4
    std::array<int, 3> upper_bounds() const; // b_1..b_3
    int sigma() const { return A + B + C + D + E + F; }
};

/// Tetrahedral coefficient as an unreduced quotient (numerator carries the
/// alternating sum, denominator is a pure factorial product).  Rational in
/// general: tet(1,1,2;1,1,2) = [3]/[2].
RationalLaurent tet_symbol_parts(const TetLabels& l);
LaurentPoly tet_symbol(const TetLabels& l);

/// tet for the satellite pattern, as numerator polynomial plus denominator
/// factor vector (for exact common-denominator assembly).
struct TetFactored {
    LaurentPoly num;
    QFactorVec den;
};
TetFactored tet_factored(const TetLabels& l);

/// Closed-form maximum degrees (independent of the polynomial engines):
/// d_+[<n>] = n/2, d_+[<s,t,u>] = (s+t+u)/4, and the tetrahedral degree
/// formula in terms of Sigma, the a_j, b_i and M = min b_i.
Rational deg_bracket(int n);
Rational deg_triple(int s, int t, int u);
Rational deg_tet(const TetLabels& l);

} // namespace slopelab
