#include "slopelab/quantum.hpp"

#include <algorithm>
#include <mutex>

namespace slopelab {

namespace {

std::mutex table_mutex;
std::vector<LaurentPoly> qint_table;  // qint_table[s] = [s]
std::vector<LaurentPoly> qfact_table; // qfact_table[s] = [s]!

LaurentPoly build_qint(int s) {
    // [s] = sum_{i=0}^{s-1} q^{(s-1-2i)/2}
    LaurentPoly p;
    for (int i = 0; i < s; ++i) p.add_term(Exponent::half(s - 1 - 2 * i), 1);
    return p;
}

void grow_tables_locked(int max_arg) {
    if ((int)qint_table.size() > max_arg) return;
    if (qint_table.empty()) {
        qint_table.push_back(LaurentPoly::zero()); // [0] = 0
        qfact_table.push_back(LaurentPoly::one()); // [0]! = 1
    }
    for (int s = (int)qint_table.size(); s <= max_arg; ++s) {
        qint_table.push_back(build_qint(s));
        qfact_table.push_back(qfact_table[s - 1] * qint_table[s]);
    }
}

} // namespace

void ensure_quantum_tables(int max_arg) {
    std::lock_guard<std::mutex> lk(table_mutex);
    grow_tables_locked(std::max(max_arg, 1));
}

LaurentPoly qint(int s) {
    if (s < 0) throw DomainError("qint of negative argument");
    return build_qint(s);
}

const LaurentPoly& qfact(int s) {
    if (s < 0) throw DomainError("qfact of negative argument");
    std::lock_guard<std::mutex> lk(table_mutex);
    grow_tables_locked(s);
    return qfact_table[s];
}

LaurentPoly qbracket(int s) {
    if (s < 0) throw DomainError("qbracket of negative argument");
    LaurentPoly p = qint(s + 1);
    if (s % 2 == 1) p = -p;
    return p;
}

void QFactorVec::mul_qint(int m, int count) {
    if (m <= 1) return; // [1] = 1
    if ((int)pow_.size() <= m) pow_.resize(m + 1, 0);
    pow_[m] += count;
}

void QFactorVec::mul_qfact(int m) {
    for (int t = 2; t <= m; ++t) mul_qint(t);
}

void QFactorVec::mul_qfact_ratio(int hi, int lo) {
    if (lo > hi) throw DomainError("factorial ratio with lo > hi");
    for (int t = lo + 1; t <= hi; ++t) mul_qint(t);
}

void QFactorVec::mul(const QFactorVec& o) {
    if (pow_.size() < o.pow_.size()) pow_.resize(o.pow_.size(), 0);
    for (std::size_t m = 0; m < o.pow_.size(); ++m) pow_[m] += o.pow_[m];
}

QFactorVec QFactorVec::lcm(const QFactorVec& a, const QFactorVec& b) {
    QFactorVec r;
    r.pow_.resize(std::max(a.pow_.size(), b.pow_.size()), 0);
    for (std::size_t m = 0; m < r.pow_.size(); ++m) {
        int pa = m < a.pow_.size() ? a.pow_[m] : 0;
        int pb = m < b.pow_.size() ? b.pow_[m] : 0;
        r.pow_[m] = std::max(pa, pb);
    }
    return r;
}

QFactorVec QFactorVec::minus(const QFactorVec& o) const {
    QFactorVec r;
    r.pow_.resize(std::max(pow_.size(), o.pow_.size()), 0);
    for (std::size_t m = 0; m < r.pow_.size(); ++m) {
        int pa = m < pow_.size() ? pow_[m] : 0;
        int pb = m < o.pow_.size() ? o.pow_[m] : 0;
        if (pa < pb) throw DomainError("QFactorVec::minus would go negative");
        r.pow_[m] = pa - pb;
    }
    return r;
}

void QFactorVec::cancel(QFactorVec& num, QFactorVec& den) {
    std::size_t n = std::min(num.pow_.size(), den.pow_.size());
    for (std::size_t m = 0; m < n; ++m) {
        int c = std::min(num.pow_[m], den.pow_[m]);
        num.pow_[m] -= c;
        den.pow_[m] -= c;
    }
}

bool QFactorVec::empty() const {
    for (int p : pow_)
        if (p != 0) return false;
    return true;
}

LaurentPoly QFactorVec::to_poly() const {
    LaurentPoly r = LaurentPoly::one();
    for (std::size_t m = 2; m < pow_.size(); ++m)
        for (int i = 0; i < pow_[m]; ++i) r = r * qint((int)m);
    return r;
}

Rational QFactorVec::degree() const {
    // d_+[[m]] = (m-1)/2
    Rational d(0);
    for (std::size_t m = 2; m < pow_.size(); ++m)
        if (pow_[m] != 0) d += make_rat((std::int64_t)(m - 1) * pow_[m], 2);
    return d;
}

bool AdmissibleTriple::admissible(int s, int t, int u) {
    if (s < 0 || t < 0 || u < 0) return false;
    if ((s + t + u) % 2 != 0) return false;
    return std::abs(s - t) <= u && u <= s + t;
}

AdmissibleTriple::AdmissibleTriple(int s_, int t_, int u_) : s(s_), t(t_), u(u_) {
    if (!admissible(s, t, u))
        throw NotAdmissibleError("(" + std::to_string(s) + "," + std::to_string(t) + "," +
                                 std::to_string(u) + ") is not admissible");
}

RationalLaurent triple_coeff_parts(const AdmissibleTriple& t) {
    const int i = t.internal_i(), j = t.internal_j(), k = t.internal_k();
    LaurentPoly num = qfact(i + j + k + 1) * qfact(i) * qfact(j) * qfact(k);
    if ((i + j + k) % 2 == 1) num = -num;
    LaurentPoly den = qfact(t.s) * qfact(t.t) * qfact(t.u);
    return RationalLaurent(std::move(num), std::move(den));
}

LaurentPoly triple_coeff(const AdmissibleTriple& t) {
    return rational_reduce(triple_coeff_parts(t));
}

LaurentPoly twist_coeff(int u, int s, int t, int sign) {
    AdmissibleTriple triple(s, t, u); // validates admissibility
    if (sign != 1 && sign != -1) throw DomainError("twist sign must be +1 or -1");
    // delta(u;s,t) = (-1)^{(s+t+u)/2} q^{-(1/8)(u^2-s^2-t^2+2u-2s-2t)}
    std::int64_t e = -((std::int64_t)u * u - (std::int64_t)s * s - (std::int64_t)t * t +
                       2 * u - 2 * s - 2 * t);
    Rational c = ((s + t + u) / 2) % 2 == 0 ? 1 : -1;
    return LaurentPoly::monomial(c, Exponent(sign * e));
}

TetLabels::TetLabels(int A_, int B_, int C_, int D_, int E_, int F_)
    : A(A_), B(B_), C(C_), D(D_), E(E_), F(F_) {
    if (!AdmissibleTriple::admissible(A, B, E) || !AdmissibleTriple::admissible(B, D, F) ||
        !AdmissibleTriple::admissible(C, D, E) || !AdmissibleTriple::admissible(A, C, F))
        throw NotAdmissibleError("tetrahedral labels fail a triangle condition");
}

std::array<int, 4> TetLabels::lower_bounds() const {
    return {(A + B + E) / 2, (B + D + F) / 2, (C + D + E) / 2, (A + C + F) / 2};
}

std::array<int, 3> TetLabels::upper_bounds() const {
    int S = sigma();
    return {(S - A - D) / 2, (S - E - F) / 2, (S - B - C) / 2};
}

TetFactored tet_factored(const TetLabels& l) {
    const auto a = l.lower_bounds();
    const auto b = l.upper_bounds();
    const int s_min = *std::max_element(a.begin(), a.end());
    const int s_max = *std::min_element(b.begin(), b.end());
    if (s_min > s_max) throw NotAdmissibleError("empty summation range in tetrahedral symbol");

    // sum_s (-1)^s [s+1]! prod_i ([b_i - s_min]!/[b_i - s]!) prod_j ([s_max - a_j]!/[s - a_j]!)
    // over the common denominator prod_i [b_i - s_min]! prod_j [s_max - a_j]!.
    LaurentPoly sum;
    for (int s = s_min; s <= s_max; ++s) {
        LaurentPoly term = qfact(s + 1);
        for (int bi : b)
            for (int t = bi - s + 1; t <= bi - s_min; ++t) term = term * qint(t);
        for (int aj : a)
            for (int t = s - aj + 1; t <= s_max - aj; ++t) term = term * qint(t);
        if (s % 2 == 1) term = -term;
        sum += term;
    }

    QFactorVec pre_num;
    for (int bi : b)
        for (int aj : a) pre_num.mul_qfact(bi - aj);

    QFactorVec den;
    for (int x : {l.A, l.B, l.C, l.D, l.E, l.F}) den.mul_qfact(x);
    for (int bi : b) den.mul_qfact(bi - s_min);
    for (int aj : a) den.mul_qfact(s_max - aj);

    QFactorVec::cancel(pre_num, den);

    TetFactored r;
    r.num = sum * pre_num.to_poly();
    r.den = std::move(den);
    return r;
}

RationalLaurent tet_symbol_parts(const TetLabels& l) {
    TetFactored f = tet_factored(l);
    return RationalLaurent(std::move(f.num), f.den.to_poly());
}

LaurentPoly tet_symbol(const TetLabels& l) {
    return rational_reduce(tet_symbol_parts(l));
}

Rational deg_bracket(int n) {
    if (n < 0) throw DomainError("deg_bracket of negative argument");
    return Rational(n, 2);
}

Rational deg_triple(int s, int t, int u) {
    if (!AdmissibleTriple::admissible(s, t, u))
        throw NotAdmissibleError("deg_triple of inadmissible triple");
    return Rational(s + t + u, 4);
}

Rational deg_tet(const TetLabels& l) {
    const auto a = l.lower_bounds();
    const auto b = l.upper_bounds();
    const std::int64_t S = l.sigma();
    const std::int64_t M = *std::min_element(b.begin(), b.end());
    std::int64_t sq = 0;
    for (int x : {l.A, l.B, l.C, l.D, l.E, l.F}) sq += (std::int64_t)x * x;
    Rational inner = make_rat(-S * S);
    inner -= make_rat(sq - S, 2);
    std::int64_t bsum = 0;
    for (int bi : b) bsum += (std::int64_t)bi * (bi - 1);
    inner += make_rat(3 * bsum, 2);
    std::int64_t asum = 0;
    for (int aj : a) asum += (std::int64_t)aj * (aj + 1);
    inner += make_rat(asum);
    inner += make_rat(-3 * M * M + M * (1 + 2 * S));
    return inner / 2;
}

} // namespace slopelab
