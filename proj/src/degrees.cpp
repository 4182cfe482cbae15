#include "slopelab/degrees.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace slopelab {

QuasiPoly QuasiPoly::quadratic(const Rational& a, const Rational& b, const Rational& c,
                               int threshold) {
    QuasiPoly q;
    q.period = 1;
    q.coeffs = {Coeffs{a, b, c}};
    q.threshold = threshold;
    return q;
}

bool QuasiPoly::constant_known(long long n) const {
    if (c_unknown.empty()) return true;
    return !c_unknown[(std::size_t)(n % period)];
}

Rational QuasiPoly::evaluate(long long n) const {
    if (!constant_known(n))
        throw DomainError("quasi-polynomial constant term is symbolic for this residue");
    const Coeffs& co = at(n);
    const Rational nn = make_rat(n);
    return co.a * nn * nn + co.b * nn + co.c;
}

bool QuasiPoly::a_constant() const {
    for (const auto& co : coeffs)
        if (co.a != coeffs[0].a) return false;
    return true;
}

bool QuasiPoly::b_constant() const {
    for (const auto& co : coeffs)
        if (co.b != coeffs[0].b) return false;
    return true;
}

std::vector<Rational> degree_sequence(const KnotExprPtr& K, int n_max, DegreeKind which,
                                      bool normalized, const JonesCache* cache) {
    if (n_max < 1) throw DomainError("degree_sequence needs n_max >= 1");
    std::vector<Rational> out;
    out.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        LaurentPoly p = normalized ? cj_prime(K, n, cache) : cj_unnormalized(K, n, cache);
        DegreeData d = degree_data(p);
        out.push_back(which == DegreeKind::Max ? d.d_plus : d.d_minus);
    }
    return out;
}

namespace {

// Quadratic through three points (n_i, v_i) with distinct abscissas.
QuasiPoly::Coeffs interpolate3(const std::array<std::pair<long long, Rational>, 3>& pts) {
    // Lagrange on exact rationals.
    Rational a(0), b(0), c(0);
    for (int i = 0; i < 3; ++i) {
        Rational xi = make_rat(pts[i].first);
        Rational denom(1);
        // expand v_i * prod_{j != i} (x - x_j)/(x_i - x_j)
        std::array<Rational, 2> roots{};
        int ri = 0;
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            Rational xj = make_rat(pts[j].first);
            denom *= (xi - xj);
            roots[ri++] = xj;
        }
        Rational w = pts[i].second / denom;
        a += w;
        b -= w * (roots[0] + roots[1]);
        c += w * roots[0] * roots[1];
    }
    a.canonicalize(); b.canonicalize(); c.canonicalize();
    return {a, b, c};
}

struct FitAttempt {
    bool ok = false;
    QuasiPoly qp;
    std::vector<Rational> residuals; // value - fit over the supplied range
};

FitAttempt try_period(const std::vector<Rational>& seq, int n_offset, int period) {
    FitAttempt out;
    QuasiPoly qp;
    qp.period = period;
    qp.coeffs.resize(period);

    // Interpolate through the last three points of each residue class.
    for (int r = 0; r < period; ++r) {
        std::vector<std::pair<long long, Rational>> pts; // (n, value), this residue
        for (std::size_t i = 0; i < seq.size(); ++i) {
            long long n = n_offset + (long long)i;
            if (n % period == r) pts.emplace_back(n, seq[i]);
        }
        if (pts.size() < 4) return out; // 3 to interpolate plus 1 to confirm
        std::array<std::pair<long long, Rational>, 3> last3 = {pts[pts.size() - 3],
                                                               pts[pts.size() - 2],
                                                               pts[pts.size() - 1]};
        qp.coeffs[r] = interpolate3(last3);
    }

    // Extend backward while agreement persists; require at least one
    // confirming point per residue class beyond the defining three.
    long long n_hi = n_offset + (long long)seq.size() - 1;
    long long first_agree = n_hi + 1;
    for (std::size_t i = seq.size(); i-- > 0;) {
        long long n = n_offset + (long long)i;
        if (qp.evaluate(n) == seq[i]) first_agree = n;
        else break;
    }
    std::vector<int> confirmed(period, 0);
    for (long long n = first_agree; n <= n_hi; ++n) confirmed[n % period]++;
    for (int r = 0; r < period; ++r)
        if (confirmed[r] < 4) return out;

    qp.threshold = (int)first_agree;
    out.ok = true;
    out.qp = std::move(qp);
    return out;
}

} // namespace

QuasiPoly fit_quasipoly(const std::vector<Rational>& seq, int n_offset) {
    if (n_offset < 0) throw DomainError("fit_quasipoly needs n_offset >= 0");
    FitAttempt p1 = try_period(seq, n_offset, 1);
    if (p1.ok) return p1.qp;
    FitAttempt p2 = try_period(seq, n_offset, 2);
    if (p2.ok) return p2.qp;

    std::ostringstream os;
    os << "no quasi-polynomial of period <= 2 fits the tail; residuals vs last-3 period-1 fit:";
    // report residuals against the period-1 interpolation when possible
    if (seq.size() >= 3) {
        std::array<std::pair<long long, Rational>, 3> last3 = {
            std::make_pair(n_offset + (long long)seq.size() - 3, seq[seq.size() - 3]),
            std::make_pair(n_offset + (long long)seq.size() - 2, seq[seq.size() - 2]),
            std::make_pair(n_offset + (long long)seq.size() - 1, seq[seq.size() - 1])};
        QuasiPoly probe;
        probe.period = 1;
        probe.coeffs = {interpolate3(last3)};
        for (std::size_t i = 0; i < seq.size(); ++i) {
            Rational r = seq[i] - probe.evaluate(n_offset + (long long)i);
            os << " " << rational_to_string(r);
        }
    } else {
        os << " (fewer than 3 points)";
    }
    throw NoFitError(os.str());
}

std::pair<SlopeData, ConditionDelta> slopes_and_conditions(const QuasiPoly& qp) {
    SlopeData sd;
    std::set<Rational> js, jx;
    for (const auto& co : qp.coeffs) {
        js.insert(4 * co.a);
        jx.insert(2 * co.b);
    }
    sd.js.assign(js.begin(), js.end());
    sd.jx.assign(jx.begin(), jx.end());

    ConditionDelta cd{true, ""};
    auto fail = [&](const std::string& why) {
        if (cd.pass) cd = {false, why};
    };
    if (qp.period > 2) fail("period exceeds 2");
    if (!qp.a_constant()) fail("quadratic coefficient is not constant");
    if (!qp.b_constant()) fail("linear coefficient is not constant");
    if (cd.pass) {
        const Rational& a = qp.coeffs[0].a;
        const Rational& b = qp.coeffs[0].b;
        if (sgn(b) > 0) fail("linear coefficient is positive");
        Rational fourA = 4 * a;
        fourA.canonicalize();
        if (fourA.get_den() != 1) fail("4a is not an integer");
        if (sgn(b) == 0 && sgn(a) == 0) fail("b = 0 requires a != 0");
    }
    return {sd, cd};
}

SignRecord sign_condition_check(const KnotExprPtr& K, int n_lo, int n_hi, bool normalized,
                                const JonesCache* cache) {
    if (n_hi < n_lo) throw DomainError("empty sign-condition range");
    if (!normalized && n_lo < 1) throw DomainError("unnormalized colors start at 1");
    if (n_lo < 0) throw DomainError("negative color");
    SignRecord rec;
    rec.normalized = normalized;
    rec.n_lo = n_lo;
    rec.n_hi = n_hi;
    std::array<int, 2> first_n{-1, -1};
    for (int n = n_lo; n <= n_hi; ++n) {
        LaurentPoly p = normalized ? cj_prime(K, n, cache) : cj_unnormalized(K, n, cache);
        int s = degree_data(p).lead_sign;
        int par = n % 2;
        int& slot = par == 0 ? rec.sign_even : rec.sign_odd;
        if (slot == 0) {
            slot = s;
            first_n[par] = n;
        } else if (slot != s && rec.satisfied) {
            rec.satisfied = false;
            rec.witness_m = first_n[par];
            rec.witness_n = n;
        }
    }
    return rec;
}

QuasiPoly normalize_transform(const QuasiPoly& qp, NormDirection dir) {
    QuasiPoly out;
    out.period = qp.period;
    out.coeffs.resize(qp.period);
    if (!qp.c_unknown.empty()) out.c_unknown.resize(qp.period);
    const Rational half(1, 2);
    for (int r = 0; r < qp.period; ++r) {
        // For period <= 2, (r+1) mod p == (r-1) mod p.
        int src = (r + 1) % qp.period;
        const auto& s = qp.coeffs[src];
        auto& d = out.coeffs[r];
        if (dir == NormDirection::ToNormalized) {
            // delta'(n) = delta(n+1) - n/2
            d.a = s.a;
            d.b = 2 * s.a + s.b - half;
            d.c = s.a + s.b + s.c;
        } else {
            // delta(n) = delta'(n-1) + n/2 - 1/2
            d.a = s.a;
            d.b = -2 * s.a + s.b + half;
            d.c = s.a - s.b + s.c - half;
        }
        d.a.canonicalize(); d.b.canonicalize(); d.c.canonicalize();
        if (!qp.c_unknown.empty()) out.c_unknown[r] = qp.c_unknown[src];
    }
    out.threshold = dir == NormDirection::ToNormalized ? std::max(qp.threshold - 1, 0)
                                                       : qp.threshold + 1;
    return out;
}

QuasiPoly predict_whitehead_delta(const Rational& a1, const Rational& b1, const Rational& c1,
                                  long long omega, long long tau,
                                  const std::optional<Rational>& C_plus) {
    if (omega == 0) throw DomainError("omega must be nonzero");
    if (sgn(b1) > 0) throw HypothesisViolatedError("b1 > 0");
    const Rational half(1, 2);
    const Rational tq = make_rat(tau, 4);

    Rational a, b, c;
    if (omega > 0) {
        if (b1 == 0 && a1 == tq)
            throw HypothesisViolatedError("b1 = 0 with a1 = tau/4 is excluded");
        if (a1 > tq) {
            a = 4 * a1 - make_rat(tau);
            b = -4 * a1 + 2 * b1 + make_rat(tau) - half;
            c = a1 - b1 + c1 + half;
        } else {
            a = 0;
            b = -half;
            c = (C_plus ? *C_plus : c1) + half;
        }
    } else {
        const Rational boundary = tq + Rational(1, 8);
        if (b1 == 0 && a1 == boundary)
            throw HypothesisViolatedError("b1 = 0 with a1 = tau/4 + 1/8 is excluded");
        if (a1 > boundary) {
            a = 4 * a1 - make_rat(tau + omega) - half;
            b = -4 * a1 + 2 * b1 + make_rat(omega + tau + 1);
            c = a1 - b1 + c1 - half;
        } else {
            a = -make_rat(omega);
            b = make_rat(omega) + half;
            c = a1 + b1 + c1 - half;
        }
    }
    a.canonicalize(); b.canonicalize(); c.canonicalize();
    return QuasiPoly::quadratic(a, b, c, 1);
}

std::pair<Rational, int> compute_C_plus(const KnotExprPtr& K, long long tau, int N_prime,
                                        const JonesCache* cache) {
    if (N_prime < 0) throw DomainError("N_prime must be nonnegative");
    Rational best;
    int best_k = -1;
    for (int k = 0; k <= N_prime; ++k) {
        Rational dk(0);
        if (k > 0) dk = degree_data(cj_prime(K, 2 * k, cache)).d_plus;
        Rational v = make_rat(-tau) * k * k - make_rat(tau - 1) * k + dk;
        v.canonicalize();
        if (best_k < 0 || v > best) {
            best = v;
            best_k = k;
        }
    }
    return {best, best_k};
}

QuasiPoly predict_torus_delta(int p, int q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw DomainError("torus predictor needs coprime p,q >= 2");
    const Rational a = make_rat((long long)p * q, 4);
    const Rational base = -a;
    const Rational bump = make_rat((long long)(p - 2) * (q - 2), 4);
    QuasiPoly out;
    if (sgn(bump) == 0) {
        out = QuasiPoly::quadratic(a, 0, base, 1);
    } else {
        out.period = 2;
        out.coeffs.resize(2);
        out.coeffs[0] = {a, 0, base - bump}; // even colors
        out.coeffs[1] = {a, 0, base};        // odd colors
        out.threshold = 1;
    }
    return out;
}

QuasiPoly predict_negative_torus_delta(int p, int q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw DomainError("torus predictor needs coprime p,q >= 2");
    const Rational m = make_rat((long long)p * q - p - q, 2);
    return QuasiPoly::quadratic(0, -m, m, 1);
}

QuasiPoly predict_sum_delta(const QuasiPoly& q1, const QuasiPoly& q2) {
    QuasiPoly out;
    out.period = std::max(q1.period, q2.period);
    out.coeffs.resize(out.period);
    const Rational half(1, 2);
    for (int r = 0; r < out.period; ++r) {
        const auto& c1 = q1.coeffs[r % q1.period];
        const auto& c2 = q2.coeffs[r % q2.period];
        out.coeffs[r] = {c1.a + c2.a, c1.b + c2.b - half, c1.c + c2.c + half};
    }
    out.threshold = std::max(q1.threshold, q2.threshold);
    return out;
}

CablePrediction predict_cable_delta(long long p, long long q, const QuasiPoly& inner) {
    if (q <= 1) throw DomainError("cable predictor needs q > 1");
    if (!inner.a_constant() || !inner.b_constant())
        throw HypothesisViolatedError("cable predictor needs constant a and b");
    const Rational a = inner.coeffs[0].a;
    const Rational b = inner.coeffs[0].b;
    CablePrediction out;
    if (make_rat(p, q) < 4 * a) {
        const Rational qa = make_rat(q) * make_rat(q) * a;
        const Rational lin = make_rat(q) * b + make_rat(q - 1) * (make_rat(p) - make_rat(4 * q) * a) / 2;
        out.constant_unknown = false;
        // constant term uses c(i) with i = q(n-1)+1 mod 2
        auto cterm = [&](long long r) {
            long long i_par = ((q * (r - 1) + 1) % 2 + 2) % 2;
            const Rational ci = inner.coeffs[(std::size_t)(i_par % inner.period)].c;
            return a * make_rat(q - 1) * make_rat(q - 1) - (b + make_rat(p, 2)) * make_rat(q - 1) + ci;
        };
        if (q % 2 == 0 || inner.period == 1) {
            out.qp = QuasiPoly::quadratic(qa, lin, cterm(1), 1);
        } else {
            out.qp.period = 2;
            out.qp.coeffs = {{qa, lin, cterm(0)}, {qa, lin, cterm(1)}};
            out.qp.threshold = 1;
        }
    } else {
        // pq(n^2-1)/4 + C_j: the constant only depends on (K,p,q) per parity.
        out.constant_unknown = true;
        const Rational qa = make_rat(p * q, 4);
        out.qp.period = 2;
        out.qp.coeffs = {{qa, 0, -qa}, {qa, 0, -qa}}; // constants symbolic
        out.qp.c_unknown = {true, true};
        out.qp.threshold = 1;
    }
    return out;
}

QuasiPoly predict_delta(const KnotExprPtr& K) {
    if (!K) throw DomainError("predict_delta of null expression");
    switch (K->kind) {
        case KnotExpr::Kind::Unknot:
            // d_+[J_{unknot,n}] = d_+[[n]] = (n-1)/2
            return QuasiPoly::quadratic(0, Rational(1, 2), Rational(-1, 2), 1);
        case KnotExpr::Kind::Torus: return predict_torus_delta(K->torus_a, K->torus_b);
        case KnotExpr::Kind::Mirror: {
            const auto& inner = K->parts[0];
            if (inner->kind == KnotExpr::Kind::Torus)
                return predict_negative_torus_delta(inner->torus_a, inner->torus_b);
            throw DomainError("no closed-form predictor for the mirror of " + inner->canonical());
        }
        case KnotExpr::Kind::Sum: {
            QuasiPoly acc = predict_delta(K->parts[0]);
            for (std::size_t i = 1; i < K->parts.size(); ++i)
                acc = predict_sum_delta(acc, predict_delta(K->parts[i]));
            return acc;
        }
        case KnotExpr::Kind::Whitehead: {
            QuasiPoly inner = predict_delta(K->parts[0]);
            if (!inner.a_constant() || !inner.b_constant())
                throw HypothesisViolatedError("companion has non-constant a or b");
            // coefficients at odd colors
            const auto& co = inner.coeffs[1 % inner.period];
            return predict_whitehead_delta(co.a, co.b, co.c, K->omega, K->tau);
        }
    }
    throw DomainError("unreachable knot kind");
}

} // namespace slopelab
