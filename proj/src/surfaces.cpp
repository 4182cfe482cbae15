#include "slopelab/surfaces.hpp"

#include <numeric>

namespace slopelab {

std::string PathFamily::name() const {
    int idx = (int)id;
    return "g" + std::to_string(idx + 1) + (sign > 0 ? "+" : "-");
}

PathFamily PathFamily::parse(const std::string& text) {
    if (text.size() == 3 && text[0] == 'g' && text[1] >= '1' && text[1] <= '6' &&
        (text[2] == '+' || text[2] == '-'))
        return PathFamily{(PathId)(text[1] - '1'), text[2] == '+' ? 1 : -1};
    throw DomainError("bad path family '" + text + "' (expected g1+..g6-)");
}

std::string branch_pattern(PathId id, int k) {
    if (k < 1) throw DomainError("branch pattern needs k >= 1");
    switch (id) {
        case PathId::g1:
        case PathId::g2:
        case PathId::g3:
        case PathId::g4: return "ADAADA";
        case PathId::g5: {
            std::string p = "AD";
            p.append((std::size_t)(2 * k - 1), 'C');
            return p + "DA";
        }
        case PathId::g6: {
            std::string p = "AB";
            for (int i = 0; i < 2 * k - 1; ++i) p += "BCB";
            return p + "BA";
        }
    }
    throw DomainError("unreachable path id");
}

long long chi_from_branch_pattern(const std::string& pattern, long long alpha, long long beta) {
    if (alpha < beta || beta < 0) throw InvalidWeightsError("need alpha >= beta >= 0");
    long long saddles = 0;
    for (char c : pattern) {
        switch (c) {
            case 'A': saddles += beta; break;
            case 'B':
                if ((alpha - beta) % 2 != 0)
                    throw ParityViolationError("B block needs alpha == beta (mod 2)");
                saddles += (alpha - beta) / 2;
                break;
            case 'C': saddles += beta; break;
            case 'D': saddles += alpha - beta; break;
            default: throw DomainError(std::string("bad branch letter '") + c + "'");
        }
    }
    return (alpha + beta) - saddles;
}

SurfaceRecord catalog(long long omega, PathFamily family, const Weights& weights) {
    if (omega == 0) throw DomainError("omega must be nonzero");
    const int s = family.sign;
    if ((omega > 0) != (s > 0))
        throw InvalidFamilySignError("family sign " + family.name() +
                                     " does not match the sign of omega");
    const long long k = omega > 0 ? omega : -omega;
    if (family.id == PathId::g4 && s > 0 && k == 1)
        throw InvalidFamilySignError("family g4 is absent from the |omega| = 1 catalog");
    const long long alpha = weights.alpha, beta = weights.beta;
    if (alpha < beta || beta < 0) throw InvalidWeightsError("need alpha >= beta >= 0");
    if (alpha == 0 && beta == 0) throw InvalidWeightsError("weights (0,0) carry no surface");

    SurfaceRecord r;
    r.family = family;
    r.omega = omega;
    r.weights = weights;
    r.orientable = Orientability::Unknown;

    switch (family.id) {
        case PathId::g1:
            r.chi = -alpha - beta;
            r.slope1 = Rational(s * 2 * beta, alpha);
            if (beta > 0) r.slope2 = Rational(s * 2 * alpha, beta);
            r.count1 = std::gcd(2 * beta, alpha);
            r.count2 = beta > 0 ? std::gcd(2 * alpha, beta) : 0;
            break;
        case PathId::g2:
        case PathId::g3:
            r.chi = -alpha - beta;
            r.slope1 = Rational(0);
            if (beta > 0) r.slope2 = Rational(0);
            r.count1 = alpha;
            r.count2 = beta;
            break;
        case PathId::g4:
            r.chi = -alpha - beta;
            r.slope1 = Rational(-s * 2 * beta, alpha);
            if (beta > 0) r.slope2 = Rational(-s * 2 * alpha, beta);
            r.count1 = std::gcd(2 * beta, alpha);
            r.count2 = beta > 0 ? std::gcd(2 * alpha, beta) : 0;
            break;
        case PathId::g5:
            r.chi = -alpha + 2 * (1 - k) * beta;
            r.slope1 = Rational(-s * 2 * beta, alpha);
            if (beta > 0) r.slope2 = Rational(-s * 2 * alpha, beta) + Rational(s * 2 - s * 4 * k);
            r.count1 = std::gcd(2 * beta, alpha);
            r.count2 = beta > 0 ? std::gcd(2 * alpha, beta) : 0;
            break;
        case PathId::g6:
            r.chi = (1 - 2 * k) * alpha;
            r.slope1 = Rational(-s * 4 * k);
            if (beta > 0) r.slope2 = Rational(-s * 2);
            r.count1 = alpha;
            r.count2 = beta;
            break;
    }
    if (r.slope1) r.slope1->canonicalize();
    if (r.slope2) r.slope2->canonicalize();
    return r;
}

SurfaceRecord twist_and_reframe(const SurfaceRecord& record, long long tau) {
    if (!record.slope1 || sgn(*record.slope1) == 0)
        throw UndefinedReciprocalError("slope on the first component is absent or zero");
    SurfaceRecord out = record;
    Rational v = Rational(1) / *record.slope1 + Rational(tau);
    v.canonicalize();
    out.slope1 = v;
    return out;
}

SurfaceRecord orientable_double(const SurfaceRecord& record) {
    Weights w = record.weights;
    w.alpha *= 2;
    w.beta *= 2;
    SurfaceRecord out = catalog(record.omega, record.family, w);
    out.orientable = Orientability::GuaranteedOrientable;
    return out;
}

GluedSurface build_jones_surface(const Rational& a1, const Rational& b1,
                                 std::optional<long long> chi_K,
                                 std::optional<long long> bdry_K, long long omega,
                                 long long tau) {
    if (omega == 0) throw DomainError("omega must be nonzero");
    if (sgn(b1) > 0) throw HypothesisViolatedError("b1 > 0");

    Rational a1c = a1;
    a1c.canonicalize();
    const long long r = a1c.get_num().get_si();
    const long long s = a1c.get_den().get_si();

    GluedSurface g{};
    const bool above = omega > 0 ? (a1c > Rational(tau) / 4)
                                 : (a1c > Rational(tau) / 4 + Rational(1, 8));
    if (above) {
        if (!chi_K || !bdry_K)
            throw HypothesisViolatedError(
                "companion surface data (chi_K, bdry_K) required above the threshold");
        if (*bdry_K <= 0) throw DomainError("companion boundary count must be positive");
        // beta = 2s, alpha = 2(8r - 2 tau s); counts 4 gcd(4,s) on T_K and
        // 2 gcd(16,s) on T_W.
        const long long bTK = 4 * std::gcd((long long)4, s);
        const long long bTW = 2 * std::gcd((long long)16, s);
        const long long L = std::lcm(*bdry_K, bTK);
        g.m = L / *bdry_K;
        g.n = L / bTK;
        long long chi_sw;
        if (omega > 0) {
            g.case_tag = 11;
            chi_sw = -2 * (8 * r - (2 * tau - 1) * s);
            g.slope = 16 * a1c - 4 * tau;
        } else {
            g.case_tag = 21;
            chi_sw = -16 * r + 4 * (tau + omega + 1) * s;
            g.slope = 16 * a1c - 4 * tau - 2 - 4 * omega;
        }
        g.chi_total = g.m * *chi_K + g.n * chi_sw;
        g.boundary_count = g.n * bTW;
        g.q_den = s / std::gcd((long long)16, s);
    } else if (omega > 0) {
        // Seifert once-punctured torus for the double.
        g.case_tag = 12;
        g.m = 0;
        g.n = 1;
        g.chi_total = -1;
        g.boundary_count = 1;
        g.slope = 0;
        g.q_den = 1;
    } else {
        // gamma6 orientable double at alpha = 2, beta = 0.
        g.case_tag = 22;
        g.m = 0;
        g.n = 1;
        g.chi_total = 4 * omega + 2;
        g.boundary_count = 2;
        g.slope = Rational(-4 * omega);
        g.q_den = 1;
    }
    g.slope.canonicalize();
    g.ss_ratio = Rational(g.chi_total) / (Rational(g.boundary_count) * Rational(g.q_den));
    g.ss_ratio.canonicalize();
    return g;
}

StrongSlopeReport verify_strong_slope(const Rational& a1, const Rational& b1,
                                      const Rational& c1, std::optional<long long> chi_K,
                                      std::optional<long long> bdry_K, long long omega,
                                      long long tau) {
    QuasiPoly predicted = predict_whitehead_delta(a1, b1, c1, omega, tau);
    StrongSlopeReport rep{};
    rep.a_W = predicted.coeffs[0].a;
    rep.b_W = predicted.coeffs[0].b;
    rep.surface = build_jones_surface(a1, b1, chi_K, bdry_K, omega, tau);
    rep.slope_ok = rep.surface.slope == 4 * rep.a_W;
    rep.ratio_ok = rep.surface.ss_ratio == 2 * rep.b_W;
    return rep;
}

std::optional<std::pair<long long, long long>> companion_surface_data(const KnotExprPtr& K) {
    if (!K) return std::nullopt;
    switch (K->kind) {
        case KnotExpr::Kind::Unknot: return std::make_pair((long long)1, (long long)1); // disk
        case KnotExpr::Kind::Torus:
            // Cabling annulus at slope ab.
            return std::make_pair((long long)0, (long long)2);
        case KnotExpr::Kind::Mirror: {
            const auto& inner = K->parts[0];
            if (inner->kind == KnotExpr::Kind::Torus) {
                // Seifert surface: chi = 1 - (p-1)(q-1), one boundary circle.
                long long p = inner->torus_a, q = inner->torus_b;
                return std::make_pair(1 - (p - 1) * (q - 1), (long long)1);
            }
            return std::nullopt;
        }
        default: return std::nullopt;
    }
}

} // namespace slopelab
