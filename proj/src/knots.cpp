#include "slopelab/knots.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "slopelab/quantum.hpp"

namespace slopelab {

KnotExprPtr KnotExpr::unknot() {
    auto e = std::make_shared<KnotExpr>();
    e->kind = Kind::Unknot;
    return e;
}

KnotExprPtr KnotExpr::torus(int a, int b) {
    bool mirrored = false;
    if (a < 0) { a = -a; mirrored = !mirrored; }
    if (b < 0) { b = -b; mirrored = !mirrored; }
    if (a < 2 || b < 2) throw DomainError("torus parameters need |a|,|b| >= 2");
    if (std::gcd(a, b) != 1) throw DomainError("torus parameters must be coprime");
    auto e = std::make_shared<KnotExpr>();
    e->kind = Kind::Torus;
    e->torus_a = a;
    e->torus_b = b;
    return mirrored ? mirror(e) : e;
}

KnotExprPtr KnotExpr::mirror(KnotExprPtr inner) {
    if (!inner) throw DomainError("mirror of null expression");
    if (inner->kind == Kind::Mirror) return inner->parts[0]; // involution
    auto e = std::make_shared<KnotExpr>();
    e->kind = Kind::Mirror;
    e->parts.push_back(std::move(inner));
    return e;
}

KnotExprPtr KnotExpr::sum(std::vector<KnotExprPtr> parts) {
    if (parts.empty()) throw DomainError("sum needs at least one part");
    for (const auto& p : parts)
        if (!p) throw DomainError("sum of null expression");
    if (parts.size() == 1) return parts[0];
    auto e = std::make_shared<KnotExpr>();
    e->kind = Kind::Sum;
    e->parts = std::move(parts);
    return e;
}

KnotExprPtr KnotExpr::whitehead(long long omega, long long tau, KnotExprPtr companion) {
    if (omega == 0) throw DomainError("whitehead requires omega != 0");
    if (!companion) throw DomainError("whitehead of null companion");
    auto e = std::make_shared<KnotExpr>();
    e->kind = Kind::Whitehead;
    e->omega = omega;
    e->tau = tau;
    e->parts.push_back(std::move(companion));
    return e;
}

std::string KnotExpr::canonical() const {
    switch (kind) {
        case Kind::Unknot: return "unknot";
        case Kind::Torus:
            return "torus(" + std::to_string(torus_a) + "," + std::to_string(torus_b) + ")";
        case Kind::Mirror: return "mirror(" + parts[0]->canonical() + ")";
        case Kind::Sum: {
            std::string s = "sum(";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) s += ",";
                s += parts[i]->canonical();
            }
            return s + ")";
        }
        case Kind::Whitehead:
            return "wh(" + std::to_string(omega) + "," + std::to_string(tau) + "," +
                   parts[0]->canonical() + ")";
    }
    throw DomainError("unreachable knot kind");
}

unsigned worker_count() {
    if (const char* env = std::getenv("SLOPELAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return (unsigned)v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

LaurentPoly cj_torus_morton(int a, int b, int n) {
    if (a < 2 || b < 2 || std::gcd(a, b) != 1)
        throw DomainError("torus engine needs coprime a,b >= 2");
    if (n < 0) throw DomainError("negative color");
    // Summation index k runs over -n/2..n/2 in integer steps of 1; write
    // 2k = m with m = -n, -n+2, ..., n so everything stays integral.
    LaurentPoly sum;
    const std::int64_t ab = (std::int64_t)a * b;
    for (int m = -n; m <= n; m += 2) {
        // -ab k^2 + (a-b) k + 1/2 at k = m/2, in eighths
        std::int64_t e1 = -2 * ab * m * m + 4 * (std::int64_t)(a - b) * m + 4;
        std::int64_t e2 = -2 * ab * m * m + 4 * (std::int64_t)(a + b) * m - 4;
        sum.add_term(Exponent(e1), 1);
        sum.add_term(Exponent(e2), -1);
    }
    sum.shift_scale(Exponent(2 * ab * n * (n + 2)), 1); // q^{ab n(n+2)/4}
    LaurentPoly divisor;
    divisor.add_term(Exponent::half(n + 1), 1);
    divisor.add_term(Exponent::half(-(n + 1)), -1);
    return exact_div(sum, divisor);
}

namespace {

// One (j,k) summand of the satellite double sum, kept in factored form
// until the global common denominator is known.
struct Summand {
    LaurentPoly tet_num;   // tetrahedral numerator polynomial
    QFactorVec num_factors; // residual numerator quantum-integer factors
    QFactorVec den_factors; // residual denominator factors
    Exponent mono;          // twist monomial exponent
    int sign;               // +1 or -1
    int k;                  // companion color index (uses J'_{K,2k})
};

} // namespace

LaurentPoly cj_whitehead(long long omega, long long tau, const KnotExprPtr& companion, int n,
                         const JonesCache* cache) {
    if (omega == 0) throw DomainError("whitehead requires omega != 0");
    if (n < 0) throw DomainError("negative color");
    ensure_quantum_tables(2 * n + 2);

    std::vector<LaurentPoly> companion_cj(n + 1);
    for (int k = 0; k <= n; ++k) companion_cj[k] = cj_prime(companion, 2 * k, cache);

    // f(j,k) = <2j><2k> tet(n,n,2j;n,n,2k) q^{-omega j(j+1)-tau k(k+1)} J'_{K,2k}
    //          / (<n,n,2j> <n,n,2k>)
    // with <n,n,2i> = (-1)^{n+i} [n+i+1]! [i]!^2 [n-i]! / ([n]!^2 [2i]!).
    std::vector<Summand> summands;
    summands.reserve((std::size_t)(n + 1) * (n + 1));
    QFactorVec global_den;
    for (int j = 0; j <= n; ++j) {
        for (int k = 0; k <= n; ++k) {
            Summand s;
            s.k = k;
            s.sign = ((j + k) % 2 == 0) ? 1 : -1;
            std::int64_t e = -omega * j * (j + 1) - tau * k * (k + 1);
            s.mono = Exponent::integer(e);

            TetFactored tet = tet_factored(TetLabels(n, n, n, n, 2 * j, 2 * k));
            s.tet_num = std::move(tet.num);
            s.den_factors = std::move(tet.den);

            s.num_factors.mul_qint(2 * j + 1);
            s.num_factors.mul_qint(2 * k + 1);
            for (int i : {j, k}) {
                s.num_factors.mul_qfact(n); // from 1/<n,n,2i>
                s.num_factors.mul_qfact(n);
                s.num_factors.mul_qfact(2 * i);
                s.den_factors.mul_qfact(n + i + 1);
                s.den_factors.mul_qfact(i);
                s.den_factors.mul_qfact(i);
                s.den_factors.mul_qfact(n - i);
            }
            QFactorVec::cancel(s.num_factors, s.den_factors);
            global_den = QFactorVec::lcm(global_den, s.den_factors);
            summands.push_back(std::move(s));
        }
    }

    // Bring every summand onto the common denominator.  Workers fill a
    // preallocated slot per (j,k); the final summation order is fixed, so
    // results do not depend on the worker count.
    std::vector<LaurentPoly> expanded(summands.size());
    auto expand_one = [&](std::size_t idx) {
        const Summand& s = summands[idx];
        LaurentPoly p = s.tet_num * s.num_factors.to_poly();
        p = p * global_den.minus(s.den_factors).to_poly();
        p = p * companion_cj[s.k];
        p.shift_scale(s.mono, s.sign);
        expanded[idx] = std::move(p);
    };
    const unsigned workers = std::min<unsigned>(worker_count(), (unsigned)summands.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < summands.size(); ++i) expand_one(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= summands.size()) return;
                    expand_one(i);
                }
            });
        for (auto& t : pool) t.join();
    }

    LaurentPoly total;
    for (const auto& p : expanded) total += p;

    // Divide by the common denominator and by <n> = (-1)^n [n+1].
    LaurentPoly divisor = global_den.to_poly() * qint(n + 1);
    LaurentPoly result = exact_div(total, divisor);
    if (n % 2 == 1) result = -result;
    return result;
}

LaurentPoly cj_prime(const KnotExprPtr& K, int n, const JonesCache* cache) {
    if (!K) throw DomainError("cj_prime of null expression");
    if (n < 0) throw DomainError("negative color");
    if (n == 0) return LaurentPoly::one();

    const std::string canon = K->canonical();
    if (cache) {
        if (auto hit = cache->get(canon, n, true)) return *hit;
    }

    LaurentPoly result;
    switch (K->kind) {
        case KnotExpr::Kind::Unknot: result = LaurentPoly::one(); break;
        case KnotExpr::Kind::Torus: result = cj_torus_morton(K->torus_a, K->torus_b, n); break;
        case KnotExpr::Kind::Mirror:
            result = cj_prime(K->parts[0], n, cache).substitute_q_inverse();
            break;
        case KnotExpr::Kind::Sum: {
            result = LaurentPoly::one();
            for (const auto& part : K->parts) result *= cj_prime(part, n, cache);
            break;
        }
        case KnotExpr::Kind::Whitehead:
            result = cj_whitehead(K->omega, K->tau, K->parts[0], n, cache);
            break;
    }

    if (!result.is_integral())
        throw DomainError("colored Jones of " + canon + " at n=" + std::to_string(n) +
                          " is not in Z[q^{+-1}]; formula assembly bug");
    if (cache) cache->put(canon, n, true, result);
    return result;
}

LaurentPoly cj_unnormalized(const KnotExprPtr& K, int n, const JonesCache* cache) {
    if (n < 1) throw DomainError("unnormalized colored Jones needs n >= 1");
    if (n == 1) return LaurentPoly::one();
    return qint(n) * cj_prime(K, n - 1, cache);
}

} // namespace slopelab
