#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slopelab/laurent.hpp"

namespace slopelab {

struct KnotExpr;
using KnotExprPtr = std::shared_ptr<const KnotExpr>;

/// Recursive knot descriptor.  Construction normalizes: torus parameters are
/// made positive (a sign moves into a Mirror wrapper), double mirrors
/// collapse.  The canonical string doubles as the cache key.
struct KnotExpr {
    enum class Kind { Unknot, Torus, Mirror, Sum, Whitehead };

    Kind kind;
    int torus_a = 0, torus_b = 0;  // Torus, both >= 2 after normalization
    long long omega = 0, tau = 0;  // Whitehead
    std::vector<KnotExprPtr> parts;

    static KnotExprPtr unknot();
    static KnotExprPtr torus(int a, int b);
    static KnotExprPtr mirror(KnotExprPtr inner);
    static KnotExprPtr sum(std::vector<KnotExprPtr> parts);
    static KnotExprPtr whitehead(long long omega, long long tau, KnotExprPtr companion);

    /// e.g. "wh(1,0,torus(2,3))" - lowercase, no whitespace, order-stable.
    std::string canonical() const;
};

/// Persistent store for computed colored Jones values.  Entries are files
/// <root>/<sha256 of key>.cjp whose payload is a header line
/// "key n normalized" followed by the canonical polynomial serialization.
/// Writes go through a temp file plus rename, so concurrent readers never
/// observe a partial entry.  Corrupt entries read back as absent.
class JonesCache {
public:
    explicit JonesCache(std::filesystem::path root);

    const std::filesystem::path& root() const { return root_; }

    static std::string key(const std::string& canonical, int n, bool normalized);
    std::filesystem::path entry_path(const std::string& canonical, int n, bool normalized) const;

    std::optional<LaurentPoly> get(const std::string& canonical, int n, bool normalized) const;
    void put(const std::string& canonical, int n, bool normalized,
             const LaurentPoly& value) const;

    /// Number of .cjp entries currently present.
    std::size_t entry_count() const;
    /// Remove every entry; returns how many were deleted.
    std::size_t clear() const;

private:
    std::filesystem::path root_;
};

/// Normalized colored Jones J'_{K,n}; J'_{K,0} = 1 and J'_{unknot,n} = 1.
/// Output always has integer exponents and integer coefficients.
LaurentPoly cj_prime(const KnotExprPtr& K, int n, const JonesCache* cache = nullptr);

/// Torus-knot engine: the closed sum formula for J'_{T(a,b),n} with
/// a,b >= 2 coprime.  The half-integer summation index for odd n lands in
/// quarter powers of q before the final exact division.
LaurentPoly cj_torus_morton(int a, int b, int n);

/// Satellite engine for the twisted generalized double: assembles the
/// double sum of summands
///   <2j><2k> tet(n,n,2j;n,n,2k) q^{-omega j(j+1) - tau k(k+1)} J'_{K,2k}
///   / (<n,n,2j><n,n,2k>)
/// over a factored common denominator and performs one terminal exact
/// division by that denominator times <n>.
LaurentPoly cj_whitehead(long long omega, long long tau, const KnotExprPtr& companion, int n,
                         const JonesCache* cache = nullptr);

/// Unnormalized colored Jones: J_{K,1} = 1, J_{K,n} = [n] J'_{K,n-1}.
LaurentPoly cj_unnormalized(const KnotExprPtr& K, int n, const JonesCache* cache = nullptr);

/// Worker count for the satellite double sum: SLOPELAB_THREADS if set,
/// otherwise hardware concurrency.  Results are bit-identical regardless.
unsigned worker_count();

} // namespace slopelab
