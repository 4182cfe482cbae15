#pragma once

#include <optional>
#include <string>

#include "slopelab/degrees.hpp"
#include "slopelab/laurent.hpp"

namespace slopelab {

enum class PathId { g1, g2, g3, g4, g5, g6 };

/// Edge-path family in the parameterized Farey diagram.  sign +1 pairs with
/// omega > 0 (target (4k-1)/8k), sign -1 with omega < 0 (target (4k+1)/8k).
struct PathFamily {
    PathId id;
    int sign; // +1 or -1

    std::string name() const; // "g1+", "g5-", ...
    static PathFamily parse(const std::string& text);
};

/// Branched-surface weights.  alpha >= beta (the swapped regime is reached
/// through the component-exchange rule); (0,0) is excluded.  aux_n selects
/// among non-isotopic surfaces with identical boundary data and does not
/// enter any computed quantity.
struct Weights {
    long long alpha = 0;
    long long beta = 0;
    std::optional<long long> aux_n;
};

enum class Orientability { Unknown, GuaranteedOrientable };

struct SurfaceRecord {
    PathFamily family;
    long long omega;
    Weights weights;
    long long chi;
    std::optional<Rational> slope1; // on the first link component (canonical framing)
    std::optional<Rational> slope2; // absent when beta = 0
    long long count1;
    long long count2;
    Orientability orientable;
};

/// Expanded branch pattern of a family at k = |omega| ("ADAADA",
/// "ADC^{2k-1}DA", "AB(BCB)^{2k-1}BA" written out).
std::string branch_pattern(PathId id, int k);

/// chi of the carried surface from the saddle counts of the pattern blocks:
/// chi = (alpha+beta) - sum s_i with s_A = beta, s_B = (alpha-beta)/2,
/// s_C = beta, s_D = alpha-beta (alpha >= beta).  A 'B' block with odd
/// alpha-beta is a parity violation.
long long chi_from_branch_pattern(const std::string& pattern, long long alpha, long long beta);

/// Table-driven surface data for the two-bridge link at k = |omega|.
SurfaceRecord catalog(long long omega, PathFamily family, const Weights& weights);

/// Reframe onto the solid-torus boundary and apply tau twists:
/// slope1 -> 1/slope1 + tau; everything else is unchanged.
SurfaceRecord twist_and_reframe(const SurfaceRecord& record, long long tau);

/// Pass to the orientable double: weights doubled, recomputed from the
/// tables, orientability guaranteed.  chi/(count*q) ratios are unchanged.
SurfaceRecord orientable_double(const SurfaceRecord& record);

/// The glued surface realizing the double's Jones slope, by case:
///   omega > 0:  a1 > tau/4 (glued)  |  a1 <= tau/4 (Seifert punctured torus)
///   omega < 0:  a1 > tau/4 + 1/8 (glued)  |  a1 <= tau/4 + 1/8 (gamma6 double)
struct GluedSurface {
    int case_tag;        // 11, 12, 21, 22
    long long m;         // companion copies (0 when the surface avoids T_K)
    long long n;         // pattern-side copies
    long long chi_total;
    long long boundary_count;
    Rational slope;
    long long q_den;
    Rational ss_ratio;   // chi_total / (boundary_count * q_den)
};

GluedSurface build_jones_surface(const Rational& a1, const Rational& b1,
                                 std::optional<long long> chi_K,
                                 std::optional<long long> bdry_K, long long omega,
                                 long long tau);

struct StrongSlopeReport {
    Rational a_W, b_W;
    GluedSurface surface;
    bool slope_ok;
    bool ratio_ok;
    bool pass() const { return slope_ok && ratio_ok; }
};

/// Checks both identities slope = 4 a_W and ss_ratio = 2 b_W exactly,
/// with (a_W, b_W) from the degree predictor.
StrongSlopeReport verify_strong_slope(const Rational& a1, const Rational& b1,
                                      const Rational& c1, std::optional<long long> chi_K,
                                      std::optional<long long> bdry_K, long long omega,
                                      long long tau);

/// Jones-surface data (chi, boundary count) of companions with known
/// closed-form slopes: unknot, positive torus (cabling annulus), negative
/// torus (Seifert surface).
std::optional<std::pair<long long, long long>> companion_surface_data(const KnotExprPtr& K);

} // namespace slopelab
