#pragma once

#include <array>
#include <string>
#include <vector>

#include "slopelab/degrees.hpp"
#include "slopelab/laurent.hpp"

namespace slopelab {

/// One crossing of a planar diagram code.  ends[] lists the four incident
/// edge labels counterclockwise; ends[0] and ends[2] lie on the strand that
/// passes *under*, ends[1] and ends[3] on the strand that passes over.
/// Strand directions are not stored; they are recovered globally (each edge
/// label is consumed exactly once and emitted exactly once).
struct PDCrossing {
    std::array<int, 4> ends;
};

/// Planar diagram code.  Every edge label occurs exactly twice.
/// crossingless_circles counts closed components with no crossings (the
/// 0-crossing unknot and its doubles).
struct PDDiagram {
    std::vector<PDCrossing> crossings;
    int crossingless_circles = 0;

    /// Comma separated "X(a,b,c,d)" crossings, whitespace-insensitive.
    static PDDiagram parse(const std::string& text);
    std::string to_string() const;
    void validate() const;
};

enum class Resolution { A, B };

/// A resolved state: the circles, and for every crossing the pair of
/// circles its two smoothing arcs lie on.
struct ResolvedState {
    int circle_count;
    std::vector<std::pair<int, int>> crossing_circles; // circle ids per crossing
};

/// Replace every crossing by its chosen smoothing and trace the circles.
/// The smoothing convention, fixed once: the A-resolution of (a,b,c,d)
/// joins a-b and c-d, the B-resolution joins a-d and b-c.
ResolvedState resolve(const PDDiagram& d, const std::vector<Resolution>& state);

/// State graph: one vertex per circle, one edge per crossing.
struct StateGraph {
    int vertex_count;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> loop_edges; // crossing indices whose edge is a loop
};

StateGraph state_graph(const PDDiagram& d, const std::vector<Resolution>& state);

struct AdequacyVerdict {
    bool a_adequate;
    bool b_adequate;
    std::vector<int> a_loop_witnesses;
    std::vector<int> b_loop_witnesses;
};

/// A diagram is A-adequate (B-adequate) when the all-A (all-B) state graph
/// has no loop edge.
AdequacyVerdict adequacy_verdict(const PDDiagram& d);

/// Blackboard-framed 2-parallel: every crossing becomes four, every edge a
/// pair of rails.  Components double.
PDDiagram parallel_double(PDDiagram d);

enum class ClaspSign { Negative, Positive };

/// Parallel double with a two-crossing clasp spliced into the rails of the
/// lowest-numbered edge, turning the double into the diagram of a
/// Whitehead double.  The writhe hypothesis on the input is the caller's
/// responsibility.
PDDiagram whitehead_diagram(PDDiagram d, ClaspSign clasp = ClaspSign::Negative);

/// Signed crossing count.  Orientations are recovered by propagation; for a
/// knot diagram the result is independent of the traversal direction.
int writhe(const PDDiagram& d);

/// Test helper: splice a one-crossing kink into the given edge label.
PDDiagram insert_kink(PDDiagram d, int edge_label);

struct TuraevData {
    Rational crossing_number; // 2(a - a*)
    Rational turaev_genus;    // 1 - a* - c/2
    bool degenerate;          // a == a*
};

/// Crossing number and Turaev genus that WOULD follow from the degree fits
/// if the knot were adequate.  Non-integer outputs legitimately signal that
/// the adequacy assumption fails.
TuraevData turaev_if_adequate(const QuasiPoly& delta, const QuasiPoly& delta_star);

struct InadequacyReport {
    Rational a_plus, a_minus;          // quadratic coefficients of d+/d- fits
    bool half_integral_plus;           // 2 a_plus integral
    bool half_integral_minus;
    bool excludes_b_adequate;          // a_plus not in (1/2)Z
    bool excludes_a_adequate;
    bool inadequate_by_degrees;        // both excluded
    bool genus_test_applies;           // K is an untwisted double of a negative torus knot
    bool genus_test_inadequate;        // g_T = 1 contradiction fired
    bool uses_cited_genus_fact;        // verdict leans on the genus-one exclusion
    std::string verdict;               // "inadequate", "not adequate", or "no obstruction"
};

/// Degree-based inadequacy tests: half-integrality of the extreme quadratic
/// coefficients of the normalized colored Jones, and the Turaev-genus
/// contradiction for untwisted doubles of negative torus knots (the latter
/// cites the fact that a genus-one double cannot have Turaev genus one).
InadequacyReport inadequacy_tests(const KnotExprPtr& K, const QuasiPoly& dplus_fit,
                                  const QuasiPoly& dminus_fit);

} // namespace slopelab
