#include "slopelab/adequacy.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace slopelab {

namespace {

// Union-find over small dense ids.
struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

PDDiagram PDDiagram::parse(const std::string& text) {
    PDDiagram d;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw MalformedDiagramError("expected '" + std::string(1, c) + "' at offset " +
                                        std::to_string(i));
        ++i;
    };
    auto read_int = [&] {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        if (i == start) throw MalformedDiagramError("expected a strand label at offset " +
                                                    std::to_string(start));
        return std::stoi(text.substr(start, i - start));
    };
    skip_ws();
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != 'X') throw MalformedDiagramError("expected 'X' at offset " +
                                                        std::to_string(i));
        ++i;
        expect('(');
        PDCrossing x{};
        for (int s = 0; s < 4; ++s) {
            if (s) expect(',');
            x.ends[s] = read_int();
            if (x.ends[s] <= 0) throw MalformedDiagramError("strand labels must be positive");
        }
        expect(')');
        d.crossings.push_back(x);
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',') throw MalformedDiagramError("expected ',' between crossings");
            ++i;
        }
    }
    d.validate();
    return d;
}

std::string PDDiagram::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < crossings.size(); ++i) {
        if (i) os << ",";
        os << "X(" << crossings[i].ends[0] << "," << crossings[i].ends[1] << ","
           << crossings[i].ends[2] << "," << crossings[i].ends[3] << ")";
    }
    return os.str();
}

void PDDiagram::validate() const {
    std::map<int, int> occurrences;
    for (const auto& x : crossings)
        for (int e : x.ends) {
            if (e <= 0) throw MalformedDiagramError("strand labels must be positive");
            occurrences[e]++;
        }
    for (const auto& [label, count] : occurrences)
        if (count != 2)
            throw MalformedDiagramError("strand label " + std::to_string(label) + " occurs " +
                                        std::to_string(count) + " times (must be 2)");
}

ResolvedState resolve(const PDDiagram& d, const std::vector<Resolution>& state) {
    d.validate();
    if (state.size() != d.crossings.size())
        throw MalformedDiagramError("state length does not match crossing count");

    // Compact edge labels.
    std::map<int, int> edge_id;
    for (const auto& x : d.crossings)
        for (int e : x.ends) edge_id.emplace(e, (int)edge_id.size());

    DSU dsu((int)edge_id.size());
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
        const auto& ends = d.crossings[c].ends;
        if (state[c] == Resolution::A) {
            dsu.unite(edge_id[ends[0]], edge_id[ends[1]]);
            dsu.unite(edge_id[ends[2]], edge_id[ends[3]]);
        } else {
            dsu.unite(edge_id[ends[0]], edge_id[ends[3]]);
            dsu.unite(edge_id[ends[1]], edge_id[ends[2]]);
        }
    }

    std::map<int, int> circle_of_root;
    for (const auto& [label, id] : edge_id) {
        int root = dsu.find(id);
        circle_of_root.emplace(root, (int)circle_of_root.size());
    }

    ResolvedState out;
    out.circle_count = (int)circle_of_root.size() + d.crossingless_circles;
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
        const auto& ends = d.crossings[c].ends;
        int arc1, arc2;
        if (state[c] == Resolution::A) {
            arc1 = circle_of_root[dsu.find(edge_id[ends[0]])];
            arc2 = circle_of_root[dsu.find(edge_id[ends[2]])];
        } else {
            arc1 = circle_of_root[dsu.find(edge_id[ends[0]])];
            arc2 = circle_of_root[dsu.find(edge_id[ends[1]])];
        }
        out.crossing_circles.emplace_back(arc1, arc2);
    }
    return out;
}

StateGraph state_graph(const PDDiagram& d, const std::vector<Resolution>& state) {
    ResolvedState rs = resolve(d, state);
    StateGraph g;
    g.vertex_count = rs.circle_count;
    g.edges = rs.crossing_circles;
    for (std::size_t c = 0; c < g.edges.size(); ++c)
        if (g.edges[c].first == g.edges[c].second) g.loop_edges.push_back((int)c);
    return g;
}

AdequacyVerdict adequacy_verdict(const PDDiagram& d) {
    std::vector<Resolution> all_a(d.crossings.size(), Resolution::A);
    std::vector<Resolution> all_b(d.crossings.size(), Resolution::B);
    StateGraph ga = state_graph(d, all_a);
    StateGraph gb = state_graph(d, all_b);
    return AdequacyVerdict{ga.loop_edges.empty(), gb.loop_edges.empty(), ga.loop_edges,
                           gb.loop_edges};
}

namespace {

// The doubled diagram refers to edge-end copies by (crossing, slot, side):
// side 0 = the copy toward the clockwise-neighbor slot, side 1 = toward the
// counterclockwise neighbor.  Along an original edge, side 0 at one end
// joins side 1 at the other, so naming the first occurrence's side-0 copy
// "2e-1" and flipping at the second occurrence wires the rails correctly.
struct EdgeCopies {
    // copy[(crossing,slot)] -> {cw-side label, ccw-side label}
    std::map<std::pair<int, int>, std::array<int, 2>> at;
};

EdgeCopies make_edge_copies(const PDDiagram& d, int& next_label) {
    std::map<int, int> seen; // original label -> first-occurrence flag
    EdgeCopies ec;
    std::map<int, std::pair<int, int>> labels_for_edge; // original -> (copy0, copy1)
    for (int c = 0; c < (int)d.crossings.size(); ++c) {
        for (int s = 0; s < 4; ++s) {
            int e = d.crossings[c].ends[s];
            auto it = labels_for_edge.find(e);
            if (it == labels_for_edge.end()) {
                int l0 = next_label++;
                int l1 = next_label++;
                labels_for_edge.emplace(e, std::make_pair(l0, l1));
                ec.at[{c, s}] = {l0, l1}; // first occurrence: cw = copy0
            } else {
                ec.at[{c, s}] = {it->second.second, it->second.first}; // swapped
            }
        }
    }
    return ec;
}

} // namespace

PDDiagram parallel_double(PDDiagram d) {
    d.validate();
    PDDiagram out;
    out.crossingless_circles = 2 * d.crossingless_circles;
    if (d.crossings.empty()) return out;

    int next_label = 1;
    EdgeCopies ec = make_edge_copies(d, next_label);

    for (int c = 0; c < (int)d.crossings.size(); ++c) {
        auto cw = [&](int slot) { return ec.at[{c, slot}][0]; };
        auto ccw = [&](int slot) { return ec.at[{c, slot}][1]; };
        int u1 = next_label++, u2 = next_label++;
        int o1 = next_label++, o2 = next_label++;
        // Four crossings of the 2x2 block; the under rails stay under.
        out.crossings.push_back({{ccw(0), cw(1), u1, o1}});
        out.crossings.push_back({{u1, ccw(1), cw(2), o2}});
        out.crossings.push_back({{cw(0), o1, u2, ccw(3)}});
        out.crossings.push_back({{u2, o2, ccw(2), cw(3)}});
    }
    out.validate();
    return out;
}

PDDiagram whitehead_diagram(PDDiagram d, ClaspSign clasp) {
    d.validate();
    if (d.crossings.empty()) {
        if (d.crossingless_circles != 1)
            throw MalformedDiagramError("whitehead_diagram needs a knot diagram");
        // Degenerate base case: the rails are whole circles, so the side
        // arcs close up into one edge each (1 on the left, 4 on the right)
        // and only the clasp's peak (3) and valley (2) remain.
        PDDiagram out;
        if (clasp == ClaspSign::Negative) {
            out.crossings.push_back({{1, 2, 3, 1}});
            out.crossings.push_back({{2, 4, 4, 3}});
        } else {
            out.crossings.push_back({{2, 3, 1, 1}});
            out.crossings.push_back({{4, 4, 3, 2}});
        }
        out.validate();
        return out;
    }

    // Basepoint edge: the lowest-numbered strand label.
    int base = d.crossings[0].ends[0];
    for (const auto& x : d.crossings)
        for (int e : x.ends) base = std::min(base, e);

    int next_label = 1;
    EdgeCopies ec = make_edge_copies(d, next_label);

    // The two rail labels of the basepoint edge, and which (crossing,slot)
    // occurrence sits at the edge's first endpoint.
    int rail0 = -1, rail1 = -1;
    std::pair<int, int> first_occ{-1, -1};
    for (int c = 0; c < (int)d.crossings.size() && rail0 < 0; ++c)
        for (int s = 0; s < 4 && rail0 < 0; ++s)
            if (d.crossings[c].ends[s] == base) {
                rail0 = ec.at[{c, s}][0];
                rail1 = ec.at[{c, s}][1];
                first_occ = {c, s};
            }

    PDDiagram out = parallel_double(d);

    // Cut both rails: rail0 keeps w1 at the first endpoint, w2 at the
    // second; rail1 keeps w3 at the first endpoint, w4 at the second.
    const int w1 = next_label++, w2 = next_label++;
    const int w3 = next_label++, w4 = next_label++;

    // Cut each rail so that w1/w3 end up on the same side of the cut: the
    // block emission order puts the occurrence generated by the first
    // endpoint's crossing at block index first_occ.crossing.
    auto split_rail = [&](int rail, int first_label, int second_label) {
        std::vector<std::pair<int, int>> occ; // (flat crossing index, end index)
        for (int c = 0; c < (int)out.crossings.size(); ++c)
            for (int s = 0; s < 4; ++s)
                if (out.crossings[c].ends[s] == rail) occ.emplace_back(c, s);
        if (occ.size() != 2) throw MalformedDiagramError("rail label not found twice");
        const int first_block = first_occ.first;
        auto in_first_block = [&](const std::pair<int, int>& o) {
            return o.first / 4 == first_block;
        };
        // A kink at the basepoint edge would put both occurrences in one
        // block; then order within the block decides.
        std::pair<int, int> a = occ[0], b = occ[1];
        if (in_first_block(b) && !in_first_block(a)) std::swap(a, b);
        out.crossings[a.first].ends[a.second] = first_label;
        out.crossings[b.first].ends[b.second] = second_label;
    };
    split_rail(rail0, w1, w2);
    split_rail(rail1, w3, w4);

    // Clasp between the turnback arcs: peak arc w1..w3, valley arc w2..w4.
    const int peak = next_label++, valley = next_label++;
    if (clasp == ClaspSign::Negative) {
        out.crossings.push_back({{w1, valley, peak, w2}});
        out.crossings.push_back({{valley, w3, w4, peak}});
    } else {
        out.crossings.push_back({{valley, peak, w2, w1}});
        out.crossings.push_back({{w3, w4, peak, valley}});
    }
    out.validate();
    return out;
}

namespace {

// Orientation recovery: each edge gets a direction (producing occurrence ->
// consuming occurrence).  Per crossing, the under pair {0,2} has exactly
// one consumer, likewise the over pair {1,3}.  Propagate; seed arbitrarily
// on components the constraints leave free.
struct Orientations {
    // For each crossing: which under slot is incoming (0 or 2) and which
    // over slot is incoming (1 or 3).
    std::vector<int> under_in, over_in;
};

Orientations orient(const PDDiagram& d) {
    const int nc = (int)d.crossings.size();
    Orientations o;
    o.under_in.assign(nc, -1);
    o.over_in.assign(nc, -1);

    // occurrence list per label: (crossing, slot)
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int c = 0; c < nc; ++c)
        for (int s = 0; s < 4; ++s) occ[d.crossings[c].ends[s]].emplace_back(c, s);

    // edge direction state: the (crossing,slot) that consumes the edge
    std::map<int, std::pair<int, int>> consumer;

    auto pair_slot = [](int s) { return (s + 2) % 4; };

    // Setting a crossing's incoming slot for a strand fixes both edge
    // directions on that strand.
    std::vector<std::pair<int, int>> queue; // (crossing, strand) strand: 0=under, 1=over
    auto set_in = [&](int c, int strand, int in_slot) -> bool {
        int& slot_ref = strand == 0 ? o.under_in[c] : o.over_in[c];
        if (slot_ref != -1) return slot_ref == in_slot;
        slot_ref = in_slot;
        queue.emplace_back(c, strand);
        return true;
    };

    // Knowing an edge's consuming occurrence also orients the producing
    // occurrence's crossing: its strand enters at the paired slot.
    auto record_consumer = [&](int label, std::pair<int, int> at) -> bool {
        auto it = consumer.find(label);
        if (it != consumer.end()) return it->second == at;
        consumer.emplace(label, at);
        const auto& v = occ[label];
        std::pair<int, int> other = (v[0] == at) ? v[1] : v[0];
        if (!set_in(at.first, at.second % 2 == 0 ? 0 : 1, at.second)) return false;
        return set_in(other.first, other.second % 2 == 0 ? 0 : 1, pair_slot(other.second));
    };

    auto propagate = [&]() -> bool {
        while (!queue.empty()) {
            auto [c, strand] = queue.back();
            queue.pop_back();
            int in_slot = strand == 0 ? o.under_in[c] : o.over_in[c];
            int out_slot = pair_slot(in_slot);
            int in_label = d.crossings[c].ends[in_slot];
            int out_label = d.crossings[c].ends[out_slot];
            if (!record_consumer(in_label, {c, in_slot})) return false;
            // out_label is produced here, so its other occurrence consumes it.
            const auto& v = occ[out_label];
            std::pair<int, int> other = v[0] == std::make_pair(c, out_slot) ? v[1] : v[0];
            if (!record_consumer(out_label, other)) return false;
        }
        return true;
    };

    for (;;) {
        if (!propagate()) throw MalformedDiagramError("inconsistent strand orientations");
        int seed = -1;
        for (int c = 0; c < nc; ++c)
            if (o.under_in[c] == -1 || o.over_in[c] == -1) { seed = c; break; }
        if (seed == -1) break;
        if (o.under_in[seed] == -1) set_in(seed, 0, 0);
        else set_in(seed, 1, 1);
    }
    return o;
}

} // namespace

int writhe(const PDDiagram& d) {
    d.validate();
    if (d.crossings.empty()) return 0;
    Orientations o = orient(d);
    int w = 0;
    for (int c = 0; c < (int)d.crossings.size(); ++c) {
        // Positive when the over strand enters at the slot clockwise of the
        // incoming under slot.
        int expected_positive = (o.under_in[c] + 3) % 4;
        w += (o.over_in[c] == expected_positive) ? 1 : -1;
    }
    return w;
}

PDDiagram insert_kink(PDDiagram d, int edge_label) {
    d.validate();
    int max_label = 0;
    for (const auto& x : d.crossings)
        for (int e : x.ends) max_label = std::max(max_label, e);
    int found = 0;
    for (auto& x : d.crossings)
        for (int& e : x.ends)
            if (e == edge_label && ++found == 2) e = max_label + 1;
    if (found < 2) throw MalformedDiagramError("edge label not present");
    // One-crossing twist: the loop edge occupies two adjacent slots.
    d.crossings.push_back({{edge_label, max_label + 2, max_label + 2, max_label + 1}});
    d.validate();
    return d;
}

TuraevData turaev_if_adequate(const QuasiPoly& delta, const QuasiPoly& delta_star) {
    if (!delta.a_constant() || !delta_star.a_constant())
        throw DomainError("turaev_if_adequate needs constant quadratic coefficients");
    const Rational a = delta.coeffs[0].a;
    const Rational a_star = delta_star.coeffs[0].a;
    TuraevData t;
    t.crossing_number = 2 * (a - a_star);
    t.turaev_genus = 1 - a_star - t.crossing_number / 2;
    t.crossing_number.canonicalize();
    t.turaev_genus.canonicalize();
    t.degenerate = (a == a_star);
    return t;
}

namespace {

bool is_half_integer(const Rational& r) {
    Rational twice = 2 * r;
    twice.canonicalize();
    return twice.get_den() == 1;
}

// Matches wh(1, 0, torus with negative sign), i.e. the untwisted negative
// Whitehead double of a negative torus knot.
bool is_untwisted_double_of_negative_torus(const KnotExprPtr& K) {
    if (!K || K->kind != KnotExpr::Kind::Whitehead) return false;
    if (K->omega != 1 || K->tau != 0) return false;
    const auto& c = K->parts[0];
    return c->kind == KnotExpr::Kind::Mirror &&
           c->parts[0]->kind == KnotExpr::Kind::Torus;
}

} // namespace

InadequacyReport inadequacy_tests(const KnotExprPtr& K, const QuasiPoly& dplus_fit,
                                  const QuasiPoly& dminus_fit) {
    if (!dplus_fit.a_constant() || !dminus_fit.a_constant())
        throw DomainError("inadequacy tests need constant quadratic coefficients");
    InadequacyReport rep{};
    rep.a_plus = dplus_fit.coeffs[0].a;
    rep.a_minus = dminus_fit.coeffs[0].a;
    rep.half_integral_plus = is_half_integer(rep.a_plus);
    rep.half_integral_minus = is_half_integer(rep.a_minus);
    rep.excludes_b_adequate = !rep.half_integral_plus;
    rep.excludes_a_adequate = !rep.half_integral_minus;
    rep.inadequate_by_degrees = rep.excludes_a_adequate && rep.excludes_b_adequate;

    rep.genus_test_applies = is_untwisted_double_of_negative_torus(K);
    rep.genus_test_inadequate = false;
    rep.uses_cited_genus_fact = false;
    if (rep.genus_test_applies) {
        TuraevData t = turaev_if_adequate(dplus_fit, dminus_fit);
        if (t.turaev_genus == 1) {
            rep.genus_test_inadequate = true; // no genus-one double has Turaev genus one
            rep.uses_cited_genus_fact = true;
        }
    }

    if (rep.inadequate_by_degrees) rep.verdict = "inadequate";
    else if (rep.genus_test_inadequate) rep.verdict = "not adequate";
    else rep.verdict = "no obstruction";
    return rep;
}

} // namespace slopelab
