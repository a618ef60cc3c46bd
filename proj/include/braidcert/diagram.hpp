#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "braidcert/braidword.hpp"
#include "braidcert/errors.hpp"

namespace braidcert {

// Slot layout per crossing, counterclockwise: 0=NE, 1=NW, 2=SW, 3=SE.
// A strand entering at slot s leaves at slot s+2. The over strand occupies
// slots {over_diag, over_diag+2}.
struct Dart {
    int c = -1;
    int s = -1;
    bool valid() const { return c >= 0; }
    bool operator==(const Dart&) const = default;
};

// Oriented link diagram as a combinatorial map. Crossingless split circles are
// counted separately in free_loops (they carry no combinatorial data).
class LinkDiagram {
public:
    struct Crossing {
        std::array<int, 4> nbr_c{-1, -1, -1, -1};
        std::array<int, 4> nbr_s{-1, -1, -1, -1};
        std::array<bool, 4> in{false, false, false, false};
        int over_diag = 0;
        bool operator==(const Crossing&) const = default;
    };

    LinkDiagram() = default;

    static LinkDiagram braid_closure(const BraidWord& w);

    int crossing_count() const { return static_cast<int>(xs_.size()); }
    int free_loop_count() const { return free_loops_; }
    const Crossing& crossing(int c) const { return xs_.at(static_cast<size_t>(c)); }

    Dart adj(int c, int s) const {
        const auto& x = xs_.at(static_cast<size_t>(c));
        return {x.nbr_c[static_cast<size_t>(s)], x.nbr_s[static_cast<size_t>(s)]};
    }

    int over_in_slot(int c) const;
    int under_in_slot(int c) const;
    int sign(int c) const;
    int writhe() const;
    bool positive() const; // every crossing positive

    int component_count() const;
    bool connected() const;
    bool is_knot_diagram() const { return component_count() == 1; }

    int seifert_circle_count() const;
    std::pair<int, int> splice_counts() const; // {|s_A D|, |s_B D|}
    // circle count of the Kauffman state given per-crossing choices (false = A)
    int state_circles(const std::vector<bool>& use_b) const;
    int turaev_genus() const;

    // Face structure (quadrant orbits). Requires a connected diagram with at
    // least one crossing; validated against Euler's formula.
    struct Faces {
        std::vector<int> face_of;  // quadrant (4c+s) -> face id
        int count = 0;
        std::vector<int> color;    // face id -> 0/1 checkerboard class
    };
    Faces faces() const;

    int alternating_defect() const;
    bool is_alternating() const { return alternating_defect() == 0; }
    bool reduced() const; // no nugatory crossing

    LinkDiagram crossing_change(int c) const;
    LinkDiagram mirror() const;
    LinkDiagram smooth(int c) const; // oriented smoothing
    // k nested positive clasps on the over-in/under-out arcs next to c
    // (negative clasps when c is negative); k = 0 returns the diagram unchanged.
    LinkDiagram t2prime(int c, int k) const;

    // Arcs in deterministic order; free loops follow the real arcs.
    struct Arc {
        Dart tail; // outgoing end; invalid for a free loop
        Dart head; // incoming end
        bool is_loop() const { return !tail.valid(); }
    };
    std::vector<Arc> arcs() const;

    // Insert a two-crossing clasp joining coherently oriented arcs, or remove
    // the clasp whose middle arcs are the designated pair.
    LinkDiagram band_move(int arc1, int arc2, int clasp_sign = 1) const;

    std::string to_pd_json() const;
    static LinkDiagram from_pd_json(const std::string& text);

    bool operator==(const LinkDiagram& o) const {
        return xs_ == o.xs_ && free_loops_ == o.free_loops_;
    }

    void validate() const;

    // construction helpers (used by the tangle module as well)
    int add_crossing(int over_diag);
    void connect(Dart a, Dart b);
    void set_in(Dart d, bool incoming);
    void add_free_loops(int k) { free_loops_ += k; }

private:
    std::vector<Crossing> xs_;
    int free_loops_ = 0;

    LinkDiagram remove_crossing(int c, std::array<std::pair<int, int>, 2> pairing) const;
    int circles_from_pairing(const std::vector<std::array<std::pair<int, int>, 2>>& pairing) const;
};

} // namespace braidcert
