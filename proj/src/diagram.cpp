#include "braidcert/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace braidcert {

namespace {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(static_cast<size_t>(n)) { std::iota(up.begin(), up.end(), 0); }
    int find(int a) {
        while (up[static_cast<size_t>(a)] != a) {
            up[static_cast<size_t>(a)] = up[static_cast<size_t>(up[static_cast<size_t>(a)])];
            a = up[static_cast<size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) { up[static_cast<size_t>(find(a))] = find(b); }
    int classes() {
        int n = 0;
        for (int i = 0; i < static_cast<int>(up.size()); i++)
            if (find(i) == i) n++;
        return n;
    }
};

inline int dart_id(int c, int s) { return 4 * c + s; }
inline int mod4(int s) { return ((s % 4) + 4) % 4; }

} // namespace

int LinkDiagram::add_crossing(int over_diag) {
    Crossing x;
    x.over_diag = over_diag;
    xs_.push_back(x);
    return static_cast<int>(xs_.size()) - 1;
}

void LinkDiagram::connect(Dart a, Dart b) {
    xs_[static_cast<size_t>(a.c)].nbr_c[static_cast<size_t>(a.s)] = b.c;
    xs_[static_cast<size_t>(a.c)].nbr_s[static_cast<size_t>(a.s)] = b.s;
    xs_[static_cast<size_t>(b.c)].nbr_c[static_cast<size_t>(b.s)] = a.c;
    xs_[static_cast<size_t>(b.c)].nbr_s[static_cast<size_t>(b.s)] = a.s;
}

void LinkDiagram::set_in(Dart d, bool incoming) {
    xs_[static_cast<size_t>(d.c)].in[static_cast<size_t>(d.s)] = incoming;
}

LinkDiagram LinkDiagram::braid_closure(const BraidWord& w) {
    LinkDiagram d;
    int n = w.strands();
    std::vector<Dart> first(static_cast<size_t>(n)); // first incoming dart per position
    std::vector<Dart> cur(static_cast<size_t>(n));   // dangling outgoing dart per position

    for (int l : w.letters()) {
        int g = l > 0 ? l : -l;
        int i = g - 1; // crossing couples positions i, i+1
        // positive: strand from position i passes over; enters NW (slot 1)
        int c = d.add_crossing(l > 0 ? 1 : 0);
        d.set_in({c, 1}, true);
        d.set_in({c, 0}, true);
        auto attach = [&](int pos, Dart here) {
            if (cur[static_cast<size_t>(pos)].valid())
                d.connect(cur[static_cast<size_t>(pos)], here);
            else
                first[static_cast<size_t>(pos)] = here;
        };
        attach(i, {c, 1});
        attach(i + 1, {c, 0});
        cur[static_cast<size_t>(i)] = {c, 2};     // strand from NE exits SW
        cur[static_cast<size_t>(i + 1)] = {c, 3}; // strand from NW exits SE
    }
    for (int pos = 0; pos < n; pos++) {
        if (cur[static_cast<size_t>(pos)].valid())
            d.connect(cur[static_cast<size_t>(pos)], first[static_cast<size_t>(pos)]);
        else
            d.free_loops_++;
    }
    return d;
}

int LinkDiagram::over_in_slot(int c) const {
    const auto& x = xs_.at(static_cast<size_t>(c));
    int d0 = x.over_diag;
    if (x.in[static_cast<size_t>(d0)]) return d0;
    return mod4(d0 + 2);
}

int LinkDiagram::under_in_slot(int c) const {
    const auto& x = xs_.at(static_cast<size_t>(c));
    int d0 = mod4(x.over_diag + 1);
    if (x.in[static_cast<size_t>(d0)]) return d0;
    return mod4(d0 + 2);
}

int LinkDiagram::sign(int c) const {
    int o = over_in_slot(c), u = under_in_slot(c);
    return mod4(o - u) == 1 ? 1 : -1;
}

int LinkDiagram::writhe() const {
    int w = 0;
    for (int c = 0; c < crossing_count(); c++) w += sign(c);
    return w;
}

bool LinkDiagram::positive() const {
    for (int c = 0; c < crossing_count(); c++)
        if (sign(c) < 0) return false;
    return true;
}

int LinkDiagram::component_count() const {
    int n = crossing_count();
    std::vector<bool> seen(static_cast<size_t>(4 * n), false);
    int comps = free_loops_;
    for (int c = 0; c < n; c++) {
        for (int s = 0; s < 4; s++) {
            if (!xs_[static_cast<size_t>(c)].in[static_cast<size_t>(s)]) continue;
            if (seen[static_cast<size_t>(dart_id(c, s))]) continue;
            comps++;
            int cc = c, cs = s;
            while (!seen[static_cast<size_t>(dart_id(cc, cs))]) {
                seen[static_cast<size_t>(dart_id(cc, cs))] = true;
                Dart nxt = adj(cc, mod4(cs + 2)); // leave through, cross the arc
                cc = nxt.c;
                cs = nxt.s;
            }
        }
    }
    return comps;
}

bool LinkDiagram::connected() const {
    int n = crossing_count();
    if (n == 0) return free_loops_ == 1;
    if (free_loops_ > 0) return false;
    std::vector<bool> vis(static_cast<size_t>(n), false);
    std::vector<int> stack{0};
    vis[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; s++) {
            int nc = xs_[static_cast<size_t>(c)].nbr_c[static_cast<size_t>(s)];
            if (nc >= 0 && !vis[static_cast<size_t>(nc)]) {
                vis[static_cast<size_t>(nc)] = true;
                cnt++;
                stack.push_back(nc);
            }
        }
    }
    return cnt == n;
}

int LinkDiagram::circles_from_pairing(
    const std::vector<std::array<std::pair<int, int>, 2>>& pairing) const {
    int n = crossing_count();
    if (n == 0) return free_loops_;
    UnionFind uf(4 * n);
    for (int c = 0; c < n; c++) {
        for (const auto& [a, b] : pairing[static_cast<size_t>(c)])
            uf.unite(dart_id(c, a), dart_id(c, b));
        for (int s = 0; s < 4; s++) {
            Dart o = adj(c, s);
            uf.unite(dart_id(c, s), dart_id(o.c, o.s));
        }
    }
    return uf.classes() + free_loops_;
}

int LinkDiagram::seifert_circle_count() const {
    int n = crossing_count();
    std::vector<std::array<std::pair<int, int>, 2>> pairing(static_cast<size_t>(n));
    for (int c = 0; c < n; c++) {
        const auto& x = xs_[static_cast<size_t>(c)];
        int k = 0;
        for (int s = 0; s < 4; s++) {
            if (!x.in[static_cast<size_t>(s)]) continue;
            int out = x.in[static_cast<size_t>(mod4(s + 1))] ? mod4(s + 3) : mod4(s + 1);
            pairing[static_cast<size_t>(c)][static_cast<size_t>(k++)] = {s, out};
        }
    }
    return circles_from_pairing(pairing);
}

int LinkDiagram::state_circles(const std::vector<bool>& use_b) const {
    int n = crossing_count();
    std::vector<std::array<std::pair<int, int>, 2>> pairing(static_cast<size_t>(n));
    for (int c = 0; c < n; c++) {
        int d0 = xs_[static_cast<size_t>(c)].over_diag;
        if (use_b[static_cast<size_t>(c)])
            pairing[static_cast<size_t>(c)] = {{{d0, mod4(d0 + 1)}, {mod4(d0 + 2), mod4(d0 + 3)}}};
        else
            pairing[static_cast<size_t>(c)] = {{{mod4(d0 + 1), mod4(d0 + 2)}, {mod4(d0 + 3), d0}}};
    }
    return circles_from_pairing(pairing);
}

std::pair<int, int> LinkDiagram::splice_counts() const {
    std::vector<bool> all_a(static_cast<size_t>(crossing_count()), false);
    std::vector<bool> all_b(static_cast<size_t>(crossing_count()), true);
    return {state_circles(all_a), state_circles(all_b)};
}

int LinkDiagram::turaev_genus() const {
    if (!connected()) throw input_error("Turaev genus requires a connected diagram");
    auto [sa, sb] = splice_counts();
    int g2 = crossing_count() + 2 - sa - sb;
    if (g2 < 0 || g2 % 2 != 0) throw input_error("invalid diagram: Turaev formula broke");
    return g2 / 2;
}

LinkDiagram::Faces LinkDiagram::faces() const {
    if (!connected() || crossing_count() == 0)
        throw input_error("face structure requires a connected diagram with crossings");
    int n = crossing_count();
    Faces f;
    f.face_of.assign(static_cast<size_t>(4 * n), -1);
    for (int c = 0; c < n; c++) {
        for (int s = 0; s < 4; s++) {
            if (f.face_of[static_cast<size_t>(dart_id(c, s))] >= 0) continue;
            int id = f.count++;
            int cc = c, cs = s;
            while (f.face_of[static_cast<size_t>(dart_id(cc, cs))] < 0) {
                f.face_of[static_cast<size_t>(dart_id(cc, cs))] = id;
                Dart nxt = adj(cc, mod4(cs + 1));
                cc = nxt.c;
                cs = nxt.s;
            }
        }
    }
    if (f.count != n + 2)
        throw input_error("invalid diagram: face count violates Euler's formula");
    // checkerboard classes: quadrants s and s+1 sit in oppositely colored faces
    f.color.assign(static_cast<size_t>(f.count), -1);
    std::vector<int> stack;
    f.color[static_cast<size_t>(f.face_of[0])] = 0;
    stack.push_back(f.face_of[0]);
    // constraint edges from every crossing corner
    std::vector<std::vector<int>> nbrs(static_cast<size_t>(f.count));
    for (int c = 0; c < n; c++) {
        for (int s = 0; s < 4; s++) {
            int a = f.face_of[static_cast<size_t>(dart_id(c, s))];
            int b = f.face_of[static_cast<size_t>(dart_id(c, mod4(s + 1)))];
            nbrs[static_cast<size_t>(a)].push_back(b);
        }
    }
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b : nbrs[static_cast<size_t>(a)]) {
            if (f.color[static_cast<size_t>(b)] < 0) {
                f.color[static_cast<size_t>(b)] = 1 - f.color[static_cast<size_t>(a)];
                stack.push_back(b);
            } else if (f.color[static_cast<size_t>(b)] == f.color[static_cast<size_t>(a)]) {
                throw input_error("invalid diagram: not checkerboard colorable");
            }
        }
    }
    return f;
}

int LinkDiagram::alternating_defect() const {
    if (crossing_count() == 0) {
        if (free_loops_ == 1) return 0;
        throw input_error("alternating defect requires a connected diagram");
    }
    Faces f = faces();
    int mismatch0 = 0, mismatch1 = 0;
    for (int c = 0; c < crossing_count(); c++) {
        int d0 = xs_[static_cast<size_t>(c)].over_diag;
        int col = f.color[static_cast<size_t>(f.face_of[static_cast<size_t>(dart_id(c, d0))])];
        if (col != 0) mismatch0++;
        if (col != 1) mismatch1++;
    }
    return std::min(mismatch0, mismatch1);
}

bool LinkDiagram::reduced() const {
    Faces f = faces();
    for (int c = 0; c < crossing_count(); c++)
        for (int s = 0; s < 2; s++)
            if (f.face_of[static_cast<size_t>(dart_id(c, s))] ==
                f.face_of[static_cast<size_t>(dart_id(c, s + 2))])
                return false;
    return true;
}

LinkDiagram LinkDiagram::crossing_change(int c) const {
    if (c < 0 || c >= crossing_count()) throw input_error("invalid crossing id");
    LinkDiagram d = *this;
    d.xs_[static_cast<size_t>(c)].over_diag ^= 1;
    return d;
}

LinkDiagram LinkDiagram::mirror() const {
    LinkDiagram d = *this;
    for (auto& x : d.xs_) x.over_diag ^= 1;
    return d;
}

LinkDiagram LinkDiagram::remove_crossing(int c0, std::array<std::pair<int, int>, 2> pairing) const {
    int n = crossing_count();
    LinkDiagram d;
    d.free_loops_ = free_loops_;
    std::vector<int> remap(static_cast<size_t>(n), -1);
    int k = 0;
    for (int c = 0; c < n; c++)
        if (c != c0) remap[static_cast<size_t>(c)] = k++;
    d.xs_.resize(static_cast<size_t>(k));
    for (int c = 0; c < n; c++) {
        if (c == c0) continue;
        auto& x = d.xs_[static_cast<size_t>(remap[static_cast<size_t>(c)])];
        x.over_diag = xs_[static_cast<size_t>(c)].over_diag;
        x.in = xs_[static_cast<size_t>(c)].in;
    }
    // each slot of c0 maps through the pairing to its partner slot
    std::array<int, 4> partner{};
    for (auto& [a, b] : pairing) {
        partner[static_cast<size_t>(a)] = b;
        partner[static_cast<size_t>(b)] = a;
    }
    std::array<bool, 4> visited{false, false, false, false};
    // chains that start at a real dart: follow through c0 until the far real dart
    for (int s = 0; s < 4; s++) {
        Dart ext = adj(c0, s);
        if (ext.c == c0) continue; // handled by the circle sweep
        int cur = s;
        Dart far;
        while (true) {
            visited[static_cast<size_t>(cur)] = true;
            int out = partner[static_cast<size_t>(cur)];
            visited[static_cast<size_t>(out)] = true;
            Dart o = adj(c0, out);
            if (o.c != c0) {
                far = o;
                break;
            }
            cur = o.s;
        }
        d.connect({remap[static_cast<size_t>(ext.c)], ext.s},
                  {remap[static_cast<size_t>(far.c)], far.s});
    }
    // remaining slots form closed circles through c0
    for (int s = 0; s < 4; s++) {
        if (visited[static_cast<size_t>(s)]) continue;
        int cur = s;
        while (!visited[static_cast<size_t>(cur)]) {
            visited[static_cast<size_t>(cur)] = true;
            int out = partner[static_cast<size_t>(cur)];
            visited[static_cast<size_t>(out)] = true;
            cur = adj(c0, out).s; // stays at c0 on an unvisited chain
        }
        d.free_loops_++;
    }
    // copy adjacency between crossings other than c0
    for (int c = 0; c < n; c++) {
        if (c == c0) continue;
        for (int s = 0; s < 4; s++) {
            Dart o = adj(c, s);
            if (o.c == c0) continue;
            d.connect({remap[static_cast<size_t>(c)], s}, {remap[static_cast<size_t>(o.c)], o.s});
        }
    }
    return d;
}

LinkDiagram LinkDiagram::smooth(int c) const {
    if (c < 0 || c >= crossing_count()) throw input_error("invalid crossing id");
    const auto& x = xs_[static_cast<size_t>(c)];
    std::array<std::pair<int, int>, 2> pairing;
    int k = 0;
    for (int s = 0; s < 4; s++) {
        if (!x.in[static_cast<size_t>(s)]) continue;
        int out = x.in[static_cast<size_t>(mod4(s + 1))] ? mod4(s + 3) : mod4(s + 1);
        pairing[static_cast<size_t>(k++)] = {s, out};
    }
    return remove_crossing(c, pairing);
}

LinkDiagram LinkDiagram::t2prime(int c, int k) const {
    if (c < 0 || c >= crossing_count()) throw input_error("invalid crossing id");
    if (k < 0) throw input_error("t2prime requires k >= 0");
    LinkDiagram d = *this;
    int sg = sign(c);
    for (int rep = 0; rep < k; rep++) {
        int o = d.over_in_slot(c);
        int w = mod4(d.under_in_slot(c) + 2); // under-out slot
        Dart fa = d.adj(c, o);
        Dart fb = d.adj(c, w);
        // positive clasp: y north (B over), x south (A over); A runs toward c.
        int y = d.add_crossing(sg > 0 ? 0 : 1);
        int x = d.add_crossing(sg > 0 ? 0 : 1);
        d.set_in({y, 1}, true);
        d.set_in({y, 2}, true);
        d.set_in({x, 0}, true);
        d.set_in({x, 3}, true);
        d.connect({y, 3}, {x, 0});
        d.connect({x, 1}, {y, 2});
        d.connect({x, 2}, {c, o});
        d.connect({c, w}, {x, 3});
        if (fa == Dart{c, w})
            d.connect({y, 0}, {y, 1});
        else {
            d.connect(fa, {y, 1});
            d.connect({y, 0}, fb);
        }
    }
    return d;
}

std::vector<LinkDiagram::Arc> LinkDiagram::arcs() const {
    std::vector<Arc> out;
    int n = crossing_count();
    for (int c = 0; c < n; c++) {
        for (int s = 0; s < 4; s++) {
            Dart o = adj(c, s);
            if (dart_id(c, s) > dart_id(o.c, o.s)) continue;
            Arc a;
            if (xs_[static_cast<size_t>(c)].in[static_cast<size_t>(s)]) {
                a.head = {c, s};
                a.tail = o;
            } else {
                a.tail = {c, s};
                a.head = o;
            }
            out.push_back(a);
        }
    }
    for (int i = 0; i < free_loops_; i++) out.push_back(Arc{});
    return out;
}

LinkDiagram LinkDiagram::band_move(int arc1, int arc2, int clasp_sign) const {
    auto as = arcs();
    if (arc1 < 0 || arc2 < 0 || arc1 >= static_cast<int>(as.size()) ||
        arc2 >= static_cast<int>(as.size()))
        throw input_error("invalid arc id");
    const Arc& a1 = as[static_cast<size_t>(arc1)];
    const Arc& a2 = as[static_cast<size_t>(arc2)];

    // Removal: the two arcs are the middle rungs of an existing clasp.
    if (!a1.is_loop() && !a2.is_loop() && arc1 != arc2) {
        int x1 = a1.tail.c, y1 = a1.head.c;
        int x2 = a2.tail.c, y2 = a2.head.c;
        if (x1 == y2 && y1 == x2 && x1 != y1) {
            // pass-through removal of both clasp crossings restores the band site
            int hi = std::max(x1, y1), lo = std::min(x1, y1);
            LinkDiagram d = remove_crossing(hi, {{{0, 2}, {1, 3}}});
            return d.remove_crossing(lo, {{{0, 2}, {1, 3}}});
        }
    }

    LinkDiagram d = *this;
    int over_first = clasp_sign > 0 ? 1 : 0; // over_diag of both clasp crossings
    int y = d.add_crossing(over_first);
    int x = d.add_crossing(over_first);
    d.set_in({y, 1}, true); // A in
    d.set_in({y, 0}, true); // B in
    d.set_in({x, 0}, true); // A in (from y)
    d.set_in({x, 1}, true); // B in (from y)
    d.connect({y, 3}, {x, 0});
    d.connect({y, 2}, {x, 1});

    if (a1.is_loop() && a2.is_loop()) {
        if (arc1 == arc2) {
            // clasp a circle with itself: the loop closes A-head to B-tail and B-head to A-tail
            d.connect({x, 2}, {y, 0});
            d.connect({x, 3}, {y, 1});
            d.free_loops_ -= 1;
        } else {
            d.connect({x, 2}, {y, 1}); // A's far side
            d.connect({x, 3}, {y, 0}); // B's far side
            d.free_loops_ -= 2;
        }
        return d;
    }
    if (a1.is_loop() || a2.is_loop()) {
        const Arc& real = a1.is_loop() ? a2 : a1;
        d.connect(real.tail, {y, 1});
        d.connect({x, 2}, real.head);
        d.connect({x, 3}, {y, 0}); // loop becomes the B strand
        d.free_loops_ -= 1;
        return d;
    }

    // both real: validate that they share a face with coherent (parallel) channel orientation
    Faces f = faces();
    auto left_face = [&](const Arc& a) {
        return f.face_of[static_cast<size_t>(dart_id(a.tail.c, a.tail.s))];
    };
    auto right_face = [&](const Arc& a) {
        return f.face_of[static_cast<size_t>(dart_id(a.tail.c, mod4(a.tail.s - 1)))];
    };
    if (arc1 == arc2) throw input_error("band move needs two distinct arc segments");
    int common = -1;
    bool a1_aligned = false;
    for (int fa : {left_face(a1), right_face(a1)}) {
        for (int fb : {left_face(a2), right_face(a2)}) {
            if (fa == fb) {
                common = fa;
                a1_aligned = (fa == right_face(a1));
            }
        }
    }
    if (common < 0) throw input_error("band move: arcs do not border a common face");
    bool a2_aligned = (common == right_face(a2));
    if (a1_aligned == a2_aligned)
        throw input_error("band move: incompatible orientations at site");

    const Arc& A = a1_aligned ? a1 : a2; // channel face on A's right
    const Arc& B = a1_aligned ? a2 : a1;
    d.connect(A.tail, {y, 1});
    d.connect({x, 2}, A.head);
    d.connect(B.tail, {y, 0});
    d.connect({x, 3}, B.head);
    return d;
}

std::string LinkDiagram::to_pd_json() const {
    auto as = arcs();
    // map dart -> arc id
    std::map<std::pair<int, int>, int> arc_of;
    for (size_t i = 0; i < as.size(); i++) {
        if (as[i].is_loop()) continue;
        arc_of[{as[i].tail.c, as[i].tail.s}] = static_cast<int>(i);
        arc_of[{as[i].head.c, as[i].head.s}] = static_cast<int>(i);
    }
    nlohmann::ordered_json j;
    j["arcs"] = nlohmann::json::array();
    for (size_t i = 0; i < as.size(); i++) j["arcs"].push_back(static_cast<int>(i));
    j["crossings"] = nlohmann::json::array();
    for (int c = 0; c < crossing_count(); c++) {
        nlohmann::ordered_json xc;
        xc["ends"] = {arc_of[{c, 0}], arc_of[{c, 1}], arc_of[{c, 2}], arc_of[{c, 3}]};
        xc["over"] = xs_[static_cast<size_t>(c)].over_diag;
        xc["orient"] = {xs_[static_cast<size_t>(c)].in[0], xs_[static_cast<size_t>(c)].in[1],
                        xs_[static_cast<size_t>(c)].in[2], xs_[static_cast<size_t>(c)].in[3]};
        j["crossings"].push_back(xc);
    }
    return j.dump();
}

LinkDiagram LinkDiagram::from_pd_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("PD JSON parse error: ") + e.what());
    }
    if (!j.contains("arcs") || !j.contains("crossings"))
        throw input_error("PD JSON needs 'arcs' and 'crossings'");
    LinkDiagram d;
    std::map<int, std::vector<Dart>> ends; // arc id -> darts
    int ci = 0;
    for (const auto& xc : j["crossings"]) {
        int c = d.add_crossing(xc.at("over").get<int>());
        if (d.xs_[static_cast<size_t>(c)].over_diag < 0 || d.xs_[static_cast<size_t>(c)].over_diag > 1)
            throw input_error("PD JSON: 'over' must be 0 or 1");
        auto e = xc.at("ends");
        auto o = xc.at("orient");
        if (e.size() != 4 || o.size() != 4) throw input_error("PD JSON: bad crossing record");
        for (int s = 0; s < 4; s++) {
            ends[e[static_cast<size_t>(s)].get<int>()].push_back({c, s});
            d.set_in({c, s}, o[static_cast<size_t>(s)].get<bool>());
        }
        ci++;
    }
    int loops = 0;
    for (const auto& a : j["arcs"]) {
        int id = a.get<int>();
        auto it = ends.find(id);
        if (it == ends.end()) {
            loops++;
            continue;
        }
        if (it->second.size() != 2)
            throw input_error("PD JSON: arc must have exactly two ends");
        d.connect(it->second[0], it->second[1]);
    }
    for (auto& [id, ds] : ends)
        if (ds.size() != 2) throw input_error("PD JSON: arc appears wrong number of times");
    d.free_loops_ = loops;
    d.validate();
    return d;
}

void LinkDiagram::validate() const {
    for (int c = 0; c < crossing_count(); c++) {
        const auto& x = xs_[static_cast<size_t>(c)];
        int ins = 0;
        for (int s = 0; s < 4; s++) {
            if (x.nbr_c[static_cast<size_t>(s)] < 0 || x.nbr_c[static_cast<size_t>(s)] >= crossing_count())
                throw input_error("dangling crossing slot");
            Dart o = adj(c, s);
            if (adj(o.c, o.s) != Dart{c, s}) throw input_error("asymmetric adjacency");
            if (x.in[static_cast<size_t>(s)]) ins++;
            // arc orientation: exactly one incoming end per arc
            if (x.in[static_cast<size_t>(s)] ==
                xs_[static_cast<size_t>(o.c)].in[static_cast<size_t>(o.s)])
                throw input_error("arc with two heads or two tails");
        }
        if (ins != 2) throw input_error("crossing needs exactly two incoming strands");
        // through-strand consistency: incoming slots are adjacent
        for (int s = 0; s < 4; s++)
            if (x.in[static_cast<size_t>(s)] && x.in[static_cast<size_t>(mod4(s + 2))])
                throw input_error("through-strand oriented both ways");
    }
    if (free_loops_ < 0) throw input_error("negative free loop count");
}

} // namespace braidcert
