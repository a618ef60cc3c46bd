#include "braidcert/polyinv.hpp"

#include <array>
#include <boost/multiprecision/gmp.hpp>
#include <cstdlib>

namespace braidcert {

using mpq = boost::multiprecision::mpq_rational;

// ---------------------------------------------------------------------------
// HOMFLY via the 6-dimensional algebra spanned by the permutation words of B_3
// modulo the quadratic skein relation g_i^2 = v^2 + v z g_i.
// Basis order: 1, g1, g2, g1g2, g2g1, g1g2g1.
// ---------------------------------------------------------------------------

namespace {

enum { B_ONE = 0, B_1 = 1, B_2 = 2, B_12 = 3, B_21 = 4, B_121 = 5 };

struct Hecke3 {
    std::array<Laurent2, 6> c;

    static Hecke3 unit() {
        Hecke3 h;
        h.c[B_ONE] = Laurent2::constant(1);
        return h;
    }

    bool operator==(const Hecke3& o) const { return c == o.c; }
};

// right multiplication by the positive generator
Hecke3 mul_gen(const Hecke3& x, int gen) {
    Hecke3 r;
    auto vv = [](const Laurent2& p) { return p.mul_mono(2, 0, 1); };   // * v^2
    auto vz = [](const Laurent2& p) { return p.mul_mono(1, 1, 1); };   // * v z
    if (gen == 1) {
        r.c[B_1] += x.c[B_ONE];
        r.c[B_ONE] += vv(x.c[B_1]);
        r.c[B_1] += vz(x.c[B_1]);
        r.c[B_21] += x.c[B_2];
        r.c[B_121] += x.c[B_12];
        r.c[B_2] += vv(x.c[B_21]);
        r.c[B_21] += vz(x.c[B_21]);
        r.c[B_12] += vv(x.c[B_121]);
        r.c[B_121] += vz(x.c[B_121]);
    } else {
        r.c[B_2] += x.c[B_ONE];
        r.c[B_12] += x.c[B_1];
        r.c[B_ONE] += vv(x.c[B_2]);
        r.c[B_2] += vz(x.c[B_2]);
        r.c[B_1] += vv(x.c[B_12]);
        r.c[B_12] += vz(x.c[B_12]);
        r.c[B_121] += x.c[B_21];             // g2 g1 g2 = g1 g2 g1
        r.c[B_21] += vv(x.c[B_121]);
        r.c[B_121] += vz(x.c[B_121]);
    }
    return r;
}

Hecke3 mul_letter(const Hecke3& x, int letter) {
    int g = letter > 0 ? letter : -letter;
    Hecke3 y = mul_gen(x, g);
    if (letter > 0) return y;
    // g^{-1} = v^{-2} g - v^{-1} z
    Hecke3 r;
    for (int i = 0; i < 6; i++)
        r.c[static_cast<size_t>(i)] = y.c[static_cast<size_t>(i)].mul_mono(-2, 0, 1) -
                                      x.c[static_cast<size_t>(i)].mul_mono(-1, 1, 1);
    return r;
}

Laurent2 delta_poly() {
    // (v^{-1} - v) / z
    Laurent2 d;
    d.add_term(-1, -1, 1);
    d.add_term(1, -1, -1);
    return d;
}

} // namespace

Laurent2 homfly_unlink(int components) {
    if (components < 1) throw input_error("unlink needs at least one component");
    Laurent2 r = Laurent2::constant(1);
    Laurent2 d = delta_poly();
    for (int i = 1; i < components; i++) r = r * d;
    return r;
}

Laurent2 homfly_closed_braid(const BraidWord& w) {
    BraidWord word = w;
    if (w.strands() == 2) {
        // stabilize into B_3; the closure is unchanged
        BraidWord v(3);
        for (const auto& s : w.syllables()) v.append(s.gen, s.exp);
        v.append(2, 1);
        word = v;
    } else if (w.strands() != 3) {
        throw input_error("homfly_closed_braid supports 2- or 3-strand words");
    }
    Hecke3 h = Hecke3::unit();
    for (int l : word.letters()) h = mul_letter(h, l);
    Laurent2 d = delta_poly();
    // closures of the basis words: unlink(3), unlink(2), unlink(2), unknot,
    // unknot, positive Hopf link
    Laurent2 hopf = Laurent2::mono(2, 0, 1) * d + Laurent2::mono(1, 1, 1);
    Laurent2 out;
    out += h.c[B_ONE] * (d * d);
    out += h.c[B_1] * d;
    out += h.c[B_2] * d;
    out += h.c[B_12];
    out += h.c[B_21];
    out += h.c[B_121] * hopf;
    return out;
}

Laurent2 homfly_t2stack(const Laurent2& p_d, const Laurent2& p_dc, int k) {
    if (k < 0) throw input_error("t2 stack requires k >= 0");
    Laurent2 out = p_d.mul_mono(2 * k, 0, 1);
    for (int i = 1; i <= k; i++) out += p_dc.mul_mono(1 + 2 * (i - 1), 1, 1);
    return out;
}

Laurent1 jones_oracle(const LinkDiagram& d, int crossing_cap) {
    int c = d.crossing_count();
    if (c > crossing_cap) throw input_error("jones oracle: crossing cap exceeded");
    if (c == 0) {
        if (d.free_loop_count() < 1) throw input_error("jones oracle: empty diagram");
    }
    // delta = -A^2 - A^{-2}; precompute powers
    Laurent1 deltaA(Var::A);
    deltaA.add_term(2, -1);
    deltaA.add_term(-2, -1);
    int max_circles = c + 1 + d.free_loop_count();
    std::vector<Laurent1> dpow(static_cast<size_t>(max_circles) + 1, Laurent1::constant(1, Var::A));
    for (int i = 1; i <= max_circles; i++)
        dpow[static_cast<size_t>(i)] = dpow[static_cast<size_t>(i - 1)] * deltaA;

    Laurent1 bracket(Var::A);
    std::vector<bool> use_b(static_cast<size_t>(c), false);
    unsigned long long total = 1ULL << c;
    for (unsigned long long mask = 0; mask < total; mask++) {
        int b = 0;
        for (int i = 0; i < c; i++) {
            bool bit = (mask >> i) & 1ULL;
            use_b[static_cast<size_t>(i)] = bit;
            if (bit) b++;
        }
        int circles = d.state_circles(use_b);
        bracket += Laurent1::mono(c - 2 * b, 1, Var::A) * dpow[static_cast<size_t>(circles - 1)];
    }
    int w = d.writhe();
    // f = (-A^3)^{-w} * bracket
    Laurent1 f = bracket * Laurent1::mono(-3 * w, (w % 2 == 0) ? 1 : -1, Var::A);
    // substitute x = A^{-2} (all exponents are even)
    Laurent1 out(Var::sqrt_t);
    for (auto& [e, coeff] : f.terms()) {
        if (e % 2 != 0) throw input_error("jones oracle: odd bracket exponent");
        out.add_term(-e / 2, coeff);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Signature via the Goeritz form with the Gordon-Litherland correction.
// ---------------------------------------------------------------------------

namespace {

int sgn_mpq(const mpq& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

int signature_symmetric(std::vector<std::vector<mpq>>& a) {
    int n = static_cast<int>(a.size());
    int sig = 0;
    for (int k = 0; k < n; k++) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; i++)
                if (a[static_cast<size_t>(i)][static_cast<size_t>(i)] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) {
                // all diagonal zero; look for an off-diagonal entry
                int bi = -1, bj = -1;
                for (int i = k; i < n && bi < 0; i++)
                    for (int j = i + 1; j < n; j++)
                        if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                            bi = i;
                            bj = j;
                            break;
                        }
                if (bi < 0) break; // zero block
                for (int t = 0; t < n; t++)
                    a[static_cast<size_t>(bi)][static_cast<size_t>(t)] +=
                        a[static_cast<size_t>(bj)][static_cast<size_t>(t)];
                for (int t = 0; t < n; t++)
                    a[static_cast<size_t>(t)][static_cast<size_t>(bi)] +=
                        a[static_cast<size_t>(t)][static_cast<size_t>(bj)];
                piv = bi;
            }
            if (piv != k) {
                for (int t = 0; t < n; t++)
                    std::swap(a[static_cast<size_t>(piv)][static_cast<size_t>(t)],
                              a[static_cast<size_t>(k)][static_cast<size_t>(t)]);
                for (int t = 0; t < n; t++)
                    std::swap(a[static_cast<size_t>(t)][static_cast<size_t>(piv)],
                              a[static_cast<size_t>(t)][static_cast<size_t>(k)]);
            }
        }
        const mpq piv_val = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
        if (piv_val == 0) break;
        sig += sgn_mpq(piv_val);
        for (int i = k + 1; i < n; i++) {
            if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] == 0) continue;
            mpq f = a[static_cast<size_t>(i)][static_cast<size_t>(k)] / piv_val;
            for (int t = k; t < n; t++)
                a[static_cast<size_t>(i)][static_cast<size_t>(t)] -=
                    f * a[static_cast<size_t>(k)][static_cast<size_t>(t)];
            for (int t = k; t < n; t++)
                a[static_cast<size_t>(t)][static_cast<size_t>(i)] -=
                    f * a[static_cast<size_t>(t)][static_cast<size_t>(k)];
        }
    }
    return sig;
}

} // namespace

namespace detail {

int signature_goeritz(const LinkDiagram& d, int white_color) {
    if (!d.connected()) throw input_error("signature oracle requires a connected diagram");
    int n = d.crossing_count();
    if (n == 0) return 0;
    LinkDiagram::Faces f = d.faces();
    std::vector<int> widx(static_cast<size_t>(f.count), -1);
    int nw = 0;
    for (int i = 0; i < f.count; i++)
        if (f.color[static_cast<size_t>(i)] == white_color) widx[static_cast<size_t>(i)] = nw++;

    std::vector<std::vector<mpq>> g(static_cast<size_t>(nw),
                                    std::vector<mpq>(static_cast<size_t>(nw), mpq(0)));
    long long mu = 0;
    for (int c = 0; c < n; c++) {
        int dq = d.crossing(c).over_diag;
        int fa = f.face_of[static_cast<size_t>(4 * c + dq)];
        // A-quadrants: swept rotating the over strand counterclockwise
        int eta = (f.color[static_cast<size_t>(fa)] == white_color) ? 1 : -1;
        if (eta == d.sign(c)) mu += eta; // type II: oriented smoothing merges black
        int s0 = (f.color[static_cast<size_t>(fa)] == white_color) ? dq : (dq + 1) % 4;
        int i = widx[static_cast<size_t>(f.face_of[static_cast<size_t>(4 * c + s0)])];
        int j = widx[static_cast<size_t>(f.face_of[static_cast<size_t>(4 * c + (s0 + 2) % 4)])];
        if (i != j) {
            g[static_cast<size_t>(i)][static_cast<size_t>(j)] -= eta;
            g[static_cast<size_t>(j)][static_cast<size_t>(i)] -= eta;
        }
    }
    for (int i = 0; i < nw; i++) {
        mpq s(0);
        for (int j = 0; j < nw; j++)
            if (j != i) s += g[static_cast<size_t>(i)][static_cast<size_t>(j)];
        g[static_cast<size_t>(i)][static_cast<size_t>(i)] = -s;
    }
    // delete region 0
    std::vector<std::vector<mpq>> m(static_cast<size_t>(nw - 1),
                                    std::vector<mpq>(static_cast<size_t>(nw - 1)));
    for (int i = 1; i < nw; i++)
        for (int j = 1; j < nw; j++)
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                g[static_cast<size_t>(i)][static_cast<size_t>(j)];
    int sig = signature_symmetric(m);
    int sigma_standard = sig - static_cast<int>(mu);
    return -sigma_standard; // paper convention: positive knots positive
}

} // namespace detail

int signature_oracle(const LinkDiagram& d) { return detail::signature_goeritz(d, 0); }

int signature_erle(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (pairs.empty()) throw input_error("Erle formula needs at least one pair");
    long long s = 4LL * n;
    for (auto& [p, q] : pairs) {
        if (p <= 0 || q <= 0) throw input_error("Erle formula requires positive p_i, q_i");
        s -= (p - q);
    }
    return static_cast<int>(s);
}

int signature_positive_form(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (pairs.empty()) throw input_error("positive form needs at least one pair");
    long long s = 4LL * n - 2LL * static_cast<long long>(pairs.size());
    for (auto& [p, q] : pairs) {
        if (p < 2 || q < 2) throw input_error("positive form requires p_i, q_i >= 2");
        s += p + q;
    }
    return static_cast<int>(s);
}

int rasmussen_s_positive(const LinkDiagram& d) {
    if (!d.connected()) throw input_error("Rasmussen s formula requires a connected diagram");
    if (!d.positive()) throw input_error("Rasmussen s formula requires a positive diagram");
    if (!d.is_knot_diagram()) throw input_error("Rasmussen s formula requires a knot");
    return d.crossing_count() - d.seifert_circle_count() + 1;
}

int alt_lower_bound(int s, int sigma) {
    int diff = s - sigma;
    if (diff % 2 != 0) throw input_error("alt lower bound: s - sigma must be even");
    return std::abs(diff) / 2;
}

int mfw_bound(const Laurent2& p) {
    if (p.is_zero()) throw input_error("MFW bound of the zero polynomial");
    int span = p.maxdeg_v() - p.mindeg_v();
    if (span % 2 != 0) throw input_error("MFW bound: odd v-span");
    return span / 2 + 1;
}

int yamada_bound(const LinkDiagram& d) { return d.seifert_circle_count(); }

bool yokota_mindeg_check(const BraidWord& w) {
    LinkDiagram d = LinkDiagram::braid_closure(w);
    if (!d.positive()) throw input_error("Yokota check requires a positive diagram");
    if (!d.connected()) throw input_error("Yokota check requires a connected diagram");
    Laurent2 p = homfly_closed_braid(w);
    return p.mindeg_v() == d.crossing_count() - d.seifert_circle_count() + 1;
}

} // namespace braidcert
