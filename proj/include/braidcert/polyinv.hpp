#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidcert/braidword.hpp"
#include "braidcert/diagram.hpp"
#include "braidcert/laurent.hpp"

namespace braidcert {

// HOMFLY polynomial of the closure of a 3-strand word (2-strand words are
// stabilized first). Normalization P(unknot) = 1 with skein
// v^{-1} P(L+) - v P(L-) = z P(L0). The closure of the empty n-strand word is
// the n-component unlink.
Laurent2 homfly_closed_braid(const BraidWord& w);

// ((v^{-1} - v)/z)^{k-1}: HOMFLY of the k-component unlink.
Laurent2 homfly_unlink(int components);

// P of the diagram after k positive-clasp insertions at a crossing c:
// v^{2k} P_D + v z (sum_{i=1..k} v^{2(i-1)}) P_{D/c}.
Laurent2 homfly_t2stack(const Laurent2& p_d, const Laurent2& p_dc, int k);

// Kauffman bracket state sum over 2^{c} states. Returns the Jones polynomial
// in the variable x = t^{1/2} (doubled exponent lattice).
Laurent1 jones_oracle(const LinkDiagram& d, int crossing_cap = 20);

enum class SignatureMethod { GoeritzOracle, ErleFormula, PositiveFormula };

struct SignatureReport {
    int value = 0;
    SignatureMethod method = SignatureMethod::GoeritzOracle;
    // paper-internal convention: positive knots positive, right trefoil = +2
    std::string convention = "right-handed trefoil has signature +2";
};

// Goeritz matrix with the Gordon-Litherland correction, negated so the
// right-handed trefoil comes out +2.
int signature_oracle(const LinkDiagram& d);

namespace detail {
// same computation with an explicit checkerboard class; both classes agree
int signature_goeritz(const LinkDiagram& d, int white_color);
} // namespace detail

// sigma = 4n - sum(p_i - q_i) for Delta^{2n} prod s1^{-p_i} s2^{q_i}.
int signature_erle(int n, const std::vector<std::pair<int, int>>& pairs);

// sigma = 4n - 2r + sum(p_i + q_i) for Delta^{2n} prod s1^{p_i} s2^{q_i}, entries >= 2.
int signature_positive_form(int n, const std::vector<std::pair<int, int>>& pairs);

// s = c(D) - o(D) + 1 for a positive connected knot diagram.
int rasmussen_s_positive(const LinkDiagram& d);

// |s - sigma| / 2
int alt_lower_bound(int s, int sigma);

int mfw_bound(const Laurent2& p);           // braid index lower bound
int yamada_bound(const LinkDiagram& d);     // braid index upper bound
bool yokota_mindeg_check(const BraidWord& w); // mindeg_v P = c - o + 1 on positive closures

} // namespace braidcert
