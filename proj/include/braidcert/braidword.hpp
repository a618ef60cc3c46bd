#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "braidcert/errors.hpp"
#include "braidcert/laurent.hpp"

namespace braidcert {

// One syllable sigma_gen^exp, exp != 0.
struct Syllable {
    int gen;
    int exp;
    bool operator==(const Syllable&) const = default;
};

// Braid word in canonical syllable form: adjacent syllables have distinct
// generators, no zero exponents. Construction performs free reduction at the
// syllable level (merge, drop zero, re-merge).
class BraidWord {
public:
    explicit BraidWord(int strands = 2) : strands_(strands) {
        if (strands < 2) throw input_error("braid word needs at least 2 strands");
    }
    BraidWord(int strands, const std::vector<Syllable>& syllables);

    static BraidWord from_letters(int strands, const std::vector<int>& letters);

    int strands() const { return strands_; }
    const std::vector<Syllable>& syllables() const { return syl_; }
    bool empty() const { return syl_.empty(); }

    // expanded letter sequence: +g for sigma_g, -g for its inverse
    std::vector<int> letters() const;
    int letter_count() const;
    int exponent_sum() const;

    BraidWord mirror() const;           // negate every exponent
    BraidWord inverse() const;          // reverse and negate
    BraidWord operator*(const BraidWord& o) const; // concatenation (same strands)
    void append(int gen, int exp);

    bool operator==(const BraidWord& o) const {
        return strands_ == o.strands_ && syl_ == o.syl_;
    }

    std::string str() const; // grammar form, e.g. "s1^3 s2^-2"

private:
    int strands_;
    std::vector<Syllable> syl_;
};

// Grammar: word := term (WS term)*; term := ("s" INT | "D") ("^" SINT)?
// Alternate compact form: JSON-style array of nonzero signed indices, [1,1,-2].
BraidWord parse_braid(const std::string& text, int strands);

struct SyllableClassCounts {
    int e_plus = 0, e_minus = 0, o_plus = 0, o_minus = 0;
    bool operator==(const SyllableClassCounts&) const = default;
};

SyllableClassCounts syllable_classes(const BraidWord& w);

// min(|E+|+|O-|, |E-|+|O+|): upper bound for dalt of the closure.
int dealt_bound_syllables(const BraidWord& w);

// perm[i] = image of strand position i (0-based) under the braid read top to bottom.
std::vector<int> permutation(const BraidWord& w);
int component_count(const BraidWord& w);
bool closure_is_knot(const BraidWord& w);

// Reduced Burau matrix for 3-strand words: 2x2 over Z[t,1/t]. Faithful on B_3,
// so matrix equality decides the word problem exactly.
struct BurauMatrix {
    std::array<std::array<Laurent1, 2>, 2> m;
    bool operator==(const BurauMatrix& o) const { return m == o.m; }
    BurauMatrix operator*(const BurauMatrix& o) const;
    static BurauMatrix identity();
    // determinant, a unit +-t^k
    Laurent1 det() const;
};

BurauMatrix burau(const BraidWord& w);
bool braid_equal_3(const BraidWord& u, const BraidWord& w);

// Murasugi's conjugacy representatives for B_3.
enum class OmegaClass { O0, O1, O2, O3, O4, O5, O6 };

struct OmegaForm {
    OmegaClass cls = OmegaClass::O0;
    int n = 0;
    int p = 0;                              // O4 only, > 0
    int q = 0;                              // O5 only, > 0
    std::vector<std::pair<int, int>> pairs; // O6 only, all entries > 0

    void validate() const;
    int r() const { return static_cast<int>(pairs.size()); }
    // Mirror image, normalized back into an Omega class:
    //   O0(n)->O0(-n), O1(n)->O2(-n-1), O2(n)->O1(-n-1), O3(n)->O3(-n-1),
    //   O4(n,p)->O5(-n,p), O5(n,q)->O4(-n,q),
    //   O6(n,(p_i,q_i))->O6(-n,(q_i,p_{i+1 mod r})).
    OmegaForm mirror() const;
    std::string str() const;
};

// Literal representative word, with Delta expanded as s1 s2 s1.
BraidWord omega_word(const OmegaForm& f);

// Delta^k as a word in B_3.
BraidWord delta_power(int k);

std::string omega_class_name(OmegaClass c);

} // namespace braidcert
