#include "braidcert/braidword.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braidcert {

namespace {

void push_merged(std::vector<Syllable>& out, int gen, int exp) {
    if (exp == 0) return;
    if (!out.empty() && out.back().gen == gen) {
        out.back().exp += exp;
        if (out.back().exp == 0) out.pop_back();
        return;
    }
    out.push_back({gen, exp});
}

} // namespace

BraidWord::BraidWord(int strands, const std::vector<Syllable>& syllables) : strands_(strands) {
    if (strands < 2) throw input_error("braid word needs at least 2 strands");
    for (const auto& s : syllables) {
        if (s.gen < 1 || s.gen >= strands)
            throw input_error("generator index out of range: s" + std::to_string(s.gen));
        push_merged(syl_, s.gen, s.exp);
    }
}

BraidWord BraidWord::from_letters(int strands, const std::vector<int>& letters) {
    BraidWord w(strands);
    for (int l : letters) {
        if (l == 0) throw input_error("zero letter in braid word");
        int g = l > 0 ? l : -l;
        if (g < 1 || g >= strands)
            throw input_error("generator index out of range: s" + std::to_string(g));
        push_merged(w.syl_, g, l > 0 ? 1 : -1);
    }
    return w;
}

std::vector<int> BraidWord::letters() const {
    std::vector<int> out;
    for (const auto& s : syl_) {
        int sign = s.exp > 0 ? 1 : -1;
        for (int i = 0; i < std::abs(s.exp); i++) out.push_back(sign * s.gen);
    }
    return out;
}

int BraidWord::letter_count() const {
    int n = 0;
    for (const auto& s : syl_) n += std::abs(s.exp);
    return n;
}

int BraidWord::exponent_sum() const {
    int n = 0;
    for (const auto& s : syl_) n += s.exp;
    return n;
}

BraidWord BraidWord::mirror() const {
    BraidWord w(strands_);
    for (const auto& s : syl_) w.syl_.push_back({s.gen, -s.exp});
    return w;
}

BraidWord BraidWord::inverse() const {
    BraidWord w(strands_);
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->gen, -it->exp});
    return w;
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
    if (strands_ != o.strands_) throw input_error("strand count mismatch in product");
    BraidWord w(strands_);
    w.syl_ = syl_;
    for (const auto& s : o.syl_) push_merged(w.syl_, s.gen, s.exp);
    return w;
}

void BraidWord::append(int gen, int exp) {
    if (gen < 1 || gen >= strands_)
        throw input_error("generator index out of range: s" + std::to_string(gen));
    push_merged(syl_, gen, exp);
}

std::string BraidWord::str() const {
    if (syl_.empty()) return "e";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : syl_) {
        if (!first) os << " ";
        os << "s" << s.gen;
        if (s.exp != 1) os << "^" << s.exp;
        first = false;
    }
    return os.str();
}

namespace {

// JSON-array alternate form: [1,1,1,-2]
BraidWord parse_array_form(const std::string& text, int strands) {
    std::vector<int> letters;
    size_t i = 1;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) i++; };
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        return BraidWord(strands);
    }
    while (true) {
        skip_ws();
        size_t j = i;
        if (j < text.size() && (text[j] == '-' || text[j] == '+')) j++;
        size_t digits = j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) j++;
        if (j == digits) throw input_error("braid syntax error: expected integer in array form");
        int val = std::atoi(text.substr(i, j - i).c_str());
        if (val == 0) throw input_error("braid syntax error: zero entry in array form");
        letters.push_back(val);
        i = j;
        skip_ws();
        if (i >= text.size()) throw input_error("braid syntax error: unterminated array");
        if (text[i] == ']') {
            i++;
            break;
        }
        if (text[i] != ',') throw input_error("braid syntax error: expected ',' or ']'");
        i++;
    }
    while (i < text.size()) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) throw input_error("braid syntax error: trailing characters");
        i++;
    }
    return BraidWord::from_letters(strands, letters);
}

} // namespace

BraidWord parse_braid(const std::string& text, int strands) {
    if (strands < 2) throw input_error("braid word needs at least 2 strands");
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) i++; };
    skip_ws();
    if (i < text.size() && text[i] == '[') return parse_array_form(text.substr(i), strands);

    std::vector<Syllable> syl;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        bool is_delta = false;
        int gen = 0;
        if (text[i] == 'D') {
            is_delta = true;
            i++;
        } else if (text[i] == 's') {
            i++;
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) j++;
            if (j == i) throw input_error("braid syntax error: expected index after 's'");
            gen = std::atoi(text.substr(i, j - i).c_str());
            i = j;
        } else {
            throw input_error(std::string("braid syntax error at '") + text[i] + "'");
        }
        int exp = 1;
        if (i < text.size() && text[i] == '^') {
            i++;
            size_t j = i;
            if (j < text.size() && (text[j] == '-' || text[j] == '+')) j++;
            size_t digits = j;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) j++;
            if (j == digits) throw input_error("braid syntax error: expected exponent after '^'");
            exp = std::atoi(text.substr(i, j - i).c_str());
            i = j;
            if (exp == 0) throw input_error("braid syntax error: zero exponent");
        }
        if (is_delta) {
            if (strands != 3) throw input_error("'D' requires 3 strands");
            // D^k expands to (s1 s2 s1)^k, inverted letterwise for k < 0
            int reps = std::abs(exp);
            for (int r = 0; r < reps; r++) {
                if (exp > 0) {
                    push_merged(syl, 1, 1);
                    push_merged(syl, 2, 1);
                    push_merged(syl, 1, 1);
                } else {
                    push_merged(syl, 1, -1);
                    push_merged(syl, 2, -1);
                    push_merged(syl, 1, -1);
                }
            }
        } else {
            if (gen < 1 || gen >= strands)
                throw input_error("generator index out of range: s" + std::to_string(gen));
            push_merged(syl, gen, exp);
        }
    }
    BraidWord w(strands);
    for (const auto& s : syl) w.append(s.gen, s.exp);
    return w;
}

SyllableClassCounts syllable_classes(const BraidWord& w) {
    SyllableClassCounts c;
    for (const auto& s : w.syllables()) {
        bool even = (s.gen % 2 == 0);
        bool pos = (s.exp > 0);
        if (even && pos) c.e_plus++;
        else if (even) c.e_minus++;
        else if (pos) c.o_plus++;
        else c.o_minus++;
    }
    return c;
}

int dealt_bound_syllables(const BraidWord& w) {
    auto c = syllable_classes(w);
    return std::min(c.e_plus + c.o_minus, c.e_minus + c.o_plus);
}

std::vector<int> permutation(const BraidWord& w) {
    std::vector<int> perm(static_cast<size_t>(w.strands()));
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& s : w.syllables()) {
        if (std::abs(s.exp) % 2 == 0) continue;
        int a = s.gen - 1;
        // positions a, a+1 swap; track where each starting strand currently sits
        for (auto& x : perm)
            if (x == a) x = a + 1;
            else if (x == a + 1) x = a;
    }
    return perm;
}

int component_count(const BraidWord& w) {
    auto perm = permutation(w);
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (size_t i = 0; i < perm.size(); i++) {
        if (seen[i]) continue;
        cycles++;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(perm[j]);
        }
    }
    return cycles;
}

bool closure_is_knot(const BraidWord& w) { return component_count(w) == 1; }

BurauMatrix BurauMatrix::identity() {
    BurauMatrix b;
    b.m[0][0] = Laurent1::constant(1);
    b.m[1][1] = Laurent1::constant(1);
    b.m[0][1] = Laurent1(Var::t);
    b.m[1][0] = Laurent1(Var::t);
    return b;
}

BurauMatrix BurauMatrix::operator*(const BurauMatrix& o) const {
    BurauMatrix r;
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    return r;
}

Laurent1 BurauMatrix::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

namespace {

BurauMatrix burau_gen(int letter) {
    BurauMatrix b = BurauMatrix::identity();
    auto& m = b.m;
    switch (letter) {
        case 1: // [[-t, 1], [0, 1]]
            m[0][0] = Laurent1::mono(1, -1);
            m[0][1] = Laurent1::constant(1);
            break;
        case -1: // [[-1/t, 1/t], [0, 1]]
            m[0][0] = Laurent1::mono(-1, -1);
            m[0][1] = Laurent1::mono(-1, 1);
            break;
        case 2: // [[1, 0], [t, -t]]
            m[1][0] = Laurent1::mono(1, 1);
            m[1][1] = Laurent1::mono(1, -1);
            break;
        case -2: // [[1, 0], [1, -1/t]]
            m[1][0] = Laurent1::constant(1);
            m[1][1] = Laurent1::mono(-1, -1);
            break;
        default:
            throw input_error("burau: unsupported generator");
    }
    return b;
}

} // namespace

BurauMatrix burau(const BraidWord& w) {
    if (w.strands() != 3) throw input_error("burau oracle requires 3 strands");
    BurauMatrix acc = BurauMatrix::identity();
    for (int l : w.letters()) acc = acc * burau_gen(l);
    return acc;
}

bool braid_equal_3(const BraidWord& u, const BraidWord& w) {
    if (u.strands() != 3 || w.strands() != 3)
        throw input_error("braid_equal_3 requires 3-strand words");
    return burau(u) == burau(w);
}

void OmegaForm::validate() const {
    auto need_empty_pq = [&](const char* who) {
        if (p != 0 || q != 0 || !pairs.empty())
            throw input_error(std::string(who) + " takes only parameter n");
    };
    switch (cls) {
        case OmegaClass::O0: need_empty_pq("O0"); break;
        case OmegaClass::O1: need_empty_pq("O1"); break;
        case OmegaClass::O2: need_empty_pq("O2"); break;
        case OmegaClass::O3: need_empty_pq("O3"); break;
        case OmegaClass::O4:
            if (p <= 0) throw input_error("O4 requires p > 0");
            if (q != 0 || !pairs.empty()) throw input_error("O4 takes parameters n, p");
            break;
        case OmegaClass::O5:
            if (q <= 0) throw input_error("O5 requires q > 0");
            if (p != 0 || !pairs.empty()) throw input_error("O5 takes parameters n, q");
            break;
        case OmegaClass::O6:
            if (pairs.empty()) throw input_error("O6 requires at least one (p_i, q_i) pair");
            for (auto& [pi, qi] : pairs)
                if (pi <= 0 || qi <= 0) throw input_error("O6 requires positive p_i, q_i");
            if (p != 0 || q != 0) throw input_error("O6 takes parameters n, pairs");
            break;
    }
}

OmegaForm OmegaForm::mirror() const {
    validate();
    OmegaForm f;
    switch (cls) {
        case OmegaClass::O0:
            f.cls = OmegaClass::O0;
            f.n = -n;
            break;
        case OmegaClass::O1:
            f.cls = OmegaClass::O2;
            f.n = -n - 1;
            break;
        case OmegaClass::O2:
            f.cls = OmegaClass::O1;
            f.n = -n - 1;
            break;
        case OmegaClass::O3:
            f.cls = OmegaClass::O3;
            f.n = -n - 1;
            break;
        case OmegaClass::O4:
            f.cls = OmegaClass::O5;
            f.n = -n;
            f.q = p;
            break;
        case OmegaClass::O5:
            f.cls = OmegaClass::O4;
            f.n = -n;
            f.p = q;
            break;
        case OmegaClass::O6: {
            f.cls = OmegaClass::O6;
            f.n = -n;
            int r = this->r();
            for (int i = 0; i < r; i++)
                f.pairs.emplace_back(pairs[static_cast<size_t>(i)].second,
                                     pairs[static_cast<size_t>((i + 1) % r)].first);
            break;
        }
    }
    return f;
}

std::string OmegaForm::str() const {
    std::ostringstream os;
    os << omega_class_name(cls) << ":n=" << n;
    if (cls == OmegaClass::O4) os << ",p=" << p;
    if (cls == OmegaClass::O5) os << ",q=" << q;
    if (cls == OmegaClass::O6) {
        os << ",pairs=";
        bool first = true;
        for (auto& [pi, qi] : pairs) {
            if (!first) os << ",";
            os << pi << ":" << qi;
            first = false;
        }
    }
    return os.str();
}

BraidWord delta_power(int k) {
    BraidWord w(3);
    int reps = std::abs(k);
    for (int r = 0; r < reps; r++) {
        if (k > 0) {
            w.append(1, 1);
            w.append(2, 1);
            w.append(1, 1);
        } else {
            w.append(1, -1);
            w.append(2, -1);
            w.append(1, -1);
        }
    }
    return w;
}

BraidWord omega_word(const OmegaForm& f) {
    f.validate();
    BraidWord w = delta_power(2 * f.n);
    switch (f.cls) {
        case OmegaClass::O0: break;
        case OmegaClass::O1:
            w.append(1, 1);
            w.append(2, 1);
            break;
        case OmegaClass::O2:
            for (int i = 0; i < 2; i++) {
                w.append(1, 1);
                w.append(2, 1);
            }
            break;
        case OmegaClass::O3:
            w = delta_power(2 * f.n + 1);
            break;
        case OmegaClass::O4: w.append(1, -f.p); break;
        case OmegaClass::O5: w.append(2, f.q); break;
        case OmegaClass::O6:
            for (auto& [pi, qi] : f.pairs) {
                w.append(1, -pi);
                w.append(2, qi);
            }
            break;
    }
    return w;
}

std::string omega_class_name(OmegaClass c) {
    switch (c) {
        case OmegaClass::O0: return "O0";
        case OmegaClass::O1: return "O1";
        case OmegaClass::O2: return "O2";
        case OmegaClass::O3: return "O3";
        case OmegaClass::O4: return "O4";
        case OmegaClass::O5: return "O5";
        case OmegaClass::O6: return "O6";
    }
    return "?";
}

} // namespace braidcert
