#include "braidcert/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace braidcert {

Laurent1 Laurent1::mono(int exp, i64 coeff, Var v) {
    Laurent1 p(v);
    p.add_term(exp, coeff);
    return p;
}

bool Laurent1::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int Laurent1::mindeg() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int Laurent1::maxdeg() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

i64 Laurent1::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

void Laurent1::add_term(int exp, i64 coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent1& Laurent1::operator+=(const Laurent1& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Laurent1& Laurent1::operator-=(const Laurent1& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Laurent1 Laurent1::operator+(const Laurent1& o) const {
    Laurent1 r = *this;
    r += o;
    return r;
}

Laurent1 Laurent1::operator-(const Laurent1& o) const {
    Laurent1 r = *this;
    r -= o;
    return r;
}

Laurent1 Laurent1::operator*(const Laurent1& o) const {
    Laurent1 r(var);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

Laurent1 Laurent1::operator-() const {
    Laurent1 r(var);
    for (auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

Laurent1 Laurent1::scale_exponent(int k) const {
    Laurent1 r(var);
    for (auto& [e, c] : terms_) r.add_term(e * k, c);
    return r;
}

std::string Laurent1::str(const std::string& sym) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        int e = it->first;
        i64 c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        i64 a = c < 0 ? -c : c;
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            os << sym;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

Laurent2 Laurent2::mono(int ev, int ez, i64 coeff) {
    Laurent2 p;
    p.add_term(ev, ez, coeff);
    return p;
}

bool Laurent2::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
           terms_.begin()->second == 1;
}

i64 Laurent2::coeff(int ev, int ez) const {
    auto it = terms_.find({ev, ez});
    return it == terms_.end() ? 0 : it->second;
}

void Laurent2::add_term(int ev, int ez, i64 coeff) {
    if (coeff == 0) return;
    Key k{ev, ez};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent2& Laurent2::operator+=(const Laurent2& o) {
    for (auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& o) {
    for (auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

Laurent2 Laurent2::operator+(const Laurent2& o) const {
    Laurent2 r = *this;
    r += o;
    return r;
}

Laurent2 Laurent2::operator-(const Laurent2& o) const {
    Laurent2 r = *this;
    r -= o;
    return r;
}

Laurent2 Laurent2::operator*(const Laurent2& o) const {
    Laurent2 r;
    for (auto& [k1, c1] : terms_)
        for (auto& [k2, c2] : o.terms_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

Laurent2 Laurent2::operator-() const {
    Laurent2 r;
    for (auto& [k, c] : terms_) r.add_term(k.first, k.second, -c);
    return r;
}

Laurent2 Laurent2::mul_mono(int ev, int ez, i64 coeff) const {
    Laurent2 r;
    for (auto& [k, c] : terms_) r.add_term(k.first + ev, k.second + ez, c * coeff);
    return r;
}

int Laurent2::mindeg_v() const {
    int m = 0;
    bool first = true;
    for (auto& [k, c] : terms_) {
        (void)c;
        if (first || k.first < m) m = k.first;
        first = false;
    }
    return m;
}

int Laurent2::maxdeg_v() const {
    int m = 0;
    bool first = true;
    for (auto& [k, c] : terms_) {
        (void)c;
        if (first || k.first > m) m = k.first;
        first = false;
    }
    return m;
}

int Laurent2::mindeg_z() const {
    int m = 0;
    bool first = true;
    for (auto& [k, c] : terms_) {
        (void)c;
        if (first || k.second < m) m = k.second;
        first = false;
    }
    return m;
}

Laurent1 Laurent2::specialize_jones() const {
    // Negative z exponents (multi-component links): multiply by z^m first,
    // specialize, then divide exactly by (x - x^{-1})^m.
    int mz = mindeg_z();
    if (mz < 0) {
        int m = -mz;
        Laurent1 num = this->mul_mono(0, m, 1).specialize_jones();
        Laurent1 den(Var::sqrt_t);
        den.add_term(1, 1);
        den.add_term(-1, -1);
        for (int i = 0; i < m; i++) {
            Laurent1 q(Var::sqrt_t);
            Laurent1 rem = num;
            while (!rem.is_zero()) {
                int e = rem.maxdeg();
                i64 lc = rem.coeff(e);
                q.add_term(e - 1, lc); // leading term of den is x
                rem -= den * Laurent1::mono(e - 1, lc, Var::sqrt_t);
                if (!rem.is_zero() && rem.maxdeg() >= e) break; // not divisible
            }
            num = q;
        }
        return num;
    }
    // z^b = (x - x^{-1})^b expanded exactly; v^a = x^{2a}.
    Laurent1 out(Var::sqrt_t);
    for (auto& [k, c] : terms_) {
        int a = k.first, b = k.second;
        std::vector<i64> binom(static_cast<size_t>(b) + 1, 0);
        binom[0] = 1;
        for (int i = 1; i <= b; i++) {
            for (int j = i; j >= 1; j--) binom[static_cast<size_t>(j)] += binom[static_cast<size_t>(j - 1)];
        }
        for (int j = 0; j <= b; j++) {
            i64 sign = (j % 2 == 0) ? 1 : -1;
            out.add_term(2 * a + (b - j) - j, c * sign * binom[static_cast<size_t>(j)]);
        }
    }
    return out;
}

std::string Laurent2::str() const {
    if (terms_.empty()) return "0";
    // v exponent descending, z ascending within equal v
    std::vector<std::pair<Key, i64>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second < b.first.second;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : items) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        i64 a = c < 0 ? -c : c;
        bool havesym = (k.first != 0 || k.second != 0);
        if (a != 1 || !havesym) os << a;
        if (k.first != 0) {
            os << "v";
            if (k.first != 1) os << "^" << k.first;
        }
        if (k.second != 0) {
            if (k.first != 0) os << " ";
            os << "z";
            if (k.second != 1) os << "^" << k.second;
        }
        first = false;
    }
    return os.str();
}

} // namespace braidcert
