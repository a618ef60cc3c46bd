#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace braidcert {

using i64 = long long;

// Exact one-variable Laurent polynomial with integer coefficients.
// The variable tag is informational; arithmetic never mixes tags on its own.
enum class Var { t, A, sqrt_t };

class Laurent1 {
public:
    Laurent1() = default;
    explicit Laurent1(Var v) : var(v) {}

    static Laurent1 mono(int exp, i64 coeff, Var v = Var::t);
    static Laurent1 constant(i64 c, Var v = Var::t) { return mono(0, c, v); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int mindeg() const;
    int maxdeg() const;
    i64 coeff(int exp) const;

    Laurent1& operator+=(const Laurent1& o);
    Laurent1& operator-=(const Laurent1& o);
    Laurent1 operator+(const Laurent1& o) const;
    Laurent1 operator-(const Laurent1& o) const;
    Laurent1 operator*(const Laurent1& o) const;
    Laurent1 operator-() const;
    bool operator==(const Laurent1& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent1& o) const { return !(*this == o); }

    // substitute variable -> variable^k (exponent scaling)
    Laurent1 scale_exponent(int k) const;
    // substitute variable -> variable^{-1}
    Laurent1 invert_variable() const { return scale_exponent(-1); }

    void add_term(int exp, i64 coeff);

    const std::map<int, i64>& terms() const { return terms_; }
    std::string str(const std::string& sym) const;

    Var var = Var::t;

private:
    std::map<int, i64> terms_; // exponent -> nonzero coefficient
};

// Exact two-variable Laurent polynomial in (v, z), integer coefficients.
class Laurent2 {
public:
    using Key = std::pair<int, int>; // (v exponent, z exponent)

    Laurent2() = default;

    static Laurent2 mono(int ev, int ez, i64 coeff);
    static Laurent2 constant(i64 c) { return mono(0, 0, c); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    i64 coeff(int ev, int ez) const;

    Laurent2& operator+=(const Laurent2& o);
    Laurent2& operator-=(const Laurent2& o);
    Laurent2 operator+(const Laurent2& o) const;
    Laurent2 operator-(const Laurent2& o) const;
    Laurent2 operator*(const Laurent2& o) const;
    Laurent2 operator-() const;
    bool operator==(const Laurent2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent2& o) const { return !(*this == o); }

    Laurent2 mul_mono(int ev, int ez, i64 coeff) const;

    int mindeg_v() const;
    int maxdeg_v() const;
    int mindeg_z() const;

    void add_term(int ev, int ez, i64 coeff);

    // v -> x^2, z -> x - x^{-1}; x stands for t^{1/2} (doubled-exponent lattice).
    Laurent1 specialize_jones() const;

    const std::map<Key, i64>& terms() const { return terms_; }
    // Rendered like "-v^4 + 2v^2 + v^2 z^2": v exponent descending, z ascending.
    std::string str() const;

private:
    std::map<Key, i64> terms_;
};

} // namespace braidcert
