#pragma once

// Dense univariate polynomials with unbounded integer coefficients.
// Index = exponent; the coefficient vector never ends in zero.

#include "bruhat/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace bruhat {

using BigInt = boost::multiprecision::cpp_int;

class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<BigInt> coeffs) : c_(coeffs) { normalize(); }
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPolynomial constant(BigInt v) {
        IntPolynomial p;
        p.c_.push_back(std::move(v));
        p.normalize();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero

    BigInt coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
        return c_[k];
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt value_at_one() const {
        BigInt s = 0;
        for (const auto& a : c_) s += a;
        return s;
    }

    friend IntPolynomial operator+(const IntPolynomial& f, const IntPolynomial& g) {
        std::vector<BigInt> c(std::max(f.c_.size(), g.c_.size()), 0);
        for (std::size_t i = 0; i < f.c_.size(); ++i) c[i] += f.c_[i];
        for (std::size_t i = 0; i < g.c_.size(); ++i) c[i] += g.c_[i];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator-(const IntPolynomial& f, const IntPolynomial& g) {
        std::vector<BigInt> c(std::max(f.c_.size(), g.c_.size()), 0);
        for (std::size_t i = 0; i < f.c_.size(); ++i) c[i] += f.c_[i];
        for (std::size_t i = 0; i < g.c_.size(); ++i) c[i] -= g.c_[i];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) {
        if (f.is_zero() || g.is_zero()) return {};
        std::vector<BigInt> c(f.c_.size() + g.c_.size() - 1, 0);
        for (std::size_t i = 0; i < f.c_.size(); ++i)
            for (std::size_t j = 0; j < g.c_.size(); ++j)
                c[i + j] += f.c_[i] * g.c_[j];
        return IntPolynomial(std::move(c));
    }
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<BigInt> c_;
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// Quotient f/g when g divides f exactly over the integers.
inline IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) throw NonExactDivisionError("division by zero polynomial");
    if (f.is_zero()) return {};
    if (f.degree() < g.degree())
        throw NonExactDivisionError("division leaves a nonzero remainder");
    std::vector<BigInt> rem(f.coeffs());
    const int dq = f.degree() - g.degree();
    std::vector<BigInt> quot(dq + 1, 0);
    const BigInt& lead = g.coeff(g.degree());
    for (int k = dq; k >= 0; --k) {
        BigInt top = rem[g.degree() + k];
        if (top % lead != 0)
            throw NonExactDivisionError("division leaves a nonzero remainder");
        BigInt q = top / lead;
        quot[k] = q;
        for (int i = 0; i <= g.degree(); ++i) rem[i + k] -= q * g.coeff(i);
    }
    for (const auto& r : rem)
        if (r != 0) throw NonExactDivisionError("division leaves a nonzero remainder");
    return IntPolynomial(std::move(quot));
}

// Human-readable form, e.g. "1 + 3x + 5x^2".
inline std::string to_pretty_string(const IntPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= f.degree(); ++k) {
        BigInt a = f.coeff(k);
        if (a == 0) continue;
        if (!first) out += a < 0 ? " - " : " + ";
        else if (a < 0) out += "-";
        BigInt mag = a < 0 ? BigInt(-a) : a;
        const bool unit = mag == 1 && k > 0;
        if (!unit) out += mag.str();
        if (k == 1) out += "x";
        else if (k > 1) out += "x^" + std::to_string(k);
        first = false;
    }
    return out;
}

} // namespace bruhat
