#pragma once

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "error.hpp"

namespace flatband {

// Integer Laurent polynomial in t. Canonical: no zero coefficients stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) { if (c != 0) coef_[0] = c; } // NOLINT: constants convert implicitly

    static LaurentPoly monomial(long long c, int e) {
        LaurentPoly p;
        if (c != 0) p.coef_[e] = c;
        return p;
    }
    static LaurentPoly t() { return monomial(1, 1); }

    bool is_zero() const { return coef_.empty(); }
    const std::map<int, long long>& terms() const { return coef_; }

    long long coeff(int e) const {
        auto it = coef_.find(e);
        return it == coef_.end() ? 0 : it->second;
    }
    int low_degree() const { return is_zero() ? 0 : coef_.begin()->first; }
    int high_degree() const { return is_zero() ? 0 : coef_.rbegin()->first; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto [e, c] : o.coef_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto [e, c] : o.coef_) add_term(e, detail::checked_sub(0, c));
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const { return LaurentPoly() - *this; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto [ea, ca] : a.coef_)
            for (auto [eb, cb] : b.coef_) r.add_term(ea + eb, detail::checked_mul(ca, cb));
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // a / b where b divides a exactly over Z[t, 1/t]; throws otherwise.
    friend LaurentPoly exact_div(LaurentPoly a, const LaurentPoly& b) {
        if (b.is_zero()) throw Error(ErrorKind::precondition, "division by zero polynomial");
        LaurentPoly q;
        const int bl = b.high_degree();
        const long long bc = b.coef_.rbegin()->second;
        const int span = b.high_degree() - b.low_degree();
        while (!a.is_zero()) {
            if (a.high_degree() - a.low_degree() < span)
                throw Error(ErrorKind::inconsistent, "inexact polynomial division");
            const long long ac = a.coef_.rbegin()->second;
            if (ac % bc != 0) throw Error(ErrorKind::inconsistent, "inexact polynomial division");
            LaurentPoly m = monomial(ac / bc, a.high_degree() - bl);
            q += m;
            a -= m * b;
        }
        return q;
    }

    // Shift lowest exponent to 0 and make the constant term positive.
    LaurentPoly unit_normal() const {
        if (is_zero()) return *this;
        const int lo = low_degree();
        const bool neg = coef_.begin()->second < 0;
        LaurentPoly r;
        for (auto [e, c] : coef_) r.coef_[e - lo] = neg ? -c : c;
        return r;
    }

    long long eval(long long x) const {
        if (x == 0 && low_degree() < 0) throw Error(ErrorKind::precondition, "negative power at t = 0");
        if ((x != 1 && x != -1) && low_degree() < 0)
            throw Error(ErrorKind::precondition, "evaluation with negative powers needs t = +-1");
        long long s = 0;
        for (auto [e, c] : coef_) {
            long long pw = 1;
            int k = std::abs(e);
            for (int i = 0; i < k; ++i) pw = detail::checked_mul(pw, x);
            s = detail::checked_add(s, detail::checked_mul(c, pw));
        }
        return s;
    }

    // "2t^2 - 3t + 2"; highest exponent first.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
            auto [e, c] = *it;
            long long a = c < 0 ? -c : c;
            if (first) os << (c < 0 ? "-" : "");
            else os << (c < 0 ? " - " : " + ");
            first = false;
            if (e == 0) { os << a; continue; }
            if (a != 1) os << a;
            os << "t";
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

private:
    void add_term(int e, long long c) {
        if (c == 0) return;
        long long v = detail::checked_add(coeff(e), c);
        if (v == 0) coef_.erase(e);
        else coef_[e] = v;
    }

    std::map<int, long long> coef_;
};

} // namespace flatband
