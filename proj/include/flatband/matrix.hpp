#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "error.hpp"
#include "laurent.hpp"

namespace flatband {

using IntMatrix = std::vector<std::vector<long long>>;
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

inline IntMatrix zero_matrix(std::size_t n) { return IntMatrix(n, std::vector<long long>(n, 0)); }

inline IntMatrix transpose(const IntMatrix& a) {
    IntMatrix r = zero_matrix(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) r[j][i] = a[i][j];
    return r;
}

namespace detail {

// Fraction-free Gaussian elimination. Works for any exact ring with
// exact division; `divide(a, b)` must return a / b.
template <class T, class IsZero, class Divide>
T bareiss(std::vector<std::vector<T>> m, IsZero is_zero, Divide divide) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    T prev(1);
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t r = k + 1;
            while (r < n && is_zero(m[r][k])) ++r;
            if (r == n) return T(0);
            std::swap(m[k], m[r]);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = T(0);
        }
        prev = m[k][k];
    }
    T d = m[n - 1][n - 1];
    return neg ? T(0) - d : d;
}

} // namespace detail

inline long long det(const IntMatrix& a) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (long long v : a[i]) m[i].emplace_back(v);
    cpp_int d = detail::bareiss<cpp_int>(
        std::move(m), [](const cpp_int& x) { return x == 0; },
        [](const cpp_int& x, const cpp_int& y) { return cpp_int(x / y); });
    if (d > std::numeric_limits<long long>::max() || d < std::numeric_limits<long long>::min())
        throw Error(ErrorKind::overflow, "determinant exceeds 64 bits");
    return static_cast<long long>(d);
}

inline LaurentPoly det(const PolyMatrix& a) {
    return detail::bareiss<LaurentPoly>(
        a, [](const LaurentPoly& x) { return x.is_zero(); },
        [](const LaurentPoly& x, const LaurentPoly& y) { return exact_div(x, y); });
}

// Signature of a symmetric integer matrix by rational congruence
// elimination; zero eigenvalues are not counted.
inline int signature_symmetric(const IntMatrix& s) {
    using boost::multiprecision::cpp_rational;
    const std::size_t n = s.size();
    std::vector<std::vector<cpp_rational>> a(n, std::vector<cpp_rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (s[i][j] != s[j][i]) throw Error(ErrorKind::precondition, "matrix not symmetric");
            a[i][j] = s[i][j];
        }
    std::vector<bool> done(n, false);
    int sig = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n && p == n; ++i)
            if (!done[i] && a[i][i] != 0) p = i;
        if (p == n) {
            // zero diagonal: fold a partner row into some row to create a pivot
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && i != j && a[i][j] != 0) { pi = i; pj = j; break; }
            if (pi == n) break;
            for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
            for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
            p = pi;
        }
        const cpp_rational piv = a[p][p];
        sig += piv > 0 ? 1 : -1;
        done[p] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][p] == 0) continue;
            const cpp_rational f = a[i][p] / piv;
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j]) a[i][j] -= f * a[p][j];
            a[i][p] = 0;
        }
        for (std::size_t j = 0; j < n; ++j)
            if (!done[j]) a[p][j] = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i]) a[i][p] = 0;
    }
    return sig;
}

} // namespace flatband
