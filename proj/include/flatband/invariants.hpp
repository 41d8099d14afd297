#pragma once

#include <cstdlib>
#include <string>

#include "laurent.hpp"
#include "matrix.hpp"

namespace flatband {

// det(V - t V^T), unit-normalized
inline LaurentPoly alexander(const IntMatrix& v) {
    const std::size_t n = v.size();
    PolyMatrix m(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = LaurentPoly(v[i][j]) - LaurentPoly::monomial(v[j][i], 1);
    return det(m).unit_normal();
}

inline IntMatrix symmetrized(const IntMatrix& v) {
    IntMatrix s = v;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) s[i][j] = detail::checked_add(v[i][j], v[j][i]);
    return s;
}

inline long long determinant(const IntMatrix& v) { return std::llabs(det(symmetrized(v))); }

inline int signature(const IntMatrix& v) { return signature_symmetric(symmetrized(v)); }

struct Fingerprint {
    int mu = 0;
    LaurentPoly delta;
    long long det = 0;
    int sigma = 0;
    int beta1 = 0;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

    // the link-level part, ignoring the surface's Betti number
    bool same_link_data(const Fingerprint& o) const {
        return mu == o.mu && delta == o.delta && det == o.det && sigma == o.sigma;
    }

    std::string to_string() const {
        return "mu=" + std::to_string(mu) + " delta=" + delta.to_string() + " det=" + std::to_string(det) +
               " sigma=" + std::to_string(sigma) + " beta1=" + std::to_string(beta1);
    }
};

inline Fingerprint fingerprint_of(int mu, const IntMatrix& v) {
    Fingerprint f;
    f.mu = mu;
    f.delta = alexander(v);
    f.det = determinant(v);
    f.sigma = signature(v);
    f.beta1 = static_cast<int>(v.size());
    return f;
}

} // namespace flatband
