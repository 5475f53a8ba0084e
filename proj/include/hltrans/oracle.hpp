/*
   Copyright 2026 The hltrans Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HLTRANS_ORACLE_HPP
#define HLTRANS_ORACLE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "indexset.hpp"
#include "tableaux.hpp"
#include "tpoly.hpp"
#include "transition.hpp"

namespace hltrans {

/// Polynomial in x_1..x_N with coefficients in Z[t].
class MPoly {
  public:
    using Exponent = std::vector<int>;

    explicit MPoly(int nvars = 0) : n_(nvars) {}

    static MPoly constant(int nvars, const TPoly& c) {
        MPoly p(nvars);
        p.add(Exponent(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }
    /// c * x^e
    static MPoly monomial(const Exponent& e, const TPoly& c = 1) {
        MPoly p(static_cast<int>(e.size()));
        p.add(e, c);
        return p;
    }
    /// x_i (1-based)
    static MPoly variable(int nvars, int i) {
        Exponent e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        return monomial(e);
    }

    int nvars() const noexcept { return n_; }
    const std::map<Exponent, TPoly>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    TPoly coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? TPoly() : it->second;
    }

    void add(const Exponent& e, const TPoly& c) {
        if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("MPoly: exponent length mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly out(a.n_);
        Exponent e(static_cast<std::size_t>(a.n_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                out.add(e, ca * cb);
            }
        return out;
    }
    friend MPoly operator*(const MPoly& a, const TPoly& c) {
        MPoly out(a.n_);
        for (const auto& [e, x] : a.terms_) out.add(e, x * c);
        return out;
    }
    friend bool operator==(const MPoly&, const MPoly&) = default;

    /// Substitutes x_k -> x_{w(k)}; w is a 0-based permutation.
    MPoly permuted(const std::vector<int>& w) const {
        MPoly out(n_);
        Exponent f(static_cast<std::size_t>(n_));
        for (const auto& [e, c] : terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) f[static_cast<std::size_t>(w[k])] = e[k];
            out.add(f, c);
        }
        return out;
    }

    /// Quotient by x_i - x_j (1-based, i != j); throws if inexact.
    MPoly divided_by_difference(int i, int j) const {
        if (i == j || i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("MPoly: bad variable pair");
        const auto vi = static_cast<std::size_t>(i - 1), vj = static_cast<std::size_t>(j - 1);
        MPoly rem = *this, quo(n_);
        // Synthetic division in x_i: clear the highest power of x_i each step.
        while (!rem.terms_.empty()) {
            auto lead = std::max_element(rem.terms_.begin(), rem.terms_.end(),
                                         [&](const auto& a, const auto& b) { return a.first[vi] < b.first[vi]; });
            if (lead->first[vi] == 0) throw InvariantError("MPoly: division by a variable difference is not exact");
            Exponent e = lead->first;
            const TPoly c = lead->second;
            --e[vi];
            quo.add(e, c);
            Exponent shifted = e;
            ++shifted[vi];
            rem.add(shifted, -c);
            ++e[vj];
            rem.add(e, c);
        }
        return quo;
    }

    /// Divides every coefficient by c exactly.
    MPoly divided_by(const TPoly& c) const {
        MPoly out(n_);
        for (const auto& [e, x] : terms_) out.add(e, divide_exact(x, c));
        return out;
    }

    MPoly specialized(int t0) const {
        MPoly out(n_);
        for (const auto& [e, x] : terms_) out.add(e, TPoly(std::vector<Integer>{x.eval(t0)}));
        return out;
    }

  private:
    void check(const MPoly& o) const {
        if (o.n_ != n_) throw std::invalid_argument("MPoly: variable counts differ");
    }

    int n_;
    std::map<Exponent, TPoly> terms_;
};

inline constexpr int kOracleMaxVariables = 5;

namespace detail {

inline std::vector<int> padded(const Partition& lambda, int nvars) {
    if (lambda.length() > nvars)
        throw std::invalid_argument("oracle: " + lambda.str() + " has more parts than variables");
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    for (int i = 1; i <= lambda.length(); ++i) e[static_cast<std::size_t>(i - 1)] = lambda.part(i);
    return e;
}

inline void check_oracle_size(int nvars) {
    if (nvars < 0 || nvars > kOracleMaxVariables)
        throw std::invalid_argument("oracle: refusing N = " + std::to_string(nvars) + " (limit " +
                                    std::to_string(kOracleMaxVariables) + ")");
}

inline int permutation_sign(const std::vector<int>& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
                if (w[i] > w[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

inline MPoly vandermonde_divide(MPoly f, int nvars) {
    for (int i = 1; i <= nvars; ++i)
        for (int j = i + 1; j <= nvars; ++j) f = f.divided_by_difference(i, j);
    return f;
}

}  // namespace detail

/// P_lambda(x_1..x_N; t) from the symmetrization formula, by brute force.
inline MPoly raw_P(const Partition& lambda, int nvars) {
    detail::check_oracle_size(nvars);
    const std::vector<int> lam = detail::padded(lambda, nvars);
    MPoly kernel = MPoly::monomial(lam);
    for (int i = 1; i <= nvars; ++i)
        for (int j = i + 1; j <= nvars; ++j)
            kernel = kernel * (MPoly::variable(nvars, i) - MPoly::variable(nvars, j) * TPoly::t());
    std::vector<int> w(static_cast<std::size_t>(nvars));
    std::iota(w.begin(), w.end(), 0);
    MPoly num(nvars);
    do {
        const MPoly term = kernel.permuted(w);
        if (detail::permutation_sign(w) > 0)
            num += term;
        else
            num -= term;
    } while (std::next_permutation(w.begin(), w.end()));
    MPoly r = detail::vandermonde_divide(std::move(num), nvars);
    TPoly denom = 1;
    std::map<int, int> mult;
    for (int x : lam) ++mult[x];
    for (const auto& [part, m] : mult) denom *= t_factorial(m);
    return r.divided_by(denom);
}

/// s_lambda as a ratio of alternants.
inline MPoly raw_schur(const Partition& lambda, int nvars) {
    detail::check_oracle_size(nvars);
    std::vector<int> e = detail::padded(lambda, nvars);
    for (int i = 0; i < nvars; ++i) e[static_cast<std::size_t>(i)] += nvars - 1 - i;
    std::vector<int> w(static_cast<std::size_t>(nvars));
    std::iota(w.begin(), w.end(), 0);
    MPoly num(nvars);
    const MPoly base = MPoly::monomial(e);
    do {
        const MPoly term = base.permuted(w);
        if (detail::permutation_sign(w) > 0)
            num += term;
        else
            num -= term;
    } while (std::next_permutation(w.begin(), w.end()));
    return detail::vandermonde_divide(std::move(num), nvars);
}

/// sum of x^T over semistandard tableaux of the shape with entries <= N
inline MPoly tableau_generating_function(const SkewShape& shape, int nvars) {
    MPoly out(nvars);
    for_each_ssyt(shape, nvars, std::nullopt, [&](const Tableau& t) {
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        for (const auto& r : t.rows())
            for (int v : r) ++e[static_cast<std::size_t>(v - 1)];
        out.add(e, 1);
    });
    return out;
}

namespace detail {

/// Adds c * F_alpha (strict) or c * M_alpha to out.
inline void render_quasi(MPoly& out, const Composition& alpha, const TPoly& c, bool fundamental) {
    const int nvars = out.nvars();
    const int n = alpha.size();
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    if (fundamental) {
        const Subset breaks = sub(alpha);
        std::function<void(int, int)> rec = [&](int pos, int lo) {
            if (pos > n) {
                out.add(e, c);
                return;
            }
            const int from = pos > 1 && contains(breaks, pos - 1) ? lo + 1 : lo;
            for (int v = from; v <= nvars; ++v) {
                ++e[static_cast<std::size_t>(v - 1)];
                rec(pos + 1, v);
                --e[static_cast<std::size_t>(v - 1)];
            }
        };
        rec(1, 1);
    } else {
        const int k = alpha.length();
        std::function<void(int, int)> rec = [&](int part, int lo) {
            if (part > k) {
                out.add(e, c);
                return;
            }
            for (int v = lo; v <= nvars; ++v) {
                e[static_cast<std::size_t>(v - 1)] = alpha.part(part);
                rec(part + 1, v + 1);
                e[static_cast<std::size_t>(v - 1)] = 0;
            }
        };
        rec(1, 1);
    }
}

}  // namespace detail

/// The polynomial in N variables represented by an F-, M- or G-expansion.
inline MPoly render_expansion(const QSymExpansion& e, int nvars) {
    MPoly out(nvars);
    for (const auto& [alpha, c] : e.terms) {
        switch (e.basis) {
            case Basis::F: detail::render_quasi(out, alpha, c, true); break;
            case Basis::M: detail::render_quasi(out, alpha, c, false); break;
            case Basis::G: {
                const TransitionMatrix gf = build(Basis::G, Basis::F, alpha.size());
                const auto r = static_cast<std::size_t>(std::find(gf.rows.begin(), gf.rows.end(), alpha) - gf.rows.begin());
                for (std::size_t j = 0; j < gf.cols.size(); ++j)
                    if (!gf.entries[r][j].is_zero()) detail::render_quasi(out, gf.cols[j], c * gf.entries[r][j], true);
                break;
            }
            default: throw std::invalid_argument("render_expansion: basis must be F, M or G");
        }
    }
    return out;
}

/// Reads the M-expansion of a homogeneous quasisymmetric polynomial of degree
/// n from the coefficients of x_1^{a_1}...x_k^{a_k}; the result is re-rendered
/// and compared with f.
inline QSymExpansion extract_M(const MPoly& f, int n) {
    const int nvars = f.nvars();
    if (nvars < n) throw std::invalid_argument("extract_M: need at least n variables");
    QSymExpansion out{Basis::M, {}};
    for (const Composition& alpha : compositions_of(n)) {
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        for (int i = 1; i <= alpha.length(); ++i) e[static_cast<std::size_t>(i - 1)] = alpha.part(i);
        out.add(alpha, f.coeff(e));
    }
    if (render_expansion(out, nvars) != f) throw std::invalid_argument("extract_M: polynomial is not quasisymmetric of degree " + std::to_string(n));
    return out;
}

}  // namespace hltrans

#endif  // HLTRANS_ORACLE_HPP
