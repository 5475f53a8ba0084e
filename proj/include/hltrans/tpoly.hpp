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

#ifndef HLTRANS_TPOLY_HPP
#define HLTRANS_TPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hltrans {

using Integer = boost::multiprecision::cpp_int;

/// Thrown when an internal invariant is violated (inexact division,
/// malformed intermediate object). Indicates a bug, not bad input.
class InvariantError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/**
 * Dense univariate polynomial in t with arbitrary-precision integer
 * coefficients. Coefficients are stored in ascending degree order and kept
 * canonical: no trailing zeros, and the zero polynomial is the empty vector.
 */
class TPoly {
  public:
    TPoly() = default;
    TPoly(long long c) {  // NOLINT: implicit constant promotion is intended
        if (c != 0) coeffs_.emplace_back(c);
    }
    explicit TPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    TPoly(std::initializer_list<long long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    /// c * t^k
    static TPoly monomial(int k, const Integer& c = 1) {
        if (k < 0) throw std::invalid_argument("TPoly::monomial: negative degree");
        TPoly p;
        if (c != 0) {
            p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Integer(0));
            p.coeffs_.back() = c;
        }
        return p;
    }

    static TPoly t() { return monomial(1); }

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Integer coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Integer(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    TPoly& operator+=(const TPoly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }

    TPoly& operator-=(const TPoly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }

    TPoly& operator*=(const TPoly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend TPoly operator+(TPoly lhs, const TPoly& rhs) { return lhs += rhs; }
    friend TPoly operator-(TPoly lhs, const TPoly& rhs) { return lhs -= rhs; }

    friend TPoly operator*(const TPoly& lhs, const TPoly& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return {};
        std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
            if (lhs.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
                out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
        return TPoly(std::move(out));
    }

    friend TPoly operator-(TPoly p) {
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }

    friend bool operator==(const TPoly& lhs, const TPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

    /// Multiply by t^k.
    TPoly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<Integer> out(static_cast<std::size_t>(k), Integer(0));
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return TPoly(std::move(out));
    }

    Integer eval(const Integer& t0) const {
        Integer acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + *it;
        return acc;
    }

    /// Evaluation at t = 0 or t = 1 without Horner.
    Integer specialize01(int t0) const {
        if (t0 == 0) return coeff(0);
        if (t0 != 1) throw std::invalid_argument("specialize01: t0 must be 0 or 1");
        Integer s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    /// Rendering in descending degree, e.g. "-t^4 + t^3 + t^2 - t".
    /// With latex=true exponents of two or more digits are braced.
    std::string str(bool latex = false) const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const Integer& c = coeffs_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (k == 0 || mag != 1) os << mag;
            if (k >= 1) os << 't';
            if (k >= 2) {
                if (latex && k >= 10)
                    os << "^{" << k << '}';
                else
                    os << '^' << k;
            }
        }
        return os.str();
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.str(); }

inline TPoly pow(TPoly base, unsigned e) {
    TPoly acc = 1;
    while (e != 0) {
        if (e & 1u) acc *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return acc;
}

/// Quotient and remainder over Z[t]. Returns nullopt when some step would
/// need a non-integral quotient coefficient (only possible when the divisor
/// is not monic up to sign).
inline std::optional<std::pair<TPoly, TPoly>> divmod(const TPoly& num, const TPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    std::vector<Integer> rem = num.coeffs();
    const auto& d = den.coeffs();
    const int dd = den.degree();
    const Integer& lead = d.back();
    if (num.degree() < dd) return std::make_pair(TPoly{}, num);
    std::vector<Integer> q(static_cast<std::size_t>(num.degree() - dd + 1));
    for (int k = num.degree(); k >= dd; --k) {
        Integer& top = rem[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        Integer f = top / lead;
        q[static_cast<std::size_t>(k - dd)] = f;
        for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= f * d[static_cast<std::size_t>(i)];
    }
    return std::make_pair(TPoly(std::move(q)), TPoly(std::move(rem)));
}

/// Exact quotient, or nullopt if den does not divide num in Z[t].
inline std::optional<TPoly> exact_div(const TPoly& num, const TPoly& den) {
    auto qr = divmod(num, den);
    if (!qr || !qr->second.is_zero()) return std::nullopt;
    return std::move(qr->first);
}

/// Division that must be exact; otherwise an invariant has been broken.
inline TPoly divide_exact(const TPoly& num, const TPoly& den) {
    auto q = exact_div(num, den);
    if (!q) throw InvariantError("inexact polynomial division: (" + num.str() + ") / (" + den.str() + ")");
    return std::move(*q);
}

/// 1 - t^k
inline TPoly one_minus_t_pow(int k) { return TPoly(1) - TPoly::monomial(k); }

/// [m]_t = 1 + t + ... + t^{m-1}; [0]_t = 0.
inline TPoly t_integer(int m) {
    TPoly p;
    for (int k = 0; k < m; ++k) p += TPoly::monomial(k);
    return p;
}

/// [m]!_t = [1]_t [2]_t ... [m]_t; [0]!_t = 1.
inline TPoly t_factorial(int m) {
    TPoly p = 1;
    for (int k = 1; k <= m; ++k) p *= t_integer(k);
    return p;
}

namespace detail {

// Recursive-descent reader for the polynomial notation used in printed
// matrices: sums, juxtaposed products, powers, parentheses, integers and t.
class TPolyReader {
  public:
    explicit TPolyReader(std::string_view s) : s_(s) {}

    TPoly parse() {
        TPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_tpoly: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                                    std::string(s_) + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    TPoly expr() {
        TPoly acc;
        bool neg = false;
        if (peek('+') || peek('-')) neg = s_[pos_++] == '-';
        TPoly first = term();
        acc = neg ? -first : first;
        while (peek('+') || peek('-')) {
            bool minus = s_[pos_++] == '-';
            TPoly next = term();
            if (minus)
                acc -= next;
            else
                acc += next;
        }
        return acc;
    }

    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || c == 't' || c == '*' || std::isdigit(static_cast<unsigned char>(c));
    }

    TPoly term() {
        if (!starts_factor()) fail("expected a term");
        TPoly acc = 1;
        while (starts_factor()) {
            if (peek('*')) ++pos_;
            acc *= factor();
        }
        return acc;
    }

    TPoly factor() {
        TPoly base = primary();
        if (peek('^')) {
            ++pos_;
            bool braced = peek('{');
            if (braced) ++pos_;
            skip();
            unsigned e = static_cast<unsigned>(integer_literal());
            if (braced) {
                if (!peek('}')) fail("expected '}'");
                ++pos_;
            }
            base = pow(base, e);
        }
        return base;
    }

    TPoly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            TPoly inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 't') {
            ++pos_;
            return TPoly::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return TPoly(std::vector<Integer>{Integer(std::string(s_.substr(start, pos_ - start)))});
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    long long integer_literal() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses text such as "3-5t+t^2+t^3", "(1+t)(1+t^2)" or "-t^{14}".
inline TPoly parse_tpoly(std::string_view text) { return detail::TPolyReader(text).parse(); }

}  // namespace hltrans

#endif  // HLTRANS_TPOLY_HPP
