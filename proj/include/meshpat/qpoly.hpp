// Copyright 2026 The meshpat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MESHPAT_QPOLY_HPP
#define MESHPAT_QPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <meshpat/error.hpp>

namespace meshpat
{

using integer = boost::multiprecision::cpp_int;

// Polynomial in q with arbitrary-precision integer coefficients. The
// coefficient vector is indexed by q-degree and never has a trailing zero.
class QPolynomial
{
public:
    QPolynomial() = default;

    QPolynomial(integer c)
    {
        if (c != 0) {
            coeffs_.push_back(std::move(c));
        }
    }

    QPolynomial(int c) : QPolynomial(integer(c)) {}

    explicit QPolynomial(std::vector<integer> coeffs) : coeffs_(std::move(coeffs))
    {
        trim();
    }

    // c * q^d
    static QPolynomial monomial(integer c, std::size_t d)
    {
        std::vector<integer> v(d + 1);
        v[d] = std::move(c);
        return QPolynomial(std::move(v));
    }

    static QPolynomial q()
    {
        return monomial(1, 1);
    }

    bool is_zero() const noexcept
    {
        return coeffs_.empty();
    }

    // -1 for the zero polynomial.
    long degree() const noexcept
    {
        return static_cast<long>(coeffs_.size()) - 1;
    }

    bool is_constant() const noexcept
    {
        return coeffs_.size() <= 1;
    }

    std::span<const integer> coeffs() const noexcept
    {
        return coeffs_;
    }

    // Coefficient of q^d; zero past the degree.
    integer coeff(std::size_t d) const
    {
        return d < coeffs_.size() ? coeffs_[d] : integer(0);
    }

    integer eval(const integer &v) const
    {
        integer acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * v + *it;
        }
        return acc;
    }

    // Sum of coefficients, i.e. the value at q = 1.
    integer total() const
    {
        integer acc = 0;
        for (const auto &c : coeffs_) {
            acc += c;
        }
        return acc;
    }

    // q -> q^m
    QPolynomial subst_power(std::size_t m) const
    {
        if (m == 0) {
            throw precondition_error("q-power substitution requires m >= 1");
        }
        if (coeffs_.empty()) {
            return {};
        }
        std::vector<integer> v((coeffs_.size() - 1) * m + 1);
        for (std::size_t d = 0; d < coeffs_.size(); ++d) {
            v[d * m] = coeffs_[d];
        }
        return QPolynomial(std::move(v));
    }

    QPolynomial &operator+=(const QPolynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t d = 0; d < o.coeffs_.size(); ++d) {
            coeffs_[d] += o.coeffs_[d];
        }
        trim();
        return *this;
    }

    QPolynomial &operator-=(const QPolynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t d = 0; d < o.coeffs_.size(); ++d) {
            coeffs_[d] -= o.coeffs_[d];
        }
        trim();
        return *this;
    }

    QPolynomial &operator*=(const QPolynomial &o)
    {
        *this = *this * o;
        return *this;
    }

    friend QPolynomial operator+(QPolynomial a, const QPolynomial &b)
    {
        a += b;
        return a;
    }

    friend QPolynomial operator-(QPolynomial a, const QPolynomial &b)
    {
        a -= b;
        return a;
    }

    friend QPolynomial operator-(QPolynomial a)
    {
        for (auto &c : a.coeffs_) {
            c = -c;
        }
        return a;
    }

    friend QPolynomial operator*(const QPolynomial &a, const QPolynomial &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return QPolynomial(std::move(v));
    }

    friend bool operator==(const QPolynomial &, const QPolynomial &) = default;

    // Human-readable form, e.g. "2 + 3q + q^2".
    std::string to_string() const
    {
        if (coeffs_.empty()) {
            return "0";
        }
        std::string out;
        for (std::size_t d = 0; d < coeffs_.size(); ++d) {
            const auto &c = coeffs_[d];
            if (c == 0) {
                continue;
            }
            const bool neg = c < 0;
            const integer mag = neg ? integer(-c) : c;
            if (out.empty()) {
                out += neg ? "-" : "";
            } else {
                out += neg ? " - " : " + ";
            }
            if (d == 0 || mag != 1) {
                out += mag.str();
            }
            if (d >= 1) {
                out += 'q';
            }
            if (d >= 2) {
                out += '^' + std::to_string(d);
            }
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const QPolynomial &p)
    {
        return os << p.to_string();
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<integer> coeffs_;
};

// Exact binomial coefficient by the multiplicative formula.
inline integer binomial(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    integer r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace meshpat

#endif
