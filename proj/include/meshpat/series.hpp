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

#ifndef MESHPAT_SERIES_HPP
#define MESHPAT_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <meshpat/error.hpp>
#include <meshpat/qpoly.hpp>

namespace meshpat
{

/// Power series in x truncated after x^order, with coefficients in Z[q].
///
/// Exactly order()+1 coefficients are stored. Binary operations work at the
/// smaller of the two orders, so a result never claims more precision than
/// its inputs carry.
class Series
{
public:
    explicit Series(std::size_t order = 0) : terms_(order + 1) {}

    // Missing trailing terms are zero; extra terms are dropped.
    Series(std::size_t order, std::vector<QPolynomial> terms) : terms_(std::move(terms))
    {
        terms_.resize(order + 1);
    }

    static Series constant(QPolynomial c, std::size_t order)
    {
        Series s(order);
        s.terms_[0] = std::move(c);
        return s;
    }

    // c * x^power
    static Series monomial(QPolynomial c, std::size_t power, std::size_t order)
    {
        Series s(order);
        if (power <= order) {
            s.terms_[power] = std::move(c);
        }
        return s;
    }

    static Series x(std::size_t order)
    {
        return monomial(1, 1, order);
    }

    static Series from_integers(const std::vector<integer> &coeffs, std::size_t order)
    {
        Series s(order);
        for (std::size_t n = 0; n < coeffs.size() && n <= order; ++n) {
            s.terms_[n] = QPolynomial(coeffs[n]);
        }
        return s;
    }

    std::size_t order() const noexcept
    {
        return terms_.size() - 1;
    }

    const QPolynomial &operator[](std::size_t n) const
    {
        return terms_.at(n);
    }

    QPolynomial &operator[](std::size_t n)
    {
        return terms_.at(n);
    }

    const std::vector<QPolynomial> &terms() const noexcept
    {
        return terms_;
    }

    bool is_zero() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const QPolynomial &c) { return c.is_zero(); });
    }

    Series truncated(std::size_t order) const
    {
        return Series(std::min(order, this->order()), terms_);
    }

    friend Series operator+(const Series &a, const Series &b)
    {
        Series r(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= r.order(); ++n) {
            r.terms_[n] = a.terms_[n] + b.terms_[n];
        }
        return r;
    }

    friend Series operator-(const Series &a, const Series &b)
    {
        Series r(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= r.order(); ++n) {
            r.terms_[n] = a.terms_[n] - b.terms_[n];
        }
        return r;
    }

    friend Series operator-(Series a)
    {
        for (auto &t : a.terms_) {
            t = -t;
        }
        return a;
    }

    // Cauchy product, truncated.
    friend Series operator*(const Series &a, const Series &b)
    {
        Series r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i) {
            if (a.terms_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j <= r.order(); ++j) {
                if (!b.terms_[j].is_zero()) {
                    r.terms_[i + j] += a.terms_[i] * b.terms_[j];
                }
            }
        }
        return r;
    }

    // Coefficient-wise scaling by a q-polynomial.
    friend Series operator*(Series a, const QPolynomial &c)
    {
        for (auto &t : a.terms_) {
            t *= c;
        }
        return a;
    }

    friend Series operator*(const QPolynomial &c, Series a)
    {
        return std::move(a) * c;
    }

    friend bool operator==(const Series &, const Series &) = default;

    std::string to_string() const
    {
        std::string out;
        for (std::size_t n = 0; n <= order(); ++n) {
            if (terms_[n].is_zero()) {
                continue;
            }
            if (!out.empty()) {
                out += " + ";
            }
            out += '(' + terms_[n].to_string() + ")x^" + std::to_string(n);
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream &operator<<(std::ostream &os, const Series &s)
    {
        return os << s.to_string();
    }

    // {"order":N,"terms":[[c0,c1,...],...]} with coefficients as decimal strings.
    nlohmann::json to_json() const
    {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto &t : terms_) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto &c : t.coeffs()) {
                row.push_back(c.str());
            }
            terms.push_back(std::move(row));
        }
        return {{"order", order()}, {"terms", std::move(terms)}};
    }

    static Series from_json(const nlohmann::json &j)
    {
        try {
            const auto order = j.at("order").get<std::size_t>();
            const auto &rows = j.at("terms");
            if (rows.size() != order + 1) {
                throw parse_error("series JSON must carry exactly order+1 terms");
            }
            std::vector<QPolynomial> terms;
            for (const auto &row : rows) {
                std::vector<integer> cs;
                for (const auto &c : row) {
                    cs.emplace_back(c.get<std::string>());
                }
                terms.emplace_back(std::move(cs));
            }
            return Series(order, std::move(terms));
        } catch (const nlohmann::json::exception &e) {
            throw parse_error(std::string("malformed series JSON: ") + e.what());
        } catch (const std::runtime_error &e) {
            throw parse_error(std::string("malformed series coefficient: ") + e.what());
        }
    }

private:
    std::vector<QPolynomial> terms_;
};

// Multiplicative inverse. The constant term must be the constant 1 or -1.
inline Series invert(const Series &a)
{
    const auto &c0 = a[0];
    if (!(c0 == QPolynomial(1) || c0 == QPolynomial(-1))) {
        throw precondition_error("series inversion needs constant term +1 or -1, got " + c0.to_string());
    }
    // b_0 = c0 and b_n = -c0 * sum_{i=1..n} a_i b_{n-i}, using c0^-1 = c0.
    Series b(a.order());
    b[0] = c0;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        QPolynomial acc;
        for (std::size_t i = 1; i <= n; ++i) {
            if (!a[i].is_zero()) {
                acc += a[i] * b[n - i];
            }
        }
        b[n] = -(acc * c0);
    }
    return b;
}

inline Series operator/(const Series &a, const Series &b)
{
    return a * invert(b);
}

// x^k * a, keeping the order of a.
inline Series shift(const Series &a, std::size_t k)
{
    Series r(a.order());
    for (std::size_t n = k; n <= a.order(); ++n) {
        r[n] = a[n - k];
    }
    return r;
}

// Every q^d becomes q^(d*m).
inline Series subst_q_power(const Series &a, std::size_t m)
{
    if (m == 0) {
        throw precondition_error("q-power substitution requires m >= 1");
    }
    Series r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) {
        r[n] = a[n].subst_power(m);
    }
    return r;
}

// a(qx): the x^n coefficient is multiplied by q^n.
inline Series subst_x_by_qx(const Series &a)
{
    Series r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) {
        r[n] = a[n] * QPolynomial::monomial(1, n);
    }
    return r;
}

inline std::vector<integer> eval_q(const Series &a, const integer &v)
{
    std::vector<integer> out;
    out.reserve(a.order() + 1);
    for (const auto &t : a.terms()) {
        out.push_back(t.eval(v));
    }
    return out;
}

/// F(x) = sum n! x^n, the generating function of all permutations.
inline Series factorial_series(std::size_t order)
{
    Series s(order);
    integer f = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            f *= n;
        }
        s[n] = QPolynomial(f);
    }
    return s;
}

/// 1 + sum_{n>=1} q(q+1)...(q+n-1) x^n: unsigned Stirling numbers of the
/// first kind, row by row.
inline Series stirling_first_kind_series(std::size_t order)
{
    Series s(order);
    QPolynomial rising = 1;
    s[0] = rising;
    for (std::size_t n = 1; n <= order; ++n) {
        rising *= QPolynomial(std::vector<integer>{integer(n - 1), integer(1)});
        s[n] = rising;
    }
    return s;
}

/// sum_{i>=k} x^i prod_{j=k..i} B(x, q^C(j,k)), truncated at `order`.
inline Series staircase_sum(const Series &b, std::size_t k, std::size_t order)
{
    if (k == 0) {
        throw precondition_error("staircase_sum requires k >= 1");
    }
    const auto base = b.truncated(order);
    Series sum(base.order());
    Series product = Series::constant(1, base.order());
    for (std::size_t i = k; i <= base.order(); ++i) {
        const auto m = binomial(i, k);
        product = product * subst_q_power(base, m.convert_to<std::size_t>());
        sum = sum + shift(product, i);
    }
    return sum;
}

} // namespace meshpat

#endif
