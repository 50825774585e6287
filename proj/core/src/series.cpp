#include "mealy/series.hpp"

#include <algorithm>
#include <utility>

#include "mealy/error.hpp"

namespace mealy {

namespace poly {

Poly trim(Poly a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
    return a;
}

Poly constant(std::uint32_t v, std::uint32_t p) { return trim(Poly{{v % p}}); }

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = (a[i] + b[i]) % p;
    return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = (a[i] + p - b[i]) % p;
    return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::uint64_t> acc(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a.c[i]} * b.c[j]) % p;
    Poly r;
    r.c.assign(acc.begin(), acc.end());
    return trim(std::move(r));
}

Poly scale(const Poly& a, std::uint32_t s, std::uint32_t p) {
    Poly r = a;
    for (auto& v : r.c) v = static_cast<std::uint32_t>(std::uint64_t{v} * s % p);
    return trim(std::move(r));
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    // Extended Euclid.
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        const auto q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) throw PreconditionError("element is not invertible modulo " + std::to_string(p));
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint32_t p) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    Poly r = a, q;
    const auto lead_inv = inverse_mod(b.c.back(), p);
    if (r.degree() >= b.degree()) q.c.assign(static_cast<std::size_t>(r.degree() - b.degree() + 1), 0);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        const auto f = static_cast<std::uint32_t>(std::uint64_t{r.c.back()} * lead_inv % p);
        q.c[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[i + shift] = static_cast<std::uint32_t>((r.c[i + shift] + p - std::uint64_t{f} * b.c[i] % p) % p);
        r = trim(std::move(r));
    }
    return {trim(std::move(q)), r};
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
    while (!b.is_zero()) {
        auto r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return scale(a, inverse_mod(a.c.back(), p), p);
}

Poly determinant(std::vector<std::vector<Poly>> m, std::uint32_t p) {
    const std::size_t n = m.size();
    if (n == 0) return constant(1, p);
    bool negate = false;
    Poly prev = constant(1, p);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return {};
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                auto num = sub(mul(m[i][j], m[k][k], p), mul(m[i][k], m[k][j], p), p);
                auto [q, rem] = divmod(num, prev, p);
                if (!rem.is_zero()) throw Error("fraction-free elimination produced a remainder");
                m[i][j] = std::move(q);
            }
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    return negate ? sub(Poly{}, d, p) : d;
}

std::string to_string(const Poly& a, std::uint32_t p, bool unit_minus) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        const auto v = a.c[i];
        if (v == 0) continue;
        long long shown = v;
        if (2 * v > p || (unit_minus && i > 0 && v == p - 1)) shown = static_cast<long long>(v) - p;
        const bool neg = shown < 0;
        const auto mag = static_cast<unsigned long long>(neg ? -shown : shown);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0 || mag != 1) out += std::to_string(mag);
        if (i >= 1) out += "t";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace poly

RationalSeries::RationalSeries(Poly numerator, Poly denominator, std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw PreconditionError("rational series need a prime modulus");
    numerator = poly::trim(std::move(numerator));
    denominator = poly::trim(std::move(denominator));
    if (denominator.is_zero() || denominator[0] == 0)
        throw PreconditionError("denominator must have a unit constant term");
    auto g = poly::gcd(numerator, denominator, p);
    if (!g.is_zero() && g.degree() > 0) {
        numerator = poly::divmod(numerator, g, p).first;
        denominator = poly::divmod(denominator, g, p).first;
    }
    const auto s = poly::inverse_mod(denominator[0], p);
    num_ = poly::scale(numerator, s, p);
    den_ = numerator.is_zero() ? poly::constant(1, p) : poly::scale(denominator, s, p);
}

std::vector<std::uint32_t> RationalSeries::expand(std::size_t n) const {
    // den(0) = 1, so c_i = num_i - sum_{j >= 1} den_j c_{i-j}.
    std::vector<std::uint32_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t v = num_[i];
        for (std::size_t j = 1; j < den_.c.size() && j <= i; ++j) v += std::uint64_t{p_ - den_.c[j]} * out[i - j];
        out[i] = static_cast<std::uint32_t>(v % p_);
    }
    return out;
}

std::string RationalSeries::to_string() const {
    auto n = poly::to_string(num_, p_);
    if (den_.degree() == 0) return n;
    if (num_.c.size() > 1 && std::count_if(num_.c.begin(), num_.c.end(), [](auto v) { return v != 0; }) > 1)
        n = "(" + n + ")";
    return n + "/(" + poly::to_string(den_, p_, true) + ")";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace mealy
