#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mealy {

/// Dense polynomial over Z_p, coefficient i is the coefficient of t^i.
/// Kept trimmed: no trailing zero coefficients (the zero polynomial is empty).
struct Poly {
    std::vector<std::uint32_t> c;

    bool is_zero() const noexcept { return c.empty(); }
    long degree() const noexcept { return static_cast<long>(c.size()) - 1; }
    std::uint32_t operator[](std::size_t i) const noexcept { return i < c.size() ? c[i] : 0; }
    friend bool operator==(const Poly&, const Poly&) = default;
};

namespace poly {
Poly trim(Poly a);
Poly constant(std::uint32_t v, std::uint32_t p);
Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly scale(const Poly& a, std::uint32_t s, std::uint32_t p);
/// Quotient and remainder; p must be prime and b nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint32_t p);
/// Monic gcd.
Poly gcd(Poly a, Poly b, std::uint32_t p);
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
/// Determinant of a square polynomial matrix by fraction-free elimination.
Poly determinant(std::vector<std::vector<Poly>> m, std::uint32_t p);
/// Coefficients are shown as least absolute residues (ties positive); with
/// `unit_minus` every higher coefficient p-1 is shown as a minus sign, so that
/// 1 + t over Z_2 reads 1 - t.
std::string to_string(const Poly& a, std::uint32_t p, bool unit_minus = false);
} // namespace poly

/**
 * Formal power series over Z_p given as numerator / denominator with
 * denominator(0) = 1, in lowest terms. Equal series have equal representations.
 */
class RationalSeries {
public:
    RationalSeries(Poly numerator, Poly denominator, std::uint32_t p);

    const Poly& numerator() const noexcept { return num_; }
    const Poly& denominator() const noexcept { return den_; }
    std::uint32_t modulus() const noexcept { return p_; }

    /// The first n coefficients of the expansion (t^0 first).
    std::vector<std::uint32_t> expand(std::size_t n) const;
    /// e.g. "t/(1 - t)", "1", "0".
    std::string to_string() const;

    friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

private:
    Poly num_, den_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

} // namespace mealy
