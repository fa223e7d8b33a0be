#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sharpchar/rational.hpp"

namespace sharpchar {

// 320 decimal digits: enough headroom that approx(digits) can guarantee an
// enclosure of radius 10^-digits for every digits <= 300.
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<320>>;

// Complex enclosure: |true value - (real + i*imag)| <= radius.
struct ComplexInterval {
    BigFloat real;
    BigFloat imag;
    BigFloat radius;
};

namespace detail {
struct CycloRaw; // implementation backdoor, defined in cyclotomic.cpp only
}

// An element of a cyclotomic field, stored as rational coordinates on the
// power basis 1, z, ..., z^(phi(n)-1) of Q(zeta_n) where n is the *minimal*
// conductor of the value.  Every public operation returns a value already
// reduced to this canonical form, so operator== (coordinate comparison) is
// exact value equality.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
    Cyclotomic(long long value) : conductor_(1), coeffs_{Rational(value)} {}
    Cyclotomic(const Rational& value) : conductor_(1), coeffs_{value} {}
    Cyclotomic(const BigInt& value) : conductor_(1), coeffs_{Rational(value)} {}

    // sum of powers[e] * zeta_n^e (exponents indexing the list), canonicalized
    static Cyclotomic from_powers(std::int64_t n, std::span<const Rational> powers);

    std::int64_t conductor() const noexcept { return conductor_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return conductor_ == 1 && coeffs_[0] == 0; }
    bool is_rational() const noexcept { return conductor_ == 1; }
    bool is_integer() const noexcept {
        return conductor_ == 1 && is_integral(coeffs_[0]);
    }
    bool is_real() const;

    Rational as_rational() const; // throws precondition_error if irrational
    BigInt as_integer() const;    // throws precondition_error if not an integer

    // Complex enclosure with radius 10^-digits; 1 <= digits <= 300.
    ComplexInterval approx(int digits) const;

    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a);

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
        return !(a == b);
    }

    // Exact sum_i weights[i] * a[i] * conj(b[i]) with one canonicalization at
    // the end; spans must have equal length.
    static Cyclotomic weighted_dot(std::span<const Rational> weights,
                                   std::span<const Cyclotomic> a,
                                   std::span<const Cyclotomic> b);
    // Exact sum_i weights[i] * values[i].
    static Cyclotomic weighted_sum(std::span<const Rational> weights,
                                   std::span<const Cyclotomic> values);

private:
    friend struct detail::CycloRaw;

    std::int64_t conductor_;
    std::vector<Rational> coeffs_; // length phi(conductor_)
};

// zeta_n^k (any integer k, reduced mod n); n >= 1
Cyclotomic root_of_unity(std::int64_t n, std::int64_t k);

Cyclotomic conjugate(const Cyclotomic& x);
// image under zeta_n -> zeta_n^k; requires gcd(k, conductor) == 1
Cyclotomic galois_image(const Cyclotomic& x, std::int64_t k);
Cyclotomic pow(const Cyclotomic& x, std::int64_t exponent);
Cyclotomic inverse(const Cyclotomic& x); // throws precondition_error on zero

// Exact evaluation of the root-of-unity product identities:
//   full:      prod_{r=1}^{m-1}   (1 - w^r)          = m      (m >= 2)
//   half_odd:  prod_{r=1}^{(m-1)/2} (2 - w^r - w^-r) = m      (odd m >= 5)
//   half_even: prod_{r=1}^{m/2-1}  (2 - w^r - w^-r)  = m/2    (even m >= 8)
// where w = zeta_m.  The product is computed factor by factor; callers check
// it against the closed form.
enum class ProductVariant { full, half_odd, half_even };
Cyclotomic product_identity(std::int64_t m, ProductVariant variant);

// Strict total order used whenever value sets are displayed or serialized:
// by approximate real part, then approximate imaginary part (both on a fixed
// 30-digit grid), with the exact representation as a final tie-break.
bool display_less(const Cyclotomic& a, const Cyclotomic& b);

// Canonical textual form in the value grammar, e.g. "2+z(8)-z(8)^3".
std::string to_expression_string(const Cyclotomic& x);
std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

std::int64_t euler_phi(std::int64_t n);

} // namespace sharpchar
