#include "sharpchar/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include <boost/math/constants/constants.hpp>

#include "sharpchar/errors.hpp"

namespace sharpchar {
namespace {

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// ----- integer polynomials, used only to compute cyclotomic polynomials -----

using ZPoly = std::vector<BigInt>; // little-endian coefficients

// num / den for monic den; the division must be exact
ZPoly divide_exact(ZPoly num, const ZPoly& den) {
    const std::size_t dd = den.size() - 1;
    ZPoly quot(num.size() - dd, BigInt(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt c = num[k + dd];
        if (c == 0) continue;
        quot[k] = c;
        for (std::size_t i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    for (const BigInt& c : num)
        if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

// ----- per-conductor context: minimal polynomial, reduced powers, roots -----

struct FieldContext {
    std::int64_t n = 1;
    std::int64_t phi = 1;
    std::vector<Rational> min_poly;              // Phi_n, monic, length phi+1
    std::vector<std::vector<Rational>> zeta_pow; // zeta_n^e reduced, e in [0, n)

    mutable std::once_flag roots_once;
    mutable std::vector<std::pair<BigFloat, BigFloat>> roots; // (re, im) of zeta_n^e

    const std::pair<BigFloat, BigFloat>& root(std::int64_t e) const {
        std::call_once(roots_once, [this] {
            roots.resize(static_cast<std::size_t>(n));
            const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
            for (std::int64_t k = 0; k < n; ++k) {
                const BigFloat angle = two_pi * k / n;
                roots[static_cast<std::size_t>(k)] = {cos(angle), sin(angle)};
            }
        });
        return roots[static_cast<std::size_t>(e)];
    }
};

class FieldRegistry {
public:
    static FieldRegistry& instance() {
        static FieldRegistry reg;
        return reg;
    }

    const FieldContext& get(std::int64_t n) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = fields_.find(n);
        if (it != fields_.end()) return *it->second;
        auto ctx = std::make_unique<FieldContext>();
        build(*ctx, n);
        return *fields_.emplace(n, std::move(ctx)).first->second;
    }

private:
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, filled in bottom-up so
    // every divisor is already memoized when needed.
    const ZPoly& cyclotomic_poly(std::int64_t n) {
        auto it = phis_.find(n);
        if (it != phis_.end()) return it->second;
        std::vector<std::int64_t> divs;
        for (std::int64_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
        std::sort(divs.begin(), divs.end());
        for (std::int64_t d : divs) {
            if (phis_.count(d)) continue;
            ZPoly poly(static_cast<std::size_t>(d) + 1, BigInt(0));
            poly[0] = -1;
            poly.back() = 1; // x^d - 1
            for (std::int64_t e : divs) {
                if (e != d && d % e == 0) poly = divide_exact(std::move(poly), phis_.at(e));
            }
            phis_.emplace(d, std::move(poly));
        }
        return phis_.at(n);
    }

    void build(FieldContext& ctx, std::int64_t n) {
        ctx.n = n;
        const ZPoly& poly = cyclotomic_poly(n);
        ctx.phi = static_cast<std::int64_t>(poly.size()) - 1;
        ctx.min_poly.reserve(poly.size());
        for (const BigInt& c : poly) ctx.min_poly.emplace_back(c);

        // zeta^e for e < phi is a basis vector; each later power is the
        // previous one shifted, with the overflow folded back through
        // x^phi = -(Phi_n - x^phi).
        const std::size_t phi = static_cast<std::size_t>(ctx.phi);
        ctx.zeta_pow.assign(static_cast<std::size_t>(n), {});
        for (std::size_t e = 0; e < phi; ++e) {
            std::vector<Rational> row(phi, Rational(0));
            row[e] = 1;
            ctx.zeta_pow[e] = std::move(row);
        }
        for (std::size_t e = phi; e < static_cast<std::size_t>(n); ++e) {
            const std::vector<Rational>& prev = ctx.zeta_pow[e - 1];
            std::vector<Rational> row(phi, Rational(0));
            for (std::size_t i = 1; i < phi; ++i) row[i] = prev[i - 1];
            const Rational top = prev[phi - 1];
            if (top != 0)
                for (std::size_t i = 0; i < phi; ++i) row[i] -= top * ctx.min_poly[i];
            ctx.zeta_pow[e] = std::move(row);
        }
    }

    std::mutex mutex_;
    std::map<std::int64_t, std::unique_ptr<FieldContext>> fields_;
    std::map<std::int64_t, ZPoly> phis_;
};

const FieldContext& ctx_of(std::int64_t n) { return FieldRegistry::instance().get(n); }

// ----- raw coordinate arithmetic at a fixed conductor -----

using Coeffs = std::vector<Rational>;

void add_scaled(Coeffs& acc, const Rational& w, const Coeffs& row) {
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) acc[i] += w * row[i];
}

// coordinates of (xc, xv) re-expressed at conductor C.n; requires xc | C.n
Coeffs embed(std::int64_t xc, const Coeffs& xv, const FieldContext& C) {
    if (xc == C.n) return xv;
    Coeffs out(static_cast<std::size_t>(C.phi), Rational(0));
    const std::int64_t stride = C.n / xc;
    for (std::size_t i = 0; i < xv.size(); ++i) {
        if (xv[i] == 0) continue;
        add_scaled(out, xv[i], C.zeta_pow[(static_cast<std::int64_t>(i) * stride) % C.n]);
    }
    return out;
}

Coeffs mul_raw(const Coeffs& a, const Coeffs& b, const FieldContext& C) {
    const std::size_t phi = static_cast<std::size_t>(C.phi);
    Coeffs conv(2 * phi - 1, Rational(0));
    for (std::size_t i = 0; i < phi; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (b[j] == 0) continue;
            conv[i + j] += a[i] * b[j];
        }
    }
    Coeffs out(conv.begin(), conv.begin() + static_cast<std::ptrdiff_t>(phi));
    for (std::size_t e = phi; e < conv.size(); ++e) {
        if (conv[e] == 0) continue;
        add_scaled(out, conv[e], C.zeta_pow[static_cast<std::int64_t>(e) % C.n]);
    }
    return out;
}

// image under zeta -> zeta^k
Coeffs galois_raw(const Coeffs& v, std::int64_t k, const FieldContext& C) {
    Coeffs out(static_cast<std::size_t>(C.phi), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        add_scaled(out, v[i], C.zeta_pow[(static_cast<std::int64_t>(i) * k) % C.n]);
    }
    return out;
}

// Generator of ker((Z/n)* -> (Z/d)*) for n = p*d, p an odd prime with p not
// dividing d.  The kernel maps isomorphically onto (Z/p)* by reduction mod p,
// so lift a primitive root mod p to something congruent to 1 mod d.
std::int64_t kernel_generator(std::int64_t p, std::int64_t d) {
    auto order_mod_p = [p](std::int64_t a) {
        std::int64_t o = 1, x = a % p;
        while (x != 1) {
            x = (x * a) % p;
            ++o;
        }
        return o;
    };
    std::int64_t r = 2;
    while (order_mod_p(r) != p - 1) ++r;
    for (std::int64_t k = 1 + d;; k += d)
        if (k % p == r) return k;
}

// Solve for the coordinates of v on the embedded power basis of Q(zeta_d)
// inside Q(zeta_n); only called once membership is established, so the
// system is consistent.
Coeffs rewrite_to_subfield(const Coeffs& v, const FieldContext& Cn, std::int64_t d) {
    const FieldContext& Cd = ctx_of(d);
    const std::size_t rows = static_cast<std::size_t>(Cn.phi);
    const std::size_t cols = static_cast<std::size_t>(Cd.phi);
    const std::int64_t stride = Cn.n / d;

    std::vector<Coeffs> m(rows, Coeffs(cols + 1, Rational(0)));
    for (std::size_t j = 0; j < cols; ++j) {
        const Coeffs& col = Cn.zeta_pow[(static_cast<std::int64_t>(j) * stride) % Cn.n];
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = col[i];
    }
    for (std::size_t i = 0; i < rows; ++i) m[i][cols] = v[i];

    std::vector<std::size_t> pivot_row(cols);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        std::size_t r = rank;
        while (r < rows && m[r][j] == 0) ++r;
        if (r == rows) throw std::logic_error("rewrite: basis is singular");
        std::swap(m[r], m[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][j] == 0) continue;
            const Rational f = m[i][j] / m[rank][j];
            for (std::size_t k = j; k <= cols; ++k) m[i][k] -= f * m[rank][k];
        }
        pivot_row[j] = rank++;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (m[i][cols] != 0) throw std::logic_error("rewrite: inconsistent system");

    Coeffs y(cols, Rational(0));
    for (std::size_t j = 0; j < cols; ++j)
        y[j] = m[pivot_row[j]][cols] / m[pivot_row[j]][j];
    return y;
}

} // namespace

namespace detail {
struct CycloRaw {
    // trusted constructor: (n, v) must already be canonical
    static Cyclotomic make(std::int64_t n, std::vector<Rational> v) {
        Cyclotomic x;
        x.conductor_ = n;
        x.coeffs_ = std::move(v);
        return x;
    }
};
} // namespace detail

namespace {

Cyclotomic make_raw(std::int64_t n, Coeffs v) {
    return detail::CycloRaw::make(n, std::move(v));
}

// Reduce (n, v) to minimal conductor.  For each prime p | n we test whether
// the value lies in Q(zeta_{n/p}) and rewrite if so:
//   - p^2 | n: the subfield's power basis sits at coordinate stride p, so
//     membership is a support check and the rewrite a subsample;
//   - p || n: membership is invariance under a generator of the (cyclic)
//     relative Galois group (trivial for p = 2), the rewrite an exact solve.
// The minimal conductor divides every intermediate conductor, so the order
// in which primes are tried cannot change the result.
Cyclotomic canonicalize(std::int64_t n, Coeffs v) {
    for (;;) {
        bool tail_zero = true;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] != 0) {
                tail_zero = false;
                break;
            }
        if (n == 1 || tail_zero) return make_raw(1, {v[0]});

        bool descended = false;
        for (std::int64_t p : prime_divisors(n)) {
            const std::int64_t d = n / p;
            if (d % p == 0) {
                bool member = true;
                for (std::size_t i = 0; i < v.size() && member; ++i)
                    if (v[i] != 0 && static_cast<std::int64_t>(i) % p != 0) member = false;
                if (!member) continue;
                Coeffs w(v.size() / static_cast<std::size_t>(p));
                for (std::size_t i = 0; i < w.size(); ++i)
                    w[i] = v[i * static_cast<std::size_t>(p)];
                v = std::move(w);
            } else {
                const FieldContext& C = ctx_of(n);
                if (p != 2) { // for p = 2, d odd: Q(zeta_n) = Q(zeta_d) already
                    const std::int64_t g = kernel_generator(p, d);
                    if (galois_raw(v, g, C) != v) continue;
                }
                v = rewrite_to_subfield(v, C, d);
            }
            n = d;
            descended = true;
            break;
        }
        if (!descended) return make_raw(n, std::move(v));
    }
}

// ----- rational polynomial arithmetic for inversion mod Phi_n -----

using QPoly = std::vector<Rational>; // little-endian, trailing zeros trimmed

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

std::pair<QPoly, QPoly> poly_divmod(QPoly num, const QPoly& den) {
    if (num.size() < den.size()) {
        trim(num);
        return {{}, std::move(num)};
    }
    QPoly quot(num.size() - den.size() + 1, Rational(0));
    const Rational& lead = den.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational c = num[k + den.size() - 1] / lead;
        if (c == 0) continue;
        quot[k] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
    }
    trim(num);
    trim(quot);
    return {std::move(quot), std::move(num)};
}

// u with u*a == 1 (mod m); m irreducible, a nonzero of degree < deg m
QPoly poly_inverse_mod(QPoly a, QPoly m) {
    QPoly r0 = std::move(m), r1 = std::move(a);
    QPoly u0, u1 = {Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(std::move(r0), r1);
        QPoly u2 = poly_sub(std::move(u0), poly_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.size() != 1) throw std::logic_error("inverse: gcd is not a unit");
    for (Rational& c : u0) c /= r0[0];
    return u0;
}

} // namespace

// ----- public interface -----

Cyclotomic Cyclotomic::from_powers(std::int64_t n, std::span<const Rational> powers) {
    if (n < 1) throw precondition_error("from_powers: order must be positive");
    const FieldContext& C = ctx_of(n);
    Coeffs acc(static_cast<std::size_t>(C.phi), Rational(0));
    for (std::size_t e = 0; e < powers.size(); ++e) {
        if (powers[e] == 0) continue;
        add_scaled(acc, powers[e], C.zeta_pow[static_cast<std::int64_t>(e) % n]);
    }
    return canonicalize(n, std::move(acc));
}

bool Cyclotomic::is_real() const {
    if (is_rational()) return true;
    return conjugate(*this) == *this;
}

Rational Cyclotomic::as_rational() const {
    if (!is_rational()) throw precondition_error("as_rational: value is irrational");
    return coeffs_[0];
}

BigInt Cyclotomic::as_integer() const {
    if (!is_integer()) throw precondition_error("as_integer: value is not a rational integer");
    return numerator(coeffs_[0]);
}

ComplexInterval Cyclotomic::approx(int digits) const {
    if (digits < 1 || digits > 300)
        throw precondition_error("approx: digits must be between 1 and 300");
    const FieldContext& C = ctx_of(conductor_);
    BigFloat re(0), im(0), magnitude(0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const BigFloat q = static_cast<BigFloat>(coeffs_[i]);
        const auto& [c, s] = C.root(static_cast<std::int64_t>(i));
        re += q * c;
        im += q * s;
        magnitude += abs(q);
    }
    ComplexInterval out;
    out.real = re;
    out.imag = im;
    out.radius = pow(BigFloat(10), -digits);
    // The 320-digit working precision leaves the accumulated rounding error
    // at ~|coeffs|*1e-315, far below any permitted radius for sane inputs.
    const BigFloat err = (magnitude + 1) * (static_cast<int>(coeffs_.size()) + 2) *
                         pow(BigFloat(10), -315);
    if (err * 2 > out.radius)
        throw precondition_error("approx: coefficients too large for requested precision");
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_rational() && b.is_rational())
        return Cyclotomic(a.coeffs_[0] + b.coeffs_[0]);
    const std::int64_t n = std::lcm(a.conductor_, b.conductor_);
    const FieldContext& C = ctx_of(n);
    Coeffs va = embed(a.conductor_, a.coeffs_, C);
    const Coeffs vb = embed(b.conductor_, b.coeffs_, C);
    for (std::size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
    return canonicalize(n, std::move(va));
}

Cyclotomic operator-(const Cyclotomic& a) {
    Coeffs v = a.coeffs_;
    for (Rational& c : v) c = -c;
    return detail::CycloRaw::make(a.conductor_, std::move(v));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_rational() || b.is_rational()) {
        const Cyclotomic& scalar = a.is_rational() ? a : b;
        const Cyclotomic& value = a.is_rational() ? b : a;
        const Rational& q = scalar.coeffs_[0];
        if (q == 0) return Cyclotomic();
        Coeffs v = value.coeffs_;
        for (Rational& c : v) c *= q; // nonzero rational scale keeps the conductor
        return detail::CycloRaw::make(value.conductor_, std::move(v));
    }
    const std::int64_t n = std::lcm(a.conductor_, b.conductor_);
    const FieldContext& C = ctx_of(n);
    const Coeffs va = embed(a.conductor_, a.coeffs_, C);
    const Coeffs vb = embed(b.conductor_, b.coeffs_, C);
    return canonicalize(n, mul_raw(va, vb, C));
}

Cyclotomic Cyclotomic::weighted_dot(std::span<const Rational> weights,
                                    std::span<const Cyclotomic> a,
                                    std::span<const Cyclotomic> b) {
    if (weights.size() != a.size() || a.size() != b.size())
        throw precondition_error("weighted_dot: span lengths differ");
    std::int64_t n = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (weights[i] == 0) continue;
        n = std::lcm(n, std::lcm(a[i].conductor_, b[i].conductor_));
    }
    const FieldContext& C = ctx_of(n);
    Coeffs acc(static_cast<std::size_t>(C.phi), Rational(0));
    Rational racc(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (weights[i] == 0 || a[i].is_zero() || b[i].is_zero()) continue;
        if (a[i].is_rational() && b[i].is_rational()) {
            racc += weights[i] * a[i].coeffs_[0] * b[i].coeffs_[0];
            continue;
        }
        Coeffs va = embed(a[i].conductor_, a[i].coeffs_, C);
        Coeffs vb = embed(b[i].conductor_, b[i].coeffs_, C);
        if (C.n > 1) vb = galois_raw(vb, C.n - 1, C); // complex conjugate
        add_scaled(acc, weights[i], mul_raw(va, vb, C));
    }
    acc[0] += racc;
    return canonicalize(n, std::move(acc));
}

Cyclotomic Cyclotomic::weighted_sum(std::span<const Rational> weights,
                                    std::span<const Cyclotomic> values) {
    if (weights.size() != values.size())
        throw precondition_error("weighted_sum: span lengths differ");
    std::int64_t n = 1;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (weights[i] != 0) n = std::lcm(n, values[i].conductor_);
    const FieldContext& C = ctx_of(n);
    Coeffs acc(static_cast<std::size_t>(C.phi), Rational(0));
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (weights[i] == 0 || values[i].is_zero()) continue;
        if (values[i].is_rational()) {
            acc[0] += weights[i] * values[i].coeffs_[0];
            continue;
        }
        const Coeffs v = embed(values[i].conductor_, values[i].coeffs_, C);
        add_scaled(acc, weights[i], v);
    }
    return canonicalize(n, std::move(acc));
}

Cyclotomic root_of_unity(std::int64_t n, std::int64_t k) {
    if (n < 1) throw precondition_error("root_of_unity: order must be positive");
    const std::int64_t kk = ((k % n) + n) % n;
    const FieldContext& C = ctx_of(n);
    return canonicalize(n, C.zeta_pow[kk]);
}

Cyclotomic conjugate(const Cyclotomic& x) {
    if (x.is_rational()) return x;
    const FieldContext& C = ctx_of(x.conductor());
    // an automorphism preserves the minimal conductor, so no descent needed
    return detail::CycloRaw::make(x.conductor(), galois_raw(x.coefficients(), C.n - 1, C));
}

Cyclotomic galois_image(const Cyclotomic& x, std::int64_t k) {
    const std::int64_t n = x.conductor();
    const std::int64_t kk = ((k % n) + n) % n;
    if (std::gcd(kk, n) != 1)
        throw precondition_error("galois_image: exponent not coprime to the conductor");
    if (n == 1) return x;
    const FieldContext& C = ctx_of(n);
    return detail::CycloRaw::make(n, galois_raw(x.coefficients(), kk, C));
}

Cyclotomic pow(const Cyclotomic& x, std::int64_t exponent) {
    if (exponent == 0) return Cyclotomic(1);
    Cyclotomic base = exponent < 0 ? inverse(x) : x;
    std::uint64_t k = exponent < 0 ? 0ULL - static_cast<std::uint64_t>(exponent)
                                   : static_cast<std::uint64_t>(exponent);
    Cyclotomic acc(1);
    while (k != 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

Cyclotomic inverse(const Cyclotomic& x) {
    if (x.is_zero()) throw precondition_error("inverse: value is zero");
    if (x.is_rational()) return Cyclotomic(Rational(1) / x.as_rational());
    const FieldContext& C = ctx_of(x.conductor());
    QPoly a = x.coefficients();
    trim(a);
    QPoly u = poly_inverse_mod(std::move(a), C.min_poly);
    u.resize(static_cast<std::size_t>(C.phi), Rational(0));
    return canonicalize(x.conductor(), std::move(u));
}

Cyclotomic product_identity(std::int64_t m, ProductVariant variant) {
    switch (variant) {
    case ProductVariant::full:
        if (m < 2) throw precondition_error("product_identity(full): requires m >= 2");
        break;
    case ProductVariant::half_odd:
        if (m < 5 || m % 2 == 0)
            throw precondition_error("product_identity(half_odd): requires odd m >= 5");
        break;
    case ProductVariant::half_even:
        if (m < 8 || m % 2 != 0)
            throw precondition_error("product_identity(half_even): requires even m >= 8");
        break;
    }
    const FieldContext& C = ctx_of(m);
    const std::size_t phi = static_cast<std::size_t>(C.phi);
    Coeffs acc(phi, Rational(0));
    acc[0] = 1;
    const std::int64_t limit =
        variant == ProductVariant::full ? m - 1 : (variant == ProductVariant::half_odd ? (m - 1) / 2 : m / 2 - 1);
    for (std::int64_t r = 1; r <= limit; ++r) {
        Coeffs factor(phi, Rational(0));
        if (variant == ProductVariant::full) {
            factor[0] = 1; // 1 - w^r
            add_scaled(factor, Rational(-1), C.zeta_pow[r]);
        } else {
            factor[0] = 2; // 2 - w^r - w^{-r}
            add_scaled(factor, Rational(-1), C.zeta_pow[r]);
            add_scaled(factor, Rational(-1), C.zeta_pow[m - r]);
        }
        acc = mul_raw(acc, factor, C);
    }
    return canonicalize(m, std::move(acc));
}

namespace {

// floor(re * 10^30), floor(im * 10^30): a fixed grid fine enough that the
// display order reads as "by real part, then imaginary part" for every value
// that appears in practice, yet exactly computable from the enclosure.
std::pair<BigInt, BigInt> display_key(const Cyclotomic& x) {
    static const BigFloat scale = pow(BigFloat(10), 30);
    const ComplexInterval ci = x.approx(40);
    return {floor(ci.real * scale).convert_to<BigInt>(),
            floor(ci.imag * scale).convert_to<BigInt>()};
}

} // namespace

bool display_less(const Cyclotomic& a, const Cyclotomic& b) {
    if (a == b) return false;
    const auto ka = display_key(a);
    const auto kb = display_key(b);
    if (ka != kb) return ka < kb;
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
    return a.coefficients() < b.coefficients();
}

std::string to_expression_string(const Cyclotomic& x) {
    if (x.is_rational()) return format_rational(x.coefficients()[0]);
    std::ostringstream os;
    bool first = true;
    const auto& v = x.coefficients();
    for (std::size_t e = 0; e < v.size(); ++e) {
        if (v[e] == 0) continue;
        const bool neg = v[e] < 0;
        const bool leading = first;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? '-' : '+');
        }
        const Rational mag = neg ? Rational(-v[e]) : v[e];
        if (e == 0) {
            os << format_rational(mag);
            continue;
        }
        // A leading "-z(n)^e" would re-parse as (-z(n))^e because '-' is an
        // atom prefix in the grammar; keep the sign on an explicit
        // coefficient so even exponents survive the round trip.
        if (mag != 1 || (leading && neg && e > 1)) os << format_rational(mag) << '*';
        os << "z(" << x.conductor() << ')';
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) {
    return os << to_expression_string(x);
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw precondition_error("euler_phi: argument must be positive");
    std::int64_t result = n, m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

} // namespace sharpchar
