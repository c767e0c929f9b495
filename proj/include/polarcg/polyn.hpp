#ifndef POLARCG_POLYN_HPP
#define POLARCG_POLYN_HPP

#include <string>
#include <vector>

#include "polarcg/exact.hpp"
#include "polarcg/half_int.hpp"

namespace polarcg::polyn {

using exact::Int;
using exact::RadicalSum;
using exact::Rat;

/// Univariate polynomial with exact rational coefficients, constant term
/// first. The leading coefficient is nonzero unless the polynomial is zero.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rat> coeffs);
    static RationalPoly constant(const Rat& c);
    static RationalPoly monomial(std::size_t degree, const Rat& c);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(std::size_t k) const;

    Rat eval(const Rat& x) const;

    RationalPoly operator+(const RationalPoly& other) const;
    RationalPoly operator-(const RationalPoly& other) const;
    RationalPoly operator*(const RationalPoly& other) const;
    RationalPoly scaled(const Rat& factor) const;

    bool operator==(const RationalPoly& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const RationalPoly& other) const { return !(*this == other); }

    /// Human-readable form for CLI debugging, e.g. "3 - 3*x + 1/2*x^2".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Generalized Laguerre polynomial L_n^alpha in the standard convention
/// (L_0 = 1, orthonormalization integral Gamma(alpha+n+1)/n!). The
/// descending-order form used by the first pipeline carries a global (-1)^n
/// relative to this; call sites that quote that form apply it themselves.
RationalPoly laguerre(long n, long alpha);

/// Jacobi polynomial P_n^(alpha,beta) in z, built from the explicit finite
/// sum; P_n^(alpha,beta)(1) = binom(n + alpha, n).
RationalPoly jacobi(long n, long alpha, long beta);

/// Coefficients c_0..c_r of x^r / r! = sum_i (-1)^i binom(r+alpha, r-i) L_i^alpha(x).
std::vector<Rat> monomial_to_laguerre(long r, long alpha);

/// Exact value of int_0^inf x^p e^(-x) L_{n1}^{a1}(x) L_{n2}^{a2}(x) dx
/// via polynomial expansion and int x^k e^(-x) = k!.
Rat laguerre_weighted_overlap(long n1, long a1, long n2, long a2, long p);

enum class EndpointKind { jacobi_at_one, laguerre_at_zero };

/// Closed-form endpoint values; both equal binom(n + alpha, n).
Rat endpoint_values(EndpointKind kind, long n, long alpha, long beta);

/// Wigner small-d matrix element in factored form:
///   d^j_{m,mp}(theta) = prefactor * cos(theta/2)^cos_half_power
///                        * sin(theta/2)^sin_half_power * jacobi_part(cos theta)
/// where (j, m, mp) here are the canonical-sector labels (m - mp >= 0 and
/// m + mp >= 0); construction folds the symmetry signs for other sectors
/// into `prefactor`. Satisfies d^j_{m,mp}(0) = delta_{m,mp}.
struct SmallD {
    HalfInt j, m, mp;
    RadicalSum prefactor;
    long cos_half_power = 0;
    long sin_half_power = 0;
    RationalPoly jacobi_part;
};

SmallD wigner_small_d(HalfInt j, HalfInt m, HalfInt mp);

/// d^j_{m,mp}(theta)^2 expanded as an exact polynomial in c = cos(theta),
/// via cos^2(theta/2) = (1+c)/2 and sin^2(theta/2) = (1-c)/2.
RationalPoly small_d_squared_in_cos(const SmallD& d);

} // namespace polarcg::polyn

#endif
