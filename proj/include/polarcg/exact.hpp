#ifndef POLARCG_EXACT_HPP
#define POLARCG_EXACT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

#include "polarcg/errors.hpp"

namespace polarcg::exact {

using Int = mpz_class;
using Rat = mpq_class;

/// n! as a big integer. Results are memoized; negative n is a domain error.
Int factorial(long n);

/// binom(n, k) for n >= 0; zero when k < 0 or k > n.
Int binomial(long n, long k);

/// Generalized binomial with rational (possibly negative) top argument:
/// binom(a, k) = a(a-1)...(a-k+1)/k!.
Rat binomial_general(const Rat& a, long k);

/// Rising factorial a(a+1)...(a+n-1); pochhammer(a, 0) = 1.
Rat pochhammer(const Rat& a, long n);

/// num/den in canonical form (mpq_class's two-argument constructor does not
/// canonicalize, which breaks equality tests).
inline Rat frac(const Int& num, const Int& den) {
    Rat value(num, den);
    value.canonicalize();
    return value;
}

struct RatLess {
    bool operator()(const Rat& a, const Rat& b) const { return cmp(a, b) < 0; }
};

/// Finite sum of coefficient * sqrt(radicand). Each stored radicand is the
/// canonical squarefree positive integer representing its square class over
/// Q, so distinct keys are linearly independent radicals and map equality is
/// an exact zero/equality test. The text rendering re-folds the squarefree
/// part of a coefficient denominator under the root, which is where the
/// interchange format's fractional radicands like sqrt(1/3) come from.
class RadicalSum {
public:
    using TermMap = std::map<Rat, Rat, RatLess>;

    RadicalSum() = default;
    /// A plain rational value (radicand 1).
    explicit RadicalSum(const Rat& rational);

    static RadicalSum zero() { return RadicalSum{}; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// Number of distinct radicands present.
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// -1, 0, +1. Defined for sums of at most one term and for multi-term
    /// sums of uniform coefficient sign; throws internal_error otherwise
    /// (no such value arises from coupling coefficients).
    int sign() const;

    /// Exact square. For single-term sums this is a plain rational.
    RadicalSum squared() const;
    /// The rational this sum equals; internal_error if it is not rational.
    Rat as_rational() const;

    RadicalSum operator-() const;
    RadicalSum& operator+=(const RadicalSum& other);
    RadicalSum& operator-=(const RadicalSum& other);
    RadicalSum& operator*=(const RadicalSum& other);
    /// Scale by an exact rational.
    RadicalSum& operator*=(const Rat& factor);

    /// Multiplicative inverse, defined for single-term sums only.
    RadicalSum inverse() const;

    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
    friend RadicalSum operator*(RadicalSum a, const RadicalSum& b) { return a *= b; }
    friend RadicalSum operator*(RadicalSum a, const Rat& q) { return a *= q; }
    friend RadicalSum operator*(const Rat& q, RadicalSum a) { return a *= q; }

    bool operator==(const RadicalSum& other) const { return terms_ == other.terms_; }
    bool operator!=(const RadicalSum& other) const { return !(*this == other); }

    /// Floating approximation, display only.
    double to_double() const;

    /// Inserts coeff * sqrt(radicand), normalizing the radicand. Used by the
    /// constructors and arithmetic; radicand must be > 0 unless coeff == 0.
    void add_term(const Rat& coeff, const Rat& radicand);

private:
    /// Inserts a term whose radicand is already canonical squarefree.
    void insert_canonical(const Rat& coeff, const Rat& radicand);
    friend RadicalSum sqrt_normalize(const Rat& r);

    TermMap terms_;
};

/// Exact square-root normalization: returns q*sqrt(s) with s the canonical
/// squarefree rational and q^2 s = r. r < 0 is a domain error.
RadicalSum sqrt_normalize(const Rat& r);

/// sqrt(a/b) of a nonnegative rational as (num_sqfree, den_sqfree, coeff):
/// helper exposed for tests; sqrt_normalize is the public entry point.
void squarefree_decompose(const Int& n, Int& square_root_part, Int& squarefree_part);

/// Exact value of the half-angle Beta integral
///   int_0^pi cos^p(t/2) sin^q(t/2) sin t dt = 2 (q/2)! (p/2)! / ((p+q)/2 + 1)!
/// p and q must be even and nonnegative.
Rat half_angle_beta(long p, long q);

/// Canonical text form: terms sorted by radicand, "(p/q)*sqrt(r/s)" each,
/// joined by " + "/" - "; plain rational when the radicand is 1; "0" for zero.
/// This is the bit-exact interchange format used by the CLI and fixtures.
std::string to_string(const RadicalSum& value);

/// Parses the canonical text form back; domain_error on malformed input.
RadicalSum radical_from_string(std::string_view text);

/// Fixed-point decimal rendering of the exact value to `digits` places
/// (display only; never feeds back into computation).
std::string to_decimal_string(const RadicalSum& value, int digits);

std::string rat_to_string(const Rat& q);

} // namespace polarcg::exact

#endif
