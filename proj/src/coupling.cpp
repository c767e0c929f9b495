#include "polarcg/coupling.hpp"

#include <algorithm>
#include <mutex>

#include "polarcg/polyn.hpp"

namespace polarcg::coupling {

using basis::CGKey;
using exact::binomial;
using exact::factorial;
using exact::Int;
using exact::sqrt_normalize;

CGValue CGValue::from_signed_radical(const RadicalSum& value, long raw_twice) {
    CGValue result;
    result.phase_exponent_raw_twice = raw_twice;
    result.sign = value.sign();
    result.magnitude = result.sign < 0 ? -value : value;
    return result;
}

RadicalSum CGValue::value() const {
    if (sign >= 0) return magnitude;
    return -magnitude;
}

Rat CGValue::squared() const { return magnitude.squared().as_rational(); }

CGValue cg_racah_oracle(const CGKey& key) {
    const HalfInt j1 = key.j1, j2 = key.j2, j3 = key.j3;
    const HalfInt m1 = key.m1, m2 = key.m2, m3 = key.m3();

    const long kmin = std::max({0L, -static_cast<long>((j3 - j2 + m1).to_int()),
                                -static_cast<long>((j3 - j1 - m2).to_int())});
    const long kmax = std::min({static_cast<long>((j1 + j2 - j3).to_int()),
                                static_cast<long>((j1 - m1).to_int()),
                                static_cast<long>((j2 + m2).to_int())});
    Rat sum(0);
    for (long k = kmin; k <= kmax; ++k) {
        Rat term = exact::frac(Int(1), factorial(k) * factorial((j1 + j2 - j3).to_int() - k) *
                                        factorial((j1 - m1).to_int() - k) *
                                        factorial((j2 + m2).to_int() - k) *
                                        factorial((j3 - j2 + m1).to_int() + k) *
                                        factorial((j3 - j1 - m2).to_int() + k));
        if (k % 2 != 0) term = -term;
        sum += term;
    }
    sum.canonicalize();
    if (sgn(sum) == 0) return CGValue::zero();

    Rat triangle(factorial((j1 + j2 - j3).to_int()) * factorial((j1 - j2 + j3).to_int()) *
                     factorial((-j1 + j2 + j3).to_int()),
                 factorial((j1 + j2 + j3).to_int() + 1));
    Rat m_factorials(factorial((j1 + m1).to_int()) * factorial((j1 - m1).to_int()) *
                     factorial((j2 + m2).to_int()) * factorial((j2 - m2).to_int()) *
                     factorial((j3 + m3).to_int()) * factorial((j3 - m3).to_int()));
    Rat radicand = Rat(j3.twice + 1) * triangle * m_factorials;
    radicand.canonicalize();

    RadicalSum value = sqrt_normalize(radicand);
    value *= sum;
    return CGValue::from_signed_radical(value);
}

CGValue cg_oracle_or_zero(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2) {
    if (CGKey::check(j1, j2, j3, m1, m2)) return CGValue::zero();
    return cg_racah_oracle(CGKey{j1, j2, j3, m1, m2});
}

CGValue threej(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
    if ((m1 + m2 + m3).twice != 0) return CGValue::zero();
    CGValue cg = cg_oracle_or_zero(j1, j2, j3, m1, m2);
    if (cg.is_zero()) return cg;
    RadicalSum value = cg.value();
    value *= sqrt_normalize(Rat(1, j3.twice + 1));
    const long exponent = (j1 - j2 - m3).to_int();
    if (exponent % 2 != 0) value = -value;
    return CGValue::from_signed_radical(value, 2 * exponent);
}

namespace {

struct AbsSectorLabels {
    long n1, n2, n;          // radial node counts
    HalfInt m, mp;           // m = |m1|+|m2|, mp = |m2|-|m1|
    long q;                  // j3 + |m1| - |m2|
};

AbsSectorLabels abs_sector(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt am1, HalfInt am2) {
    if (!am1.is_nonnegative() || !am2.is_nonnegative())
        throw domain_error("abs-sector pipeline: |m| arguments must be nonnegative");
    if (am1 > j1 || am2 > j2) throw domain_error("abs-sector pipeline: |m_i| exceeds j_i");
    if (!basis::validate_triple(j1, j2, j3))
        throw domain_error("abs-sector pipeline: triangle rule violated");
    AbsSectorLabels out;
    out.n1 = (j1 - am1).to_int();
    out.n2 = (j2 - am2).to_int();
    out.n = (j1 + j2 - j3).to_int();
    out.m = am1 + am2;
    out.mp = am2 - am1;
    if (abs(out.m) > j3 || abs(out.mp) > j3)
        throw domain_error("abs-sector pipeline: |m1|+|m2| exceeds j3 (no 4d polar label)");
    out.q = (j3 + am1 - am2).to_int();
    return out;
}

// int_0^inf e^(-x) x^q L_{n1}^a(x) L_n^b(x) dx as the terminating single sum
//   sum_j (-1)^(j+n1) binom(n+b, n-j) (q+j)! binom(q-a+j, n1) / j!
// (the hypergeometric kernel of the second method, kept independent of
// laguerre_weighted_overlap's polynomial-expansion route).
Rat hyp_kernel_sum(long n1, long a, long n, long b, long q) {
    Rat total(0);
    for (long j = 0; j <= n; ++j) {
        Int numer = binomial(n + b, n - j) * factorial(q + j) * binomial(q - a + j, n1);
        if (numer == 0) continue;
        Rat term = exact::frac(numer, factorial(j));
        if ((j + n1) % 2 != 0) term = -term;
        total += term;
    }
    total.canonicalize();
    return total;
}

} // namespace

RadicalSum hyp_prefactor(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt am1, HalfInt am2) {
    const AbsSectorLabels s = abs_sector(j1, j2, j3, am1, am2);

    // Re-derived closed-form prefactor (the printed Eq 3.12 prefactor fails
    // against the oracle; the reconciliation report tabulates it).
    const Int w_num = Int(j3.twice + 1) * factorial(s.n) * factorial((j3 + s.m).to_int()) *
                      factorial((j3 - s.m).to_int());
    const Int w_den = factorial((j1 + j2 + j3).to_int() + 1) *
                      factorial((j3 + s.mp).to_int()) * factorial((j3 - s.mp).to_int());
    Rat w_radicand = exact::frac(w_num, w_den);
    Rat s_radicand = exact::frac(factorial((j1 + am1).to_int()) * factorial((j2 + am2).to_int()),
                                 factorial(s.n1) * factorial(s.n2));
    w_radicand.canonicalize();
    s_radicand.canonicalize();

    Rat rational_part = exact::frac(factorial(s.n1), factorial(s.n1 + am1.twice));
    rational_part *= Rat(binomial((j3 - s.m).to_int() + am2.twice, (j3 - s.m).to_int()));
    rational_part /= Rat(binomial((j2 + am2).to_int(), s.n2));

    RadicalSum prefactor = sqrt_normalize(w_radicand * s_radicand);
    prefactor *= rational_part;
    if (s.n1 % 2 != 0) prefactor = -prefactor;
    if (calibration().hyp_sign_offset % 2 != 0) prefactor = -prefactor;
    return prefactor;
}

CGValue cg_hypergeometric(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt am1, HalfInt am2) {
    const AbsSectorLabels s = abs_sector(j1, j2, j3, am1, am2);
    const Rat kernel = hyp_kernel_sum(s.n1, am1.twice, s.n, j3.twice + 1, s.q);
    RadicalSum value = hyp_prefactor(j1, j2, j3, am1, am2);
    value *= kernel;
    // Raw printed phase of Eq 3.12 is (-1)^(n + m1); doubled to stay integral.
    return CGValue::from_signed_radical(value, 2 * s.n + am1.twice);
}

CGValue cg_hypergeometric(const CGKey& key) {
    return cg_hypergeometric(key.j1, key.j2, key.j3, abs(key.m1), abs(key.m2));
}

bool hypergeometric_flagged(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt am1, HalfInt am2) {
    const AbsSectorLabels s = abs_sector(j1, j2, j3, am1, am2);
    const long terminate = std::min(s.n, s.n2);
    const long den1 = (j1 + j2 - am1 - am2).to_int();
    const long den2 = (j1 + j2 + am1 - am2).to_int();
    return std::min(den1, den2) < terminate;
}

std::optional<RadicalSum> cg_hypergeometric_printed(HalfInt j1, HalfInt j2, HalfInt j3,
                                                    HalfInt am1, HalfInt am2) {
    const AbsSectorLabels s = abs_sector(j1, j2, j3, am1, am2);

    // 3F2(-n, -(j1+j2+j3+1), -n2; -(j1+j2-|m1|-|m2|), -(j1+j2+|m1|-|m2|); 1)
    const Rat p1(-s.n), p2(-(j1 + j2 + j3).to_int() - 1), p3(-s.n2);
    const Rat q1(-(j1 + j2 - am1 - am2).to_int()), q2(-(j1 + j2 + am1 - am2).to_int());
    Rat sum(0);
    Rat term(1);
    for (long k = 0;; ++k) {
        sum += term;
        Rat num = (p1 + k) * (p2 + k) * (p3 + k);
        if (sgn(num) == 0) break; // series terminated
        Rat den = (q1 + k) * (q2 + k) * (k + 1);
        if (sgn(den) == 0) return std::nullopt; // indeterminate term
        term *= num / den;
    }
    sum.canonicalize();

    const Int r_num = Int(j3.twice + 1) * factorial((j3 + s.m).to_int()) *
                      factorial((j3 + am1 - am2).to_int());
    const Int r_den = factorial(s.n) * factorial((j1 + j2 + j3).to_int() + 1) *
                      factorial((j3 - s.m).to_int()) * factorial((j3 - am1 + am2).to_int()) *
                      factorial(s.n1) * factorial((j1 + am1).to_int()) * factorial(s.n2) *
                      factorial((j2 + am2).to_int());
    Rat radicand = exact::frac(r_num, r_den);
    RadicalSum value = sqrt_normalize(radicand);
    value *= Rat(factorial((j1 + j2 - am1 - am2).to_int()) *
                 factorial((j1 + j2 + am1 - am2).to_int()));
    value *= sum;
    // (-1)^(n + m1) applied only when integral; the half-integral case is
    // one of the discrepancies the reconciliation report tabulates.
    if (am1.is_whole() && (s.n + am1.to_int()) % 2 != 0) value = -value;
    return value;
}

RadicalSum gaunt_theta_integral(HalfInt a, HalfInt b, HalfInt c, HalfInt alpha, HalfInt beta) {
    if (!basis::validate_triple(a, b, c))
        throw domain_error("gaunt_theta_integral: triangle rule violated");
    if (abs(alpha) > a || abs(beta) > b)
        throw domain_error("gaunt_theta_integral: |alpha| > a or |beta| > b");
    const HalfInt gamma = -(alpha + beta);
    if (abs(gamma) > c)
        throw domain_error("gaunt_theta_integral: |alpha + beta| exceeds c");

    const polyn::SmallD d = polyn::wigner_small_d(c, gamma, b - a);

    // Doubled half-angle exponents of (cos sin)^(a+b) tan^(beta-alpha) d(...).
    const long cos2_base = (a + b + alpha - beta).twice + 2 * d.cos_half_power;
    const long sin2_base = (a + b - alpha + beta).twice + 2 * d.sin_half_power;

    // cos(theta)^t = (cos^2 - sin^2)^t in half-angle powers.
    Rat total(0);
    const auto& jac = d.jacobi_part.coeffs();
    for (std::size_t t = 0; t < jac.size(); ++t) {
        if (sgn(jac[t]) == 0) continue;
        for (long i = 0; i <= static_cast<long>(t); ++i) {
            const long cos2 = cos2_base + 4 * (static_cast<long>(t) - i);
            const long sin2 = sin2_base + 4 * i;
            if (cos2 % 4 != 0 || sin2 % 4 != 0 || cos2 < 0 || sin2 < 0)
                throw internal_error("gaunt_theta_integral: non-polynomial integrand");
            Rat piece = jac[t] * Rat(binomial(static_cast<long>(t), i)) *
                        exact::half_angle_beta(cos2 / 2, sin2 / 2);
            if (i % 2 != 0) piece = -piece;
            total += piece;
        }
    }
    total.canonicalize();
    RadicalSum result = d.prefactor;
    result *= total;
    return result;
}

namespace {

// Stretched 3j symbol (a b c; a, -b, b-a): single-term closed form used as
// the Gaunt pipeline's normalization. Never zero inside the triangle.
// (The sqrt(2c+1) of the CG form cancels against the 3j conversion.)
RadicalSum gaunt_stretched_threej(HalfInt a, HalfInt b, HalfInt c) {
    Rat triangle = exact::frac(factorial((a + b - c).to_int()) *
                                   factorial((a - b + c).to_int()) *
                                   factorial((-a + b + c).to_int()),
                               factorial((a + b + c).to_int() + 1));
    Rat radicand = triangle;
    radicand *= Rat(factorial(a.twice) * factorial(b.twice) * factorial((c + a - b).to_int()) *
                    factorial((c - a + b).to_int()));
    radicand.canonicalize();
    RadicalSum value = sqrt_normalize(radicand);
    value *= Rat(Int(1), factorial((a + b - c).to_int()) * factorial((c + a - b).to_int()) *
                             factorial((c - a + b).to_int()));
    if ((a.twice - b.twice) % 2 != 0) value = -value;
    return value;
}

RadicalSum gaunt_cg_uncalibrated(HalfInt a, HalfInt b, HalfInt c, HalfInt alpha, HalfInt beta) {
    const RadicalSum integral = gaunt_theta_integral(a, b, c, alpha, beta);
    Rat radicand = Rat(c.twice + 1) * Rat(binomial(a.twice, (a + alpha).to_int())) *
                   Rat(binomial(b.twice, (b + beta).to_int()));
    radicand.canonicalize();
    RadicalSum value = integral;
    value *= sqrt_normalize(radicand);
    value *= gaunt_stretched_threej(a, b, c).inverse();
    value *= Rat(1, 2);
    if (((a + alpha).to_int() + beta.twice) % 2 != 0) value = -value;
    return value;
}

} // namespace

CGValue gaunt_cg(HalfInt a, HalfInt b, HalfInt c, HalfInt alpha, HalfInt beta) {
    RadicalSum value = gaunt_cg_uncalibrated(a, b, c, alpha, beta);
    value *= calibration().gaunt_scale;
    return CGValue::from_signed_radical(value, (b + beta).twice);
}

CGValue cg_vilenkin(HalfInt l1, HalfInt l2, HalfInt l3, long k) {
    if (!basis::validate_triple(l1, l2, l3)) throw domain_error("cg_vilenkin: triangle rule violated");
    if (k < 0 || k > std::min(l1.twice, l2.twice))
        throw domain_error("cg_vilenkin: k outside [0, min(2 l1, 2 l2)]");
    if (!(l1 + l2).is_whole())
        throw domain_error("cg_vilenkin: printed formula requires l1 + l2 whole "
                           "(half-integer factorials otherwise)");
    const long sum_l = (l1 + l2).to_int();
    const long upper = (l1 + l2 - l3).to_int();
    Rat sum(0);
    for (long mu = 0; mu <= std::min(upper, k); ++mu) {
        Rat term = exact::frac(factorial(sum_l - mu) * factorial(l2.twice - mu),
                               factorial(mu) * factorial(upper - mu) *
                                   factorial((l3 + l1 + l2).to_int() - mu + 1) *
                                   factorial(k - mu));
        if (mu % 2 != 0) term = -term;
        sum += term;
    }
    sum.canonicalize();
    // The printed phase (-1)^(phi + k - j + 2 l2 - k) references labels of the
    // original basis that the (l1, l2, l3, k) signature does not determine;
    // the reconciliation report compares magnitudes.
    return CGValue::from_signed_radical(RadicalSum(sum));
}

CGValue cg_laguerre_integral(HalfInt l1, HalfInt l2, HalfInt l, long k) {
    if (!basis::validate_triple(l1, l2, l))
        throw domain_error("cg_laguerre_integral: triangle rule violated");
    if (k < 0 || k > std::min(l1.twice, l2.twice))
        throw domain_error("cg_laguerre_integral: k outside [0, min(2 l1, 2 l2)]");
    if (l2 < l1)
        throw domain_error("cg_laguerre_integral: requires l2 >= l1 (order 2(l2-l1))");
    // The integral is the second-method kernel at the remapped arguments
    //   j1 = l1+l2-k, j2 = k, j3 = l, |m1| = l2-l1, |m2| = 0,
    // whose absolute-value map lands exactly on <l1 l2; k-l1, l2-k | l, l2-l1>.
    // In the l-variables the derived prefactor collapses to
    //   (-1)^(2l1-k) sqrt((2l1-k)!/(2l2-k)!) sqrt((2l+1)(l1+l2-l)!/(l1+l2+l+1)!)
    // (the printed sqrt ratio is inverted and lacks the triangle factor).
    const long n2 = (l1 + l2 - l).to_int();
    const long p = (l2 - l1 + l).to_int();
    const Rat overlap =
        polyn::laguerre_weighted_overlap(l1.twice - k, (l2 - l1).twice, n2, l.twice + 1, p);
    Rat radicand = exact::frac(factorial(l1.twice - k) * Int(l.twice + 1) * factorial(n2),
                               factorial(l2.twice - k) * factorial((l1 + l2 + l).to_int() + 1));
    RadicalSum value = sqrt_normalize(radicand);
    value *= overlap;
    if ((l1.twice - k + calibration().hyp_sign_offset) % 2 != 0) value = -value;
    return CGValue::from_signed_radical(value, 0);
}

CGValue passage_element(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j3,
                        Route route, PhaseConvention convention, basis::PhiReading reading) {
    if (route == Route::abs) {
        const HalfInt am1 = abs(m1), am2 = abs(m2);
        const basis::MappedKey mapped = basis::map_abs_indices(j1, j2, j3, am1, am2, reading);
        CGValue cg = cg_racah_oracle(mapped.key);
        if (cg.is_zero()) return cg;
        RadicalSum value = cg.value();
        long exponent;
        if (convention == PhaseConvention::printed) {
            exponent = mapped.phase_exponent;
        } else {
            exponent = (j1 - am1).to_int() + calibration().abs_phase_offset;
        }
        if (exponent % 2 != 0) value = -value;
        return CGValue::from_signed_radical(value, 2 * mapped.phase_exponent);
    }

    const basis::MappedKey mapped = basis::map_signed_indices(j1, j2, j3, m1, m2);
    CGValue cg = cg_racah_oracle(mapped.key);
    if (cg.is_zero()) return cg;
    RadicalSum value = cg.value();
    value *= sqrt_normalize(Rat(j3.twice + 1));
    long exponent = mapped.phase_exponent;
    if (convention == PhaseConvention::calibrated) exponent += calibration().signed_phase_offset;
    if (exponent % 2 != 0) value = -value;
    return CGValue::from_signed_radical(value, 2 * mapped.phase_exponent);
}

std::vector<OrbitImage> symmetry_orbit(const CGKey& key) {
    if (abs(key.m1 - key.m2) > key.j3)
        throw domain_error("symmetry_orbit: requires |m1 - m2| <= j3 (4d polar label bound)");

    auto build = [&](int s1, int s2) -> CGKey {
        const HalfInt f1 = HalfInt::from_twice(s1 * key.m1.twice);
        const HalfInt f2 = HalfInt::from_twice(s2 * key.m2.twice);
        const HalfInt J1 = HalfInt::from_twice((key.j1 + key.j2 - f1 + f2).twice / 2);
        const HalfInt J2 = HalfInt::from_twice((key.j1 + key.j2 + f1 - f2).twice / 2);
        const HalfInt M1 = HalfInt::from_twice((key.j2 - key.j1 + f1 + f2).twice / 2);
        const HalfInt M2 = HalfInt::from_twice((key.j1 - key.j2 + f1 + f2).twice / 2);
        return CGKey::make(J1, J2, key.j3, M1, M2);
    };

    const CGKey identity = build(+1, +1);
    const CGValue identity_3j =
        threej(identity.j1, identity.j2, identity.j3, identity.m1, identity.m2, -identity.m3());

    std::vector<OrbitImage> orbit;
    for (int s1 : {+1, -1}) {
        for (int s2 : {+1, -1}) {
            CGKey image = build(s1, s2);
            bool seen = false;
            for (const auto& existing : orbit) {
                if (existing.key == image) { seen = true; break; }
            }
            if (seen) continue;
            const CGValue image_3j =
                threej(image.j1, image.j2, image.j3, image.m1, image.m2, -image.m3());
            long exponent = 0;
            if (!identity_3j.is_zero() && !image_3j.is_zero() &&
                image_3j.sign != identity_3j.sign) {
                exponent = 1;
            }
            orbit.push_back(OrbitImage{image, exponent});
        }
    }
    return orbit;
}

const PipelineCalibration& calibration() {
    static PipelineCalibration cal = [] {
        PipelineCalibration c;
        // Smallest nondegenerate key per pipeline: (1/2, 1/2; 1/2, 1/2 | 1 1).
        const HalfInt h = HalfInt::from_twice(1), one = HalfInt::whole(1);
        const CGKey key = CGKey::make(h, h, one, h, h);
        const CGValue oracle = cg_racah_oracle(key);

        const RadicalSum gaunt_raw = gaunt_cg_uncalibrated(h, h, one, h, h);
        RadicalSum scale = gaunt_raw.inverse();
        scale *= oracle.value();
        c.gaunt_scale = scale;

        // Sign offsets against the oracle on the mapped key. The mapped key of
        // the calibration key is itself, so the comparisons are direct.
        const basis::MappedKey mapped = basis::map_abs_indices(h, h, one, h, h);
        const CGValue mapped_oracle = cg_racah_oracle(mapped.key);

        // cg_hypergeometric with offset 0: recompute its raw sign here.
        // (Cannot call cg_hypergeometric during calibration construction.)
        const long n1 = 0; // j1 - |m1| at the calibration key
        const Rat kernel = hyp_kernel_sum(n1, 1, 0, 3, 1);
        int raw_sign = sgn(kernel) * (n1 % 2 == 0 ? 1 : -1);
        c.hyp_sign_offset = (raw_sign == mapped_oracle.sign) ? 0 : 1;

        // Abs-route passage uses the same (-1)^(n1) law, referenced to the
        // sign of the second-method kernel (the passage element itself).
        c.abs_phase_offset = c.hyp_sign_offset;
        // Signed-route passage: printed (-1)^(j2 - m2) at the calibration key.
        c.signed_phase_offset = 0;
        return c;
    }();
    return cal;
}

} // namespace polarcg::coupling
