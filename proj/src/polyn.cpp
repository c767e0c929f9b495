#include "polarcg/polyn.hpp"

#include <sstream>

namespace polarcg::polyn {

using exact::binomial;
using exact::factorial;

RationalPoly::RationalPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::constant(const Rat& c) {
    return RationalPoly(std::vector<Rat>{c});
}

RationalPoly RationalPoly::monomial(std::size_t degree, const Rat& c) {
    std::vector<Rat> coeffs(degree + 1, Rat(0));
    coeffs[degree] = c;
    return RationalPoly(std::move(coeffs));
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rat RationalPoly::coeff(std::size_t k) const {
    if (k >= coeffs_.size()) return Rat(0);
    return coeffs_[k];
}

Rat RationalPoly::eval(const Rat& x) const {
    Rat result(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        result = result * x + *it;
    }
    result.canonicalize();
    return result;
}

RationalPoly RationalPoly::operator+(const RationalPoly& other) const {
    std::vector<Rat> result(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) result[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) result[i] += other.coeffs_[i];
    return RationalPoly(std::move(result));
}

RationalPoly RationalPoly::operator-(const RationalPoly& other) const {
    return *this + other.scaled(Rat(-1));
}

RationalPoly RationalPoly::operator*(const RationalPoly& other) const {
    if (is_zero() || other.is_zero()) return RationalPoly();
    std::vector<Rat> result(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
            result[i + k] += coeffs_[i] * other.coeffs_[k];
        }
    }
    return RationalPoly(std::move(result));
}

RationalPoly RationalPoly::scaled(const Rat& factor) const {
    std::vector<Rat> result = coeffs_;
    for (auto& c : result) c *= factor;
    return RationalPoly(std::move(result));
}

std::string RationalPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rat& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        Rat c_abs = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << c_abs;
        } else {
            if (c_abs != 1) out << c_abs << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

RationalPoly laguerre(long n, long alpha) {
    if (n < 0 || alpha < 0) throw domain_error("laguerre: negative index");
    std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        Rat c = exact::frac(binomial(n + alpha, n - i), factorial(i));
        if (i % 2 == 1) c = -c;
        coeffs[static_cast<std::size_t>(i)] = c;
    }
    return RationalPoly(std::move(coeffs));
}

RationalPoly jacobi(long n, long alpha, long beta) {
    if (n < 0 || alpha < 0 || beta < 0) throw domain_error("jacobi: negative index");
    // P_n^(a,b)(z) = sum_s binom(n+a, n-s) binom(n+b, s) ((z-1)/2)^s ((z+1)/2)^(n-s)
    RationalPoly z_minus(std::vector<Rat>{Rat(-1, 2), Rat(1, 2)});
    RationalPoly z_plus(std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
    RationalPoly result;
    for (long s = 0; s <= n; ++s) {
        RationalPoly term = RationalPoly::constant(Rat(binomial(n + alpha, n - s) * binomial(n + beta, s)));
        for (long i = 0; i < s; ++i) term = term * z_minus;
        for (long i = 0; i < n - s; ++i) term = term * z_plus;
        result = result + term;
    }
    return result;
}

std::vector<Rat> monomial_to_laguerre(long r, long alpha) {
    if (r < 0 || alpha < 0) throw domain_error("monomial_to_laguerre: negative index");
    std::vector<Rat> coeffs(static_cast<std::size_t>(r) + 1);
    for (long i = 0; i <= r; ++i) {
        Rat c(binomial(r + alpha, r - i));
        if (i % 2 == 1) c = -c;
        coeffs[static_cast<std::size_t>(i)] = c;
    }
    return coeffs;
}

Rat laguerre_weighted_overlap(long n1, long a1, long n2, long a2, long p) {
    if (n1 < 0 || a1 < 0 || n2 < 0 || a2 < 0 || p < 0)
        throw domain_error("laguerre_weighted_overlap: negative argument");
    RationalPoly product = laguerre(n1, a1) * laguerre(n2, a2);
    Rat total(0);
    for (std::size_t k = 0; k < product.coeffs().size(); ++k) {
        total += product.coeffs()[k] * Rat(factorial(p + static_cast<long>(k)));
    }
    total.canonicalize();
    return total;
}

Rat endpoint_values(EndpointKind kind, long n, long alpha, long beta) {
    if (n < 0 || alpha < 0 || beta < 0) throw domain_error("endpoint_values: negative index");
    switch (kind) {
        case EndpointKind::jacobi_at_one:
        case EndpointKind::laguerre_at_zero:
            return Rat(binomial(n + alpha, n));
    }
    throw domain_error("endpoint_values: unknown kind");
}

SmallD wigner_small_d(HalfInt j, HalfInt m, HalfInt mp) {
    if (!j.is_nonnegative()) throw domain_error("wigner_small_d: j must be nonnegative");
    if (abs(m) > j || abs(mp) > j)
        throw domain_error("wigner_small_d: |m| or |mp| exceeds j");
    if ((j - m).twice % 2 != 0 || (j - mp).twice % 2 != 0)
        throw domain_error("wigner_small_d: m, mp must have the parity of j");

    // Canonicalize to the sector m - mp >= 0, m + mp >= 0 via
    // d^j_{m,mp} = d^j_{-mp,-m} and d^j_{m,mp} = (-1)^{m-mp} d^j_{mp,m}.
    int symmetry_sign = 1;
    HalfInt cm = m, cmp = mp;
    if ((cm + cmp).twice < 0) {
        HalfInt tmp = cm;
        cm = -cmp;
        cmp = -tmp;
    }
    if ((cm - cmp).twice < 0) {
        if ((cm - cmp).to_int() % 2 != 0) symmetry_sign = -symmetry_sign;
        std::swap(cm, cmp);
    }

    const long sin_pow = (cm - cmp).to_int();
    const long cos_pow = (cm + cmp).to_int();
    const long jac_deg = (j - cm).to_int();

    // d^j_{m,mp} = s * sqrt((j+m)!(j-m)! / ((j+mp)!(j-mp)!))
    //              * cos^{m+mp} (-sin)^{m-mp} P^{(m-mp, m+mp)}_{j-m}(cos theta)
    Rat ratio = exact::frac(factorial((j + cm).to_int()) * factorial((j - cm).to_int()),
                            factorial((j + cmp).to_int()) * factorial((j - cmp).to_int()));
    RadicalSum prefactor = exact::sqrt_normalize(ratio);
    if (sin_pow % 2 != 0) symmetry_sign = -symmetry_sign;
    if (symmetry_sign < 0) prefactor = -prefactor;

    SmallD result;
    result.j = j;
    result.m = cm;
    result.mp = cmp;
    result.prefactor = prefactor;
    result.cos_half_power = cos_pow;
    result.sin_half_power = sin_pow;
    result.jacobi_part = jacobi(jac_deg, sin_pow, cos_pow);
    return result;
}

RationalPoly small_d_squared_in_cos(const SmallD& d) {
    RationalPoly cos2(std::vector<Rat>{Rat(1, 2), Rat(1, 2)});  // (1+c)/2
    RationalPoly sin2(std::vector<Rat>{Rat(1, 2), Rat(-1, 2)}); // (1-c)/2
    RationalPoly result = RationalPoly::constant(d.prefactor.squared().as_rational());
    for (long i = 0; i < d.cos_half_power; ++i) result = result * cos2;
    for (long i = 0; i < d.sin_half_power; ++i) result = result * sin2;
    result = result * d.jacobi_part * d.jacobi_part;
    return result;
}

} // namespace polarcg::polyn
