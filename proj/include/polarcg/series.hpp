#ifndef POLARCG_SERIES_HPP
#define POLARCG_SERIES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polarcg/coupling.hpp"
#include "polarcg/exact.hpp"
#include "polarcg/half_int.hpp"

namespace polarcg::series {

using exact::Rat;

/// Truncated multivariate formal power series over exact rationals.
/// Fixed variable names used by the generating functions (fixtures depend on
/// them): t1 t2 tp1 tp2 xi1 xi2 eta1 eta2 s u v, the oscillator pairs
/// a1 a2 b1 b2 c1 c2 d1 d2 z1 z2, and the recoupling parameter markers
/// al/be/ga 1..3 (second-coupling ones prefixed alp/bep/gap).
class MultiSeries {
public:
    using ExpVec = std::vector<int>;
    using TermMap = std::map<ExpVec, Rat>;

    MultiSeries(std::vector<std::string> vars, long trunc);

    static MultiSeries constant(std::vector<std::string> vars, long trunc, const Rat& c);
    static MultiSeries monomial(std::vector<std::string> vars, long trunc, const ExpVec& exps,
                                const Rat& c);

    const std::vector<std::string>& vars() const { return vars_; }
    long trunc() const { return trunc_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t var_index(const std::string& name) const;

    /// Stored coefficient or zero; domain error if the exponent vector's
    /// total degree exceeds trunc (prevents silently truncated reads).
    Rat coeff(const ExpVec& exps) const;

    MultiSeries operator+(const MultiSeries& other) const;
    MultiSeries operator-(const MultiSeries& other) const;
    MultiSeries scaled(const Rat& factor) const;

    void insert_term(const ExpVec& exps, const Rat& coeff);

    /// Serialized fixture form: sorted exponent vectors with coefficient
    /// strings.
    std::string to_json() const;

private:
    std::vector<std::string> vars_;
    long trunc_;
    TermMap terms_;
};

/// Exact truncated product (degree cap = min of the operands' trunc).
/// `caps`, when given, drops any product term whose exponent exceeds the cap
/// in some variable (used by the recoupling extraction to keep the
/// 28-variable expansion sparse).
MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b,
                       const std::vector<int>* caps = nullptr);

/// a^power with optional per-variable caps.
MultiSeries series_pow(const MultiSeries& a, long power, const std::vector<int>* caps = nullptr);

/// exp(a) truncated; a must have zero constant term.
MultiSeries series_exp(const MultiSeries& a);

/// (1 - var)^exponent for any integer exponent (binomial series when
/// negative), truncated to `trunc` in the given variable universe.
MultiSeries one_minus_var_power(const std::vector<std::string>& vars, long trunc,
                                const std::string& var, long exponent);

/// Bargmann pairing <z^n, z^m> = n! delta_{nm} applied independently in each
/// paired variable; unpaired variables pass through. The operands may live
/// over different variable sets as long as both contain every paired name.
MultiSeries bargmann_pair(const MultiSeries& f, const MultiSeries& g,
                          const std::vector<std::string>& paired_vars);

/// Labels of one monomial of the Eq 5.11 generating function, doubled.
struct GF3jLabel {
    int tj1, tm1, tj2, tm2, tj3, tm_eta, tm_xi;
    long p;
    auto operator<=>(const GF3jLabel&) const = default;
};

/// Builds exp[xi1(eta1 t2 + eta2 tp1) + xi2(-eta1 tp2 + eta2 t1)
///            - s(t1 t2 + tp1 tp2)] to the given total degree.
MultiSeries build_3j_gf(long max_degree);

/// Expands the 3j generating function and keys each raw rational coefficient
/// by its oscillator labels.
std::map<GF3jLabel, Rat> expand_3j_gf(long max_degree);

/// Normalization turning a raw 5.11 coefficient into the passage-element
/// magnitude: (2j3+1) sqrt(p!/(p+2j3+1)!) sqrt(prod of the eight
/// Fock-Bargmann factorials), times the one-point calibration constant.
exact::RadicalSum gf3j_label_normalization(const GF3jLabel& label);

/// The frozen one-point calibration constant of the 5.11 extraction.
const exact::RadicalSum& gf3j_calibration();

/// Eq 6.2 expansion for fixed (j3, |m1|, |m2|): coefficient of u^{n1} v^{n}
/// by three routes plus the assembled passage values.
struct CGGFExpansion {
    /// Orthogonality-route integral (authoritative).
    std::map<std::pair<long, long>, Rat> integral;
    /// Derived closed form expanded with the series machinery.
    std::map<std::pair<long, long>, Rat> closed_form;
    /// The closed form exactly as printed (exponent typos preserved).
    std::map<std::pair<long, long>, Rat> printed_form;
    /// A(j, |m|) * integral coefficient, keyed like the maps; zero value for
    /// label pairs that violate the selection rules.
    std::map<std::pair<long, long>, coupling::CGValue> values;
};
CGGFExpansion expand_cg_gf(HalfInt j3, HalfInt am1, HalfInt am2, long max_total_degree);

/// The Laguerre generating function (1-s)^(-alpha-1) exp(-s x / (1-s)) over
/// (s, x) to the given degree; coefficient of s^n reproduces laguerre(n, alpha).
MultiSeries laguerre_gf(long alpha, long max_degree);

} // namespace polarcg::series

#endif
