#include "polarcg/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "polarcg/polyn.hpp"

#include <json.hpp>

namespace polarcg::series {

using exact::factorial;
using exact::RadicalSum;

namespace {

long total_degree(const MultiSeries::ExpVec& exps) {
    return std::accumulate(exps.begin(), exps.end(), 0L);
}

} // namespace

MultiSeries::MultiSeries(std::vector<std::string> vars, long trunc)
    : vars_(std::move(vars)), trunc_(trunc) {
    if (trunc_ < 0) throw domain_error("MultiSeries: negative truncation degree");
}

MultiSeries MultiSeries::constant(std::vector<std::string> vars, long trunc, const Rat& c) {
    MultiSeries result(std::move(vars), trunc);
    if (sgn(c) != 0) result.terms_.emplace(ExpVec(result.vars_.size(), 0), c);
    return result;
}

MultiSeries MultiSeries::monomial(std::vector<std::string> vars, long trunc, const ExpVec& exps,
                                  const Rat& c) {
    MultiSeries result(std::move(vars), trunc);
    result.insert_term(exps, c);
    return result;
}

std::size_t MultiSeries::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw domain_error("MultiSeries: unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

Rat MultiSeries::coeff(const ExpVec& exps) const {
    if (exps.size() != vars_.size()) throw domain_error("MultiSeries::coeff: wrong arity");
    if (total_degree(exps) > trunc_)
        throw domain_error("MultiSeries::coeff: exponent beyond truncation degree");
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiSeries::insert_term(const ExpVec& exps, const Rat& coeff) {
    if (exps.size() != vars_.size()) throw domain_error("MultiSeries: wrong exponent arity");
    if (sgn(coeff) == 0) return;
    if (total_degree(exps) > trunc_) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

MultiSeries MultiSeries::operator+(const MultiSeries& other) const {
    if (vars_ != other.vars_) throw domain_error("MultiSeries: variable sets differ");
    MultiSeries result(vars_, std::min(trunc_, other.trunc_));
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= result.trunc_) result.insert_term(e, c);
    for (const auto& [e, c] : other.terms_)
        if (total_degree(e) <= result.trunc_) result.insert_term(e, c);
    return result;
}

MultiSeries MultiSeries::operator-(const MultiSeries& other) const {
    return *this + other.scaled(Rat(-1));
}

MultiSeries MultiSeries::scaled(const Rat& factor) const {
    MultiSeries result(vars_, trunc_);
    if (sgn(factor) == 0) return result;
    for (const auto& [e, c] : terms_) result.terms_.emplace(e, c * factor);
    return result;
}

std::string MultiSeries::to_json() const {
    nlohmann::ordered_json doc;
    doc["vars"] = vars_;
    doc["trunc"] = trunc_;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::ordered_json term;
        term["exp"] = e;
        term["coeff"] = exact::rat_to_string(c);
        terms.push_back(term);
    }
    doc["terms"] = terms;
    return doc.dump();
}

MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b, const std::vector<int>* caps) {
    if (a.vars() != b.vars()) throw domain_error("series_mul: variable sets differ");
    MultiSeries result(a.vars(), std::min(a.trunc(), b.trunc()));
    const std::size_t arity = a.vars().size();
    MultiSeries::ExpVec combined(arity, 0);
    for (const auto& [ea, ca] : a.terms()) {
        const long da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms()) {
            if (da + total_degree(eb) > result.trunc()) continue;
            bool capped = false;
            for (std::size_t i = 0; i < arity; ++i) {
                combined[i] = ea[i] + eb[i];
                if (caps && combined[i] > (*caps)[i]) {
                    capped = true;
                    break;
                }
            }
            if (capped) continue;
            result.insert_term(combined, ca * cb);
        }
    }
    return result;
}

MultiSeries series_pow(const MultiSeries& a, long power, const std::vector<int>* caps) {
    if (power < 0) throw domain_error("series_pow: negative power");
    MultiSeries result = MultiSeries::constant(a.vars(), a.trunc(), Rat(1));
    for (long i = 0; i < power; ++i) result = series_mul(result, a, caps);
    return result;
}

MultiSeries series_exp(const MultiSeries& a) {
    const MultiSeries::ExpVec zero(a.vars().size(), 0);
    if (a.terms().count(zero) != 0)
        throw domain_error("series_exp: nonzero constant term");
    MultiSeries result = MultiSeries::constant(a.vars(), a.trunc(), Rat(1));
    MultiSeries power = result; // a^k / k!
    for (long k = 1; k <= a.trunc(); ++k) {
        power = series_mul(power, a).scaled(exact::frac(exact::Int(1), exact::Int(k)));
        if (power.is_zero()) break;
        result = result + power;
    }
    return result;
}

MultiSeries one_minus_var_power(const std::vector<std::string>& vars, long trunc,
                                const std::string& var, long exponent) {
    MultiSeries result(vars, trunc);
    MultiSeries probe(vars, trunc);
    const std::size_t index = probe.var_index(var);
    MultiSeries::ExpVec exps(vars.size(), 0);
    if (exponent >= 0) {
        for (long n = 0; n <= std::min(exponent, trunc); ++n) {
            exps[index] = static_cast<int>(n);
            Rat c(exact::binomial(exponent, n));
            if (n % 2 != 0) c = -c;
            result.insert_term(exps, c);
        }
    } else {
        const long k = -exponent;
        for (long n = 0; n <= trunc; ++n) {
            exps[index] = static_cast<int>(n);
            result.insert_term(exps, Rat(exact::binomial(k - 1 + n, n)));
        }
    }
    return result;
}

MultiSeries bargmann_pair(const MultiSeries& f, const MultiSeries& g,
                          const std::vector<std::string>& paired_vars) {
    std::vector<std::size_t> f_paired, g_paired;
    for (const auto& name : paired_vars) {
        f_paired.push_back(f.var_index(name));
        g_paired.push_back(g.var_index(name));
    }
    auto is_paired = [&](const std::vector<std::size_t>& indices, std::size_t i) {
        return std::find(indices.begin(), indices.end(), i) != indices.end();
    };

    std::vector<std::string> out_vars;
    for (std::size_t i = 0; i < f.vars().size(); ++i)
        if (!is_paired(f_paired, i)) out_vars.push_back(f.vars()[i]);
    for (std::size_t i = 0; i < g.vars().size(); ++i) {
        if (is_paired(g_paired, i)) continue;
        if (std::find(out_vars.begin(), out_vars.end(), g.vars()[i]) == out_vars.end())
            out_vars.push_back(g.vars()[i]);
    }

    // Pass-through monomials combine degrees from both operands.
    MultiSeries result(out_vars, f.trunc() + g.trunc());

    // Where each operand's unpaired variables land in the output.
    auto out_slot = [&](const std::string& name) {
        return std::find(out_vars.begin(), out_vars.end(), name) - out_vars.begin();
    };
    std::vector<long> f_slot(f.vars().size(), -1), g_slot(g.vars().size(), -1);
    for (std::size_t i = 0; i < f.vars().size(); ++i)
        if (!is_paired(f_paired, i)) f_slot[i] = out_slot(f.vars()[i]);
    for (std::size_t i = 0; i < g.vars().size(); ++i)
        if (!is_paired(g_paired, i)) g_slot[i] = out_slot(g.vars()[i]);

    // Group g's terms by their paired-exponent signature.
    std::map<std::vector<int>, std::vector<const MultiSeries::TermMap::value_type*>> grouped;
    for (const auto& term : g.terms()) {
        std::vector<int> signature;
        signature.reserve(g_paired.size());
        for (std::size_t idx : g_paired) signature.push_back(term.first[idx]);
        grouped[signature].push_back(&term);
    }

    MultiSeries::ExpVec out(out_vars.size(), 0);
    for (const auto& [ef, cf] : f.terms()) {
        std::vector<int> signature;
        signature.reserve(f_paired.size());
        for (std::size_t idx : f_paired) signature.push_back(ef[idx]);
        auto bucket = grouped.find(signature);
        if (bucket == grouped.end()) continue;

        Rat weight(1);
        for (int n : signature) weight *= Rat(factorial(n));

        for (const auto* g_term : bucket->second) {
            std::fill(out.begin(), out.end(), 0);
            for (std::size_t i = 0; i < f.vars().size(); ++i)
                if (f_slot[i] >= 0) out[static_cast<std::size_t>(f_slot[i])] += ef[i];
            for (std::size_t i = 0; i < g.vars().size(); ++i)
                if (g_slot[i] >= 0) out[static_cast<std::size_t>(g_slot[i])] += g_term->first[i];
            if (total_degree(out) > result.trunc()) continue;
            result.insert_term(out, cf * g_term->second * weight);
        }
    }
    return result;
}

namespace {

const std::vector<std::string>& gf3j_vars() {
    static const std::vector<std::string> vars{"xi1", "xi2", "eta1", "eta2", "t1",
                                               "t2",  "tp1", "tp2",  "s"};
    return vars;
}

} // namespace

MultiSeries build_3j_gf(long max_degree) {
    if (max_degree < 0) throw domain_error("build_3j_gf: negative degree");
    const auto& vars = gf3j_vars();
    MultiSeries exponent(vars, max_degree);
    auto add = [&](std::initializer_list<const char*> names, int sign) {
        MultiSeries::ExpVec exps(vars.size(), 0);
        for (const char* name : names) exps[exponent.var_index(name)] += 1;
        exponent.insert_term(exps, Rat(sign));
    };
    add({"xi1", "eta1", "t2"}, +1);
    add({"xi1", "eta2", "tp1"}, +1);
    add({"xi2", "eta1", "tp2"}, -1);
    add({"xi2", "eta2", "t1"}, +1);
    add({"s", "t1", "t2"}, -1);
    add({"s", "tp1", "tp2"}, -1);
    return series_exp(exponent);
}

std::map<GF3jLabel, Rat> expand_3j_gf(long max_degree) {
    const MultiSeries gf = build_3j_gf(max_degree);
    const auto& vars = gf3j_vars();
    MultiSeries probe(vars, 0);
    const std::size_t xi1 = probe.var_index("xi1"), xi2 = probe.var_index("xi2");
    const std::size_t eta1 = probe.var_index("eta1"), eta2 = probe.var_index("eta2");
    const std::size_t t1 = probe.var_index("t1"), t2 = probe.var_index("t2");
    const std::size_t tp1 = probe.var_index("tp1"), tp2 = probe.var_index("tp2");
    const std::size_t sv = probe.var_index("s");

    std::map<GF3jLabel, Rat> labeled;
    for (const auto& [e, c] : gf.terms()) {
        GF3jLabel label;
        label.tj1 = e[t1] + e[t2];
        label.tm1 = e[t1] - e[t2];
        label.tj2 = e[tp1] + e[tp2];
        label.tm2 = e[tp1] - e[tp2];
        label.tj3 = e[xi1] + e[xi2];
        label.tm_xi = e[xi1] - e[xi2];
        label.tm_eta = e[eta1] - e[eta2];
        label.p = e[sv];
        if (e[eta1] + e[eta2] != label.tj3)
            throw internal_error("expand_3j_gf: xi and eta degrees disagree");
        labeled.emplace(label, c);
    }
    return labeled;
}

namespace {

RadicalSum gf3j_norm_raw(const GF3jLabel& label) {
    // Explicit return type: a deduced gmpxx expression template would
    // reference the factorial temporaries after they die.
    auto fact_h = [](int tj, int tm) -> exact::Int {
        return factorial((tj + tm) / 2) * factorial((tj - tm) / 2);
    };
    exact::Int product = fact_h(label.tj3, label.tm_xi) * fact_h(label.tj3, label.tm_eta) *
                         fact_h(label.tj1, label.tm1) * fact_h(label.tj2, label.tm2);
    Rat radicand = exact::frac(product * factorial(label.p),
                               factorial(label.p + label.tj3 + 1));
    RadicalSum norm = exact::sqrt_normalize(radicand);
    norm *= Rat(label.tj3 + 1);
    return norm;
}

} // namespace

const RadicalSum& gf3j_calibration() {
    // One-point normalization: the stretched xi1*eta1*t2 monomial must equal
    // the corresponding j = 1/2 passage element.
    static const RadicalSum scale = [] {
        const auto labeled = expand_3j_gf(3);
        const GF3jLabel stretched{1, -1, 0, 0, 1, 1, 1, 0};
        auto it = labeled.find(stretched);
        if (it == labeled.end())
            throw internal_error("gf3j_calibration: stretched monomial missing");
        const HalfInt h = HalfInt::from_twice(1), zero = HalfInt::whole(0);
        const coupling::CGValue expected = coupling::passage_element(
            h, HalfInt::from_twice(-1), zero, zero, h, coupling::Route::with_sign);

        RadicalSum raw = gf3j_norm_raw(stretched);
        raw *= abs(it->second);
        RadicalSum ratio = raw.inverse();
        ratio *= expected.magnitude;
        return ratio;
    }();
    return scale;
}

RadicalSum gf3j_label_normalization(const GF3jLabel& label) {
    RadicalSum norm = gf3j_norm_raw(label);
    norm *= gf3j_calibration();
    return norm;
}

CGGFExpansion expand_cg_gf(HalfInt j3, HalfInt am1, HalfInt am2, long max_total_degree) {
    if (!am1.is_nonnegative() || !am2.is_nonnegative())
        throw domain_error("expand_cg_gf: |m| arguments must be nonnegative");
    const HalfInt m = am1 + am2;
    const HalfInt mp = am2 - am1;
    if (abs(m) > j3 || abs(mp) > j3)
        throw domain_error("expand_cg_gf: |m1|+|m2| exceeds j3");
    const long gamma = (j3 + am1 - am2).to_int();

    CGGFExpansion result;

    // Left-hand side: the orthogonality-route integral per (n1, n).
    for (long n1 = 0; n1 <= max_total_degree; ++n1) {
        for (long n = 0; n1 + n <= max_total_degree; ++n) {
            Rat value = polyn::laguerre_weighted_overlap(n1, am1.twice, n, j3.twice + 1, gamma);
            result.integral[{n1, n}] = value;
        }
    }

    // Right-hand side, derived exponents:
    //   gamma! (1-u)^(j3-|m1|-|m2|) (1-v)^(-(j3-|m1|+|m2|+1)) / (1-uv)^(gamma+1)
    const std::vector<std::string> uv{"u", "v"};
    const long trunc = 2 * max_total_degree; // u^n1 v^n needs joint degree
    auto assemble = [&](long u_power, long v_power) {
        MultiSeries series = one_minus_var_power(uv, trunc, "u", u_power);
        series = series_mul(series, one_minus_var_power(uv, trunc, "v", v_power));
        // (1 - uv)^(-(gamma+1)) expanded directly in the product uv.
        MultiSeries uv_series(uv, trunc);
        MultiSeries::ExpVec exps(2, 0);
        for (long k = 0; 2 * k <= trunc; ++k) {
            exps[0] = static_cast<int>(k);
            exps[1] = static_cast<int>(k);
            uv_series.insert_term(exps, Rat(exact::binomial(gamma + k, k)));
        }
        series = series_mul(series, uv_series);
        return series.scaled(Rat(factorial(gamma)));
    };
    const MultiSeries derived = assemble((j3 - am1 - am2).to_int(), -((j3 - am1 + am2).to_int() + 1));
    const MultiSeries printed = assemble(-(gamma - 1), (j3 - am1 + am2).to_int());

    MultiSeries::ExpVec exps(2, 0);
    for (long n1 = 0; n1 <= max_total_degree; ++n1) {
        for (long n = 0; n1 + n <= max_total_degree; ++n) {
            exps[0] = static_cast<int>(n1);
            exps[1] = static_cast<int>(n);
            result.closed_form[{n1, n}] = derived.coeff(exps);
            result.printed_form[{n1, n}] = printed.coeff(exps);
        }
    }

    // Passage values: A(j, |m|) times the integral coefficient, where the
    // (j1, j2) of the prefactor are reconstructed from (n1, n).
    for (const auto& [key, integral_value] : result.integral) {
        const auto [n1, n] = key;
        const HalfInt j1 = HalfInt::from_twice(2 * static_cast<int>(n1) + am1.twice);
        const HalfInt j2 = HalfInt::from_twice(static_cast<int>(2 * n) + j3.twice - j1.twice);
        if (!j2.is_nonnegative() || am2 > j2 || !basis::validate_triple(j1, j2, j3)) {
            result.values[key] = coupling::CGValue::zero();
            continue;
        }
        RadicalSum value = coupling::hyp_prefactor(j1, j2, j3, am1, am2);
        value *= integral_value;
        result.values[key] = coupling::CGValue::from_signed_radical(value);
    }
    return result;
}

MultiSeries laguerre_gf(long alpha, long max_degree) {
    if (alpha < 0) throw domain_error("laguerre_gf: negative alpha");
    const std::vector<std::string> vars{"s", "x"};
    // exp(-s x / (1-s)) = exp(-x sum_{k>=1} s^k)
    MultiSeries exponent(vars, max_degree);
    MultiSeries::ExpVec exps(2, 0);
    for (long k = 1; k + 1 <= max_degree; ++k) {
        exps[0] = static_cast<int>(k);
        exps[1] = 1;
        exponent.insert_term(exps, Rat(-1));
    }
    MultiSeries result = series_exp(exponent);
    result = series_mul(result, one_minus_var_power(vars, max_degree, "s", -(alpha + 1)));
    return result;
}

} // namespace polarcg::series
