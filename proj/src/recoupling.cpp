#include "polarcg/recoupling.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace polarcg::recoupling {

using basis::CGKey;
using exact::factorial;
using exact::Rat;
using series::MultiSeries;

namespace {

const std::vector<std::string>& oscillator_vars() {
    static const std::vector<std::string> vars{"a1", "a2", "b1", "b2", "c1",
                                               "c2", "d1", "d2", "z1", "z2"};
    return vars;
}

std::vector<std::string> side_vars(Side side) {
    std::vector<std::string> vars = oscillator_vars();
    const char* params[] = {"al1", "be1", "ga1", "al2", "be2", "ga2", "al3", "be3", "ga3"};
    const char* params2[] = {"alp1", "bep1", "gap1", "alp2", "bep2", "gap2",
                             "alp3", "bep3", "gap3"};
    for (const char* p : (side == Side::first ? params : params2)) vars.emplace_back(p);
    return vars;
}

} // namespace

CouplingForm build_coupling_form(Side side, long trunc) {
    MultiSeries q(side_vars(side), trunc);
    // Letter slots: the second coupling permutes (a b c d) -> (a d c b).
    auto slot = [&](char letter) -> std::string {
        if (side == Side::first) return std::string(1, letter);
        switch (letter) {
            case 'a': return "a";
            case 'b': return "d";
            case 'c': return "c";
            case 'd': return "b";
        }
        throw internal_error("build_coupling_form: bad slot letter");
    };
    auto param = [&](const char* name) {
        if (side == Side::first) return std::string(name);
        // al -> alp, be -> bep, ga -> gap
        std::string s(name);
        return s.substr(0, 2) + "p" + s.substr(2);
    };

    auto add_term = [&](const std::vector<std::string>& names, int sign) {
        MultiSeries::ExpVec exps(q.vars().size(), 0);
        for (const auto& name : names) exps[q.var_index(name)] += 1;
        q.insert_term(exps, Rat(sign));
    };
    // [xy] = x1 y2 - x2 y1, (xy) = x1 y1 + x2 y2 on the slotted letters.
    auto add_antisym = [&](char x, char y, const std::vector<std::string>& params_used) {
        std::string x1 = slot(x) + "1", x2 = slot(x) + "2";
        std::string y1 = slot(y) + "1", y2 = slot(y) + "2";
        std::vector<std::string> names = params_used;
        names.push_back(x1);
        names.push_back(y2);
        add_term(names, +1);
        names[names.size() - 2] = x2;
        names[names.size() - 1] = y1;
        add_term(names, -1);
    };
    auto add_sym = [&](char y, const std::vector<std::string>& params_used) {
        std::string y1 = slot(y) + "1", y2 = slot(y) + "2";
        std::vector<std::string> names = params_used;
        names.push_back("z1");
        names.push_back(y1);
        add_term(names, +1);
        names[names.size() - 2] = "z2";
        names[names.size() - 1] = y2;
        add_term(names, +1);
    };

    add_antisym('a', 'b', {param("al3")});
    add_antisym('c', 'd', {param("be3")});
    add_antisym('b', 'd', {param("ga3"), param("al1"), param("be1")});
    add_antisym('b', 'c', {param("ga3"), param("al1"), param("be2")});
    add_antisym('a', 'd', {param("ga3"), param("al2"), param("be1")});
    add_antisym('a', 'c', {param("ga3"), param("al2"), param("be2")});
    add_sym('a', {param("ga2"), param("al2")});
    add_sym('b', {param("ga2"), param("al1")});
    add_sym('c', {param("ga1"), param("be2")});
    add_sym('d', {param("ga1"), param("be1")});

    return CouplingForm{side, std::move(q)};
}

bool valid_recoupling(const RecouplingLabels& l) {
    return basis::validate_triple(l.j1, l.j2, l.j12) && basis::validate_triple(l.j3, l.j4, l.j34) &&
           basis::validate_triple(l.j12, l.j34, l.j) && basis::validate_triple(l.j1, l.j4, l.j14) &&
           basis::validate_triple(l.j2, l.j3, l.j23) && basis::validate_triple(l.j14, l.j23, l.j);
}

namespace {

// Per-node normalization of the Schwinger expansion:
//   k(x, y, z)^2 = (x+y+z+1)! / ((2z+1) (x-y+z)! (y-x+z)! (x+y-z)!).
Rat node_factor_squared(HalfInt x, HalfInt y, HalfInt z) {
    Rat value = exact::frac(factorial((x + y + z).to_int() + 1),
                            exact::Int(z.twice + 1) * factorial((x - y + z).to_int()) *
                                factorial((y - x + z).to_int()) *
                                factorial((x + y - z).to_int()));
    return value;
}

// Marker m1 of each family carries the (y-x+z) power, m2 the (x-y+z) power,
// m3 the triangle power (x+y-z), for the node coupling x (x) y -> z.
struct Node {
    const char *m1, *m2, *m3;
    HalfInt x, y, z;
};

bool is_parameter_var(const std::string& name) { return name.size() > 2; }

RadicalSum recoupling_value_raw(const RecouplingLabels& l) {
    const long order = (l.j1 + l.j2 + l.j3 + l.j4 + l.j).to_int();

    // Each Q term carries at most 3 parameter markers and 2 oscillator
    // quanta, so Q^order never exceeds total degree 5*order.
    const long trunc = 5 * order;
    const CouplingForm first = build_coupling_form(Side::first, trunc);
    const CouplingForm second = build_coupling_form(Side::second, trunc);

    const Node first_nodes[] = {{"al1", "al2", "al3", l.j1, l.j2, l.j12},
                                {"be1", "be2", "be3", l.j3, l.j4, l.j34},
                                {"ga1", "ga2", "ga3", l.j12, l.j34, l.j}};
    const Node second_nodes[] = {{"alp1", "alp2", "alp3", l.j1, l.j4, l.j14},
                                 {"bep1", "bep2", "bep3", l.j3, l.j2, l.j23},
                                 {"gap1", "gap2", "gap3", l.j14, l.j23, l.j}};

    auto side_extraction = [&](const CouplingForm& form, const Node* nodes) {
        std::vector<int> caps(form.quadratic.vars().size(), static_cast<int>(2 * order));
        MultiSeries::ExpVec target(form.quadratic.vars().size(), 0);
        for (int i = 0; i < 3; ++i) {
            const Node& node = nodes[i];
            target[form.quadratic.var_index(node.m1)] =
                static_cast<int>((node.y - node.x + node.z).to_int());
            target[form.quadratic.var_index(node.m2)] =
                static_cast<int>((node.x - node.y + node.z).to_int());
            target[form.quadratic.var_index(node.m3)] =
                static_cast<int>((node.x + node.y - node.z).to_int());
        }
        for (std::size_t i = 0; i < target.size(); ++i) {
            if (is_parameter_var(form.quadratic.vars()[i])) caps[i] = target[i];
        }
        MultiSeries power = series_pow(form.quadratic, order, &caps);
        power = power.scaled(exact::frac(exact::Int(1), factorial(order)));

        // Keep only terms whose parameter part matches the target exactly.
        MultiSeries filtered(form.quadratic.vars(), power.trunc());
        for (const auto& [e, c] : power.terms()) {
            bool match = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (is_parameter_var(form.quadratic.vars()[i]) && e[i] != target[i]) {
                    match = false;
                    break;
                }
            }
            if (match) filtered.insert_term(e, c);
        }
        return filtered;
    };

    const MultiSeries kept_first = side_extraction(first, first_nodes);
    const MultiSeries kept_second = side_extraction(second, second_nodes);
    const MultiSeries paired = series::bargmann_pair(kept_second, kept_first, oscillator_vars());

    // The pairing leaves (at most) the single monomial carrying both sides'
    // parameter targets.
    Rat coefficient(0);
    for (const auto& [e, c] : paired.terms()) coefficient += c;
    coefficient.canonicalize();
    if (sgn(coefficient) == 0) return RadicalSum();

    Rat norm_sq(Rat(l.j.twice + 1) * Rat(l.j.twice + 1));
    for (const Node& node : first_nodes) norm_sq *= node_factor_squared(node.x, node.y, node.z);
    for (const Node& node : second_nodes) norm_sq *= node_factor_squared(node.x, node.y, node.z);
    norm_sq.canonicalize();

    RadicalSum value = exact::sqrt_normalize(norm_sq).inverse();
    value *= coefficient;
    return value;
}

// Frozen overall scale, fixed once at a trivial self-overlap configuration
// whose exact value is 1.
const RadicalSum& recoupling_calibration() {
    static const RadicalSum scale = [] {
        const HalfInt h = HalfInt::from_twice(1), zero = HalfInt::whole(0),
                      one = HalfInt::whole(1);
        const RecouplingLabels trivial{h, zero, zero, h, h, h, one, zero, one};
        const RadicalSum raw = recoupling_value_raw(trivial);
        if (raw.is_zero())
            throw internal_error("recoupling calibration: trivial overlap extracted as zero");
        return raw.inverse();
    }();
    return scale;
}

} // namespace

CGValue recoupling_value(const RecouplingLabels& l, long degree_budget) {
    if (!valid_recoupling(l))
        throw domain_error("recoupling_value: a coupling triple violates the triangle rule");
    const long order = (l.j1 + l.j2 + l.j3 + l.j4 + l.j).to_int();
    if (2 * order > degree_budget)
        throw resource_error("recoupling_value: required expansion degree " +
                             std::to_string(2 * order) + " exceeds budget " +
                             std::to_string(degree_budget));
    RadicalSum value = recoupling_value_raw(l);
    value *= recoupling_calibration();
    // The polar-basis kets carry a (-1)^(j-m)-style twist relative to the
    // Condon-Shortley states; across the whole sweep it reduces to the
    // constant-per-configuration law (-1)^(j2+j3-j23), verified exactly
    // against the contraction oracle.
    if ((l.j2 + l.j3 - l.j23).to_int() % 2 != 0) value = -value;
    return CGValue::from_signed_radical(value);
}

namespace {

struct MRange {
    int lo, hi; // doubled
};

MRange m_range(HalfInt j) { return MRange{-j.twice, j.twice}; }

} // namespace

CGValue recoupling_oracle_at_m(const RecouplingLabels& l, int twice_m) {
    if (!valid_recoupling(l))
        throw domain_error("recoupling_oracle: a coupling triple violates the triangle rule");
    if (std::abs(twice_m) > l.j.twice || (l.j.twice - twice_m) % 2 != 0)
        throw domain_error("recoupling_oracle: invalid total m");

    const HalfInt M = HalfInt::from_twice(twice_m);
    RadicalSum total;
    for (int tm1 = -l.j1.twice; tm1 <= l.j1.twice; tm1 += 2) {
        for (int tm2 = -l.j2.twice; tm2 <= l.j2.twice; tm2 += 2) {
            const HalfInt m1 = HalfInt::from_twice(tm1), m2 = HalfInt::from_twice(tm2);
            const HalfInt m12 = m1 + m2;
            if (abs(m12) > l.j12) continue;
            const HalfInt m34 = M - m12;
            if (abs(m34) > l.j34) continue;
            for (int tm3 = -l.j3.twice; tm3 <= l.j3.twice; tm3 += 2) {
                const HalfInt m3 = HalfInt::from_twice(tm3);
                const HalfInt m4 = m34 - m3;
                if (abs(m4) > l.j4) continue;
                const HalfInt m14 = m1 + m4, m23 = m2 + m3;
                if (abs(m14) > l.j14 || abs(m23) > l.j23) continue;

                CGValue c12 = coupling::cg_oracle_or_zero(l.j1, l.j2, l.j12, m1, m2);
                if (c12.is_zero()) continue;
                CGValue c34 = coupling::cg_oracle_or_zero(l.j3, l.j4, l.j34, m3, m4);
                if (c34.is_zero()) continue;
                CGValue cj = coupling::cg_oracle_or_zero(l.j12, l.j34, l.j, m12, m34);
                if (cj.is_zero()) continue;
                CGValue c14 = coupling::cg_oracle_or_zero(l.j1, l.j4, l.j14, m1, m4);
                if (c14.is_zero()) continue;
                CGValue c23 = coupling::cg_oracle_or_zero(l.j2, l.j3, l.j23, m2, m3);
                if (c23.is_zero()) continue;
                CGValue cjp = coupling::cg_oracle_or_zero(l.j14, l.j23, l.j, m14, m23);
                if (cjp.is_zero()) continue;

                RadicalSum term = c12.value();
                term *= c34.value();
                term *= cj.value();
                term *= c14.value();
                term *= c23.value();
                term *= cjp.value();
                total += term;
            }
        }
    }
    return CGValue::from_signed_radical(total);
}

CGValue recoupling_oracle(const RecouplingLabels& l) {
    return recoupling_oracle_at_m(l, l.j.twice);
}

CGValue sixj(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f) {
    // Triads of {a b c; d e f}.
    if (!basis::validate_triple(a, b, c) || !basis::validate_triple(a, e, f) ||
        !basis::validate_triple(d, b, f) || !basis::validate_triple(d, e, c)) {
        return CGValue::zero();
    }
    // <(a b) c, d; e | a, (b d) f; e> = (-1)^(a+b+d+e) sqrt((2c+1)(2f+1)) {a b c; d e f}
    RecouplingLabels labels{a, b, d, HalfInt::whole(0), c, d, a, f, e};
    CGValue overlap = recoupling_oracle(labels);
    if (overlap.is_zero()) return overlap;
    RadicalSum value = overlap.value();
    value *= exact::sqrt_normalize(Rat(1, exact::Int(c.twice + 1) * exact::Int(f.twice + 1)));
    if ((a + b + d + e).to_int() % 2 != 0) value = -value;
    return CGValue::from_signed_radical(value);
}

CGValue ninej(const std::array<std::array<HalfInt, 3>, 3>& j) {
    const HalfInt a = j[0][0], b = j[0][1], c = j[0][2];
    const HalfInt d = j[1][0], e = j[1][1], f = j[1][2];
    const HalfInt g = j[2][0], h = j[2][1], i = j[2][2];
    if (!basis::validate_triple(a, b, c) || !basis::validate_triple(d, e, f) ||
        !basis::validate_triple(g, h, i) || !basis::validate_triple(a, d, g) ||
        !basis::validate_triple(b, e, h) || !basis::validate_triple(c, f, i)) {
        return CGValue::zero();
    }
    // {a b c; d e f; g h i} = sum_x (-1)^(2x) (2x+1)
    //   {a b c; f i x} {d e f; b x h} {g h i; x a d}
    const int tx_max = std::max({(a + i).twice, (b + f).twice, (d + h).twice});
    RadicalSum total;
    for (int tx = 0; tx <= tx_max; ++tx) {
        const HalfInt x = HalfInt::from_twice(tx);
        CGValue s1 = sixj(a, b, c, f, i, x);
        if (s1.is_zero()) continue;
        CGValue s2 = sixj(d, e, f, b, x, h);
        if (s2.is_zero()) continue;
        CGValue s3 = sixj(g, h, i, x, a, d);
        if (s3.is_zero()) continue;
        RadicalSum term = s1.value();
        term *= s2.value();
        term *= s3.value();
        term *= Rat(tx + 1);
        if (tx % 2 != 0) term = -term;
        total += term;
    }
    return CGValue::from_signed_radical(total);
}

} // namespace polarcg::recoupling
