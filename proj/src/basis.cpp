#include "polarcg/basis.hpp"

namespace polarcg::basis {

bool validate_triple(HalfInt j1, HalfInt j2, HalfInt j3) {
    if (!j1.is_nonnegative() || !j2.is_nonnegative() || !j3.is_nonnegative()) return false;
    if ((j1 + j2 + j3).twice % 2 != 0) return false;
    return abs(j1 - j2) <= j3 && j3 <= j1 + j2;
}

Polar2DLabel Polar2DLabel::make(HalfInt j, HalfInt m) {
    if (!j.is_nonnegative()) throw domain_error("Polar2DLabel: j must be nonnegative");
    if (abs(m) > j) throw domain_error("Polar2DLabel: |m| exceeds j");
    if ((j - m).twice % 2 != 0) throw domain_error("Polar2DLabel: j - m must be whole");
    return Polar2DLabel{j, m};
}

Polar4DLabel Polar4DLabel::make(long n, HalfInt j3, HalfInt m, HalfInt mp) {
    if (n < 0) throw domain_error("Polar4DLabel: negative radial index");
    if (abs(m) > j3 || abs(mp) > j3)
        throw domain_error("Polar4DLabel: |m| or |mp| exceeds j3");
    if ((j3 - m).twice % 2 != 0 || (j3 - mp).twice % 2 != 0)
        throw domain_error("Polar4DLabel: m, mp must have the parity of j3");
    return Polar4DLabel{n, j3, m, mp};
}

Polar4DLabel Polar4DLabel::from_pair(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m, HalfInt mp) {
    HalfInt n_half = j1 + j2 - j3;
    if (!n_half.is_whole() || n_half.twice < 0)
        throw domain_error("Polar4DLabel: j1 + j2 - j3 must be a nonnegative whole integer");
    return make(n_half.to_int(), j3, m, mp);
}

std::optional<std::string> CGKey::check(HalfInt j1, HalfInt j2, HalfInt j3,
                                        HalfInt m1, HalfInt m2) {
    if (!validate_triple(j1, j2, j3))
        return "triangle rule violated for (" + j1.to_string() + ", " + j2.to_string() + ", " +
               j3.to_string() + ")";
    const HalfInt m3 = m1 + m2;
    struct Pair { HalfInt j, m; const char* name; };
    for (const Pair& p : {Pair{j1, m1, "(j1, m1)"}, Pair{j2, m2, "(j2, m2)"}, Pair{j3, m3, "(j3, m3)"}}) {
        if (abs(p.m) > p.j)
            return std::string(p.name) + ": |m| exceeds j";
        if ((p.j - p.m).twice % 2 != 0)
            return std::string(p.name) + ": j - m is not a whole integer";
    }
    return std::nullopt;
}

CGKey CGKey::make(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2) {
    if (auto problem = check(j1, j2, j3, m1, m2)) throw domain_error("CGKey: " + *problem);
    return CGKey{j1, j2, j3, m1, m2};
}

std::string CGKey::to_string() const {
    return "<" + j1.to_string() + " " + j2.to_string() + "; " + m1.to_string() + " " +
           m2.to_string() + " | " + j3.to_string() + " " + m3().to_string() + ">";
}

namespace {

HalfInt halve(HalfInt value, const char* what) {
    if (value.twice % 2 != 0)
        throw domain_error(std::string("index map: ") + what + " is not divisible by 2");
    return HalfInt::from_twice(value.twice / 2);
}

} // namespace

long map_abs_phase_twice(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt am1, HalfInt am2,
                         PhiReading reading) {
    const HalfInt j2_mapped = halve(j1 + j2 + am1 - am2, "j2'");
    const HalfInt m2_mapped = halve(j1 - j2 + am1 + am2, "m2'");
    const long n1 = (j1 - am1).to_int();
    const long n2 = (j2 - am2).to_int();
    const long n = (j1 + j2 - j3).to_int();
    const long big_n = n1 + n2 + n;
    switch (reading) {
        case PhiReading::mapped_j2:
            return (j2_mapped + m2_mapped).twice + 2 * big_n;
        case PhiReading::original_j2:
            return (j2 + m2_mapped).twice + 2 * big_n;
    }
    throw domain_error("map_abs_phase_twice: unknown reading");
}

MappedKey map_abs_indices(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt am1, HalfInt am2,
                          PhiReading reading) {
    if (!am1.is_nonnegative() || !am2.is_nonnegative())
        throw domain_error("map_abs_indices: |m| arguments must be nonnegative");
    if (am1 > j1 || am2 > j2)
        throw domain_error("map_abs_indices: |m_i| exceeds j_i");
    if ((j1 - am1).twice % 2 != 0 || (j2 - am2).twice % 2 != 0)
        throw domain_error("map_abs_indices: j_i - |m_i| must be whole");
    if (!validate_triple(j1, j2, j3)) throw domain_error("map_abs_indices: triangle rule violated");

    const HalfInt j1m = halve(j1 + j2 - am1 + am2, "j1'");
    const HalfInt m1m = halve(j2 - j1 + am1 + am2, "m1'");
    const HalfInt j2m = halve(j1 + j2 + am1 - am2, "j2'");
    const HalfInt m2m = halve(j1 - j2 + am1 + am2, "m2'");

    if (auto problem = CGKey::check(j1m, j2m, j3, m1m, m2m))
        throw domain_error("map_abs_indices: mapped key invalid (" + *problem +
                           "); input requires |m1|+|m2| <= j3");

    const long phase_twice = map_abs_phase_twice(j1, j2, j3, am1, am2, reading);
    if (phase_twice % 2 != 0)
        throw domain_error("map_abs_indices: phase exponent is not a whole integer under this reading");
    return MappedKey{CGKey{j1m, j2m, j3, m1m, m2m}, phase_twice / 2};
}

MappedKey map_signed_indices(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2) {
    if (auto problem = CGKey::check(j1, j2, j3, m1, m2))
        throw domain_error("map_signed_indices: " + *problem);

    const HalfInt j1m = halve(j1 + j2 - m1 + m2, "j1'");
    const HalfInt m1m = halve(j2 - j1 + m1 + m2, "m1'");
    const HalfInt j2m = halve(j1 + j2 + m1 - m2, "j2'");
    const HalfInt m2m = halve(j1 - j2 + m1 + m2, "m2'");

    if (auto problem = CGKey::check(j1m, j2m, j3, m1m, m2m))
        throw domain_error("map_signed_indices: mapped key invalid (" + *problem +
                           "); input requires |m1-m2| <= j3 and |m1+m2| <= j3");

    const HalfInt phase = j2 - m2;
    if (!phase.is_whole())
        throw domain_error("map_signed_indices: j2 - m2 is not whole");
    return MappedKey{CGKey{j1m, j2m, j3, m1m, m2m}, phase.to_int()};
}

RadialLabels radial_labels(HalfInt j1, HalfInt j2, HalfInt j3) {
    if (!validate_triple(j1, j2, j3)) throw domain_error("radial_labels: triangle rule violated");
    RadialLabels labels;
    labels.n = (j1 + j2 - j3).to_int();
    labels.alpha = j3.twice + 1;
    return labels;
}

} // namespace polarcg::basis
