#ifndef POLARCG_BASIS_HPP
#define POLARCG_BASIS_HPP

#include <optional>
#include <string>

#include "polarcg/half_int.hpp"

namespace polarcg::basis {

/// Triangle rule |j1-j2| <= j3 <= j1+j2 with whole-integer perimeter.
bool validate_triple(HalfInt j1, HalfInt j2, HalfInt j3);

/// 2d polar-oscillator label; n = j - |m| is the radial node count.
struct Polar2DLabel {
    HalfInt j, m;

    long n() const { return (j - abs(m)).to_int(); }
    /// E/(hbar omega) = 2n + 2|m| + 1, a positive odd integer.
    long energy_index() const { return 2 * n() + abs(m).twice + 1; }

    static Polar2DLabel make(HalfInt j, HalfInt m);
};

/// 4d polar-oscillator label (n, j3, m, mp).
struct Polar4DLabel {
    long n = 0;
    HalfInt j3, m, mp;

    static Polar4DLabel make(long n, HalfInt j3, HalfInt m, HalfInt mp);
    /// Labels produced from a coupled pair carry n = j1 + j2 - j3.
    static Polar4DLabel from_pair(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m, HalfInt mp);
};

/// Validated Clebsch-Gordan argument tuple; m3 = m1 + m2 always.
struct CGKey {
    HalfInt j1, j2, j3, m1, m2;

    HalfInt m3() const { return m1 + m2; }

    /// Diagnostic naming the violated invariant, or nullopt when valid.
    static std::optional<std::string> check(HalfInt j1, HalfInt j2, HalfInt j3,
                                            HalfInt m1, HalfInt m2);
    /// Throws domain_error with the diagnostic when invalid.
    static CGKey make(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2);

    bool operator==(const CGKey&) const = default;
    std::string to_string() const;
};

/// A CG key produced by one of the index maps together with the integer
/// phase exponent of the accompanying (-1)^phi factor. The exponent is kept
/// unreduced so callers can combine exponents before taking parity.
struct MappedKey {
    CGKey key;
    long phase_exponent = 0;
};

/// The two readings of the printed phi after the absolute-value map
/// (the printed superscripts are ambiguous; both are kept and reconciled
/// against the oracle).
enum class PhiReading {
    mapped_j2,  // phi = j2^{|m|} + m2^{|m|} + N
    original_j2 // phi = j2 + m2^{|m|} + N (integer only in part of the domain)
};

/// Absolute-value index map: (j1, j2, j3, |m1|, |m2|) -> mapped CG key with
///   j1' = (j1+j2-|m1|+|m2|)/2,  m1' = (j2-j1+|m1|+|m2|)/2,
///   j2' = (j1+j2+|m1|-|m2|)/2,  m2' = (j1-j2+|m1|+|m2|)/2,
///   j3' = j3,  m3' = |m1|+|m2|,
/// and phase exponent per `reading` with N = n1 + n2 + n. Domain error if
/// the mapped labels violate CG invariants (the passage element requires
/// |m1|+|m2| <= j3). For PhiReading::original_j2 the printed exponent can be
/// half-integral; the doubled value is stored and the caller interprets it.
MappedKey map_abs_indices(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt am1, HalfInt am2,
                          PhiReading reading = PhiReading::mapped_j2);

/// Doubled phase exponent for the absolute-value map (always integral).
long map_abs_phase_twice(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt am1, HalfInt am2,
                         PhiReading reading);

/// Signed (general-case) index map:
///   j1' = (j1+j2-m1+m2)/2,  m1' = (j2-j1+m1+m2)/2,
///   j2' = (j1+j2+m1-m2)/2,  m2' = (j1-j2+m1+m2)/2,
///   j3' = j3,  m3' = m1+m2,
/// phase exponent j2 - m2 (doubled value stored when half-integral inputs
/// make it so; it is whole for every valid key). Requires |m1-m2| <= j3 and
/// |m1+m2| <= j3 (the 4d polar label bounds).
MappedKey map_signed_indices(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2);

/// Radial labels of the coupled basis: n = j1 + j2 - j3, alpha = 2 j3 + 1.
struct RadialLabels {
    long n = 0;
    long alpha = 0;
};
RadialLabels radial_labels(HalfInt j1, HalfInt j2, HalfInt j3);

} // namespace polarcg::basis

#endif
