#ifndef POLARCG_RECOUPLING_HPP
#define POLARCG_RECOUPLING_HPP

#include <array>

#include "polarcg/coupling.hpp"
#include "polarcg/series.hpp"

namespace polarcg::recoupling {

using coupling::CGValue;
using exact::RadicalSum;
using exact::Rat;

enum class Side { first, second };

/// The quadratic form Q of the recoupling generating function e^Q: ten
/// parameter-weighted bilinears over the oscillator pairs a, b, c, d, z.
/// First side couples (j1 j2)(j3 j4); the second slots the letters as
/// (a d c b), coupling (j1 j4)(j3 j2). Parameter markers are formal
/// variables (al/be/ga for the first side, alp/bep/gap for the second).
struct CouplingForm {
    Side side;
    series::MultiSeries quadratic;
};

CouplingForm build_coupling_form(Side side, long trunc);

/// The nine j's of a recoupling bracket <(j1 j2) j12 (j3 j4) j34; j |
/// (j1 j4) j14 (j2 j3) j23; j>.
struct RecouplingLabels {
    HalfInt j1, j2, j3, j4, j12, j34, j14, j23, j;
};

/// Triangle check over all six coupling triples.
bool valid_recoupling(const RecouplingLabels& labels);

/// Recoupling coefficient through the generating-function route: both
/// coupling forms exponentiated to the homogeneous degree fixed by the j's,
/// Bargmann-paired over (a, b, c, d, z), the parameter monomial selecting
/// the j's extracted, and the result normalized by the per-node factors and
/// the frozen trivial-overlap calibration.
/// Throws resource_error when the required expansion degree exceeds
/// `degree_budget`.
CGValue recoupling_value(const RecouplingLabels& labels, long degree_budget = 64);

/// Definitional oracle: the sum over magnetic quantum numbers of products of
/// six Clebsch-Gordan coefficients, at a fixed total m (the result is
/// m-independent; `twice_m` selects which to use, defaulting to m = j).
CGValue recoupling_oracle(const RecouplingLabels& labels);
CGValue recoupling_oracle_at_m(const RecouplingLabels& labels, int twice_m);

/// 6j symbol {a b c; d e f} via the recoupling oracle with one momentum set
/// to zero. Triangle violations yield zero.
CGValue sixj(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f);

/// 9j symbol via the single-sum contraction of three 6j symbols. Triangle
/// violations yield zero.
CGValue ninej(const std::array<std::array<HalfInt, 3>, 3>& j);

} // namespace polarcg::recoupling

#endif
