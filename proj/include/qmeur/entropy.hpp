#pragma once

#include "qmeur/measure.hpp"
#include "qmeur/qstate.hpp"

// All entropies are in bits (log base 2). Values below 1e-12 are treated as
// exact zeros before taking logarithms, so 0 log 0 = 0.
namespace qmeur {

/// -sum p_i log2 p_i. Entries may dip to -1e-12 and the sum may be off by
/// 1e-9; the vector is clamped and renormalized first. Anything worse raises
/// InvalidDistribution.
double shannon(const ProbabilityVector& p);

/// -Tr rho log2 rho, computed as the Shannon entropy of the spectrum.
/// Eigenvalues in [-1e-10, 0) are clamped to zero and the spectrum is
/// renormalized.
double von_neumann(const DensityMatrix& rho);

/// S(rho^{subs}); zero for an empty selection.
double entropy_of(const DensityMatrix& rho, const Subsystems& subs);

/// S(target | memory) = S(rho^{target u memory}) - S(rho^{memory}).
/// memory may be empty or name several subsystems.
double conditional(const DensityMatrix& rho, const Subsystems& target, const Subsystems& memory);

/// I(a:b) = S(a) + S(b) - S(ab).
double mutual_information(const DensityMatrix& rho, const Subsystems& a, const Subsystems& b);

/// Holevo quantity I(M:B) = S(rho^M) + S(rho^B) - S(rho^{MB}) of the
/// post-measurement state after measuring subsystem 0 in `basis`.
double holevo(const DensityMatrix& rho, const MeasurementBasis& basis, const Subsystems& memory);

/// S(M|B) = S(rho^{MB}) - S(rho^B) of the post-measurement state.
double measured_conditional(const DensityMatrix& rho, const MeasurementBasis& basis, const Subsystems& memory);

/// H(M): Shannon entropy of the outcome distribution on subsystem 0.
double measured_shannon(const DensityMatrix& rho, const MeasurementBasis& basis);

}  // namespace qmeur
