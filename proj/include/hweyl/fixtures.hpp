#pragma once

#include "hweyl/normed_space.hpp"
#include "hweyl/rng.hpp"
#include "hweyl/vector_measure.hpp"
#include "hweyl/weyl.hpp"

namespace hweyl {

/// Standard complex normal values at every phase point.
PhaseFunction random_phase_function(const FiniteAbelianGroup& group, Rng& rng);

/// A random atom family; real atoms for a real space.
VectorMeasure random_vector_measure(const FiniteAbelianGroup& group, const NormedSpace& space, Rng& rng);

/// A random vector of the space (real over the reals).
Eigen::VectorXcd random_vector(const NormedSpace& space, Rng& rng);

/// A random functional of dual norm 1.
DualFunctional random_unit_dual(const NormedSpace& space, Rng& rng);

/// n x m matrix of standard complex normals.
Eigen::MatrixXcd random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

}  // namespace hweyl
