#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "loewner/linalg.hpp"

namespace loewner {

using Rng = std::mt19937_64;

/// Independent generator for stream `stream` under `seed` (splitmix64 mix),
/// so trial k of a run draws the same numbers regardless of thread layout.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Entries i.i.d. standard complex Gaussian (real Gaussian when !complex).
Matrix random_gaussian(Index rows, Index cols, Rng& rng, bool complex = true);

Vector random_unit_vector(Index n, Rng& rng);
HermitianMatrix random_hermitian(Index n, Rng& rng);
/// G G^H with G of shape n x rank.
HermitianMatrix random_psd(Index n, Index rank, Rng& rng);
Matrix random_unitary(Index n, Rng& rng);
/// U diag(s) V^H with singular values drawn from [lo, hi].
Matrix random_invertible(Index n, Rng& rng, double lo = 0.3, double hi = 3.0);
/// Members U diag(d_j) U^H sharing one random eigenbasis U.
std::vector<HermitianMatrix> random_commuting_family(Index n, std::size_t count, Rng& rng);
HermitianMatrix random_projection(Index n, Index rank, Rng& rng);
/// PSD contraction: random eigenbasis, eigenvalues drawn from [0, 1].
HermitianMatrix random_psd_contraction(Index n, Rng& rng);

}  // namespace loewner
