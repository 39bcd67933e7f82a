#pragma once

#include <cstdint>

// Pinned seeds, scales, and tolerances for the statistical verification
// suite, plus a few process-wide knobs.  Everything random in the library is
// reproducible: same seed and sample count give bit-identical statistics.

namespace taumap::config {

inline constexpr std::uint64_t default_seed = 1;

// Valence of vertex 1 in a uniform labeled tree vs the shifted Poisson limit.
inline constexpr int valence_m = 100000;
inline constexpr long valence_samples = 100000;
inline constexpr double valence_tv_max = 0.01;

// Root-component size in an edge tree vs the Borel law, coarsened to the
// bins {1..k_max, >k_max}; the Borel tail is too heavy for the raw empirical
// distance to converge at desk-scale sample counts.
inline constexpr int borel_m = 10000;
inline constexpr long borel_samples = 100000;
inline constexpr int borel_k_max = 50;
inline constexpr double borel_tv_max = 0.01;

// Trunk size over sqrt(m) vs the Rayleigh law.
inline constexpr int rayleigh_m = 100000;
inline constexpr long rayleigh_samples = 10000;
inline constexpr double rayleigh_ks_max = 0.02;

// Side fraction p/(p+q) of the trunk component vs the uniform law.
inline constexpr int split_m = 100000;
inline constexpr long split_samples = 10000;
inline constexpr double split_ks_max = 0.02;

// Monte Carlo edge factor vs sqrt(2)/(sqrt(s1)+sqrt(s2)).
inline constexpr long edge_factor_samples = 1000000;
inline constexpr double edge_factor_rel_max = 0.01;

// Truncation tolerance for the assembly success-rate series.
inline constexpr double assembly_tolerance = 1e-12;
inline constexpr double assembly_abs_max = 1e-12;

// Chi-square floor for exact-uniformity tests on small tree spaces.
inline constexpr double uniformity_pvalue_min = 0.001;

// Environment variable naming the shared result cache file.
inline constexpr const char* cache_env = "TAUMAP_CACHE";

// Hurwitz numbers switch from the transitive-factorization count to the
// character sum above this degree when the method is chosen automatically;
// the environment variable overrides the built-in default.
inline constexpr int hurwitz_brute_cutoff = 5;
inline constexpr const char* brute_cutoff_env = "TAUMAP_BRUTE_CUTOFF";

}  // namespace taumap::config
