#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mealy/schreier.hpp"

namespace mealy {

enum class SolverMode { automatic, dense, iterative };

struct SpectrumOptions {
    SolverMode mode = SolverMode::automatic;
    std::uint64_t dense_cap = std::uint64_t{1} << 13;
    double tolerance = 1e-6;         // iterative residual target
    std::size_t max_krylov = 400;
    std::uint64_t seed = 1;
};

/// Extremal eigenvalues of S = (A + A^T)/2, A the sum of the per-state
/// permutation matrices of a Schreier graph (row sums |Q|).
struct SpectrumReport {
    std::size_t level = 0;
    std::uint64_t vertices = 0;
    std::size_t degree = 0;
    double lambda_max = 0;
    double lambda2 = 0;      // second largest; equals lambda_max when there is none
    double lambda_min = 0;
    double gap = 0;          // |Q| - max(lambda2, -lambda_min); 2|Q| on a single vertex
    double normalized_gap = 0; // gap / |Q|
    std::string solver;      // dense | iterative
    double residual = 0;
    bool converged = true;
    bool disconnected = false;
    std::string error;       // set by gap_series when a level fails
};

SpectrumReport spectrum(const SchreierGraph& g, const SpectrumOptions& options = {});

enum class GapScale { absolute, per_degree };

/// |Q| - max(lambda2, -lambda_min), divided by |Q| for GapScale::per_degree
/// (the scale on which graphs of different degree are compared).
double two_sided_gap(const SchreierGraph& g, GapScale scale = GapScale::per_degree,
                     const SpectrumOptions& options = {});

std::vector<SpectrumReport> gap_series(const Automaton& m, std::size_t n_min, std::size_t n_max,
                                       const SpectrumOptions& options = {});

/// `n,vertices,lambda2,lambda_min,gap,solver`; gap is per degree.
void write_gap_csv(std::ostream& out, std::span<const SpectrumReport> rows);
/// Two whitespace-separated columns `n gap` for plotting.
void write_gap_dat(std::ostream& out, std::span<const SpectrumReport> rows);

} // namespace mealy
