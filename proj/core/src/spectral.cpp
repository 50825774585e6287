#include "mealy/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>

#include "mealy/error.hpp"

namespace mealy {

namespace {

using Vec = Eigen::VectorXd;

void apply_sym(const SchreierGraph& g, const Vec& x, Vec& y) {
    y.setZero(x.size());
    for (StateId q = 0; q < g.degree(); ++q) {
        const auto& f = g.edges(q);
        const auto& b = g.reverse_edges(q);
        for (Eigen::Index v = 0; v < x.size(); ++v) y[v] += 0.5 * (x[f[v]] + x[b[v]]);
    }
}

void finish(SpectrumReport& r) {
    const double d = static_cast<double>(r.degree);
    if (r.vertices <= 1) {
        r.gap = 2 * d;
    } else {
        r.gap = std::max(0.0, d - std::max(r.lambda2, -r.lambda_min));
        r.disconnected = r.lambda2 > d - 1e-9;
    }
    r.normalized_gap = d > 0 ? r.gap / d : 0;
}

void dense(const SchreierGraph& g, SpectrumReport& r) {
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
    for (StateId q = 0; q < g.degree(); ++q) {
        const auto& f = g.edges(q);
        for (Eigen::Index v = 0; v < n; ++v) {
            s(v, f[v]) += 0.5;
            s(f[v], v) += 0.5;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        r.converged = false;
        throw Error("dense eigensolver did not converge");
    }
    const auto& ev = es.eigenvalues(); // ascending
    r.lambda_min = ev[0];
    r.lambda_max = ev[n - 1];
    r.lambda2 = n >= 2 ? ev[n - 2] : ev[n - 1];
    r.solver = "dense";
    r.residual = 0;
}

/// Lanczos with full reorthogonalization on the complement of the constant
/// vector, which is the lambda_max = |Q| eigenvector of every Schreier graph.
void iterative(const SchreierGraph& g, SpectrumReport& r, const SpectrumOptions& opt) {
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    const Vec ones = Vec::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    const std::size_t memory_cap = std::max<std::size_t>(50, (std::size_t{1} << 27) / static_cast<std::size_t>(n));
    const std::size_t kmax = std::min<std::size_t>({opt.max_krylov, memory_cap, static_cast<std::size_t>(n - 1)});

    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> nd;
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = nd(rng);
    v -= ones.dot(v) * ones;
    v.normalize();

    std::vector<Vec> basis{v};
    std::vector<double> alpha, beta;
    Vec w(n);
    double res_hi = 1, res_lo = 1, hi = 0, lo = 0;
    for (std::size_t k = 0; k < kmax; ++k) {
        apply_sym(g, basis[k], w);
        const double a = basis[k].dot(w);
        alpha.push_back(a);
        w -= a * basis[k];
        if (k > 0) w -= beta[k - 1] * basis[k - 1];
        for (int pass = 0; pass < 2; ++pass) {
            w -= ones.dot(w) * ones;
            for (const auto& b : basis) w -= b.dot(w) * b;
        }
        const double bnorm = w.norm();

        const auto m = static_cast<Eigen::Index>(alpha.size());
        Vec diag = Eigen::Map<Vec>(alpha.data(), m);
        Vec sub = m > 1 ? Vec(Eigen::Map<Vec>(beta.data(), m - 1)) : Vec(0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> t;
        t.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        lo = t.eigenvalues()[0];
        hi = t.eigenvalues()[m - 1];
        res_lo = std::abs(bnorm * t.eigenvectors()(m - 1, 0));
        res_hi = std::abs(bnorm * t.eigenvectors()(m - 1, m - 1));
        if ((res_lo <= opt.tolerance && res_hi <= opt.tolerance) || bnorm < 1e-12) break;
        beta.push_back(bnorm);
        basis.push_back(w / bnorm);
    }
    r.lambda_max = static_cast<double>(g.degree());
    r.lambda2 = hi;
    r.lambda_min = lo;
    r.residual = std::max(res_lo, res_hi);
    r.converged = r.residual <= opt.tolerance;
    r.solver = "iterative";
}

} // namespace

SpectrumReport spectrum(const SchreierGraph& g, const SpectrumOptions& options) {
    SpectrumReport r;
    r.level = g.level();
    r.vertices = g.vertex_count();
    r.degree = g.degree();
    const bool use_dense = options.mode == SolverMode::dense ||
                           (options.mode == SolverMode::automatic && g.vertex_count() <= options.dense_cap) ||
                           g.vertex_count() <= 2;
    if (options.mode == SolverMode::dense && g.vertex_count() > options.dense_cap)
        throw CapacityError("dense spectrum is limited to " + std::to_string(options.dense_cap) + " vertices");
    if (use_dense)
        dense(g, r);
    else
        iterative(g, r, options);
    finish(r);
    return r;
}

double two_sided_gap(const SchreierGraph& g, GapScale scale, const SpectrumOptions& options) {
    const auto r = spectrum(g, options);
    return scale == GapScale::absolute ? r.gap : r.normalized_gap;
}

std::vector<SpectrumReport> gap_series(const Automaton& m, std::size_t n_min, std::size_t n_max,
                                       const SpectrumOptions& options) {
    std::vector<SpectrumReport> rows;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        try {
            rows.push_back(spectrum(SchreierGraph::build(m, n), options));
        } catch (const Error& e) {
            SpectrumReport r;
            r.level = n;
            r.degree = m.num_states();
            r.converged = false;
            r.error = e.what();
            rows.push_back(r);
        }
    }
    return rows;
}

void write_gap_csv(std::ostream& out, std::span<const SpectrumReport> rows) {
    out << "n,vertices,lambda2,lambda_min,gap,solver\n";
    out << std::setprecision(10);
    for (const auto& r : rows) {
        if (!r.error.empty()) {
            auto msg = r.error;
            std::replace(msg.begin(), msg.end(), ',', ';');
            out << r.level << ",,,,,error: " << msg << '\n';
            continue;
        }
        out << r.level << ',' << r.vertices << ',' << r.lambda2 << ',' << r.lambda_min << ',' << r.normalized_gap << ','
            << r.solver << '\n';
    }
}

void write_gap_dat(std::ostream& out, std::span<const SpectrumReport> rows) {
    out << std::setprecision(10);
    for (const auto& r : rows)
        if (r.error.empty()) out << r.level << ' ' << r.normalized_gap << '\n';
}

} // namespace mealy
