#pragma once

#include <complex>
#include <string>
#include <vector>

#include "domipoly/graph.hpp"
#include "domipoly/polynomial.hpp"

namespace domipoly {

/// All complex roots of one polynomial, with multiplicity (one entry each),
/// sorted by (re, im). residuals[i] is the normalized backward error
/// |p(z_i)| / (max|coeff| * max(1,|z_i|)^deg).
struct RootSet {
    std::vector<std::complex<double>> roots;
    std::vector<double> residuals;
    std::size_t degree = 0;
};

/// The iteration cap was hit before every residual went below tol.
/// Carries whatever estimates were reached.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& what, RootSet partial_roots)
        : Error(what), partial(std::move(partial_roots)) {}
    RootSet partial;
};

constexpr double kDefaultRootTol = 1e-10;
constexpr double kDefaultRealEps = 1e-8;
constexpr std::size_t kMaxRootDegree = 60;

/// Simultaneous (Aberth-class) iteration on the monic normalization, after
/// exactly stripping the x^min_degree factor (the origin root of every
/// domination polynomial). Deterministic: fixed initial-guess circle, fixed
/// sweep order. Degrees above 60 are rejected with a capacity error.
RootSet find_roots(const Polynomial& p, double tol = kDefaultRootTol);

struct RealClassification {
    int real_nonzero_count = 0;
    /// Real parts of every real-classified root, zeros included, in RootSet order.
    std::vector<double> real_roots;
};

/// A root is real iff |im| <= eps*max(1,|re|); roots with |z| <= eps do not
/// count toward real_nonzero_count.
RealClassification classify_real(const RootSet& rs, double eps = kDefaultRealEps);

/// Root sets of the iterated coronas base∘S_{k,n-k}, (base∘S)∘S, ... for
/// depths 1..depth. Each iterate's polynomial is the closed-form power
/// D(S_{k+1,n-k})^(host order), so the set of distinct roots is depth-
/// invariant and multiplicities scale with the host order.
std::vector<RootSet> corona_sequence_roots(const Graph& base, int k, int n, int depth,
                                           double tol = kDefaultRootTol);

struct SweepRow {
    int n = 0;
    double re = 0;
    double im = 0;
};

/// Roots of D(S_{k,n-k}) for n in [nmin, nmax] (closed form, no oracle).
std::vector<SweepRow> star_root_sweep(int k, int nmin, int nmax, double tol = kDefaultRootTol);

/// CSV with header "n,re,im", floats at 17 significant digits.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

/// "%.17g" formatting used by every float-emitting interface.
std::string format_float(double v);

}  // namespace domipoly
