#include "domipoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "domipoly/recurrence.hpp"

namespace domipoly {

namespace {

using Complex = std::complex<double>;

// Error-free transformations; fma gives the exact product remainder.
struct Split {
    double value;
    double err;
};

Split two_sum(double a, double b) {
    const double s = a + b;
    const double t = s - a;
    return {s, (a - (s - t)) + (b - t)};
}

Split two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

// Compensated complex Horner for real coefficients: runs the plain
// recursion and threads the rounding errors of every product and sum
// through a first-order correction term.
Complex horner_compensated(const std::vector<double>& c, Complex z) {
    Complex s(0.0, 0.0);
    Complex e(0.0, 0.0);
    for (std::size_t i = c.size(); i-- > 0;) {
        // t = s*z, exactly: t + (error terms)
        const Split p1 = two_prod(s.real(), z.real());
        const Split p2 = two_prod(s.imag(), z.imag());
        const Split p3 = two_prod(s.real(), z.imag());
        const Split p4 = two_prod(s.imag(), z.real());
        const Split re1 = two_sum(p1.value, -p2.value);
        const Split im1 = two_sum(p3.value, p4.value);
        // t + c_i (real coefficient: imaginary part untouched)
        const Split re2 = two_sum(re1.value, c[i]);
        const Complex err(p1.err - p2.err + re1.err + re2.err, p3.err + p4.err + im1.err);
        e = e * z + err;
        s = Complex(re2.value, im1.value);
    }
    return s + e;
}

// Derivative coefficients stay exactly representable: the inputs are
// integer coefficients below 2^53 and the degree factor is at most 60.
std::vector<double> derivative_coeffs(const std::vector<double>& c) {
    std::vector<double> dc(c.size() > 1 ? c.size() - 1 : 0);
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        dc[i] = static_cast<double>(i + 1) * c[i + 1];
    return dc;
}

double scale_at(double max_coeff, std::size_t deg, Complex z) {
    return max_coeff * std::pow(std::max(1.0, std::abs(z)), static_cast<double>(deg));
}

void sort_with_residuals(RootSet& rs) {
    std::vector<std::size_t> idx(rs.roots.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (rs.roots[a].real() != rs.roots[b].real()) return rs.roots[a].real() < rs.roots[b].real();
        return rs.roots[a].imag() < rs.roots[b].imag();
    });
    RootSet sorted;
    sorted.degree = rs.degree;
    sorted.roots.reserve(idx.size());
    sorted.residuals.reserve(idx.size());
    for (const std::size_t i : idx) {
        sorted.roots.push_back(rs.roots[i]);
        sorted.residuals.push_back(rs.residuals[i]);
    }
    rs = std::move(sorted);
}

}  // namespace

RootSet find_roots(const Polynomial& p, double tol) {
    if (p.is_zero()) throw UndefinedDegreeError("find_roots: zero polynomial");
    const std::size_t full_degree = p.degree();
    if (full_degree < 1) throw SpecDomainError("find_roots: constant polynomial has no roots");
    if (full_degree > kMaxRootDegree)
        throw CapacityError("find_roots: degree " + std::to_string(full_degree) + " exceeds 60");

    // Strip the known origin root with its exact multiplicity.
    const std::size_t origin_mult = p.min_degree();
    const Polynomial q = p.shifted_down(origin_mult);

    RootSet rs;
    rs.degree = full_degree;
    for (std::size_t i = 0; i < origin_mult; ++i) {
        rs.roots.emplace_back(0.0, 0.0);
        rs.residuals.push_back(0.0);
    }
    if (q.is_zero() || q.degree() == 0) {
        sort_with_residuals(rs);
        return rs;
    }

    const std::size_t d = q.degree();
    std::vector<double> c(d + 1);
    const double lead = mpz_get_d(q.coeff(d).get_mpz_t());
    for (std::size_t i = 0; i <= d; ++i) c[i] = mpz_get_d(q.coeff(i).get_mpz_t()) / lead;
    double max_coeff = 0.0;
    for (const double v : c) max_coeff = std::max(max_coeff, std::abs(v));

    // Fujiwara bound on the root moduli; fixed phase offset keeps the
    // start configuration away from the real axis and from symmetry traps.
    double radius = 0.0;
    for (std::size_t i = 1; i <= d; ++i)
        radius = std::max(radius,
                          std::pow(std::abs(c[d - i]), 1.0 / static_cast<double>(i)));
    radius = 2.0 * std::max(radius, 0.5);
    std::vector<Complex> z(d);
    const double two_pi = 6.283185307179586476925286766559;
    for (std::size_t j = 0; j < d; ++j) {
        const double angle =
            two_pi * (static_cast<double>(j) + 0.5) / static_cast<double>(d) + 0.3;
        z[j] = Complex(radius * std::cos(angle), radius * std::sin(angle));
    }

    // Both p and p' use the compensated evaluation: the star families pack
    // roots around re = -1/2 where the binomial-scale coefficients cancel so
    // deeply that plain double Horner returns noise for either quantity.
    // Corrections dying out is the stopping rule; a small residual is not,
    // because near those clusters |p| is tiny across a wide neighborhood
    // while the positions are still far from settled.
    const std::vector<double> dc = derivative_coeffs(c);
    constexpr int kMaxSweeps = 500;
    bool sweep_ok = false;
    for (int sweep = 0; sweep < kMaxSweeps && !sweep_ok; ++sweep) {
        double max_correction = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            const Complex value = horner_compensated(c, z[j]);
            const Complex deriv = horner_compensated(dc, z[j]);
            const Complex newton =
                deriv == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : value / deriv;
            Complex repulsion(0.0, 0.0);
            for (std::size_t i = 0; i < d; ++i) {
                if (i == j) continue;
                const Complex diff = z[j] - z[i];
                if (diff != Complex(0.0, 0.0)) repulsion += 1.0 / diff;
            }
            const Complex denom = 1.0 - newton * repulsion;
            const Complex correction = denom == Complex(0.0, 0.0) ? newton : newton / denom;
            z[j] -= correction;
            max_correction =
                std::max(max_correction, std::abs(correction) / (1.0 + std::abs(z[j])));
        }
        if (max_correction < 1e-14) sweep_ok = true;
    }

    bool finite = true;
    for (std::size_t j = 0; j < d; ++j) {
        finite &= std::isfinite(z[j].real()) && std::isfinite(z[j].imag());
        rs.roots.push_back(z[j]);
        const double resid =
            std::abs(horner_compensated(c, z[j])) / scale_at(max_coeff, d, z[j]);
        rs.residuals.push_back(resid);
    }
    if (!finite) throw ConvergenceError("find_roots: iteration produced non-finite estimates", rs);
    sort_with_residuals(rs);

    for (const double r : rs.residuals)
        if (!(r <= tol))
            throw ConvergenceError("find_roots: residual above tolerance after iteration cap", rs);
    return rs;
}

RealClassification classify_real(const RootSet& rs, double eps) {
    RealClassification out;
    for (const Complex& z : rs.roots) {
        if (std::abs(z.imag()) <= eps * std::max(1.0, std::abs(z.real()))) {
            out.real_roots.push_back(z.real());
            if (std::abs(z) > eps) ++out.real_nonzero_count;
        }
    }
    return out;
}

std::vector<RootSet> corona_sequence_roots(const Graph& base, int k, int n, int depth, double tol) {
    if (base.order() < 1) throw SpecDomainError("corona sequence needs a nonempty base graph");
    if (k < 1 || n <= k) throw SpecDomainError("corona sequence needs a well-formed k-star (n > k)");
    if (depth < 1) throw SpecDomainError("corona sequence depth must be positive");

    // Every iterate's polynomial collapses to a power of the (k+1)-star's:
    // D(G_d) = D(S_{k+1,n-k})^{|V(G_{d-1})|}. Root the base once, scale
    // multiplicities per depth.
    const Polynomial q = d_kstar(k + 1, n + 1);
    const RootSet base_roots = find_roots(q, tol);

    std::vector<RootSet> out;
    long long host_order = base.order();
    for (int d = 1; d <= depth; ++d) {
        const long long total_degree = host_order * static_cast<long long>(n + 1);
        if (total_degree > 1000000)
            throw CapacityError("corona sequence root multiplicity overflow");
        RootSet rs;
        rs.degree = static_cast<std::size_t>(total_degree);
        for (std::size_t i = 0; i < base_roots.roots.size(); ++i)
            for (long long rep = 0; rep < host_order; ++rep) {
                rs.roots.push_back(base_roots.roots[i]);
                rs.residuals.push_back(base_roots.residuals[i]);
            }
        sort_with_residuals(rs);
        out.push_back(std::move(rs));
        host_order *= (n + 1);
    }
    return out;
}

std::vector<SweepRow> star_root_sweep(int k, int nmin, int nmax, double tol) {
    if (nmin <= k) throw SpecDomainError("star sweep needs nmin > k");
    if (nmax < nmin) throw SpecDomainError("star sweep needs nmax >= nmin");
    std::vector<SweepRow> rows;
    for (int n = nmin; n <= nmax; ++n) {
        const RootSet rs = find_roots(d_kstar(k, n), tol);
        for (const Complex& z : rs.roots) rows.push_back({n, z.real(), z.imag()});
    }
    return rows;
}

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "n,re,im\n";
    for (const SweepRow& row : rows) {
        out += std::to_string(row.n);
        out += ',';
        out += format_float(row.re);
        out += ',';
        out += format_float(row.im);
        out += '\n';
    }
    return out;
}

}  // namespace domipoly
