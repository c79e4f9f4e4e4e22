#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace serrin {

// ---------------------------------------------------------------------------
// Error types.  Each corresponds to a specific precondition failure of the
// numeric layer; generic misuse (bad dimensions etc.) throws
// std::invalid_argument.
// ---------------------------------------------------------------------------

/// Weighted volume diverges: the weight |x|^{alpha(1-gamma)} is not
/// integrable near the singular point (alpha <= -n).
struct NonIntegrableWeight : std::domain_error {
    using std::domain_error::domain_error;
};

/// A 1/(m-n) or 1/alpha coefficient blows up.
struct DivergentParameter : std::domain_error {
    using std::domain_error::domain_error;
};

/// The admissibility thresholds gamma_1, gamma_2 require alpha + n - 2 > 0.
struct DegenerateThreshold : std::domain_error {
    using std::domain_error::domain_error;
};

/// Cholesky factorization failed; the metric argument is not positive
/// definite.
struct NotPositiveDefinite : std::domain_error {
    using std::domain_error::domain_error;
};

/// Positive-curvature space-form solutions exist only for R < pi/(2 sqrt(k)).
struct RadiusTooLarge : std::domain_error {
    using std::domain_error::domain_error;
};

/// Operation defined on balls only (or vice versa).
struct UnsupportedDomain : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A profile handed to an energy-type identity does not vanish on the
/// boundary of the domain.
struct BoundaryNotZero : std::domain_error {
    using std::domain_error::domain_error;
};

/// Adaptive quadrature hit its depth limit.  Carries the best estimate so
/// callers can still report a partial result.
struct MaxDepthExceeded : std::runtime_error {
    double best_estimate;
    explicit MaxDepthExceeded(double estimate)
        : std::runtime_error("adaptive quadrature exceeded max depth"),
          best_estimate(estimate) {}
};

// ---------------------------------------------------------------------------
// Core domain types.
// ---------------------------------------------------------------------------

/// Which end of the radial coordinate carries the metric singularity.
/// OriginCentered (gamma < 1): the origin is at finite distance.
/// InfinityCentered (gamma > 1): infinity is at finite distance and the
/// roles of the two ends are swapped.
enum class SingularityMode { OriginCentered, InfinityCentered };

/// The ambient weighted manifold (R^n \ {O}, |x|^{-2 gamma} delta, d^alpha),
/// where d is the geodesic distance to the singular end.
struct ManifoldConfig {
    int n;
    double gamma;
    double alpha;
    SingularityMode mode;

    ManifoldConfig(int n_, double gamma_, double alpha_,
                   SingularityMode mode_ = SingularityMode::OriginCentered)
        : n(n_), gamma(gamma_), alpha(alpha_), mode(mode_) {
        if (n < 2) throw std::invalid_argument("ManifoldConfig: n must be >= 2");
        if (!std::isfinite(gamma) || !std::isfinite(alpha))
            throw std::invalid_argument("ManifoldConfig: non-finite parameter");
        if (mode == SingularityMode::OriginCentered && !(gamma < 1.0))
            throw std::invalid_argument("ManifoldConfig: OriginCentered requires gamma < 1");
        if (mode == SingularityMode::InfinityCentered && !(gamma > 1.0))
            throw std::invalid_argument("ManifoldConfig: InfinityCentered requires gamma > 1");
    }

    /// |1 - gamma|; positive in both modes.
    double gamma_gap() const { return std::abs(1.0 - gamma); }
};

/// A point of the manifold; the singular point (the Euclidean origin) is
/// excluded, so the norm is validated once at construction.
class Point {
  public:
    explicit Point(std::vector<double> coords) : c_(std::move(coords)) {
        double s = 0.0;
        for (double v : c_) {
            if (!std::isfinite(v)) throw std::invalid_argument("Point: non-finite coordinate");
            s += v * v;
        }
        norm_ = std::sqrt(s);
        if (!(norm_ > 0.0)) throw std::invalid_argument("Point: the origin is not on the manifold");
    }

    /// Point rho * e_1 in dimension n.
    static Point axis(int n, double rho) {
        std::vector<double> c(static_cast<size_t>(n), 0.0);
        c[0] = rho;
        return Point(std::move(c));
    }

    int dim() const { return static_cast<int>(c_.size()); }
    double norm() const { return norm_; }
    const std::vector<double>& coords() const { return c_; }
    double operator[](int i) const { return c_[static_cast<size_t>(i)]; }

  private:
    std::vector<double> c_;
    double norm_;
};

/// Symmetric n x n matrix, lower triangle stored, so symmetry is exact by
/// construction.
class SymMat {
  public:
    explicit SymMat(int n) : n_(n), tri_(static_cast<size_t>(n) * (n + 1) / 2, 0.0) {
        if (n < 1) throw std::invalid_argument("SymMat: dimension must be positive");
    }

    static SymMat identity(int n) {
        SymMat m(n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
        return m;
    }

    static SymMat diagonal(const std::vector<double>& d) {
        SymMat m(static_cast<int>(d.size()));
        for (int i = 0; i < m.dim(); ++i) m.set(i, i, d[static_cast<size_t>(i)]);
        return m;
    }

    int dim() const { return n_; }

    double operator()(int i, int j) const { return tri_[idx(i, j)]; }
    void set(int i, int j, double v) { tri_[idx(i, j)] = v; }
    void add(int i, int j, double v) { tri_[idx(i, j)] += v; }

    SymMat& operator+=(const SymMat& o) {
        check_dim(o);
        for (size_t k = 0; k < tri_.size(); ++k) tri_[k] += o.tri_[k];
        return *this;
    }
    SymMat& operator-=(const SymMat& o) {
        check_dim(o);
        for (size_t k = 0; k < tri_.size(); ++k) tri_[k] -= o.tri_[k];
        return *this;
    }
    SymMat& operator*=(double s) {
        for (double& v : tri_) v *= s;
        return *this;
    }
    friend SymMat operator+(SymMat a, const SymMat& b) { return a += b; }
    friend SymMat operator-(SymMat a, const SymMat& b) { return a -= b; }
    friend SymMat operator*(SymMat a, double s) { return a *= s; }
    friend SymMat operator*(double s, SymMat a) { return a *= s; }

    double max_abs() const {
        double m = 0.0;
        for (double v : tri_) m = std::max(m, std::abs(v));
        return m;
    }

    /// Largest absolute componentwise difference.
    double max_abs_diff(const SymMat& o) const {
        check_dim(o);
        double m = 0.0;
        for (size_t k = 0; k < tri_.size(); ++k) m = std::max(m, std::abs(tri_[k] - o.tri_[k]));
        return m;
    }

    /// v^T M v.
    double quad_form(const std::vector<double>& v) const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
        return s;
    }

  private:
    size_t idx(int i, int j) const {
        if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("SymMat index");
        if (i < j) std::swap(i, j);
        return static_cast<size_t>(i) * (i + 1) / 2 + j;
    }
    void check_dim(const SymMat& o) const {
        if (o.n_ != n_) throw std::invalid_argument("SymMat: dimension mismatch");
    }

    int n_;
    std::vector<double> tri_;
};

/// A symmetric bilinear form attached to a base point.
struct SymTensor {
    Point base;
    SymMat mat;
};

/// Geodesic ball of radius R about the singular end, or geodesic annulus
/// a < r < b.  Radii are g-distances.
struct DomainSpec {
    enum class Kind { Ball, Annulus };
    Kind kind;
    double r_inner;  // 0 for balls
    double r_outer;

    static DomainSpec ball(double R) {
        if (!(R > 0.0)) throw std::invalid_argument("DomainSpec: ball radius must be positive");
        return DomainSpec{Kind::Ball, 0.0, R};
    }
    static DomainSpec annulus(double a, double b) {
        if (!(0.0 < a && a < b)) throw std::invalid_argument("DomainSpec: annulus requires 0 < a < b");
        return DomainSpec{Kind::Annulus, a, b};
    }
};

/// Dimension parameter of the Bakry-Emery tensor, m in (-inf, inf] \ {n}.
/// Infinity is a distinguished value so the 1/(m-n) coefficient is exactly
/// zero, never a rounded large float.
struct MParam {
    bool infinite;
    double value;  // meaningful only when !infinite

    static MParam inf() { return MParam{true, 0.0}; }
    static MParam finite(double m) {
        if (!std::isfinite(m)) throw std::invalid_argument("MParam: use MParam::inf() for infinity");
        return MParam{false, m};
    }
};

}  // namespace serrin
