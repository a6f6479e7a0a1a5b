#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocstab {

/// Uniform discretization of the space-time cylinder Q = (x_left, x_right) x (0, T).
///
/// Interior spatial nodes x_i = x_left + (i+1)*h, i = 0..n_x-1; the two boundary
/// nodes carry the homogeneous Dirichlet value 0 and are never stored.
/// Time levels t_k = k*dt, k = 0..n_t; time cell c covers (t_c, t_{c+1}), c = 0..n_t-1.
///
/// Integration contract shared by all modules: trapezoid rule in space (the zero
/// boundary values participate, so an interior sum times h), rectangle rule in
/// time anchored at the cell-left endpoint. L-infinity norms are discrete maxima.
struct SpaceTimeGrid {
    double x_left = 0.0;
    double x_right = 1.0;
    double horizon = 1.0;   // T
    int n_x = 0;            // interior spatial nodes
    int n_t = 0;            // time steps
    double h = 0.0;
    double dt = 0.0;

    double node(int i) const { return x_left + (i + 1) * h; }
    double midpoint(int i) const { return x_left + (i + 0.5) * h; }  // i = 0..n_x
    double time(int k) const { return k * dt; }
    double cell_left(int c) const { return c * dt; }
    double cell_right(int c) const { return (c + 1) * dt; }

    bool same_shape(const SpaceTimeGrid& o) const {
        return n_x == o.n_x && n_t == o.n_t && x_left == o.x_left &&
               x_right == o.x_right && horizon == o.horizon;
    }
};

/// Builds a uniform grid; rejects degenerate domains.
inline SpaceTimeGrid build_grid(double x_left, double x_right, double T, int n_x, int n_t) {
    if (!(x_left < x_right))
        throw std::invalid_argument("build_grid: x_left must be < x_right");
    if (!(T > 0.0))
        throw std::invalid_argument("build_grid: horizon T must be positive");
    if (n_x < 2)
        throw std::invalid_argument("build_grid: need at least 2 interior nodes");
    if (n_t < 1)
        throw std::invalid_argument("build_grid: need at least 1 time step");
    SpaceTimeGrid g;
    g.x_left = x_left;
    g.x_right = x_right;
    g.horizon = T;
    g.n_x = n_x;
    g.n_t = n_t;
    g.h = (x_right - x_left) / (n_x + 1);
    g.dt = T / n_t;
    return g;
}

/// Grid function on Q: one row of interior nodal values per time level 0..n_t.
/// Houses states, adjoints, linearized states and field-valued perturbations.
class Field {
public:
    Field() = default;
    explicit Field(const SpaceTimeGrid& g, double fill = 0.0)
        : n_x_(g.n_x), n_t_(g.n_t), v_((g.n_t + 1) * static_cast<std::size_t>(g.n_x), fill) {}

    double& at(int level, int i) { return v_[static_cast<std::size_t>(level) * n_x_ + i]; }
    double at(int level, int i) const { return v_[static_cast<std::size_t>(level) * n_x_ + i]; }

    double* level(int k) { return v_.data() + static_cast<std::size_t>(k) * n_x_; }
    const double* level(int k) const { return v_.data() + static_cast<std::size_t>(k) * n_x_; }

    int n_x() const { return n_x_; }
    int n_levels() const { return n_t_ + 1; }
    int n_t() const { return n_t_; }

    std::vector<double>& data() { return v_; }
    const std::vector<double>& data() const { return v_; }

    bool same_shape(const Field& o) const { return n_x_ == o.n_x_ && n_t_ == o.n_t_; }

    bool all_finite() const {
        for (double x : v_)
            if (!std::isfinite(x)) return false;
        return true;
    }

private:
    int n_x_ = 0;
    int n_t_ = 0;
    std::vector<double> v_;
};

/// Componentwise function of time, constant on each time cell: m rows, n_t cells.
/// Used for control values, bounds, variations, switching functions and VI offsets.
class ControlValues {
public:
    ControlValues() = default;
    ControlValues(int m, int n_t, double fill = 0.0)
        : m_(m), n_t_(n_t), v_(static_cast<std::size_t>(m) * n_t, fill) {}

    double& at(int j, int cell) { return v_[static_cast<std::size_t>(j) * n_t_ + cell]; }
    double at(int j, int cell) const { return v_[static_cast<std::size_t>(j) * n_t_ + cell]; }

    int m() const { return m_; }
    int n_t() const { return n_t_; }

    std::vector<double>& data() { return v_; }
    const std::vector<double>& data() const { return v_; }

    bool same_shape(const ControlValues& o) const { return m_ == o.m_ && n_t_ == o.n_t_; }

private:
    int m_ = 0;
    int n_t_ = 0;
    std::vector<double> v_;
};

/// Admissible-set description plus a point in it: cellwise values and box bounds.
struct Control {
    ControlValues values;
    ControlValues lower;
    ControlValues upper;

    int m() const { return values.m(); }
    int n_t() const { return values.n_t(); }

    bool admissible(double tol = 0.0) const {
        for (std::size_t i = 0; i < values.data().size(); ++i) {
            if (values.data()[i] < lower.data()[i] - tol) return false;
            if (values.data()[i] > upper.data()[i] + tol) return false;
        }
        return true;
    }
};

/// Norms over Q (fields) and over (0,T)^m (controls). Linf_L2 is the
/// L^inf(0,T; L^2(Omega)) norm; the *_time kinds apply to controls only.
enum class NormKind { L1_Q, L2_Q, Linf_Q, L1_time, L2_time, Linf_time, Linf_L2 };

namespace detail {

inline double space_integral(const SpaceTimeGrid& g, const double* row) {
    double s = 0.0;
    for (int i = 0; i < g.n_x; ++i) s += row[i];
    return s * g.h;
}

inline double space_l2(const SpaceTimeGrid& g, const double* row) {
    double s = 0.0;
    for (int i = 0; i < g.n_x; ++i) s += row[i] * row[i];
    return std::sqrt(s * g.h);
}

}  // namespace detail

/// Quadrature norm of a field. Time-only kinds are rejected.
inline double field_norm(const SpaceTimeGrid& g, const Field& f, NormKind kind) {
    if (f.n_x() != g.n_x || f.n_t() != g.n_t)
        throw std::invalid_argument("field_norm: field/grid shape mismatch");
    switch (kind) {
        case NormKind::L1_Q: {
            double s = 0.0;
            for (int k = 0; k < g.n_t; ++k) {
                const double* row = f.level(k);
                double r = 0.0;
                for (int i = 0; i < g.n_x; ++i) r += std::abs(row[i]);
                s += r;
            }
            return s * g.h * g.dt;
        }
        case NormKind::L2_Q: {
            double s = 0.0;
            for (int k = 0; k < g.n_t; ++k) {
                const double* row = f.level(k);
                double r = 0.0;
                for (int i = 0; i < g.n_x; ++i) r += row[i] * row[i];
                s += r;
            }
            return std::sqrt(s * g.h * g.dt);
        }
        case NormKind::Linf_Q: {
            double s = 0.0;
            for (double x : f.data()) s = std::max(s, std::abs(x));
            return s;
        }
        case NormKind::Linf_L2: {
            double s = 0.0;
            for (int k = 0; k <= g.n_t; ++k) s = std::max(s, detail::space_l2(g, f.level(k)));
            return s;
        }
        default:
            throw std::invalid_argument("field_norm: time-only norm kind applied to a field");
    }
}

/// Norm of a cellwise-constant control function; exact, no quadrature error.
/// L1_time sums the component L1 norms (the L^1(0,T)^m norm).
inline double control_norm(const SpaceTimeGrid& g, const ControlValues& v, NormKind kind) {
    if (v.n_t() != g.n_t)
        throw std::invalid_argument("control_norm: control/grid shape mismatch");
    switch (kind) {
        case NormKind::L1_time: {
            double s = 0.0;
            for (double x : v.data()) s += std::abs(x);
            return s * g.dt;
        }
        case NormKind::L2_time: {
            double s = 0.0;
            for (double x : v.data()) s += x * x;
            return std::sqrt(s * g.dt);
        }
        case NormKind::Linf_time: {
            double s = 0.0;
            for (double x : v.data()) s = std::max(s, std::abs(x));
            return s;
        }
        default:
            throw std::invalid_argument("control_norm: field norm kind applied to a control");
    }
}

inline double control_norm(const SpaceTimeGrid& g, const Control& u, NormKind kind) {
    return control_norm(g, u.values, kind);
}

/// Trapezoid value of the weighted spatial integral of f(.,t_k) against the
/// profile w (sampled at interior nodes).
inline double integrate_space_weighted(const SpaceTimeGrid& g, const Field& f, int t_index,
                                       const std::vector<double>& w) {
    if (t_index < 0 || t_index >= f.n_levels())
        throw std::out_of_range("integrate_space_weighted: time index out of range");
    if (static_cast<int>(w.size()) != g.n_x)
        throw std::invalid_argument("integrate_space_weighted: profile size mismatch");
    const double* row = f.level(t_index);
    double s = 0.0;
    for (int i = 0; i < g.n_x; ++i) s += row[i] * w[i];
    return s * g.h;
}

/// Discrete L^2(Q) inner product (cell-left rectangle rule in time; levels 0..n_t-1).
inline double inner_Q(const SpaceTimeGrid& g, const Field& a, const Field& b) {
    double s = 0.0;
    for (int k = 0; k < g.n_t; ++k) {
        const double* ra = a.level(k);
        const double* rb = b.level(k);
        double r = 0.0;
        for (int i = 0; i < g.n_x; ++i) r += ra[i] * rb[i];
        s += r;
    }
    return s * g.h * g.dt;
}

/// Discrete inner product over (0,T)^m for cellwise-constant functions.
inline double inner_time(const SpaceTimeGrid& g, const ControlValues& a, const ControlValues& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) s += a.data()[i] * b.data()[i];
    return s * g.dt;
}

/// Samples a scalar function of (x,t) at every node and level.
template <typename F>
Field sample_field(const SpaceTimeGrid& g, F&& fn) {
    Field f(g);
    for (int k = 0; k <= g.n_t; ++k)
        for (int i = 0; i < g.n_x; ++i) f.at(k, i) = fn(g.node(i), g.time(k));
    return f;
}

/// Samples a spatial function at the interior nodes.
template <typename F>
std::vector<double> sample_profile(const SpaceTimeGrid& g, F&& fn) {
    std::vector<double> p(g.n_x);
    for (int i = 0; i < g.n_x; ++i) p[i] = fn(g.node(i));
    return p;
}

inline Field field_diff(const Field& a, const Field& b) {
    Field d = a;
    for (std::size_t i = 0; i < d.data().size(); ++i) d.data()[i] -= b.data()[i];
    return d;
}

inline ControlValues values_diff(const ControlValues& a, const ControlValues& b) {
    ControlValues d = a;
    for (std::size_t i = 0; i < d.data().size(); ++i) d.data()[i] -= b.data()[i];
    return d;
}

}  // namespace ocstab
