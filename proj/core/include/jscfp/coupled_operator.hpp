#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "jscfp/point.hpp"

namespace jscfp {

/// A map F: X^2 -> X. Evaluation must be pure.
class CoupledOperator {
public:
    using Fn = std::function<Point(const Point&, const Point&)>;

    CoupledOperator(std::string description, Fn fn);

    /// F(x, y). May throw IndeterminateForm or DomainViolation.
    Point operator()(const Point& x, const Point& y) const { return fn_(x, y); }

    const std::string& description() const noexcept { return description_; }

private:
    std::string description_;
    Fn fn_;
};

/**
 * The coupled iterates x_{n+1} = F(x_n, y_n), y_{n+1} = F(y_n, x_n).
 *
 * xs[n] is F^n(x0, y0) and ys[n] is F^n(y0, x0).
 */
struct Trajectory {
    std::vector<Point> xs;
    std::vector<Point> ys;

    std::size_t size() const noexcept { return xs.size(); }
    PairPoint at(std::size_t n) const { return {xs.at(n), ys.at(n)}; }
    void push(PairPoint z) {
        xs.push_back(std::move(z.first));
        ys.push_back(std::move(z.second));
    }
};

/// n coupled steps from (x0, y0); the result holds n + 1 points.
/// Throws EvaluationError carrying the index of the step that failed.
Trajectory iterate(const CoupledOperator& f, const Point& x0, const Point& y0, std::size_t n);

/// T_F(x, y) = (F(x, y), F(y, x)). Throws EvaluationError (step 1).
PairPoint apply_tf(const CoupledOperator& f, const PairPoint& z);

/// apply_tf with the step index used in error reports.
PairPoint apply_tf(const CoupledOperator& f, const PairPoint& z, std::size_t step);

/// True iff re-running the recurrence over `t` reproduces every stored point exactly.
bool replays(const CoupledOperator& f, const Trajectory& t);

/// F(x, y) = a*x + b*y on extended reals. Zero coefficients drop their term,
/// so a = 0 never meets 0 * inf.
CoupledOperator linear_mix(double a, double b);

CoupledOperator constant_operator(Point c);

/// F(i, j) = values[i][j] on labels 0..n-1.
CoupledOperator table_operator(std::vector<std::vector<std::size_t>> values);

} // namespace jscfp
