#include "jscfp/coupled_operator.hpp"

#include <cmath>
#include <utility>

#include "jscfp/errors.hpp"

namespace jscfp {

CoupledOperator::CoupledOperator(std::string description, Fn fn)
    : description_(std::move(description)), fn_(std::move(fn)) {
    if (!fn_) throw BadParams("operator '" + description_ + "' has no evaluation function");
}

PairPoint apply_tf(const CoupledOperator& f, const PairPoint& z, std::size_t step) {
    try {
        Point x = f(z.first, z.second);
        Point y = f(z.second, z.first);
        return {std::move(x), std::move(y)};
    } catch (const IndeterminateForm& e) {
        throw EvaluationError(e.what(), step);
    } catch (const DomainViolation& e) {
        throw EvaluationError(e.what(), step);
    }
}

PairPoint apply_tf(const CoupledOperator& f, const PairPoint& z) { return apply_tf(f, z, 1); }

Trajectory iterate(const CoupledOperator& f, const Point& x0, const Point& y0, std::size_t n) {
    Trajectory t;
    t.xs.reserve(n + 1);
    t.ys.reserve(n + 1);
    t.push({x0, y0});
    for (std::size_t k = 0; k < n; ++k) {
        try {
            Point x = f(t.xs[k], t.ys[k]);
            Point y = f(t.ys[k], t.xs[k]);
            t.push({std::move(x), std::move(y)});
        } catch (const IndeterminateForm& e) {
            throw EvaluationError(e.what(), k + 1);
        } catch (const DomainViolation& e) {
            throw EvaluationError(e.what(), k + 1);
        }
    }
    return t;
}

bool replays(const CoupledOperator& f, const Trajectory& t) {
    if (t.xs.size() != t.ys.size()) return false;
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        if (!(f(t.xs[k], t.ys[k]) == t.xs[k + 1])) return false;
        if (!(f(t.ys[k], t.xs[k]) == t.ys[k + 1])) return false;
    }
    return true;
}

CoupledOperator linear_mix(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) throw BadParams("linear_mix coefficients must be finite");
    std::string desc = "linear_mix(a=" + to_string(ExtReal(a)) + ", b=" + to_string(ExtReal(b)) + ")";
    return CoupledOperator(std::move(desc), [a, b](const Point& x, const Point& y) {
        const ExtReal ax = a == 0.0 ? ExtReal(0.0) : ext_scale(real_of(x), a);
        const ExtReal by = b == 0.0 ? ExtReal(0.0) : ext_scale(real_of(y), b);
        return Point{ext_add(ax, by)};
    });
}

CoupledOperator constant_operator(Point c) {
    std::string desc = "constant(" + to_string(c) + ")";
    return CoupledOperator(std::move(desc), [c = std::move(c)](const Point&, const Point&) { return c; });
}

CoupledOperator table_operator(std::vector<std::vector<std::size_t>> values) {
    const std::size_t n = values.size();
    if (n == 0) throw BadParams("table operator needs at least one label");
    for (const auto& row : values) {
        if (row.size() != n) throw BadParams("table operator must be a square matrix");
        for (std::size_t v : row)
            if (v >= n) throw BadParams("table operator value " + std::to_string(v) + " is not a label");
    }
    std::string desc = "table(" + std::to_string(n) + " labels)";
    return CoupledOperator(std::move(desc), [t = std::move(values)](const Point& x, const Point& y) {
        const std::size_t i = label_of(x), j = label_of(y);
        if (i >= t.size() || j >= t.size()) throw DomainViolation("label outside the operator table");
        return Point{Label{t[i][j]}};
    });
}

} // namespace jscfp
