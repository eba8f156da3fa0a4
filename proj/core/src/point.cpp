#include "jscfp/point.hpp"

#include "jscfp/errors.hpp"

namespace jscfp {

ExtReal real_of(const Point& p) {
    if (const auto* r = std::get_if<ExtReal>(&p)) return *r;
    throw DomainViolation("expected an extended real, got label " + to_string(p));
}

std::size_t label_of(const Point& p) {
    if (const auto* l = std::get_if<Label>(&p)) return l->index;
    throw DomainViolation("expected a label, got real " + to_string(p));
}

std::string to_string(const Point& p) {
    if (const auto* r = std::get_if<ExtReal>(&p)) return to_string(*r);
    return "#" + std::to_string(std::get<Label>(p).index);
}

std::string to_string(const PairPoint& p) {
    return "(" + to_string(p.first) + ", " + to_string(p.second) + ")";
}

} // namespace jscfp
