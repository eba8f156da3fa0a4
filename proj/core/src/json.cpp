#include "jscfp/json.hpp"

namespace jscfp {

void to_json(Json& j, const ExtReal& v) {
    if (v.is_pos_inf())
        j = "inf";
    else if (v.is_neg_inf())
        j = "-inf";
    else
        j = v.value();
}

void from_json(const Json& j, ExtReal& v) {
    if (j.is_number()) {
        v = ExtReal(j.get<double>());
    } else if (j.is_string()) {
        v = parse_ext_real(j.get<std::string>());
    } else {
        throw BadParams("expected a number or an infinity string, got " + j.dump());
    }
}

void to_json(Json& j, const Point& p) {
    if (const auto* l = std::get_if<Label>(&p))
        j = l->index;
    else
        to_json(j, std::get<ExtReal>(p));
}

void to_json(Json& j, const PairPoint& p) { j = Json::array({p.first, p.second}); }

void to_json(Json& j, const Witness& w) {
    j = Json{{"points", w.points}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"detail", w.detail}};
}

void to_json(Json& j, const CheckReport& r) {
    j = Json{{"axiom", r.axiom},     {"pass", r.pass},       {"vacuous", r.vacuous},
             {"samples", r.samples}, {"skipped", r.skipped}, {"witnesses", r.witnesses}};
}

void to_json(Json& j, const DeltaEstimate& d) {
    j = Json{{"value", d.value},
             {"possibly_unbounded", d.possibly_unbounded},
             {"horizon", d.horizon},
             {"bounded", d.bounded()}};
}

void to_json(Json& j, const DeltaBounds& d) {
    j = Json{{"forward", d.forward}, {"backward", d.backward}, {"m", d.m}, {"bounded", d.bounded()}};
}

void to_json(Json& j, const ContractionSample& s) {
    j = Json{{"upper", s.upper},
             {"lower", s.lower},
             {"numerator", s.numerator},
             {"denominator", s.denominator},
             {"ratio", s.ratio}};
}

void to_json(Json& j, const ContractionEstimate& e) {
    j = Json{{"form", to_string(e.form)}, {"declared_k", e.declared_k}, {"k_hat", e.k_hat}, {"pass", e.pass},
             {"samples", e.samples},      {"skipped", e.skipped}};
    j["worst"] = e.worst ? Json(*e.worst) : Json(nullptr);
    j["witnesses"] = e.witnesses;
}

void to_json(Json& j, const OrderCondition& o) {
    j = Json{{"forward", o.forward}, {"backward", o.backward}, {"pass", o.pass}};
}

void to_json(Json& j, const HypothesisReport& h) {
    j = Json{{"mode", to_string(h.mode)},
             {"order", h.order},
             {"deltas", h.deltas},
             {"delta_pair", h.delta_pair},
             {"delta_pass", h.delta_pass},
             {"mixed_monotone", h.mixed_monotone},
             {"contraction", h.contraction},
             {"all_pass", h.all_pass}};
}

void to_json(Json& j, const Trajectory& t) { j = Json{{"x", t.xs}, {"y", t.ys}}; }

void to_json(Json& j, const SolveReport& r) {
    j = Json{{"status", to_string(r.status)}};
    j["candidate"] = r.candidate ? Json(*r.candidate) : Json(nullptr);
    j["residual"] = r.residual;
    j["iterations"] = r.iterations;
    j["measured_rate"] = r.measured_rate;
    j["hypotheses"] = r.hypotheses ? Json(*r.hypotheses) : Json(nullptr);
    j["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
    j["trace"] = r.trace;
    j["steps"] = r.steps;
    j["residuals"] = r.residuals;
}

void to_json(Json& j, const RateReport& r) {
    j = Json{{"pass", r.pass}, {"checked", r.checked}};
    if (r.violation)
        j["violation"] = Json{{"n", r.violation->n},
                              {"p", r.violation->p},
                              {"coordinate", std::string(1, r.violation->coordinate)},
                              {"lhs", r.violation->lhs},
                              {"bound", r.violation->bound}};
    else
        j["violation"] = nullptr;
}

void to_json(Json& j, const DecayCurve& c) {
    j = Json{{"label", c.label},
             {"values", c.values},
             {"bounds", c.bounds},
             {"decayed", c.decayed},
             {"within_bounds", c.within_bounds}};
}

void to_json(Json& j, const ProbeReport& r) {
    j = Json{{"kind", to_string(r.kind)}};
    j["case"] = r.case_fired ? Json(to_string(*r.case_fired)) : Json(nullptr);
    j["verdict"] = to_string(r.verdict);
    j["pass"] = r.pass;
    j["distance"] = r.distance;
    j["slack"] = r.slack;
    j["certificate"] = r.certificate ? Json(*r.certificate) : Json(nullptr);
    j["common_bound"] = r.common_bound ? Json(*r.common_bound) : Json(nullptr);
    j["curves"] = r.curves;
    j["note"] = r.note;
}

void to_json(Json& j, const OracleRun& r) {
    j = Json{{"start", Json::array({r.x0, r.y0})}, {"status", to_string(r.status)}};
    j["candidate"] = r.candidate ? Json::array({r.candidate->first, r.candidate->second}) : Json(nullptr);
    j["iterations"] = r.iterations;
    j["in_list"] = r.in_list;
}

void to_json(Json& j, const OracleReport& r) {
    Json fps = Json::array();
    for (const auto& [x, y] : r.fixed_points) fps.push_back(Json::array({x, y}));
    j = Json{{"labels", r.labels},
             {"form", to_string(r.form)},
             {"fixed_points", fps},
             {"exact_k", r.exact_k},
             {"mixed_monotone", r.mixed_monotone},
             {"sampled_k_hat", r.sampled_k_hat},
             {"runs", r.runs},
             {"probes_checked", r.probes_checked},
             {"pass", r.pass}};
}

void to_json(Json& j, const FiniteInstance& inst) {
    j = Json{{"labels", inst.labels}, {"distance", inst.distance}, {"leq", inst.leq}, {"f", inst.f}};
}

void from_json(const Json& j, FiniteInstance& inst) {
    if (!j.is_object()) throw BadParams("instance fixture must be an object");
    for (const char* key : {"labels", "distance", "leq", "f"})
        if (!j.contains(key)) throw BadParams(std::string("instance fixture is missing '") + key + "'");
    try {
        FiniteInstance out;
        out.labels = j.at("labels").get<std::vector<std::string>>();
        out.distance = j.at("distance").get<std::vector<std::vector<ExtReal>>>();
        out.leq = j.at("leq").get<std::vector<std::vector<bool>>>();
        out.f = j.at("f").get<std::vector<std::vector<std::size_t>>>();
        inst = std::move(out);
    } catch (const nlohmann::json::exception& e) {
        throw BadParams(std::string("malformed instance fixture: ") + e.what());
    }
    inst.validate();
}

Point point_from_json(const Json& j, bool labelled) {
    if (labelled) {
        if (!j.is_number_integer() || j.get<long long>() < 0)
            throw BadParams("expected a label index, got " + j.dump());
        return Label{j.get<std::size_t>()};
    }
    ExtReal v;
    from_json(j, v);
    return v;
}

} // namespace jscfp
