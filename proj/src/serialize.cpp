#include "netctrl/serialize.hpp"

namespace netctrl {

Json report_to_json(const ControllabilityReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.consistency) {
        checks.push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
    }
    return {
        {"n", r.n},
        {"control_set", r.control_set.members()},
        {"walk_rank", r.walk_rank},
        {"kalman_controllable", r.kalman_controllable},
        {"p_span_dim", r.p_span_dim},
        {"lie_dim", r.lie_dim},
        {"lie_controllable", r.lie_controllable},
        {"zfs_status", r.zfs_status},
        {"hypotheses", {{"connected", r.hypotheses.connected}, {"same_sign", r.hypotheses.same_sign}}},
        {"consistency", checks},
    };
}

ControllabilityReport report_from_json(const Json& j) {
    try {
        ControllabilityReport r;
        r.n = j.at("n").get<std::size_t>();
        r.control_set = VertexSet(r.n, j.at("control_set").get<std::vector<Vertex>>());
        r.walk_rank = j.at("walk_rank").get<std::size_t>();
        r.kalman_controllable = j.at("kalman_controllable").get<bool>();
        r.p_span_dim = j.at("p_span_dim").get<std::size_t>();
        r.lie_dim = j.at("lie_dim").get<std::size_t>();
        r.lie_controllable = j.at("lie_controllable").get<bool>();
        r.zfs_status = j.at("zfs_status").get<bool>();
        r.hypotheses.connected = j.at("hypotheses").at("connected").get<bool>();
        r.hypotheses.same_sign = j.at("hypotheses").at("same_sign").get<bool>();
        for (const auto& c : j.at("consistency")) {
            r.consistency.push_back({c.at("name").get<std::string>(),
                                     parse_check_status(c.at("status").get<std::string>()),
                                     c.at("detail").get<std::string>()});
        }
        return r;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed report JSON: ") + e.what());
    }
}

std::string report_to_text(const ControllabilityReport& r) {
    auto b = [](bool x) { return x ? "true" : "false"; };
    std::string out;
    out += "n: " + std::to_string(r.n) + "\n";
    out += "control_set: " + r.control_set.to_string() + "\n";
    out += "walk_rank: " + std::to_string(r.walk_rank) + "\n";
    out += std::string("kalman_controllable: ") + b(r.kalman_controllable) + "\n";
    out += "p_span_dim: " + std::to_string(r.p_span_dim) + "\n";
    out += "lie_dim: " + std::to_string(r.lie_dim) + "\n";
    out += std::string("lie_controllable: ") + b(r.lie_controllable) + "\n";
    out += std::string("zfs_status: ") + b(r.zfs_status) + "\n";
    out += std::string("hypotheses.connected: ") + b(r.hypotheses.connected) + "\n";
    out += std::string("hypotheses.same_sign: ") + b(r.hypotheses.same_sign) + "\n";
    for (const auto& c : r.consistency) {
        out += "check " + c.name + ": " + std::string(to_string(c.status)) + " (" + c.detail + ")\n";
    }
    if (r.theorem_violation()) out += "THEOREM-VIOLATION\n";
    return out;
}

Json violation_to_json(const Violation& v) {
    return {{"graph", v.graph}, {"matrix", v.matrix}, {"kind", v.kind},
            {"subset", v.subset}, {"check", v.check},   {"detail", v.detail}};
}

Violation violation_from_json(const Json& j) {
    try {
        return {j.at("graph").get<std::string>(),  j.at("matrix").get<std::string>(),
                j.at("kind").get<std::string>(),   j.at("subset").get<std::vector<Vertex>>(),
                j.at("check").get<std::string>(),  j.at("detail").get<std::string>()};
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed violation JSON: ") + e.what());
    }
}

Json outcome_to_json(const SweepOutcome& o) {
    Json violations = Json::array();
    for (const auto& v : o.violations) violations.push_back(violation_to_json(v));
    return {{"instances_checked", o.instances_checked},
            {"hypothesis_not_met", o.hypothesis_not_met},
            {"violations", violations},
            {"passed", o.passed}};
}

SweepOutcome outcome_from_json(const Json& j) {
    try {
        SweepOutcome o;
        o.instances_checked = j.at("instances_checked").get<std::uint64_t>();
        o.hypothesis_not_met = j.at("hypothesis_not_met").get<std::uint64_t>();
        for (const auto& v : j.at("violations")) o.violations.push_back(violation_from_json(v));
        o.passed = j.at("passed").get<bool>();
        return o;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed sweep JSON: ") + e.what());
    }
}

}  // namespace netctrl
