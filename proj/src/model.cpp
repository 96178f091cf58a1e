#include "tpp/model.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "tpp/error.hpp"

namespace tpp {

namespace {

std::string join_violations(const std::vector<RejectedParam::Violation>& v) {
    std::string msg = "rejected parameter";
    msg += v.size() > 1 ? "s: " : ": ";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) msg += "; ";
        msg += v[i].name + " (" + v[i].reason + ")";
    }
    return msg;
}

}  // namespace

RejectedParam::RejectedParam(std::vector<Violation> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

RejectedParam::RejectedParam(std::string name, std::string reason)
    : RejectedParam(std::vector<Violation>{{std::move(name), std::move(reason)}}) {}

NonCommensurate::NonCommensurate(std::string axis, double length, double step)
    : Error(axis + " domain length " + std::to_string(length) +
            " is not an integer multiple of step " + std::to_string(step)),
      axis_(std::move(axis)) {}

ParseError::ParseError(int line, std::string reason)
    : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(std::move(reason)) {}

UnknownKey::UnknownKey(std::string key) : Error("unknown key '" + key + "'"), key_(std::move(key)) {}

ModelParams ModelParams::with_transport(double d, double tau) {
    ModelParams p;
    p.d1 = p.d2 = d;
    p.tau1 = p.tau2 = tau;
    return p;
}

std::string_view to_string(Species s) {
    return s == Species::Prey ? "prey" : "predator";
}

std::string_view to_string(Scheme s) {
    return s == Scheme::Telegraph ? "telegraph" : "diffusive";
}

const ModelParams& validate_params(const ModelParams& p, Scheme mode) {
    std::vector<RejectedParam::Violation> bad;
    auto check = [&](const char* name, double v, bool ok, const char* reason) {
        if (!std::isfinite(v))
            bad.push_back({name, "must be finite"});
        else if (!ok)
            bad.push_back({name, reason});
    };
    check("a1", p.a1, p.a1 > 0.0, "must be > 0");
    check("a2", p.a2, p.a2 > 0.0, "must be > 0");
    check("b1", p.b1, p.b1 >= 0.0, "must be >= 0");
    check("c1", p.c1, p.c1 > 0.0, "must be > 0");
    check("c2", p.c2, p.c2 > 0.0, "must be > 0");
    check("d1", p.d1, p.d1 >= 0.0, "must be >= 0");
    check("d2", p.d2, p.d2 >= 0.0, "must be >= 0");
    if (mode == Scheme::Telegraph) {
        check("tau1", p.tau1, p.tau1 > 0.0, "must be > 0 for the telegraph scheme");
        check("tau2", p.tau2, p.tau2 > 0.0, "must be > 0 for the telegraph scheme");
    } else {
        check("tau1", p.tau1, p.tau1 >= 0.0, "must be >= 0");
        check("tau2", p.tau2, p.tau2 >= 0.0, "must be >= 0");
    }
    if (!bad.empty()) throw RejectedParam(std::move(bad));
    return p;
}

}  // namespace tpp
