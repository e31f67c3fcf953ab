#include "dodgson/report.hpp"

#include <cstdio>

#include "dodgson/errors.hpp"
#include "dodgson/oracle.hpp"
#include "json_io.hpp"

namespace dodgson {

namespace {

using nlohmann::json;

json plan_to_json(const RepairPlan& plan) {
    json edits = json::array();
    for (const auto& e : plan.edits) {
        edits.push_back({
            {"kind", edit_kind_name(e.kind)},
            {"level", e.level},
            {"position", {e.position.row, e.position.col}},
            {"before", e.before.to_string()},
            {"after", e.after.to_string()},
        });
    }
    json bindings = json::object();
    for (const auto& [var, value] : plan.limit_point) bindings[var.name()] = value.to_string();
    return {
        {"strategy", strategy_name(plan.strategy)},
        {"edits", std::move(edits)},
        {"bindings", std::move(bindings)},
        {"sign", plan.sign},
        {"rounds", plan.rounds},
        {"row_shift", plan.row_shift},
        {"col_shift", plan.col_shift},
    };
}

VarId var_from_name(const std::string& name) {
    if (name.size() < 2 || name.front() != 'x') throw ParseError("bad variable name '" + name + "'");
    try {
        return VarId{static_cast<std::uint32_t>(std::stoul(name.substr(1)))};
    } catch (const std::exception&) {
        throw ParseError("bad variable name '" + name + "'");
    }
}

RepairPlan plan_from_json(const json& j) {
    RepairPlan plan;
    plan.strategy = strategy_from_name(j.at("strategy").get<std::string>());
    for (const auto& je : j.at("edits")) {
        Edit e;
        e.kind = edit_kind_from_name(je.at("kind").get<std::string>());
        e.level = je.at("level").get<std::size_t>();
        e.position = Position{je.at("position").at(0).get<std::size_t>(), je.at("position").at(1).get<std::size_t>()};
        e.before = Polynomial::parse(je.at("before").get<std::string>());
        e.after = Polynomial::parse(je.at("after").get<std::string>());
        plan.edits.push_back(std::move(e));
    }
    for (const auto& [name, value] : j.at("bindings").items()) {
        plan.limit_point.emplace(var_from_name(name), Rational::parse(value.get<std::string>()));
    }
    plan.sign = j.at("sign").get<int>();
    plan.rounds = j.at("rounds").get<std::size_t>();
    plan.row_shift = j.value("row_shift", std::size_t{0});
    plan.col_shift = j.value("col_shift", std::size_t{0});
    return plan;
}

json levels_to_json(const std::vector<SymMatrix>& levels) {
    json out = json::array();
    for (const auto& m : levels) out.push_back(detail::matrix_to_json(m));
    return out;
}

std::vector<SymMatrix> levels_from_json(const json& j) {
    std::vector<SymMatrix> out;
    for (const auto& m : j) out.push_back(detail::matrix_from_json(m));
    return out;
}

template <typename Fn>
auto parse_guarded(std::string_view text, Fn&& fn) {
    try {
        return fn(json::parse(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON document: ") + e.what());
    }
}

}  // namespace

std::string matrix_digest(const SymMatrix& m) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize_matrix(m, MatrixFormat::Csv)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Report make_report(const SymMatrix& input, Strategy strategy, const RepairOutcome& outcome, bool verify,
                   bool include_levels) {
    Report r;
    r.input_digest = matrix_digest(input);
    r.n = input.size();
    r.strategy = strategy;
    r.determinant = outcome.value;
    if (verify || strategy == Strategy::IntermediateReplace) {
        r.oracle_determinant = det_bareiss(input);
        r.match = *r.oracle_determinant == r.determinant;
    }
    r.mult_count = outcome.trace.mult_count;
    r.div_count = outcome.trace.div_count;
    r.predicted_mult_count = predicted_mult_count(input.size());
    r.repair = outcome.plan;
    r.final_polynomial = outcome.trace.final_polynomial;
    if (include_levels) r.levels = outcome.trace.levels;
    return r;
}

std::string report_to_json(const Report& r, int indent) {
    json j = {
        {"input_digest", r.input_digest},
        {"n", r.n},
        {"strategy", strategy_name(r.strategy)},
        {"determinant", r.determinant.to_string()},
        {"oracle_determinant", r.oracle_determinant ? json(r.oracle_determinant->to_string()) : json(nullptr)},
        {"match", r.match ? json(*r.match) : json(nullptr)},
        {"mult_count", r.mult_count},
        {"div_count", r.div_count},
        {"predicted_mult_count", r.predicted_mult_count},
        {"repair", plan_to_json(r.repair)},
        {"final_polynomial", r.final_polynomial.to_string()},
    };
    if (r.levels) j["levels"] = levels_to_json(*r.levels);
    return j.dump(indent);
}

Report report_from_json(std::string_view text) {
    return parse_guarded(text, [](const json& j) {
        Report r;
        r.input_digest = j.at("input_digest").get<std::string>();
        r.n = j.at("n").get<std::size_t>();
        r.strategy = strategy_from_name(j.at("strategy").get<std::string>());
        r.determinant = Rational::parse(j.at("determinant").get<std::string>());
        if (const auto& o = j.at("oracle_determinant"); !o.is_null()) r.oracle_determinant = Rational::parse(o.get<std::string>());
        if (const auto& m = j.at("match"); !m.is_null()) r.match = m.get<bool>();
        r.mult_count = j.at("mult_count").get<std::uint64_t>();
        r.div_count = j.at("div_count").get<std::uint64_t>();
        r.predicted_mult_count = j.at("predicted_mult_count").get<std::uint64_t>();
        r.repair = plan_from_json(j.at("repair"));
        r.final_polynomial = Polynomial::parse(j.at("final_polynomial").get<std::string>());
        if (j.contains("levels")) r.levels = levels_from_json(j.at("levels"));
        return r;
    });
}

std::string repair_plan_to_json(const RepairPlan& plan) { return plan_to_json(plan).dump(); }

RepairPlan repair_plan_from_json(std::string_view text) {
    return parse_guarded(text, [](const json& j) { return plan_from_json(j); });
}

std::string trace_to_json(const CondensationTrace& trace) {
    json j = {
        {"levels", levels_to_json(trace.levels)},
        {"final_polynomial", trace.final_polynomial.to_string()},
        {"mult_count", trace.mult_count},
        {"div_count", trace.div_count},
        {"repair", trace.repair ? plan_to_json(*trace.repair) : json(nullptr)},
    };
    return j.dump();
}

CondensationTrace trace_from_json(std::string_view text) {
    return parse_guarded(text, [](const json& j) {
        CondensationTrace t;
        t.levels = levels_from_json(j.at("levels"));
        t.final_polynomial = Polynomial::parse(j.at("final_polynomial").get<std::string>());
        t.mult_count = j.at("mult_count").get<std::uint64_t>();
        t.div_count = j.at("div_count").get<std::uint64_t>();
        if (const auto& p = j.at("repair"); !p.is_null()) t.repair = plan_from_json(p);
        return t;
    });
}

}  // namespace dodgson
