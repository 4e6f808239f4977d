#include "llip/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace llip {

namespace {

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(errc::bad_input, std::string("missing key '") + key + "'");
    return *it;
}

std::vector<double> doubles_from(const json& j, const char* what) {
    if (!j.is_array()) fail(errc::bad_input, std::string(what) + " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) fail(errc::bad_input, std::string(what) + " must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

json grid_to_json(const CompactGrid& g) {
    json j;
    j["points"] = g.points();
    j["metric"] = to_string(g.metric());
    j["id"] = g.id();
    return j;
}

GridPtr grid_from_json(const json& j) {
    const json& pts = require(j, "points");
    if (!pts.is_array()) fail(errc::bad_input, "grid points must be an array");
    std::vector<std::vector<double>> points;
    points.reserve(pts.size());
    for (const auto& p : pts) points.push_back(doubles_from(p, "grid point"));
    Metric m = metric_from_string(require(j, "metric").get<std::string>());
    GridPtr grid = make_grid(std::move(points), m);
    if (j.contains("id") && j["id"].get<std::string>() != grid->id())
        fail(errc::bad_input, "grid id does not match its contents");
    return grid;
}

json function_to_json(const GridFunction& f) {
    json j;
    j["grid_id"] = f.grid->id();
    j["values"] = f.values;
    return j;
}

GridFunction function_from_json(const json& j, const GridPtr& grid) {
    if (!grid) fail(errc::bad_input, "no grid available to attach the function to");
    if (j.contains("grid_id") && j["grid_id"].get<std::string>() != grid->id())
        fail(errc::grid_mismatch, "function grid_id does not match the grid");
    GridFunction f{grid, doubles_from(require(j, "values"), "function values")};
    if (f.values.size() != grid->size())
        fail(errc::bad_input, "function length does not match grid size");
    for (double v : f.values)
        if (!std::isfinite(v)) fail(errc::non_finite_value, "non-finite function value");
    return f;
}

json pwl_to_json(const ScalarPWL& p) {
    json j;
    j["breakpoints"] = p.breakpoints();
    j["values"] = p.values();
    j["left_slope"] = p.left_slope();
    j["right_slope"] = p.right_slope();
    return j;
}

ScalarPWL pwl_from_json(const json& j) {
    return ScalarPWL(doubles_from(require(j, "breakpoints"), "breakpoints"),
                     doubles_from(require(j, "values"), "values"),
                     require(j, "left_slope").get<double>(),
                     require(j, "right_slope").get<double>());
}

json operator_to_json(const OperatorRep& op) {
    json j;
    const GridPtr& grid = grid_of(op);
    struct Visitor {
        json& j;
        void operator()(const SampleOperator& s) const {
            j["kind"] = "sample";
            json arr = json::array();
            for (const auto& [g, Tg] : s.samples) {
                json e;
                e["g"] = function_to_json(g);
                e["Tg"] = function_to_json(Tg);
                arr.push_back(std::move(e));
            }
            j["samples"] = std::move(arr);
        }
        void operator()(const SuperpositionField& f) const {
            j["kind"] = "superposition";
            json arr = json::array();
            for (const auto& s : f.slices) arr.push_back(pwl_to_json(s));
            j["slices"] = std::move(arr);
        }
        void operator()(const TensorOperator& t) const {
            j["kind"] = "tensor";
            json arr = json::array();
            for (const auto& [f, phi] : t.terms) {
                json e;
                e["f"] = function_to_json(f);
                e["phi"] = pwl_to_json(phi);
                arr.push_back(std::move(e));
            }
            j["terms"] = std::move(arr);
        }
        void operator()(const MultiplicationOperator& m) const {
            j["kind"] = "multiplication";
            j["h"] = function_to_json(m.h);
        }
    };
    std::visit(Visitor{j}, op);
    j["grid_id"] = grid->id();
    j["grid"] = grid_to_json(*grid);
    return j;
}

OperatorRep operator_from_json(const json& j, const GridPtr& fallback) {
    GridPtr grid = j.contains("grid") ? grid_from_json(j["grid"]) : fallback;
    if (!grid) fail(errc::bad_input, "operator JSON has no embedded grid and no grid was supplied");
    if (j.contains("grid_id") && j["grid_id"].get<std::string>() != grid->id())
        fail(errc::grid_mismatch, "operator grid_id does not match the grid");
    std::string kind = require(j, "kind").get<std::string>();
    if (kind == "sample") {
        std::vector<std::pair<GridFunction, GridFunction>> samples;
        for (const auto& e : require(j, "samples"))
            samples.emplace_back(function_from_json(require(e, "g"), grid),
                                 function_from_json(require(e, "Tg"), grid));
        return make_sample_operator(grid, std::move(samples));
    }
    if (kind == "superposition") {
        std::vector<ScalarPWL> slices;
        for (const auto& e : require(j, "slices")) slices.push_back(pwl_from_json(e));
        return make_superposition_field(grid, std::move(slices));
    }
    if (kind == "tensor") {
        std::vector<std::pair<GridFunction, ScalarPWL>> terms;
        for (const auto& e : require(j, "terms"))
            terms.emplace_back(function_from_json(require(e, "f"), grid),
                               pwl_from_json(require(e, "phi")));
        return make_tensor_operator(grid, std::move(terms));
    }
    if (kind == "multiplication")
        return multiplication_operator(grid, function_from_json(require(j, "h"), grid));
    fail(errc::bad_input, "unknown operator kind '" + kind + "'");
}

json continuity_to_json(const ContinuityReport& c) {
    json j;
    j["modulus"] = c.modulus;
    j["adjacency_radius"] = c.adjacency_radius;
    j["threshold"] = c.threshold;
    j["is_flagged_discontinuous"] = c.is_flagged_discontinuous;
    j["worst_pair"] = {c.worst_pair.first, c.worst_pair.second};
    json flagged = json::array();
    for (const auto& [a, b] : c.flagged_pairs) flagged.push_back({a, b});
    j["flagged_pairs"] = std::move(flagged);
    return j;
}

json bound_report_to_json(const BoundReport& r) {
    json j;
    j["phi"] = function_to_json(r.phi);
    j["max_violation"] = r.max_violation;
    j["continuity"] = continuity_to_json(r.continuity);
    j["source"] = r.source;
    return j;
}

std::string function_to_csv(const GridFunction& f) {
    std::ostringstream out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& p = f.grid->point(i);
        for (double x : p) out << json(x).dump() << ',';
        out << json(f.values[i]).dump() << '\n';
    }
    return out.str();
}

GridFunction function_from_csv(std::istream& in, Metric metric) {
    std::vector<std::vector<double>> points;
    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                fail(errc::bad_input, "bad CSV cell '" + cell + "'");
            }
        }
        if (row.size() < 2) fail(errc::bad_input, "CSV row needs coordinates and a value");
        values.push_back(row.back());
        row.pop_back();
        points.push_back(std::move(row));
    }
    GridPtr grid = make_grid(std::move(points), metric);
    return GridFunction{grid, std::move(values)};
}

Config config_from_json(const json& j) {
    Config c;
    if (j.contains("zero_tol")) c.zero_tol = j["zero_tol"].get<double>();
    if (j.contains("consistency_tol")) c.consistency_tol = j["consistency_tol"].get<double>();
    if (j.contains("continuity_threshold_factor"))
        c.continuity_threshold_factor = j["continuity_threshold_factor"].get<double>();
    if (j.contains("adjacency_radius_factor"))
        c.adjacency_radius_factor = j["adjacency_radius_factor"].get<double>();
    if (j.contains("max_breakpoints")) c.max_breakpoints = j["max_breakpoints"].get<std::size_t>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (!(c.zero_tol > 0.0) || !(c.consistency_tol > 0.0) ||
        !(c.continuity_threshold_factor > 0.0) || !(c.adjacency_radius_factor > 0.0))
        fail(errc::bad_input, "config tolerances must be positive");
    return c;
}

json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_input, "cannot open '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) fail(errc::bad_input, "malformed JSON in '" + path + "'");
    return j;
}

}  // namespace llip
