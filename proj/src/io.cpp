#include "maghom/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace maghom {

using nlohmann::json;

namespace {

json parse(const std::string& text, const std::string& source) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error(source + ": not valid JSON");
    return j;
}

const json& field(const json& j, const char* key, const std::string& source) {
    auto it = j.find(key);
    if (it == j.end()) throw input_error(source + ": missing \"" + key + "\"");
    return *it;
}

rational entry_to_rational(const json& v, const std::string& source) {
    std::string text;
    if (v.is_string())
        text = v.get<std::string>();
    else if (v.is_number_integer())
        text = std::to_string(v.get<long long>());
    else
        throw input_error(source + ": distances must be integers or \"p/q\" strings");
    auto q = parse_rational(text);
    if (!q) throw input_error(source + ": bad rational \"" + text + "\"");
    return *q;
}

metric_space space_from_value(const json& j, const std::string& source) {
    if (!j.is_object()) throw input_error(source + ": expected a JSON object");
    const json& type = field(j, "type", source);
    if (type == "graph") {
        const json& vertices = field(j, "vertices", source);
        if (!vertices.is_number_integer() || vertices.get<long long>() < 1)
            throw input_error(source + ": \"vertices\" must be a positive integer");
        const json& edges = field(j, "edges", source);
        if (!edges.is_array()) throw input_error(source + ": \"edges\" must be an array");
        std::vector<std::pair<int, int>> list;
        for (const json& e : edges) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw input_error(source + ": each edge must be a pair of vertex numbers");
            list.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        try {
            return from_graph(vertices.get<int>(), list);
        } catch (const error& e) {
            throw input_error(source + ": " + e.what());
        }
    }
    if (type == "matrix") {
        const json& labels = field(j, "labels", source);
        const json& dist = field(j, "dist", source);
        if (!labels.is_array() || !dist.is_array())
            throw input_error(source + ": \"labels\" and \"dist\" must be arrays");
        std::vector<std::string> names;
        for (const json& l : labels) {
            if (!l.is_string()) throw input_error(source + ": labels must be strings");
            names.push_back(l.get<std::string>());
        }
        std::vector<std::vector<rational>> table;
        for (const json& row : dist) {
            if (!row.is_array()) throw input_error(source + ": \"dist\" must be a table");
            std::vector<rational> r;
            for (const json& v : row) r.push_back(entry_to_rational(v, source));
            table.push_back(std::move(r));
        }
        try {
            return {std::move(names), std::move(table)};
        } catch (const error& e) {
            throw input_error(source + ": " + e.what());
        }
    }
    throw input_error(source + ": unknown space type " + type.dump());
}

std::vector<int> projection_from_value(const json& j, const metric_space& total,
                                       const metric_space& base, const std::string& source) {
    if (!j.is_object())
        throw input_error(source + ": the projection must map point labels to point labels");
    for (const auto& [key, value] : j.items())
        if (!total.index_of(key))
            throw input_error(source + ": projection names unknown point \"" + key + "\"");
    std::vector<int> proj;
    for (int i = 0; i < total.size(); ++i) {
        auto it = j.find(total.label(i));
        if (it == j.end())
            throw input_error(source + ": projection misses point \"" + total.label(i) + "\"");
        if (!it->is_string())
            throw input_error(source + ": projection values must be labels");
        auto target = base.index_of(it->get<std::string>());
        if (!target)
            throw input_error(source + ": projection sends \"" + total.label(i) +
                              "\" to unknown base point \"" + it->get<std::string>() + "\"");
        proj.push_back(*target);
    }
    return proj;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

metric_space space_from_json(const std::string& text, const std::string& source) {
    return space_from_value(parse(text, source), source);
}

fibration_input fibration_from_json(const std::string& text, const std::string& source) {
    json j = parse(text, source);
    if (!j.is_object()) throw input_error(source + ": expected a JSON object");
    metric_space total = space_from_value(field(j, "total", source), source + " (total)");
    metric_space base = space_from_value(field(j, "base", source), source + " (base)");
    std::vector<int> proj =
        projection_from_value(field(j, "projection", source), total, base, source);
    return {std::move(total), std::move(base), std::move(proj)};
}

std::vector<int> projection_from_json(const std::string& text, const metric_space& total,
                                      const metric_space& base, const std::string& source) {
    json j = parse(text, source);
    if (j.is_object() && j.contains("projection")) j = j["projection"];
    return projection_from_value(j, total, base, source);
}

}  // namespace maghom
