#include "sharpchar/table_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sharpchar/errors.hpp"
#include "sharpchar/parse.hpp"

namespace sharpchar {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw table_format_error(what); }

const json& field(const json& obj, const char* key, const char* where) {
    if (!obj.is_object()) bad(std::string(where) + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) bad(std::string(where) + ": missing field '" + key + "'");
    return *it;
}

std::string string_field(const json& obj, const char* key, const char* where) {
    const json& v = field(obj, key, where);
    if (!v.is_string()) bad(std::string(where) + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

std::int64_t int_field(const json& obj, const char* key, const char* where) {
    const json& v = field(obj, key, where);
    if (!v.is_number_integer()) bad(std::string(where) + ": field '" + key + "' must be an integer");
    return v.get<std::int64_t>();
}

} // namespace

std::shared_ptr<const CharacterTable> parse_table_json(const std::string& text, bool strict) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }

    const std::string name = string_field(doc, "name", "table");
    const std::int64_t order = int_field(doc, "order", "table");
    if (order < 1) bad("table: order must be positive");

    const json& classes_json = field(doc, "classes", "table");
    if (!classes_json.is_array() || classes_json.empty())
        bad("table: 'classes' must be a non-empty array");
    std::vector<ClassData> classes;
    classes.reserve(classes_json.size());
    for (std::size_t i = 0; i < classes_json.size(); ++i) {
        const std::string where = "classes[" + std::to_string(i) + "]";
        const json& cj = classes_json[i];
        ClassData c;
        c.label = string_field(cj, "label", where.c_str());
        c.size = int_field(cj, "size", where.c_str());
        if (cj.contains("order")) {
            if (!cj["order"].is_number_integer())
                bad(where + ": field 'order' must be an integer");
            c.element_order = cj["order"].get<std::int64_t>();
        }
        classes.push_back(std::move(c));
    }

    const std::string identity = string_field(doc, "identity", "table");
    std::size_t identity_index = classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].label == identity) {
            identity_index = i;
            break;
        }
    if (identity_index == classes.size())
        bad("table: identity label '" + identity + "' does not name a class");

    const json& complete_json = field(doc, "complete", "table");
    if (!complete_json.is_boolean()) bad("table: field 'complete' must be a boolean");

    auto table = std::make_shared<CharacterTable>(name, order, std::move(classes),
                                                  identity_index,
                                                  complete_json.get<bool>());

    const json& chars_json = field(doc, "characters", "table");
    if (!chars_json.is_array()) bad("table: 'characters' must be an array");
    for (std::size_t i = 0; i < chars_json.size(); ++i) {
        const std::string where = "characters[" + std::to_string(i) + "]";
        const json& rj = chars_json[i];
        const std::string row_name = string_field(rj, "name", where.c_str());
        const json& values_json = field(rj, "values", where.c_str());
        if (!values_json.is_array())
            bad(where + ": field 'values' must be an array");
        std::vector<Cyclotomic> values;
        values.reserve(values_json.size());
        for (std::size_t k = 0; k < values_json.size(); ++k) {
            const json& vj = values_json[k];
            if (!vj.is_string())
                bad(where + ".values[" + std::to_string(k) + "]: values must be strings");
            try {
                values.push_back(parse_value(vj.get<std::string>()));
            } catch (const parse_error& e) {
                bad(where + ".values[" + std::to_string(k) + "]: " + e.what());
            }
        }
        try {
            table->add_row(row_name, std::move(values));
        } catch (const precondition_error& e) {
            bad(where + ": " + e.what());
        }
    }

    if (strict) {
        const ValidationReport report = validate(*table);
        if (!report.ok()) {
            std::ostringstream os;
            os << "table '" << name << "' fails validation:";
            for (const ValidationIssue& iss : report.issues)
                os << "\n  [" << iss.where << "] " << iss.message;
            bad(os.str());
        }
    }
    return table;
}

std::shared_ptr<const CharacterTable> load_table(const std::filesystem::path& file, bool strict) {
    std::ifstream in(file);
    if (!in) bad("cannot open table file: " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_table_json(buffer.str(), strict);
}

std::string table_to_json(const CharacterTable& t) {
    ordered_json doc;
    doc["name"] = t.name();
    doc["order"] = t.order();
    doc["classes"] = ordered_json::array();
    for (const ClassData& c : t.classes()) {
        ordered_json cj;
        cj["label"] = c.label;
        cj["size"] = c.size;
        if (c.element_order) cj["order"] = *c.element_order;
        doc["classes"].push_back(std::move(cj));
    }
    doc["identity"] = t.classes()[t.identity_index()].label;
    doc["characters"] = ordered_json::array();
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        ordered_json rj;
        rj["name"] = t.row_names()[i];
        rj["values"] = ordered_json::array();
        for (const Cyclotomic& v : t.row_at(i))
            rj["values"].push_back(to_expression_string(v));
        doc["characters"].push_back(std::move(rj));
    }
    doc["complete"] = t.complete();
    return doc.dump(2) + "\n";
}

void save_table(const CharacterTable& t, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) bad("cannot open file for writing: " + file.string());
    out << table_to_json(t);
    if (!out) bad("write failed: " + file.string());
}

} // namespace sharpchar
