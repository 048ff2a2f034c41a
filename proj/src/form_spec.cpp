#include "sqav/form_spec.hpp"

#include "sqav/presets.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <sstream>

namespace sqav {

namespace {

using json = nlohmann::ordered_json;

Rational rational_field(const json& j, const std::string& what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InvalidArgument(what + " must be an integer or a string \"p/q\"");
}

long long integer_field(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw InvalidArgument(what + " must be an integer");
    return j.get<long long>();
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw InvalidArgument("unknown key '" + key + "' in " + where);
    }
}

FormSpec from_json(const json& doc, std::string source) {
    if (!doc.is_object()) throw InvalidArgument("form description must be a JSON object");
    reject_unknown_keys(doc, {"preset", "name", "description", "rank", "gram", "linear", "units"}, "form description");
    if (doc.contains("preset")) {
        if (!doc["preset"].is_string()) throw InvalidArgument("preset must be a string");
        FormSpec spec = preset_spec(doc["preset"].get<std::string>());
        spec.source = std::move(source);
        return spec;
    }
    FormSpec spec;
    spec.source = std::move(source);
    if (!doc.contains("gram") || !doc["gram"].is_array()) throw InvalidArgument("missing gram matrix");
    for (const auto& row : doc["gram"]) {
        if (!row.is_array()) throw InvalidArgument("gram rows must be arrays");
        std::vector<long long> r;
        for (const auto& e : row) r.push_back(integer_field(e, "gram entry"));
        spec.gram.push_back(std::move(r));
    }
    spec.rank = spec.gram.size();
    if (doc.contains("rank") && integer_field(doc["rank"], "rank") != static_cast<long long>(spec.rank))
        throw InvalidArgument("rank does not match the gram matrix");
    if (doc.contains("linear")) {
        if (!doc["linear"].is_array()) throw InvalidArgument("linear must be an array");
        for (const auto& e : doc["linear"]) spec.linear.push_back(integer_field(e, "linear entry"));
    }
    if (doc.contains("units")) {
        const auto& u = doc["units"];
        if (!u.is_object()) throw InvalidArgument("units must be an object");
        reject_unknown_keys(u, {"a0", "b0"}, "units");
        if (u.contains("a0")) {
            if (!u["a0"].is_array()) throw InvalidArgument("units.a0 must be an array");
            for (const auto& e : u["a0"]) spec.a0.push_back(rational_field(e, "units.a0 entry"));
        }
        if (u.contains("b0")) {
            if (!u["b0"].is_array()) throw InvalidArgument("units.b0 must be a matrix");
            for (const auto& row : u["b0"]) {
                if (!row.is_array()) throw InvalidArgument("units.b0 rows must be arrays");
                RatVec r;
                for (const auto& e : row) r.push_back(rational_field(e, "units.b0 entry"));
                spec.b0.push_back(std::move(r));
            }
        }
    }
    // Validate eagerly so that bad input is reported before any computation.
    spec.data();
    return spec;
}

}  // namespace

GramForm FormSpec::form() const { return GramForm(gram, linear); }

DegenData FormSpec::data() const { return DegenData(form(), a0, b0); }

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& p : preset_sources()) out.push_back(p.name);
    return out;
}

FormSpec preset_spec(const std::string& name) {
    const std::string key = name == "e8-sample" ? "e8" : name;
    for (const auto& p : preset_sources()) {
        if (p.name != key) continue;
        json doc = json::parse(p.json);
        doc.erase("preset");
        FormSpec spec = from_json(doc, p.json);
        spec.preset = key;
        return spec;
    }
    throw InvalidArgument("unknown preset '" + name + "'");
}

FormSpec parse_form_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("input is not valid JSON: ") + e.what());
    }
    return from_json(doc, text);
}

FormSpec load_form_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_form_spec(ss.str());
}

}  // namespace sqav
