#include "ogf/spec_doc.hpp"

#include "json.hpp"
#include "ogf/errors.hpp"
#include "ogf/parser.hpp"

namespace ogf {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void doc_error(const std::string& message) {
    fail(errc::parse_error, "spec document: " + message);
}

long integer_field(const json& value, const char* key, long min_value) {
    if (!value.is_number_integer())
        doc_error(std::string("key '") + key + "' must be an integer");
    long v = value.get<long>();
    if (v < min_value)
        doc_error(std::string("key '") + key + "' must be >= " + std::to_string(min_value) +
                  ", got " + std::to_string(v));
    return v;
}

Rational rational_field(const json& value, const char* key) {
    if (value.is_number_integer()) return Rational(value.get<long>());
    if (value.is_string()) {
        try {
            return Rational::from_string(value.get<std::string>());
        } catch (const Error& e) {
            doc_error(std::string("key '") + key + "': " + e.what());
        }
    }
    doc_error(std::string("key '") + key + "' must be an integer or a rational string \"p/q\"");
}

std::vector<Polynomial> polynomial_list(const json& value, const char* key) {
    if (!value.is_array())
        doc_error(std::string("key '") + key + "' must be an array of polynomial strings");
    std::vector<Polynomial> out;
    out.reserve(value.size());
    for (const json& item : value) {
        if (!item.is_string())
            doc_error(std::string("every element of '") + key + "' must be a string");
        out.push_back(parse_polynomial(item.get<std::string>()));
    }
    return out;
}

unsigned eval_variable_index(const std::string& name) {
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '9')
        return static_cast<unsigned>(name[1] - '0');
    doc_error("eval key '" + name + "' is not a variable name x1..x9");
}

} // namespace

SpecDocument parse_spec_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        doc_error(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " +
                  e.what());
    }
    if (!doc.is_object()) doc_error("top level must be a JSON object");

    static const char* known[] = {"P", "Q", "alpha", "beta", "N", "eval"};
    for (const auto& [key, value] : doc.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) doc_error("unknown key '" + key + "'");
        (void)value;
    }

    SpecDocument out;
    if (!doc.contains("P")) doc_error("missing required key 'P'");
    out.spec.P = polynomial_list(doc["P"], "P");
    if (out.spec.P.empty()) doc_error("'P' must be non-empty");

    if (doc.contains("Q")) out.spec.Q = polynomial_list(doc["Q"], "Q");
    if (doc.contains("alpha"))
        out.spec.alpha = static_cast<unsigned>(integer_field(doc["alpha"], "alpha", 0));
    if (doc.contains("beta")) out.spec.beta = rational_field(doc["beta"], "beta");
    if (doc.contains("N"))
        out.spec.truncation = static_cast<int>(integer_field(doc["N"], "N", 0));

    if (doc.contains("eval")) {
        const json& eval = doc["eval"];
        if (!eval.is_object()) doc_error("key 'eval' must be an object");
        for (const auto& [name, value] : eval.items())
            out.eval.emplace(eval_variable_index(name), rational_field(value, name.c_str()));
    }

    out.spec.validate();
    return out;
}

std::string serialize_spec_document(const SpecDocument& doc) {
    json j = json::object();
    json p = json::array();
    for (const Polynomial& poly : doc.spec.P) p.push_back(poly.to_string());
    j["P"] = std::move(p);
    json q = json::array();
    for (const Polynomial& poly : doc.spec.Q) q.push_back(poly.to_string());
    j["Q"] = std::move(q);
    j["alpha"] = doc.spec.alpha;
    j["beta"] = doc.spec.beta.to_string();
    j["N"] = doc.spec.truncation;
    json eval = json::object();
    for (const auto& [index, value] : doc.eval)
        eval["x" + std::to_string(index)] = value.to_string();
    j["eval"] = std::move(eval);
    return j.dump(2) + "\n";
}

} // namespace ogf
