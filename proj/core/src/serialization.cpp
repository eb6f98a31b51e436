#include "floercone/serialization.hpp"

#include <cstdio>
#include <initializer_list>

#include <nlohmann/json.hpp>

#include "floercone/errors.hpp"

namespace floercone {

using nlohmann::json;

namespace {

void require_keys(const json& obj, std::initializer_list<const char*> required,
                  const std::string& where) {
    for (const char* key : required)
        if (!obj.contains(key))
            throw Error(errkind::schema, where + ": missing field '" + key + "'");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : required) known = known || key == k;
        if (!known) throw Error(errkind::schema, where + ": unknown field '" + key + "'");
    }
}

int require_int(const json& v, const std::string& where) {
    if (!v.is_number_integer())
        throw Error(errkind::schema, where + ": expected an integer");
    return v.get<int>();
}

std::string require_id(const json& v, const std::string& where) {
    if (!v.is_string()) throw Error(errkind::schema, where + ": expected a string id");
    const std::string id = v.get<std::string>();
    if (id.empty()) throw Error(errkind::schema, where + ": id must be nonempty");
    for (const char c : id)
        if (static_cast<unsigned char>(c) < 0x21 || static_cast<unsigned char>(c) > 0x7e)
            throw Error(errkind::schema,
                        where + ": id '" + id + "' must be printable ASCII");
    return id;
}

KnotComplex parse_impl(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(errkind::parse, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error(errkind::schema, "top level must be an object");
    require_keys(doc, {"name", "generators", "differential", "duality"}, "complex");

    if (!doc["name"].is_string()) throw Error(errkind::schema, "name: expected a string");
    const std::string name = doc["name"].get<std::string>();

    if (!doc["generators"].is_array())
        throw Error(errkind::schema, "generators: expected an array");
    std::vector<Generator> gens;
    for (const json& item : doc["generators"]) {
        if (!item.is_object())
            throw Error(errkind::schema, "generators: expected objects {id, a, m}");
        require_keys(item, {"id", "a", "m"}, "generator");
        Generator g;
        g.id = require_id(item["id"], "generator id");
        g.a = require_int(item["a"], "generator '" + g.id + "' field a");
        g.m = require_int(item["m"], "generator '" + g.id + "' field m");
        gens.push_back(std::move(g));
    }

    if (!doc["differential"].is_object())
        throw Error(errkind::schema, "differential: expected an object");
    std::map<std::string, std::vector<std::string>> differential;
    for (const auto& [src, targets] : doc["differential"].items()) {
        if (!targets.is_array())
            throw Error(errkind::schema, "differential '" + src + "': expected an array");
        std::vector<std::string>& list = differential[src];
        for (const json& t : targets) list.push_back(require_id(t, "differential target"));
    }

    if (!doc["duality"].is_object())
        throw Error(errkind::schema, "duality: expected an object");
    std::map<std::string, std::string> duality;
    for (const auto& [src, dst] : doc["duality"].items())
        duality[src] = require_id(dst, "duality image");

    return KnotComplex(name, std::move(gens), differential, duality);
}

} // namespace

KnotComplex parse_complex(const std::string& json_text) {
    KnotComplex b = parse_impl(json_text);
    b.require_valid();
    return b;
}

KnotComplex parse_complex_unchecked(const std::string& json_text) {
    return parse_impl(json_text);
}

std::string serialize_complex(const KnotComplex& b) {
    json doc;
    doc["name"] = b.name();
    doc["generators"] = json::array();
    for (const Generator& g : b.generators())
        doc["generators"].push_back({{"id", g.id}, {"a", g.a}, {"m", g.m}});
    doc["differential"] = json::object();
    for (const auto& [src, targets] : b.differential_by_id())
        doc["differential"][src] = targets;
    doc["duality"] = json::object();
    for (const auto& [src, dst] : b.duality_by_id()) doc["duality"][src] = dst;
    return doc.dump(2) + "\n";
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace floercone
