#include "mel/trace_io.hpp"

#include <json.hpp>

#include <algorithm>

#include "mel/error.hpp"

namespace mel {

using nlohmann::json;

std::string trace_to_json(const TimedHTTrace& m) {
    json states = json::array();
    for (std::size_t i = 0; i < m.length(); ++i) {
        json s;
        s["time"] = m.time(i);
        if (m.here(i) != m.there(i)) s["here"] = m.here(i).names(m.alphabet());
        s["there"] = m.there(i).names(m.alphabet());
        states.push_back(std::move(s));
    }
    json doc;
    doc["alphabet"] = m.alphabet().names();
    doc["states"] = std::move(states);
    return doc.dump();
}

namespace {

std::vector<std::string> names_of(const json& j, const char* field) {
    if (!j.is_array()) throw ValidationError(std::string("\"") + field + "\" must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string())
            throw ValidationError(std::string("\"") + field + "\" must contain strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

TimedHTTrace trace_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed trace JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("states"))
        throw ValidationError("trace JSON needs a \"states\" array");
    const json& states = doc["states"];
    if (!states.is_array()) throw ValidationError("\"states\" must be an array");

    std::vector<NamedState> named;
    std::vector<Time> times;
    std::vector<std::string> seen;
    for (const auto& s : states) {
        if (!s.is_object() || !s.contains("time") || !s.contains("there"))
            throw ValidationError("each state needs \"time\" and \"there\"");
        const json& t = s["time"];
        if (!t.is_number_integer() || t.get<long long>() < 0)
            throw ValidationError("\"time\" must be a non-negative integer");
        times.push_back(t.get<Time>());
        NamedState ns;
        ns.there = names_of(s["there"], "there");
        ns.here = s.contains("here") ? names_of(s["here"], "here") : ns.there;
        seen.insert(seen.end(), ns.there.begin(), ns.there.end());
        seen.insert(seen.end(), ns.here.begin(), ns.here.end());
        named.push_back(std::move(ns));
    }

    std::vector<std::string> alphabet_names = seen;
    if (doc.contains("alphabet")) {
        alphabet_names = names_of(doc["alphabet"], "alphabet");
        std::vector<std::string> sorted = alphabet_names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError("alphabet lists an atom twice");
    }
    return make_trace(Alphabet(std::move(alphabet_names)), named, std::move(times));
}

}  // namespace mel
