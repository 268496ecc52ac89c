#include "cliquetrack/document.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace cliquetrack {

namespace {

// ordered_json keeps declaration order, which the model preserves.
using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(ErrorCode code, const std::string& path, const std::string& what) {
    throw Error(code, path + ": " + what);
}

const ojson& require_field(const ojson& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(ErrorCode::MissingField, path, std::string("missing key '") + key + "'");
    return *it;
}

const ojson* optional_field(const ojson& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

void require_object(const ojson& v, const std::string& path) {
    if (!v.is_object()) fail(ErrorCode::BadType, path, "expected an object");
}

void require_array(const ojson& v, const std::string& path) {
    if (!v.is_array()) fail(ErrorCode::BadType, path, "expected an array");
}

int as_int(const ojson& v, const std::string& path) {
    if (!v.is_number_integer()) fail(ErrorCode::BadType, path, "expected an integer");
    return v.get<int>();
}

bool as_bool(const ojson& v, const std::string& path) {
    if (!v.is_boolean()) fail(ErrorCode::BadType, path, "expected a boolean");
    return v.get<bool>();
}

std::string as_string(const ojson& v, const std::string& path) {
    if (!v.is_string()) fail(ErrorCode::BadType, path, "expected a string");
    return v.get<std::string>();
}

std::vector<std::string> as_string_array(const ojson& v, const std::string& path) {
    require_array(v, path);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(as_string(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

void reject_unknown_keys(const ojson& obj, std::initializer_list<const char*> known,
                         const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) fail(ErrorCode::BadType, path, "unexpected key '" + key + "'");
    }
}

OrdinalScale parse_scale(const ojson& v) {
    require_object(v, "scale");
    reject_unknown_keys(v, {"levels", "labels"}, "scale");
    OrdinalScale scale;
    scale.levels = as_int(require_field(v, "levels", "scale"), "scale.levels");
    if (const ojson* labels = optional_field(v, "labels")) {
        require_object(*labels, "scale.labels");
        for (const auto& [key, value] : labels->items()) {
            int level = 0;
            auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), level);
            if (ec != std::errc{} || ptr != key.data() + key.size())
                fail(ErrorCode::BadType, "scale.labels", "non-integer level key '" + key + "'");
            scale.labels[level] = as_string(value, "scale.labels." + key);
        }
    }
    return scale;
}

StructureSpec parse_detection(const ojson* v) {
    StructureSpec spec;
    if (!v) return spec;
    require_object(*v, "detection");
    reject_unknown_keys(*v,
                        {"threshold", "min_size", "max_missing_edges",
                         "max_offending_vertices", "secondary_threshold", "maximal_only"},
                        "detection");
    if (const ojson* f = optional_field(*v, "threshold"))
        spec.threshold = as_int(*f, "detection.threshold");
    if (const ojson* f = optional_field(*v, "min_size")) {
        if (f->is_string()) {
            if (f->get<std::string>() != "cluster")
                fail(ErrorCode::BadType, "detection.min_size",
                     "expected an integer or \"cluster\"");
            spec.min_size.reset();
        } else {
            spec.min_size = as_int(*f, "detection.min_size");
        }
    }
    if (const ojson* f = optional_field(*v, "max_missing_edges"))
        spec.max_missing_edges = as_int(*f, "detection.max_missing_edges");
    if (const ojson* f = optional_field(*v, "max_offending_vertices"))
        spec.max_offending_vertices = as_int(*f, "detection.max_offending_vertices");
    if (const ojson* f = optional_field(*v, "secondary_threshold"))
        spec.secondary_threshold = as_int(*f, "detection.secondary_threshold");
    if (const ojson* f = optional_field(*v, "maximal_only"))
        spec.maximal_only = as_bool(*f, "detection.maximal_only");
    return spec;
}

TrackConfig parse_track(const ojson* v) {
    TrackConfig cfg;
    if (!v) return cfg;
    require_object(*v, "track");
    reject_unknown_keys(*v, {"k", "m"}, "track");
    if (const ojson* f = optional_field(*v, "k")) cfg.k = as_int(*f, "track.k");
    if (const ojson* f = optional_field(*v, "m")) cfg.m = as_int(*f, "track.m");
    return cfg;
}

Scenario parse_scenario(const ojson& v) {
    require_object(v, "scenario");
    reject_unknown_keys(v, {"ticks", "chain", "states", "overrides"}, "scenario");
    Scenario sc;
    sc.ticks = as_int(require_field(v, "ticks", "scenario"), "scenario.ticks");

    const ojson& chain = require_field(v, "chain", "scenario");
    require_array(chain, "scenario.chain");
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const std::string path = "scenario.chain[" + std::to_string(i) + "]";
        if (chain[i].is_null())
            sc.chain.push_back(std::nullopt);
        else
            sc.chain.push_back(as_string(chain[i], path));
    }

    const ojson& states = require_field(v, "states", "scenario");
    require_object(states, "scenario.states");
    for (const auto& [component, stream] : states.items()) {
        const std::string path = "scenario.states." + component;
        std::vector<int>& out = sc.states[component];
        if (stream.is_array()) {
            for (std::size_t i = 0; i < stream.size(); ++i)
                out.push_back(as_int(stream[i], path + "[" + std::to_string(i) + "]"));
        } else {
            // Single level means a constant stream.
            out.assign(std::max(sc.ticks, 0), as_int(stream, path));
        }
    }

    if (const ojson* overrides = optional_field(v, "overrides")) {
        require_array(*overrides, "scenario.overrides");
        for (std::size_t i = 0; i < overrides->size(); ++i) {
            const std::string path = "scenario.overrides[" + std::to_string(i) + "]";
            const ojson& entry = (*overrides)[i];
            require_object(entry, path);
            reject_unknown_keys(entry, {"tick", "component", "function", "level"}, path);
            TickOverride ov;
            ov.tick = as_int(require_field(entry, "tick", path), path + ".tick");
            ov.component = as_string(require_field(entry, "component", path), path + ".component");
            ov.function = as_string(require_field(entry, "function", path), path + ".function");
            ov.level = as_int(require_field(entry, "level", path), path + ".level");
            sc.overrides.push_back(std::move(ov));
        }
    }
    return sc;
}

} // namespace

Document parse_document(const std::string& text) {
    ojson root;
    try {
        root = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::SyntaxError, e.what());
    }
    require_object(root, "document");
    reject_unknown_keys(
        root, {"scale", "components", "functions", "clusters", "detection", "track", "scenario"},
        "document");

    Document doc;
    doc.model.scale = parse_scale(require_field(root, "scale", "document"));
    doc.model.components =
        as_string_array(require_field(root, "components", "document"), "components");

    const ojson& functions = require_field(root, "functions", "document");
    require_object(functions, "functions");
    for (const auto& [id, members] : functions.items())
        doc.model.functions.push_back({id, as_string_array(members, "functions." + id)});

    const ojson& clusters = require_field(root, "clusters", "document");
    require_object(clusters, "clusters");
    for (const auto& [id, members] : clusters.items())
        doc.model.clusters.push_back({id, as_string_array(members, "clusters." + id)});

    doc.detection = parse_detection(optional_field(root, "detection"));
    doc.track = parse_track(optional_field(root, "track"));
    if (const ojson* scenario = optional_field(root, "scenario"))
        doc.scenario = parse_scenario(*scenario);
    return doc;
}

std::vector<Violation> validate_document(const Document& doc) {
    std::vector<Violation> out = validate(doc.model, doc.scenario);
    const int levels = doc.model.scale.levels;

    const StructureSpec& d = doc.detection;
    if (d.threshold < 1 || d.threshold > levels)
        out.push_back({ErrorCode::BadSpec, "detection",
                       "threshold " + std::to_string(d.threshold) + " outside scale 1.." +
                           std::to_string(levels)});
    if (d.min_size && *d.min_size < 1)
        out.push_back({ErrorCode::BadSpec, "detection", "min_size must be at least 1"});
    if (d.max_missing_edges < 0)
        out.push_back({ErrorCode::BadSpec, "detection", "max_missing_edges must be >= 0"});
    if (d.max_offending_vertices < 0)
        out.push_back({ErrorCode::BadSpec, "detection", "max_offending_vertices must be >= 0"});
    if (d.secondary_threshold &&
        (*d.secondary_threshold < d.threshold || *d.secondary_threshold > levels))
        out.push_back({ErrorCode::BadSpec, "detection",
                       "secondary_threshold must lie in [threshold, " +
                           std::to_string(levels) + "]"});

    if (doc.track.k < 1 || doc.track.m < doc.track.k)
        out.push_back({ErrorCode::BadSpec, "track",
                       "track rule needs 1 <= k <= m, got k=" + std::to_string(doc.track.k) +
                           " m=" + std::to_string(doc.track.m)});
    return out;
}

Document parse_model(const std::string& text) {
    Document doc = parse_document(text);
    std::vector<Violation> violations = validate_document(doc);
    if (!violations.empty())
        throw Error(violations.front().code, violations.front().message);
    return doc;
}

std::string serialize_document(const Document& doc) {
    // Plain json sorts keys; that is the canonical order.
    nlohmann::json root;

    root["scale"]["levels"] = doc.model.scale.levels;
    if (!doc.model.scale.labels.empty()) {
        for (const auto& [level, label] : doc.model.scale.labels)
            root["scale"]["labels"][std::to_string(level)] = label;
    }
    root["components"] = doc.model.components;
    root["functions"] = nlohmann::json::object();
    for (const auto& f : doc.model.functions) root["functions"][f.id] = f.components;
    root["clusters"] = nlohmann::json::object();
    for (const auto& c : doc.model.clusters) root["clusters"][c.id] = c.functions;

    const StructureSpec& d = doc.detection;
    nlohmann::json detection;
    detection["threshold"] = d.threshold;
    if (d.min_size)
        detection["min_size"] = *d.min_size;
    else
        detection["min_size"] = "cluster";
    detection["max_missing_edges"] = d.max_missing_edges;
    detection["max_offending_vertices"] = d.max_offending_vertices;
    detection["secondary_threshold"] =
        d.secondary_threshold ? *d.secondary_threshold
                              : std::min(d.threshold + 1, doc.model.scale.levels);
    detection["maximal_only"] = d.maximal_only;
    root["detection"] = std::move(detection);

    root["track"] = nlohmann::json{{"k", doc.track.k}, {"m", doc.track.m}};

    if (doc.scenario) {
        const Scenario& sc = *doc.scenario;
        nlohmann::json scenario;
        scenario["ticks"] = sc.ticks;
        scenario["chain"] = nlohmann::json::array();
        for (const auto& entry : sc.chain)
            scenario["chain"].push_back(entry ? nlohmann::json(*entry)
                                              : nlohmann::json(nullptr));
        scenario["states"] = nlohmann::json::object();
        for (const auto& [component, stream] : sc.states)
            scenario["states"][component] = stream;
        if (!sc.overrides.empty()) {
            std::vector<TickOverride> sorted = sc.overrides;
            std::sort(sorted.begin(), sorted.end(), [](const TickOverride& a, const TickOverride& b) {
                return std::tie(a.tick, a.component, a.function) <
                       std::tie(b.tick, b.component, b.function);
            });
            scenario["overrides"] = nlohmann::json::array();
            for (const auto& ov : sorted)
                scenario["overrides"].push_back({{"tick", ov.tick},
                                                 {"component", ov.component},
                                                 {"function", ov.function},
                                                 {"level", ov.level}});
        }
        root["scenario"] = std::move(scenario);
    }

    return root.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path.string());
    return buffer.str();
}

Document load_document_file(const std::filesystem::path& path) {
    return parse_model(read_text_file(path));
}

} // namespace cliquetrack
