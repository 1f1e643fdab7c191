#include "fuzzyq/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fuzzyq/error.hpp"

namespace fuzzyq {

namespace {

using Json = nlohmann::json;

[[noreturn]] void invalid(const std::string& message) { throw Error(ErrorKind::Validation, message); }

const Json& field(const Json& object, const char* name) {
    if (!object.contains(name)) invalid(std::string("missing field '") + name + "'");
    return object.at(name);
}

Lattice parse_lattice(const Json& j) {
    if (!j.is_object()) invalid("field 'lattice' must be an object");
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) invalid("field 'lattice.kind' must be a string");
    const auto name = kind.get<std::string>();
    if (name == "boolean") return Lattice::boolean();
    if (name == "godel") return Lattice::godel();
    if (name == "product") return Lattice::product();
    if (name == "lukasiewicz") return Lattice::lukasiewicz();
    if (name == "chain") {
        const Json& n = field(j, "n");
        if (!n.is_number_unsigned() || n.get<unsigned>() == 0) invalid("field 'lattice.n' must be a positive integer");
        return Lattice::chain(n.get<unsigned>());
    }
    invalid("unknown lattice kind '" + name + "'");
}

std::vector<std::string> parse_names(const Json& j, const char* what) {
    if (!j.is_array()) invalid(std::string("field '") + what + "' must be an array");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string()) invalid(std::string("entries of '") + what + "' must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

Value parse_value(const Lattice& lat, const Json& j, const std::string& where) {
    if (!j.is_string()) invalid("value at " + where + " must be a string");
    try {
        return lat.parse(j.get<std::string>());
    } catch (const Error& e) {
        throw Error(ErrorKind::LatticeValue, where + ": " + e.what());
    }
}

FuzzyVector parse_vector(const Lattice& lat, const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n) invalid("field '" + where + "' must be an array of " + std::to_string(n) + " values");
    std::vector<Value> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(parse_value(lat, j[i], where + "[" + std::to_string(i) + "]"));
    return FuzzyVector(lat, std::move(out));
}

FuzzyMatrix parse_matrix(const Lattice& lat, const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n) invalid("matrix '" + where + "' must have " + std::to_string(n) + " rows");
    std::vector<Value> out;
    for (std::size_t r = 0; r < n; ++r) {
        const auto row = parse_vector(lat, j[r], n, where + "[" + std::to_string(r) + "]");
        out.insert(out.end(), row.entries().begin(), row.entries().end());
    }
    return FuzzyMatrix(lat, n, n, std::move(out));
}

}  // namespace

AnyMachine parse_document(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::Parse, "document must be a JSON object");
    const Json& version = field(doc, "version");
    if (!version.is_number_integer() || version.get<int>() != document_version) {
        invalid("unsupported document version " + version.dump());
    }
    const Lattice lat = parse_lattice(field(doc, "lattice"));
    auto states = parse_names(field(doc, "states"), "states");
    auto alphabet = parse_names(field(doc, "alphabet"), "alphabet");
    const std::size_t n = states.size();
    if (n == 0) invalid("field 'states' must be nonempty");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (states[i] == states[j]) invalid("duplicate state '" + states[i] + "'");

    const Json& delta = field(doc, "delta");
    if (!delta.is_object()) invalid("field 'delta' must be an object");
    for (const auto& [letter, _] : delta.items()) {
        if (std::find(alphabet.begin(), alphabet.end(), letter) == alphabet.end()) {
            invalid("delta has a matrix for '" + letter + "' which is not in the alphabet");
        }
    }
    std::vector<FuzzyMatrix> matrices;
    for (const auto& letter : alphabet) {
        if (!delta.contains(letter)) invalid("delta lacks a matrix for letter '" + letter + "'");
        matrices.push_back(parse_matrix(lat, delta.at(letter), n, "delta." + letter));
    }

    const bool has_sigma = doc.contains("sigma") && !doc.at("sigma").is_null();
    const bool has_tau = doc.contains("tau") && !doc.at("tau").is_null();
    if (has_sigma != has_tau) invalid("sigma and tau must be given together or both be null");

    FuzzyAutomaton automaton(lat, std::move(states), std::move(alphabet), std::move(matrices));
    if (!has_sigma) return automaton;
    FuzzyVector sigma = parse_vector(lat, doc.at("sigma"), n, "sigma");
    FuzzyVector tau = parse_vector(lat, doc.at("tau"), n, "tau");
    return FuzzyRecognizer(std::move(automaton), std::move(sigma), std::move(tau));
}

AnyMachine load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

nlohmann::ordered_json to_json(const Lattice& lattice) {
    switch (lattice.kind()) {
        case LatticeKind::boolean: return {{"kind", "boolean"}};
        case LatticeKind::godel: return {{"kind", "godel"}};
        case LatticeKind::product: return {{"kind", "product"}};
        case LatticeKind::lukasiewicz: return {{"kind", "lukasiewicz"}};
        case LatticeKind::chain: return {{"kind", "chain"}, {"n", lattice.steps()}};
    }
    return {};
}

nlohmann::ordered_json to_json(const FuzzyVector& f) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& v : f.entries()) out.push_back(v.to_string());
    return out;
}

nlohmann::ordered_json to_json(const FuzzyMatrix& m) {
    auto out = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

namespace {

nlohmann::ordered_json document(const FuzzyAutomaton& a, const FuzzyVector* sigma, const FuzzyVector* tau) {
    nlohmann::ordered_json doc;
    doc["version"] = document_version;
    doc["lattice"] = to_json(a.lattice());
    doc["states"] = a.states();
    doc["alphabet"] = a.alphabet();
    nlohmann::ordered_json delta = nlohmann::ordered_json::object();
    for (std::size_t x = 0; x < a.alphabet().size(); ++x) delta[a.alphabet()[x]] = to_json(a.delta(x));
    doc["delta"] = std::move(delta);
    doc["sigma"] = sigma ? to_json(*sigma) : nlohmann::ordered_json(nullptr);
    doc["tau"] = tau ? to_json(*tau) : nlohmann::ordered_json(nullptr);
    return doc;
}

}  // namespace

nlohmann::ordered_json to_json(const FuzzyAutomaton& a) { return document(a, nullptr, nullptr); }

nlohmann::ordered_json to_json(const FuzzyRecognizer& r) { return document(r.automaton(), &r.sigma(), &r.tau()); }

nlohmann::ordered_json to_json(const AnyMachine& m) {
    return std::visit([](const auto& x) { return to_json(x); }, m);
}

std::string serialize(const FuzzyAutomaton& a) { return to_json(a).dump() + "\n"; }

std::string serialize(const FuzzyRecognizer& r) { return to_json(r).dump() + "\n"; }

std::string serialize(const AnyMachine& m) { return to_json(m).dump() + "\n"; }

}  // namespace fuzzyq
