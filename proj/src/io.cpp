#include "homex/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace homex {

namespace {

SimplicialComplex from_token_facets(
    const std::vector<std::vector<std::string>>& token_facets) {
    std::map<std::string, vertex_t> ids;
    std::vector<std::string> labels;
    std::vector<Face> facets;
    for (const auto& line : token_facets) {
        std::vector<vertex_t> verts;
        for (const std::string& tok : line) {
            auto [it, inserted] =
                ids.emplace(tok, static_cast<vertex_t>(labels.size()));
            if (inserted) labels.push_back(tok);
            verts.push_back(it->second);
        }
        facets.push_back(Face(std::move(verts)));
    }
    SimplicialComplex x = from_facets(std::move(facets));
    for (vertex_t v = 0; v < static_cast<vertex_t>(labels.size()); ++v)
        if (x.has_vertex(v)) x.set_label(v, labels[v]);
    return x;
}

SimplicialComplex read_sc_text(std::istream& in) {
    std::vector<std::vector<std::string>> token_facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        std::map<std::string, int> seen;
        for (const auto& t : toks)
            if (!seen.emplace(t, 0).second)
                throw ValidationError("line " + std::to_string(lineno) +
                                      ": duplicate vertex token '" + t + "'");
        token_facets.push_back(std::move(toks));
    }
    return from_token_facets(token_facets);
}

SimplicialComplex read_json_text(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("invalid JSON complex: ") + e.what());
    }
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw ValidationError("JSON complex must be {\"facets\": [[...], ...]}");

    bool any_string = false, any_number = false;
    for (const auto& arr : j["facets"]) {
        if (!arr.is_array())
            throw ValidationError("JSON facets must be arrays");
        for (const auto& el : arr) {
            if (el.is_string()) any_string = true;
            else if (el.is_number_integer()) any_number = true;
            else throw ValidationError("JSON facet entries must be integers or strings");
        }
    }
    if (any_string && any_number)
        throw ValidationError("JSON facets mix integer and string vertices");

    if (any_string) {
        std::vector<std::vector<std::string>> token_facets;
        for (const auto& arr : j["facets"]) {
            std::vector<std::string> toks;
            for (const auto& el : arr) toks.push_back(el.get<std::string>());
            token_facets.push_back(std::move(toks));
        }
        return from_token_facets(token_facets);
    }
    std::vector<Face> facets;
    for (const auto& arr : j["facets"]) {
        std::vector<vertex_t> verts;
        for (const auto& el : arr) verts.push_back(el.get<vertex_t>());
        facets.push_back(Face(std::move(verts)));
    }
    return from_facets(std::move(facets));
}

} // namespace

SimplicialComplex read_complex(std::istream& in) {
    // Sniff for the JSON alternative.
    int c;
    while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
    if (c == '{') return read_json_text(in);
    return read_sc_text(in);
}

SimplicialComplex read_complex_string(const std::string& text) {
    std::istringstream in(text);
    return read_complex(in);
}

SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return read_complex(in);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_sc(std::ostream& out, const SimplicialComplex& x) {
    for (const Face& f : x.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out << ' ';
            out << x.label_or_id(f.vertices()[i]);
        }
        out << '\n';
    }
}

std::string to_sc_string(const SimplicialComplex& x) {
    std::ostringstream out;
    write_sc(out, x);
    return out.str();
}

void write_json(std::ostream& out, const SimplicialComplex& x) {
    nlohmann::json facets = nlohmann::json::array();
    const bool labeled = !x.labels().empty();
    for (const Face& f : x.facets()) {
        nlohmann::json arr = nlohmann::json::array();
        for (vertex_t v : f.vertices()) {
            if (labeled)
                arr.push_back(x.label_or_id(v));
            else
                arr.push_back(v);
        }
        facets.push_back(std::move(arr));
    }
    out << nlohmann::json{{"facets", std::move(facets)}}.dump(2) << '\n';
}

void write_complex_file(const std::string& path, const SimplicialComplex& x,
                        bool json) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    if (json)
        write_json(out, x);
    else
        write_sc(out, x);
}

} // namespace homex
