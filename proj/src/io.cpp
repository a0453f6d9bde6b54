#include "k0cat/io.hpp"

#include <fstream>

#include "k0cat/errors.hpp"

namespace k0cat::io {

namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("invalid JSON in " + path + ": " + e.what());
    }
}

int require_int(const nlohmann::json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
        throw ValidationError("file " + path + " needs an integer field \"" + key + "\"");
    }
    return j[key].get<int>();
}

std::vector<std::vector<int>> require_int_lists(const nlohmann::json& j,
                                                const std::string& key,
                                                const std::string& path) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_array()) {
        throw ValidationError("file " + path + " needs an array field \"" + key + "\"");
    }
    std::vector<std::vector<int>> out;
    for (const nlohmann::json& entry : j[key]) {
        if (!entry.is_array()) {
            throw ValidationError("every entry of \"" + key + "\" in " + path +
                                  " must be an array of integers");
        }
        std::vector<int> pts;
        for (const nlohmann::json& v : entry) {
            if (!v.is_number_integer()) {
                throw ValidationError("every entry of \"" + key + "\" in " + path +
                                      " must be an array of integers");
            }
            pts.push_back(v.get<int>());
        }
        out.push_back(std::move(pts));
    }
    return out;
}

} // namespace

nlohmann::json invariants_to_json(const GroupInvariants& g) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const Int& t : g.torsion) torsion.push_back(t.convert_to<long long>());
    return nlohmann::json{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

polygon::Angulation read_angulation_file(const std::string& path,
                                         const polygon::PolygonParams& expect) {
    const nlohmann::json j = load_json(path);
    const int p = require_int(j, "p", path);
    const int q = require_int(j, "q", path);
    if (p != expect.p || q != expect.q) {
        throw ValidationError("file " + path + " is for p=" + std::to_string(p) +
                              ", q=" + std::to_string(q) + ", not p=" +
                              std::to_string(expect.p) + ", q=" +
                              std::to_string(expect.q));
    }
    std::vector<polygon::Diagonal> diagonals;
    for (const std::vector<int>& pair : require_int_lists(j, "diagonals", path)) {
        if (pair.size() != 2) {
            throw ValidationError("every diagonal in " + path +
                                  " must be a pair of vertices");
        }
        diagonals.push_back(polygon::make_diagonal(expect, pair[0], pair[1]));
    }
    return polygon::make_angulation(expect, std::move(diagonals));
}

higher::TiltingSet read_tilting_file(const std::string& path,
                                     const higher::HigherParams& expect) {
    const nlohmann::json j = load_json(path);
    const int p = require_int(j, "p", path);
    const int d = require_int(j, "d", path);
    if (p != expect.p || d != expect.d) {
        throw ValidationError("file " + path + " is for p=" + std::to_string(p) +
                              ", d=" + std::to_string(d) + ", not p=" +
                              std::to_string(expect.p) + ", d=" +
                              std::to_string(expect.d));
    }
    std::vector<higher::HIndec> summands;
    for (const std::vector<int>& pts : require_int_lists(j, "summands", path)) {
        summands.push_back(higher::make_indec(expect, pts));
    }
    return higher::make_tilting(expect, std::move(summands));
}

} // namespace k0cat::io
