#include "jdlat/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace jdlat::io {

json lattice_to_json(const FiniteLattice& L, const std::vector<Chain>& chains) {
    json j;
    j["size"] = L.size();
    json covers = json::array();
    for (auto [a, b] : L.cover_pairs()) covers.push_back(json::array({a, b}));
    j["covers"] = std::move(covers);
    if (!chains.empty()) {
        json cs = json::array();
        for (const auto& C : chains) cs.push_back(C.elems);
        j["chains"] = std::move(cs);
    }
    return j;
}

FiniteLattice lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("covers"))
        throw ParseError("lattice file needs \"size\" and \"covers\"");
    int size = j.at("size").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& pair : j.at("covers")) {
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError("each cover must be a pair [a,b]");
        covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return FiniteLattice::from_covers(size, covers);
}

std::vector<Chain> chains_from_json(const json& j) {
    std::vector<Chain> chains;
    if (j.contains("chains"))
        for (const auto& c : j.at("chains")) chains.push_back(Chain{c.get<std::vector<int>>()});
    return chains;
}

json perm_vector_to_json(const PermVector& v) {
    json j;
    j["n"] = v.n;
    j["k"] = v.k;
    json ps = json::array();
    for (const auto& p : v.perms) ps.push_back(p.one_line());
    j["perms"] = std::move(ps);
    return j;
}

PermVector perm_vector_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("perms"))
        throw ParseError("perm file needs \"n\", \"k\", and \"perms\"");
    int n = j.at("n").get<int>();
    int k = j.at("k").get<int>();
    std::vector<Permutation> perms;
    for (const auto& p : j.at("perms")) perms.push_back(Permutation(p.get<std::vector<int>>()));
    return PermVector(n, k, std::move(perms));
}

json set_system_to_json(const SetSystem& s) {
    json j;
    j["ground"] = std::vector<std::string>(s.ground.begin(), s.ground.end());
    json fam = json::array();
    for (const auto& member : s.family) // std::set order is already canonical
        fam.push_back(std::vector<std::string>(member.begin(), member.end()));
    j["family"] = std::move(fam);
    return j;
}

SetSystem set_system_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ground") || !j.contains("family"))
        throw ParseError("set-system file needs \"ground\" and \"family\"");
    PointSet ground;
    for (const auto& p : j.at("ground")) ground.insert(p.get<std::string>());
    std::set<PointSet> family;
    for (const auto& member : j.at("family")) {
        PointSet m;
        for (const auto& p : member) m.insert(p.get<std::string>());
        family.insert(std::move(m));
    }
    return SetSystem(std::move(ground), std::move(family));
}

json jd_report_to_json(const JdReport& r) {
    json j;
    json verdicts;
    for (const auto& [tag, v] : r.verdicts) verdicts[std::string(1, tag)] = v;
    j["verdicts"] = std::move(verdicts);
    j["join_distributive"] = r.join_distributive();
    if (r.witness) j["witness"] = *r.witness;
    if (r.embedding) {
        json emb;
        for (const auto& [u, f] : *r.embedding) emb[std::to_string(u)] = f;
        j["embedding"] = std::move(emb);
    }
    return j;
}

json parse(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

json parse_file(const std::string& path) {
    if (path == "-") return parse(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse(in);
}

std::string dump(const json& j) {
    // nlohmann objects iterate in key order, so dumps are canonical.
    return j.dump(2) + "\n";
}

FileKind detect_kind(const json& j) {
    if (!j.is_object()) throw ParseError("input must be a JSON object");
    if (j.contains("perms")) return FileKind::PermVector;
    if (j.contains("covers")) return FileKind::Lattice;
    if (j.contains("ground")) return FileKind::SetSystem;
    throw ParseError("cannot infer input type: none of \"perms\", \"covers\", \"ground\" present");
}

std::string export_dot(const FiniteLattice& L, const std::vector<Chain>& chains) {
    std::ostringstream out;
    out << "digraph hasse {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (int x = 0; x < L.size(); ++x) {
        std::string label;
        if (!chains.empty()) {
            ChainedLattice cl{L, chains};
            label = tuple_label(feet(cl, x));
        } else {
            label = std::to_string(x);
        }
        out << "  n" << x << " [label=\"" << label << "\"];\n";
    }
    // One rank per height level.
    for (int h = 0; h <= L.length(); ++h) {
        std::vector<int> level;
        for (int x = 0; x < L.size(); ++x)
            if (L.height(x) == h) level.push_back(x);
        if (level.empty()) continue;
        out << "  { rank=same;";
        for (int x : level) out << " n" << x << ";";
        out << " }\n";
    }
    for (auto [a, b] : L.cover_pairs()) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace jdlat::io
