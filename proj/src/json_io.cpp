#include "retractlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "retractlab/absorption.hpp"
#include "retractlab/congruence.hpp"
#include "retractlab/retraction.hpp"

namespace retractlab {

using nlohmann::json;

json lattice_to_json(const Lattice& L) {
    json j;
    j["n"] = L.n;
    j["covers"] = json::array();
    for (auto [lo, hi] : L.covers) j["covers"].push_back({lo, hi});
    if (!L.labels.empty()) j["labels"] = L.labels;
    return j;
}

Lattice lattice_from_json(const json& j, int cap) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& e : j.at("covers"))
        covers.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return lattice_from_covers(n, std::move(covers), std::move(labels), cap);
}

Lattice load_lattice_file(const std::string& path, int cap) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open lattice file: " + path);
    json j;
    in >> j;
    return lattice_from_json(j, cap);
}

void save_lattice_file(const Lattice& L, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write lattice file: " + path);
    out << lattice_to_json(L).dump(2) << "\n";
}

std::string lattice_to_dot(const Lattice& L, const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    os << "  rankdir=BT;\n  node [shape=circle];\n";
    for (int i = 0; i < L.n; ++i) {
        os << "  e" << i << " [label=\"";
        os << (L.labels.empty() ? std::to_string(i) : L.labels[i]);
        os << "\"];\n";
    }
    for (auto [lo, hi] : L.covers) os << "  e" << lo << " -> e" << hi << ";\n";
    os << "}\n";
    return os.str();
}

json partition_to_json(const Partition& P) {
    json j = json::array();
    for (const auto& blk : P.blocks()) j.push_back(blk);
    return j;
}

Partition partition_from_json(const json& j, int n) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : j) blocks.push_back(b.get<std::vector<int>>());
    return Partition::from_blocks(n, blocks);
}

json relation_to_json(const Relation& R) {
    return R.bits.to_string01();
}

Relation relation_from_json(const json& j, int n) {
    std::string s = j.get<std::string>();
    if (int(s.size()) != n * n) throw Error("relation bitstring has wrong length");
    Relation R(n);
    for (int p = 0; p < n * n; ++p)
        if (s[p] == '1') R.bits.set(p);
    if (!R.is_reflexive()) throw Error("relation bitstring is not reflexive");
    return R;
}

json endomap_to_json(const EndoMap& f) {
    return f.image_of;
}

EndoMap endomap_from_json(const json& j, int n) {
    auto img = j.get<std::vector<int>>();
    if (int(img.size()) != n) throw Error("endomap has wrong length");
    for (int v : img)
        if (v < 0 || v >= n) throw IndexOutOfRange("endomap value out of range");
    return EndoMap(std::move(img));
}

json subset_to_json(const DynBitset& S) {
    return S.to_indices();
}

DynBitset subset_from_json(const json& j, int n) {
    DynBitset S(n);
    for (const auto& e : j) {
        int v = e.get<int>();
        if (v < 0 || v >= n) throw IndexOutOfRange("subset index out of range");
        S.set(v);
    }
    return S;
}

json ret_poset_to_json(const RetPoset& P) {
    json j;
    j["size"] = P.elements.size();
    j["elements"] = json::array();
    for (const auto& S : P.elements) j["elements"].push_back(S.to_indices());
    j["is_lattice"] = P.is_lattice;
    if (P.witness) {
        j["witness"] = {P.elements[P.witness->first].to_indices(),
                        P.elements[P.witness->second].to_indices()};
    }
    return j;
}

std::string ret_poset_to_dot(const RetPoset& P) {
    const int k = int(P.elements.size());
    std::ostringstream os;
    os << "digraph ret_poset {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < k; ++i) {
        os << "  s" << i << " [label=\"{";
        auto idx = P.elements[i].to_indices();
        for (size_t t = 0; t < idx.size(); ++t) os << (t ? "," : "") << idx[t];
        os << "}\"];\n";
    }
    // Hasse edges of the inclusion order
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j || !P.below[j].test(i)) continue;
            bool direct = true;
            for (int z = 0; z < k && direct; ++z)
                if (z != i && z != j && P.below[z].test(i) && P.below[j].test(z))
                    direct = false;
            if (direct) os << "  s" << i << " -> s" << j << ";\n";
        }
    os << "}\n";
    return os.str();
}

json absorption_property_to_json(const AbsorptionProperty& prop) {
    json j;
    j["K"] = lattice_to_json(prop.pattern);
    j["bullets"] = prop.bullets.to_indices();
    j["stars"] = prop.stars.to_indices();
    if (prop.gamma == GammaKind::none) {
        j["gamma"] = {{"kind", "none"}};
    } else {
        j["gamma"] = {{"kind", "image_is_narrows"}, {"y", prop.gamma_y}};
    }
    return j;
}

AbsorptionProperty absorption_property_from_json(const json& j) {
    AbsorptionProperty prop;
    prop.pattern = lattice_from_json(j.at("K"));
    prop.bullets = subset_from_json(j.at("bullets"), prop.pattern.n);
    prop.stars = subset_from_json(j.at("stars"), prop.pattern.n);
    const auto& g = j.at("gamma");
    std::string kind = g.at("kind").get<std::string>();
    if (kind == "none") {
        prop.gamma = GammaKind::none;
    } else if (kind == "image_is_narrows") {
        prop.gamma = GammaKind::image_is_narrows;
        prop.gamma_y = g.at("y").get<int>();
        if (prop.gamma_y < 0 || prop.gamma_y >= prop.pattern.n)
            throw IndexOutOfRange("gamma element out of range");
    } else {
        throw UnknownName("unknown gamma kind: " + kind);
    }
    if (j.contains("name")) prop.name = j["name"].get<std::string>();
    return prop;
}

AbsorptionProperty load_absorption_property_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open property file: " + path);
    json j;
    in >> j;
    AbsorptionProperty prop = absorption_property_from_json(j);
    if (prop.name.empty()) prop.name = path;
    return prop;
}

}  // namespace retractlab
