#include "cellsym/report.hpp"

#include "json.hpp"

namespace cellsym {

namespace {

using Json = nlohmann::ordered_json;

template <class Fam>
Json family_obj(const Fam& f) {
    Json jf;
    jf["key"] = f.key;
    jf["p"] = f.p_c;
    Json members = Json::array();
    for (const auto& m : f.members) members.push_back(m.str());
    jf["members"] = std::move(members);
    jf["special"] = f.members[f.special].str();
    Json anti = Json::array();
    for (auto i : f.antispecial) anti.push_back(f.members[i].str());
    jf["antispecial"] = std::move(anti);
    return jf;
}

}  // namespace

std::string families_json(unsigned n, const std::vector<Family>& fams) {
    Json j;
    j["n"] = n;
    j["families"] = Json::array();
    for (const auto& f : fams) j["families"].push_back(family_obj(f));
    return j.dump(2);
}

std::string families_json_d(unsigned n, const std::vector<DFamily>& fams) {
    Json j;
    j["type"] = "D";
    j["kind"] = "prime";
    j["n"] = n;
    j["families"] = Json::array();
    for (const auto& f : fams) j["families"].push_back(family_obj(f));
    return j.dump(2);
}

std::string symbols_json(unsigned n, const std::vector<BSymbol>& symbols) {
    Json j;
    j["n"] = n;
    j["symbols"] = Json::array();
    for (const auto& s : symbols) j["symbols"].push_back(s.str());
    return j.dump(2);
}

std::string symbols_json_d(unsigned n, DKind kind, const std::vector<DSymbol>& symbols) {
    Json j;
    j["type"] = "D";
    j["kind"] = kind == DKind::Prime ? "prime" : "doubleprime";
    j["n"] = n;
    j["symbols"] = Json::array();
    for (const auto& s : symbols) j["symbols"].push_back(s.str());
    return j.dump(2);
}

std::string catalog_json(const SubspaceCatalog& cat) {
    Json j;
    j["p"] = cat.p;
    j["entries"] = Json::array();
    for (const auto& e : cat.entries) {
        Json je;
        je["printed"] = e.printed;
        je["dim"] = e.space.dim();
        je["basis"] = basis_bitstrings(e.space);
        j["entries"].push_back(std::move(je));
    }
    j["anomalies"] = Json::array();
    for (const auto& a : cat.anomalies) {
        Json ja;
        ja["kind"] = a.kind;
        ja["detail"] = a.detail;
        j["anomalies"].push_back(std::move(ja));
    }
    return j.dump(2);
}

std::string family_record_json(const ExceptionalFamily& fam) {
    Json j;
    j["size"] = fam.size;
    j["as_labels"] = fam.as_labels;
    if (!fam.indexing.empty()) j["indexing"] = fam.indexing;
    if (!fam.cal_c.empty()) j["cal_c"] = fam.cal_c;
    j["graph"] = Json::object();
    j["graph"]["vertices"] = Json::array();
    for (const auto& v : fam.graph.vertices) {
        Json jv;
        jv["id"] = v.id;
        jv["label"] = v.label;
        if (v.dim) jv["dim"] = *v.dim;
        j["graph"]["vertices"].push_back(std::move(jv));
    }
    j["graph"]["arrows"] = Json::array();
    for (const auto& [from, to] : fam.graph.arrows)
        j["graph"]["arrows"].push_back(Json::array({from, to}));
    if (!fam.expected_counts.empty()) {
        Json counts;
        for (const auto& label : fam.as_labels) counts[label] = fam.expected_counts.at(label);
        j["expected_counts"] = std::move(counts);
        j["counts_derived"] = fam.counts_derived;
    }
    if (!fam.gamma.empty()) {
        Json g;
        for (const auto& [label, cls] : fam.gamma) g[label] = cls;
        j["gamma"] = std::move(g);
    }
    return j.dump(2);
}

}  // namespace cellsym
