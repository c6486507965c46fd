#include "cubics/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cubics {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw io_error("malformed JSON");
    return j;
}

Poly poly_field(const json& j) {
    if (!j.is_string()) throw io_error("expected a polynomial string");
    return parse_poly(j.get<std::string>());
}

}  // namespace

PairBA pair_from_json_text(const std::string& text) {
    json j = parse_json(text);
    if (!j.contains("B") || !j.contains("A")) throw io_error("pair file needs \"B\" and \"A\"");
    const json &jb = j["B"], &ja = j["A"];
    if (!jb.is_array() || jb.size() != 2 || !ja.is_array() || ja.size() != 4)
        throw io_error("pair file: B must be 2x4 and A must be 4x2");
    GradedMatrix b(cr_b_source(), cr_middle());
    for (int i = 0; i < 2; ++i) {
        if (!jb[i].is_array() || jb[i].size() != 4) throw io_error("pair file: B must be 2x4");
        for (int k = 0; k < 4; ++k) b.at(i, k) = poly_field(jb[i][k]);
    }
    GradedMatrix a(cr_middle(), cr_target());
    for (int i = 0; i < 4; ++i) {
        if (!ja[i].is_array() || ja[i].size() != 2) throw io_error("pair file: A must be 4x2");
        for (int k = 0; k < 2; ++k) a.at(i, k) = poly_field(ja[i][k]);
    }
    return PairBA(std::move(b), std::move(a));  // validates twists and degrees
}

std::string pair_to_json_text(const PairBA& p) {
    json jb = json::array(), ja = json::array();
    for (int i = 0; i < 2; ++i) {
        json row = json::array();
        for (int k = 0; k < 4; ++k) row.push_back(p.B.at(i, k).str());
        jb.push_back(row);
    }
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int k = 0; k < 2; ++k) row.push_back(p.A.at(i, k).str());
        ja.push_back(row);
    }
    json j;
    j["B"] = jb;
    j["A"] = ja;
    return j.dump(2) + "\n";
}

NetQ net_from_json_text(const std::string& text) {
    json j = parse_json(text);
    if (!j.contains("Q")) throw io_error("net file needs \"Q\"");
    const json& jq = j["Q"];
    if (!jq.is_array() || jq.size() != 2) throw io_error("net file: Q must be 2x3");
    NetQ q;
    for (int i = 0; i < 2; ++i) {
        if (!jq[i].is_array() || jq[i].size() != 3) throw io_error("net file: Q must be 2x3");
        for (int k = 0; k < 3; ++k) q.at(i, k) = poly_field(jq[i][k]);
    }
    q.validate();
    return q;
}

std::string net_to_json_text(const NetQ& q) {
    json rows = json::array();
    for (int i = 0; i < 2; ++i) {
        json row = json::array();
        for (int k = 0; k < 3; ++k) row.push_back(q.at(i, k).str());
        rows.push_back(row);
    }
    json j;
    j["Q"] = rows;
    return j.dump(2) + "\n";
}

DeformationFamily family_from_json_text(const std::string& text) {
    json j = parse_json(text);
    for (const char* key : {"w", "l1", "l2", "a1", "b1", "a2", "b2"})
        if (!j.contains(key)) throw io_error(std::string("family file needs \"") + key + "\"");
    return build_family(poly_field(j["w"]), poly_field(j["l1"]), poly_field(j["l2"]),
                        poly_field(j["a1"]), poly_field(j["b1"]), poly_field(j["a2"]),
                        poly_field(j["b2"]));
}

std::string family_to_json_text(const DeformationFamily& f) {
    json j;
    j["w"] = f.w.str();
    j["l1"] = f.l1.str();
    j["l2"] = f.l2.str();
    j["a1"] = f.a1.str();
    j["b1"] = f.b1.str();
    j["a2"] = f.a2.str();
    j["b2"] = f.b2.str();
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    out << text;
}

PairBA load_pair(const std::string& path) { return pair_from_json_text(read_file(path)); }

void save_pair(const PairBA& p, const std::string& path) { write_file(path, pair_to_json_text(p)); }

NetQ load_net(const std::string& path) { return net_from_json_text(read_file(path)); }

DeformationFamily load_family(const std::string& path) { return family_from_json_text(read_file(path)); }

}  // namespace cubics
