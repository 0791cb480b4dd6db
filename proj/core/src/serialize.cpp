#include "pythia/serialize.hpp"

#include <sstream>

namespace pythia {

namespace {

std::string mode_name(SharedMode m) {
    return m == SharedMode::EvenLeg ? "even-leg" : "odd-leg";
}

SharedMode mode_from_name(const std::string& s) {
    if (s == "even-leg") return SharedMode::EvenLeg;
    if (s == "odd-leg") return SharedMode::OddLeg;
    throw domain_error("unknown shared mode: " + s);
}

std::vector<u64> split_csv(const std::string& line, size_t expect) {
    std::vector<u64> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(std::stoull(field));
    if (out.size() != expect)
        throw domain_error("csv record: expected " + std::to_string(expect) +
                           " fields, got " + std::to_string(out.size()));
    return out;
}

}  // namespace

json to_json(const Triple& t) {
    return {{"kind", "triple"}, {"a", t.a}, {"b", t.b}, {"c", t.c}};
}

json to_json(const TwoTwoSolution& s) {
    return {{"kind", "two_two"}, {"x", s.x}, {"y", s.y}, {"z", s.z}};
}

json to_json(const Box& b) {
    return {{"kind", "box"}, {"x", b.x}, {"y", b.y}, {"z", b.z}, {"t", b.t}};
}

json to_json(const FaceDiagonalBox& b) {
    json j = to_json(b.box);
    j["d"] = b.d;
    return j;
}

json to_json(const TripleDecomposition& d) {
    return {{"kind", "params"},
            {"delta", d.params.delta},
            {"m", d.params.m},
            {"n", d.params.n},
            {"leg_swap", d.leg_swap}};
}

json to_json(const TrianglePair& p) {
    return {{"kind", "pair"},
            {"t1", {{"a", p.t1.a}, {"b", p.t1.b}, {"c", p.t1.c}}},
            {"t2", {{"a", p.t2.a}, {"b", p.t2.b}, {"c", p.t2.c}}},
            {"shared", p.shared},
            {"mode", mode_name(p.mode)}};
}

json to_json(const SearchReport& r) {
    json bounds = json::object();
    for (const auto& [name, value] : r.bounds) bounds[name] = value;
    return {{"kind", "report"},
            {"claim", claim_name(r.claim)},
            {"bounds", bounds},
            {"counting", r.counting},
            {"examined", r.examined},
            {"counterexamples", r.counterexamples},
            {"elapsed_ms", r.elapsed.count()}};
}

std::string to_csv(const Triple& t) {
    std::ostringstream os;
    os << t.a << ',' << t.b << ',' << t.c;
    return os.str();
}

std::string to_csv(const TwoTwoSolution& s) {
    std::ostringstream os;
    os << s.x << ',' << s.y << ',' << s.z;
    return os.str();
}

std::string to_csv(const Box& b) {
    std::ostringstream os;
    os << b.x << ',' << b.y << ',' << b.z << ',' << b.t;
    return os.str();
}

std::string to_csv(const FaceDiagonalBox& b) {
    std::ostringstream os;
    os << to_csv(b.box) << ',' << b.d;
    return os.str();
}

std::string to_csv(const TripleDecomposition& d) {
    std::ostringstream os;
    os << d.params.delta << ',' << d.params.m << ',' << d.params.n << ','
       << (d.leg_swap ? 1 : 0);
    return os.str();
}

std::string to_csv(const TrianglePair& p) {
    std::ostringstream os;
    os << to_csv(p.t1) << ',' << to_csv(p.t2) << ',' << p.shared << ','
       << mode_name(p.mode);
    return os.str();
}

Triple triple_from_json(const json& j) {
    return Triple::make(j.at("a"), j.at("b"), j.at("c"));
}

TwoTwoSolution two_two_from_json(const json& j) {
    return TwoTwoSolution::make(j.at("x"), j.at("y"), j.at("z"));
}

Box box_from_json(const json& j) {
    return Box::make(j.at("x"), j.at("y"), j.at("z"), j.at("t"));
}

TrianglePair pair_from_json(const json& j) {
    const json& a = j.at("t1");
    const json& b = j.at("t2");
    return TrianglePair::make(
        Triple::make(a.at("a"), a.at("b"), a.at("c")),
        Triple::make(b.at("a"), b.at("b"), b.at("c")), j.at("shared"),
        mode_from_name(j.at("mode")));
}

Triple triple_from_csv(const std::string& line) {
    const auto f = split_csv(line, 3);
    return Triple::make(f[0], f[1], f[2]);
}

TwoTwoSolution two_two_from_csv(const std::string& line) {
    const auto f = split_csv(line, 3);
    return TwoTwoSolution::make(f[0], f[1], f[2]);
}

Box box_from_csv(const std::string& line) {
    const auto f = split_csv(line, 4);
    return Box::make(f[0], f[1], f[2], f[3]);
}

TrianglePair pair_from_csv(const std::string& line) {
    const auto comma = line.rfind(',');
    if (comma == std::string::npos) throw domain_error("pair csv: malformed");
    const SharedMode mode = mode_from_name(line.substr(comma + 1));
    const auto f = split_csv(line.substr(0, comma), 7);
    return TrianglePair::make(Triple::make(f[0], f[1], f[2]),
                              Triple::make(f[3], f[4], f[5]), f[6], mode);
}

}  // namespace pythia
