#pragma once

#include <json.hpp>

#include "hyperhodge/higgs.hpp"
#include "hyperhodge/mc_oracle.hpp"

namespace hyperhodge {

// ordered_json keeps insertion order, so serialized output is
// byte-deterministic as long as containers are iterated in sorted order.
using Json = nlohmann::ordered_json;

inline Json to_json(const HypergeometricData& data)
{
    Json alpha = Json::array();
    Json beta = Json::array();
    for (const auto& a : data.alpha()) {
        alpha.push_back(to_string(a));
    }
    for (const auto& b : data.beta()) {
        beta.push_back(to_string(b));
    }
    return Json{{"alpha", std::move(alpha)}, {"beta", std::move(beta)}};
}

inline HypergeometricData data_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("alpha") || !j.contains("beta") || !j["alpha"].is_array() ||
        !j["beta"].is_array()) {
        throw Error("ParseError", "expected {\"alpha\": [...], \"beta\": [...]}");
    }
    const auto parse_list = [](const Json& list) {
        std::vector<UnitRational> out;
        out.reserve(list.size());
        for (const auto& entry : list) {
            if (!entry.is_string()) {
                throw Error("ParseError", "angles must be rational strings");
            }
            out.push_back(UnitRational(parse_rational(entry.get<std::string>())));
        }
        return out;
    };
    return HypergeometricData(parse_list(j["alpha"]), parse_list(j["beta"]));
}

inline Json to_json(const LocalHodgeTable& table)
{
    Json out = Json::array();
    for (const auto& [key, mult] : table.entries()) {
        out.push_back(Json{{"angle", to_string(key.angle)}, {"l", key.level}, {"p", key.degree}, {"mult", mult}});
    }
    return out;
}

inline Json to_json(const HodgeVector& vec)
{
    Json out = Json::object();
    for (const auto& [p, count] : vec) {
        out[std::to_string(p)] = count;
    }
    return out;
}

inline Json to_json(const RealHodgeDiamond& diamond)
{
    Json ranks = Json::array();
    for (const auto& [pq, rank] : diamond.ranks) {
        ranks.push_back(Json{{"p", pq.first}, {"q", pq.second}, {"rank", rank}});
    }
    return Json{{"weight", diamond.weight}, {"ranks", std::move(ranks)}};
}

inline Json to_json(const VerifyReport& report)
{
    Json out;
    out["input"] = to_json(report.input);
    out["oracle"] = to_json(report.oracle);
    out["closed_form"] = to_json(report.closed_form);
    out["oracle_lefschetz"] = to_json(report.oracle_lefschetz);
    out["closed_lefschetz"] = to_json(report.closed_lefschetz);
    out["shift"] = report.shift ? Json(*report.shift) : Json(nullptr);
    out["pass"] = report.pass;
    out["diff"] = report.diff;
    return out;
}

inline Json to_json(const HiggsWeights& w)
{
    Json a = Json::array();
    Json b = Json::array();
    for (const auto& x : w.a) {
        a.push_back(to_string(x));
    }
    for (const auto& x : w.b) {
        b.push_back(to_string(x));
    }
    return Json{{"a", std::move(a)}, {"b", std::move(b)}};
}

inline HiggsWeights weights_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j["a"].is_array() || !j["b"].is_array()) {
        throw Error("ParseError", "expected {\"a\": [...], \"b\": [...]}");
    }
    const auto parse_list = [](const Json& list) {
        std::vector<Rational> out;
        out.reserve(list.size());
        for (const auto& entry : list) {
            if (!entry.is_string()) {
                throw Error("ParseError", "weights must be rational strings");
            }
            out.push_back(parse_rational(entry.get<std::string>()));
        }
        return out;
    };
    return make_weights(parse_list(j["a"]), parse_list(j["b"]));
}

inline Json to_json(const SubbundleProfile& s)
{
    return Json{{"degree", s.degree},
                {"jumps_zero", s.jumps_zero},
                {"jumps_infinity", s.jumps_infinity},
                {"contains_line", s.contains_line},
                {"rank", s.rank}};
}

inline SubbundleProfile profile_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("degree") || !j.contains("jumps_zero") || !j.contains("jumps_infinity") ||
        !j.contains("contains_line") || !j.contains("rank")) {
        throw Error("ParseError", "incomplete subbundle profile");
    }
    SubbundleProfile s;
    try {
        s.degree = j["degree"].get<long long>();
        s.jumps_zero = j["jumps_zero"].get<std::vector<std::size_t>>();
        s.jumps_infinity = j["jumps_infinity"].get<std::vector<std::size_t>>();
        s.contains_line = j["contains_line"].get<bool>();
        s.rank = j["rank"].get<std::size_t>();
    } catch (const Json::exception& e) {
        throw Error("ParseError", e.what());
    }
    return s;
}

inline Json to_json(const CandidateReport& report)
{
    Json candidates = Json::array();
    for (const auto& c : report.candidates) {
        candidates.push_back(Json{{"profile", to_json(c.profile)},
                                  {"parabolic_degree", to_string(c.degree)},
                                  {"destabilizing", c.destabilizing}});
    }
    return Json{{"candidates", std::move(candidates)},
                {"stable_against_candidates", report.stable_against_candidates}};
}

} // namespace hyperhodge
