#pragma once

// JSON encodings of weights, decompositions and suite reports.

#include "osprep/result.hpp"
#include "osprep/tensor.hpp"
#include "osprep/validate.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace osprep {

using Json = nlohmann::ordered_json;

inline Json to_json(const Weight& w) {
    Json eps = Json::array(), delta = Json::array();
    for (const auto& x : w.eps()) eps.push_back(x.str());
    for (const auto& x : w.delta()) delta.push_back(x.str());
    return Json{{"m", w.context().m}, {"n", w.context().n}, {"eps", eps}, {"delta", delta}};
}

namespace detail {

inline Rational json_rational(const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw std::invalid_argument("weight JSON: coordinates must be strings \"p/q\" or integers");
}

inline std::vector<Rational> json_coords(const Json& j, const char* key, int count) {
    std::vector<Rational> out(static_cast<std::size_t>(count));
    if (!j.contains(key)) {
        if (count == 0) return out;
        throw std::invalid_argument(std::string("weight JSON: missing \"") + key + "\"");
    }
    const Json& a = j.at(key);
    if (!a.is_array()) throw std::invalid_argument(std::string("weight JSON: \"") + key + "\" must be an array");
    if (a.size() != static_cast<std::size_t>(count))
        throw std::invalid_argument(std::string("weight JSON: \"") + key + "\" needs " + std::to_string(count) + " entries, got " +
                                    std::to_string(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = json_rational(a[i]);
    return out;
}

}  // namespace detail

/// Parses {"m":M,"n":N,"eps":[...],"delta":[...]}; m and n may be omitted and then come from ctx.
inline Weight weight_from_json(const Json& j, Context ctx) {
    if (!j.is_object()) throw std::invalid_argument("weight JSON: object expected");
    if (j.contains("m") && j.at("m").get<int>() != ctx.m) throw std::invalid_argument("weight JSON: m does not match --m");
    if (j.contains("n") && j.at("n").get<int>() != ctx.n) throw std::invalid_argument("weight JSON: n does not match --n");
    return Weight(ctx, detail::json_coords(j, "eps", ctx.d()), detail::json_coords(j, "delta", ctx.n));
}

inline Weight weight_from_json(const std::string& text, Context ctx) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("weight JSON: ") + e.what());
    }
    return weight_from_json(j, ctx);
}

inline Json to_json(const DecompositionResult& r) {
    Json s = Json::array();
    for (const auto& x : r.summands)
        s.push_back({{"nonstandard", to_json(x.nonstandard)}, {"standard", to_json(x.standard)}, {"multiplicity", x.multiplicity}});
    Json out{{"m", r.ctx.m}, {"n", r.ctx.n}, {"shape", to_string(r.shape)}, {"summands", s}};
    if (r.chain) {
        out["chain"] = {{"upper", to_json(r.chain->upper)}, {"inner", to_json(r.chain->inner)}, {"notes", r.chain->notes}};
    }
    return out;
}

inline Json to_json(const BruteForceReport& rep) {
    Json out = to_json(rep.result);
    Json prim = Json::array();
    for (const auto& p : rep.primitives) prim.push_back({{"weight", to_json(p.weight)}, {"depth", p.depth}, {"dim", p.vectors.size()}});
    Json mem = Json::array();
    for (const auto& [i, j] : rep.memberships) mem.push_back({{"generator", i}, {"member", j}});
    out["brute_force"] = {{"depth", rep.depth},
                          {"primitives", prim},
                          {"memberships", mem},
                          {"max_primitive_dim", rep.max_primitive_dim},
                          {"primitive_plus_lowerable", rep.theorem4_holds}};
    if (rep.character_checked) {
        out["brute_force"]["character_match"] = rep.character_match;
        if (rep.character_mismatch) out["brute_force"]["character_mismatch"] = to_json(*rep.character_mismatch);
    }
    return out;
}

inline Json to_json(const SuiteReport& r) {
    Json fam = Json::array();
    for (const auto& f : r.families) {
        Json x{{"family", f.name}, {"checked", f.checked}, {"failed", f.failed}, {"pass", f.pass()}};
        if (!f.first_failure.empty()) x["first_failure"] = f.first_failure;
        fam.push_back(x);
    }
    return Json{{"suite", r.suite}, {"m", r.ctx.m}, {"n", r.ctx.n}, {"pass", r.pass()}, {"families", fam}};
}

}  // namespace osprep
