#pragma once

// JSON forms for the documented external interfaces: matrices as arrays of
// rows of canonical polynomial strings, specs as {"kind", "params"}, and the
// report/witness/search payloads.

#include <nlohmann/json.hpp>

#include "braidrep/rep.hpp"
#include "braidrep/search.hpp"
#include "braidrep/verify.hpp"

namespace braidrep {

inline nlohmann::json matrix_to_json(const PolyMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline PolyMatrix matrix_from_json(const nlohmann::json& j) {
    std::size_t n = j.size();
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (j[i].size() != n) throw DimensionMismatch("matrix JSON is not square");
        for (std::size_t k = 0; k < n; ++k)
            m.at(i, k) = LaurentPolynomial::parse(j[i][k].get<std::string>());
    }
    return m;
}

inline RepKind rep_kind_from_string(const std::string& s) {
    if (s == "simple") return RepKind::Simple;
    if (s == "case1") return RepKind::Case1;
    if (s == "case2") return RepKind::Case2;
    if (s == "case3") return RepKind::Case3;
    if (s == "burau") return RepKind::UnreducedBurau;
    if (s == "raw") return RepKind::Raw;
    throw InvalidParams("unknown spec kind '" + s + "'");
}

inline std::map<char, LaurentPolynomial> params_from_json(const nlohmann::json& j) {
    std::map<char, LaurentPolynomial> params;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key.size() != 1 || var_index(key[0]) == kNumVars)
            throw InvalidParams("unknown parameter '" + key + "'");
        params.emplace(key[0], LaurentPolynomial::parse(it.value().get<std::string>()));
    }
    return params;
}

inline nlohmann::json spec_to_json(const RepSpec& spec) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : spec.params) params[std::string(1, name)] = value.str();
    return {{"kind", rep_kind_name(spec.kind)}, {"params", std::move(params)}};
}

inline RepSpec spec_from_json(const nlohmann::json& j) {
    RepKind kind = rep_kind_from_string(j.at("kind").get<std::string>());
    std::map<char, LaurentPolynomial> params;
    if (j.contains("params")) params = params_from_json(j.at("params"));
    return make_spec(kind, std::move(params));
}

inline nlohmann::json report_to_json(const RelationReport& r) {
    nlohmann::json commuting = nlohmann::json::array();
    for (auto [i, j] : r.commuting_failures) commuting.push_back({i, j});
    return {{"n", r.n},
            {"spec", spec_to_json(r.spec)},
            {"cubic_failures", r.cubic_failures},
            {"commuting_failures", std::move(commuting)},
            {"passed", r.passed}};
}

inline nlohmann::json witness_to_json(const KernelWitness& w) {
    return {{"word", format_word(w.word)},
            {"n", w.word.n},
            {"spec", spec_to_json(w.spec)},
            {"image_is_identity", w.image_is_identity},
            {"burau_image_nontrivial", w.burau_image_nontrivial},
            {"certified", w.certified}};
}

inline nlohmann::json search_result_to_json(const SearchResult& r) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(witness_to_json(w));
    return {{"witnesses", std::move(witnesses)},
            {"words_enumerated", r.words_enumerated},
            {"fingerprint_hits", r.fingerprint_hits},
            {"confirmed", r.confirmed}};
}

}  // namespace braidrep
