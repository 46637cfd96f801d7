#include "qtk/json_io.hpp"

#include "qtk/error.hpp"

namespace qtk {

nlohmann::json to_json(const QTPoly& p)
{
    auto arr = nlohmann::json::array();
    for (const auto& [k, c] : p.terms()) arr.push_back({k.first, k.second, c.get_str()});
    return arr;
}

QTPoly qtpoly_from_json(const nlohmann::json& j)
{
    QTPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3) throw ParseError("QTPoly term must be [dq, dt, \"c\"]");
        p += QTPoly::monomial(term[0].get<int>(), term[1].get<int>(), mpz_class(term[2].get<std::string>()));
    }
    return p;
}

namespace {

template <class Tag>
nlohmann::json expansion_to_json(const Expansion<Tag>& f)
{
    nlohmann::json out;
    auto d = f.degree();
    out["degree"] = d ? nlohmann::json(*d) : nlohmann::json(nullptr);
    auto terms = nlohmann::json::array();
    for (const auto& [lambda, c] : f.terms()) terms.push_back({{"lambda", lambda.parts()}, {"coeff", to_json(c)}});
    out["terms"] = std::move(terms);
    return out;
}

template <class Tag>
Expansion<Tag> expansion_from_json(const nlohmann::json& j)
{
    Expansion<Tag> f;
    for (const auto& term : j.at("terms"))
        f.add(Partition(term.at("lambda").get<std::vector<int>>()), qtpoly_from_json(term.at("coeff")));
    return f;
}

} // namespace

nlohmann::json to_json(const SchurExpansion& f) { return expansion_to_json(f); }
SchurExpansion schur_from_json(const nlohmann::json& j) { return expansion_from_json<SchurTag>(j); }

nlohmann::json to_json(const HLExpansion& f)
{
    auto out = expansion_to_json(f);
    out["basis"] = "hall-littlewood-t";
    return out;
}

HLExpansion hl_from_json(const nlohmann::json& j) { return expansion_from_json<HallLittlewoodTag>(j); }

} // namespace qtk
