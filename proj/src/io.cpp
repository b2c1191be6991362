#include "bnring/io.hpp"

#include <algorithm>

namespace bnring::io {

namespace {

Integer integer_from_json(const Json& j)
{
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            throw InvalidArgument("malformed integer string: " + j.dump());
        return v;
    }
    if (j.is_number_integer()) return Integer(j.get<long>());
    throw InvalidArgument("expected an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name))
        throw InvalidArgument(std::string("missing JSON field '") + name + "'");
    return j.at(name);
}

bool lex_less(const Partition& a, const Partition& b)
{
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(),
                                        b.parts().end());
}

} // namespace

Json to_json(const Partition& p)
{
    Json j = Json::array();
    for (int x : p.parts()) j.push_back(x);
    return j;
}

Partition partition_from_json(const Json& j)
{
    if (!j.is_array()) throw InvalidArgument("partition must be a JSON array: " + j.dump());
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InvalidArgument("partition parts must be integers");
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

Json to_json(const LaurentPoly& p)
{
    Json j = Json::array();
    for (const auto& [k, c] : p.coefficients()) j.push_back(Json::array({k, c.get_str()}));
    return j;
}

LaurentPoly laurent_from_json(const Json& j)
{
    if (!j.is_array()) throw InvalidArgument("Laurent polynomial must be a JSON array");
    LaurentPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
            throw InvalidArgument("Laurent term must be [exponent, \"coefficient\"]");
        p += LaurentPoly::monomial(term[0].get<int>(), integer_from_json(term[1]));
    }
    return p;
}

Json to_json(const KClass& k)
{
    std::vector<Partition> keys;
    for (const auto& [key, c] : k.terms()) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), lex_less);
    Json terms = Json::array();
    for (const Partition& key : keys)
        terms.push_back({{"partition", to_json(key)}, {"coeff", to_json(k.coeff(key))}});
    return {{"g", k.context().g},
            {"hyperelliptic", k.context().hyperelliptic},
            {"terms", terms}};
}

KClass kclass_from_json(const Json& j)
{
    const CurveContext ctx(field(j, "g").get<int>(), field(j, "hyperelliptic").get<bool>());
    KClass k(ctx);
    for (const auto& term : field(j, "terms")) {
        const Partition key = partition_from_json(field(term, "partition"));
        require(key.first() <= ctx.chi() - 1, "KClass JSON key not in normal form");
        k.add(key, laurent_from_json(field(term, "coeff")));
    }
    return k;
}

Json to_json(const BettiReport& r)
{
    return {{"partition", to_json(r.gamma)},
            {"g", r.ctx.g},
            {"hyperelliptic", r.ctx.hyperelliptic},
            {"h", to_json(r.h)},
            {"P", to_json(r.P)},
            {"h_perverse", to_json(r.h_perverse)},
            {"euler", r.euler.get_str()}};
}

BettiReport betti_report_from_json(const Json& j)
{
    const bool hyper = j.contains("hyperelliptic") ? j.at("hyperelliptic").get<bool>() : false;
    return BettiReport{partition_from_json(field(j, "partition")),
                       CurveContext(field(j, "g").get<int>(), hyper),
                       laurent_from_json(field(j, "h")),
                       laurent_from_json(field(j, "P")),
                       laurent_from_json(field(j, "h_perverse")),
                       integer_from_json(field(j, "euler"))};
}

Json to_json(const RepElement& r)
{
    std::vector<Partition> labels;
    for (const auto& [label, mult] : r.terms()) labels.push_back(label);
    std::sort(labels.begin(), labels.end(), lex_less);
    Json terms = Json::array();
    for (const Partition& label : labels)
        terms.push_back({{"label", to_json(label)}, {"mult", r.multiplicity(label).get_str()}});
    return {{"group", to_string(r.group())}, {"rank", r.rank()}, {"terms", terms}};
}

RepElement rep_from_json(const Json& j)
{
    const std::string g = field(j, "group").get<std::string>();
    require(g == "SL" || g == "Sp", "group must be \"SL\" or \"Sp\"");
    RepElement r(g == "SL" ? Group::SL : Group::Sp, field(j, "rank").get<int>());
    const int max_length = r.group() == Group::SL ? r.rank() - 1 : r.rank();
    for (const auto& term : field(j, "terms")) {
        const Partition label = partition_from_json(field(term, "label"));
        const Integer mult = integer_from_json(field(term, "mult"));
        require(label.length() <= max_length, "label " + label.to_string() + " too long for the group");
        require(mult >= 0, "negative multiplicity");
        r.add(label, mult);
    }
    return r;
}

Json to_json(const ComparisonReport& r)
{
    return {{"alpha", to_json(r.alpha)},
            {"beta", to_json(r.beta)},
            {"g", r.ctx.g},
            {"hyperelliptic", r.ctx.hyperelliptic},
            {"left", to_json(r.left)},
            {"right", to_json(r.right)},
            {"equal", r.equal},
            {"left_dim", r.left_dim.get_str()},
            {"right_dim", r.right_dim.get_str()}};
}

} // namespace bnring::io
