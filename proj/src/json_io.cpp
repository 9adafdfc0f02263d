#include "hzero/json_io.hpp"

#include <map>

namespace hzero {

Json to_json(const Permutation& p)
{
    return Json(std::vector<int>(p.images().begin(), p.images().end()));
}

Json to_json(const Composition& alpha)
{
    return Json(alpha.parts());
}

Json to_json(const OrbitPartition& partition)
{
    return Json(partition.blocks());
}

Json class_to_json(const EquivClass& cls)
{
    Json elements = Json::array();
    for (const auto& p : cls.elements)
        elements.push_back(to_json(p));
    return {
        {"alpha", cls.alpha ? to_json(*cls.alpha) : Json(nullptr)},
        {"length", cls.common_length},
        {"size", cls.elements.size()},
        {"representative", to_json(cls.representative)},
        {"elements", std::move(elements)},
    };
}

Json orbit_histogram(const EquivClass& cls)
{
    std::map<OrbitPartition, std::size_t> counts;
    for (const auto& p : cls.elements)
        ++counts[orbit_partition(p)];
    Json out = Json::array();
    for (const auto& [partition, count] : counts)
        out.push_back({{"orbits", to_json(partition)}, {"count", count}});
    return out;
}

Json catalog_to_json(int n, Twist twist, const std::vector<EquivClass>& classes)
{
    Json list = Json::array();
    for (const auto& cls : classes)
        list.push_back(class_to_json(cls));
    return {{"n", n}, {"twist", to_string(twist)}, {"classes", std::move(list)}};
}

Json hecke_to_json(const Composition& alpha, const HeckeElement& x)
{
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms())
        terms.push_back({{"w", to_json(w)}, {"c", Json::parse(c.str())}});
    return {{"alpha", to_json(alpha)}, {"ideal_size", x.terms().size()}, {"terms", std::move(terms)}};
}

Json report_to_json(const VerifyReport& report)
{
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"n", report.n}, {"ok", report.ok()}, {"checks", std::move(checks)}, {"skipped", report.skipped}};
}

Permutation permutation_from_json(const Json& j)
{
    if (!j.is_array())
        throw invalid_input("permutation JSON must be an array");
    return Permutation(j.get<std::vector<int>>());
}

} // namespace hzero
