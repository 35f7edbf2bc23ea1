#include "motzeta/resolution.hpp"

#include "motzeta/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace motzeta {

bool ResolutionData::has_M() const
{
    return std::all_of(components.begin(), components.end(), [](const Component& c) { return c.M.has_value(); });
}

const Component& ResolutionData::component(const std::string& id) const
{
    for (const auto& c : components)
        if (c.id == id)
            return c;
    throw DomainError("unknown component id '" + id + "'");
}

MotivicClass ResolutionData::singleton_class(const std::string& id) const
{
    for (const auto& s : strata)
        if (s.members.size() == 1 && s.members.front() == id)
            return s.cls;
    return {};
}

bool ResolutionData::touches_exceptional(const Stratum& s) const
{
    return std::any_of(s.members.begin(), s.members.end(),
                       [&](const std::string& id) { return component(id).is_exceptional(); });
}

ValidationReport validate(const ResolutionData& res)
{
    ValidationReport report;
    auto complain = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

    if (res.ambient_dim < 1)
        complain("ambient_dim must be positive");

    std::map<std::string, const Component*> by_id;
    bool any_exceptional = false;
    for (const auto& c : res.components) {
        if (c.id.empty())
            complain("component with empty id");
        if (!by_id.emplace(c.id, &c).second)
            complain("duplicate component id '" + c.id + "'");
        if (c.N < 1)
            complain("component '" + c.id + "': N must be >= 1, got " + std::to_string(c.N));
        if (c.nu < 1)
            complain("component '" + c.id + "': nu must be >= 1, got " + std::to_string(c.nu));
        if (c.M && *c.M < 0)
            complain("component '" + c.id + "': M must be >= 0, got " + std::to_string(*c.M));
        any_exceptional = any_exceptional || c.is_exceptional();
    }
    if (!any_exceptional)
        complain("no exceptional component");

    std::set<std::vector<std::string>> seen;
    for (const auto& s : res.strata) {
        std::string label = "{";
        for (const auto& m : s.members)
            label += (label.size() > 1 ? "," : "") + m;
        label += "}";
        if (s.members.empty())
            complain("stratum with no members");
        if (!std::is_sorted(s.members.begin(), s.members.end()) ||
            std::adjacent_find(s.members.begin(), s.members.end()) != s.members.end())
            complain("stratum " + label + ": members must be sorted and distinct");
        for (const auto& m : s.members)
            if (!by_id.count(m))
                complain("stratum " + label + " references unknown component '" + m + "'");
        if (s.cls.is_zero())
            complain("stratum " + label + " has zero class (omit it instead)");
        if (!seen.insert(s.members).second)
            complain("stratum " + label + " listed twice");
        if (static_cast<long>(s.members.size()) > res.ambient_dim)
            complain("stratum " + label + ": more components than the ambient dimension");
        if (res.ambient_dim == 2 && s.members.size() == 2) {
            const auto& terms = s.cls.terms();
            bool point_count = terms.size() == 1 && terms.begin()->first == 0 && terms.begin()->second > 0;
            if (!point_count)
                complain("stratum " + label + ": a curve intersection must be a positive number of points");
        }
    }
    return report;
}

ValidationReport validate(const DualGraph& g)
{
    ValidationReport report;
    auto complain = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

    std::set<std::string> vertex_ids;
    std::set<std::string> branch_ids;
    for (const auto& v : g.vertices) {
        if (!vertex_ids.insert(v.id).second)
            complain("duplicate vertex '" + v.id + "'");
        if (v.N < 1 || v.nu < 1 || (v.M && *v.M < 0))
            complain("vertex '" + v.id + "' has invalid multiplicities");
    }
    for (const auto& b : g.branches) {
        if (vertex_ids.count(b.id) || !branch_ids.insert(b.id).second)
            complain("duplicate id '" + b.id + "'");
        if (b.N < 1 || b.nu < 1 || (b.M && *b.M < 0))
            complain("branch '" + b.id + "' has invalid multiplicities");
    }
    if (g.vertices.empty())
        complain("dual graph has no vertices");
    for (const auto& e : g.edges) {
        if (e.a == e.b)
            complain("self-loop at '" + e.a + "'");
        if (!vertex_ids.count(e.a) || !vertex_ids.count(e.b))
            complain("edge " + e.a + "-" + e.b + " has an unknown endpoint");
        if (e.multiplicity < 1)
            complain("edge " + e.a + "-" + e.b + " has nonpositive multiplicity");
    }
    for (const auto& a : g.arrows) {
        if (!vertex_ids.count(a.vertex))
            complain("arrow to unknown vertex '" + a.vertex + "'");
        if (!branch_ids.count(a.branch))
            complain("arrow from unknown branch '" + a.branch + "'");
        if (a.multiplicity < 1)
            complain("arrow " + a.branch + "->" + a.vertex + " has nonpositive multiplicity");
    }
    return report;
}

ResolutionData from_dual_graph(const DualGraph& g)
{
    if (auto report = validate(g); !report.ok())
        throw DomainError("invalid dual graph: " + report.violations.front());

    ResolutionData res;
    res.ambient_dim = 2;
    for (const auto& v : g.vertices)
        res.components.push_back({v.id, ComponentKind::exceptional, v.N, v.nu, v.M});
    for (const auto& b : g.branches)
        res.components.push_back({b.id, ComponentKind::strict, b.N, b.nu, b.M});

    std::map<std::string, long> incidences;
    std::map<std::vector<std::string>, long> pairs;
    auto add_pair = [&](std::string a, std::string b, long m) {
        std::vector<std::string> key{std::move(a), std::move(b)};
        std::sort(key.begin(), key.end());
        pairs[key] += m;
    };
    for (const auto& e : g.edges) {
        incidences[e.a] += e.multiplicity;
        incidences[e.b] += e.multiplicity;
        add_pair(e.a, e.b, e.multiplicity);
    }
    for (const auto& a : g.arrows) {
        incidences[a.vertex] += a.multiplicity;
        add_pair(a.vertex, a.branch, a.multiplicity);
    }

    for (const auto& v : g.vertices) {
        MotivicClass cls = MotivicClass::lefschetz() + MotivicClass(1 - incidences[v.id]);
        if (!cls.is_zero())
            res.strata.push_back({{v.id}, cls});
    }
    for (const auto& [members, m] : pairs)
        res.strata.push_back({members, MotivicClass(m)});
    return res;
}

} // namespace motzeta
