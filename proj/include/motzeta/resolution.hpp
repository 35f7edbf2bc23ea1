#pragma once

#include "motzeta/motivic_class.hpp"

#include <optional>
#include <string>
#include <vector>

namespace motzeta {

enum class ComponentKind { exceptional, strict };

/// One irreducible component E_i of the total transform of {f = 0}.
struct Component {
    std::string id;
    ComponentKind kind = ComponentKind::exceptional;
    long N = 1;              ///< multiplicity of f o pi along E_i
    long nu = 1;             ///< nu_i - 1 is the multiplicity of pi^* dx
    std::optional<long> M;   ///< multiplicity in the pullback of the first exceptional divisor

    bool is_exceptional() const noexcept { return kind == ComponentKind::exceptional; }
    friend bool operator==(const Component&, const Component&) = default;
};

/// A stratum E_I minus the other components, with its class [E_I°].
struct Stratum {
    std::vector<std::string> members; ///< sorted, no duplicates
    MotivicClass cls;
    friend bool operator==(const Stratum&, const Stratum&) = default;
};

/// SNC resolution data of a germ f: (C^d, 0) -> (C, 0).
struct ResolutionData {
    int ambient_dim = 2;
    std::vector<Component> components;
    std::vector<Stratum> strata;

    /// True when every component carries M.
    bool has_M() const;
    /// Throws DomainError for unknown ids.
    const Component& component(const std::string& id) const;
    /// Class of the singleton stratum {id}, zero if absent.
    MotivicClass singleton_class(const std::string& id) const;
    /// I is not contained in the strict-transform components.
    bool touches_exceptional(const Stratum& s) const;

    friend bool operator==(const ResolutionData&, const ResolutionData&) = default;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate(const ResolutionData& res);

/// Dual graph of a plane-curve resolution. Every vertex is a rational curve.
struct DualGraph {
    struct Vertex {
        std::string id;
        long N = 1;
        long nu = 1;
        std::optional<long> M;
        friend bool operator==(const Vertex&, const Vertex&) = default;
    };
    struct Edge {
        std::string a, b;
        long multiplicity = 1;
        friend bool operator==(const Edge&, const Edge&) = default;
    };
    struct Branch {
        std::string id;
        long N = 1;
        long nu = 1;
        std::optional<long> M = 0;
        friend bool operator==(const Branch&, const Branch&) = default;
    };
    struct Arrow {
        std::string vertex;
        std::string branch;
        long multiplicity = 1;
        friend bool operator==(const Arrow&, const Arrow&) = default;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Branch> branches;
    std::vector<Arrow> arrows;

    friend bool operator==(const DualGraph&, const DualGraph&) = default;
};

ValidationReport validate(const DualGraph& g);

/// [E_i°] = L + 1 - (incident edge ends + arrows) for each vertex; each
/// edge or arrow of multiplicity m becomes a pair stratum of class m.
ResolutionData from_dual_graph(const DualGraph& g);

} // namespace motzeta
