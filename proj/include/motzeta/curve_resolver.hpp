#pragma once

#include "motzeta/bipoly.hpp"
#include "motzeta/errors.hpp"
#include "motzeta/resolution.hpp"

#include <string_view>

namespace motzeta {

class ResolverError : public DomainError {
public:
    enum class Kind { irrational_center, depth_exceeded, not_squarefree, unit_germ };

    ResolverError(Kind kind, const std::string& what) : DomainError(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

struct CurveResolution {
    ResolutionData data;
    DualGraph graph;
};

/// Embedded resolution of the plane-curve germ f at the origin by iterated
/// point blowups. Exceptional components are named E1, E2, ... and branches
/// C1, C2, ... in depth-first blowup order. The first blowup always happens,
/// so M is populated for every component.
///
/// Only centers with rational coordinates are supported.
CurveResolution resolve_germ(const BiPoly& f, int max_depth = 64);
CurveResolution resolve_germ(std::string_view polynomial, int max_depth = 64);

} // namespace motzeta
