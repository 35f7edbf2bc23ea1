#include "motzeta/curve_resolver.hpp"

#include <optional>
#include <set>

namespace motzeta {

namespace {

// Local picture at an infinitely near point: the strict transform g in
// coordinates centered at the point, and the exceptional components through
// it, which are always coordinate axes.
struct ChartState {
    BiPoly g;
    std::optional<std::size_t> on_x0; // exceptional component {x = 0}
    std::optional<std::size_t> on_y0; // exceptional component {y = 0}
    int depth = 0;
};

class Resolver {
public:
    explicit Resolver(int max_depth) : max_depth_(max_depth) {}

    DualGraph run(const BiPoly& f)
    {
        blowup(ChartState{f, std::nullopt, std::nullopt, 0}, f.multiplicity());
        return std::move(graph_);
    }

private:
    void process(const ChartState& s)
    {
        const long m = s.g.multiplicity();
        const int through = (s.on_x0 ? 1 : 0) + (s.on_y0 ? 1 : 0);
        if (m == 0) {
            if (through == 2)
                graph_.edges.push_back({vertex_id(*s.on_x0), vertex_id(*s.on_y0), 1});
            return;
        }
        if (m == 1 && through == 1) {
            // Transversal to the axis iff the linear part is not a multiple
            // of the axis equation.
            bool transversal = s.on_x0 ? s.g.coefficient(0, 1) != 0 : s.g.coefficient(1, 0) != 0;
            if (transversal) {
                std::string id = "C" + std::to_string(graph_.branches.size() + 1);
                graph_.branches.push_back({id, 1, 1, 0});
                graph_.arrows.push_back({vertex_id(s.on_x0 ? *s.on_x0 : *s.on_y0), id, 1});
                return;
            }
        }
        blowup(s, m);
    }

    void blowup(const ChartState& s, long m)
    {
        if (s.depth >= max_depth_)
            throw ResolverError(ResolverError::Kind::depth_exceeded,
                                "resolution did not finish within " + std::to_string(max_depth_) + " blowups");

        DualGraph::Vertex v;
        v.id = "E" + std::to_string(graph_.vertices.size() + 1);
        v.N = m;
        v.nu = 2;
        long M = 0;
        for (auto idx : {s.on_x0, s.on_y0}) {
            if (!idx)
                continue;
            const auto& w = graph_.vertices[*idx];
            v.N += w.N;
            v.nu += w.nu - 1;
            M += *w.M;
        }
        v.M = s.depth == 0 ? 1 : M;
        const std::size_t self = graph_.vertices.size();
        graph_.vertices.push_back(v);

        // Tangent directions: y = c x for roots c of h(1, c), plus the
        // direction x = 0 when h(0, 1) vanishes.
        const BiPoly h = s.g.homogeneous_part(m);
        std::vector<Rational> dir(static_cast<std::size_t>(m + 1), Rational(0));
        for (const auto& [mono, c] : h.terms())
            dir[static_cast<std::size_t>(mono.second)] += c;
        const RationalRoots roots = rational_roots(UPoly(dir));
        if (roots.cofactor.degree() > 0)
            throw ResolverError(ResolverError::Kind::irrational_center,
                                "tangent directions at " + v.id + " are not rational: " +
                                    roots.cofactor.to_string("c") + " = 0");

        std::set<Rational> slopes;
        for (const auto& [c, mult] : roots.roots)
            slopes.insert(c);
        if (s.on_y0)
            slopes.insert(Rational(0));
        const bool vertical = h.coefficient(0, m) == 0;

        for (const auto& c : slopes) {
            ChartState next{s.g.blowup_x_chart(c, m), self, std::nullopt, s.depth + 1};
            if (c == 0)
                next.on_y0 = s.on_y0;
            process(next);
        }
        if (vertical || s.on_x0)
            process(ChartState{s.g.blowup_y_chart(m), s.on_x0, self, s.depth + 1});
    }

    const std::string& vertex_id(std::size_t idx) const { return graph_.vertices[idx].id; }

    int max_depth_;
    DualGraph graph_;
};

} // namespace

CurveResolution resolve_germ(const BiPoly& f, int max_depth)
{
    if (f.is_zero())
        throw ResolverError(ResolverError::Kind::not_squarefree, "the zero polynomial does not define a curve");
    if (f.coefficient(0, 0) != 0)
        throw ResolverError(ResolverError::Kind::unit_germ, "f(0,0) != 0: the germ is a unit");
    if (!is_squarefree(f))
        throw ResolverError(ResolverError::Kind::not_squarefree, "f has a repeated factor");

    CurveResolution out;
    out.graph = Resolver(max_depth).run(f);
    out.data = from_dual_graph(out.graph);
    return out;
}

CurveResolution resolve_germ(std::string_view polynomial, int max_depth)
{
    return resolve_germ(parse_bipoly(polynomial), max_depth);
}

} // namespace motzeta
