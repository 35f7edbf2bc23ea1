#pragma once

#include <string>
#include <vector>

namespace motzeta {

struct NamedGerm {
    std::string name;
    std::string polynomial;
};

/// Built-in germs: smooth, node, cusp and the two-cusp counterexample.
inline std::vector<NamedGerm> builtin_germs()
{
    return {
        {"smooth", "x"},
        {"node", "x*y"},
        {"cusp", "x^2+y^3"},
        {"two-cusps", "(x^2+y^3)*(y^2+x^3)"},
    };
}

} // namespace motzeta
