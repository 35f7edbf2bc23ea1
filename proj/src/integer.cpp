#include "motzeta/integer.hpp"

namespace motzeta {

Integer binomial(const Integer& n, unsigned long k)
{
    // prod_{i<k} (n - i) / k!, exact at every step
    Integer num = 1;
    for (unsigned long i = 0; i < k; ++i) {
        num *= n - i;
        num /= i + 1;
    }
    return num;
}

} // namespace motzeta
