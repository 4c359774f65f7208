#include "chowdeg/bigint.hpp"

namespace chowdeg {

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

Int multinomial(long s, const std::vector<long>& parts) {
    long sum = 0;
    for (long p : parts) {
        if (p < 0)
            return 0;
        sum += p;
    }
    if (sum != s || s < 0)
        return 0;
    Int r = 1;
    long upper = 0;
    for (long p : parts) {
        upper += p;
        r *= binomial(upper, p);
    }
    return r;
}

} // namespace chowdeg
