#include "superalg/field.hpp"

#include <cstdlib>

namespace sa {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int max_prime() {
    if (const char* env = std::getenv("SUPERALG_MAX_P")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 3 && v <= 251) return static_cast<int>(v);
    }
    return 13;
}

Field::Field(int p) : p_(p) {
    if (!is_prime(p)) throw usage_error("p must be prime");
    if (p == 2) throw usage_error("p must be odd");
    if (p > max_prime())
        throw usage_error("p exceeds the configured cap " + std::to_string(max_prime()));
    inv_.assign(p, 0);
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b)
            if (a * b % p == 1) inv_[a] = b;
}

int Field::inv(int a) const {
    a = reduce(a);
    if (a == 0) throw std::domain_error("division by zero in F_p");
    return inv_[a];
}

int Field::pow(int a, long long e) const {
    a = reduce(a);
    if (e < 0) { a = inv(a); e = -e; }
    int r = 1 % p_;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

}  // namespace sa
