#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sa {

// Raised for bad inputs (invalid prime, mismatched algebras, out-of-range params).
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool is_prime(long n);

// Upper bound on p. Defaults to 13, overridable through SUPERALG_MAX_P.
int max_prime();

class Field {
public:
    explicit Field(int p);

    int p() const { return p_; }
    int reduce(long long x) const {
        long long r = x % p_;
        return static_cast<int>(r < 0 ? r + p_ : r);
    }
    int add(int a, int b) const { int s = a + b; return s >= p_ ? s - p_ : s; }
    int sub(int a, int b) const { int s = a - b; return s < 0 ? s + p_ : s; }
    int neg(int a) const { return a == 0 ? 0 : p_ - a; }
    int mul(int a, int b) const { return (a * b) % p_; }
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long long e) const;

private:
    int p_;
    std::vector<int> inv_;
};

}  // namespace sa
