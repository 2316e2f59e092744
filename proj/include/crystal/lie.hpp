#ifndef CRYSTAL_LIE_HPP
#define CRYSTAL_LIE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystal/rational.hpp"

namespace crystal {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

// Enumeration and component-generation guard.
inline constexpr std::size_t default_node_cap = 1000000;

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One of the classical families A_n, B_n, C_n, D_n.  Rank bounds: A >= 1,
// B and C >= 2, D >= 4.
struct LieType {
    Family family = Family::A;
    int rank = 1;

    LieType() = default;
    LieType(Family f, int n);

    // Number of epsilon coordinates carried by weights (n, or n+1 for A).
    int weight_dim() const { return family == Family::A ? rank + 1 : rank; }
    std::string str() const { return std::string(1, char(family)) + std::to_string(rank); }

    friend bool operator==(const LieType& a, const LieType& b) { return a.family == b.family && a.rank == b.rank; }
};

LieType parse_type(const std::string& fam, int rank);

// Weight vector in the orthonormal epsilon basis, exact rationals.
using Weight = std::vector<Rat>;

Weight zero_weight(const LieType& t);
Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
std::string weight_str(const Weight& w);

// <w, h_i>, the coroot pairing.
Rat pairing(const LieType& t, const Weight& w, int i);

// Simple root alpha_i in epsilon coordinates.
Weight simple_root(const LieType& t, int i);

// Fundamental weight lambda_i.
Weight fundamental(const LieType& t, int i);

// lambda = sum_i c_i lambda_i for nonnegative integer coefficients.
Weight weight_from_coeffs(const LieType& t, const std::vector<long>& c);

// Inverse of the above; throws if w is not dominant integral.
std::vector<long> coeffs_from_weight(const LieType& t, const Weight& w);

bool is_dominant_integral(const LieType& t, const Weight& w);

// Weyl dimension formula over the standard positive-root tables; exact
// arithmetic, the result is asserted integral.
long long weyl_dim(const LieType& t, const Weight& lam);

} // namespace crystal

#endif
