#ifndef CRYSTAL_CORRESPONDENCE_HPP
#define CRYSTAL_CORRESPONDENCE_HPP

#include <string>

#include "crystal/graph.hpp"
#include "crystal/kn_tableau.hpp"
#include "crystal/young_wall.hpp"

namespace crystal {

// The wall-to-tableau map of Steps 1-3 (B walls).
RevTableau phi(const YoungWall& y, const Weight& lam);

enum class StringPolicy : char { smallest = 's', largest = 'l' };

// The tableau-to-KN-tableau crystal isomorphism: raise to the highest
// element, then replay the string from the highest KN tableau.  The result
// does not depend on the policy; tests compare both.
KNTableau psi(const RevTableau& t, const Weight& lam, StringPolicy policy = StringPolicy::smallest);

struct VerifyReport {
    std::string type;
    std::string lambda;
    long long dim_oracle = 0;
    size_t kn_enumerated = 0, rev_enumerated = 0;
    size_t kn_component = 0, rev_component = 0, wall_component = 0; // wall 0 when not built
    bool kn_set_equal = false, rev_set_equal = false;
    bool iso_ok = false;
    bool psi_ok = false;
    bool phi_ok = true; // walls; stays true when no wall model exists
    bool wall_built = false;

    bool ok() const {
        return (long long)kn_enumerated == dim_oracle && (long long)rev_enumerated == dim_oracle &&
               (long long)kn_component == dim_oracle && (long long)rev_component == dim_oracle &&
               kn_set_equal && rev_set_equal && iso_ok && psi_ok && phi_ok &&
               (!wall_built || (long long)wall_component == dim_oracle);
    }
    std::string to_json() const;
};

// Build all models available for (type, lambda), check pairwise isomorphism
// and the phi/psi maps, and compare sizes with the dimension oracle.
VerifyReport verify_chain(const LieType& t, const Weight& lam, size_t cap = default_node_cap);

} // namespace crystal

#endif
