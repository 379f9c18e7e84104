#pragma once

#include "maghom/homology.hpp"
#include "maghom/magnitude.hpp"

namespace maghom {

// direct sum over exact length splits of fiber (x) base tensor complexes
struct rhs_complex {
    std::vector<std::pair<rational, rational>> splits;  // (fiber length, base length)
    std::vector<magnitude_complex> fiber_factors;
    std::vector<magnitude_complex> base_factors;
    tensor_complex tensor;
};

rhs_complex kunneth_rhs(const metric_space& fiber, const metric_space& base,
                        const rational& length, int n_max = -1);

struct phi_psi {
    std::vector<sparse_matrix> phi;  // quotient -> tensor sum
    std::vector<sparse_matrix> psi;  // tensor sum -> quotient
};

// cellwise maps: phi splits a tuple at the end of its vertical run, psi
// rebuilds one by lifting the fiber part along the base part
phi_psi build_phi_psi(const fibration& fib, const fiber_space& fiber,
                      const magnitude_complex& full, const basis_selection& quotient,
                      const rhs_complex& rhs);

struct kunneth_length_report {
    rational length;
    bool quotient_ok = false;   // distinguished cells closed under the boundary
    bool d_acyclic = false;     // their subcomplex has zero homology
    bool maps_ok = false;       // phi/psi are mutually inverse chain maps
    bool homology_match = false;
    bool projection_qiso = false;  // collapse map is a quasi-isomorphism
    homology_summary h_total, h_quotient, h_rhs, h_d;
    std::string detail;  // first failure, empty when everything checks out

    bool passed() const {
        return quotient_ok && d_acyclic && maps_ok && homology_match && projection_qiso;
    }
};

struct kunneth_report {
    int basepoint = 0;
    std::vector<kunneth_length_report> rows;

    bool passed() const {
        for (const auto& r : rows)
            if (!r.passed()) return false;
        return true;
    }
};

// checks the length-graded decomposition of the total space over every
// realizable length up to the bound
kunneth_report verify_kunneth(const fibration& fib, int basepoint, const rational& l_max,
                              int n_max = -1, int jobs = 1);

}  // namespace maghom
