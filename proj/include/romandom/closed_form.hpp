#ifndef ROMANDOM_CLOSED_FORM_HPP
#define ROMANDOM_CLOSED_FORM_HPP

#include <stdexcept>

#include "romandom/graph.hpp"

namespace romandom {

// Parameters are generable but fall outside the closed form's domain
// (a double comet with spine length p = 2). The exact solvers still cover
// such instances.
class ExcludedCaseError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Some residues admit two optimal labelings; `i` is the default everywhere.
enum class Subcase { i, ii };

// All three evaluators use exact integer arithmetic only.
int gamma_comet(int t, int r);
int gamma_double_comet(int n, int a, int b);
int gamma_comb(int n);

bool comet_has_subcases(int t);  // true iff t = 1 (mod 3)
bool comb_has_subcases(int n);   // true iff n = 1 or 2 (mod 3)

// Optimal labelings matching the closed forms; weight always equals the
// corresponding gamma_* value and the result is a valid RDF on the
// generated graph. Subcase ii is rejected where no alternative exists.
Labeling construct_comet(int t, int r, Subcase sub = Subcase::i);
Labeling construct_double_comet(int n, int a, int b);
Labeling construct_comb(int n, Subcase sub = Subcase::i);

}  // namespace romandom

#endif
