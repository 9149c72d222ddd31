#ifndef ROMANDOM_FAMILIES_HPP
#define ROMANDOM_FAMILIES_HPP

#include <string>

#include "romandom/graph.hpp"

namespace romandom {

enum class Family { comet, double_comet, comb };

// Parameter record for the three generated families. Compact text forms:
// "comet:t,r", "dcomet:n,a,b", "comb:n".
struct FamilySpec {
    Family kind = Family::comet;
    int t = 0;  // comet: path length (t >= 2)
    int r = 0;  // comet: leaf count (r >= 1)
    int n = 0;  // double comet: total vertices; comb: spine length
    int a = 0;  // double comet: pendants on k_1 (a >= 1)
    int b = 0;  // double comet: pendants on k_p (b >= 1)

    static FamilySpec comet(int t, int r);
    static FamilySpec double_comet(int n, int a, int b);
    static FamilySpec comb(int n);

    // Throws ParseError on bad syntax, std::domain_error on bad parameters.
    static FamilySpec parse(const std::string& text);
    std::string to_text() const;

    int vertex_count() const;
    int spine_length() const;        // t, p = n-a-b, or n
    void validate() const;           // throws std::domain_error

    bool operator==(const FamilySpec&) const = default;
};

// Path v_1..v_t on ids 0..t-1 plus r leaves u_1..u_r on ids t..t+r-1, all
// attached to v_1 (id 0).
Graph gen_comet(int t, int r);

// Spine k_1..k_p on ids 0..p-1 with p = n-a-b, a leaves u_1..u_a on ids
// p..p+a-1 attached to k_1, and b leaves v_1..v_b on ids p+a..n-1 attached
// to k_p.
Graph gen_double_comet(int n, int a, int b);

// Spine v_1..v_n on ids 0..n-1; pendant v_i+ has id n+i-1 and is adjacent
// only to v_i.
Graph gen_comb(int n);

Graph generate(const FamilySpec& spec);

}  // namespace romandom

#endif
