#pragma once

#include <vector>

#include "addcomb/factorize.hpp"
#include "addcomb/finite_set.hpp"
#include "addcomb/rational.hpp"
#include "addcomb/snf.hpp"

namespace addcomb {

// Finitely generated multiplicative subgroup of Q*, given by its
// generators. -1 is implicitly a member, so membership ignores sign.
struct GroupSpec {
    std::vector<Rational> generators;

    explicit GroupSpec(std::vector<Rational> gens);
    int rank() const { return static_cast<int>(generators.size()); }
};

// Reduction of group membership to an integer lattice problem: the prime
// basis is every prime occurring in any generator, and column j of the
// exponent matrix is generator j's exponent vector over that basis.
struct ExponentLattice {
    std::vector<Integer> primes;  // strictly increasing
    IntMat exponents;             // rows = primes, cols = generators
    SmithForm snf;                // cached for membership solves
};

ExponentLattice build_lattice(const GroupSpec& spec,
                              unsigned long long factor_bound = kDefaultFactorBound);

// True iff |x| lies in the integer column lattice, i.e. x is (up to sign)
// a product of integer powers of the generators. A prime outside the
// basis makes this false, not an error. Requires x != 0.
bool gamma_member(const Rational& x, const ExponentLattice& lattice);

// Unoriented graph on the elements of A with an edge {a1, a2} iff
// a1 - a2 lies in the group.
struct DiffGraph {
    std::vector<Rational> vertices;       // strictly increasing
    std::vector<std::vector<int>> adj;    // sorted neighbor lists
    long long edge_count = 0;

    long long ordered_pair_count() const { return 2 * edge_count; }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int min_degree() const;
    std::size_t size() const { return vertices.size(); }

    static DiffGraph complete(const FiniteSet& values);  // test/benchmark helper
};

DiffGraph build_diff_graph(const FiniteSet& A, const GroupSpec& spec);

// Repeatedly delete vertices of degree < t. Every surviving vertex has
// degree >= t, and at most t * |V| edges are removed.
DiffGraph prune_min_degree(const DiffGraph& g, long long t);

// True iff no nonempty subset of the differences sums to zero (the full
// set included, so the walk is non-closed).
bool is_nondegenerate_path(const std::vector<Rational>& diffs);

struct PathCounts {
    long long total = 0;
    std::vector<long long> per_endpoint;  // indexed like the graph vertices
};

// Exhaustive enumeration of k-edge walks from `source` (vertices may
// repeat) whose difference sequence is nondegenerate. 1 <= k <= 8.
PathCounts count_nondeg_paths(const DiffGraph& g, int source, int k);

// prod_{l=0}^{k-1} max(delta - 2^l + 1, 0).
Integer path_count_lower_bound(long long min_degree, int k);

inline constexpr double kDefaultSubspaceDigitBudget = 1e6;

// (8k)^(4k^4(k + kr + 1)), exactly. CapacityError when the result would
// exceed the decimal digit budget.
Integer subspace_bound(long long k, long long r,
                       double digit_budget = kDefaultSubspaceDigitBudget);

struct Step3Params {
    Integer k;  // ceil(2/eps)
    double c;   // 1 / (5 k^5 ln(8k))
};

// Requires 0 < eps < 1.
Step3Params step3_params(const Rational& eps);

}  // namespace addcomb
