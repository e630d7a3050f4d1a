#include "addcomb/sunit.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "addcomb/errors.hpp"

namespace addcomb {

GroupSpec::GroupSpec(std::vector<Rational> gens) : generators(std::move(gens)) {
    for (const Rational& g : generators)
        if (g.is_zero()) throw PreconditionError("group generator must be nonzero");
}

ExponentLattice build_lattice(const GroupSpec& spec, unsigned long long factor_bound) {
    // prime -> exponent vector over generators
    std::map<Integer, std::vector<Integer>> rows;
    std::size_t ngen = spec.generators.size();
    auto account = [&](const Integer& value, std::size_t gen, int direction) {
        for (const auto& [prime, exp] : factorize(value, factor_bound).factors) {
            auto it = rows.find(prime);
            if (it == rows.end())
                it = rows.emplace(prime, std::vector<Integer>(ngen, 0)).first;
            it->second[gen] += direction * static_cast<long>(exp);
        }
    };
    for (std::size_t j = 0; j < ngen; ++j) {
        account(abs(spec.generators[j]).num(), j, +1);
        account(spec.generators[j].den(), j, -1);
    }

    ExponentLattice lat;
    for (auto& [prime, exps] : rows) {
        lat.primes.push_back(prime);
        lat.exponents.push_back(std::move(exps));
    }
    lat.snf = smith_normal_form(lat.exponents);
    return lat;
}

namespace {

// Exponent of every basis prime in |x|; false if a prime outside the
// basis remains.
bool exponent_vector(const Rational& x, const ExponentLattice& lat, std::vector<Integer>& e) {
    e.assign(lat.primes.size(), 0);
    Integer num = abs(x).num();
    Integer den = x.den();
    for (std::size_t i = 0; i < lat.primes.size(); ++i) {
        const Integer& p = lat.primes[i];
        while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
            e[i] += 1;
        }
        while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
            e[i] -= 1;
        }
    }
    return num == 1 && den == 1;
}

}  // namespace

bool gamma_member(const Rational& x, const ExponentLattice& lat) {
    if (x.is_zero()) throw PreconditionError("gamma_member: 0 is never a group element");
    std::vector<Integer> e;
    if (!exponent_vector(x, lat, e)) return false;
    return lattice_contains(lat.snf, e);
}

int DiffGraph::min_degree() const {
    int d = vertices.empty() ? 0 : degree(0);
    for (std::size_t v = 1; v < vertices.size(); ++v) d = std::min(d, degree(static_cast<int>(v)));
    return d;
}

DiffGraph DiffGraph::complete(const FiniteSet& values) {
    DiffGraph g;
    g.vertices.assign(values.begin(), values.end());
    int n = static_cast<int>(g.vertices.size());
    g.adj.resize(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g.adj[i].push_back(j);
    g.edge_count = static_cast<long long>(n) * (n - 1) / 2;
    return g;
}

DiffGraph build_diff_graph(const FiniteSet& A, const GroupSpec& spec) {
    ExponentLattice lat = build_lattice(spec);
    DiffGraph g;
    g.vertices.assign(A.begin(), A.end());
    int n = static_cast<int>(g.vertices.size());
    g.adj.resize(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // strictly sorted vertices, so the difference is nonzero
            if (gamma_member(g.vertices[j] - g.vertices[i], lat)) {
                g.adj[i].push_back(j);
                g.adj[j].push_back(i);
                ++g.edge_count;
            }
        }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

DiffGraph prune_min_degree(const DiffGraph& g, long long t) {
    if (t < 0) throw PreconditionError("prune_min_degree: threshold must be >= 0");
    int n = static_cast<int>(g.size());
    std::vector<long long> deg(n);
    std::vector<bool> dead(n, false);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < t) queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (dead[v]) continue;
        dead[v] = true;
        for (int w : g.adj[v]) {
            if (dead[w]) continue;
            if (--deg[w] < t && deg[w] + 1 >= t) queue.push_back(w);
        }
    }

    std::vector<int> remap(n, -1);
    DiffGraph out;
    for (int v = 0; v < n; ++v) {
        if (dead[v]) continue;
        remap[v] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(g.vertices[v]);
    }
    out.adj.resize(out.vertices.size());
    for (int v = 0; v < n; ++v) {
        if (dead[v]) continue;
        for (int w : g.adj[v]) {
            if (dead[w]) continue;
            out.adj[remap[v]].push_back(remap[w]);
            if (v < w) ++out.edge_count;
        }
    }
    return out;
}

bool is_nondegenerate_path(const std::vector<Rational>& diffs) {
    if (diffs.empty()) throw PreconditionError("is_nondegenerate_path: empty difference list");
    std::size_t k = diffs.size();
    if (k > 8 * sizeof(std::size_t) - 1)
        throw CapacityError("is_nondegenerate_path: too many differences");
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        Rational s;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) s += diffs[i];
        if (s.is_zero()) return false;
    }
    return true;
}

namespace {

struct PathSearch {
    const DiffGraph& g;
    int k;
    PathCounts counts;
    std::vector<std::vector<Rational>> sums;  // sums[d]: nonzero subset sums after d edges

    void run(int source) {
        counts.per_endpoint.assign(g.size(), 0);
        sums.assign(static_cast<std::size_t>(k) + 1, {});
        extend(source, 0);
    }

    // Degeneracy is monotone: once a subset of differences sums to zero it
    // does so in every extension, so pruning is exact.
    void extend(int u, int depth) {
        if (depth == k) {
            ++counts.total;
            ++counts.per_endpoint[u];
            return;
        }
        const auto& cur = sums[depth];
        auto& next = sums[depth + 1];
        for (int w : g.adj[u]) {
            Rational x = g.vertices[u] - g.vertices[w];
            next.clear();
            next.push_back(x);
            bool degenerate = false;
            for (const Rational& s : cur) {
                Rational t = s + x;
                if (t.is_zero()) {
                    degenerate = true;
                    break;
                }
                next.push_back(std::move(t));
            }
            if (degenerate) continue;
            next.insert(next.end(), cur.begin(), cur.end());
            extend(w, depth + 1);
        }
    }
};

}  // namespace

PathCounts count_nondeg_paths(const DiffGraph& g, int source, int k) {
    if (source < 0 || source >= static_cast<int>(g.size()))
        throw PreconditionError("count_nondeg_paths: source vertex out of range");
    if (k < 1 || k > 8)
        throw CapacityError("count_nondeg_paths: k must be in [1, 8]");
    PathSearch search{g, k, {}, {}};
    search.run(source);
    return search.counts;
}

Integer path_count_lower_bound(long long min_degree, int k) {
    if (min_degree < 0 || k < 1)
        throw PreconditionError("path_count_lower_bound: need delta >= 0 and k >= 1");
    Integer prod = 1;
    for (int l = 0; l < k; ++l) {
        long long term = min_degree - (1LL << l) + 1;
        if (term <= 0) return 0;
        prod *= static_cast<long>(term);
    }
    return prod;
}

Integer subspace_bound(long long k, long long r, double digit_budget) {
    if (k < 1 || r < 0) throw PreconditionError("subspace_bound: need k >= 1 and r >= 0");
    Integer kz(static_cast<long>(k)), rz(static_cast<long>(r));
    Integer exponent = 4 * kz * kz * kz * kz * (kz + kz * rz + 1);
    double digits = exponent.get_d() * std::log10(8.0 * static_cast<double>(k));
    if (digits > digit_budget || !exponent.fits_ulong_p())
        throw CapacityError("subspace_bound: result would exceed digit budget");
    Integer result;
    mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(8 * k), exponent.get_ui());
    return result;
}

Step3Params step3_params(const Rational& eps) {
    if (eps.sign() <= 0 || eps >= Rational(1))
        throw PreconditionError("step3_params: eps must satisfy 0 < eps < 1");
    Step3Params p;
    // ceil(2/eps) = ceil(2*den / num)
    Integer twice_den = 2 * eps.den();
    mpz_cdiv_q(p.k.get_mpz_t(), twice_den.get_mpz_t(), eps.num().get_mpz_t());
    double kd = p.k.get_d();
    p.c = 1.0 / (5.0 * std::pow(kd, 5.0) * std::log(8.0 * kd));
    return p;
}

}  // namespace addcomb
