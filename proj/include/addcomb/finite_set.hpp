#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "addcomb/rational.hpp"

namespace addcomb {

// Finite set of rationals, kept strictly sorted and duplicate-free.
class FiniteSet {
public:
    FiniteSet() = default;

    // Sorts and deduplicates.
    static FiniteSet of(std::vector<Rational> values);
    static FiniteSet of_integers(std::initializer_list<long> values);

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const Rational& operator[](std::size_t i) const { return elems_[i]; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    const std::vector<Rational>& elements() const { return elems_; }

    bool contains(const Rational& x) const;

    friend bool operator==(const FiniteSet& a, const FiniteSet& b) {
        return a.elems_ == b.elems_;
    }

    // "{1, 3/2, 2}" — diagnostics and witnesses.
    std::string str() const;

private:
    std::vector<Rational> elems_;
};

enum class SetOp { add, sub, mul, div };

char set_op_symbol(SetOp op);

// {a op b : a in A, b in B}. For div, pairs with zero divisor are skipped
// (never an error); ratioset(A, {0}) is empty.
FiniteSet combine(const FiniteSet& A, const FiniteSet& B, SetOp op);

// Cardinality of combine(A, B, op) without materializing the sorted set.
std::size_t combine_cardinality(const FiniteSet& A, const FiniteSet& B, SetOp op);

inline FiniteSet sumset(const FiniteSet& A, const FiniteSet& B) { return combine(A, B, SetOp::add); }
inline FiniteSet diffset(const FiniteSet& A, const FiniteSet& B) { return combine(A, B, SetOp::sub); }
inline FiniteSet productset(const FiniteSet& A, const FiniteSet& B) { return combine(A, B, SetOp::mul); }
inline FiniteSet ratioset(const FiniteSet& A, const FiniteSet& B) { return combine(A, B, SetOp::div); }

enum class EnergyMode { sum, product };

// value -> number of ordered pairs (a, b) in A x A producing it.
struct RepFunction {
    std::map<Rational, long long> entries;
    long long total = 0;  // |A|^2
};

RepFunction rep_function(const FiniteSet& A, EnergyMode mode);

// value -> count of ordered pairs (a, b) with a/b = value. Requires 0 not in A.
RepFunction rep_function_ratio(const FiniteSet& A);

// E*(A): ordered quadruples (a,b,c,d) in A^4 with ab = cd, via sum of
// squared representation counts. Zeros need no special casing: every pair
// with product 0 lands in r(0).
Integer mult_energy(const FiniteSet& A);

// E+(A): quadruples with a+b = c+d.
Integer add_energy(const FiniteSet& A);

// Independent O(n^4) oracle; literal quadruple enumeration.
// Guarded by |A| <= 64 (CapacityError).
Integer energy_bruteforce(const FiniteSet& A, EnergyMode mode);

// E+(A) = 2|A|^2 - |A|, i.e. only trivial solutions to a+b = c+d.
bool is_sidon(const FiniteSet& A);

// Set file format: one rational per line, '#' starts a comment line,
// blank lines ignored. Duplicates are dropped; *dropped_duplicates (when
// non-null) receives how many.
FiniteSet parse_set_text(std::string_view text, std::size_t* dropped_duplicates = nullptr);
FiniteSet read_set_file(const std::string& path, std::size_t* dropped_duplicates = nullptr);
void write_set(std::ostream& os, const FiniteSet& A);

}  // namespace addcomb
