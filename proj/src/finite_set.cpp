#include "addcomb/finite_set.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "addcomb/errors.hpp"

namespace addcomb {

FiniteSet FiniteSet::of(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    FiniteSet s;
    s.elems_ = std::move(values);
    return s;
}

FiniteSet FiniteSet::of_integers(std::initializer_list<long> values) {
    std::vector<Rational> v;
    v.reserve(values.size());
    for (long x : values) v.emplace_back(x);
    return of(std::move(v));
}

bool FiniteSet::contains(const Rational& x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::string FiniteSet::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ", ";
        s += elems_[i].str();
    }
    s += "}";
    return s;
}

char set_op_symbol(SetOp op) {
    switch (op) {
        case SetOp::add: return '+';
        case SetOp::sub: return '-';
        case SetOp::mul: return '*';
        case SetOp::div: return '/';
    }
    return '?';
}

namespace {

Rational apply_op(const Rational& a, const Rational& b, SetOp op) {
    switch (op) {
        case SetOp::add: return a + b;
        case SetOp::sub: return a - b;
        case SetOp::mul: return a * b;
        case SetOp::div: return a / b;
    }
    throw PreconditionError("unknown set operation");
}

}  // namespace

FiniteSet combine(const FiniteSet& A, const FiniteSet& B, SetOp op) {
    std::vector<Rational> out;
    out.reserve(A.size() * B.size());
    for (const Rational& a : A)
        for (const Rational& b : B) {
            if (op == SetOp::div && b.is_zero()) continue;
            out.push_back(apply_op(a, b, op));
        }
    return FiniteSet::of(std::move(out));
}

std::size_t combine_cardinality(const FiniteSet& A, const FiniteSet& B, SetOp op) {
    std::unordered_set<Rational, RationalHash> seen;
    seen.reserve(A.size() * B.size());
    for (const Rational& a : A)
        for (const Rational& b : B) {
            if (op == SetOp::div && b.is_zero()) continue;
            seen.insert(apply_op(a, b, op));
        }
    return seen.size();
}

namespace {

std::unordered_map<Rational, long long, RationalHash> pair_counts(const FiniteSet& A,
                                                                  EnergyMode mode) {
    std::unordered_map<Rational, long long, RationalHash> counts;
    counts.reserve(A.size() * A.size());
    for (const Rational& a : A)
        for (const Rational& b : A)
            ++counts[mode == EnergyMode::sum ? a + b : a * b];
    return counts;
}

Integer sum_of_squares(const std::unordered_map<Rational, long long, RationalHash>& counts) {
    Integer e = 0;
    for (const auto& [value, count] : counts) {
        Integer c(static_cast<long>(count));
        e += c * c;
    }
    return e;
}

}  // namespace

RepFunction rep_function(const FiniteSet& A, EnergyMode mode) {
    RepFunction r;
    for (const auto& [value, count] : pair_counts(A, mode)) r.entries[value] = count;
    r.total = static_cast<long long>(A.size()) * static_cast<long long>(A.size());
    return r;
}

RepFunction rep_function_ratio(const FiniteSet& A) {
    if (A.contains(Rational(0)))
        throw PreconditionError("rep_function_ratio: set must not contain 0");
    RepFunction r;
    for (const Rational& a : A)
        for (const Rational& b : A) ++r.entries[a / b];
    r.total = static_cast<long long>(A.size()) * static_cast<long long>(A.size());
    return r;
}

Integer mult_energy(const FiniteSet& A) { return sum_of_squares(pair_counts(A, EnergyMode::product)); }

Integer add_energy(const FiniteSet& A) { return sum_of_squares(pair_counts(A, EnergyMode::sum)); }

Integer energy_bruteforce(const FiniteSet& A, EnergyMode mode) {
    if (A.size() > 64)
        throw CapacityError("energy_bruteforce: |A| > 64");
    const std::size_t n = A.size();
    std::vector<Rational> ab(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            ab[i * n + j] = mode == EnergyMode::sum ? A[i] + A[j] : A[i] * A[j];
    Integer count = 0;
    for (std::size_t p = 0; p < n * n; ++p)
        for (std::size_t q = 0; q < n * n; ++q)
            if (ab[p] == ab[q]) ++count;
    return count;
}

bool is_sidon(const FiniteSet& A) {
    Integer n(static_cast<unsigned long>(A.size()));
    return add_energy(A) == 2 * n * n - n;
}

FiniteSet parse_set_text(std::string_view text, std::size_t* dropped_duplicates) {
    std::vector<Rational> values;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (line[0] == '#') continue;
        try {
            values.push_back(Rational::parse(line));
        } catch (const SyntaxError& err) {
            throw SyntaxError(err.position(), err.expected() + " (line " +
                                                  std::to_string(line_no) + ")");
        }
    }
    std::size_t raw = values.size();
    FiniteSet s = FiniteSet::of(std::move(values));
    if (dropped_duplicates) *dropped_duplicates = raw - s.size();
    return s;
}

FiniteSet read_set_file(const std::string& path, std::size_t* dropped_duplicates) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open set file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_set_text(buf.str(), dropped_duplicates);
}

void write_set(std::ostream& os, const FiniteSet& A) {
    for (const Rational& x : A) os << x.str() << '\n';
}

}  // namespace addcomb
