#pragma once

#include <compare>
#include <string>
#include <vector>

#include "addcomb/expr.hpp"
#include "addcomb/finite_set.hpp"

namespace addcomb {

struct Point {
    Rational x, y;
    friend bool operator==(const Point&, const Point&) = default;
    auto operator<=>(const Point&) const = default;
};

// Canonical line: either y = slope*x + intercept or the vertical x = x0.
class Line {
public:
    static Line slope_intercept(Rational slope, Rational intercept) {
        return Line(false, std::move(slope), std::move(intercept));
    }
    static Line vertical_at(Rational x0) { return Line(true, {}, std::move(x0)); }

    bool is_vertical() const { return vertical_; }
    const Rational& slope() const { return a_; }       // non-vertical only
    const Rational& intercept() const { return b_; }   // non-vertical: y-intercept; vertical: x0
    bool contains(const Point& p) const {
        if (vertical_) return p.x == b_;
        return p.y == a_ * p.x + b_;
    }
    std::string str() const;

    friend bool operator==(const Line&, const Line&) = default;
    auto operator<=>(const Line&) const = default;

private:
    Line(bool vertical, Rational a, Rational b)
        : vertical_(vertical), a_(std::move(a)), b_(std::move(b)) {}
    bool vertical_;
    Rational a_, b_;
};

// |{(p, l) : p on l}| by direct substitution over all pairs.
long long count_incidences(const std::vector<Point>& points, const std::vector<Line>& lines);

// C * (p^(2/3) l^(2/3) + p + l); a floating report value, never asserted exact.
double st_bound(long long p, long long l, double C);

// {y = a(x+b) : a in A\{0}, b in B}, deduplicated.
std::vector<Line> elekes_lines(const FiniteSet& A, const FiniteSet& B);

struct ElekesReport {
    bool holds = false;            // every line >= |C| incidences and total >= |A*||B||C|
    long long points = 0, lines = 0;
    long long incidences = 0;
    long long min_line_incidences = 0;
    long long incidence_lower_bound = 0;  // |A*||B||C|
    long long card_a_bc = 0;              // |A(B+C)|
    double ratio = 0.0;  // |A(B+C)| / min{ sqrt(|A||B||C|), |A||B|, |A||C| }
    double st_bound_report = 0.0;  // st_bound(|P|, |L|, 2.5)
    std::string witness;           // nonempty iff !holds
};

// Builds P = C x (A(B+C)) and L = elekes_lines(A, B), checks that every
// line meets P in at least |C| points (hence >= |A*||B||C| incidences),
// and reports the lower-bound ratio. Requires A != {0} and B+C != {0}.
ElekesReport check_elekes_construction(const FiniteSet& A, const FiniteSet& B,
                                       const FiniteSet& C);

}  // namespace addcomb
