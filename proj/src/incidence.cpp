#include "addcomb/incidence.hpp"

#include <algorithm>
#include <cmath>

#include "addcomb/errors.hpp"

namespace addcomb {

std::string Line::str() const {
    if (vertical_) return "x = " + b_.str();
    return "y = " + a_.str() + "*x + " + b_.str();
}

long long count_incidences(const std::vector<Point>& points, const std::vector<Line>& lines) {
    long long total = 0;
    for (const Line& l : lines)
        for (const Point& p : points)
            if (l.contains(p)) ++total;
    return total;
}

double st_bound(long long p, long long l, double C) {
    double pd = static_cast<double>(p), ld = static_cast<double>(l);
    double p23 = std::cbrt(pd) * std::cbrt(pd);
    double l23 = std::cbrt(ld) * std::cbrt(ld);
    return C * (p23 * l23 + pd + ld);
}

std::vector<Line> elekes_lines(const FiniteSet& A, const FiniteSet& B) {
    std::vector<Line> lines;
    lines.reserve(A.size() * B.size());
    for (const Rational& a : A) {
        if (a.is_zero()) continue;
        for (const Rational& b : B) lines.push_back(Line::slope_intercept(a, a * b));
    }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    return lines;
}

ElekesReport check_elekes_construction(const FiniteSet& A, const FiniteSet& B,
                                       const FiniteSet& C) {
    const FiniteSet zero_singleton = FiniteSet::of_integers({0});
    if (A == zero_singleton)
        throw PreconditionError("elekes: A must not be {0}");
    FiniteSet BC = sumset(B, C);
    if (BC == zero_singleton)
        throw PreconditionError("elekes: B+C must not be {0}");

    static const auto expr = parse_expr("A*(B+C)");
    Env env{{"A", A}, {"B", B}, {"C", C}};
    FiniteSet ABC = eval_expr(*expr, env);

    std::vector<Point> P;
    P.reserve(C.size() * ABC.size());
    for (const Rational& c : C)
        for (const Rational& s : ABC) P.push_back(Point{c, s});
    std::vector<Line> L = elekes_lines(A, B);

    long long a_star = 0;
    for (const Rational& a : A)
        if (!a.is_zero()) ++a_star;

    ElekesReport rep;
    rep.points = static_cast<long long>(P.size());
    rep.lines = static_cast<long long>(L.size());
    rep.card_a_bc = static_cast<long long>(ABC.size());
    rep.incidence_lower_bound = a_star * static_cast<long long>(B.size()) *
                                static_cast<long long>(C.size());

    rep.min_line_incidences = L.empty() ? 0 : rep.points;
    for (const Line& l : L) {
        long long on_line = 0;
        for (const Point& p : P)
            if (l.contains(p)) ++on_line;
        rep.incidences += on_line;
        rep.min_line_incidences = std::min(rep.min_line_incidences, on_line);
    }

    bool lines_cover = L.empty() || rep.min_line_incidences >= static_cast<long long>(C.size());
    rep.holds = lines_cover && rep.incidences >= rep.incidence_lower_bound;
    if (!rep.holds)
        rep.witness = "A=" + A.str() + " B=" + B.str() + " C=" + C.str();

    double na = static_cast<double>(A.size());
    double nb = static_cast<double>(B.size());
    double nc = static_cast<double>(C.size());
    double denom = std::min({std::sqrt(na * nb * nc), na * nb, na * nc});
    rep.ratio = denom > 0 ? static_cast<double>(rep.card_a_bc) / denom : 0.0;
    rep.st_bound_report = st_bound(rep.points, rep.lines, 2.5);
    return rep;
}

}  // namespace addcomb
