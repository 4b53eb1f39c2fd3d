#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "ministokes/geometry.hpp"
#include "ministokes/quadrature_tables.hpp"

namespace ministokes {

/// Symmetric rule on the reference tetrahedron (0, e1, e2, e3): strictly
/// positive weights summing to 1/6, all nodes strictly interior, exact for
/// polynomials up to `degree`.
struct QuadratureRule {
    int degree = 0;
    std::vector<Vec3> points;
    std::vector<double> weights;

    int num_points() const { return static_cast<int>(points.size()); }
};

inline constexpr int kMaxQuadratureDegree = 10;

namespace detail {

template <std::size_t N>
QuadratureRule rule_from_table(int degree, const double (&table)[N][4]) {
    QuadratureRule rule;
    rule.degree = degree;
    rule.points.reserve(N);
    rule.weights.reserve(N);
    for (const auto& row : table) {
        rule.points.push_back({row[0], row[1], row[2]});
        rule.weights.push_back(row[3]);
    }
    return rule;
}

inline const std::vector<QuadratureRule>& all_rules() {
    static const std::vector<QuadratureRule> rules = [] {
        std::vector<QuadratureRule> r;
        r.push_back(rule_from_table(1, kTetRuleD1));
        r.push_back(rule_from_table(2, kTetRuleD2));
        r.push_back(rule_from_table(3, kTetRuleD3));
        r.push_back(rule_from_table(4, kTetRuleD4));
        r.push_back(rule_from_table(5, kTetRuleD5));
        r.push_back(rule_from_table(6, kTetRuleD6));
        r.push_back(rule_from_table(7, kTetRuleD7));
        r.push_back(rule_from_table(8, kTetRuleD8));
        r.push_back(rule_from_table(9, kTetRuleD9));
        r.push_back(rule_from_table(10, kTetRuleD10));
        return r;
    }();
    return rules;
}

}  // namespace detail

/// Rule of degree >= min(max(d,1),10); requests above 10 get the degree-10
/// rule.
inline const QuadratureRule& rule_for_degree(int d) {
    const int deg = std::min(std::max(d, 1), kMaxQuadratureDegree);
    return detail::all_rules()[static_cast<std::size_t>(deg - 1)];
}

/// Exact reference-tet moment of x^a y^b z^c: a! b! c! / (a+b+c+3)!.
inline double exact_tet_monomial_integral(int a, int b, int c) {
    static constexpr double kFact[14] = {1.,     1.,      2.,       6.,        24.,
                                         120.,   720.,    5040.,    40320.,    362880.,
                                         3628800., 39916800., 479001600., 6227020800.};
    return kFact[a] * kFact[b] * kFact[c] / kFact[a + b + c + 3];
}

struct MonomialFailure {
    int a, b, c;
    double relative_error;
};

/// Empty iff the rule integrates every monomial of total degree <= its
/// declared degree within 1e-12 relative error of the closed form.
inline std::vector<MonomialFailure> validate_rule(const QuadratureRule& rule) {
    std::vector<MonomialFailure> failures;
    for (int a = 0; a <= rule.degree; ++a)
        for (int b = 0; a + b <= rule.degree; ++b)
            for (int c = 0; a + b + c <= rule.degree; ++c) {
                double q = 0.0;
                for (int i = 0; i < rule.num_points(); ++i) {
                    const Vec3 p = rule.points[i];
                    q += rule.weights[i] * std::pow(p.x, a) * std::pow(p.y, b) *
                         std::pow(p.z, c);
                }
                const double exact = exact_tet_monomial_integral(a, b, c);
                const double rel = std::abs(q - exact) / exact;
                if (rel > 1e-12) failures.push_back({a, b, c, rel});
            }
    return failures;
}

/// Pullback of the reference rule through the affine map onto a physical
/// tet: physical weight = w * 6*V_tet. Exact for polynomials of degree <=
/// rule.degree.
template <typename F>
double integrate_on_tet(F&& f, const TetPoints& tet, const QuadratureRule& rule) {
    const double vol = signed_tet_volume(tet);
    const double max_edge = tet_max_edge(tet);
    if (std::abs(vol) < 1e-14 * max_edge * max_edge * max_edge)
        throw std::domain_error("degenerate tetrahedron");
    const double scale = 6.0 * std::abs(vol);
    double sum = 0.0;
    for (int i = 0; i < rule.num_points(); ++i) {
        const Vec3 p = rule.points[i];
        const Vec3 x = tet[0] + p.x * (tet[1] - tet[0]) + p.y * (tet[2] - tet[0]) +
                       p.z * (tet[3] - tet[0]);
        sum += rule.weights[i] * f(x);
    }
    return scale * sum;
}

/// Audit dump.
inline void write_rule_json(const QuadratureRule& rule, std::ostream& os) {
    os << "{\n  \"degree\": " << rule.degree << ",\n  \"points\": [";
    char buf[128];
    for (int i = 0; i < rule.num_points(); ++i) {
        const Vec3 p = rule.points[i];
        std::snprintf(buf, sizeof(buf), "%s[%.16e, %.16e, %.16e]", i ? ", " : "", p.x, p.y,
                      p.z);
        os << buf;
    }
    os << "],\n  \"weights\": [";
    for (int i = 0; i < rule.num_points(); ++i) {
        std::snprintf(buf, sizeof(buf), "%s%.16e", i ? ", " : "", rule.weights[i]);
        os << buf;
    }
    os << "]\n}\n";
}

}  // namespace ministokes
