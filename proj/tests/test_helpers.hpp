#ifndef CVXLAT_TEST_HELPERS_HPP
#define CVXLAT_TEST_HELPERS_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "cvxlat/body.hpp"
#include "cvxlat/rational.hpp"

namespace cvxlat::testing {

/// Point from integer coordinates.
inline Point pt(std::initializer_list<long long> xs) {
    Point p(xs.size());
    Eigen::Index i = 0;
    for (long long x : xs) p(i++) = Rat(Int(x));
    return p;
}

/// Point from rational strings like "1/2".
inline Point ptq(std::initializer_list<const char*> xs) {
    Point p(xs.size());
    Eigen::Index i = 0;
    for (const char* x : xs) p(i++) = parse_rational(x);
    return p;
}

inline Rat q(const char* s) { return parse_rational(s); }

inline ConvexBody box2(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) {
    Point a(2), b(2), c(2), d(2);
    a << x0, y0;
    b << x1, y0;
    c << x0, y1;
    d << x1, y1;
    return ConvexBody::hull(2, {a, b, c, d});
}

}  // namespace cvxlat::testing

#endif
