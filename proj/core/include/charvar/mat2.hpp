// 2x2 matrices over an arbitrary ring, used for the numeric trace oracle
// and for the generic-matrix curve construction.
#pragma once

#include "charvar/rings.hpp"

namespace charvar {

template <class T>
struct Mat2 {
    T a, b, c, d; // [[a, b], [c, d]]

    T trace() const { return a + d; }
    T det() const { return a * d - b * c; }
    // inverse assuming det = 1
    Mat2 sl2_inverse() const { return Mat2{d, -b, -c, a}; }

    static Mat2 identity_like(const T& sample) {
        return Mat2{one_like(sample), zero_like(sample), zero_like(sample), one_like(sample)};
    }
};

template <class T>
Mat2<T> operator*(const Mat2<T>& x, const Mat2<T>& y) {
    return Mat2<T>{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                   x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

template <class T>
Mat2<T> operator-(const Mat2<T>& x, const Mat2<T>& y) {
    return Mat2<T>{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

} // namespace charvar
