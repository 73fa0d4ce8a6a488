#pragma once

// Named example tensors used by the regression suite, the tests and the fixtures in data/.

#include "tcpkit/tensor.hpp"

namespace tcpkit::corpus {

/// T_{3,3}: a111=2, a222=-1, a333=2, a223=-2, a232=1, a233=-1.
inline SparseTensor subtensor_source() {
  SparseTensor t(3, 3);
  t.set1({1, 1, 1}, 2);
  t.set1({2, 2, 2}, -1);
  t.set1({3, 3, 3}, 2);
  t.set1({2, 2, 3}, -2);
  t.set1({2, 3, 2}, 1);
  t.set1({2, 3, 3}, -1);
  return t;
}

/// Row diagonal T_{4,2}: a1111=3, a2222=1, a1222=-2, a2111=1.
inline SparseTensor row_diagonal() {
  SparseTensor t(4, 2);
  t.set1({1, 1, 1, 1}, 3);
  t.set1({2, 2, 2, 2}, 1);
  t.set1({1, 2, 2, 2}, -2);
  t.set1({2, 1, 1, 1}, 1);
  return t;
}

/// M(A) = [[1,-1],[0,2]]; a1112 and a2112 do not enter the majorization matrix.
inline SparseTensor majorization_source() {
  SparseTensor t(4, 2);
  t.set1({1, 1, 1, 1}, 1);
  t.set1({1, 2, 2, 2}, -1);
  t.set1({2, 1, 1, 2}, 3);
  t.set1({1, 1, 1, 2}, -2);
  t.set1({2, 2, 2, 2}, 2);
  return t;
}

/// A x^3 = ((2x1+x2) x1^2, 2(2x1+x2) x2^2). Column adequate with B != O.
inline SparseTensor column_adequate_mixed() {
  SparseTensor t(4, 2);
  t.set1({1, 1, 1, 1}, 2);
  t.set1({1, 1, 1, 2}, 1);
  t.set1({2, 1, 2, 2}, 4);
  t.set1({2, 2, 2, 2}, 2);
  return t;
}

/// A x^4 = x1^4, A x^3 = (x1^2 (x1 - x2), x1^3).
inline SparseTensor psd_adequate() {
  SparseTensor t(4, 2);
  t.set1({1, 1, 1, 1}, 1);
  t.set1({1, 1, 1, 2}, -1);
  t.set1({2, 1, 1, 1}, 1);
  return t;
}

/// A x^3 = (-2 x1^2 x2, x1^3 + x2^3); x = (1,0) breaks adequacy.
inline SparseTensor column_sufficient() {
  SparseTensor t(4, 2);
  t.set1({1, 1, 1, 2}, -2);
  t.set1({2, 1, 1, 1}, 1);
  t.set1({2, 2, 2, 2}, 1);
  return t;
}

/// A x^3 = (x1^3 - x2^3, x1 x2^2); x = (0,k) breaks adequacy.
inline SparseTensor p0_not_adequate() {
  SparseTensor t(4, 2);
  t.set1({1, 1, 1, 1}, 1);
  t.set1({1, 2, 2, 2}, -1);
  t.set1({2, 2, 2, 1}, 1);
  return t;
}

/// Odd order, a111 = 1 only: weak adequate but x = (-1,0) breaks ordinary adequacy.
inline SparseTensor weak_adequate() {
  SparseTensor t(3, 2);
  t.set1({1, 1, 1}, 1);
  return t;
}

/// a111 = a222 = 1.
inline SparseTensor diagonal_order3() {
  SparseTensor t(3, 2);
  t.set1({1, 1, 1}, 1);
  t.set1({2, 2, 2}, 1);
  return t;
}

/// coef = [[1,0,-2,1],[0,1,0,0]]; TCP with q = (0,-1) has solutions (0,1) and (1,1).
inline SparseTensor mixed_order4() {
  SparseTensor t(4, 2);
  t.set1({1, 1, 1, 1}, 1);
  t.set1({1, 1, 1, 2}, -2);
  t.set1({1, 1, 2, 2}, 1);
  t.set1({2, 2, 2, 2}, 1);
  return t;
}

/// Mixed entries cancel in x1^2 x2, so B = O and M(A) = [[1,-1],[-1,1]].
inline SparseTensor row_diagonal_block() {
  SparseTensor t(4, 2);
  t.set1({1, 1, 1, 1}, 1);
  t.set1({2, 2, 2, 2}, 1);
  t.set1({1, 2, 2, 2}, -1);
  t.set1({2, 1, 1, 1}, -1);
  t.set1({1, 1, 2, 1}, 3);
  t.set1({1, 1, 1, 2}, -2);
  t.set1({1, 2, 1, 1}, -1);
  return t;
}

}  // namespace tcpkit::corpus
