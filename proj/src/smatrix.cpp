#include "smatrix.h"

namespace qrll {

RMat p_super() {
  // P(x (x) y) = (-1)^{|x||y|} y (x) x
  RMat m(4);
  for (int j = 0; j < 2; ++j)
    for (int l = 0; l < 2; ++l) {
      int sgn = (parity(j) && parity(l)) ? -1 : 1;
      m.at(l * 2 + j, j * 2 + l) = RatFunc(Int(sgn));
    }
  return m;
}

RMat super_sign4() {
  RMat m(4);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      int sgn = (parity(i) && parity(k)) ? -1 : 1;
      m.at(i * 2 + k, i * 2 + k) = RatFunc(Int(sgn));
    }
  return m;
}

RMat eta2() {
  RMat m(2);
  m.at(0, 0) = RatFunc(Int(1));
  m.at(1, 1) = RatFunc(Int(-1));
  return m;
}

RMat elementary4(int r, int c) {
  RMat m(4);
  m.at(r, c) = RatFunc(Int(1));
  return m;
}

}  // namespace qrll
