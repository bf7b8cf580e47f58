#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "../src/smatrix.h"

using namespace qrll;

namespace {

RMat elem2(int r, int c) {
  RMat m(2);
  m.at(r, c) = RatFunc(Int(1));
  return m;
}

int op_parity2(int r, int c) { return (parity(r) + parity(c)) & 1; }

}  // namespace

TEST_CASE("basis parity") {
  CHECK(parity(0) == 0);
  CHECK(parity(1) == 1);
  CHECK(parity(2) == 1);
  CHECK(parity(3) == 0);  // (odd,odd) composite is even
  CHECK(parity(5) == 0);
  CHECK(parity(7) == 1);
}

TEST_CASE("graded tensor sign table") {
  // (E21 (x) E21) picks up -1: second-slot row index is odd, entry is odd
  RMat t = graded_tensor(elem2(1, 0), elem2(1, 0));
  CHECK(t.at(3, 0) == RatFunc(Int(-1)));
  // even (x) anything is unsigned
  RMat u = graded_tensor(elem2(0, 0), elem2(1, 0));
  CHECK(u.at(1, 0) == RatFunc(Int(1)));
  // sign sits only where the second-slot row is odd and the first entry odd
  RMat v = graded_tensor(elem2(0, 1), elem2(0, 1));
  CHECK(v.at(0, 3) == RatFunc(Int(1)));  // second-slot row 0 is even
  RMat w = graded_tensor(elem2(0, 1), elem2(1, 1));
  CHECK(w.at(1, 3) == RatFunc(Int(-1)));
}

TEST_CASE("graded tensor coherence law") {
  // (A (x) B)(C (x) D) = (-1)^{|B||C|} (AC (x) BD) on homogeneous operators
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          RMat A = elem2(a / 2, a % 2), B = elem2(b / 2, b % 2);
          RMat C = elem2(c / 2, c % 2), D = elem2(d / 2, d % 2);
          RMat lhs = graded_tensor(A, B) * graded_tensor(C, D);
          RMat rhs = graded_tensor(A * C, B * D);
          if (op_parity2(b / 2, b % 2) && op_parity2(c / 2, c % 2))
            rhs = rhs.scaled(RatFunc(Int(-1)));
          CHECK(lhs == rhs);
        }
}

TEST_CASE("graded tensor is associative") {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        RMat A = elem2(a / 2, a % 2), B = elem2(b / 2, b % 2),
             C = elem2(c / 2, c % 2);
        CHECK(graded_tensor(graded_tensor(A, B), C) ==
              graded_tensor(A, graded_tensor(B, C)));
      }
}

TEST_CASE("graded permutation operator") {
  RMat P = p_super();
  CHECK(P.at(0, 0) == RatFunc(Int(1)));
  CHECK(P.at(1, 2) == RatFunc(Int(1)));
  CHECK(P.at(2, 1) == RatFunc(Int(1)));
  CHECK(P.at(3, 3) == RatFunc(Int(-1)));
  CHECK(P * P == RMat::ident(4));
  // P conjugation swaps graded tensor legs with the Koszul sign
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      RMat A = elem2(a / 2, a % 2), B = elem2(b / 2, b % 2);
      RMat lhs = P * graded_tensor(A, B) * P;
      RMat rhs = graded_tensor(B, A);
      if (op_parity2(a / 2, a % 2) && op_parity2(b / 2, b % 2))
        rhs = rhs.scaled(RatFunc(Int(-1)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("slot embeddings: identity and involution") {
  CHECK(embed12(RMat::ident(4)) == RMat::ident(8));
  CHECK(embed23(RMat::ident(4)) == RMat::ident(8));
  CHECK(embed13_plain(RMat::ident(4)) == RMat::ident(8));
  CHECK(embed13_koszul(RMat::ident(4)) == RMat::ident(8));
  RMat P = p_super();
  CHECK(embed12(P) * embed12(P) == RMat::ident(8));
  CHECK(embed23(P) * embed23(P) == RMat::ident(8));
  CHECK(embed13_koszul(P) * embed13_koszul(P) == RMat::ident(8));
}

TEST_CASE("koszul slot-13 embedding matches composed graded tensors") {
  RMat I2 = RMat::ident(2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      RMat X = elem2(a / 2, a % 2), Z = elem2(b / 2, b % 2);
      RMat direct = embed13_koszul(graded_tensor(X, Z));
      RMat composed = graded_tensor(X, graded_tensor(I2, Z));
      CHECK(direct == composed);
    }
}

TEST_CASE("disjoint slots supercommute with the oracle sign") {
  RMat I2 = RMat::ident(2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      RMat X = elem2(a / 2, a % 2), Y = elem2(b / 2, b % 2);
      // graded embeddings into slots 1 and 3
      RMat X1 = graded_tensor(X, graded_tensor(I2, I2));
      RMat Y3 = graded_tensor(I2, graded_tensor(I2, Y));
      RMat lhs = X1 * Y3;
      RMat rhs = Y3 * X1;
      if (op_parity2(a / 2, a % 2) && op_parity2(b / 2, b % 2))
        rhs = rhs.scaled(RatFunc(Int(-1)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("supertrace") {
  RMat m(2);
  m.at(0, 0) = RatFunc(Int(3));
  m.at(1, 1) = RatFunc(Int(5));
  CHECK(supertrace(m) == RatFunc(Int(-2)));
  // str(A (x) B) = str(A) str(B) under the graded tensor
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      RMat A = elem2(a / 2, a % 2), B = elem2(b / 2, b % 2);
      CHECK(supertrace(graded_tensor(A, B)) ==
            supertrace(A) * supertrace(B));
    }
  // partial supertrace over the first slot
  RMat t = graded_tensor(m, elem2(0, 1));
  RMat pt = supertrace_first(t);
  CHECK(pt.at(0, 1) == RatFunc(Int(-2)));
  CHECK(pt.at(0, 0).is_zero());
  CHECK(super_sign4().at(3, 3) == RatFunc(Int(-1)));
  CHECK(eta2().at(1, 1) == RatFunc(Int(-1)));
}
