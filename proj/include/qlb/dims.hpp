#pragma once

#include "qlb/util.hpp"

namespace qlb {

// Dimensions of one query-algorithm instance. The algorithm register A is
// the triple (input cell i, query exponent c, workspace w) flattened as
// ((i-1)*q + c)*dimW + w with i one-based, so dim(A) = n*q*dimW.
struct ProblemDims {
  int n = 0;    // input length, 1 <= n <= 64
  int q = 0;    // alphabet size / phase order, q >= 2
  int dimW = 1; // workspace dimension, >= 1

  int dimA() const { return n * q * dimW; }

  int algIndex(int i, int c, int w) const {
    return ((i - 1) * q + c) * dimW + w;
  }

  struct ICW {
    int i; // 1-based cell index
    int c; // exponent in [0, q)
    int w; // workspace index in [0, dimW)
  };

  ICW decode(int a) const {
    int w = a % dimW;
    int rest = a / dimW;
    return ICW{rest / q + 1, rest % q, w};
  }

  void validate() const {
    if (n < 1 || n > 64) throw ParseError("n must be in [1, 64]");
    if (q < 2 || q > 256) throw ParseError("q must be in [2, 256]");
    if (dimW < 1) throw ParseError("dimW must be >= 1");
  }
};

} // namespace qlb
