#include "singlat/linalg.hpp"

namespace singlat {

namespace {

// Row operations are mirrored into `left` and, inversely, into
// `left_inverse` so that left * left_inverse stays the identity.
struct SmithWork {
  IntMatrix d;
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix right;

  void swap_rows(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    d.row(a).swap(d.row(b));
    left.row(a).swap(left.row(b));
    left_inverse.col(a).swap(left_inverse.col(b));
  }

  void swap_cols(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    d.col(a).swap(d.col(b));
    right.col(a).swap(right.col(b));
  }

  // row(target) += q * row(source)
  void add_row(Eigen::Index target, Eigen::Index source, const Integer& q) {
    d.row(target) += q * d.row(source);
    left.row(target) += q * left.row(source);
    left_inverse.col(source) -= q * left_inverse.col(target);
  }

  // col(target) += q * col(source)
  void add_col(Eigen::Index target, Eigen::Index source, const Integer& q) {
    d.col(target) += q * d.col(source);
    right.col(target) += q * right.col(source);
  }

  void negate_row(Eigen::Index r) {
    d.row(r) = -d.row(r);
    left.row(r) = -left.row(r);
    left_inverse.col(r) = -left_inverse.col(r);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  SmithWork w{a, IntMatrix::Identity(rows, rows), IntMatrix::Identity(rows, rows),
              IntMatrix::Identity(cols, cols)};

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      Integer best = 0;
      for (Eigen::Index i = t; i < rows; ++i) {
        for (Eigen::Index j = t; j < cols; ++j) {
          if (w.d(i, j) == 0) continue;
          const Integer v = abs(w.d(i, j));
          if (pi < 0 || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) break;  // remaining block is zero
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool cleared = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        const Integer q = w.d(i, t) / w.d(t, t);
        if (q != 0) w.add_row(i, t, -q);
        if (w.d(i, t) != 0) cleared = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        const Integer q = w.d(t, j) / w.d(t, t);
        if (q != 0) w.add_col(j, t, -q);
        if (w.d(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      Eigen::Index offender = -1;
      for (Eigen::Index i = t + 1; i < rows && offender < 0; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (w.d(i, j) % w.d(t, t) != 0) {
            offender = i;
            break;
          }
        }
      }
      if (offender < 0) break;
      w.add_row(t, offender, Integer(1));
    }
    if (w.d(t, t) < 0) w.negate_row(t);
  }

  IntVector diagonal(steps);
  for (Eigen::Index t = 0; t < steps; ++t) diagonal(t) = w.d(t, t);
  return SmithForm{std::move(w.left), std::move(w.left_inverse), std::move(w.right),
                   std::move(diagonal)};
}

}  // namespace singlat
