#include "tl/matrix.hpp"

namespace tl {

namespace {

// 0, 1, -1, 2, -2, ...
BigInt eval_point(std::size_t j) {
  if (j == 0) return BigInt(0);
  BigInt v((j + 1) / 2);
  return (j % 2 == 1) ? v : BigInt(-v);
}

BigInt det_at(const Matrix<IntPoly>& m, const BigInt& a) {
  Matrix<BigInt> e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).eval(a);
  return bareiss_det(std::move(e));
}

}  // namespace

IntPoly det_by_evaluation(const Matrix<IntPoly>& m, std::size_t degree_bound) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_by_evaluation: non-square matrix");
  const std::size_t npts = degree_bound + 1;
  std::vector<BigInt> xs(npts), ys(npts);
  for (std::size_t j = 0; j < npts; ++j) {
    xs[j] = eval_point(j);
    ys[j] = det_at(m, xs[j]);
  }

  // Newton interpolation over Q; the result must come out integral.
  std::vector<mpq_class> coef(npts);
  for (std::size_t j = 0; j < npts; ++j) coef[j] = mpq_class(ys[j]);
  for (std::size_t level = 1; level < npts; ++level)
    for (std::size_t j = npts - 1; j >= level; --j)
      coef[j] = (coef[j] - coef[j - 1]) / mpq_class(xs[j] - xs[j - level]);
  // expand the Newton form
  std::vector<mpq_class> acc(1, coef[npts - 1]);
  for (std::size_t j = npts - 1; j-- > 0;) {
    acc.push_back(0);
    for (std::size_t d = acc.size() - 1; d > 0; --d) acc[d] = acc[d - 1] - acc[d] * mpq_class(xs[j]);
    acc[0] = coef[j] - acc[0] * mpq_class(xs[j]);
  }
  std::vector<BigInt> ic(acc.size());
  for (std::size_t d = 0; d < acc.size(); ++d) {
    acc[d].canonicalize();
    if (acc[d].get_den() != 1)
      throw std::domain_error("det_by_evaluation: non-integral interpolation");
    ic[d] = acc[d].get_num();
  }
  IntPoly det = IntPoly::from_coeffs(std::move(ic));

  const BigInt extra = eval_point(npts);
  if (det.eval(extra) != det_at(m, extra))
    throw std::domain_error("det_by_evaluation: degree bound exceeded");
  return det;
}

}  // namespace tl
