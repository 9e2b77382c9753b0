#include "diii/flag.hpp"

#include "diii/exact_linalg.hpp"

namespace diii {

std::string rational_text(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

std::string plain(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

std::string QSqrt2::to_string() const {
  if (b_ == 0) return plain(a_);
  std::string irr;
  const auto p = numerator(b_), q = denominator(b_);
  if (p == -1) {
    irr = "-sqrt2";
  } else if (p == 1) {
    irr = "sqrt2";
  } else {
    irr = p.str() + "sqrt2";
  }
  if (q != 1) irr += "/" + q.str();
  if (a_ == 0) return irr;
  return plain(a_) + (b_ > 0 ? "+" : "") + irr;
}

FlagMatrix representative_matrix(const DiiiClan& c) {
  const int m = c.clan().size();
  const Involution sigma = default_permutation(c);
  QMatrix g = QMatrix::Zero(m, m);
  auto e = [&](int col, int row, const QSqrt2& v) { g(row - 1, col - 1) = v; };

  for (int i = 1; i <= m; ++i) {
    if (c.clan().symbol(i).is_sign()) e(i, sigma(i), 1);
  }
  const QSqrt2 h = QSqrt2::inv_sqrt2();
  for (const auto& fam : classify_pairs(c).families) {
    const int i = fam[0], j = fam[1], jb = fam[2], ib = fam[3];
    e(i, sigma(i), h);
    e(i, sigma(j), h);
    e(j, sigma(i), h);
    e(j, sigma(j), -h);
    e(ib, sigma(ib), h);
    e(ib, sigma(jb), h);
    e(jb, sigma(ib), h);
    e(jb, sigma(jb), -h);
  }
  return {c, std::move(g)};
}

QMatrix antidiagonal_form(int size) {
  QMatrix j = QMatrix::Zero(size, size);
  for (int k = 0; k < size; ++k) j(k, size - 1 - k) = 1;
  return j;
}

bool preserves_form(const QMatrix& g) {
  if (g.rows() != g.cols()) return false;
  // J g is g with its rows reversed.
  QMatrix lhs = g.transpose() * g.colwise().reverse();
  return lhs == antidiagonal_form(static_cast<int>(g.rows()));
}

bool verify_special_orthogonal(const QMatrix& g) {
  return preserves_form(g) && exact_determinant(g) == QSqrt2(1);
}

int intersection_dimension(const QMatrix& g) {
  const Eigen::Index m = g.rows();
  const Eigen::Index n = m / 2;
  QMatrix stacked(m, 2 * n);
  stacked.leftCols(n) = g.leftCols(n);
  stacked.rightCols(n) = QMatrix::Identity(m, n);
  return static_cast<int>(2 * n - exact_rank(stacked));
}

}  // namespace diii
