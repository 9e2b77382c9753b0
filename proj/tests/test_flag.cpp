#include <doctest.h>

#include <set>

#include "diii/enumeration.hpp"
#include "diii/exact_linalg.hpp"
#include "diii/flag.hpp"
#include "oracles.hpp"

using namespace diii;

namespace {

const QSqrt2 h = QSqrt2::inv_sqrt2();

}  // namespace

TEST_CASE("Q(sqrt2) arithmetic") {
  QSqrt2 x(Rational(1, 3), Rational(-2, 5));
  QSqrt2 y(Rational(7), Rational(1, 2));
  CHECK(x * x.inverse() == QSqrt2(1));
  CHECK((x + y) - y == x);
  CHECK(x * (y + 1) == x * y + x);
  CHECK(x * y == y * x);
  CHECK(QSqrt2::sqrt2() * QSqrt2::sqrt2() == QSqrt2(2));
  CHECK(h * h == QSqrt2(Rational(1, 2), 0));
  CHECK(h * QSqrt2::sqrt2() == QSqrt2(1));
  CHECK(x / y * y == x);
  CHECK_THROWS_AS(QSqrt2(0).inverse(), std::domain_error);
  CHECK(h.to_string() == "sqrt2/2");
  CHECK((-h).to_string() == "-sqrt2/2");
  CHECK(QSqrt2(Rational(3, 2), 0).to_string() == "3/2");
  CHECK(QSqrt2(0).to_string() == "0");
  CHECK(QSqrt2(-1).to_string() == "-1");
  CHECK(rational_text(Rational(4)) == "4/1");
  CHECK(rational_text(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("the n = 3 example matrix, entry for entry") {
  const QSqrt2 o = 0, one = 1;
  QMatrix expected(6, 6);
  expected << one, o, o, o, o, o,
              o, o, h, o, h, o,
              o, h, o, -h, o, o,
              o, o, -h, o, h, o,
              o, h, o, h, o, o,
              o, o, o, o, o, one;
  auto f = representative_matrix(DiiiClan::parse("+1212-"));
  CHECK(f.g == expected);
  CHECK(verify_special_orthogonal(f.g));
  CHECK(intersection_dimension(f.g) == 1);
}

TEST_CASE("matrices of matchless clans are signed permutations") {
  auto id = representative_matrix(DiiiClan::parse("+-")).g;
  CHECK(id == QMatrix::Identity(2, 2));
  auto p = representative_matrix(DiiiClan::parse("++--")).g;
  for (int r = 0; r < 4; ++r) {
    int nonzero = 0;
    for (int c = 0; c < 4; ++c) {
      if (!p(r, c).is_zero()) {
        ++nonzero;
        CHECK((p(r, c) == QSqrt2(1) || p(r, c) == QSqrt2(-1)));
      }
    }
    CHECK(nonzero == 1);
  }
}

TEST_CASE("every representative is special orthogonal with the right parity, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto J = antidiagonal_form(2 * n);
    std::set<std::vector<std::string>> distinct;
    for (const auto& c : enumerate_diii(n)) {
      auto g = representative_matrix(c).g;
      CHECK(QMatrix(g.transpose() * J * g) == J);
      CHECK(exact_determinant(g) == QSqrt2(1));
      CHECK(intersection_parity(g) == n % 2);
      std::vector<std::string> flat;
      for (int r = 0; r < g.rows(); ++r) {
        for (int k = 0; k < g.cols(); ++k) {
          const auto& e = g(r, k);
          CHECK((e.is_zero() || e == QSqrt2(1) || e == QSqrt2(-1) || e == h || e == -h));
          flat.push_back(e.to_string());
        }
      }
      // each column has unit Euclidean length
      for (int k = 0; k < g.cols(); ++k) CHECK(QSqrt2(g.col(k).squaredNorm()) == QSqrt2(1));
      distinct.insert(flat);
    }
    CHECK(distinct.size() == count_formula(n));
  }
}

TEST_CASE("a column swap leaves SO") {
  auto g = representative_matrix(DiiiClan::parse("+1212-")).g;
  QMatrix s = g;
  s.col(0).swap(s.col(1));
  CHECK(exact_determinant(s) == QSqrt2(-1));
  CHECK_FALSE(verify_special_orthogonal(s));
}

TEST_CASE("fraction-free determinant and rank against the Leibniz expansion") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& c : enumerate_diii(n)) {
      auto g = representative_matrix(c).g;
      CHECK(exact_determinant(g) == oracle::leibniz_det(g));
      QMatrix m = g + QMatrix::Identity(g.rows(), g.cols());
      CHECK(exact_determinant(m) == oracle::leibniz_det(m));
      CHECK(exact_rank(g) == g.rows());
    }
  }
  QMatrix a(3, 3);
  a << QSqrt2(0), h, QSqrt2(2),
       QSqrt2(1), QSqrt2(0), QSqrt2::sqrt2(),
       QSqrt2(Rational(1, 3), 0), h, QSqrt2(0);
  CHECK(exact_determinant(a) == oracle::leibniz_det(a));
  QMatrix singular(3, 3);
  singular << QSqrt2(1), h, QSqrt2(2),
              QSqrt2(2), QSqrt2::sqrt2(), QSqrt2(4),
              QSqrt2(0), QSqrt2(1), QSqrt2(0);
  CHECK(exact_determinant(singular).is_zero());
  CHECK(exact_rank(singular) == 2);
  CHECK_THROWS_AS(exact_determinant(QMatrix(2, 3)), std::invalid_argument);
}
