#include "doctest.h"
#include "lieindex/index.hpp"
#include "lieindex/matrix.hpp"

using namespace lieindex;

namespace {

Mat random_matrix(ParamSampler& s, int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = s.next();
  return m;
}

}  // namespace

TEST_CASE("rank on the pinned examples") {
  CHECK(rank(Mat::identity(3)) == 3);
  CHECK(rank(Mat(2, 2)) == 0);
  Mat prop(2, 2);
  prop.at(0, 0) = 1;
  prop.at(0, 1) = 2;
  prop.at(1, 0) = 2;
  prop.at(1, 1) = 4;
  CHECK(rank(prop) == 1);
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(Mat::identity(2)).cols() == 0);

  Mat row(1, 2);
  row.at(0, 0) = 1;
  row.at(0, 1) = -1;
  const Mat k = kernel_basis(row);
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0) == k.at(1, 0));
  CHECK(k.at(0, 0) != 0);

  Mat two(2, 3);
  two.at(0, 0) = 1;
  two.at(0, 1) = 2;
  two.at(0, 2) = 3;
  const Mat k2 = kernel_basis(two);
  CHECK(k2.cols() == 2);
  CHECK((two * k2).is_zero());
}

TEST_CASE("subspace sum and intersection on axes") {
  Mat x(3, 1), y(3, 1);
  x.at(0, 0) = 1;
  y.at(1, 0) = 1;
  CHECK(subspace_sum(x, y).cols() == 2);

  ParamSampler s(7, 9);
  const Mat u = random_matrix(s, 4, 2);
  CHECK(subspace_intersect(u, u) == canonical_span(u));

  Mat a(2, 1), b(2, 1);
  a.at(0, 0) = 1;
  a.at(1, 0) = 1;
  b.at(0, 0) = 1;
  b.at(1, 0) = -1;
  CHECK(subspace_intersect(a, b).cols() == 0);
}

TEST_CASE("rank equals rank of the transpose") {
  ParamSampler s(11, 5);
  for (int rep = 0; rep < 25; ++rep) {
    const Mat m = random_matrix(s, 2 + rep % 4, 3 + rep % 3);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("kernel dimension plus rank is the column count") {
  ParamSampler s(13, 4);
  for (int rep = 0; rep < 25; ++rep) {
    const Mat m = random_matrix(s, 3 + rep % 3, 2 + rep % 5);
    const Mat k = kernel_basis(m);
    CHECK(k.cols() + rank(m) == m.cols());
    CHECK((m * k).is_zero());
  }
}

TEST_CASE("canonical echelon form is basis independent") {
  ParamSampler s(17, 3);
  for (int rep = 0; rep < 20; ++rep) {
    const Mat a = random_matrix(s, 5, 3);
    // Multiply by a random invertible coefficient matrix on the right.
    Mat c(3, 3);
    do {
      c = random_matrix(s, 3, 3);
    } while (rank(c) < 3);
    CHECK(canonical_span(a) == canonical_span(a * c));
  }
}

TEST_CASE("Grassmann dimension identity on random subspace pairs") {
  ParamSampler s(19, 3);
  for (int rep = 0; rep < 20; ++rep) {
    const Mat u = canonical_span(random_matrix(s, 5, 1 + rep % 4));
    const Mat w = canonical_span(random_matrix(s, 5, 1 + (rep + 2) % 4));
    const int total = subspace_sum(u, w).cols() + subspace_intersect(u, w).cols();
    CHECK(total == u.cols() + w.cols());
  }
}

TEST_CASE("solve finds solutions exactly and detects inconsistency") {
  ParamSampler s(23, 6);
  for (int rep = 0; rep < 15; ++rep) {
    const Mat a = random_matrix(s, 4, 3);
    const Vec x = s.next_point(3);
    const Vec b = a.apply(x);
    const auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == b);
  }
  Mat a(2, 1);
  a.at(0, 0) = 1;
  a.at(1, 0) = 1;
  CHECK_FALSE(solve(a, Vec{Rational(1), Rational(2)}).has_value());
}

TEST_CASE("zero-dimensional shapes behave") {
  CHECK(rank(Mat(0, 0)) == 0);
  CHECK(kernel_basis(Mat(0, 3)).cols() == 3);
  CHECK(canonical_span(Mat(4, 0)).cols() == 0);
}

TEST_CASE("ambient dimension mismatches are rejected") {
  CHECK_THROWS_AS(subspace_sum(Mat(3, 1), Mat(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(subspace_intersect(Mat(3, 1), Mat(2, 1)),
                  std::invalid_argument);
}
