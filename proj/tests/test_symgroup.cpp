#include <doctest.h>

#include <random>
#include <set>

#include "ym2d/symgroup.hpp"

using namespace ym2d;

TEST_CASE("standard tableaux counts and order") {
  CHECK(standard_tableaux(Partition{1}).size() == 1);
  CHECK(standard_tableaux(Partition{2, 1}).size() == 2);
  CHECK(standard_tableaux(Partition{2, 2}).size() == 2);
  CHECK(standard_tableaux(Partition{}).size() == 1);

  // the fixed basis order puts the row-reading filling first for (2,1)
  auto tabs = standard_tableaux(Partition{2, 1});
  CHECK(tabs[0].rows == std::vector<int>{1, 1, 2});
  CHECK(tabs[0].contents == std::vector<int>{0, 1, -1});
  CHECK(tabs[1].rows == std::vector<int>{1, 2, 1});
  CHECK(tabs[1].contents == std::vector<int>{0, -1, 1});
}

TEST_CASE("hook length dimension equals tableau count") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& shape : partitions_of(n))
      CHECK(dim_symmetric(shape) == static_cast<long>(standard_tableaux(shape).size()));
}

TEST_CASE("branching rule dimensions") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& mu : partitions_of(n)) {
      long total = 0;
      for (const auto& lam : partition_restrictions(mu)) total += dim_symmetric(lam);
      CHECK(total == dim_symmetric(mu));
    }
}

TEST_CASE("orthogonal representation basics") {
  OrthogonalRep triv = orthogonal_rep(Partition{3});
  for (int k = 2; k <= 3; ++k) {
    CHECK(triv.generator(k).rows() == 1);
    CHECK(triv.generator(k)(0, 0) == doctest::Approx(1.0));
  }
  OrthogonalRep sign = orthogonal_rep(Partition{1, 1});
  CHECK(sign.generator(2)(0, 0) == doctest::Approx(-1.0));

  OrthogonalRep rep = orthogonal_rep(Partition{2, 1});
  Eigen::MatrixXd g3 = rep.generator(3);
  CHECK(g3(0, 0) == doctest::Approx(-0.5));
  CHECK(g3(0, 1) == doctest::Approx(std::sqrt(3) / 2));
  CHECK(g3(1, 0) == doctest::Approx(std::sqrt(3) / 2));
  CHECK(g3(1, 1) == doctest::Approx(0.5));
}

TEST_CASE("generators satisfy the Coxeter relations") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& shape : partitions_of(n)) {
      OrthogonalRep rep = orthogonal_rep(shape);
      Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(rep.dim, rep.dim);
      for (int k = 2; k <= n; ++k) {
        CHECK((rep.generator(k) * rep.generator(k) - eye).cwiseAbs().maxCoeff() <= 1e-12);
        if (k + 1 <= n) {
          Eigen::MatrixXd ab = rep.generator(k) * rep.generator(k + 1);
          CHECK((ab * ab * ab - eye).cwiseAbs().maxCoeff() <= 1e-12);
        }
        for (int l = k + 2; l <= n; ++l) {
          Eigen::MatrixXd ab = rep.generator(k) * rep.generator(l);
          CHECK((ab * ab - eye).cwiseAbs().maxCoeff() <= 1e-12);
        }
      }
    }
}

TEST_CASE("matrix_of is a homomorphism") {
  std::mt19937 gen(5);
  for (const auto& shape : {Partition{3, 1}, Partition{2, 2, 1}}) {
    OrthogonalRep rep = orthogonal_rep(shape);
    const SymmetricGroup& sn = GroupAlgebra::table(rep.n);
    for (int it = 0; it < 20; ++it) {
      const Perm& a = sn.at(static_cast<int>(gen() % sn.order()));
      const Perm& b = sn.at(static_cast<int>(gen() % sn.order()));
      Eigen::MatrixXd lhs = rep.matrix_of(a * b);
      Eigen::MatrixXd rhs = rep.matrix_of(a) * rep.matrix_of(b);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("characters: trace against Murnaghan-Nakayama") {
  CHECK(murnaghan_nakayama(Partition{1, 1, 1}, {2, 1}) == -1);
  for (int n = 1; n <= 6; ++n) {
    const SymmetricGroup& sn = GroupAlgebra::table(n);
    for (const auto& shape : partitions_of(n)) {
      for (int r = 0; r < sn.order(); ++r) {
        long exact = murnaghan_nakayama(shape, sn.at(r).cycle_type());
        CHECK(character(shape, sn.at(r)) == exact);
      }
    }
  }
  // trivial and sign characters
  const SymmetricGroup& s4 = GroupAlgebra::table(4);
  for (int r = 0; r < s4.order(); ++r) {
    CHECK(murnaghan_nakayama(Partition{4}, s4.at(r).cycle_type()) == 1);
  }
  CHECK(character(Partition{2, 1}, Perm(3)) == 2);
}

TEST_CASE("column orthogonality of the character table") {
  // sum over shapes of chi(sigma)^2 = |centralizer| for sigma = identity and
  // a transposition in S_5
  const SymmetricGroup& s5 = GroupAlgebra::table(5);
  Perm tr = Perm::transposition(5, 0, 1);
  long id_sum = 0, tr_sum = 0;
  for (const auto& shape : partitions_of(5)) {
    long chi_id = murnaghan_nakayama(shape, Perm(5).cycle_type());
    long chi_tr = murnaghan_nakayama(shape, tr.cycle_type());
    id_sum += chi_id * chi_id;
    tr_sum += chi_tr * chi_tr;
  }
  CHECK(id_sum == 120);  // |S_5|
  CHECK(tr_sum == 12);   // centralizer of a transposition
  (void)s5;
}

TEST_CASE("intertwiners are isometric and equivariant") {
  CHECK(intertwiner(Partition{2}, Partition{1}) == Eigen::MatrixXd::Ones(1, 1));
  CHECK(intertwiner(Partition{1, 1}, Partition{1}) == Eigen::MatrixXd::Ones(1, 1));
  Eigen::MatrixXd i21 = intertwiner(Partition{2, 1}, Partition{2});
  REQUIRE(i21.rows() == 2);
  REQUIRE(i21.cols() == 1);
  // selects the tableau with 3 in row 2, the first basis vector
  CHECK(i21(0, 0) == doctest::Approx(1.0));
  CHECK(i21(1, 0) == doctest::Approx(0.0));

  for (int n = 2; n <= 6; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& lam : partition_restrictions(mu)) {
        Eigen::MatrixXd i_ml = intertwiner(mu, lam);
        // isometry
        Eigen::MatrixXd gram = i_ml.transpose() * i_ml;
        CHECK((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() <=
              1e-12);
        // equivariance plus the restriction identity on generators
        OrthogonalRep rl = orthogonal_rep(lam);
        OrthogonalRep rm = orthogonal_rep(mu);
        for (int k = 2; k < n; ++k) {
          Eigen::MatrixXd proj = i_ml.transpose() * rm.generator(k) * i_ml;
          CHECK((proj - rl.generator(k)).cwiseAbs().maxCoeff() <= 1e-10);
          Eigen::MatrixXd comm = rm.generator(k) * i_ml - i_ml * rl.generator(k);
          CHECK(comm.cwiseAbs().maxCoeff() <= 1e-10);
        }
      }
}

TEST_CASE("crossing scalar: closed form against matrix composition") {
  CHECK(scalar_a_matrix(Partition{}, Partition{1}, Partition{1}, Partition{2}) ==
        doctest::Approx(1.0));
  CHECK(scalar_a_matrix(Partition{}, Partition{1}, Partition{1}, Partition{1, 1}) ==
        doctest::Approx(-1.0));
  CHECK(scalar_a_matrix(Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}) ==
        doctest::Approx(std::sqrt(3.0) / 2));
  CHECK(scalar_a_closed(Partition{1}, Partition{2}, Partition{2}, Partition{2, 1}).cos_value ==
        mpq_class(-1, 2));

  long cases = 0;
  for (int n = 2; n <= 6; ++n)
    for (const auto& xi : partitions_of(n))
      for (const auto& mu : partition_restrictions(xi))
        for (const auto& nu : partition_restrictions(xi))
          for (const auto& lam : partition_restrictions(mu)) {
            if (!partition_extends(lam, nu)) continue;
            ++cases;
            double a = scalar_a_matrix(lam, mu, nu, xi);
            ScalarA closed = scalar_a_closed(lam, mu, nu, xi);
            CHECK(std::abs(a - closed.value) <= 1e-10);
          }
  CHECK(cases >= 100);  // every admissible quadruple up to n = 6
}

TEST_CASE("projectors") {
  GroupAlgebra sym = projector(Partition{2});
  const SymmetricGroup& s2 = GroupAlgebra::table(2);
  CHECK(sym.coeff(s2.rank_of(Perm(2))) == mpq_class(1, 2));
  CHECK(sym.coeff(s2.rank_of(Perm::transposition(2, 0, 1))) == mpq_class(1, 2));
  GroupAlgebra alt = projector(Partition{1, 1});
  CHECK(alt.coeff(s2.rank_of(Perm(2))) == mpq_class(1, 2));
  CHECK(alt.coeff(s2.rank_of(Perm::transposition(2, 0, 1))) == mpq_class(-1, 2));

  for (int n = 1; n <= 4; ++n) {
    auto shapes = partitions_of(n);
    std::vector<GroupAlgebra> pis;
    for (const auto& s : shapes) pis.push_back(projector(s));
    const SymmetricGroup& sn = GroupAlgebra::table(n);
    for (size_t a = 0; a < pis.size(); ++a) {
      // coefficient symmetry under inversion
      for (int r = 0; r < sn.order(); ++r)
        CHECK(pis[a].coeff(r) == pis[a].coeff(sn.rank_of(sn.at(r).inverse())));
      for (size_t b = 0; b < pis.size(); ++b) {
        GroupAlgebra prod = pis[a] * pis[b];
        for (int r = 0; r < prod.order(); ++r)
          CHECK(prod.coeff(r) == ((a == b) ? pis[a].coeff(r) : mpq_class(0)));
      }
    }
  }
}

TEST_CASE("Jucys-Murphy matrices are diagonal with content eigenvalues") {
  OrthogonalRep rep1 = orthogonal_rep(Partition{2});
  CHECK(jm_matrix(rep1, 1).cwiseAbs().maxCoeff() == 0.0);
  CHECK(jm_matrix(rep1, 2)(0, 0) == doctest::Approx(1.0));

  OrthogonalRep rep = orthogonal_rep(Partition{2, 1});
  Eigen::MatrixXd x3 = jm_matrix(rep, 3);
  std::multiset<int> eigs{static_cast<int>(std::lround(x3(0, 0))),
                          static_cast<int>(std::lround(x3(1, 1)))};
  CHECK(eigs == std::multiset<int>{-1, 1});

  for (int n = 1; n <= 6; ++n)
    for (const auto& shape : partitions_of(n)) {
      OrthogonalRep r = orthogonal_rep(shape);
      for (int k = 1; k <= n; ++k) {
        Eigen::MatrixXd x = jm_matrix(r, k);
        for (int t = 0; t < r.dim; ++t)
          for (int u = 0; u < r.dim; ++u) {
            double expect = (t == u) ? r.tableaux[static_cast<size_t>(t)].contents[static_cast<size_t>(k - 1)] : 0.0;
            CHECK(std::abs(x(t, u) - expect) <= 1e-10);
          }
      }
    }
}

TEST_CASE("jm via explicit transposition sums") {
  // X_k = sum_{j<k} (j k) as matrices
  for (const auto& shape : {Partition{3, 1}, Partition{2, 2}}) {
    OrthogonalRep rep = orthogonal_rep(shape);
    const int n = rep.n;
    for (int k = 2; k <= n; ++k) {
      Eigen::MatrixXd direct = Eigen::MatrixXd::Zero(rep.dim, rep.dim);
      for (int j = 1; j < k; ++j) direct += rep.matrix_of(Perm::transposition(n, j - 1, k - 1));
      CHECK((direct - jm_matrix(rep, k)).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}
