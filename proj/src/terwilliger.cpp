#include "nbj/terwilliger.hpp"

#include <string>

#include "nbj/errors.hpp"

namespace nbj {

namespace {

std::string bi_str(const BiIndex& ij) {
  return "(" + std::to_string(ij.i) + "," + std::to_string(ij.j) + ")";
}

std::vector<std::vector<std::uint32_t>> neighbor_lists(const BinaryMatrix& a) {
  std::vector<std::vector<std::uint32_t>> nbrs(a.dim());
  for (std::size_t u = 0; u < a.dim(); ++u) {
    for (std::size_t w = 0; w < a.dim(); ++w) {
      if (a.get(u, w)) nbrs[u].push_back(static_cast<std::uint32_t>(w));
    }
  }
  return nbrs;
}

// a * m for a 0/1 symmetric a given as neighbor lists.
Matrix mul_bin_left(const std::vector<std::vector<std::uint32_t>>& nbrs, const Matrix& m) {
  const std::size_t v = m.dim();
  return Matrix::build(v, [&](std::size_t u, std::size_t w) {
    Rational acc;
    for (std::uint32_t z : nbrs[u]) acc += m.at(z, w);
    return acc;
  });
}

// m * a for a 0/1 symmetric a.
Matrix mul_bin_right(const Matrix& m, const std::vector<std::vector<std::uint32_t>>& nbrs) {
  const std::size_t v = m.dim();
  return Matrix::build(v, [&](std::size_t u, std::size_t w) {
    Rational acc;
    for (std::uint32_t z : nbrs[w]) acc += m.at(u, z);
    return acc;
  });
}

Matrix commutator_bin(const std::vector<std::vector<std::uint32_t>>& nbrs, const Matrix& m) {
  return mat_sub(mul_bin_left(nbrs, m), mul_bin_right(m, nbrs));
}

Matrix mul_diag_left(const std::vector<Rational>& d, const Matrix& m) {
  return Matrix::build(m.dim(),
                       [&](std::size_t u, std::size_t w) { return d[u] * m.at(u, w); });
}

Matrix mul_diag_right(const Matrix& m, const std::vector<Rational>& d) {
  return Matrix::build(m.dim(),
                       [&](std::size_t u, std::size_t w) { return m.at(u, w) * d[w]; });
}

// [diag(d), m]: entries (d_u - d_w) m[u][w].
Matrix commutator_diag(const std::vector<Rational>& d, const Matrix& m) {
  return Matrix::build(m.dim(), [&](std::size_t u, std::size_t w) {
    return (d[u] - d[w]) * m.at(u, w);
  });
}

Matrix binary_product(const BinaryMatrix& a, const BinaryMatrix& b) {
  return Matrix::build(a.dim(), [&](std::size_t u, std::size_t w) {
    return Rational(static_cast<long>(a.row_dot(u, b, w)));
  });
}

void report_nonzero(Certificate& cert, const Matrix& m, const std::string& name) {
  for (std::size_t u = 0; u < m.dim(); ++u) {
    for (std::size_t w = 0; w < m.dim(); ++w) {
      if (!m.at(u, w).is_zero()) {
        cert.fail({static_cast<long long>(u), static_cast<long long>(w)}, "0",
                  m.at(u, w).str(), name);
        return;
      }
    }
  }
}

}  // namespace

DualPair build_duals(const AdjacencyFamily& fam, const SpectralData& sd, std::size_t base) {
  if (base >= fam.v()) throw std::invalid_argument("build_duals: base vertex out of range");
  const std::size_t d = fam.domain.size();
  const std::size_t v = fam.v();
  DualPair out;
  out.base = base;
  out.astar.assign(d, std::vector<Rational>(v));
  out.estar.assign(d, std::vector<std::uint8_t>(v, 0));
  for (std::size_t y = 0; y < v; ++y) {
    const std::size_t cls = fam.class_of(base, y);
    for (std::size_t mn = 0; mn < d; ++mn) {
      out.astar[mn][y] = sd.Q[mn][cls];  // v (E_mn)_{x0,y}
      out.estar[mn][y] = fam.matrices[mn].get(base, y) ? 1 : 0;
    }
  }
  return out;
}

Certificate dual_basics_check(const AdjacencyFamily& fam, const SpectralData& sd,
                              const CoefficientTable& krein, const DualPair& duals) {
  Certificate cert("dual-bose-mesner", sd.params);
  const std::size_t d = fam.domain.size();
  const std::size_t v = fam.v();
  const std::size_t pos00 = sd.pos00;

  for (std::size_t y = 0; y < v; ++y) {
    int hits = 0;
    for (std::size_t ij = 0; ij < d; ++ij) hits += duals.estar[ij][y];
    if (hits != 1) {
      cert.fail({static_cast<long long>(y)}, "1", std::to_string(hits),
                "dual idempotents partition the diagonal");
    }
    bool want00 = (y == duals.base);
    if ((duals.estar[pos00][y] != 0) != want00) {
      cert.fail({static_cast<long long>(y)}, want00 ? "1" : "0",
                std::to_string(int(duals.estar[pos00][y])), "E*_00 rank-one at the base vertex");
    }
    // A*_mn = sum_ij q_mn(ij) E*_ij and E*_ij = (1/v) sum_mn p_ij(mn) A*_mn.
    for (std::size_t mn = 0; mn < d; ++mn) {
      Rational expand;
      for (std::size_t ij = 0; ij < d; ++ij) {
        if (duals.estar[ij][y]) expand += sd.Q[mn][ij];
      }
      if (expand != duals.astar[mn][y]) {
        const BiIndex lbl = fam.domain.at(mn);
        cert.fail({lbl.i, lbl.j, static_cast<long long>(y)}, duals.astar[mn][y].str(),
                  expand.str(), "A* expansion in dual idempotents");
      }
      Rational back;
      for (std::size_t ab = 0; ab < d; ++ab) back += sd.P[mn][ab] * duals.astar[ab][y];
      back /= sd.v;
      Rational want = duals.estar[mn][y] ? 1 : 0;
      if (back != want) {
        const BiIndex lbl = fam.domain.at(mn);
        cert.fail({lbl.i, lbl.j, static_cast<long long>(y)}, want.str(), back.str(),
                  "E* expansion in dual adjacency matrices");
      }
    }
  }

  // A*_ij A*_kl = sum q_{ij,kl}^{mn} A*_mn; the diagonals are constant on the
  // relation classes of the base row, so one check per class suffices.
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t ij = 0; ij < d; ++ij) {
      for (std::size_t kl = 0; kl < d; ++kl) {
        Rational lhs = sd.Q[ij][c] * sd.Q[kl][c];
        Rational rhs;
        for (std::size_t mn = 0; mn < d; ++mn) rhs += krein[ij][kl][mn] * sd.Q[mn][c];
        if (lhs != rhs) {
          const BiIndex a = fam.domain.at(ij), b = fam.domain.at(kl), cc = fam.domain.at(c);
          cert.fail({a.i, a.j, b.i, b.j, cc.i, cc.j}, rhs.str(), lhs.str(),
                    "A* A* Krein expansion");
        }
      }
    }
  }
  return cert;
}

Certificate triple_product_check(const AdjacencyFamily& fam, const SpectralData& sd,
                                 const CoefficientTable& krein, const IntersectionTable& inter,
                                 const DualPair& duals,
                                 const std::vector<Matrix>& idempotents,
                                 std::size_t raw_limit) {
  Certificate cert("triple-products", sd.params);
  const std::size_t d = fam.domain.size();
  const std::size_t v = fam.v();
  const std::size_t x0 = duals.base;

  // E*_ij A_mn E*_rs support: one pass over all (y,z) pairs.
  std::vector<std::uint8_t> reachable(d * d * d, 0);
  for (std::size_t y = 0; y < v; ++y) {
    const std::size_t c1 = fam.class_of(x0, y);
    for (std::size_t z = 0; z < v; ++z) {
      reachable[(c1 * d + fam.class_of(y, z)) * d + fam.class_of(x0, z)] = 1;
    }
  }
  for (std::size_t ij = 0; ij < d; ++ij) {
    for (std::size_t mn = 0; mn < d; ++mn) {
      for (std::size_t rs = 0; rs < d; ++rs) {
        const bool nonzero = reachable[(ij * d + mn) * d + rs] != 0;
        if (nonzero != (inter[ij][mn][rs] != 0)) {
          const BiIndex a = fam.domain.at(ij), b = fam.domain.at(mn), c = fam.domain.at(rs);
          cert.fail({a.i, a.j, b.i, b.j, c.i, c.j},
                    inter[ij][mn][rs] != 0 ? "nonzero" : "zero",
                    nonzero ? "nonzero" : "zero",
                    "E*_ij A_mn E*_rs vanishing vs p_{ij,mn}^{rs}");
        }
      }
    }
  }

  // E_ij A*_mn E_rs = 0 is decided by the exact sum of squared entries
  //   sum (M o M) = (1/v^2) sum_{z,z'} d_z d_z' q_ij(c(z,z')) q_rs(c(z,z'))
  // aggregated over the class-triple counts of (z,z') against the base row.
  std::vector<long long> counts(d * d * d, 0);
  for (std::size_t z = 0; z < v; ++z) {
    const std::size_t b1 = fam.class_of(x0, z);
    for (std::size_t z2 = 0; z2 < v; ++z2) {
      counts[(b1 * d + fam.class_of(x0, z2)) * d + fam.class_of(z, z2)]++;
    }
  }
  for (std::size_t mn = 0; mn < d; ++mn) {
    // weights d_z d_z' collapse to Q[mn][b1] Q[mn][b2]
    for (std::size_t ij = 0; ij < d; ++ij) {
      for (std::size_t rs = 0; rs < d; ++rs) {
        Rational sumsq;
        for (std::size_t b1 = 0; b1 < d; ++b1) {
          for (std::size_t b2 = 0; b2 < d; ++b2) {
            for (std::size_t a = 0; a < d; ++a) {
              const long long cnt = counts[(b1 * d + b2) * d + a];
              if (cnt == 0) continue;
              Rational w = sd.Q[mn][b1] * sd.Q[mn][b2] * sd.Q[ij][a] * sd.Q[rs][a];
              if (!w.is_zero()) sumsq += Rational(cnt) * w;
            }
          }
        }
        const bool nonzero = !sumsq.is_zero();
        if (nonzero != !krein[ij][mn][rs].is_zero()) {
          const BiIndex a = fam.domain.at(ij), b = fam.domain.at(mn), c = fam.domain.at(rs);
          cert.fail({a.i, a.j, b.i, b.j, c.i, c.j},
                    krein[ij][mn][rs].is_zero() ? "zero" : "nonzero",
                    nonzero ? "nonzero" : "zero",
                    "E_ij A*_mn E_rs vanishing vs q_{ij,mn}^{rs}");
        }
      }
    }
  }

  // Raw triple products on small instances.
  if (v <= raw_limit) {
    std::vector<Matrix> estar_m, astar_m;
    for (std::size_t t = 0; t < d; ++t) {
      std::vector<Rational> es(v), as(v);
      for (std::size_t y = 0; y < v; ++y) {
        es[y] = duals.estar[t][y] ? 1 : 0;
        as[y] = duals.astar[t][y];
      }
      estar_m.push_back(Matrix::diagonal(es));
      astar_m.push_back(Matrix::diagonal(as));
    }
    for (std::size_t ij = 0; ij < d; ++ij) {
      for (std::size_t mn = 0; mn < d; ++mn) {
        Matrix left = mat_mul(estar_m[ij], fam.matrices[mn].to_matrix());
        Matrix leftE = mat_mul(idempotents[ij], astar_m[mn]);
        for (std::size_t rs = 0; rs < d; ++rs) {
          const bool z1 = mat_mul(left, estar_m[rs]).is_zero();
          if (z1 != (inter[ij][mn][rs] == 0)) {
            const BiIndex a = fam.domain.at(ij), b = fam.domain.at(mn), c = fam.domain.at(rs);
            cert.fail({a.i, a.j, b.i, b.j, c.i, c.j}, "pattern match", "mismatch",
                      "raw E* A E* product");
          }
          const bool z2 = mat_mul(leftE, idempotents[rs]).is_zero();
          if (z2 != krein[ij][mn][rs].is_zero()) {
            const BiIndex a = fam.domain.at(ij), b = fam.domain.at(mn), c = fam.domain.at(rs);
            cert.fail({a.i, a.j, b.i, b.j, c.i, c.j}, "pattern match", "mismatch",
                      "raw E A* E product");
          }
        }
      }
    }
  }
  return cert;
}

Certificate subconstituent_relations_check(const AdjacencyFamily& fam, const SpectralData& sd,
                                           const DualPair& duals) {
  Certificate cert("subconstituent-relations", sd.params);
  const long r = sd.params.r, k = sd.params.k, n = sd.params.n;
  if (sd.pos10 < 0 || sd.pos01 < 0) {
    cert.add_note("subconstituent relations vacuous: generator class missing");
    return cert;
  }
  const BinaryMatrix& a10 = fam.matrices[sd.pos10];
  const BinaryMatrix& a01 = fam.matrices[sd.pos01];
  const auto nbrs10 = neighbor_lists(a10);
  const auto nbrs01 = neighbor_lists(a01);
  const std::vector<Rational>& d10 = duals.astar[sd.pos10];
  const std::vector<Rational>& d01 = duals.astar[sd.pos01];
  const std::size_t v = fam.v();

  // [A*_01, A_10] = 0: entries (d01_u - d01_w) on the support of A_10.
  for (std::size_t u = 0; u < v; ++u) {
    for (std::uint32_t w : nbrs10[u]) {
      if (d01[u] != d01[w]) {
        cert.fail({static_cast<long long>(u), static_cast<long long>(w)}, "0",
                  (d01[u] - d01[w]).str(), "[A*_01, A_10]");
      }
    }
  }

  // Dolan-Grady: [A*_10,[A*_10,[A*_10, A_10]]] = (n(r-1)/k)^2 [A*_10, A_10],
  // entrywise (delta^3 - c delta) A[u][w] with delta = d10_u - d10_w.
  const Rational dg_factor = Rational(n * (r - 1), k) * Rational(n * (r - 1), k);
  for (std::size_t u = 0; u < v; ++u) {
    for (std::uint32_t w : nbrs10[u]) {
      Rational delta = d10[u] - d10[w];
      Rational res = delta * delta * delta - dg_factor * delta;
      if (!res.is_zero()) {
        cert.fail({static_cast<long long>(u), static_cast<long long>(w)}, "0", res.str(),
                  "[A*_10,[A*_10,[A*_10, A_10]]] Dolan-Grady");
      }
    }
  }

  // Tridiagonal: [A*_01,[A*_01,[A*_01, A_01]]] = (n(n-1)/(k(n-k)))^2 [A*_01, A_01].
  const Rational td_factor = Rational(static_cast<long>(n) * (n - 1), k * (n - k)) *
                             Rational(static_cast<long>(n) * (n - 1), k * (n - k));
  for (std::size_t u = 0; u < v; ++u) {
    for (std::uint32_t w : nbrs01[u]) {
      Rational delta = d01[u] - d01[w];
      Rational res = delta * delta * delta - td_factor * delta;
      if (!res.is_zero()) {
        cert.fail({static_cast<long long>(u), static_cast<long long>(w)}, "0", res.str(),
                  "[A*_01,[A*_01,[A*_01, A_01]]] tridiagonal");
      }
    }
  }

  if (n < 2 * k - 1) {
    cert.add_note("Q-dependent relations skipped: n < 2k-1");
    return cert;
  }

  const Matrix a10m = a10.to_matrix();
  const Matrix a01m = a01.to_matrix();

  // Dual Dolan-Grady: [A_10,[A_10,[A_10, A*_10]]] = (r-1)^2 [A_10, A*_10].
  {
    Matrix inner = scale(Rational(-1), commutator_diag(d10, a10m));  // [A_10, A*_10]
    Matrix third = commutator_bin(nbrs10, commutator_bin(nbrs10, inner));
    report_nonzero(cert, mat_sub(third, scale(Rational((r - 1) * (r - 1)), inner)),
                   "[A_10,[A_10,[A_10, A*_10]]] Dolan-Grady");
  }

  // Central-extension tridiagonal relation:
  // [A_01, 2 A_01 A*_01 A_01 - {A_01^2, A*_01} + 2(r-1){A_01, A*_01}
  //        + (c1 + c2 A_10 + A_10^2) A*_01] = 0.
  {
    const Rational c1 = Rational(n * (n + 2) * (r - 1) * (r - 1) + k * k * r * r -
                                 2 * k * (r - 1) * (r * (n + 1) - 2));
    const Rational c2 = Rational(2 * (k * r - (n - 1) * (r - 1)));
    Matrix a01sq = binary_product(a01, a01);
    Matrix a10sq = binary_product(a10, a10);
    Matrix term1 = scale(Rational(2), mul_bin_left(nbrs01, mul_diag_left(d01, a01m)));
    Matrix term2 = mat_add(mul_diag_right(a01sq, d01), mul_diag_left(d01, a01sq));
    Matrix term3 = mat_add(mul_diag_right(a01m, d01), mul_diag_left(d01, a01m));
    Matrix poly10 =
        mat_add(mat_add(scale(c1, Matrix::identity(v)), scale(c2, a10m)), a10sq);
    Matrix term4 = mul_diag_right(poly10, d01);
    Matrix t = mat_add(mat_sub(term1, term2),
                       mat_add(scale(Rational(2 * (r - 1)), term3), term4));
    report_nonzero(cert, commutator_bin(nbrs01, t), "central tridiagonal relation");
  }
  return cert;
}

Certificate primary_module_check(const AdjacencyFamily& fam, const SpectralData& sd,
                                 const DualPair& duals, const OperatorQuadruple& quad) {
  Certificate cert("primary-module", sd.params);
  const std::size_t d = fam.domain.size();
  const std::size_t v = fam.v();
  const std::size_t x0 = duals.base;
  const long r = sd.params.r, k = sd.params.k, n = sd.params.n;

  // Representation of an operator on the basis {A_ij x0}: expand Op b_ij in
  // the basis by exact linear solving against the disjoint class supports,
  // verifying that the image is constant on every class.
  auto represent = [&](const std::function<Rational(std::size_t, std::size_t)>& op_entry,
                       const std::string& name) -> Matrix {
    Matrix rep(d);
    std::vector<std::vector<Rational>> cols(d, std::vector<Rational>(d));
    for (std::size_t ij = 0; ij < d; ++ij) {
      std::vector<Rational> image(v);
      for (std::size_t y = 0; y < v; ++y) {
        Rational acc;
        for (std::size_t z = 0; z < v; ++z) {
          if (duals.estar[ij][z]) acc += op_entry(y, z);
        }
        image[y] = acc;
      }
      std::vector<Rational> coeff(d);
      std::vector<bool> seen(d, false);
      for (std::size_t y = 0; y < v; ++y) {
        const std::size_t cls = fam.class_of(x0, y);
        if (!seen[cls]) {
          coeff[cls] = image[y];
          seen[cls] = true;
        } else if (coeff[cls] != image[y]) {
          const BiIndex lbl = fam.domain.at(ij);
          cert.fail({lbl.i, lbl.j, static_cast<long long>(y)}, coeff[cls].str(),
                    image[y].str(), name + ": image not in the primary-module span");
        }
      }
      cols[ij] = coeff;
    }
    return Matrix::build(d, [&](std::size_t row, std::size_t col) { return cols[col][row]; });
  };

  const BinaryMatrix& a10 = fam.matrices[sd.pos10];
  const BinaryMatrix& a01 = fam.matrices[sd.pos01];
  Matrix rep10 = represent(
      [&](std::size_t y, std::size_t z) { return Rational(a10.get(y, z) ? 1 : 0); }, "A_10");
  Matrix rep01 = represent(
      [&](std::size_t y, std::size_t z) { return Rational(a01.get(y, z) ? 1 : 0); }, "A_01");
  Matrix repd10 = represent(
      [&](std::size_t y, std::size_t z) {
        return y == z ? duals.astar[sd.pos10][y] : Rational(0);
      },
      "A*_10");
  Matrix repd01 = represent(
      [&](std::size_t y, std::size_t z) {
        return y == z ? duals.astar[sd.pos01][y] : Rational(0);
      },
      "A*_01");

  auto expect_equal = [&](const Matrix& got, const Matrix& want, const std::string& name) {
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        if (got.at(a, b) != want.at(a, b)) {
          const BiIndex t = fam.domain.at(a), s = fam.domain.at(b);
          cert.fail({t.i, t.j, s.i, s.j}, want.at(a, b).str(), got.at(a, b).str(), name);
          return;
        }
      }
    }
  };

  // Dual generators act diagonally with the dual eigenvalues.
  expect_equal(repd10, Matrix::diagonal(sd.theta_star), "A*_10 representation diagonal");
  expect_equal(repd01, Matrix::diagonal(sd.mu_star), "A*_01 representation diagonal");

  // Correspondence with the bispectral operators.
  const Matrix I = Matrix::identity(d);
  expect_equal(rep10, mat_add(quad.X, scale(Rational(k * (r - 2)), I)),
               "A_10 representation = X + k(r-2)");
  expect_equal(rep01, quad.Y, "A_01 representation = Y");
  Matrix xstar_want = mat_sub(
      scale(Rational(k * (r - 2), static_cast<long>(n) * (r - 1)),
            mat_add(scale(Rational(k), I), scale(Rational(n - k, n - 1), repd01))),
      scale(Rational(k, static_cast<long>(n) * (r - 1)), repd10));
  expect_equal(quad.Xstar, xstar_want, "X* correspondence");
  Matrix ystar_want = scale(Rational(k * (n - k), n),
                            mat_sub(I, scale(Rational(1, n - 1), repd01)));
  expect_equal(quad.Ystar, ystar_want, "Y* correspondence");

  // Representation consistency: the five subconstituent relations hold for
  // the |D|-dimensional representations as well.
  expect_equal(commutator(repd01, rep10), Matrix(d), "rep [A*_01, A_10]");
  Matrix c1 = commutator(repd10, rep10);
  expect_equal(commutator(repd10, commutator(repd10, c1)),
               scale(Rational(n * (r - 1), k) * Rational(n * (r - 1), k), c1),
               "rep Dolan-Grady (dual side)");
  expect_equal(commutator(rep10, commutator(rep10, commutator(rep10, repd10))),
               scale(Rational((r - 1) * (r - 1)), commutator(rep10, repd10)),
               "rep Dolan-Grady (primal side)");
  Matrix c2m = commutator(repd01, rep01);
  expect_equal(commutator(repd01, commutator(repd01, c2m)),
               scale(Rational(static_cast<long>(n) * (n - 1), k * (n - k)) *
                         Rational(static_cast<long>(n) * (n - 1), k * (n - k)),
                     c2m),
               "rep tridiagonal");
  {
    const Rational cc1 = Rational(n * (n + 2) * (r - 1) * (r - 1) + k * k * r * r -
                                  2 * k * (r - 1) * (r * (n + 1) - 2));
    const Rational cc2 = Rational(2 * (k * r - (n - 1) * (r - 1)));
    Matrix t = mat_add(
        mat_sub(scale(Rational(2), mat_mul(rep01, mat_mul(repd01, rep01))),
                anticommutator(mat_mul(rep01, rep01), repd01)),
        mat_add(scale(Rational(2 * (r - 1)), anticommutator(rep01, repd01)),
                mat_mul(mat_add(mat_add(scale(cc1, I), scale(cc2, rep10)),
                                mat_mul(rep10, rep10)),
                        repd01)));
    expect_equal(commutator(rep01, t), Matrix(d), "rep central tridiagonal relation");
  }
  return cert;
}

Certificate raw_generators_negative_check(const AdjacencyFamily& fam, const SpectralData& sd,
                                          const DualPair& duals) {
  Certificate cert("raw-generator-negative", sd.params);
  const long r = sd.params.r, k = sd.params.k, n = sd.params.n;
  const std::size_t v = fam.v();
  const BinaryMatrix& a10b = fam.matrices[sd.pos10];
  const BinaryMatrix& a01b = fam.matrices[sd.pos01];
  const auto nbrs10 = neighbor_lists(a10b);
  const auto nbrs01 = neighbor_lists(a01b);
  const std::vector<Rational>& d10 = duals.astar[sd.pos10];
  const std::vector<Rational>& d01 = duals.astar[sd.pos01];
  Matrix a10 = a10b.to_matrix();
  Matrix a01 = a01b.to_matrix();
  Matrix ad10 = Matrix::diagonal(d10);
  Matrix ad01 = Matrix::diagonal(d01);
  const Matrix I = Matrix::identity(v);

  std::vector<std::string> nonzero;

  // gl_2 pair with X -> A_10, X* -> A*_10, Y* -> A*_01.
  Matrix inner = commutator_diag(d10, a10);  // [A*_10, A_10]
  Matrix shift01 = mat_sub(ad01, scale(Rational(k), I));
  Matrix res1 = mat_sub(commutator_diag(d10, inner),
                        mat_sub(mat_sub(a10, scale(Rational(r - 3), ad10)),
                                scale(Rational(r - 2), shift01)));
  if (!res1.is_zero()) nonzero.push_back("[X*,[X*,X]] substitute");
  Matrix res2 = mat_sub(
      commutator_bin(nbrs10, inner),
      mat_sub(mat_sub(scale(Rational(r - 3), a10), scale(Rational((r - 1) * (r - 1)), ad10)),
              scale(Rational((r - 1) * (r - 2)), shift01)));
  if (!res2.is_zero()) nonzero.push_back("[X,[X*,X]] substitute");

  // Hahn pair with Y -> A_01, Y* -> A*_01, X -> A_10.
  Matrix innerY = commutator_diag(d01, a01);  // [A*_01, A_01]
  Matrix rhs3 = mat_add(
      mat_add(scale(Rational(-2 * (1 - r)), mat_mul(ad01, ad01)),
              mul_diag_right(mat_sub(scale(Rational(n * (1 - r)), I), a10), d01)),
      a01);
  Matrix res3 = mat_sub(commutator_diag(d01, innerY), rhs3);
  if (!res3.is_zero()) nonzero.push_back("[Y*,[Y*,Y]] substitute");

  Matrix a10sq = binary_product(a10b, a10b);
  Matrix xpoly = mat_add(mat_add(a10sq, scale(Rational(2 * (1 - r) * (n - 2 * k - 1)), a10)),
                         scale(Rational((r - 1) * (r - 1) * (2 * n + (n - 2 * k) * (n - 2 * k))),
                               I));
  Matrix rhs4 = mat_sub(
      mat_sub(mat_add(scale(Rational(-2 * (r - 1)),
                            mat_add(mul_diag_right(a01, d01), mul_diag_left(d01, a01))),
                      mul_bin_left(nbrs01, mat_sub(a10, scale(Rational(n * (1 - r)), I)))),
              scale(Rational(2 * (k - n) * (r - 1)),
                    mat_add(a10, scale(Rational(k * (r - 1)), I)))),
      mul_diag_left(d01, xpoly));
  Matrix res4 = mat_sub(commutator_bin(nbrs01, innerY), rhs4);
  if (!res4.is_zero()) nonzero.push_back("[Y,[Y*,Y]] substitute");

  if (nonzero.empty()) {
    cert.fail({}, "at least one nonzero residual", "all four residuals vanish",
              "raw generators unexpectedly satisfy the bispectral relations");
  } else {
    for (const auto& name : nonzero) cert.add_note("nonzero residual: " + name);
  }
  return cert;
}

}  // namespace nbj
