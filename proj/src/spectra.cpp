#include "nbj/spectra.hpp"

#include <string>

#include "nbj/errors.hpp"
#include "nbj/orthopoly.hpp"

namespace nbj {

namespace {

std::string bi_str(const BiIndex& ij) {
  return "(" + std::to_string(ij.i) + "," + std::to_string(ij.j) + ")";
}

mpz_class pow_z(long base, long exp) {
  mpz_class out;
  mpz_class b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

}  // namespace

Rational eigenvalue_p(const SchemeParams& params, const BiIndex& ij, const BiIndex& xy) {
  const long r = params.r, k = params.k, n = params.n;
  Rational kraw = krawtchouk(ij.i, xy.i, k - ij.j, r - 1);
  Rational eber = eberlein(ij.j, xy.j, n - xy.i, k - xy.i);
  return Rational(pow_z(r - 1, ij.j)) * kraw * eber;
}

Rational dual_eigenvalue_q(const SchemeParams& params, const BiIndex& ij, const BiIndex& xy) {
  const long r = params.r, k = params.k, n = params.n;
  Rational kraw = krawtchouk(ij.i, xy.i, k - xy.j, r - 1);
  if (kraw.is_zero()) return 0;
  Rational coef(binomial_z(n, ij.i), binomial_z(k, ij.i));
  return coef * kraw * hahn(ij.j, xy.j, n - ij.i, k - ij.i);
}

Rational multiplicity_closed_form(const SchemeParams& params, const BiIndex& xy) {
  const long r = params.r, n = params.n;
  mpz_class diff = binomial_z(n - xy.i, xy.j) - binomial_z(n - xy.i, xy.j - 1);
  return Rational(mpz_class(pow_z(r - 2, xy.i) * binomial_z(n, xy.i) * diff));
}

SpectralData build_spectral(const SchemeParams& params) {
  SpectralData sd;
  sd.params = params;
  sd.domain = Domain::make(params);
  const std::size_t d = sd.domain.size();
  const long r = params.r, k = params.k, n = params.n;
  sd.pos00 = sd.domain.index_of(BiIndex{0, 0});
  sd.pos10 = sd.domain.find(BiIndex{1, 0});
  sd.pos01 = sd.domain.find(BiIndex{0, 1});
  sd.P.assign(d, std::vector<Rational>(d));
  sd.Q.assign(d, std::vector<Rational>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      sd.P[a][b] = eigenvalue_p(params, sd.domain.at(a), sd.domain.at(b));
      sd.Q[a][b] = dual_eigenvalue_q(params, sd.domain.at(a), sd.domain.at(b));
    }
  }
  sd.valencies.resize(d);
  sd.multiplicities.resize(d);
  sd.theta.resize(d);
  sd.mu.resize(d);
  sd.theta_star.resize(d);
  sd.mu_star.resize(d);
  for (std::size_t a = 0; a < d; ++a) {
    sd.valencies[a] = sd.P[a][sd.pos00];
    sd.multiplicities[a] = sd.Q[a][sd.pos00];
    const long x = sd.domain.at(a).i, y = sd.domain.at(a).j;
    sd.theta[a] = Rational(k * (r - 2) - x * (r - 1));
    sd.mu[a] = Rational((r - 1) * ((k - x - y) * (n - k - y) - y));
    sd.theta_star[a] =
        (k == 0) ? Rational(0) : Rational(n, k) * Rational((r - 2) * (k - y) - x * (r - 1));
    sd.mu_star[a] = (y == 0) ? Rational(n - 1)
                             : Rational(n - 1) * (Rational(1) - Rational(n * y) /
                                                                    Rational(k * (n - k)));
  }
  sd.v = Rational(vertex_count(params));
  return sd;
}

std::vector<Matrix> build_idempotents(const AdjacencyFamily& fam, const SpectralData& sd) {
  const std::size_t d = sd.domain.size();
  const std::size_t v = fam.v();
  std::vector<Matrix> out;
  out.reserve(d);
  for (std::size_t mn = 0; mn < d; ++mn) {
    // entries q_mn(class(u,w)) / v, constant on relation classes
    std::vector<Rational> by_class(d);
    for (std::size_t ij = 0; ij < d; ++ij) by_class[ij] = sd.Q[mn][ij] / sd.v;
    out.push_back(Matrix::build(
        v, [&](std::size_t u, std::size_t w) { return by_class[fam.class_of(u, w)]; }));
  }
  return out;
}

Certificate spectral_table_check(const SpectralData& sd) {
  Certificate cert("spectral-tables", sd.params);
  const std::size_t d = sd.domain.size();
  const long r = sd.params.r, k = sd.params.k, n = sd.params.n;

  // P Q = v I: this is the spectral decomposition A_ij = sum p_ij(mn) E_mn
  // expressed in class coordinates.
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Rational acc;
      for (std::size_t m = 0; m < d; ++m) acc += sd.P[a][m] * sd.Q[m][b];
      Rational want = (a == b) ? sd.v : Rational(0);
      if (acc != want) {
        const BiIndex ij = sd.domain.at(a), kl = sd.domain.at(b);
        cert.fail({ij.i, ij.j, kl.i, kl.j}, want.str(), acc.str(), "(P Q)/v not the identity");
      }
    }
  }

  Rational ksum, msum;
  for (std::size_t a = 0; a < d; ++a) {
    const BiIndex xy = sd.domain.at(a);
    ksum += sd.valencies[a];
    msum += sd.multiplicities[a];
    if (sd.P[sd.pos00][a] != Rational(1)) {
      cert.fail({xy.i, xy.j}, "1", sd.P[sd.pos00][a].str(), "p_00(x,y)");
    }
    if (sd.Q[sd.pos00][a] != Rational(1)) {
      cert.fail({xy.i, xy.j}, "1", sd.Q[sd.pos00][a].str(), "q_00(x,y)");
    }
    if (sd.pos10 >= 0 && sd.P[sd.pos10][a] != sd.theta[a]) {
      cert.fail({xy.i, xy.j}, sd.theta[a].str(), sd.P[sd.pos10][a].str(),
                "p_10(x,y) vs theta_xy closed form");
    }
    if (sd.pos01 >= 0 && sd.P[sd.pos01][a] != sd.mu[a]) {
      cert.fail({xy.i, xy.j}, sd.mu[a].str(), sd.P[sd.pos01][a].str(),
                "p_01(x,y) vs mu_xy closed form");
    }
    if (sd.pos10 >= 0 && sd.Q[sd.pos10][a] != sd.theta_star[a]) {
      cert.fail({xy.i, xy.j}, sd.theta_star[a].str(), sd.Q[sd.pos10][a].str(),
                "q_10(x,y) vs theta*_xy closed form");
    }
    if (sd.pos01 >= 0 && sd.Q[sd.pos01][a] != sd.mu_star[a]) {
      cert.fail({xy.i, xy.j}, sd.mu_star[a].str(), sd.Q[sd.pos01][a].str(),
                "q_01(x,y) vs mu*_xy closed form");
    }
    Rational mult = multiplicity_closed_form(sd.params, xy);
    if (mult != sd.multiplicities[a]) {
      cert.fail({xy.i, xy.j}, mult.str(), sd.multiplicities[a].str(),
                "multiplicity closed form vs q_xy(0,0)");
    }
  }
  if (ksum != sd.v) cert.fail({}, sd.v.str(), ksum.str(), "sum of valencies");
  if (msum != sd.v) cert.fail({}, sd.v.str(), msum.str(), "sum of multiplicities");
  return cert;
}

Certificate idempotent_check(const AdjacencyFamily& fam, const SpectralData& sd,
                             const std::vector<Matrix>& idempotents,
                             const IntersectionTable& inter, std::size_t raw_product_limit) {
  Certificate cert("idempotents", sd.params);
  const std::size_t d = sd.domain.size();
  const std::size_t v = fam.v();
  const Rational inv_v = Rational(1) / sd.v;

  // E_00 = J/v, symmetry, sum over the family = I (all entrywise).
  for (std::size_t u = 0; u < v; ++u) {
    for (std::size_t w = 0; w < v; ++w) {
      if (idempotents[sd.pos00].at(u, w) != inv_v) {
        cert.fail({static_cast<long long>(u), static_cast<long long>(w)}, inv_v.str(),
                  idempotents[sd.pos00].at(u, w).str(), "E_00 = J/v");
      }
      Rational sum;
      for (std::size_t mn = 0; mn < d; ++mn) {
        sum += idempotents[mn].at(u, w);
        if (idempotents[mn].at(u, w) != idempotents[mn].at(w, u)) {
          cert.fail({static_cast<long long>(u), static_cast<long long>(w)},
                    idempotents[mn].at(w, u).str(), idempotents[mn].at(u, w).str(),
                    "E_" + bi_str(sd.domain.at(mn)) + " symmetry");
        }
      }
      Rational want = (u == w) ? Rational(1) : Rational(0);
      if (sum != want) {
        cert.fail({static_cast<long long>(u), static_cast<long long>(w)}, want.str(),
                  sum.str(), "sum of idempotents vs identity");
      }
    }
  }

  // trace E_mn = m_mn.
  for (std::size_t mn = 0; mn < d; ++mn) {
    Rational tr = idempotents[mn].trace();
    if (tr != sd.multiplicities[mn]) {
      const BiIndex lbl = sd.domain.at(mn);
      cert.fail({lbl.i, lbl.j}, sd.multiplicities[mn].str(), tr.str(), "trace of idempotent");
    }
  }

  // E_mn E_pq = delta E_mn through the verified product structure: the
  // coefficient of A_ef in the product is
  //   (1/v^2) sum_{ab,cd} q_mn(ab) q_pq(cd) p_{ab,cd}^{ef}.
  for (std::size_t mn = 0; mn < d; ++mn) {
    for (std::size_t pq = 0; pq < d; ++pq) {
      for (std::size_t ef = 0; ef < d; ++ef) {
        Rational acc;
        for (std::size_t ab = 0; ab < d; ++ab) {
          for (std::size_t cd = 0; cd < d; ++cd) {
            if (inter[ab][cd][ef] == 0) continue;
            acc += sd.Q[mn][ab] * sd.Q[pq][cd] * Rational(inter[ab][cd][ef]);
          }
        }
        acc *= inv_v * inv_v;
        Rational want = (mn == pq) ? sd.Q[mn][ef] * inv_v : Rational(0);
        if (acc != want) {
          const BiIndex a = sd.domain.at(mn), b = sd.domain.at(pq), e = sd.domain.at(ef);
          cert.fail({a.i, a.j, b.i, b.j, e.i, e.j}, want.str(), acc.str(),
                    "E_mn E_pq coefficient on A_ef");
        }
      }
    }
  }

  // Raw rational matrix products on small instances.
  if (v <= raw_product_limit) {
    for (std::size_t mn = 0; mn < d; ++mn) {
      for (std::size_t pq = mn; pq < d; ++pq) {
        Matrix prod = mat_mul(idempotents[mn], idempotents[pq]);
        const Matrix& want = idempotents[mn];
        for (std::size_t u = 0; u < v; ++u) {
          for (std::size_t w = 0; w < v; ++w) {
            Rational expect = (mn == pq) ? want.at(u, w) : Rational(0);
            if (prod.at(u, w) != expect) {
              const BiIndex a = sd.domain.at(mn), b = sd.domain.at(pq);
              cert.fail({a.i, a.j, b.i, b.j, static_cast<long long>(u),
                         static_cast<long long>(w)},
                        expect.str(), prod.at(u, w).str(), "raw idempotent product");
            }
          }
        }
      }
    }
    // Spectral decomposition, entrywise.
    for (std::size_t ij = 0; ij < d; ++ij) {
      Matrix acc(v);
      for (std::size_t mn = 0; mn < d; ++mn) {
        acc = mat_add(acc, scale(sd.P[ij][mn], idempotents[mn]));
      }
      if (!(acc == fam.matrices[ij].to_matrix())) {
        const BiIndex lbl = sd.domain.at(ij);
        cert.fail({lbl.i, lbl.j}, "A_" + bi_str(lbl), "sum p_ij(mn) E_mn differs",
                  "raw spectral decomposition");
      }
    }
  }
  return cert;
}

Certificate wilson_duality_check(const SpectralData& sd) {
  Certificate cert("wilson-duality", sd.params);
  const std::size_t d = sd.domain.size();
  for (std::size_t mn = 0; mn < d; ++mn) {
    for (std::size_t ij = 0; ij < d; ++ij) {
      Rational lhs = sd.Q[mn][ij] * sd.valencies[ij];
      Rational rhs = sd.P[ij][mn] * sd.multiplicities[mn];
      if (lhs != rhs) {
        const BiIndex a = sd.domain.at(mn), b = sd.domain.at(ij);
        cert.fail({a.i, a.j, b.i, b.j}, rhs.str(), lhs.str(),
                  "q_mn(ij) k_ij = p_ij(mn) m_mn");
      }
    }
  }
  return cert;
}

namespace {

/// Solves coefficient expansions against a table whose columns are the
/// functions f_mn: table[mn][ab].  For each pair the right-hand side is the
/// pointwise product of two rows.
CoefficientTable expand_products(const std::vector<std::vector<Rational>>& table) {
  const std::size_t d = table.size();
  Matrix system = Matrix::build(d, [&](std::size_t ab, std::size_t mn) { return table[mn][ab]; });
  RationalLU lu(system);
  CoefficientTable out(d, std::vector<std::vector<Rational>>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      std::vector<Rational> rhs(d);
      for (std::size_t ab = 0; ab < d; ++ab) rhs[ab] = table[a][ab] * table[b][ab];
      out[a][b] = lu.solve(rhs);
    }
  }
  return out;
}

}  // namespace

CoefficientTable krein_parameters(const SpectralData& sd) { return expand_products(sd.Q); }

CoefficientTable intersection_numbers_spectral(const SpectralData& sd) {
  return expand_products(sd.P);
}

Certificate krein_check(const SpectralData& sd, const CoefficientTable& krein,
                        const std::vector<Matrix>& idempotents, std::size_t hadamard_limit) {
  Certificate cert("krein-parameters", sd.params);
  const std::size_t d = sd.domain.size();

  for (std::size_t ij = 0; ij < d; ++ij) {
    for (std::size_t kl = 0; kl < d; ++kl) {
      Rational linear_sum;
      for (std::size_t mn = 0; mn < d; ++mn) {
        const Rational& val = krein[ij][kl][mn];
        if (val.sign() < 0) {
          const BiIndex a = sd.domain.at(ij), b = sd.domain.at(kl), c = sd.domain.at(mn);
          cert.fail({a.i, a.j, b.i, b.j, c.i, c.j}, ">= 0", val.str(),
                    "negative Krein parameter");
        }
        if (ij == sd.pos00) {
          Rational want = (kl == mn) ? Rational(1) : Rational(0);
          if (val != want) {
            const BiIndex b = sd.domain.at(kl), c = sd.domain.at(mn);
            cert.fail({0, 0, b.i, b.j, c.i, c.j}, want.str(), val.str(),
                      "q_{00,kl}^{mn} = delta");
          }
        }
        linear_sum += val * sd.multiplicities[mn];
      }
      Rational want = sd.multiplicities[ij] * sd.multiplicities[kl];
      if (linear_sum != want) {
        const BiIndex a = sd.domain.at(ij), b = sd.domain.at(kl);
        cert.fail({a.i, a.j, b.i, b.j}, want.str(), linear_sum.str(),
                  "sum q_{ij,kl}^{mn} m_mn = m_ij m_kl");
      }
    }
  }

  // Raw cross-check on small instances: the Hadamard product of constructed
  // idempotents expands with exactly these coefficients.
  const std::size_t v = idempotents.empty() ? 0 : idempotents.front().dim();
  if (v > 0 && v <= hadamard_limit) {
    const Rational inv_v = Rational(1) / sd.v;
    for (std::size_t ij = 0; ij < d; ++ij) {
      for (std::size_t kl = ij; kl < d; ++kl) {
        Matrix had = hadamard(idempotents[ij], idempotents[kl]);
        Matrix acc(v);
        for (std::size_t mn = 0; mn < d; ++mn) {
          acc = mat_add(acc, scale(krein[ij][kl][mn] * inv_v, idempotents[mn]));
        }
        if (!(had == acc)) {
          const BiIndex a = sd.domain.at(ij), b = sd.domain.at(kl);
          cert.fail({a.i, a.j, b.i, b.j}, "E_ij o E_kl", "Krein expansion differs",
                    "raw Hadamard cross-check");
        }
      }
    }
  }
  return cert;
}

Certificate intersection_cross_check(const SpectralData& sd, const IntersectionTable& inter,
                                     const CoefficientTable& spectral) {
  Certificate cert("intersection-numbers", sd.params);
  const std::size_t d = sd.domain.size();
  for (std::size_t ij = 0; ij < d; ++ij) {
    for (std::size_t kl = 0; kl < d; ++kl) {
      for (std::size_t mn = 0; mn < d; ++mn) {
        if (spectral[ij][kl][mn] != Rational(inter[ij][kl][mn])) {
          const BiIndex a = sd.domain.at(ij), b = sd.domain.at(kl), c = sd.domain.at(mn);
          cert.fail({a.i, a.j, b.i, b.j, c.i, c.j}, std::to_string(inter[ij][kl][mn]),
                    spectral[ij][kl][mn].str(),
                    "combinatorial vs spectral intersection number");
        }
      }
    }
  }
  return cert;
}

}  // namespace nbj
