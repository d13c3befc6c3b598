#pragma once

// Test-only reference computations. Each one takes a deliberately different
// route from the library code it is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "qmeur/linalg.hpp"
#include "qmeur/measure.hpp"
#include "qmeur/qstate.hpp"

namespace qmeur::oracle {

inline double sq_overlap(const MeasurementBasis& a, std::size_t k, const MeasurementBasis& b, std::size_t l) {
  return std::norm(inner(a.vector(k), b.vector(l)));
}

/// Channel constant by exhaustive enumeration of every index tuple
/// (k_1, ..., k_m), nested loops written out recursively.
inline double channel_constant_b_brute(const std::vector<MeasurementBasis>& bases) {
  const std::size_t m = bases.size();
  const std::size_t d = bases.front().dim();
  double best = 0.0;
  for (std::size_t km = 0; km < d; ++km) {
    std::vector<std::size_t> k(m, 0);
    k[m - 1] = km;
    double total = 0.0;
    // Enumerate k_2..k_{m-1}.
    std::function<void(std::size_t)> recurse = [&](std::size_t pos) {
      if (pos + 1 >= m) {
        double first = 0.0;
        for (std::size_t k1 = 0; k1 < d; ++k1) first = std::max(first, sq_overlap(bases[0], k1, bases[1], k[1]));
        double chain = first;
        for (std::size_t i = 1; i + 1 < m; ++i) chain *= sq_overlap(bases[i], k[i], bases[i + 1], k[i + 1]);
        total += chain;
        return;
      }
      for (std::size_t v = 0; v < d; ++v) {
        k[pos] = v;
        recurse(pos + 1);
      }
    };
    if (m == 2) {
      recurse(m);  // no free indices
    } else {
      recurse(1);
    }
    best = std::max(best, total);
  }
  return best;
}

/// Partial trace over everything but subsystem `keep` of a bipartite or
/// tripartite register via explicit sums over basis kets <i| (x) <j|.
inline ComplexMatrix reduced_by_projection(const DensityMatrix& rho, std::size_t keep) {
  const auto& dims = rho.reg().dims();
  const std::size_t dk = dims[keep];
  ComplexMatrix out(dk, dk);
  const std::size_t total = rho.reg().total();
  // Decompose a flat index into digits.
  auto digits = [&](std::size_t flat) {
    std::vector<std::size_t> dg(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
      dg[i] = flat % dims[i];
      flat /= dims[i];
    }
    return dg;
  };
  for (std::size_t r = 0; r < total; ++r) {
    for (std::size_t c = 0; c < total; ++c) {
      const auto dr = digits(r);
      const auto dc = digits(c);
      bool same_rest = true;
      for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i != keep && dr[i] != dc[i]) same_rest = false;
      }
      if (same_rest) out(dr[keep], dc[keep]) += rho.matrix()(r, c);
    }
  }
  return out;
}

/// Post-measurement state on subsystem 0 of a bipartite state as the literal
/// sum over projectors (|psi_k><psi_k| (x) I) rho (|psi_k><psi_k| (x) I).
inline ComplexMatrix dephase_by_projectors(const DensityMatrix& rho, const MeasurementBasis& basis) {
  const std::size_t rest = rho.reg().total() / basis.dim();
  ComplexMatrix out(rho.dim(), rho.dim());
  for (std::size_t k = 0; k < basis.dim(); ++k) {
    const ComplexMatrix lifted = kron(ComplexMatrix::outer(basis.vector(k)), ComplexMatrix::identity(rest));
    out += lifted * rho.matrix() * lifted;
  }
  return out;
}

inline double shannon_direct(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0) h -= x * std::log2(x);
  }
  return h;
}

}  // namespace qmeur::oracle
