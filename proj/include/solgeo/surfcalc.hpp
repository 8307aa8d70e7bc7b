#pragma once

// Intrinsic differential operators on chart grids, built from three-point
// central differences only. Non-periodic edges lose one node ring per
// derivative order; those nodes come back masked.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "solgeo/grid.hpp"

namespace solgeo {

/// (grad u)^i = g^{ij} d_j u.
GridField<Vec2> surface_gradient(const GridField<double>& u, const GridField<Mat2>& g);

/// (1/sqrt(det g)) d_i (sqrt(det g) V^i).
GridField<double> surface_divergence(const GridField<Vec2>& v, const GridField<Mat2>& g);

/// surface_divergence(surface_gradient(u)).
GridField<double> laplace_beltrami(const GridField<double>& u, const GridField<Mat2>& g);

/// Gamma[k](i,j) of the induced metric. Throws InvalidArgument if g is not
/// positive definite at a valid node.
GridField<Mat2Pair> induced_christoffels(const GridField<Mat2>& g);

/// (nabla_i A)^k_j = d_i A^k_j + Gamma^k_{ip} A^p_j - Gamma^p_{ij} A^k_p,
/// stored as out[i](k,j).
GridField<Mat2Pair> covariant_derivative_tensor(const GridField<Mat2>& a,
                                                const GridField<Mat2Pair>& gamma);

/// |nabla A|^2 fully contracted with g and g^{-1}.
GridField<double> covariant_derivative_norm2(const GridField<Mat2Pair>& nabla_a,
                                             const GridField<Mat2>& g);

/// (nabla_i V)^k stored as out(k, i).
GridField<Mat2> covariant_derivative_vector(const GridField<Vec2>& v,
                                            const GridField<Mat2Pair>& gamma);

/// g-norm of a vector field: sqrt(V^T g V).
double vector_norm(const Vec2& v, const Mat2& g);
/// g-contracted Frobenius norm of a (1,1) tensor T(k,i): sqrt(tr(T^T g T g^{-1})).
double tensor_norm(const Mat2& t, const Mat2& g);

enum class Coverage {
  ClosedOnly,    ///< throw unless the lattice is doubly periodic
  ValidNodes,    ///< integrate over unmasked nodes (masked quadrature)
};

/// Rectangle rule sum u sqrt(det g) hs ht over valid nodes.
double integrate(const GridField<double>& u, const GridField<Mat2>& g,
                 Coverage coverage = Coverage::ClosedOnly);

struct ResolutionResidual {
  int resolution = 0;
  double h = 0.0;  ///< finer of the two lattice steps
  double max_abs = 0.0;
  double mean_abs = 0.0;
  std::size_t nodes = 0;
};

/// Max/mean of |field| over valid nodes.
ResolutionResidual summarize_residual(const GridField<double>& residual, int resolution);

struct ResidualReport {
  std::string identity;
  std::vector<ResolutionResidual> rows;
  /// orders[n] compares rows[n-1] and rows[n]; empty unless >= 3 rows.
  std::vector<double> orders;

  /// Order from the two finest resolutions, when available.
  std::optional<double> estimated_order() const {
    if (orders.empty()) return std::nullopt;
    return orders.back();
  }
  double max_residual() const;
};

/// Validates that resolutions strictly increase and fills in the orders
/// log(r_a / r_b) / log(h_a / h_b).
ResidualReport make_residual_report(std::string identity, std::vector<ResolutionResidual> rows);

/// Throws InvalidArgument unless every resolution is >= 8 and the list is
/// strictly increasing.
void validate_resolutions(std::span<const int> resolutions);

}  // namespace solgeo
