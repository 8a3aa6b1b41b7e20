#pragma once

// Discrete energy
//
//   J(u) = (2/N) ( sum_i c_i w_i |(L u)_i|^{N/2} + c_i |(G u)_i|^{N/2}
//                  + c_i |u_i|^{N/2} ) - sum_i c_i F(u_i)
//
// on nodal vectors with the clamped end u = u' = 0 at R (last two nodes
// fixed to zero). L and G are the finite-difference operators, c_i the
// nodal volume weights; |s|^{N/2} is smoothed as (s^2 + eps)^{N/4} minus
// its value at s = 0, so the gradient exists for every even N while the
// zero vector keeps zero energy (exact s^2 at N = 4). The Gateaux
// derivative is assembled exactly, so gradient checks and weak residuals are
// limited only by round-off.

#include <vector>

#include "adamslab/functional.hpp"
#include "adamslab/nonlinearity.hpp"
#include "adamslab/operators.hpp"
#include "adamslab/quadrature.hpp"
#include "adamslab/weight.hpp"

namespace adamslab {

struct EnergyModel {
  std::shared_ptr<const RadialGrid> grid;
  WeightSpec weight;
  int N = 4;
  double eps_reg = 1e-12;
  std::vector<double> c;        // nodal volume weights
  std::vector<double> w_node;   // weight at nodes
  std::vector<StencilRow> lap;  // Laplacian stencil
  std::vector<StencilRow> grad; // gradient stencil
  std::size_t free_count = 0;   // unknowns: nodes 0 .. free_count-1

  std::size_t size() const { return grid->size(); }
};
EnergyModel make_energy_model(std::shared_ptr<const RadialGrid> grid,
                              const WeightSpec& w);

struct EnergyState {
  NormBreakdown norm_part;  // the three |.|^{N/2} integrals (plain sum)
  double f_integral = 0.0;  // sum c_i F(u_i)
  double j = 0.0;           // (2/N) norm_part.total - f_integral
};
EnergyState energy(const EnergyModel& m, const std::vector<double>& u,
                   const NonlinearitySpec& nl);

// The three |.|^{N/2} integrals of a nodal vector alone, no nonlinearity.
NormBreakdown nodal_norm(const EnergyModel& m, const std::vector<double>& u);

// Exact discrete Gateaux derivative dJ(u)[e_i] for every node; clamped
// entries are zero.
std::vector<double> energy_gradient(const EnergyModel& m,
                                    const std::vector<double>& u,
                                    const NonlinearitySpec& nl);

// E-norms of the nodal hat functions (and of u itself) used to scale the
// weak residual.
std::vector<double> hat_norms(const EnergyModel& m);

// max over the test set {hats, u} of |dJ(u)[phi]| / ||phi||_E.
struct WeakResidual {
  double max_rel = 0.0;
  std::size_t argmax = 0;   // size() means the test function was u itself
  double against_u = 0.0;   // |dJ(u)[u]| / ||u||_E
};
WeakResidual weak_residual(const EnergyModel& m, const std::vector<double>& u,
                           const NonlinearitySpec& nl);

}  // namespace adamslab
