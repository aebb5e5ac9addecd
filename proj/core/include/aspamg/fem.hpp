/// @file fem.hpp
/// @brief Desk-scale linear-elasticity problem generation: structured
/// hexahedral stiffness assembly, rigid body modes, tetrahedron quality.

#ifndef ASPAMG_FEM_HPP
#define ASPAMG_FEM_HPP

#include "aspamg/dense.hpp"
#include "aspamg/sparse_matrix.hpp"

#include <array>
#include <optional>
#include <vector>

namespace aspamg {

/// Isotropic linear-elastic material.
struct Material {
    double young_modulus = 1.0e6;
    double poisson_ratio = 0.3;

    /// Throws ConfigError unless E > 0 and nu in (-1, 0.5).
    void validate() const;
};

enum class Face { none, x_min, x_max, y_min, y_max, z_min, z_max };

/// Generated problem, already reduced by the clamped face: `stiffness` acts on
/// the free DOFs only (3 per free node, interleaved x/y/z), `coordinates` has
/// one row per free node. `constrained_dofs` lists eliminated DOFs in the
/// original numbering; `element_list` keeps the original connectivity.
struct GeneratedProblem {
    SparseMatrix stiffness;
    DenseBlock coordinates;                       // n_free_nodes x 3
    std::vector<index_t> constrained_dofs;
    std::vector<std::array<index_t, 8>> element_list;
};

/// Trilinear 8-node hexahedral elements on a structured nx x ny x nz grid,
/// 2x2x2 Gauss integration, 3 DOFs per node. Constraints are applied by
/// symmetric row/column elimination. `materials` holds one entry per element
/// (element id = ex + nx*(ey + ny*ez)).
GeneratedProblem assemble_hex_cube(index_t nx, index_t ny, index_t nz, double spacing,
                                   const std::vector<Material>& materials,
                                   Face clamped_face);

/// Uniform-material convenience overload.
GeneratedProblem assemble_hex_cube(index_t nx, index_t ny, index_t nz, double spacing,
                                   const Material& material, Face clamped_face);

/// Unconstrained 24x24 stiffness of one element (exposed for spectral tests).
DenseBlock hex_element_stiffness(double spacing, const Material& material);

struct RigidBodyModes {
    DenseBlock modes;       // 3n x r, orthonormal columns, r <= 6
    bool rank_deficient = false;
};

/// Three unit translations plus three infinitesimal rotations about the
/// coordinate centroid, orthonormalized. Dependent columns (e.g. a single
/// node rotating about itself) are dropped and flagged.
RigidBodyModes rigid_body_modes(const DenseBlock& coordinates);

/// Tetrahedron quality 3 r / R (inradius over circumradius, scaled by the
/// topological dimension); 0 for degenerate input. Always in [0, 1].
double mesh_quality_tet(const std::array<std::array<double, 3>, 4>& vertices);

} // namespace aspamg

#endif // ASPAMG_FEM_HPP
