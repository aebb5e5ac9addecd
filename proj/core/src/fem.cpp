#include "aspamg/fem.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace aspamg {

void Material::validate() const {
    if (!(young_modulus > 0.0) || !std::isfinite(young_modulus))
        throw ConfigError("material: Young modulus must be positive");
    if (!(poisson_ratio > -1.0) || !(poisson_ratio < 0.5))
        throw ConfigError("material: Poisson ratio must lie in (-1, 0.5)");
}

namespace {

Eigen::Matrix<double, 6, 6> elastic_matrix(const Material& m) {
    const double E = m.young_modulus;
    const double nu = m.poisson_ratio;
    const double lambda = E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
    const double mu = E / (2.0 * (1.0 + nu));
    Eigen::Matrix<double, 6, 6> D = Eigen::Matrix<double, 6, 6>::Zero();
    D(0, 0) = D(1, 1) = D(2, 2) = lambda + 2.0 * mu;
    D(0, 1) = D(0, 2) = D(1, 0) = D(1, 2) = D(2, 0) = D(2, 1) = lambda;
    D(3, 3) = D(4, 4) = D(5, 5) = mu;
    return D;
}

// Local node a = ia + 2*ja + 4*ka, reference coordinates in {-1, 1}^3.
constexpr double kNodeSign[8][3] = {
    {-1, -1, -1}, {1, -1, -1}, {-1, 1, -1}, {1, 1, -1},
    {-1, -1, 1},  {1, -1, 1},  {-1, 1, 1},  {1, 1, 1},
};

// Physical shape-function gradients at (xi, eta, zeta) for spacing h.
void shape_gradients(double xi, double eta, double zeta, double h, double grad[8][3]) {
    const double scale = 2.0 / h;  // d(xi)/dx on a regular grid
    for (int a = 0; a < 8; ++a) {
        const double sx = kNodeSign[a][0];
        const double sy = kNodeSign[a][1];
        const double sz = kNodeSign[a][2];
        grad[a][0] = 0.125 * sx * (1.0 + sy * eta) * (1.0 + sz * zeta) * scale;
        grad[a][1] = 0.125 * sy * (1.0 + sx * xi) * (1.0 + sz * zeta) * scale;
        grad[a][2] = 0.125 * sz * (1.0 + sx * xi) * (1.0 + sy * eta) * scale;
    }
}

} // namespace

DenseBlock hex_element_stiffness(double spacing, const Material& material) {
    material.validate();
    if (!(spacing > 0.0)) throw ConfigError("assembly: spacing must be positive");
    const Eigen::Matrix<double, 6, 6> D = elastic_matrix(material);
    const double gp = 1.0 / std::sqrt(3.0);
    const double det_j = spacing * spacing * spacing / 8.0;

    Eigen::Matrix<double, 24, 24> K = Eigen::Matrix<double, 24, 24>::Zero();
    Eigen::Matrix<double, 6, 24> B;
    double grad[8][3];
    for (int gx = 0; gx < 2; ++gx)
        for (int gy = 0; gy < 2; ++gy)
            for (int gz = 0; gz < 2; ++gz) {
                shape_gradients(gp * (2 * gx - 1), gp * (2 * gy - 1), gp * (2 * gz - 1),
                                spacing, grad);
                B.setZero();
                for (int a = 0; a < 8; ++a) {
                    const double dx = grad[a][0], dy = grad[a][1], dz = grad[a][2];
                    B(0, 3 * a + 0) = dx;
                    B(1, 3 * a + 1) = dy;
                    B(2, 3 * a + 2) = dz;
                    B(3, 3 * a + 0) = dy;
                    B(3, 3 * a + 1) = dx;
                    B(4, 3 * a + 1) = dz;
                    B(4, 3 * a + 2) = dy;
                    B(5, 3 * a + 0) = dz;
                    B(5, 3 * a + 2) = dx;
                }
                K += det_j * (B.transpose() * D * B);
            }
    // Mirror the lower triangle so both (i,j) slots hold the same value.
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < i; ++j) K(j, i) = K(i, j);
    return K;
}

GeneratedProblem assemble_hex_cube(index_t nx, index_t ny, index_t nz, double spacing,
                                   const std::vector<Material>& materials,
                                   Face clamped_face) {
    if (nx < 1 || ny < 1 || nz < 1) throw ConfigError("assembly: element counts must be >= 1");
    if (!(spacing > 0.0)) throw ConfigError("assembly: spacing must be positive");
    const index_t n_elements = nx * ny * nz;
    if (static_cast<index_t>(materials.size()) != n_elements)
        throw ConfigError("assembly: one material per element required");
    for (const auto& m : materials) m.validate();

    const index_t mx = nx + 1, my = ny + 1, mz = nz + 1;
    const index_t n_nodes = mx * my * mz;
    auto node_id = [&](index_t i, index_t j, index_t k) { return i + mx * (j + my * k); };

    // Clamp whole nodes on the selected face.
    std::vector<char> clamped(static_cast<std::size_t>(n_nodes), 0);
    for (index_t k = 0; k < mz; ++k)
        for (index_t j = 0; j < my; ++j)
            for (index_t i = 0; i < mx; ++i) {
                bool c = false;
                switch (clamped_face) {
                    case Face::none: break;
                    case Face::x_min: c = (i == 0); break;
                    case Face::x_max: c = (i == nx); break;
                    case Face::y_min: c = (j == 0); break;
                    case Face::y_max: c = (j == ny); break;
                    case Face::z_min: c = (k == 0); break;
                    case Face::z_max: c = (k == nz); break;
                }
                clamped[static_cast<std::size_t>(node_id(i, j, k))] = c ? 1 : 0;
            }

    std::vector<index_t> free_index(static_cast<std::size_t>(n_nodes), -1);
    index_t n_free = 0;
    for (index_t v = 0; v < n_nodes; ++v)
        if (!clamped[static_cast<std::size_t>(v)]) free_index[static_cast<std::size_t>(v)] = n_free++;

    GeneratedProblem problem;
    problem.coordinates.resize(n_free, 3);
    for (index_t k = 0; k < mz; ++k)
        for (index_t j = 0; j < my; ++j)
            for (index_t i = 0; i < mx; ++i) {
                const index_t v = node_id(i, j, k);
                if (clamped[static_cast<std::size_t>(v)]) {
                    for (int c = 0; c < 3; ++c) problem.constrained_dofs.push_back(3 * v + c);
                } else {
                    const index_t f = free_index[static_cast<std::size_t>(v)];
                    problem.coordinates(f, 0) = spacing * double(i);
                    problem.coordinates(f, 1) = spacing * double(j);
                    problem.coordinates(f, 2) = spacing * double(k);
                }
            }

    // Element stiffness matrices are reused across elements sharing a material.
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(n_elements) * 24 * 24);
    DenseBlock Ke;
    Material cached_material;
    bool cache_valid = false;
    problem.element_list.reserve(static_cast<std::size_t>(n_elements));

    for (index_t ez = 0; ez < nz; ++ez)
        for (index_t ey = 0; ey < ny; ++ey)
            for (index_t ex = 0; ex < nx; ++ex) {
                const index_t el = ex + nx * (ey + ny * ez);
                const Material& mat = materials[static_cast<std::size_t>(el)];
                if (!cache_valid || mat.young_modulus != cached_material.young_modulus ||
                    mat.poisson_ratio != cached_material.poisson_ratio) {
                    Ke = hex_element_stiffness(spacing, mat);
                    cached_material = mat;
                    cache_valid = true;
                }
                std::array<index_t, 8> conn;
                for (int a = 0; a < 8; ++a) {
                    const index_t ia = ex + (a & 1);
                    const index_t ja = ey + ((a >> 1) & 1);
                    const index_t ka = ez + ((a >> 2) & 1);
                    conn[static_cast<std::size_t>(a)] = node_id(ia, ja, ka);
                }
                problem.element_list.push_back(conn);
                for (int a = 0; a < 8; ++a) {
                    const index_t va = conn[static_cast<std::size_t>(a)];
                    if (clamped[static_cast<std::size_t>(va)]) continue;
                    for (int b = 0; b < 8; ++b) {
                        const index_t vb = conn[static_cast<std::size_t>(b)];
                        if (clamped[static_cast<std::size_t>(vb)]) continue;
                        for (int ca = 0; ca < 3; ++ca)
                            for (int cb = 0; cb < 3; ++cb)
                                triplets.push_back({3 * free_index[static_cast<std::size_t>(va)] + ca,
                                                    3 * free_index[static_cast<std::size_t>(vb)] + cb,
                                                    Ke(3 * a + ca, 3 * b + cb)});
                    }
                }
            }

    problem.stiffness = SparseMatrix::from_triplets(3 * n_free, 3 * n_free, triplets, true);
    return problem;
}

GeneratedProblem assemble_hex_cube(index_t nx, index_t ny, index_t nz, double spacing,
                                   const Material& material, Face clamped_face) {
    std::vector<Material> materials(static_cast<std::size_t>(nx * ny * nz), material);
    return assemble_hex_cube(nx, ny, nz, spacing, materials, clamped_face);
}

RigidBodyModes rigid_body_modes(const DenseBlock& coordinates) {
    const index_t n = coordinates.rows();
    if (coordinates.cols() != 3) throw DimensionError("rigid_body_modes: coordinates must be n x 3");
    if (!coordinates.allFinite()) throw ConfigError("rigid_body_modes: coordinates must be finite");
    const Eigen::RowVector3d centroid =
        n > 0 ? Eigen::RowVector3d(coordinates.colwise().mean()) : Eigen::RowVector3d::Zero();

    DenseBlock modes = DenseBlock::Zero(3 * n, 6);
    for (index_t v = 0; v < n; ++v) {
        const double dx = coordinates(v, 0) - centroid(0);
        const double dy = coordinates(v, 1) - centroid(1);
        const double dz = coordinates(v, 2) - centroid(2);
        modes(3 * v + 0, 0) = 1.0;
        modes(3 * v + 1, 1) = 1.0;
        modes(3 * v + 2, 2) = 1.0;
        // rotation-x: (0, -dz, dy)
        modes(3 * v + 1, 3) = -dz;
        modes(3 * v + 2, 3) = dy;
        // rotation-y: (dz, 0, -dx)
        modes(3 * v + 0, 4) = dz;
        modes(3 * v + 2, 4) = -dx;
        // rotation-z: (-dy, dx, 0)
        modes(3 * v + 0, 5) = -dy;
        modes(3 * v + 1, 5) = dx;
    }
    RigidBodyModes result;
    result.modes = std::move(modes);
    result.rank_deficient = orthonormalize_columns(result.modes) > 0;
    return result;
}

double mesh_quality_tet(const std::array<std::array<double, 3>, 4>& vertices) {
    using Eigen::Vector3d;
    Vector3d p[4];
    for (int v = 0; v < 4; ++v) p[v] = Vector3d(vertices[v][0], vertices[v][1], vertices[v][2]);

    const Vector3d e1 = p[1] - p[0], e2 = p[2] - p[0], e3 = p[3] - p[0];
    const double volume6 = std::abs(e1.dot(e2.cross(e3)));
    double face_area_sum = 0.0;
    const int faces[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    double longest_edge = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) longest_edge = std::max(longest_edge, (p[a] - p[b]).norm());
    if (longest_edge == 0.0) return 0.0;
    for (const auto& f : faces)
        face_area_sum += 0.5 * ((p[f[1]] - p[f[0]]).cross(p[f[2]] - p[f[0]])).norm();
    // Degenerate (flat) tetrahedron: zero volume at the scale of the element.
    if (volume6 <= 1e-14 * longest_edge * longest_edge * longest_edge || face_area_sum == 0.0)
        return 0.0;
    const double inradius = (volume6 / 6.0) * 3.0 / face_area_sum;

    // Circumcenter c solves 2 (p_i - p_0) . c = |p_i|^2 - |p_0|^2, i = 1..3.
    Eigen::Matrix3d M;
    Vector3d rhs;
    for (int i = 1; i < 4; ++i) {
        M.row(i - 1) = 2.0 * (p[i] - p[0]).transpose();
        rhs(i - 1) = p[i].squaredNorm() - p[0].squaredNorm();
    }
    const Vector3d center = M.fullPivLu().solve(rhs);
    const double circumradius = (center - p[0]).norm();
    if (!(circumradius > 0.0) || !std::isfinite(circumradius)) return 0.0;
    return 3.0 * inradius / circumradius;
}

} // namespace aspamg
