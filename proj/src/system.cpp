#include "qbeh/system.hpp"

#include <array>
#include <fstream>

#include <nlohmann/json.hpp>

#include "qbeh/matrix_market.hpp"

namespace qbeh {

using nlohmann::json;

void CircuitParams::validate() const {
    if (n_nodes < 3)
        throw ValidationError("CircuitParams: n_nodes must be >= 3, got " + std::to_string(n_nodes));
    if (!(diode_coefficient > 0.0))
        throw ValidationError("CircuitParams: diode_coefficient must be > 0, got " +
                              std::to_string(diode_coefficient));
}

QbshSystem QbshSystem::make(DenseMatrix a, DenseMatrix f, DenseMatrix g, DenseMatrix m,
                            DenseMatrix b, DenseMatrix c, std::optional<CircuitParams> circuit) {
    const Index n = a.rows();
    auto check_square = [n](const DenseMatrix& blk, const char* name) {
        if (blk.rows() != n || blk.cols() != n)
            throw DimensionError(std::string("QbshSystem: block ") + name + " has shape " +
                                 blk.shape_str() + ", expected " + std::to_string(n) + "x" +
                                 std::to_string(n));
    };
    check_square(a, "A");
    check_square(f, "F");
    check_square(g, "G");
    check_square(m, "M");
    if (b.rows() != n || b.cols() != 1)
        throw DimensionError("QbshSystem: B has shape " + b.shape_str() + ", expected " +
                             std::to_string(n) + "x1");
    if (c.rows() != 1 || c.cols() != n)
        throw DimensionError("QbshSystem: C has shape " + c.shape_str() + ", expected 1x" +
                             std::to_string(n));

    DenseMatrix d(b.eigen() * b.eigen().transpose());
    return QbshSystem{n,
                      std::move(a),
                      std::move(f),
                      std::move(g),
                      std::move(m),
                      std::move(b),
                      std::move(c),
                      std::move(d),
                      std::move(circuit)};
}

QbshSystem QbshSystem::damped(double delta) const {
    QbshSystem out = *this;
    out.a_mat = DenseMatrix(a_mat.eigen() -
                            delta * Eigen::MatrixXd::Identity(n_state, n_state));
    return out;
}

CircuitBlocks transmission_line_blocks(const CircuitParams& p) {
    p.validate();
    const Index n = p.n_nodes;

    // v-states, 0-based: s0 = v1, s_j = v_{j,j+1} for j = 1..n-1.
    // Row formulas with exponentials written as w+1 and constants dropped:
    //   s0':   -s0 -  s1            - w0 -  w1        + u
    //   s1':   -s0 - 2s1 + s2       - w0 -  w1 + w2   + u
    //   sj':    s_{j-1} - 2 s_j + s_{j+1} + w_{j-1} - 2 w_j + w_{j+1}   (2 <= j <= n-2)
    //   s_{n-1}': s_{n-2} - 2 s_{n-1} + w_{n-2} - 2 w_{n-1}
    Eigen::MatrixXd a1 = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd a2 = Eigen::MatrixXd::Zero(n, n);

    a1(0, 0) = -1; a1(0, 1) = -1;
    a2(0, 0) = -1; a2(0, 1) = -1;

    a1(1, 0) = -1; a1(1, 1) = -2;
    a2(1, 0) = -1; a2(1, 1) = -1;
    if (n >= 3) { a1(1, 2) = 1; a2(1, 2) = 1; }

    for (Index j = 2; j <= n - 2; ++j) {
        a1(j, j - 1) = 1; a1(j, j) = -2; a1(j, j + 1) = 1;
        a2(j, j - 1) = 1; a2(j, j) = -2; a2(j, j + 1) = 1;
    }

    a1(n - 1, n - 2) = 1; a1(n - 1, n - 1) = -2;
    a2(n - 1, n - 2) = 1; a2(n - 1, n - 1) = -2;

    Eigen::MatrixXd bv = Eigen::MatrixXd::Zero(n, 1);
    bv(0, 0) = 1;
    bv(1, 0) = 1;

    return CircuitBlocks{DenseMatrix(std::move(a1)), DenseMatrix(std::move(a2)),
                         DenseMatrix(std::move(bv))};
}

QbshSystem build_transmission_line(const CircuitParams& p) {
    const CircuitBlocks blk = transmission_line_blocks(p);
    const Index n = p.n_nodes;
    const Index nn = 2 * n;
    const double a = p.diode_coefficient;

    // w_i = exp(a * s_i) - 1, so w_i' = a (w_i + 1) * s_i'-factor: the w-rows
    // are a times the v-rows, and the quadratic remainder lands in (Gx) o (Fx).
    Eigen::MatrixXd amat = Eigen::MatrixXd::Zero(nn, nn);
    amat.topLeftCorner(n, n) = blk.a1.eigen();
    amat.topRightCorner(n, n) = blk.a2.eigen();
    amat.bottomLeftCorner(n, n) = a * blk.a1.eigen();
    amat.bottomRightCorner(n, n) = a * blk.a2.eigen();

    Eigen::MatrixXd fmat = Eigen::MatrixXd::Zero(nn, nn);
    fmat.bottomLeftCorner(n, n) = a * blk.a1.eigen();
    fmat.bottomRightCorner(n, n) = a * blk.a2.eigen();

    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(nn, 1);
    b.topRows(n) = blk.b_v.eigen();
    b.bottomRows(n) = a * blk.b_v.eigen();

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(nn, nn);
    m.bottomRightCorner(n, n).diagonal() = a * blk.b_v.eigen().col(0);

    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(1, nn);
    c(0, 0) = 1;

    return QbshSystem::make(DenseMatrix(std::move(amat)), DenseMatrix(std::move(fmat)),
                            DenseMatrix::identity(nn), DenseMatrix(std::move(m)),
                            DenseMatrix(std::move(b)), DenseMatrix(std::move(c)), p);
}

DenseMatrix build_h_from_fg(const DenseMatrix& f, const DenseMatrix& g) {
    if (f.rows() != f.cols() || g.rows() != g.cols() || f.rows() != g.rows())
        throw DimensionError("build_h_from_fg: F " + f.shape_str() + " and G " + g.shape_str() +
                             " must be square with equal size");
    const Index n = f.rows();
    if (n * n > kron_entry_budget() / n)
        throw CapacityError("build_h_from_fg: H would need " + std::to_string(n) + "x" +
                            std::to_string(n * n) + " entries, over budget");
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n * n);
    // Row i of H is g_i kron f_i: entry (i, j*n + l) = G(i,j) * F(i,l), which
    // makes H (x kron x) pick up (g_i . x)(f_i . x).
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (Index l = 0; l < n; ++l)
                h(i, j * n + l) = g(i, j) * f(i, l);
    return DenseMatrix(std::move(h));
}

namespace {

constexpr const char* kManifestName = "system.json";

long line_of_offset(const std::string& text, std::size_t byte) {
    long line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

} // namespace

void save_system(const QbshSystem& sys, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    const std::array<std::pair<const char*, const DenseMatrix*>, 6> blocks = {{
        {"A", &sys.a_mat}, {"F", &sys.f_mat}, {"G", &sys.g_mat},
        {"M", &sys.m_mat}, {"B", &sys.b_vec}, {"C", &sys.c_vec},
    }};

    json manifest;
    manifest["n_state"] = sys.n_state;
    json files;
    for (const auto& [name, mat] : blocks) {
        const std::string fname = std::string(name) + ".mtx";
        save_matrix_market(*mat, dir / fname);
        files[name] = fname;
    }
    manifest["blocks"] = files;
    if (sys.circuit) {
        manifest["builder"] = "transmission_line";
        manifest["circuit_params"] = {{"n_nodes", sys.circuit->n_nodes},
                                      {"diode_coefficient", sys.circuit->diode_coefficient}};
    } else {
        manifest["builder"] = "custom";
    }

    std::ofstream os(dir / kManifestName);
    if (!os)
        throw FormatError((dir / kManifestName).string(), 0, "cannot open for writing");
    os << manifest.dump(2) << "\n";
}

QbshSystem load_system(const std::filesystem::path& dir) {
    const std::filesystem::path mpath = dir / kManifestName;
    std::ifstream is(mpath);
    if (!is)
        throw FormatError(mpath.string(), 0, "cannot open for reading");
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());

    json manifest;
    try {
        manifest = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(mpath.string(), line_of_offset(text, e.byte), e.what());
    }

    Index n = 0;
    try {
        n = manifest.at("n_state").get<Index>();
    } catch (const json::exception& e) {
        throw FormatError(mpath.string(), 1, std::string("manifest missing n_state: ") + e.what());
    }

    auto load_block = [&](const char* name) {
        std::string fname;
        try {
            fname = manifest.at("blocks").at(name).get<std::string>();
        } catch (const json::exception& e) {
            throw FormatError(mpath.string(), 1,
                              std::string("manifest missing block entry for ") + name + ": " + e.what());
        }
        return load_matrix_market(dir / fname);
    };

    DenseMatrix a = load_block("A");
    DenseMatrix f = load_block("F");
    DenseMatrix g = load_block("G");
    DenseMatrix m = load_block("M");
    DenseMatrix b = load_block("B");
    DenseMatrix c = load_block("C");

    if (a.rows() != n)
        throw DimensionError("load_system: manifest n_state " + std::to_string(n) +
                             " does not match block A shape " + a.shape_str());

    std::optional<CircuitParams> circuit;
    if (manifest.contains("circuit_params")) {
        CircuitParams p;
        try {
            p.n_nodes = manifest["circuit_params"].at("n_nodes").get<Index>();
            p.diode_coefficient = manifest["circuit_params"].at("diode_coefficient").get<double>();
        } catch (const json::exception& e) {
            throw FormatError(mpath.string(), 1, std::string("bad circuit_params: ") + e.what());
        }
        p.validate();
        circuit = p;
    }

    return QbshSystem::make(std::move(a), std::move(f), std::move(g), std::move(m), std::move(b),
                            std::move(c), circuit);
}

} // namespace qbeh
