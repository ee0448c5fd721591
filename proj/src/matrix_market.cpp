#include "qbeh/matrix_market.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace qbeh {

namespace {

constexpr const char* kHeader = "%%MatrixMarket matrix array real general";

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool parse_double(const std::string& tok, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(tok, &pos);
        return pos == tok.size();
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

void save_matrix_market(const DenseMatrix& m, const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os)
        throw FormatError(path.string(), 0, "cannot open for writing");
    os << kHeader << "\n";
    os << m.rows() << " " << m.cols() << "\n";
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            os << fmt_double(m(i, j)) << "\n";
    os.flush();
    if (!os)
        throw FormatError(path.string(), 0, "write failed");
}

DenseMatrix load_matrix_market(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is)
        throw FormatError(path.string(), 0, "cannot open for reading");

    const std::string fname = path.string();
    std::string line;
    long lineno = 0;

    if (!std::getline(is, line))
        throw FormatError(fname, 1, "empty file");
    ++lineno;
    // Tolerate trailing whitespace/CR in the banner.
    std::string banner = line;
    while (!banner.empty() && std::isspace(static_cast<unsigned char>(banner.back()))) banner.pop_back();
    if (banner != kHeader)
        throw FormatError(fname, lineno, "expected banner \"" + std::string(kHeader) + "\", got \"" + line + "\"");

    // Skip % comment lines, find size line.
    Index rows = 0, cols = 0;
    for (;;) {
        if (!std::getline(is, line))
            throw FormatError(fname, lineno + 1, "missing size line");
        ++lineno;
        if (!line.empty() && line[0] == '%') continue;
        std::istringstream ss(line);
        long long r = 0, c = 0;
        if (!(ss >> r >> c) || r < 1 || c < 1) {
            std::string rest;
            if (ss >> rest) {}
            throw FormatError(fname, lineno, "invalid size line \"" + line + "\"");
        }
        std::string extra;
        if (ss >> extra)
            throw FormatError(fname, lineno, "size line has trailing content \"" + extra + "\"");
        rows = static_cast<Index>(r);
        cols = static_cast<Index>(c);
        break;
    }

    Eigen::MatrixXd m(rows, cols);
    Index count = 0;
    const Index total = rows * cols;
    while (count < total) {
        if (!std::getline(is, line))
            throw FormatError(fname, lineno + 1,
                              "unexpected end of file: got " + std::to_string(count) + " of " +
                                  std::to_string(total) + " entries");
        ++lineno;
        if (!line.empty() && line[0] == '%') continue;
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            double v = 0.0;
            if (!parse_double(tok, v))
                throw FormatError(fname, lineno, "invalid numeric entry \"" + tok + "\"");
            if (count >= total)
                throw FormatError(fname, lineno, "more entries than rows*cols");
            // column-major fill
            m(count % rows, count / rows) = v;
            ++count;
        }
    }

    try {
        return DenseMatrix(std::move(m));
    } catch (const ValidationError& e) {
        throw FormatError(fname, lineno, e.what());
    }
}

} // namespace qbeh
