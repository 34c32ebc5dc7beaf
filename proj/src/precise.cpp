#include "apxnum/precise.hpp"

#include "apxnum/errors.hpp"
#include "mp_linalg.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>

namespace apx {

namespace {

using mpf = boost::multiprecision::mpfr_float;

struct precision_guard {
    unsigned saved;
    explicit precision_guard(int digits10)
        : saved(mpf::default_precision()) {
        mpf::default_precision(static_cast<unsigned>(digits10));
    }
    ~precision_guard() { mpf::default_precision(saved); }
};

mp::Dense<mpf> to_mp(const Eigen::MatrixXd& m) {
    mp::Dense<mpf> out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return out;
}

mpf tolerance(int digits10) {
    mpf t(10);
    return pow(t, -(digits10 - 2));
}

} // namespace

std::vector<double> singular_values_precise(const Eigen::MatrixXd& m, int digits10) {
    if (digits10 < 20) throw domain_error("extended precision below 20 digits is pointless");
    precision_guard guard(digits10);
    const auto sv = mp::jacobi_svd(to_mp(m), tolerance(digits10));
    std::vector<double> out(sv.size());
    for (std::size_t i = 0; i < sv.size(); ++i) out[i] = sv[i].convert_to<double>();
    return out;
}

std::vector<double> singular_values_precise(const Eigen::MatrixXcd& m, int digits10) {
    const Eigen::Index r = m.rows(), c = m.cols();
    Eigen::MatrixXd big(2 * r, 2 * c);
    big.topLeftCorner(r, c) = m.real();
    big.topRightCorner(r, c) = -m.imag();
    big.bottomLeftCorner(r, c) = m.imag();
    big.bottomRightCorner(r, c) = m.real();
    const std::vector<double> doubled = singular_values_precise(big, digits10);
    // each singular value of m appears twice in the realification
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(c));
    for (std::size_t i = 0; i + 1 < doubled.size(); i += 2)
        out.push_back(0.5 * (doubled[i] + doubled[i + 1]));
    return out;
}

std::vector<double> symmetric_eigenvalues_precise(const Eigen::MatrixXd& m, int digits10) {
    if (digits10 < 20) throw domain_error("extended precision below 20 digits is pointless");
    if (m.rows() != m.cols()) throw domain_error("eigenvalues need a square matrix");
    precision_guard guard(digits10);
    mp::Dense<mpf> a = to_mp(m);
    // symmetrize exactly in extended precision
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = i + 1; j < a.cols; ++j) {
            const mpf s = (a(i, j) + a(j, i)) / 2;
            a(i, j) = s;
            a(j, i) = s;
        }
    const auto ev = mp::jacobi_eig(std::move(a), tolerance(digits10));
    std::vector<double> out(ev.size());
    for (std::size_t i = 0; i < ev.size(); ++i) out[i] = ev[i].convert_to<double>();
    return out;
}

} // namespace apx
