#pragma once

#include "ldrs/algebra/modular_matrix.hpp"
#include "ldrs/lattice/basis.hpp"
#include "ldrs/lattice/parity_check.hpp"
#include "ldrs/numeric.hpp"

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ldrs::lattice {

/// L_{q,k} = { v in Z^q : H_q(k) v = 0 mod q }, the integer lift of RS_q(q-k) plus q Z^q.
class RSLattice {
public:
    RSLattice(ParityCheckMatrix h, LatticeBasis basis)
        : h_(std::move(h)), basis_(std::move(basis)), det_(basis_.determinant()) {}

    std::uint64_t q() const noexcept { return h_.q().value(); }
    std::size_t k() const noexcept { return h_.k(); }
    std::size_t dimension() const noexcept { return basis_.dimension(); }
    const ParityCheckMatrix& parity_check() const noexcept { return h_; }
    const LatticeBasis& basis() const noexcept { return basis_; }
    const Integer& determinant() const noexcept { return det_; }

    bool contains(const Column& v) const { return is_zero_syndrome(syndrome(h_, v)); }

private:
    ParityCheckMatrix h_;
    LatticeBasis basis_;
    Integer det_;
};

/// Lifts a generator matrix of the mod-q kernel of H_q(k), stacks q*I, and takes the Hermite normal form.
inline RSLattice build_lattice(std::uint64_t q, std::size_t k) {
    ParityCheckMatrix h = build_parity_check(q, k);
    const auto kernel = algebra::kernel_basis(h.q(), h.matrix());
    std::vector<Column> generators;
    generators.reserve(kernel.size());
    for (const auto& v : kernel) generators.emplace_back(v.begin(), v.end());
    LatticeBasis basis = hermite_normal_form(generators, q, static_cast<std::int64_t>(q));
    return RSLattice(std::move(h), std::move(basis));
}

/// Text export: header "q k n det", then the n x n basis matrix one row per line.
inline void write_lattice(std::ostream& out, const RSLattice& lat) {
    const std::size_t n = lat.dimension();
    out << lat.q() << ' ' << lat.k() << ' ' << n << ' ' << lat.determinant().str() << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << lat.basis().entry(i, j);
        }
        out << '\n';
    }
}

inline std::string lattice_text(const RSLattice& lat) {
    std::ostringstream os;
    write_lattice(os, lat);
    return os.str();
}

/// Parses the text export; the stored determinant must match the basis.
inline RSLattice read_lattice(std::istream& in) {
    std::uint64_t q = 0, k = 0, n = 0;
    std::string det_text;
    if (!(in >> q >> k >> n >> det_text)) throw UsageError("lattice file: malformed header");
    if (n != q) throw UsageError("lattice file: dimension must equal q");
    std::vector<Column> cols(n, Column(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(in >> cols[j][i])) throw UsageError("lattice file: truncated matrix");
    RSLattice lat(build_parity_check(q, k), LatticeBasis(std::move(cols)));
    if (lat.determinant() != parse_integer(det_text))
        throw VerificationError("lattice file: header determinant does not match basis");
    return lat;
}

} // namespace ldrs::lattice
