#pragma once

// The certified gadget (lattice, ell, center y, projection A = (I_r, 0)) and its JSON file format.

#include "ldrs/budget.hpp"
#include "ldrs/gadget/certificate.hpp"
#include "ldrs/gadget/params.hpp"
#include "ldrs/gadget/s2.hpp"
#include "ldrs/lattice/rs_lattice.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ldrs::gadget {

using nlohmann::json;

struct LocallyDenseGadget {
    lattice::RSLattice lattice;
    std::int64_t ell = 0;
    BadCenter center;
    std::size_t r = 0;
    GadgetParams params;
    json certificate;
    bool pass = false;
};

namespace detail {

inline json strings(const std::vector<std::uint64_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(std::to_string(x));
    return a;
}
inline json strings(const std::vector<std::int64_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(std::to_string(x));
    return a;
}
inline json pattern_json(const std::vector<std::uint8_t>& p) {
    std::string s;
    for (auto b : p) s.push_back(b ? '1' : '0');
    return s;
}
inline std::string fixed6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline json params_json(const GadgetParams& g) {
    json flags = json::object();
    for (const auto& [name, ok] : g.feasibility) flags[name] = ok;
    return {{"mode", g.mode},
            {"p", rational_string(g.p)},
            {"epsilon", rational_string(g.epsilon)},
            {"epsilon1", rational_string(g.epsilon1)},
            {"delta", rational_string(g.delta)},
            {"epsilon2", rational_string(g.epsilon2)},
            {"q", std::to_string(g.q)},
            {"k", std::to_string(g.k)},
            {"h", std::to_string(g.h)},
            {"r", std::to_string(g.r)},
            {"alpha_pow_p", rational_string(g.alpha_pow_p)},
            {"ell", std::to_string(g.ell)},
            {"floor_q_pow_epsilon1", std::to_string(g.two_k_floor)},
            {"feasibility", flags},
            {"regime_reached", g.regime_reached}};
}

inline std::int64_t to_i64(const json& j) { return parse_integer(j.get<std::string>()).convert_to<std::int64_t>(); }

inline GadgetParams params_from_json(const json& j) {
    GadgetParams g;
    g.mode = j.at("mode").get<std::string>();
    g.p = parse_rational(j.at("p").get<std::string>());
    g.epsilon = parse_rational(j.at("epsilon").get<std::string>());
    g.epsilon1 = parse_rational(j.at("epsilon1").get<std::string>());
    g.delta = parse_rational(j.at("delta").get<std::string>());
    g.epsilon2 = parse_rational(j.at("epsilon2").get<std::string>());
    g.q = static_cast<std::uint64_t>(to_i64(j.at("q")));
    g.k = to_i64(j.at("k"));
    g.h = to_i64(j.at("h"));
    g.r = to_i64(j.at("r"));
    g.alpha_pow_p = parse_rational(j.at("alpha_pow_p").get<std::string>());
    g.ell = to_i64(j.at("ell"));
    g.two_k_floor = to_i64(j.at("floor_q_pow_epsilon1"));
    for (const auto& [name, ok] : j.at("feasibility").items()) g.feasibility[name] = ok.get<bool>();
    g.regime_reached = j.at("regime_reached").get<bool>();
    return g;
}

inline json short_vector_json(const lattice::ShortVector& v) {
    return {{"plus", strings(v.plus)}, {"minus", strings(v.minus)}, {"vector", strings(v.vector)},
            {"l1", std::to_string(v.l1)}};
}

} // namespace detail

inline json certificate_json(const LocalDensityCertificate& ld, const ProjectionCertificate& pc, const GadgetParams& g) {
    json bp_witnesses = json::array();
    for (const auto& w : ld.min_distance.witnesses) {
        json wj = detail::short_vector_json(w.vector);
        wj["elementary_equal"] = w.elementary_equal;
        bp_witnesses.push_back(wj);
    }
    json members = json::array();
    for (const auto& m : ld.members) members.push_back(detail::strings(m));
    json fibers = json::array();
    for (const auto& f : pc.fibers) {
        json fj{{"pattern", detail::pattern_json(f.pattern)},
                {"weight", std::to_string(f.weight)},
                {"fiber_size", to_decimal(f.fiber_size)},
                {"zstar_count", to_decimal(f.zstar_count)},
                {"witness_verified", f.witness_verified}};
        fj["member"] = f.member ? detail::strings(*f.member) : json(nullptr);
        fibers.push_back(fj);
    }
    const bool pass = ld.pass && pc.pass;
    return {
        {"clause1",
         {{"integrity",
           {{"columns_in_kernel", ld.integrity.columns_in_kernel},
            {"determinant_is_q_pow_k", ld.integrity.determinant_is_q_pow_k},
            {"canonical_form", ld.integrity.canonical_form},
            {"pass", ld.integrity.pass}}},
          {"min_distance",
           {{"radius", std::to_string(ld.min_distance.radius)},
            {"multisets_checked", std::to_string(ld.min_distance.multisets_checked)},
            {"newton_unique_multisets", std::to_string(ld.min_distance.newton_unique_multisets)},
            {"newton_uniqueness", ld.min_distance.newton_uniqueness},
            {"witnesses", bp_witnesses},
            {"pass", ld.min_distance.pass}}},
          {"lambda_pow_p_lower_bound", std::to_string(g.ell)}}},
        {"clause2",
         {{"s2_size", std::to_string(ld.s2_size)},
          {"s2_complete", ld.s2_complete},
          {"members", members},
          {"max_norm_pow_p", to_decimal(ld.max_norm_pow_p)},
          {"norm_bound_alpha_pow_p_times_ell", rational_string(g.alpha_pow_p * g.ell)},
          {"norm_clause", ld.norm_clause},
          {"target_exponent", rational_string(ld.target_exponent)},
          {"target_met", ld.target_met},
          {"target_asserted", ld.target_asserted},
          {"log_ratio", detail::fixed6(ld.log_ratio)},
          {"failure", ld.failure},
          {"pass", ld.pass}}},
        {"projection",
         {{"r", std::to_string(pc.r)},
          {"in_final_range", pc.in_final_range},
          {"fibers", fibers},
          {"fiber_total", to_decimal(pc.fiber_total)},
          {"partition_holds", pc.partition_holds},
          {"surjective", pc.surjective},
          {"failing_pattern", pc.failing_pattern ? detail::pattern_json(*pc.failing_pattern) : json(nullptr)},
          {"pass", pc.pass}}},
        {"pass", pass},
        {"status", pass ? "PASS" : "FAILED"}};
}

struct VerificationRun {
    S2Set s2;
    LocalDensityCertificate local_density;
    ProjectionCertificate projection;
    json certificate;
    bool pass = false;
};

inline VerificationRun run_verification(const lattice::RSLattice& lat, const BadCenter& center, const GadgetParams& g,
                                        unsigned jobs, const Budget& budget) {
    VerificationRun v;
    const auto h = static_cast<std::size_t>(g.h);
    v.s2 = enumerate_s2(lat.parity_check(), center, h, budget);
    v.local_density = verify_local_density(lat, v.s2, g, budget);
    v.projection = verify_projection(lat.parity_check(), center, h, lat.k(), static_cast<std::size_t>(g.r), v.s2, jobs,
                                     budget);
    v.certificate = certificate_json(v.local_density, v.projection, g);
    v.pass = v.local_density.pass && v.projection.pass;
    return v;
}

/// Builds L_{q,k}, the center (canonical unless overridden) and certifies both clauses.
inline LocallyDenseGadget build_gadget(const GadgetParams& g, std::optional<std::vector<std::int64_t>> center_override = {},
                                       unsigned jobs = 1, const Budget& budget = {}) {
    if (g.k < 2) throw UsageError("gadget needs k >= 2");
    auto lat = lattice::build_lattice(g.q, static_cast<std::size_t>(g.k));
    BadCenter center = center_override ? center_from_vector(lat.parity_check(), *center_override)
                                       : canonical_center(lat.parity_check(), static_cast<std::size_t>(g.h));
    auto run = run_verification(lat, center, g, jobs, budget);
    return LocallyDenseGadget{std::move(lat), g.ell, std::move(center), static_cast<std::size_t>(g.r), g,
                              std::move(run.certificate), run.pass};
}

inline json gadget_json(const LocallyDenseGadget& gd) {
    const auto& lat = gd.lattice;
    json rows = json::array();
    for (std::size_t i = 0; i < lat.dimension(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < lat.dimension(); ++j) row.push_back(std::to_string(lat.basis().entry(i, j)));
        rows.push_back(row);
    }
    return {{"schema", "gadget-v1"},
            {"lattice",
             {{"q", std::to_string(lat.q())},
              {"k", std::to_string(lat.k())},
              {"n", std::to_string(lat.dimension())},
              {"det", lat.determinant().str()},
              {"basis", rows}}},
            {"ell", std::to_string(gd.ell)},
            {"center",
             {{"y", detail::strings(gd.center.y)}, {"syndrome", detail::strings(gd.center.u)}, {"canonical", gd.center.canonical}}},
            {"projection", {{"r", std::to_string(gd.r)}, {"q", std::to_string(lat.q())}}},
            {"params", detail::params_json(gd.params)},
            {"certificate", gd.certificate}};
}

inline std::string serialize_gadget(const LocallyDenseGadget& gd) { return gadget_json(gd).dump(2) + "\n"; }

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("write to '" + path + "' failed");
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void serialize_gadget(const LocallyDenseGadget& gd, const std::string& path) {
    write_text_file(path, serialize_gadget(gd));
}

/// Parses a gadget-v1 document. Structural checks only; run reverify_gadget for the clauses.
inline LocallyDenseGadget parse_gadget(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("gadget file: malformed JSON: ") + e.what());
    }
    try {
        if (j.at("schema") != "gadget-v1") throw UsageError("gadget file: unsupported schema");
        const auto& lj = j.at("lattice");
        const auto q = static_cast<std::uint64_t>(detail::to_i64(lj.at("q")));
        const auto k = static_cast<std::size_t>(detail::to_i64(lj.at("k")));
        const auto n = static_cast<std::size_t>(detail::to_i64(lj.at("n")));
        const auto& rows = lj.at("basis");
        if (n != q || rows.size() != n) throw UsageError("gadget file: basis must be q x q");
        std::vector<lattice::Column> cols(n, lattice::Column(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) throw UsageError("gadget file: ragged basis row");
            for (std::size_t c = 0; c < n; ++c) cols[c][i] = detail::to_i64(rows[i][c]);
        }
        lattice::RSLattice lat(lattice::build_parity_check(q, k), lattice::LatticeBasis(std::move(cols)));
        if (lat.determinant() != parse_integer(lj.at("det").get<std::string>()))
            throw VerificationError("gadget file: stored determinant does not match the basis");
        std::vector<std::int64_t> y;
        for (const auto& v : j.at("center").at("y")) y.push_back(detail::to_i64(v));
        BadCenter center = center_from_vector(lat.parity_check(), std::move(y));
        center.canonical = j.at("center").at("canonical").get<bool>();
        std::vector<std::uint64_t> stored_u;
        for (const auto& v : j.at("center").at("syndrome")) stored_u.push_back(static_cast<std::uint64_t>(detail::to_i64(v)));
        if (stored_u != center.u) throw VerificationError("gadget file: stored syndrome does not match y");
        GadgetParams g = detail::params_from_json(j.at("params"));
        const auto r = static_cast<std::size_t>(detail::to_i64(j.at("projection").at("r")));
        const auto ell = detail::to_i64(j.at("ell"));
        json cert = j.at("certificate");
        const bool pass = cert.at("pass").get<bool>();
        return LocallyDenseGadget{std::move(lat), ell, std::move(center), r, std::move(g), std::move(cert), pass};
    } catch (const json::exception& e) {
        throw UsageError(std::string("gadget file: missing or mistyped field: ") + e.what());
    }
}

inline LocallyDenseGadget load_gadget(const std::string& path) { return parse_gadget(read_text_file(path)); }

struct ReverifyReport {
    bool pass = false;            ///< recomputed certificate passes and matches the stored one
    bool certificate_matches = false;
    bool recomputed_pass = false;
    json recomputed;
};

/// Recomputes every clause from the stored lattice, center and parameters.
inline ReverifyReport reverify_gadget(const LocallyDenseGadget& gd, unsigned jobs = 1, const Budget& budget = {}) {
    ReverifyReport rep;
    auto run = run_verification(gd.lattice, gd.center, gd.params, jobs, budget);
    rep.recomputed = run.certificate;
    rep.recomputed_pass = run.pass;
    rep.certificate_matches = run.certificate == gd.certificate && gd.ell == gd.params.ell &&
                              gd.r == static_cast<std::size_t>(gd.params.r);
    rep.pass = rep.recomputed_pass && rep.certificate_matches;
    return rep;
}

} // namespace ldrs::gadget
