// ldrs: construct, verify, count and export locally dense Reed-Solomon lattice gadgets.
//
// Exit codes: 0 success, 2 usage, 3 capacity, 4 verification failure.

#include "ldrs/algebra.hpp"
#include "ldrs/cli/run_config.hpp"
#include "ldrs/gadget.hpp"
#include "ldrs/lattice.hpp"
#include "ldrs/listdec.hpp"
#include "ldrs/parallel.hpp"
#include "ldrs/varieties.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace {

using nlohmann::json;
using namespace ldrs;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitVerification = 4;

struct Output {
    std::string path;

    /// The document goes to --out when given (summary to stdout), else to stdout (summary to stderr).
    void emit(const std::string& document, const std::string& summary) const {
        if (path.empty()) {
            std::cout << document;
            std::cerr << summary;
        } else {
            gadget::write_text_file(path, document);
            std::cout << summary;
        }
    }
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json strings(const std::vector<std::int64_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(std::to_string(x));
    return a;
}
json strings(const std::vector<std::uint64_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(std::to_string(x));
    return a;
}

std::uint64_t as_q(std::int64_t q) {
    if (q < 0) throw UsageError("q must be positive");
    return algebra::PrimeModulus(static_cast<std::uint64_t>(q)).value();
}

std::size_t as_k(std::int64_t k, std::uint64_t q) {
    if (k <= 1 || static_cast<std::uint64_t>(k) >= q)
        throw UsageError("k must satisfy 1 < k < q, got k=" + std::to_string(k) + " q=" + std::to_string(q));
    return static_cast<std::size_t>(k);
}

// ---- construct ---------------------------------------------------------------------------

int run_construct(std::int64_t q_in, std::int64_t k_in, const Output& out) {
    const auto q = as_q(q_in);
    const auto k = as_k(k_in, q);
    const auto lat = lattice::build_lattice(q, k);
    std::ostringstream summary;
    summary << "det=" << lat.determinant() << "\n"
            << "lambda1_lower_bound=" << 2 * k << "\n";
    out.emit(lattice::lattice_text(lat), summary.str());
    return kExitOk;
}

// ---- mindist / lemma ---------------------------------------------------------------------

json short_vector_json(const lattice::ShortVector& v) {
    return {{"plus", strings(v.plus)}, {"minus", strings(v.minus)}, {"vector", strings(v.vector)},
            {"l1", std::to_string(v.l1)}, {"norm_pow_p", to_decimal(v.norm_pow_p)}};
}

int run_mindist(std::int64_t q_in, std::int64_t k_in, std::int64_t p, std::optional<std::int64_t> radius,
                const Budget& budget, const Output& out) {
    const auto q = as_q(q_in);
    const auto k = as_k(k_in, q);
    if (p < 1) throw UsageError("p must be a positive integer");
    const std::int64_t cap = radius.value_or(static_cast<std::int64_t>(2 * k));
    if (cap < 1) throw UsageError("radius must be positive");
    const auto lat = lattice::build_lattice(q, k);
    const auto r = lattice::min_distance_bruteforce(lat, static_cast<unsigned>(p), static_cast<std::uint64_t>(cap), budget);
    json j{{"schema", "mindist-v1"},
           {"q", std::to_string(q)},
           {"k", std::to_string(k)},
           {"p", std::to_string(p)},
           {"radius_cap", std::to_string(cap)},
           {"found", r.found},
           {"exact", r.exact},
           {"lower_bound_pow_p", to_decimal(r.lower_bound_pow_p)},
           {"multisets_enumerated", std::to_string(r.multisets_enumerated)}};
    j["value_pow_p"] = r.found ? json(to_decimal(r.value_pow_p)) : json(nullptr);
    j["witness"] = r.witness ? short_vector_json(*r.witness) : json(nullptr);
    std::ostringstream s;
    if (r.exact) s << "lambda_pow_p=" << r.value_pow_p << "\n";
    else s << "lambda_pow_p_lower_bound=" << r.lower_bound_pow_p << "\n";
    out.emit(dump(j), s.str());
    return kExitOk;
}

int run_lemma(std::int64_t q_in, std::int64_t k_in, const Budget& budget, const Output& out) {
    const auto q = as_q(q_in);
    const auto k = as_k(k_in, q);
    const auto rep = lattice::verify_bp_lemma(lattice::build_lattice(q, k), budget);
    json w = json::array();
    for (const auto& x : rep.witnesses) {
        json e = short_vector_json(x.vector);
        e["elementary_equal"] = x.elementary_equal;
        w.push_back(e);
    }
    json j{{"schema", "lemma-v1"},
           {"q", std::to_string(q)},
           {"k", std::to_string(k)},
           {"radius", std::to_string(rep.radius)},
           {"multisets_checked", std::to_string(rep.multisets_checked)},
           {"newton_unique_multisets", std::to_string(rep.newton_unique_multisets)},
           {"newton_uniqueness", rep.newton_uniqueness},
           {"witnesses", w},
           {"status", rep.pass ? "PASS" : "FAIL"}};
    out.emit(dump(j), std::string("lemma=") + (rep.pass ? "PASS" : "FAIL") + " radius=" + std::to_string(rep.radius) + "\n");
    return rep.pass ? kExitOk : kExitVerification;
}

// ---- verify / reverify -------------------------------------------------------------------

std::string gadget_summary(const json& cert) {
    std::ostringstream s;
    s << "status=" << cert["status"].get<std::string>() << "\n";
    s << "S2_size=" << cert["clause2"]["s2_size"].get<std::string>() << "\n";
    s << "min_distance=" << (cert["clause1"]["min_distance"]["pass"].get<bool>() ? "PASS" : "FAIL")
      << " radius=" << cert["clause1"]["min_distance"]["radius"].get<std::string>() << "\n";
    for (const auto& f : cert["projection"]["fibers"]) {
        s << "fiber[" << f["pattern"].get<std::string>() << "]=" << f["fiber_size"].get<std::string>();
        if (!f["member"].is_null()) {
            std::string m;
            for (const auto& v : f["member"]) m += (m.empty() ? "" : ",") + v.get<std::string>();
            s << " witness=" << m;
        }
        s << "\n";
    }
    if (!cert["projection"]["failing_pattern"].is_null())
        s << "failing_pattern=" << cert["projection"]["failing_pattern"].get<std::string>() << "\n";
    const auto& failure = cert["clause2"]["failure"].get_ref<const std::string&>();
    if (!failure.empty()) s << "failure=" << failure << "\n";
    return s.str();
}

int run_verify(std::int64_t q_in, std::int64_t k, std::int64_t h, std::int64_t r, const std::string& p_text,
               const std::optional<std::string>& eps_text, const std::optional<std::string>& center_text, unsigned jobs,
               const Budget& budget, const Output& out) {
    const auto q = as_q(q_in);
    as_k(k, q);
    std::optional<Rational> eps;
    if (eps_text) eps = cli::parse_exact(*eps_text, "--eps");
    const auto params = gadget::explicit_params(q, k, h, r, cli::parse_exact(p_text, "--p"), eps);
    std::optional<std::vector<std::int64_t>> center;
    if (center_text) {
        center = cli::parse_list(*center_text, "--center");
        if (center->size() != q) throw UsageError("--center needs q = " + std::to_string(q) + " entries");
    }
    const auto gd = gadget::build_gadget(params, center, jobs, budget);
    out.emit(gadget::serialize_gadget(gd), gadget_summary(gd.certificate));
    return gd.pass ? kExitOk : kExitVerification;
}

int run_reverify(const std::string& path, unsigned jobs, const Budget& budget) {
    gadget::LocallyDenseGadget gd = [&] {
        try {
            return gadget::load_gadget(path);
        } catch (const VerificationError& e) {
            throw VerificationError("'" + path + "': " + e.what());
        }
    }();
    const auto rep = gadget::reverify_gadget(gd, jobs, budget);
    std::cout << "reverify=" << (rep.pass ? "PASS" : "FAIL") << "\n"
              << "certificate_matches=" << (rep.certificate_matches ? "true" : "false") << "\n"
              << gadget_summary(rep.recomputed);
    return rep.pass ? kExitOk : kExitVerification;
}

// ---- count -------------------------------------------------------------------------------

struct Instance {
    std::uint64_t q;
    std::size_t k;
    std::size_t h;
};

std::vector<std::size_t> h_values(const std::optional<std::string>& h_text, std::size_t k) {
    std::vector<std::size_t> out;
    if (!h_text) {
        for (std::size_t h = k + 1; h <= k + 4; ++h) out.push_back(h);
        return out;
    }
    for (auto v : cli::parse_range(*h_text, "--h").values()) {
        if (v < 1) throw UsageError("--h values must be positive");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

int run_count(const std::string& q_text, const std::string& k_text, const std::optional<std::string>& h_text,
              const std::string& e_text, const std::string& format, bool with_dimension, unsigned jobs,
              const Budget& budget, const Output& out) {
    const auto q_range = cli::parse_range(q_text, "--q");
    const auto k_range = cli::parse_range(k_text, "--k");
    std::vector<unsigned> es;
    for (auto e : cli::parse_list(e_text, "--e")) {
        if (e < 1 || e > 3) throw UsageError("--e values must be 1, 2 or 3");
        es.push_back(static_cast<unsigned>(e));
    }
    const bool sweep = q_range.is_range || k_range.is_range || (h_text && h_text->find("..") != std::string::npos);
    std::string fmt = format.empty() ? (sweep ? "csv" : "json") : format;
    if (fmt != "csv" && fmt != "json") throw UsageError("--format must be json or csv");
    if (sweep && fmt == "json") throw UsageError("sweeps are exported as CSV; drop --format json");

    const auto qs = cli::primes_in(q_range);
    std::vector<Instance> instances;
    for (auto kv : k_range.values()) {
        if (kv < 2) throw UsageError("--k values must be >= 2");
        const auto k = static_cast<std::size_t>(kv);
        for (auto h : h_values(h_text, k))
            for (auto q : qs) {
                if (k >= q) {
                    if (!sweep) as_k(kv, q);
                    continue;
                }
                instances.push_back({q, k, h});
            }
    }
    const auto reports = parallel_map(instances.size(), jobs, [&](std::size_t i) {
        return varieties::make_point_count_report(instances[i].q, instances[i].k, instances[i].h, es, budget);
    });

    if (fmt == "json") {
        const auto& r = reports.at(0);
        json j = varieties::to_json(r);
        if (with_dimension)
            j["dimension"] = varieties::to_json(varieties::estimate_dimension(varieties::system_for_prefix(r.q, r.k, r.h), budget));
        std::ostringstream s;
        s << "N=" << r.n << "\nNstar=" << r.n_star << "\nS2_size=" << r.subsets << "\nY=" << r.y
          << "\nsieve_bound=" << r.sieve_bound << "\n";
        for (const auto& [e, row] : r.extensions) s << "count[e=" << e << "]=" << row.count << "\n";
        s << "bounds=" << (r.pass ? "PASS" : "FAIL") << "\n";
        out.emit(dump(j), s.str());
        return r.pass ? kExitOk : kExitVerification;
    }

    // CSV: one row per (q,k,h,e), ordered by (k, h, e, q)
    struct Row {
        std::size_t k, h;
        unsigned e;
        std::uint64_t q;
        std::string line;
    };
    std::vector<Row> rows;
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.pass;
        for (const auto& [e, x] : r.extensions) {
            std::ostringstream l;
            auto flag = [](bool b) { return b ? "1" : "0"; };
            l << r.q << ',' << r.k << ',' << r.h << ',' << e << ',' << x.count << ','
              << (e == 1 ? r.n_star.str() : "") << ',' << x.y << ',' << (e == 1 ? r.sieve_bound.str() : "") << ','
              << x.point_bound.main_term << ',' << flag(x.point_bound.applicable) << ',' << flag(x.point_bound.pass)
              << ',' << flag(x.y_checked && x.y_bound.applicable) << ',' << flag(!x.y_checked || x.y_bound.pass) << ','
              << flag(r.pass);
            rows.push_back({r.k, r.h, e, r.q, l.str()});
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.k, a.h, a.e, a.q) < std::tie(b.k, b.h, b.e, b.q);
    });
    std::string doc = "q,k,h,e,N,Nstar,Y,sieve_bound,main_term,point_bound_applicable,point_bound_pass,"
                      "y_bound_applicable,y_bound_pass,pass\n";
    for (const auto& r : rows) doc += r.line + "\n";
    out.emit(doc, "rows=" + std::to_string(rows.size()) + "\nbounds=" + (all ? "PASS" : "FAIL") + "\n");
    return all ? kExitOk : kExitVerification;
}

// ---- smooth ------------------------------------------------------------------------------

int run_smooth(std::int64_t q_in, std::int64_t k_in, std::int64_t h_in, const std::string& variety, const Budget& budget,
               const Output& out) {
    const auto q = as_q(q_in);
    if (k_in < 1 || static_cast<std::uint64_t>(k_in) >= q) throw UsageError("k must satisfy 1 <= k < q");
    if (h_in < 1) throw UsageError("h must be positive");
    const auto k = static_cast<std::size_t>(k_in);
    const auto h = static_cast<std::size_t>(h_in);
    varieties::ProjectiveVariety kind;
    std::vector<std::uint64_t> targets;
    if (variety == "cone") kind = varieties::ProjectiveVariety::cone;
    else if (variety == "centered") {
        kind = varieties::ProjectiveVariety::centered;
        if (k >= 2) targets = varieties::system_for_prefix(q, k, h).targets;
    } else throw UsageError("--variety must be cone or centered");
    const auto rep = varieties::jacobian_rank_scan(q, k, h, kind, targets, budget);
    std::ostringstream s;
    s << "rational_points=" << rep.rational_points << "\nsingular_points=" << rep.singular_points.size()
      << "\nverdict=" << rep.verdict << " (" << rep.scope << ")\n";
    out.emit(dump(varieties::to_json(rep)), s.str());
    const bool ok = kind == varieties::ProjectiveVariety::centered || rep.singular_points.empty();
    return ok ? kExitOk : kExitVerification;
}

// ---- listdec -----------------------------------------------------------------------------

int run_listdec(std::int64_t q_in, std::int64_t k_in, std::int64_t h_in, const Budget& budget, const Output& out) {
    const auto q = as_q(q_in);
    const auto k = as_k(k_in, q);
    if (h_in < static_cast<std::int64_t>(k) || static_cast<std::uint64_t>(h_in) > q)
        throw UsageError("h must satisfy k <= h <= q");
    const auto h = static_cast<std::size_t>(h_in);
    const auto s2 = gadget::enumerate_s2(q, k, h, budget);
    std::vector<std::uint64_t> support;
    for (std::size_t i = 0; i < h; ++i) support.push_back(i);
    const auto cfg = listdec::build_config(s2, support, q, k, h);
    std::optional<listdec::CloseCodewordCount> m;
    try {
        m = listdec::count_all_close_codewords(cfg.center, q, k, h, budget);
    } catch (const CapacityError&) {
        m.reset();  // reported as the certified lower bound |list|
    }
    std::ostringstream s;
    s << (m ? "M=" + m->m.str() : "M>=" + std::to_string(cfg.entries.size())) << "\n"
      << "list_length=" << cfg.entries.size() << "\n"
      << "ratio=" << rational_string(cfg.ratio) << "\n";
    out.emit(dump(listdec::to_json(cfg, m)), s.str());
    return kExitOk;
}

// ---- params ------------------------------------------------------------------------------

int run_params(const std::string& p_text, const std::string& eps_text, const std::string& q_text, const Output& out) {
    const auto p = cli::parse_exact(p_text, "--p");
    const auto eps = cli::parse_exact(eps_text, "--eps");
    const auto q_range = cli::parse_range(q_text, "--q");
    const auto qs = cli::primes_in(q_range);
    if (!q_range.is_range) {
        const auto g = gadget::select_params(p, eps, qs.at(0));
        std::ostringstream s;
        s << "k=" << g.k << "\nh=" << g.h << "\nr=" << g.r << "\nregime="
          << (g.regime_reached ? "reached" : "asymptotic regime not reached") << "\n";
        out.emit(dump(gadget::detail::params_json(g)), s.str());
        return kExitOk;
    }
    std::string doc = "q,floor_q_pow_epsilon1,k,h,r,regime_reached\n";
    std::uint64_t reached = 0;
    for (auto q : qs) {
        const auto g = gadget::select_params(p, eps, q);
        reached += g.regime_reached;
        doc += std::to_string(q) + "," + std::to_string(g.two_k_floor) + "," + std::to_string(g.k) + "," +
               std::to_string(g.h) + "," + std::to_string(g.r) + "," + (g.regime_reached ? "1" : "0") + "\n";
    }
    out.emit(doc, "rows=" + std::to_string(qs.size()) + "\nregime_reached_rows=" + std::to_string(reached) + "\n");
    return kExitOk;
}

std::string resume_hint(const CapacityError& e) {
    const std::string what = e.what();
    std::string flag = "--max-enum", env = "LDRS_MAX_ENUM";
    if (what.find("state budget") != std::string::npos) flag = "--max-states", env = "LDRS_MAX_STATES";
    else if (what.find("work budget") != std::string::npos) flag = "--max-work", env = "LDRS_MAX_WORK";
    return "resume: rerun with " + flag + " " + std::to_string(e.required()) + " (or set " + env + ")";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ldrs: locally dense Reed-Solomon lattice gadgets, certified by exact computation"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    app.fallthrough();
    unsigned jobs = 1;
    cli::BudgetOverrides overrides;
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--max-states", overrides.max_states, "DP state cap (env LDRS_MAX_STATES)");
    app.add_option("--max-work", overrides.max_work, "work cap (env LDRS_MAX_WORK)");
    app.add_option("--max-enum", overrides.max_enum, "enumeration cap (env LDRS_MAX_ENUM)");

    std::int64_t q = 0, k = 0, h = 0, r = 0, p_int = 1;
    std::string q_text, k_text, e_text = "1", format, variety = "cone", p_text = "1", eps_text, in_path;
    std::optional<std::string> h_text, eps_opt, center_text;
    std::optional<std::int64_t> radius;
    bool with_dimension = false;
    Output out;

    auto* construct = app.add_subcommand("construct", "build L_{q,k} and export its basis");
    construct->add_option("--q", q)->required();
    construct->add_option("--k", k)->required();
    construct->add_option("--out", out.path);

    auto* mindist = app.add_subcommand("mindist", "exhaustive minimum-distance search up to an l1 radius");
    mindist->add_option("--q", q)->required();
    mindist->add_option("--k", k)->required();
    mindist->add_option("--p", p_int, "integer norm index");
    mindist->add_option("--radius", radius, "l1 radius cap (default 2k)");
    mindist->add_option("--out", out.path);

    auto* lemma = app.add_subcommand("lemma", "check that no lattice vector has l1 norm below 2k");
    lemma->add_option("--q", q)->required();
    lemma->add_option("--k", k)->required();
    lemma->add_option("--out", out.path);

    auto* verify = app.add_subcommand("verify", "build and certify a gadget");
    verify->add_option("--q", q)->required();
    verify->add_option("--k", k)->required();
    verify->add_option("--h", h)->required();
    verify->add_option("--r", r)->required();
    verify->add_option("--p", p_text, "norm index, rational");
    verify->add_option("--eps", eps_opt, "epsilon as num/den (default (h-k)/k)");
    verify->add_option("--center", center_text, "comma-separated integer center overriding y");
    verify->add_option("--out", out.path);

    auto* reverify = app.add_subcommand("reverify", "reload a gadget file and recompute its certificate");
    reverify->add_option("--in", in_path)->required();

    auto* count = app.add_subcommand("count", "point counts and bound checks");
    count->add_option("--q", q_text)->required();
    count->add_option("--k", k_text)->required();
    count->add_option("--h", h_text, "h or a..b (default k+1..k+4)");
    count->add_option("--e", e_text, "extension degrees, e.g. 1,2");
    count->add_option("--format", format, "json or csv");
    count->add_flag("--dimension", with_dimension, "add the dimension estimate");
    count->add_option("--out", out.path);

    auto* smooth = app.add_subcommand("smooth", "Jacobian-rank scan of rational points");
    smooth->add_option("--q", q)->required();
    smooth->add_option("--k", k)->required();
    smooth->add_option("--h", h)->required();
    smooth->add_option("--variety", variety, "cone or centered");
    smooth->add_option("--out", out.path);

    auto* listdec = app.add_subcommand("listdec", "explicit list-decoding configuration");
    listdec->add_option("--q", q)->required();
    listdec->add_option("--k", k)->required();
    listdec->add_option("--h", h)->required();
    listdec->add_option("--out", out.path);

    auto* params = app.add_subcommand("params", "floor-rule parameter selection with feasibility flags");
    params->add_option("--p", p_text);
    params->add_option("--eps", eps_text)->required();
    params->add_option("--q", q_text)->required();
    params->add_option("--out", out.path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Budget budget = overrides.resolve();
        if (*construct) return run_construct(q, k, out);
        if (*mindist) return run_mindist(q, k, p_int, radius, budget, out);
        if (*lemma) return run_lemma(q, k, budget, out);
        if (*verify) return run_verify(q, k, h, r, p_text, eps_opt, center_text, jobs, budget, out);
        if (*reverify) return run_reverify(in_path, jobs, budget);
        if (*count) return run_count(q_text, k_text, h_text, e_text, format, with_dimension, jobs, budget, out);
        if (*smooth) return run_smooth(q, k, h, variety, budget, out);
        if (*listdec) return run_listdec(q, k, h, budget, out);
        if (*params) return run_params(p_text, eps_text, q_text, out);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n" << resume_hint(e) << "\n";
        return kExitCapacity;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "io: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
