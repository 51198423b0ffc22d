#include "twistorfill/json_io.hpp"

#include <cstdlib>

namespace twf::io {

namespace {
Rat rat_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_number_float()) return Rat(j.get<double>());
    if (j.is_object() && j.contains("num") && j.contains("den")) {
        Rat r(j.at("num").get<long long>());
        long long den = j.at("den").get<long long>();
        if (den == 0) throw SchemaError(std::string(what) + ": zero denominator");
        return r / den;
    }
    throw SchemaError(std::string(what) + ": expected number or {num,den}");
}

json rat_to_json(const Rat& r, bool exact) {
    if (!exact) return json(static_cast<double>(r));
    if (boost::multiprecision::denominator(r) == 1 &&
        boost::multiprecision::numerator(r).convert_to<double>() ==
            static_cast<double>(boost::multiprecision::numerator(r)))
        return json(boost::multiprecision::numerator(r).convert_to<long long>());
    return json{{"num", boost::multiprecision::numerator(r).str()},
                {"den", boost::multiprecision::denominator(r).str()}};
}
}  // namespace

int RunConfig::effective_threads() const {
    int t = threads;
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    if (t <= 0) t = 1;
    if (const char* cap = std::getenv("TWISTORFILL_THREADS")) {
        int c = std::atoi(cap);
        if (c > 0) t = std::min(t, c);
    }
    return t;
}

RunConfig RunConfig::from_json(const json& j) {
    RunConfig c;
    if (j.contains("cutoff")) c.cutoff = j.at("cutoff").get<int>();
    if (j.contains("tol")) c.tolerance = j.at("tol").get<double>();
    if (j.contains("band")) c.band = j.at("band").get<int>();
    if (j.contains("radial")) c.radial_resolution = j.at("radial").get<int>();
    if (j.contains("arith")) {
        std::string a = j.at("arith").get<std::string>();
        if (a != "exact" && a != "float") throw SchemaError("config: arith must be exact|float");
        c.exact = (a == "exact");
    }
    if (j.contains("threads")) c.threads = j.at("threads").get<int>();
    if (c.cutoff < 0 || c.tolerance <= 0 || c.band <= 0 || c.radial_resolution <= 0)
        throw SchemaError("config: cutoff/tol/band/radial must be positive");
    return c;
}

json RunConfig::to_json() const {
    return json{{"cutoff", cutoff},         {"tol", tolerance},
                {"band", band},             {"radial", radial_resolution},
                {"arith", exact ? "exact" : "float"}, {"threads", threads}};
}

json tensor_to_json(const calc::EquivariantTensor& t, bool exact) {
    json entries = json::array();
    const auto& sp = t.spec();
    for (const auto& [key, v] : t.entries()) {
        json e{{"K", key.K}, {"L", key.L}, {"k", key.k}, {"l", key.l},
               {"basis", sp.basis[key.basis].label}};
        e["re"] = rat_to_json(v.re, exact);
        e["im"] = rat_to_json(v.im, exact);
        entries.push_back(std::move(e));
    }
    return json{{"schema", "twistorfill/tensor/1"}, {"fiber", sp.name}, {"entries", entries}};
}

calc::EquivariantTensor tensor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("fiber") || !j.contains("entries"))
        throw SchemaError("tensor document: missing 'fiber' or 'entries'");
    const auto* sp = calc::fiber_by_name(j.at("fiber").get<std::string>());
    if (!sp) throw SchemaError("tensor document: unknown fiber '" +
                               j.at("fiber").get<std::string>() + "'");
    calc::EquivariantTensor t(sp->id);
    int n = 0;
    for (const auto& e : j.at("entries")) {
        ++n;
        auto field = [&](const char* name) -> const json& {
            if (!e.contains(name))
                throw SchemaError("tensor entry " + std::to_string(n) + ": missing field '" +
                                  name + "'");
            return e.at(name);
        };
        int basis = calc::basis_index(sp->id, field("basis").get<std::string>());
        if (basis < 0)
            throw SchemaError("tensor entry " + std::to_string(n) + ": unknown basis label '" +
                              field("basis").get<std::string>() + "' for fiber " + sp->name);
        calc::Key key{field("K").get<int>(), field("L").get<int>(), field("k").get<int>(),
                      field("l").get<int>(), basis};
        t.add(key, CQ{rat_from_json(field("re"), "re"), rat_from_json(field("im"), "im")});
    }
    if (auto err = t.validate())
        throw SchemaError("tensor document: " + *err);
    return t;
}

json obstruction_report_to_json(const fill::ObstructionReport& r) {
    json reps = json::array();
    for (const auto& v : r.reps) {
        json blocking = json::array();
        for (const auto& b : v.blocking)
            blocking.push_back(json{
                {"k", b.k},
                {"l", b.l},
                {"basis", calc::fiber_spec(calc::Fiber::CRDeform).basis[b.basis].label},
                {"re", static_cast<double>(b.value.re)},
                {"im", static_cast<double>(b.value.im)},
                {"abs", b.abs()}});
        reps.push_back(json{{"K", v.K},
                            {"L", v.L},
                            {"case", fill::rep_case_name(v.rep_case)},
                            {"solvable", v.solvable()},
                            {"blocking", blocking}});
    }
    return json{{"schema", "twistorfill/obstruction-report/1"},
                {"solvable", r.solvable},
                {"reps", reps}};
}

json tangent_description_to_json(const fill::TangentSpaceDescription& d) {
    json comps = json::array();
    for (const auto& c : d.components)
        comps.push_back(json{{"part", c.part},
                             {"K", c.K},
                             {"L", c.L},
                             {"multiplicity", c.multiplicity},
                             {"dim", c.dim}});
    return json{{"schema", "twistorfill/tangent-dims/1"},
                {"family", fill::family_name(d.family)},
                {"cutoff", d.cutoff},
                {"components", comps},
                {"total", d.total_dim()}};
}

json rank_certificate_to_json(const fill::RankCertificate& c) {
    return json{{"K", c.K},
                {"L", c.L},
                {"dim_domain", c.dim_domain},
                {"dim_target", c.dim_target},
                {"rank_p", c.rank_p},
                {"dim_ker_compat", c.dim_ker_compat},
                {"svd_gap_p", c.svd_gap_p},
                {"svd_gap_compat", c.svd_gap_compat},
                {"cp_identity", c.cp_identity},
                {"surjective", c.surjective_onto_compatible}};
}

json disk_function_to_json(const disk::DiskFunction& f) {
    json terms = json::array();
    for (const auto& [pq, c] : f.terms())
        terms.push_back(
            json{{"p", pq.first}, {"q", pq.second}, {"re", c.real()}, {"im", c.imag()}});
    return json{{"terms", terms}};
}

disk::DiskFunction disk_function_from_json(const json& j) {
    disk::DiskFunction f;
    if (!j.is_object() || !j.contains("terms"))
        throw SchemaError("disk function: missing 'terms'");
    for (const auto& t : j.at("terms"))
        f.add(t.at("p").get<int>(), t.at("q").get<int>(),
              {t.at("re").get<double>(), t.value("im", 0.0)});
    return f;
}

json rh_problem_to_json(const disk::RHProblem& p) {
    json F = json::array();
    for (int i = 0; i < p.n; ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < p.n; ++j2)
            row.push_back(json{{"re", p.F(i, j2).real()}, {"im", p.F(i, j2).imag()}});
        F.push_back(row);
    }
    json g = json::array(), rho = json::array();
    for (const auto& x : p.g) g.push_back(disk_function_to_json(x));
    for (const auto& x : p.rho) rho.push_back(disk_function_to_json(x));
    return json{{"schema", "twistorfill/rh-problem/1"}, {"n", p.n},     {"band", p.band},
                {"F", F},                               {"g0", disk_function_to_json(p.g0)},
                {"g", g},                               {"rho", rho}};
}

disk::RHProblem rh_problem_from_json(const json& j) {
    disk::RHProblem p;
    if (!j.contains("n")) throw SchemaError("rh problem: missing 'n'");
    p.n = j.at("n").get<int>();
    if (p.n < 0) throw SchemaError("rh problem: n must be nonnegative");
    p.band = j.value("band", 128);
    p.F = Eigen::MatrixXcd::Zero(p.n, p.n);
    if (p.n > 0) {
        const auto& F = j.at("F");
        if (int(F.size()) != p.n) throw SchemaError("rh problem: F must be n x n");
        for (int i = 0; i < p.n; ++i)
            for (int c = 0; c < p.n; ++c)
                p.F(i, c) = {F.at(i).at(c).at("re").get<double>(),
                             F.at(i).at(c).value("im", 0.0)};
    }
    p.g0 = j.contains("g0") ? disk_function_from_json(j.at("g0")) : disk::DiskFunction{};
    for (int i = 0; i < p.n; ++i) {
        p.g.push_back(j.contains("g") ? disk_function_from_json(j.at("g").at(i))
                                      : disk::DiskFunction{});
        p.rho.push_back(j.contains("rho") ? disk_function_from_json(j.at("rho").at(i))
                                          : disk::DiskFunction{});
    }
    return p;
}

json rh_solution_to_json(const disk::RHSolution& s) {
    json f = json::array(), varpi = json::array();
    for (const auto& x : s.f) f.push_back(disk_function_to_json(x));
    for (const auto& x : s.varpi) varpi.push_back(disk_function_to_json(x));
    return json{{"schema", "twistorfill/rh-solution/1"},
                {"f0", disk_function_to_json(s.f0)},
                {"f", f},
                {"varpi", varpi},
                {"pde_residual", s.pde_residual},
                {"boundary_defect", s.boundary_defect},
                {"levi_condition", s.levi_condition},
                {"sigma_min", s.sigma_min}};
}

json fourier_series_to_json(const disk::FourierSeries& s) {
    json modes = json::array();
    for (const auto& [k, v] : s.a)
        modes.push_back(json{{"k", k}, {"re", v.real()}, {"im", v.imag()}});
    return json{{"schema", "twistorfill/fourier/1"},
                {"band", s.band},
                {"modes", modes},
                {"aliasing_warning", s.aliasing_warning}};
}

disk::FourierSeries fourier_series_from_json(const json& j) {
    disk::FourierSeries s;
    if (!j.contains("modes")) throw SchemaError("fourier series: missing 'modes'");
    s.band = j.value("band", 0);
    for (const auto& m : j.at("modes")) {
        int k = m.at("k").get<int>();
        s.a[k] = {m.at("re").get<double>(), m.value("im", 0.0)};
        s.band = std::max(s.band, std::abs(k));
    }
    return s;
}

std::string dump_sorted(const json& j) {
    // ordered_json preserves insertion order; all producers insert keys in a
    // fixed order, so dumping is deterministic
    return j.dump(2) + "\n";
}

}  // namespace twf::io
