#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "twistorfill/disk.hpp"
#include "twistorfill/obstruction.hpp"
#include "twistorfill/psystem.hpp"

namespace twf::io {

using json = nlohmann::ordered_json;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Runtime configuration shared by the CLI commands.  Exact arithmetic is the
// default for the lattice solvers and is rejected for the disk solvers, whose
// data is floating by nature.
struct RunConfig {
    int cutoff = 10;
    double tolerance = 1e-10;
    int band = 128;
    int radial_resolution = 256;
    bool exact = true;
    int threads = 0;  // 0 = hardware choice, capped by TWISTORFILL_THREADS

    fill::Tolerance tol() const { return {exact, tolerance}; }
    int effective_threads() const;
    static RunConfig from_json(const json& j);
    json to_json() const;
};

// Tensor document {schema, fiber, entries:[{K,L,k,l,basis,re,im}]}.  In exact
// mode coefficients may be {num,den} pairs; plain doubles are converted
// exactly (they are dyadic rationals).
json tensor_to_json(const calc::EquivariantTensor& t, bool exact);
calc::EquivariantTensor tensor_from_json(const json& j);

json obstruction_report_to_json(const fill::ObstructionReport& r);
json tangent_description_to_json(const fill::TangentSpaceDescription& d);
json rank_certificate_to_json(const fill::RankCertificate& c);

json disk_function_to_json(const disk::DiskFunction& f);
disk::DiskFunction disk_function_from_json(const json& j);

json rh_problem_to_json(const disk::RHProblem& p);
disk::RHProblem rh_problem_from_json(const json& j);
json rh_solution_to_json(const disk::RHSolution& s);

json fourier_series_to_json(const disk::FourierSeries& s);
disk::FourierSeries fourier_series_from_json(const json& j);

std::string dump_sorted(const json& j);  // deterministic serialization

}  // namespace twf::io
