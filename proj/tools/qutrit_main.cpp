// Command-line front end: state validation, entanglement/entropy analysis,
// family parameter sweeps, figure-data CSV emission, basis conversion and
// seeded random state generation.
//
// Exit codes: 0 success, 1 I/O or parse failure, 2 validation failure,
// 3 domain error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qutrit/density_matrix.hpp"
#include "qutrit/entanglement.hpp"
#include "qutrit/entropy.hpp"
#include "qutrit/families.hpp"
#include "qutrit/matrix_io.hpp"
#include "qutrit/spin_basis.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDomain = 3;
constexpr int kCsvDigits = 12;

struct ToleranceFlags {
    double psd = qutrit::kPsdClamp;
    double trace = 1e-9;

    qutrit::ValidationTolerances to_tolerances() const {
        qutrit::ValidationTolerances tol;
        tol.psd = psd;
        tol.trace = trace;
        return tol;
    }
};

std::string fmt(double v) { return qutrit::format_double(v, kCsvDigits); }

void print_entropy_report(const qutrit::EntropyReport& rep) {
    std::cout << "route=" << qutrit::to_string(rep.route) << "\n";
    std::cout << "s1=" << fmt(rep.s1) << "\n";
    std::cout << "s2=" << fmt(rep.s2) << "\n";
    std::cout << "s12=" << fmt(rep.s12) << "\n";
    std::cout << "iq=" << fmt(rep.iq) << "\n";
}

void print_entanglement_report(const qutrit::EntanglementReport& rep) {
    std::cout << "ppt_eigenvalues=";
    for (size_t k = 0; k < rep.ppt_spectrum.values.size(); ++k) {
        if (k > 0) std::cout << ',';
        std::cout << fmt(rep.ppt_spectrum.values[k]);
    }
    std::cout << "\n";
    std::cout << "negativity_sum=" << fmt(rep.negativity_sum) << "\n";
    std::cout << "negativity_excess=" << fmt(std::max(0.0, rep.negativity_sum - 1.0)) << "\n";
    std::cout << "entangled_by_ppt=" << (rep.entangled_by_ppt ? 1 : 0) << "\n";
    std::cout << "concurrence=" << fmt(rep.concurrence) << "\n";
    std::cout << "lambda_c=";
    for (size_t k = 0; k < rep.lambda_c.size(); ++k) {
        if (k > 0) std::cout << ',';
        std::cout << fmt(rep.lambda_c[k]);
    }
    std::cout << "\n";
}

int run_validate(const std::string& in, const ToleranceFlags& tol) {
    const qutrit::ComplexMatrix m = qutrit::read_matrix_file(in);
    if (m.dim() < 2) {
        std::cerr << "error: a state needs dimension >= 2\n";
        return kExitDomain;
    }
    const qutrit::ValidationReport rep = qutrit::check_state(m, tol.to_tolerances());
    std::printf("hermitian=%s deviation=%s tol=%s\n", rep.hermitian_ok ? "PASS" : "FAIL",
                fmt(rep.hermitian_deviation).c_str(), fmt(rep.hermitian_bound).c_str());
    std::printf("trace=%s deviation=%s tol=%s\n", rep.trace_ok ? "PASS" : "FAIL",
                fmt(rep.trace_deviation).c_str(), fmt(rep.tolerances.trace).c_str());
    std::printf("psd=%s min_eigenvalue=%s tol=-%s\n", rep.psd_ok ? "PASS" : "FAIL",
                fmt(rep.min_eigenvalue).c_str(), fmt(rep.tolerances.psd).c_str());
    std::printf("result=%s\n", rep.ok() ? "PASS" : "FAIL");
    return rep.ok() ? kExitOk : kExitValidation;
}

void write_analyze_csv(const std::string& path, const qutrit::EntropyReport& ent,
                       const qutrit::EntanglementReport* rep) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qutrit::IoError("cannot open " + path + " for writing");
    out << "s1,s2,s12,iq";
    if (rep) out << ",negativity_sum,negativity_excess,concurrence";
    out << "\n";
    out << fmt(ent.s1) << ',' << fmt(ent.s2) << ',' << fmt(ent.s12) << ',' << fmt(ent.iq);
    if (rep)
        out << ',' << fmt(rep->negativity_sum) << ','
            << fmt(std::max(0.0, rep->negativity_sum - 1.0)) << ',' << fmt(rep->concurrence);
    out << "\n";
}

int run_analyze(const std::string& in, const std::string& route_name,
                const std::string& out_csv, const ToleranceFlags& tol) {
    const qutrit::ComplexMatrix m = qutrit::read_matrix_file(in);
    const qutrit::DensityMatrix state = qutrit::validate(m, tol.to_tolerances());
    std::cout << "dim=" << state.dim() << "\n";
    if (state.dim() == 3) {
        if (!route_name.empty() && route_name != "padded-qutrit")
            throw qutrit::DomainError("a 3x3 state supports only the padded-qutrit route");
        const auto ent = qutrit::subadditivity_report(state, qutrit::EntropyRoute::PaddedQutrit);
        const auto rep = qutrit::entanglement_report(state);
        print_entropy_report(ent);
        print_entanglement_report(rep);
        if (!out_csv.empty()) write_analyze_csv(out_csv, ent, &rep);
        return kExitOk;
    }
    if (state.dim() == 4) {
        qutrit::EntropyRoute route = qutrit::EntropyRoute::TwoQubit;
        if (route_name == "padded-6x6") route = qutrit::EntropyRoute::Padded6x6;
        else if (!route_name.empty() && route_name != "two-qubit")
            throw qutrit::DomainError("a 4x4 state supports routes two-qubit and padded-6x6");
        const qutrit::DensityMatrix split_state =
            route == qutrit::EntropyRoute::TwoQubit ? state.with_split(2, 2) : state;
        const auto ent = qutrit::subadditivity_report(split_state, route);
        print_entropy_report(ent);
        const auto conc = qutrit::concurrence(state);
        std::cout << "concurrence=" << fmt(conc.value) << "\n";
        if (!out_csv.empty()) write_analyze_csv(out_csv, ent, nullptr);
        return kExitOk;
    }
    throw qutrit::DomainError("analyze expects a 3x3 or 4x4 state, got " +
                              std::to_string(state.dim()) + "x" + std::to_string(state.dim()));
}

qutrit::GridAxis parse_grid_axis(const std::string& text) {
    // min:max:count
    const size_t c1 = text.find(':');
    const size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("--grid", "expected min:max:count, got '" + text + "'");
    try {
        const double lo = std::stod(text.substr(0, c1));
        const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        const int n = std::stoi(text.substr(c2 + 1));
        return {lo, hi, n};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--grid", "expected min:max:count, got '" + text + "'");
    }
}

enum class CsvColumns { Full, NegativityOnly, ConcurrenceOnly, IqOnly };

void write_sweep_csv(std::ostream& out, const qutrit::SweepTable& table, CsvColumns cols) {
    const bool two_params = table.family == qutrit::Family::Eq22;
    if (two_params) out << "p,b";
    else out << "b";
    switch (cols) {
        case CsvColumns::Full: out << ",iq,negativity_sum,negativity_excess,concurrence"; break;
        case CsvColumns::NegativityOnly: out << ",negativity_sum,negativity_excess"; break;
        case CsvColumns::ConcurrenceOnly: out << ",concurrence"; break;
        case CsvColumns::IqOnly: out << ",iq"; break;
    }
    out << ",skipped\n";
    for (const auto& row : table.rows) {
        out << fmt(row.params[0]);
        if (two_params) out << ',' << fmt(row.params[1]);
        const auto cell = [&](double v) {
            out << ',';
            if (!row.skipped) out << fmt(v);
        };
        switch (cols) {
            case CsvColumns::Full:
                cell(row.iq);
                cell(row.negativity_sum);
                cell(std::max(0.0, row.negativity_sum - 1.0));
                cell(row.concurrence);
                break;
            case CsvColumns::NegativityOnly:
                cell(row.negativity_sum);
                cell(std::max(0.0, row.negativity_sum - 1.0));
                break;
            case CsvColumns::ConcurrenceOnly:
                cell(row.concurrence);
                break;
            case CsvColumns::IqOnly:
                cell(row.iq);
                break;
        }
        out << ',' << (row.skipped ? 1 : 0) << "\n";
    }
}

void write_csv_file(const std::string& path, const qutrit::SweepTable& table, CsvColumns cols) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qutrit::IoError("cannot open " + path + " for writing");
    write_sweep_csv(out, table, cols);
    if (!out) throw qutrit::IoError("write failed: " + path);
}

int run_sweep_cmd(const std::string& family_name, const std::vector<std::string>& grid_flags,
                  const std::string& out_path) {
    const qutrit::Family family =
        family_name == "eq16" ? qutrit::Family::Eq16 : qutrit::Family::Eq22;
    std::vector<std::vector<double>> axes;
    for (const auto& g : grid_flags) axes.push_back(qutrit::grid_points(parse_grid_axis(g)));
    const qutrit::SweepTable table = qutrit::sweep(family, axes);

    if (family == qutrit::Family::Eq22) {
        int outside_box = 0;
        for (const auto& row : table.rows)
            if (!row.skipped && !qutrit::eq22_in_printed_box(row.params[0], row.params[1]))
                ++outside_box;
        if (outside_box > 0)
            std::cerr << "note: " << outside_box
                      << " valid grid points lie outside the reference plotting box"
                         " (0 < p < 0.5, 2p^2 - p < b < 0)\n";
    }

    if (out_path.empty()) write_sweep_csv(std::cout, table, CsvColumns::Full);
    else write_csv_file(out_path, table, CsvColumns::Full);
    return kExitOk;
}

int run_figure(const std::string& preset, const std::vector<double>& b_values,
               const std::string& out_path) {
    qutrit::SweepTable table;
    CsvColumns cols;
    if (preset == "fig1") {
        table = qutrit::sweep(qutrit::Family::Eq16,
                              {qutrit::grid_points({-1.0, 0.5, 301})});
        cols = CsvColumns::IqOnly;
    } else if (preset == "fig2" || preset == "fig3") {
        if (b_values.empty())
            throw qutrit::DomainError(preset + " needs --b-values (the plotted b list)");
        // 301 p samples strictly inside (0, 0.5).
        std::vector<double> p_axis;
        p_axis.reserve(301);
        for (int i = 1; i <= 301; ++i) p_axis.push_back(0.5 * i / 302.0);
        table = qutrit::sweep(qutrit::Family::Eq22, {p_axis, b_values});
        // Figure reproduction clips to the reference plotting box.
        for (auto& row : table.rows)
            if (!row.skipped && !qutrit::eq22_in_printed_box(row.params[0], row.params[1]))
                row.skipped = true;
        cols = preset == "fig2" ? CsvColumns::NegativityOnly : CsvColumns::ConcurrenceOnly;
    } else {
        throw qutrit::DomainError("unknown figure preset '" + preset +
                                  "' (expected fig1, fig2 or fig3)");
    }
    if (out_path.empty()) write_sweep_csv(std::cout, table, cols);
    else write_csv_file(out_path, table, cols);
    return kExitOk;
}

int run_basis(const std::string& in, const std::string& to, bool truncate, bool renormalize,
              const std::string& out_path, const ToleranceFlags& tol) {
    const qutrit::ComplexMatrix m = qutrit::read_matrix_file(in);
    const qutrit::DensityMatrix state = qutrit::validate(m, tol.to_tolerances());
    if (state.dim() != 4)
        throw qutrit::DomainError("basis conversion expects a 4x4 state, got " +
                                  std::to_string(state.dim()) + "x" +
                                  std::to_string(state.dim()));

    qutrit::ComplexMatrix result(4);
    if (to == "g") {
        const qutrit::DensityMatrix g = qutrit::to_g_basis(state);
        if (truncate) {
            const auto cut = qutrit::symmetric_truncation(g, renormalize);
            std::cout << "singlet_weight=" << fmt(cut.singlet_weight) << "\n";
            result = cut.matrix;
        } else {
            result = g.matrix();
        }
    } else if (to == "e") {
        // Input is read as a g-basis state here.
        qutrit::DensityMatrix g = state;
        if (truncate) {
            const auto cut = qutrit::symmetric_truncation(g, renormalize);
            std::cout << "singlet_weight=" << fmt(cut.singlet_weight) << "\n";
            if (!renormalize) {
                // Sub-trace matrices cannot re-validate; convert directly.
                const auto& c = qutrit::coupling_basis_matrix();
                result = c * cut.matrix * qutrit::adjoint(c);
                qutrit::write_matrix_file(out_path, result);
                return kExitOk;
            }
            g = qutrit::validate(cut.matrix);
        }
        result = qutrit::to_e_basis(g).matrix();
    } else {
        throw qutrit::DomainError("--to must be g or e");
    }
    qutrit::write_matrix_file(out_path, result);
    return kExitOk;
}

int run_random(int dim, int count, std::uint64_t seed, const std::string& prefix) {
    for (int k = 0; k < count; ++k) {
        const qutrit::DensityMatrix state =
            qutrit::random_density(dim, seed + static_cast<std::uint64_t>(k));
        char suffix[16];
        std::snprintf(suffix, sizeof(suffix), "%03d", k);
        const std::string path = prefix + suffix + ".mat";
        qutrit::write_matrix_file(path, state.matrix());
        std::cout << "file=" << path << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement diagnostics for qutrit states via even-dimensional "
                 "zero-padding: entropies, subadditivity information, PPT negativity "
                 "and spin-flip concurrence"};
    app.require_subcommand(1);

    ToleranceFlags tol;
    std::string in_path, out_path;

    auto* validate_cmd = app.add_subcommand("validate", "check Hermiticity, trace and positivity");
    validate_cmd->add_option("--in", in_path, "matrix file")->required();
    validate_cmd->add_option("--tol-psd", tol.psd, "eigenvalue clamp tolerance");
    validate_cmd->add_option("--tol-trace", tol.trace, "trace deviation tolerance");

    std::string route;
    auto* analyze_cmd = app.add_subcommand("analyze", "entropy and entanglement report");
    analyze_cmd->add_option("--in", in_path, "matrix file")->required();
    analyze_cmd->add_option("--route", route,
                            "entropy route for 4x4 states: two-qubit or padded-6x6");
    analyze_cmd->add_option("--out", out_path, "optional CSV output");
    analyze_cmd->add_option("--tol-psd", tol.psd, "eigenvalue clamp tolerance");
    analyze_cmd->add_option("--tol-trace", tol.trace, "trace deviation tolerance");

    std::string family_name;
    std::vector<std::string> grid_flags;
    auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep to CSV");
    sweep_cmd->add_option("--family", family_name, "eq16 or eq22")
        ->required()
        ->check(CLI::IsMember({"eq16", "eq22"}));
    sweep_cmd->add_option("--grid", grid_flags, "axis as min:max:count, repeat per axis")
        ->required();
    sweep_cmd->add_option("--out", out_path, "CSV path (stdout when omitted)");

    std::string preset;
    std::vector<double> b_values;
    auto* figure_cmd = app.add_subcommand("figure", "figure-data presets");
    figure_cmd->add_option("preset", preset, "fig1, fig2 or fig3")->required();
    figure_cmd->add_option("--b-values", b_values, "b values for fig2/fig3")->delimiter(',');
    figure_cmd->add_option("--out", out_path, "CSV path (stdout when omitted)");

    std::string to_basis = "g";
    bool truncate = false, renormalize = false;
    auto* basis_cmd = app.add_subcommand("basis", "triplet/singlet basis conversion");
    basis_cmd->add_option("--in", in_path, "matrix file")->required();
    basis_cmd->add_option("--to", to_basis, "target basis: g or e (default g)");
    basis_cmd->add_flag("--truncate", truncate, "zero the singlet row/column");
    basis_cmd->add_flag("--renormalize", renormalize, "rescale after truncation");
    basis_cmd->add_option("--out", out_path, "output matrix file")->required();
    basis_cmd->add_option("--tol-psd", tol.psd, "eigenvalue clamp tolerance");
    basis_cmd->add_option("--tol-trace", tol.trace, "trace deviation tolerance");

    int dim = 3, count = 1;
    std::uint64_t seed = 1;
    auto* random_cmd = app.add_subcommand("random", "write seeded random states");
    random_cmd->add_option("--dim", dim, "state dimension (2..8)")->required();
    random_cmd->add_option("--count", count, "number of states");
    random_cmd->add_option("--seed", seed, "base seed; file k uses seed+k");
    random_cmd->add_option("--out", out_path, "output path prefix")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitIo;
    }

    try {
        if (validate_cmd->parsed()) return run_validate(in_path, tol);
        if (analyze_cmd->parsed()) return run_analyze(in_path, route, out_path, tol);
        if (sweep_cmd->parsed()) return run_sweep_cmd(family_name, grid_flags, out_path);
        if (figure_cmd->parsed()) return run_figure(preset, b_values, out_path);
        if (basis_cmd->parsed())
            return run_basis(in_path, to_basis, truncate, renormalize, out_path, tol);
        if (random_cmd->parsed()) return run_random(dim, count, seed, out_path);
    } catch (const qutrit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qutrit::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qutrit::NotHermitian& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const qutrit::TraceNotOne& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const qutrit::NotPSD& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const qutrit::NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const qutrit::Error& e) {
        // Domain, dimension, split, truncation and grid problems.
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
