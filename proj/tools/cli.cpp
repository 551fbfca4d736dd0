// Copyright 2026 The deltastab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "deltastab/chordkit.hpp"
#include "deltastab/collectiveops.hpp"
#include "deltastab/deltaspace.hpp"
#include "deltastab/errors.hpp"
#include "deltastab/stabilizer.hpp"
#include "json.hpp"
#include "render.hpp"

namespace deltastab::cli {

namespace {

class WriteFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw WriteFailure("cannot write " + path);
    }
}

void emit(std::ostream &out, const std::optional<std::string> &path, const std::string &text) {
    if (path) {
        write_file(*path, text);
    } else {
        out << text;
        if (text.empty() || text.back() != '\n') out << '\n';
    }
}

int vdim_cap() {
    const char *env = std::getenv("DELTASTAB_CAP_N");
    if (env == nullptr || *env == '\0') {
        return kDefaultVDeltaCap;
    }
    char *end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1 || value > kMaxQubits) {
        throw ParseError(std::string("DELTASTAB_CAP_N must be an integer in 1..62, got '") + env + "'");
    }
    return static_cast<int>(value);
}

// Either a state document or a coefficient document, told apart by keys.
struct Input {
    std::optional<StateVector> state;
    std::optional<CoefficientMap> coeffs;
};

Input load_input(const std::string &path) {
    const std::string text = read_file(path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(path + ": not valid JSON");
    }
    Input in;
    if (doc.is_object() && doc.contains("terms")) {
        in.coeffs = deserialize_coefficients(text);
    } else {
        in.state = deserialize_state(text);
    }
    return in;
}

std::string format_blocks(const std::vector<std::vector<Label>> &blocks) {
    std::string out;
    for (const auto &block : blocks) {
        if (!out.empty()) out += '|';
        out += '{';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(block[i]);
        }
        out += '}';
    }
    return out;
}

struct Options {
    int m = 0;
    int n = 0;
    std::string format = "text";
    std::string coeff_format = "json";
    std::string pairs;
    std::optional<std::string> out_path;
    std::optional<std::string> input_path;
    std::optional<std::string> svg_path;
    bool ascii = false;
    bool m4 = false;
    bool check = false;
    int trials = 0;
    std::uint64_t seed = 0;
    std::optional<double> tol;
};

int cmd_enumerate(const Options &o, std::ostream &out) {
    if (o.m < 1) {
        throw ParseError("-m must be at least 1");
    }
    const auto diagrams = enumerate_noncrossing(o.m);
    if (o.format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const auto &p : diagrams) {
            list.push_back({{"pairs", format_diagram(p)}, {"minimal_index", minimal_index(p).to_string()}});
        }
        out << nlohmann::json{{"m", o.m}, {"diagrams", std::move(list)}}.dump(2) << '\n';
    } else {
        for (const auto &p : diagrams) {
            out << format_diagram(p) << "  " << minimal_index(p).to_string() << '\n';
        }
    }
    return kOk;
}

int cmd_build(const Options &o, std::ostream &out) {
    emit(out, o.out_path, serialize_state(singlet_product(parse_diagram(o.pairs))));
    return kOk;
}

StateVector state_from(const Options &o) {
    if (o.m4) return m4_state();
    if (!o.input_path) throw ParseError("an input file or --m4 is required");
    Input in = load_input(*o.input_path);
    return in.state ? *in.state : reconstruct(*in.coeffs);
}

int cmd_decompose(const Options &o, std::ostream &out) {
    const CoefficientMap c = decompose(state_from(o), o.tol.value_or(kDefaultResidualTol));
    if (o.coeff_format == "text") {
        for (const auto &[p, coeff] : c.entries()) {
            out << format_diagram(p) << "  " << format_amplitude(coeff) << '\n';
        }
    } else {
        emit(out, o.out_path, serialize_coefficients(c));
    }
    return kOk;
}

int cmd_stab(const Options &o, std::ostream &out) {
    const double tol = o.tol.value_or(kDefaultNullspaceTol);
    std::optional<CoefficientMap> coeffs;
    std::optional<StateVector> state;
    if (o.m4) {
        state = m4_state();
    } else {
        if (!o.input_path) throw ParseError("an input file or --m4 is required");
        Input in = load_input(*o.input_path);
        coeffs = std::move(in.coeffs);
        state = std::move(in.state);
    }
    if (!coeffs) {
        try {
            coeffs = decompose(*state);
        } catch (const NotInVDelta &) {
            // Outside the invariant subspace: dimension only.
        }
    }
    StabilizerReport report = coeffs ? analyze_expansion(*coeffs, tol) : stabilizer_algebra(*state, tol);
    out << "dimension: " << report.dimension
        << ", blocks: " << (report.blocks ? format_blocks(*report.blocks) : std::string("unset"))
        << ", exactly_delta: "
        << (report.exactly_delta ? (*report.exactly_delta ? "true" : "false") : "unset") << '\n';
    try {
        check_consistency(report);
    } catch (const ConsistencyViolation &) {
        out << "consistency: VIOLATION\n";
        throw;
    }
    if (o.check) {
        out << "consistency: " << (report.exactly_delta ? "consistent" : "not applicable") << '\n';
    }
    if (o.trials > 0) {
        const StateVector psi = state ? *state : reconstruct(*coeffs);
        const bool ok = check_delta_invariance(psi, o.trials, kDefaultInvarianceTol, o.seed);
        out << "delta_invariance: " << (ok ? "pass" : "FAIL") << " (" << o.trials << " trials, seed "
            << o.seed << ")\n";
        if (!ok) return kConsistency;
    }
    return kOk;
}

int cmd_star(const Options &o, std::ostream &out) {
    CoefficientMap c(1);
    if (o.m4) {
        c = decompose(m4_state());
    } else {
        if (!o.input_path) throw ParseError("an input file or --m4 is required");
        Input in = load_input(*o.input_path);
        c = in.coeffs ? *in.coeffs : decompose(*in.state);
    }
    out << "star: " << (satisfies_star(c) ? "true" : "false") << '\n';
    return kOk;
}

int cmd_vdim(const Options &o, std::ostream &out) {
    if (o.n < 1) {
        throw ParseError("-n must be at least 1");
    }
    out << v_delta_dimension(o.n, o.tol.value_or(kDefaultKernelTol), vdim_cap()) << '\n';
    return kOk;
}

int cmd_render(const Options &o, std::ostream &out) {
    const PairPartition p = parse_diagram(o.pairs);
    if (o.svg_path) {
        write_file(*o.svg_path, render_svg(p));
    }
    if (o.ascii || !o.svg_path) {
        out << render_ascii(p);
    }
    return kOk;
}

}  // namespace

std::string format_amplitude(Amplitude a) {
    auto is_int = [](double v) { return v == std::trunc(v) && std::abs(v) < 1e15; };
    if (a.imag() == 0.0 && is_int(a.real())) {
        return std::to_string(static_cast<long long>(a.real()));
    }
    char buf[64];
    if (a.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.12g", a.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.12g%+.12gi", a.real(), a.imag());
    }
    return buf;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Chord-diagram basis and stabilizer analysis for rotation-invariant qubit states", "deltastab"};
    app.require_subcommand(1, 1);
    Options o;

    auto *enumerate = app.add_subcommand("enumerate", "List non-crossing diagrams with their minimal indices");
    enumerate->add_option("-m", o.m, "Number of chords")->required();
    enumerate->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto *build = app.add_subcommand("build", "Write the singlet product state of a diagram");
    build->add_option("--pairs", o.pairs, "Diagram such as \"1-3 2-5 4-6\"")->required();
    build->add_option("--out", o.out_path, "Output path (stdout if omitted)");

    auto *decompose_cmd = app.add_subcommand("decompose", "Expand a state in the non-crossing chord basis");
    decompose_cmd->add_option("--state,input", o.input_path, "State JSON file");
    decompose_cmd->add_flag("--m4", o.m4, "Use the built-in M4 state");
    decompose_cmd->add_option("--tol", o.tol, "Relative residual tolerance");
    decompose_cmd->add_option("--format", o.coeff_format, "json or text")->check(CLI::IsMember({"text", "json"}));
    decompose_cmd->add_option("--out", o.out_path, "Output path for JSON (stdout if omitted)");

    auto *stab = app.add_subcommand("stab", "Stabilizer subalgebra dimension and block structure");
    stab->add_option("--input,--state,--coeffs,input", o.input_path, "State or coefficient JSON file");
    stab->add_flag("--m4", o.m4, "Use the built-in M4 state");
    stab->add_option("--tol", o.tol, "Relative singular value threshold");
    stab->add_flag("--check", o.check, "Report the connectivity/dimension consistency verdict");
    stab->add_option("--trials", o.trials, "Random diagonal rotations to check invariance under");
    stab->add_option("--seed", o.seed, "Seed for --trials");

    auto *star = app.add_subcommand("star", "Chord-union connectivity of an expansion");
    star->add_option("--input,--state,--coeffs,input", o.input_path, "State or coefficient JSON file");
    star->add_flag("--m4", o.m4, "Use the built-in M4 state");

    auto *vdim = app.add_subcommand("vdim", "Kernel dimension of J^2 on n qubits");
    vdim->add_option("-n", o.n, "Number of qubits")->required();
    vdim->add_option("--tol", o.tol, "Relative singular value threshold");

    auto *render = app.add_subcommand("render", "Draw a chord diagram");
    render->add_option("--pairs", o.pairs, "Diagram such as \"1-3 2-5 4-6\"")->required();
    render->add_option("--svg", o.svg_path, "Write an SVG drawing to this path");
    render->add_flag("--ascii", o.ascii, "Print a text listing of chords and crossings");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    try {
        if (enumerate->parsed()) return cmd_enumerate(o, out);
        if (build->parsed()) return cmd_build(o, out);
        if (decompose_cmd->parsed()) return cmd_decompose(o, out);
        if (stab->parsed()) return cmd_stab(o, out);
        if (star->parsed()) return cmd_star(o, out);
        if (vdim->parsed()) return cmd_vdim(o, out);
        if (render->parsed()) return cmd_render(o, out);
    } catch (const NotInVDelta &e) {
        err << "not in V_delta: " << e.what() << '\n';
        return kNotInVDelta;
    } catch (const ResourceLimitError &e) {
        err << "error: " << e.what() << '\n';
        return kResourceCap;
    } catch (const ConsistencyViolation &e) {
        err << "consistency violation: " << e.what() << '\n';
        return kConsistency;
    } catch (const WriteFailure &e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace deltastab::cli
