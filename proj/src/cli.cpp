#include "netgeom/cli.hpp"

#include <fstream>

#include "netgeom/compiler.hpp"
#include "netgeom/io.hpp"
#include "netgeom/svg.hpp"

namespace netgeom::cli {

std::optional<Command> parse_command(std::string_view name) {
    if (name == "compile") return Command::Compile;
    if (name == "verify") return Command::Verify;
    if (name == "regions") return Command::Regions;
    if (name == "poset") return Command::Poset;
    if (name == "gp-check") return Command::GpCheck;
    if (name == "mergers") return Command::Mergers;
    if (name == "plot") return Command::Plot;
    return std::nullopt;
}

int verify_exit_code(const VerifyReport& report) { return report.mismatches.empty() ? kExitOk : kExitMismatch; }

namespace {

void validate(const RunConfig& c) {
    if (!(c.tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "--tol must be positive");
    if (!(c.margin >= c.tol)) throw Error(ErrorKind::InvalidArgument, "--margin must be at least --tol");
    if (c.samples < 1) throw Error(ErrorKind::InvalidArgument, "--samples must be at least 1");
    if (!(c.box > 0.0)) throw Error(ErrorKind::InvalidArgument, "--box must be positive");
    if (!(c.sample_box > 0.0)) throw Error(ErrorKind::InvalidArgument, "--sample-box must be positive");
}

EnumerationOptions enumeration(const RunConfig& c) {
    EnumerationOptions o;
    o.tol = c.tol;
    o.box = c.box;
    o.epsilon = std::max(kDefaultEpsilon, c.tol);
    return o;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (!c.output_path) {
        out << text;
        return;
    }
    std::ofstream f(*c.output_path, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + *c.output_path);
    f << text;
}

int dispatch(const RunConfig& c, std::ostream& out) {
    const std::string input = io::read_file(c.input_path);
    switch (c.command) {
    case Command::Compile: {
        const auto N = parse_network(input);
        emit(c, io::dump(io::to_json(compile(N, enumeration(c)))), out);
        return kExitOk;
    }
    case Command::Verify: {
        const auto N = parse_network(input);
        const auto C = compile(N, enumeration(c));
        VerifyOptions v;
        v.samples = c.samples;
        v.margin = c.margin;
        v.sample_box = c.sample_box;
        v.seed = c.seed;
        v.tol = c.tol;
        const auto report = verify(N, C, v);
        emit(c, io::dump(io::to_json(report)), out);
        return verify_exit_code(report);
    }
    case Command::Mergers: {
        const auto N = parse_network(input);
        const auto C = compile(N, enumeration(c));
        io::json pairs = io::json::array();
        for (const auto& [a, b] : inseparable_pairs(C)) pairs.push_back({io::label_to_json(a), io::label_to_json(b)});
        emit(c, io::dump({{"pairs", pairs}}), out);
        return kExitOk;
    }
    case Command::Regions: {
        const auto A = io::parse_arrangement(input);
        emit(c, io::dump(io::to_json(enumerate_regions(A, enumeration(c)))), out);
        return kExitOk;
    }
    case Command::Poset: {
        const auto A = io::parse_arrangement(input);
        const auto P = intersection_poset(A, c.tol);
        emit(c, io::dump(io::to_json(P, hasse_edges(P))), out);
        return kExitOk;
    }
    case Command::GpCheck: {
        const auto A = io::parse_arrangement(input);
        const auto regions = enumerate_regions(A, enumeration(c));
        io::json j = {{"general_position", is_general_position(A, c.tol)},
                      {"regions", regions.size()},
                      {"max_regions", max_region_count(A.size(), static_cast<std::size_t>(A.dimension()))}};
        emit(c, io::dump(j), out);
        return kExitOk;
    }
    case Command::Plot: {
        const auto A = io::parse_arrangement(input);
        if (A.dimension() != 2) throw Error(ErrorKind::DimensionMismatch, "plot requires dimension 2");
        std::optional<Selection> sel;
        if (c.selection_path) {
            sel = io::parse_selection(io::read_file(*c.selection_path));
            if (sel->universe_size != A.size())
                throw Error(ErrorKind::UniverseMismatch, "selection universe does not match the arrangement");
        }
        const auto regions = enumerate_regions(A, enumeration(c));
        emit(c, render_svg(A, regions, sel ? &*sel : nullptr), out);
        return kExitOk;
    }
    }
    return kExitInvalid;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        return dispatch(config, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitInvalid;
}

}  // namespace netgeom::cli
