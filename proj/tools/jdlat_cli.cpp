// jdlat: coordinatize join-distributive lattices by permutation tuples.
//
// Exit codes: 0 ok, 1 certification failure, 2 parse error,
// 3 precondition/axiom violation, 4 check-negative.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "jdlat/coordinates.hpp"
#include "jdlat/io.hpp"
#include "jdlat/jd.hpp"
#include "jdlat/setsystem.hpp"

namespace {

using jdlat::io::json;

constexpr int kOk = 0;
constexpr int kCertFail = 1;
constexpr int kParseError = 2;
constexpr int kPrecondition = 3;
constexpr int kCheckNegative = 4;

void write_output(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
}

int cmd_build(const std::string& in, const std::string& out) {
    auto v = jdlat::io::perm_vector_from_json(jdlat::io::parse_file(in));
    auto e = jdlat::eta(v);
    write_output(out, jdlat::io::dump(jdlat::io::lattice_to_json(e.cl.lattice, e.cl.chains)));
    return kOk;
}

int cmd_decode(const std::string& in, const std::string& out) {
    auto j = jdlat::io::parse_file(in);
    jdlat::ChainedLattice cl{jdlat::io::lattice_from_json(j), jdlat::io::chains_from_json(j)};
    if (cl.chains.empty()) throw jdlat::io::ParseError("decode needs a lattice with \"chains\"");
    auto v = jdlat::xi(cl);
    write_output(out, jdlat::io::dump(jdlat::io::perm_vector_to_json(v)));
    return kOk;
}

int cmd_roundtrip(int n, int k, std::int64_t max_cases) {
    auto vectors = jdlat::enumerate_perm_vectors(n, k, max_cases);
    int passed = 0;
    for (const auto& v : vectors) {
        auto e = jdlat::eta(v);
        if (jdlat::xi(e.cl) == v && jdlat::roundtrip_lattice(e.cl)) ++passed;
    }
    bool ok = passed == static_cast<int>(vectors.size());
    std::cout << passed << "/" << vectors.size() << (ok ? " PASS" : " FAIL") << "\n";
    return ok ? kOk : kCertFail;
}

int cmd_enumerate(int n, int k, bool classes, std::int64_t max_cases, const std::string& out) {
    std::string text;
    if (classes) {
        auto cls = jdlat::same_lattice_classes(n, k, max_cases);
        json j = json::array();
        for (const auto& c : cls) j.push_back(c);
        text = jdlat::io::dump(j);
    } else {
        std::string lines;
        for (const auto& v : jdlat::enumerate_perm_vectors(n, k, max_cases))
            lines += jdlat::io::perm_vector_to_json(v).dump() + "\n";
        text = lines;
    }
    write_output(out, text);
    return kOk;
}

int cmd_check(const std::string& in, const std::string& out) {
    auto j = jdlat::io::parse_file(in);
    auto L = jdlat::io::lattice_from_json(j);
    auto report = jdlat::is_join_distributive(L);
    auto chains = jdlat::io::chains_from_json(j);
    if (report.join_distributive() && !chains.empty()) {
        try {
            report.embedding = jdlat::embed_into_power_chain(L, chains);
        } catch (const jdlat::ChainsDontCoverJir&) {
            // chains that do not cover Jir simply yield no (h) witness
        }
    }
    write_output(out, jdlat::io::dump(jdlat::io::jd_report_to_json(report)));
    return report.join_distributive() ? kOk : kCheckNegative;
}

int cmd_convert(const std::string& to, const std::string& in, const std::string& out) {
    auto j = jdlat::io::parse_file(in);
    auto kind = jdlat::io::detect_kind(j);

    auto as_antimatroid = [&]() -> jdlat::Antimatroid {
        switch (kind) {
            case jdlat::io::FileKind::PermVector:
                return jdlat::antimatroid_from_perms(jdlat::io::perm_vector_from_json(j));
            case jdlat::io::FileKind::Lattice:
                return jdlat::amat(jdlat::io::lattice_from_json(j));
            case jdlat::io::FileKind::SetSystem: {
                auto s = jdlat::io::set_system_from_json(j);
                if (jdlat::check_antimatroid(s).ok) return jdlat::Antimatroid(std::move(s));
                return jdlat::dualize(jdlat::ConvexGeometry(std::move(s)));
            }
        }
        throw std::logic_error("unreachable");
    };

    json result;
    if (to == "antimatroid") {
        result = jdlat::io::set_system_to_json(as_antimatroid().base);
    } else if (to == "convexgeom") {
        if (kind == jdlat::io::FileKind::Lattice) {
            result = jdlat::io::set_system_to_json(
                jdlat::geom(jdlat::io::lattice_from_json(j)).base);
        } else if (kind == jdlat::io::FileKind::SetSystem) {
            auto s = jdlat::io::set_system_from_json(j);
            if (jdlat::check_convex_geometry(s).ok)
                result = jdlat::io::set_system_to_json(s);
            else
                result = jdlat::io::set_system_to_json(
                    jdlat::dualize(jdlat::Antimatroid(std::move(s))).base);
        } else {
            result = jdlat::io::set_system_to_json(jdlat::dualize(as_antimatroid()).base);
        }
    } else if (to == "lattice") {
        if (kind == jdlat::io::FileKind::PermVector) {
            auto e = jdlat::eta(jdlat::io::perm_vector_from_json(j));
            result = jdlat::io::lattice_to_json(e.cl.lattice, e.cl.chains);
        } else if (kind == jdlat::io::FileKind::Lattice) {
            result = jdlat::io::lattice_to_json(jdlat::io::lattice_from_json(j),
                                                jdlat::io::chains_from_json(j));
        } else {
            auto s = jdlat::io::set_system_from_json(j);
            if (jdlat::check_antimatroid(s).ok)
                result = jdlat::io::lattice_to_json(
                    jdlat::halojd(jdlat::Antimatroid(std::move(s))).lattice);
            else
                result = jdlat::io::lattice_to_json(
                    jdlat::halomd(jdlat::ConvexGeometry(std::move(s))).lattice);
        }
    } else {
        throw CLI::ValidationError("--to must be antimatroid, convexgeom, or lattice");
    }
    write_output(out, jdlat::io::dump(result));
    return kOk;
}

int cmd_export_dot(const std::string& in, const std::string& out) {
    auto j = jdlat::io::parse_file(in);
    auto L = jdlat::io::lattice_from_json(j);
    write_output(out, jdlat::io::export_dot(L, jdlat::io::chains_from_json(j)));
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coordinatization of join-distributive lattices by permutation tuples"};
    app.require_subcommand(1);

    std::string in, out, to;
    int n = 3, k = 2;
    std::int64_t max_cases = 1000000;
    bool classes = false;

    auto* build = app.add_subcommand("build", "eta: permutation vector -> chained lattice");
    build->add_option("permfile", in, "permutation vector JSON (or - for stdin)")->required();
    build->add_option("--out", out, "output path (default stdout)");

    auto* decode = app.add_subcommand("decode", "xi: chained lattice -> permutation vector");
    decode->add_option("latticefile", in, "lattice JSON with chains (or -)")->required();
    decode->add_option("--out", out, "output path (default stdout)");

    auto* roundtrip =
        app.add_subcommand("roundtrip", "certify xi(eta(v)) = v over all of S_n^(k-1)");
    roundtrip->add_option("--n", n, "degree")->required();
    roundtrip->add_option("--k", k, "chain count")->required();
    roundtrip->add_option("--max-cases", max_cases, "bound on n!^(k-1)");

    auto* enumerate = app.add_subcommand("enumerate", "list permutation vectors");
    enumerate->add_option("--n", n, "degree")->required();
    enumerate->add_option("--k", k, "chain count")->required();
    enumerate->add_flag("--classes", classes, "group by isomorphic eta-lattice instead");
    enumerate->add_option("--max-cases", max_cases, "bound on n!^(k-1)");
    enumerate->add_option("--out", out, "output path (default stdout)");

    auto* check = app.add_subcommand("check", "join-distributivity report");
    check->add_option("latticefile", in, "lattice JSON (or -)")->required();
    check->add_option("--out", out, "output path (default stdout)");

    auto* convert = app.add_subcommand("convert", "translate between representations");
    convert->add_option("--to", to, "antimatroid | convexgeom | lattice")->required();
    convert->add_option("infile", in, "input JSON (or -)")->required();
    convert->add_option("--out", out, "output path (default stdout)");

    auto* dot = app.add_subcommand("export-dot", "Hasse diagram as DOT");
    dot->add_option("latticefile", in, "lattice JSON (or -)")->required();
    dot->add_option("--out", out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(in, out);
        if (decode->parsed()) return cmd_decode(in, out);
        if (roundtrip->parsed()) return cmd_roundtrip(n, k, max_cases);
        if (enumerate->parsed()) return cmd_enumerate(n, k, classes, max_cases, out);
        if (check->parsed()) return cmd_check(in, out);
        if (convert->parsed()) return cmd_convert(to, in, out);
        if (dot->parsed()) return cmd_export_dot(in, out);
    } catch (const jdlat::io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const jdlat::SizeLimitExceeded& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return kPrecondition;
    } catch (const jdlat::LatticeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
    return kOk;
}
