// hhverify: command-line front end to the engine.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hh/parse.hpp"
#include "hh/verify.hpp"

namespace {

struct Args {
    std::string command;
    std::string input;
    bool have_input = false;
    int wmax = 12;
    std::string field = "q";
    std::uint64_t seed = 0;
    bool verbose = false;
    std::string json_path;
};

constexpr int kOk = 0, kFail = 1, kUsage = 2;

std::string read_input(const Args& a) {
    if (a.have_input) return a.input;
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

int emit(const hh::Json& j, const Args& a) {
    const std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!a.json_path.empty()) {
        std::ofstream out(a.json_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << a.json_path << "\n";
            return kUsage;
        }
        out << text;
    }
    return kOk;
}

template <class K>
int run(const Args& a) {
    using namespace hh;
    if (a.command == "normal-form") {
        std::cout << to_text(parse_algebra<K>(read_input(a))) << "\n";
        return kOk;
    }
    if (a.command == "diff") {
        std::cout << to_text(differential(parse_cochain<K>(read_input(a)))) << "\n";
        return kOk;
    }

    VerifyOptions opt;
    opt.wmax = a.wmax;
    opt.seed = a.seed;
    opt.verbose = a.verbose;
    Verifier<K> v(opt);

    if (a.command == "reduce") {
        const auto c = parse_cochain<K>(read_input(a));
        if (!c.is_zero() && !c.weight()) {
            std::cerr << "cochain is not weight-homogeneous\n";
            return kUsage;
        }
        try {
            const auto cls = v.cohomology().reduce_to_class(c);
            std::cout << "degree " << cls.degree << ", weight " << cls.weight << "\n";
            if (cls.is_zero()) {
                std::cout << "boundary\nwitness: " << to_text(cls.boundary_witness) << "\n";
                return kOk;
            }
            std::cout << "coordinates:";
            for (const auto& x : cls.coords) std::cout << " " << FieldTraits<K>::to_string(x);
            std::cout << "\n";
            if (const auto dec = v.decompose(c, cls.weight)) {
                std::string line;
                for (const auto& [name, s] : *dec) line += (line.empty() ? "" : " + ") + name + "*(" + to_text(s) + ")";
                std::cout << "generators: " << line << "\n";
            }
            return kOk;
        } catch (const NotACocycle<K>& e) {
            std::cout << "not a cocycle\nd: " << to_text(e.image()) << "\n";
            return kFail;
        }
    }

    if (a.command == "homology-dims") {
        std::cout << "i,w,dim_cochains,dim_Z,dim_B,dim_H,expected_H,match\n";
        bool ok = true;
        for (const auto& r : v.dimension_rows()) {
            ok = ok && r.match();
            std::cout << r.degree << "," << r.weight << "," << r.dim_cochains << "," << r.dim_z << "," << r.dim_b
                      << "," << r.dim_h << "," << r.expected << "," << (r.match() ? "true" : "false") << "\n";
        }
        return ok ? kOk : kFail;
    }

    VerificationReport rep;
    if (a.command == "verify-tables") rep = v.tables_report();
    else if (a.command == "verify-modules") rep = v.modules_report();
    else rep = v.full_report();
    if (const int rc = emit(rep.to_json(), a); rc != kOk) return rc;
    return rep.pass() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Hochschild cohomology computations for A(0,1,0)"};
    app.require_subcommand(1);
    app.fallthrough();
    Args a;
    app.add_option("--wmax", a.wmax, "largest weight swept")->capture_default_str();
    app.add_option("--field", a.field, "q or fp:<p>")->capture_default_str();
    app.add_option("--seed", a.seed, "seed for sampled checks")->capture_default_str();
    app.add_flag("--verbose", a.verbose, "include differential matrices in the report");
    app.add_option("--json", a.json_path, "also write the report to this file");

    auto with_input = [&](const char* name, const char* help, const char* what) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("text", a.input, what);
        return sub;
    };
    with_input("normal-form", "print the PBW normal form of an algebra expression", "expression (stdin if omitted)");
    with_input("diff", "apply the differential to a cochain", "cochain (stdin if omitted)");
    with_input("reduce", "class coordinates or a boundary witness for a cocycle", "cochain (stdin if omitted)");
    app.add_subcommand("homology-dims", "CSV of slice dimensions against the Hilbert series");
    app.add_subcommand("verify-tables", "Leibniz gate and multiplication tables");
    app.add_subcommand("verify-modules", "generators, module structure, relations, generation");
    app.add_subcommand("verify-all", "every check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }
    const auto* sub = app.get_subcommands().front();
    a.command = sub->get_name();
    if (const auto* opt = sub->get_option_no_throw("text")) a.have_input = opt->count() > 0;

    try {
        if (a.field == "q") return run<hh::Rational>(a);
        if (a.field.rfind("fp:", 0) == 0) {
            const std::string digits = a.field.substr(3);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
                throw std::invalid_argument("bad modulus in --field " + a.field);
            hh::Fp::set_modulus(static_cast<std::uint32_t>(std::stoul(digits)));
            return run<hh::Fp>(a);
        }
        throw std::invalid_argument("--field must be q or fp:<p>");
    } catch (const hh::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFail;
    }
}
