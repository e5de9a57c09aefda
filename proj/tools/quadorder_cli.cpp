// quadorder: classify quadratic orders Z + n O_K and run census scans.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quadorder/atlas.hpp"
#include "quadorder/classify.hpp"
#include "quadorder/lfun.hpp"
#include "quadorder/oracle.hpp"

namespace qo = quadorder;

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

// x + y*sqrt(d), printed as "x+y√d" with unit coefficients dropped.
std::string surd(const mpz_class& x, const mpz_class& y, std::int64_t d)
{
    std::ostringstream o;
    const std::string root = "√" + std::to_string(d);
    if (x != 0)
        o << x;
    if (y != 0) {
        if (y > 0 && x != 0)
            o << '+';
        if (y == -1)
            o << '-';
        else if (y != 1)
            o << y;
        o << root;
    }
    if (x == 0 && y == 0)
        o << 0;
    return o.str();
}

std::string format_unit(const qo::FieldContext& F, const qo::FundamentalUnit& U)
{
    std::ostringstream o;
    if (F.kind == qo::OmegaKind::Sqrt) {
        o << surd(U.u.a, U.u.b, F.d);
    } else {
        const mpz_class x = 2 * U.u.a + U.u.b;
        const mpz_class y = U.u.b;
        if (y == 0)
            o << surd(U.u.a, 0, F.d);
        else
            o << '(' << surd(x, y, F.d) << ")/2";
    }
    o << ", norm " << U.norm_sign;
    if (F.d < 0)
        o << ", torsion order " << U.torsion_order;
    return o.str();
}

std::string flags_line(const qo::ClassificationRecord& r)
{
    std::ostringstream o;
    o << "d=" << r.d << " n=" << r.n << " D=" << r.D << " m=" << r.m << " L=" << r.L
      << " ip=" << r.ideal_preserving << " la=" << r.locally_associated
      << " assoc=" << r.associated << " h_maximal=" << r.h_maximal << " h_order=" << r.h_order
      << " hfd=" << r.hfd;
    return o.str();
}

const char* tf(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Classify orders Z + n*O_K in quadratic fields Q(sqrt d)"};
    app.require_subcommand(1);

    std::int64_t d = 0, n = 1;
    bool json = false;

    auto* classify = app.add_subcommand("classify", "classify one order");
    classify->add_option("-d", d, "squarefree d")->required()->allow_extra_args(false);
    classify->add_option("-n", n, "index n")->required();
    classify->add_flag("--json", json, "emit a JSON object");

    auto* unit = app.add_subcommand("unit", "fundamental unit of O_K");
    unit->add_option("-d", d, "squarefree d")->required();

    auto* lfun = app.add_subcommand("lfun", "evaluate L(n, d)");
    lfun->add_option("-n", n, "index n")->required();
    lfun->add_option("-d", d, "squarefree d")->required();

    auto* classnum = app.add_subcommand("classnum", "class number of O_K");
    classnum->add_option("-d", d, "squarefree d")->required();

    auto* verify = app.add_subcommand("verify", "compare closed forms with the brute-force oracle");
    verify->add_option("-d", d, "squarefree d")->required();
    verify->add_option("-n", n, "index n")->required();

    qo::ScanConfig cfg;
    std::string format = "csv";
    auto* scan = app.add_subcommand("scan", "classify a (d, n) window");
    scan->add_option("--d-min", cfg.d_min, "smallest d")->capture_default_str();
    scan->add_option("--d-max", cfg.d_max, "largest d")->capture_default_str();
    scan->add_option("--n-min", cfg.n_min, "smallest n")->capture_default_str();
    scan->add_option("--n-max", cfg.n_max, "largest n")->capture_default_str();
    scan->add_option("--out", cfg.out, "output file")->required();
    scan->add_option("--format", format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    scan->add_flag("--resume", cfg.resume, "continue from the checkpoint next to --out");
    scan->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    scan->add_flag("--verify", cfg.verify, "oracle-check cells with small n");

    std::string report_path;
    auto* report = app.add_subcommand("report", "count half-factorial orders in a scan output");
    report->add_option("path", report_path, "scan output")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*classify) {
            const auto rec = qo::classify_order({d, n});
            std::cout << (json ? qo::to_json_row(rec) : flags_line(rec)) << '\n';
        } else if (*unit) {
            const auto F = qo::make_field(d);
            std::cout << format_unit(F, qo::fundamental_unit(F)) << '\n';
        } else if (*lfun) {
            std::cout << qo::l_value(n, d) << '\n';
        } else if (*classnum) {
            const auto fd = qo::make_field_data(d);
            std::cout << "D=" << fd.classes.disc << " h=" << fd.classes.h;
            if (fd.field.real())
                std::cout << " h_plus=" << fd.classes.h_plus;
            std::cout << '\n';
        } else if (*verify) {
            qo::OrderClassifier cls(d);
            const auto rec = cls.classify(n);
            const auto& fd = cls.data();
            const bool la = qo::brute_locally_associated(fd.field, fd.unit, n);
            const bool ip = qo::brute_ideal_preserving(fd.field, n);
            const bool as = qo::brute_associated(fd.field, fd.unit, n);
            const bool ok = la == rec.locally_associated && ip == rec.ideal_preserving
                            && as == rec.associated;
            std::cout << (ok ? "OK" : "MISMATCH") << " (la: closed-form=" << tf(rec.locally_associated)
                      << " oracle=" << tf(la) << "; ip: " << tf(rec.ideal_preserving) << '/' << tf(ip)
                      << "; assoc: " << tf(rec.associated) << '/' << tf(as) << ")\n";
            return ok ? 0 : kExitInternal;
        } else if (*scan) {
            cfg.format = format == "jsonl" ? qo::OutputFormat::Jsonl : qo::OutputFormat::Csv;
            const auto s = qo::scan(cfg);
            std::cout << "rows=" << s.rows << " hfd=" << s.hfd << " elapsed=" << s.elapsed_seconds
                      << "s\n";
        } else if (*report) {
            const auto r = qo::report_hfd(report_path);
            std::cout << "total=" << r.total << '\n';
            for (const auto& [dd, c] : r.per_d)
                std::cout << "d=" << dd << " count=" << c << '\n';
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
