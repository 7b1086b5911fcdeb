// cpq: exact spectra and verification suites for q-deformed projective spaces.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cpq/grassmann.hpp"
#include "cpq/spectra.hpp"
#include "cpq/verify.hpp"

using json = nlohmann::ordered_json;
using namespace cpq;

namespace {

struct QMode {
    bool symbolic = false;
    bool at_one = false;
    double value = 0.5;
    std::string raw = "symbolic";
};

QMode parse_q(const std::string& s) {
    QMode m;
    m.raw = s;
    if (s == "symbolic") {
        m.symbolic = true;
        return m;
    }
    if (s == "1") {
        m.at_one = true;
        m.value = 1.0;
        return m;
    }
    double v = 0;
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            double num = std::stod(s.substr(0, slash));
            double den = std::stod(s.substr(slash + 1));
            v = num / den;
        } else {
            v = std::stod(s);
        }
    } catch (...) {
        throw CLI::ValidationError("--q", "cannot parse q value '" + s + "'");
    }
    if (!(v > 0.0 && v <= 1.0))
        throw CLI::ValidationError("--q", "q must lie in (0,1]");
    if (v == 1.0) m.at_one = true;
    m.value = v;
    return m;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string weight_str(const spectra::HighestWeight& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "|";
        s += std::to_string(w[i]);
    }
    return s;
}

/// Writes to `path` atomically (temp file then rename), or to stdout if empty.
void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp);
        f << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename into " + path);
}

struct Row {
    std::string degree, level, weight, eig_sq, eig, mult;
};

std::string render(const std::vector<Row>& rows, const std::string& format, const json& params,
                   const std::string& pretty_title) {
    std::ostringstream os;
    if (format == "csv") {
        os << "degree,level,weight,eigenvalue_sq,eigenvalue,multiplicity\n";
        for (const auto& r : rows)
            os << r.degree << "," << r.level << "," << r.weight << "," << r.eig_sq << "," << r.eig
               << "," << r.mult << "\n";
    } else if (format == "json") {
        json out;
        out["params"] = params;
        out["lines"] = json::array();
        for (const auto& r : rows) {
            json line;
            line["degree"] = r.degree;
            line["level"] = r.level;
            line["weight"] = r.weight;
            line["eigenvalue_sq"] = r.eig_sq;
            line["eigenvalue"] = r.eig;
            line["multiplicity"] = r.mult;
            out["lines"].push_back(line);
        }
        os << out.dump(2) << "\n";
    } else {
        os << pretty_title << "\n";
        os << "degree  level  weight          eigenvalue_sq                 eigenvalue        mult\n";
        for (const auto& r : rows) {
            os << "  " << r.degree << "     " << r.level << "     " << r.weight;
            for (size_t p = r.weight.size(); p < 14; ++p) os << ' ';
            os << "  " << r.eig_sq;
            for (size_t p = r.eig_sq.size(); p < 28; ++p) os << ' ';
            os << "  " << r.eig;
            for (size_t p = r.eig.size(); p < 16; ++p) os << ' ';
            os << "  " << r.mult << "\n";
        }
    }
    return os.str();
}

json params_json(int ell, int N, const std::string& q, int r) {
    json p;
    p["ell"] = ell;
    p["N"] = N;
    p["q"] = q;
    p["r"] = r;
    return p;
}

int cmd_spectrum(int ell, int N, const QMode& qm, long levels, const std::string& format,
                 const std::string& out) {
    RootOrder ro = spectra::spectra_order(ell);
    const bool pretty = format == "pretty";
    spectra::Spectrum s = spectra::full_spectrum(ell, N, levels);
    std::vector<Row> rows;
    for (const auto& line : s.lines) {
        Row r;
        r.degree = std::to_string(line.degree);
        r.level = std::to_string(line.level);
        r.weight = weight_str(line.weight);
        r.mult = line.multiplicity.str();
        const int sign = (line.degree % 2 == 0) ? +1 : -1;
        if (line.kernel) {
            r.eig_sq = qm.symbolic ? "0" : "0";
            r.eig = "0";
        } else if (qm.symbolic) {
            // canonical serialization is the t-form; pretty mode shows q-powers
            QScalar v = line.d2.to_qscalar(ro);
            std::string vs = pretty ? v.str_q() : v.str();
            r.eig_sq = vs;
            r.eig = (sign > 0 ? "+sqrt(" : "-sqrt(") + vs + ")";
        } else if (qm.at_one) {
            GRat v = line.d2.at_one();
            r.eig_sq = v.re.str();
            double d = std::sqrt(to_double(v.re));
            r.eig = fmt_double(sign * d);
        } else {
            double v = line.d2.to_qscalar(ro).eval_at(qm.value);
            r.eig_sq = fmt_double(v);
            r.eig = fmt_double(sign * std::sqrt(v));
        }
        rows.push_back(std::move(r));
    }
    write_output(out, render(rows, format, params_json(ell, N, qm.raw, ro.r),
                             "D_N^2 spectrum, per-degree blocks"));
    return 0;
}

int cmd_classical(int ell, int N, long levels, const std::string& format, const std::string& out) {
    auto cs = spectra::classical_spectrum(ell, N, levels);
    std::vector<Row> rows;
    if (cs.kernel_dim != 0) {
        Row r;
        r.degree = "-";
        r.level = "-";
        r.weight = "";
        r.eig_sq = "0";
        r.eig = "0";
        r.mult = cs.kernel_dim.str();
        rows.push_back(std::move(r));
    }
    for (const auto& line : cs.lines)
        for (int sign : {+1, -1}) {
            Row r;
            r.degree = std::to_string(line.k);
            r.level = std::to_string(line.m);
            r.weight = "";
            r.eig_sq = line.lambda_sq.str();
            r.eig = fmt_double(sign * std::sqrt(to_double(line.lambda_sq)));
            r.mult = line.multiplicity.str();
            rows.push_back(std::move(r));
        }
    write_output(out, render(rows, format, params_json(ell, N, "1", 2),
                             "classical (q=1) Dirac spectrum"));
    return 0;
}

int cmd_decompose(int ell, int N, int k, long levels, const QMode& qm, const std::string& format,
                  const std::string& out) {
    RootOrder ro = spectra::spectra_order(ell);
    auto table = spectra::harmonic_decomposition(ell, N, k, levels);
    std::vector<Row> rows;
    for (const auto& b : table.blocks) {
        Row r;
        r.degree = std::to_string(k);
        r.level = std::to_string(b.level);
        r.weight = weight_str(b.weight);
        if (qm.at_one)
            r.eig_sq = b.casimir.at_one().re.str();
        else if (qm.symbolic)
            r.eig_sq = format == "pretty" ? b.casimir.to_qscalar(ro).str_q()
                                          : b.casimir.to_qscalar(ro).str();
        else
            r.eig_sq = fmt_double(b.casimir.to_qscalar(ro).eval_at(qm.value));
        r.eig = b.case_label;
        r.mult = b.dim.str();
        rows.push_back(std::move(r));
    }
    write_output(out, render(rows, format, params_json(ell, N, qm.raw, ro.r),
                             "harmonic decomposition of Omega^k_N (eigenvalue_sq = Casimir)"));
    return 0;
}

int cmd_qdim(int ell, const QMode& qm, const std::string& format, const std::string& out) {
    RootOrder ro = RootOrder::for_rank(ell);
    std::vector<Row> rows;
    for (int k = 0; k <= ell; ++k) {
        QScalar d = grassmann::qdim_W(ro, ell, k);
        Row r;
        r.degree = std::to_string(k);
        r.level = "0";
        r.weight = "";
        r.eig_sq = qm.symbolic ? (format == "pretty" ? d.str_q() : d.str())
                               : (qm.at_one ? d.at_one().re.str() : fmt_double(d.eval_at(qm.value)));
        r.eig = "";
        r.mult = std::to_string(grassmann::dim_W(ell, k));
        rows.push_back(std::move(r));
    }
    write_output(out, render(rows, format, params_json(ell, 0, qm.raw, ro.r),
                             "quantum dimensions of W_k"));
    return 0;
}

int cmd_casimir(int ell, const std::string& weight, const QMode& qm, const std::string& format,
                const std::string& out) {
    spectra::HighestWeight n;
    std::stringstream ss(weight);
    std::string item;
    while (std::getline(ss, item, ',')) n.push_back(std::stol(item));
    if (static_cast<int>(n.size()) != ell)
        throw CLI::ValidationError("--weight", "need exactly ell comma-separated entries");
    RootOrder ro = RootOrder::for_rank(ell);
    QExpr c = spectra::casimir_eigenvalue(ell, n);
    std::vector<Row> rows;
    Row r;
    r.degree = "-";
    r.level = "-";
    r.weight = weight_str(n);
    r.eig_sq = qm.symbolic ? (format == "pretty" ? c.to_qscalar(ro).str_q()
                                                  : c.to_qscalar(ro).str())
                           : (qm.at_one ? c.at_one().re.str()
                                        : fmt_double(c.to_qscalar(ro).eval_at(qm.value)));
    r.eig = "";
    r.mult = spectra::weyl_dim(ell, n).str();
    rows.push_back(std::move(r));
    write_output(out, render(rows, format, params_json(ell, 0, qm.raw, ro.r),
                             "Casimir eigenvalue and multiplicity"));
    return 0;
}

int cmd_verify(const std::string& suite, int ell, const std::string& format,
               const std::string& out) {
    verify::Suite results;
    if (suite == "all") {
        // Suites are independent; honor CPQ_THREADS for coarse parallelism.
        std::vector<std::string> names = {"scalar", "combinatorics", "grassmann",
                                          "uqsl",   "spectra",       "sphere"};
        std::vector<verify::Suite> parts(names.size());
        unsigned threads = 1;
        if (const char* tv = std::getenv("CPQ_THREADS")) {
            long t = std::strtol(tv, nullptr, 10);
            if (t > 1) threads = static_cast<unsigned>(t);
        }
        if (threads <= 1) {
            for (size_t i = 0; i < names.size(); ++i) parts[i] = verify::run_suite(names[i], ell);
        } else {
            std::vector<std::thread> pool;
            std::atomic<size_t> next{0};
            for (unsigned t = 0; t < std::min<size_t>(threads, names.size()); ++t)
                pool.emplace_back([&] {
                    for (size_t i = next.fetch_add(1); i < names.size(); i = next.fetch_add(1))
                        parts[i] = verify::run_suite(names[i], ell);
                });
            for (auto& th : pool) th.join();
        }
        for (size_t i = 0; i < names.size(); ++i)
            for (auto& r : parts[i]) {
                r.name = names[i] + ": " + r.name;
                results.push_back(std::move(r));
            }
    } else {
        results = verify::run_suite(suite, ell);
    }

    bool pass = verify::all_passed(results);
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            json j;
            j["name"] = r.name;
            j["pass"] = r.pass;
            if (!r.pass) j["detail"] = r.detail;
            arr.push_back(j);
        }
        json top;
        top["suite"] = suite;
        top["ell"] = ell;
        top["pass"] = pass;
        top["checks"] = arr;
        write_output(out, top.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& r : results)
            os << (r.pass ? "PASS  " : "FAIL  ") << r.name
               << (r.pass ? "" : "  [" + r.detail + "]") << "\n";
        os << (pass ? "all checks passed" : "FAILURES PRESENT") << "\n";
        write_output(out, os.str());
    }
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-deformed projective space spectra"};
    app.require_subcommand(1);

    int ell = 1, N = 0, k = 0;
    long levels = 10;
    std::string qstr = "symbolic", format = "pretty", out, weight, suite = "all";

    auto add_common = [&](CLI::App* c, bool with_N, bool with_q) {
        c->add_option("--ell", ell, "rank l >= 1")->check(CLI::PositiveNumber);
        if (with_N) c->add_option("--N", N, "line bundle twist");
        if (with_q) c->add_option("--q", qstr, "q value in (0,1], '1', or 'symbolic'");
        c->add_option("--levels", levels, "level cutoff m_max")->check(CLI::NonNegativeNumber);
        c->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        c->add_option("--out", out, "output path (atomic write); stdout if omitted");
    };

    CLI::App* c_spec = app.add_subcommand("spectrum", "D_N^2 spectrum per degree");
    add_common(c_spec, true, true);
    CLI::App* c_cls = app.add_subcommand("classical", "closed-form q=1 Dirac spectrum");
    add_common(c_cls, true, false);
    CLI::App* c_dec = app.add_subcommand("decompose", "harmonic decomposition of Omega^k_N");
    add_common(c_dec, true, true);
    c_dec->add_option("--k", k, "form degree");
    CLI::App* c_qdim = app.add_subcommand("qdim", "quantum dimensions of W_k");
    add_common(c_qdim, false, true);
    CLI::App* c_cas = app.add_subcommand("casimir", "Casimir eigenvalue for a weight");
    add_common(c_cas, false, true);
    c_cas->add_option("--weight", weight, "comma-separated highest weight")->required();
    int ver_ell = 3;
    CLI::App* c_ver = app.add_subcommand("verify", "run identity suites");
    c_ver->add_option("suite", suite, "scalar|combinatorics|grassmann|uqsl|spectra|sphere|all");
    c_ver->add_option("--ell", ver_ell, "maximum rank for ranked checks")->check(CLI::PositiveNumber);
    c_ver->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    c_ver->add_option("--out", out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_spec)) {
            if (std::abs(N) > 200 || levels > 5000) throw std::domain_error("parameters out of range");
            return cmd_spectrum(ell, N, parse_q(qstr), levels, format, out);
        }
        if (app.got_subcommand(c_cls)) return cmd_classical(ell, N, levels, format, out);
        if (app.got_subcommand(c_dec))
            return cmd_decompose(ell, N, k, levels, parse_q(qstr), format, out);
        if (app.got_subcommand(c_qdim)) return cmd_qdim(ell, parse_q(qstr), format, out);
        if (app.got_subcommand(c_cas))
            return cmd_casimir(ell, weight, parse_q(qstr), format, out);
        if (app.got_subcommand(c_ver)) return cmd_verify(suite, ver_ell, format, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
