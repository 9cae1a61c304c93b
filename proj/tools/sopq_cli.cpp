// Command-line front end: evaluate zonal/associated spherical functions,
// cross-verify series vs compact form vs quadrature, scan grids, emit Gram
// matrices and expansion residuals.  CSV or JSON to stdout or --out.
//
// Exit codes: 0 success/PASS, 2 usage error, 3 domain error,
//             4 convergence failure, 5 verification FAIL.

#include <CLI11.hpp>
#include <json.hpp>

#include "sopq/oracle.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace sopq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitConvergence = 4;
constexpr int kExitVerifyFail = 5;

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parse "a", "a+bi", "a-bi", "bi", "i", "-i".
Complex parse_complex(std::string s)
{
    std::erase(s, ' ');
    if (s.empty())
        throw usage_error("empty complex literal");
    auto to_double = [](const std::string& t) {
        if (t.empty() || t == "+")
            return 1.0;
        if (t == "-")
            return -1.0;
        std::size_t pos = 0;
        double v = std::stod(t, &pos);
        if (pos != t.size())
            throw usage_error("bad numeric literal '" + t + "'");
        return v;
    };
    try {
        if (s.back() != 'i')
            return Complex(to_double(s), 0.0);
        s.pop_back();
        // split at the last +/- that is not an exponent sign
        for (std::size_t k = s.size(); k-- > 1;) {
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e'
                && s[k - 1] != 'E')
                return Complex(to_double(s.substr(0, k)),
                               to_double(s.substr(k)));
        }
        return Complex(0.0, to_double(s));
    } catch (const std::invalid_argument&) {
        throw usage_error("cannot parse complex literal");
    }
}

// Parse "x" or "start:stop:step" (inclusive stop, within half a step).
std::vector<double> parse_grid(const std::string& s)
{
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t c = s.find(':', pos);
        parts.push_back(s.substr(pos, c - pos));
        if (c == std::string::npos)
            break;
        pos = c + 1;
    }
    try {
        if (parts.size() == 1)
            return {std::stod(parts[0])};
        if (parts.size() != 3)
            throw usage_error("grid must be 'x' or 'start:stop:step'");
        double a = std::stod(parts[0]), b = std::stod(parts[1]),
               h = std::stod(parts[2]);
        if (!(h > 0.0) || b < a)
            throw usage_error("grid requires stop >= start and step > 0");
        std::vector<double> g;
        for (int i = 0;; ++i) {
            double v = a + i * h;
            if (v > b + 0.5 * h)
                break;
            g.push_back(std::min(v, b));
        }
        return g;
    } catch (const std::invalid_argument&) {
        throw usage_error("cannot parse grid '" + s + "'");
    }
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Row {
    int p, q, nu, s, r;
    Complex sigma;
    double alpha;
    std::string method;
    Complex value;
    std::size_t terms;
    double tail;
};

const char* kHeader =
    "p,q,sigma_re,sigma_im,nu,s,r,alpha,method,value_re,value_im,terms,"
    "tail";

std::string row_csv(const Row& r)
{
    return std::to_string(r.p) + "," + std::to_string(r.q) + ","
           + fmt(r.sigma.real()) + "," + fmt(r.sigma.imag()) + ","
           + std::to_string(r.nu) + "," + std::to_string(r.s) + ","
           + std::to_string(r.r) + "," + fmt(r.alpha) + "," + r.method
           + "," + fmt(r.value.real()) + "," + fmt(r.value.imag()) + ","
           + std::to_string(r.terms) + "," + fmt(r.tail);
}

json row_json(const Row& r)
{
    return json{{"p", r.p},
                {"q", r.q},
                {"sigma_re", r.sigma.real()},
                {"sigma_im", r.sigma.imag()},
                {"nu", r.nu},
                {"s", r.s},
                {"r", r.r},
                {"alpha", r.alpha},
                {"method", r.method},
                {"value_re", r.value.real()},
                {"value_im", r.value.imag()},
                {"terms", r.terms},
                {"tail", r.tail}};
}

struct Options {
    int p = 3, q = 2;
    std::string sigma_str = "0";
    std::string alpha_str = "0";
    std::string sigma_re_str; // scan sweep
    int nu = 0, s = 0, r = 0;
    bool have_idx = false;
    std::string method = "series";
    double tol = 1e-10;
    int nodes = 96;
    int max_label = 3;
    std::string n_list = "4,8,16";
    std::string format = "csv";
    std::string out;
};

void emit(const Options& opt, const std::string& csv_text,
          const json& json_doc)
{
    std::string text =
        (opt.format == "json") ? json_doc.dump(2) + "\n" : csv_text;
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out);
        if (!f)
            throw usage_error("cannot open output file " + opt.out);
        f << text;
    }
}

Row eval_row(const Options& opt, const Complex& sigma, double alpha,
             const std::string& method)
{
    Signature sig{opt.p, opt.q};
    RepParam rep{sigma, 0};
    Rapidity a{alpha};
    Row row{opt.p,  opt.q, opt.nu, opt.s, opt.r, sigma, alpha,
            method, {},    0,      0.0};
    if (method == "quadrature") {
        QuadratureConfig cfg =
            QuadratureConfig::for_signature(sig, opt.nodes);
        // node-doubling stability check; not tighter than the quadrature
        // can deliver even when the comparison tolerance is extreme
        double check = std::max(opt.tol, 1e-9);
        row.value = opt.have_idx
                        ? quad_assoc(sig, rep, {opt.nu, opt.s, opt.r}, a,
                                     cfg, check)
                        : quad_zonal(sig, rep, a, cfg, check);
        return row;
    }
    SeriesResult res;
    if (opt.have_idx) {
        AssocIndex idx{opt.nu, opt.s, opt.r};
        res = (method == "horn") ? assoc_horn(sig, rep, idx, a, opt.tol)
                                 : assoc_series(sig, rep, idx, a, opt.tol);
    } else {
        res = (method == "horn") ? zonal_horn(sig, rep, a, opt.tol)
                                 : zonal_series(sig, rep, a, opt.tol);
    }
    if (!res.converged)
        throw convergence_error(
            "series did not converge within the term budget");
    row.value = res.value;
    row.terms = res.terms_used;
    row.tail = res.tail_estimate;
    return row;
}

int cmd_rows(const Options& opt, const std::vector<Row>& rows)
{
    std::string csv = std::string(kHeader) + "\n";
    json arr = json::array();
    for (const Row& r : rows) {
        csv += row_csv(r) + "\n";
        arr.push_back(row_json(r));
    }
    emit(opt, csv, arr);
    return kExitOk;
}

int cmd_eval(const Options& opt)
{
    Complex sigma = parse_complex(opt.sigma_str);
    std::vector<Row> rows;
    for (double a : parse_grid(opt.alpha_str))
        rows.push_back(eval_row(opt, sigma, a, opt.method));
    return cmd_rows(opt, rows);
}

int cmd_verify(const Options& opt)
{
    Complex sigma = parse_complex(opt.sigma_str);
    std::vector<Row> rows;
    double max_dev = 0.0;
    for (double a : parse_grid(opt.alpha_str)) {
        Row rs = eval_row(opt, sigma, a, "series");
        Row rh = eval_row(opt, sigma, a, "horn");
        Row rq = eval_row(opt, sigma, a, "quadrature");
        rows.push_back(rs);
        rows.push_back(rh);
        rows.push_back(rq);
        double scale = std::max(
            {std::abs(rs.value), std::abs(rq.value), 1e-12});
        max_dev = std::max(max_dev,
                           std::abs(rs.value - rh.value) / scale);
        max_dev = std::max(max_dev,
                           std::abs(rs.value - rq.value) / scale);
    }
    bool pass = max_dev <= opt.tol;
    std::string csv = std::string(kHeader) + "\n";
    json arr = json::array();
    for (const Row& r : rows) {
        csv += row_csv(r) + "\n";
        arr.push_back(row_json(r));
    }
    csv += "# max_deviation=" + fmt(max_dev) + " tol=" + fmt(opt.tol)
           + " status=" + (pass ? "PASS" : "FAIL") + "\n";
    json doc{{"rows", arr},
             {"max_deviation", max_dev},
             {"tol", opt.tol},
             {"status", pass ? "PASS" : "FAIL"}};
    emit(opt, csv, doc);
    return pass ? kExitOk : kExitVerifyFail;
}

int cmd_scan(const Options& opt)
{
    std::vector<Row> rows;
    if (!opt.sigma_re_str.empty()) {
        // sigma sweep at fixed alpha (first grid point)
        double alpha = parse_grid(opt.alpha_str).front();
        double im = parse_complex(opt.sigma_str).imag();
        for (double re : parse_grid(opt.sigma_re_str))
            rows.push_back(
                eval_row(opt, Complex(re, im), alpha, opt.method));
    } else {
        Complex sigma = parse_complex(opt.sigma_str);
        for (double a : parse_grid(opt.alpha_str))
            rows.push_back(eval_row(opt, sigma, a, opt.method));
    }
    return cmd_rows(opt, rows);
}

int cmd_gram(const Options& opt)
{
    Signature sig{opt.p, opt.q};
    QuadratureConfig cfg = QuadratureConfig::for_signature(sig, opt.nodes);
    std::vector<BasisLabel> labels;
    int lam_lo = (opt.q == 2) ? -opt.max_label : 0;
    int mu_lo = (opt.p == 2) ? -opt.max_label : 0;
    for (int lam = lam_lo; lam <= opt.max_label; ++lam)
        for (int mu = mu_lo; mu <= opt.max_label; ++mu)
            labels.push_back({lam, mu});
    auto g = gram_matrix(sig, labels, cfg);
    double max_off = 0.0, max_diag_dev = 0.0;
    std::string csv = "i,j,lam_i,mu_i,lam_j,mu_j,value_re,value_im\n";
    json arr = json::array();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j)
                max_diag_dev = std::max(max_diag_dev,
                                        std::abs(g[i][j] - Complex(1.0)));
            else
                max_off = std::max(max_off, std::abs(g[i][j]));
            csv += std::to_string(i) + "," + std::to_string(j) + ","
                   + std::to_string(labels[i].lam) + ","
                   + std::to_string(labels[i].mu) + ","
                   + std::to_string(labels[j].lam) + ","
                   + std::to_string(labels[j].mu) + ","
                   + fmt(g[i][j].real()) + "," + fmt(g[i][j].imag())
                   + "\n";
            arr.push_back(json{{"i", i},
                               {"j", j},
                               {"lam_i", labels[i].lam},
                               {"mu_i", labels[i].mu},
                               {"lam_j", labels[j].lam},
                               {"mu_j", labels[j].mu},
                               {"value_re", g[i][j].real()},
                               {"value_im", g[i][j].imag()}});
        }
    csv += "# max_offdiag=" + fmt(max_off)
           + " max_diag_deviation=" + fmt(max_diag_dev) + "\n";
    json doc{{"entries", arr},
             {"max_offdiag", max_off},
             {"max_diag_deviation", max_diag_dev}};
    emit(opt, csv, doc);
    return kExitOk;
}

int cmd_expand(const Options& opt)
{
    Complex sigma = parse_complex(opt.sigma_str);
    double alpha = parse_grid(opt.alpha_str).front();
    // fixed deterministic sample angles (phi, chi)
    std::vector<std::pair<double, double>> samples{
        {0.3, 1.1}, {2.0, 0.7}, {5.1, 4.4}, {1.234, 2.345}};
    std::vector<int> ns;
    std::size_t pos = 0;
    while (pos <= opt.n_list.size()) {
        std::size_t c = opt.n_list.find(',', pos);
        ns.push_back(std::stoi(opt.n_list.substr(pos, c - pos)));
        if (c == std::string::npos)
            break;
        pos = c + 1;
    }
    std::string csv = "p,q,sigma_re,sigma_im,alpha,N,residual\n";
    json arr = json::array();
    for (int n : ns) {
        double res = expansion_residual({opt.p, opt.q}, {sigma, 0},
                                        {alpha}, n, samples);
        csv += std::to_string(opt.p) + "," + std::to_string(opt.q) + ","
               + fmt(sigma.real()) + "," + fmt(sigma.imag()) + ","
               + fmt(alpha) + "," + std::to_string(n) + "," + fmt(res)
               + "\n";
        arr.push_back(json{{"p", opt.p},
                           {"q", opt.q},
                           {"sigma_re", sigma.real()},
                           {"sigma_im", sigma.imag()},
                           {"alpha", alpha},
                           {"N", n},
                           {"residual", res}});
    }
    emit(opt, csv, arr);
    return kExitOk;
}

void add_common(CLI::App* c, Options& opt, bool with_idx)
{
    c->add_option("--p", opt.p, "signature p (>= 2)");
    c->add_option("--q", opt.q, "signature q (1 <= q <= p)");
    c->add_option("--sigma", opt.sigma_str,
                  "representation degree, complex 'a+bi'");
    c->add_option("--alpha", opt.alpha_str,
                  "rapidity value or range 'start:stop:step'");
    c->add_option("--tol", opt.tol, "tolerance");
    c->add_option("--nodes", opt.nodes, "quadrature nodes per direction");
    c->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    c->add_option("--out", opt.out, "output path (default stdout)");
    if (with_idx) {
        auto* onu = c->add_option("--nu", opt.nu, "index nu (0 or 1)");
        auto* os = c->add_option("--s", opt.s, "index s (mu = nu + 2s)");
        auto* orr = c->add_option("--r", opt.r, "index r (lambda = nu + 2r)");
        c->callback([&opt, onu, os, orr] {
            opt.have_idx = onu->count() || os->count() || orr->count();
        });
    }
}

} // namespace

int main(int argc, char** argv)
{
    Options opt;
    if (const char* e = std::getenv("SOPQ_TOL"))
        opt.tol = std::atof(e);
    if (const char* e = std::getenv("SOPQ_NODES"))
        opt.nodes = std::atoi(e);

    CLI::App app{"zonal and associated spherical functions of SO(p,q)"};
    app.require_subcommand(1);

    CLI::App* zonal = app.add_subcommand("zonal", "zonal function values");
    add_common(zonal, opt, false);
    zonal->add_option("--method", opt.method, "series|horn|quadrature")
        ->check(CLI::IsMember({"series", "horn", "quadrature"}));

    CLI::App* assoc =
        app.add_subcommand("assoc", "associated function values");
    add_common(assoc, opt, true);
    assoc->add_option("--method", opt.method, "series|horn|quadrature")
        ->check(CLI::IsMember({"series", "horn", "quadrature"}));

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check series vs horn vs quadrature");
    add_common(verify, opt, true);

    CLI::App* scan =
        app.add_subcommand("scan", "sweep a sigma or alpha grid");
    add_common(scan, opt, true);
    scan->add_option("--sigma-re", opt.sigma_re_str,
                     "sweep Re sigma over 'start:stop:step'");
    scan->add_option("--method", opt.method, "series|horn|quadrature")
        ->check(CLI::IsMember({"series", "horn", "quadrature"}));

    CLI::App* gram =
        app.add_subcommand("gram", "Gram matrix of the canonical basis");
    add_common(gram, opt, false);
    gram->add_option("--max-label", opt.max_label, "largest basis label");

    CLI::App* expand =
        app.add_subcommand("expand", "expansion residuals vs N");
    add_common(expand, opt, false);
    expand->add_option("--N", opt.n_list,
                       "comma-separated truncation orders");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return (e.get_exit_code() == 0) ? kExitOk : kExitUsage;
    }

    try {
        if (zonal->parsed()) {
            opt.have_idx = false;
            return cmd_eval(opt);
        }
        if (assoc->parsed()) {
            opt.have_idx = true;
            return cmd_eval(opt);
        }
        if (verify->parsed())
            return cmd_verify(opt);
        if (scan->parsed())
            return cmd_scan(opt);
        if (gram->parsed())
            return cmd_gram(opt);
        if (expand->parsed())
            return cmd_expand(opt);
        return kExitUsage;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const convergence_error& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
