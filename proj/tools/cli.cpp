#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <lame3trf/lame3trf.hpp>

namespace lame3trf::cli
{

namespace
{

using json = nlohmann::ordered_json;

// Raised for bad input that CLI11 does not see (config files, axis specs, mismatched K).
struct usage_problem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

std::string join_s(const std::vector<double> &s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) {
            out += ';';
        }
        out += format_double(s[i]);
    }
    return out;
}

std::string csv_cell(const json &v)
{
    if (v.is_null()) {
        return "";
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    if (v.is_number_integer()) {
        return std::to_string(v.get<long long>());
    }
    if (v.is_number()) {
        return format_double(v.get<double>());
    }
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) {
            q += c;
            if (c == '"') {
                q += '"';
            }
        }
        return q + "\"";
    }
    return s;
}

// Verify rows keep their parameters under "params"; CSV output flattens them.
json flatten(const json &row)
{
    json flat = json::object();
    for (auto it = row.begin(); it != row.end(); ++it) {
        if (it.key() == "params" && it->is_object()) {
            for (auto p = it->begin(); p != it->end(); ++p) {
                flat[p.key()] = *p;
            }
        } else {
            flat[it.key()] = *it;
        }
    }
    return flat;
}

void write_csv(const std::vector<json> &rows, std::ostream &os)
{
    std::vector<json> flat;
    std::vector<std::string> cols;
    for (const auto &r : rows) {
        flat.push_back(flatten(r));
        for (auto it = flat.back().begin(); it != flat.back().end(); ++it) {
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) {
                cols.push_back(it.key());
            }
        }
    }
    for (std::size_t i = 0; i < cols.size(); ++i) {
        os << (i ? "," : "") << cols[i];
    }
    os << '\n';
    for (const auto &r : flat) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            os << (i ? "," : "");
            if (r.contains(cols[i])) {
                os << csv_cell(r[cols[i]]);
            }
        }
        os << '\n';
    }
}

// nlohmann writes NaN as null, which is what we want.
void write_json(const std::vector<json> &rows, std::ostream &os)
{
    json arr = json::array();
    for (const auto &r : rows) {
        arr.push_back(r);
    }
    os << arr.dump(2) << '\n';
}

LameParams lame_params(const RunConfig &c)
{
    LameParams p{c.rho, c.alpha, c.h};
    p.validate();
    return p;
}

EvaluationPoint point(const RunConfig &c)
{
    return c.z ? EvaluationPoint::from_z(*c.z, c.rho) : EvaluationPoint::from_xi(c.xi, c.rho);
}

json base_params(const RunConfig &c)
{
    json p;
    p["rho"] = c.rho;
    p["h"] = c.h;
    p["alpha"] = c.alpha;
    p["lambda"] = c.lambda;
    p["xi"] = c.xi;
    if (c.z) {
        p["z"] = *c.z;
    }
    return p;
}

json verify_row(const std::string &command, json params, complex_t lhs, complex_t rhs, double gap, double tail,
                double tol)
{
    json r;
    r["command"] = command;
    r["params"] = std::move(params);
    r["lhs_re"] = lhs.real();
    r["lhs_im"] = lhs.imag();
    r["rhs_re"] = rhs.real();
    r["rhs_im"] = rhs.imag();
    r["gap"] = gap;
    r["tail_estimate"] = tail;
    r["pass"] = std::isfinite(gap) && gap < tol + tail;
    return r;
}

std::vector<json> eval_series_rows(const RunConfig &c, std::ostream &err)
{
    const auto p = lame_params(c);
    const auto lambda = IndicialExponent::from_value(c.lambda);
    const auto series = series_coefficients(p, lambda, c.c0, c.N);
    const auto pt = point(c);
    const double y = eval_series(series, pt, [&](const std::string &m) { err << "warning: " << m << '\n'; });
    json r;
    r["rho"] = c.rho;
    r["h"] = c.h;
    r["alpha"] = c.alpha;
    r["lambda"] = c.lambda;
    r["xi"] = pt.xi;
    if (c.z) {
        r["z"] = *c.z;
    }
    r["n"] = c.N;
    r["c0"] = c.c0;
    r["value"] = y;
    return {r};
}

std::vector<json> eval_sn_rows(const RunConfig &c)
{
    if (!c.z) {
        throw usage_problem("eval-sn needs --z");
    }
    const auto e = jacobi_sncndn(*c.z, c.rho);
    json r;
    r["z"] = *c.z;
    r["rho"] = c.rho;
    r["sn"] = e.sn;
    r["cn"] = e.cn;
    r["dn"] = e.dn;
    return {r};
}

std::vector<json> heun_map_rows(const RunConfig &c)
{
    const auto hp = heun_correspondence(lame_params(c));
    json r;
    r["rho"] = c.rho;
    r["h"] = c.h;
    r["alpha"] = c.alpha;
    r["gamma"] = hp.gamma;
    r["delta"] = hp.delta;
    r["epsilon"] = hp.epsilon;
    r["a"] = hp.a;
    r["alpha_h"] = hp.alpha_h;
    r["beta_h"] = hp.beta_h;
    r["q"] = hp.q;
    return {r};
}

std::vector<json> verify_lemma1(const RunConfig &c, double tol)
{
    const int N = c.A_max.value_or(60);
    const std::pair<double, double> ga[] = {{0.75, 0.25}, {1.25, 0.75}, {1.3, 0.6}};
    std::vector<json> rows;
    for (const auto &[gamma, A] : ga) {
        for (double w : {-0.3, -0.1, 0.1, 0.3}) {
            for (double x : {-0.4, 0.0, 0.3}) {
                const auto r = lemma1_identity(gamma, A, w, x, N);
                json p;
                p["gamma"] = gamma;
                p["a"] = A;
                p["w"] = w;
                p["x"] = x;
                p["n"] = N;
                rows.push_back(verify_row("verify lemma1", p, r.lhs, r.rhs, r.gap, r.tail_estimate, tol));
            }
        }
    }
    return rows;
}

std::vector<json> verify_ode(const RunConfig &c, double tol)
{
    const auto p = lame_params(c);
    const auto series = series_coefficients(p, IndicialExponent::from_value(c.lambda), c.c0, c.N);
    std::vector<json> rows;
    auto add = [&](OdeForm form, const EvaluationPoint &pt, double row_tol) {
        const auto res = ode_residual(p, series, pt, form);
        json params = base_params(c);
        params["xi"] = pt.xi;
        params["z"] = pt.z ? json(*pt.z) : json(nullptr);
        params["n"] = c.N;
        params["form"] = form == OdeForm::algebraic ? "algebraic" : "weierstrass";
        const double gap = form == OdeForm::algebraic ? res.relative() : res.mixed();
        rows.push_back(verify_row("verify ode", params, res.value, 0.0, gap, 0.0, row_tol));
    };
    const auto pt = point(c);
    add(OdeForm::algebraic, pt, tol);
    // the z-form loses accuracy through the chain rule near the branch points
    const double z = c.z ? *c.z : jacobi_sn2_inverse(c.xi, c.rho);
    add(OdeForm::weierstrass, EvaluationPoint::from_z(z, c.rho), 1e4 * tol);
    return rows;
}

std::vector<json> verify_residue(const RunConfig &c, double tol)
{
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> ds(0.01, 0.3);
    std::uniform_real_distribution<double> dtu(0.01, 0.99);
    std::uniform_real_distribution<double> de(-0.2, -0.01);
    std::vector<json> rows;
    for (int k = 0; k < 100; ++k) {
        const double s = ds(rng);
        const double t = dtu(rng);
        const double u = dtu(rng);
        const double eta = de(rng);
        const complex_t lhs = residue_contour(s, t, u, eta, c.lambda, c.M);
        const complex_t rhs = residue_closed_form(s, t, u, eta, c.lambda);
        json p;
        p["lambda"] = c.lambda;
        p["s"] = s;
        p["t"] = t;
        p["u"] = u;
        p["eta"] = eta;
        p["m"] = c.M;
        rows.push_back(verify_row("verify residue", p, lhs, rhs, std::abs(lhs - rhs), 0.0, tol));
    }
    return rows;
}

std::vector<json> verify_gf(const RunConfig &c, int order, double tol)
{
    const auto p = lame_params(c);
    const auto lambda = IndicialExponent::from_value(c.lambda);
    GFWeights w{c.gamma, SParameters(c.s), c.A_max.value_or(order == 0 ? 60 : 30)};
    const int nq = c.nq.value_or(order == 2 ? 16 : 64);
    const auto grid = QuadratureGrid::make(c.lambda, std::max(order, 1), nq, c.M);
    const auto pt = point(c);
    const auto r = gf_verify_order(p, lambda, w, pt, order, grid, c.op_power, c.c0);
    json params = base_params(c);
    params["xi"] = pt.xi;
    params["gamma"] = c.gamma;
    params["s"] = join_s(c.s);
    params["a_max"] = w.A_max;
    params["nq"] = nq;
    params["m"] = c.M;
    params["op_power"] = c.op_power;
    return {verify_row("verify gf-order" + std::to_string(order), params, r.lhs, r.rhs, r.gap,
                       r.truncation_estimate, tol)};
}

std::vector<json> verify_kernels(const RunConfig &c, double tol)
{
    const int N = c.A_max.value_or(100);
    std::vector<json> rows;
    for (auto kind : {SolutionKind::first, SolutionKind::second}) {
        const double gamma = kind == SolutionKind::first ? 0.75 : 1.25;
        const double A = kind == SolutionKind::first ? 0.25 : 0.75;
        const double pref = std::pow(2.0, kind == SolutionKind::first ? -0.75 : -0.25);
        for (double s : {-0.3, -0.15, 0.0, 0.15, 0.3}) {
            for (double x : {-0.2, -0.1, 0.0}) {
                const auto r = lemma1_identity(gamma, A, s, x, N);
                const complex_t k = kind == SolutionKind::first ? kernel_A(s, complex_t(x)) : kernel_B(s, complex_t(x));
                const complex_t rhs = pref * k;
                json p;
                p["kind"] = kind == SolutionKind::first ? "a" : "b";
                p["s"] = s;
                p["x"] = x;
                p["n"] = N;
                rows.push_back(verify_row("verify kernels", p, r.lhs, rhs, std::abs(r.lhs - rhs), r.tail_estimate, tol));
            }
        }
    }
    return rows;
}

const std::map<std::string, double> default_tol{{"lemma1", 1e-9},    {"ode", 1e-12},     {"residue", 1e-10},
                                                {"gf-order0", 1e-8}, {"gf-order1", 1e-6}, {"gf-order2", 1e-4},
                                                {"kernels", 1e-9}};

std::vector<json> verify_rows(const RunConfig &c)
{
    const auto it = default_tol.find(c.target);
    if (it == default_tol.end()) {
        throw usage_problem("unknown verify target '" + c.target + "'");
    }
    const double tol = c.tol.value_or(it->second);
    if (c.target == "lemma1") {
        return verify_lemma1(c, tol);
    }
    if (c.target == "ode") {
        return verify_ode(c, tol);
    }
    if (c.target == "residue") {
        return verify_residue(c, tol);
    }
    if (c.target == "kernels") {
        return verify_kernels(c, tol);
    }
    return verify_gf(c, c.target.back() - '0', tol);
}

bool is_verify_target(const std::string &t) { return default_tol.count(t) > 0; }

std::vector<json> rows_for(const RunConfig &c, std::ostream &err)
{
    const std::string &what = c.command == "sweep" ? c.target : c.command;
    if (what == "eval-series") {
        return eval_series_rows(c, err);
    }
    if (what == "eval-sn") {
        return eval_sn_rows(c);
    }
    if (what == "heun-map") {
        return heun_map_rows(c);
    }
    if (c.command == "verify") {
        return verify_rows(c);
    }
    if (is_verify_target(what)) {
        RunConfig v = c;
        v.target = what;
        return verify_rows(v);
    }
    throw usage_problem("unknown target '" + what + "'");
}

struct Axis {
    std::string name;
    std::vector<double> values;
};

Axis parse_axis(const std::string &spec)
{
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw usage_problem("axis '" + spec + "' must look like name=v1,v2 or name=start:stop:count");
    }
    Axis a{spec.substr(0, eq), {}};
    const std::string body = spec.substr(eq + 1);
    auto num = [&](const std::string &t) {
        double v = 0.0;
        const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
        if (r.ec != std::errc() || r.ptr != t.data() + t.size()) {
            throw usage_problem("axis '" + a.name + "': bad number '" + t + "'");
        }
        return v;
    };
    if (body.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(body);
        for (std::string p; std::getline(ss, p, ':');) {
            parts.push_back(p);
        }
        if (parts.size() != 3) {
            throw usage_problem("axis '" + a.name + "': range needs start:stop:count");
        }
        const double lo = num(parts[0]);
        const double hi = num(parts[1]);
        const double cnt = num(parts[2]);
        if (cnt < 1 || cnt != std::floor(cnt)) {
            throw usage_problem("axis '" + a.name + "': count must be a positive integer");
        }
        const int n = static_cast<int>(cnt);
        for (int k = 0; k < n; ++k) {
            a.values.push_back(n == 1 ? lo : lo + (hi - lo) * k / (n - 1));
        }
    } else {
        std::stringstream ss(body);
        for (std::string p; std::getline(ss, p, ',');) {
            a.values.push_back(num(p));
        }
    }
    if (a.values.empty()) {
        throw usage_problem("axis '" + a.name + "' has no values");
    }
    std::sort(a.values.begin(), a.values.end());
    return a;
}

void set_axis(RunConfig &c, const std::string &name, double v)
{
    if (name == "rho") {
        c.rho = v;
    } else if (name == "h") {
        c.h = v;
    } else if (name == "alpha") {
        c.alpha = v;
    } else if (name == "xi") {
        c.xi = v;
    } else if (name == "gamma") {
        c.gamma = v;
    } else if (name == "lambda") {
        c.lambda = v;
    } else if (name.size() > 1 && name[0] == 's' &&
               std::all_of(name.begin() + 1, name.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        const auto k = static_cast<std::size_t>(std::stoi(name.substr(1)));
        if (k >= c.s.size()) {
            throw usage_problem("axis '" + name + "' is beyond the s chain");
        }
        c.s[k] = v;
    } else {
        throw usage_problem("unknown axis '" + name + "'");
    }
}

std::vector<json> sweep_rows(const RunConfig &c, std::ostream &err)
{
    std::vector<Axis> axes;
    for (const auto &spec : c.axes) {
        axes.push_back(parse_axis(spec));
    }
    std::vector<json> rows;
    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
        RunConfig point = c;
        for (std::size_t k = 0; k < axes.size(); ++k) {
            set_axis(point, axes[k].name, axes[k].values[idx[k]]);
        }
        for (auto &r : rows_for(point, err)) {
            rows.push_back(std::move(r));
        }
        // last axis varies fastest
        std::size_t k = axes.size();
        while (k > 0) {
            --k;
            if (++idx[k] < axes[k].values.size()) {
                break;
            }
            idx[k] = 0;
            if (k == 0) {
                return rows;
            }
        }
        if (axes.empty()) {
            return rows;
        }
    }
}

int execute(const RunConfig &c, std::ostream &out, std::ostream &err)
{
    if (c.format != "csv" && c.format != "json") {
        throw usage_problem("--format must be csv or json");
    }
    if (c.K && *c.K != static_cast<int>(c.s.size()) - 1) {
        throw usage_problem("--K must equal the number of s values minus one");
    }
    if (c.op_power != 1 && c.op_power != 2) {
        throw usage_problem("--op-power must be 1 or 2");
    }
    const auto rows = c.command == "sweep" ? sweep_rows(c, err) : rows_for(c, err);

    std::ofstream file;
    if (!c.out.empty()) {
        file.open(c.out);
        if (!file) {
            throw usage_problem("cannot open '" + c.out + "' for writing");
        }
    }
    std::ostream &os = c.out.empty() ? out : file;
    if (c.format == "json") {
        write_json(rows, os);
    } else {
        write_csv(rows, os);
    }

    const bool verifying = c.command == "verify" || (c.command == "sweep" && is_verify_target(c.target));
    if (!verifying) {
        return success;
    }
    std::size_t passed = 0;
    double worst = 0.0;
    for (const auto &r : rows) {
        passed += r["pass"].get<bool>() ? 1 : 0;
        const double g = r["gap"].is_number() ? r["gap"].get<double>() : INFINITY;
        worst = std::max(worst, g);
    }
    const bool ok = passed == rows.size();
    err << (ok ? "PASS" : "FAIL") << " verify " << c.target << ": " << passed << "/" << rows.size()
        << " cases within tolerance, max gap " << format_double(worst) << '\n';
    return ok ? success : verification_failure;
}

void apply_config_file(const std::string &path, RunConfig &c, CLI::App &app)
{
    std::ifstream in(path);
    if (!in) {
        throw usage_problem("cannot read config file '" + path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception &e) {
        throw usage_problem(std::string("config file: ") + e.what());
    }
    if (!j.is_object()) {
        throw usage_problem("config file must hold a JSON object");
    }
    // flags given on the command line win over the file
    const auto given = [&](const std::string &flag) { return app.get_option(flag)->count() > 0; };
    using setter = std::function<void(const json &)>;
    const std::map<std::string, std::pair<std::string, setter>> keys{
        {"rho", {"--rho", [&](const json &v) { c.rho = v.get<double>(); }}},
        {"h", {"--h", [&](const json &v) { c.h = v.get<double>(); }}},
        {"alpha", {"--alpha", [&](const json &v) { c.alpha = v.get<double>(); }}},
        {"lambda", {"--lambda", [&](const json &v) { c.lambda = v.get<double>(); }}},
        {"xi", {"--xi", [&](const json &v) { c.xi = v.get<double>(); }}},
        {"z", {"--z", [&](const json &v) { c.z = v.get<double>(); }}},
        {"N", {"--N", [&](const json &v) { c.N = v.get<int>(); }}},
        {"c0", {"--c0", [&](const json &v) { c.c0 = v.get<double>(); }}},
        {"s", {"--s", [&](const json &v) { c.s = v.get<std::vector<double>>(); }}},
        {"gamma", {"--gamma", [&](const json &v) { c.gamma = v.get<double>(); }}},
        {"K", {"--K", [&](const json &v) { c.K = v.get<int>(); }}},
        {"nmax", {"--nmax", [&](const json &v) { c.n_max = v.get<int>(); }}},
        {"amax", {"--amax", [&](const json &v) { c.A_max = v.get<int>(); }}},
        {"nq", {"--nq", [&](const json &v) { c.nq = v.get<int>(); }}},
        {"M", {"--M", [&](const json &v) { c.M = v.get<int>(); }}},
        {"tol", {"--tol", [&](const json &v) { c.tol = v.get<double>(); }}},
        {"op-power", {"--op-power", [&](const json &v) { c.op_power = v.get<int>(); }}},
        {"format", {"--format", [&](const json &v) { c.format = v.get<std::string>(); }}},
        {"out", {"--out", [&](const json &v) { c.out = v.get<std::string>(); }}},
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto k = keys.find(it.key());
        if (k == keys.end()) {
            throw usage_problem("config file: unknown key '" + it.key() + "'");
        }
        if (given(k->second.first)) {
            continue;
        }
        try {
            k->second.second(*it);
        } catch (const json::exception &e) {
            throw usage_problem("config file: key '" + it.key() + "': " + e.what());
        }
    }
}

} // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    try {
        return execute(config, out, err);
    } catch (const usage_problem &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const invalid_parameter &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const index_error &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception &e) {
        err << "numerical failure: " << e.what() << '\n';
        return verification_failure;
    }
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    RunConfig c;
    std::string config_path;
    CLI::App app{"Lame equation series, integral forms and generating functions", "lame3trf"};
    // -h would collide with --h
    app.set_help_flag("--help", "print this help message and exit");
    app.set_help_all_flag("--help-all");
    app.require_subcommand(1);

    app.add_option("--rho", c.rho, "modulus, 0 < rho < 1");
    app.add_option("--h", c.h, "accessory parameter");
    app.add_option("--alpha", c.alpha, "degree parameter");
    app.add_option("--lambda", c.lambda, "indicial exponent, 0 or 0.5");
    auto *xi_opt = app.add_option("--xi", c.xi, "evaluation point in the algebraic variable");
    auto *z_opt = app.add_option("--z", c.z, "evaluation point in the Weierstrass variable");
    xi_opt->excludes(z_opt);
    app.add_option("--N", c.N, "number of series terms");
    app.add_option("--c0", c.c0, "leading coefficient");
    app.add_option("--s", c.s, "chain weights s_0,...,s_K")->delimiter(',');
    app.add_option("--gamma", c.gamma, "generating-function exponent");
    app.add_option("--K", c.K, "chain length minus one (checked against --s)");
    app.add_option("--nmax", c.n_max, "highest order");
    app.add_option("--amax", c.A_max, "truncation of the alpha_0 sums");
    app.add_option("--nq", c.nq, "Gauss nodes per direction");
    app.add_option("--M", c.M, "contour nodes");
    app.add_option("--tol", c.tol, "verification tolerance");
    app.add_option("--op-power", c.op_power, "exponent of the Euler operator, 1 or 2");
    app.add_option("--config", config_path, "JSON file with default option values");
    app.add_option("--format", c.format, "csv or json");
    app.add_option("--out", c.out, "output file");

    auto *eval_series = app.add_subcommand("eval-series", "evaluate the truncated Frobenius series");
    auto *eval_sn = app.add_subcommand("eval-sn", "Jacobi sn, cn, dn at --z");
    auto *heun = app.add_subcommand("heun-map", "Heun parameters for the given Lame parameters");
    auto *verify = app.add_subcommand("verify", "check an identity numerically");
    verify->add_option("target", c.target, "lemma1|ode|residue|gf-order0|gf-order1|gf-order2|kernels")
        ->required()
        ->check(CLI::IsMember({"lemma1", "ode", "residue", "gf-order0", "gf-order1", "gf-order2", "kernels"}));
    auto *sweep = app.add_subcommand("sweep", "tabulate a command over a parameter grid");
    sweep->add_option("--target", c.target, "eval-series|eval-sn|heun-map or a verify target")
        ->default_val("eval-series");
    sweep->add_option("--axis", c.axes, "name=v1,v2 or name=start:stop:count; first axis is outermost");
    for (auto *sub : {eval_series, eval_sn, heun, verify, sweep}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return usage_error;
    }
    c.command = app.get_subcommands().front()->get_name();
    if (!config_path.empty()) {
        try {
            apply_config_file(config_path, c, app);
        } catch (const usage_problem &e) {
            err << "error: " << e.what() << '\n';
            return usage_error;
        }
    }
    return run(c, out, err);
}

} // namespace lame3trf::cli
