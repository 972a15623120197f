#include "lyap/characteristics.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "lyap/errors.hpp"
#include "lyap/ode.hpp"

namespace lyap {

namespace {

std::array<double, 3> backward_state(const SplitField& field, double x, double u, double p,
                                     double tol) {
    if (x < 0.0 || x > 1.0)
        throw EvaluationDomainError("characteristic query with x outside [0,1]");
    OdeOptions opts;
    opts.abs_tol = tol;
    opts.rel_tol = tol;
    auto rhs = [&field](double s, const std::array<double, 3>& y, std::array<double, 3>& dy) {
        dy[0] = y[1];
        dy[1] = field.F0_cut(s, y[0], y[1]);
        dy[2] = -field.F0_cut_p(s, y[0], y[1]);
    };
    return integrate_ode<3>(rhs, x, 0.0, {u, p, 0.0}, opts);
}

}  // namespace

double evaluate_g(const SplitField& field, double x, double u, double p, double tol) {
    if (x == 0.0) return 0.0;
    // The accumulator starts at 0 at the query point, so the foot value is the
    // negative of the g carried by the query point.
    return -backward_state(field, x, u, p, tol)[2];
}

CharacteristicState characteristic_foot(const SplitField& field, double x, double u, double p,
                                        double tol) {
    const auto y = backward_state(field, x, u, p, tol);
    CharacteristicState foot;
    foot.x = 0.0;
    foot.u = y[0];
    foot.p = y[1];
    foot.g = -y[2];
    return foot;
}

GTable::GTable(UniformAxis x_axis, UniformAxis u_axis, UniformAxis p_axis,
               std::vector<double> values)
    : x_(x_axis), u_(u_axis), p_(p_axis), values_(std::move(values)) {
    if (static_cast<long>(values_.size()) !=
        static_cast<long>(x_.n) * u_.n * p_.n)
        throw ConfigError("g table size does not match its axes");
}

bool GTable::covers(double x, double u, double p) const {
    return x_.covers(x) && u_.covers(u) && p_.covers(p);
}

double GTable::value_at(int ix, int iu, int ip) const {
    return values_[(static_cast<long>(ix) * u_.n + iu) * p_.n + ip];
}

double GTable::eval_with_indicator(double x, double u, double p, double* indicator) const {
    const AxisStencil sx_c = cubic_stencil(x_, x);
    const AxisStencil su_c = cubic_stencil(u_, u);
    const AxisStencil sp_c = cubic_stencil(p_, p);
    const AxisStencil sx_l = linear_stencil(x_, x);
    const AxisStencil su_l = linear_stencil(u_, u);
    const AxisStencil sp_l = linear_stencil(p_, p);

    auto tensor = [this](const AxisStencil& sx, const AxisStencil& su, const AxisStencil& sp) {
        double out = 0.0;
        for (int i = 0; i < sx.count; ++i) {
            double plane = 0.0;
            for (int j = 0; j < su.count; ++j) {
                double line = 0.0;
                const long base = (static_cast<long>(sx.idx[i]) * u_.n + su.idx[j]) * p_.n;
                for (int k = 0; k < sp.count; ++k) line += sp.w[k] * values_[base + sp.idx[k]];
                plane += su.w[j] * line;
            }
            out += sx.w[i] * plane;
        }
        return out;
    };

    const double cubic = tensor(sx_c, su_c, sp_c);
    if (indicator) *indicator = std::abs(cubic - tensor(sx_l, su_l, sp_l));
    return cubic;
}

double GTable::eval(double x, double u, double p) const {
    return eval_with_indicator(x, u, p, nullptr);
}

void GTable::save_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << "# g table: columns x,u,p,g; rows row-major over (x,u,p); axes uniform\n";
    out << "# nx=" << x_.n << " nu=" << u_.n << " np=" << p_.n << " xlo=" << x_.lo
        << " xhi=" << x_.hi << " ulo=" << u_.lo << " uhi=" << u_.hi << " plo=" << p_.lo
        << " phi=" << p_.hi << "\n";
    out << "x,u,p,g\n";
    char buf[128];
    for (int ix = 0; ix < x_.n; ++ix)
        for (int iu = 0; iu < u_.n; ++iu)
            for (int ip = 0; ip < p_.n; ++ip) {
                std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", x_.node(ix),
                              u_.node(iu), p_.node(ip), value_at(ix, iu, ip));
                out << buf;
            }
    if (!out) throw Error("failed while writing " + path);
}

GTable load_gtable_stream(std::istream& in, const std::string& name) {
    std::string line;
    if (!std::getline(in, line)) throw Error("empty g table file " + name);
    if (!std::getline(in, line)) throw Error("truncated g table header in " + name);
    UniformAxis ax, au, ap;
    if (std::sscanf(line.c_str(), "# nx=%d nu=%d np=%d xlo=%lf xhi=%lf ulo=%lf uhi=%lf plo=%lf phi=%lf",
                    &ax.n, &au.n, &ap.n, &ax.lo, &ax.hi, &au.lo, &au.hi, &ap.lo,
                    &ap.hi) != 9)
        throw Error("malformed g table header in " + name);
    if (!std::getline(in, line)) throw Error("missing column line in " + name);
    const long total = static_cast<long>(ax.n) * au.n * ap.n;
    std::vector<double> values;
    values.reserve(total);
    double x, u, p, g;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &x, &u, &p, &g) != 4)
            throw Error("malformed g table row in " + name + ": " + line);
        values.push_back(g);
    }
    if (static_cast<long>(values.size()) != total)
        throw Error("g table row count mismatch in " + name);
    return GTable(ax, au, ap, std::move(values));
}

GTable GTable::load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return load_gtable_stream(in, path);
}

GTable tabulate_g(const SplitField& field, const TensorGrid& grid, double tol, int threads) {
    if (grid.nx < 2 || grid.nu < 2 || grid.np < 2)
        throw ConfigError("g table needs at least two nodes per axis");
    const UniformAxis ax{0.0, 1.0, grid.nx};
    const UniformAxis au{-grid.u_half_width, grid.u_half_width, grid.nu};
    const UniformAxis ap{-grid.p_half_width, grid.p_half_width, grid.np};
    const long total = static_cast<long>(grid.nx) * grid.nu * grid.np;
    std::vector<double> values(total, 0.0);

    int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads < 1) n_threads = 1;

    std::atomic<long> next{0};
    std::atomic<bool> failed{false};
    std::string error_message;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const long idx = next.fetch_add(64);
            if (idx >= total || failed.load()) return;
            const long end = std::min(idx + 64, total);
            try {
                for (long i = idx; i < end; ++i) {
                    const int ix = static_cast<int>(i / (static_cast<long>(grid.nu) * grid.np));
                    const long rem = i % (static_cast<long>(grid.nu) * grid.np);
                    const int iu = static_cast<int>(rem / grid.np);
                    const int ip = static_cast<int>(rem % grid.np);
                    values[i] = evaluate_g(field, ax.node(ix), au.node(iu), ap.node(ip), tol);
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                failed.store(true);
                if (error_message.empty()) error_message = e.what();
                return;
            }
        }
    };

    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) throw Error("g tabulation failed: " + error_message);
    return GTable(ax, au, ap, std::move(values));
}

}  // namespace lyap
