#include "jlx/tables.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "jlx/numfmt.hpp"

namespace jlx::tables {

using exponents::ProblemParams;

namespace {

constexpr int kVerifyHorizon = 200;  // integers checked above each n_star
constexpr double kSweepTiny = 1e-6;

struct RowSpec {
    double s_lo;
    double s_hi;
    Claim claims[6];
};

// 5 rows x 6 columns of location claims.
constexpr RowSpec kTable1[] = {
    {0.0, 1.0, {{'<', 1.5, 28}, {'>', 0.6, 20}, {'<', 1.2, 46}, {'>', 0.8, 37}, {'<', 1.1, 79}, {'>', 0.9, 71}}},
    {1.0, 2.0, {{'<', 1.5, 36}, {'>', 0.6, 26}, {'<', 1.2, 63}, {'>', 0.8, 51}, {'<', 1.1, 110}, {'>', 0.9, 100}}},
    {2.0, 3.0, {{'<', 1.5, 44}, {'>', 0.6, 33}, {'<', 1.2, 79}, {'>', 0.8, 65}, {'<', 1.1, 141}, {'>', 0.9, 128}}},
    {3.0, 4.0, {{'<', 1.5, 52}, {'>', 0.6, 39}, {'<', 1.2, 96}, {'>', 0.8, 79}, {'<', 1.1, 172}, {'>', 0.9, 157}}},
    {4.0, 5.0, {{'<', 1.5, 59}, {'>', 0.6, 46}, {'<', 1.2, 112}, {'>', 0.8, 93}, {'<', 1.1, 204}, {'>', 0.9, 186}}},
};

// Rows of the critical-dimension table: {n1 bound, middle column, n0 bound}.
constexpr double kTable2[][3] = {
    {22.0, 24.0, 24.0}, {28.0, 27.0, 27.0}, {33.0, 30.0, 33.0},
    {39.0, 33.0, 39.0}, {44.0, 36.0, 44.0}};

}  // namespace

std::vector<TableRow> table1_check(Exec exec) {
    // Flatten (row, claim, s-sample, n) into independent work items.
    struct Item {
        std::size_t row, claim;
        double s;
        int n;
    };
    std::vector<Item> items;
    for (std::size_t r = 0; r < std::size(kTable1); ++r) {
        const RowSpec& row = kTable1[r];
        const double samples[3] = {row.s_lo + 0.01, 0.5 * (row.s_lo + row.s_hi), row.s_hi};
        for (std::size_t c = 0; c < 6; ++c) {
            for (double s : samples) {
                for (int n = row.claims[c].n_star; n <= row.claims[c].n_star + kVerifyHorizon; ++n)
                    items.push_back({r, c, s, n});
            }
        }
    }

    std::vector<double> margins(items.size());
    for_each_index(items.size(), exec, [&](std::size_t i) {
        const Item& it = items[i];
        const Claim& cl = kTable1[it.row].claims[it.claim];
        const double a = exponents::solve_a(ProblemParams(static_cast<double>(it.n), it.s));
        margins[i] = cl.direction == '<' ? cl.a_star - a : a - cl.a_star;
    });

    std::vector<TableRow> out;
    for (std::size_t r = 0; r < std::size(kTable1); ++r) {
        TableRow row{kTable1[r].s_lo, kTable1[r].s_hi, {}};
        for (std::size_t c = 0; c < 6; ++c) {
            ClaimResult res{kTable1[r].claims[c], true, 0.0, 0.0, 0.0, false, 0.0};
            bool first = true;
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (items[i].row != r || items[i].claim != c) continue;
                if (first || margins[i] < res.worst_margin) {
                    res.worst_margin = margins[i];
                    res.worst_n = items[i].n;
                    res.worst_s = items[i].s;
                    first = false;
                }
            }
            res.verified = res.worst_margin > 0.0;
            // Sufficiency via the bound route at the binding right endpoint.
            const Claim& cl = kTable1[r].claims[c];
            const auto report = cl.direction == '<'
                                    ? bounds::threshold_upper(kTable1[r].s_hi, cl.a_star - 1.0)
                                    : bounds::threshold_lower(kTable1[r].s_hi, 1.0 - cl.a_star);
            res.bound_nbar = report.nbar;
            res.bound_route_implied = report.nbar <= static_cast<double>(cl.n_star);
            row.claims.push_back(res);
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<Table2Row> table2_compute() {
    std::vector<Table2Row> out;
    for (std::size_t r = 0; r < std::size(kTable2); ++r) {
        Table2Row row;
        row.s_lo = static_cast<double>(r);
        row.s_hi = static_cast<double>(r + 1);
        row.n1_bound = kTable2[r][0];
        row.n0_mid_info = kTable2[r][1];
        row.n0_bound = kTable2[r][2];
        row.computed_poly_term = bounds::threshold_upper(row.s_hi, 1.0).poly_term;
        row.computed_n0 = exponents::critical_dimension(row.s_hi);
        row.poly_ok = row.computed_poly_term < row.n1_bound;
        row.n0_ok = static_cast<double>(row.computed_n0) <= row.n0_bound;
        out.push_back(row);
    }
    return out;
}

SweepResult sweep(double s, double n_min, double n_max, double step, Exec exec) {
    if (!(s > 0.0) || !(2.0 * s < n_min))
        throw DomainError("sweep: require 2s < n_min");
    if (!(n_min <= n_max)) throw DomainError("sweep: empty range");
    if (!(step > 0.0)) throw DomainError("sweep: require step > 0");

    std::vector<double> grid;
    for (double n = n_min; n <= n_max + 1e-12 * std::max(1.0, std::abs(n_max)); n += step)
        grid.push_back(n);

    SweepResult result;
    std::vector<char> keep(grid.size(), 1);
    std::vector<SweepRecord> records(grid.size());
    for_each_index(grid.size(), exec, [&](std::size_t i) {
        const double n = grid[i];
        if (n <= 2.0 * s + kSweepTiny) {
            keep[i] = 0;
            return;
        }
        const auto rep = exponents::exponent_report(ProblemParams(n, s));
        records[i] = {n, s, rep.a_ns, rep.k1, rep.k2, rep.p1, rep.p2, rep.p_sobolev, rep.hardy};
    });
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (keep[i])
            result.records.push_back(records[i]);
        else
            ++result.skipped;
    }
    return result;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "n,s,a,k1,k2,p1,p2,p_sobolev,hardy\n";
    for (const SweepRecord& r : result.records) {
        out << numfmt::sig17(r.n) << ',' << numfmt::sig17(r.s) << ',' << numfmt::sig17(r.a_ns)
            << ',' << numfmt::sig17(r.k1) << ',' << numfmt::sig17(r.k2) << ','
            << numfmt::sig17(r.p1) << ',' << (r.p2 ? numfmt::sig17(*r.p2) : std::string())
            << ',' << numfmt::sig17(r.p_sobolev) << ',' << numfmt::sig17(r.hardy) << '\n';
    }
}

}  // namespace jlx::tables
