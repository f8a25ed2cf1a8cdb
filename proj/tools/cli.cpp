// Command-line front end: generate, decompose, round, combine, and inspect
// tensors in the library's container formats.  The file kind is chosen by
// extension: .dnst dense, .ttv tensor train, .ttm matrix train.

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "ttkit/dense_ops.hpp"
#include "ttkit/errors.hpp"
#include "ttkit/io.hpp"
#include "ttkit/random.hpp"
#include "ttkit/tt.hpp"
#include "ttkit/tt_arith.hpp"
#include "ttkit/ttm.hpp"

namespace {

using namespace ttkit;

enum class FileKind { dense, train, matrix };

FileKind kind_of(const std::string& path) {
    auto ends_with = [&path](const char* suffix) {
        const std::size_t n = std::strlen(suffix);
        return path.size() >= n && path.compare(path.size() - n, n, suffix) == 0;
    };
    if (ends_with(".dnst")) return FileKind::dense;
    if (ends_with(".ttv")) return FileKind::train;
    if (ends_with(".ttm")) return FileKind::matrix;
    throw io_error(path + ": unknown extension, expected .dnst, .ttv, or .ttm");
}

std::string fmt_scalar(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_sizes(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(v[k]);
    }
    return s + ")";
}

const char* flag_name(OrthFlag f) {
    switch (f) {
        case OrthFlag::left: return "left";
        case OrthFlag::right: return "right";
        default: return "none";
    }
}

struct TruncFlags {
    double eps = 0.0;
    bool has_eps = false;
    std::vector<std::size_t> max_ranks;

    TruncationSpec spec() const {
        TruncationSpec s;
        if (has_eps) s.epsilon = eps;
        if (!max_ranks.empty()) s.max_ranks = max_ranks;
        return s;
    }
};

void add_trunc_flags(CLI::App* sub, TruncFlags& t) {
    sub->add_option("--eps", t.eps, "relative Frobenius-norm truncation budget")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--max-ranks", t.max_ranks,
                    "bond rank caps (one value broadcasts)")
        ->delimiter(',');
}

void print_tt_summary(const TTTensor& x) {
    std::cout << "bond ranks: " << fmt_sizes(x.bond_ranks()) << "\n";
}

void run_info(const std::string& path) {
    switch (kind_of(path)) {
        case FileKind::dense: {
            const DenseTensor x = read_dense(path);
            std::cout << "kind: dense tensor\n"
                      << "order: " << x.order() << "\n"
                      << "dims: " << x.shape().to_string() << "\n"
                      << "frobenius norm: " << fmt_scalar(x.frobenius_norm()) << "\n"
                      << "storage: " << x.storage_bytes() << " bytes\n";
            break;
        }
        case FileKind::train: {
            const TTTensor x = read_tt(path);
            std::string flags;
            for (const TTCore& c : x.cores()) {
                if (!flags.empty()) flags += ',';
                flags += flag_name(c.orth());
            }
            std::cout << "kind: tensor train\n"
                      << "order: " << x.order() << "\n"
                      << "dims: " << fmt_sizes(x.dims()) << "\n"
                      << "bond ranks: " << fmt_sizes(x.bond_ranks()) << "\n"
                      << "orth flags: " << flags << "\n"
                      << "storage: " << x.storage_bytes() << " bytes\n";
            break;
        }
        case FileKind::matrix: {
            const TTMatrix a = read_ttm(path);
            std::cout << "kind: matrix train\n"
                      << "order: " << a.order() << "\n"
                      << "row dims: " << fmt_sizes(a.row_dims()) << "\n"
                      << "col dims: " << fmt_sizes(a.col_dims()) << "\n"
                      << "bond ranks: " << fmt_sizes(a.bond_ranks()) << "\n"
                      << "storage: " << a.storage_bytes() << " bytes\n";
            break;
        }
    }
}

void run_bench(std::size_t max_order, std::size_t dim, std::size_t rank,
               std::size_t reps, std::size_t batch, std::uint64_t seed) {
    std::cout << "n,i,r,op,seconds,bytes\n";
    double sink = 0.0;
    for (std::size_t n = 8; n <= max_order; n *= 2) {
        Rng rng(seed + n);
        const std::vector<std::size_t> dims(n, dim);
        const TTTensor x = random_tt(rng, dims, {rank});
        const TTTensor y = random_tt(rng, dims, {rank});
        sink += tt_dot(x, y);
        std::vector<double> samples;
        samples.reserve(reps);
        for (std::size_t rep = 0; rep < reps; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            for (std::size_t b = 0; b < batch; ++b) sink += tt_dot(x, y);
            const auto t1 = std::chrono::steady_clock::now();
            samples.push_back(std::chrono::duration<double>(t1 - t0).count() /
                              static_cast<double>(batch));
        }
        std::sort(samples.begin(), samples.end());
        const double median = samples[samples.size() / 2];
        std::printf("%zu,%zu,%zu,dot,%.9e,%zu\n", n, dim, rank, median,
                    x.storage_bytes() + y.storage_bytes());
    }
    if (!std::isfinite(sink)) std::cerr << "warning: non-finite benchmark values\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tensor-train toolkit"};
    app.require_subcommand(1);

    // random
    auto* rnd = app.add_subcommand("random", "generate a random tensor");
    std::vector<std::size_t> rnd_dims, rnd_col_dims, rnd_ranks;
    std::uint64_t rnd_seed = 1;
    std::string rnd_out;
    rnd->add_option("--dims", rnd_dims, "mode sizes (rows for .ttm)")
        ->required()
        ->delimiter(',');
    rnd->add_option("--col-dims", rnd_col_dims, "column mode sizes (.ttm only)")
        ->delimiter(',');
    rnd->add_option("--ranks", rnd_ranks, "internal bond ranks (one value broadcasts)")
        ->delimiter(',');
    rnd->add_option("--seed", rnd_seed, "generator seed");
    rnd->add_option("-o,--output", rnd_out, "output file (.dnst, .ttv, or .ttm)")
        ->required();
    rnd->callback([&] {
        Rng rng(rnd_seed);
        switch (kind_of(rnd_out)) {
            case FileKind::dense:
                if (!rnd_col_dims.empty() || !rnd_ranks.empty()) {
                    throw shape_error(
                        "random: --col-dims and --ranks apply only to train outputs");
                }
                write_dense(rnd_out, random_dense(rng, Shape(rnd_dims)));
                break;
            case FileKind::train:
                if (!rnd_col_dims.empty()) {
                    throw shape_error("random: --col-dims applies only to .ttm outputs");
                }
                write_tt(rnd_out, random_tt(rng, rnd_dims, rnd_ranks));
                break;
            case FileKind::matrix:
                write_ttm(rnd_out,
                          random_ttm(rng, rnd_dims,
                                     rnd_col_dims.empty() ? rnd_dims : rnd_col_dims,
                                     rnd_ranks));
                break;
        }
    });

    // decompose
    auto* dec = app.add_subcommand("decompose", "dense tensor to tensor train");
    std::string dec_in, dec_out;
    TruncFlags dec_trunc;
    dec->add_option("input", dec_in, "input .dnst file")->required();
    dec->add_option("-o,--output", dec_out, "output .ttv file")->required();
    add_trunc_flags(dec, dec_trunc);
    dec->callback([&] {
        dec_trunc.has_eps = dec->count("--eps") > 0;
        const TTTensor tt = tt_svd(read_dense(dec_in), dec_trunc.spec());
        write_tt(dec_out, tt);
        print_tt_summary(tt);
    });

    // round
    auto* rnd2 = app.add_subcommand("round", "truncate a tensor train");
    std::string round_in, round_out;
    TruncFlags round_trunc;
    rnd2->add_option("input", round_in, "input .ttv file")->required();
    rnd2->add_option("-o,--output", round_out, "output .ttv file")->required();
    add_trunc_flags(rnd2, round_trunc);
    rnd2->callback([&] {
        round_trunc.has_eps = rnd2->count("--eps") > 0;
        const TTTensor tt = tt_round(read_tt(round_in), round_trunc.spec());
        write_tt(round_out, tt);
        print_tt_summary(tt);
    });

    // orthogonalize
    auto* orth = app.add_subcommand("orthogonalize", "orthogonalize around a site");
    std::string orth_in, orth_out, orth_dir = "mixed";
    std::size_t orth_site = 1;
    orth->add_option("input", orth_in, "input .ttv file")->required();
    orth->add_option("-o,--output", orth_out, "output .ttv file")->required();
    orth->add_option("--site", orth_site, "1-based center site")->required();
    orth->add_option("--direction", orth_dir, "left, right, or mixed")
        ->check(CLI::IsMember({"left", "right", "mixed"}));
    orth->callback([&] {
        const TTTensor x = read_tt(orth_in);
        TTTensor y = orth_dir == "left"    ? left_orthogonalize(x, orth_site)
                     : orth_dir == "right" ? right_orthogonalize(x, orth_site)
                                           : mixed_canonical(x, orth_site);
        write_tt(orth_out, y);
    });

    // info
    auto* info = app.add_subcommand("info", "describe a stored tensor");
    std::string info_in;
    info->add_option("input", info_in, "input file")->required();
    info->callback([&] { run_info(info_in); });

    // densify
    auto* dens = app.add_subcommand("densify", "expand a train to a dense tensor");
    std::string dens_in, dens_out;
    std::size_t dens_cap = kDefaultMemCapBytes;
    dens->add_option("input", dens_in, "input .ttv or .ttm file")->required();
    dens->add_option("-o,--output", dens_out, "output .dnst file")->required();
    dens->add_option("--mem-cap", dens_cap, "densification budget in bytes");
    dens->callback([&] {
        switch (kind_of(dens_in)) {
            case FileKind::train:
                write_dense(dens_out, tt_to_dense(read_tt(dens_in), dens_cap));
                break;
            case FileKind::matrix:
                write_dense(dens_out, ttm_to_dense(read_ttm(dens_in), dens_cap));
                break;
            default:
                throw io_error(dens_in + ": densify expects a .ttv or .ttm input");
        }
    });

    // add / hadamard
    auto* addc = app.add_subcommand("add", "sum of two tensor trains");
    auto* had = app.add_subcommand("hadamard", "entrywise product of two tensor trains");
    std::string bin_a, bin_b, bin_out;
    for (CLI::App* sub : {addc, had}) {
        sub->add_option("a", bin_a, "first .ttv operand")->required();
        sub->add_option("b", bin_b, "second .ttv operand")->required();
        sub->add_option("-o,--output", bin_out, "output .ttv file")->required();
    }
    addc->callback([&] {
        const TTTensor z = tt_add(read_tt(bin_a), read_tt(bin_b));
        write_tt(bin_out, z);
        print_tt_summary(z);
    });
    had->callback([&] {
        const TTTensor z = tt_hadamard(read_tt(bin_a), read_tt(bin_b));
        write_tt(bin_out, z);
        print_tt_summary(z);
    });

    // dot
    auto* dot = app.add_subcommand("dot", "scalar product of two tensor trains");
    std::string dot_a, dot_b;
    dot->add_option("a", dot_a, "first .ttv operand")->required();
    dot->add_option("b", dot_b, "second .ttv operand")->required();
    dot->callback([&] {
        std::cout << fmt_scalar(tt_dot(read_tt(dot_a), read_tt(dot_b))) << "\n";
    });

    // matvec
    auto* mv = app.add_subcommand("matvec", "apply a matrix train to a tensor train");
    std::string mv_a, mv_x, mv_out;
    mv->add_option("a", mv_a, "operator .ttm file")->required();
    mv->add_option("x", mv_x, "input .ttv file")->required();
    mv->add_option("-o,--output", mv_out, "output .ttv file")->required();
    mv->callback([&] {
        const TTTensor y = ttm_apply(read_ttm(mv_a), read_tt(mv_x));
        write_tt(mv_out, y);
        print_tt_summary(y);
    });

    // quadform
    auto* qf = app.add_subcommand("quadform", "quadratic form of a matrix train");
    std::string qf_a, qf_x;
    qf->add_option("a", qf_a, "operator .ttm file")->required();
    qf->add_option("x", qf_x, "input .ttv file")->required();
    qf->callback([&] {
        std::cout << fmt_scalar(quadratic_form(read_tt(qf_x), read_ttm(qf_a))) << "\n";
    });

    // bench
    auto* bench = app.add_subcommand("bench", "time the scalar product (CSV output)");
    std::size_t bench_max_order = 64, bench_dim = 4, bench_rank = 8, bench_reps = 5,
                bench_batch = 16;
    std::uint64_t bench_seed = 1;
    bench->add_option("--max-order", bench_max_order, "largest order to time");
    bench->add_option("--dim", bench_dim, "mode size");
    bench->add_option("--rank", bench_rank, "bond rank");
    bench->add_option("--reps", bench_reps, "samples per row (median is reported)")
        ->check(CLI::PositiveNumber);
    bench->add_option("--batch", bench_batch, "calls per sample")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_seed, "generator seed");
    bench->callback([&] {
        run_bench(bench_max_order, bench_dim, bench_rank, bench_reps, bench_batch,
                  bench_seed);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
