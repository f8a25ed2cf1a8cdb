#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <vector>

#include "test_util.hpp"
#include "ttkit/dense_ops.hpp"
#include "ttkit/errors.hpp"
#include "ttkit/oracle.hpp"
#include "ttkit/random.hpp"
#include "ttkit/tt.hpp"
#include "ttkit/tt_arith.hpp"

using namespace ttkit;
namespace tu = ttkit::testutil;
namespace orc = ttkit::oracle;

namespace {

/// Suffix slice-product over cores n..N at the given trailing physical
/// indices (idx holds the full multi-index).
std::vector<double> naive_tt_suffix(const TTTensor& x, const std::vector<std::size_t>& idx,
                                    std::size_t n) {
    std::vector<double> boundary{1.0};
    for (std::size_t k = x.order(); k >= n; --k) {
        const TTCore& c = x.core(k);
        std::vector<double> next(c.r_left(), 0.0);
        for (std::size_t a = 0; a < c.r_left(); ++a) {
            for (std::size_t b = 0; b < c.r_right(); ++b) {
                next[a] += c.data().at_flat((a * c.dim() + idx[k - 1]) * c.r_right() + b) *
                           boundary[b];
            }
        }
        boundary = std::move(next);
    }
    return boundary;
}

/// Numerical rank by counting oracle singular values above 1e-12 * sigma_max.
std::size_t oracle_rank(const DenseTensor& x, std::size_t n) {
    const std::vector<double> sv = orc::prefix_singular_values(x, n);
    if (sv.empty() || sv[0] == 0.0) return 0;
    std::size_t r = 0;
    for (double s : sv) {
        if (s >= 1e-12 * sv[0]) ++r;
    }
    return r;
}

double gram_left_error(const TTCore& c) {
    const DenseTensor v = vertical_unfolding(c);
    const DenseTensor g = contracted_product(transpose(v), v);
    return max_abs_diff(g, DenseTensor::identity(c.r_right()));
}

double gram_right_error(const TTCore& c) {
    const DenseTensor h = horizontal_unfolding(c);
    const DenseTensor g = contracted_product(h, transpose(h));
    return max_abs_diff(g, DenseTensor::identity(c.r_left()));
}

} // namespace

TEST_CASE("tt_validate_and_entry") {
    Rng rng(401);
    const TTTensor single = random_tt(rng, {4});
    CHECK(single.order() == 1);
    const DenseTensor sd = tt_to_dense(single);
    REQUIRE(sd.shape() == Shape({4}));
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(sd.at_flat(i) == single.core(1).data().at_flat(i));
    }

    std::vector<TTCore> mismatched;
    mismatched.emplace_back(1, 2, 2, std::vector<double>(4, 0.5));
    mismatched.emplace_back(3, 2, 1, std::vector<double>(6, 0.5));
    CHECK(tu::throws_containing<shape_error>(
        [&] { (void)tt_validate(std::move(mismatched)); }, "bond"));

    std::vector<TTCore> bad_boundary;
    bad_boundary.emplace_back(2, 3, 1, std::vector<double>(6, 0.5));
    CHECK_THROWS_AS((void)TTTensor(std::move(bad_boundary)), shape_error);

    const TTTensor x = random_tt(rng, {2, 3, 2, 3}, {2, 3, 2});
    CHECK(x.bond_ranks() == std::vector<std::size_t>{2, 3, 2});
    const DenseTensor xd = tt_to_dense(x);
    {
        const auto rep = orc::compare_dense("tt_to_dense", "seed=401 dims=(2,3,2,3)", xd,
                                            tu::naive_tt_dense(x), 1e-12);
        CHECK_MESSAGE(rep.pass, rep.to_line());
    }

    const Shape shape(x.dims());
    for (std::size_t flat = 0; flat < shape.count(); flat += 7) {
        const auto idx = unflatten_index(shape, flat);
        CHECK(tt_entry(x, idx) == doctest::Approx(xd.at_flat(flat)).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)tt_entry(x, std::vector<std::size_t>{2, 0, 0, 0}), shape_error);

    Rng rng2(402);
    std::vector<TTCore> rank_one;
    for (std::size_t d : {2u, 3u, 2u}) {
        rank_one.emplace_back(TTCore(random_dense(rng2, Shape({1, d, 1}))));
    }
    const TTTensor r1(std::move(rank_one));
    for (std::size_t flat = 0; flat < 12; ++flat) {
        const auto idx = unflatten_index(Shape({2, 3, 2}), flat);
        const double want = r1.core(1).data().at_flat(idx[0]) *
                            r1.core(2).data().at_flat(idx[1]) *
                            r1.core(3).data().at_flat(idx[2]);
        CHECK(tt_entry(r1, idx) == doctest::Approx(want).epsilon(1e-12));
    }

    std::vector<TTCore> zeros;
    zeros.emplace_back(1, 2, 2, std::vector<double>(4, 0.0));
    zeros.emplace_back(2, 2, 1, std::vector<double>(4, 0.0));
    const TTTensor z(std::move(zeros));
    CHECK(tt_to_dense(z).max_abs() == 0.0);
}

TEST_CASE("tt_to_dense_paths_agree") {
    Rng rng(411);
    std::vector<TTCore> cores;
    std::vector<DenseTensor> vecs;
    for (std::size_t d : {2u, 3u, 2u}) {
        const DenseTensor v = random_dense(rng, Shape({d}));
        vecs.push_back(v);
        cores.emplace_back(1, d, 1,
                           std::vector<double>(v.values().begin(), v.values().end()));
    }
    const TTTensor rank_one(std::move(cores));
    const DenseTensor dense = tt_to_dense(rank_one);
    const DenseTensor chain = orc::ref_kron(orc::ref_kron(vecs[0], vecs[1]), vecs[2]);
    for (std::size_t k = 0; k < dense.count(); ++k) {
        CHECK(dense.at_flat(k) == doctest::Approx(chain.at_flat(k)).epsilon(1e-12));
    }

    const TTTensor n2 = random_tt(rng, {3, 4}, {2});
    const DenseTensor n2d = tt_to_dense(n2);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            double want = 0.0;
            for (std::size_t r = 0; r < 2; ++r) {
                want += n2.core(1).data().at_flat(i * 2 + r) *
                        n2.core(2).data().at_flat((r * 4 + j));
            }
            CHECK(n2d({i, j}) == doctest::Approx(want).epsilon(1e-12));
        }
    }

    const TTTensor x = random_tt(rng, {2, 3, 2, 2}, {2, 3, 2});
    const auto rep = orc::compare_dense("tt_vectorize_strong_kron", "seed=411 N=4",
                                        tt_vectorize_strong_kron(x),
                                        vectorize(tt_to_dense(x)), 1e-12);
    CHECK_MESSAGE(rep.pass, rep.to_line());
}

TEST_CASE("table_vectorization_chains") {
    Rng rng(421);
    const TTTensor x = random_tt(rng, {2, 3, 2, 2}, {2, 3, 2});
    const Shape shape(x.dims());
    const DenseTensor want = vectorize(tt_to_dense(x));

    DenseTensor v1 = vectorize(x.core(1).data());
    for (std::size_t n = 2; n <= x.order(); ++n) {
        const DenseTensor factor = kron(tu::identity_over(shape, 1, n - 1),
                                        transpose(matricize(x.core(n).data(), 1)));
        v1 = contracted_product(factor, v1);
    }
    const auto rep1 =
        orc::compare_dense("vectorization_forward", "seed=421 N=4", v1, want, 1e-12);
    CHECK_MESSAGE(rep1.pass, rep1.to_line());

    DenseTensor v2 = vectorize(x.core(x.order()).data());
    for (std::size_t n = x.order() - 1; n >= 1; --n) {
        const DenseTensor factor = kron(transpose(matricize(x.core(n).data(), 3)),
                                        tu::identity_over(shape, n + 1, x.order()));
        v2 = contracted_product(factor, v2);
    }
    const auto rep2 =
        orc::compare_dense("vectorization_backward", "seed=421 N=4", v2, want, 1e-12);
    CHECK_MESSAGE(rep2.pass, rep2.to_line());
}

TEST_CASE("partial_products") {
    Rng rng(431);
    const TTTensor x = random_tt(rng, {2, 3, 2, 2}, {2, 3, 2});
    const DenseTensor dense = tt_to_dense(x);
    const Shape shape(x.dims());

    const DenseTensor left0 = partial_product_left(x, 0);
    REQUIRE(left0.order() == 0);
    CHECK(left0.at_flat(0) == 1.0);
    const DenseTensor rightN1 = partial_product_right(x, x.order() + 1);
    REQUIRE(rightN1.order() == 0);
    CHECK(rightN1.at_flat(0) == 1.0);

    const DenseTensor leftN = partial_product_left(x, x.order());
    REQUIRE(leftN.shape() == Shape({2, 3, 2, 2, 1}));
    for (std::size_t k = 0; k < dense.count(); ++k) {
        CHECK(leftN.at_flat(k) == doctest::Approx(dense.at_flat(k)).epsilon(1e-12));
    }
    const DenseTensor right1 = partial_product_right(x, 1);
    REQUIRE(right1.shape() == Shape({1, 2, 3, 2, 2}));

    for (std::size_t n = 1; n + 1 <= x.order(); ++n) {
        const DenseTensor recombined = contracted_product(partial_product_left(x, n),
                                                          partial_product_right(x, n + 1));
        const auto rep = orc::compare_dense("partial_product", "recombine n=" +
                                            std::to_string(n), recombined, dense, 1e-12);
        CHECK_MESSAGE(rep.pass, rep.to_line());
    }

    const DenseTensor left2 = partial_product_left(x, 2);
    const Shape head({2, 3});
    for (std::size_t flat = 0; flat < left2.count(); ++flat) {
        const auto idx = unflatten_index(left2.shape(), flat);
        const std::vector<std::size_t> phys(idx.begin(), idx.end() - 1);
        const std::vector<double> chain = tu::naive_tt_prefix(x, phys, 2);
        CHECK(left2.at_flat(flat) == doctest::Approx(chain[idx.back()]).epsilon(1e-12));
    }

    const DenseTensor right3 = partial_product_right(x, 3);
    for (std::size_t flat = 0; flat < right3.count(); ++flat) {
        const auto idx = unflatten_index(right3.shape(), flat);
        std::vector<std::size_t> full(x.order(), 0);
        for (std::size_t k = 1; k < idx.size(); ++k) full[2 + k - 1] = idx[k];
        const std::vector<double> chain = naive_tt_suffix(x, full, 3);
        CHECK(right3.at_flat(flat) == doctest::Approx(chain[idx[0]]).epsilon(1e-12));
    }

    CHECK_THROWS_AS((void)partial_product_left(x, 5), shape_error);
    CHECK_THROWS_AS((void)partial_product_right(x, 0), shape_error);
}

TEST_CASE("unfolding_identity") {
    Rng rng(441);
    const TTTensor x = random_tt(rng, {3, 2, 3}, {2, 3});
    const DenseTensor dense = tt_to_dense(x);

    for (std::size_t n = 1; n <= x.order(); ++n) {
        const DenseTensor left = (n == 1)
                                     ? DenseTensor::identity(1)
                                     : matricize(partial_product_left(x, n - 1), n);
        const DenseTensor right = (n == x.order())
                                      ? DenseTensor::identity(1)
                                      : matricize(partial_product_right(x, n + 1), 1);
        const DenseTensor got =
            contracted_product(matricize(x.core(n).data(), 2), kron(left, right));
        const auto rep = orc::compare_dense("unfolding_identity", "n=" + std::to_string(n),
                                            got, matricize(dense, n), 1e-12);
        CHECK_MESSAGE(rep.pass, rep.to_line());
    }

    const DenseTensor first = contracted_product(
        matricize_prefix(x.core(1).data(), 2), matricize(partial_product_right(x, 2), 1));
    const auto rep = orc::compare_dense("unfolding_identity", "prefix form", first,
                                        matricize(dense, 1), 1e-12);
    CHECK_MESSAGE(rep.pass, rep.to_line());
}

TEST_CASE("tt_svd_exact_and_ranks") {
    const DenseTensor ones = DenseTensor::constant(Shape({2, 2, 2, 2}), 1.0);
    const TTTensor tt_ones = tt_svd(ones);
    CHECK(tt_ones.bond_ranks() == std::vector<std::size_t>{1, 1, 1});
    CHECK(tu::rel_err(tt_to_dense(tt_ones), ones) <= 1e-12);

    const DenseTensor zero = DenseTensor::zeros(Shape({3, 3, 3}));
    const TTTensor tt_zero = tt_svd(zero);
    CHECK(tt_zero.bond_ranks() == std::vector<std::size_t>{1, 1});
    for (const TTCore& c : tt_zero.cores()) CHECK(c.data().max_abs() == 0.0);
    CHECK(tt_to_dense(tt_zero).max_abs() == 0.0);

    for (std::uint64_t seed = 451; seed < 454; ++seed) {
        Rng rng(seed);
        const DenseTensor x = random_dense(rng, Shape({3, 3, 3, 3}));
        TruncationSpec spec;
        spec.epsilon = 0.0;
        const TTTensor tt = tt_svd(x, spec);
        CHECK_MESSAGE(tu::rel_err(tt_to_dense(tt), x) <= 1e-12, "seed " << seed);
        std::vector<std::size_t> want_ranks;
        for (std::size_t n = 1; n < x.order(); ++n) want_ranks.push_back(oracle_rank(x, n));
        CHECK(tt.bond_ranks() == want_ranks);
        for (std::size_t n = 1; n < tt.order(); ++n) {
            CHECK(tt.core(n).orth() == OrthFlag::left);
            CHECK(is_left_orthogonal(tt.core(n)));
        }
    }

    Rng rng(455);
    const TTTensor known = random_tt(rng, {3, 4, 3}, {2, 3});
    const DenseTensor kd = tt_to_dense(known);
    const TTTensor back = tt_svd(kd);
    CHECK(back.bond_ranks() == std::vector<std::size_t>{2, 3});
    CHECK(tu::rel_err(tt_to_dense(back), kd) <= 1e-12);

    const DenseTensor u1 = random_dense(rng, Shape({3}));
    const DenseTensor u2 = random_dense(rng, Shape({3}));
    const DenseTensor u3 = random_dense(rng, Shape({3}));
    const DenseTensor v1 = random_dense(rng, Shape({3}));
    const DenseTensor v2 = random_dense(rng, Shape({3}));
    const DenseTensor v3 = random_dense(rng, Shape({3}));
    const DenseTensor two_terms =
        add(outer(outer(u1, u2), u3), outer(outer(v1, v2), v3));
    CHECK(tt_svd(two_terms).bond_ranks() == std::vector<std::size_t>{2, 2});
}

TEST_CASE("tt_svd_budget_and_caps") {
    Rng rng(461);
    const DenseTensor x = random_dense(rng, Shape({3, 3, 3, 3}));
    const double norm = x.frobenius_norm();

    TruncationSpec budget;
    budget.epsilon = 0.3;
    const TTTensor rounded = tt_svd(x, budget);
    const double err = add(x, scale(tt_to_dense(rounded), -1.0)).frobenius_norm();
    CHECK(err <= 0.3 * norm);

    TruncationSpec caps;
    caps.max_ranks = std::vector<std::size_t>{2};
    const TTTensor capped = tt_svd(x, caps);
    for (std::size_t r : capped.bond_ranks()) CHECK(r <= 2);

    TruncationSpec caps_full;
    caps_full.max_ranks = std::vector<std::size_t>{2, 3, 2};
    const TTTensor capped2 = tt_svd(x, caps_full);
    const auto ranks = capped2.bond_ranks();
    CHECK(ranks[0] <= 2);
    CHECK(ranks[1] <= 3);
    CHECK(ranks[2] <= 2);

    TruncationSpec caps222;
    caps222.max_ranks = std::vector<std::size_t>{2, 2, 2};
    const TTTensor hat = tt_svd(x, caps222);
    const double trunc_err = add(x, scale(tt_to_dense(hat), -1.0)).frobenius_norm();
    double tail_sq = 0.0, tail_max = 0.0;
    for (std::size_t n = 1; n <= 3; ++n) {
        const double t = orc::unfolding_tail(x, n, 2);
        tail_sq += t * t;
        if (t > tail_max) tail_max = t;
    }
    CHECK(trunc_err * trunc_err <= tail_sq + 1e-10);
    CHECK(trunc_err <= std::sqrt(3.0) * tail_max + 1e-10);

    TruncationSpec bad;
    bad.epsilon = -0.5;
    CHECK_THROWS_AS((void)tt_svd(x, bad), shape_error);
    TruncationSpec bad_len;
    bad_len.max_ranks = std::vector<std::size_t>{2, 2};
    CHECK_THROWS_AS((void)tt_svd(x, bad_len), shape_error);
}

TEST_CASE("separation_ranks_cases") {
    Rng rng(471);
    const DenseTensor u1 = random_dense(rng, Shape({3}));
    const DenseTensor u2 = random_dense(rng, Shape({4}));
    const DenseTensor u3 = random_dense(rng, Shape({3}));
    CHECK(separation_ranks(outer(outer(u1, u2), u3)) == std::vector<std::size_t>{1, 1});

    const DenseTensor v1 = random_dense(rng, Shape({3}));
    const DenseTensor v2 = random_dense(rng, Shape({4}));
    const DenseTensor v3 = random_dense(rng, Shape({3}));
    const DenseTensor sum = add(outer(outer(u1, u2), u3), outer(outer(v1, v2), v3));
    CHECK(separation_ranks(sum) == std::vector<std::size_t>{2, 2});

    const TTTensor known = random_tt(rng, {3, 4, 3, 3}, {2, 3, 2});
    CHECK(separation_ranks(tt_to_dense(known)) == std::vector<std::size_t>{2, 3, 2});
}

TEST_CASE("orthogonalize_forms") {
    Rng rng(481);
    const TTTensor x = random_tt(rng, {3, 2, 3, 2}, {2, 3, 2});
    const DenseTensor dense = tt_to_dense(x);
    const double norm = dense.frobenius_norm();

    const TTTensor left = left_orthogonalize(x, x.order());
    for (std::size_t n = 1; n < x.order(); ++n) {
        CHECK(left.core(n).orth() == OrthFlag::left);
        CHECK(gram_left_error(left.core(n)) <= 1e-10);
    }
    CHECK(tu::rel_err(tt_to_dense(left), dense) <= 1e-12);
    for (std::size_t n = 0; n <= x.order(); ++n) CHECK(left.rank(n) <= x.rank(n));

    const TTTensor right = right_orthogonalize(x, 1);
    for (std::size_t n = 2; n <= x.order(); ++n) {
        CHECK(right.core(n).orth() == OrthFlag::right);
        CHECK(gram_right_error(right.core(n)) <= 1e-10);
    }
    CHECK(tu::rel_err(tt_to_dense(right), dense) <= 1e-12);

    const DenseTensor lm = matricize(partial_product_left(left, 3), 4);
    CHECK(max_abs_diff(contracted_product(lm, transpose(lm)),
                       DenseTensor::identity(lm.shape().dim(1))) <= 1e-10);
    const DenseTensor rm = matricize(partial_product_right(right, 2), 1);
    CHECK(max_abs_diff(contracted_product(rm, transpose(rm)),
                       DenseTensor::identity(rm.shape().dim(1))) <= 1e-10);

    for (std::size_t site = 1; site <= x.order(); ++site) {
        const TTTensor mixed = mixed_canonical(x, site);
        for (std::size_t n = 1; n < site; ++n) {
            CHECK(gram_left_error(mixed.core(n)) <= 1e-10);
        }
        for (std::size_t n = site + 1; n <= x.order(); ++n) {
            CHECK(gram_right_error(mixed.core(n)) <= 1e-10);
        }
        CHECK(tu::rel_err(tt_to_dense(mixed), dense) <= 1e-12);

        const DenseTensor frame = frame_matrix(mixed, site);
        const DenseTensor gram = contracted_product(transpose(frame), frame);
        CHECK(max_abs_diff(gram, DenseTensor::identity(gram.shape().dim(1))) <= 1e-10);

        const TTTensor again = mixed_canonical(mixed, site);
        for (std::size_t n = 1; n <= x.order(); ++n) {
            CHECK(max_abs_diff(again.core(n).data(), mixed.core(n).data()) == 0.0);
            CHECK(again.core(n).orth() == mixed.core(n).orth());
        }
    }

    for (std::size_t n = 1; n <= x.order(); ++n) {
        const DenseTensor frame = frame_matrix(x, n);
        const DenseTensor approx = contracted_product(frame, vectorize(x.core(n).data()));
        const double err = add(vectorize(dense), scale(approx, -1.0)).frobenius_norm();
        CHECK_MESSAGE(err <= 1e-12 * norm, "frame identity at site " << n);
    }
    for (std::size_t n = 1; n + 1 <= x.order(); ++n) {
        const DenseTensor frame = frame_matrix_pair(x, n);
        const DenseTensor merged =
            contracted_product(x.core(n).data(), x.core(n + 1).data());
        const DenseTensor approx = contracted_product(frame, vectorize(merged));
        const double err = add(vectorize(dense), scale(approx, -1.0)).frobenius_norm();
        CHECK_MESSAGE(err <= 1e-12 * norm, "pair frame identity at site " << n);
    }

    Rng rng1(482);
    const TTTensor one_site = random_tt(rng1, {5});
    CHECK(max_abs_diff(frame_matrix(one_site, 1), DenseTensor::identity(5)) == 0.0);
    CHECK_THROWS_AS((void)frame_matrix_pair(one_site, 1), shape_error);
}

TEST_CASE("tt_round_cases") {
    Rng rng(491);
    const TTTensor x = random_tt(rng, {3, 3, 3, 3}, {2, 3, 2});
    const DenseTensor dense = tt_to_dense(x);

    const TTTensor doubled = tt_add(x, x);
    CHECK(doubled.bond_ranks() == std::vector<std::size_t>{4, 6, 4});
    TruncationSpec tight;
    tight.epsilon = 1e-12;
    const TTTensor restored = tt_round(doubled, tight);
    CHECK(restored.bond_ranks() == x.bond_ranks());
    CHECK(tu::rel_err(tt_to_dense(restored), scale(dense, 2.0)) <= 1e-12);
    for (std::size_t n = 1; n < restored.order(); ++n) {
        CHECK(is_left_orthogonal(restored.core(n)));
    }

    TruncationSpec exact;
    exact.epsilon = 0.0;
    const TTTensor rounded = tt_round(doubled, exact);
    CHECK(rounded.bond_ranks() == separation_ranks(tt_to_dense(doubled)));

    std::vector<TTCore> rank_one;
    for (std::size_t d : {2u, 3u, 2u}) {
        rank_one.emplace_back(TTCore(random_dense(rng, Shape({1, d, 1}))));
    }
    const TTTensor r1(std::move(rank_one));
    const TTTensor r1r = tt_round(r1, tight);
    CHECK(r1r.bond_ranks() == std::vector<std::size_t>{1, 1});
    CHECK(tu::rel_err(tt_to_dense(r1r), tt_to_dense(r1)) <= 1e-12);

    TruncationSpec budget;
    budget.epsilon = 0.5;
    const TTTensor coarse = tt_round(x, budget);
    const double err = add(dense, scale(tt_to_dense(coarse), -1.0)).frobenius_norm();
    CHECK(err <= 0.5 * dense.frobenius_norm());
    for (std::size_t n = 0; n <= x.order(); ++n) CHECK(coarse.rank(n) <= x.rank(n));

    TruncationSpec caps;
    caps.max_ranks = std::vector<std::size_t>{2};
    const TTTensor capped = tt_round(doubled, caps);
    for (std::size_t r : capped.bond_ranks()) CHECK(r <= 2);
}

TEST_CASE("tt_scalar_mul_cases") {
    Rng rng(501);
    const TTTensor x = random_tt(rng, {2, 3, 2}, {2, 2});
    const DenseTensor dense = tt_to_dense(x);

    const TTTensor same = tt_scalar_mul(x, 1.0);
    for (std::size_t n = 1; n <= x.order(); ++n) {
        CHECK(max_abs_diff(same.core(n).data(), x.core(n).data()) == 0.0);
    }

    const TTTensor zero = tt_scalar_mul(x, 0.0);
    CHECK(zero.bond_ranks() == x.bond_ranks());
    CHECK(tt_to_dense(zero).max_abs() == 0.0);

    const TTTensor scaled = tt_scalar_mul(x, -2.5);
    CHECK(tu::rel_err(tt_to_dense(scaled), scale(dense, -2.5)) <= 1e-12);
}

TEST_CASE("capacity_and_flags") {
    Rng rng(511);
    const TTTensor x = random_tt(rng, {4, 4, 4}, {2, 2});
    CHECK_THROWS_AS((void)tt_to_dense(x, 8), capacity_error);
    CHECK_THROWS_AS((void)frame_matrix(x, 2, 8), capacity_error);

    const TTCore claimed(1, 3, 2, std::vector<double>{0.9, -0.3, 0.4, 0.8, 0.2, -0.7},
                         OrthFlag::left);
    CHECK(claimed.orth() == OrthFlag::left);
    CHECK_FALSE(is_left_orthogonal(claimed));
}
