#include <doctest.h>

#include <random>

#include "hopfore/analysis.hpp"

using namespace hopfore;

namespace {

HopfPtr amb_a(QuotientSpec q = quotient_none()) {
    FieldPtr F = Field::prime(5);
    GroupPtr G = AbelianGroup::make({4});
    Character chi = make_character(G, F, {F->from_int(2)});
    return make_hopf(F, G, chi, group_element(G, {1}), zero_cocycle(G, F), q);
}

HopfPtr amb_b(bool with_quotient = true) {
    FieldPtr F = Field::prime(17);
    GroupPtr G = AbelianGroup::make({16});
    Character chi = make_character(G, F, {F->from_int(2)});
    QuotientSpec q = with_quotient ? quotient_power_central(8, F->one()) : quotient_none();
    return make_hopf(F, G, chi, group_element(G, {1}), zero_cocycle(G, F), q);
}

Character chr(const HopfPtr& H, long long image) {
    return make_character(H->group, H->field, {H->field->from_int(image)});
}

}  // namespace

TEST_SUITE("analysis") {
    TEST_CASE("weight spaces") {
        HopfPtr A = amb_a();
        const Field& F = *A->field;
        // each weight chi^i lambda occurs with dim = deg f on a block module
        WeightModule m = make_block(A, chr(A, 2), poly_parse(F, "y^2+2"), 1);
        auto ws = weight_spaces(m);
        CHECK(ws.size() == 4);
        std::size_t total = 0;
        for (const auto& [w, d] : ws) {
            CHECK(d == 2);
            total += d;
        }
        CHECK(total == m.dim());
        // ladder: each weight once
        auto ws2 = weight_spaces(make_serial(A, chr(A, 3), 4));
        for (const auto& [w, d] : ws2) CHECK(d == 1);
    }

    TEST_CASE("primary projectors behave") {
        HopfPtr A = amb_a();
        const Field& F = *A->field;
        WeightModule m = mod_direct_sum(
            make_block(A, chr(A, 2), poly_parse(F, "y-1"), 1),
            make_block(A, chr(A, 2), poly_parse(F, "y-2"), 2));
        m = mod_scramble(m, 3);
        auto comps = primary_decomposition(m, 0);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].comp.dim() + comps[1].comp.dim() == m.dim());
        Mat sum = mat_zero(F, m.dim(), m.dim());
        for (const auto& pc : comps) {
            CHECK(mat_mul(F, pc.projector, pc.projector) == pc.projector);  // idempotent
            CHECK(mat_mul(F, pc.projector, m.X) == mat_mul(F, m.X, pc.projector));
            for (const GroupElement& g : group_all_elements(A->group)) {
                Mat rho = group_action(m, g);
                CHECK(mat_mul(F, pc.projector, rho) == mat_mul(F, rho, pc.projector));
            }
            sum = mat_add(F, sum, pc.projector);
        }
        CHECK(sum == mat_identity(F, m.dim()));
        CHECK(mat_is_zero(F, mat_mul(F, comps[0].projector, comps[1].projector)));
        std::set<std::size_t> dims{comps[0].comp.dim(), comps[1].comp.dim()};
        CHECK(dims == std::set<std::size_t>{4, 8});

        // a ladder is a single component at f = y
        auto single = primary_decomposition(make_serial(A, chr(A, 2), 3), 0);
        REQUIRE(single.size() == 1);
        CHECK(poly_eq(single[0].f, poly_x(F)));
    }

    TEST_CASE("radical and socle through the component formulas") {
        HopfPtr A = amb_a();
        const Field& F = *A->field;
        WeightModule v2 = make_serial(A, chr(A, 2), 2);
        CHECK(radical(v2).rows == 1);
        CHECK(socle(v2).rows == 1);
        WeightModule b2 = make_block(A, chr(A, 2), poly_parse(F, "y-2"), 2);
        CHECK(radical(b2).rows == 4);
        SeriesReport sr = series(b2);
        CHECK(sr.radical_length == 2);
        CHECK(sr.radical_dims == std::vector<std::size_t>{8, 4, 0});
        WeightModule v4 = make_serial(A, chr(A, 3), 4);
        Mat soc = socle(v4);
        CHECK(soc.rows == 1);
        CHECK(!F.is_zero(soc.at(0, 3)));
        SeriesReport sv = series(v4);
        CHECK(sv.radical_length == 4);
        CHECK(sv.radical_dims == std::vector<std::size_t>{4, 3, 2, 1, 0});
        CHECK(sv.socle_dims == std::vector<std::size_t>{0, 1, 2, 3, 4});
        for (const auto& layer : sv.radical_layers) {
            REQUIRE(layer.size() == 1);
            CHECK(layer[0].first.kind == ModuleLabel::Kind::Simple1);
            CHECK(layer[0].second == 1);
        }
    }

    TEST_CASE("simplicity and indecomposability") {
        HopfPtr A = amb_a();
        const Field& F = *A->field;
        CHECK(is_simple(make_simple_onedim(A, chr(A, 2))));
        CHECK(is_simple(make_block(A, chr(A, 2), poly_parse(F, "y^2+2"), 1)));
        CHECK_FALSE(is_simple(make_serial(A, chr(A, 2), 2)));
        CHECK_FALSE(is_simple(make_block(A, chr(A, 2), poly_parse(F, "y-1"), 2)));
        CHECK_FALSE(is_simple(mod_direct_sum(make_simple_onedim(A, chr(A, 2)),
                                             make_simple_onedim(A, chr(A, 2)))));
        CHECK(is_indecomposable(make_serial(A, chr(A, 2), 2)));
        CHECK(is_indecomposable(make_block(A, chr(A, 2), poly_parse(F, "y-1"), 2)));
        CHECK_FALSE(is_indecomposable(mod_direct_sum(make_serial(A, chr(A, 2), 2),
                                                     make_simple_onedim(A, chr(A, 3)))));
    }

    TEST_CASE("classification round trips") {
        HopfPtr A = amb_a();
        const Field& F = *A->field;
        for (long long im : {1, 2, 3, 4}) {
            DecompositionReport r = classify(make_serial(A, chr(A, im), 3));
            REQUIRE(r.parts.size() == 1);
            CHECK(r.parts[0].first == label_serial(chr(A, im), 3));
            CHECK(r.parts[0].second == 1);
        }
        DecompositionReport r =
            classify(make_block(A, chr(A, 3), poly_parse(F, "y^2+2"), 2));
        REQUIRE(r.parts.size() == 1);
        CHECK(r.parts[0].first == label_block(A, chr(A, 3), poly_parse(F, "y^2+2"), 2));
    }

    TEST_CASE("classification is scramble invariant with a working witness") {
        HopfPtr A = amb_a();
        const Field& F = *A->field;
        WeightModule m = mod_direct_sum(make_serial(A, chr(A, 2), 2),
                                        make_simple_onedim(A, chr(A, 2)));
        m = mod_direct_sum(m, make_block(A, chr(A, 1), poly_parse(F, "y-2"), 1));
        DecompositionReport base = classify(m, 0);
        for (std::uint64_t seed : {1ull, 7ull, 99ull}) {
            WeightModule s = mod_scramble(m, seed);
            DecompositionReport r = classify(s, seed);
            CHECK(r.same_labels(base));
            CHECK(r.total_dim(A) == m.dim());
            REQUIRE(r.witness.has_value());
            auto inv = mat_inverse(F, *r.witness);
            REQUIRE(inv.has_value());
            Mat conj = mat_mul(F, *inv, mat_mul(F, s.X, *r.witness));
            Mat expect = mat_zero(F, m.dim(), m.dim());
            std::size_t off = 0;
            for (const auto& [label, mult] : r.parts) {
                for (unsigned c = 0; c < mult; ++c) {
                    WeightModule piece = label_module(A, label);
                    for (std::size_t i = 0; i < piece.dim(); ++i)
                        for (std::size_t j = 0; j < piece.dim(); ++j)
                            expect.at(off + i, off + j) = piece.X.at(i, j);
                    off += piece.dim();
                }
            }
            CHECK(conj == expect);
        }
    }

    TEST_CASE("isomorphic blocks in one coset share a label") {
        HopfPtr A = amb_a();
        const Field& F = *A->field;
        UniPoly f = poly_parse(F, "y-2");  // nonzero constant term
        DecompositionReport r1 = classify(make_block(A, chr(A, 2), f, 1));
        DecompositionReport r2 = classify(make_block(A, char_mul(chr(A, 2), A->chi), f, 1));
        CHECK(r1.same_labels(r2));
        WeightModule m1 = make_block(A, chr(A, 2), f, 1);
        WeightModule m2 = make_block(A, char_mul(chr(A, 2), A->chi), f, 1);
        CHECK(hom_space(m1, m2).size() == 1);  // one-dimensional hom space
    }

    TEST_CASE("hom spaces") {
        HopfPtr A = amb_a();
        const Field& F = *A->field;
        WeightModule v = make_simple_onedim(A, chr(A, 2));
        CHECK(hom_space(v, v).size() == 1);
        WeightModule b1 = make_block(A, chr(A, 2), poly_parse(F, "y-1"), 1);
        WeightModule b2 = make_block(A, chr(A, 2), poly_parse(F, "y-2"), 1);
        CHECK(hom_space(b1, b2).empty());
        WeightModule m = mod_direct_sum(b1, make_serial(A, chr(A, 2), 3));
        for (const Mat& phi : hom_space(m, m)) {
            CHECK(mat_mul(F, phi, m.X) == mat_mul(F, m.X, phi));
            for (const GroupElement& g : group_all_elements(A->group)) {
                Mat rho = group_action(m, g);
                CHECK(mat_mul(F, phi, rho) == mat_mul(F, rho, phi));
            }
        }
    }

    TEST_CASE("the canonical ladder epimorphism does not split") {
        HopfPtr Az = amb_a(quotient_power_zero(4));
        const Field& F = *Az->field;
        WeightModule vn = make_serial(Az, chr(Az, 2), 4);
        for (unsigned t = 1; t < 4; ++t) {
            WeightModule vt = make_serial(Az, chr(Az, 2), t);
            Mat phi(vt.dim(), vn.dim(), F.zero());
            for (unsigned i = 0; i < t; ++i) phi.at(i, i) = F.one();
            CHECK(mat_mul(F, phi, vn.X) == mat_mul(F, vt.X, phi));  // a module map
            CHECK_FALSE(is_split_epi(vn, vt, phi));
        }
        Mat id = mat_identity(F, vn.dim());
        CHECK(is_split_epi(vn, vn, id));
    }

    TEST_CASE("predicted tensor closed forms and classification agree") {
        HopfPtr Bn = amb_b(false);  // chi of order 8, q = 9 primitive 8th root
        const Field& F = *Bn->field;
        auto p = predicted_tensor(Bn, label_simple(chr(Bn, 2)), label_simple(chr(Bn, 4)));
        REQUIRE(p.has_value());
        CHECK(p->parts.size() == 1);
        CHECK(p->parts[0].first == label_simple(chr(Bn, 8)));

        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 4; ++trial) {
            Scalar av = F.from_int(1 + static_cast<long long>(rng() % 16));
            Scalar bv = F.from_int(1 + static_cast<long long>(rng() % 16));
            ModuleLabel la = label_block(Bn, chr(Bn, 3), poly_linear(F, av), 1);
            ModuleLabel lb = label_block(Bn, chr(Bn, 5), poly_linear(F, bv), 1);
            auto pred = predicted_tensor(Bn, la, lb);
            REQUIRE(pred.has_value());
            WeightModule t = mod_tensor(label_module(Bn, la), label_module(Bn, lb));
            DecompositionReport got = classify(t, trial);
            CHECK(got.same_labels(*pred));
        }

        ModuleLabel blk = label_block(Bn, chr(Bn, 3), poly_linear(F, F.from_int(5)), 1);
        ModuleLabel one = label_simple(chr(Bn, 2));
        for (bool flip : {false, true}) {
            auto pr = flip ? predicted_tensor(Bn, blk, one) : predicted_tensor(Bn, one, blk);
            REQUIRE(pr.has_value());
            WeightModule t = flip ? mod_tensor(label_module(Bn, blk), label_module(Bn, one))
                                  : mod_tensor(label_module(Bn, one), label_module(Bn, blk));
            CHECK(classify(t, 5).same_labels(*pr));
        }

        // unsupported when q has smaller order than chi: a = g^2 gives q of order 4
        FieldPtr F17 = Field::prime(17);
        GroupPtr G = AbelianGroup::make({16});
        Character chi16 = make_character(G, F17, {F17->from_int(2)});
        HopfPtr Hs = make_hopf(F17, G, chi16, group_element(G, {2}), zero_cocycle(G, F17),
                               quotient_none());
        CHECK(Hs->q_order == 4);
        CHECK(Hs->chi_order == 8);
        ModuleLabel c1 = label_block(Hs, chr(Hs, 3), poly_linear(*F17, F17->from_int(1)), 1);
        CHECK_FALSE(predicted_tensor(Hs, c1, c1).has_value());
    }

    TEST_CASE("tensor with vanishing eigenvalue decomposes into ladders") {
        HopfPtr Bn = amb_b(false);
        const Field& F = *Bn->field;
        // alpha' lambda(a)^8 + beta' = 0: alpha' = 1, lambda(g) = 3 has
        // lambda(a)^8 = 16, so beta' = 1
        Scalar av = F.one();
        Scalar bv = F.from_int(-16);
        CHECK(bv == F.one());
        ModuleLabel la = label_block(Bn, chr(Bn, 5), poly_linear(F, av), 1);
        ModuleLabel lb = label_block(Bn, chr(Bn, 3), poly_linear(F, bv), 1);
        auto pred = predicted_tensor(Bn, la, lb);
        REQUIRE(pred.has_value());
        CHECK(pred->parts.size() == 8);
        for (const auto& [label, mult] : pred->parts) {
            CHECK(label.kind == ModuleLabel::Kind::Serial);
            CHECK(label.t == 8);
            CHECK(mult == 1);
        }
        WeightModule t = mod_tensor(label_module(Bn, la), label_module(Bn, lb));
        DecompositionReport got = classify(t, 1);
        CHECK(got.same_labels(*pred));
    }

    TEST_CASE("simple census") {
        HopfPtr Az = amb_a(quotient_power_zero(4));
        SimplesCensus ca = list_simples(Az);
        CHECK(ca.simples.size() == 4);
        CHECK(ca.coset_count == 1);
        CHECK_FALSE(ca.block_family);

        HopfPtr B = amb_b();
        SimplesCensus cb = list_simples(B);
        std::size_t onedim = 0, blocks = 0;
        for (const ModuleLabel& l : cb.simples) {
            if (l.kind == ModuleLabel::Kind::Simple1) {
                ++onedim;
                CHECK(B->field->is_one(B->field->pow(char_eval(l.lambda, B->a), 8)));
            } else {
                ++blocks;
                CHECK(label_dim(B, l) == 8);
                CHECK(poly_eq(l.f, poly_parse(*B->field, "y-2")));
            }
        }
        CHECK(onedim == 8);
        CHECK(blocks == 1);
        CHECK(cb.character_count == 16);
        CHECK(cb.coset_count == 2);

        SimplesCensus cn = list_simples(amb_a());
        CHECK(cn.block_family);
        CHECK(cn.simples.size() == 4);
    }

    TEST_CASE("projective covers") {
        HopfPtr Az = amb_a(quotient_power_zero(4));
        auto table = projectives_report(Az);
        CHECK(table.size() == 4);
        for (const auto& e : table) {
            CHECK(e.simple.kind == ModuleLabel::Kind::Simple1);
            CHECK(e.cover == label_serial(e.simple.lambda, 4));
            // indecomposable cover with simple top equal to the simple
            WeightModule cover = label_module(Az, e.cover);
            Mat rad = radical(cover);
            WeightModule top = quotient_module(cover, rad);
            DecompositionReport r = classify(top);
            REQUIRE(r.parts.size() == 1);
            CHECK(r.parts[0].first == e.simple);
        }

        HopfPtr B = amb_b();
        auto tb = projectives_report(B);
        std::size_t serial_covers = 0, self_covers = 0;
        for (const auto& e : tb) {
            if (e.simple.kind == ModuleLabel::Kind::Simple1) {
                CHECK(e.cover == label_serial(e.simple.lambda, 8));
                ++serial_covers;
            } else {
                CHECK(e.cover == e.simple);
                ++self_covers;
            }
        }
        CHECK(serial_covers == 8);
        CHECK(self_covers == 1);

        CHECK_THROWS_AS(projectives_report(amb_a()), error);
    }

    TEST_CASE("tensor products associate up to classification labels") {
        HopfPtr Bn = amb_b(false);
        const Field& F = *Bn->field;
        WeightModule L = make_block(Bn, chr(Bn, 3), poly_linear(F, F.from_int(2)), 1);
        WeightModule M = make_simple_onedim(Bn, chr(Bn, 5));
        WeightModule N = make_block(Bn, chr(Bn, 7), poly_linear(F, F.from_int(4)), 1);
        DecompositionReport left = classify(mod_tensor(mod_tensor(L, M), N), 1);
        DecompositionReport right = classify(mod_tensor(L, mod_tensor(M, N)), 2);
        CHECK(left.same_labels(right));
        // and the weight multiset convolves
        auto wl = weight_spaces(mod_tensor(mod_tensor(L, M), N));
        auto wr = weight_spaces(mod_tensor(L, mod_tensor(M, N)));
        CHECK(wl == wr);
    }

    TEST_CASE("random labeled sums are recovered after scrambling") {
        HopfPtr A = amb_a();
        const Field& F = *A->field;
        std::mt19937_64 rng(2024);
        std::vector<UniPoly> irr = {poly_parse(F, "y-1"), poly_parse(F, "y-3"),
                                    poly_parse(F, "y^2+2")};
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<ModuleLabel> labels;
            std::size_t dim = 0;
            while (labels.size() < 3) {
                if (rng() % 2 == 0) {
                    ModuleLabel l = label_serial(chr(A, 1 + rng() % 4),
                                                 1 + static_cast<unsigned>(rng() % 5));
                    if (dim + label_dim(A, l) > 20) break;
                    dim += label_dim(A, l);
                    labels.push_back(l);
                } else {
                    const UniPoly& f = irr[rng() % irr.size()];
                    unsigned r = 1 + static_cast<unsigned>(rng() % 2);
                    ModuleLabel l = label_block(A, chr(A, 1 + rng() % 4), f, r);
                    if (dim + label_dim(A, l) > 20) continue;
                    dim += label_dim(A, l);
                    labels.push_back(l);
                }
            }
            if (labels.empty()) continue;
            WeightModule m = label_module(A, labels[0]);
            for (std::size_t i = 1; i < labels.size(); ++i)
                m = mod_direct_sum(m, label_module(A, labels[i]));
            WeightModule s = mod_scramble(m, trial * 31 + 1);
            DecompositionReport got = classify(s, trial);
            std::sort(labels.begin(), labels.end());
            std::vector<std::pair<ModuleLabel, unsigned>> expect;
            for (const ModuleLabel& l : labels) {
                if (!expect.empty() && expect.back().first == l)
                    ++expect.back().second;
                else
                    expect.emplace_back(l, 1);
            }
            CHECK(got.parts == expect);
        }
    }
}
