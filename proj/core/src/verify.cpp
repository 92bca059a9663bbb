#include "demroots/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "demroots/errors.hpp"
#include "demroots/horospherical.hpp"
#include "demroots/rank_one.hpp"
#include "demroots/toric.hpp"

namespace demroots {

bool VerifyResult::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

namespace {

using Check = std::function<std::string()>;  // returns failure detail, empty on pass

IntVec v(std::initializer_list<long long> xs) {
    IntVec r;
    for (long long x : xs) r.emplace_back(x);
    return r;
}

std::string expect(bool cond, const std::string& what) { return cond ? "" : what; }

std::string check_plane_orthant_dual() {
    Cone c(2, {v({1, 0}), v({0, 1})});
    RaySet r = rays(dual_cone(c));
    return expect(r.rays == std::vector<IntVec>{v({0, 1}), v({1, 0})},
                  "dual of the plane orthant is not the orthant");
}

std::string check_redundant_generator() {
    Cone c(2, {v({1, 0}), v({1, 1}), v({0, 1})});
    RaySet r = rays(c);
    return expect(r.rays == std::vector<IntVec>{v({0, 1}), v({1, 0})},
                  "interior generator not dropped from the ray set");
}

std::string check_whole_plane_dual() {
    Cone c(2, {v({1, 0}), v({-1, 0}), v({0, 1}), v({0, -1})});
    return expect(dual_cone(c).generators().empty(), "dual of the whole plane is not {0}");
}

std::string check_orthant_roots() {
    std::vector<IntVec> id = {v({1, 0}), v({0, 1})};
    ConeLattice cl(2, IntMat(id, 2), id);
    RootsByRay groups = enumerate_roots(cl, Box(2));
    std::vector<IntVec> first, second;
    for (const auto& r : groups.at(v({1, 0}))) first.push_back(r.e);
    for (const auto& r : groups.at(v({0, 1}))) second.push_back(r.e);
    std::string err;
    err += expect(first == std::vector<IntVec>{v({-1, 0}), v({-1, 1}), v({-1, 2})},
                  "roots at the first coordinate ray are wrong; ");
    err += expect(second == std::vector<IntVec>{v({0, -1}), v({1, -1}), v({2, -1})},
                  "roots at the second coordinate ray are wrong");
    return err;
}

std::string check_affine_space_derivation() {
    auto monoid = std::make_shared<const WeightMonoid>(2, std::vector<IntVec>{v({1, 0}), v({0, 1})});
    ToricLND d(monoid, v({-1, 2}));
    AlgebraElement f = AlgebraElement::monomial(v({3, 1}));
    AlgebraElement expected = AlgebraElement::monomial(v({2, 3}), 3);
    std::string err = expect(lnd_apply(d, f) == expected, "derivative of a monomial is wrong; ");

    ToricLND d2(monoid, v({-1, 0}));
    AlgebraElement g = AlgebraElement::monomial(v({2, 0}));
    AlgebraElement eg = exp_action(d2, 1, g);
    AlgebraElement expected_exp = ae_add(
        ae_add(AlgebraElement::monomial(v({2, 0})), AlgebraElement::monomial(v({1, 0}), 2)),
        AlgebraElement::monomial(v({0, 0})));
    err += expect(eg == expected_exp, "exponential expansion is wrong; ");
    err += expect(lnd_nilpotency_index(d2, v({3, 1})) == 4, "nilpotency index is wrong; ");
    err += expect(moved_divisor(d) == v({1, 0}), "moved divisor ray is wrong");
    return err;
}

std::string check_index_two_monoid_roots() {
    WeightMonoid m(2, {v({1, -1}), v({0, -2})});
    RootsByRay groups = enumerate_roots(m.lattice(), Box(4));
    IntVec coroot = v({1, 0});
    std::vector<IntVec> dominant;
    for (const auto& [rho, roots] : groups)
        for (const auto& r : roots)
            if (pairing(coroot, r.e) >= 0) dominant.push_back(r.e);
    std::sort(dominant.begin(), dominant.end(), LexLess{});
    std::vector<IntVec> expected = {v({0, 2}), v({1, 1}), v({2, 0}), v({3, -1}), v({4, -2})};
    return expect(dominant == expected, "dominant roots of the index-two monoid are wrong");
}

std::string check_sl2_rank3_classification() {
    RankOneDatum datum(3, v({2, 0, 0}), v({1, 0, 0}), {v({1, 1, 0}), v({0, 0, 1})});
    RankOneReport rep = classification_report(datum, Box(5));
    std::string err;
    err += expect(rep.dual_rays == std::vector<IntVec>{v({0, 0, -1}), v({0, 1, 0}), v({1, 0, 1})},
                  "extended dual rays are wrong; ");
    err += expect(rep.alpha_negative_ray == v({0, 0, -1}), "negative ray is wrong; ");
    err += expect(rep.alpha_positive_ray == v({1, 0, 1}), "positive ray is wrong; ");
    err += expect(rep.stable_divisor_rays == std::vector<IntVec>{v({0, 1, 0})},
                  "stable-divisor rays are wrong; ");
    bool has_alpha = std::find(rep.vertical.begin(), rep.vertical.end(), v({2, 0, 0})) !=
                     rep.vertical.end();
    err += expect(has_alpha, "vertical set misses the root; ");
    err += expect(rep.vertical.size() == 30, "vertical in-box count is wrong; ");
    std::vector<IntVec> expected_horizontal;
    for (long long c = 0; c <= 5; ++c) expected_horizontal.push_back(v({c, c, -1}));
    std::sort(expected_horizontal.begin(), expected_horizontal.end(), LexLess{});
    err += expect(rep.horizontal == expected_horizontal, "horizontal set is wrong; ");
    err += expect(rep.exclusion_empty, "positive-ray exclusion failed; ");
    err += expect(rep.moving_roots.size() == 1 && rep.moving_roots[0].e_ambient == v({0, 0, -1}),
                  "moving root for the stable divisor is wrong");
    return err;
}

std::string check_sl2_line_classification() {
    RankOneDatum datum(2, v({2, 0}), v({1, 0}), {v({1, 1})});
    ExtendedStructure ext = build_extension(datum);
    std::string err;
    err += expect(ext.dual_rays == std::vector<IntVec>{v({0, -1}), v({1, 1})},
                  "extended dual rays are wrong; ");
    err += expect(ext.stable_divisor_rays.empty(), "unexpected stable-divisor ray; ");
    std::vector<IntVec> vert = vertical_weights(ext, Box(3));
    err += expect(vert == std::vector<IntVec>{v({1, -1}), v({2, 0}), v({3, 1})},
                  "vertical weights are wrong; ");
    err += expect(horizontal_weights(datum, ext, Box(3)).empty(),
                  "horizontal set should be empty for a rank-one monoid");
    return err;
}

std::string check_horospherical_agreement() {
    RankOneDatum datum(3, v({2, 0, 0}), v({1, 0, 0}), {v({1, 1, 0}), v({0, 0, 1})});
    ExtendedStructure ext = build_extension(datum);
    HoroDatum horo = datum.as_horospherical();
    std::vector<IntVec> a = horizontal_weights(datum, ext, Box(4));
    std::vector<IntVec> b = horizontal_weight_set(horo, Box(4));
    return expect(a == b, "rank-one and horospherical horizontal sets disagree");
}

std::string check_horospherical_engine() {
    HoroDatum h(3, {v({1, 1, 0}), v({0, 0, 1})}, {v({1, 0, 0})});
    std::string err;
    SaturationVerdict sat = is_g_saturated(h, Box(2));
    err += expect(!sat.saturated, "monoid should not be G-saturated; ");
    bool found = std::find(sat.counterexamples.begin(), sat.counterexamples.end(),
                           v({0, 0, -1})) != sat.counterexamples.end();
    err += expect(found, "missing G-saturation counterexample; ");
    std::vector<IntVec> stable = g_stable_divisor_rays(h);
    err += expect(stable == std::vector<IntVec>{v({0, 1})}, "stable-divisor rays are wrong; ");
    DemazureRoot mu = moving_witness(h, v({0, 1}), Box(5));
    err += expect(mu.e == v({0, 0, -1}), "moving witness is wrong; ");
    ShadowElement f = ShadowElement::basis_vector(v({0, 0, 1}));
    ShadowElement out = horo_lnd_apply(h, mu, f);
    err += expect(out == ShadowElement::basis_vector(v({0, 0, 0})),
                  "shadow derivation value is wrong");
    return err;
}

std::string check_g_saturated_kill_switch() {
    HoroDatum h(2, {v({1, 0}), v({0, 1}), v({0, -1})}, {v({1, 0})});
    std::string err;
    err += expect(is_g_saturated(h, Box(4)).saturated, "half-plane monoid should be G-saturated; ");
    err += expect(horizontal_weight_set(h, Box(6)).empty(),
                  "G-saturated monoid must have no horizontal weights");
    return err;
}

std::string check_duality_involution() {
    std::vector<Cone> cones = {
        Cone(2, {v({1, 0}), v({0, 1})}),
        Cone(2, {v({2, 1}), v({1, 3})}),
        Cone(3, {v({1, 0, 0}), v({0, 1, 0}), v({1, 0, -1})}),
        Cone(3, {v({1, 1, 0}), v({1, -1, 0}), v({0, 0, 1}), v({1, 1, 1})}),
    };
    for (const auto& c : cones) {
        if (!is_full_dimensional(c) || !is_strictly_convex(c))
            return "fixture cone is not full-dimensional and strictly convex";
        if (!(rays(dual_cone(dual_cone(c))) == rays(c))) return "double dual changed the ray set";
    }
    return "";
}

}  // namespace

VerifyResult run_builtin_fixture_suite() {
    std::vector<std::pair<std::string, Check>> checks = {
        {"plane_orthant_self_dual", check_plane_orthant_dual},
        {"redundant_generator_dropped", check_redundant_generator},
        {"whole_plane_dual_trivial", check_whole_plane_dual},
        {"orthant_root_families", check_orthant_roots},
        {"affine_space_derivations", check_affine_space_derivation},
        {"index_two_monoid_dominant_roots", check_index_two_monoid_roots},
        {"sl2_rank3_classification", check_sl2_rank3_classification},
        {"sl2_line_classification", check_sl2_line_classification},
        {"rank_one_horospherical_agreement", check_horospherical_agreement},
        {"horospherical_engine", check_horospherical_engine},
        {"g_saturated_kill_switch", check_g_saturated_kill_switch},
        {"duality_involution", check_duality_involution},
    };
    VerifyResult result;
    for (auto& [name, fn] : checks) {
        VerifyCheck c;
        c.name = name;
        try {
            c.detail = fn();
            c.pass = c.detail.empty();
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        result.checks.push_back(std::move(c));
    }
    return result;
}

nlohmann::ordered_json verify_to_json(const VerifyResult& r) {
    nlohmann::ordered_json j;
    j["tool"] = {{"name", "demroots"}, {"version", "1.0.0"}};
    j["command"] = "verify";
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["all_pass"] = r.all_pass();
    return j;
}

std::string verify_to_text(const VerifyResult& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << (c.pass ? "PASS" : "FAIL") << ' ' << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ')';
        os << '\n';
    }
    os << (r.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << '\n';
    return os.str();
}

}  // namespace demroots
