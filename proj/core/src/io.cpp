#include "demroots/io.hpp"

#include <algorithm>
#include <sstream>

#include "demroots/errors.hpp"
#include "demroots/horospherical.hpp"
#include "demroots/rank_one.hpp"

namespace demroots {

std::string kind_name(InputKind k) {
    switch (k) {
        case InputKind::Cone: return "cone";
        case InputKind::ToricMonoid: return "toric-monoid";
        case InputKind::RankOne: return "rank-one";
        case InputKind::Horospherical: return "horospherical";
    }
    throw InternalError("unreachable kind");
}

InputKind parse_kind(const std::string& s) {
    if (s == "cone") return InputKind::Cone;
    if (s == "toric-monoid") return InputKind::ToricMonoid;
    if (s == "rank-one") return InputKind::RankOne;
    if (s == "horospherical") return InputKind::Horospherical;
    throw ParseError("unknown kind '" + s + "' (expected cone, toric-monoid, rank-one or horospherical)");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Int parse_integer(const std::string& tok) {
    if (tok.empty()) throw ParseError("empty integer token");
    std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size()) throw ParseError("not an integer: '" + tok + "'");
    for (std::size_t i = start; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw ParseError("not an integer: '" + tok + "'");
    return Int(tok);
}

IntVec parse_vector(const std::string& value, std::size_t expected_rank, const std::string& what) {
    std::istringstream is(value);
    IntVec v;
    std::string tok;
    while (is >> tok) v.push_back(parse_integer(tok));
    if (v.size() != expected_rank)
        throw ParseError(what + " has " + std::to_string(v.size()) + " coordinates, expected " +
                         std::to_string(expected_rank));
    return v;
}

std::string format_plain(const IntVec& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

}  // namespace

InputDescription parse_input_text(const std::string& text) {
    std::istringstream is(text);
    return parse_input(is);
}

InputDescription parse_input(std::istream& in) {
    InputDescription d;
    bool have_kind = false, have_rank = false;
    std::string raw;
    std::vector<std::pair<std::string, std::string>> entries;
    while (std::getline(in, raw)) {
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'key: value', got '" + line + "'");
        entries.emplace_back(trim(line.substr(0, colon)), trim(line.substr(colon + 1)));
    }
    for (const auto& [key, value] : entries) {
        if (key == "kind") {
            d.kind = parse_kind(value);
            have_kind = true;
        } else if (key == "rank") {
            Int r = parse_integer(value);
            if (r < 1 || r > 16) throw ParseError("rank must be between 1 and 16");
            d.rank = static_cast<std::size_t>(r);
            have_rank = true;
        }
    }
    if (!have_kind) throw ParseError("missing 'kind:' line");
    if (!have_rank) throw ParseError("missing 'rank:' line");
    for (const auto& [key, value] : entries) {
        if (key == "kind" || key == "rank") continue;
        if (key == "generator") {
            d.generators.push_back(parse_vector(value, d.rank, "generator"));
        } else if (key == "alpha") {
            if (d.alpha) throw ParseError("duplicate 'alpha:' line");
            d.alpha = parse_vector(value, d.rank, "alpha");
        } else if (key == "alpha_dual") {
            if (d.alpha_dual) throw ParseError("duplicate 'alpha_dual:' line");
            d.alpha_dual = parse_vector(value, d.rank, "alpha_dual");
        } else if (key == "coroot") {
            d.coroots.push_back(parse_vector(value, d.rank, "coroot"));
        } else if (key == "box") {
            if (d.box) throw ParseError("duplicate 'box:' line");
            Int b = parse_integer(value);
            if (b < 0 || b > 64) throw ParseError("box bound must be between 0 and 64");
            d.box = b;
        } else {
            throw ParseError("unknown key '" + key + "'");
        }
    }
    if (d.kind == InputKind::RankOne) {
        if (!d.alpha) throw ParseError("kind rank-one requires an 'alpha:' line");
        if (!d.alpha_dual) throw ParseError("kind rank-one requires an 'alpha_dual:' line");
    }
    if (d.kind == InputKind::Cone || d.kind == InputKind::ToricMonoid) {
        if (d.generators.empty()) throw ParseError("at least one 'generator:' line is required");
        if (d.alpha || d.alpha_dual || !d.coroots.empty()) {
            if (d.kind == InputKind::Cone)
                throw ParseError("kind cone accepts only rank, generators and box");
        }
    }
    return d;
}

std::string serialize_input(const InputDescription& d) {
    std::ostringstream os;
    os << "kind: " << kind_name(d.kind) << '\n';
    os << "rank: " << d.rank << '\n';
    for (const auto& g : d.generators) os << "generator: " << format_plain(g) << '\n';
    if (d.alpha) os << "alpha: " << format_plain(*d.alpha) << '\n';
    if (d.alpha_dual) os << "alpha_dual: " << format_plain(*d.alpha_dual) << '\n';
    for (const auto& q : d.coroots) os << "coroot: " << format_plain(q) << '\n';
    if (d.box) os << "box: " << *d.box << '\n';
    return os.str();
}

nlohmann::ordered_json vec_to_json(const IntVec& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

nlohmann::ordered_json vecs_to_json(const std::vector<IntVec>& vs) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& v : vs) a.push_back(vec_to_json(v));
    return a;
}

namespace {

nlohmann::ordered_json element_to_json(const AlgebraElement& f) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& [u, c] : f.terms) {
        nlohmann::ordered_json t;
        t["coefficient"] = format_rat(c);
        t["weight"] = vec_to_json(u);
        a.push_back(std::move(t));
    }
    return a;
}

std::string element_to_text(const AlgebraElement& f) {
    if (f.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [u, c] : f.terms) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << format_rat(c) << ' ';
        os << "x^" << format_vec(u);
    }
    return os.str();
}

nlohmann::ordered_json report_shell(const std::string& command, const InputDescription& in,
                                    const std::optional<Int>& box) {
    nlohmann::ordered_json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = command;
    j["input_text"] = serialize_input(in);
    if (box) j["box"] = box->str();
    j["warnings"] = nlohmann::ordered_json::array();
    return j;
}

Int resolve_box(const InputDescription& in, const std::optional<Int>& override_box) {
    if (override_box) return *override_box;
    if (in.box) return *in.box;
    return 5;  // default enumeration bound
}

void add_saturation_warning(nlohmann::ordered_json& j, std::vector<std::string>& human_warnings,
                            const WeightMonoid& w) {
    if (w.saturation_verified()) return;
    std::ostringstream os;
    os << "monoid is not saturated inside the checked box (bound " << w.saturation_box_bound()
       << "); cone-level answers refer to the saturation. missing points:";
    for (std::size_t i = 0; i < w.saturation_gaps().size() && i < 5; ++i)
        os << ' ' << format_vec(w.saturation_gaps()[i]);
    j["warnings"].push_back(os.str());
    human_warnings.push_back(os.str());
}

std::string render_warnings(const std::vector<std::string>& warnings) {
    std::string out;
    for (const auto& w : warnings) out += "warning: " + w + "\n";
    return out;
}

// Small lattice picture for rank-two root enumerations: rows are the second
// basis coordinate from +bound down to -bound, columns the first; a digit
// marks a root of the correspondingly numbered dual ray.
std::string ascii_root_grid(const ConeLattice& cl, const RootsByRay& groups, const Int& bound) {
    if (cl.lattice_rank() != 2 || groups.size() > 9 || bound > 12) return "";
    std::map<IntVec, std::size_t, LexLess> mark;
    std::size_t ray_index = 1;
    for (const auto& [rho, roots] : groups) {
        for (const auto& r : roots) mark[r.e_basis] = ray_index;
        ++ray_index;
    }
    std::ostringstream os;
    os << "  lattice picture (basis coordinates, digit = dual-ray number):\n";
    for (Int y = bound; y >= -bound; --y) {
        os << "    ";
        for (Int x = -bound; x <= bound; ++x) {
            auto it = mark.find(IntVec{x, y});
            if (it != mark.end())
                os << it->second;
            else if (x == 0 && y == 0)
                os << 'o';
            else
                os << '.';
            os << ' ';
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace

Report cmd_dual(const InputDescription& in) {
    if (in.kind != InputKind::Cone) throw DomainError("dual expects an input of kind cone");
    Cone c(in.rank, in.generators);
    RaySet dual_rays = rays(dual_cone(c));

    nlohmann::ordered_json j = report_shell("dual", in, std::nullopt);
    nlohmann::ordered_json result;
    result["ambient_rank"] = in.rank;
    result["generators"] = vecs_to_json(c.generators());
    result["full_dimensional"] = is_full_dimensional(c);
    result["strictly_convex"] = is_strictly_convex(c);
    result["dual_rays"] = vecs_to_json(dual_rays.rays);
    nlohmann::ordered_json facets = nlohmann::ordered_json::array();
    std::ostringstream hs;
    hs << "dual cone report\n";
    hs << "  ambient rank: " << in.rank << "\n  generators:\n";
    for (const auto& g : c.generators()) hs << "    " << format_vec(g) << '\n';
    hs << "  dual rays and their facets:\n";
    for (const auto& rho : dual_rays.rays) {
        Cone f = facet_of(c, rho);
        nlohmann::ordered_json fj;
        fj["ray"] = vec_to_json(rho);
        fj["facet_generators"] = vecs_to_json(f.generators());
        facets.push_back(std::move(fj));
        hs << "    " << format_vec(rho) << " -> facet generated by";
        for (const auto& g : f.generators()) hs << ' ' << format_vec(g);
        if (f.generators().empty()) hs << " {0}";
        hs << '\n';
    }
    result["facets"] = std::move(facets);
    j["result"] = std::move(result);
    return Report{std::move(j), hs.str()};
}

Report cmd_roots(const InputDescription& in, bool filter_dominant,
                 const std::optional<Int>& box_override) {
    if (in.kind != InputKind::Cone && in.kind != InputKind::ToricMonoid)
        throw DomainError("roots expects an input of kind cone or toric-monoid");
    Int bound = resolve_box(in, box_override);
    nlohmann::ordered_json j = report_shell("roots", in, bound);
    std::vector<std::string> human_warnings;

    std::optional<WeightMonoid> monoid;
    std::optional<ConeLattice> plain;
    if (in.kind == InputKind::ToricMonoid) {
        monoid.emplace(in.rank, in.generators);
        add_saturation_warning(j, human_warnings, *monoid);
    } else {
        std::vector<IntVec> id_rows(in.rank, IntVec(in.rank, 0));
        for (std::size_t i = 0; i < in.rank; ++i) id_rows[i][i] = 1;
        plain.emplace(in.rank, IntMat(id_rows, in.rank), in.generators);
    }
    const ConeLattice& cl = monoid ? monoid->lattice() : *plain;

    auto dominant = [&](const IntVec& u) {
        for (const auto& q : in.coroots)
            if (pairing(q, u) < 0) return false;
        return true;
    };

    RootsByRay groups = enumerate_roots(cl, Box(bound));
    if (filter_dominant) {
        for (auto& [rho, roots] : groups) {
            std::vector<DemazureRoot> kept;
            for (auto& r : roots)
                if (dominant(r.e)) kept.push_back(std::move(r));
            roots = std::move(kept);
        }
    }

    nlohmann::ordered_json result;
    result["lattice_rank"] = cl.lattice_rank();
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (const auto& row : cl.basis().rows) basis.push_back(vec_to_json(row));
    result["lattice_basis"] = std::move(basis);
    result["filter_dominant"] = filter_dominant;
    nlohmann::ordered_json groups_json = nlohmann::ordered_json::array();

    std::ostringstream hs;
    hs << "Demazure root report (box bound " << bound << ")\n";
    hs << render_warnings(human_warnings);
    hs << "  lattice rank: " << cl.lattice_rank() << '\n';
    if (filter_dominant) hs << "  dominance filter: on\n";
    for (const auto& [rho, roots] : groups) {
        nlohmann::ordered_json g;
        g["ray"] = vec_to_json(rho);
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        hs << "  ray " << format_vec(rho) << ": " << roots.size() << " root(s) in box\n";
        for (const auto& r : roots) {
            nlohmann::ordered_json rj;
            rj["ambient"] = vec_to_json(r.e);
            rj["basis"] = vec_to_json(r.e_basis);
            list.push_back(std::move(rj));
            hs << "    " << format_vec(r.e);
            if (r.e != r.e_basis) hs << "  [basis " << format_vec(r.e_basis) << "]";
            hs << '\n';
        }
        g["roots"] = std::move(list);
        groups_json.push_back(std::move(g));
    }
    result["groups"] = std::move(groups_json);
    j["result"] = std::move(result);
    hs << ascii_root_grid(cl, groups, bound);
    return Report{std::move(j), hs.str()};
}

namespace {

nlohmann::ordered_json moving_root_to_json(const MovingRoot& m) {
    nlohmann::ordered_json j;
    j["ray"] = vec_to_json(m.rho);
    j["root_in_box_basis"] = vec_to_json(m.e_prime_basis);
    j["alpha_shift"] = m.shift.str();
    j["weight"] = vec_to_json(m.e_ambient);
    j["weight_extended_basis"] = vec_to_json(m.extended_root.e_basis);
    return j;
}

Report classify_rank_one(const InputDescription& in, const Int& bound,
                         nlohmann::ordered_json shell) {
    RankOneDatum datum(in.rank, *in.alpha, *in.alpha_dual, in.generators);
    std::vector<std::string> human_warnings;
    add_saturation_warning(shell, human_warnings, datum.gamma());
    RankOneReport rep = classification_report(datum, Box(bound));

    nlohmann::ordered_json result;
    result["kind"] = "rank-one";
    result["extended_basis"] = [&] {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& row : datum.gamma().basis().rows) a.push_back(vec_to_json(row));
        a.push_back(vec_to_json(datum.alpha()));
        return a;
    }();
    nlohmann::ordered_json rays_json = nlohmann::ordered_json::array();
    for (const auto& rho : rep.dual_rays) {
        nlohmann::ordered_json r;
        r["ray"] = vec_to_json(rho);
        if (rho == rep.alpha_negative_ray)
            r["role"] = "alpha-pairing -1 (weight-cone facet; vertical weights)";
        else if (rho == rep.alpha_positive_ray)
            r["role"] = "alpha-pairing +1 (reflected-cone facet; excluded weights)";
        else
            r["role"] = "alpha-pairing 0 (group-stable divisor)";
        rays_json.push_back(std::move(r));
    }
    result["extended_dual_rays"] = std::move(rays_json);
    result["vertical_weights"] = vecs_to_json(rep.vertical);
    result["horizontal_weights"] = vecs_to_json(rep.horizontal);
    result["positive_ray_exclusion_empty"] = rep.exclusion_empty;
    nlohmann::ordered_json moving = nlohmann::ordered_json::array();
    for (const auto& m : rep.moving_roots) moving.push_back(moving_root_to_json(m));
    result["stable_divisor_moving_roots"] = std::move(moving);
    result["uniqueness_note"] = rep.uniqueness_note;
    shell["result"] = std::move(result);

    std::ostringstream hs;
    hs << "rank-one classification (box bound " << bound << ")\n";
    hs << render_warnings(human_warnings);
    hs << "  extended dual rays:\n";
    for (const auto& rho : rep.dual_rays) {
        hs << "    " << format_vec(rho) << "  ";
        if (rho == rep.alpha_negative_ray)
            hs << "[alpha-pairing -1: vertical weights live here]\n";
        else if (rho == rep.alpha_positive_ray)
            hs << "[alpha-pairing +1: no subgroup weights here]\n";
        else
            hs << "[alpha-pairing 0: group-stable divisor]\n";
    }
    hs << "  vertical weights in box (" << rep.vertical.size() << "):\n";
    for (const auto& u : rep.vertical) hs << "    " << format_vec(u) << '\n';
    hs << "  horizontal weights in box (" << rep.horizontal.size() << "):\n";
    for (const auto& u : rep.horizontal) hs << "    " << format_vec(u) << '\n';
    hs << "  positive-ray exclusion: " << (rep.exclusion_empty ? "empty, as required" : "VIOLATED")
       << '\n';
    hs << "  group-stable divisors: " << rep.stable_divisor_rays.size() << '\n';
    for (const auto& m : rep.moving_roots)
        hs << "    ray " << format_vec(m.rho) << " moved by the subgroup of weight "
           << format_vec(m.e_ambient) << '\n';
    hs << "  note: " << rep.uniqueness_note << '\n';
    return Report{std::move(shell), hs.str()};
}

Report classify_horospherical(const InputDescription& in, const Int& bound,
                              nlohmann::ordered_json shell) {
    HoroDatum datum(in.rank, in.generators, in.coroots);
    std::vector<std::string> human_warnings;
    add_saturation_warning(shell, human_warnings, datum.gamma());

    SaturationVerdict sat = is_g_saturated(datum, Box(bound));
    std::vector<IntVec> horizontal = horizontal_weight_set(datum, Box(bound));
    std::vector<IntVec> stable = g_stable_divisor_rays(datum);

    nlohmann::ordered_json result;
    result["kind"] = "horospherical";
    result["restricted_coroot_cone"] = vecs_to_json(datum.coroot_cone().generators());
    result["dual_rays"] = vecs_to_json(datum.gamma().dual_rays());
    result["g_saturated_in_box"] = sat.saturated;
    result["g_saturation_counterexamples"] = vecs_to_json(sat.counterexamples);
    result["horizontal_weights"] = vecs_to_json(horizontal);
    result["stable_divisor_rays"] = vecs_to_json(stable);
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();

    std::ostringstream hs;
    hs << "horospherical classification (box bound " << bound << ")\n";
    hs << render_warnings(human_warnings);
    hs << "  restricted coroot cone generated by:";
    for (const auto& q : datum.coroot_cone().generators()) hs << ' ' << format_vec(q);
    if (datum.coroot_cone().generators().empty()) hs << " {0}";
    hs << '\n';
    hs << "  G-saturated inside box: " << (sat.saturated ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < sat.counterexamples.size() && i < 5; ++i)
        hs << "    dominant lattice point outside the monoid: "
           << format_vec(sat.counterexamples[i]) << '\n';
    hs << "  horizontal weights in box (" << horizontal.size() << "):\n";
    for (const auto& u : horizontal) hs << "    " << format_vec(u) << '\n';
    if (sat.saturated && !horizontal.empty())
        throw InternalError("G-saturated monoid produced horizontal weights");
    hs << "  group-stable divisor rays (" << stable.size() << "):\n";
    for (const auto& rho : stable) {
        DemazureRoot mu = moving_witness(datum, rho, Box(bound));
        nlohmann::ordered_json w;
        w["ray"] = vec_to_json(rho);
        w["weight"] = vec_to_json(mu.e);
        witnesses.push_back(std::move(w));
        hs << "    " << format_vec(rho) << " moved by the subgroup of weight " << format_vec(mu.e)
           << '\n';
    }
    result["moving_witnesses"] = std::move(witnesses);
    shell["result"] = std::move(result);
    return Report{std::move(shell), hs.str()};
}

}  // namespace

Report cmd_classify(const InputDescription& in, const std::optional<Int>& box_override) {
    if (in.kind != InputKind::RankOne && in.kind != InputKind::Horospherical)
        throw DomainError("classify expects an input of kind rank-one or horospherical");
    Int bound = resolve_box(in, box_override);
    nlohmann::ordered_json shell = report_shell("classify", in, bound);
    if (in.kind == InputKind::RankOne) return classify_rank_one(in, bound, std::move(shell));
    return classify_horospherical(in, bound, std::move(shell));
}

Report cmd_act(const InputDescription& in, const ActRequest& req) {
    if (in.kind != InputKind::ToricMonoid)
        throw DomainError("act expects an input of kind toric-monoid");
    auto monoid = std::make_shared<const WeightMonoid>(in.rank, in.generators);
    nlohmann::ordered_json j = report_shell("act", in, std::nullopt);
    std::vector<std::string> human_warnings;
    add_saturation_warning(j, human_warnings, *monoid);

    ToricLND lnd(monoid, req.root);
    AlgebraElement derivative = lnd_apply(lnd, req.element);
    AlgebraElement exponential = exp_action(lnd, req.parameter, req.element);

    nlohmann::ordered_json result;
    result["root"] = vec_to_json(lnd.root().e);
    result["ray"] = vec_to_json(lnd.root().rho);
    result["moved_divisor_ray"] = vec_to_json(moved_divisor(lnd));
    result["element"] = element_to_json(req.element);
    result["derivative"] = element_to_json(derivative);
    nlohmann::ordered_json nil = nlohmann::ordered_json::array();
    std::ostringstream hs;
    hs << "derivation report\n";
    hs << render_warnings(human_warnings);
    hs << "  root " << format_vec(lnd.root().e) << " at dual ray " << format_vec(lnd.root().rho)
       << '\n';
    hs << "  f = " << element_to_text(req.element) << '\n';
    hs << "  derivative(f) = " << element_to_text(derivative) << '\n';
    for (const auto& [u, c] : req.element.terms) {
        Int k = lnd_nilpotency_index(lnd, u);
        nlohmann::ordered_json e;
        e["weight"] = vec_to_json(u);
        e["nilpotency_index"] = k.str();
        nil.push_back(std::move(e));
        hs << "  nilpotency index of x^" << format_vec(u) << " = " << k << '\n';
    }
    result["nilpotency"] = std::move(nil);
    result["parameter"] = format_rat(req.parameter);
    result["exp"] = element_to_json(exponential);
    hs << "  exp(" << format_rat(req.parameter) << " * d)(f) = " << element_to_text(exponential)
       << '\n';
    j["result"] = std::move(result);
    return Report{std::move(j), hs.str()};
}

}  // namespace demroots
