#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "demroots/numeric.hpp"
#include "demroots/toric.hpp"

namespace demroots {

inline constexpr const char* kToolName = "demroots";
inline constexpr const char* kToolVersion = "1.0.0";

enum class InputKind { Cone, ToricMonoid, RankOne, Horospherical };

std::string kind_name(InputKind k);
InputKind parse_kind(const std::string& s);

/// Parsed form of the line-oriented input format:
///
///   kind: rank-one          # cone | toric-monoid | rank-one | horospherical
///   rank: 3
///   generator: 1 1 0        # one generator per line
///   generator: 0 0 1
///   alpha: 2 0 0            # rank-one only
///   alpha_dual: 1 0 0       # rank-one only
///   coroot: 1 0 0           # horospherical, repeatable (may be absent)
///   box: 5                  # optional enumeration bound
///
/// '#' starts a comment; blank lines are ignored.
struct InputDescription {
    InputKind kind = InputKind::Cone;
    std::size_t rank = 0;
    std::vector<IntVec> generators;
    std::optional<IntVec> alpha;
    std::optional<IntVec> alpha_dual;
    std::vector<IntVec> coroots;
    std::optional<Int> box;

    bool operator==(const InputDescription&) const = default;
};

InputDescription parse_input(std::istream& in);
InputDescription parse_input_text(const std::string& text);

/// Canonical text form; parse_input_text(serialize_input(d)) == d.
std::string serialize_input(const InputDescription& d);

struct Report {
    nlohmann::ordered_json json;
    std::string human;
};

Report cmd_dual(const InputDescription& in);
Report cmd_roots(const InputDescription& in, bool filter_dominant,
                 const std::optional<Int>& box_override);
Report cmd_classify(const InputDescription& in, const std::optional<Int>& box_override);

struct ActRequest {
    IntVec root;
    AlgebraElement element;
    Rat parameter;
};

Report cmd_act(const InputDescription& in, const ActRequest& req);

nlohmann::ordered_json vec_to_json(const IntVec& v);
nlohmann::ordered_json vecs_to_json(const std::vector<IntVec>& vs);

}  // namespace demroots
