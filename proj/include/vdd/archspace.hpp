#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vdd::archspace {

/// Feature map ids: 0..3 are the backbone pyramid levels P2..P5, ids >= 4 are
/// block outputs in creation order.
inline constexpr int kBackboneMaps = 4;

enum class MergeOp { Sum, Pool };

const char* merge_op_name(MergeOp op);

struct BlockTriplet {
    int input_a = 0; // canonical: input_a < input_b
    int input_b = 1;
    MergeOp op = MergeOp::Sum;

    bool operator==(const BlockTriplet&) const = default;
    auto operator<=>(const BlockTriplet&) const = default;
};

/// Ordered merge blocks; the newest map (id 4 + blocks.size() - 1) is the output.
struct Architecture {
    std::vector<BlockTriplet> blocks;

    bool operator==(const Architecture&) const = default;
};

struct Violation {
    int block_index = 0;
    std::string reason;
};

/// Pool size available to block k: the 4 backbone maps plus one output per
/// earlier block.
int pool_size_after(int k);

/// All canonical triplets block k may take: 0 <= a < b < 4+k, both ops.
std::vector<BlockTriplet> valid_triplets(int k);

/// First rule violation, or nullopt when the architecture is well-formed.
std::optional<Violation> validate(const Architecture& arch);

/// Canonical text form "a-b-OP;a-b-OP;...". encode requires a valid architecture.
std::string encode(const Architecture& arch);

/// Parses the canonical text form; throws Errc::ParseError with the character
/// offset of the problem.
Architecture decode(const std::string& text);

/// Every valid architecture with exactly T blocks. Throws Errc::TooLarge for
/// T > 4 (the space grows as prod_k 2*C(4+k,2)).
std::vector<Architecture> enumerate_all(int T);

/// Backbone ids {0..3} with a directed path into the output map.
std::set<int> reachable_backbone(const Architecture& arch);

/// Blocks along the longest backbone-to-output path.
int longest_backbone_path(const Architecture& arch);

} // namespace vdd::archspace
