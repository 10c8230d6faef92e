#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>

namespace paxoslab {

// Virtual time is an abstract tick count; all durations are tick deltas.
using VTime = std::uint64_t;
using VDuration = std::uint64_t;

enum class AgentKind : std::uint8_t { proposer, acceptor, learner };

const char* agent_kind_name(AgentKind kind);

struct AgentId {
    AgentKind kind = AgentKind::proposer;
    std::uint32_t index = 0;

    auto operator<=>(const AgentId&) const = default;
};

// Compact form used in traces and diagnostics: "p0", "a2", "l1".
std::string to_string(const AgentId& id);
AgentId agent_from_string(const std::string& s);

inline AgentId proposer_id(std::uint32_t index) { return {AgentKind::proposer, index}; }
inline AgentId acceptor_id(std::uint32_t index) { return {AgentKind::acceptor, index}; }
inline AgentId learner_id(std::uint32_t index) { return {AgentKind::learner, index}; }

// Proposal sequence number. Uniqueness across proposers holds by
// construction: the issuing proposer is part of the number, and a single
// proposer never reuses a round. Totally ordered by (round, proposer index).
struct ProposalNumber {
    std::uint64_t round = 0;
    AgentId proposer;

    auto operator<=>(const ProposalNumber&) const = default;
};

std::string to_string(const ProposalNumber& n);

inline std::strong_ordering compare_numbers(const ProposalNumber& a, const ProposalNumber& b) {
    if (auto c = a.round <=> b.round; c != 0) return c;
    return a.proposer.index <=> b.proposer.index;
}

// Opaque byte payload. The protocol never inspects contents; equality is
// byte equality.
struct Value {
    std::string bytes;

    auto operator<=>(const Value&) const = default;
};

inline Value make_value(std::string bytes) {
    if (bytes.empty()) throw std::invalid_argument("value payload must be nonempty");
    return Value{std::move(bytes)};
}

struct Proposal {
    ProposalNumber number;
    Value value;

    auto operator<=>(const Proposal&) const = default;
};

std::string to_string(const Proposal& p);

struct QuorumConfig {
    std::uint32_t acceptor_count = 0;
    std::uint32_t quorum_size = 0;
};

// Strict majority. Any two quorums built this way intersect.
inline QuorumConfig majority_of(std::uint32_t acceptor_count) {
    if (acceptor_count == 0) throw std::invalid_argument("acceptor_count must be positive");
    return QuorumConfig{acceptor_count, acceptor_count / 2 + 1};
}

bool is_quorum(const std::set<AgentId>& acks, const QuorumConfig& cfg);

// Deliberate rule breaks used by the mutation suite. `none` is the faithful
// protocol; everything else removes one load-bearing rule so the checkers
// and the exhaustive oracle can demonstrate why that rule matters.
enum class Mutation : std::uint8_t {
    none,
    drop_attachment,   // acceptors omit the accepted proposal from pre-acks
    drop_inheritance,  // proposers ignore attachments and push their own value
    drop_ordering,     // acceptors acknowledge regardless of prior promises
    count_stale_acks,  // proposers count acks for superseded numbers
    half_quorum,       // quorum = floor(n/2) instead of strict majority
};

const char* mutation_name(Mutation m);
std::optional<Mutation> mutation_from_string(const std::string& s);

inline QuorumConfig quorum_for(std::uint32_t acceptor_count, Mutation m) {
    if (m == Mutation::half_quorum) {
        return QuorumConfig{acceptor_count, acceptor_count / 2};
    }
    return majority_of(acceptor_count);
}

}  // namespace paxoslab
