#ifndef FJRW_CORPUS_HPP
#define FJRW_CORPUS_HPP

#include "fjrw/mirror.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fjrw {

struct ExpectedCorrelator {
    std::vector<std::string> labels; // three basis labels
    Rational value;
    Axiom axiom = Axiom::None; // None: value check only
};

enum class EntryKind { Direct, Tensor, Nonexistence };

struct CorpusEntry {
    std::string name;
    std::string poly;
    std::vector<std::string> vars;        // explicit variable order
    std::map<std::string, Rational> params; // default parameter values
    bool maximal_group = true;            // false: subgroup generated by J
    std::vector<Rational> pinned_gen;     // generator phases for sector labels
    EntryKind kind = EntryKind::Direct;
    std::vector<std::string> factors;     // Tensor: variable-disjoint summands

    // expected values
    size_t group_order = 0;
    Rational chat;
    std::vector<size_t> sector_mus;       // restricted dims on nontrivial fixed loci
    size_t dim = 0;
    size_t mirror_dim = 0;                // 0: not applicable
    std::vector<ExpectedCorrelator> correlators;
    std::function<std::vector<ExpectedCorrelator>(const std::map<std::string, Rational>&)>
        param_correlators;                // values that depend on parameters
    std::vector<std::string> generator_labels; // candidate images of the ring generators
    MirrorStatus expected_status = MirrorStatus::Isomorphic;
    bool expect_hypotheses = false;
    std::optional<Rational> expected_alpha;
    std::optional<Rational> expected_mu_obstruction;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* corpus_find(const std::string& name);

// parse the entry's polynomial and substitute parameter values
Polynomial instantiate(const CorpusEntry& e,
                       const std::map<std::string, Rational>& overrides = {});
Polynomial substitute_params(const Polynomial& W, const std::map<std::string, Rational>& params);

// full A-model pipeline; the result owns the state space the correlator
// system points into, so it is not copyable
struct PipelineResult {
    Polynomial W;
    WeightSystem ws;
    DiagonalGroup G;
    StateSpace S;
    CorrelatorSystem sys;
    Resolution res;

    PipelineResult() = default;
    PipelineResult(const PipelineResult&) = delete;
    PipelineResult& operator=(const PipelineResult&) = delete;
};

void run_pipeline(PipelineResult& out, const Polynomial& W, bool maximal_group,
                  const std::vector<Rational>& pinned_gen = {});

// verify each variable-disjoint summand separately and combine
MirrorVerdict verify_mirror_tensor(const Polynomial& W, const std::vector<Polynomial>& factors,
                                   bool all_signs = true);

struct EntryResult {
    std::string name;
    bool ok = true;
    std::vector<std::string> failures;
    MirrorVerdict verdict;
};

EntryResult run_entry(const CorpusEntry& e,
                      const std::map<std::string, Rational>& param_overrides = {},
                      bool all_signs = true);

} // namespace fjrw

#endif
