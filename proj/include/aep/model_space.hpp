#pragma once

#include "aep/domain.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace aep {

enum class FeatureKind {
    remove_action,
    add_action,
    scale_cost,
    set_cost,
    add_precondition,
    remove_precondition,
};

const char* to_string(FeatureKind kind);
std::optional<FeatureKind> feature_kind_from_string(std::string_view name);

// One binary aspect of the true model a human observer may be unaware of.
// Toggling it transforms a base model into a variant.
struct ModelFeature {
    std::string id;
    FeatureKind kind = FeatureKind::scale_cost;
    std::vector<std::string> targets;      // action ids; unused for add_action
    std::vector<ActionSpec> new_actions;   // add_action payload
    Rational amount = Rational(1);         // scale_cost / set_cost payload
    std::string fluent;                    // add/remove_precondition payload
};

DomainModel apply_feature(const DomainModel& base, const ModelFeature& feature);

// The 2^k lattice of models induced by k features over a base model. The
// model at bitmask m applies exactly the features whose bits are set in m,
// in feature-list order.
class ModelSpace {
public:
    static constexpr std::size_t kMaxFeatures = 10;

    ModelSpace(DomainModel base, std::vector<ModelFeature> features, std::uint32_t true_mask);

    std::size_t num_features() const { return features_.size(); }
    std::size_t num_models() const { return models_.size(); }
    const DomainModel& model(std::size_t mask) const { return models_[mask]; }
    const std::vector<ModelFeature>& features() const { return features_; }

    std::uint32_t true_mask() const { return true_mask_; }
    const DomainModel& true_model() const { return models_[true_mask_]; }

private:
    std::vector<ModelFeature> features_;
    std::vector<DomainModel> models_;
    std::uint32_t true_mask_;
};

ModelSpace build_model_space(DomainModel base, std::vector<ModelFeature> features,
                             std::uint32_t true_mask);

}  // namespace aep
