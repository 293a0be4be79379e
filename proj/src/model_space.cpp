#include "aep/model_space.hpp"

#include <algorithm>

namespace aep {

const char* to_string(FeatureKind kind) {
    switch (kind) {
        case FeatureKind::remove_action: return "remove_action";
        case FeatureKind::add_action: return "add_action";
        case FeatureKind::scale_cost: return "scale_cost";
        case FeatureKind::set_cost: return "set_cost";
        case FeatureKind::add_precondition: return "add_precondition";
        case FeatureKind::remove_precondition: return "remove_precondition";
    }
    return "?";
}

std::optional<FeatureKind> feature_kind_from_string(std::string_view name) {
    if (name == "remove_action") return FeatureKind::remove_action;
    if (name == "add_action") return FeatureKind::add_action;
    if (name == "scale_cost") return FeatureKind::scale_cost;
    if (name == "set_cost") return FeatureKind::set_cost;
    if (name == "add_precondition") return FeatureKind::add_precondition;
    if (name == "remove_precondition") return FeatureKind::remove_precondition;
    return std::nullopt;
}

DomainModel apply_feature(const DomainModel& base, const ModelFeature& feature) {
    std::vector<ActionSpec> specs = base.action_specs();

    auto find_spec = [&](const std::string& id) -> ActionSpec& {
        auto it = std::find_if(specs.begin(), specs.end(),
                               [&](const ActionSpec& s) { return s.id == id; });
        if (it == specs.end()) {
            throw InputError("feature " + feature.id + " targets unknown action: " + id);
        }
        return *it;
    };

    switch (feature.kind) {
        case FeatureKind::remove_action:
            for (const std::string& id : feature.targets) {
                find_spec(id);
                std::erase_if(specs, [&](const ActionSpec& s) { return s.id == id; });
            }
            break;
        case FeatureKind::add_action:
            for (const ActionSpec& spec : feature.new_actions) specs.push_back(spec);
            break;
        case FeatureKind::scale_cost:
            if (feature.amount < Rational(0)) {
                throw InputError("feature " + feature.id + " has negative cost factor");
            }
            for (const std::string& id : feature.targets) {
                find_spec(id).cost *= feature.amount;
            }
            break;
        case FeatureKind::set_cost:
            if (feature.amount < Rational(0)) {
                throw InputError("feature " + feature.id + " sets a negative cost");
            }
            for (const std::string& id : feature.targets) {
                find_spec(id).cost = feature.amount;
            }
            break;
        case FeatureKind::add_precondition:
            for (const std::string& id : feature.targets) {
                ActionSpec& spec = find_spec(id);
                if (std::find(spec.pre.begin(), spec.pre.end(), feature.fluent) ==
                    spec.pre.end()) {
                    spec.pre.push_back(feature.fluent);
                }
            }
            break;
        case FeatureKind::remove_precondition:
            for (const std::string& id : feature.targets) {
                ActionSpec& spec = find_spec(id);
                auto it = std::find(spec.pre.begin(), spec.pre.end(), feature.fluent);
                if (it == spec.pre.end()) {
                    throw InputError("feature " + feature.id + " removes absent precondition " +
                                     feature.fluent + " from " + id);
                }
                spec.pre.erase(it);
            }
            break;
    }

    std::string label = base.label() + "+" + feature.id;
    // DomainModel construction re-validates fluent references and invariants.
    return DomainModel(std::move(label), base.fluent_ids(), std::move(specs));
}

ModelSpace::ModelSpace(DomainModel base, std::vector<ModelFeature> features,
                       std::uint32_t true_mask)
    : features_(std::move(features)), true_mask_(true_mask) {
    if (features_.size() > kMaxFeatures) {
        throw InputError("too many model features (cap " + std::to_string(kMaxFeatures) + ")");
    }
    const std::size_t count = std::size_t{1} << features_.size();
    if (true_mask_ >= count) {
        throw InputError("true_mask out of range for feature count");
    }
    models_.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        DomainModel model = base;
        for (std::size_t bit = 0; bit < features_.size(); ++bit) {
            if (mask & (std::size_t{1} << bit)) {
                model = apply_feature(model, features_[bit]);
            }
        }
        models_.push_back(std::move(model));
    }
}

ModelSpace build_model_space(DomainModel base, std::vector<ModelFeature> features,
                             std::uint32_t true_mask) {
    return ModelSpace(std::move(base), std::move(features), true_mask);
}

}  // namespace aep
