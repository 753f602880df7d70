#pragma once

#include "rht/relative_model.hpp"

#include <memory>
#include <string>
#include <vector>

namespace rht {

/// Algebra map between relative models, given on the base basis and on the
/// fiber generators and extended multiplicatively.
class CdgaMorphism {
public:
    /// `base_images[i]` is the image of base basis element i (index 0, the
    /// unit, must map to the unit). Throws DegreeError on degree mismatch and
    /// ValidationError when the base images are not multiplicative.
    CdgaMorphism(std::string label, std::shared_ptr<const RelativeModel> source,
                 std::shared_ptr<const RelativeModel> target, std::vector<TensorElement> base_images,
                 std::vector<TensorElement> fiber_images);

    static CdgaMorphism identity(std::shared_ptr<const RelativeModel> model);

    const std::string& label() const noexcept { return label_; }
    const RelativeModel& source() const noexcept { return *source_; }
    const RelativeModel& target() const noexcept { return *target_; }
    const TensorElement& base_image(std::size_t i) const { return base_images_.at(i); }
    const TensorElement& fiber_image(std::size_t i) const { return fiber_images_.at(i); }

    TensorElement apply(const TensorElement& e) const;
    TensorElement apply(const TensorKey& k) const;

    /// One message per base basis element or fiber generator where
    /// f(d x) != d f(x). Empty iff f is a chain map.
    std::vector<std::string> chain_map_violations() const;

private:
    std::string label_;
    std::shared_ptr<const RelativeModel> source_, target_;
    std::vector<TensorElement> base_images_, fiber_images_;
};

}  // namespace rht
