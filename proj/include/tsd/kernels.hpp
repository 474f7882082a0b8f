#pragma once

#include <stdexcept>
#include <string>

namespace tsd {

enum class KernelShape { Laplace, Exponential, Alpha, Gaussian };

/// Causal learning kernel kappa(s), zero for s < 0.
struct KernelSpec {
    KernelShape shape = KernelShape::Laplace;
    double tau = 7.0;  // ms

    KernelSpec() = default;
    KernelSpec(KernelShape shape_, double tau_) : shape(shape_), tau(tau_) {
        if (tau <= 0.0) throw std::invalid_argument("KernelSpec: tau must be positive");
    }
};

double kernel_eval(const KernelSpec& k, double s);

KernelShape kernel_shape_from_name(const std::string& name);
std::string kernel_shape_name(KernelShape shape);

}  // namespace tsd
