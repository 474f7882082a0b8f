#include "tsd/kernels.hpp"

#include <cmath>

namespace tsd {

double kernel_eval(const KernelSpec& k, double s) {
    if (s < 0.0) return 0.0;
    switch (k.shape) {
        case KernelShape::Laplace:
        case KernelShape::Exponential:
            return std::exp(-s / k.tau);
        case KernelShape::Alpha:
            return (s / k.tau) * std::exp(1.0 - s / k.tau);
        case KernelShape::Gaussian:
            return std::exp(-(s * s) / (2.0 * k.tau * k.tau));
    }
    return 0.0;
}

KernelShape kernel_shape_from_name(const std::string& name) {
    if (name == "laplace") return KernelShape::Laplace;
    if (name == "exponential") return KernelShape::Exponential;
    if (name == "alpha") return KernelShape::Alpha;
    if (name == "gaussian") return KernelShape::Gaussian;
    throw std::invalid_argument("unknown kernel shape: " + name);
}

std::string kernel_shape_name(KernelShape shape) {
    switch (shape) {
        case KernelShape::Laplace: return "laplace";
        case KernelShape::Exponential: return "exponential";
        case KernelShape::Alpha: return "alpha";
        case KernelShape::Gaussian: return "gaussian";
    }
    return "?";
}

}  // namespace tsd
