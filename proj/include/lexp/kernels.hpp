#pragma once

#include <span>
#include <string_view>

// Data-parallel inner loops used by the sparse and dense products. Each kernel
// has a portable scalar reference and an AVX2 variant; the variant is picked
// once at runtime from CPUID. Setting LEXP_KERNELS=scalar in the environment
// (or calling set_kernel_isa) forces the reference path.
namespace lexp::kernels {

enum class Isa { scalar, avx2 };

using DotFn = double (*)(std::span<const double>, std::span<const double>);
// y += alpha * x
using AxpyFn = void (*)(double alpha, std::span<const double> x, std::span<double> y);
// y = alpha * y
using ScaleFn = void (*)(double alpha, std::span<double> y);
// y = max(x, slope * x) elementwise; slope 0 is ReLU.
using LeakyReluFn = void (*)(double slope, std::span<const double> x, std::span<double> y);

struct KernelTable {
  Isa isa;
  DotFn dot;
  AxpyFn axpy;
  ScaleFn scale;
  LeakyReluFn leaky_relu;
};

double dot_scalar(std::span<const double> a, std::span<const double> b);
void axpy_scalar(double alpha, std::span<const double> x, std::span<double> y);
void scale_scalar(double alpha, std::span<double> y);
void leaky_relu_scalar(double slope, std::span<const double> x, std::span<double> y);

#if defined(__x86_64__) || defined(_M_X64)
double dot_avx2(std::span<const double> a, std::span<const double> b);
void axpy_avx2(double alpha, std::span<const double> x, std::span<double> y);
void scale_avx2(double alpha, std::span<double> y);
void leaky_relu_avx2(double slope, std::span<const double> x, std::span<double> y);
#endif

bool cpu_has_avx2();

// Table for the requested ISA; throws ArgumentError if the CPU lacks it.
const KernelTable& table_for(Isa isa);

// Table currently used by the library.
const KernelTable& active();

void set_kernel_isa(Isa isa);

std::string_view isa_name(Isa isa);

}  // namespace lexp::kernels
